#include "e7/usmall.hpp"

#include <algorithm>
#include <stdexcept>

#include "e7/simplex.hpp"

namespace e7 {

CertCache::CertCache() { entries_.resize(kCapacity); }

void CertCache::push(const Entry& e) {
  std::lock_guard<std::mutex> lock(mu_);
  size_t n = count_.load(std::memory_order_relaxed);
  if (n >= kCapacity) return;  // cache full: queries fall back to the LP
  entries_[n] = e;
  count_.store(n + 1, std::memory_order_release);
}

HullOracle::HullOracle(std::shared_ptr<const ChamberData> cd)
    : cd_(std::move(cd)) {
  hull_radius_raw_ = 0;
  for (const auto& ch : cd_->chambers) {
    Weight g = ch.rho_n_j + ch.rho_n_j;
    gens_dom_.push_back(g);
    gens_lat_.push_back(ch.two_rho_n_lat);
    hull_radius_raw_ =
        std::max(hull_radius_raw_, dot_raw(ch.two_rho_n_lat, ch.two_rho_n_lat));
  }
}

HullOracle::Priced HullOracle::price(const Weight& c) const {
  std::vector<Weight> gsys(cd_->compact.gamma.begin(),
                           cd_->compact.gamma.end());
  DominantResult dr = dominant_conjugate(c, gsys);
  Rat best;
  int best_j = -1;
  for (size_t j = 0; j < gens_dom_.size(); ++j) {
    Rat v = dot(gens_dom_[j], dr.dominant);
    if (best_j < 0 || v > best) {
      best = v;
      best_j = static_cast<int>(j);
    }
  }
  // max_w B(w g, c) = B(g, {c}) at w = u^-1 with u c = {c}
  Weight argmax = dr.element.inverse().apply(gens_dom_[best_j]);
  return {best, argmax};
}

Rat HullOracle::support(const Weight& c) const { return price(c).h; }

bool HullOracle::rejected_by_cache(const Lat8& v) const {
  size_t n = cache_.size();
  for (size_t k = n; k-- > 0;) {
    const auto& e = cache_[k];
    __int128 raw = 0;
    for (int i = 0; i < 8; ++i)
      raw += static_cast<__int128>(v.v[i]) * e.dir[i];
    // B(v, dir) = raw / LAT_SCALE; reject iff B > thr
    if (raw * e.thr_den > static_cast<__int128>(e.thr_num) * LAT_SCALE)
      return true;
  }
  return false;
}

void HullOracle::cache_separator(const Weight& c, const Rat& h) const {
  Int den = 1;
  for (int i = 0; i < 8; ++i) den = lcm(den, c.c[i].get_den());
  CertCache::Entry e;
  for (int i = 0; i < 8; ++i) {
    Rat s = c.c[i] * Rat(den);
    if (!s.get_num().fits_slong_p()) return;  // too big to cache
    e.dir[i] = s.get_num().get_si();
    if (std::abs(e.dir[i]) > (int64_t(1) << 40)) return;
  }
  Rat thr = h * Rat(den);
  if (!thr.get_num().fits_slong_p() || !thr.get_den().fits_slong_p()) return;
  e.thr_num = thr.get_num().get_si();
  e.thr_den = thr.get_den().get_si();
  cache_.push(e);
}

HullMembership HullOracle::membership(const Weight& v) const {
  if (!v.in_subspace())
    throw std::domain_error("membership query outside the weight space");

  // rows: coordinates 0..6 (coordinate 7 is implied by the subspace), then
  // the convexity row
  std::vector<Rat> b(8);
  for (int i = 0; i < 7; ++i) b[i] = v.c[i];
  b[7] = 1;

  std::vector<Weight> columns;
  FeasibilityLP lp(b);
  auto oracle = [&](const std::vector<Rat>& y) -> FeasibilityLP::PricedColumn {
    Weight c;
    for (int i = 0; i < 7; ++i) c.c[i] = y[i];
    c.c[7] = 0;
    Priced pr = price(c);
    if (pr.h + y[7] <= 0) return {};  // no improving orbit point
    FeasibilityLP::PricedColumn pc;
    pc.column.resize(8);
    for (int i = 0; i < 7; ++i) pc.column[i] = pr.argmax.c[i];
    pc.column[7] = 1;
    pc.payload = static_cast<int>(columns.size());
    columns.push_back(pr.argmax);
    return pc;
  };

  FeasibilityLP::Result r = lp.solve(oracle);
  HullMembership hm;
  if (r.feasible) {
    hm.inside = true;
    Weight recon;
    Rat total = 0;
    for (const auto& [payload, wt] : r.solution) {
      hm.combination.push_back({columns[payload], wt});
      recon += columns[payload] * wt;
      total += wt;
    }
    if (!(recon == v) || total != 1)
      throw std::logic_error("membership certificate failed to reproduce v");
  } else {
    Weight c;
    for (int i = 0; i < 7; ++i) c.c[i] = r.duals[i];
    c.c[7] = 0;
    Rat h = support(c);
    if (!(dot(v, c) > h))
      throw std::logic_error("separator does not separate");
    hm.inside = false;
    hm.separator = c;
    hm.separator_value = h;
    cache_separator(c, h);
  }
  return hm;
}

bool HullOracle::is_usmall(const KType& mu) const {
  return membership(ktype_to_vector(cd_->compact, mu)).inside;
}

std::array<int, 7> HullOracle::census_box() const {
  std::array<int, 7> box;
  for (int i = 0; i < 7; ++i) {
    Rat h = support(cd_->compact.gamma[i]);
    Int fl = h.get_num() / h.get_den();
    box[i] = static_cast<int>(fl.get_si());
  }
  return box;
}

namespace {

// recursively extend coordinates d..6; nonnegative Gram keeps the partial
// norm monotone, so overshooting the hull radius prunes the whole subtree
void sweep(const CompactDatum& k, const std::array<int, 7>& box,
           int64_t radius_raw, int d, std::array<int, 7>& coeffs,
           const Lat8& partial, std::vector<KType>& out) {
  if (dot_raw(partial, partial) > radius_raw) return;
  if (d == 7) {
    if ((coeffs[0] + coeffs[2] + coeffs[5] + coeffs[6]) % 2 == 0)
      out.push_back(KType{coeffs});
    return;
  }
  Lat8 cur = partial;
  for (int a = 0; a <= box[d]; ++a) {
    coeffs[d] = a;
    if (a > 0)
      for (int i = 0; i < 8; ++i) cur.v[i] += k.varpi_lat[d].v[i];
    sweep(k, box, radius_raw, d + 1, coeffs, cur, out);
    if (dot_raw(cur, cur) > radius_raw) break;
  }
  coeffs[d] = 0;
}

}  // namespace

std::vector<KType> HullOracle::count_usmall_ktypes(Exec exec) const {
  // candidates first (cheap), then the membership tests, so the expensive
  // part parallelizes over a flat list
  std::vector<KType> candidates;
  {
    std::array<int, 7> coeffs{};
    sweep(cd_->compact, census_box(), hull_radius_raw_, 0, coeffs, Lat8{},
          candidates);
  }

  std::vector<uint8_t> inside(candidates.size(), 0);
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 64)
    for (size_t i = 0; i < candidates.size(); ++i) {
      Lat8 v = ktype_to_lat(cd_->compact, candidates[i]);
      if (!rejected_by_cache(v))
        inside[i] = membership(to_weight(v)).inside ? 1 : 0;
    }
  } else {
    for (size_t i = 0; i < candidates.size(); ++i) {
      Lat8 v = ktype_to_lat(cd_->compact, candidates[i]);
      if (!rejected_by_cache(v))
        inside[i] = membership(to_weight(v)).inside ? 1 : 0;
    }
  }

  std::vector<KType> res;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (inside[i]) res.push_back(candidates[i]);
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<KType> certs(const NormEngine& norms,
                         const std::vector<KType>& usmall, Exec exec) {
  const Rat threshold = rat(165, 2);
  std::vector<uint8_t> keep(usmall.size(), 0);
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 16)
    for (size_t i = 0; i < usmall.size(); ++i)
      keep[i] = norms.spin_lambda_gap(usmall[i]) >= threshold ? 1 : 0;
  } else {
    for (size_t i = 0; i < usmall.size(); ++i)
      keep[i] = norms.spin_lambda_gap(usmall[i]) >= threshold ? 1 : 0;
  }
  std::vector<KType> res;
  for (size_t i = 0; i < usmall.size(); ++i)
    if (keep[i]) res.push_back(usmall[i]);
  return res;
}

}  // namespace e7
