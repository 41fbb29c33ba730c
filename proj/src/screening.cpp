#include "e7/screening.hpp"

#include <stdexcept>

namespace e7 {

namespace {

// is (sqrt(a) - sqrt(b))^2 > c for nonnegative rationals a, b, c with a >= b?
// Equivalent to a + b - c > 2 sqrt(ab): both sides nonnegative is required
// before squaring.
bool gap_exceeds(const Rat& a, const Rat& b, const Rat& c) {
  Rat lhs = a + b - c;
  if (lhs <= 0) return false;
  return lhs * lhs > 4 * a * b;
}

}  // namespace

PencilReport pencil_min_spin(const NormEngine& norms, const KType& delta) {
  const ChamberData& cd = norms.data();
  Lat8 base = ktype_to_lat(cd.compact, delta);
  const Lat8& beta = cd.compact.beta_lat;
  const Rat max_rho_n_sq = cd.max_rho_n_sq;

  PencilReport rep;
  Lat8 cur = base;
  for (int n = 0;; ++n) {
    Rat val = norms.spin_norm_sq_value(cur);
    rep.per_n.push_back({n, val});
    if (n == 0 || val < rep.min_value_sq) rep.min_value_sq = val;
    rep.terminated_at = n;
    // lower bound for every later member of the pencil: the norm grows
    // strictly, so once |mu| >= max|rho_n| and (|mu| - max|rho_n|)^2 > min
    // we are done
    Rat mu_sq = norm_sq_rat(cur);
    if (mu_sq >= max_rho_n_sq &&
        gap_exceeds(mu_sq, max_rho_n_sq, rep.min_value_sq))
      break;
    for (int i = 0; i < 8; ++i) cur.v[i] += beta.v[i];
    if (n > 10000) throw std::logic_error("pencil failed to terminate");
  }
  for (const auto& [n, v] : rep.per_n)
    if (v == rep.min_value_sq) rep.attaining_n.insert(n);
  return rep;
}

ScreenVerdict dirac_screen(const NormEngine& norms, const KType& delta,
                           const Rat& lambda_sq) {
  PencilReport rep = pencil_min_spin(norms, delta);
  ScreenVerdict v;
  if (rep.min_value_sq < lambda_sq) {
    v.verdict = Verdict::NonUnitary;
    v.witness_n = *rep.attaining_n.begin();
  } else {
    v.verdict = Verdict::Inconclusive;
  }
  return v;
}

bool hj_filter(const Rat& nu_sq, const Rat& threshold_sq) {
  return nu_sq <= threshold_sq;
}

Weight nu_from_involution(const Weight& lambda, const GroupElement& theta) {
  if (!(theta * theta).is_identity())
    throw std::domain_error("theta is not an involution");
  return (lambda - theta.apply(lambda)) * rat(1, 2);
}

ParabolicData build_parabolic(const ChamberData& cd, const Weight& H) {
  if (!cd.compact.is_k_dominant(H))
    throw std::domain_error("parabolic-defining H must be k-dominant");
  ParabolicData q;
  q.defining_H = H;
  for (const auto& a : cd.datum.all_roots) {
    Rat p = dot(H, a);
    if (p == 0)
      q.levi_roots.push_back(a);
    else if (p > 0)
      q.nilrad_roots.push_back(a);
  }
  q.rho_u = Weight{};
  for (const auto& a : q.nilrad_roots) q.rho_u += a * rat(1, 2);
  return q;
}

namespace {

// orthogonal projection onto the span of the Levi roots
Weight project_to_span(const std::vector<Weight>& span_roots, const Weight& v) {
  // pick a maximal independent subset by Gram elimination
  std::vector<Weight> basis;
  for (const auto& r : span_roots) {
    std::vector<Weight> trial = basis;
    trial.push_back(r);
    Mat g(trial.size(), std::vector<Rat>(trial.size()));
    for (size_t i = 0; i < trial.size(); ++i)
      for (size_t j = 0; j < trial.size(); ++j) g[i][j] = dot(trial[i], trial[j]);
    try {
      mat_inverse(g);
      basis = trial;
    } catch (const std::domain_error&) {
      // dependent, skip
    }
  }
  if (basis.empty()) return Weight{};
  Mat g(basis.size(), std::vector<Rat>(basis.size()));
  std::vector<Rat> rhs(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    rhs[i] = dot(v, basis[i]);
    for (size_t j = 0; j < basis.size(); ++j) g[i][j] = dot(basis[i], basis[j]);
  }
  std::vector<Rat> coef = mat_solve(g, rhs);
  Weight p;
  for (size_t i = 0; i < basis.size(); ++i) p += basis[i] * coef[i];
  return p;
}

}  // namespace

Range classify_range(const ChamberData& cd, const Weight& lambda_z,
                     const ParabolicData& q) {
  (void)cd;
  Weight shifted = lambda_z + q.rho_u;
  bool good = true, weakly_good = true;
  for (const auto& a : q.nilrad_roots) {
    Rat p = dot(shifted, a);
    if (p <= 0) good = false;
    if (p < 0) weakly_good = false;
    if (!good && !weakly_good) break;
  }
  if (good) return Range::Good;
  if (weakly_good) return Range::WeaklyGood;

  // fair range: pair against the restriction of alpha to the center of l,
  // realized as alpha minus its projection onto span Delta(l)
  bool fair = true, weakly_fair = true;
  for (const auto& a : q.nilrad_roots) {
    Weight az = a - project_to_span(q.levi_roots, a);
    Rat p = dot(shifted, az);
    if (p <= 0) fair = false;
    if (p < 0) weakly_fair = false;
    if (!fair && !weakly_fair) break;
  }
  if (fair) return Range::Fair;
  if (weakly_fair) return Range::WeaklyFair;
  return Range::None;
}

const char* range_name(Range r) {
  switch (r) {
    case Range::Good: return "Good";
    case Range::WeaklyGood: return "WeaklyGood";
    case Range::Fair: return "Fair";
    case Range::WeaklyFair: return "WeaklyFair";
    default: return "None";
  }
}

bool strongly_regular(const Weight& lambda,
                      const std::vector<Weight>& positive_system) {
  Weight rho_sys;
  for (const auto& a : positive_system) rho_sys += a * rat(1, 2);
  Weight d = lambda - rho_sys;
  for (const auto& a : positive_system)
    if (dot(d, a) < 0) return false;
  return true;
}

}  // namespace e7
