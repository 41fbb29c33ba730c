#include "e7/enumeration.hpp"

#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace e7 {

std::string InfChar::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 7; ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  os << ']';
  return os.str();
}

namespace {

constexpr char kInvMagic[8] = {'E', '7', 'I', 'N', 'V', 'O', 'L', '1'};

std::vector<std::vector<uint8_t>> load_involution_words(const std::string& path,
                                                        uint64_t hash) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("no involution cache");
  auto close = [](std::FILE* fp) { std::fclose(fp); };
  std::unique_ptr<std::FILE, decltype(close)> guard(f, close);
  char magic[8];
  unsigned char buf[8];
  if (std::fread(magic, 1, 8, f) != 8 ||
      !std::equal(magic, magic + 8, kInvMagic))
    throw std::runtime_error("bad involution cache");
  if (std::fread(buf, 1, 8, f) != 8) throw std::runtime_error("truncated");
  uint64_t h = 0;
  for (int i = 0; i < 8; ++i) h |= uint64_t(buf[i]) << (8 * i);
  if (h != hash) throw std::runtime_error("involution cache hash mismatch");
  if (std::fread(buf, 1, 8, f) != 8) throw std::runtime_error("truncated");
  uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= uint64_t(buf[i]) << (8 * i);
  std::vector<std::vector<uint8_t>> words(n);
  for (auto& w : words) {
    unsigned char len;
    if (std::fread(&len, 1, 1, f) != 1) throw std::runtime_error("truncated");
    w.resize(len);
    if (len && std::fread(w.data(), 1, len, f) != len)
      throw std::runtime_error("truncated");
  }
  return words;
}

void save_involution_words(const std::string& path, uint64_t hash,
                           const std::vector<std::vector<uint8_t>>& words) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return;
  std::fwrite(kInvMagic, 1, 8, f);
  for (uint64_t x : {hash, uint64_t(words.size())}) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (x >> (8 * i)) & 0xff;
    std::fwrite(b, 1, 8, f);
  }
  for (const auto& w : words) {
    unsigned char len = static_cast<unsigned char>(w.size());
    std::fwrite(&len, 1, 1, f);
    std::fwrite(w.data(), 1, w.size(), f);
  }
  std::fclose(f);
}

}  // namespace

InvolutionStore::InvolutionStore(std::shared_ptr<const ChamberData> cd,
                                 std::string cache_dir, Exec exec) {
  uint64_t hash = datum_content_hash(cd->datum);
  std::vector<std::vector<uint8_t>> words;
  std::string path;
  if (!cache_dir.empty()) {
    path = (std::filesystem::path(cache_dir) / "involutions.bin").string();
    try {
      words = load_involution_words(path, hash);
    } catch (const std::exception&) {
      words.clear();
    }
  }
  if (words.empty()) {
    std::vector<OrbVec> gens;
    for (const auto& a : cd->datum.simple_roots) gens.push_back(to_orbvec(a));
    Orbit orb = orbit_walk(gens, to_orbvec(cd->datum.rho), exec);
    words = involution_scan(orb, gens, exec);
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(cache_dir, ec);
      save_involution_words(path, hash, words);
    }
  }
  for (const auto& w : words) {
    GroupElement g = GroupElement::identity();
    g.word.clear();
    // word in application order: element = s_{w.back()} * ... * s_{w[0]}
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      g = g * cd->datum.simple_reflections[*it];
    if (!(g * g).is_identity() || g.is_identity())
      throw std::logic_error("involution scan produced a non-involution");
    elements_.push_back(std::move(g));
  }
}

bool hp_admissible(const InfChar& l) {
  const auto& c = l.coeffs;
  for (int x : c)
    if (x < 0) return false;
  return c[0] + c[2] > 0 && c[1] + c[3] > 0 && c[2] + c[3] > 0 &&
         c[3] + c[4] > 0 && c[4] + c[5] > 0 && c[5] + c[6] > 0 &&
         c[1] + c[4] + c[6] > 0;
}

bool dominant_conjugate_vanishing_check(const ChamberData& cd,
                                        const InfChar& lambda) {
  Lat8 v{};
  for (int i = 0; i < 7; ++i) {
    if (lambda.coeffs[i] < 0)
      throw std::domain_error("vanishing check needs nonnegative integers");
    for (int j = 0; j < 8; ++j)
      v.v[j] += lambda.coeffs[i] * to_lat(cd.datum.fundamental_weights[i]).v[j];
  }
  for (const auto& ch : cd.chambers) {
    Lat8 img = ch.w.apply(v);
    bool all_ge1 = true;
    for (int i = 0; i < 7 && all_ge1; ++i)
      if (dot_int(img, cd.compact.gamma_lat[i]) < 1) all_ge1 = false;
    if (all_ge1) return true;
  }
  return false;
}

Rat inf_char_norm_sq(const ChamberData& cd, const InfChar& lambda) {
  Rat s = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      s += Rat(lambda.coeffs[i]) * Rat(lambda.coeffs[j]) *
           cd.datum.zeta_gram[i][j];
  return s;
}

namespace {

// theta-filter slow path: scan the involution list for one that keeps nu
// within the bound
bool nu_filter_scan(const std::array<int, 7>& c, const SieveConfig& cfg,
                    const ChamberData& cd) {
  if (!cfg.involutions) return false;
  Weight l;
  for (int i = 0; i < 7; ++i)
    l += cd.datum.fundamental_weights[i] * Rat(c[i]);
  for (const auto& th : cfg.involutions->elements()) {
    Weight nu = (l - th.apply(l)) * rat(1, 2);
    if (norm_sq(nu) <= cfg.nu_bound_sq) return true;
  }
  return false;
}

}  // namespace

PhiResult enumerate_phi(const ChamberData& cd, const SieveConfig& config,
                        int64_t keep_lists_up_to, Exec exec) {
  PhiResult res;
  const int M = config.max_coeff;
  if (M < 1 || M > 14)
    throw std::domain_error("phi sweep expects max_coeff in 1..14");
  if (!config.integer_only)
    throw std::domain_error("phi sweep is defined over integral characters");

  // fast path for the theta-filter: theta = s_{alpha_i} projects Lambda onto
  // alpha_i, so |nu|^2 = c_i^2/2; precompute the largest coefficient that
  // passes on its own
  int fast_cap = -1;
  while (Rat(fast_cap + 1) * Rat(fast_cap + 1) <= 2 * config.nu_bound_sq)
    ++fast_cap;

  auto run_slice = [&](int a0, PhiResult& acc) {
    std::array<int, 7> c{};
    c[0] = a0;
    for (c[1] = 0; c[1] <= M; ++c[1])
      for (c[2] = 0; c[2] <= M; ++c[2]) {
        if (c[0] + c[2] == 0) continue;
        for (c[3] = 0; c[3] <= M; ++c[3]) {
          if (c[1] + c[3] == 0 || c[2] + c[3] == 0) continue;
          for (c[4] = 0; c[4] <= M; ++c[4]) {
            if (c[3] + c[4] == 0) continue;
            for (c[5] = 0; c[5] <= M; ++c[5]) {
              if (c[4] + c[5] == 0) continue;
              for (c[6] = 0; c[6] <= M; ++c[6]) {
                if (c[5] + c[6] == 0 || c[1] + c[4] + c[6] == 0) continue;
                int mn = c[0], mx = c[0];
                for (int i = 1; i < 7; ++i) {
                  mn = std::min(mn, c[i]);
                  mx = std::max(mx, c[i]);
                }
                if (mn != 0) continue;
                bool pass = false;
                for (int i = 0; i < 7 && !pass; ++i)
                  if (c[i] <= fast_cap) pass = true;
                if (!pass) pass = nu_filter_scan(c, config, cd);
                if (!pass) continue;
                acc.counts[mx]++;
                acc.total++;
                if (static_cast<int64_t>(acc.lists[mx].size()) <
                    keep_lists_up_to)
                  acc.lists[mx].push_back(InfChar{c});
              }
            }
          }
        }
      }
  };

  if (exec == Exec::openmp) {
    std::vector<PhiResult> parts(M + 1);
#pragma omp parallel for schedule(dynamic)
    for (int a0 = 0; a0 <= M; ++a0) run_slice(a0, parts[a0]);
    for (const auto& p : parts) {
      for (int i = 1; i <= 14; ++i) {
        res.counts[i] += p.counts[i];
        for (const auto& l : p.lists[i])
          if (static_cast<int64_t>(res.lists[i].size()) < keep_lists_up_to)
            res.lists[i].push_back(l);
      }
      res.total += p.total;
    }
  } else {
    for (int a0 = 0; a0 <= M; ++a0) run_slice(a0, res);
  }
  for (int i = 1; i <= 14; ++i)
    std::sort(res.lists[i].begin(), res.lists[i].end());
  return res;
}

std::vector<InfChar> enumerate_omega(const ChamberData& cd, Exec exec) {
  const Rat lo = 84, hi = 140;
  // coefficient bound from the diagonal of the Gram matrix: all entries of
  // the Gram are positive so partial norms only grow
  std::array<int, 7> box;
  for (int i = 0; i < 7; ++i) {
    int b = 0;
    while (Rat((b + 1)) * Rat((b + 1)) * cd.datum.zeta_gram[i][i] <= hi) ++b;
    box[i] = b;
  }

  auto run_slice = [&](int a0, std::vector<InfChar>& out) {
    std::array<int, 7> c{};
    c[0] = a0;
    std::function<void(int)> rec = [&](int d) {
      Rat partial = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          partial += Rat(c[i]) * Rat(c[j]) * cd.datum.zeta_gram[i][j];
      if (partial > hi) return;
      if (d == 7) {
        if (partial >= lo) out.push_back(InfChar{c});
        return;
      }
      for (int a = 0; a <= box[d]; ++a) {
        c[d] = a;
        rec(d + 1);
      }
      c[d] = 0;
    };
    rec(1);
  };

  std::vector<InfChar> res;
  if (exec == Exec::openmp) {
    std::vector<std::vector<InfChar>> parts(box[0] + 1);
#pragma omp parallel for schedule(dynamic)
    for (int a0 = 0; a0 <= box[0]; ++a0) run_slice(a0, parts[a0]);
    for (auto& p : parts) res.insert(res.end(), p.begin(), p.end());
  } else {
    for (int a0 = 0; a0 <= box[0]; ++a0) run_slice(a0, res);
  }
  std::sort(res.begin(), res.end());
  return res;
}

}  // namespace e7
