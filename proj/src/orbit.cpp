#include "e7/orbit.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace e7 {

namespace {

inline int32_t dot2(const OrbVec& a, const OrbVec& b) {
  int32_t s = 0;
  for (int i = 0; i < 8; ++i) s += int32_t(a[i]) * b[i];
  return s;
}

// reflection in a norm-2 root, both at scale 2: B = raw/4
inline OrbVec reflect2(const OrbVec& v, const OrbVec& r) {
  int32_t raw = dot2(v, r);
  if (raw % 4 != 0) throw std::logic_error("orbit point left the lattice");
  int32_t b = raw / 4;
  OrbVec out;
  for (int i = 0; i < 8; ++i)
    out[i] = static_cast<int16_t>(v[i] - b * r[i]);
  return out;
}

inline uint64_t pack_key(const OrbVec& v) {
  uint64_t k = 0;
  for (int i = 0; i < 8; ++i) {
    int32_t c = v[i] + 31;
    if (c < 0 || c > 63) throw std::logic_error("orbit coordinate out of range");
    k = (k << 6) | uint64_t(c);
  }
  return k;
}

struct Candidate {
  OrbVec vec;
  uint32_t parent;
  uint8_t gen;
};

}  // namespace

OrbVec to_orbvec(const Weight& w) {
  OrbVec v;
  for (int i = 0; i < 8; ++i) {
    Rat s = w.c[i] * 2;
    if (s.get_den() != 1)
      throw std::domain_error("weight not in the scale-2 lattice");
    long x = s.get_num().get_si();
    if (x < -31 || x > 32) throw std::domain_error("orbit seed out of range");
    v[i] = static_cast<int16_t>(x);
  }
  return v;
}

Weight from_orbvec(const OrbVec& v) {
  Weight w;
  for (int i = 0; i < 8; ++i) w.c[i] = rat(v[i], 2);
  return w;
}

Orbit orbit_walk(const std::vector<OrbVec>& gens, const OrbVec& seed,
                 Exec exec) {
  Orbit o;
  std::unordered_set<uint64_t> seen;
  seen.reserve(1 << 22);
  o.points.push_back(seed);
  o.parent.push_back(0);
  o.gen.push_back(0);
  seen.insert(pack_key(seed));

  size_t level_begin = 0;
  while (level_begin < o.points.size()) {
    size_t level_end = o.points.size();
    std::vector<Candidate> cands;

    if (exec == Exec::openmp) {
#ifdef _OPENMP
      int nt = omp_get_max_threads();
#else
      int nt = 1;
#endif
      std::vector<std::vector<Candidate>> local(nt);
#pragma omp parallel for schedule(static)
      for (size_t idx = level_begin; idx < level_end; ++idx) {
#ifdef _OPENMP
        auto& buf = local[omp_get_thread_num()];
#else
        auto& buf = local[0];
#endif
        for (size_t g = 0; g < gens.size(); ++g) {
          OrbVec n = reflect2(o.points[idx], gens[g]);
          if (n != o.points[idx])
            buf.push_back({n, static_cast<uint32_t>(idx),
                           static_cast<uint8_t>(g)});
        }
      }
      for (auto& buf : local)
        cands.insert(cands.end(), buf.begin(), buf.end());
    } else {
      for (size_t idx = level_begin; idx < level_end; ++idx)
        for (size_t g = 0; g < gens.size(); ++g) {
          OrbVec n = reflect2(o.points[idx], gens[g]);
          if (n != o.points[idx])
            cands.push_back({n, static_cast<uint32_t>(idx),
                             static_cast<uint8_t>(g)});
        }
    }

    for (const auto& c : cands) {
      if (seen.insert(pack_key(c.vec)).second) {
        o.points.push_back(c.vec);
        o.parent.push_back(c.parent);
        o.gen.push_back(c.gen);
      }
    }
    level_begin = level_end;
  }
  return o;
}

std::vector<uint8_t> orbit_word(const Orbit& o, uint32_t i) {
  // parent chain gives letters last-applied-first; reverse to application order
  std::vector<uint8_t> w;
  while (i != 0) {
    w.push_back(o.gen[i]);
    i = o.parent[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

namespace {

OrbVec apply_word(const std::vector<OrbVec>& gens,
                  const std::vector<uint8_t>& word, OrbVec v) {
  // word in application order
  for (uint8_t g : word) v = reflect2(v, gens[g]);
  return v;
}

}  // namespace

std::vector<std::vector<uint8_t>> involution_scan(
    const Orbit& orbit, const std::vector<OrbVec>& gens, Exec exec) {
  const OrbVec seed = orbit.points[0];
  const size_t n = orbit.points.size();
  std::vector<uint8_t> hit(n, 0);

  auto test = [&](size_t i) {
    if (i == 0) return;  // identity has order one
    std::vector<uint8_t> w = orbit_word(orbit, static_cast<uint32_t>(i));
    if (apply_word(gens, w, orbit.points[i]) == seed) hit[i] = 1;
  };

  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic, 4096)
    for (size_t i = 0; i < n; ++i) test(i);
  } else {
    for (size_t i = 0; i < n; ++i) test(i);
  }

  std::vector<std::vector<uint8_t>> res;
  for (size_t i = 0; i < n; ++i)
    if (hit[i]) res.push_back(orbit_word(orbit, static_cast<uint32_t>(i)));
  return res;
}

}  // namespace e7
