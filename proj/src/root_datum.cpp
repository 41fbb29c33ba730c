#include "e7/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace e7 {

GroupElement GroupElement::identity() {
  GroupElement g;
  for (int i = 0; i < 8; ++i) g.m4[i * 8 + i] = 4;
  return g;
}

bool GroupElement::is_identity() const {
  return m4 == identity().m4;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 8; ++k)
        s += int64_t(m4[i * 8 + k]) * o.m4[k * 8 + j];
      if (s % 4 != 0) throw std::logic_error("group element left (1/4)Z");
      r.m4[i * 8 + j] = static_cast<int32_t>(s / 4);
    }
  r.word = word;
  r.word.insert(r.word.end(), o.word.begin(), o.word.end());
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r.m4[i * 8 + j] = m4[j * 8 + i];
  r.word.assign(word.rbegin(), word.rend());
  return r;
}

Weight GroupElement::apply(const Weight& v) const {
  Weight r;
  for (int i = 0; i < 8; ++i) {
    Rat s = 0;
    for (int j = 0; j < 8; ++j)
      if (m4[i * 8 + j] != 0) s += v.c[j] * rat(m4[i * 8 + j], 4);
    r.c[i] = s;
  }
  return r;
}

Lat8 GroupElement::apply(const Lat8& v) const {
  Lat8 r;
  for (int i = 0; i < 8; ++i) {
    int64_t s = 0;
    for (int j = 0; j < 8; ++j) s += int64_t(m4[i * 8 + j]) * v.v[j];
    if (s % 4 != 0) throw std::logic_error("lattice vector left the lattice");
    r.v[i] = s / 4;
  }
  return r;
}

namespace {

Weight half(std::initializer_list<int> num2) {
  Weight w;
  int i = 0;
  for (int x : num2) w.c[i++] = rat(x, 2);
  return w;
}

GroupElement reflection_element(const Weight& alpha, uint8_t letter) {
  // s_alpha = I - alpha alpha^T for a norm-2 root
  GroupElement g = GroupElement::identity();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Rat e = rat(g.m4[i * 8 + j], 4) - alpha.c[i] * alpha.c[j];
      Rat s = e * 4;
      if (s.get_den() != 1) throw std::logic_error("reflection not in (1/4)Z");
      g.m4[i * 8 + j] = static_cast<int32_t>(s.get_num().get_si());
    }
  g.word = {letter};
  return g;
}

struct WeightKey {
  std::array<long, 16> k;
  bool operator<(const WeightKey& o) const { return k < o.k; }
};

WeightKey key_of(const Weight& w) {
  WeightKey k{};
  for (int i = 0; i < 8; ++i) {
    k.k[2 * i] = w.c[i].get_num().get_si();
    k.k[2 * i + 1] = w.c[i].get_den().get_si();
  }
  return k;
}

}  // namespace

RootDatum build_root_datum() {
  RootDatum d;
  // Vogan diagram coordinates: alpha_1 = (1,-1,-1,-1,-1,-1,-1,1)/2,
  // alpha_2 = e1+e2, alpha_i = e_{i-1} - e_{i-2} for 3 <= i <= 7.
  d.simple_roots[0] = half({1, -1, -1, -1, -1, -1, -1, 1});
  d.simple_roots[1] = half({2, 2, 0, 0, 0, 0, 0, 0});
  for (int i = 2; i < 7; ++i) {
    Weight a;
    a.c[i - 1] = 1;
    a.c[i - 2] = -1;
    d.simple_roots[i] = a;
  }

  // reflection closure of the simple roots
  std::set<WeightKey> seen;
  std::vector<Weight> roots;
  for (const auto& a : d.simple_roots) {
    if (seen.insert(key_of(a)).second) roots.push_back(a);
  }
  for (size_t i = 0; i < roots.size(); ++i) {
    for (const auto& a : d.simple_roots) {
      Weight r = reflect(roots[i], a);
      if (seen.insert(key_of(r)).second) roots.push_back(r);
    }
  }
  if (roots.size() != 126)
    throw std::runtime_error("root closure gave " +
                             std::to_string(roots.size()) + " roots, not 126");
  d.all_roots = roots;
  for (const auto& r : roots)
    if (norm_sq(r) != 2) throw std::runtime_error("non-norm-2 root");

  // Cartan matrix and fundamental weights
  d.cartan.assign(7, std::vector<Rat>(7, Rat(0)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      d.cartan[i][j] = dot(d.simple_roots[i], d.simple_roots[j]);
  d.zeta_gram = mat_inverse(d.cartan);
  for (int i = 0; i < 7; ++i) {
    Weight z;
    for (int j = 0; j < 7; ++j) z += d.simple_roots[j] * d.zeta_gram[i][j];
    d.fundamental_weights[i] = z;
  }

  // positivity via pairing with the sum of fundamental weights (regular)
  d.rho = Weight{};
  for (const auto& z : d.fundamental_weights) d.rho += z;
  d.positive_roots.clear();
  for (const auto& r : roots) {
    Rat p = dot(d.rho, r);
    if (p == 0) throw std::runtime_error("root orthogonal to rho");
    if (p > 0) d.positive_roots.push_back(r);
  }
  if (d.positive_roots.size() != 63)
    throw std::runtime_error("positive system size != 63");

  d.highest_root = Weight{};
  d.highest_root.c[6] = -1;
  d.highest_root.c[7] = 1;
  bool found = false;
  for (const auto& r : d.positive_roots) found |= (r == d.highest_root);
  if (!found) throw std::runtime_error("highest root transcription bug");

  for (int i = 0; i < 7; ++i)
    d.simple_reflections[i] =
        reflection_element(d.simple_roots[i], static_cast<uint8_t>(i));

  for (int i = 0; i < 7; ++i) d.simple_roots_lat[i] = to_lat(d.simple_roots[i]);
  d.rho_lat = to_lat(d.rho);
  return d;
}

std::array<Rat, 7> RootDatum::zeta_coords(const Weight& v) const {
  std::array<Rat, 7> z;
  for (int i = 0; i < 7; ++i) z[i] = dot(v, simple_roots[i]);
  return z;
}

Weight RootDatum::from_zeta(const std::array<Rat, 7>& z) const {
  Weight w;
  for (int i = 0; i < 7; ++i) w += fundamental_weights[i] * z[i];
  return w;
}

Rat RootDatum::norm_sq_zeta(const std::array<Rat, 7>& z) const {
  Rat s = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) s += z[i] * z[j] * zeta_gram[i][j];
  return s;
}

DominantResult dominant_conjugate(const Weight& v,
                                  const std::vector<Weight>& system) {
  Weight cur = v;
  std::vector<uint8_t> walk;  // application order
  bool moved = true;
  size_t guard = 0;
  while (moved) {
    moved = false;
    for (size_t i = 0; i < system.size(); ++i) {
      if (dot(cur, system[i]) < 0) {
        cur = reflect(cur, system[i]);
        walk.push_back(static_cast<uint8_t>(i));
        moved = true;
        break;
      }
    }
    if (++guard > 20000)
      throw std::logic_error("dominance walk failed to terminate");
  }
  GroupElement g = GroupElement::identity();
  g.word.clear();
  for (uint8_t i : walk) g = reflection_element(system[i], i) * g;
  return {cur, g};
}

Lat8 dominant_conjugate_vec(const Lat8& v, const std::vector<Lat8>& system,
                            std::vector<uint8_t>* word_out) {
  Lat8 cur = v;
  if (word_out) word_out->clear();
  bool moved = true;
  size_t guard = 0;
  while (moved) {
    moved = false;
    for (size_t i = 0; i < system.size(); ++i) {
      if (dot_raw(cur, system[i]) < 0) {
        cur = reflect(cur, system[i]);
        if (word_out) word_out->push_back(static_cast<uint8_t>(i));
        moved = true;
        break;
      }
    }
    if (++guard > 20000)
      throw std::logic_error("dominance walk failed to terminate");
  }
  return cur;
}

Lat8 dominant_conjugate_vec(const Lat8& v, const std::vector<Lat8>& system) {
  return dominant_conjugate_vec(v, system, nullptr);
}

Int weyl_dimension(const Weight& hw,
                   const std::vector<Weight>& positive_system) {
  Weight rho_sys;
  for (const auto& a : positive_system) rho_sys += a * rat(1, 2);
  Rat prod = 1;
  Weight shifted = hw + rho_sys;
  for (const auto& a : positive_system) {
    Rat den = dot(rho_sys, a);
    if (den == 0) throw std::domain_error("degenerate positive system");
    prod *= dot(shifted, a) / den;
  }
  if (prod.get_den() != 1 || prod <= 0)
    throw std::domain_error("Weyl dimension is not a positive integer (input "
                            "not dominant integral?)");
  return prod.get_num();
}

int inversion_length(const GroupElement& g,
                     const std::vector<Weight>& positive) {
  int n = 0;
  for (const auto& a : positive) {
    Weight img = g.apply(a);
    bool neg = false;
    for (const auto& p : positive)
      if (img == -p) {
        neg = true;
        break;
      }
    if (neg) ++n;
  }
  return n;
}

}  // namespace e7
