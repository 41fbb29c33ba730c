#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "e7/weight.hpp"

namespace e7 {

// An element of W(E7) acting on the 8-dimensional frame. The matrix is
// orthogonal, stabilizes e7+e8, and its entries lie in (1/4)Z; it is stored
// as 4 times itself. `word` is a sequence of 0-based simple reflection
// indices, leftmost letter applied last.
struct GroupElement {
  std::array<int32_t, 64> m4{};
  std::vector<uint8_t> word;

  static GroupElement identity();
  bool is_identity() const;

  // composition: (a*b)(v) = a(b(v))
  GroupElement operator*(const GroupElement& o) const;
  // orthogonal, so the inverse is the transpose
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const { return m4 == o.m4; }

  Weight apply(const Weight& v) const;
  Lat8 apply(const Lat8& v) const;

  size_t length() const { return word.size(); }
};

struct RootDatum {
  std::array<Weight, 7> simple_roots;        // alpha_1..alpha_7
  std::vector<Weight> positive_roots;        // 63
  std::vector<Weight> all_roots;             // 126
  std::array<Weight, 7> fundamental_weights; // zeta_1..zeta_7
  Weight rho;
  Weight highest_root;                       // gamma_7 = (0,...,0,-1,1)
  Mat cartan;                                // 7x7, from the simple roots
  Mat zeta_gram;                             // B(zeta_i, zeta_j) = cartan^-1

  std::array<GroupElement, 7> simple_reflections;

  // scaled copies for the hot kernels
  std::array<Lat8, 7> simple_roots_lat;
  Lat8 rho_lat;

  // coordinates of v in the zeta basis: (B(v, alpha_i))_i
  std::array<Rat, 7> zeta_coords(const Weight& v) const;
  Weight from_zeta(const std::array<Rat, 7>& z) const;
  Rat norm_sq_zeta(const std::array<Rat, 7>& z) const;
};

// Generates the full E7 datum from the seven simple roots of the Vogan
// diagram. Throws if the reflection closure does not reach exactly 126 roots.
RootDatum build_root_datum();

// B(u, v); the form is the standard coordinate pairing.
inline Rat bilinear_form(const Weight& u, const Weight& v) { return dot(u, v); }

struct DominantResult {
  Weight dominant;
  GroupElement element;  // element.apply(v) == dominant
};

// The unique dominant conjugate of v under the group generated by reflections
// in `system` (a simple system of a subsystem). Ties are resolved by always
// reflecting at the lowest-index simple root with a negative pairing, so the
// word is reproducible.
DominantResult dominant_conjugate(const Weight& v,
                                  const std::vector<Weight>& system);

// Vector-only variant on the fast lattice.
Lat8 dominant_conjugate_vec(const Lat8& v, const std::vector<Lat8>& system);
// Also records the reflection word (application order: word[0] first).
Lat8 dominant_conjugate_vec(const Lat8& v, const std::vector<Lat8>& system,
                            std::vector<uint8_t>* word_out);

// Weyl dimension formula over the given positive system, as an exact integer.
// Throws if the product fails to be a positive integer.
Int weyl_dimension(const Weight& hw, const std::vector<Weight>& positive_system);

// Coxeter length as inversion count over `positive` (independent of word).
int inversion_length(const GroupElement& g, const std::vector<Weight>& positive);

}  // namespace e7
