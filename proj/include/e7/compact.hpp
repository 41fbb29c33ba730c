#pragma once

#include "e7/root_datum.hpp"

namespace e7 {

// A dominant integral weight for the compact positive system, in
// varpi-coordinates [a,b,c,d,e,f,g]. Valid K-types have a+c+f+g even.
struct KType {
  std::array<int, 7> coeffs{};

  int operator[](int i) const { return coeffs[i]; }
  bool operator==(const KType& o) const { return coeffs == o.coeffs; }
  bool operator<(const KType& o) const { return coeffs < o.coeffs; }
  std::string str() const;
};

// The compact subsystem of type D6 x A1 inside E7: simple roots gamma_i, the
// noncompact roots, and the pencil direction beta.
struct CompactDatum {
  std::array<Weight, 7> gamma;            // gamma_1..gamma_7
  std::vector<Weight> positive_k_roots;   // 31
  std::vector<Weight> k_roots;            // 62
  std::vector<Weight> noncompact_roots;   // 64
  Weight rho_c;
  std::array<Weight, 7> varpi;            // fundamental weights for gamma
  Weight beta;                            // highest weight of p
  Mat k_cartan;                           // 7x7
  Mat varpi_gram;                         // k_cartan^-1

  // scaled copies
  std::array<Lat8, 7> gamma_lat;
  std::array<Lat8, 7> varpi_lat;
  Lat8 rho_c_lat;
  Lat8 beta_lat;
  std::vector<Lat8> gamma_lat_vec;  // same as gamma_lat, as a vector

  std::array<Rat, 7> varpi_coords(const Weight& v) const;
  std::array<int64_t, 7> varpi_coords_int(const Lat8& v) const;
  bool is_k_dominant(const Weight& v) const;
  Rat norm_sq_varpi(const std::array<Rat, 7>& c) const;
};

// Builds the compact datum from the E7 datum; throws if the generated
// subsystem does not have 62 roots.
CompactDatum build_compact_datum(const RootDatum& datum);

// true iff all coefficients >= 0 and a+c+f+g is even
bool is_k_type(const std::array<int, 7>& coeffs);

Weight ktype_to_vector(const CompactDatum& k, const KType& kt);
// Throws if v does not have nonnegative integral varpi-coordinates.
KType vector_to_ktype(const CompactDatum& k, const Weight& v);

Lat8 ktype_to_lat(const CompactDatum& k, const KType& kt);

}  // namespace e7
