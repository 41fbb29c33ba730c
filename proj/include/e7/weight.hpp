#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "e7/rational.hpp"

namespace e7 {

// A point of the 7-dimensional weight space, realized as an 8-tuple of exact
// rationals orthogonal to e7+e8 (the classical coordinates for E7 inside the
// E8 frame). The invariant form B is the standard coordinate pairing.
struct Weight {
  std::array<Rat, 8> c{};

  Rat& operator[](int i) { return c[i]; }
  const Rat& operator[](int i) const { return c[i]; }

  bool operator==(const Weight& o) const { return c == o.c; }

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(const Rat& s) const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);

  bool is_zero() const;
  // coords must pair to zero with e7+e8
  bool in_subspace() const { return c[6] + c[7] == 0; }

  std::string str() const;
};

// The invariant symmetric bilinear form B.
Rat dot(const Weight& a, const Weight& b);
inline Rat norm_sq(const Weight& a) { return dot(a, a); }

// Reflection in a norm-2 root: v - B(v, alpha) alpha.
Weight reflect(const Weight& v, const Weight& alpha);

std::ostream& operator<<(std::ostream& os, const Weight& w);

// ---------------------------------------------------------------------------
// Fast lattice layer. Every weight that the hot kernels touch lies in the
// common lattice (1/LAT_SCALE) Z^8; vectors are stored as their coordinates
// times LAT_SCALE. Conversions assert integrality, so a wrong-lattice input
// aborts instead of corrupting results.
// ---------------------------------------------------------------------------

constexpr int64_t LAT_SCALE = 8;

struct Lat8 {
  std::array<int64_t, 8> v{};

  bool operator==(const Lat8& o) const { return v == o.v; }
  int64_t& operator[](int i) { return v[i]; }
  int64_t operator[](int i) const { return v[i]; }

  Lat8 operator+(const Lat8& o) const {
    Lat8 r;
    for (int i = 0; i < 8; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  Lat8 operator-(const Lat8& o) const {
    Lat8 r;
    for (int i = 0; i < 8; ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
};

// raw scaled dot: LAT_SCALE^2 times the true pairing
inline int64_t dot_raw(const Lat8& a, const Lat8& b) {
  int64_t s = 0;
  for (int i = 0; i < 8; ++i) s += a.v[i] * b.v[i];
  return s;
}

// true pairing B(a, b); asserts the value is an integer
int64_t dot_int(const Lat8& a, const Lat8& b);

// norm squared as exact rational (raw/LAT_SCALE^2)
Rat norm_sq_rat(const Lat8& a);

// reflection in a norm-2 root held at the same scale
Lat8 reflect(const Lat8& v, const Lat8& root);

Lat8 to_lat(const Weight& w);      // throws if w is not in the scale-8 lattice
Weight to_weight(const Lat8& v);

// ---------------------------------------------------------------------------
// Small exact linear algebra used for fundamental weights, cone projections
// and range classification.
// ---------------------------------------------------------------------------

using Mat = std::vector<std::vector<Rat>>;

Mat mat_identity(int n);
// Gauss-Jordan; throws on singular input.
Mat mat_inverse(const Mat& m);
std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& x);
// Solves m x = rhs; throws on singular input.
std::vector<Rat> mat_solve(const Mat& m, const std::vector<Rat>& rhs);

}  // namespace e7
