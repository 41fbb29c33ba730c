#pragma once

#include <gmpxx.h>
#include <string>

namespace e7 {

// All arithmetic in this library is exact. Norms are kept squared so no
// radicals are ever taken.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "p/q" or decimal-free signed integers. Throws on garbage.
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& r);

}  // namespace e7
