#pragma once

#include "e7/chambers.hpp"

namespace e7 {

// A Delta+(g)-dominant weight in zeta-coordinates, nonnegative entries.
struct InfChar {
  std::array<int, 7> coeffs{};
  bool operator==(const InfChar& o) const { return coeffs == o.coeffs; }
  bool operator<(const InfChar& o) const { return coeffs < o.coeffs; }
  std::string str() const;
};

// Every element of order exactly two in W(E7), found by scanning the group
// realized on the orbit of rho. Built once per datum and optionally cached
// on disk.
class InvolutionStore {
 public:
  InvolutionStore(std::shared_ptr<const ChamberData> cd,
                  std::string cache_dir = "", Exec exec = Exec::openmp);

  size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }

 private:
  std::vector<GroupElement> elements_;
};

struct SieveConfig {
  Rat nu_bound_sq = rat(227, 2);
  // identity means "no filter beyond admissibility"; empty means the default
  // all-involutions surrogate supplied by the caller
  const InvolutionStore* involutions = nullptr;
  bool integer_only = true;
  int max_coeff = 14;  // enumeration cutoff for the Phi sweep
};

// Lemma-style admissibility: nonnegative integers with
// a+c, b+d, c+d, d+e, e+f, f+g, b+e+g all positive.
bool hp_admissible(const InfChar& lambda);

// Independent oracle: true iff some w_j Lambda has every varpi-coordinate
// >= 1 (equivalently w_j Lambda - rho_c is k-dominant).
bool dominant_conjugate_vanishing_check(const ChamberData& cd,
                                        const InfChar& lambda);

struct PhiResult {
  std::array<std::vector<InfChar>, 15> lists;  // lists[i] = Phi_i (i = 1..14)
  std::array<int64_t, 15> counts{};            // counts[i] = |Phi_i|
  int64_t total = 0;
};

// The Phi sweep: admissible Lambda in {0..max_coeff}^7 with min coefficient 0
// such that some involution theta keeps |(Lambda - theta Lambda)/2|^2 within
// the bound; partitioned by max coefficient. `keep_lists_up_to` bounds how
// many elements per part are materialized (counts are always exact).
PhiResult enumerate_phi(const ChamberData& cd, const SieveConfig& config,
                        int64_t keep_lists_up_to = 2000,
                        Exec exec = Exec::openmp);

// All Lambda with nonnegative integer zeta-coordinates and
// 84 <= |Lambda|^2 <= 140.
std::vector<InfChar> enumerate_omega(const ChamberData& cd,
                                     Exec exec = Exec::openmp);

Rat inf_char_norm_sq(const ChamberData& cd, const InfChar& lambda);

}  // namespace e7
