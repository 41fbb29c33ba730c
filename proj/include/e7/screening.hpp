#pragma once

#include "e7/norms.hpp"

namespace e7 {

struct PencilReport {
  Rat min_value_sq;
  std::set<int> attaining_n;
  int terminated_at = 0;                  // last n examined
  std::vector<std::pair<int, Rat>> per_n; // (n, spin norm squared)
};

enum class Verdict { NonUnitary, Inconclusive };

struct ScreenVerdict {
  Verdict verdict;
  std::optional<int> witness_n;
};

struct ParabolicData {
  Weight defining_H;
  std::vector<Weight> levi_roots;     // Delta(l): B(H, alpha) = 0
  std::vector<Weight> nilrad_roots;   // Delta(u): B(H, alpha) > 0
  Weight rho_u;
};

enum class Range { Good, WeaklyGood, Fair, WeaklyFair, None };

// Minimum of the spin norm along the Vogan pencil delta + n beta, n >= 0.
// The walk stops once the lower bound (|delta + n beta| - max_j |rho_n^(j)|)^2
// exceeds the running minimum; the PRV bracket preserves norms, so this bound
// is sound.
PencilReport pencil_min_spin(const NormEngine& norms, const KType& delta);

// Non-unitarity test: the pencil minimum dips below |Lambda|^2 exactly when
// the Dirac inequality fails somewhere along the pencil.
ScreenVerdict dirac_screen(const NormEngine& norms, const KType& delta,
                           const Rat& lambda_sq);

// |nu|^2 against one of the Helgason-Johnson style thresholds
// (399/2 classical, 227/2 sharpened, 165/2 for integral characters).
bool hj_filter(const Rat& nu_sq, const Rat& threshold_sq);

// nu = (Lambda - theta Lambda)/2; throws unless theta is an involution.
Weight nu_from_involution(const Weight& lambda, const GroupElement& theta);

ParabolicData build_parabolic(const ChamberData& cd, const Weight& H);

Range classify_range(const ChamberData& cd, const Weight& lambda_z,
                     const ParabolicData& q);

const char* range_name(Range r);

bool strongly_regular(const Weight& lambda,
                      const std::vector<Weight>& positive_system);

}  // namespace e7
