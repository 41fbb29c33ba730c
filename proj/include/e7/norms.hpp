#pragma once

#include <set>

#include "e7/chambers.hpp"

namespace e7 {

struct SpinNormReport {
  Rat value_sq;
  std::set<int> argmin_chambers;
  std::array<Rat, 63> per_chamber_values;
};

struct LambdaReport {
  Weight lambda_a;
  Rat value_sq;
  int chamber_used;
};

// Shared engine for the spin and lambda norms. Holds the precomputed face
// inverses of the fundamental-weight Gram matrix (the same for all 63
// chambers, since the w_j are orthogonal).
class NormEngine {
 public:
  explicit NormEngine(std::shared_ptr<const ChamberData> cd);

  const ChamberData& data() const { return *cd_; }

  // The unique Delta+(k)-dominant W(k)-conjugate of v.
  Weight prv_bracket(const Weight& v) const;
  Lat8 prv_bracket(const Lat8& v) const;

  SpinNormReport spin_norm_sq(const KType& mu) const;
  // Cheap path used by the sweeps: the minimum only.
  Rat spin_norm_sq_value(const Lat8& mu_vec) const;

  LambdaReport lambda_a(const KType& mu) const;
  Rat spin_lambda_gap(const KType& mu) const;

  // Nearest point of the cone spanned by the fw_j of `chamber` to p,
  // computed by exhaustive search over the 128 faces. The KKT certificate
  // (zero pairing with the projection, nonpositive pairing with every
  // generator) is asserted before returning.
  Weight project_to_chamber_cone(const Chamber& chamber, const Weight& p) const;

 private:
  std::shared_ptr<const ChamberData> cd_;
  // face_inv_[mask] = inverse of the |mask| x |mask| principal submatrix of
  // the zeta Gram matrix
  std::array<Mat, 128> face_inv_;
  std::array<std::vector<int>, 128> face_idx_;
  std::vector<int> face_order_;  // masks by descending popcount
};

}  // namespace e7
