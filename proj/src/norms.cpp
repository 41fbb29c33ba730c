#include "e7/norms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace e7 {

NormEngine::NormEngine(std::shared_ptr<const ChamberData> cd)
    : cd_(std::move(cd)) {
  const Mat& gram = cd_->datum.zeta_gram;
  for (int mask = 0; mask < 128; ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < 7; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    face_idx_[mask] = idx;
    if (idx.empty()) continue;
    Mat sub(idx.size(), std::vector<Rat>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b)
        sub[a][b] = gram[idx[a]][idx[b]];
    face_inv_[mask] = mat_inverse(sub);
  }
  for (int mask = 0; mask < 128; ++mask) face_order_.push_back(mask);
  std::sort(face_order_.begin(), face_order_.end(), [](int a, int b) {
    int pa = std::popcount(unsigned(a)), pb = std::popcount(unsigned(b));
    return pa != pb ? pa > pb : a < b;
  });
}

Weight NormEngine::prv_bracket(const Weight& v) const {
  std::vector<Weight> gsys(cd_->compact.gamma.begin(),
                           cd_->compact.gamma.end());
  return dominant_conjugate(v, gsys).dominant;
}

Lat8 NormEngine::prv_bracket(const Lat8& v) const {
  return dominant_conjugate_vec(v, cd_->compact.gamma_lat_vec);
}

SpinNormReport NormEngine::spin_norm_sq(const KType& mu) const {
  Lat8 mv = ktype_to_lat(cd_->compact, mu);
  SpinNormReport rep;
  bool first = true;
  for (const auto& ch : cd_->chambers) {
    Lat8 x = prv_bracket(mv - ch.rho_n_lat);
    for (int i = 0; i < 8; ++i) x.v[i] += cd_->compact.rho_c_lat.v[i];
    Rat val = norm_sq_rat(x);
    rep.per_chamber_values[ch.index] = val;
    if (first || val < rep.value_sq) {
      rep.value_sq = val;
      first = false;
    }
  }
  for (const auto& ch : cd_->chambers)
    if (rep.per_chamber_values[ch.index] == rep.value_sq)
      rep.argmin_chambers.insert(ch.index);
  return rep;
}

Rat NormEngine::spin_norm_sq_value(const Lat8& mu_vec) const {
  int64_t best_raw = -1;
  for (const auto& ch : cd_->chambers) {
    Lat8 x = prv_bracket(mu_vec - ch.rho_n_lat);
    for (int i = 0; i < 8; ++i) x.v[i] += cd_->compact.rho_c_lat.v[i];
    int64_t raw = dot_raw(x, x);
    if (best_raw < 0 || raw < best_raw) best_raw = raw;
  }
  return rat(best_raw, LAT_SCALE * LAT_SCALE);
}

Weight NormEngine::project_to_chamber_cone(const Chamber& chamber,
                                           const Weight& p) const {
  std::array<Rat, 7> pg;
  for (int i = 0; i < 7; ++i) pg[i] = dot(p, chamber.fw_j[i]);

  for (int mask : face_order_) {
    const auto& idx = face_idx_[mask];
    std::vector<Rat> coeff;
    if (!idx.empty()) {
      std::vector<Rat> rhs(idx.size());
      for (size_t a = 0; a < idx.size(); ++a) rhs[a] = pg[idx[a]];
      coeff = mat_apply(face_inv_[mask], rhs);
      bool ok = true;
      for (const auto& c : coeff)
        if (c < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
    }
    Weight x;
    for (size_t a = 0; a < idx.size(); ++a)
      x += chamber.fw_j[idx[a]] * coeff[a];
    Weight r = p - x;
    bool kkt = true;
    for (int i = 0; i < 7 && kkt; ++i)
      if (dot(r, chamber.fw_j[i]) > 0) kkt = false;
    if (!kkt) continue;
    if (dot(r, x) != 0)
      throw std::logic_error("projection residual not orthogonal");
    return x;
  }
  throw std::logic_error("cone projection found no admissible face");
}

LambdaReport NormEngine::lambda_a(const KType& mu) const {
  const CompactDatum& k = cd_->compact;
  Weight mv = ktype_to_vector(k, mu);
  Weight shifted = mv + k.rho_c + k.rho_c;
  std::set<int> allow = chambers_containing(*cd_, shifted);

  LambdaReport rep;
  bool first = true;
  for (int j : allow) {
    const Chamber& ch = cd_->chambers[j];
    Weight x = project_to_chamber_cone(ch, shifted - ch.rho_j);
    if (first) {
      rep.lambda_a = x;
      rep.value_sq = norm_sq(x);
      rep.chamber_used = j;
      first = false;
    } else if (!(x == rep.lambda_a)) {
      throw std::logic_error("lambda_a disagrees between allowable chambers");
    }
  }
  return rep;
}

Rat NormEngine::spin_lambda_gap(const KType& mu) const {
  return spin_norm_sq(mu).value_sq - lambda_a(mu).value_sq;
}

}  // namespace e7
