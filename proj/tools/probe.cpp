// scratch probe used during bring-up; replaced by the real CLI
#include <cstdio>

#include "e7/enumeration.hpp"
#include "e7/norms.hpp"
#include "e7/screening.hpp"
#include "e7/usmall.hpp"

using namespace e7;

int main() {
  auto cd = build_chamber_data();
  const auto& d = cd->datum;
  const auto& k = cd->compact;
  std::printf("W=%zu Wk=%zu chambers=%zu p=%zu\n", cd->weyl_order,
              cd->weyl_k_order, cd->chambers.size(),
              k.noncompact_roots.size());
  std::printf("|rho_c|^2 = %s\n", to_string(norm_sq(k.rho_c)).c_str());
  std::printf("beta varpi: ");
  for (auto& c : k.varpi_coords(k.beta)) std::printf("%s ", to_string(c).c_str());
  std::printf("\nrho_c varpi: ");
  for (auto& c : k.varpi_coords(k.rho_c)) std::printf("%s ", to_string(c).c_str());
  std::printf("\ndim E_beta = %s\n",
              weyl_dimension(k.beta, k.positive_k_roots).get_str().c_str());
  std::printf("spin module ok = %d\n", validate_spin_module(cd->chambers));

  // chamber 0 and the two x=2655 argmin chambers
  std::printf("rho_n(0) varpi: ");
  for (int c : cd->chambers[0].rho_n_varpi) std::printf("%d ", c);
  std::printf("  wlen=%zu\n", cd->chambers[0].w.word.size());
  const Chamber& c47 = cd->by_rho_n({1, 0, 1, 0, 0, 4, 2});
  const Chamber& c41 = cd->by_rho_n({2, 0, 0, 1, 0, 3, 3});
  std::printf("chamber rho_n=[1,0,1,0,0,4,2]: len=%zu  [2,0,0,1,0,3,3]: len=%zu\n",
              c47.w.word.size(), c41.w.word.size());

  // Gram checks
  InfChar l1{{1, 1, 1, 1, 1, 8, 0}};
  InfChar l2{{0, 0, 1, 1, 1, 0, 2}};
  InfChar l3{{1, 0, 0, 1, 0, 1, 1}};
  std::printf("|[1,1,1,1,1,8,0]|^2 = %s (want 706)\n",
              to_string(inf_char_norm_sq(*cd, l1)).c_str());
  std::printf("|[0,0,1,1,1,0,2]|^2 = %s (want 215/2)\n",
              to_string(inf_char_norm_sq(*cd, l2)).c_str());
  std::printf("|[1,0,0,1,0,1,1]|^2 = %s (want 111/2 = |rho_c|^2)\n",
              to_string(inf_char_norm_sq(*cd, l3)).c_str());

  // [1,0,0,1,0,1,1] conjugate to rho_c?
  std::vector<Weight> gsys(d.simple_roots.begin(), d.simple_roots.end());
  Weight rc_dom = dominant_conjugate(k.rho_c, gsys).dominant;
  auto zc = d.zeta_coords(rc_dom);
  std::printf("zeta({rho_c}) = ");
  for (auto& c : zc) std::printf("%s ", to_string(c).c_str());
  std::printf("\n");

  NormEngine norms(cd);
  // pencils for the two LKTs the paper screens by hand
  PencilReport p1 = pencil_min_spin(norms, KType{{0, 1, 0, 0, 4, 0, 0}});
  PencilReport p2 = pencil_min_spin(norms, KType{{6, 0, 0, 0, 0, 0, 10}});
  std::printf("pencil [0,1,0,0,4,0,0]: min=%s term=%d (want 223/2)\n",
              to_string(p1.min_value_sq).c_str(), p1.terminated_at);
  std::printf("pencil [6,0,0,0,0,0,10]: min=%s term=%d (want 231/2)\n",
              to_string(p2.min_value_sq).c_str(), p2.terminated_at);
  // minimal representation pencil
  PencilReport p3 = pencil_min_spin(norms, KType{{0, 0, 0, 0, 0, 0, 4}});
  std::printf("pencil [0,0,0,0,0,0,4]: min=%s attaining = {",
              to_string(p3.min_value_sq).c_str());
  for (int n : p3.attaining_n) std::printf("%d ", n);
  std::printf("} (want n=1..6)\n");

  // spin norm examples
  SpinNormReport s1 = norms.spin_norm_sq(KType{{1, 0, 1, 0, 0, 4, 2}});
  std::printf("spin [1,0,1,0,0,4,2] = %s argmin={", to_string(s1.value_sq).c_str());
  for (int j : s1.argmin_chambers) std::printf("%d ", j);
  std::printf("}\n");
  SpinNormReport s2 = norms.spin_norm_sq(KType{{0, 3, 0, 0, 0, 1, 9}});
  std::printf("spin [0,3,0,0,0,1,9] = %s (want 111/2)\n",
              to_string(s2.value_sq).c_str());

  // lambda examples
  LambdaReport lr = norms.lambda_a(KType{{0, 0, 0, 0, 0, 0, 2}});
  std::printf("lambda^2 [0,0,0,0,0,0,2] = %s, gap = %s\n",
              to_string(lr.value_sq).c_str(),
              to_string(norms.spin_lambda_gap(KType{{0, 0, 0, 0, 0, 0, 2}})).c_str());
  KType rn0{{0, 0, 0, 0, 0, 0, 16}};
  std::printf("gap(rho_n0=[0,0,0,0,0,0,16]) = %s\n",
              to_string(norms.spin_lambda_gap(rn0)).c_str());
  KType betak{{0, 0, 0, 0, 0, 1, 1}};
  std::printf("gap(beta) = %s (want < 165/2)\n",
              to_string(norms.spin_lambda_gap(betak)).c_str());

  // vanishing-check questions
  InfChar q1{{0, 0, 1, 1, 1, 1, 1}};
  InfChar q2{{0, 1, 0, 1, 1, 1, 1}};
  std::printf("vanish-check [0,0,1,1,1,1,1]: hp=%d vanish=%d\n",
              hp_admissible(q1), dominant_conjugate_vanishing_check(*cd, q1));
  std::printf("vanish-check [0,1,0,1,1,1,1]: hp=%d vanish=%d\n",
              hp_admissible(q2), dominant_conjugate_vanishing_check(*cd, q2));
  int agree = 0, total = 0, mism = 0;
  for (int a = 0; a < 2187; ++a) {
    int t = a;
    InfChar l{};
    for (int i = 0; i < 7; ++i) {
      l.coeffs[i] = t % 3;
      t /= 3;
    }
    ++total;
    bool h = hp_admissible(l);
    bool v = dominant_conjugate_vanishing_check(*cd, l);
    if (h == v)
      ++agree;
    else if (mism++ < 5)
      std::printf("  grid mismatch %s hp=%d vanish=%d\n", l.str().c_str(), h, v);
  }
  std::printf("grid {0,1,2}^7 agreement: %d/%d\n", agree, total);

  // Omega
  auto omega = enumerate_omega(*cd);
  std::printf("Omega count = %zu (want 1113)\n", omega.size());

  // u-small box + quick membership checks
  HullOracle hull(cd);
  auto box = hull.census_box();
  std::printf("census box: ");
  long prod = 1;
  for (int b : box) {
    std::printf("%d ", b);
    prod *= (b + 1);
  }
  std::printf(" (box size %ld)\n", prod);
  std::printf("usmall 0 = %d, 2rho_n0 = %d, [0,0,0,0,0,0,2] = %d\n",
              hull.is_usmall(KType{{0, 0, 0, 0, 0, 0, 0}}),
              hull.is_usmall(KType{{0, 0, 0, 0, 0, 0, 32}}),
              hull.is_usmall(KType{{0, 0, 0, 0, 0, 0, 2}}));
  return 0;
}
