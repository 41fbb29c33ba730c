#include "e7/compact.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace e7 {

std::string KType::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 7; ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  os << ']';
  return os.str();
}

CompactDatum build_compact_datum(const RootDatum& datum) {
  CompactDatum k;
  // gamma_i = alpha_{8-i} for i = 1..4, gamma_5 = alpha_2, gamma_6 = alpha_3,
  // gamma_7 = the highest root.
  for (int i = 1; i <= 4; ++i) k.gamma[i - 1] = datum.simple_roots[8 - i - 1];
  k.gamma[4] = datum.simple_roots[1];
  k.gamma[5] = datum.simple_roots[2];
  k.gamma[6] = datum.highest_root;

  // the compact roots are the span-closure of the gammas inside Delta(g)
  std::set<std::array<std::pair<long, long>, 8>> kset;
  auto key = [](const Weight& w) {
    std::array<std::pair<long, long>, 8> a;
    for (int i = 0; i < 8; ++i)
      a[i] = {w.c[i].get_num().get_si(), w.c[i].get_den().get_si()};
    return a;
  };
  std::vector<Weight> kroots(k.gamma.begin(), k.gamma.end());
  for (const auto& g : k.gamma) kset.insert(key(g));
  for (size_t i = 0; i < kroots.size(); ++i)
    for (const auto& g : k.gamma) {
      Weight r = reflect(kroots[i], g);
      if (kset.insert(key(r)).second) kroots.push_back(r);
      Weight m = -r;
      if (kset.insert(key(m)).second) kroots.push_back(m);
    }
  if (kroots.size() != 62)
    throw std::runtime_error("compact subsystem has " +
                             std::to_string(kroots.size()) + " roots, not 62");
  k.k_roots = kroots;

  for (const auto& r : datum.all_roots)
    if (!kset.count(key(r))) k.noncompact_roots.push_back(r);
  if (k.noncompact_roots.size() != 64)
    throw std::runtime_error("noncompact root count != 64");

  k.rho_c = Weight{};
  for (const auto& r : kroots) {
    Rat p = dot(datum.rho, r);
    if (p > 0) {
      k.positive_k_roots.push_back(r);
      k.rho_c += r * rat(1, 2);
    }
  }
  if (k.positive_k_roots.size() != 31)
    throw std::runtime_error("compact positive system size != 31");

  k.k_cartan.assign(7, std::vector<Rat>(7, Rat(0)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) k.k_cartan[i][j] = dot(k.gamma[i], k.gamma[j]);
  k.varpi_gram = mat_inverse(k.k_cartan);
  for (int i = 0; i < 7; ++i) {
    Weight w;
    for (int j = 0; j < 7; ++j) w += k.gamma[j] * k.varpi_gram[i][j];
    k.varpi[i] = w;
  }

  // beta = alpha_1 + 2 alpha_2 + 3 alpha_3 + 4 alpha_4 + 3 alpha_5
  //        + 2 alpha_6 + alpha_7
  static const int beta_coeffs[7] = {1, 2, 3, 4, 3, 2, 1};
  k.beta = Weight{};
  for (int i = 0; i < 7; ++i)
    k.beta += datum.simple_roots[i] * Rat(beta_coeffs[i]);

  for (int i = 0; i < 7; ++i) {
    k.gamma_lat[i] = to_lat(k.gamma[i]);
    k.varpi_lat[i] = to_lat(k.varpi[i]);
  }
  k.rho_c_lat = to_lat(k.rho_c);
  k.beta_lat = to_lat(k.beta);
  k.gamma_lat_vec.assign(k.gamma_lat.begin(), k.gamma_lat.end());
  return k;
}

std::array<Rat, 7> CompactDatum::varpi_coords(const Weight& v) const {
  std::array<Rat, 7> c;
  for (int i = 0; i < 7; ++i) c[i] = dot(v, gamma[i]);
  return c;
}

std::array<int64_t, 7> CompactDatum::varpi_coords_int(const Lat8& v) const {
  std::array<int64_t, 7> c;
  for (int i = 0; i < 7; ++i) c[i] = dot_int(v, gamma_lat[i]);
  return c;
}

bool CompactDatum::is_k_dominant(const Weight& v) const {
  for (int i = 0; i < 7; ++i)
    if (dot(v, gamma[i]) < 0) return false;
  return true;
}

Rat CompactDatum::norm_sq_varpi(const std::array<Rat, 7>& c) const {
  Rat s = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) s += c[i] * c[j] * varpi_gram[i][j];
  return s;
}

bool is_k_type(const std::array<int, 7>& coeffs) {
  for (int x : coeffs)
    if (x < 0) return false;
  return (coeffs[0] + coeffs[2] + coeffs[5] + coeffs[6]) % 2 == 0;
}

Weight ktype_to_vector(const CompactDatum& k, const KType& kt) {
  Weight w;
  for (int i = 0; i < 7; ++i) w += k.varpi[i] * Rat(kt.coeffs[i]);
  return w;
}

KType vector_to_ktype(const CompactDatum& k, const Weight& v) {
  KType kt;
  for (int i = 0; i < 7; ++i) {
    Rat c = dot(v, k.gamma[i]);
    if (c.get_den() != 1 || c < 0)
      throw std::domain_error("vector has non-dominant or non-integral "
                              "varpi-coordinates: " + v.str());
    kt.coeffs[i] = static_cast<int>(c.get_num().get_si());
  }
  if (!(ktype_to_vector(k, kt) == v))
    throw std::domain_error("vector is outside the varpi span");
  return kt;
}

Lat8 ktype_to_lat(const CompactDatum& k, const KType& kt) {
  Lat8 v{};
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 8; ++j)
      v.v[j] += kt.coeffs[i] * k.varpi_lat[i].v[j];
  return v;
}

}  // namespace e7
