#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "e7/compact.hpp"
#include "e7/orbit.hpp"

namespace e7 {

// One of the 63 positive systems of Delta(g) containing Delta+(k). Indexed by
// the lexicographic order of the varpi-coordinates of rho_n, not by any
// external numbering.
struct Chamber {
  int index = 0;
  GroupElement w;                    // minimal coset representative
  Weight rho_j;                      // w(rho)
  Weight rho_n_j;                    // rho_j - rho_c
  std::array<Weight, 7> simple_roots_j;  // w(alpha_i)
  std::array<Weight, 7> fw_j;            // w(zeta_i)
  std::array<int, 7> rho_n_varpi{};      // nonnegative integers
  Int dim_rho_n;                     // dim over k of E_{rho_n}

  // scaled copies
  Lat8 rho_j_lat, rho_n_lat, two_rho_n_lat;
  std::array<Lat8, 7> simple_roots_lat, fw_lat;
};

struct ChamberData {
  RootDatum datum;
  CompactDatum compact;
  std::vector<Chamber> chambers;     // 63, sorted
  size_t weyl_order = 0;             // 2903040, from the orbit walk
  size_t weyl_k_order = 0;           // 46080
  Rat max_rho_n_sq;                  // max_j |rho_n_j|^2
  Lat8 two_rho_c_lat;

  const Chamber& by_rho_n(const std::array<int, 7>& varpi) const;
};

// Builds everything: the orbit walk of rho, the 63 k-dominant points, the
// minimal coset elements, and per-chamber data.
std::shared_ptr<const ChamberData> build_chamber_data(Exec exec = Exec::openmp);

// All j with B(v, w_j alpha_i) >= 0 for every i, i.e. the chambers whose
// closed dominant cone contains v. Throws if v is not k-dominant.
std::set<int> chambers_containing(const ChamberData& cd, const Weight& v);

// true iff sum_j dim E_{rho_n_j} == 2^32
bool validate_spin_module(const std::vector<Chamber>& chambers);

// Binary cache (version tag + exact rationals as (num, den) pairs); see
// README for the layout.
void save_chamber_cache(const ChamberData& cd, const std::string& path);
std::shared_ptr<const ChamberData> load_chamber_cache(const std::string& path);

// Build, or load from <cache_dir>/chambers.bin when present (writes it on a
// miss). Empty cache_dir means no caching.
std::shared_ptr<const ChamberData> chamber_data_cached(const std::string& cache_dir,
                                                       Exec exec = Exec::openmp);

uint64_t datum_content_hash(const RootDatum& d);

}  // namespace e7
