#pragma once

#include <atomic>
#include <mutex>

#include "e7/norms.hpp"

namespace e7 {

struct HullMembership {
  bool inside = false;
  // inside: an explicit convex combination of W(k)-orbit points of the
  // generators 2 rho_n^(j) that reproduces the queried vector
  std::vector<std::pair<Weight, Rat>> combination;
  // outside: a direction strictly separating the vector from the hull
  Weight separator;
  Rat separator_value;  // support function h(separator)
};

// Separating directions proven for rejected points; safe for concurrent
// insert/read (fixed capacity, release/acquire publication).
class CertCache {
 public:
  struct Entry {
    std::array<int64_t, 8> dir;  // integer direction
    int64_t thr_num, thr_den;    // h(dir) as a fraction, thr_den > 0
  };

  CertCache();
  size_t size() const { return count_.load(std::memory_order_acquire); }
  const Entry& operator[](size_t i) const { return entries_[i]; }
  void push(const Entry& e);

 private:
  static constexpr size_t kCapacity = 1 << 17;
  std::vector<Entry> entries_;
  std::atomic<size_t> count_{0};
  std::mutex mu_;
};

// Membership oracle for the u-small convex hull: the convex hull of the
// W(k)-orbits of the 63 vectors 2 rho_n^(j). Membership is decided by an
// exact-rational phase-1 LP whose columns are orbit points, priced by the
// support function.
class HullOracle {
 public:
  explicit HullOracle(std::shared_ptr<const ChamberData> cd);

  const ChamberData& data() const { return *cd_; }

  // support function h(c) = max_j B(2 rho_n^(j), {c}) over the hull
  Rat support(const Weight& c) const;

  // full decision with certificate; v need not be dominant
  HullMembership membership(const Weight& v) const;

  bool is_usmall(const KType& mu) const;

  // per-coordinate bounds floor(h(gamma_i)) for the census box
  std::array<int, 7> census_box() const;

  // all u-small K-types, lexicographically sorted
  std::vector<KType> count_usmall_ktypes(Exec exec = Exec::openmp) const;

  const CertCache& cache() const { return cache_; }

 private:
  std::shared_ptr<const ChamberData> cd_;
  std::vector<Weight> gens_dom_;   // the 63 vectors 2 rho_n^(j)
  std::vector<Lat8> gens_lat_;
  int64_t hull_radius_raw_;        // max_j dot_raw(2rho_n, 2rho_n)
  mutable CertCache cache_;

  struct Priced {
    Rat h;
    Weight argmax;  // orbit point attaining h
  };
  Priced price(const Weight& c) const;

  bool rejected_by_cache(const Lat8& v) const;
  void cache_separator(const Weight& c, const Rat& h) const;
};

// The u-small K-types whose spin/lambda gap is at least 165/2; checked
// against the published 23-element list by the callers that need it.
std::vector<KType> certs(const NormEngine& norms, const std::vector<KType>& usmall,
                         Exec exec = Exec::openmp);

}  // namespace e7
