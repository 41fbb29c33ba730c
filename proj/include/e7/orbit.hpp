#pragma once

#include <cstdint>
#include <vector>

#include "e7/root_datum.hpp"

namespace e7 {

// Orbit points are stored at twice their true coordinates; every point of the
// W-orbit of an integral weight stays in (1/2)Z^8, and for the seeds used
// here the scaled coordinates fit in [-31, 32], so a point packs into one
// 64-bit key (8 x 6 bits plus guard checks).
using OrbVec = std::array<int16_t, 8>;

struct Orbit {
  std::vector<OrbVec> points;    // BFS order; points[0] is the seed
  std::vector<uint32_t> parent;  // index of the BFS parent (0 for the seed)
  std::vector<uint8_t> gen;      // generator applied to the parent
};

enum class Exec { serial, openmp };

// Breadth-first walk of the orbit of `seed` under the reflections in `gens`
// (norm-2 roots, scale-2 coordinates). The two execution policies produce the
// same point set; BFS level order is preserved in both.
Orbit orbit_walk(const std::vector<OrbVec>& gens, const OrbVec& seed,
                 Exec exec = Exec::openmp);

OrbVec to_orbvec(const Weight& w);   // asserts the scale-2 lattice
Weight from_orbvec(const OrbVec& v);

// Word for orbit element i (letters in application order: first letter is the
// reflection applied to the seed first).
std::vector<uint8_t> orbit_word(const Orbit& o, uint32_t i);

// Scans the whole group (realized on a regular orbit) for the elements of
// order exactly two. Returns their words, sorted for determinism.
std::vector<std::vector<uint8_t>> involution_scan(const Orbit& regular_orbit,
                                                  const std::vector<OrbVec>& gens,
                                                  Exec exec = Exec::openmp);

}  // namespace e7
