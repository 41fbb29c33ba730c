#pragma once

#include <iosfwd>
#include <map>

#include "e7/enumeration.hpp"
#include "e7/norms.hpp"
#include "e7/screening.hpp"

namespace e7 {

// One row of the bundled classification tables. lambda_param and nu_param are
// zeta-coordinates as printed; spin LKTs are varpi-coordinates with pencil
// shorthands expanded at load time.
struct TableEntry {
  int table_id = 0;            // 0 is the appended trivial-representation row
  InfChar header;              // the table's infinitesimal character
  long x = 0;                  // opaque external label
  std::array<Rat, 7> lambda_param;
  std::array<Rat, 7> nu_param;
  std::vector<KType> spin_lkts;
  bool starred = false;
  bool club = false;
  bool trivial = false;
  int line_no = 0;
};

// Parses the fixture; throws with a line number on malformed records, checks
// the per-entry invariants (K-type parity, admissible header), and appends
// nothing: the trivial row is part of the file. Expects 103 entries.
std::vector<TableEntry> load_tables(const std::string& path);

struct EntryCheck {
  bool spin_equals_lambda = true;       // (a)
  bool hp_conjugate = true;             // (b)
  bool pencil_min_at_zero = true;       // (c)
  std::vector<std::string> failures;
  bool passed() const {
    return spin_equals_lambda && hp_conjugate && pencil_min_at_zero;
  }
};

// Checks, for each spin LKT mu of the entry: (a) the spin norm equals
// |Lambda|^2, (b) {mu - rho_n^(j)} + rho_c is W(g)-conjugate to Lambda for
// some argmin chamber j, (c) the pencil through mu attains its minimum at
// n = 0.
EntryCheck verify_entry(const NormEngine& norms, const TableEntry& e);

// Signed K~-weight multiset: every (spin LKT, argmin chamber) pair
// contributes ({mu - rho_n^(j)}, (-1)^len(w_j)). A vanishing signed sum is
// necessary for the entry's Dirac index to cancel.
std::map<std::array<int, 7>, long> dirac_index_cancellation(
    const NormEngine& norms, const TableEntry& e);

// |nu|^2 multiset over the entries, via the zeta Gram matrix.
std::map<Rat, int> nu_statistics(const ChamberData& cd,
                                 const std::vector<TableEntry>& entries);

// --- published values the replay is checked against ---------------------

const std::vector<std::array<int, 7>>& phi1_reference();       // 32 characters
const std::vector<std::array<int, 7>>& certs_reference();      // 23 K-types
const std::vector<std::pair<Rat, int>>& nu_stats_reference();  // 103 values
const std::array<int64_t, 15>& phi_counts_reference();         // index 1..14
constexpr int64_t kPhiTotalReference = 723855;

}  // namespace e7
