#pragma once

#include <functional>
#include <vector>

#include "e7/rational.hpp"

namespace e7 {

// Exact phase-1 simplex with column generation and Bland's anti-cycling rule.
// Decides feasibility of  sum_k x_k A_k = b, x >= 0  where the columns A_k
// come from a pricing oracle. Artificial columns carry cost 1 and stay in the
// tableau, so the basis inverse and the duals can always be read off them.
class FeasibilityLP {
 public:
  // b: right-hand side (m rows).
  explicit FeasibilityLP(std::vector<Rat> b);

  // Pricing oracle: given duals y (length m), return a column with
  // y . A > 0 (strictly improving), or an empty vector when none exists.
  // `payload` identifies the column for the caller.
  struct PricedColumn {
    std::vector<Rat> column;
    int payload = -1;
  };
  using Oracle = std::function<PricedColumn(const std::vector<Rat>&)>;

  struct Result {
    bool feasible;
    // feasible: payload -> weight for the basic structural columns
    std::vector<std::pair<int, Rat>> solution;
    // infeasible: duals with y.b > 0 and y.A <= 0 for every column
    std::vector<Rat> duals;
  };

  Result solve(const Oracle& oracle);

 private:
  int m_;                       // rows
  std::vector<Rat> rhs_;
  std::vector<std::vector<Rat>> cols_;  // transformed columns, column-major
  std::vector<Rat> redcost_;
  std::vector<int> payload_;    // -1 for artificials
  std::vector<int> basis_;      // column index per row
  Rat objective_;
  std::vector<int> flip_;       // row sign normalization applied to inputs

  void pivot(int enter, int row);
  bool reoptimize();            // Bland loop over existing columns
  std::vector<Rat> duals() const;
  void add_column(std::vector<Rat> raw, int payload);

  friend class FeasibilityLPTestPeek;
};

}  // namespace e7
