#include "e7/simplex.hpp"

#include <stdexcept>

namespace e7 {

FeasibilityLP::FeasibilityLP(std::vector<Rat> b) : m_(int(b.size())), rhs_(std::move(b)) {
  flip_.assign(m_, 1);
  for (int i = 0; i < m_; ++i)
    if (rhs_[i] < 0) {
      rhs_[i] = -rhs_[i];
      flip_[i] = -1;
    }
  objective_ = 0;
  for (int i = 0; i < m_; ++i) objective_ += rhs_[i];
  // artificial identity basis
  for (int i = 0; i < m_; ++i) {
    std::vector<Rat> col(m_, Rat(0));
    col[i] = 1;
    cols_.push_back(std::move(col));
    payload_.push_back(-1);
    basis_.push_back(i);
  }
  // reduced cost of column j for the phase-1 objective: c_j - sum_r T[r][j]
  redcost_.assign(m_, Rat(0));  // artificials start basic: 1 - 1 = 0
}

std::vector<Rat> FeasibilityLP::duals() const {
  // y_i = c_{a_i} - redcost(a_i) = 1 - redcost_[i]; undo the row flips
  std::vector<Rat> y(m_);
  for (int i = 0; i < m_; ++i) y[i] = (Rat(1) - redcost_[i]) * flip_[i];
  return y;
}

void FeasibilityLP::pivot(int enter, int row) {
  const Rat piv = cols_[enter][row];
  if (piv == 0) throw std::logic_error("zero pivot");
  const size_t ncols = cols_.size();
  // scale pivot row
  for (size_t j = 0; j < ncols; ++j) cols_[j][row] /= piv;
  rhs_[row] /= piv;
  // eliminate
  for (int r = 0; r < m_; ++r) {
    if (r == row) continue;
    Rat f = cols_[enter][r];
    if (f == 0) continue;
    for (size_t j = 0; j < ncols; ++j)
      if (cols_[j][row] != 0) cols_[j][r] -= f * cols_[j][row];
    rhs_[r] -= f * rhs_[row];
  }
  Rat fc = redcost_[enter];
  if (fc != 0) {
    for (size_t j = 0; j < ncols; ++j)
      if (cols_[j][row] != 0) redcost_[j] -= fc * cols_[j][row];
  }
  basis_[row] = enter;
  objective_ = 0;  // = sum of the basic artificial values
  for (int r = 0; r < m_; ++r)
    if (payload_[basis_[r]] < 0) objective_ += rhs_[r];
}

bool FeasibilityLP::reoptimize() {
  size_t guard = 0;
  for (;;) {
    int enter = -1;
    for (size_t j = 0; j < cols_.size(); ++j)
      if (redcost_[j] < 0) {
        enter = int(j);
        break;  // Bland: lowest index
      }
    if (enter < 0) return true;
    int row = -1;
    for (int r = 0; r < m_; ++r) {
      if (cols_[enter][r] <= 0) continue;
      if (row < 0) {
        row = r;
        continue;
      }
      Rat cur = rhs_[r] / cols_[enter][r];
      Rat best = rhs_[row] / cols_[enter][row];
      if (cur < best || (cur == best && basis_[r] < basis_[row])) row = r;
    }
    if (row < 0)
      throw std::logic_error("phase-1 LP unbounded");  // cannot happen
    pivot(enter, row);
    if (++guard > 100000) throw std::logic_error("simplex pivot guard");
  }
}

void FeasibilityLP::add_column(std::vector<Rat> raw, int payload) {
  for (int i = 0; i < m_; ++i)
    if (flip_[i] < 0) raw[i] = -raw[i];
  // transformed column = B^-1 raw; the artificial columns hold B^-1
  std::vector<Rat> t(m_, Rat(0));
  for (int i = 0; i < m_; ++i) {
    if (raw[i] == 0) continue;
    for (int r = 0; r < m_; ++r) t[r] += cols_[i][r] * raw[i];
  }
  // reduced cost = 0 - y . raw (flipped frame)
  Rat rc = 0;
  for (int i = 0; i < m_; ++i) rc += (Rat(1) - redcost_[i]) * raw[i];
  cols_.push_back(std::move(t));
  redcost_.push_back(-rc);
  payload_.push_back(payload);
}

FeasibilityLP::Result FeasibilityLP::solve(const Oracle& oracle) {
  size_t guard = 0;
  for (;;) {
    reoptimize();
    if (objective_ == 0) break;
    PricedColumn pc = oracle(duals());
    if (pc.column.empty()) {
      Result res;
      res.feasible = false;
      res.duals = duals();
      return res;
    }
    add_column(std::move(pc.column), pc.payload);
    if (redcost_.back() >= 0)
      throw std::logic_error("oracle returned a non-improving column");
    if (++guard > 100000) throw std::logic_error("column generation guard");
  }
  Result res;
  res.feasible = true;
  for (int r = 0; r < m_; ++r) {
    int j = basis_[r];
    if (payload_[j] >= 0 && rhs_[r] != 0)
      res.solution.push_back({payload_[j], rhs_[r]});
  }
  return res;
}

}  // namespace e7
