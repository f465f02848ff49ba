#include "rrmf/linalg.hpp"

#include <utility>

#include "rrmf/errors.hpp"

namespace rrmf {

namespace {

// Reduces rows in place to reduced row echelon form over the first `cols`
// columns; returns the pivot columns.
std::vector<std::size_t> eliminate(ScalarMatrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero()) continue;
      const Scalar f = rows[o][c];
      for (std::size_t k = c; k < rows[o].size(); ++k) rows[o][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t exact_rank(ScalarMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  return eliminate(rows, cols).size();
}

std::optional<LinearSolution> solve_exact(ScalarMatrix m, std::vector<Scalar> rhs) {
  if (m.size() != rhs.size()) throw PreconditionError("solve_exact: row count mismatch");
  if (m.empty()) return LinearSolution{};
  const std::size_t cols = m.front().size();
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
  const auto pivots = eliminate(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (!m[r][cols].is_zero()) return std::nullopt;
  }
  LinearSolution sol{std::vector<Scalar>(cols), cols - pivots.size(), {}};
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = m[r][cols];
  std::vector<bool> is_pivot(cols, false);
  for (const auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace rrmf
