#ifndef RRMF_LINALG_HPP
#define RRMF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rrmf/scalar.hpp"

namespace rrmf {

using ScalarMatrix = std::vector<std::vector<Scalar>>;  // row-major

/// Exact rank by Gauss-Jordan elimination over Q(sqrt(d)).
std::size_t exact_rank(ScalarMatrix rows);

struct LinearSolution {
  std::vector<Scalar> particular;  // free variables set to zero
  std::size_t nullity = 0;         // dimension of the solution family
  std::vector<std::vector<Scalar>> kernel;  // basis of the homogeneous solutions
};

/// Solves M x = rhs exactly; nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_exact(ScalarMatrix m, std::vector<Scalar> rhs);

}  // namespace rrmf

#endif  // RRMF_LINALG_HPP
