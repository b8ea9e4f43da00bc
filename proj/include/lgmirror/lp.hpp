// Exact rational linear feasibility, used to certify regularity of
// user-supplied triangulations.
#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lgm {

using BigRat = boost::multiprecision::cpp_rational;

// Finds x (free variables) with A x >= b, or nullopt if infeasible.
// Two-phase-free formulation: phase I simplex with Bland's rule.
std::optional<std::vector<BigRat>> feasible_point(const std::vector<std::vector<BigRat>>& a,
                                                  const std::vector<BigRat>& b);

}  // namespace lgm
