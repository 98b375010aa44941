#pragma once

// Independent reference computations used only by the tests. None of them
// touches the Jacobian rank engine or the sector assembly.

#include "lgcy/exact.hpp"
#include "lgcy/statespace.hpp"

#include <map>
#include <vector>

namespace oracle {

using lgcy::BigInt;
using lgcy::Rational;

/// Coefficients of (1 + t + ... + t^{e-1})^n by repeated multiplication.
std::vector<BigInt> truncated_geometric_power(int e, int n);

/// Euler characteristic of a smooth complete intersection of the given degrees
/// in P^N, from c(X) = (1+H)^{N+1} / prod (1 + d_i H).
BigInt ci_euler_characteristic(int N, const std::vector<int>& degrees);

/// Chen-Ruan Hodge numbers of a Fermat-type hypersurface quotient
/// sum_j x_j^{e_j} = 0 in P(w) by the group generated by `generators` and the
/// exponential grading J, from the classical Milnor-basis description of the
/// FJRW state space: for each h in the group, monomials prod_{j in Fix h}
/// x_j^{a_j} with a_j <= e_j - 2, kept when x^a dx_Fix is invariant, at
/// bidegree (N_h - deg + age - 1, deg + age - 1), deg = sum (a_j + 1) / e_j.
std::map<lgcy::Bidegree, long long> fermat_hodge_numbers(const std::vector<int>& exponents,
                                                         const std::vector<std::vector<Rational>>& generators);

}  // namespace oracle
