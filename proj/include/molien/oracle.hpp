#pragma once

// Brute-force invariant dimensions: enumerate monomials of a multidegree,
// keep the H-invariant ones, count S_n-orbits by sorting columns.

#include <cstdint>
#include <vector>

#include "molien/lattice.hpp"
#include "molien/polyring.hpp"

namespace molien {

/// dim of the G-invariants of multidegree (d_1..d_k) in C[x_{i,j}].
/// Throws CapacityError when the number of k x n exponent matrices exceeds
/// limits.oracle_cap.
std::uint64_t invariant_dimension(const GroupSpec& spec, int k,
                                  const std::vector<std::uint32_t>& multidegree,
                                  const Limits& limits = {});

/// sum over multidegrees in [0, depth]^k of invariant_dimension * h^d.
MultiPoly oracle_series(const GroupSpec& spec, int k, std::uint32_t depth,
                        const Limits& limits = {});

}  // namespace molien
