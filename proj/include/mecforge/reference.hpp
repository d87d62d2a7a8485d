#pragma once

// Serial, deliberately naive reference implementations. They follow the
// textbook definitions step by step and exist so the optimised and parallel
// paths have something independent to be checked against.

#include <cstdint>
#include <vector>

#include "mecforge/generator.hpp"

namespace mecforge::reference {

/// sigma(p, b, order, Y, k) with the x-search done by trial over [0, p - 1]
/// for every y, exactly as the original construction is written. O(m p).
SBox sbox_trial_search(const MordellCurve& curve, OrderingKind kind, const CompleteSet& set,
                       std::uint64_t k);

/// pstar by materialising every natural S-box for every m from p - 1 down.
std::uint64_t pstar_exhaustive(const PrimeModulus& p, OrderingKind kind);

// Serial analysis kernels, one loop nest per definition.
std::uint64_t max_walsh_magnitude(const std::vector<std::uint64_t>& table, unsigned n);
std::uint64_t max_differential(const std::vector<std::uint64_t>& table, unsigned n);
std::vector<std::uint64_t> sac_counts(const std::vector<std::uint64_t>& table, unsigned n);
std::vector<std::uint64_t> bic_counts(const std::vector<std::uint64_t>& table, unsigned n);
std::vector<std::uint8_t> gf256_coefficients(const std::vector<std::uint64_t>& table);

}  // namespace mecforge::reference
