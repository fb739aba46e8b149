#pragma once

#include <array>
#include <string_view>

#include "supercong/check.hpp"

namespace supercong {

/// "G24", "S39", "DoubleSum", "Vandermonde", "SumInvM".
const std::array<std::string_view, 5>& exact_identity_ids();

/// True for the identities indexed by an odd prime rather than by k >= 1.
bool identity_takes_prime(std::string_view id);

/// Both sides of an exact binomial/harmonic identity as arbitrary-precision
/// rationals; the record has modulus "exact".
///
///   G24         sum_{m<k} 1/binom(k-1,m)            = k/2^k sum_{j<=k} 2^j/j
///   S39         sum_{m<=k} binom(k,m) H_m            = 2^k (H_k - sum_{m<=k} 1/(m 2^m))
///   DoubleSum   sum_l binom(p-1,l) sum_{r<=l} binom(p,r) = 2^(p-1) (2^(p-1) - 1)
///   Vandermonde sum_m binom(k,m)^2                   = binom(2k, k)
///   SumInvM     sum_{m<p} binom(p-1,m-1)/m           = 2 q_p(2)
CongruenceCheck check_exact_identity(std::string_view id, u64 argument);

}  // namespace supercong
