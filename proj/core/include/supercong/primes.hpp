#pragma once

#include <vector>

#include "supercong/modulus.hpp"

namespace supercong {

/// All primes in [lo, hi] by a sieve of Eratosthenes. DomainError unless 3 <= lo <= hi.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

}  // namespace supercong
