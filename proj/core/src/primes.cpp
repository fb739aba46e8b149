#include "supercong/primes.hpp"

#include <string>

#include "supercong/errors.hpp"

namespace supercong {

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  if (lo < 3 || lo > hi) {
    throw DomainError("primes_in_range: need 3 <= lo <= hi, got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  if (hi > (u64{1} << 32)) throw DomainError("primes_in_range: upper bound too large for a sieve");
  std::vector<bool> composite(hi + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace supercong
