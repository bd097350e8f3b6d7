#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace latzeta::arith {

// Prime factorization as (p, e) pairs with p strictly increasing, e >= 1.
// factorize(1) is the empty product.
using Factorization = std::vector<std::pair<std::int64_t, int>>;

// Largest n accepted by factorize(). After trial division by all sieved
// primes (<= 10^6) the remaining cofactor is prime iff it is <= 10^12.
inline constexpr std::int64_t kFactorizeBound = 1'000'000'000'000LL;

// Primes up to 10^6, built once on first use and immutable afterwards.
const std::vector<std::int64_t>& sieved_primes();

// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
std::vector<std::int32_t> smallest_prime_factor_sieve(std::int64_t n);

bool is_prime(std::int64_t n);

Factorization factorize(std::int64_t n);

// All divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Integer partition function p(k), Euler's pentagonal recurrence. k <= 100.
std::int64_t partition_count(int k);

// Number of isomorphism classes of abelian groups of order n:
// multiplicative, equal to partition_count(k) at prime powers p^k.
std::int64_t num_abelian_groups(std::int64_t n);

// Riemann zeta(k) for integer k >= 2 with absolute error <= tol.
// Direct series to M terms plus the integral tail estimate; the midpoint
// of the two integral bounds keeps the error below M^-k / 2.
double zeta_value(int k, double tol = 1e-10);

}  // namespace latzeta::arith
