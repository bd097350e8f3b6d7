// Exact integer utilities: sieve, factorization, divisors, partitions, and
// the floating-point zeta values used for asymptotic constants.

#include "latzeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latzeta::arith {

namespace {

constexpr std::int64_t kSieveBound = 1'000'000;

std::vector<std::int64_t> build_primes() {
  std::vector<bool> composite(kSieveBound + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= kSieveBound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= kSieveBound; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

const std::vector<std::int64_t>& sieved_primes() {
  static const std::vector<std::int64_t> primes = build_primes();
  return primes;
}

std::vector<std::int32_t> smallest_prime_factor_sieve(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("smallest_prime_factor_sieve: n < 0");
  std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  return spf;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : sieved_primes()) {
    if (p * p > n) return true;
    if (n % p == 0) return n == p;
  }
  return true;  // no prime factor <= 10^6, so prime for n <= 10^12
}

Factorization factorize(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > kFactorizeBound)
    throw std::invalid_argument("factorize: n exceeds implementation bound 10^12");
  Factorization out;
  for (std::int64_t p : sieved_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);  // leftover cofactor is prime (n <= 10^12)
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  Factorization fac = factorize(n);
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::int64_t partition_count(int k) {
  if (k < 0) throw std::invalid_argument("partition_count: k < 0");
  if (k > 100) throw std::invalid_argument("partition_count: k > 100 unsupported");
  static const std::vector<std::int64_t> table = [] {
    std::vector<std::int64_t> p(101, 0);
    p[0] = 1;
    for (int n = 1; n <= 100; ++n) {
      std::int64_t sum = 0;
      for (int j = 1;; ++j) {
        std::int64_t g1 = static_cast<std::int64_t>(j) * (3 * j - 1) / 2;
        std::int64_t g2 = static_cast<std::int64_t>(j) * (3 * j + 1) / 2;
        if (g1 > n && g2 > n) break;
        std::int64_t sign = (j % 2 == 1) ? 1 : -1;
        if (g1 <= n) sum += sign * p[n - g1];
        if (g2 <= n) sum += sign * p[n - g2];
      }
      p[n] = sum;
    }
    return p;
  }();
  return table[k];
}

std::int64_t num_abelian_groups(std::int64_t n) {
  std::int64_t result = 1;
  for (const auto& [p, e] : factorize(n)) result *= partition_count(e);
  return result;
}

double zeta_value(int k, double tol) {
  if (k <= 1) throw std::invalid_argument("zeta_value: k must be >= 2");
  if (!(tol > 0)) throw std::invalid_argument("zeta_value: tol must be positive");
  // With the midpoint tail correction the error is at most M^-k / 2.
  double m_needed = std::pow(2.0 * tol, -1.0 / k);
  if (m_needed > 2e8) throw std::invalid_argument("zeta_value: tolerance unattainable");
  std::int64_t M = std::max<std::int64_t>(16, static_cast<std::int64_t>(m_needed) + 1);
  long double sum = 0.0L;
  for (std::int64_t m = M; m >= 1; --m) sum += std::pow(static_cast<long double>(m), -k);
  long double lo = std::pow(static_cast<long double>(M + 1), 1 - k) / (k - 1);
  long double hi = std::pow(static_cast<long double>(M), 1 - k) / (k - 1);
  return static_cast<double>(sum + (lo + hi) / 2.0L);
}

}  // namespace latzeta::arith
