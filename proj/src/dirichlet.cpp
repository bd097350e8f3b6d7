// Exact Dirichlet-series coefficient algebra: shifted-zeta generators,
// convolution products, Euler factors, multiplicativity scans, and the
// multiplicative assembly used by the ideal-counting tables.

#include "latzeta/dirichlet.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "latzeta/arith.hpp"

namespace latzeta::dirichlet {

CoeffTable::CoeffTable(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("CoeffTable: size must be >= 1");
  a_.assign(static_cast<std::size_t>(n), mpz_class(0));
}

CoeffTable CoeffTable::unit(std::int64_t n) {
  CoeffTable t(n);
  t.a_[0] = 1;
  return t;
}

const mpz_class& CoeffTable::at(std::int64_t n) const {
  if (n < 1 || n > size()) throw std::out_of_range("CoeffTable::at");
  return a_[static_cast<std::size_t>(n - 1)];
}

mpz_class& CoeffTable::at(std::int64_t n) {
  if (n < 1 || n > size()) throw std::out_of_range("CoeffTable::at");
  return a_[static_cast<std::size_t>(n - 1)];
}

std::string CoeffTable::to_csv() const {
  std::ostringstream out;
  out << "n,coefficient\n";
  for (std::int64_t n = 1; n <= size(); ++n) out << n << ',' << a_[n - 1].get_str() << '\n';
  return out.str();
}

std::string CoeffTable::to_json() const {
  nlohmann::json j;
  j["N"] = size();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const mpz_class& v : a_) coeffs.push_back(v.get_str());
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

CoeffTable CoeffTable::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::int64_t n = j.at("N").get<std::int64_t>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<std::int64_t>(coeffs.size()) != n)
    throw std::invalid_argument("CoeffTable::from_json: N does not match coeffs length");
  CoeffTable t(n);
  for (std::int64_t i = 0; i < n; ++i)
    t.a_[static_cast<std::size_t>(i)] = mpz_class(coeffs[static_cast<std::size_t>(i)].get<std::string>());
  return t;
}

CoeffTable zeta_affine_coeffs(int a, int b, std::int64_t N) {
  if (a < 1) throw std::invalid_argument("zeta_affine_coeffs: a must be >= 1");
  if (b < 0) throw std::invalid_argument("zeta_affine_coeffs: b must be >= 0");
  CoeffTable t(N);
  for (std::int64_t m = 1;; ++m) {
    // n = m^a with overflow guard
    std::int64_t n = 1;
    bool over = false;
    for (int i = 0; i < a; ++i) {
      if (n > N / m) {
        over = true;
        break;
      }
      n *= m;
    }
    if (over || n > N) break;
    mpz_class& entry = t.at(n);
    mpz_ui_pow_ui(entry.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(b));
  }
  return t;
}

CoeffTable convolve(const CoeffTable& A, const CoeffTable& B) {
  const std::int64_t N = A.size();
  if (B.size() != N) throw std::invalid_argument("convolve: mismatched table sizes");
  CoeffTable C(N);
  for (std::int64_t i = 1; i <= N; ++i) {
    const mpz_class& ai = A.at(i);
    if (ai == 0) continue;
    const std::int64_t jmax = N / i;
    for (std::int64_t j = 1; j <= jmax; ++j) {
      const mpz_class& bj = B.at(j);
      if (bj == 0) continue;
      mpz_class& c = C.at(i * j);
      mpz_addmul(c.get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
    }
  }
  return C;
}

CoeffTable product(const std::vector<CoeffTable>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: empty factor list");
  CoeffTable acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = convolve(acc, factors[i]);
  return acc;
}

CoeffTable zeta_d_coeffs(int d, std::int64_t N) {
  if (d < 1) throw std::invalid_argument("zeta_d_coeffs: d must be >= 1");
  CoeffTable acc = zeta_affine_coeffs(d, 0, N);  // zeta(ds); plain zeta for d = 1
  for (int i = 1; i <= d - 1; ++i) acc = convolve(acc, zeta_affine_coeffs(i, i, N));
  return acc;
}

CoeffTable zeta_ZX_coeffs(std::int64_t N) {
  CoeffTable acc = CoeffTable::unit(N);
  // Factor i first deviates from the unit series at index 2^i.
  for (int i = 1; (std::int64_t{1} << i) <= N; ++i) acc = convolve(acc, zeta_affine_coeffs(i, i, N));
  return acc;
}

CoeffTable abelian_group_coeffs(std::int64_t N) {
  CoeffTable acc = CoeffTable::unit(N);
  for (int d = 1; (std::int64_t{1} << d) <= N; ++d) acc = convolve(acc, zeta_affine_coeffs(d, 0, N));
  return acc;
}

CoeffTable all_sublattice_coeffs(int d, std::int64_t N) {
  if (d < 1) throw std::invalid_argument("all_sublattice_coeffs: d must be >= 1");
  CoeffTable acc = zeta_affine_coeffs(1, 0, N);
  for (int j = 1; j <= d - 1; ++j) acc = convolve(acc, zeta_affine_coeffs(1, j, N));
  return acc;
}

std::vector<mpz_class> partial_sums(const CoeffTable& A) {
  std::vector<mpz_class> sums(static_cast<std::size_t>(A.size()));
  mpz_class acc = 0;
  for (std::int64_t n = 1; n <= A.size(); ++n) {
    acc += A.at(n);
    sums[static_cast<std::size_t>(n - 1)] = acc;
  }
  return sums;
}

std::vector<mpz_class> euler_factor(const CoeffTable& A, std::int64_t p, int K) {
  if (!arith::is_prime(p)) throw std::invalid_argument("euler_factor: p must be prime");
  if (K < 0) throw std::invalid_argument("euler_factor: K must be >= 0");
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(K) + 1);
  std::int64_t pk = 1;
  for (int k = 0; k <= K; ++k) {
    if (pk > A.size()) throw std::invalid_argument("euler_factor: p^K exceeds table bound");
    out.push_back(A.at(pk));
    if (k < K) {
      if (pk > A.size() / p) throw std::invalid_argument("euler_factor: p^K exceeds table bound");
      pk *= p;
    }
  }
  return out;
}

MultiplicativityResult is_multiplicative(const CoeffTable& A) {
  const std::int64_t N = A.size();
  if (A.at(1) != 1) return {false, 1, 1};
  std::vector<std::int32_t> spf = arith::smallest_prime_factor_sieve(N);
  for (std::int64_t P = 2; P <= N; ++P) {
    // unitary divisors of P: products of full prime-power parts
    std::int64_t rest = P;
    std::int64_t parts[16];
    int r = 0;
    while (rest > 1) {
      std::int64_t p = spf[rest];
      std::int64_t q = 1;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
      }
      parts[r++] = q;
    }
    if (r < 2) continue;  // prime powers have no nontrivial coprime split
    std::int64_t best_m = 0;
    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
      std::int64_t m = 1;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) m *= parts[i];
      std::int64_t n = P / m;
      if (m > n) continue;
      if (A.at(P) != A.at(m) * A.at(n))
        if (best_m == 0 || m < best_m) best_m = m;
    }
    if (best_m != 0) return {false, best_m, P / best_m};
  }
  return {true, 0, 0};
}

CoeffTable multiplicative_from_local(
    std::int64_t N,
    const std::function<std::vector<std::int64_t>(std::int64_t p, int K)>& local,
    int threads) {
  if (N < 1) throw std::invalid_argument("multiplicative_from_local: N must be >= 1");
  std::vector<std::int32_t> spf = arith::smallest_prime_factor_sieve(N);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= N; ++p)
    if (spf[p] == p) primes.push_back(p);

  // local exponent range per prime: largest K with p^K <= N
  std::vector<std::vector<std::int64_t>> counts(primes.size());
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      std::int64_t p = primes[i];
      int K = 0;
      std::int64_t pk = 1;
      while (pk <= N / p) {
        pk *= p;
        ++K;
      }
      counts[i] = local(p, K);
      if (counts[i].size() != static_cast<std::size_t>(K) + 1 || counts[i][0] != 1)
        throw std::invalid_argument("multiplicative_from_local: bad local data");
    }
  };

  unsigned T = threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                            : static_cast<unsigned>(threads);
  if (T <= 1 || primes.size() < 2 * T) {
    run(0, primes.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(T);
    std::size_t chunk = (primes.size() + T - 1) / T;
    for (unsigned t = 0; t < T; ++t) {
      std::size_t lo = std::min(primes.size(), t * chunk);
      std::size_t hi = std::min(primes.size(), lo + chunk);
      pool.emplace_back([&, lo, hi, t] {
        try {
          run(lo, hi);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<std::int32_t> prime_index(static_cast<std::size_t>(N) + 1, -1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    prime_index[static_cast<std::size_t>(primes[i])] = static_cast<std::int32_t>(i);

  CoeffTable t = CoeffTable::unit(N);
  for (std::int64_t n = 2; n <= N; ++n) {
    std::int64_t p = spf[n];
    std::int64_t m = n;
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    t.at(n) = t.at(m) * counts[static_cast<std::size_t>(prime_index[static_cast<std::size_t>(p)])]
                              [static_cast<std::size_t>(k)];
  }
  return t;
}

}  // namespace latzeta::dirichlet
