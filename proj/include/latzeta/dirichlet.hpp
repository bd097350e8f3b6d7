#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace latzeta::dirichlet {

// Exact coefficients a_1..a_N of a Dirichlet series sum a_n n^-s.
// Entries are nonnegative arbitrary-precision integers; everything is exact
// for indices <= N and nothing is inferred beyond N.
class CoeffTable {
 public:
  explicit CoeffTable(std::int64_t n);  // all-zero table of size n >= 1

  // Multiplicative unit: a_1 = 1, rest 0.
  static CoeffTable unit(std::int64_t n);

  std::int64_t size() const { return static_cast<std::int64_t>(a_.size()); }

  // 1-based coefficient access, 1 <= n <= size().
  const mpz_class& at(std::int64_t n) const;
  mpz_class& at(std::int64_t n);

  bool operator==(const CoeffTable& other) const { return a_ == other.a_; }

  // CSV with an "n,coefficient" header; integers in decimal.
  std::string to_csv() const;
  // {"N": ..., "coeffs": ["...", ...]} with decimal-string entries.
  std::string to_json() const;
  static CoeffTable from_json(const std::string& text);

 private:
  std::vector<mpz_class> a_;
};

// Coefficients of zeta(a*s - b): entry m^b at n = m^a, zero elsewhere.
// (a,b) = (1,0) is the plain Riemann zeta; (i,i) gives zeta(i(s-1)).
CoeffTable zeta_affine_coeffs(int a, int b, std::int64_t N);

// Exact Dirichlet convolution c_n = sum_{d|n} A_d B_{n/d}, truncated to N.
CoeffTable convolve(const CoeffTable& A, const CoeffTable& B);

// Left fold of convolve over a nonempty list of equal-size tables.
CoeffTable product(const std::vector<CoeffTable>& factors);

// c_n^(d): coefficients of [prod_{i=1}^{d-1} zeta(i(s-1))] * zeta(ds).
// d = 1 degenerates to plain zeta(s).
CoeffTable zeta_d_coeffs(int d, std::int64_t N);

// Coefficients of prod_{i>=1} zeta(i(s-1)) truncated exactly: factor i
// first differs from the unit at index 2^i, so i <= floor(log2 N) suffices.
CoeffTable zeta_ZX_coeffs(std::int64_t N);

// Coefficients of prod_{d>=1} zeta(ds), same exact truncation argument.
// Entry n counts abelian groups of order n.
CoeffTable abelian_group_coeffs(std::int64_t N);

// Coefficients of zeta(s) zeta(s-1) ... zeta(s-d+1): entry n counts all
// finite-index subgroups of Z^d of index n.
CoeffTable all_sublattice_coeffs(int d, std::int64_t N);

// Prefix sums A_n = sum_{m<=n} a_m, index n at position n-1.
std::vector<mpz_class> partial_sums(const CoeffTable& A);

// [a_1, a_p, a_{p^2}, ..., a_{p^K}] read from the table; requires p^K <= N.
std::vector<mpz_class> euler_factor(const CoeffTable& A, std::int64_t p, int K);

struct MultiplicativityResult {
  bool ok;
  std::int64_t m = 0, n = 0;  // smallest violating coprime pair when !ok
};

// True iff a_1 = 1 and a_{mn} = a_m a_n for all coprime m,n with mn <= N.
// The witness is ordered by product mn, then by m.
MultiplicativityResult is_multiplicative(const CoeffTable& A);

// Assembles a multiplicative table from local data: local(p, K) returns
// [a_{p^0}, ..., a_{p^K}] for the largest K with p^K <= N.
CoeffTable multiplicative_from_local(
    std::int64_t N,
    const std::function<std::vector<std::int64_t>(std::int64_t p, int K)>& local,
    int threads = 1);

}  // namespace latzeta::dirichlet
