// Enumeration of finite-index sublattices of Z^d in reduced column-HNF form,
// the shift-based idealizing predicate, bordered-column extension counting,
// and the brute-force counting oracles built on top of the enumeration.

#include "latzeta/lattice_enum.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "latzeta/arith.hpp"

namespace latzeta::lattice_enum {

HnfBasis::HnfBasis(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("HnfBasis: dimension must be >= 1");
  m_.assign(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m_[static_cast<std::size_t>(i * d_ + i)] = 1;
}

void HnfBasis::set_entry(int i, int j, std::int64_t v) {
  if (i < 0 || j < 0 || i >= d_ || j >= d_) throw std::out_of_range("HnfBasis::set_entry");
  if (i > j && v != 0)
    throw std::invalid_argument("HnfBasis: below-diagonal entries must be zero");
  if (i == j) {
    if (v < 1) throw std::invalid_argument("HnfBasis: diagonal entries must be >= 1");
    for (int k = i + 1; k < d_; ++k)
      if (entry(i, k) >= v)
        throw std::invalid_argument("HnfBasis: row entry violates reduction after diagonal change");
  } else if (i < j) {
    if (v < 0 || v >= entry(i, i))
      throw std::invalid_argument("HnfBasis: off-diagonal entry must lie in [0, diagonal)");
  }
  m_[static_cast<std::size_t>(i * d_ + j)] = v;
}

std::int64_t HnfBasis::det() const {
  std::int64_t p = 1;
  for (int i = 0; i < d_; ++i) p *= entry(i, i);
  return p;
}

std::vector<std::int64_t> HnfBasis::column(int j) const {
  if (j < 0 || j >= d_) throw std::out_of_range("HnfBasis::column");
  std::vector<std::int64_t> v(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) v[static_cast<std::size_t>(i)] = entry(i, j);
  return v;
}

std::vector<std::int64_t> shift(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(v.size(), 0);
  for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
  return out;
}

namespace {

// Back-substitution on a scratch copy; avoids allocation in the hot loops.
bool contains_impl(const HnfBasis& H, std::vector<std::int64_t>& v) {
  for (int i = H.dim() - 1; i >= 0; --i) {
    const std::int64_t diag = H.entry(i, i);
    const std::int64_t r = v[static_cast<std::size_t>(i)];
    if (r % diag != 0) return false;
    const std::int64_t x = r / diag;
    if (x != 0)
      for (int k = 0; k <= i; ++k) v[static_cast<std::size_t>(k)] -= x * H.entry(k, i);
  }
  return true;
}

// shift(column j) into a scratch vector, then membership in the full lattice.
// Testing against the full lattice is equivalent to the span of columns
// 0..j+1 because the shifted column vanishes in rows > j+1 and the basis is
// upper triangular, so back-substitution forces zero coefficients above.
bool shifted_column_in_lattice(const HnfBasis& H, int j, std::vector<std::int64_t>& scratch) {
  const int d = H.dim();
  scratch.resize(static_cast<std::size_t>(d));
  scratch[0] = 0;
  for (int i = 1; i < d; ++i) scratch[static_cast<std::size_t>(i)] = H.entry(i - 1, j);
  return contains_impl(H, scratch);
}

bool is_idealizable_impl(const HnfBasis& H, std::vector<std::int64_t>& scratch) {
  for (int j = 0; j + 1 < H.dim(); ++j)
    if (!shifted_column_in_lattice(H, j, scratch)) return false;
  return true;
}

void enum_diagonals(int cols_left, std::int64_t n, std::vector<std::int64_t>& diag,
                    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (cols_left == 1) {
    diag.push_back(n);
    fn(diag);
    diag.pop_back();
    return;
  }
  for (std::int64_t a : arith::divisors(n)) {
    diag.push_back(a);
    enum_diagonals(cols_left - 1, n / a, diag, fn);
    diag.pop_back();
  }
}

std::vector<std::vector<std::int64_t>> list_diagonals(int d, std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> diag;
  enum_diagonals(d, n, diag, [&](const std::vector<std::int64_t>& dg) { out.push_back(dg); });
  return out;
}

mpz_class fillings_for_diagonal(const std::vector<std::int64_t>& diag) {
  mpz_class count = 1;
  const int d = static_cast<int>(diag.size());
  for (int i = 0; i < d; ++i) {
    mpz_class f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(diag[static_cast<std::size_t>(i)]),
                  static_cast<unsigned long>(d - 1 - i));
    count *= f;
  }
  return count;
}

// Visits every reduced filling of the given diagonal. Off-diagonal entries
// run in odometer order, last position fastest.
void visit_fillings(const std::vector<std::int64_t>& diag,
                    const std::function<void(const HnfBasis&)>& visit) {
  const int d = static_cast<int>(diag.size());
  HnfBasis H(d);
  for (int i = d - 1; i >= 0; --i) H.set_entry(i, i, diag[static_cast<std::size_t>(i)]);

  std::vector<std::pair<int, int>> pos;  // (i, j) with range diag[i] > 1
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < j; ++i)
      if (diag[static_cast<std::size_t>(i)] > 1) pos.emplace_back(i, j);

  visit(H);
  if (pos.empty()) return;
  while (true) {
    int k = static_cast<int>(pos.size()) - 1;
    for (; k >= 0; --k) {
      const auto [i, j] = pos[static_cast<std::size_t>(k)];
      const std::int64_t v = H.entry(i, j) + 1;
      if (v < diag[static_cast<std::size_t>(i)]) {
        H.set_entry(i, j, v);
        break;
      }
      H.set_entry(i, j, 0);
    }
    if (k < 0) break;
    visit(H);
  }
}

std::int64_t count_bases(int d, std::int64_t n, bool idealizable_only, const EnumOptions& opts) {
  if (d < 1) throw std::invalid_argument("count: dimension must be >= 1");
  if (n < 1) throw std::invalid_argument("count: determinant must be >= 1");
  const std::vector<std::vector<std::int64_t>> diagonals = list_diagonals(d, n);

  mpz_class total = 0;
  for (const auto& dg : diagonals) total += fillings_for_diagonal(dg);
  if (total > opts.budget)
    throw resource_error("enumeration budget exceeded: d=" + std::to_string(d) +
                         " n=" + std::to_string(n) + " bases=" + total.get_str());

  auto count_range = [&](std::size_t lo, std::size_t hi) {
    std::int64_t count = 0;
    std::vector<std::int64_t> scratch;
    for (std::size_t i = lo; i < hi; ++i)
      visit_fillings(diagonals[i], [&](const HnfBasis& H) {
        if (!idealizable_only || is_idealizable_impl(H, scratch)) ++count;
      });
    return count;
  };

  unsigned T = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                 : static_cast<unsigned>(opts.threads);
  if (T <= 1 || diagonals.size() < 2) return count_range(0, diagonals.size());

  T = std::min<unsigned>(T, static_cast<unsigned>(diagonals.size()));
  std::vector<std::int64_t> partial(T, 0);
  std::vector<std::exception_ptr> errors(T);
  std::vector<std::thread> pool;
  std::size_t chunk = (diagonals.size() + T - 1) / T;
  for (unsigned t = 0; t < T; ++t) {
    std::size_t lo = std::min(diagonals.size(), t * chunk);
    std::size_t hi = std::min(diagonals.size(), lo + chunk);
    pool.emplace_back([&, lo, hi, t] {
      try {
        partial[t] = count_range(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::int64_t count = 0;
  for (std::int64_t c : partial) count += c;
  return count;
}

}  // namespace

bool contains(const HnfBasis& H, const std::vector<std::int64_t>& v) {
  if (static_cast<int>(v.size()) != H.dim())
    throw std::invalid_argument("contains: vector length must equal dimension");
  std::vector<std::int64_t> scratch = v;
  return contains_impl(H, scratch);
}

bool is_idealizable(const HnfBasis& H) {
  std::vector<std::int64_t> scratch;
  return is_idealizable_impl(H, scratch);
}

bool check_divisibility(const HnfBasis& H) {
  for (int j = 1; j < H.dim(); ++j) {
    const std::int64_t a = H.entry(j, j);
    for (int i = 0; i <= j; ++i)
      for (int k = 0; k <= j; ++k)
        if (H.entry(i, k) % a != 0) return false;
  }
  return true;
}

mpz_class count_hnf_bases(int d, std::int64_t n) {
  if (d < 1) throw std::invalid_argument("count_hnf_bases: dimension must be >= 1");
  if (n < 1) throw std::invalid_argument("count_hnf_bases: determinant must be >= 1");
  mpz_class total = 0;
  std::vector<std::int64_t> diag;
  enum_diagonals(d, n, diag, [&](const std::vector<std::int64_t>& dg) {
    total += fillings_for_diagonal(dg);
  });
  return total;
}

void for_each_hnf(int d, std::int64_t n, const std::function<void(const HnfBasis&)>& visit) {
  if (d < 1) throw std::invalid_argument("for_each_hnf: dimension must be >= 1");
  if (n < 1) throw std::invalid_argument("for_each_hnf: determinant must be >= 1");
  std::vector<std::int64_t> diag;
  enum_diagonals(d, n, diag, [&](const std::vector<std::int64_t>& dg) {
    visit_fillings(dg, visit);
  });
}

std::int64_t count_idealizable(int d, std::int64_t n, const EnumOptions& opts) {
  return count_bases(d, n, true, opts);
}

std::int64_t count_all_sublattices(int d, std::int64_t n, const EnumOptions& opts) {
  return count_bases(d, n, false, opts);
}

std::vector<std::vector<std::int64_t>> enumerate_extensions(const HnfBasis& H) {
  if (!is_idealizable(H))
    throw std::invalid_argument("enumerate_extensions: basis is not idealizable");
  const int d = H.dim();
  HnfBasis B(d + 1);
  for (int j = 0; j < d; ++j)
    for (int i = j; i >= 0; --i) B.set_entry(i, j, H.entry(i, j));
  // bordered column starts at zero; bottom-right diagonal stays 1
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> beta(static_cast<std::size_t>(d), 0);
  std::vector<std::int64_t> scratch;
  while (true) {
    for (int i = 0; i < d; ++i) B.set_entry(i, d, beta[static_cast<std::size_t>(i)]);
    if (is_idealizable_impl(B, scratch)) out.push_back(beta);
    int k = d - 1;
    for (; k >= 0; --k) {
      if (beta[static_cast<std::size_t>(k)] + 1 < H.entry(k, k)) {
        ++beta[static_cast<std::size_t>(k)];
        break;
      }
      beta[static_cast<std::size_t>(k)] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace latzeta::lattice_enum
