#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "latzeta/errors.hpp"

namespace latzeta::lattice_enum {

// Reduced upper-triangular integer column basis of a finite-index sublattice
// of Z^d. Column j generates "degree j"; rows are indexed by coefficient
// degree 0..d-1. Diagonal entries are >= 1 and every off-diagonal entry in
// row i lies in [0, entry(i,i)), so each sublattice has exactly one basis.
// det = product of the diagonal = index of the sublattice.
class HnfBasis {
 public:
  explicit HnfBasis(int d);  // identity basis (the full lattice Z^d)

  int dim() const { return d_; }
  std::int64_t entry(int i, int j) const { return m_[static_cast<std::size_t>(i * d_ + j)]; }
  void set_entry(int i, int j, std::int64_t v);  // enforces triangular/reduced form
  std::int64_t det() const;
  std::vector<std::int64_t> column(int j) const;

  bool operator==(const HnfBasis& other) const { return d_ == other.d_ && m_ == other.m_; }

 private:
  int d_;
  std::vector<std::int64_t> m_;  // row-major d x d
};

// (v_0, ..., v_{d-1}) -> (0, v_0, ..., v_{d-2}): multiplication by X on
// coefficient vectors of degree < d-1.
std::vector<std::int64_t> shift(const std::vector<std::int64_t>& v);

// True iff v is an integer combination of the columns (back-substitution
// from the last row up, each step requiring exact division by the diagonal).
bool contains(const HnfBasis& H, const std::vector<std::int64_t>& v);

// The idealizing condition: for every 0 <= j <= d-2 the shifted j-th column
// lies back in the lattice. The last column is exempt (a suitable monic
// polynomial of degree d always absorbs it); d = 1 is vacuously true.
bool is_idealizable(const HnfBasis& H);

// For all 1 <= j <= d-1: entry(j,j) divides entry(i,k) whenever i,k <= j.
bool check_divisibility(const HnfBasis& H);

// Number of reduced HNF bases of determinant n in dimension d, computed
// per-diagonal in closed form (prod_i a_ii^(d-1-i)) without enumeration.
// Used as the fail-fast budget guard.
mpz_class count_hnf_bases(int d, std::int64_t n);

// Visits every reduced basis of determinant n exactly once, in a fixed
// deterministic order. The visited object is reused between calls; copy it
// if it must outlive the visit.
void for_each_hnf(int d, std::int64_t n, const std::function<void(const HnfBasis&)>& visit);

// Brute-force count of reduced idealizable bases of determinant n.
std::int64_t count_idealizable(int d, std::int64_t n, const EnumOptions& opts = {});

// Brute-force count of all reduced bases of determinant n.
std::int64_t count_all_sublattices(int d, std::int64_t n, const EnumOptions& opts = {});

// All border columns beta (entries row-reduced: beta_i in [0, entry(i,i)))
// such that appending (beta, 1) as a new last column yields a reduced
// idealizable basis in dimension d+1. Rejects non-idealizable input.
std::vector<std::vector<std::int64_t>> enumerate_extensions(const HnfBasis& H);

}  // namespace latzeta::lattice_enum
