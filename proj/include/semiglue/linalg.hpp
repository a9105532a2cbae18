#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "semiglue/monomial.hpp"

namespace semiglue {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Rank over Q by fraction-free (Bareiss) elimination; exact.
std::size_t exact_rank(IntegerMatrix rows);

// Rank of the integer matrix whose rows are the given vectors.
std::size_t exact_rank(const std::vector<NatVector>& rows);

// LLL reduction of linearly independent rows, delta = 3/4, exact.
void lll_reduce(IntegerMatrix& rows);

// LLL-reduced basis of {x in Z^n : sum x_i columns[i] = 0}, from a
// unimodular row reduction of [columns | identity].
std::vector<std::vector<Int>> integer_kernel(const std::vector<NatVector>& columns);

// Subgroup of Z^d spanned by integer vectors, kept as an echelon basis
// obtained by Euclidean row operations.
class IntegerLattice {
 public:
  explicit IntegerLattice(const std::vector<NatVector>& generators);

  std::size_t rank() const { return basis_.size(); }
  bool contains(const std::vector<Int>& x) const;
  bool contains(const NatVector& x) const { return contains(x.entries()); }

 private:
  std::size_t dim_;
  IntegerMatrix basis_;             // rows in echelon form, positive pivots
  std::vector<std::size_t> pivots_;
};

}  // namespace semiglue
