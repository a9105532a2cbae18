#pragma once

#include <gmpxx.h>

#include <vector>

#include "semiglue/monomial.hpp"

namespace semiglue {

// Exact feasibility of { lambda >= 0 : sum_j lambda_j * columns[j] = rhs }
// over Q, by a two-phase tableau simplex with Bland's rule.
bool nonneg_combination_exists(const std::vector<NatVector>& columns, const NatVector& rhs);

// Inequalities c with c . y >= 0 describing cone(generators), by
// Fourier-Motzkin elimination of the combination coefficients.
std::vector<std::vector<mpz_class>> fourier_motzkin_cone(const std::vector<NatVector>& generators);

NatVector primitive(const NatVector& v);

// Rational polyhedral cone spanned by finitely many vectors of N^d.
class PolyhedralCone {
 public:
  explicit PolyhedralCone(std::vector<NatVector> generators);

  std::size_t dim() const { return dim_; }
  // Fourier-Motzkin inequalities for d <= 3, exact simplex otherwise.
  bool contains(const NatVector& x) const;
  bool contains_by_inequalities(const NatVector& x) const;
  bool contains_by_simplex(const NatVector& x) const;
  // Primitive vectors spanning the one-dimensional faces, sorted.
  std::vector<NatVector> extremal_rays() const;

  static constexpr std::size_t kInequalityDimLimit = 3;

 private:
  std::size_t dim_;
  std::vector<NatVector> gens_;
  std::vector<std::vector<mpz_class>> inequalities_;
};

}  // namespace semiglue
