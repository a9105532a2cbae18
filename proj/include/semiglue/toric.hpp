#pragma once

#include <string>
#include <vector>

#include "semiglue/deadline.hpp"
#include "semiglue/groebner.hpp"
#include "semiglue/semigroups.hpp"

namespace semiglue {

// Binomial ideal over named variables, each carrying its semigroup degree.
struct BinomialIdeal {
  std::vector<std::string> variables;
  std::vector<Binomial> generators;
  std::vector<NatVector> degree_map;

  std::size_t nvars() const { return variables.size(); }
  NatVector degree(const Monomial& m) const;
  bool is_homogeneous() const;
};

// Kernel of x_i -> t^{a_i}, from a lattice basis of ker A saturated by each
// variable in turn. The generators form the reduced Groebner basis under
// degrevlex x_1 > ... > x_n.
BinomialIdeal toric_ideal(const AffineSemigroup& s, const Deadline& deadline = Deadline::none());
// Same ideal and basis by elimination of t from x_i - t^{a_i}.
BinomialIdeal toric_ideal_elimination(const AffineSemigroup& s, const Deadline& deadline = Deadline::none());
BinomialIdeal toric_ideal(const NumericalSemigroup& s, const Deadline& deadline = Deadline::none());

// Reduced degrevlex basis of the affine ideal, homogenized with x0 appended
// as the lowest variable; degrees x_i -> (n_i, n_e - n_i), x0 -> (0, n_e).
BinomialIdeal projective_closure_ideal(const NumericalSemigroup& s, const Deadline& deadline = Deadline::none());

// G1 u G2 u {x^b - y^a} over x_1..x_l, y_1..y_k.
BinomialIdeal glued_ideal_generators(const GluingSpec& spec, const std::vector<Binomial>& g1,
                                     const std::vector<Binomial>& g2);

// Reduced Groebner basis under degrevlex in the ambient variable order.
GroebnerBasis canonical_basis(const BinomialIdeal& ideal, const Deadline& deadline = Deadline::none());
bool ideal_equals(const BinomialIdeal& a, const BinomialIdeal& b, const Deadline& deadline = Deadline::none());

// Copies b into a ring with `total` variables starting at position `offset`.
Binomial embed(const Binomial& b, std::size_t total, std::size_t offset);

}  // namespace semiglue
