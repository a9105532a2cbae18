#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "semiglue/deadline.hpp"
#include "semiglue/monomial.hpp"

namespace semiglue {

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Binomial> elements;
  bool reduced = false;
  bool minimal = false;

  std::vector<Monomial> leads() const;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skips = 0;
};

// Rewrites m by the first basis element (in basis order) whose lead divides it
// until no lead divides it.
Monomial reduce_monomial(const Monomial& m, std::span<const Binomial> basis, const MonomialOrder& order);

// Remainder of b on division by basis; the zero marker iff b reduces to zero.
// Global orders only.
Binomial normal_form(const Binomial& b, std::span<const Binomial> basis, const MonomialOrder& order);

// Reduced Groebner basis, sorted by increasing lead. Global orders only.
GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order,
                         const Deadline& deadline = Deadline::none(), BuchbergerStats* stats = nullptr);

// Buchberger's criterion: every S-pair of candidate reduces to zero.
bool is_groebner(std::span<const Binomial> candidate, const MonomialOrder& order);

// Appends x0 as a new last variable and homogenizes every element. The input
// must be reduced under a degree/revlex order; the result is reduced under
// the same order extended with x0 lowest.
GroebnerBasis homogenize_ideal(const GroebnerBasis& gb);

// Minimal standard basis for a negative-degree order, computed through the
// homogenized global order and dehomogenized.
GroebnerBasis standard_basis_local(std::span<const Binomial> gens, const MonomialOrderSpec& local,
                                   const Deadline& deadline = Deadline::none());

// Lowest-degree homogeneous summand of each element of a standard basis:
// the binomial itself when both sides share a degree, else the lower-degree
// monomial. Throws InputError if basis is not a standard basis for local.
using InitialForm = std::variant<Binomial, Monomial>;
std::vector<InitialForm> initial_forms_ideal(std::span<const Binomial> basis, const MonomialOrderSpec& local);

}  // namespace semiglue
