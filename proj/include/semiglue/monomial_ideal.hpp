#pragma once

#include <vector>

#include "semiglue/monomial.hpp"

namespace semiglue {

// Monomial ideals are handled through generator lists; every function
// returns minimal generators sorted lexicographically by exponent.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);
bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens);
// I : x_j^infinity.
std::vector<Monomial> saturate_by_variable(const std::vector<Monomial>& gens, std::size_t j);
std::vector<Monomial> intersect(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
bool same_monomial_ideal(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
// Monomials of total degree d outside the ideal, in nvars variables.
std::size_t count_standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars, Int degree);

}  // namespace semiglue
