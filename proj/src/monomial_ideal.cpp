#include "semiglue/monomial_ideal.hpp"

#include <algorithm>

namespace semiglue {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::vector<Monomial> saturate_by_variable(const std::vector<Monomial>& gens, std::size_t j) {
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    NatVector e = g.exponents();
    e.set(j, 0);
    out.emplace_back(std::move(e));
  }
  return minimalize(std::move(out));
}

std::vector<Monomial> intersect(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(lcm_monomial(x, y));
  return minimalize(std::move(out));
}

bool same_monomial_ideal(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  return minimalize(a) == minimalize(b);
}

namespace {

std::size_t count_rec(const std::vector<Monomial>& gens, std::vector<Int>& e, std::size_t i, Int left) {
  if (i + 1 == e.size()) {
    e[i] = left;
    return in_monomial_ideal(Monomial(NatVector(e)), gens) ? 0 : 1;
  }
  std::size_t total = 0;
  for (Int k = 0; k <= left; ++k) {
    e[i] = k;
    total += count_rec(gens, e, i + 1, left - k);
  }
  e[i] = 0;
  return total;
}

}  // namespace

std::size_t count_standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars, Int degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  std::vector<Int> e(nvars, 0);
  return count_rec(gens, e, 0, degree);
}

}  // namespace semiglue
