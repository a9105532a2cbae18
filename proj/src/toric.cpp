#include "semiglue/toric.hpp"

#include <algorithm>
#include <numeric>

#include "semiglue/linalg.hpp"

namespace semiglue {

NatVector BinomialIdeal::degree(const Monomial& m) const {
  if (m.nvars() != degree_map.size()) throw InputError("monomial and ideal have different variable sets");
  NatVector d(degree_map.front().dim());
  for (std::size_t i = 0; i < m.nvars(); ++i) d += degree_map[i].scaled(m[i]);
  return d;
}

bool BinomialIdeal::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const Binomial& g) { return degree(g.lead()) == degree(g.tail()); });
}

Binomial embed(const Binomial& b, std::size_t total, std::size_t offset) {
  if (offset + b.nvars() > total) throw InputError("embedding does not fit the target ring");
  auto place = [&](const Monomial& m) {
    NatVector e(total);
    for (std::size_t i = 0; i < m.nvars(); ++i) e.set(offset + i, m[i]);
    return Monomial(std::move(e));
  };
  return Binomial(place(b.lead()), place(b.tail()));
}

namespace {

// Both sides divided by their common monomial factor.
Binomial strip_gcd(const Binomial& b) {
  const Monomial g = gcd_monomial(b.lead(), b.tail());
  return Binomial(quotient(b.lead(), g), quotient(b.tail(), g));
}

BinomialIdeal sorted_ideal(const AffineSemigroup& s, std::vector<Binomial> gens) {
  const std::size_t n = s.size();
  MonomialOrder x_order(MonomialOrderSpec::degrevlex(n));
  BinomialIdeal out{default_variable_names(n), std::move(gens), s.generators()};
  for (auto& g : out.generators) g = g.normalized(x_order);
  std::sort(out.generators.begin(), out.generators.end(), [&](const Binomial& a, const Binomial& b) {
    return x_order.compare(a.lead(), b.lead()) < 0;
  });
  if (!out.is_homogeneous()) throw AlgebraError("toric ideal computation produced a non-homogeneous binomial");
  return out;
}

}  // namespace

BinomialIdeal toric_ideal(const AffineSemigroup& s, const Deadline& deadline) {
  const std::size_t n = s.size();
  std::vector<Binomial> gens;
  for (const auto& u : integer_kernel(s.generators())) {
    NatVector plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) (u[i] > 0 ? plus : minus).set(i, u[i] > 0 ? u[i] : checked_sub(0, u[i]));
    gens.emplace_back(Monomial(std::move(plus)), Monomial(std::move(minus)));
  }
  std::vector<Int> weights;
  for (const auto& g : s.generators()) weights.push_back(g.total());
  // Saturate the lattice basis ideal by one variable at a time: with that
  // variable last in a weighted revlex order, dividing a Groebner basis by
  // its powers gives a Groebner basis of the saturation.
  for (std::size_t v = 0; v < n && !gens.empty(); ++v) {
    std::vector<std::size_t> priority;
    for (std::size_t i = 0; i < n; ++i)
      if (i != v) priority.push_back(i);
    priority.push_back(v);
    auto gb = buchberger(gens, MonomialOrder::weighted_revlex(weights, priority), deadline);
    gens.clear();
    for (const auto& g : gb.elements) gens.push_back(strip_gcd(g));
  }
  if (gens.empty()) return sorted_ideal(s, {});
  auto gb = buchberger(gens, MonomialOrder(MonomialOrderSpec::degrevlex(n)), deadline);
  return sorted_ideal(s, gb.elements);
}

BinomialIdeal toric_ideal_elimination(const AffineSemigroup& s, const Deadline& deadline) {
  const std::size_t n = s.size(), d = s.dim(), total = n + d;
  std::vector<Binomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    NatVector x(total), t(total);
    x.set(i, 1);
    for (std::size_t c = 0; c < d; ++c) t.set(n + c, s[i][c]);
    gens.emplace_back(Monomial(std::move(x)), Monomial(std::move(t)));
  }
  std::vector<std::size_t> tvars(d), xvars(n);
  std::iota(tvars.begin(), tvars.end(), n);
  std::iota(xvars.begin(), xvars.end(), 0);
  auto gb = buchberger(gens, MonomialOrder::elimination(total, tvars, xvars), deadline);
  std::vector<Binomial> kept;
  for (const auto& g : gb.elements) {
    auto t_free = [&](const Monomial& m) {
      return std::all_of(tvars.begin(), tvars.end(), [&](std::size_t v) { return m[v] == 0; });
    };
    if (!t_free(g.lead()) || !t_free(g.tail())) continue;
    std::vector<Int> l(g.lead().exponents().begin(), g.lead().exponents().begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Int> r(g.tail().exponents().begin(), g.tail().exponents().begin() + static_cast<std::ptrdiff_t>(n));
    kept.emplace_back(Monomial(NatVector(std::move(l))), Monomial(NatVector(std::move(r))));
  }
  return sorted_ideal(s, std::move(kept));
}

BinomialIdeal toric_ideal(const NumericalSemigroup& s, const Deadline& deadline) {
  return toric_ideal(AffineSemigroup::from_numerical(s), deadline);
}

BinomialIdeal projective_closure_ideal(const NumericalSemigroup& s, const Deadline& deadline) {
  const std::size_t e = s.embedding_dimension();
  auto affine = toric_ideal(s, deadline);
  GroebnerBasis gb{MonomialOrder(MonomialOrderSpec::degrevlex(e)), affine.generators, true, true};
  auto h = homogenize_ideal(gb);
  BinomialIdeal out{default_variable_names(e), h.elements, AffineSemigroup::projective_closure(s).generators()};
  out.variables.push_back("x0");
  if (!out.is_homogeneous()) throw AlgebraError("homogenized generator is not homogeneous for the closure grading");
  return out;
}

BinomialIdeal glued_ideal_generators(const GluingSpec& spec, const std::vector<Binomial>& g1,
                                     const std::vector<Binomial>& g2) {
  auto violations = gluing_violations(spec);
  if (!violations.empty()) throw InputError("invalid gluing: " + violations.front());
  const std::size_t l = spec.left.embedding_dimension(), k = spec.right.embedding_dimension(), n = l + k;
  BinomialIdeal out;
  out.variables = default_variable_names(l, "x");
  for (const auto& y : default_variable_names(k, "y")) out.variables.push_back(y);
  const Int p = spec.p(), q = spec.q();
  for (Int m : spec.left.generators()) out.degree_map.push_back(NatVector{checked_mul(q, m)});
  for (Int m : spec.right.generators()) out.degree_map.push_back(NatVector{checked_mul(p, m)});
  for (const auto& g : g1) {
    if (g.nvars() != l) throw InputError("left basis has the wrong number of variables");
    out.generators.push_back(embed(g, n, 0));
  }
  for (const auto& g : g2) {
    if (g.nvars() != k) throw InputError("right basis has the wrong number of variables");
    out.generators.push_back(embed(g, n, l));
  }
  NatVector xb(n), ya(n);
  for (std::size_t i = 0; i < l; ++i) xb.set(i, spec.b[i]);
  for (std::size_t j = 0; j < k; ++j) ya.set(l + j, spec.a[j]);
  out.generators.emplace_back(Monomial(std::move(xb)), Monomial(std::move(ya)));
  if (!out.is_homogeneous()) throw AlgebraError("glued generators are not homogeneous");
  return out;
}

GroebnerBasis canonical_basis(const BinomialIdeal& ideal, const Deadline& deadline) {
  return buchberger(ideal.generators, MonomialOrder(MonomialOrderSpec::degrevlex(ideal.nvars())), deadline);
}

bool ideal_equals(const BinomialIdeal& a, const BinomialIdeal& b, const Deadline& deadline) {
  if (a.nvars() != b.nvars()) throw InputError("ideal comparison needs the same ambient variables");
  return canonical_basis(a, deadline).elements == canonical_basis(b, deadline).elements;
}

}  // namespace semiglue
