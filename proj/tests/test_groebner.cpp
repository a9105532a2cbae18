#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semiglue/groebner.hpp"
#include "semiglue/monomial_ideal.hpp"
#include "semiglue/toric.hpp"

using namespace semiglue;

namespace {

std::vector<Monomial> all_monomials(std::size_t n, Int max_degree) {
  std::vector<Monomial> out;
  oracle::monomials_up_to(std::vector<Int>(n, 1), max_degree,
                          [&](const std::vector<Int>& e) { out.emplace_back(NatVector(e)); });
  return out;
}

std::vector<Binomial> toric_357() {
  return {{Monomial{0, 2, 0}, Monomial{1, 0, 1}}, {Monomial{4, 0, 0}, Monomial{0, 1, 1}},
          {Monomial{3, 1, 0}, Monomial{0, 0, 2}}};
}

}  // namespace

TEST_CASE("order axioms hold exhaustively in low degree") {
  std::vector<MonomialOrderSpec> specs{
      MonomialOrderSpec::degrevlex(3), MonomialOrderSpec::degrevlex({2, 0, 1}),
      MonomialOrderSpec{Grading::Degree, TieBreak::Lex, {0, 1, 2}, std::nullopt},
      MonomialOrderSpec{Grading::NegativeDegree, TieBreak::Revlex, {1, 2, 0}, std::nullopt}};
  auto ms = all_monomials(3, 4);
  for (const auto& spec : specs) {
    MonomialOrder o(spec);
    for (const auto& a : ms)
      for (const auto& b : ms) {
        auto ab = o.compare(a, b);
        CHECK((ab == 0) == (a == b));
        CHECK(o.compare(b, a) == (0 <=> ab));
        // Multiplicative: a < b implies ac < bc.
        const Monomial c{1, 0, 2};
        CHECK(o.compare(a * c, b * c) == ab);
      }
    // Transitivity on a sample of triples.
    for (std::size_t i = 0; i + 2 < ms.size(); i += 3) {
      const auto &a = ms[i], &b = ms[i + 1], &c = ms[i + 2];
      if (o.compare(a, b) < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
    }
  }
}

TEST_CASE("negative degree order: x1 lowest, x1^3 below x2^2") {
  // x1 lowest means x2 > x1; the lower total degree wins.
  CHECK(compare(MonomialOrderSpec{Grading::NegativeDegree, TieBreak::Revlex, {1, 0}, std::nullopt}, Monomial{3, 0},
                Monomial{0, 2}) < 0);
}

TEST_CASE("monomial arithmetic") {
  CHECK(lcm_monomial(Monomial{2, 1, 0}, Monomial{1, 0, 1}) == Monomial{2, 1, 1});
  CHECK(divides(Monomial{1, 0, 0}, Monomial{2, 1, 0}));
  CHECK(quotient(Monomial{2, 1, 0}, Monomial{1, 0, 0}) == Monomial{1, 1, 0});
  CHECK_THROWS_AS(quotient(Monomial{1, 0, 0}, Monomial{0, 1, 0}), InputError);
  CHECK_THROWS_AS(NatVector({-1, 2}), InputError);
}

TEST_CASE("S-pairs") {
  MonomialOrder o(MonomialOrderSpec::degrevlex(3));
  Binomial f(Monomial{0, 2, 0}, Monomial{1, 0, 1}), g(Monomial{4, 0, 0}, Monomial{0, 1, 1});
  // lcm x1^4 x2^2: x1^4 f - x2^2 g = x2^3 x3 - x1^5 x3.
  auto s = s_pair(f, g, o);
  CHECK(same_up_to_sign(s, Binomial(Monomial{0, 3, 1}, Monomial{5, 0, 1})));
  CHECK(s_pair(f, f, o).is_zero());
  // Coprime leads reduce to zero by the pair.
  std::vector<Binomial> pair{Binomial(Monomial{3, 0, 0, 0}, Monomial{0, 1, 0, 0}),
                             Binomial(Monomial{0, 0, 2, 0}, Monomial{0, 0, 0, 1})};
  MonomialOrder o4(MonomialOrderSpec::degrevlex(4));
  CHECK(normal_form(s_pair(pair[0], pair[1], o4), pair, o4).is_zero());
}

TEST_CASE("homogenize and dehomogenize") {
  auto h = homogenize(Binomial(Monomial{5, 0, 0}, Monomial{0, 3, 0}), 2);
  CHECK(h == Binomial(Monomial{5, 0, 0}, Monomial{0, 3, 2}));
  CHECK(dehomogenize(h, 2) == Binomial(Monomial{5, 0, 0}, Monomial{0, 3, 0}));
  Binomial homog(Monomial{1, 1, 0, 0}, Monomial{0, 0, 2, 0});
  CHECK(homogenize(homog, 3) == homog);
  CHECK_THROWS_AS(homogenize(Binomial(Monomial{1, 1, 0}, Monomial{0, 0, 2}), 2), InputError);
}

TEST_CASE("normal forms and Buchberger") {
  MonomialOrder o2(MonomialOrderSpec::degrevlex(2));
  Binomial f(Monomial{5, 0}, Monomial{0, 3});
  std::vector<Binomial> basis{f};
  CHECK(normal_form(f, basis, o2).is_zero());
  CHECK(normal_form(Binomial(Monomial{7, 0}, Monomial{2, 3}), basis, o2).is_zero());
  auto principal = buchberger(basis, o2);
  CHECK(principal.elements == basis);

  MonomialOrder o3(MonomialOrderSpec::degrevlex(3));
  auto gb = buchberger(toric_357(), o3);
  CHECK(gb.leads() == std::vector<Monomial>{Monomial{0, 2, 0}, Monomial{3, 1, 0}, Monomial{4, 0, 0}});
  // Dropping x1^4 - x2 x3 or x2^2 - x1 x3 leaves a surviving S-pair. Dropping
  // the middle element leaves coprime leads, a basis of a smaller ideal.
  for (std::size_t drop = 0; drop < gb.elements.size(); ++drop) {
    auto partial = gb.elements;
    partial.erase(partial.begin() + static_cast<std::ptrdiff_t>(drop));
    CHECK(is_groebner(partial, o3) == (drop == 1));
    CHECK_FALSE(normal_form(gb.elements[drop], partial, o3).is_zero());
  }
}

TEST_CASE("reduced bases satisfy the defining properties on random binomial ideals") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 3 + rng() % 2;
    std::vector<Binomial> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Int> u(n), v(n);
      for (std::size_t i = 0; i < n; ++i) (rng() % 2 ? u : v)[i] = static_cast<Int>(rng() % 4);
      Binomial b{Monomial(NatVector(u)), Monomial(NatVector(v))};
      if (!b.is_zero()) gens.push_back(b);
    }
    if (gens.empty()) continue;
    MonomialOrder o(MonomialOrderSpec::degrevlex(n));
    BuchbergerStats stats;
    auto gb = buchberger(gens, o, Deadline::none(), &stats);
    CHECK(gb.reduced);
    CHECK(is_groebner(gb.elements, o));
    for (const auto& g : gens) CHECK(normal_form(g, gb.elements, o).is_zero());
    auto leads = gb.leads();
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      CHECK(gb.elements[i].is_normalized(o));
      if (i) CHECK(o.compare(leads[i - 1], leads[i]) < 0);
      for (std::size_t j = 0; j < gb.elements.size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(divides(leads[j], gb.elements[i].lead()));
        CHECK_FALSE(divides(leads[j], gb.elements[i].tail()));
      }
    }
    // The basis does not depend on the order of the input.
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(buchberger(gens, o).elements == gb.elements);
  }
}

TEST_CASE("homogenized basis keeps its leads") {
  MonomialOrder o3(MonomialOrderSpec::degrevlex(3));
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 30; ++iter) {
    auto s = oracle::random_numerical(rng, 4, 25);
    auto ideal = toric_ideal(s);
    const std::size_t e = s.embedding_dimension();
    GroebnerBasis gb{MonomialOrder(MonomialOrderSpec::degrevlex(e)), ideal.generators, true, true};
    auto h = homogenize_ideal(gb);
    REQUIRE(h.elements.size() == gb.elements.size());
    MonomialOrder oh(MonomialOrderSpec::degrevlex(e + 1));
    CHECK(is_groebner(h.elements, oh));
    for (std::size_t i = 0; i < gb.elements.size(); ++i) {
      CHECK(h.elements[i].lead() == extend_variables(gb.elements[i].lead(), 1));
      CHECK(dehomogenize(h.elements[i], e) == extend_variables(gb.elements[i], 1));
    }
  }
  GroebnerBasis single{MonomialOrder(MonomialOrderSpec::degrevlex(2)), {Binomial(Monomial{5, 0}, Monomial{0, 3})}, true,
                       true};
  CHECK(homogenize_ideal(single).elements == std::vector<Binomial>{Binomial(Monomial{5, 0, 0}, Monomial{0, 3, 2})});
}

TEST_CASE("local standard bases and initial forms") {
  auto local = MonomialOrderSpec{Grading::NegativeDegree, TieBreak::Revlex, {1, 2, 0}, std::nullopt};
  auto sb = standard_basis_local(toric_357(), local);
  for (const auto& m : sb.leads()) CHECK(m[0] == 0);
  auto forms = initial_forms_ideal(sb.elements, local);
  CHECK(forms.size() == sb.elements.size());

  auto local2 = MonomialOrderSpec{Grading::NegativeDegree, TieBreak::Revlex, {1, 0}, std::nullopt};
  std::vector<Binomial> f{Binomial(Monomial{5, 0}, Monomial{0, 3})};
  auto sb2 = standard_basis_local(f, local2);
  REQUIRE(sb2.elements.size() == 1);
  CHECK(sb2.elements[0].lead() == Monomial{0, 3});
  auto init = initial_forms_ideal(sb2.elements, local2);
  REQUIRE(std::holds_alternative<Monomial>(init[0]));
  CHECK(std::get<Monomial>(init[0]) == Monomial{0, 3});
  std::vector<Binomial> homog{Binomial(Monomial{0, 2}, Monomial{1, 1})};
  auto init_h = initial_forms_ideal(standard_basis_local(homog, local2).elements, local2);
  REQUIRE(std::holds_alternative<Binomial>(init_h[0]));
  CHECK(same_up_to_sign(std::get<Binomial>(init_h[0]), homog[0]));
}

TEST_CASE("Hilbert function of the tangent cone from the initial ideal") {
  // HF of K[x]/in(I*) counts standard monomials of each degree; it must match
  // the longest-factorization count of the semigroup.
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    auto s = oracle::random_numerical(rng, 4, 20);
    const std::size_t e = s.embedding_dimension();
    std::vector<std::size_t> priority;
    for (std::size_t i = 1; i < e; ++i) priority.push_back(i);
    priority.push_back(0);
    MonomialOrderSpec local{Grading::NegativeDegree, TieBreak::Revlex, priority, std::nullopt};
    auto sb = standard_basis_local(toric_ideal(s).generators, local);
    auto leads = minimalize(sb.leads());
    auto len = oracle::max_length(s.generators(), 5 * s.largest());
    for (Int d = 0; d <= 5; ++d)
      CHECK(static_cast<Int>(count_standard_monomials(leads, e, d)) == std::count(len.begin(), len.end(), d));
  }
}
