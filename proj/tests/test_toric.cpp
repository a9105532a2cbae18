#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semiglue/linalg.hpp"
#include "semiglue/monomial_ideal.hpp"
#include "semiglue/theorems.hpp"
#include "semiglue/toric.hpp"

using namespace semiglue;

namespace {

NumericalSemigroup ns(std::vector<Int> g) { return NumericalSemigroup(std::move(g)); }

// Determinant by cofactor expansion.
mpz_class det(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  mpz_class d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntegerMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

// gcd of the maximal minors of an r x n integer matrix; 1 iff the rows
// span a saturated sublattice.
mpz_class minor_gcd(const std::vector<std::vector<Int>>& rows) {
  const std::size_t r = rows.size(), n = rows.front().size();
  mpz_class g = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
    IntegerMatrix m;
    for (const auto& row : rows) {
      std::vector<mpz_class> sub;
      for (std::size_t c = 0; c < n; ++c)
        if (mask >> c & 1) sub.emplace_back(static_cast<long>(row[c]));
      m.push_back(sub);
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(abs(det(m))).get_mpz_t());
  }
  return g;
}

// The leads of a toric Groebner basis are right iff every fiber of degree at
// most bound holds exactly one standard monomial when the degree is in S and
// none otherwise.
void check_fibers(const NumericalSemigroup& s, const BinomialIdeal& ideal, Int bound) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.generators) leads.push_back(g.lead());
  std::vector<Int> count(static_cast<std::size_t>(bound) + 1, 0);
  oracle::monomials_up_to(s.generators(), bound, [&](const std::vector<Int>& e) {
    Monomial m{NatVector(e)};
    if (in_monomial_ideal(m, leads)) return;
    Int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * s.generators()[i];
    ++count[static_cast<std::size_t>(d)];
  });
  auto in = oracle::members(s.generators(), bound);
  for (Int d = 0; d <= bound; ++d) CHECK(count[static_cast<std::size_t>(d)] == in[static_cast<std::size_t>(d)]);
}

AffineSemigroup glued_affine(const GluingSpec& spec) {
  std::vector<NatVector> gens;
  for (Int v : glue(spec).glued_order) gens.push_back(NatVector{v});
  return AffineSemigroup(gens);
}

}  // namespace

TEST_CASE("integer kernel is an LLL-reduced basis of the saturated kernel") {
  std::mt19937_64 rng(4242);
  for (int iter = 0; iter < 60; ++iter) {
    auto s = oracle::random_numerical(rng, 5, 300);
    auto cols = AffineSemigroup::from_numerical(s).generators();
    auto k = integer_kernel(cols);
    CAPTURE(s.to_string());
    REQUIRE(k.size() == cols.size() - 1);
    for (const auto& u : k) {
      Int dot = 0;
      for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * cols[i][0];
      CHECK(dot == 0);
    }
    CHECK(minor_gcd(k) == 1);
    // LLL with delta 3/4 keeps the first vector within 2^{(r-1)/2} of the
    // shortest one; checked against a small exhaustive search.
    const auto& b1 = k.front();
    Int norm1 = 0;
    for (Int x : b1) norm1 += x * x;
    Int shortest = norm1;
    const std::size_t r = k.size();
    std::vector<Int> c(r, -2);
    for (;;) {
      std::vector<Int> v(cols.size(), 0);
      bool nonzero = false;
      for (std::size_t j = 0; j < r; ++j) {
        nonzero |= c[j] != 0;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * k[j][i];
      }
      if (nonzero) {
        Int nv = 0;
        for (Int x : v) nv += x * x;
        shortest = std::min(shortest, nv);
      }
      std::size_t j = 0;
      while (j < r && c[j] == 2) c[j++] = -2;
      if (j == r) break;
      ++c[j];
    }
    CHECK(static_cast<double>(norm1) <= static_cast<double>(shortest) * static_cast<double>(1 << (r - 1)));
  }
}

TEST_CASE("lll_reduce on a textbook basis") {
  IntegerMatrix rows{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  lll_reduce(rows);
  CHECK(rows[0] == std::vector<mpz_class>{0, 1, 0});
  CHECK(rows[1] == std::vector<mpz_class>{1, 0, 1});
  CHECK(abs(det(rows)) == 3);
  // Size reduction and the Lovasz condition, recomputed with rationals.
  std::vector<std::vector<mpq_class>> star;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<mpq_class> v(rows[i].begin(), rows[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class num = 0, den = 0;
      for (std::size_t c = 0; c < 3; ++c) {
        num += mpq_class(rows[i][c]) * star[j][c];
        den += star[j][c] * star[j][c];
      }
      const mpq_class mu = num / den, size = abs(mu);
      CHECK(size <= mpq_class(1, 2));
      for (std::size_t c = 0; c < 3; ++c) v[c] -= mu * star[j][c];
    }
    star.push_back(v);
  }
  auto norm = [](const std::vector<mpq_class>& v) -> mpq_class { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; };
  for (std::size_t i = 1; i < 3; ++i) {
    const mpq_class lhs = norm(star[i]), rhs = mpq_class(1, 4) * norm(star[i - 1]);
    CHECK(lhs >= rhs);
  }
}

TEST_CASE("toric ideals of the small examples") {
  auto t35 = toric_ideal(ns({3, 5}));
  CHECK(t35.generators == std::vector<Binomial>{Binomial(Monomial{5, 0}, Monomial{0, 3})});
  auto t357 = toric_ideal(ns({3, 5, 7}));
  CHECK(t357.generators == std::vector<Binomial>{Binomial(Monomial{0, 2, 0}, Monomial{1, 0, 1}),
                                                 Binomial(Monomial{3, 1, 0}, Monomial{0, 0, 2}),
                                                 Binomial(Monomial{4, 0, 0}, Monomial{0, 1, 1})});
  auto closure = projective_closure_ideal(ns({2, 3}));
  CHECK(closure.generators == std::vector<Binomial>{Binomial(Monomial{3, 0, 0}, Monomial{0, 2, 1})});
  CHECK(closure.is_homogeneous());
  CHECK(ideal_equals(t357, t357));
}

TEST_CASE("saturation and elimination give the same toric ideal") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 40; ++iter) {
    auto s = oracle::random_numerical(rng, 4, 30);
    CAPTURE(s.to_string());
    auto a = toric_ideal(s), b = toric_ideal_elimination(AffineSemigroup::from_numerical(s));
    CHECK(a.generators == b.generators);
    CHECK(a.is_homogeneous());
    check_fibers(s, a, 4 * s.largest());
  }
  AffineSemigroup m({NatVector{3, 0}, NatVector{5, 0}, NatVector{0, 1}, NatVector{1, 3}, NatVector{2, 3}});
  CHECK(toric_ideal(m).generators == toric_ideal_elimination(m).generators);
}

TEST_CASE("five-generator closures finish quickly") {
  // A kernel basis with large entries used to stall the saturation.
  auto closure = AffineSemigroup::projective_closure(ns({116, 261, 351, 390, 468}));
  Deadline d(std::chrono::milliseconds(20000));
  auto t = toric_ideal(closure, d);
  CHECK(t.is_homogeneous());
  CHECK_FALSE(t.generators.empty());
}

TEST_CASE("closure ideal is the toric ideal of the closure semigroup") {
  std::mt19937_64 rng(55);
  for (int iter = 0; iter < 30; ++iter) {
    auto s = oracle::random_numerical(rng, 4, 25);
    auto h = projective_closure_ideal(s);
    auto direct = toric_ideal(AffineSemigroup::projective_closure(s));
    CHECK(ideal_equals(h, direct));
  }
}

TEST_CASE("glued generators present the ideal of the gluing") {
  GluingSpec e21{ns({3, 5}), ns({7, 12}), {1, 1}, {1, 1}};
  auto g1 = toric_ideal(e21.left).generators, g2 = toric_ideal(e21.right).generators;
  auto glued = glued_ideal_generators(e21, g1, g2);
  CHECK(glued.generators.size() == 3);
  CHECK(glued.generators.back() == Binomial(Monomial{1, 1, 0, 0}, Monomial{0, 0, 1, 1}));
  CHECK(ideal_equals(glued, toric_ideal(glued_affine(e21))));

  std::mt19937_64 rng(606);
  int checked = 0;
  for (int iter = 0; iter < 300 && checked < 40; ++iter) {
    auto l = oracle::random_numerical(rng, 3, 12), r = oracle::random_numerical(rng, 3, 12);
    std::vector<Int> b, a;
    for (std::size_t i = 0; i < l.embedding_dimension(); ++i) b.push_back(static_cast<Int>(rng() % 3));
    for (std::size_t j = 0; j < r.embedding_dimension(); ++j) a.push_back(static_cast<Int>(rng() % 3));
    GluingSpec spec{l, r, b, a};
    if (!gluing_violations(spec).empty()) continue;
    ++checked;
    auto ideal = glued_ideal_generators(spec, toric_ideal(l).generators, toric_ideal(r).generators);
    CHECK(ideal_equals(ideal, toric_ideal(glued_affine(spec))));
  }
  CHECK(checked >= 20);
}

TEST_CASE("the toric ideal of a join is the sum of the factor ideals") {
  auto left = axis_embedding(ns({3, 5, 7}), 2, 0), right = axis_embedding(ns({2, 3}), 2, 1);
  auto j = join(left, right);
  auto t = toric_ideal(j.semigroup);
  BinomialIdeal sum{t.variables, {}, t.degree_map};
  for (const auto& g : toric_ideal(left).generators) sum.generators.push_back(embed(g, 5, 0));
  for (const auto& g : toric_ideal(right).generators) sum.generators.push_back(embed(g, 5, 3));
  CHECK(ideal_equals(sum, t));
  CHECK(t.generators.size() == 4);
}
