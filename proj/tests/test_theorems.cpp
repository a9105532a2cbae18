#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "semiglue/theorems.hpp"

using namespace semiglue;

namespace {

NumericalSemigroup ns(std::vector<Int> g) { return NumericalSemigroup(std::move(g)); }

void check_report_invariants(const TheoremReport& r) {
  bool all = true, unconditional_ok = true;
  for (const auto& c : r.claims) {
    all &= c.agree();
    if (c.unconditional) unconditional_ok &= c.agree();
  }
  CHECK(r.agree == all);
  CHECK(r.discrepancies.size() >= static_cast<std::size_t>(std::count_if(
                                      r.claims.begin(), r.claims.end(), [](const Claim& c) { return !c.agree(); })));
  const std::string s = r.status();
  if (r.verdict_conflict || !unconditional_ok || (r.hypotheses_hold() && !r.agree))
    CHECK(s == "CONFLICT");
  else if (r.agree)
    CHECK(s == "agree");
  else
    CHECK(s == "outside hypotheses");
}

const Hypothesis* find_hypothesis(const TheoremReport& r, const std::string& name) {
  for (const auto& h : r.hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

}  // namespace

TEST_CASE("curated instances report the expected status") {
  // Keyed by theorem and label; the misprinted examples must surface as
  // conflicts rather than agreement.
  const std::map<std::pair<std::string, std::string>, std::string> expected{
      {{kGluingAcm, "<3,5,7> and <9,11>, p=14, q=29"}, "agree"},
      {{kGluingAcm, "<3,5,7> and <9,11>, p=21, q=29"}, "agree"},
      {{kGluingAcm, "<5,7,11> and <25,28>, p=17, q=50"}, "agree"},
      {{kGluingAcm, "<3,5> and <7,12>, p=8, q=19"}, "outside hypotheses"},
      {{kGluingAcm, "<12,13> and <3,11>, p=37, q=6"}, "agree"},
      {{kGluingAcm, "<11,13> and <8,11>, p=50, q=27"}, "CONFLICT"},
      {{kStarTangentCone, "<3,5,7> and <9,11>, p=28, q=29"}, "agree"},
      {{kStarTangentCone, "<7,8> and <5,12>, p=21, q=17"}, "agree"},
      {{kStarTangentCone, "<5,7> and <2,13>, p=22, q=15, smallest generator p*n_1"}, "agree"},
      {{kStarTangentCone, "<11,13> and <8,11>, p=50, q=27"}, "CONFLICT"},
      {{kGluingGorenstein, "<3,5> and <7,12>, p=8, q=19"}, "outside hypotheses"},
      {{kGluingGorenstein, "<12,13> and <3,11>, p=37, q=6"}, "CONFLICT"},
      {{kGluingGorenstein, "<4,7> and <2,3>, p=25, q=7"}, "CONFLICT"},
      {{kExtensionPf, "matrix A, l=2, a=(6,9)"}, "CONFLICT"},
      {{kExtensionPf, "<3,5>, l=2, a=9"}, "agree"},
      {{kJoinSifr, "<3,5,7> on the first axis, <2,3> on the second"}, "agree"},
      {{kJoinSifr, "<6,7,8,9> on the first axis, <2,3> on the second"}, "agree"},
      {{kJoinSifr, "<2,3> on the first axis, <3,5> on the second"}, "agree"},
  };
  std::size_t matched = 0;
  for (const auto& inst : theorem_instances()) {
    CAPTURE(inst.label);
    auto r = inst.run({});
    CHECK(r.theorem == inst.theorem);
    check_report_invariants(r);
    if (inst.misprint) {
      CHECK(r.status() == "CONFLICT");
      CHECK_FALSE(r.discrepancies.empty());
    }
    if (inst.theorem == kGluingGroebner && !inst.misprint) CHECK(r.status() == "outside hypotheses");
    auto it = expected.find({inst.theorem, inst.label});
    if (it != expected.end()) {
      ++matched;
      CHECK(r.status() == it->second);
    }
  }
  CHECK(matched == expected.size());
}

TEST_CASE("the Groebner gluing example with p = 21 fails condition A") {
  GluingSpec p21{ns({3, 5, 7}), ns({9, 11}), {2, 3, 0}, {2, 1}};
  auto r = verify_gluing_groebner(p21);
  CHECK_FALSE(r.hypotheses_hold());
  CHECK(r.status() == "outside hypotheses");
  // The printed shortened binomial is not even in the closure ideal.
  auto last = verify_gluing_groebner(p21, RhoForm::LastOnly);
  CHECK(last.conflict());
}

TEST_CASE("ACM gluing predictions on the worked examples") {
  auto claim = [](const TheoremReport& r) { return std::make_pair(r.claims.front().predicted, r.claims.front().computed); };
  auto p14 = verify_gluing_acm(GluingSpec{ns({3, 5, 7}), ns({9, 11}), {3, 1, 0}, {2, 1}});
  CHECK(claim(p14) == std::make_pair(std::string("false"), std::string("false")));
  auto p21 = verify_gluing_acm(GluingSpec{ns({3, 5, 7}), ns({9, 11}), {2, 3, 0}, {2, 1}});
  CHECK(claim(p21) == std::make_pair(std::string("true"), std::string("true")));
  auto counter = verify_gluing_acm(GluingSpec{ns({5, 7, 11}), ns({25, 28}), {2, 1, 0}, {2, 0}});
  CHECK(claim(counter) == std::make_pair(std::string("false"), std::string("false")));
}

TEST_CASE("stated generators are checked against the recomputed ones") {
  GluingSpec star{ns({3, 5, 7}), ns({9, 11}), {0, 0, 4}, {2, 1}};
  TheoremOptions printed;
  printed.stated_generators = std::vector<Int>{87, 145, 203, 189, 231};
  auto bad = verify_star_tangent_cone(star, printed);
  CHECK(bad.conflict());
  TheoremOptions recomputed;
  recomputed.stated_generators = std::vector<Int>{87, 145, 203, 252, 308};
  CHECK(verify_star_tangent_cone(star, recomputed).status() == "agree");
}

TEST_CASE("each probe breaks exactly its hypothesis and the conclusion with it") {
  auto probes = hypothesis_probes();
  CHECK(probes.size() == 14);
  for (const auto& p : probes) {
    CAPTURE(p.theorem);
    CAPTURE(p.hypothesis);
    auto r = p.run({});
    const Hypothesis* h = find_hypothesis(r, p.hypothesis);
    REQUIRE(h != nullptr);
    CHECK_FALSE(h->holds);
    for (const auto& other : r.hypotheses)
      if (&other != h) CHECK(other.holds);
    CHECK_FALSE(r.agree);
    CHECK(r.status() == "outside hypotheses");
    check_report_invariants(r);
  }
}

TEST_CASE("join SIFR equivalence on random axis joins") {
  std::mt19937_64 rng(909);
  for (int iter = 0; iter < 25; ++iter) {
    auto l = axis_embedding(oracle::random_numerical(rng, 4, 15), 2, 0);
    auto r = axis_embedding(oracle::random_numerical(rng, 3, 15), 2, 1);
    auto rep = verify_join_sifr(l, r);
    CHECK(rep.hypotheses_hold());
    CHECK(rep.status() == "agree");
    check_report_invariants(rep);
  }
}

TEST_CASE("random gluings produce consistent reports") {
  std::mt19937_64 rng(2025);
  int checked = 0;
  for (int iter = 0; iter < 200 && checked < 20; ++iter) {
    auto l = oracle::random_numerical(rng, 3, 10), r = oracle::random_numerical(rng, 3, 10);
    std::vector<Int> b, a;
    for (std::size_t i = 0; i < l.embedding_dimension(); ++i) b.push_back(static_cast<Int>(rng() % 3));
    for (std::size_t j = 0; j < r.embedding_dimension(); ++j) a.push_back(static_cast<Int>(rng() % 3));
    GluingSpec spec{l, r, b, a};
    if (!gluing_violations(spec).empty()) continue;
    ++checked;
    for (const auto& rep : {verify_gluing_groebner(spec), verify_gluing_acm(spec), verify_star_tangent_cone(spec),
                            verify_gluing_gorenstein(spec)}) {
      check_report_invariants(rep);
      CHECK_FALSE(rep.verdict_conflict);
      // The gluing binomial always lies in the ideal of the gluing.
      for (const auto& c : rep.claims)
        if (c.unconditional) CHECK(c.agree());
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("invalid gluings show up as a failed hypothesis") {
  auto r = verify_gluing_acm(GluingSpec{ns({3, 5}), ns({2, 3}), {2, 0}, {0, 2}});
  REQUIRE_FALSE(r.hypotheses.empty());
  CHECK_FALSE(r.hypotheses.front().holds);
  CHECK_FALSE(r.hypotheses_hold());
  CHECK(r.status() != "agree");
}
