#include "semiglue/verdicts.hpp"

#include <algorithm>
#include <numeric>

#include "semiglue/monomial_ideal.hpp"
#include "semiglue/toric.hpp"

namespace semiglue {

bool Verdict::conflict() const {
  return std::any_of(cross_checks.begin(), cross_checks.end(),
                     [&](const CrossCheck& c) { return c.result && *c.result != result; });
}

namespace {

template <typename F>
CrossCheck guarded(std::string method, F&& f) {
  CrossCheck c{std::move(method), std::nullopt, ""};
  try {
    f(c);
  } catch (const ResourceError& e) {
    c.result.reset();
    c.detail = std::string("did not complete: ") + e.what();
  }
  return c;
}

}  // namespace

ClosureApery closure_apery(const NumericalSemigroup& s, const Deadline& deadline) {
  const Int top = s.largest();
  std::vector<Int> steps{0};
  for (Int n : s.generators()) steps.push_back(n);
  // sums[k][a]: a is a sum of k elements of {0, n_1, ..., n_e}, i.e. (a, k*top - a) lies in the closure.
  std::vector<std::vector<char>> sums{{1}};
  std::uint64_t cells = 1;
  ClosureApery out;
  for (Int k = 1;; ++k) {
    deadline.check("closure Apery set");
    cells += static_cast<std::uint64_t>(checked_mul(k, top)) + 1;
    if (cells > (std::uint64_t{1} << 31)) throw ResourceError("closure Apery set needs too many degrees");
    const auto& prev = sums.back();
    std::vector<char> cur(static_cast<std::size_t>(k * top) + 1, 0);
    for (std::size_t a = 0; a < prev.size(); ++a)
      if (prev[a])
        for (Int st : steps) cur[a + static_cast<std::size_t>(st)] = 1;
    std::size_t found = 0;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (!cur[a]) continue;
      const bool minus_x0 = a < prev.size() && prev[a];
      const bool minus_top = a >= static_cast<std::size_t>(top) && prev[a - static_cast<std::size_t>(top)];
      if (!minus_x0 && !minus_top) {
        out.elements.emplace_back(static_cast<Int>(a), k);
        ++found;
      }
    }
    sums.push_back(std::move(cur));
    // Degree k without new elements means (k+1)A lies in kA u (top + kA), and so on.
    if (found == 0) break;
  }
  out.elements.insert(out.elements.begin(), {0, 0});
  auto below = [&](const std::pair<Int, Int>& x, const std::pair<Int, Int>& y) {
    if (y.second < x.second || y.first < x.first) return false;
    const auto& row = sums[static_cast<std::size_t>(y.second - x.second)];
    const auto d = static_cast<std::size_t>(y.first - x.first);
    return d < row.size() && row[d];
  };
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < out.elements.size() && maximal; ++j)
      if (j != i && below(out.elements[i], out.elements[j])) maximal = false;
    if (maximal) ++out.maximal;
  }
  return out;
}

MonomialOrderSpec tangent_cone_order(std::size_t nvars, TieBreak tiebreak) {
  MonomialOrderSpec spec{Grading::NegativeDegree, tiebreak, {}, std::nullopt};
  for (std::size_t i = nvars; i-- > 0;) spec.priority.push_back(i);
  return spec;
}

bool one_dimensional_monomial_cm(const std::vector<Monomial>& j) {
  if (j.empty()) return true;
  const std::size_t n = j.front().nvars();
  std::vector<Monomial> meet{Monomial::one(n)};
  for (std::size_t v = 0; v < n; ++v) meet = intersect(meet, saturate_by_variable(j, v));
  return same_monomial_ideal(meet, j);
}

Verdict acm_projective_closure(const NumericalSemigroup& s, const VerdictOptions& options) {
  Verdict v{"arithmetically Cohen-Macaulay projective closure", true,
            "largest-generator variable divides no leading monomial of the reduced degrevlex basis", "", {}};
  const std::size_t e = s.embedding_dimension();
  const auto ideal = toric_ideal(s, options.deadline);
  for (const auto& g : ideal.generators)
    if (g.lead()[e - 1] > 0) {
      v.result = false;
      v.witness = g.to_string(ideal.variables);
      break;
    }
  if (!options.cross_check) return v;
  v.cross_checks.push_back(guarded("initial ideal of the homogenized ideal is unmixed", [&](CrossCheck& c) {
    GroebnerBasis gb{MonomialOrder(MonomialOrderSpec::degrevlex(e)), ideal.generators, true, true};
    const auto h = homogenize_ideal(gb);
    std::vector<Monomial> j;
    for (const auto& g : h.elements) {
      const auto& lead = g.lead();
      if (lead[e] > 0) throw AlgebraError("x0 divides a leading monomial of the homogenized basis");
      j.emplace_back(NatVector(std::vector<Int>(lead.exponents().begin(), lead.exponents().end() - 1)));
    }
    c.result = one_dimensional_monomial_cm(minimalize(j));
    c.detail = "x0 is regular on the initial ideal; " + std::to_string(minimalize(j).size()) +
               " minimal generators checked for an embedded maximal component";
  }));
  v.cross_checks.push_back(guarded("depth of the closure semigroup ring from its Betti table", [&](CrossCheck& c) {
    const auto closure = AffineSemigroup::projective_closure(s);
    BettiOptions bo{options.betti_box, options.threads, options.deadline, options.betti_grow_rounds};
    const auto table = betti_degrees(closure, bo);
    const auto summary = resolution_summary(closure, table);
    c.result = summary.cm;
    c.detail = "pd " + std::to_string(summary.pd) + ", depth " + std::to_string(summary.depth) + ", dim " +
               std::to_string(summary.dim);
  }));
  v.cross_checks.push_back(guarded("Apery set of the closure with respect to (n_e,0) and (0,n_e) has n_e elements",
                                   [&](CrossCheck& c) {
                                     const auto ap = closure_apery(s, options.deadline);
                                     c.result = static_cast<Int>(ap.elements.size()) == s.largest();
                                     c.detail = std::to_string(ap.elements.size()) + " elements";
                                   }));
  return v;
}

Int default_ord_bound(const NumericalSemigroup& s) {
  const Int e = static_cast<Int>(s.embedding_dimension());
  return checked_mul(checked_mul(s.multiplicity(), s.largest()), std::max<Int>(e - 1, 1));
}

std::optional<Int> ord_oracle_failure(const NumericalSemigroup& s, Int bound) {
  const Int n1 = s.multiplicity();
  const auto t = ord_table(s, checked_add(bound, n1));
  for (Int x = 0; x <= bound; ++x)
    if (t[x] >= 0 && t[x + n1] != t[x] + 1) return x;
  return std::nullopt;
}

Verdict cm_tangent_cone(const NumericalSemigroup& s, const VerdictOptions& options) {
  Verdict v{"Cohen-Macaulay tangent cone", true,
            "smallest-generator variable divides no leading monomial of the local standard basis", "", {}};
  const std::size_t e = s.embedding_dimension();
  const auto ideal = toric_ideal(s, options.deadline);
  const auto sb = standard_basis_local(ideal.generators, tangent_cone_order(e, options.tangent_tiebreak),
                                       options.deadline);
  for (const auto& g : sb.elements)
    if (g.lead()[0] > 0) {
      v.result = false;
      v.witness = g.to_string(ideal.variables);
      break;
    }
  if (!options.cross_check) return v;
  v.cross_checks.push_back(guarded("ord(s + n1) = ord(s) + 1 on all members up to the bound", [&](CrossCheck& c) {
    const Int bound = options.ord_bound > 0 ? options.ord_bound : default_ord_bound(s);
    const auto failure = ord_oracle_failure(s, bound);
    c.result = !failure;
    c.detail = failure ? "fails at s = " + std::to_string(*failure) : "checked through " + std::to_string(bound);
  }));
  return v;
}

Verdict gorenstein_numerical(const NumericalSemigroup& s, const VerdictOptions& options) {
  Verdict v{"Gorenstein (symmetric semigroup)", true, "exactly one of z and F - z is a member for 0 <= z <= F",
            "", {}};
  const Int f = frobenius(s);
  if (f >= 0) {
    const auto t = ord_table(s, f);
    for (Int z = 0; z <= f; ++z)
      if ((t[z] >= 0) == (t[f - z] >= 0)) {
        v.result = false;
        v.witness = "z = " + std::to_string(z);
        break;
      }
  }
  if (!options.cross_check) return v;
  v.cross_checks.push_back(guarded("single pseudo-Frobenius number", [&](CrossCheck& c) {
    const auto pf = pf_numeric(s);
    c.result = f < 0 || pf.size() == 1;
    c.detail = "type " + std::to_string(pf.size());
  }));
  return v;
}

Verdict gorenstein_projective_closure(const NumericalSemigroup& s, const VerdictOptions& options) {
  Verdict v{"Gorenstein projective closure", false,
            "closure is arithmetically Cohen-Macaulay and its last total Betti number is 1", "", {}};
  VerdictOptions quiet = options;
  quiet.cross_check = false;
  const auto acm = acm_projective_closure(s, quiet);
  const auto closure = AffineSemigroup::projective_closure(s);
  BettiOptions bo{options.betti_box, options.threads, options.deadline, options.betti_grow_rounds};
  const auto table = betti_degrees(closure, bo);
  const auto totals = table.totals();
  v.result = acm.result && totals.back() == 1;
  v.witness = acm.result ? "last total Betti number " + std::to_string(totals.back()) : "not ACM: " + acm.witness;
  if (!options.cross_check) return v;
  v.cross_checks.push_back(guarded("Cohen-Macaulay type from the closure Betti table", [&](CrossCheck& c) {
    const auto summary = resolution_summary(closure, table);
    c.result = summary.gorenstein;
    c.detail = "depth " + std::to_string(summary.depth) + ", type " + std::to_string(totals.back());
  }));
  v.cross_checks.push_back(guarded("Apery set of the closure has n_e elements and one maximal element",
                                   [&](CrossCheck& c) {
                                     const auto ap = closure_apery(s, options.deadline);
                                     c.result = static_cast<Int>(ap.elements.size()) == s.largest() && ap.maximal == 1;
                                     c.detail = std::to_string(ap.elements.size()) + " elements, " +
                                                std::to_string(ap.maximal) + " maximal";
                                   }));
  return v;
}

}  // namespace semiglue
