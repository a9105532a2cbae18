#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiglue/deadline.hpp"
#include "semiglue/resolution.hpp"
#include "semiglue/semigroups.hpp"

namespace semiglue {

struct CrossCheck {
  std::string method;
  std::optional<bool> result;  // empty when the method did not complete
  std::string detail;
};

struct Verdict {
  std::string property;
  bool result = false;
  std::string method;
  std::string witness;
  std::vector<CrossCheck> cross_checks;

  // A completed cross-check disagrees with the primary method.
  bool conflict() const;
};

struct VerdictOptions {
  Deadline deadline;
  unsigned threads = 1;
  bool cross_check = true;
  std::optional<NatVector> betti_box;  // for the closure, in N^2
  unsigned betti_grow_rounds = 4;
  Int ord_bound = 0;                   // 0: n_1 * n_e * (e - 1)
  TieBreak tangent_tiebreak = TieBreak::Revlex;
};

// x_e divides no leading monomial of the reduced degrevlex basis.
Verdict acm_projective_closure(const NumericalSemigroup& s, const VerdictOptions& options = {});
// x_1 divides no leading monomial of a local standard basis with x_1 lowest.
Verdict cm_tangent_cone(const NumericalSemigroup& s, const VerdictOptions& options = {});
Verdict gorenstein_numerical(const NumericalSemigroup& s, const VerdictOptions& options = {});
Verdict gorenstein_projective_closure(const NumericalSemigroup& s, const VerdictOptions& options = {});

// ord(s + n_1) = ord(s) + 1 for every member s up to bound; the first failure
// if any.
std::optional<Int> ord_oracle_failure(const NumericalSemigroup& s, Int bound);
Int default_ord_bound(const NumericalSemigroup& s);

// Cohen-Macaulayness of K[x]/J for a monomial ideal J of dimension at most
// one: J equals the intersection of its saturations by each variable.
bool one_dimensional_monomial_cm(const std::vector<Monomial>& j);

// Elements of the closure semigroup not reachable from another element by
// adding (n_e, 0) or (0, n_e), as (a, k) for the point (a, k n_e - a) of
// degree k. The closure is Cohen-Macaulay iff there are n_e of them, and
// then its type is the number of maximal ones.
struct ClosureApery {
  std::vector<std::pair<Int, Int>> elements;
  std::size_t maximal = 0;
};
ClosureApery closure_apery(const NumericalSemigroup& s, const Deadline& deadline = Deadline::none());

MonomialOrderSpec tangent_cone_order(std::size_t nvars, TieBreak tiebreak = TieBreak::Revlex);

}  // namespace semiglue
