#include "semiglue/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semiglue/errors.hpp"
#include "semiglue/groebner.hpp"
#include "semiglue/resolution.hpp"
#include "semiglue/toric.hpp"
#include "semiglue/verdicts.hpp"

namespace semiglue {

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

std::string TheoremReport::status() const {
  if (verdict_conflict) return "CONFLICT";
  if (std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.unconditional && !c.agree(); }))
    return "CONFLICT";
  if (agree) return "agree";
  return hypotheses_hold() ? "CONFLICT" : "outside hypotheses";
}

std::vector<std::string> theorem_ids() {
  return {kGluingGroebner, kGluingAcm, kStarTangentCone, kGluingGorenstein, kExtensionPf, kJoinSifr};
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string ints(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string vec_set(std::vector<NatVector> v) {
  std::sort(v.begin(), v.end());
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + "}";
}

std::string describe(const GluingSpec& spec) {
  std::ostringstream os;
  os << spec.left.to_string() << " and " << spec.right.to_string() << " with b=" << ints(spec.b)
     << ", a=" << ints(spec.a);
  try {
    os << " (p=" << spec.p() << ", q=" << spec.q() << ")";
  } catch (const InputError&) {
  }
  return os.str();
}

void finalize(TheoremReport& r) {
  std::string pred, comp;
  for (const auto& c : r.claims) {
    pred += (pred.empty() ? "" : "; ") + c.name + ": " + c.predicted;
    comp += (comp.empty() ? "" : "; ") + c.name + ": " + c.computed;
    if (!c.agree())
      r.discrepancies.push_back(c.name + ": predicted " + c.predicted + ", computed " + c.computed);
  }
  r.predicted = pred;
  r.computed = comp;
  r.agree = pred == comp;
  if (!r.hypotheses_hold())
    r.notes.push_back("hypotheses fail, so the theorem predicts nothing here; the prediction is shown for reference");
}

VerdictOptions verdict_options(const TheoremOptions& o, bool cross_check) {
  VerdictOptions v;
  v.deadline = o.deadline;
  v.threads = o.threads;
  v.cross_check = cross_check;
  return v;
}

BettiTable betti(const AffineSemigroup& s, const TheoremOptions& o, std::optional<NatVector> box = std::nullopt) {
  BettiOptions bo;
  bo.box = std::move(box);
  bo.threads = o.threads;
  bo.deadline = o.deadline;
  bo.grow_rounds = 4;
  return betti_degrees(s, bo);
}

// Records a verdict used as the computed side of a claim.
void note_verdict(TheoremReport& r, const Verdict& v) {
  std::string line = v.property + ": " + yes_no(v.result) + " by " + v.method;
  if (!v.witness.empty()) line += " (witness " + v.witness + ")";
  r.notes.push_back(line);
  for (const auto& c : v.cross_checks) {
    r.notes.push_back("  cross-check " + c.method + ": " + (c.result ? yes_no(*c.result) : "not completed") +
                      (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  if (v.conflict()) {
    r.verdict_conflict = true;
    r.discrepancies.push_back(v.property + ": cross-checks disagree with the primary method");
  }
}

// Adds the validity hypothesis; false when the gluing cannot be formed.
bool gluing_hypothesis(TheoremReport& r, const GluingSpec& spec) {
  std::vector<std::string> v;
  try {
    v = gluing_violations(spec);
  } catch (const InputError& e) {
    v.push_back(e.what());
  }
  std::string detail;
  for (const auto& s : v) detail += (detail.empty() ? "" : "; ") + s;
  r.hypotheses.push_back({"valid gluing (p, q in the factors, gcd(p,q)=1, p and q not generators)", v.empty(),
                          v.empty() ? "" : detail});
  return v.empty();
}

void generalized_nice_hypothesis(TheoremReport& r, const GluingSpec& spec) {
  r.hypotheses.push_back({"generalized nice gluing: sum b > sum a", spec.sum_b() > spec.sum_a(),
                          "sum b = " + std::to_string(spec.sum_b()) + ", sum a = " + std::to_string(spec.sum_a())});
  r.notes.push_back("gluing type: " + to_string(is_nice_gluing(spec)));
}

GroebnerBasis reduced_basis(const NumericalSemigroup& s, const Deadline& deadline) {
  auto ideal = toric_ideal(s, deadline);
  return GroebnerBasis{MonomialOrder(MonomialOrderSpec::degrevlex(s.embedding_dimension())), ideal.generators, true,
                       true};
}

std::string readings(const LcmConditionCheck& c) {
  return "lcm(m,0)=0 reading " + yes_no(c.zero_convention) + ", lcm(m,0)=m reading " + yes_no(c.literal) +
         ", no leading monomial divides the monomial " + yes_no(c.non_divisibility);
}

void condition_a_hypothesis(TheoremReport& r, const GluingSpec& spec, const Deadline& deadline) {
  const auto c = condition_A(spec, reduced_basis(spec.left, deadline));
  r.hypotheses.push_back({"leading exponents of the left basis avoid b: lcm(b_i, alpha_i) != b_i",
                          c.zero_convention, readings(c)});
}

void stated_generators_claim(TheoremReport& r, const GluedSemigroup& g, const TheoremOptions& o) {
  if (!o.stated_generators) return;
  std::vector<Int> stated = *o.stated_generators;
  std::sort(stated.begin(), stated.end());
  Claim c{"glued generators", "<", g.semigroup.to_string(), true};
  for (std::size_t i = 0; i < stated.size(); ++i) c.predicted += (i ? "," : "") + std::to_string(stated[i]);
  c.predicted += ">";
  r.claims.push_back(std::move(c));
}

std::string origin_name(const GeneratorOrigin& o) {
  const char* mult = o.side == Side::Left ? "q*m_" : "p*n_";
  return mult + std::to_string(o.index + 1);
}

// Affine closure semigroup with generators in gluing order.
AffineSemigroup closure_in_gluing_order(const GluedSemigroup& g) {
  const Int top = *std::max_element(g.glued_order.begin(), g.glued_order.end());
  std::vector<NatVector> gens;
  for (Int n : g.glued_order) gens.push_back(NatVector{n, top - n});
  gens.push_back(NatVector{0, top});
  return AffineSemigroup(std::move(gens));
}

}  // namespace

TheoremReport verify_gluing_groebner(const GluingSpec& spec, RhoForm form, BlockOrder block,
                                     const TheoremOptions& options) {
  TheoremReport r;
  r.theorem = kGluingGroebner;
  r.instance = describe(spec) + (form == RhoForm::Full ? ", gluing binomial x^b - x0^e y^a"
                                                       : ", gluing binomial x_l^{b_l} - x0^e y^a") +
               (block == BlockOrder::XFirst ? ", order x > y > x0" : ", order y > x > x0");
  Claim claim{"homogenized factor bases with the gluing binomial form a Groebner basis of the closure ideal", "true",
              ""};
  if (!gluing_hypothesis(r, spec)) {
    claim.computed = "not computed";
    r.claims.push_back(claim);
    finalize(r);
    return r;
  }
  generalized_nice_hypothesis(r, spec);
  condition_a_hypothesis(r, spec, options.deadline);

  const std::size_t l = spec.left.embedding_dimension(), k = spec.right.embedding_dimension();
  const std::size_t n = l + k + 1, x0 = l + k;
  std::vector<std::string> names = default_variable_names(l, "x");
  for (const auto& y : default_variable_names(k, "y")) names.push_back(y);
  names.push_back("x0");

  std::vector<Binomial> candidate;
  for (const auto& g : toric_ideal(spec.left, options.deadline).generators)
    candidate.push_back(homogenize(embed(g, n, 0), x0));
  for (const auto& g : toric_ideal(spec.right, options.deadline).generators)
    candidate.push_back(homogenize(embed(g, n, l), x0));
  NatVector xb(n), ya(n);
  if (form == RhoForm::Full)
    for (std::size_t i = 0; i < l; ++i) xb.set(i, spec.b[i]);
  else
    xb.set(l - 1, spec.b[l - 1]);
  for (std::size_t j = 0; j < k; ++j) ya.set(l + j, spec.a[j]);
  const Binomial rho = homogenize(Binomial(Monomial(std::move(xb)), Monomial(std::move(ya))), x0);

  std::vector<std::size_t> priority;
  if (block == BlockOrder::XFirst) {
    for (std::size_t i = 0; i < n; ++i) priority.push_back(i);
  } else {
    for (std::size_t j = 0; j < k; ++j) priority.push_back(l + j);
    for (std::size_t i = 0; i < l; ++i) priority.push_back(i);
    priority.push_back(x0);
  }
  const MonomialOrder order(MonomialOrderSpec::degrevlex(priority));
  r.notes.push_back("gluing binomial: " + rho.normalized(order).to_string(names));
  if (rho.is_zero()) {
    claim.computed = "false";
    r.notes.push_back("the gluing binomial is zero");
    r.claims.push_back(claim);
    finalize(r);
    return r;
  }
  candidate.push_back(rho);

  const GluedSemigroup glued = glue(spec);
  const auto closure_ideal = toric_ideal(closure_in_gluing_order(glued), options.deadline);
  const auto reference = buchberger(closure_ideal.generators, order, options.deadline);
  for (const auto& c : candidate)
    if (!normal_form(c.normalized(order), reference.elements, order).is_zero())
      r.notes.push_back(c.normalized(order).to_string(names) + " is not in the closure ideal");
  const bool member = normal_form(rho.normalized(order), reference.elements, order).is_zero();
  const bool criterion = is_groebner(candidate, order);
  const bool generates = buchberger(candidate, order, options.deadline).elements == reference.elements;
  r.notes.push_back("Buchberger criterion on the candidate: " + yes_no(criterion));
  r.notes.push_back("candidate generates the closure ideal: " + yes_no(generates));
  r.notes.push_back("closure ideal has a reduced basis of " + std::to_string(reference.elements.size()) +
                    " binomials");
  claim.computed = yes_no(criterion && generates);
  r.claims.push_back(claim);
  r.claims.push_back({"gluing binomial lies in the closure ideal", "true", yes_no(member), true});
  finalize(r);
  return r;
}

TheoremReport verify_gluing_acm(const GluingSpec& spec, const TheoremOptions& options) {
  TheoremReport r;
  r.theorem = kGluingAcm;
  r.instance = describe(spec);
  Claim claim{"projective closure is arithmetically Cohen-Macaulay", "", ""};
  if (!gluing_hypothesis(r, spec)) {
    claim.predicted = "undetermined";
    claim.computed = "not computed";
    r.claims.push_back(claim);
    finalize(r);
    return r;
  }
  generalized_nice_hypothesis(r, spec);
  condition_a_hypothesis(r, spec, options.deadline);
  const auto vo = verdict_options(options, false);
  const auto left = acm_projective_closure(spec.left, vo), right = acm_projective_closure(spec.right, vo);
  r.hypotheses.push_back({"projective closure of the left factor is ACM", left.result, left.witness});
  r.hypotheses.push_back({"projective closure of the right factor is ACM", right.result, right.witness});

  const GluedSemigroup glued = glue(spec);
  stated_generators_claim(r, glued, options);
  const auto top = glued.largest();
  r.notes.push_back("glued semigroup " + glued.semigroup.to_string() + "; largest generator " +
                    std::to_string(glued.semigroup.largest()) + " = " + origin_name(top));
  claim.predicted = yes_no(top.side == Side::Right);
  const auto v = acm_projective_closure(glued.semigroup, verdict_options(options, true));
  note_verdict(r, v);
  claim.computed = yes_no(v.result);
  r.claims.push_back(claim);
  finalize(r);
  return r;
}

TheoremReport verify_star_tangent_cone(const GluingSpec& spec, const TheoremOptions& options) {
  TheoremReport r;
  r.theorem = kStarTangentCone;
  r.instance = describe(spec);
  Claim claim{"tangent cone is Cohen-Macaulay", "", ""};
  if (!gluing_hypothesis(r, spec)) {
    claim.predicted = "undetermined";
    claim.computed = "not computed";
    r.claims.push_back(claim);
    finalize(r);
    return r;
  }
  r.hypotheses.push_back({"star gluing: sum a < sum b", is_star_gluing(spec),
                          "sum a = " + std::to_string(spec.sum_a()) + ", sum b = " + std::to_string(spec.sum_b())});
  const auto cb = condition_B(spec, reduced_basis(spec.right, options.deadline));
  r.hypotheses.push_back(
      {"leading exponents of the right basis avoid a: lcm(a_j, alpha_j) != a_j", cb.zero_convention, readings(cb)});
  const auto vo = verdict_options(options, false);
  const auto left = cm_tangent_cone(spec.left, vo), right = cm_tangent_cone(spec.right, vo);
  r.hypotheses.push_back({"tangent cone of the left factor is CM", left.result, left.witness});
  r.hypotheses.push_back({"tangent cone of the right factor is CM", right.result, right.witness});

  const GluedSemigroup glued = glue(spec);
  stated_generators_claim(r, glued, options);
  const auto low = glued.smallest();
  r.notes.push_back("glued semigroup " + glued.semigroup.to_string() + "; smallest generator " +
                    std::to_string(glued.semigroup.multiplicity()) + " = " + origin_name(low));
  claim.predicted = yes_no(low.side == Side::Left);
  const auto v = cm_tangent_cone(glued.semigroup, verdict_options(options, true));
  note_verdict(r, v);
  claim.computed = yes_no(v.result);
  r.claims.push_back(claim);
  finalize(r);
  return r;
}

TheoremReport verify_gluing_gorenstein(const GluingSpec& spec, const TheoremOptions& options) {
  TheoremReport r;
  r.theorem = kGluingGorenstein;
  r.instance = describe(spec);
  Claim claim{"projective closure is Gorenstein", "true", ""};
  if (!gluing_hypothesis(r, spec)) {
    claim.computed = "not computed";
    r.claims.push_back(claim);
    finalize(r);
    return r;
  }
  generalized_nice_hypothesis(r, spec);
  condition_a_hypothesis(r, spec, options.deadline);
  const GluedSemigroup glued = glue(spec);
  r.hypotheses.push_back({"largest generator is p*n_k", glued.largest().side == Side::Right,
                          "largest generator " + std::to_string(glued.semigroup.largest()) + " = " +
                              origin_name(glued.largest())});
  const auto vo = verdict_options(options, false);
  const auto left = gorenstein_projective_closure(spec.left, vo);
  const auto right = gorenstein_projective_closure(spec.right, vo);
  r.hypotheses.push_back({"projective closure of the left factor is Gorenstein", left.result, left.witness});
  r.hypotheses.push_back({"projective closure of the right factor is Gorenstein", right.result, right.witness});
  stated_generators_claim(r, glued, options);
  r.notes.push_back("glued semigroup " + glued.semigroup.to_string());
  const auto v = gorenstein_projective_closure(glued.semigroup, verdict_options(options, true));
  note_verdict(r, v);
  claim.computed = yes_no(v.result);
  r.claims.push_back(claim);
  finalize(r);
  return r;
}

TheoremReport verify_extension_pf(const ExtensionSpec& spec, const std::optional<NatVector>& box,
                                  const TheoremOptions& options) {
  TheoremReport r;
  r.theorem = kExtensionPf;
  r.instance = "extension of " + spec.base.to_string() + " with l=" + std::to_string(spec.l) + ", u=" + ints(spec.u);
  const Extension ext = extend(spec);
  const AffineSemigroup& base = spec.base;
  const AffineSemigroup& e = ext.semigroup;
  r.instance += " (a=" + ext.a.to_string() + ", E=" + e.to_string() + ")";
  const NatVector base_box = box ? *box : default_betti_box(base);
  if (base_box.dim() != base.dim()) throw InputError("box dimension does not match the semigroup");
  const NatVector ext_box = base_box.scaled(spec.l) + ext.a;

  const BettiTable tb = betti(base, options);
  const bool base_mpd = tb.pd() + 1 == base.size();
  r.hypotheses.push_back({"base has maximal projective dimension", base_mpd,
                          "pd " + std::to_string(tb.pd()) + " with " + std::to_string(base.size()) + " generators"});
  const GapSet base_gaps = gap_set_affine(base, base_box);
  const auto base_family = infinite_gap_family(base, base_box);
  r.hypotheses.push_back({"gap set of the base is finite", base_gaps.shell_clean && !base_family,
                          std::to_string(base_gaps.gaps.size()) + " gaps in box " + base_box.to_string() +
                              (base_gaps.shell_clean ? ", none near the far faces" : ", some near the far faces")});
  const TermOrderNd order = TermOrderNd::graded_lex(base.dim());
  bool base_sym = false;
  if (base_mpd && base_gaps.shell_clean) base_sym = is_prec_symmetric(base, tb, order, base_box);
  r.hypotheses.push_back({"base is symmetric for the graded lex term order", base_sym, ""});
  if (!base_mpd) {
    r.claims.push_back({"PF(E) from the top Betti degrees", "undetermined", "not computed"});
    finalize(r);
    return r;
  }

  const auto base_pf = pf_via_betti(base, tb);
  std::vector<NatVector> predicted_pf;
  for (const auto& f : base_pf) predicted_pf.push_back(f.scaled(spec.l) + ext.a.scaled(spec.l - 1));
  r.notes.push_back("PF of the base from its top Betti degrees: " + vec_set(base_pf));

  const BettiTable te = betti(e, options);
  const bool e_mpd = te.pd() + 1 == e.size();
  r.claims.push_back({"E has maximal projective dimension", "true", yes_no(e_mpd)});
  r.claims.push_back({"PF(E) from the top Betti degrees", vec_set(predicted_pf),
                      e_mpd ? vec_set(pf_via_betti(e, te)) : "E is not MPD"});
  std::vector<NatVector> predicted_in_box;
  for (const auto& f : predicted_pf)
    if (f.dominated_by(ext_box)) predicted_in_box.push_back(f);
  r.claims.push_back({"PF(E) among the gaps in box " + ext_box.to_string(), vec_set(predicted_in_box),
                      vec_set(pf_in_box(e, ext_box))});

  // B_i(E) = l B_i(base) u l (B_{i-1}(base) + a)
  BettiTable law;
  law.rows.resize(tb.rows.size() + 1);
  for (std::size_t i = 0; i < tb.rows.size(); ++i)
    for (const auto& [d, m] : tb.rows[i]) {
      law.rows[i][d.scaled(spec.l)] += m;
      law.rows[i + 1][(d + ext.a).scaled(spec.l)] += m;
    }
  auto table_string = [](const BettiTable& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows.size(); ++i) s += (i ? " | " : "") + vec_set(t.degrees(i));
    return s;
  };
  r.claims.push_back({"Betti degrees of E", table_string(law), table_string(te)});
  {
    std::string totals;
    for (auto t : te.totals()) totals += (totals.empty() ? "" : ",") + std::to_string(t);
    r.notes.push_back("total Betti numbers of E: (" + totals + ")");
  }

  const auto family = infinite_gap_family(e, ext_box);
  const GapSet e_gaps = gap_set_affine(e, ext_box);
  std::string finite;
  if (family) {
    finite = "false";
    r.notes.push_back("gap family of E: " + family->start.to_string() + " + t*" + family->direction.to_string() +
                      " misses E for every t, since coordinate " + std::to_string(family->coordinate + 1) + " of " +
                      family->start.to_string() + " is not a sum of that coordinate of generators");
  } else {
    finite = e_gaps.shell_clean ? "true" : "undetermined";
  }
  r.claims.push_back({"gap set of E is finite", "true", finite});
  if (base_sym) {
    std::string sym;
    if (family)
      sym = "false";  // the family increases under every term order, so no largest gap exists
    else if (e_gaps.shell_clean)
      sym = yes_no(is_prec_symmetric(e, te, order, ext_box));
    else
      sym = "undetermined";
    r.claims.push_back({"E is symmetric for the graded lex term order", "true", sym});
  }
  finalize(r);
  return r;
}

TheoremReport verify_join_sifr(const AffineSemigroup& left, const AffineSemigroup& right,
                               const TheoremOptions& options) {
  TheoremReport r;
  r.theorem = kJoinSifr;
  r.instance = "join of " + left.to_string() + " and " + right.to_string();
  std::optional<Join> j;
  std::string why;
  try {
    j = join(left, right);
  } catch (const InputError& e) {
    why = e.what();
  }
  r.hypotheses.push_back({"join is defined (disjoint generators, independent extremal rays)", j.has_value(), why});
  if (!j) {
    r.claims.push_back({"join has a strongly indispensable resolution", "undetermined", "not computed"});
    finalize(r);
    return r;
  }
  const BettiTable tl = betti(left, options), tr = betti(right, options);
  const BettiTable tj = betti(j->semigroup, options);
  const auto sl = sifr_check(left, tl), sr = sifr_check(right, tr), sj = sifr_check(j->semigroup, tj);
  auto describe_sifr = [](const char* who, const SifrResult& s) {
    std::string line = std::string(who) + " SIFR: " + yes_no(s.holds);
    if (s.witness)
      line += " (degrees " + s.witness->first.to_string() + " and " + s.witness->second.to_string() + " in row " +
              std::to_string(s.witness->level) + " differ by an element of the semigroup)";
    return line;
  };
  r.notes.push_back(describe_sifr("left", sl));
  r.notes.push_back(describe_sifr("right", sr));
  r.notes.push_back(describe_sifr("join", sj));
  r.claims.push_back({"Betti degrees of the join equal the tensor product of the factor tables", "true",
                      yes_no(tensor_betti(tl, tr) == tj)});
  r.claims.push_back({"join has a strongly indispensable resolution", yes_no(sl.holds && sr.holds), yes_no(sj.holds)});
  finalize(r);
  return r;
}

AffineSemigroup axis_embedding(const NumericalSemigroup& s, std::size_t dim, std::size_t axis) {
  if (axis >= dim) throw InputError("axis outside the ambient dimension");
  std::vector<NatVector> gens;
  for (Int n : s.generators()) {
    NatVector v(dim);
    v.set(axis, n);
    gens.push_back(std::move(v));
  }
  return AffineSemigroup(std::move(gens));
}

}  // namespace semiglue
