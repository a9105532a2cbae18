#include "semiglue/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "semiglue/errors.hpp"
#include "semiglue/resolution.hpp"
#include "semiglue/semigroups.hpp"
#include "semiglue/theorems.hpp"
#include "semiglue/toric.hpp"
#include "semiglue/verdicts.hpp"

namespace semiglue::cli {

using json = nlohmann::ordered_json;

std::vector<std::string> commands() {
  return {"analyze", "glue", "star-glue", "extend", "join", "betti", "pf", "sifr", "hilbert", "verify", "fixtures"};
}

namespace {

const std::set<std::string> kProperties{"projective", "tangent-cone", "gorenstein"};

// ---- parsing helpers -------------------------------------------------------

Int parse_int(std::string_view text, const std::string& where) {
  Int v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec == std::errc::result_out_of_range)
    throw InputError(where + ": " + (text.empty() ? "empty integer" : "integer out of 64-bit range"));
  if (ec != std::errc() || ptr != last) throw InputError(where + ": '" + std::string(text) + "' is not an integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Int> parse_list(const std::string& s, const std::string& where) {
  std::vector<Int> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_int(part, where));
  return out;
}

void require_nonnegative(const std::vector<Int>& v, const std::string& where) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) throw InputError(where + ": entry " + std::to_string(i + 1) + " is negative");
}

// "3,5,7" is numerical; "3,0;5,0" lists affine generators.
SemigroupInput parse_semigroup_arg(const std::string& s, const std::string& where, bool force_affine = false) {
  SemigroupInput in;
  if (s.find(';') == std::string::npos && !force_affine) {
    for (Int g : parse_list(s, where)) in.generators.push_back({g});
  } else {
    in.kind = SemigroupInput::Kind::Affine;
    for (const auto& part : split(s, ';')) {
      if (part.empty()) continue;
      in.generators.push_back(parse_list(part, where));
    }
  }
  for (const auto& g : in.generators) require_nonnegative(g, where);
  return in;
}

// Rows of a matrix whose columns are the generators.
SemigroupInput parse_matrix_arg(const std::string& s, const std::string& where) {
  std::vector<std::vector<Int>> rows;
  for (const auto& part : split(s, ';'))
    if (!part.empty()) rows.push_back(parse_list(part, where));
  if (rows.empty()) throw InputError(where + ": empty matrix");
  SemigroupInput in;
  in.kind = SemigroupInput::Kind::Affine;
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    std::vector<Int> g;
    for (const auto& r : rows) {
      if (r.size() != rows.front().size()) throw InputError(where + ": rows have different lengths");
      g.push_back(r[c]);
    }
    in.generators.push_back(std::move(g));
  }
  for (const auto& g : in.generators) require_nonnegative(g, where);
  return in;
}

// ---- JSON job schema -------------------------------------------------------

Int json_int(const json& v, const std::string& ptr) {
  if (v.is_string()) return parse_int(v.get<std::string>(), ptr);
  if (v.is_number_integer()) return v.get<Int>();
  throw InputError(ptr + ": expected an integer as a decimal string");
}

std::vector<Int> json_int_array(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw InputError(ptr + ": expected an array of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(json_int(v[i], ptr + "/" + std::to_string(i)));
  return out;
}

SemigroupInput json_semigroup(const json& obj, const std::string& ptr) {
  SemigroupInput in;
  if (!obj.contains("type") || !obj["type"].is_string()) throw InputError(ptr + "/type: expected \"numerical\" or \"affine\"");
  const std::string type = obj["type"].get<std::string>();
  if (type == "numerical")
    in.kind = SemigroupInput::Kind::Numerical;
  else if (type == "affine")
    in.kind = SemigroupInput::Kind::Affine;
  else
    throw InputError(ptr + "/type: expected \"numerical\" or \"affine\", got \"" + type + "\"");
  const bool has_gens = obj.contains("generators"), has_matrix = obj.contains("matrix");
  if (has_gens == has_matrix) throw InputError(ptr + ": give exactly one of generators and matrix");
  if (has_gens) {
    const json& g = obj["generators"];
    if (!g.is_array() || g.empty()) throw InputError(ptr + "/generators: expected a nonempty array");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string p = ptr + "/generators/" + std::to_string(i);
      if (g[i].is_array())
        in.generators.push_back(json_int_array(g[i], p));
      else
        in.generators.push_back({json_int(g[i], p)});
      for (std::size_t c = 0; c < in.generators.back().size(); ++c)
        if (in.generators.back()[c] < 0) throw InputError(p + (g[i].is_array() ? "/" + std::to_string(c) : "") + ": negative entry");
    }
  } else {
    const json& m = obj["matrix"];
    if (!m.is_array() || m.empty()) throw InputError(ptr + "/matrix: expected a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    for (std::size_t r = 0; r < m.size(); ++r) {
      const std::string p = ptr + "/matrix/" + std::to_string(r);
      rows.push_back(json_int_array(m[r], p));
      if (rows.back().size() != rows.front().size()) throw InputError(p + ": rows have different lengths");
      for (std::size_t c = 0; c < rows.back().size(); ++c)
        if (rows.back()[c] < 0) throw InputError(p + "/" + std::to_string(c) + ": negative entry");
    }
    for (std::size_t c = 0; c < rows.front().size(); ++c) {
      std::vector<Int> g;
      for (const auto& row : rows) g.push_back(row[c]);
      in.generators.push_back(std::move(g));
    }
  }
  if (in.kind == SemigroupInput::Kind::Numerical)
    for (std::size_t i = 0; i < in.generators.size(); ++i)
      if (in.generators[i].size() != 1)
        throw InputError(ptr + "/generators/" + std::to_string(i) + ": numerical generators have one entry");
  for (const auto& [key, _] : obj.items())
    if (key != "type" && key != "generators" && key != "matrix") throw InputError(ptr + "/" + key + ": unknown key");
  return in;
}

json semigroup_json(const SemigroupInput& in) {
  json g = json::array();
  for (const auto& v : in.generators) {
    if (in.kind == SemigroupInput::Kind::Numerical) {
      g.push_back(std::to_string(v.front()));
    } else {
      json row = json::array();
      for (Int x : v) row.push_back(std::to_string(x));
      g.push_back(row);
    }
  }
  return {{"type", in.kind == SemigroupInput::Kind::Numerical ? "numerical" : "affine"}, {"generators", g}};
}

json int_array(const std::vector<Int>& v) {
  json a = json::array();
  for (Int x : v) a.push_back(std::to_string(x));
  return a;
}

// ---- conversions -------------------------------------------------------------

NumericalSemigroup numerical(const SemigroupInput& in, const std::string& what) {
  std::vector<Int> g;
  for (const auto& v : in.generators) {
    if (v.size() != 1) throw InputError(what + ": expected a numerical semigroup");
    g.push_back(v.front());
  }
  return NumericalSemigroup(std::move(g));
}

AffineSemigroup affine(const SemigroupInput& in) {
  std::vector<NatVector> g;
  for (const auto& v : in.generators) g.emplace_back(v);
  if (g.empty()) throw InputError("semigroup has no generators");
  return AffineSemigroup(std::move(g));
}

const SemigroupInput& need(const std::optional<SemigroupInput>& s, const char* what) {
  if (!s) throw InputError(std::string("missing ") + what);
  return *s;
}

GluingSpec gluing_spec(const JobSpec& job) {
  GluingSpec spec{numerical(need(job.semigroup, "left factor (--left)"), "left factor"),
                  numerical(need(job.right, "right factor (--right)"), "right factor"), job.b, job.a};
  if (spec.b.size() != spec.left.embedding_dimension())
    throw InputError("b needs one entry per generator of the left factor");
  if (spec.a.size() != spec.right.embedding_dimension())
    throw InputError("a needs one entry per generator of the right factor");
  std::vector<std::string> v = gluing_violations(spec);
  if (!v.empty()) {
    std::string msg = "invalid gluing:";
    for (const auto& s : v) msg += " " + s + ";";
    msg.pop_back();
    throw InputError(msg);
  }
  return spec;
}

struct Context {
  Deadline deadline;
  unsigned threads = 1;
};

VerdictOptions verdict_options(const Context& ctx) {
  VerdictOptions o;
  o.deadline = ctx.deadline;
  o.threads = ctx.threads;
  return o;
}

BettiTable betti(const AffineSemigroup& s, const Context& ctx, std::optional<NatVector> box = std::nullopt) {
  BettiOptions o;
  o.box = std::move(box);
  o.deadline = ctx.deadline;
  o.threads = ctx.threads;
  o.grow_rounds = 4;
  return betti_degrees(s, o);
}

// ---- JSON output helpers ---------------------------------------------------

std::string num(Int x) { return std::to_string(x); }
std::string num(std::size_t x) { return std::to_string(x); }

json vec(const NatVector& v) { return int_array(v.entries()); }

json vec_list(std::vector<NatVector> v) {
  std::sort(v.begin(), v.end());
  json a = json::array();
  for (const auto& x : v) a.push_back(vec(x));
  return a;
}

json totals_json(const BettiTable& t) {
  json a = json::array();
  for (auto x : t.totals()) a.push_back(num(x));
  return a;
}

json betti_json(const BettiTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    json degrees = json::array();
    for (const auto& [d, m] : t.rows[i]) degrees.push_back({{"degree", vec(d)}, {"multiplicity", num(m)}});
    rows.push_back({{"homological_degree", num(i)}, {"degrees", degrees}});
  }
  return rows;
}

json verdict_json(const Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.cross_checks)
    checks.push_back({{"method", c.method}, {"result", c.result ? json(*c.result) : json(nullptr)}, {"detail", c.detail}});
  return {{"property", v.property}, {"result", v.result},       {"method", v.method},
          {"witness", v.witness},   {"cross_checks", checks}, {"conflict", v.conflict()}};
}

json report_json(const TheoremReport& r) {
  json hyps = json::array(), claims = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  for (const auto& c : r.claims)
    claims.push_back({{"name", c.name},
                      {"predicted", c.predicted},
                      {"computed", c.computed},
                      {"unconditional", c.unconditional},
                      {"agree", c.agree()}});
  return {{"theorem", r.theorem},
          {"instance", r.instance},
          {"hypotheses", hyps},
          {"hypotheses_hold", r.hypotheses_hold()},
          {"claims", claims},
          {"predicted", r.predicted},
          {"computed", r.computed},
          {"agree", r.agree},
          {"status", r.status()},
          {"discrepancies", r.discrepancies},
          {"notes", r.notes}};
}

json ideal_json(const BinomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.to_string(ideal.variables));
  return {{"variables", ideal.variables}, {"order", "degrevlex"}, {"groebner_basis", gens}};
}

struct Outcome {
  json result = json::object();
  bool conflict = false;
};

std::vector<Verdict> numerical_verdicts(const NumericalSemigroup& s, const std::set<std::string>& props,
                                        const Context& ctx) {
  std::vector<Verdict> out;
  const auto o = verdict_options(ctx);
  if (props.count("projective")) out.push_back(acm_projective_closure(s, o));
  if (props.count("tangent-cone")) out.push_back(cm_tangent_cone(s, o));
  if (props.count("gorenstein")) out.push_back(gorenstein_projective_closure(s, o));
  return out;
}

void add_verdicts(Outcome& oc, const std::vector<Verdict>& vs) {
  json a = json::array();
  for (const auto& v : vs) {
    a.push_back(verdict_json(v));
    oc.conflict = oc.conflict || v.conflict();
  }
  oc.result["verdicts"] = a;
}

// ---- commands -----------------------------------------------------------------

Outcome cmd_analyze(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto& in = need(job.semigroup, "semigroup (--numerical, --affine or --matrix)");
  oc.result["semigroup"] = semigroup_json(in);
  if (in.kind == SemigroupInput::Kind::Numerical) {
    const NumericalSemigroup s = numerical(in, "semigroup");
    const auto pf = pf_numeric(s);
    oc.result["generators"] = int_array(s.generators());
    oc.result["multiplicity"] = num(s.multiplicity());
    oc.result["embedding_dimension"] = num(s.embedding_dimension());
    oc.result["frobenius"] = num(frobenius(s));
    oc.result["genus"] = num(gaps(s).size());
    oc.result["pseudo_frobenius"] = int_array(pf);
    oc.result["symmetric"] = pf.size() == 1;
    oc.result["toric_ideal"] = ideal_json(toric_ideal(s, ctx.deadline));
    add_verdicts(oc, numerical_verdicts(s, job.properties.empty() ? kProperties : job.properties, ctx));
  } else {
    if (!job.properties.empty()) throw InputError("verdict flags apply to numerical semigroups only");
    const AffineSemigroup s = affine(in);
    const BettiTable t = betti(s, ctx);
    const auto summary = resolution_summary(s, t);
    oc.result["rank"] = num(s.rank());
    oc.result["toric_ideal"] = ideal_json(toric_ideal(s, ctx.deadline));
    oc.result["betti_totals"] = totals_json(t);
    oc.result["projective_dimension"] = num(summary.pd);
    oc.result["depth"] = num(summary.depth);
    oc.result["maximal_projective_dimension"] = summary.pd + 1 == s.size();
    oc.result["cohen_macaulay"] = summary.cm;
    oc.result["gorenstein"] = summary.gorenstein;
    if (summary.pd + 1 == s.size()) oc.result["pseudo_frobenius"] = vec_list(pf_via_betti(s, t));
  }
  return oc;
}

std::string origin_label(const GeneratorOrigin& o) {
  return std::string(o.side == Side::Left ? "q*m_" : "p*n_") + std::to_string(o.index + 1);
}

json readings_json(const LcmConditionCheck& c) {
  return {{"zero_convention", c.zero_convention}, {"literal", c.literal}, {"non_divisibility", c.non_divisibility}};
}

GroebnerBasis degrevlex_basis(const NumericalSemigroup& s, const Deadline& d) {
  return GroebnerBasis{MonomialOrder(MonomialOrderSpec::degrevlex(s.embedding_dimension())),
                       toric_ideal(s, d).generators, true, true};
}

Outcome cmd_glue(const JobSpec& job, const Context& ctx, bool star) {
  Outcome oc;
  const GluingSpec spec = gluing_spec(job);
  if (star && !is_star_gluing(spec))
    throw InputError("not a star gluing: sum a = " + num(spec.sum_a()) + " is not below sum b = " + num(spec.sum_b()));
  const GluedSemigroup g = glue(spec);
  json origin = json::array();
  for (const auto& o : g.origin) origin.push_back(origin_label(o));
  oc.result["left"] = int_array(spec.left.generators());
  oc.result["right"] = int_array(spec.right.generators());
  oc.result["b"] = int_array(spec.b);
  oc.result["a"] = int_array(spec.a);
  oc.result["p"] = num(spec.p());
  oc.result["q"] = num(spec.q());
  oc.result["gluing_order"] = int_array(g.glued_order);
  oc.result["generators"] = int_array(g.semigroup.generators());
  oc.result["origin"] = origin;
  oc.result["gluing_type"] = to_string(is_nice_gluing(spec));
  oc.result["star"] = is_star_gluing(spec);
  oc.result["condition_A"] = readings_json(condition_A(spec, degrevlex_basis(spec.left, ctx.deadline)));
  oc.result["condition_B"] = readings_json(condition_B(spec, degrevlex_basis(spec.right, ctx.deadline)));
  std::set<std::string> props = job.properties;
  if (props.empty()) props.insert(star ? "tangent-cone" : "projective");
  add_verdicts(oc, numerical_verdicts(g.semigroup, props, ctx));
  return oc;
}

AffineSemigroup as_affine(const SemigroupInput& in) {
  if (in.kind == SemigroupInput::Kind::Numerical)
    return AffineSemigroup::from_numerical(numerical(in, "semigroup"));
  return affine(in);
}

Outcome cmd_extend(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto& in = need(job.semigroup, "base semigroup");
  if (!job.l) throw InputError("missing l (--l)");
  const ExtensionSpec spec{as_affine(in), *job.l, job.u};
  const Extension e = extend(spec);
  oc.result["base"] = semigroup_json(in);
  oc.result["l"] = num(*job.l);
  oc.result["u"] = int_array(job.u);
  oc.result["a"] = vec(e.a);
  json gens = json::array();
  for (const auto& g : e.semigroup.generators()) gens.push_back(vec(g));
  oc.result["generators"] = gens;
  const BettiTable tb = betti(spec.base, ctx), te = betti(e.semigroup, ctx);
  const bool base_mpd = tb.pd() + 1 == spec.base.size(), e_mpd = te.pd() + 1 == e.semigroup.size();
  oc.result["base_betti_totals"] = totals_json(tb);
  oc.result["betti_totals"] = totals_json(te);
  oc.result["maximal_projective_dimension"] = e_mpd;
  if (e_mpd) oc.result["pseudo_frobenius"] = vec_list(pf_via_betti(e.semigroup, te));
  if (base_mpd) {
    std::vector<NatVector> predicted;
    for (const auto& f : pf_via_betti(spec.base, tb)) predicted.push_back(f.scaled(*job.l) + e.a.scaled(*job.l - 1));
    oc.result["pseudo_frobenius_from_base"] = vec_list(predicted);
  }
  return oc;
}

std::pair<AffineSemigroup, AffineSemigroup> join_factors(const JobSpec& job) {
  const auto& l = need(job.semigroup, "left semigroup (--left)");
  const auto& r = need(job.right, "right semigroup (--right)");
  if (l.kind == SemigroupInput::Kind::Numerical && r.kind == SemigroupInput::Kind::Numerical)
    return {axis_embedding(numerical(l, "left"), 2, 0), axis_embedding(numerical(r, "right"), 2, 1)};
  if (l.kind != r.kind) throw InputError("join factors must both be numerical or both affine");
  return {affine(l), affine(r)};
}

json sifr_json(const SifrResult& s) {
  json out{{"holds", s.holds}};
  if (s.witness)
    out["witness"] = {{"homological_degree", num(s.witness->level)},
                      {"first", vec(s.witness->first)},
                      {"second", vec(s.witness->second)}};
  return out;
}

Outcome cmd_join(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto [left, right] = join_factors(job);
  const Join j = join(left, right);
  json gens = json::array();
  for (const auto& g : j.semigroup.generators()) gens.push_back(vec(g));
  oc.result["generators"] = gens;
  const BettiTable tl = betti(left, ctx), tr = betti(right, ctx), tj = betti(j.semigroup, ctx);
  oc.result["betti_totals"] = totals_json(tj);
  oc.result["tensor_product_matches"] = tensor_betti(tl, tr) == tj;
  oc.result["sifr"] = {{"left", sifr_json(sifr_check(left, tl))},
                       {"right", sifr_json(sifr_check(right, tr))},
                       {"join", sifr_json(sifr_check(j.semigroup, tj))}};
  return oc;
}

std::optional<NatVector> box_of(const JobSpec& job, std::size_t dim) {
  if (!job.box) return std::nullopt;
  if (job.box->size() != dim) throw InputError("box dimension does not match the semigroup");
  require_nonnegative(*job.box, "box");
  return NatVector(*job.box);
}

Outcome cmd_betti(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto& in = need(job.semigroup, "semigroup");
  const AffineSemigroup s = as_affine(in);
  const auto box = box_of(job, s.dim());
  const BettiTable t = betti(s, ctx, box);
  oc.result["semigroup"] = semigroup_json(in);
  oc.result["certified"] = !box.has_value();
  oc.result["box"] = box ? vec(*box) : vec(betti_degree_bound(s, ctx.deadline));
  oc.result["rows"] = betti_json(t);
  oc.result["totals"] = totals_json(t);
  oc.result["projective_dimension"] = num(t.pd());
  return oc;
}

Outcome cmd_pf(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto& in = need(job.semigroup, "semigroup");
  oc.result["semigroup"] = semigroup_json(in);
  if (in.kind == SemigroupInput::Kind::Numerical) {
    const NumericalSemigroup s = numerical(in, "semigroup");
    const auto pf = pf_numeric(s);
    oc.result["frobenius"] = num(frobenius(s));
    oc.result["pseudo_frobenius"] = int_array(pf);
    oc.result["type"] = num(pf.size());
    return oc;
  }
  const AffineSemigroup s = affine(in);
  const BettiTable t = betti(s, ctx);
  const bool mpd = t.pd() + 1 == s.size();
  oc.result["maximal_projective_dimension"] = mpd;
  std::vector<NatVector> via_betti;
  if (mpd) via_betti = pf_via_betti(s, t);
  oc.result["pseudo_frobenius"] = vec_list(via_betti);
  const NatVector box = box_of(job, s.dim()).value_or(default_betti_box(s));
  json direct{{"box", vec(box)}};
  try {
    auto d = pf_affine_direct(s, box);
    direct["certified"] = true;
    direct["pseudo_frobenius"] = vec_list(d);
    std::sort(d.begin(), d.end());
    std::sort(via_betti.begin(), via_betti.end());
    direct["matches"] = d == via_betti;
    oc.conflict = d != via_betti;
  } catch (const ResourceError& e) {
    direct["certified"] = false;
    direct["reason"] = e.what();
  }
  oc.result["direct"] = direct;
  return oc;
}

Outcome cmd_sifr(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto& in = need(job.semigroup, "semigroup");
  const AffineSemigroup s = as_affine(in);
  const BettiTable t = betti(s, ctx);
  oc.result["semigroup"] = semigroup_json(in);
  oc.result["betti_totals"] = totals_json(t);
  oc.result["sifr"] = sifr_json(sifr_check(s, t));
  return oc;
}

Outcome cmd_hilbert(const JobSpec& job, const Context&) {
  Outcome oc;
  const NumericalSemigroup s = numerical(need(job.semigroup, "numerical semigroup (--numerical)"), "semigroup");
  const Int index = hilbert_stabilization_index(s);
  const Int upto = job.upto.value_or(index + s.multiplicity());
  if (upto < 0) throw InputError("upto must be nonnegative");
  oc.result["generators"] = int_array(s.generators());
  oc.result["upto"] = num(upto);
  oc.result["values"] = int_array(hilbert_gr(s, upto));
  oc.result["stabilization_index"] = num(index);
  oc.result["nondecreasing"] = hilbert_nondecreasing(s, upto);
  return oc;
}

// ---- verify -----------------------------------------------------------------

// Deterministic across platforms, unlike the standard distributions.
struct Sampler {
  std::mt19937_64 rng;
  Int uniform(Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::optional<NumericalSemigroup> semigroup() {
    const Int e = uniform(2, 3);
    std::vector<Int> g;
    for (Int i = 0; i < e; ++i) g.push_back(uniform(2, 13));
    try {
      auto s = NumericalSemigroup::from_generating_set(g);
      if (s.embedding_dimension() >= 2) return s;
    } catch (const InputError&) {
    }
    return std::nullopt;
  }
};

std::vector<std::pair<std::string, std::function<TheoremReport(const TheoremOptions&)>>> random_jobs(
    const std::string& theorem, Int count, std::uint64_t seed) {
  std::vector<std::pair<std::string, std::function<TheoremReport(const TheoremOptions&)>>> out;
  Sampler smp{std::mt19937_64(seed)};
  for (Int attempts = 0; static_cast<Int>(out.size()) < count && attempts < 1000 * count; ++attempts) {
    auto l = smp.semigroup(), r = smp.semigroup();
    if (!l || !r) continue;
    const std::string label = "random " + std::to_string(out.size() + 1);
    if (theorem == kJoinSifr) {
      auto a = axis_embedding(*l, 2, 0), b = axis_embedding(*r, 2, 1);
      out.push_back({label, [a, b](const TheoremOptions& o) { return verify_join_sifr(a, b, o); }});
      continue;
    }
    if (theorem == kExtensionPf) {
      const Int lev = smp.uniform(2, 3);
      std::vector<Int> u;
      for (std::size_t i = 0; i < l->embedding_dimension(); ++i) u.push_back(smp.uniform(0, 2));
      ExtensionSpec spec{AffineSemigroup::from_numerical(*l), lev, u};
      try {
        extend(spec);
      } catch (const InputError&) {
        continue;
      }
      out.push_back({label, [spec](const TheoremOptions& o) { return verify_extension_pf(spec, std::nullopt, o); }});
      continue;
    }
    std::vector<Int> b, a;
    for (std::size_t i = 0; i < l->embedding_dimension(); ++i) b.push_back(smp.uniform(0, 3));
    for (std::size_t i = 0; i < r->embedding_dimension(); ++i) a.push_back(smp.uniform(0, 2));
    GluingSpec spec{*l, *r, b, a};
    try {
      if (!gluing_violations(spec).empty() || glue(spec).semigroup.largest() > 700) continue;
    } catch (const InputError&) {
      continue;
    }
    std::function<TheoremReport(const TheoremOptions&)> f;
    if (theorem == kGluingGroebner)
      f = [spec](const TheoremOptions& o) { return verify_gluing_groebner(spec, RhoForm::Full, BlockOrder::XFirst, o); };
    else if (theorem == kGluingAcm)
      f = [spec](const TheoremOptions& o) { return verify_gluing_acm(spec, o); };
    else if (theorem == kStarTangentCone)
      f = [spec](const TheoremOptions& o) { return verify_star_tangent_cone(spec, o); };
    else
      f = [spec](const TheoremOptions& o) { return verify_gluing_gorenstein(spec, o); };
    out.push_back({label, f});
  }
  return out;
}

TheoremReport verify_single(const JobSpec& job, const TheoremOptions& o) {
  const std::string& t = job.theorem;
  if (t == kJoinSifr) {
    const auto [l, r] = join_factors(job);
    return verify_join_sifr(l, r, o);
  }
  if (t == kExtensionPf) {
    if (!job.l) throw InputError("missing l (--l)");
    const AffineSemigroup base = as_affine(need(job.semigroup, "base semigroup"));
    return verify_extension_pf(ExtensionSpec{base, *job.l, job.u}, box_of(job, base.dim()), o);
  }
  const GluingSpec spec{numerical(need(job.semigroup, "left factor (--left)"), "left factor"),
                        numerical(need(job.right, "right factor (--right)"), "right factor"), job.b, job.a};
  if (t == kGluingGroebner) return verify_gluing_groebner(spec, RhoForm::Full, BlockOrder::XFirst, o);
  if (t == kGluingAcm) return verify_gluing_acm(spec, o);
  if (t == kStarTangentCone) return verify_star_tangent_cone(spec, o);
  return verify_gluing_gorenstein(spec, o);
}

Outcome cmd_verify(const JobSpec& job, const Context& ctx) {
  Outcome oc;
  const auto ids = theorem_ids();
  const bool all = job.theorem == "all";
  if (!all && std::find(ids.begin(), ids.end(), job.theorem) == ids.end()) {
    std::string known;
    for (const auto& id : ids) known += " " + id;
    throw InputError("unknown theorem id '" + job.theorem + "'; known ids: all" + known);
  }
  TheoremOptions o;
  o.deadline = ctx.deadline;
  o.threads = ctx.threads;
  json reports = json::array();
  auto record = [&](json r, const TheoremReport& rep) {
    oc.conflict = oc.conflict || rep.conflict();
    reports.push_back(std::move(r));
  };
  oc.result["theorem"] = job.theorem;
  if (job.semigroup) {
    if (all) throw InputError("verify all takes no instance parameters");
    const TheoremReport rep = verify_single(job, o);
    record(report_json(rep), rep);
  } else {
    for (const auto& inst : all ? theorem_instances() : theorem_instances(job.theorem)) {
      const TheoremReport rep = inst.run(o);
      json r{{"label", inst.label}, {"worked_example", inst.worked_example}, {"misprint", inst.misprint}};
      r.update(report_json(rep));
      record(std::move(r), rep);
    }
  }
  if (job.probes)
    for (const auto& p : hypothesis_probes()) {
      if (!all && p.theorem != job.theorem) continue;
      const TheoremReport rep = p.run(o);
      json r{{"probe_hypothesis", p.hypothesis}};
      r.update(report_json(rep));
      record(std::move(r), rep);
    }
  if (job.random > 0) {
    if (all) throw InputError("--random needs a single theorem id");
    oc.result["seed"] = std::to_string(job.seed);
    for (const auto& [label, run] : random_jobs(job.theorem, job.random, job.seed)) {
      const TheoremReport rep = run(o);
      json r{{"label", label}};
      r.update(report_json(rep));
      record(std::move(r), rep);
    }
  }
  std::size_t agree = 0, conflict = 0, outside = 0;
  for (const auto& r : reports) {
    const std::string s = r["status"].get<std::string>();
    (s == "agree" ? agree : s == "CONFLICT" ? conflict : outside)++;
  }
  oc.result["summary"] = {{"reports", num(reports.size())},
                          {"agree", num(agree)},
                          {"conflict", num(conflict)},
                          {"outside_hypotheses", num(outside)}};
  oc.result["reports"] = reports;
  return oc;
}

// ---- fixtures ---------------------------------------------------------------

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string list_text(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string set_text(std::vector<NatVector> v) {
  std::sort(v.begin(), v.end());
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "}";
}

std::string top_degree(const BettiTable& t) {
  std::vector<NatVector> d = t.degrees(t.pd());
  return set_text(d);
}

Outcome cmd_fixtures(const Context& ctx) {
  Outcome oc;
  json rows = json::array();
  auto add = [&](const std::string& group, const std::string& name, const std::string& expected,
                 const std::string& computed, const std::string& detail = "") {
    const bool match = expected == computed;
    oc.conflict = oc.conflict || !match;
    json row{{"group", group}, {"name", name}, {"expected", expected}, {"computed", computed}, {"match", match}};
    if (!detail.empty()) row["detail"] = detail;
    rows.push_back(std::move(row));
  };
  const auto vo = verdict_options(ctx);
  const std::vector<std::pair<std::vector<Int>, bool>> closures{{{57, 95, 56, 96}, false},
                                                                {{250, 350, 550, 425, 476}, false},
                                                                {{87, 145, 203, 126, 154}, false},
                                                                {{87, 145, 203, 189, 231}, true}};
  for (const auto& [g, want] : closures) {
    const NumericalSemigroup s(g);
    const Verdict v = acm_projective_closure(s, vo);
    add("projective closure", s.to_string() + " arithmetically Cohen-Macaulay", bool_text(want),
        bool_text(v.result) + (v.conflict() ? " (cross-check conflict)" : ""));
  }
  const std::vector<std::pair<std::vector<Int>, bool>> cones{{{105, 252, 119, 136}, false}, {{3, 5, 7}, true}};
  for (const auto& [g, want] : cones) {
    const NumericalSemigroup s(g);
    const Verdict v = cm_tangent_cone(s, vo);
    add("tangent cone", s.to_string() + " Cohen-Macaulay tangent cone", bool_text(want),
        bool_text(v.result) + (v.conflict() ? " (cross-check conflict)" : ""));
  }
  {
    const NumericalSemigroup s({3, 5}), t({7, 12});
    const GluedSemigroup g = glue(GluingSpec{s, t, {1, 1}, {1, 1}});
    add("projective closure", "glue <3,5> and <7,12> with b=(1,1), a=(1,1) arithmetically Cohen-Macaulay", "false",
        bool_text(acm_projective_closure(g.semigroup, vo).result));
  }
  const AffineSemigroup a({NatVector{3, 0}, NatVector{5, 0}, NatVector{0, 1}, NatVector{1, 3}, NatVector{2, 3}});
  const Extension e = extend(ExtensionSpec{a, 2, {0, 0, 0, 0, 3}});
  const BettiTable ta = betti(a, ctx), tb = betti(e.semigroup, ctx);
  add("maximal projective dimension", "matrix A total Betti numbers", "(1,7,11,6,1)", list_text(ta.totals()));
  add("maximal projective dimension", "matrix A top Betti degree", "{(18,9)}", top_degree(ta));
  const auto pfa = pf_via_betti(a, ta);
  add("maximal projective dimension", "matrix A pseudo-Frobenius set", "{(7,2)}", set_text(pfa));
  add("maximal projective dimension", "matrix B total Betti numbers", "(1,7,17,18,8,1)", list_text(tb.totals()));
  add("maximal projective dimension", "matrix B top Betti degree", "{(48,36)}", top_degree(tb));
  add("maximal projective dimension", "matrix B pseudo-Frobenius set", "{(20,13)}", set_text(pf_via_betti(e.semigroup, tb)));
  {
    std::vector<NatVector> formula;
    for (const auto& f : pfa) formula.push_back(f.scaled(2) + e.a);
    add("maximal projective dimension", "2 PF(A) + (6,9)", "{(20,13)}", set_text(formula));
  }
  for (const auto& g : std::vector<std::vector<Int>>{{3, 5, 7}, {87, 145, 203, 252, 308}}) {
    const NumericalSemigroup s(g);
    if (!cm_tangent_cone(s, vo).result) continue;
    const Int upto = hilbert_stabilization_index(s) + s.multiplicity();
    add("hilbert function", s.to_string() + " Hilbert function non-decreasing", "true",
        bool_text(hilbert_nondecreasing(s, upto)));
  }
  TheoremOptions to;
  to.deadline = ctx.deadline;
  to.threads = ctx.threads;
  for (const auto& inst : theorem_instances()) {
    if (!inst.worked_example) continue;
    const TheoremReport r = inst.run(to);
    auto flag = [](bool conflict) { return conflict ? "CONFLICT" : "no CONFLICT"; };
    add(inst.theorem, inst.label, flag(inst.misprint), flag(r.conflict()), "status " + r.status());
  }
  std::size_t matched = 0;
  for (const auto& r : rows) matched += r["match"].get<bool>();
  oc.result["summary"] = {{"fixtures", num(rows.size())}, {"matched", num(matched)},
                          {"mismatched", num(rows.size() - matched)}};
  oc.result["fixtures"] = rows;
  return oc;
}

// ---- text rendering -----------------------------------------------------------

bool scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
           return scalar(x) || (x.is_array() && std::all_of(x.begin(), x.end(), scalar));
         });
}

std::string flat_text(const json& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += i ? ", " : "";
    if (v[i].is_array()) {
      s += "(";
      for (std::size_t j = 0; j < v[i].size(); ++j) s += (j ? "," : "") + scalar_text(v[i][j]);
      s += ")";
    } else {
      s += scalar_text(v[i]);
    }
  }
  return s;
}

void render(const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      std::string key = k;
      std::replace(key.begin(), key.end(), '_', ' ');
      if (scalar(x))
        out << pad << key << ": " << scalar_text(x) << "\n";
      else if (flat_array(x))
        out << pad << key << ": " << flat_text(x) << "\n";
      else {
        out << pad << key << ":\n";
        render(x, out, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (scalar(x) || flat_array(x)) {
        out << pad << "- " << (scalar(x) ? scalar_text(x) : flat_text(x)) << "\n";
      } else {
        out << pad << "-\n";
        render(x, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

// ---- dispatch ---------------------------------------------------------------

Outcome dispatch(const JobSpec& job, const Context& ctx) {
  const std::string& c = job.command;
  if (c == "analyze") return cmd_analyze(job, ctx);
  if (c == "glue") return cmd_glue(job, ctx, false);
  if (c == "star-glue") return cmd_glue(job, ctx, true);
  if (c == "extend") return cmd_extend(job, ctx);
  if (c == "join") return cmd_join(job, ctx);
  if (c == "betti") return cmd_betti(job, ctx);
  if (c == "pf") return cmd_pf(job, ctx);
  if (c == "sifr") return cmd_sifr(job, ctx);
  if (c == "hilbert") return cmd_hilbert(job, ctx);
  if (c == "verify") return cmd_verify(job, ctx);
  if (c == "fixtures") return cmd_fixtures(ctx);
  throw InputError("unknown command '" + c + "'");
}

void emit(const JobSpec& job, const json& envelope, std::ostream& out) {
  if (job.format == "text")
    render(envelope, out, 0);
  else
    out << envelope.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

JobSpec parse_job(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(": malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError(": expected a JSON object");
  JobSpec job;
  if (root.contains("schema_version") &&
      (!root["schema_version"].is_string() || root["schema_version"].get<std::string>() != kSchemaVersion))
    throw InputError(std::string("/schema_version: expected \"") + kSchemaVersion + "\"");
  if (!root.contains("command") || !root["command"].is_string()) throw InputError("/command: expected a command name");
  job.command = root["command"].get<std::string>();
  const auto cmds = commands();
  if (std::find(cmds.begin(), cmds.end(), job.command) == cmds.end())
    throw InputError("/command: unknown command '" + job.command + "'");
  if (root.contains("type") || root.contains("generators") || root.contains("matrix")) {
    json sg = json::object();
    for (const char* k : {"type", "generators", "matrix"})
      if (root.contains(k)) sg[k] = root[k];
    job.semigroup = json_semigroup(sg, "");
  }
  for (const auto& [key, _] : root.items())
    if (key != "schema_version" && key != "command" && key != "type" && key != "generators" && key != "matrix" &&
        key != "params")
      throw InputError("/" + key + ": unknown key");
  if (!root.contains("params")) return job;
  const json& p = root["params"];
  if (!p.is_object()) throw InputError("/params: expected an object");
  for (const auto& [key, v] : p.items()) {
    const std::string ptr = "/params/" + key;
    if (key == "right") {
      if (!v.is_object()) throw InputError(ptr + ": expected a semigroup object");
      job.right = json_semigroup(v, ptr);
    } else if (key == "b") {
      job.b = json_int_array(v, ptr);
    } else if (key == "a") {
      job.a = json_int_array(v, ptr);
    } else if (key == "u") {
      job.u = json_int_array(v, ptr);
    } else if (key == "l") {
      job.l = json_int(v, ptr);
    } else if (key == "box") {
      job.box = json_int_array(v, ptr);
      for (std::size_t i = 0; i < job.box->size(); ++i)
        if ((*job.box)[i] < 0) throw InputError(ptr + "/" + std::to_string(i) + ": negative entry");
    } else if (key == "upto") {
      job.upto = json_int(v, ptr);
    } else if (key == "properties") {
      if (!v.is_array()) throw InputError(ptr + ": expected an array of property names");
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string() || !kProperties.count(v[i].get<std::string>()))
          throw InputError(ptr + "/" + std::to_string(i) + ": expected projective, tangent-cone or gorenstein");
        job.properties.insert(v[i].get<std::string>());
      }
    } else if (key == "theorem") {
      if (!v.is_string()) throw InputError(ptr + ": expected a theorem id");
      job.theorem = v.get<std::string>();
    } else if (key == "probes") {
      if (!v.is_boolean()) throw InputError(ptr + ": expected a boolean");
      job.probes = v.get<bool>();
    } else if (key == "random") {
      job.random = json_int(v, ptr);
      if (job.random < 0) throw InputError(ptr + ": must be nonnegative");
    } else if (key == "seed") {
      const Int s = json_int(v, ptr);
      if (s < 0) throw InputError(ptr + ": must be nonnegative");
      job.seed = static_cast<std::uint64_t>(s);
    } else if (key == "format") {
      if (!v.is_string() || (v.get<std::string>() != "json" && v.get<std::string>() != "text"))
        throw InputError(ptr + ": expected \"json\" or \"text\"");
      job.format = v.get<std::string>();
    } else if (key == "threads") {
      const Int t = json_int(v, ptr);
      if (t < 0 || t > 1024) throw InputError(ptr + ": expected 0 to 1024");
      job.threads = static_cast<unsigned>(t);
    } else if (key == "deadline_ms") {
      job.deadline_ms = json_int(v, ptr);
      if (*job.deadline_ms <= 0) throw InputError(ptr + ": must be positive");
    } else {
      throw InputError(ptr + ": unknown key");
    }
  }
  return job;
}

std::string job_to_json(const JobSpec& job) {
  json root{{"schema_version", kSchemaVersion}, {"command", job.command}};
  if (job.semigroup) root.update(semigroup_json(*job.semigroup));
  json p = json::object();
  if (job.right) p["right"] = semigroup_json(*job.right);
  if (!job.b.empty()) p["b"] = int_array(job.b);
  if (!job.a.empty()) p["a"] = int_array(job.a);
  if (job.l) p["l"] = std::to_string(*job.l);
  if (!job.u.empty()) p["u"] = int_array(job.u);
  if (job.box) p["box"] = int_array(*job.box);
  if (job.upto) p["upto"] = std::to_string(*job.upto);
  if (!job.properties.empty()) p["properties"] = job.properties;
  if (!job.theorem.empty()) p["theorem"] = job.theorem;
  if (job.probes) p["probes"] = true;
  if (job.random) {
    p["random"] = std::to_string(job.random);
    p["seed"] = std::to_string(job.seed);
  }
  p["format"] = job.format;
  if (job.threads) p["threads"] = std::to_string(job.threads);
  if (job.deadline_ms) p["deadline_ms"] = std::to_string(*job.deadline_ms);
  root["params"] = p;
  return root.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semiglue: gluings, extensions and joins of numerical and affine semigroups"};
  app.require_subcommand(0, 1);

  struct Raw {
    std::string numerical, affine, matrix, left, right, b, a, u, box, format, input, theorem;
    Int l = 0, upto = 0, random = 0, deadline_ms = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    bool projective = false, tangent = false, gorenstein = false, probes = false, json_flag = false, text_flag = false;
  } raw;
  std::string top_input, top_format;
  app.add_option("--input", top_input, "job file in the JSON schema");
  app.add_option("--format", top_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::map<std::string, CLI::App*> subs;
  auto common = [&](CLI::App* s) {
    s->add_option("--input", raw.input, "job file in the JSON schema");
    s->add_option("--format", raw.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--json", raw.json_flag, "same as --format json");
    s->add_flag("--text", raw.text_flag, "same as --format text");
    s->add_option("--threads", raw.threads, "worker threads (default SEMIGLUE_THREADS or all cores)");
    s->add_option("--deadline-ms", raw.deadline_ms, "wall-clock budget (default SEMIGLUE_DEADLINE_MS)");
  };
  auto one_semigroup = [&](CLI::App* s) {
    s->add_option("--numerical", raw.numerical, "generators, e.g. 3,5,7");
    s->add_option("--affine", raw.affine, "generators separated by ';', e.g. '3,0;5,0;0,1'");
    s->add_option("--matrix", raw.matrix, "matrix rows separated by ';', generators as columns");
  };
  auto props = [&](CLI::App* s) {
    s->add_flag("--projective", raw.projective, "arithmetic Cohen-Macaulayness of the projective closure");
    s->add_flag("--tangent-cone", raw.tangent, "Cohen-Macaulayness of the tangent cone");
    s->add_flag("--gorenstein", raw.gorenstein, "Gorenstein property of the projective closure");
  };
  auto gluing = [&](CLI::App* s) {
    s->add_option("--left", raw.left, "left factor generators");
    s->add_option("--right", raw.right, "right factor generators");
    s->add_option("--b", raw.b, "coefficients of p over the left generators");
    s->add_option("--a", raw.a, "coefficients of q over the right generators");
  };
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    common(s);
    subs[name] = s;
    return s;
  };
  {
    auto* s = add("analyze", "toric ideal, invariants and verdicts for one semigroup");
    one_semigroup(s);
    props(s);
  }
  for (const char* name : {"glue", "star-glue"}) {
    auto* s = add(name, std::string(name) == "glue" ? "glue two numerical semigroups" : "star gluing (sum a < sum b)");
    gluing(s);
    props(s);
  }
  {
    auto* s = add("extend", "extension <l a_1, ..., l a_n, a> with a = sum u_i a_i");
    one_semigroup(s);
    s->add_option("--l", raw.l, "scaling factor");
    s->add_option("--u", raw.u, "coefficients of a over the generators");
  }
  {
    auto* s = add("join", "join of two semigroups; numerical factors go on separate axes");
    s->add_option("--left", raw.left, "left semigroup");
    s->add_option("--right", raw.right, "right semigroup");
  }
  {
    auto* s = add("betti", "multigraded Betti degrees");
    one_semigroup(s);
    s->add_option("--box", raw.box, "search box instead of the certified degree bound");
  }
  {
    auto* s = add("pf", "pseudo-Frobenius elements");
    one_semigroup(s);
    s->add_option("--box", raw.box, "box for the direct gap search");
  }
  {
    auto* s = add("sifr", "strongly indispensable free resolution test");
    one_semigroup(s);
  }
  {
    auto* s = add("hilbert", "Hilbert function of the tangent cone");
    s->add_option("--numerical", raw.numerical, "generators");
    s->add_option("--upto", raw.upto, "last degree (default stabilization index + multiplicity)");
  }
  {
    auto* s = add("verify", "compare a theorem's prediction with direct computation");
    s->add_option("theorem", raw.theorem, "theorem id or all")->required();
    gluing(s);
    s->add_option("--numerical", raw.numerical, "base semigroup for extension-pf");
    s->add_option("--affine", raw.affine, "base semigroup for extension-pf");
    s->add_option("--l", raw.l, "extension-pf scaling factor");
    s->add_option("--u", raw.u, "extension-pf coefficients");
    s->add_option("--box", raw.box, "extension-pf gap search box");
    s->add_flag("--probes", raw.probes, "also run instances violating one hypothesis each");
    s->add_option("--random", raw.random, "also run this many random instances");
    s->add_option("--seed", raw.seed, "seed for --random");
  }
  add("fixtures", "run the regression fixtures");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  JobSpec job;
  try {
    CLI::App* sub = nullptr;
    for (auto& [name, s] : subs)
      if (s->parsed()) sub = s;
    const std::string input = sub ? raw.input : top_input;
    if (!sub && input.empty()) {
      err << app.help();
      return 2;
    }
    if (!input.empty()) job = parse_job(read_file(input));
    if (sub) {
      if (!input.empty() && job.command != sub->get_name())
        throw InputError("/command: file holds '" + job.command + "' but the command line says '" +
                         sub->get_name() + "'");
      job.command = sub->get_name();
      auto given = [&](const char* opt) { return sub->count(opt) > 0; };
      auto has = [&](const char* opt) {
        try {
          return given(opt);
        } catch (const CLI::OptionNotFound&) {
          return false;
        }
      };
      const bool join_cmd = job.command == "join" || (job.command == "verify" && raw.theorem == kJoinSifr);
      if (has("--numerical")) job.semigroup = parse_semigroup_arg(raw.numerical, "--numerical");
      if (has("--affine")) job.semigroup = parse_semigroup_arg(raw.affine, "--affine", true);
      if (has("--matrix")) job.semigroup = parse_matrix_arg(raw.matrix, "--matrix");
      if (has("--left")) job.semigroup = parse_semigroup_arg(raw.left, "--left");
      if (has("--right")) job.right = parse_semigroup_arg(raw.right, "--right");
      if (!join_cmd && (has("--left") || has("--right")))
        for (const auto* s : {&job.semigroup, &job.right})
          if (*s && (*s)->kind != SemigroupInput::Kind::Numerical)
            throw InputError("gluing factors must be numerical semigroups");
      if (has("--b")) job.b = parse_list(raw.b, "--b");
      if (has("--a")) job.a = parse_list(raw.a, "--a");
      if (has("--u")) job.u = parse_list(raw.u, "--u");
      if (has("--l")) job.l = raw.l;
      if (has("--box")) job.box = parse_list(raw.box, "--box");
      if (has("--upto")) job.upto = raw.upto;
      if (has("--projective") && raw.projective) job.properties.insert("projective");
      if (has("--tangent-cone") && raw.tangent) job.properties.insert("tangent-cone");
      if (has("--gorenstein") && raw.gorenstein) job.properties.insert("gorenstein");
      if (has("theorem")) job.theorem = raw.theorem;
      if (has("--probes")) job.probes = raw.probes;
      if (has("--random")) job.random = raw.random;
      if (has("--seed")) job.seed = raw.seed;
      if (given("--threads")) job.threads = raw.threads;
      if (given("--deadline-ms")) {
        if (raw.deadline_ms <= 0) throw InputError("--deadline-ms must be positive");
        job.deadline_ms = raw.deadline_ms;
      }
      if (given("--format")) job.format = raw.format;
      if (raw.json_flag) job.format = "json";
      if (raw.text_flag) job.format = "text";
    }
    if (!top_format.empty()) job.format = top_format;
    if (job.random < 0) throw InputError("--random must be nonnegative");
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    json env{{"schema_version", kSchemaVersion}, {"command", job.command}, {"status", "error"}};
    const std::string msg = e.what();
    json error{{"kind", "input"}, {"message", msg}};
    if (!msg.empty() && (msg.front() == '/' || msg.front() == ':')) error["pointer"] = msg.substr(0, msg.find(':'));
    env["error"] = error;
    emit(job, env, out);
    return 2;
  }

  json env{{"schema_version", kSchemaVersion}, {"command", job.command}, {"input", json::parse(job_to_json(job))}};
  try {
    Context ctx;
    ctx.deadline = job.deadline_ms ? Deadline(std::chrono::milliseconds(*job.deadline_ms)) : Deadline::from_environment();
    ctx.threads = job.threads ? job.threads : default_thread_count();
    Outcome oc = dispatch(job, ctx);
    env["status"] = oc.conflict ? "CONFLICT" : "ok";
    env["result"] = std::move(oc.result);
    emit(job, env, out);
    return oc.conflict ? 1 : 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    env["status"] = "error";
    env["error"] = {{"kind", "input"}, {"message", e.what()}};
    emit(job, env, out);
    return 2;
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << "\n";
    env["status"] = "error";
    env["error"] = {{"kind", "resource"}, {"message", e.what()}};
    emit(job, env, out);
    return 3;
  } catch (const AlgebraError& e) {
    err << "internal error: " << e.what() << "\n";
    env["status"] = "error";
    env["error"] = {{"kind", "internal"}, {"message", e.what()}};
    emit(job, env, out);
    return 3;
  }
}

}  // namespace semiglue::cli
