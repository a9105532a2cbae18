#include "semiglue/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semiglue {

NatVector::NatVector(std::vector<Int> entries) : v_(std::move(entries)) {
  for (Int x : v_)
    if (x < 0) throw InputError("NatVector entries must be non-negative");
}

NatVector NatVector::unit(std::size_t dim, std::size_t i) {
  NatVector u(dim);
  u.v_.at(i) = 1;
  return u;
}

void NatVector::set(std::size_t i, Int value) {
  if (value < 0) throw InputError("NatVector entries must be non-negative");
  v_.at(i) = value;
}

Int NatVector::total() const {
  Int s = 0;
  for (Int x : v_) s = checked_add(s, x);
  return s;
}

bool NatVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](Int x) { return x == 0; });
}

NatVector NatVector::operator+(const NatVector& o) const {
  NatVector r = *this;
  r += o;
  return r;
}

NatVector& NatVector::operator+=(const NatVector& o) {
  if (o.dim() != dim()) throw InputError("dimension mismatch in NatVector addition");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = checked_add(v_[i], o.v_[i]);
  return *this;
}

NatVector NatVector::scaled(Int k) const {
  if (k < 0) throw InputError("negative scale factor");
  NatVector r = *this;
  for (auto& x : r.v_) x = checked_mul(x, k);
  return r;
}

std::optional<NatVector> NatVector::minus(const NatVector& o) const {
  if (o.dim() != dim()) throw InputError("dimension mismatch in NatVector subtraction");
  NatVector r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (o.v_[i] > v_[i]) return std::nullopt;
    r.v_[i] -= o.v_[i];
  }
  return r;
}

bool NatVector::dominated_by(const NatVector& o) const {
  if (o.dim() != dim()) throw InputError("dimension mismatch in NatVector comparison");
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] > o.v_[i]) return false;
  return true;
}

std::string NatVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

NatVector componentwise_max(const NatVector& a, const NatVector& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
  std::vector<Int> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
  return NatVector(std::move(r));
}

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    if (any) os << '*';
    os << names.at(i);
    if (e_[i] > 1) os << '^' << e_[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

std::string Monomial::to_string() const { return to_string(default_variable_names(nvars())); }

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw InputError("monomials over different variable sets");
}

}  // namespace

Monomial lcm_monomial(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  return Monomial(componentwise_max(a.exponents(), b.exponents()));
}

Monomial gcd_monomial(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Int> r(a.nvars());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
  return Monomial(NatVector(std::move(r)));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  return a.exponents().dominated_by(b.exponents());
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  auto d = a.exponents().minus(b.exponents());
  if (!d) throw InputError("quotient: " + b.to_string() + " does not divide " + a.to_string());
  return Monomial(std::move(*d));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

MonomialOrderSpec MonomialOrderSpec::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return degrevlex(std::move(p));
}

MonomialOrderSpec MonomialOrderSpec::degrevlex(std::vector<std::size_t> priority) {
  return MonomialOrderSpec{Grading::Degree, TieBreak::Revlex, std::move(priority), std::nullopt};
}

std::string to_string(const MonomialOrderSpec& spec) {
  std::string s;
  switch (spec.grading) {
    case Grading::Degree: s = "deg"; break;
    case Grading::NegativeDegree: s = "negdeg"; break;
    case Grading::None: s = ""; break;
  }
  s += spec.tiebreak == TieBreak::Lex ? "lex" : "revlex";
  s += " [";
  for (std::size_t i = 0; i < spec.priority.size(); ++i)
    s += (i ? ">" : "") + std::string("x") + std::to_string(spec.priority[i] + 1);
  s += "]";
  return s;
}

MonomialOrder::MonomialOrder(MonomialOrderSpec spec) {
  const std::size_t n = spec.priority.size();
  std::vector<bool> seen(n, false);
  for (auto v : spec.priority) {
    if (v >= n || seen[v]) throw InputError("monomial order priority must be a permutation");
    seen[v] = true;
  }
  if (spec.homog_var && (n == 0 || spec.priority.back() != *spec.homog_var))
    throw InputError("homogenizing variable must be the lowest in the priority");
  nvars_ = n;
  local_ = spec.grading == Grading::NegativeDegree;
  if (spec.grading != Grading::None)
    steps_.push_back({Step::Kind::Weight, std::vector<Int>(n, local_ ? -1 : 1), {}});
  steps_.push_back(
      {spec.tiebreak == TieBreak::Lex ? Step::Kind::Lex : Step::Kind::Revlex, {}, spec.priority});
  description_ = to_string(spec);
  spec_ = std::move(spec);
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::vector<std::size_t> first,
                                         std::vector<std::size_t> second) {
  if (first.size() + second.size() != nvars) throw InputError("elimination blocks must cover all variables");
  MonomialOrder o;
  o.nvars_ = nvars;
  std::vector<Int> w1(nvars, 0), w2(nvars, 0);
  for (auto v : first) w1.at(v) = 1;
  for (auto v : second) w2.at(v) = 1;
  for (std::size_t i = 0; i < nvars; ++i)
    if (w1[i] + w2[i] != 1) throw InputError("elimination blocks must partition the variables");
  o.steps_.push_back({Step::Kind::Weight, std::move(w1), {}});
  o.steps_.push_back({Step::Kind::Revlex, {}, std::move(first)});
  o.steps_.push_back({Step::Kind::Weight, std::move(w2), {}});
  o.steps_.push_back({Step::Kind::Revlex, {}, std::move(second)});
  o.description_ = "elimination(degrevlex >> degrevlex)";
  return o;
}

MonomialOrder MonomialOrder::weighted_revlex(std::vector<Int> weights, std::vector<std::size_t> priority) {
  const std::size_t n = priority.size();
  if (weights.size() != n) throw InputError("one weight per variable is required");
  if (std::any_of(weights.begin(), weights.end(), [](Int w) { return w <= 0; }))
    throw InputError("weights must be positive");
  std::vector<bool> seen(n, false);
  for (auto v : priority) {
    if (v >= n || seen[v]) throw InputError("monomial order priority must be a permutation");
    seen[v] = true;
  }
  MonomialOrder o;
  o.nvars_ = n;
  o.steps_.push_back({Step::Kind::Weight, std::move(weights), {}});
  o.steps_.push_back({Step::Kind::Revlex, {}, std::move(priority)});
  o.description_ = "weighted revlex";
  return o;
}

MonomialOrder MonomialOrder::homogenized_local(const MonomialOrderSpec& local, std::size_t h) {
  MonomialOrder base(local);
  if (!base.is_local()) throw InputError("homogenized_local expects a negative-degree order");
  const std::size_t n = local.priority.size();
  if (h != n) throw InputError("the homogenizing variable must be appended after the local variables");
  MonomialOrder o;
  o.nvars_ = n + 1;
  o.steps_.push_back({Step::Kind::Weight, std::vector<Int>(n + 1, 1), {}});
  std::vector<Int> neg(n + 1, -1);
  neg[h] = 0;
  o.steps_.push_back({Step::Kind::Weight, std::move(neg), {}});
  o.steps_.push_back({local.tiebreak == TieBreak::Lex ? Step::Kind::Lex : Step::Kind::Revlex, {},
                      local.priority});
  o.description_ = "homogenized(" + to_string(local) + ")";
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != nvars_ || b.nvars() != nvars_)
    throw InputError("monomial and order have different variable sets");
  for (const auto& step : steps_) {
    switch (step.kind) {
      case Step::Kind::Weight: {
        Int wa = 0, wb = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (step.weights[i] == 0) continue;
          wa = checked_add(wa, checked_mul(step.weights[i], a[i]));
          wb = checked_add(wb, checked_mul(step.weights[i], b[i]));
        }
        if (wa != wb) return wa <=> wb;
        break;
      }
      case Step::Kind::Lex:
        for (auto v : step.vars)
          if (a[v] != b[v]) return a[v] <=> b[v];
        break;
      case Step::Kind::Revlex:
        for (auto it = step.vars.rbegin(); it != step.vars.rend(); ++it)
          if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        break;
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const { return description_; }

std::strong_ordering compare(const MonomialOrderSpec& order, const Monomial& a, const Monomial& b) {
  return MonomialOrder(order).compare(a, b);
}

Binomial::Binomial(Monomial lead, Monomial tail) : lead_(std::move(lead)), tail_(std::move(tail)) {
  require_same_ring(lead_, tail_);
}

Binomial Binomial::zero(std::size_t nvars) { return Binomial(Monomial::one(nvars), Monomial::one(nvars)); }

Binomial Binomial::normalized(const MonomialOrder& order) const {
  if (is_zero()) return zero(nvars());
  return order.greater(tail_, lead_) ? negated() : *this;
}

bool Binomial::is_normalized(const MonomialOrder& order) const {
  return is_zero() || order.greater(lead_, tail_);
}

std::string Binomial::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  return lead_.to_string(names) + " - " + tail_.to_string(names);
}

std::string Binomial::to_string() const { return to_string(default_variable_names(nvars())); }

bool same_up_to_sign(const Binomial& a, const Binomial& b) { return a == b || a == b.negated(); }

Binomial s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) return Binomial::zero(f.nvars());
  const Monomial l = lcm_monomial(f.lead(), g.lead());
  Monomial a = quotient(l, f.lead()) * f.tail();
  Monomial b = quotient(l, g.lead()) * g.tail();
  return Binomial(std::move(a), std::move(b)).normalized(order);
}

Binomial homogenize(const Binomial& b, std::size_t x0) {
  if (x0 >= b.nvars()) throw InputError("homogenizing variable out of range");
  if (b.lead()[x0] != 0 || b.tail()[x0] != 0)
    throw InputError("homogenizing variable already occurs in the binomial");
  const Int dl = b.lead().degree(), dt = b.tail().degree();
  NatVector lead = b.lead().exponents(), tail = b.tail().exponents();
  if (dl > dt) tail.set(x0, dl - dt);
  if (dt > dl) lead.set(x0, dt - dl);
  return Binomial(Monomial(std::move(lead)), Monomial(std::move(tail)));
}

Binomial dehomogenize(const Binomial& b, std::size_t x0) {
  if (x0 >= b.nvars()) throw InputError("homogenizing variable out of range");
  NatVector lead = b.lead().exponents(), tail = b.tail().exponents();
  lead.set(x0, 0);
  tail.set(x0, 0);
  return Binomial(Monomial(std::move(lead)), Monomial(std::move(tail)));
}

Monomial extend_variables(const Monomial& m, std::size_t count) {
  std::vector<Int> e = m.exponents().entries();
  e.resize(e.size() + count, 0);
  return Monomial(NatVector(std::move(e)));
}

Binomial extend_variables(const Binomial& b, std::size_t count) {
  return Binomial(extend_variables(b.lead(), count), extend_variables(b.tail(), count));
}

}  // namespace semiglue
