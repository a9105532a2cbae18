#include "semiglue/semigroups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "semiglue/cone.hpp"
#include "semiglue/linalg.hpp"

namespace semiglue {

namespace {

// reachable[x] for x in [0, bound] using the given generators.
std::vector<char> reachable_table(const std::vector<Int>& gens, Int bound) {
  if (bound < 0) return {};
  if (bound > Int{1} << 31) throw ResourceError("membership table too large");
  std::vector<char> r(static_cast<std::size_t>(bound) + 1, 0);
  r[0] = 1;
  for (Int x = 1; x <= bound; ++x)
    for (Int g : gens)
      if (g <= x && r[x - g]) {
        r[x] = 1;
        break;
      }
  return r;
}

bool representable_by(const std::vector<Int>& gens, Int x) {
  if (x < 0) return false;
  return reachable_table(gens, x)[x] != 0;
}

std::string join_ints(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InputError("numerical semigroup needs at least one generator");
  for (Int g : gens_)
    if (g <= 0) throw InputError("generators must be positive");
  std::sort(gens_.begin(), gens_.end());
  if (std::adjacent_find(gens_.begin(), gens_.end()) != gens_.end())
    throw InputError("generators must be distinct");
  if (gcd_of(gens_) != 1) throw InputError("generators must have gcd 1");
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    std::vector<Int> smaller(gens_.begin(), gens_.begin() + static_cast<std::ptrdiff_t>(i));
    if (representable_by(smaller, gens_[i]))
      throw InputError("generator " + std::to_string(gens_[i]) + " is a combination of smaller generators");
  }
}

NumericalSemigroup NumericalSemigroup::from_generating_set(std::vector<Int> gens) {
  for (Int g : gens)
    if (g <= 0) throw InputError("generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Int> minimal;
  for (Int g : gens)
    if (!representable_by(minimal, g)) minimal.push_back(g);
  return NumericalSemigroup(std::move(minimal));
}

std::string NumericalSemigroup::to_string() const { return "<" + join_ints(gens_) + ">"; }

bool membership_num(const NumericalSemigroup& s, Int x) {
  if (x < 0) throw InputError("membership query must be non-negative");
  auto ap = apery(s, s.multiplicity());
  // Apery element of the residue class of x is the least member of that class.
  std::vector<Int> by_residue(static_cast<std::size_t>(s.multiplicity()));
  for (Int w : ap) by_residue[static_cast<std::size_t>(w % s.multiplicity())] = w;
  return x >= by_residue[static_cast<std::size_t>(x % s.multiplicity())];
}

std::vector<Int> apery(const NumericalSemigroup& s, Int m) {
  if (m <= 0) throw InputError("Apery set needs a positive element");
  if (m > Int{1} << 26) throw ResourceError("Apery modulus too large");
  const auto n = static_cast<std::size_t>(m);
  std::vector<Int> dist(n, -1);
  using Item = std::pair<Int, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[r]) continue;
    for (Int g : s.generators()) {
      const Int nd = checked_add(d, g);
      const std::size_t nr = static_cast<std::size_t>((static_cast<Int>(r) + g) % m);
      if (dist[nr] < 0 || nd < dist[nr]) {
        dist[nr] = nd;
        pq.push({nd, nr});
      }
    }
  }
  if (!std::all_of(dist.begin(), dist.end(), [](Int d) { return d >= 0; }))
    throw AlgebraError("Apery computation left a residue class unreached");
  if (m != s.multiplicity() && !membership_num(s, m)) throw InputError("Apery set needs an element of the semigroup");
  std::sort(dist.begin(), dist.end());
  return dist;
}

Int frobenius(const NumericalSemigroup& s) {
  auto ap = apery(s, s.multiplicity());
  return ap.back() - s.multiplicity();
}

std::vector<Int> gaps(const NumericalSemigroup& s) {
  const Int f = frobenius(s);
  std::vector<Int> out;
  if (f < 0) return out;
  auto r = reachable_table(s.generators(), f);
  for (Int x = 1; x <= f; ++x)
    if (!r[x]) out.push_back(x);
  return out;
}

std::vector<Int> pf_numeric(const NumericalSemigroup& s) {
  const Int f = frobenius(s);
  std::vector<Int> out;
  if (f < 0) return out;
  auto r = reachable_table(s.generators(), checked_add(f, s.largest()));
  for (Int x = 1; x <= f; ++x) {
    if (r[x]) continue;
    if (std::all_of(s.generators().begin(), s.generators().end(), [&](Int g) { return r[x + g] != 0; }))
      out.push_back(x);
  }
  return out;
}

std::vector<Int> ord_table(const NumericalSemigroup& s, Int upto) {
  if (upto < 0) throw InputError("ord table bound must be non-negative");
  if (upto > Int{1} << 31) throw ResourceError("ord table too large");
  std::vector<Int> t(static_cast<std::size_t>(upto) + 1, -1);
  t[0] = 0;
  for (Int x = 1; x <= upto; ++x)
    for (Int g : s.generators())
      if (g <= x && t[x - g] >= 0) t[x] = std::max(t[x], t[x - g] + 1);
  return t;
}

Int ord(const NumericalSemigroup& s, Int member) {
  if (member < 0) throw InputError("ord of a negative integer");
  const Int v = ord_table(s, member)[member];
  if (v < 0) throw InputError(std::to_string(member) + " is not in " + s.to_string());
  return v;
}

std::vector<Int> hilbert_gr(const NumericalSemigroup& s, Int upto) {
  if (upto < 0) throw InputError("Hilbert function bound must be non-negative");
  // ord(x) <= upto forces x <= upto * n_e.
  const auto t = ord_table(s, checked_mul(upto, s.largest()));
  std::vector<Int> h(static_cast<std::size_t>(upto) + 1, 0);
  for (Int o : t)
    if (o >= 0 && o <= upto) ++h[static_cast<std::size_t>(o)];
  return h;
}

Int hilbert_stabilization_index(const NumericalSemigroup& s) {
  const Int n1 = s.multiplicity();
  Int rest = 0;
  for (std::size_t i = 1; i < s.generators().size(); ++i) rest = checked_add(rest, s.generators()[i]);
  const Int bound = checked_mul(n1 - 1, rest);
  const Int start = std::max<Int>(0, bound - n1 + 1);
  const auto t = ord_table(s, start + n1 - 1);
  return *std::max_element(t.begin(), t.end());
}

bool hilbert_nondecreasing(const NumericalSemigroup& s, Int upto) {
  const Int stable = hilbert_stabilization_index(s);
  if (upto < stable)
    throw ResourceError("window " + std::to_string(upto) + " is below the stabilization index " +
                        std::to_string(stable));
  const auto h = hilbert_gr(s, stable);
  if (h.back() != s.multiplicity()) throw AlgebraError("Hilbert function did not stabilize at the multiplicity");
  return std::is_sorted(h.begin(), h.end());
}

Int GluingSpec::p() const {
  if (b.size() != left.generators().size()) throw InputError("b must have one entry per left generator");
  Int v = 0;
  for (std::size_t i = 0; i < b.size(); ++i) v = checked_add(v, checked_mul(b[i], left.generators()[i]));
  return v;
}

Int GluingSpec::q() const {
  if (a.size() != right.generators().size()) throw InputError("a must have one entry per right generator");
  Int v = 0;
  for (std::size_t j = 0; j < a.size(); ++j) v = checked_add(v, checked_mul(a[j], right.generators()[j]));
  return v;
}

Int GluingSpec::sum_b() const {
  Int v = 0;
  for (Int x : b) v = checked_add(v, x);
  return v;
}

Int GluingSpec::sum_a() const {
  Int v = 0;
  for (Int x : a) v = checked_add(v, x);
  return v;
}

std::vector<std::string> gluing_violations(const GluingSpec& spec) {
  std::vector<std::string> v;
  const auto& m = spec.left.generators();
  const auto& n = spec.right.generators();
  if (spec.b.size() != m.size()) v.push_back("b must have " + std::to_string(m.size()) + " entries");
  if (spec.a.size() != n.size()) v.push_back("a must have " + std::to_string(n.size()) + " entries");
  if (!v.empty()) return v;
  if (std::any_of(spec.b.begin(), spec.b.end(), [](Int x) { return x < 0; })) v.push_back("b has a negative entry");
  if (std::any_of(spec.a.begin(), spec.a.end(), [](Int x) { return x < 0; })) v.push_back("a has a negative entry");
  if (!v.empty()) return v;
  const Int p = spec.p(), q = spec.q();
  if (p == 0) v.push_back("p = 0");
  if (q == 0) v.push_back("q = 0");
  if (!v.empty()) return v;
  if (std::gcd(p, q) != 1) v.push_back("gcd(p, q) = " + std::to_string(std::gcd(p, q)));
  if (std::find(m.begin(), m.end(), p) != m.end()) v.push_back("p = " + std::to_string(p) + " is a left generator");
  if (std::find(n.begin(), n.end(), q) != n.end()) v.push_back("q = " + std::to_string(q) + " is a right generator");
  for (Int mi : m)
    for (Int nj : n)
      if (checked_mul(q, mi) == checked_mul(p, nj))
        v.push_back("q*" + std::to_string(mi) + " = p*" + std::to_string(nj));
  return v;
}

GluedSemigroup glue(const GluingSpec& spec) {
  auto violations = gluing_violations(spec);
  if (!violations.empty()) {
    std::string msg = "invalid gluing:";
    for (const auto& s : violations) msg += " " + s + ";";
    msg.pop_back();
    throw InputError(msg);
  }
  const Int p = spec.p(), q = spec.q();
  std::vector<std::pair<Int, GeneratorOrigin>> tagged;
  std::vector<Int> order;
  for (std::size_t i = 0; i < spec.left.generators().size(); ++i) {
    order.push_back(checked_mul(q, spec.left.generators()[i]));
    tagged.push_back({order.back(), {Side::Left, i}});
  }
  for (std::size_t j = 0; j < spec.right.generators().size(); ++j) {
    order.push_back(checked_mul(p, spec.right.generators()[j]));
    tagged.push_back({order.back(), {Side::Right, j}});
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  NumericalSemigroup glued(order);
  std::vector<GeneratorOrigin> origin;
  for (const auto& [value, o] : tagged) origin.push_back(o);
  return GluedSemigroup{std::move(glued), std::move(order), std::move(origin)};
}

std::string to_string(NiceKind k) {
  switch (k) {
    case NiceKind::Nice:
      return "nice";
    case NiceKind::GeneralizedNice:
      return "generalized-nice";
    case NiceKind::Neither:
      return "neither";
  }
  return "neither";
}

NiceKind is_nice_gluing(const GluingSpec& spec) {
  const Int q = spec.q();
  const Int n1 = spec.right.multiplicity();
  const bool single = q % n1 == 0 && spec.sum_a() == q / n1 && spec.a.front() == q / n1;
  if (single && spec.sum_b() >= spec.a.front()) return NiceKind::Nice;
  if (is_star_gluing(spec)) return NiceKind::GeneralizedNice;
  return NiceKind::Neither;
}

bool is_star_gluing(const GluingSpec& spec) { return spec.sum_a() < spec.sum_b(); }

namespace {

LcmConditionCheck lcm_condition(const std::vector<Int>& c, const GroebnerBasis& gb, const char* label) {
  if (!gb.elements.empty() && gb.elements.front().nvars() != c.size())
    throw InputError(std::string(label) + ": basis and exponent vector have different lengths");
  LcmConditionCheck out;
  const Monomial xc{NatVector(c)};
  for (const auto& g : gb.elements) {
    const Monomial& lead = g.lead();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Int ci = c[i], ai = lead[i];
      const Int literal = (ci == 0 || ai == 0) ? std::max(ci, ai) : std::lcm(ci, ai);
      const Int zero = (ci == 0 || ai == 0) ? 0 : std::lcm(ci, ai);
      if (literal == ci && out.literal) {
        out.literal = false;
        out.first_literal_failure = lead.to_string() + " at position " + std::to_string(i + 1);
      }
      if (zero == ci) out.zero_convention = false;
    }
    if (divides(lead, xc)) out.non_divisibility = false;
  }
  return out;
}

}  // namespace

LcmConditionCheck condition_A(const GluingSpec& spec, const GroebnerBasis& gb_left) {
  if (!gb_left.reduced) throw InputError("condition A needs a reduced Groebner basis");
  return lcm_condition(spec.b, gb_left, "condition A");
}

LcmConditionCheck condition_B(const GluingSpec& spec, const GroebnerBasis& gb_right) {
  if (!gb_right.reduced && !gb_right.minimal) throw InputError("condition B needs a minimal standard basis");
  return lcm_condition(spec.a, gb_right, "condition B");
}

AffineSemigroup::AffineSemigroup(std::vector<NatVector> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InputError("affine semigroup needs at least one generator");
  const std::size_t d = gens_.front().dim();
  if (d == 0) throw InputError("generators must have positive dimension");
  for (const auto& g : gens_) {
    if (g.dim() != d) throw InputError("generators must share one dimension");
    if (g.is_zero()) throw InputError("generators must be nonzero");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] == gens_[j]) throw InputError("generator " + gens_[i].to_string() + " is repeated");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::vector<NatVector> others;
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (j != i) others.push_back(gens_[j]);
    if (find_factorization(others, gens_[i]))
      throw InputError("generator " + gens_[i].to_string() + " is a combination of the others");
  }
}

AffineSemigroup AffineSemigroup::from_numerical(const NumericalSemigroup& s) {
  std::vector<NatVector> g;
  for (Int n : s.generators()) g.push_back(NatVector{n});
  return AffineSemigroup(std::move(g));
}

AffineSemigroup AffineSemigroup::projective_closure(const NumericalSemigroup& s) {
  const Int ne = s.largest();
  std::vector<NatVector> g;
  for (Int n : s.generators()) g.push_back(NatVector{n, ne - n});
  g.push_back(NatVector{0, ne});
  return AffineSemigroup(std::move(g));
}

NatVector AffineSemigroup::generator_sum() const {
  NatVector s(dim());
  for (const auto& g : gens_) s += g;
  return s;
}

NatVector AffineSemigroup::generator_max() const {
  NatVector s(dim());
  for (const auto& g : gens_) s = componentwise_max(s, g);
  return s;
}

std::size_t AffineSemigroup::rank() const { return exact_rank(gens_); }

std::string AffineSemigroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? "," : "") + gens_[i].to_string();
  return out + ">";
}

namespace {

struct FactorSearch {
  const std::vector<NatVector>& gens;
  std::vector<std::unordered_set<NatVector>> dead;
  std::vector<Int> z;

  bool run(std::size_t i, const NatVector& r) {
    if (r.is_zero()) return true;
    if (i == gens.size()) return false;
    if (dead[i].contains(r)) return false;
    const auto& g = gens[i];
    Int most = std::numeric_limits<Int>::max();
    for (std::size_t c = 0; c < r.dim(); ++c)
      if (g[c] > 0) most = std::min(most, r[c] / g[c]);
    for (Int k = most; k >= 0; --k) {
      auto rest = r.minus(g.scaled(k));
      z[i] = k;
      if (rest && run(i + 1, *rest)) return true;
    }
    z[i] = 0;
    dead[i].insert(r);
    return false;
  }
};

}  // namespace

std::optional<std::vector<Int>> find_factorization(const std::vector<NatVector>& gens, const NatVector& x) {
  for (const auto& g : gens)
    if (g.dim() != x.dim()) throw InputError("dimension mismatch in membership query");
  FactorSearch search{gens, std::vector<std::unordered_set<NatVector>>(gens.size()), std::vector<Int>(gens.size(), 0)};
  if (!search.run(0, x)) return std::nullopt;
  return search.z;
}

std::optional<std::vector<Int>> membership_affine(const AffineSemigroup& s, const NatVector& x) {
  return find_factorization(s.generators(), x);
}

SemigroupBox::SemigroupBox(const AffineSemigroup& s, NatVector box, const Deadline& deadline)
    : box_(std::move(box)) {
  if (box_.dim() != s.dim()) throw InputError("box and semigroup have different dimensions");
  const std::size_t d = box_.dim();
  strides_.assign(d, 1);
  std::uint64_t volume = 1;
  for (std::size_t i = d; i-- > 0;) {
    strides_[i] = volume;
    const auto side = static_cast<std::uint64_t>(box_[i]) + 1;
    if (volume > kMaxVolume / side) throw ResourceError("box " + box_.to_string() + " is too large");
    volume *= side;
  }
  bits_.assign((volume + 63) / 64, 0);
  std::vector<std::int64_t> gen_offset;
  for (const auto& g : s.generators()) {
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < d; ++i) off += static_cast<std::uint64_t>(g[i]) * strides_[i];
    gen_offset.push_back(static_cast<std::int64_t>(off));
  }
  // Breadth-first from 0; coordinates travel with the index to test the box.
  std::deque<std::pair<std::uint64_t, NatVector>> queue;
  bits_[0] |= 1;
  elements_.push_back(0);
  queue.push_back({0, NatVector(d)});
  std::size_t steps = 0;
  while (!queue.empty()) {
    if ((++steps & 0xFFFF) == 0) deadline.check("semigroup box enumeration");
    auto [idx, x] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto& g = s[j];
      bool inside = true;
      for (std::size_t i = 0; i < d && inside; ++i) inside = x[i] + g[i] <= box_[i];
      if (!inside) continue;
      const std::uint64_t y = idx + static_cast<std::uint64_t>(gen_offset[j]);
      if ((bits_[y >> 6] >> (y & 63)) & 1u) continue;
      bits_[y >> 6] |= std::uint64_t{1} << (y & 63);
      elements_.push_back(y);
      queue.push_back({y, x + g});
    }
  }
  std::sort(elements_.begin(), elements_.end());
}

bool SemigroupBox::contains(const NatVector& x) const {
  if (!in_box(x)) throw AlgebraError("point " + x.to_string() + " lies outside the box " + box_.to_string());
  return contains_index(encode(x));
}

std::uint64_t SemigroupBox::encode(const NatVector& x) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) idx += static_cast<std::uint64_t>(x[i]) * strides_[i];
  return idx;
}

NatVector SemigroupBox::decode(std::uint64_t index) const {
  std::vector<Int> v(box_.dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<Int>(index / strides_[i]);
    index %= strides_[i];
  }
  return NatVector(std::move(v));
}

bool cone_membership(const AffineSemigroup& s, const NatVector& x) {
  return PolyhedralCone(s.generators()).contains(x);
}

std::vector<NatVector> extremal_rays(const AffineSemigroup& s) { return PolyhedralCone(s.generators()).extremal_rays(); }

GapSet gap_set_affine(const AffineSemigroup& s, const NatVector& box) {
  SemigroupBox members(s, box);
  PolyhedralCone cone(s.generators());
  IntegerLattice group(s.generators());
  const NatVector thick = s.generator_max();
  GapSet out;
  out.shell_clean = true;
  const std::uint64_t volume = members.encode(box) + 1;
  for (std::uint64_t idx = 0; idx < volume; ++idx) {
    if (members.contains_index(idx)) continue;
    NatVector x = members.decode(idx);
    if (!group.contains(x) || !cone.contains(x)) continue;
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (x[i] + thick[i] > box[i]) out.shell_clean = false;
    out.gaps.push_back(std::move(x));
  }
  std::sort(out.gaps.begin(), out.gaps.end());
  return out;
}

std::vector<NatVector> pf_affine_direct(const AffineSemigroup& s, const NatVector& box) {
  GapSet gs = gap_set_affine(s, box);
  if (!gs.shell_clean) throw ResourceError("box " + box.to_string() + " does not certify the gap set");
  SemigroupBox members(s, box + s.generator_max());
  std::vector<NatVector> out;
  for (const auto& f : gs.gaps)
    if (std::all_of(s.generators().begin(), s.generators().end(),
                    [&](const NatVector& g) { return members.contains(f + g); }))
      out.push_back(f);
  return out;
}

std::vector<NatVector> pf_in_box(const AffineSemigroup& s, const NatVector& box) {
  GapSet gs = gap_set_affine(s, box);
  SemigroupBox members(s, box + s.generator_max());
  std::vector<NatVector> out;
  for (const auto& f : gs.gaps)
    if (std::all_of(s.generators().begin(), s.generators().end(),
                    [&](const NatVector& g) { return members.contains(f + g); }))
      out.push_back(f);
  return out;
}

std::optional<InfiniteGapFamily> infinite_gap_family(const AffineSemigroup& s, const NatVector& box) {
  PolyhedralCone cone(s.generators());
  IntegerLattice group(s.generators());
  SemigroupBox members(s, box);
  const std::uint64_t volume = members.encode(box) + 1;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto dir = std::find_if(s.generators().begin(), s.generators().end(), [&](const NatVector& g) { return g[j] == 0; });
    if (dir == s.generators().end()) continue;
    // Values of coordinate j reachable by S.
    std::vector<Int> proj;
    for (const auto& g : s.generators())
      if (g[j] > 0) proj.push_back(g[j]);
    const std::vector<char> reach = reachable_table(proj, box[j]);
    for (std::uint64_t idx = 0; idx < volume; ++idx) {
      if (members.contains_index(idx)) continue;
      NatVector x = members.decode(idx);
      if (reach[x[j]] || !group.contains(x) || !cone.contains(x)) continue;
      return InfiniteGapFamily{std::move(x), *dir, j};
    }
  }
  return std::nullopt;
}

NatVector ExtensionSpec::a() const {
  if (u.size() != base.size()) throw InputError("u must have one entry per generator");
  NatVector v(base.dim());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0) throw InputError("u has a negative entry");
    v += base[i].scaled(u[i]);
  }
  return v;
}

Extension extend(const ExtensionSpec& spec) {
  if (spec.l < 1) throw InputError("l must be positive");
  const NatVector a = spec.a();
  if (a.is_zero()) throw InputError("a = sum u_i a_i must be nonzero");
  const bool coprime_entry =
      std::any_of(a.begin(), a.end(), [&](Int x) { return std::gcd(spec.l, x) == 1; });
  if (!coprime_entry)
    throw InputError("no coordinate of a = " + a.to_string() + " is coprime to l = " + std::to_string(spec.l));
  std::vector<NatVector> gens;
  for (const auto& g : spec.base.generators()) gens.push_back(g.scaled(spec.l));
  gens.push_back(a);
  try {
    return Extension{AffineSemigroup(std::move(gens)), a, spec.l};
  } catch (const InputError& e) {
    throw InputError(std::string("extension is not minimally generated: ") + e.what());
  }
}

Join join(const AffineSemigroup& left, const AffineSemigroup& right) {
  if (left.dim() != right.dim()) throw InputError("join needs semigroups in the same N^d");
  for (const auto& g : left.generators())
    for (const auto& h : right.generators())
      if (g == h) throw InputError("join needs disjoint generator sets; " + g.to_string() + " is shared");
  auto rays_left = extremal_rays(left);
  auto rays_right = extremal_rays(right);
  std::vector<NatVector> rays = rays_left;
  rays.insert(rays.end(), rays_right.begin(), rays_right.end());
  if (exact_rank(rays) != rays.size())
    throw InputError("extremal rays of the two semigroups are not linearly independent");
  std::vector<NatVector> gens = left.generators();
  gens.insert(gens.end(), right.generators().begin(), right.generators().end());
  AffineSemigroup joined(std::move(gens));
  const std::size_t dl = left.rank(), dr = right.rank(), d = joined.rank();
  std::sort(rays.begin(), rays.end());
  return Join{std::move(joined), std::move(rays), dl, dr, d};
}

TermOrderNd TermOrderNd::graded_lex(std::size_t d) {
  TermOrderNd t;
  t.priority.resize(d);
  std::iota(t.priority.begin(), t.priority.end(), 0);
  return t;
}

std::strong_ordering TermOrderNd::compare(const NatVector& a, const NatVector& b) const {
  if (kind == Kind::GradedLex) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
  }
  for (auto i : priority)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace semiglue
