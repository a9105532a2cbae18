#include "semiglue/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace semiglue {

std::vector<Monomial> GroebnerBasis::leads() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& b : elements) out.push_back(b.lead());
  return out;
}

Monomial reduce_monomial(const Monomial& m, std::span<const Binomial> basis, const MonomialOrder& order) {
  Monomial cur = m;
  for (;;) {
    bool rewritten = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.lead(), cur)) continue;
      Monomial next = quotient(cur, g.lead()) * g.tail();
      if (!order.greater(cur, next)) throw AlgebraError("reduction step did not decrease the monomial");
      cur = std::move(next);
      rewritten = true;
      break;
    }
    if (!rewritten) return cur;
  }
}

Binomial normal_form(const Binomial& b, std::span<const Binomial> basis, const MonomialOrder& order) {
  if (order.is_local()) throw InputError("normal_form requires a global order; use standard_basis_local");
  if (b.is_zero()) return b;
  Monomial lead = reduce_monomial(b.lead(), basis, order);
  Monomial tail = reduce_monomial(b.tail(), basis, order);
  return Binomial(std::move(lead), std::move(tail)).normalized(order);
}

namespace {

struct Pair {
  Int degree;
  std::size_t seq;
  std::size_t i, j;
  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.degree, a.seq) < std::tie(b.degree, b.seq);
  }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const Deadline& deadline, BuchbergerStats& stats)
      : order_(order), deadline_(deadline), stats_(stats) {}

  void add(Binomial h) {
    const std::size_t k = basis_.size();
    const Monomial& hl = h.lead();
    // New pairs (k, g): Gebauer-Moeller update.
    std::vector<std::size_t> cand;
    for (std::size_t g = 0; g < k; ++g)
      if (active_[g]) cand.push_back(g);
    std::vector<Monomial> lcms;
    for (auto g : cand) lcms.push_back(lcm_monomial(hl, basis_[g].lead()));
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (coprime(hl, basis_[cand[a]].lead())) continue;
      for (std::size_t c = 0; c < cand.size(); ++c) {
        if (c == a || !keep[c]) continue;
        if (divides(lcms[c], lcms[a]) && (lcms[c] != lcms[a] || c < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(hl, basis_[cand[a]].lead())) {
        ++stats_.coprime_skips;
        continue;
      }
      fresh.push_back({lcms[a].degree(), 0, cand[a], k});
    }
    // Old pairs whose lcm is a multiple of LM(h) with a strictly different
    // lcm on both sides are redundant.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial l = lcm_monomial(basis_[it->i].lead(), basis_[it->j].lead());
      if (divides(hl, l) && lcm_monomial(basis_[it->i].lead(), hl) != l &&
          lcm_monomial(basis_[it->j].lead(), hl) != l)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& p : fresh) {
      p.seq = seq_++;
      pairs_.insert(p);
    }
    for (std::size_t g = 0; g < k; ++g)
      if (active_[g] && divides(hl, basis_[g].lead())) active_[g] = false;
    basis_.push_back(std::move(h));
    active_.push_back(true);
    refresh_active();
  }

  void run() {
    while (!pairs_.empty()) {
      deadline_.check("buchberger");
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ++stats_.pairs_considered;
      Binomial s = s_pair(basis_[p.i], basis_[p.j], order_);
      Binomial r = normal_form(s, active_view_, order_);
      ++stats_.pairs_reduced;
      if (!r.is_zero()) add(std::move(r));
    }
  }

  Binomial reduce_input(const Binomial& b) const { return normal_form(b, active_view_, order_); }

  std::vector<Binomial> reduced_basis() const {
    std::vector<Binomial> out;
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (active_[g]) out.push_back(basis_[g]);
    std::vector<Binomial> red;
    for (const auto& b : out) {
      Monomial tail = reduce_monomial(b.tail(), out, order_);
      red.emplace_back(b.lead(), std::move(tail));
    }
    std::sort(red.begin(), red.end(),
              [&](const Binomial& a, const Binomial& b) { return order_.compare(a.lead(), b.lead()) < 0; });
    return red;
  }

 private:
  void refresh_active() {
    active_view_.clear();
    for (std::size_t g = 0; g < basis_.size(); ++g)
      if (active_[g]) active_view_.push_back(basis_[g]);
  }

  const MonomialOrder& order_;
  const Deadline& deadline_;
  BuchbergerStats& stats_;
  std::vector<Binomial> basis_;
  std::vector<bool> active_;
  std::vector<Binomial> active_view_;
  std::set<Pair> pairs_;
  std::size_t seq_ = 0;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order, const Deadline& deadline,
                         BuchbergerStats* stats) {
  if (order.is_local()) throw InputError("buchberger requires a global order; use standard_basis_local");
  BuchbergerStats local_stats;
  Engine engine(order, deadline, stats ? *stats : local_stats);
  for (const auto& g : gens) {
    if (g.nvars() != order.nvars()) throw InputError("generator and order have different variable sets");
    Binomial r = engine.reduce_input(g.normalized(order));
    if (!r.is_zero()) engine.add(std::move(r));
  }
  engine.run();
  return GroebnerBasis{order, engine.reduced_basis(), true, true};
}

bool is_groebner(std::span<const Binomial> candidate, const MonomialOrder& order) {
  if (order.is_local()) throw InputError("is_groebner requires a global order");
  std::vector<Binomial> g;
  for (const auto& b : candidate)
    if (!b.is_zero()) g.push_back(b.normalized(order));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].lead(), g[j].lead())) continue;
      if (!normal_form(s_pair(g[i], g[j], order), g, order).is_zero()) return false;
    }
  return true;
}

GroebnerBasis homogenize_ideal(const GroebnerBasis& gb) {
  const auto& spec = gb.order.spec();
  if (!gb.reduced || !spec || spec->grading != Grading::Degree || spec->tiebreak != TieBreak::Revlex ||
      spec->homog_var)
    throw InputError("homogenize_ideal expects a reduced basis under a degree reverse lexicographic order");
  const std::size_t x0 = spec->priority.size();
  MonomialOrderSpec ext = *spec;
  ext.priority.push_back(x0);
  ext.homog_var = x0;
  MonomialOrder order(ext);
  GroebnerBasis out{order, {}, true, gb.minimal};
  for (const auto& f : gb.elements) {
    Binomial h = homogenize(extend_variables(f, 1), x0);
    if (!h.is_normalized(order) || h.lead() != extend_variables(f.lead(), 1))
      throw AlgebraError("homogenization changed a leading monomial");
    out.elements.push_back(std::move(h));
  }
  return out;
}

GroebnerBasis standard_basis_local(std::span<const Binomial> gens, const MonomialOrderSpec& local,
                                   const Deadline& deadline) {
  MonomialOrder local_order(local);
  if (!local_order.is_local()) throw InputError("standard_basis_local expects a negative-degree order");
  const std::size_t n = local.priority.size();
  std::vector<Binomial> hgens;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw InputError("generator and order have different variable sets");
    hgens.push_back(homogenize(extend_variables(g, 1), n));
  }
  GroebnerBasis hgb = buchberger(hgens, MonomialOrder::homogenized_local(local, n), deadline);
  std::vector<Binomial> deh;
  for (const auto& b : hgb.elements) {
    Binomial d = dehomogenize(b, n);
    std::vector<Int> l(d.lead().exponents().begin(), d.lead().exponents().end() - 1);
    std::vector<Int> t(d.tail().exponents().begin(), d.tail().exponents().end() - 1);
    Binomial r = Binomial(Monomial(NatVector(std::move(l))), Monomial(NatVector(std::move(t)))).normalized(local_order);
    if (!r.is_zero()) deh.push_back(std::move(r));
  }
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < deh.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < deh.size() && !redundant; ++j) {
      if (i == j || !divides(deh[j].lead(), deh[i].lead())) continue;
      redundant = deh[j].lead() != deh[i].lead() || j < i;
    }
    if (!redundant) minimal.push_back(deh[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Binomial& a, const Binomial& b) {
    return local_order.compare(a.lead(), b.lead()) > 0;
  });
  return GroebnerBasis{local_order, std::move(minimal), false, true};
}

std::vector<InitialForm> initial_forms_ideal(std::span<const Binomial> basis, const MonomialOrderSpec& local) {
  MonomialOrder order(local);
  GroebnerBasis check = standard_basis_local(basis, local);
  for (const auto& b : check.elements) {
    bool covered = std::any_of(basis.begin(), basis.end(), [&](const Binomial& g) {
      return divides(g.normalized(order).lead(), b.lead());
    });
    if (!covered) throw InputError("initial_forms_ideal: input is not a standard basis for " + to_string(local));
  }
  std::vector<InitialForm> out;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    const Int dl = g.lead().degree(), dt = g.tail().degree();
    if (dl == dt)
      out.emplace_back(g.normalized(order));
    else
      out.emplace_back(dl < dt ? g.lead() : g.tail());
  }
  return out;
}

}  // namespace semiglue
