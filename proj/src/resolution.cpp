#include "semiglue/resolution.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "semiglue/linalg.hpp"
#include "semiglue/toric.hpp"

namespace semiglue {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > SimplicialComplex::kMaxVertices)
    throw ResourceError("at most " + std::to_string(SimplicialComplex::kMaxVertices) + " generators supported");
}

bool subset_of(Face a, Face b) { return (a & ~b) == 0; }

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t vertices, std::vector<Face> faces) : n_(vertices) {
  check_vertex_count(n_);
  const Face all = n_ == 32 ? ~Face{0} : (Face{1} << n_) - 1;
  for (Face f : faces)
    if (!subset_of(f, all)) throw InputError("face uses a vertex outside the complex");
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Face f : faces)
    if (std::none_of(facets_.begin(), facets_.end(), [&](Face g) { return subset_of(f, g); })) facets_.push_back(f);
  std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertices,
                                                 const std::vector<std::vector<std::size_t>>& facets) {
  check_vertex_count(vertices);
  std::vector<Face> masks;
  for (const auto& f : facets) {
    Face m = 0;
    for (auto v : f) {
      if (v >= vertices) throw InputError("facet vertex out of range");
      m |= Face{1} << v;
    }
    masks.push_back(m);
  }
  return SimplicialComplex(vertices, std::move(masks));
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size() const {
  std::vector<std::set<Face>> by_size(n_ + 1);
  for (Face f : facets_) {
    // Every submask of the facet, including f and 0.
    for (Face sub = f;; sub = (sub - 1) & f) {
      by_size[static_cast<std::size_t>(std::popcount(sub))].insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<std::vector<Face>> out;
  for (const auto& s : by_size) {
    if (s.empty()) break;
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

bool SimplicialComplex::is_cone() const {
  if (facets_.empty()) return false;
  Face common = facets_.front();
  for (Face f : facets_) common &= f;
  return common != 0;
}

std::vector<std::size_t> homology_ranks(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  const auto faces = k.faces_by_size();
  const std::size_t top = faces.size();  // sizes 0..top-1
  if (k.is_cone()) return std::vector<std::size_t>(top, 0);
  // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) {
    std::unordered_map<Face, std::size_t> column;
    for (std::size_t c = 0; c < faces[s - 1].size(); ++c) column[faces[s - 1][c]] = c;
    IntegerMatrix m(faces[s].size(), std::vector<mpz_class>(faces[s - 1].size(), 0));
    for (std::size_t r = 0; r < faces[s].size(); ++r) {
      const Face f = faces[s][r];
      int sign = 1;
      for (std::size_t v = 0; v < k.vertex_count(); ++v) {
        if (!((f >> v) & 1u)) continue;
        m[r][column.at(f & ~(Face{1} << v))] = sign;
        sign = -sign;
      }
    }
    boundary_rank[s] = exact_rank(std::move(m));
  }
  std::vector<std::size_t> ranks(top, 0);
  for (std::size_t s = 0; s < top; ++s) ranks[s] = faces[s].size() - boundary_rank[s] - boundary_rank[s + 1];
  return ranks;
}

SimplicialComplex sq_divisor_complex(const AffineSemigroup& s, const NatVector& b) {
  check_vertex_count(s.size());
  if (b.dim() != s.dim()) throw InputError("degree and semigroup have different dimensions");
  if (!membership_affine(s, b)) throw InputError(b.to_string() + " is not in the semigroup");
  std::vector<Face> faces;
  std::vector<std::pair<Face, NatVector>> stack{{0, b}};
  while (!stack.empty()) {
    auto [f, r] = std::move(stack.back());
    stack.pop_back();
    faces.push_back(f);
    const std::size_t start = f ? static_cast<std::size_t>(32 - std::countl_zero(f)) : 0;
    for (std::size_t v = start; v < s.size(); ++v) {
      auto rest = r.minus(s[v]);
      if (rest && membership_affine(s, *rest)) stack.push_back({f | (Face{1} << v), *rest});
    }
  }
  return SimplicialComplex(s.size(), std::move(faces));
}

std::vector<std::size_t> BettiTable::totals() const {
  std::vector<std::size_t> t;
  for (const auto& row : rows) {
    std::size_t sum = 0;
    for (const auto& [deg, mult] : row) sum += mult;
    t.push_back(sum);
  }
  return t;
}

std::size_t BettiTable::pd() const {
  for (std::size_t i = rows.size(); i-- > 0;)
    if (!rows[i].empty()) return i;
  return 0;
}

std::vector<NatVector> BettiTable::degrees(std::size_t i) const {
  std::vector<NatVector> out;
  if (i >= rows.size()) return out;
  for (const auto& [deg, mult] : rows[i])
    for (std::size_t k = 0; k < mult; ++k) out.push_back(deg);
  return out;
}

NatVector default_betti_box(const AffineSemigroup& s) {
  return s.generator_sum().scaled(static_cast<Int>(s.size()));
}

NatVector betti_degree_bound(const AffineSemigroup& s, const Deadline& deadline) {
  const auto ideal = toric_ideal(s, deadline);
  Monomial top = Monomial::one(s.size());
  for (const auto& g : ideal.generators) top = lcm_monomial(top, g.lead());
  return ideal.degree(top);
}

namespace {

struct Contribution {
  std::uint64_t index;
  std::size_t level;
  std::size_t rank;
};

// Faces of the divisor complex of b, using the dense membership table.
std::vector<Face> divisor_faces(const AffineSemigroup& s, const SemigroupBox& members, const std::vector<Int>& b,
                                std::vector<Int>& residuals) {
  const std::size_t d = s.dim(), n = s.size();
  std::vector<Face> faces;
  struct Item {
    Face f;
    std::size_t at;  // offset of the residual b - sum_F a_i in residuals
  };
  residuals.assign(b.begin(), b.end());
  std::vector<Item> stack{{0, 0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    faces.push_back(it.f);
    const std::size_t start = it.f ? static_cast<std::size_t>(32 - std::countl_zero(it.f)) : 0;
    for (std::size_t v = start; v < n; ++v) {
      bool ok = true;
      std::uint64_t idx = 0;
      for (std::size_t c = 0; c < d && ok; ++c) {
        const Int x = residuals[it.at + c] - s[v][c];
        ok = x >= 0;
        idx = idx * static_cast<std::uint64_t>(members.box()[c] + 1) + static_cast<std::uint64_t>(x);
      }
      if (!ok || !members.contains_index(idx)) continue;
      const std::size_t at = residuals.size();
      for (std::size_t c = 0; c < d; ++c) residuals.push_back(residuals[it.at + c] - s[v][c]);
      stack.push_back({it.f | (Face{1} << v), at});
    }
  }
  return faces;
}

}  // namespace

namespace {

struct Scan {
  BettiTable table;
  std::vector<bool> shell_hit;  // per coordinate
  std::string first_hit;
};

Scan scan_box(const AffineSemigroup& s, const NatVector& box, const BettiOptions& options) {
  check_vertex_count(s.size());
  if (box.dim() != s.dim()) throw InputError("degree bound has the wrong dimension");
  SemigroupBox members(s, box, options.deadline);
  const auto& elements = members.elements();
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<Contribution>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      std::vector<Int> residuals;
      for (std::size_t e = t; e < elements.size(); e += threads) {
        if ((e & 0x3FF) == static_cast<std::size_t>(t)) options.deadline.check("Betti scan");
        const NatVector b = members.decode(elements[e]);
        std::vector<Int> coords(b.begin(), b.end());
        SimplicialComplex k(s.size(), divisor_faces(s, members, coords, residuals));
        if (k.is_cone()) continue;
        const auto ranks = homology_ranks(k);
        for (std::size_t i = 0; i < ranks.size(); ++i)
          if (ranks[i]) parts[t].push_back({elements[e], i, ranks[i]});
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  const NatVector thick = s.generator_max();
  Scan out;
  out.shell_hit.assign(box.dim(), false);
  out.table.rows.resize(s.size() + 1);
  for (const auto& part : parts)
    for (const auto& c : part) {
      const NatVector b = members.decode(c.index);
      for (std::size_t j = 0; j < b.dim(); ++j)
        if (b[j] + thick[j] > box[j]) {
          if (out.first_hit.empty()) out.first_hit = b.to_string();
          out.shell_hit[j] = true;
        }
      if (c.level >= out.table.rows.size()) throw AlgebraError("Betti number beyond the number of generators");
      out.table.rows[c.level][b] += c.rank;
    }
  out.table.rows.resize(out.table.pd() + 1);
  return out;
}

}  // namespace

BettiTable betti_degrees(const AffineSemigroup& s, const BettiOptions& options) {
  if (!options.box) return scan_box(s, betti_degree_bound(s, options.deadline), options).table;
  NatVector box = *options.box;
  for (unsigned round = 0;; ++round) {
    Scan scan = scan_box(s, box, options);
    if (scan.first_hit.empty()) return scan.table;
    if (round >= options.grow_rounds)
      throw ResourceError("Betti degree " + scan.first_hit + " lies on the boundary of the scan box " +
                          box.to_string() + "; raise the degree bound");
    for (std::size_t j = 0; j < box.dim(); ++j)
      if (scan.shell_hit[j]) box.set(j, checked_mul(box[j], 2));
  }
}

ResolutionSummary resolution_summary(const AffineSemigroup& s, const BettiTable& table) {
  ResolutionSummary r{};
  r.pd = table.pd();
  if (r.pd > s.size()) throw AlgebraError("projective dimension exceeds the number of variables");
  r.depth = s.size() - r.pd;
  r.dim = s.rank();
  r.cm = r.depth == r.dim;
  r.gorenstein = r.cm && table.totals().at(r.pd) == 1;
  return r;
}

std::vector<NatVector> pf_via_betti(const AffineSemigroup& s, const BettiTable& table) {
  if (table.pd() + 1 != s.size())
    throw InputError("pseudo-Frobenius elements from Betti degrees need maximal projective dimension");
  const NatVector sum = s.generator_sum();
  std::vector<NatVector> out;
  for (const auto& [deg, mult] : table.rows[table.pd()]) {
    auto f = deg.minus(sum);
    if (!f) throw AlgebraError("top Betti degree " + deg.to_string() + " is not above the generator sum");
    out.push_back(*f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prec_symmetric(const AffineSemigroup& s, const BettiTable& table, const TermOrderNd& order,
                       const NatVector& box) {
  if (table.pd() + 1 != s.size()) return false;
  const auto pf = pf_via_betti(s, table);
  if (pf.size() != 1) return false;
  const auto gs = gap_set_affine(s, box);
  if (!gs.shell_clean) throw ResourceError("box " + box.to_string() + " does not certify the gap set");
  if (gs.gaps.empty()) return false;
  const auto top = std::max_element(gs.gaps.begin(), gs.gaps.end(), [&](const NatVector& a, const NatVector& b) {
    return order.compare(a, b) < 0;
  });
  return *top == pf.front();
}

SifrResult sifr_check(const AffineSemigroup& s, const BettiTable& table) {
  auto in_s = [&](const NatVector& x, const NatVector& y) {
    auto d = x.minus(y);
    return d && membership_affine(s, *d).has_value();
  };
  for (std::size_t i = 1; i <= table.pd(); ++i) {
    const auto degs = table.degrees(i);
    for (std::size_t a = 0; a < degs.size(); ++a)
      for (std::size_t b = a + 1; b < degs.size(); ++b)
        if (in_s(degs[a], degs[b]) || in_s(degs[b], degs[a])) return {false, SifrCertificate{i, degs[a], degs[b]}};
  }
  return {true, std::nullopt};
}

BettiTable tensor_betti(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  if (a.rows.empty() || b.rows.empty()) return out;
  out.rows.resize(a.rows.size() + b.rows.size() - 1);
  for (std::size_t p = 0; p < a.rows.size(); ++p)
    for (std::size_t q = 0; q < b.rows.size(); ++q)
      for (const auto& [da, ma] : a.rows[p])
        for (const auto& [db, mb] : b.rows[q]) out.rows[p + q][da + db] += ma * mb;
  out.rows.resize(out.pd() + 1);
  return out;
}

}  // namespace semiglue
