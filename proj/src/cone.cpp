#include "semiglue/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace semiglue {

namespace {

using Row = std::vector<mpz_class>;

void normalize_row(Row& r) {
  mpz_class g = 0;
  for (const auto& x : r) g = gcd(g, x);
  if (g > 1)
    for (auto& x : r) x /= g;
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

bool nonneg_combination_exists(const std::vector<NatVector>& columns, const NatVector& rhs) {
  const std::size_t m = rhs.dim(), n = columns.size();
  for (const auto& c : columns)
    if (c.dim() != m) throw InputError("dimension mismatch in cone test");
  if (rhs.is_zero()) return true;
  if (n == 0) return false;
  // Tableau rows: [A | I | b], objective minimizes the artificial sum.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(width, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<long>(columns[j][i]);
    t[i][n + i] = 1;
    t[i][width - 1] = static_cast<long>(rhs[i]);
  }
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), n);
  // Reduced costs of the phase-one objective.
  std::vector<mpq_class> cost(width, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    const mpq_class piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const mpq_class f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[width - 1] == 0;
}

std::vector<Row> fourier_motzkin_cone(const std::vector<NatVector>& generators) {
  if (generators.empty()) throw InputError("cone needs at least one generator");
  const std::size_t d = generators.front().dim(), n = generators.size();
  // Columns: y_1..y_d, lambda_1..lambda_n; every row means row . (y, lambda) >= 0.
  std::vector<Row> rows;
  for (std::size_t i = 0; i < d; ++i) {
    Row up(d + n, 0), down(d + n, 0);
    up[i] = 1;
    down[i] = -1;
    for (std::size_t j = 0; j < n; ++j) {
      up[d + j] = -static_cast<long>(generators[j][i]);
      down[d + j] = static_cast<long>(generators[j][i]);
    }
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Row r(d + n, 0);
    r[d + j] = 1;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = d + j;
    std::vector<Row> pos, neg;
    std::set<Row> next;
    for (auto& r : rows) {
      if (r[col] > 0)
        pos.push_back(r);
      else if (r[col] < 0)
        neg.push_back(r);
      else
        next.insert(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Row c(d + n);
        const mpz_class a = p[col], b = -q[col];
        for (std::size_t k = 0; k < d + n; ++k) c[k] = b * p[k] + a * q[k];
        normalize_row(c);
        if (!is_zero_row(c)) next.insert(std::move(c));
      }
    rows.assign(next.begin(), next.end());
  }
  std::vector<Row> out;
  for (auto& r : rows) {
    Row y(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
    normalize_row(y);
    if (!is_zero_row(y)) out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NatVector primitive(const NatVector& v) {
  Int g = gcd_of(v.entries());
  if (g <= 1) return v;
  std::vector<Int> r;
  for (Int x : v) r.push_back(x / g);
  return NatVector(std::move(r));
}

PolyhedralCone::PolyhedralCone(std::vector<NatVector> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InputError("cone needs at least one generator");
  dim_ = gens_.front().dim();
  if (dim_ <= kInequalityDimLimit) inequalities_ = fourier_motzkin_cone(gens_);
}

bool PolyhedralCone::contains(const NatVector& x) const {
  return dim_ <= kInequalityDimLimit ? contains_by_inequalities(x) : contains_by_simplex(x);
}

bool PolyhedralCone::contains_by_inequalities(const NatVector& x) const {
  if (dim_ > kInequalityDimLimit) throw InputError("inequality description only built for d <= 3");
  if (x.dim() != dim_) throw InputError("dimension mismatch in cone membership");
  for (const auto& row : inequalities_) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += row[i] * static_cast<long>(x[i]);
    if (s < 0) return false;
  }
  return true;
}

bool PolyhedralCone::contains_by_simplex(const NatVector& x) const {
  if (x.dim() != dim_) throw InputError("dimension mismatch in cone membership");
  return nonneg_combination_exists(gens_, x);
}

std::vector<NatVector> PolyhedralCone::extremal_rays() const {
  std::set<NatVector> dirs;
  for (const auto& g : gens_) dirs.insert(primitive(g));
  std::vector<NatVector> rays;
  for (const auto& u : dirs) {
    std::vector<NatVector> others;
    for (const auto& g : gens_)
      if (primitive(g) != u) others.push_back(g);
    if (others.empty() || !nonneg_combination_exists(others, u)) rays.push_back(u);
  }
  return rays;
}

}  // namespace semiglue
