#include "semiglue/linalg.hpp"

#include <algorithm>
#include <utility>

namespace semiglue {

std::size_t exact_rank(IntegerMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const std::vector<NatVector>& rows) {
  IntegerMatrix m;
  for (const auto& r : rows) {
    std::vector<mpz_class> row;
    for (Int x : r) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  return exact_rank(std::move(m));
}


namespace {

// Euclidean row echelon on the first `cols` columns; returns the pivot
// columns. Rows from pivots.size() on are zero in those columns.
std::vector<std::size_t> echelon(IntegerMatrix& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
    // Euclid on column col among rows top.., leaving one nonzero entry.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < rows[r].size(); ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (auto& x : rows[top]) x = -x;
      pivots.push_back(col);
      ++top;
    }
  }
  return pivots;
}

}  // namespace

IntegerLattice::IntegerLattice(const std::vector<NatVector>& generators)
    : dim_(generators.empty() ? 0 : generators.front().dim()) {
  IntegerMatrix rows;
  for (const auto& g : generators) {
    if (g.dim() != dim_) throw InputError("lattice generators must share one dimension");
    std::vector<mpz_class> r;
    for (Int x : g) r.emplace_back(static_cast<long>(x));
    rows.push_back(std::move(r));
  }
  pivots_ = echelon(rows, dim_);
  basis_.assign(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(pivots_.size()));
}

void lll_reduce(IntegerMatrix& b) {
  const std::size_t m = b.size();
  if (m < 2) return;
  const std::size_t n = b.front().size();
  std::vector<std::vector<mpq_class>> star(m, std::vector<mpq_class>(n)), mu(m, std::vector<mpq_class>(m));
  std::vector<mpq_class> norm(m);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < n; ++c) star[i][c] = b[i][c];
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class dot = 0;
        for (std::size_t c = 0; c < n; ++c) dot += b[i][c] * star[j][c];
        mu[i][j] = dot / norm[j];
        for (std::size_t c = 0; c < n; ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      norm[i] = 0;
      for (std::size_t c = 0; c < n; ++c) norm[i] += star[i][c] * star[i][c];
    }
  };
  auto size_reduce = [&](std::size_t k, std::size_t j) {
    mpz_class q;
    const mpz_class num = 2 * mu[k][j].get_num() + mu[k][j].get_den(), den = 2 * mu[k][j].get_den();
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) b[k][c] -= q * b[j][c];
    for (std::size_t l = 0; l < j; ++l) mu[k][l] -= q * mu[j][l];
    mu[k][j] -= q;
  };
  gram_schmidt();
  const mpq_class delta(3, 4);
  for (std::size_t k = 1; k < m;) {
    size_reduce(k, k - 1);
    if (norm[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
    }
  }
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<NatVector>& columns) {
  if (columns.empty()) return {};
  const std::size_t d = columns.front().dim(), n = columns.size();
  IntegerMatrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (columns[i].dim() != d) throw InputError("kernel columns must share one dimension");
    std::vector<mpz_class> r;
    for (Int x : columns[i]) r.emplace_back(static_cast<long>(x));
    for (std::size_t j = 0; j < n; ++j) r.emplace_back(i == j ? 1 : 0);
    rows.push_back(std::move(r));
  }
  const std::size_t rank = echelon(rows, d).size();
  IntegerMatrix kernel;
  for (std::size_t i = rank; i < n; ++i) kernel.emplace_back(rows[i].begin() + static_cast<std::ptrdiff_t>(d), rows[i].end());
  lll_reduce(kernel);
  std::vector<std::vector<Int>> out;
  for (const auto& row : kernel) {
    std::vector<Int> v;
    for (const auto& x : row) {
      if (!x.fits_slong_p()) throw ResourceError("kernel vector entry exceeds 64 bits");
      v.push_back(x.get_si());
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool IntegerLattice::contains(const std::vector<Int>& x) const {
  if (x.size() != dim_) throw InputError("lattice membership query has the wrong dimension");
  std::vector<mpz_class> r;
  for (Int v : x) r.emplace_back(static_cast<long>(v));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t col = pivots_[i];
    if (!mpz_divisible_p(r[col].get_mpz_t(), basis_[i][col].get_mpz_t())) return false;
    const mpz_class q = r[col] / basis_[i][col];
    for (std::size_t c = col; c < dim_; ++c) r[c] -= q * basis_[i][c];
  }
  return std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; });
}

}  // namespace semiglue
