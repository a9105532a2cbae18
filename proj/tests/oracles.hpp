#pragma once

// Brute-force reference computations used by the tests. None of them calls
// into the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "semiglue/semigroups.hpp"

namespace oracle {

using semiglue::Int;

// member[x] for x in [0, upto], by the coin-change recurrence.
inline std::vector<char> members(const std::vector<Int>& gens, Int upto) {
  std::vector<char> in(static_cast<std::size_t>(upto) + 1, 0);
  in[0] = 1;
  for (Int x = 1; x <= upto; ++x)
    for (Int g : gens)
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
  return in;
}

// Frobenius via a run of n_1 consecutive members.
inline Int frobenius(const std::vector<Int>& gens) {
  const Int m = *std::min_element(gens.begin(), gens.end());
  Int limit = 64;
  for (;;) {
    auto in = members(gens, limit);
    Int run = 0, last_gap = -1;
    for (Int x = 0; x <= limit; ++x) {
      if (in[static_cast<std::size_t>(x)]) {
        if (++run == m) return last_gap;
      } else {
        run = 0;
        last_gap = x;
      }
    }
    limit *= 2;
  }
}

inline std::vector<Int> pf(const std::vector<Int>& gens) {
  const Int f = frobenius(gens);
  const Int big = *std::max_element(gens.begin(), gens.end());
  auto in = members(gens, f + big);
  std::vector<Int> out;
  for (Int x = 1; x <= f; ++x) {
    if (in[static_cast<std::size_t>(x)]) continue;
    if (std::all_of(gens.begin(), gens.end(), [&](Int g) { return in[static_cast<std::size_t>(x + g)]; }))
      out.push_back(x);
  }
  return out;
}

// Longest factorization length of every x in [0, upto], -1 for non-members.
inline std::vector<Int> max_length(const std::vector<Int>& gens, Int upto) {
  std::vector<Int> len(static_cast<std::size_t>(upto) + 1, -1);
  len[0] = 0;
  for (Int x = 1; x <= upto; ++x)
    for (Int g : gens)
      if (g <= x && len[static_cast<std::size_t>(x - g)] >= 0)
        len[static_cast<std::size_t>(x)] = std::max(len[static_cast<std::size_t>(x)], len[static_cast<std::size_t>(x - g)] + 1);
  return len;
}

// Random minimally generated numerical semigroup with at most max_gens
// generators, all at most max_gen.
inline semiglue::NumericalSemigroup random_numerical(std::mt19937_64& rng, std::size_t max_gens, Int max_gen) {
  for (;;) {
    const std::size_t e = 2 + rng() % (max_gens - 1);
    std::vector<Int> g;
    for (std::size_t i = 0; i < e; ++i) g.push_back(2 + static_cast<Int>(rng() % static_cast<std::uint64_t>(max_gen - 1)));
    if (std::accumulate(g.begin(), g.end(), Int{0}, [](Int a, Int b) { return std::gcd(a, b); }) != 1) continue;
    auto s = semiglue::NumericalSemigroup::from_generating_set(g);
    if (s.embedding_dimension() >= 2) return s;
  }
}

// Coefficients of prod (1 - t^{n_i}) * sum_{s in S} t^s up to degree upto:
// the K-polynomial, which equals the alternating sum of graded Betti numbers.
inline std::vector<Int> k_polynomial(const std::vector<Int>& gens, Int upto) {
  auto in = members(gens, upto);
  std::vector<Int> poly(in.begin(), in.end());
  for (Int g : gens)
    for (Int x = upto; x >= g; --x) poly[static_cast<std::size_t>(x)] -= poly[static_cast<std::size_t>(x - g)];
  return poly;
}

// The same in two variables, on a box [0, bx] x [0, by].
inline std::map<std::pair<Int, Int>, Int> k_polynomial_2d(const std::vector<std::pair<Int, Int>>& gens, Int bx,
                                                          Int by) {
  std::vector<std::vector<Int>> c(static_cast<std::size_t>(bx) + 1, std::vector<Int>(static_cast<std::size_t>(by) + 1, 0));
  c[0][0] = 1;
  for (Int x = 0; x <= bx; ++x)
    for (Int y = 0; y <= by; ++y) {
      if (c[x][y]) continue;
      for (auto [gx, gy] : gens)
        if (gx <= x && gy <= y && c[x - gx][y - gy]) {
          c[x][y] = 1;
          break;
        }
    }
  for (auto [gx, gy] : gens)
    for (Int x = bx; x >= gx; --x)
      for (Int y = by; y >= gy; --y) c[x][y] -= c[x - gx][y - gy];
  std::map<std::pair<Int, Int>, Int> out;
  for (Int x = 0; x <= bx; ++x)
    for (Int y = 0; y <= by; ++y)
      if (c[x][y]) out[{x, y}] = c[x][y];
  return out;
}

// Calls f(exponents) for every monomial in n variables whose weighted degree
// sum e_i w_i is at most bound.
template <class F>
void monomials_up_to(const std::vector<Int>& w, Int bound, F&& f) {
  std::vector<Int> e(w.size(), 0);
  auto rec = [&](auto& self, std::size_t i, Int left) -> void {
    if (i == w.size()) {
      f(e);
      return;
    }
    for (Int k = 0; k * w[i] <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, bound);
}

}  // namespace oracle
