#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "semiglue/deadline.hpp"
#include "semiglue/semigroups.hpp"

namespace semiglue {

using Face = std::uint32_t;  // vertex subset as a bit mask

class SimplicialComplex {
 public:
  // Faces are closed downward and reduced to facets.
  SimplicialComplex(std::size_t vertices, std::vector<Face> faces);
  static SimplicialComplex from_facets(std::size_t vertices, const std::vector<std::vector<std::size_t>>& facets);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  // All faces including the empty one, grouped by size.
  std::vector<std::vector<Face>> faces_by_size() const;
  bool is_void() const { return facets_.empty(); }
  // Some vertex lies in every facet; such a complex is acyclic.
  bool is_cone() const;

  static constexpr std::size_t kMaxVertices = 32;

 private:
  std::size_t n_;
  std::vector<Face> facets_;
};

// Faces F with b - sum_{i in F} a_i in S.
SimplicialComplex sq_divisor_complex(const AffineSemigroup& s, const NatVector& b);

// ranks[i] = dim of reduced homology in degree i - 1 over Q, so that ranks[i]
// is beta_{i,b} for the divisor complex of b.
std::vector<std::size_t> homology_ranks(const SimplicialComplex& k);

struct BettiTable {
  // rows[i]: Betti degree -> multiplicity.
  std::vector<std::map<NatVector, std::size_t>> rows;

  std::vector<std::size_t> totals() const;
  std::size_t pd() const;
  // Degrees of row i, repeated by multiplicity.
  std::vector<NatVector> degrees(std::size_t i) const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct BettiOptions {
  std::optional<NatVector> box;  // default: betti_degree_bound
  unsigned threads = 1;
  Deadline deadline;
  // Times the box may double along coordinates where the shell check fired.
  unsigned grow_rounds = 0;
};

// n * (sum of generators); a starting box for gap searches.
NatVector default_betti_box(const AffineSemigroup& s);
// Degree of the lcm of the leading monomials of the toric Groebner basis.
// Betti numbers can only grow under Groebner degeneration and those of a
// monomial ideal sit on its lcm lattice, so every Betti degree lies below.
NatVector betti_degree_bound(const AffineSemigroup& s, const Deadline& deadline = Deadline::none());
// Scans every element of S in the box. Without an explicit box the degree
// bound is used and the result is certified. With one, a nonzero Betti
// number within max-generator distance of the far faces doubles the box
// along that coordinate, up to grow_rounds times, and then raises
// ResourceError.
BettiTable betti_degrees(const AffineSemigroup& s, const BettiOptions& options = {});

struct ResolutionSummary {
  std::size_t pd;
  std::size_t depth;
  std::size_t dim;
  bool cm;
  bool gorenstein;
};
ResolutionSummary resolution_summary(const AffineSemigroup& s, const BettiTable& table);

// {b - sum a_i : b in B_pd}; InputError unless pd = n - 1.
std::vector<NatVector> pf_via_betti(const AffineSemigroup& s, const BettiTable& table);

bool is_prec_symmetric(const AffineSemigroup& s, const BettiTable& table, const TermOrderNd& order,
                       const NatVector& box);

struct SifrCertificate {
  std::size_t level;
  NatVector first;
  NatVector second;
};
struct SifrResult {
  bool holds = true;
  std::optional<SifrCertificate> witness;
};
SifrResult sifr_check(const AffineSemigroup& s, const BettiTable& table);

// Minkowski-sum convolution of two tables with degrees in a common N^d.
BettiTable tensor_betti(const BettiTable& a, const BettiTable& b);

}  // namespace semiglue
