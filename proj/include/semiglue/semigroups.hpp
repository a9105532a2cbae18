#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiglue/deadline.hpp"
#include "semiglue/groebner.hpp"
#include "semiglue/monomial.hpp"

namespace semiglue {

// Minimally generated numerical semigroup <n_1 < ... < n_e>, gcd 1.
class NumericalSemigroup {
 public:
  // Generators may come in any order; they are sorted. Throws InputError if
  // they are not distinct positive coprime minimal generators.
  explicit NumericalSemigroup(std::vector<Int> generators);
  // Extracts the minimal generators of the semigroup generated by gens.
  static NumericalSemigroup from_generating_set(std::vector<Int> gens);

  const std::vector<Int>& generators() const { return gens_; }
  std::size_t embedding_dimension() const { return gens_.size(); }
  Int multiplicity() const { return gens_.front(); }
  Int largest() const { return gens_.back(); }
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

 private:
  std::vector<Int> gens_;
};

bool membership_num(const NumericalSemigroup& s, Int x);
// Sorted Apery set of s with respect to a nonzero member m.
std::vector<Int> apery(const NumericalSemigroup& s, Int m);
// -1 for N itself.
Int frobenius(const NumericalSemigroup& s);
std::vector<Int> gaps(const NumericalSemigroup& s);
std::vector<Int> pf_numeric(const NumericalSemigroup& s);

// Maximal factorization length of every x in [0, upto]; -1 marks gaps.
std::vector<Int> ord_table(const NumericalSemigroup& s, Int upto);
Int ord(const NumericalSemigroup& s, Int member);
// H(n) = #{s : ord(s) = n} for n = 0..upto.
std::vector<Int> hilbert_gr(const NumericalSemigroup& s, Int upto);
// Index from which H(n) equals the multiplicity. Every s beyond
// (n_1 - 1) * (n_2 + ... + n_e) - n_1 satisfies ord(s + n_1) = ord(s) + 1,
// since a longest factorization never uses n_1 or more copies of a larger
// generator.
Int hilbert_stabilization_index(const NumericalSemigroup& s);
// Non-decreasing through stabilization; ResourceError if upto is smaller
// than the stabilization index.
bool hilbert_nondecreasing(const NumericalSemigroup& s, Int upto);

// Gluing <q m_1, ..., q m_l, p n_1, ..., p n_k> with p = sum b_i m_i and
// q = sum a_j n_j.
struct GluingSpec {
  NumericalSemigroup left;
  NumericalSemigroup right;
  std::vector<Int> b;
  std::vector<Int> a;

  Int p() const;
  Int q() const;
  Int sum_b() const;
  Int sum_a() const;
};

enum class Side { Left, Right };

struct GeneratorOrigin {
  Side side;
  std::size_t index;  // position in that side's generator list
  friend bool operator==(const GeneratorOrigin&, const GeneratorOrigin&) = default;
};

struct GluedSemigroup {
  NumericalSemigroup semigroup;
  // Generators in gluing order q m_1..q m_l, p n_1..p n_k.
  std::vector<Int> glued_order;
  // origin[i] describes semigroup.generators()[i].
  std::vector<GeneratorOrigin> origin;

  GeneratorOrigin smallest() const { return origin.front(); }
  GeneratorOrigin largest() const { return origin.back(); }
};

std::vector<std::string> gluing_violations(const GluingSpec& spec);
GluedSemigroup glue(const GluingSpec& spec);

enum class NiceKind { Nice, GeneralizedNice, Neither };
std::string to_string(NiceKind k);
NiceKind is_nice_gluing(const GluingSpec& spec);
// Sum of a_j strictly below the sum of b_i.
bool is_star_gluing(const GluingSpec& spec);

// Conditions A and B compare the exponent vector c (b for A, a for B) with
// the exponent vector alpha of every leading monomial of a basis.
struct LcmConditionCheck {
  bool literal = true;           // lcm(c_i, alpha_i) != c_i for all i, lcm(m, 0) := m
  bool zero_convention = true;   // same test with lcm(m, 0) := 0
  bool non_divisibility = true;  // no leading monomial divides x^c
  std::string first_literal_failure;
};
LcmConditionCheck condition_A(const GluingSpec& spec, const GroebnerBasis& gb_left);
LcmConditionCheck condition_B(const GluingSpec& spec, const GroebnerBasis& gb_right);

// Affine semigroup of N^d given by its minimal generators.
class AffineSemigroup {
 public:
  explicit AffineSemigroup(std::vector<NatVector> generators);
  static AffineSemigroup from_numerical(const NumericalSemigroup& s);
  // Generators (n_i, n_e - n_i) for i = 1..e followed by (0, n_e).
  static AffineSemigroup projective_closure(const NumericalSemigroup& s);

  std::size_t dim() const { return gens_.front().dim(); }
  std::size_t size() const { return gens_.size(); }
  const std::vector<NatVector>& generators() const { return gens_; }
  const NatVector& operator[](std::size_t i) const { return gens_[i]; }
  NatVector generator_sum() const;
  NatVector generator_max() const;
  // Krull dimension: rank of the generator matrix.
  std::size_t rank() const;
  std::string to_string() const;

  friend bool operator==(const AffineSemigroup&, const AffineSemigroup&) = default;

 private:
  std::vector<NatVector> gens_;
};

// Witness z with sum z_i a_i = x, by depth-first search with componentwise pruning.
std::optional<std::vector<Int>> membership_affine(const AffineSemigroup& s, const NatVector& x);
std::optional<std::vector<Int>> find_factorization(const std::vector<NatVector>& gens, const NatVector& x);

// Dense membership table for the elements of s inside a box, filled by
// breadth-first search from 0.
class SemigroupBox {
 public:
  SemigroupBox(const AffineSemigroup& s, NatVector box, const Deadline& deadline = Deadline::none());

  const NatVector& box() const { return box_; }
  bool in_box(const NatVector& x) const { return x.dominated_by(box_); }
  // x must lie in the box.
  bool contains(const NatVector& x) const;
  bool contains_index(std::uint64_t index) const { return (bits_[index >> 6] >> (index & 63)) & 1u; }
  std::uint64_t encode(const NatVector& x) const;
  NatVector decode(std::uint64_t index) const;
  // Linear indices of all elements in the box, increasing.
  const std::vector<std::uint64_t>& elements() const { return elements_; }

  static constexpr std::uint64_t kMaxVolume = std::uint64_t{1} << 32;

 private:
  NatVector box_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> elements_;
};

bool cone_membership(const AffineSemigroup& s, const NatVector& x);
std::vector<NatVector> extremal_rays(const AffineSemigroup& s);

// Gaps are taken in Cone(S) intersected with the group generated by S, so
// that a semigroup whose group is a proper sublattice of Z^d still has a
// finite gap set.
struct GapSet {
  std::vector<NatVector> gaps;  // within the box, sorted
  // No gap within max-generator distance of the far faces of the box.
  bool shell_clean = false;
};
GapSet gap_set_affine(const AffineSemigroup& s, const NatVector& box);
// Throws ResourceError when the box does not certify the gap set.
std::vector<NatVector> pf_affine_direct(const AffineSemigroup& s, const NatVector& box);

// PF elements visible in the box, without certifying the gap set.
std::vector<NatVector> pf_in_box(const AffineSemigroup& s, const NatVector& box);

// start + t * direction is a gap for every t >= 0: direction is a generator
// with coordinate j equal to zero and start[j] is not a sum of j-th
// coordinates of generators.
struct InfiniteGapFamily {
  NatVector start;
  NatVector direction;
  std::size_t coordinate;
};
// Searches the box for such a family; a result proves H(S) infinite.
std::optional<InfiniteGapFamily> infinite_gap_family(const AffineSemigroup& s, const NatVector& box);

struct ExtensionSpec {
  AffineSemigroup base;
  Int l;
  std::vector<Int> u;

  NatVector a() const;
};

struct Extension {
  AffineSemigroup semigroup;  // l*a_1, ..., l*a_n, a
  NatVector a;
  Int l;
};
Extension extend(const ExtensionSpec& spec);

struct Join {
  AffineSemigroup semigroup;
  std::vector<NatVector> rays;
  std::size_t dim_left;
  std::size_t dim_right;
  std::size_t dim;
};
Join join(const AffineSemigroup& left, const AffineSemigroup& right);

// Term order on N^d for the symmetric-semigroup test.
struct TermOrderNd {
  enum class Kind { GradedLex, Lex } kind = Kind::GradedLex;
  std::vector<std::size_t> priority;

  static TermOrderNd graded_lex(std::size_t d);
  std::strong_ordering compare(const NatVector& a, const NatVector& b) const;
};

}  // namespace semiglue
