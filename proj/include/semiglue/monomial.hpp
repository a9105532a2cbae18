#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "semiglue/arith.hpp"

namespace semiglue {

// Element of N^d. Entries are non-negative; arithmetic is overflow-checked.
class NatVector {
 public:
  NatVector() = default;
  explicit NatVector(std::size_t dim) : v_(dim, 0) {}
  explicit NatVector(std::vector<Int> entries);
  NatVector(std::initializer_list<Int> entries) : NatVector(std::vector<Int>(entries)) {}

  static NatVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return v_.size(); }
  Int operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, Int value);
  const std::vector<Int>& entries() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  Int total() const;
  bool is_zero() const;

  NatVector operator+(const NatVector& o) const;
  NatVector& operator+=(const NatVector& o);
  NatVector scaled(Int k) const;
  // this - o when the difference stays in N^d.
  std::optional<NatVector> minus(const NatVector& o) const;
  // Componentwise <=.
  bool dominated_by(const NatVector& o) const;

  std::string to_string() const;

  friend bool operator==(const NatVector&, const NatVector&) = default;
  friend auto operator<=>(const NatVector& a, const NatVector& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<Int> v_;
};

NatVector componentwise_max(const NatVector& a, const NatVector& b);

// x^e over a fixed ambient variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(NatVector exponents) : e_(std::move(exponents)) {}
  Monomial(std::initializer_list<Int> exponents) : e_(exponents) {}

  static Monomial one(std::size_t nvars) { return Monomial(NatVector(nvars)); }

  const NatVector& exponents() const { return e_; }
  std::size_t nvars() const { return e_.dim(); }
  Int operator[](std::size_t i) const { return e_[i]; }
  Int degree() const { return e_.total(); }

  Monomial operator*(const Monomial& o) const { return Monomial(e_ + o.e_); }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e_ <=> b.e_; }

 private:
  NatVector e_;
};

Monomial lcm_monomial(const Monomial& a, const Monomial& b);
Monomial gcd_monomial(const Monomial& a, const Monomial& b);
// True iff a divides b.
bool divides(const Monomial& a, const Monomial& b);
// a / b; throws InputError unless b divides a.
Monomial quotient(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class Grading { Degree, NegativeDegree, None };
enum class TieBreak { Lex, Revlex };

// User-facing description of a graded (or local) monomial order.
// priority lists variable indices from highest to lowest.
struct MonomialOrderSpec {
  Grading grading = Grading::Degree;
  TieBreak tiebreak = TieBreak::Revlex;
  std::vector<std::size_t> priority;
  std::optional<std::size_t> homog_var;

  static MonomialOrderSpec degrevlex(std::size_t nvars);
  static MonomialOrderSpec degrevlex(std::vector<std::size_t> priority);
  bool operator==(const MonomialOrderSpec&) const = default;
};

std::string to_string(const MonomialOrderSpec& spec);

// Compiled monomial order: a sequence of weight rows followed by lex or
// revlex comparisons on variable lists. Block and homogenized-local orders
// are expressed in the same form.
class MonomialOrder {
 public:
  explicit MonomialOrder(MonomialOrderSpec spec);

  // Block order: degrevlex on `first` decides, then degrevlex on `second`.
  static MonomialOrder elimination(std::size_t nvars, std::vector<std::size_t> first,
                                   std::vector<std::size_t> second);
  // Weighted degree first, then revlex along priority (highest first).
  static MonomialOrder weighted_revlex(std::vector<Int> weights, std::vector<std::size_t> priority);
  // Global order on K[x, h] whose dehomogenized leads agree with the local
  // order: total degree (with h) first, then the local order on x.
  static MonomialOrder homogenized_local(const MonomialOrderSpec& local, std::size_t h);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::size_t nvars() const { return nvars_; }
  bool is_local() const { return local_; }
  const std::optional<MonomialOrderSpec>& spec() const { return spec_; }
  std::string describe() const;

 private:
  struct Step {
    enum class Kind { Weight, Lex, Revlex } kind;
    std::vector<Int> weights;           // Weight
    std::vector<std::size_t> vars;      // Lex / Revlex, highest first
  };

  MonomialOrder() = default;

  std::vector<Step> steps_;
  std::size_t nvars_ = 0;
  bool local_ = false;
  std::optional<MonomialOrderSpec> spec_;
  std::string description_;
};

// Free-function form of MonomialOrder::compare for a spec.
std::strong_ordering compare(const MonomialOrderSpec& order, const Monomial& a, const Monomial& b);

// lead - tail with unit coefficients; lead == tail is the zero marker.
class Binomial {
 public:
  Binomial() = default;
  Binomial(Monomial lead, Monomial tail);

  static Binomial zero(std::size_t nvars);

  const Monomial& lead() const { return lead_; }
  const Monomial& tail() const { return tail_; }
  std::size_t nvars() const { return lead_.nvars(); }
  bool is_zero() const { return lead_ == tail_; }

  // Orients the binomial so that lead is the order-maximal monomial.
  Binomial normalized(const MonomialOrder& order) const;
  // Swaps sides (negation).
  Binomial negated() const { return Binomial(tail_, lead_); }
  bool is_normalized(const MonomialOrder& order) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;

 private:
  Monomial lead_;
  Monomial tail_;
};

// Equal up to sign.
bool same_up_to_sign(const Binomial& a, const Binomial& b);

Binomial s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order);

// Pads the lower-degree side with x0 so both sides have equal degree.
Binomial homogenize(const Binomial& b, std::size_t x0);
// Sets the x0 exponent to zero on both sides.
Binomial dehomogenize(const Binomial& b, std::size_t x0);

// Appends `count` zero exponents (fresh variables) to every monomial.
Monomial extend_variables(const Monomial& m, std::size_t count);
Binomial extend_variables(const Binomial& b, std::size_t count);

std::vector<std::string> default_variable_names(std::size_t nvars, const std::string& stem = "x");

}  // namespace semiglue

template <>
struct std::hash<semiglue::NatVector> {
  std::size_t operator()(const semiglue::NatVector& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
