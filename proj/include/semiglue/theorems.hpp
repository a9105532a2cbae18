#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semiglue/deadline.hpp"
#include "semiglue/semigroups.hpp"

namespace semiglue {

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string detail;
};

// One predicted-versus-computed comparison inside a report.
struct Claim {
  std::string name;
  std::string predicted;
  std::string computed;
  // Checks the instance's own data (printed generators, membership of the
  // added binomial), so a failure counts whether or not the hypotheses hold.
  bool unconditional = false;
  bool agree() const { return predicted == computed; }
};

struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::vector<Hypothesis> hypotheses;
  std::vector<Claim> claims;
  // "name: value" lines of the claims joined by "; ".
  std::string predicted;
  std::string computed;
  bool agree = false;
  std::vector<std::string> notes;
  // One line per disagreeing claim, plus any cross-check conflict.
  std::vector<std::string> discrepancies;
  // A verdict used by the report had a disagreeing cross-check.
  bool verdict_conflict = false;

  bool hypotheses_hold() const;
  // "agree"; "CONFLICT" when the hypotheses hold and a claim fails, an
  // unconditional claim fails, or a verdict's cross-checks disagree;
  // "outside hypotheses" when a claim fails but the theorem does not apply.
  std::string status() const;
  bool conflict() const { return status() == "CONFLICT"; }
};

struct TheoremOptions {
  Deadline deadline;
  unsigned threads = 1;
  // Generators as printed alongside an example; compared with the recomputed ones.
  std::optional<std::vector<Int>> stated_generators;
};

// Form of the gluing binomial added to the homogenized factor bases.
enum class RhoForm {
  Full,      // x^b - x0^{sum b - sum a} y^a
  LastOnly,  // x_l^{b_l} - x0^{b_l - sum a} y^a, padded with x0 on whichever side is short
};
// Variable priority of the degrevlex order on x, y, x0.
enum class BlockOrder { XFirst, YFirst };

inline constexpr const char* kGluingGroebner = "gluing-groebner";
inline constexpr const char* kGluingAcm = "gluing-acm";
inline constexpr const char* kStarTangentCone = "star-tangent-cone";
inline constexpr const char* kGluingGorenstein = "gluing-gorenstein";
inline constexpr const char* kExtensionPf = "extension-pf";
inline constexpr const char* kJoinSifr = "join-sifr";
std::vector<std::string> theorem_ids();

TheoremReport verify_gluing_groebner(const GluingSpec& spec, RhoForm form = RhoForm::Full,
                                     BlockOrder order = BlockOrder::XFirst, const TheoremOptions& options = {});
TheoremReport verify_gluing_acm(const GluingSpec& spec, const TheoremOptions& options = {});
TheoremReport verify_star_tangent_cone(const GluingSpec& spec, const TheoremOptions& options = {});
TheoremReport verify_gluing_gorenstein(const GluingSpec& spec, const TheoremOptions& options = {});
// box bounds the gap search of the base; default n * (sum of generators).
TheoremReport verify_extension_pf(const ExtensionSpec& spec, const std::optional<NatVector>& box = std::nullopt,
                                  const TheoremOptions& options = {});
TheoremReport verify_join_sifr(const AffineSemigroup& left, const AffineSemigroup& right,
                               const TheoremOptions& options = {});

// A curated instance for the harness.
struct TheoremInstance {
  std::string theorem;
  std::string label;
  bool worked_example = false;  // the instance appears as an example in the source
  bool misprint = false;    // the printed example disagrees with its own data
  std::function<TheoremReport(const TheoremOptions&)> run;
};
std::vector<TheoremInstance> theorem_instances();
std::vector<TheoremInstance> theorem_instances(const std::string& theorem);

// Instances that each violate exactly the named hypothesis of a theorem.
struct HypothesisProbe {
  std::string theorem;
  std::string hypothesis;
  std::function<TheoremReport(const TheoremOptions&)> run;
};
std::vector<HypothesisProbe> hypothesis_probes();

// Axis embedding of numerical semigroups into N^d.
AffineSemigroup axis_embedding(const NumericalSemigroup& s, std::size_t dim, std::size_t axis);

}  // namespace semiglue
