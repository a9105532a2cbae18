#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semiglue/monomial.hpp"

namespace semiglue::cli {

inline constexpr const char* kSchemaVersion = "1";

struct SemigroupInput {
  enum class Kind { Numerical, Affine } kind = Kind::Numerical;
  std::vector<std::vector<Int>> generators;  // one entry per generator
};

struct JobSpec {
  std::string command;
  std::optional<SemigroupInput> semigroup;  // the left factor for glue, star-glue and join
  std::optional<SemigroupInput> right;
  std::vector<Int> b;
  std::vector<Int> a;
  std::optional<Int> l;
  std::vector<Int> u;
  std::optional<std::vector<Int>> box;
  std::optional<Int> upto;
  std::set<std::string> properties;  // projective, tangent-cone, gorenstein
  std::string theorem;               // verify only; "all" runs every curated instance
  bool probes = false;
  Int random = 0;
  std::uint64_t seed = 1;
  std::string format = "json";
  unsigned threads = 0;  // 0: SEMIGLUE_THREADS or the hardware count
  std::optional<Int> deadline_ms;
};

std::vector<std::string> commands();

// Parses a job in the published schema. InputError messages start with the
// JSON pointer of the offending value.
JobSpec parse_job(const std::string& json_text);
std::string job_to_json(const JobSpec& job);

// Exit codes: 0 success, 1 a CONFLICT, 2 input error, 3 resource bound.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiglue::cli
