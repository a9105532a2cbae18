#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "semiglue/cli.hpp"
#include "semiglue/errors.hpp"

using namespace semiglue;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string pointer_of(const std::string& text) {
  try {
    cli::parse_job(text);
  } catch (const InputError& e) {
    std::string m = e.what();
    return m.substr(0, m.find(':'));
  }
  return "no error";
}

// True when no JSON number occurs anywhere in v.
bool numbers_free(const json& v) {
  if (v.is_number()) return false;
  if (v.is_array() || v.is_object())
    for (const auto& x : v)
      if (!numbers_free(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("job parsing reports the offending JSON pointer") {
  CHECK(pointer_of(R"({"command":"betti","type":"affine","matrix":[["3","5"],["0","-1"]]})") == "/matrix/1/1");
  CHECK(pointer_of(R"({"command":"pf","type":"numerical","generators":["3","5"],"params":{"bogus":"1"}})") ==
        "/params/bogus");
  CHECK(pointer_of(R"({"command":"nope"})") == "/command");
  CHECK(pointer_of(R"({"command":"pf","type":"numerical","generators":["3","x"]})") == "/generators/1");
  CHECK(pointer_of(R"({"command":"glue","type":"numerical","generators":[3,5],"params":{"right":{"type":"numerical"}}})") ==
        "/params/right");
  CHECK(pointer_of(R"({"command":"pf","schema_version":"2"})") == "/schema_version");
  CHECK(pointer_of(R"({"command":"verify","params":{"deadline_ms":"0"}})") == "/params/deadline_ms");
  CHECK(pointer_of("[1,2]").empty());
  CHECK(pointer_of("{").empty());
  CHECK(pointer_of(R"({"command":"pf","type":"numerical","generators":["3","5"]})") == "no error");
}

TEST_CASE("jobs round-trip through their JSON form") {
  cli::JobSpec job;
  job.command = "glue";
  job.semigroup = cli::SemigroupInput{cli::SemigroupInput::Kind::Numerical, {{3}, {5}, {7}}};
  job.right = cli::SemigroupInput{cli::SemigroupInput::Kind::Numerical, {{9}, {11}}};
  job.b = {2, 3, 0};
  job.a = {2, 1};
  job.properties = {"projective", "gorenstein"};
  job.deadline_ms = 5000;
  const std::string text = cli::job_to_json(job);
  CHECK(numbers_free(json::parse(text)));
  auto back = cli::parse_job(text);
  CHECK(cli::job_to_json(back) == text);
  CHECK(back.b == job.b);
  CHECK(back.properties == job.properties);

  cli::JobSpec affine;
  affine.command = "extend";
  affine.semigroup = cli::SemigroupInput{cli::SemigroupInput::Kind::Affine, {{3, 0}, {5, 0}, {0, 1}}};
  affine.l = 2;
  affine.u = {1, 0, 1};
  CHECK(cli::job_to_json(cli::parse_job(cli::job_to_json(affine))) == cli::job_to_json(affine));
  // A matrix gives its columns as generators.
  auto m = cli::parse_job(R"({"command":"betti","type":"affine","matrix":[[3,5,0],[0,0,1]]})");
  CHECK(m.semigroup->generators == std::vector<std::vector<Int>>{{3, 0}, {5, 0}, {0, 1}});
}

TEST_CASE("exit codes") {
  CHECK(run({"pf", "--numerical", "3,5,7"}).code == 0);
  CHECK(run({"analyze", "--numerical", "4,6"}).code == 2);
  CHECK(run({"analyze", "--numerical", "3,x"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"glue", "--left", "3,5", "--right", "2,3", "--b", "2,0", "--a", "0,2"}).code == 2);
  CHECK(run({"analyze", "--numerical", "116,261,351,390,468", "--deadline-ms", "1"}).code == 3);
  // The misprinted shortened binomial is a conflict.
  auto v = run({"verify", "gluing-groebner", "--left", "3,5,7", "--right", "9,11", "--b", "2,3,0", "--a", "2,1"});
  CHECK(v.code == 0);
  CHECK(run({"verify", "star-tangent-cone"}).code == 1);
}

TEST_CASE("reports carry no JSON numbers and echo the input") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--numerical", "3,5,7"},
           {"betti", "--matrix", "3,5,0,1,2;0,0,1,3,3"},
           {"glue", "--left", "3,5", "--right", "7,12", "--b", "1,1", "--a", "1,1"},
           {"join", "--left", "3,5,7", "--right", "2,3"},
           {"hilbert", "--numerical", "3,5,7", "--upto", "8"},
           {"analyze", "--numerical", "4,6"}}) {
    auto r = run(args);
    auto env = json::parse(r.out);
    CHECK(numbers_free(env));
    CHECK(env["schema_version"] == cli::kSchemaVersion);
    CHECK(env["command"] == args.front());
    if (r.code == 0) {
      CHECK(env["status"] == "ok");
      CHECK(env["input"]["command"] == args.front());
    } else {
      CHECK(env["status"] == "error");
      CHECK(env["error"]["kind"] == "input");
    }
  }
}

TEST_CASE("CLI results match the worked examples") {
  auto pf = json::parse(run({"pf", "--numerical", "3,5,7"}).out)["result"];
  CHECK(pf["pseudo_frobenius"] == json::array({"2", "4"}));
  CHECK(pf["frobenius"] == "4");
  auto glue = json::parse(run({"glue", "--left", "3,5", "--right", "7,12", "--b", "1,1", "--a", "1,1"}).out)["result"];
  CHECK(glue.dump().find("\"57\"") != std::string::npos);
  auto hilbert = json::parse(run({"hilbert", "--numerical", "2,3", "--upto", "3"}).out)["result"];
  CHECK(hilbert["values"] == json::array({"1", "2", "2", "2"}));
}

TEST_CASE("output is deterministic") {
  auto a = run({"fixtures"}), b = run({"fixtures"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  auto r1 = run({"verify", "join-sifr", "--random", "5", "--seed", "7", "--threads", "1"});
  auto r2 = run({"verify", "join-sifr", "--random", "5", "--seed", "7", "--threads", "3"});
  CHECK(r1.out.substr(r1.out.find("\"result\"")) == r2.out.substr(r2.out.find("\"result\"")));
  auto r3 = run({"verify", "join-sifr", "--random", "5", "--seed", "8"});
  CHECK(r1.out.substr(r1.out.find("\"result\"")) != r3.out.substr(r3.out.find("\"result\"")));
}

TEST_CASE("text format renders the same envelope") {
  auto r = run({"pf", "--numerical", "3,5,7", "--text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("pseudo frobenius: 2, 4") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}
