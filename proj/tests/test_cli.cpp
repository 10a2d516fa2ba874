#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circlab/cli.hpp"
#include "circlab/cycles.hpp"
#include "circlab/families.hpp"
#include "circlab/graph6.hpp"

using namespace circlab;
using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run(cfg, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig base(const std::string& sub) {
  RunConfig c;
  c.subcommand = sub;
  return c;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("circlab_cli_" + name) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("construct emits the graph6 of the requested member") {
  RunConfig c = base("construct");
  c.params = {{"family", "H"}, {"n", "10"}, {"ell", "6"}};
  const RunResult r = invoke(c);
  CHECK(r.code == 0);
  FamilySpec s;
  s.family = Family::H;
  s.n = 10;
  s.ell = 6;
  CHECK(r.out == to_graph6(build_family(s).first) + "\n");
  CHECK(from_graph6(r.out.substr(0, r.out.size() - 1)).order() == 10);
}

TEST_CASE("construct derives block counts and defaults variants") {
  RunConfig derived = base("construct");
  derived.params = {{"family", "H2"}, {"n", "8"}, {"k", "3"}};
  RunConfig explicit_b = base("construct");
  explicit_b.params = {{"family", "H2"}, {"n", "8"}, {"k", "3"},
                       {"b", "3"},       {"variant", "joined"}};
  CHECK(invoke(derived).out == invoke(explicit_b).out);

  RunConfig chain = base("construct");
  chain.params = {{"family", "K2_Kk_bCliques"}, {"n", "7"}, {"k", "3"}};
  const RunResult r = invoke(chain);
  CHECK(r.code == 0);
  CHECK(circumference(from_graph6(r.out.substr(0, r.out.size() - 1))) == 7);

  // H1 splits are ambiguous, so both block counts stay explicit.
  RunConfig h1 = base("construct");
  h1.params = {{"family", "H1"}, {"n", "9"}, {"k", "3"}};
  CHECK(invoke(h1).code == 64);
  h1.params["b1"] = "2";
  h1.params["b2"] = "1";
  CHECK(invoke(h1).code == 0);
}

TEST_CASE("analyze reports the documented invariants") {
  RunConfig c = base("construct");
  c.params = {{"family", "H"}, {"n", "10"}, {"ell", "6"}};
  const TempFile file("h106.g6", invoke(c).out);

  RunConfig a = base("analyze");
  a.input_path = file.path;
  const RunResult r = invoke(a);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["order"] == 10);
  CHECK(j["edges"] == 24);
  CHECK(j["min_degree"] == 3);
  CHECK(j["circumference"] == 6);
  CHECK(j["c5"] == 126);
  CHECK(j["c4"] == 84);
  CHECK(j["k3"] == 22);
  CHECK(j["two_connected"] == true);

  // Byte-identical on repeat runs.
  CHECK(invoke(a).out == r.out);

  RunConfig with_extras = a;
  with_extras.params = {{"m", "6"}, {"s", "2"}};
  const json je = json::parse(invoke(with_extras).out);
  CHECK(je["c6"] == count_cycles(from_graph6(j["graph6"].get<std::string>()), 6)
                        .as_u64());
  CHECK(je["k2"] == 24);
}

TEST_CASE("analyze handles multiple lines and missing input") {
  const TempFile file("two.g6",
                      to_graph6(complete_graph(4)) + "\n" +
                          to_graph6(cycle_graph(5)) + "\n");
  RunConfig a = base("analyze");
  a.input_path = file.path;
  const RunResult r = invoke(a);
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    CHECK(j["schema"] == 1);
    ++count;
  }
  CHECK(count == 2);

  CHECK(invoke(base("analyze")).code == 64);
  RunConfig missing = base("analyze");
  missing.input_path = "does_not_exist.g6";
  const RunResult m = invoke(missing);
  CHECK(m.code == 64);
  CHECK(m.err.find("error") != std::string::npos);
}

TEST_CASE("bounds evaluates formulas as json") {
  RunConfig c = base("bounds");
  c.params = {{"name", "kopylov"}, {"n", "8"}, {"ell", "4"}};
  const json j = json::parse(invoke(c).out);
  CHECK(j["formula"] == "kopylov");
  CHECK(j["inputs"]["n"] == 8);
  CHECK(j["value"] == 13);

  c.params = {{"name", "luo"}, {"n", "8"}, {"ell", "5"}, {"s", "3"}};
  const json l = json::parse(invoke(c).out);
  CHECK(l["value"] == 17);
  CHECK(l["numerator"] == 35);
  CHECK(l["denominator"] == 2);
  CHECK(l["equality_possible"] == false);

  c.params = {{"name", "c5_family"}, {"family", "H2"}, {"n", "6"},
              {"k", "3"},            {"b", "2"}};
  const json f = json::parse(invoke(c).out);
  CHECK(f["value"] == 8);
  CHECK(f["display_value"] == 4);
  CHECK(f["display_agrees"] == false);

  c.params = {{"name", "fkv"}, {"n", "8"}, {"ell", "6"}};
  CHECK(invoke(c).code == 64);
  c.params = {{"name", "nope"}, {"n", "8"}};
  CHECK(invoke(c).code == 64);
}

TEST_CASE("verify maps verdicts onto exit codes") {
  RunConfig c = base("verify");
  c.params = {{"name", "dirac"}, {"n-max", "6"}};
  const RunResult pass = invoke(c);
  CHECK(pass.code == 0);
  const json j = json::parse(pass.out);
  CHECK(j["theorem"] == "dirac");
  CHECK(j["verdict"] == "pass");
  CHECK(j["universe"] == 70);

  c.params = {{"name", "luo"}, {"n-max", "3"}, {"ell", "4"}, {"s", "1"}};
  CHECK(invoke(c).code == 2);

  c.params = {{"name", "dirac"}, {"n-max", "8"}};
  c.time_budget_seconds = 1e-9;
  const RunResult partial = invoke(c);
  CHECK(partial.code == 3);
  CHECK(json::parse(partial.out)["partial"] == true);

  c = base("verify");
  c.params = {{"name", "unknown"}};
  CHECK(invoke(c).code == 64);
  c.params = {{"name", "kopylov"}, {"n-max", "7"}};  // missing --ell
  CHECK(invoke(c).code == 64);
}

TEST_CASE("turan and conjecture artifacts") {
  RunConfig c = base("turan");
  c.params = {{"n", "6"}, {"m", "4"}, {"ell", "4"}};
  const RunResult r = invoke(c);
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["value"] == 6);
  CHECK(j["universe"] == 76);
  CHECK(j["witnesses"].size() == 2);
  CHECK(j["partial"] == false);

  RunConfig zero = base("turan");
  zero.params = {{"n", "5"}, {"m", "5"}, {"ell", "4"}};
  CHECK(json::parse(invoke(zero).out)["witnesses"].empty());

  RunConfig conj = base("conjecture");
  conj.params = {{"n", "6"}, {"m", "5"}, {"ell", "5"}};
  const RunResult cr = invoke(conj);
  CHECK(cr.code == 3);
  const json cj = json::parse(cr.out);
  CHECK(cj["detail"]["note"] == "inconclusive (below threshold)");
  CHECK(cj["detail"]["delta"] == 8);

  conj.params = {{"n", "8"}, {"m", "5"}, {"ell", "5"}};
  CHECK(invoke(conj).code == 0);
}

TEST_CASE("output files capture exactly the stdout artifact") {
  const std::string path = "circlab_cli_out.json";
  RunConfig direct = base("verify");
  direct.params = {{"name", "dirac"}, {"n-max", "5"}};
  const RunResult r = invoke(direct);

  RunConfig to_file = direct;
  to_file.output_path = path;
  const RunResult rf = invoke(to_file);
  CHECK(rf.code == 0);
  CHECK(rf.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == r.out);
  std::remove(path.c_str());

  RunConfig bad_path = direct;
  bad_path.output_path = "no_such_dir/out.json";
  CHECK(invoke(bad_path).code == 64);
}

TEST_CASE("invalid run configurations fail before computing") {
  RunConfig c = base("verify");
  c.params = {{"name", "dirac"}, {"n-max", "6"}};
  c.workers = 0;
  CHECK(invoke(c).code == 64);
  c.workers = 1;
  c.time_budget_seconds = -1;
  CHECK(invoke(c).code == 64);
  c.time_budget_seconds = 0;
  c.params["n-max"] = "six";
  CHECK(invoke(c).code == 64);
  c.params["n-max"] = "6";
  CHECK(invoke(c).code == 0);
  CHECK(invoke(base("frobnicate")).code == 64);
}

TEST_CASE("the enumeration cap resolves flag, then env, then default") {
  RunConfig c = base("verify");
  c.params = {{"name", "dirac"}, {"n-max", "6"}};

  setenv("CIRCLAB_CAP", "5", 1);
  CHECK(invoke(c).code == 64);  // env cap below n-max
  c.cap = 6;
  CHECK(invoke(c).code == 0);  // flag overrides env
  setenv("CIRCLAB_CAP", "junk", 1);
  c.cap = 0;
  CHECK(invoke(c).code == 64);
  unsetenv("CIRCLAB_CAP");
  CHECK(invoke(c).code == 0);  // default cap
}

TEST_CASE("argv front end parses flags and propagates exit codes") {
  auto cli = [](std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"circlab"};
    argv.insert(argv.end(), args.begin(), args.end());
    return run_cli(static_cast<int>(argv.size()), argv.data());
  };
  CHECK(cli({"verify", "dirac", "--n-max", "6", "--output",
             "circlab_cli_argv.json"}) == 0);
  std::remove("circlab_cli_argv.json");
  CHECK(cli({"bounds", "fkv", "--n", "8", "--ell", "6"}) == 64);
  CHECK(cli({"definitely-not-a-subcommand"}) == 64);
  CHECK(cli({"verify", "dirac", "--n-max", "6", "--time-budget", "0"}) == 64);
  CHECK(cli({"verify", "dirac", "--n-max", "6", "--workers", "-2"}) == 64);
}
