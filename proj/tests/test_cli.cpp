#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "xprod/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = xprod::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() : path_(fs::temp_directory_path() / ("xprod-cli-" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& body) const {
    const auto p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

private:
  static inline int counter_ = 0;
  fs::path path_;
};

} // namespace

TEST_CASE("analyze reports periodic points and the verdict") {
  TempDir dir;
  const auto sys = dir.write("s21.json", R"({"points": 3, "sigma": [1, 0, 2]})");
  const auto r = run({"analyze", "--system", sys});
  REQUIRE(r.code == 0);
  const auto j = r.report();
  CHECK(j["command"] == "analyze --system " + sys);
  CHECK(j["version"] == 1);
  CHECK(j["result"]["per_1"] == json::array({2}));
  CHECK(j["result"]["sep_1"] == json::array({0, 1}));
  CHECK(j["result"]["maximal_abelian"] == false);
  CHECK(j["system_digest"].get<std::string>().size() == 16);
}

TEST_CASE("reports are byte-stable") {
  TempDir dir;
  const auto sys = dir.write("s.json", R"({"points": 4, "sigma": [0, 1, 3, 2]})");
  const std::vector<std::string> args{"between", "--kind", "avoiding", "--n", "1", "--u1", "0", "--probe",
                                      "--system", sys, "--window", "-3:3"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.report()["result"]["strict_sandwich"] == true);
  CHECK(a.report()["result"]["probe"]["refuted"] == true);
}

TEST_CASE("reduce prints a replayable certificate") {
  TempDir dir;
  const auto sys = dir.write("s21.json", R"({"points": 3, "sigma": [1, 0, 2]})");
  const auto r = run({"reduce", "--system", sys, "--element", "e0*d^1"});
  REQUIRE(r.code == 0);
  const auto j = r.report()["result"];
  CHECK(j["output"] == "e0*d^0");
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["kind"] == "right_multiply");
  CHECK(j["steps"][0]["shift"] == 1);
  CHECK(j["replay_ok"] == true);
  CHECK(j["in_generated_ideal_window"] == true);

  const auto cert = dir.write("cert.json", j.dump());
  CHECK(run({"reduce", "--system", sys, "--replay", cert}).code == 0);

  json bad = j;
  bad["output"] = "e1*d^0";
  const auto tampered = dir.write("bad.json", bad.dump());
  const auto rb = run({"reduce", "--system", sys, "--replay", tampered});
  CHECK(rb.code == 1);
  CHECK(rb.report()["result"]["ok"] == false);
}

TEST_CASE("reduce over random elements") {
  TempDir dir;
  const auto sys = dir.write("c.json", R"({"points": 3, "sigma": [1, 2, 0]})");
  const auto r = run({"reduce", "--system", sys, "--random", "50", "--seed", "4"});
  CHECK(r.code == 0);
  CHECK(r.report()["result"]["valid"] == 50);
}

TEST_CASE("usage and input errors exit with 2") {
  TempDir dir;
  const auto bad = dir.write("bad.json", R"({"points": 3, "sigma": [1, 1, 2]})");
  const auto broken = dir.write("broken.json", R"({"points": 3, "sigma": [1, 0)");
  const auto sys = dir.write("s21.json", R"({"points": 3, "sigma": [1, 0, 2]})");
  CHECK(run({"analyze", "--system", broken}).code == 2);
  CHECK(run({"analyze", "--system", bad}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--system", sys, "--json", "--text"}).code == 2);
  CHECK(run({"analyze", "--system", sys, "--window", "3:1"}).code == 2);
  const auto e7 = run({"reduce", "--system", sys, "--element", "e7"});
  CHECK(e7.code == 2);
  CHECK(e7.err.find("e7") != std::string::npos);
  const auto syntax = run({"reduce", "--system", sys, "--element", "e0 +"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("byte 4") != std::string::npos);
  CHECK(run({"between", "--system", dir.write("sw.json", R"({"points": 4, "sigma": [0, 1, 3, 2]})"), "--kind",
             "avoiding", "--n", "1", "--u1", "0,1"})
            .code == 2);
}

TEST_CASE("ideal, laurent and banach subcommands") {
  TempDir dir;
  const auto sys = dir.write("s21.json", R"({"points": 3, "sigma": [1, 0, 2]})");
  const auto id = run({"ideal", "--system", sys, "--generator", "e2*d^0 + e2*d^1", "--member", "e2*d^0"});
  REQUIRE(id.code == 0);
  CHECK(id.report()["result"]["member"] == "not_in_window");
  CHECK(id.report()["result"]["certificates_verified"] == true);

  const auto w = run({"laurent", "witness", "--f", "t + t^-1", "--roots", "2"});
  REQUIRE(w.code == 0);
  CHECK(w.report()["result"]["value"] == "t^-1 - 5/2 + t^1");
  CHECK(w.report()["result"]["member"] == true);
  const auto m = run({"laurent", "member", "--f", "1", "--roots", "2"});
  CHECK(m.report()["result"]["member"] == false);

  const auto ch = run({"banach", "characters", "--system", sys, "--xi", "i", "--element", "e2*d^2"});
  REQUIRE(ch.code == 0);
  CHECK(ch.report()["result"]["characters"][0]["value"] == "-1");
  const auto ci = run({"banach", "commutator-ideal", "--system", sys});
  CHECK(ci.code == 0);
  CHECK(ci.report()["result"]["equal"] == true);
  const auto mod = run({"banach", "modular", "--system", sys, "--x", "2", "--xi", "i", "--other-xi", "1"});
  CHECK(mod.code == 0);
  CHECK(mod.report()["result"]["distinguishing_witness"].is_string());
  CHECK(run({"banach", "modular", "--system", sys, "--x", "0"}).code == 2);
}

TEST_CASE("gelfand subcommand") {
  TempDir dir;
  const auto z2 = dir.write("z2.json", R"({"dim": 2, "mul": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], "sigma": [[1, 0], [0, 1]]})");
  const auto r = run({"gelfand", "--algebra", z2});
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["induced_sigma"] == json::array({0, 1}));
  CHECK(r.report()["result"]["triquiv"]["agree"] == true);
  const auto nil = dir.write("nil.json", R"({"dim": 2, "mul": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "sigma": [[1, 0], [0, 1]]})");
  const auto rn = run({"gelfand", "--algebra", nil});
  CHECK(rn.code == 2);
  CHECK(rn.err.find("not semisimple") != std::string::npos);
}

TEST_CASE("text output") {
  TempDir dir;
  const auto sys = dir.write("s21.json", R"({"points": 3, "sigma": [1, 0, 2]})");
  const auto r = run({"analyze", "--system", sys, "--text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("maximal_abelian") != std::string::npos);
  CHECK_THROWS([&] {
    const json j = json::parse(r.out);
    static_cast<void>(j);
  }());
}

TEST_CASE("digest") {
  CHECK(xprod::cli::digest("") == "cbf29ce484222325");
  CHECK(xprod::cli::digest("a") == "af63dc4c8601ec8c");
}
