#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arrtop/arrangement_io.hpp"
#include "arrtop/corpus.hpp"
#include "arrtop/report.hpp"

namespace fs = std::filesystem;
using namespace arrtop;

namespace {

const std::string kCli = ARRTOP_CLI_PATH;
const fs::path kGolden = ARRTOP_GOLDEN_DIR;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("arrtop-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = "'" + kCli + "' " + args + " 2>'" + err.string() + "'";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

fs::path write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("golden reports") {
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(kGolden)) {
    const auto p = entry.path();
    if (p.extension() != ".arr") continue;
    const auto stem = p.stem().string();
    CAPTURE(stem);
    std::vector<std::pair<std::string, std::string>> cases = {
        {"betti " + q(p), stem + ".betti.json"},
        {"polar " + q(p), stem + ".polar.json"},
        {"verify " + q(p), stem + ".verify.json"},
        {"--format text verify " + q(p), stem + ".verify.txt"},
        {"engine " + q(p), stem + ".engine.json"},
    };
    for (const auto& [args, golden] : cases) {
      if (!fs::exists(kGolden / golden)) continue;
      CAPTURE(golden);
      auto r = run(args);
      CHECK(r.code == 0);
      CHECK(r.out == slurp(kGolden / golden));
      ++compared;
    }
  }
  auto cusp = run("engine --curve 'x^2 - y^3'");
  CHECK(cusp.code == 0);
  CHECK(cusp.out == slurp(kGolden / "cusp.engine.json"));
  CHECK(compared >= 20);
}

TEST_CASE("betti command") {
  auto b2 = write("b2.arr", "dim 2\n1 0 0\n0 1 0\n");
  auto r = run("betti " + q(b2));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["betti"] == nlohmann::json::array({1, 2, 1}));
  CHECK(j["status"] == "pass");
  for (const char* m : {"os", "slicing", "both"}) {
    auto rm = run(std::string("betti --method ") + m + " " + q(b2));
    CHECK(rm.code == 0);
    CHECK(nlohmann::json::parse(rm.out)["betti"] == nlohmann::json::array({1, 2, 1}));
  }
  CHECK(run("betti --method nope " + q(b2)).code == 2);
}

TEST_CASE("exit codes") {
  auto bad = write("bad.arr", "dim 2\n1 0 0\n1 0\n");
  auto r = run("betti " + q(bad));
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3: expected 3 numbers") != std::string::npos);
  CHECK(r.out.empty());

  auto dup = write("dup.arr", "dim 2\n1 0 0\n2 0 0\n");
  auto rd = run("betti " + q(dup));
  CHECK(rd.code == 2);
  CHECK(rd.err.find("line 3:") != std::string::npos);
  CHECK(run("--dedupe betti " + q(dup)).code == 0);

  CHECK(run("betti " + q(scratch() / "missing.arr")).code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);

  auto b3 = write("b3.arr", "dim 3\n1 0 0 0\n0 1 0 0\n0 0 1 0\n");
  auto r3 = run("engine " + q(b3));
  CHECK(r3.code == 2);
  CHECK(r3.err.find("dim 2") != std::string::npos);

  auto rc = run("engine --curve 'x^2 - y^3' --direction 1,0");
  CHECK(rc.code == 3);
  CHECK(rc.err.find("not reduced") != std::string::npos);

  auto ri = run("engine --curve 'x^2 + y^2 - 2' --direction 1,0");
  CHECK(ri.code == 5);
  CHECK(ri.err.find("unresolved factor: x^2 - 2") != std::string::npos);

  CHECK(run("engine --curve 'x^2 +' ").code == 2);
  CHECK(run("engine --curve 'x*y' --direction 1").code == 2);
  CHECK(run("engine").code == 2);
  CHECK(run("gen boolean").code == 2);
  CHECK(run("gen moebius 3").code == 2);
}

TEST_CASE("engine reports") {
  auto cusp = nlohmann::json::parse(run("engine --curve 'x^2 - y^3'").out);
  CHECK(cusp["engine"]["lambda_total"] == 2);
  CHECK(cusp["engine"]["atypical"].size() == 2);
  CHECK(cusp["note"].get<std::string>().find("total lambda = 2") == 0);

  auto r = run("engine --curve 'x^2 - y^3' --direction 1,1");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["engine"]["atypical"][0]["value"] == "0");
  CHECK(j["engine"]["atypical"][1]["value"] == "4/27");

  auto g = write("g24.arr", print_arrangement(corpus::generic(2, 4)));
  auto rg = run("engine " + q(g));
  CHECK(rg.code == 0);
  CHECK(nlohmann::json::parse(rg.out)["engine"]["lambda_total"] == 6);
}

TEST_CASE("gen") {
  CHECK(run("gen boolean 2").out == "dim 2\n1 0 0\n0 1 0\n");
  auto c5 = parse_arrangement(run("gen concurrent 5").out);
  CHECK(c5.size() == 5);
  CHECK(point_strata(c5).size() == 1);
  auto g24 = parse_arrangement(run("gen generic 2 4").out);
  CHECK(g24.size() == 4);
  CHECK(point_strata(g24).size() == 6);
  CHECK(run("gen random 3 5 --seed 7").out == run("gen random 3 5 --seed 7").out);
  CHECK(run("gen random 3 5 --seed 7").out != run("gen random 3 5 --seed 8").out);
  auto out = scratch() / "p3.arr";
  CHECK(run("gen parallel 3 -o " + q(out)).code == 0);
  CHECK(parse_arrangement(slurp(out)) == corpus::parallel(3));
}

TEST_CASE("verify, batches and determinism") {
  const auto dir = scratch() / "corpus";
  REQUIRE(run("corpus " + q(dir)).code == 0);
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path().string());
  CHECK(files.size() == corpus::standard_corpus().size());
  std::sort(files.begin(), files.end());

  std::string args = "verify";
  for (const auto& f : files) args += " '" + f + "'";
  auto first = run(args);
  auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["command"] == "verify-batch");
  CHECK(j["status"] == "pass");
  CHECK(j["reports"].size() == files.size());

  auto timed = nlohmann::json::parse(run("--timing verify '" + files[0] + "'").out);
  CHECK(timed.contains("timing_ms"));
  CHECK_FALSE(nlohmann::json::parse(run("verify '" + files[0] + "'").out).contains("timing_ms"));

  auto par = write("par.arr", "dim 2\n1 0 0\n1 0 1\n");
  auto rp = run("verify " + q(par));
  CHECK(rp.code == 0);
  CHECK(nlohmann::json::parse(rp.out)["failed"].empty());
}

TEST_CASE("fault injection") {
  const auto a = corpus::braid(3);

  Hooks perturb;
  perturb.perturb_slicing_betti = [](std::vector<std::int64_t>& b) { b[1] += 1; };
  auto betti = run_betti(a, BettiMethod::kBoth, {}, perturb);
  CHECK(betti.exit_code == kExitMismatch);
  CHECK(betti.report["status"] == "fail");
  CHECK(betti.report["failed"] == nlohmann::ordered_json::array({"os_equals_slicing"}));
  // Single methods have nothing to compare against.
  CHECK(run_betti(a, BettiMethod::kSlicing, {}, perturb).exit_code == kExitOk);

  auto verify = run_verify(a, {}, perturb);
  CHECK(verify.exit_code == kExitMismatch);
  CHECK(verify.report["status"] == "fail");

  Hooks corrupt;
  corrupt.corrupt_poset = [](IntersectionPoset& p) { p.mobius.back() += 1; };
  auto bad = run_verify(a, {}, corrupt);
  CHECK(bad.exit_code == kExitMismatch);
  bool named = false;
  for (const auto& f : bad.report["failed"]) named = named || f == "mobius_recursion";
  CHECK(named);

  CHECK(run_verify(a).exit_code == kExitOk);
}

TEST_CASE("text rendering") {
  auto b2 = write("b2t.arr", "dim 2\n1 0 0\n0 1 0\n");
  auto r = run("--format text polar " + q(b2));
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda_total: 1") != std::string::npos);
  CHECK(r.out.find("betti: (1, 2, 1)") != std::string::npos);
  auto after = run("polar " + q(b2) + " --format text");
  CHECK(after.out == r.out);
}
