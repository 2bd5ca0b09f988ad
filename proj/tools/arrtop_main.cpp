// arrtop: Betti numbers and minimal cell counts of complements of affine
// hyperplane arrangements via generic pencils and polar numbers.
//
// Exit codes: 0 success, 2 usage or input error, 3 certification failure,
// 4 mismatch between independent computations (or a failed verify check),
// 5 irrational atypical values in the polar engine.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrtop/arrangement_io.hpp"
#include "arrtop/corpus.hpp"
#include "arrtop/error.hpp"
#include "arrtop/report.hpp"

namespace {

using arrtop::Arrangement;
using json = nlohmann::ordered_json;

struct GlobalFlags {
  std::string format = "json";
  std::size_t budget = 10000;
  bool dedupe = false;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw arrtop::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Arrangement load(const std::string& path, const GlobalFlags& g) {
  try {
    return arrtop::parse_arrangement(read_file(path),
                                     g.dedupe ? arrtop::DuplicatePolicy::kDedupe : arrtop::DuplicatePolicy::kReject);
  } catch (const arrtop::InputError& e) {
    throw arrtop::InputError(path + ": " + e.what());
  }
}

arrtop::Direction2 parse_direction(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw arrtop::InputError("direction must be 'a,b'");
  try {
    return {arrtop::parse_rat(s.substr(0, comma)), arrtop::parse_rat(s.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw arrtop::InputError(std::string("direction: ") + e.what());
  }
}

int emit(arrtop::Outcome out, const GlobalFlags& g, std::chrono::steady_clock::time_point start) {
  if (g.timing) {
    out.report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (g.format == "text") {
    std::cout << arrtop::render_text(out.report);
  } else {
    std::cout << out.report.dump(2) << "\n";
  }
  return out.exit_code;
}

Arrangement generate(const std::string& family, const std::vector<std::size_t>& params, std::uint64_t seed) {
  namespace c = arrtop::corpus;
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw arrtop::InputError("gen " + family + ": wrong number of parameters");
    }
  };
  if (family == "boolean") {
    need(1, 1);
    return c::boolean(params[0]);
  }
  if (family == "braid") {
    need(1, 1);
    return c::braid(params[0]);
  }
  if (family == "generic") {
    need(2, 2);
    return c::generic(params[0], params[1]);
  }
  if (family == "concurrent") {
    need(1, 1);
    return c::concurrent(params[0]);
  }
  if (family == "parallel") {
    need(1, 2);
    return c::parallel(params[0], params.size() > 1 ? params[1] : 2);
  }
  if (family == "random") {
    need(2, 2);
    return c::random(params[0], params[1], seed);
  }
  throw arrtop::InputError("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of hyperplane arrangement complements via generic pencils and polar numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", g.budget, "Certification attempts per search")->check(CLI::PositiveNumber);
  app.add_flag("--dedupe", g.dedupe, "Drop repeated hyperplanes instead of rejecting the file");
  app.add_flag("--timing", g.timing, "Add wall-clock timing to the report (breaks byte-identical output)");

  std::string file;
  std::string method = "both";
  auto* betti = app.add_subcommand("betti", "Betti numbers of the complement");
  betti->add_option("file", file, "Arrangement file")->required();
  betti->add_option("--method", method, "os | slicing | both")->check(CLI::IsMember({"os", "slicing", "both"}));

  auto* polar = app.add_subcommand("polar", "Pencil certificate, atypical values, polar numbers and slicing trace");
  polar->add_option("file", file, "Arrangement file")->required();

  std::string curve, direction;
  auto* engine = app.add_subcommand("engine", "Polar-curve engine for plane curves and plane arrangements");
  engine->add_option("file", file, "Arrangement file (dim 2)");
  engine->add_option("--curve", curve, "Polynomial in x and y, e.g. \"x^2 - y^3\"");
  engine->add_option("--direction", direction, "Pencil direction 'a,b' for l = a*x + b*y");

  std::string family;
  std::vector<std::size_t> params;
  std::uint64_t seed = 1;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate an arrangement file");
  gen->add_option("family", family, "boolean | braid | generic | concurrent | parallel | random")->required();
  gen->add_option("params", params, "Family parameters (see README)");
  gen->add_option("--seed", seed, "Seed for the random family");
  gen->add_option("-o,--output", output, "Write to a file instead of stdout");

  std::vector<std::string> files;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("files", files, "Arrangement files")->required();

  std::string corpus_dir;
  auto* corpus = app.add_subcommand("corpus", "Write the standard corpus as arrangement files");
  corpus->add_option("dir", corpus_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : arrtop::kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  const arrtop::PencilOptions options{g.budget};
  try {
    if (*betti) {
      const auto m = method == "os" ? arrtop::BettiMethod::kOrlikSolomon
                     : method == "slicing" ? arrtop::BettiMethod::kSlicing
                                           : arrtop::BettiMethod::kBoth;
      return emit(arrtop::run_betti(load(file, g), m, options), g, start);
    }
    if (*polar) return emit(arrtop::run_polar(load(file, g), options), g, start);
    if (*engine) {
      if (file.empty() == curve.empty()) throw arrtop::InputError("engine needs exactly one of FILE or --curve");
      std::optional<arrtop::Direction2> d;
      if (!direction.empty()) d = parse_direction(direction);
      if (!curve.empty()) return emit(arrtop::run_engine_curve(curve, d, options), g, start);
      return emit(arrtop::run_engine(load(file, g), d, options), g, start);
    }
    if (*gen) {
      const std::string text = arrtop::print_arrangement(generate(family, params, seed));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output) << text;
      }
      return arrtop::kExitOk;
    }
    if (*verify) {
      if (files.size() == 1) return emit(arrtop::run_verify(load(files[0], g), options), g, start);
      arrtop::Outcome batch;
      batch.report["schema"] = arrtop::kReportSchema;
      batch.report["command"] = "verify-batch";
      json reports = json::array();
      for (const auto& f : files) {
        auto one = arrtop::run_verify(load(f, g), options);
        one.report["file"] = f;
        if (one.exit_code != arrtop::kExitOk) batch.exit_code = one.exit_code;
        reports.push_back(std::move(one.report));
      }
      batch.report["reports"] = std::move(reports);
      batch.report["status"] = batch.exit_code == arrtop::kExitOk ? "pass" : "fail";
      return emit(std::move(batch), g, start);
    }
    if (*corpus) {
      std::filesystem::create_directories(corpus_dir);
      for (const auto& named : arrtop::corpus::standard_corpus()) {
        std::ofstream(std::filesystem::path(corpus_dir) / (named.name + ".arr"))
            << arrtop::print_arrangement(named.arrangement);
      }
      return arrtop::kExitOk;
    }
  } catch (const arrtop::IrrationalError& e) {
    std::cerr << "error: " << e.what() << "\nunresolved factor: " << e.factor() << "\n";
    return arrtop::kExitIrrational;
  } catch (const arrtop::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return arrtop::kExitInput;
  } catch (const arrtop::CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return arrtop::kExitCertification;
  } catch (const arrtop::MismatchError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return arrtop::kExitMismatch;
  }
  return arrtop::kExitInput;
}
