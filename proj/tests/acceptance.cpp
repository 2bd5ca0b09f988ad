// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrtop/corpus.hpp"
#include "arrtop/curve_engine.hpp"
#include "arrtop/error.hpp"
#include "arrtop/polar.hpp"
#include "arrtop/report.hpp"

using namespace arrtop;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string vec(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

int failures = 0;

void report(int id, const char* name, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  if (!v.pass) ++failures;
  std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
  std::fflush(stdout);
}

const std::vector<corpus::Named>& full_corpus() {
  static const auto c = corpus::standard_corpus();
  return c;
}

}  // namespace

int main() {
  report(1, "oracle_equivalence", [] {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, a] : full_corpus()) {
      const auto os = betti_os(a);
      const auto sl = betti_slicing(a).betti;
      if (os != sl) v.fail(name + ": slicing " + vec(sl) + " vs Möbius " + vec(os));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) v.fail("took " + std::to_string(secs) + " s");
    if (v.pass) {
      std::ostringstream s;
      s.precision(2);
      s << std::fixed << full_corpus().size() << " arrangements agree in " << secs << " s";
      v.detail = s.str();
    }
    return v;
  });

  report(2, "slice_isomorphisms", [] {
    Verdict v;
    for (const auto& [name, a] : full_corpus()) {
      if (a.dim() == 0) continue;
      const auto p = find_generic_direction(a);
      const auto m = choose_generic_value(a, p.pencil);
      const auto b = betti_os(a), bs = betti_os(m.slice);
      for (std::size_t j = 0; j < a.dim(); ++j)
        if (b[j] != bs[j]) v.fail(name + ": b_" + std::to_string(j) + " differs on the slice");
    }
    if (v.pass) v.detail = "b_j(A) = b_j(slice) for j <= n-1 on all corpus arrangements";
    return v;
  });

  report(3, "split_sequence", [] {
    Verdict v;
    for (const auto& [name, a] : full_corpus()) {
      const auto s = verify_split(a);
      if (!s.pass) v.fail(name + ": " + s.detail);
    }
    if (v.pass) v.detail = "b_n = lambda and b_{n-1}(slice) = b_{n-1} on all corpus arrangements";
    return v;
  });

  report(4, "engine_equals_combinatorics", [] {
    Verdict v;
    std::size_t arrangements = 0, runs = 0;
    for (const auto& [name, a] : full_corpus()) {
      if (a.dim() != 2) continue;
      ++arrangements;
      for (const auto& d : engine_directions(a, 3)) {
        ++runs;
        const auto chk = check_arrangement(a, Pencil::make({d[0], d[1]}));
        if (!chk.pass) v.fail(name + ": " + chk.failures.front());
      }
    }
    if (v.pass) {
      v.detail = std::to_string(arrangements) + " plane arrangements x 3 directions (" + std::to_string(runs) +
                 " runs): per-value lambda = |mu|, totals = b_2";
    }
    return v;
  });

  report(5, "cusp_counterexample", [] {
    Verdict v;
    const PlaneCurve cusp(BiPoly::x() * BiPoly::x() - BiPoly::y() * BiPoly::y() * BiPoly::y());
    const auto d = find_curve_direction(cusp);
    const auto r = lambda_engine(cusp, d);
    // Critical values of a s^3 + b s^2 on the parametrization (s^3, s^2).
    const std::set<Rat> oracle{Rat(0), Rat(4 * d[1] * d[1] * d[1] / (27 * d[0] * d[0]))};
    std::set<Rat> got;
    for (const auto& e : r.atypical) {
      got.insert(e.value);
      if (e.lambda != 1) v.fail("lambda at " + to_string(e.value) + " is " + std::to_string(e.lambda));
    }
    if (r.atypical.size() != 2) v.fail(std::to_string(r.atypical.size()) + " atypical values");
    if (got != oracle) v.fail("atypical values differ from the parametrization oracle");
    if (r.lambda_total != 2) v.fail("total lambda " + std::to_string(r.lambda_total));
    const auto out = run_engine_curve("x^2 - y^3", std::nullopt);
    const auto note = out.report["note"].get<std::string>();
    if (note.rfind("total lambda = 2", 0) != 0) v.fail("report note missing");
    if (v.pass) {
      v.detail = "l = (" + to_string(d[0]) + ", " + to_string(d[1]) + "): values " + to_string(*got.begin()) + ", " +
                 to_string(*got.rbegin()) + " with lambda 1 each, total 2 != 0 = b_2(complement)";
    }
    return v;
  });

  report(6, "combinatorial_invariants", [] {
    Verdict v;
    std::size_t checks = 0;
    for (const auto& [name, a] : full_corpus()) {
      const auto poset = build_poset(a);
      if (auto bad = check_mobius(poset)) v.fail(name + ": " + *bad);
      for (std::size_t i = 0; i < poset.flats.size(); ++i) {
        const std::int64_t sign = poset.flats[i].codim() % 2 == 0 ? 1 : -1;
        if (poset.mobius[i] * sign < 1) v.fail(name + ": sign rule");
      }
      const auto b = betti_os(poset);
      if (b[0] != 1) v.fail(name + ": b_0");
      if (a.dim() > 0 && b[1] != std::int64_t(a.size())) v.fail(name + ": b_1");
      auto poin = poincare_polynomial(poset);
      for (std::size_t j = 0; j < a.size(); ++j) {
        auto del = poincare_polynomial(build_poset(delete_member(a, j)));
        auto res = poincare_polynomial(build_poset(restrict_to_member(a, j)));
        std::vector<std::int64_t> rhs(std::max(del.size(), res.size() + 1), 0);
        for (std::size_t i = 0; i < del.size(); ++i) rhs[i] += del[i];
        for (std::size_t i = 0; i < res.size(); ++i) rhs[i + 1] += res[i];
        std::vector<std::int64_t> lhs = poin;
        lhs.resize(std::max(lhs.size(), rhs.size()), 0);
        rhs.resize(lhs.size(), 0);
        if (lhs != rhs) v.fail(name + ": deletion-restriction at H_" + std::to_string(j));
        ++checks;
      }
    }
    if (v.pass) v.detail = "Möbius, sign, b_0, b_1 on all arrangements; " + std::to_string(checks) +
                           " deletion-restriction identities";
    return v;
  });

  report(7, "determinism", [] {
    Verdict v;
    auto dump = [] {
      std::string all;
      for (const auto& [name, a] : full_corpus()) all += run_verify(a).report.dump(2) + "\n";
      return all;
    };
    const auto first = dump(), second = dump();
    if (first != second) v.fail("verify reports differ between runs");
    if (v.pass) v.detail = "verify reports byte-identical across two runs (" + std::to_string(first.size()) + " bytes)";
    return v;
  });

  report(8, "certification_soundness", [] {
    Verdict v;
    std::size_t injected = 0;
    for (const auto& [name, a] : corpus::random_corpus()) {
      const auto cp = find_generic_direction(a);
      if (!recheck_certificate(a, cp.certificate)) v.fail(name + ": certificate recheck failed");
      if (a.dim() < 2) continue;
      // Inject the coordinate hyperplane x_i = 0 and probe with l = x_i.
      for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<Rat> e(a.dim(), Rat(0));
        e[i] = 1;
        auto hs = a.hyperplanes();
        hs.push_back(Hyperplane::make(e, Rat(0)));
        const Arrangement b(a.dim(), hs, DuplicatePolicy::kDedupe);
        std::size_t expect = b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
          if (b[j].normal == e) {
            expect = j;
            break;
          }
        const auto cert = certify_direction(b, e);
        ++injected;
        if (cert.direction_ok || cert.direction_valid()) v.fail(name + ": coordinate direction accepted");
        if (!cert.direction_witness || *cert.direction_witness != std::vector<std::size_t>{expect})
          v.fail(name + ": wrong witness for x_" + std::to_string(i + 1));
        const auto alt = find_generic_direction(b);
        if (alt.pencil.direction == e || !recheck_certificate(b, alt.certificate))
          v.fail(name + ": search after injection");
      }
    }
    if (v.pass) v.detail = "50 random arrangements certified and rechecked; " + std::to_string(injected) +
                           " injected coordinate directions rejected with the parallel hyperplane as witness";
    return v;
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
