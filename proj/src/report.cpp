#include "arrtop/report.hpp"

#include <algorithm>
#include <sstream>

#include "arrtop/arrangement_io.hpp"
#include "arrtop/curve_parser.hpp"
#include "arrtop/error.hpp"
#include "arrtop/polar.hpp"

namespace arrtop {

using json = nlohmann::ordered_json;

json to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

namespace {

json header(const char* command, const Arrangement& a) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["input_digest"] = arrangement_digest(a);
  j["dim"] = a.dim();
  j["hyperplanes"] = a.size();
  return j;
}

json certificate_json(const GenericityCertificate& c) {
  json j;
  j["direction"] = to_json(c.direction);
  j["direction_ok"] = c.direction_ok;
  j["direction_witness"] = c.direction_witness ? json(*c.direction_witness) : json(nullptr);
  j["separation_ok"] = c.separation_ok;
  if (c.separation_witness) {
    j["separation_witness"] = json::array({to_json(c.separation_witness->first), to_json(c.separation_witness->second)});
  } else {
    j["separation_witness"] = nullptr;
  }
  j["member_value"] = c.member_value ? json(to_string(*c.member_value)) : json(nullptr);
  j["member_ok"] = c.member_ok;
  return j;
}

json atypical_json(const std::vector<AtypicalPoint>& pts, const std::vector<std::int64_t>& lambdas) {
  json out = json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    json e;
    e["value"] = to_string(pts[i].value);
    e["point"] = to_json(pts[i].stratum.point);
    e["lambda"] = lambdas[i];
    out.push_back(e);
  }
  return out;
}

json engine_json(const EngineReport& r) {
  json j;
  j["direction"] = to_json({r.direction[0], r.direction[1]});
  j["polar_curve"] = r.polar_curve;
  j["polar_degree"] = r.polar_degree;
  j["generic_value"] = to_string(r.generic_value);
  j["generic_count"] = r.generic_count;
  auto values = [](const std::vector<EngineValue>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
      json e;
      e["value"] = to_string(v.value);
      e["count"] = v.count;
      e["lambda"] = v.lambda;
      out.push_back(e);
    }
    return out;
  };
  j["atypical"] = values(r.atypical);
  j["degree_drop"] = values(r.degree_drop);
  j["lambda_total"] = r.lambda_total;
  return j;
}

json check(const std::string& name, bool pass, const std::string& detail) {
  json j;
  j["name"] = name;
  j["pass"] = pass;
  j["detail"] = detail;
  return j;
}

std::string vec_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::int64_t euler(const std::vector<std::int64_t>& b) {
  std::int64_t e = 0;
  for (std::size_t q = 0; q < b.size(); ++q) e += (q % 2 == 0 ? 1 : -1) * b[q];
  return e;
}

void finish(Outcome& out, const json& checks) {
  json failed = json::array();
  for (const auto& c : checks) {
    if (!c["pass"].get<bool>()) failed.push_back(c["name"]);
  }
  out.report["checks"] = checks;
  out.report["failed"] = failed;
  out.report["status"] = failed.empty() ? "pass" : "fail";
  out.exit_code = failed.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

Outcome run_betti(const Arrangement& a, BettiMethod method, const PencilOptions& options, const Hooks& hooks) {
  Outcome out;
  out.report = header("betti", a);
  std::optional<std::vector<std::int64_t>> os, sl;
  if (method != BettiMethod::kSlicing) os = betti_os(a);
  if (method != BettiMethod::kOrlikSolomon) {
    sl = betti_slicing(a, options).betti;
    if (hooks.perturb_slicing_betti) hooks.perturb_slicing_betti(*sl);
  }
  const char* names[] = {"os", "slicing", "both"};
  out.report["method"] = names[static_cast<int>(method)];
  if (os) out.report["betti_os"] = *os;
  if (sl) out.report["betti_slicing"] = *sl;
  const auto& betti = sl ? *sl : *os;
  out.report["betti"] = betti;
  out.report["cells"] = betti;
  out.report["euler"] = euler(betti);
  json checks = json::array();
  if (os && sl) checks.push_back(check("os_equals_slicing", *os == *sl, vec_string(*os) + " vs " + vec_string(*sl)));
  finish(out, checks);
  return out;
}

Outcome run_polar(const Arrangement& a, const PencilOptions& options) {
  Outcome out;
  out.report = header("polar", a);
  const PolarReport pr = polar_report(a, options);
  if (a.dim() > 0) {
    auto member = choose_generic_value(a, pr.pencil, options);
    out.report["certificate"] = certificate_json(member.certificate);
  } else {
    out.report["certificate"] = nullptr;
  }
  out.report["atypical"] = atypical_json(pr.atypical, pr.lambdas);
  out.report["lambda_total"] = pr.lambda_total;
  out.report["betti"] = pr.betti;
  out.report["cells"] = pr.cells;
  json trace = json::array();
  for (std::size_t k = 0; k < pr.trace.levels.size(); ++k) {
    const auto& lv = pr.trace.levels[k];
    json e;
    e["level"] = k;
    e["dim"] = lv.arrangement.dim();
    e["hyperplanes"] = lv.arrangement.size();
    e["direction"] = to_json(lv.pencil.direction);
    e["member_value"] = to_string(lv.member_value);
    e["point_strata"] = lv.atypical.size();
    e["lambda_total"] = lv.lambda_total;
    trace.push_back(e);
  }
  out.report["trace"] = trace;
  return out;
}

Outcome run_engine(const Arrangement& a, const std::optional<Direction2>& direction, const PencilOptions& options) {
  if (a.dim() != 2) throw InputError("engine needs a plane arrangement (dim 2), got dim " + std::to_string(a.dim()));
  Outcome out;
  out.report = header("engine", a);
  const Direction2 d = direction ? *direction : engine_directions(a, 1, options).front();
  const Pencil p = Pencil::make({d[0], d[1]});
  const auto cert = certify_direction(a, p.direction);
  out.report["certificate"] = certificate_json(cert);
  if (!cert.direction_valid()) throw CertificationError("direction is not certified for this arrangement");
  const auto chk = check_arrangement(a, p);
  out.report["engine"] = engine_json(chk.engine);
  out.report["combinatorial"] = atypical_json(chk.combinatorial, chk.combinatorial_lambdas);
  out.report["betti_2"] = chk.betti_top;
  json checks = json::array();
  std::string detail;
  for (const auto& f : chk.failures) detail += (detail.empty() ? "" : "; ") + f;
  checks.push_back(check("engine_matches_combinatorics", chk.pass, chk.pass ? "per-value lambda and total agree" : detail));
  finish(out, checks);
  return out;
}

Outcome run_engine_curve(const std::string& expression, const std::optional<Direction2>& direction,
                         const PencilOptions& options) {
  const PlaneCurve curve(parse_curve(expression));
  Outcome out;
  out.report["schema"] = kReportSchema;
  out.report["command"] = "engine";
  out.report["curve"] = to_string(curve.f());
  const Direction2 d = direction ? *direction : find_curve_direction(curve, options);
  const EngineReport r = lambda_engine(curve, d);
  out.report["engine"] = engine_json(r);
  out.report["note"] = "total lambda = " + std::to_string(r.lambda_total) +
                       " is the rank of H_2(X, X_c); it equals b_2 of the complement only when the sequence "
                       "splits, which holds for line arrangements but not in general (the cusp x^2 - y^3 has "
                       "lambda = 2 and b_2 = 0)";
  return out;
}

Outcome run_verify(const Arrangement& a, const PencilOptions& options, const Hooks& hooks) {
  Outcome out;
  out.report = header("verify", a);
  json checks = json::array();
  const std::size_t n = a.dim();

  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      checks.push_back(check(name, false, e.what()));
    }
  };

  IntersectionPoset poset = build_poset(a);
  if (hooks.corrupt_poset) hooks.corrupt_poset(poset);
  const auto mob = check_mobius(poset);
  checks.push_back(check("mobius_recursion", !mob, mob ? *mob : "recursion and sign rule hold"));

  const auto os = betti_os(poset);
  out.report["betti"] = os;
  checks.push_back(check("betti_low_degrees", os[0] == 1 && (n == 0 || os[1] == static_cast<std::int64_t>(a.size())),
                         "b_0 = " + std::to_string(os[0]) + (n ? ", b_1 = " + std::to_string(os[1]) : "")));

  guarded("os_equals_slicing", [&] {
    auto sl = betti_slicing(a, options).betti;
    if (hooks.perturb_slicing_betti) hooks.perturb_slicing_betti(sl);
    checks.push_back(check("os_equals_slicing", os == sl, vec_string(os) + " vs " + vec_string(sl)));
    checks.push_back(check("euler_characteristic", euler(sl) == euler(os),
                           "chi = " + std::to_string(euler(sl)) + ", Poin(-1) = " + std::to_string(euler(os))));
  });

  if (n > 0) {
    guarded("slice_isomorphism", [&] {
      const auto found = find_generic_direction(a, options);
      const auto member = choose_generic_value(a, found.pencil, options);
      const auto sb = betti_os(member.slice);
      bool ok = true;
      for (std::size_t j = 0; j + 1 <= n; ++j) ok = ok && sb[j] == os[j];
      checks.push_back(check("slice_isomorphism", ok, "b_j for j <= n-1: " + vec_string(os) + " vs slice " + vec_string(sb)));
      const bool rc = recheck_certificate(a, member.certificate);
      checks.push_back(check("pencil_certificate", rc && member.certificate.member_valid(),
                             rc ? "certificate rechecked" : "certificate recheck failed"));
    });
  }

  guarded("split_sequence", [&] {
    const auto sr = verify_split(a, options);
    checks.push_back(check("split_sequence", sr.pass, sr.detail));
  });

  {
    const auto poin = poincare_polynomial(build_poset(a));
    bool ok = true;
    std::string detail = "all " + std::to_string(a.size()) + " hyperplanes";
    for (std::size_t j = 0; j < a.size() && ok; ++j) {
      const auto del = poincare_polynomial(build_poset(delete_member(a, j)));
      const auto res = poincare_polynomial(build_poset(restrict_to_member(a, j)));
      std::vector<std::int64_t> rhs(n + 1, 0);
      for (std::size_t q = 0; q < del.size(); ++q) rhs[q] += del[q];
      for (std::size_t q = 0; q < res.size(); ++q) rhs[q + 1] += res[q];
      if (rhs != poin) {
        ok = false;
        detail = "fails at hyperplane " + std::to_string(j) + ": " + vec_string(poin) + " vs " + vec_string(rhs);
      }
    }
    checks.push_back(check("deletion_restriction", ok, detail));
  }

  if (n == 2) {
    guarded("engine_vs_combinatorics", [&] {
      const auto dirs = engine_directions(a, 3, options);
      std::string detail;
      bool ok = true;
      for (const auto& d : dirs) {
        const auto chk = check_arrangement(a, Pencil::make({d[0], d[1]}));
        ok = ok && chk.pass;
        for (const auto& f : chk.failures) detail += (detail.empty() ? "" : "; ") + f;
      }
      checks.push_back(check("engine_vs_combinatorics", ok, ok ? "3 directions agree" : detail));
    });
  }
  finish(out, checks);
  return out;
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_object(); });
}

std::string inline_value(const json& v) {
  if (v.is_array()) {
    std::string s = "(";
    bool first = true;
    for (const auto& e : v) {
      s += (first ? "" : ", ") + inline_value(e);
      first = false;
    }
    return s + ")";
  }
  return scalar(v);
}

void render(std::ostringstream& os, const json& obj, const std::string& indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      os << indent << it.key() << ":\n";
      render(os, v, indent + "  ");
    } else if (v.is_array() && !flat_array(v)) {
      os << indent << it.key() << ":\n";
      if (v.empty()) continue;
      std::vector<std::string> cols;
      for (auto c = v.front().begin(); c != v.front().end(); ++c) cols.push_back(c.key());
      std::vector<std::vector<std::string>> rows;
      rows.push_back(cols);
      for (const auto& row : v) {
        std::vector<std::string> cells;
        for (const auto& c : cols) cells.push_back(row.contains(c) ? inline_value(row[c]) : "-");
        rows.push_back(std::move(cells));
      }
      std::vector<std::size_t> width(cols.size(), 0);
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
      for (const auto& r : rows) {
        os << indent << "  ";
        for (std::size_t i = 0; i < r.size(); ++i) {
          os << r[i];
          if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << "\n";
      }
    } else {
      os << indent << it.key() << ": " << inline_value(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(os, report, "");
  return os.str();
}

}  // namespace arrtop
