#include "arrtop/curve_engine.hpp"

#include <algorithm>

#include "arrtop/error.hpp"

namespace arrtop {

PlaneCurve::PlaneCurve(BiPoly f) : f_(std::move(f)) {
  if (f_.is_zero()) throw InputError("curve polynomial is zero");
  if (squarefree_part(f_) != normalize(f_)) throw InputError("curve polynomial has a repeated factor");
}

BiPoly defining_polynomial(const Arrangement& a) {
  if (a.dim() != 2) throw InputError("defining_polynomial needs a plane arrangement");
  BiPoly f = BiPoly::constant(1);
  for (const auto& h : a.hyperplanes()) f *= BiPoly::linear(h.normal[0], h.normal[1], -h.offset);
  return f;
}

AffineChange normalizing_change(const Direction2& l) {
  const Rat& a = l[0];
  const Rat& b = l[1];
  AffineChange ch;
  if (b != 0) {
    // x = v, y = (u - a v) / b
    ch.matrix = QMatrix(2, 2, {Rat(0), Rat(1), 1 / b, -a / b});
  } else if (a != 0) {
    // x = u / a, y = v
    ch.matrix = QMatrix(2, 2, {1 / a, Rat(0), Rat(0), Rat(1)});
  } else {
    throw InputError("pencil direction must be nonzero");
  }
  return ch;
}

PolarCycleResult polar_cycle(const PlaneCurve& curve, const Direction2& l) {
  PolarCycle pc;
  pc.direction = l;
  pc.change = normalizing_change(l);
  pc.f = substitute_affine(curve.f(), pc.change);

  if (pc.f.total_degree() == 0) {
    pc.g = BiPoly::constant(1);  // V is empty; so is Γ
    return {pc, {}};
  }
  if (pc.f.deg_y() != pc.f.total_degree()) {
    return {std::nullopt, "member {l = 0} at infinity meets the closure of V"};
  }

  BiPoly g = derivative_y(pc.f);
  const BiPoly fu = derivative_x(pc.f);
  // Drop components of the critical set of f.
  for (BiPoly d = gcd_bi(g, fu); d.total_degree() > 0; d = gcd_bi(g, fu)) g = divide_exact(g, d);

  const BiPoly reduced = squarefree_part(g);
  if (reduced != normalize(g)) return {std::nullopt, "polar curve is not reduced"};
  if (reduced.leading_y().degree() != 0) {
    return {std::nullopt, "polar curve has a non-constant leading coefficient"};
  }
  pc.g = reduced;
  pc.deg_y = reduced.deg_y();
  return {pc, {}};
}

std::size_t fiber_count(const BiPoly& f, const BiPoly& g, const Rat& t0) {
  const UniPoly gt = g.at_x(t0);
  if (gt.is_zero()) throw CertificationError("polar curve contains the member at t = " + to_string(t0));
  return static_cast<std::size_t>(coprime_part(gt, f.at_x(t0)).degree());
}

Candidates atypical_candidates(const BiPoly& f, const BiPoly& g) {
  Candidates out;
  if (g.deg_y() > 0 && f.deg_y() > 0) {
    out.resultant = resultant_y(g, f);
    if (out.resultant.is_zero()) throw CertificationError("polar curve shares a component with the curve");
    auto roots = rational_roots(out.resultant);
    if (roots.rest.degree() > 0) {
      throw IrrationalError("atypical values are not all rational", to_string(roots.rest));
    }
    out.values = std::move(roots.roots);
  }
  const UniPoly lc = g.leading_y();
  if (lc.degree() > 0) {
    auto roots = rational_roots(lc);
    if (roots.rest.degree() > 0) {
      throw IrrationalError("degree-drop values are not all rational", to_string(roots.rest));
    }
    out.degree_drop = std::move(roots.roots);
  }
  return out;
}

EngineReport lambda_engine(const PlaneCurve& curve, const Direction2& l) {
  auto res = polar_cycle(curve, l);
  if (!res.cycle) throw CertificationError("direction rejected by the polar engine: " + res.rejection);
  const PolarCycle& pc = *res.cycle;

  EngineReport report;
  report.direction = l;
  report.polar_curve = to_string(pc.g);
  report.polar_degree = pc.deg_y;

  const Candidates cand = atypical_candidates(pc.f, pc.g);
  auto special = [&](const Rat& t) {
    return std::find(cand.values.begin(), cand.values.end(), t) != cand.values.end() ||
           std::find(cand.degree_drop.begin(), cand.degree_drop.end(), t) != cand.degree_drop.end();
  };
  std::size_t k = 0;
  while (special(member_candidate(k))) ++k;
  report.generic_value = member_candidate(k);
  report.generic_count = fiber_count(pc.f, pc.g, report.generic_value);

  for (const auto& a : cand.values) {
    EngineValue ev{a, fiber_count(pc.f, pc.g, a), 0};
    ev.lambda = static_cast<std::int64_t>(report.generic_count) - static_cast<std::int64_t>(ev.count);
    if (ev.lambda < 0) {
      throw MismatchError("fiber count at " + to_string(a) + " exceeds the generic count");
    }
    if (ev.lambda == 0) continue;
    report.lambda_total += ev.lambda;
    report.atypical.push_back(ev);
  }
  for (const auto& a : cand.degree_drop) {
    const UniPoly gt = pc.g.at_x(a);
    EngineValue ev{a, gt.is_zero() ? 0 : fiber_count(pc.f, pc.g, a), 0};
    ev.lambda = static_cast<std::int64_t>(report.generic_count) - static_cast<std::int64_t>(ev.count);
    report.degree_drop.push_back(ev);
  }
  return report;
}

Direction2 find_curve_direction(const PlaneCurve& curve, const PencilOptions& options) {
  DirectionEnumerator dirs(2);
  for (std::size_t attempt = 0; attempt < options.budget; ++attempt) {
    auto l = *dirs.next();
    Direction2 d{l[0], l[1]};
    if (polar_cycle(curve, d).cycle) return d;
  }
  throw CertificationError("no direction certified for the polar engine within budget");
}

std::vector<Direction2> engine_directions(const Arrangement& a, std::size_t count, const PencilOptions& options) {
  if (a.dim() != 2) throw InputError("engine needs a plane arrangement");
  const PlaneCurve curve(defining_polynomial(a));
  const auto poset = build_poset(a);
  DirectionEnumerator dirs(2);
  std::vector<Direction2> out;
  for (std::size_t attempt = 0; attempt < options.budget && out.size() < count; ++attempt) {
    auto l = *dirs.next();
    if (!certify_direction(poset, l).direction_valid()) continue;
    Direction2 d{l[0], l[1]};
    if (polar_cycle(curve, d).cycle) out.push_back(d);
  }
  if (out.size() < count) throw CertificationError("not enough engine-certified directions within budget");
  return out;
}

ArrangementCheck check_arrangement(const Arrangement& a, const Pencil& p) {
  if (a.dim() != 2) throw InputError("check_arrangement needs a plane arrangement");
  ArrangementCheck chk;
  const auto poset = build_poset(a);
  chk.betti_top = betti_os(poset)[2];
  chk.combinatorial = atypical_values(a, p);
  for (const auto& ap : chk.combinatorial) chk.combinatorial_lambdas.push_back(lambda_comb(poset, ap.stratum.point));

  const PlaneCurve curve(defining_polynomial(a));
  chk.engine = lambda_engine(curve, {p.direction[0], p.direction[1]});

  const auto& eng = chk.engine.atypical;
  if (eng.size() != chk.combinatorial.size()) {
    chk.failures.push_back("engine found " + std::to_string(eng.size()) + " atypical values, combinatorics " +
                           std::to_string(chk.combinatorial.size()));
  }
  for (std::size_t i = 0; i < std::min(eng.size(), chk.combinatorial.size()); ++i) {
    const auto& cv = chk.combinatorial[i];
    if (eng[i].value != cv.value) {
      chk.failures.push_back("atypical value " + to_string(eng[i].value) + " (engine) vs " + to_string(cv.value) +
                             " (combinatorial)");
    } else if (eng[i].lambda != chk.combinatorial_lambdas[i]) {
      chk.failures.push_back("at value " + to_string(cv.value) + ": lambda_engine = " + std::to_string(eng[i].lambda) +
                             ", lambda_comb = " + std::to_string(chk.combinatorial_lambdas[i]));
    }
  }
  if (!chk.engine.degree_drop.empty()) chk.failures.push_back("engine reported degree-drop values");
  if (chk.engine.lambda_total != chk.betti_top) {
    chk.failures.push_back("engine lambda total " + std::to_string(chk.engine.lambda_total) + " != b_2 = " +
                           std::to_string(chk.betti_top));
  }
  chk.pass = chk.failures.empty();
  return chk;
}

}  // namespace arrtop
