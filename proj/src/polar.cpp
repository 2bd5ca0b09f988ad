#include "arrtop/polar.hpp"

#include <algorithm>

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

std::vector<AtypicalPoint> atypical_from_poset(const IntersectionPoset& poset, const Pencil& p) {
  auto cert = certify_direction(poset, p.direction);
  if (!cert.direction_valid()) throw CertificationError("pencil direction is not certified");
  std::vector<AtypicalPoint> out;
  for (auto& s : point_strata(poset)) out.push_back({p(s.point), std::move(s)});
  std::sort(out.begin(), out.end(), [](const AtypicalPoint& x, const AtypicalPoint& y) { return x.value < y.value; });
  return out;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

std::vector<AtypicalPoint> atypical_values(const Arrangement& a, const Pencil& p) {
  return atypical_from_poset(build_poset(a), p);
}

std::int64_t lambda_comb(const IntersectionPoset& poset, std::span<const Rat> q) {
  for (std::size_t f = 0; f < poset.flats.size(); ++f) {
    const Flat& flat = poset.flats[f];
    if (flat.dim == 0 && std::equal(flat.witness.begin(), flat.witness.end(), q.begin(), q.end())) {
      return abs64(poset.mobius[f]);
    }
  }
  throw InputError("point " + to_string(q) + " is not a point stratum");
}

std::int64_t lambda_comb(const Arrangement& a, std::span<const Rat> q) { return lambda_comb(build_poset(a), q); }

SlicingResult betti_slicing(const Arrangement& a, const PencilOptions& options) {
  SlicingResult result;
  std::vector<std::int64_t> top;  // top Betti number per level
  Arrangement current = a;
  while (current.dim() > 0) {
    const auto poset = build_poset(current);
    const auto found = find_generic_direction(current, options);
    auto member = choose_generic_value(current, found.pencil, options);
    SliceLevel level{current, found.pencil, member.value, atypical_from_poset(poset, found.pencil), {}, 0};
    for (const auto& ap : level.atypical) {
      level.lambdas.push_back(lambda_comb(poset, ap.stratum.point));
      level.lambda_total += level.lambdas.back();
    }
    top.push_back(level.lambda_total);
    result.trace.levels.push_back(std::move(level));
    current = std::move(member.slice);
  }
  // b_q(a) = b_q(slice) for q <= n-1 unwinds to: b_0 = 1 from the bottom
  // level, and b_q is the top number of the level of ambient dimension q.
  result.betti.push_back(1);
  for (std::size_t k = top.size(); k-- > 0;) result.betti.push_back(top[k]);
  return result;
}

PolarReport polar_report(const Arrangement& a, const PencilOptions& options) {
  PolarReport report;
  auto sliced = betti_slicing(a, options);
  report.betti = sliced.betti;
  report.cells = sliced.betti;
  if (!sliced.trace.levels.empty()) {
    const auto& first = sliced.trace.levels.front();
    report.pencil = first.pencil;
    report.atypical = first.atypical;
    report.lambdas = first.lambdas;
    report.lambda_total = first.lambda_total;
  }
  report.trace = std::move(sliced.trace);
  return report;
}

MinimalModel minimal_model(const Arrangement& a, const PencilOptions& options) {
  MinimalModel m;
  m.cells = betti_slicing(a, options).betti;
  for (std::size_t q = 0; q < m.cells.size(); ++q) {
    m.total += m.cells[q];
    m.euler += (q % 2 == 0 ? 1 : -1) * m.cells[q];
  }
  return m;
}

SplitReport verify_split(const Arrangement& a, const PencilOptions& options) {
  SplitReport r;
  const std::size_t n = a.dim();
  const auto poset = build_poset(a);
  const auto betti = betti_os(poset);
  if (n == 0) {
    r.pass = true;
    r.top_betti = betti[0];
    r.detail = "dimension 0: nothing to split";
    return r;
  }
  const auto found = find_generic_direction(a, options);
  for (const auto& ap : atypical_from_poset(poset, found.pencil)) r.lambda += lambda_comb(poset, ap.stratum.point);
  const auto member = choose_generic_value(a, found.pencil, options);
  const auto slice_betti = betti_os(member.slice);
  r.top_betti = betti[n];
  r.betti_below = betti[n - 1];
  r.slice_betti_below = slice_betti[n - 1];
  const bool top_ok = r.top_betti == r.lambda;
  const bool below_ok = r.betti_below == r.slice_betti_below;
  r.pass = top_ok && below_ok;
  r.detail = "b_n = " + std::to_string(r.top_betti) + ", lambda = " + std::to_string(r.lambda) +
             "; b_{n-1} = " + std::to_string(r.betti_below) + ", b_{n-1}(slice) = " +
             std::to_string(r.slice_betti_below);
  return r;
}

}  // namespace arrtop
