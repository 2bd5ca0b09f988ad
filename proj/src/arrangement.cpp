#include "arrtop/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "arrtop/error.hpp"

namespace arrtop {

Hyperplane Hyperplane::make(std::vector<Rat> normal, Rat offset) {
  auto it = std::find_if(normal.begin(), normal.end(), [](const Rat& r) { return r != 0; });
  if (it == normal.end()) throw InputError("hyperplane with zero normal vector");
  Rat inv = 1 / *it;
  for (auto& r : normal) r *= inv;
  offset *= inv;
  return Hyperplane{std::move(normal), std::move(offset)};
}

Rat Hyperplane::evaluate(std::span<const Rat> point) const {
  Rat acc = -offset;
  for (std::size_t i = 0; i < normal.size(); ++i) acc += normal[i] * point[i];
  return acc;
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes, DuplicatePolicy policy)
    : dim_(dim) {
  std::set<Hyperplane> seen;
  for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
    auto& h = hyperplanes[j];
    if (h.normal.size() != dim) {
      throw InputError("hyperplane " + std::to_string(j) + " has " + std::to_string(h.normal.size()) +
                       " coefficients, expected " + std::to_string(dim));
    }
    Hyperplane canon = Hyperplane::make(std::move(h.normal), std::move(h.offset));
    if (!seen.insert(canon).second) {
      if (policy == DuplicatePolicy::kDedupe) continue;
      throw InputError("hyperplane " + std::to_string(j) + " duplicates an earlier hyperplane");
    }
    hyperplanes_.push_back(std::move(canon));
  }
}

namespace {

// Reduces `row` (length cols) against an RREF matrix without zero rows.
std::vector<Rat> reduce(const QMatrix& rref_rows, std::vector<Rat> row) {
  for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
    std::size_t p = 0;
    while (rref_rows.at(r, p) == 0) ++p;
    if (p >= row.size() || row[p] == 0) continue;
    Rat f = row[p];
    for (std::size_t c = p; c < row.size(); ++c) row[c] -= f * rref_rows.at(r, c);
  }
  return row;
}

bool all_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

std::vector<Rat> augmented_row(const Hyperplane& h) {
  std::vector<Rat> row = h.normal;
  row.push_back(h.offset);
  return row;
}

// RREF of the stacked system; nullopt if inconsistent.
std::optional<QMatrix> intersect(const QMatrix& equations, const Hyperplane& h, std::size_t n) {
  QMatrix m = equations;
  auto row = augmented_row(h);
  m.append_row(row);
  auto red = rref(std::move(m));
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  QMatrix trimmed(0, n + 1);
  for (std::size_t r = 0; r < red.rank; ++r) trimmed.append_row(red.reduced.row(r));
  return trimmed;
}

Flat make_flat(QMatrix equations, const Arrangement& a) {
  const std::size_t n = a.dim();
  Flat f;
  f.dim = n - equations.rows();
  f.witness.assign(n, Rat(0));
  for (std::size_t r = 0; r < equations.rows(); ++r) {
    std::size_t p = 0;
    while (equations.at(r, p) == 0) ++p;
    f.witness[p] = equations.at(r, n);
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (all_zero(reduce(equations, augmented_row(a[j])))) f.closure.push_back(j);
  }
  f.equations = std::move(equations);
  return f;
}

struct Parametrization {
  std::size_t pivot;
  std::vector<Rat> form;  // scaled so form[pivot] == 1
  Rat value;
};

Parametrization parametrize(std::span<const Rat> l, const Rat& c) {
  auto it = std::find_if(l.begin(), l.end(), [](const Rat& r) { return r != 0; });
  if (it == l.end()) throw InputError("zero linear form");
  Parametrization p;
  p.pivot = static_cast<std::size_t>(it - l.begin());
  Rat inv = 1 / *it;
  for (const auto& r : l) p.form.push_back(r * inv);
  p.value = c * inv;
  return p;
}

// Hyperplane h pulled back along x_pivot = value - sum_{i != pivot} form_i x_i.
// Returns the (possibly zero) normal over the free coordinates and the offset.
std::pair<std::vector<Rat>, Rat> pull_back(const Parametrization& p, const Hyperplane& h) {
  std::vector<Rat> normal;
  const Rat& hp = h.normal[p.pivot];
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    if (i == p.pivot) continue;
    normal.push_back(h.normal[i] - hp * p.form[i]);
  }
  return {std::move(normal), h.offset - hp * p.value};
}

}  // namespace

bool Flat::form_is_constant(std::span<const Rat> form) const {
  std::vector<Rat> row(form.begin(), form.end());
  row.push_back(Rat(0));
  auto red = reduce(equations, std::move(row));
  red.pop_back();
  return all_zero(red);
}

bool IntersectionPoset::leq(std::size_t i, std::size_t j) const {
  const auto& a = flats[i].closure;
  const auto& b = flats[j].closure;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<std::size_t> IntersectionPoset::find(const std::vector<std::size_t>& closure) const {
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].closure == closure) return i;
  }
  return std::nullopt;
}

IntersectionPoset build_poset(const Arrangement& a) {
  const std::size_t n = a.dim();
  IntersectionPoset poset;
  poset.ambient_dim = n;
  poset.hyperplane_count = a.size();

  std::vector<Flat> flats;
  std::map<std::vector<Rat>, std::size_t> index;
  flats.push_back(make_flat(QMatrix(0, n + 1), a));
  index.emplace(std::vector<Rat>{}, 0);
  // Closure iteration: intersect every known flat with every hyperplane not
  // containing it until no new flat appears.
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (std::binary_search(flats[i].closure.begin(), flats[i].closure.end(), j)) continue;
      auto eq = intersect(flats[i].equations, a[j], n);
      if (!eq) continue;
      auto [it, inserted] = index.emplace(eq->entries(), flats.size());
      if (inserted) flats.push_back(make_flat(std::move(*eq), a));
    }
  }
  std::stable_sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) {
    if (x.codim() != y.codim()) return x.codim() < y.codim();
    return x.closure < y.closure;
  });
  poset.flats = std::move(flats);

  poset.mobius.assign(poset.flats.size(), 0);
  poset.mobius[0] = 1;
  for (std::size_t f = 1; f < poset.flats.size(); ++f) {
    std::int64_t sum = 0;
    for (std::size_t g = 0; g < f; ++g) {
      if (poset.flats[g].codim() < poset.flats[f].codim() && poset.leq(g, f)) sum += poset.mobius[g];
    }
    poset.mobius[f] = -sum;
  }
  return poset;
}

std::optional<std::string> check_mobius(const IntersectionPoset& poset) {
  if (poset.flats.empty() || poset.mobius.size() != poset.flats.size()) {
    return "Möbius cache has the wrong size";
  }
  if (poset.mobius[0] != 1) return "mu(ambient) != 1";
  for (std::size_t f = 0; f < poset.flats.size(); ++f) {
    const std::int64_t mu = poset.mobius[f];
    const std::int64_t sign = poset.flats[f].codim() % 2 == 0 ? 1 : -1;
    if (mu * sign < 1) {
      return "sign rule violated at flat " + std::to_string(f) + " (mu = " + std::to_string(mu) + ")";
    }
    if (f == 0) continue;
    std::int64_t sum = 0;
    for (std::size_t g = 0; g < poset.flats.size(); ++g) {
      if (poset.leq(g, f)) sum += poset.mobius[g];
    }
    if (sum != 0) {
      return "Möbius recursion violated at flat " + std::to_string(f) + " (sum = " + std::to_string(sum) + ")";
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> poincare_polynomial(const IntersectionPoset& poset) {
  std::vector<std::int64_t> p(poset.ambient_dim + 1, 0);
  for (std::size_t f = 0; f < poset.flats.size(); ++f) {
    p[poset.flats[f].codim()] += poset.mobius[f] < 0 ? -poset.mobius[f] : poset.mobius[f];
  }
  return p;
}

std::vector<std::int64_t> betti_os(const IntersectionPoset& poset) { return poincare_polynomial(poset); }

std::vector<std::int64_t> betti_os(const Arrangement& a) { return betti_os(build_poset(a)); }

std::vector<PointStratum> point_strata(const IntersectionPoset& poset) {
  std::vector<PointStratum> out;
  for (std::size_t f = 0; f < poset.flats.size(); ++f) {
    const Flat& flat = poset.flats[f];
    if (flat.dim != 0) continue;
    out.push_back({flat.witness, flat.closure, f});
  }
  std::sort(out.begin(), out.end(), [](const PointStratum& x, const PointStratum& y) { return x.point < y.point; });
  return out;
}

std::vector<PointStratum> point_strata(const Arrangement& a) { return point_strata(build_poset(a)); }

SliceResult try_restrict_generic(const Arrangement& a, std::span<const Rat> l, const Rat& c) {
  if (l.size() != a.dim()) throw InputError("linear form has the wrong length");
  if (a.dim() == 0) return {std::nullopt, "cannot slice the zero-dimensional space"};
  const Parametrization param = parametrize(l, c);

  std::vector<Hyperplane> traces;
  std::vector<std::size_t> origin;  // trace index -> hyperplane index
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto [normal, offset] = pull_back(param, a[j]);
    if (all_zero(normal)) {
      if (offset == 0) {
        return {std::nullopt, "hyperplane " + std::to_string(j) + " contains the slice"};
      }
      continue;  // parallel to the slice, empty trace
    }
    traces.push_back(Hyperplane::make(std::move(normal), std::move(offset)));
    origin.push_back(j);
  }
  std::set<Hyperplane> distinct(traces.begin(), traces.end());
  if (distinct.size() != traces.size()) {
    return {std::nullopt, "two hyperplanes have the same trace on the slice"};
  }
  Arrangement slice(a.dim() - 1, std::move(traces));

  const auto before = build_poset(a);
  const auto after = build_poset(slice);
  std::set<std::pair<std::vector<std::size_t>, std::size_t>> expected, actual;
  for (const auto& f : before.flats) {
    if (f.dim >= 1) expected.emplace(f.closure, f.codim());
  }
  for (const auto& f : after.flats) {
    std::vector<std::size_t> closure;
    for (auto k : f.closure) closure.push_back(origin[k]);
    actual.emplace(std::move(closure), f.codim());
  }
  if (expected != actual) {
    return {std::nullopt, "slice does not preserve the flats of dimension >= 1"};
  }
  return {std::move(slice), {}};
}

Arrangement restrict_generic(const Arrangement& a, std::span<const Rat> l, const Rat& c) {
  auto res = try_restrict_generic(a, l, c);
  if (!res.slice) throw CertificationError("non-generic slice at c = " + to_string(c) + ": " + res.failure);
  return std::move(*res.slice);
}

Arrangement restrict_to_member(const Arrangement& a, std::size_t j) {
  if (j >= a.size()) throw InputError("hyperplane index " + std::to_string(j) + " out of range");
  const Parametrization param = parametrize(a[j].normal, a[j].offset);
  std::vector<Hyperplane> traces;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == j) continue;
    auto [normal, offset] = pull_back(param, a[i]);
    if (all_zero(normal)) continue;  // parallel to H_j: empty intersection
    traces.push_back(Hyperplane::make(std::move(normal), std::move(offset)));
  }
  return Arrangement(a.dim() - 1, std::move(traces), DuplicatePolicy::kDedupe);
}

Arrangement delete_member(const Arrangement& a, std::size_t j) {
  if (j >= a.size()) throw InputError("hyperplane index " + std::to_string(j) + " out of range");
  auto hs = a.hyperplanes();
  hs.erase(hs.begin() + static_cast<std::ptrdiff_t>(j));
  return Arrangement(a.dim(), std::move(hs));
}

std::string to_string(std::span<const Rat> point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) s += ", ";
    s += to_string(point[i]);
  }
  return s + ")";
}

}  // namespace arrtop
