#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "arrtop/corpus.hpp"
#include "arrtop/error.hpp"
#include "arrtop/pencil.hpp"
#include "arrtop/polar.hpp"
#include "test_util.hpp"

using namespace arrtop;

namespace {

Hyperplane H(std::vector<long> normal, long offset) {
  std::vector<Rat> n;
  for (long v : normal) n.emplace_back(v);
  return Hyperplane::make(std::move(n), Rat(offset));
}

Arrangement generic3() { return Arrangement(2, {H({1, 0}, 0), H({0, 1}, 0), H({1, 1}, 1)}); }

std::vector<Rat> P(std::vector<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("certify_direction: hand examples") {
  const auto b2 = corpus::boolean(2);
  auto cx = certify_direction(b2, P({1, 0}));
  CHECK_FALSE(cx.direction_ok);
  CHECK(cx.direction_witness == std::vector<std::size_t>{0});
  CHECK_FALSE(cx.direction_valid());

  auto cxy = certify_direction(b2, P({1, 1}));
  CHECK(cxy.direction_ok);
  CHECK(cxy.separation_ok);
  CHECK_FALSE(cxy.direction_witness);
  CHECK_FALSE(cxy.separation_witness);

  // l = x on x = 0, y = 0, x + y = 1: l(0,0) = l(0,1) = 0.
  auto g = certify_direction(generic3(), P({1, 0}));
  CHECK_FALSE(g.separation_ok);
  REQUIRE(g.separation_witness);
  CHECK(g.separation_witness->first == P({0, 0}));
  CHECK(g.separation_witness->second == P({0, 1}));
  // x is also constant on the line x = 0.
  CHECK_FALSE(g.direction_ok);
  CHECK(g.direction_witness == std::vector<std::size_t>{0});

  CHECK(certify_direction(generic3(), P({1, 2})).direction_valid());
}

TEST_CASE("direction enumeration order") {
  DirectionEnumerator e(2);
  std::vector<std::vector<Rat>> got;
  for (int i = 0; i < 4; ++i) got.push_back(*e.next());
  CHECK(got == std::vector<std::vector<Rat>>{P({0, 1}), P({1, -1}), P({1, 0}), P({1, 1})});

  // Brute force: primitive integer vectors of max-norm <= 3 with positive
  // first nonzero entry, ordered by norm then lexicographically.
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::vector<std::vector<long>> expect;
    for (long norm = 1; norm <= 3; ++norm) {
      std::vector<long> v(dim, -norm);
      while (true) {
        long mx = 0, g = 0;
        for (long x : v) {
          mx = std::max(mx, std::labs(x));
          g = std::gcd(g, std::labs(x));
        }
        long first = 0;
        for (long x : v)
          if (x != 0) {
            first = x;
            break;
          }
        if (mx == norm && g == 1 && first > 0) expect.push_back(v);
        std::size_t i = dim;
        while (i > 0 && v[i - 1] == norm) v[--i] = -norm;
        if (i == 0) break;
        ++v[i - 1];
      }
    }
    DirectionEnumerator en(dim);
    for (const auto& v : expect) {
      auto d = en.next();
      REQUIRE(d);
      std::vector<Rat> scaled;
      Rat first = 0;
      for (long x : v)
        if (first == 0 && x != 0) first = x;
      for (long x : v) scaled.push_back(Rat(x) / first);
      CHECK(*d == scaled);
    }
  }
}

TEST_CASE("member candidates") {
  std::vector<Rat> got;
  for (std::size_t k = 0; k < 5; ++k) got.push_back(member_candidate(k));
  CHECK(got == P({0, 1, -1, 2, -2}));
}

TEST_CASE("find_generic_direction") {
  auto b2 = find_generic_direction(corpus::boolean(2));
  CHECK(b2.certificate.direction_valid());
  CHECK(b2.pencil.direction == P({1, -1}));
  CHECK(find_generic_direction(corpus::boolean(2)).certificate == b2.certificate);

  auto empty = find_generic_direction(Arrangement(2, {}));
  CHECK(empty.pencil.direction == *DirectionEnumerator(2).next());
  CHECK(empty.attempts == 1);

  auto g3 = find_generic_direction(generic3());
  CHECK(recheck_certificate(generic3(), g3.certificate));
  const auto atyp = atypical_values(generic3(), g3.pencil);
  std::set<Rat> values;
  for (const auto& a : atyp) values.insert(a.value);
  CHECK(values.size() == 3);

  CHECK_THROWS_AS(find_generic_direction(Arrangement(0, {})), CertificationError);
  CHECK_THROWS_AS(find_generic_direction(corpus::boolean(2), PencilOptions{1}), CertificationError);
  CHECK_THROWS_AS(Pencil::make(P({0, 0})), InputError);
}

TEST_CASE("certified_directions are distinct and valid") {
  const auto a = corpus::generic(2, 4);
  auto ds = certified_directions(a, 3);
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].pencil.direction != ds[1].pencil.direction);
  CHECK(ds[1].pencil.direction != ds[2].pencil.direction);
  for (const auto& d : ds) CHECK(recheck_certificate(a, d.certificate));
}

TEST_CASE("choose_generic_value") {
  auto b2 = choose_generic_value(corpus::boolean(2), Pencil::make(P({1, 1})));
  CHECK(b2.value == 1);
  CHECK(b2.certificate.member_valid());
  CHECK(b2.slice.size() == 2);

  auto par = choose_generic_value(corpus::parallel(2), find_generic_direction(corpus::parallel(2)).pencil);
  CHECK(par.value == 0);

  const auto g3 = generic3();
  auto p = find_generic_direction(g3).pencil;
  auto m = choose_generic_value(g3, p);
  for (const auto& a : atypical_values(g3, p)) CHECK(a.value != m.value);
  CHECK(point_strata(m.slice).size() == 3);
  CHECK(try_restrict_generic(g3, p.direction, m.value).slice == m.slice);
  CHECK(choose_generic_value(g3, p).value == m.value);

  CHECK_THROWS_AS(choose_generic_value(corpus::boolean(2), Pencil::make(P({1, 0}))), CertificationError);
}

TEST_CASE("recheck_certificate rejects tampering") {
  const auto a = corpus::braid(3);
  auto cp = find_generic_direction(a);
  CHECK(recheck_certificate(a, cp.certificate));
  auto bad = cp.certificate;
  bad.separation_ok = false;
  CHECK_FALSE(recheck_certificate(a, bad));
  bad = cp.certificate;
  bad.direction = P({1, -1, 0});
  CHECK_FALSE(recheck_certificate(a, bad));
}

TEST_CASE("certification soundness on random arrangements") {
  testing::Gen g(101);
  for (const auto& named : corpus::random_corpus()) {
    CAPTURE(named.name);
    const auto& a = named.arrangement;
    const auto poset = build_poset(a);
    // Random directions, certified or not.
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rat> l;
      bool zero = true;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(Rat(g.integer(-2, 2)));
        zero = zero && l.back() == 0;
      }
      if (zero) continue;
      auto cert = certify_direction(poset, l);
      if (!cert.direction_ok) {
        REQUIRE(cert.direction_witness);
        auto f = poset.find(*cert.direction_witness);
        REQUIRE(f);
        CHECK(poset.flats[*f].dim >= 1);
        CHECK(poset.flats[*f].form_is_constant(l));
        continue;
      }
      // Every hyperplane meets every level set {l = c} in codimension 2,
      // i.e. its normal is not parallel to l.
      for (const auto& h : a.hyperplanes()) {
        QMatrix m(2, a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) {
          m.at(0, i) = h.normal[i];
          m.at(1, i) = l[i];
        }
        if (a.dim() >= 2) CHECK(rank(m) == 2);
      }
      if (cert.separation_ok) {
        std::set<Rat> values;
        const Pencil p = Pencil::make(l);
        for (const auto& s : point_strata(poset)) values.insert(p(s.point));
        CHECK(values.size() == point_strata(poset).size());
      }
    }
    if (a.dim() == 0) continue;
    auto cp = find_generic_direction(a);
    CHECK(recheck_certificate(a, cp.certificate));
    CHECK(atypical_values(a, cp.pencil).size() == point_strata(poset).size());
    auto again = find_generic_direction(a);
    CHECK(again.certificate == cp.certificate);
    auto m1 = choose_generic_value(a, cp.pencil), m2 = choose_generic_value(a, cp.pencil);
    CHECK(m1.value == m2.value);
    CHECK(m1.slice == m2.slice);
  }
}

TEST_CASE("coordinate directions parallel to a hyperplane are rejected") {
  for (const auto& named : corpus::standard_corpus()) {
    const auto& a = named.arrangement;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      std::vector<Rat> e(a.dim(), Rat(0));
      e[i] = 1;
      // e_i is constant on H exactly when H's direction space lies in x_i = const,
      // i.e. when H is a coordinate hyperplane x_i = b.
      std::optional<std::size_t> parallel;
      for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j].normal == e) {
          parallel = j;
          break;
        }
      if (!parallel || a.dim() < 2) continue;
      CAPTURE(named.name);
      auto cert = certify_direction(a, e);
      CHECK_FALSE(cert.direction_ok);
      REQUIRE(cert.direction_witness);
      // The witness is the first flat in poset order; the hyperplane itself is
      // a codim-1 flat with singleton closure, so the witness has codim 1.
      CHECK(cert.direction_witness->size() == 1);
      CHECK(a[cert.direction_witness->front()].normal == e);
    }
  }
}
