#include "arrtop/corpus.hpp"

#include <random>
#include <set>

#include "arrtop/error.hpp"

namespace arrtop::corpus {

namespace {

Hyperplane coordinate_form(std::vector<Rat> normal, Rat offset) {
  return Hyperplane::make(std::move(normal), std::move(offset));
}

}  // namespace

Arrangement boolean(std::size_t n) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    hs.push_back(coordinate_form(std::move(v), 0));
  }
  return Arrangement(n, std::move(hs));
}

Arrangement braid(std::size_t n) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rat> v(n, Rat(0));
      v[i] = 1;
      v[j] = -1;
      hs.push_back(coordinate_form(std::move(v), 0));
    }
  return Arrangement(n, std::move(hs));
}

Arrangement generic(std::size_t n, std::size_t k) {
  if (n == 0 && k > 0) throw InputError("generic: no hyperplanes exist in dimension 0");
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < k; ++i) {
    const Rat t = static_cast<unsigned long>(i + 1);
    std::vector<Rat> v;
    Rat power = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v.push_back(power);
      power *= t;
    }
    hs.push_back(coordinate_form(std::move(v), power));
  }
  return Arrangement(n, std::move(hs));
}

Arrangement concurrent(std::size_t k) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < k; ++i) {
    hs.push_back(coordinate_form({Rat(1), Rat(static_cast<unsigned long>(i))}, 0));
  }
  return Arrangement(2, std::move(hs));
}

Arrangement parallel(std::size_t k, std::size_t n) {
  if (n == 0 && k > 0) throw InputError("parallel: no hyperplanes exist in dimension 0");
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> v(n, Rat(0));
    v[0] = 1;
    hs.push_back(coordinate_form(std::move(v), static_cast<unsigned long>(i)));
  }
  return Arrangement(n, std::move(hs));
}

Arrangement random(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 && k > 0) throw InputError("random: no hyperplanes exist in dimension 0");
  std::mt19937_64 rng(seed);
  auto draw = [&rng] { return static_cast<long>(rng() % 5) - 2; };
  std::set<Hyperplane> seen;
  std::vector<Hyperplane> hs;
  while (hs.size() < k) {
    std::vector<Rat> v;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      v.push_back(draw());
      nonzero = nonzero || v.back() != 0;
    }
    Rat offset = draw();
    if (!nonzero) continue;
    Hyperplane h = Hyperplane::make(std::move(v), offset);
    if (seen.insert(h).second) hs.push_back(std::move(h));
  }
  return Arrangement(n, std::move(hs));
}

std::vector<Named> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Named> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t k = 1 + rng() % 6;
    const std::uint64_t s = rng();
    out.push_back({"random-" + std::to_string(i) + "-n" + std::to_string(n) + "-k" + std::to_string(k),
                   random(n, k, s)});
  }
  return out;
}

std::vector<Named> standard_corpus() {
  std::vector<Named> out;
  out.push_back({"empty-3", Arrangement(3, {})});
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"boolean-" + std::to_string(n), boolean(n)});
  for (std::size_t n = 2; n <= 4; ++n) out.push_back({"braid-" + std::to_string(n), braid(n)});
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 6; ++k) {
      out.push_back({"generic-" + std::to_string(n) + "-" + std::to_string(k), generic(n, k)});
    }
  for (std::size_t k = 1; k <= 6; ++k) out.push_back({"concurrent-" + std::to_string(k), concurrent(k)});
  for (std::size_t k = 1; k <= 6; ++k) out.push_back({"parallel-" + std::to_string(k), parallel(k)});
  out.push_back({"parallel-planes-3", parallel(3, 3)});
  for (auto& r : random_corpus()) out.push_back(std::move(r));
  return out;
}

}  // namespace arrtop::corpus
