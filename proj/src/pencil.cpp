#include "arrtop/pencil.hpp"

#include <algorithm>
#include <numeric>

#include "arrtop/error.hpp"

namespace arrtop {

Pencil Pencil::make(std::vector<Rat> direction) {
  auto it = std::find_if(direction.begin(), direction.end(), [](const Rat& r) { return r != 0; });
  if (it == direction.end()) throw InputError("pencil direction must be nonzero");
  Rat inv = 1 / *it;
  for (auto& r : direction) r *= inv;
  return Pencil{std::move(direction)};
}

Rat Pencil::operator()(std::span<const Rat> point) const {
  Rat acc = 0;
  for (std::size_t i = 0; i < direction.size(); ++i) acc += direction[i] * point[i];
  return acc;
}

GenericityCertificate certify_direction(const IntersectionPoset& poset, std::span<const Rat> l) {
  if (l.size() != poset.ambient_dim) throw InputError("linear form has the wrong length");
  if (std::all_of(l.begin(), l.end(), [](const Rat& r) { return r == 0; })) {
    throw InputError("pencil direction must be nonzero");
  }
  GenericityCertificate cert;
  cert.direction.assign(l.begin(), l.end());

  cert.direction_ok = true;
  for (const auto& flat : poset.flats) {
    if (flat.dim >= 1 && flat.form_is_constant(l)) {
      cert.direction_ok = false;
      cert.direction_witness = flat.closure;
      break;
    }
  }

  cert.separation_ok = true;
  const auto strata = point_strata(poset);
  const Pencil p{cert.direction};
  std::vector<Rat> values;
  for (const auto& s : strata) values.push_back(p(s.point));
  for (std::size_t i = 0; i < strata.size() && cert.separation_ok; ++i) {
    for (std::size_t j = i + 1; j < strata.size(); ++j) {
      if (values[i] == values[j]) {
        cert.separation_ok = false;
        cert.separation_witness = std::make_pair(strata[i].point, strata[j].point);
        break;
      }
    }
  }
  return cert;
}

GenericityCertificate certify_direction(const Arrangement& a, std::span<const Rat> l) {
  return certify_direction(build_poset(a), l);
}

bool recheck_certificate(const Arrangement& a, const GenericityCertificate& cert) {
  GenericityCertificate fresh = certify_direction(a, cert.direction);
  if (cert.member_value) {
    fresh.member_value = cert.member_value;
    auto res = try_restrict_generic(a, cert.direction, *cert.member_value);
    const Pencil p{cert.direction};
    bool atypical = false;
    for (const auto& s : point_strata(a)) atypical = atypical || p(s.point) == *cert.member_value;
    fresh.member_ok = !atypical && res.slice.has_value();
    fresh.member_witness = atypical ? "value is atypical" : res.failure;
  }
  return fresh == cert;
}

DirectionEnumerator::DirectionEnumerator(std::size_t dim) : dim_(dim), current_(dim, 0) {}

// Odometer over [-norm, norm]^dim in lexicographic order; moves to the next
// norm when exhausted.
bool DirectionEnumerator::advance() {
  if (!started_) {
    started_ = true;
    std::fill(current_.begin(), current_.end(), -norm_);
    return true;
  }
  for (std::size_t i = dim_; i-- > 0;) {
    if (current_[i] < norm_) {
      ++current_[i];
      return true;
    }
    current_[i] = -norm_;
  }
  ++norm_;
  std::fill(current_.begin(), current_.end(), -norm_);
  return true;
}

std::optional<std::vector<Rat>> DirectionEnumerator::next() {
  if (dim_ == 0) return std::nullopt;
  for (;;) {
    advance();
    long maxabs = 0, g = 0;
    for (long v : current_) {
      maxabs = std::max(maxabs, std::labs(v));
      g = std::gcd(g, v);
    }
    if (maxabs != norm_ || g != 1) continue;
    auto first = std::find_if(current_.begin(), current_.end(), [](long v) { return v != 0; });
    if (*first < 0) continue;
    std::vector<Rat> out;
    for (long v : current_) out.push_back(make_rat(v, *first));
    return out;
  }
}

Rat member_candidate(std::size_t k) {
  if (k == 0) return 0;
  long m = static_cast<long>((k + 1) / 2);
  return (k % 2 == 1) ? Rat(m) : Rat(-m);
}

namespace {

std::vector<CertifiedPencil> search(const Arrangement& a, std::size_t count, const PencilOptions& options) {
  if (a.dim() == 0) throw CertificationError("no pencil exists in dimension 0");
  const auto poset = build_poset(a);
  DirectionEnumerator dirs(a.dim());
  std::vector<CertifiedPencil> out;
  for (std::size_t attempt = 1; attempt <= options.budget; ++attempt) {
    auto l = dirs.next();
    auto cert = certify_direction(poset, *l);
    if (cert.direction_valid()) {
      out.push_back({Pencil{*l}, std::move(cert), attempt});
      if (out.size() == count) return out;
    }
  }
  throw CertificationError("no certified pencil direction within " + std::to_string(options.budget) +
                           " candidates");
}

}  // namespace

CertifiedPencil find_generic_direction(const Arrangement& a, const PencilOptions& options) {
  return search(a, 1, options).front();
}

std::vector<CertifiedPencil> certified_directions(const Arrangement& a, std::size_t count,
                                                  const PencilOptions& options) {
  if (count == 0) return {};
  return search(a, count, options);
}

MemberChoice choose_generic_value(const Arrangement& a, const Pencil& p, const PencilOptions& options) {
  const auto poset = build_poset(a);
  GenericityCertificate cert = certify_direction(poset, p.direction);
  if (!cert.direction_valid()) throw CertificationError("pencil direction is not certified");
  std::vector<Rat> atypical;
  for (const auto& s : point_strata(poset)) atypical.push_back(p(s.point));
  for (std::size_t k = 0; k < options.budget; ++k) {
    Rat c = member_candidate(k);
    if (std::find(atypical.begin(), atypical.end(), c) != atypical.end()) continue;
    auto res = try_restrict_generic(a, p.direction, c);
    if (!res.slice) continue;
    cert.member_value = c;
    cert.member_ok = true;
    return {c, std::move(cert), std::move(*res.slice)};
  }
  throw CertificationError("no generic member value within " + std::to_string(options.budget) + " candidates");
}

}  // namespace arrtop
