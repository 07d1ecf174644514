// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "carlitz/error.hpp"
#include "carlitz/field.hpp"
#include "carlitz/perm.hpp"

using carlitz::Elem;
using carlitz::Field;
using carlitz::PermMap;
using carlitz::Poly;

namespace {

// Oracle: evaluate sum coeffs[i] x^i term by term through pow, no Horner.
Elem eval_oracle(const Field& f, const std::vector<Elem>& coeffs, Elem x) {
  Elem acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    acc = f.add(acc, f.mul(coeffs[i], f.pow(x, i)));
  return acc;
}

// Oracle: best affine fit by scanning every (a, b) directly.
std::uint32_t linearity_oracle(const Field& f, const std::vector<Elem>& im) {
  std::uint32_t best = 0;
  for (Elem a = 0; a < f.q(); ++a) {
    for (Elem b = 0; b < f.q(); ++b) {
      std::uint32_t hits = 0;
      for (Elem c = 0; c < f.q(); ++c)
        if (im[c] == f.add(f.mul(a, c), b)) ++hits;
      best = std::max(best, hits);
    }
  }
  return best;
}

std::uint64_t rng_next(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

}  // namespace

TEST_CASE("eval matches the term-by-term oracle") {
  for (const auto& [p, r] : {std::pair<std::uint64_t, unsigned>{5, 1},
                             {7, 1},
                             {3, 2},
                             {2, 4}}) {
    const Field f(p, r);
    std::uint64_t s = 0x1234u * f.q() + 1;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Elem> coeffs(1 + rng_next(s) % 6);
      for (Elem& c : coeffs) c = static_cast<Elem>(rng_next(s) % f.q());
      const Poly poly = make_poly(f, coeffs);
      for (Elem x = 0; x < f.q(); ++x)
        CHECK(eval(f, poly, x) == eval_oracle(f, coeffs, x));
    }
  }
}

TEST_CASE("interpolation round-trips every low-degree polynomial") {
  for (const auto& [p, r] : {std::pair<std::uint64_t, unsigned>{5, 1},
                             {7, 1},
                             {3, 2}}) {
    const Field f(p, r);
    const std::uint64_t q = f.q();
    // All coefficient vectors of length 4 (degree <= 3 < q after reduction).
    std::vector<Elem> coeffs(4);
    for (std::uint64_t e = 0; e < q * q * q * q; ++e) {
      std::uint64_t t = e;
      for (int i = 0; i < 4; ++i) {
        coeffs[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      const Poly poly = make_poly(f, coeffs);
      const Poly back = interpolate(f, to_map(f, poly));
      CHECK(back == poly);
    }
  }
}

TEST_CASE("interpolation inverts to_map on every permutation of GF(5)") {
  const Field f(5, 1);
  std::vector<Elem> im = {0, 1, 2, 3, 4};
  do {
    const PermMap m{im};
    const Poly p = interpolate(f, m);
    CHECK(to_map(f, p).images == im);
    CHECK(p.degree().value_or(0) < f.q());
  } while (std::next_permutation(im.begin(), im.end()));
}

TEST_CASE("interpolation inverts to_map on every permutation of GF(8)") {
  const Field f(2, 3);
  std::vector<Elem> im = {0, 1, 2, 3, 4, 5, 6, 7};
  std::uint64_t checked = 0;
  do {
    const PermMap m{im};
    CHECK(to_map(f, interpolate(f, m)).images == im);
    ++checked;
  } while (std::next_permutation(im.begin(), im.end()));
  CHECK(checked == 40320);
}

TEST_CASE("interpolation handles arbitrary maps, not only permutations") {
  for (const auto& [p, r] : {std::pair<std::uint64_t, unsigned>{5, 1},
                             {7, 1},
                             {2, 3},
                             {3, 2},
                             {2, 4}}) {
    const Field f(p, r);
    std::uint64_t s = 0xabcdu * f.q() + 3;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Elem> im(f.q());
      for (Elem& v : im) v = static_cast<Elem>(rng_next(s) % f.q());
      const PermMap m{im};
      CHECK(to_map(f, interpolate(f, m)).images == im);
    }
  }
}

TEST_CASE("linearity of the inversion permutation over GF(5) is 3") {
  const Field f(5, 1);
  PermMap inv;
  inv.images.resize(5);
  for (Elem c = 0; c < 5; ++c) inv.images[c] = f.inverse_or_zero(c);
  CHECK(inv.images == std::vector<Elem>{0, 1, 3, 2, 4});
  CHECK(linearity(f, inv) == 3);
  CHECK(linearity_oracle(f, inv.images) == 3);
}

TEST_CASE("linearity matches the affine-scan oracle") {
  for (const auto& [p, r] : {std::pair<std::uint64_t, unsigned>{5, 1},
                             {7, 1},
                             {3, 2}}) {
    const Field f(p, r);
    std::uint64_t s = 0x77u * f.q() + 9;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Elem> im(f.q());
      for (Elem& v : im) v = static_cast<Elem>(rng_next(s) % f.q());
      CHECK(linearity(f, PermMap{im}) == linearity_oracle(f, im));
    }
    // Every permutation of GF(5), against the oracle.
    if (f.q() == 5) {
      std::vector<Elem> im5 = {0, 1, 2, 3, 4};
      do {
        CHECK(linearity(f, PermMap{im5}) == linearity_oracle(f, im5));
      } while (std::next_permutation(im5.begin(), im5.end()));
    }
  }
}

TEST_CASE("linearity is q exactly on affine maps") {
  for (const auto& [p, r] : {std::pair<std::uint64_t, unsigned>{3, 1},
                             {2, 2},
                             {5, 1},
                             {7, 1}}) {
    const Field f(p, r);
    const Elem q = static_cast<Elem>(f.q());
    for (Elem a = 1; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        PermMap m;
        m.images.resize(q);
        for (Elem c = 0; c < q; ++c) m.images[c] = f.add(f.mul(a, c), b);
        CHECK(linearity(f, m) == q);
      }
    }
  }
}

TEST_CASE("difference degree picks out the interpolated difference") {
  const Field f(7, 1);
  PermMap ident;
  ident.images = {0, 1, 2, 3, 4, 5, 6};
  PermMap shifted;
  shifted.images.resize(7);
  // h = x + 3x^2
  for (Elem c = 0; c < 7; ++c)
    shifted.images[c] = f.add(c, f.mul(3, f.mul(c, c)));
  CHECK(difference_degree(f, ident, shifted) == std::optional<unsigned>(2));
  // Constant shifts vanish.
  PermMap plus1;
  plus1.images.resize(7);
  for (Elem c = 0; c < 7; ++c) plus1.images[c] = f.add(c, 1);
  CHECK(difference_degree(f, ident, plus1) == std::nullopt);
  CHECK(difference_degree(f, ident, ident) == std::nullopt);
  // Antisymmetric up to sign: same degree both ways.
  CHECK(difference_degree(f, shifted, ident) == std::optional<unsigned>(2));
}

TEST_CASE("permutation predicates") {
  const Field f5(5, 1);
  PermMap cube;
  cube.images.resize(5);
  for (Elem c = 0; c < 5; ++c) cube.images[c] = f5.pow(c, 3);
  CHECK(is_permutation(f5, cube));  // gcd(3, 4) = 1
  PermMap square;
  square.images.resize(5);
  for (Elem c = 0; c < 5; ++c) square.images[c] = f5.mul(c, c);
  CHECK_FALSE(is_permutation(f5, square));
  CHECK_FALSE(is_permutation(f5, std::vector<Elem>{0, 1, 2, 3}));   // short
  CHECK_FALSE(is_permutation(f5, std::vector<Elem>{0, 1, 2, 3, 5}));  // code
}

TEST_CASE("complete mappings need both the map and its shift to permute") {
  const Field f5(5, 1);
  PermMap twice;
  twice.images.resize(5);
  for (Elem c = 0; c < 5; ++c) twice.images[c] = f5.mul(2, c);
  CHECK(is_complete_mapping(f5, twice));  // 2x and 3x both permute

  const Field f8(2, 3);
  PermMap ident8;
  ident8.images.resize(8);
  for (Elem c = 0; c < 8; ++c) ident8.images[c] = c;
  CHECK(is_permutation(f8, ident8));
  CHECK_FALSE(is_complete_mapping(f8, ident8));  // x + x = 0 in char 2
}

TEST_CASE("value multiset of the squaring map over GF(7)") {
  const Field f(7, 1);
  std::vector<Elem> values(7);
  for (Elem c = 0; c < 7; ++c) values[c] = f.mul(c, c);
  const carlitz::ValueSetSummary s = value_multiset(f, values);
  CHECK(s.total == 7);
  CHECK(s.max_fiber == 2);
  const std::vector<std::pair<Elem, std::uint32_t>> expect = {
      {0, 1}, {1, 2}, {2, 2}, {4, 2}};
  CHECK(s.fibers == expect);
}

TEST_CASE("poly constructors reduce and validate") {
  const Field f(5, 1);
  CHECK(make_poly(f, {1, 2, 0, 0}).coeffs == std::vector<Elem>{1, 2});
  CHECK(make_poly(f, {0, 0}).coeffs.empty());
  CHECK_FALSE(make_poly(f, {0, 0}).degree().has_value());
  CHECK(monomial(f, 3, 2).coeffs == std::vector<Elem>{0, 0, 0, 2});
  CHECK(monomial(f, 3, 0).coeffs.empty());
  const Poly sum =
      poly_add(f, make_poly(f, {1, 0, 1}), make_poly(f, {0, 0, 4}));
  CHECK(sum.coeffs == std::vector<Elem>{1});  // leading terms cancel
  CHECK_THROWS_AS(make_poly(f, {5}), carlitz::Error);
}
