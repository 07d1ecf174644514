// SPDX-License-Identifier: Apache-2.0
// field.cpp -- canonical GF(p^r) construction and arithmetic

#include "carlitz/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace carlitz {
namespace {

constexpr std::uint64_t kHardCeiling = std::uint64_t{1} << 26;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Little-endian digit vectors over GF(p); used only during construction.
using Digits = std::vector<std::uint32_t>;

// Remainder of monic f (degree r) under division by monic divisor d
// (degree >= 1). Returns true iff the remainder is zero.
bool divides(const Digits& divisor, Digits f, std::uint64_t p) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = f.size(); i-- > dd;) {
    const std::uint64_t c = f[i];
    if (c == 0) continue;
    f[i] = 0;
    for (std::size_t j = 0; j < dd; ++j) {
      const std::uint64_t sub = (c * divisor[j]) % p;
      f[i - dd + j] =
          static_cast<std::uint32_t>((f[i - dd + j] + p - sub) % p);
    }
  }
  return std::all_of(f.begin(), f.begin() + static_cast<long>(dd),
                     [](std::uint32_t v) { return v == 0; });
}

// A monic polynomial of degree r >= 2 is reducible iff some monic polynomial
// of degree in [1, r/2] divides it; at construction scale (q <= 2^26) the
// full trial-division scan is cheap.
bool is_irreducible(const Digits& f, std::uint64_t p) {
  const std::size_t r = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= r; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Digits divisor(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t e = 0; e < count; ++e) {
      std::uint64_t t = e;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (divides(divisor, f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(std::uint64_t p, unsigned r, std::uint64_t size_cap)
    : p_(p), r_(r) {
  if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, std::to_string(p));
  if (r < 1) fail(Errc::FieldTooSmall, "extension degree 0");
  const std::uint64_t cap = std::min(size_cap, kHardCeiling);
  q_ = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q_ > cap / p) fail(Errc::FieldTooLarge, "p^r exceeds cap");
    q_ *= p;
  }
  if (q_ < 3) fail(Errc::FieldTooSmall, "q = " + std::to_string(q_) + " < 3");

  // Canonical modulus: smallest base-p encoding of the non-leading
  // coefficients such that the monic polynomial is irreducible. Degree 1 is
  // conventionally X (encoding 0).
  modulus_.assign(r_ + 1, 0);
  modulus_[r_] = 1;
  if (r_ >= 2) {
    Digits f(r_ + 1, 0);
    f[r_] = 1;
    for (std::uint64_t e = 0;; ++e) {
      std::uint64_t t = e;
      for (unsigned i = 0; i < r_; ++i) {
        f[i] = static_cast<std::uint32_t>(t % p_);
        t /= p_;
      }
      if (t != 0) fail(Errc::FieldTooLarge, "no irreducible found");  // unreachable
      if (is_irreducible(f, p_)) break;
    }
    for (unsigned i = 0; i < r_; ++i) modulus_[i] = f[i];
  }

  // Generator: smallest code whose multiplicative order is q-1, established
  // with direct arithmetic before any tables exist.
  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  for (Elem c = 2; c < q_; ++c) {
    bool ok = true;
    for (const auto f : factors) {
      // pow by squaring on mul_direct
      std::uint64_t e = group / f;
      Elem base = c, acc = 1;
      while (e > 0) {
        if (e & 1) acc = mul_direct(acc, base);
        base = mul_direct(base, base);
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = c;
      break;
    }
  }

  if (q_ <= kLogTableLimit) {
    exp_.resize(2 * group);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
      exp_[i] = cur;
      exp_[i + group] = cur;
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_direct(cur, generator_);
    }
    tables_ = true;
  }
}

Elem Field::add(Elem x, Elem y) const {
  check(x);
  check(y);
  if (p_ == 2) return x ^ y;
  if (r_ == 1) {
    const std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem out = 0;
  std::uint64_t place = 1;
  while (x > 0 || y > 0) {
    std::uint64_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += static_cast<Elem>(d * place);
    x = static_cast<Elem>(x / p_);
    y = static_cast<Elem>(y / p_);
    place *= p_;
  }
  return out;
}

Elem Field::neg(Elem x) const {
  check(x);
  if (p_ == 2) return x;
  if (r_ == 1) return x == 0 ? 0 : static_cast<Elem>(p_ - x);
  Elem out = 0;
  std::uint64_t place = 1;
  while (x > 0) {
    const std::uint64_t d = x % p_;
    if (d != 0) out += static_cast<Elem>((p_ - d) * place);
    x = static_cast<Elem>(x / p_);
    place *= p_;
  }
  return out;
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::mul_direct(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  if (r_ == 1) return static_cast<Elem>((std::uint64_t{x} * y) % p_);
  std::array<std::uint32_t, 64> acc{};
  std::array<std::uint32_t, 32> xd{}, yd{};
  Elem t = x;
  for (unsigned i = 0; i < r_; ++i) {
    xd[i] = static_cast<std::uint32_t>(t % p_);
    t = static_cast<Elem>(t / p_);
  }
  t = y;
  for (unsigned i = 0; i < r_; ++i) {
    yd[i] = static_cast<std::uint32_t>(t % p_);
    t = static_cast<Elem>(t / p_);
  }
  for (unsigned i = 0; i < r_; ++i) {
    if (xd[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j)
      acc[i + j] = static_cast<std::uint32_t>(
          (acc[i + j] + std::uint64_t{xd[i]} * yd[j]) % p_);
  }
  // Reduce with x^r = -(c_0 + ... + c_{r-1} x^{r-1}).
  for (unsigned i = 2 * r_ - 2; i >= r_; --i) {
    const std::uint64_t c = acc[i];
    if (c != 0) {
      acc[i] = 0;
      for (unsigned j = 0; j < r_; ++j) {
        const std::uint64_t sub = (c * modulus_[j]) % p_;
        acc[i - r_ + j] =
            static_cast<std::uint32_t>((acc[i - r_ + j] + p_ - sub) % p_);
      }
    }
    if (i == r_) break;
  }
  Elem out = 0;
  std::uint64_t place = 1;
  for (unsigned i = 0; i < r_; ++i) {
    out += static_cast<Elem>(acc[i] * place);
    place *= p_;
  }
  return out;
}

Elem Field::mul(Elem x, Elem y) const {
  check(x);
  check(y);
  if (x == 0 || y == 0) return 0;
  if (tables_) return exp_[std::uint64_t{log_[x]} + log_[y]];
  return mul_direct(x, y);
}

Elem Field::inverse_or_zero(Elem x) const {
  check(x);
  if (x == 0) return 0;
  if (x == 1) return 1;
  if (tables_) return exp_[(q_ - 1) - log_[x]];
  return pow(x, q_ - 2);
}

Elem Field::pow(Elem x, std::uint64_t e) const {
  check(x);
  if (e == 0) return 1;
  if (x == 0) return 0;
  if (tables_) {
    const std::uint64_t t = (std::uint64_t{log_[x]} * (e % (q_ - 1))) % (q_ - 1);
    return exp_[t];
  }
  Elem base = x, acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul_direct(acc, base);
    base = mul_direct(base, base);
    e >>= 1;
  }
  return acc;
}

bool Field::mth_power_residue(Elem v, std::uint64_t m) const {
  check(v);
  if (v == 0) fail(Errc::ZeroInput, "mth_power_residue(0)");
  if (m < 1 || (q_ - 1) % m != 0)
    fail(Errc::MNotDividingGroupOrder, std::to_string(m));
  if (tables_) return log_[v] % m == 0;
  return pow(v, (q_ - 1) / m) == 1;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

}  // namespace carlitz
