#include "ulrich/extension_field.hpp"

#include <string>
#include <utility>

#include "ulrich/error.hpp"

namespace ulrich {

namespace {

void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp poly_sub(const PrimeField& f, PolyFp a, const PolyFp& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub({a[i]}, {b[i]}).value;
  trim(a);
  return a;
}

PolyFp poly_mul(const PrimeField& f, const PolyFp& a, const PolyFp& b) {
  if (a.empty() || b.empty()) return {};
  PolyFp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add({out[i + j]}, f.mul({a[i]}, {b[j]})).value;
    }
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by nonzero b.
std::pair<PolyFp, PolyFp> poly_divmod(const PrimeField& f, PolyFp a, const PolyFp& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  PolyFp q(a.size() - b.size() + 1, 0);
  const std::uint32_t lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint32_t c = f.mulr(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = f.sub({a[i + shift]}, {f.mulr(c, b[i])}).value;
    }
    trim(a);
  }
  trim(q);
  return {q, a};
}

PolyFp poly_mod(const PrimeField& f, const PolyFp& a, const PolyFp& m) { return poly_divmod(f, a, m).second; }

PolyFp poly_gcd(const PrimeField& f, PolyFp a, PolyFp b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyFp poly_powmod(const PrimeField& f, PolyFp base, std::uint64_t e, const PolyFp& m) {
  PolyFp result{1};
  base = poly_mod(f, base, m);
  while (e != 0) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

PolyFp to_poly(const ExtElement& e, int k) {
  PolyFp out(e.c.begin(), e.c.begin() + k);
  trim(out);
  return out;
}

ExtElement from_poly(const PolyFp& a) {
  ExtElement e;
  for (std::size_t i = 0; i < a.size(); ++i) e.c[i] = a[i];
  return e;
}

}  // namespace

bool is_irreducible(const PrimeField& f, const PolyFp& g) {
  if (g.empty() || g.back() != 1 || g.size() < 2) return false;
  const int k = static_cast<int>(g.size()) - 1;
  if (k == 1) return true;
  const PolyFp x{0, 1};
  PolyFp frob = x;  // x^{p^i} mod g
  for (int i = 1; i <= k / 2; ++i) {
    frob = poly_powmod(f, frob, f.modulus(), g);
    const PolyFp diff = poly_sub(f, frob, x);
    const PolyFp gcd = poly_gcd(f, g, diff);
    if (gcd.size() != 1) return false;
  }
  return true;
}

ExtensionField::ExtensionField(PrimeField base, int degree) : base_(base), degree_(degree) {
  if (degree < 1 || degree > kMaxExtensionDegree) {
    throw FieldError("extension degree " + std::to_string(degree) + " outside 1..4");
  }
  // Enumerate monic g = u^k + c_{k-1}u^{k-1} + ... + c_0 with c_0 != 0 by the
  // base-p digits of a counter.
  const std::uint64_t p = base.modulus();
  for (std::uint64_t n = 1;; ++n) {
    PolyFp g(static_cast<std::size_t>(degree) + 1, 0);
    g[static_cast<std::size_t>(degree)] = 1;
    std::uint64_t digits = n;
    for (int i = 0; i < degree; ++i) {
      g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(digits % p);
      digits /= p;
    }
    if (digits != 0) throw FieldError("no irreducible polynomial found");
    if (g[0] == 0) continue;
    if (is_irreducible(base, g)) {
      modulus_ = std::move(g);
      return;
    }
  }
}

ExtensionField::ExtensionField(PrimeField base, PolyFp modulus)
    : base_(base), degree_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  if (degree_ < 1 || degree_ > kMaxExtensionDegree || !is_irreducible(base_, modulus_)) {
    throw FieldError("extension modulus is not a monic irreducible of degree 1..4");
  }
}

ExtElement ExtensionField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement out;
  for (int i = 0; i < degree_; ++i) out.c[i] = base_.add({a.c[i]}, {b.c[i]}).value;
  return out;
}

ExtElement ExtensionField::sub(const ExtElement& a, const ExtElement& b) const {
  ExtElement out;
  for (int i = 0; i < degree_; ++i) out.c[i] = base_.sub({a.c[i]}, {b.c[i]}).value;
  return out;
}

ExtElement ExtensionField::neg(const ExtElement& a) const {
  ExtElement out;
  for (int i = 0; i < degree_; ++i) out.c[i] = base_.negr(a.c[i]);
  return out;
}

ExtElement ExtensionField::mul(const ExtElement& a, const ExtElement& b) const {
  return from_poly(poly_mod(base_, poly_mul(base_, to_poly(a, degree_), to_poly(b, degree_)), modulus_));
}

ExtElement ExtensionField::inverse(const ExtElement& a) const {
  if (a.is_zero()) throw FieldError("division by zero in F_p^" + std::to_string(degree_));
  // Extended Euclid: track s with s*a = r (mod g).
  PolyFp r0 = modulus_, r1 = to_poly(a, degree_);
  PolyFp s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(base_, r0, r1);
    PolyFp s = poly_sub(base_, s0, poly_mul(base_, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since g is irreducible.
  const std::uint32_t c = base_.inv(r0[0]);
  PolyFp inv = poly_mod(base_, s0, modulus_);
  for (auto& x : inv) x = base_.mulr(x, c);
  return from_poly(inv);
}

ExtElement ExtensionField::random_element(Rng& rng) const {
  ExtElement e;
  for (int i = 0; i < degree_; ++i) e.c[i] = base_.random_element(rng).value;
  return e;
}

std::size_t rank(const ExtensionField& field, std::vector<ExtElement> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw DimensionError("extension-field matrix has wrong entry count");
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv * cols + c].is_zero()) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rk * cols + j]);
    const ExtElement inv = field.inverse(a[rk * cols + c]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (a[r * cols + c].is_zero()) continue;
      const ExtElement factor = field.mul(a[r * cols + c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        a[r * cols + j] = field.sub(a[r * cols + j], field.mul(factor, a[rk * cols + j]));
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace ulrich
