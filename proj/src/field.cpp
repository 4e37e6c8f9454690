#include "ulrich/field.hpp"

#include "ulrich/error.hpp"

namespace ulrich {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31)) throw FieldError("modulus " + std::to_string(p) + " is not below 2^31");
  if (p == 2 || !is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not an odd prime");
}

FieldElement PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::inverse(FieldElement x) const {
  if (x.value == 0) throw FieldError("division by zero in F_" + std::to_string(p_));
  std::int64_t r0 = p_, r1 = x.value;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_int(s0);
}

FieldElement PrimeField::pow(FieldElement x, std::uint64_t e) const {
  FieldElement result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

void require_same_field(const PrimeField& a, const PrimeField& b, const std::string& what) {
  if (a != b) {
    throw FieldError(what + ": modulus mismatch (" + std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()) + ")");
  }
}

}  // namespace ulrich
