#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modcanon {

// Prime modulus for F_p coefficient arithmetic. Primality is checked by
// trial division at construction.
class PrimeModulus {
public:
  explicit PrimeModulus(uint32_t p);
  uint32_t value() const { return p_; }

  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
  friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

private:
  uint32_t p_;
};

// Dense polynomial over F_p. Coefficients are residues in [0,p), stored low
// exponent first with no trailing zero; the zero polynomial has no
// coefficients at all.
class FpPoly {
public:
  explicit FpPoly(PrimeModulus p) : p_(p) {}
  FpPoly(PrimeModulus p, std::vector<uint32_t> coeffs);

  static FpPoly zero(PrimeModulus p) { return FpPoly(p); }
  static FpPoly one(PrimeModulus p) { return monomial(p, 0); }
  static FpPoly monomial(PrimeModulus p, uint64_t exponent, uint32_t scale = 1);
  // 1 + X + ... + X^{length-1}
  static FpPoly all_ones(PrimeModulus p, uint64_t length);
  // X^n - 1
  static FpPoly x_pow_minus_one(PrimeModulus p, uint64_t n);

  PrimeModulus modulus() const { return p_; }
  std::span<const uint32_t> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
  uint32_t coeff(uint64_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0u;
  }
  bool is_zero_one() const;
  // Exponents carrying a nonzero coefficient, increasing.
  std::vector<int64_t> support() const;
  std::string to_string() const;

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

private:
  void trim();

  PrimeModulus p_;
  std::vector<uint32_t> coeffs_;
};

FpPoly poly_add(const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const FpPoly& a, const FpPoly& b);
FpPoly poly_mul(const FpPoly& a, const FpPoly& b);

// Folds every exponent mod n; the result has degree < n.
FpPoly poly_mod_cyclic(const FpPoly& a, uint64_t n);

struct PolyDivRem {
  FpPoly quotient;
  FpPoly remainder;
};

// Exact division with remainder in F_p[X]; b must be nonzero.
PolyDivRem poly_divrem(const FpPoly& a, const FpPoly& b);

// Smallest n <= max_n with a | X^n - 1, if any. Requires a(0) != 0.
std::optional<uint64_t> order_of_divisor(const FpPoly& a, uint64_t max_n);

// Polynomial with integer coefficients, low exponent first, trimmed.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs);

  static IntPoly monomial(uint64_t exponent, long long scale = 1);
  static IntPoly x_pow_minus_one(uint64_t n);

  std::span<const long long> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
  long long coeff(uint64_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  long long eval_at_one() const;
  std::string to_string() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
  void trim();

  std::vector<long long> coeffs_;
};

IntPoly int_add(const IntPoly& a, const IntPoly& b);
IntPoly int_mul(const IntPoly& a, const IntPoly& b);

// Exact long division by a monic divisor; throws if b is not monic.
struct IntDivRem {
  IntPoly quotient;
  IntPoly remainder;
};
IntDivRem int_divrem(const IntPoly& a, const IntPoly& b);

// True iff divisor | dividend exactly over the integers. The divisor must be
// monic (every cyclotomic polynomial is).
bool int_divides(const IntPoly& divisor, const IntPoly& dividend);

// d-th cyclotomic polynomial, computed by dividing X^d - 1 by the product of
// the cyclotomic polynomials of the proper divisors of d. Memoized.
IntPoly cyclotomic(uint32_t d);

} // namespace modcanon
