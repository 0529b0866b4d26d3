#include "modcanon/fp_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "modcanon/numbers.hpp"

namespace modcanon {

namespace {

uint32_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t acc = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

// Inverse in F_p via Fermat.
uint32_t mod_inverse(uint32_t a, uint32_t p) { return mod_pow(a, p - 2, p); }

void check_same_modulus(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("modulus mismatch between polynomials");
  }
}

// XOR src shifted left by `shift` bits into acc.
void xor_shifted(std::vector<uint64_t>& acc, const std::vector<uint64_t>& src,
                 size_t shift) {
  const size_t word = shift / 64;
  const size_t bit = shift % 64;
  for (size_t j = 0; j < src.size(); ++j) {
    acc[word + j] ^= src[j] << bit;
    if (bit != 0 && word + j + 1 < acc.size()) {
      acc[word + j + 1] ^= src[j] >> (64 - bit);
    }
  }
}

FpPoly mul_gf2_packed(const FpPoly& a, const FpPoly& b) {
  const auto pack = [](std::span<const uint32_t> c) {
    std::vector<uint64_t> words((c.size() + 63) / 64, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i]) words[i / 64] |= uint64_t{1} << (i % 64);
    }
    return words;
  };
  const auto weight = [](std::span<const uint32_t> c) {
    size_t w = 0;
    for (uint32_t v : c) w += v != 0;
    return w;
  };

  // Iterate over the sparser operand, xor-shift the packed denser one.
  const FpPoly& outer = weight(a.coeffs()) <= weight(b.coeffs()) ? a : b;
  const FpPoly& inner = (&outer == &a) ? b : a;

  const size_t result_len = a.coeffs().size() + b.coeffs().size() - 1;
  std::vector<uint64_t> acc((result_len + 63) / 64, 0);
  const std::vector<uint64_t> packed = pack(inner.coeffs());
  const auto oc = outer.coeffs();
  for (size_t i = 0; i < oc.size(); ++i) {
    if (oc[i]) xor_shifted(acc, packed, i);
  }

  std::vector<uint32_t> out(result_len, 0);
  for (size_t i = 0; i < result_len; ++i) {
    out[i] = (acc[i / 64] >> (i % 64)) & 1u;
  }
  return FpPoly(a.modulus(), std::move(out));
}

} // namespace

PrimeModulus::PrimeModulus(uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
}

FpPoly::FpPoly(PrimeModulus p, std::vector<uint32_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_.value();
  trim();
}

FpPoly FpPoly::monomial(PrimeModulus p, uint64_t exponent, uint32_t scale) {
  std::vector<uint32_t> c(exponent + 1, 0);
  c[exponent] = scale;
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::all_ones(PrimeModulus p, uint64_t length) {
  return FpPoly(p, std::vector<uint32_t>(length, 1));
}

FpPoly FpPoly::x_pow_minus_one(PrimeModulus p, uint64_t n) {
  std::vector<uint32_t> c(n + 1, 0);
  c[0] = p.value() - 1;
  c[n] = 1;
  return FpPoly(p, std::move(c));
}

bool FpPoly::is_zero_one() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](uint32_t c) { return c <= 1; });
}

std::vector<int64_t> FpPoly::support() const {
  std::vector<int64_t> out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i]) out.push_back(static_cast<int64_t>(i));
  }
  return out;
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
    if (i > 0) {
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b) {
  check_same_modulus(a, b);
  const uint32_t p = a.modulus().value();
  std::vector<uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coeff(i) + b.coeff(i)) % p;
  }
  return FpPoly(a.modulus(), std::move(out));
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b) {
  check_same_modulus(a, b);
  const uint32_t p = a.modulus().value();
  std::vector<uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coeff(i) + p - b.coeff(i)) % p;
  }
  return FpPoly(a.modulus(), std::move(out));
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b) {
  check_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.modulus());
  const uint32_t p = a.modulus().value();
  if (p == 2) return mul_gf2_packed(a, b);

  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<uint32_t> out(ac.size() + bc.size() - 1, 0);
  for (size_t i = 0; i < ac.size(); ++i) {
    if (!ac[i]) continue;
    const uint64_t ai = ac[i];
    for (size_t j = 0; j < bc.size(); ++j) {
      if (!bc[j]) continue;
      out[i + j] = static_cast<uint32_t>((out[i + j] + ai * bc[j]) % p);
    }
  }
  return FpPoly(a.modulus(), std::move(out));
}

FpPoly poly_mod_cyclic(const FpPoly& a, uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic reduction needs n >= 1");
  const uint32_t p = a.modulus().value();
  std::vector<uint32_t> out(std::min<uint64_t>(n, a.coeffs().size()), 0);
  const auto ac = a.coeffs();
  for (size_t i = 0; i < ac.size(); ++i) {
    const size_t e = i % n;
    out[e] = (out[e] + ac[i]) % p;
  }
  return FpPoly(a.modulus(), std::move(out));
}

PolyDivRem poly_divrem(const FpPoly& a, const FpPoly& b) {
  check_same_modulus(a, b);
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const uint32_t p = a.modulus().value();
  if (a.degree() < b.degree()) return {FpPoly::zero(a.modulus()), a};

  std::vector<uint32_t> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const size_t nb = bc.size();
  std::vector<uint32_t> quot(rem.size() - nb + 1, 0);
  const uint32_t lead_inv = mod_inverse(bc.back(), p);

  for (size_t k = quot.size(); k-- > 0;) {
    const uint32_t c = static_cast<uint32_t>(uint64_t{rem[k + nb - 1]} * lead_inv % p);
    if (c == 0) continue;
    quot[k] = c;
    for (size_t j = 0; j < nb; ++j) {
      const uint32_t sub = static_cast<uint32_t>(uint64_t{c} * bc[j] % p);
      rem[k + j] = (rem[k + j] + p - sub) % p;
    }
  }
  return {FpPoly(a.modulus(), std::move(quot)), FpPoly(a.modulus(), std::move(rem))};
}

std::optional<uint64_t> order_of_divisor(const FpPoly& a, uint64_t max_n) {
  if (a.is_zero() || a.coeff(0) == 0) {
    throw std::invalid_argument("order is defined only for a(0) != 0");
  }
  if (a.degree() == 0) return 1;

  const uint32_t p = a.modulus().value();
  const auto ac = a.coeffs();
  const size_t deg = ac.size() - 1;
  const uint32_t lead_inv = mod_inverse(ac.back(), p);

  // r = X^n mod a, maintained incrementally.
  std::vector<uint32_t> r(deg, 0);
  r[0] = 1;
  const auto is_one = [&] {
    if (r[0] != 1) return false;
    return std::all_of(r.begin() + 1, r.end(), [](uint32_t c) { return c == 0; });
  };
  for (uint64_t n = 1; n <= max_n; ++n) {
    // Multiply by X.
    const uint32_t carry = r[deg - 1];
    for (size_t i = deg - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    if (carry != 0) {
      const uint32_t c = static_cast<uint32_t>(uint64_t{carry} * lead_inv % p);
      for (size_t i = 0; i < deg; ++i) {
        r[i] = static_cast<uint32_t>((r[i] + uint64_t{p} - uint64_t{c} * ac[i] % p) % p);
      }
    }
    if (is_one()) return n;
  }
  return std::nullopt;
}

IntPoly::IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::monomial(uint64_t exponent, long long scale) {
  std::vector<long long> c(exponent + 1, 0);
  c[exponent] = scale;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::x_pow_minus_one(uint64_t n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

long long IntPoly::eval_at_one() const {
  long long sum = 0;
  for (long long c : coeffs_) sum += c;
  return sum;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    const long long c = coeffs_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const long long mag = c < 0 ? -c : c;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) {
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly int_add(const IntPoly& a, const IntPoly& b) {
  std::vector<long long> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<long long> out(ac.size() + bc.size() - 1, 0);
  for (size_t i = 0; i < ac.size(); ++i) {
    if (!ac[i]) continue;
    for (size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPoly(std::move(out));
}

IntDivRem int_divrem(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) {
    throw std::invalid_argument("integer division requires a monic divisor");
  }
  if (a.degree() < b.degree()) return {IntPoly(), a};

  std::vector<long long> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const size_t nb = bc.size();
  std::vector<long long> quot(rem.size() - nb + 1, 0);
  for (size_t k = quot.size(); k-- > 0;) {
    const long long c = rem[k + nb - 1];
    if (c == 0) continue;
    quot[k] = c;
    for (size_t j = 0; j < nb; ++j) rem[k + j] -= c * bc[j];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool int_divides(const IntPoly& divisor, const IntPoly& dividend) {
  if (divisor.is_zero()) throw std::invalid_argument("zero divisor");
  if (dividend.is_zero()) return true;
  if (divisor.degree() > dividend.degree()) return false;
  return int_divrem(dividend, divisor).remainder.is_zero();
}

IntPoly cyclotomic(uint32_t d) {
  static std::mutex mutex;
  static std::map<uint32_t, IntPoly> cache;
  if (d == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }

  IntPoly result;
  if (d == 1) {
    result = IntPoly({-1, 1});
  } else {
    IntPoly denom = IntPoly::monomial(0);
    for (uint32_t e = 1; e < d; ++e) {
      if (d % e == 0) denom = int_mul(denom, cyclotomic(e));
    }
    auto [quot, rem] = int_divrem(IntPoly::x_pow_minus_one(d), denom);
    if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    result = std::move(quot);
  }

  std::lock_guard lock(mutex);
  return cache.emplace(d, std::move(result)).first->second;
}

} // namespace modcanon
