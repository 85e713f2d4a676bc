#pragma once

// Arbitrary-precision integers used throughout the library.
//
// Integer is GMP's signed mpz_class used as-is. Natural wraps it with a
// nonnegativity invariant: subtraction that would go below zero and exact
// division that leaves a remainder both throw instead of silently producing
// a wrong value.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fibfractal {

using Integer = mpz_class;

class Natural {
 public:
  Natural() = default;

  template <std::unsigned_integral U>
  Natural(U v) : value_(static_cast<unsigned long>(v)) {  // NOLINT(google-explicit-constructor)
    static_assert(sizeof(U) <= sizeof(unsigned long));
  }

  template <std::signed_integral S>
  Natural(S v) : value_(static_cast<long>(v)) {  // NOLINT(google-explicit-constructor)
    static_assert(sizeof(S) <= sizeof(long));
    if (v < 0) throw std::domain_error("Natural: negative value");
  }

  explicit Natural(Integer v) : value_(std::move(v)) {
    if (sgn(value_) < 0) throw std::domain_error("Natural: negative value");
  }

  static Natural parse(std::string_view text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("Natural: not a decimal number: '" + std::string(text) + "'");
    return Natural(Integer(std::string(text), 10));
  }

  const Integer& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  bool fits_u64() const noexcept { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Natural: value does not fit in 64 bits");
    // mpz_get_ui is only 64 bits wide on LP64 targets.
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_get_ui(value_.get_mpz_t());
  }

  // Residue modulo a machine-word modulus.
  std::uint64_t mod(std::uint64_t m) const {
    if (m == 0) throw std::domain_error("Natural: modulus zero");
    return mpz_fdiv_ui(value_.get_mpz_t(), m);
  }

  // Number of trailing zero bits; undefined for zero, so that throws.
  std::uint64_t trailing_zeros() const {
    if (is_zero()) throw std::domain_error("Natural: trailing_zeros of zero");
    return mpz_scan1(value_.get_mpz_t(), 0);
  }

  std::uint64_t bit_length() const noexcept {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
  }

  bool bit(std::uint64_t i) const noexcept { return mpz_tstbit(value_.get_mpz_t(), i) != 0; }

  std::string to_string() const { return value_.get_str(10); }

  Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
  Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }
  Natural& operator-=(const Natural& o) {
    if (value_ < o.value_) throw std::domain_error("Natural: subtraction underflow");
    value_ -= o.value_;
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

  // Floor quotient and remainder.
  friend Natural operator/(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw std::domain_error("Natural: division by zero");
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Natural(std::move(q));
  }
  friend Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw std::domain_error("Natural: division by zero");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return Natural(std::move(r));
  }

  // Divides by a machine word, returning the remainder and replacing *this
  // by the quotient.
  std::uint64_t divmod_inplace(std::uint64_t d) {
    if (d == 0) throw std::domain_error("Natural: division by zero");
    return mpz_fdiv_q_ui(value_.get_mpz_t(), value_.get_mpz_t(), d);
  }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

 private:
  Integer value_{0};
};

// a / b, throwing if b does not divide a.
inline Natural exact_div(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
  if (sgn(r) != 0)
    throw std::domain_error("exact_div: nonzero remainder dividing " + a.to_string() + " by " +
                            b.to_string());
  return Natural(std::move(q));
}

inline Natural pow(const Natural& base, std::uint64_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), e);
  return Natural(std::move(r));
}

inline Natural abs_natural(const Integer& v) { return Natural(Integer(abs(v))); }

}  // namespace fibfractal
