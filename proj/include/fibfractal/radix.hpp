#pragma once

// Mixed-radix numeration over divisibility chains b_0 = 1 | b_1 | b_2 | ...
//
// A base is a rule for its ratios r_i = b_{i+1} / b_i rather than a stored
// list of place values, so expansions have no length cap:
//   power(m)   r_i = m
//   base F     (1, 3, 6, 12, ...)   r_0 = 3, r_i = 2 for i >= 1
//   base T     (1, 4, 12, 36, ...)  r_0 = 4, r_i = 3 for i >= 1

#include "fibfractal/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibfractal {

enum class BaseKind { power, fibonacci, ternary };

class MixedRadixBase {
 public:
  static MixedRadixBase power(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("MixedRadixBase::power: radix must be >= 2");
    return MixedRadixBase(BaseKind::power, m);
  }
  static MixedRadixBase base_f() { return MixedRadixBase(BaseKind::fibonacci, 0); }
  static MixedRadixBase base_t() { return MixedRadixBase(BaseKind::ternary, 0); }

  BaseKind kind() const noexcept { return kind_; }

  // b_{i+1} / b_i
  std::uint64_t ratio(std::size_t i) const noexcept {
    switch (kind_) {
      case BaseKind::power:
        return radix_;
      case BaseKind::fibonacci:
        return i == 0 ? 3 : 2;
      case BaseKind::ternary:
        return i == 0 ? 4 : 3;
    }
    return 0;
  }

  Natural place_value(std::size_t i) const {
    switch (kind_) {
      case BaseKind::power:
        return pow(Natural(radix_), i);
      case BaseKind::fibonacci:
        return i == 0 ? Natural(1U) : Natural(3U) * pow(Natural(2U), i - 1);
      case BaseKind::ternary:
        return i == 0 ? Natural(1U) : Natural(4U) * pow(Natural(3U), i - 1);
    }
    return Natural(0U);
  }

  std::string name() const {
    switch (kind_) {
      case BaseKind::power:
        return std::to_string(radix_);
      case BaseKind::fibonacci:
        return "F";
      case BaseKind::ternary:
        return "T";
    }
    return "?";
  }

  friend bool operator==(const MixedRadixBase&, const MixedRadixBase&) = default;

 private:
  MixedRadixBase(BaseKind kind, std::uint64_t radix) : kind_(kind), radix_(radix) {}

  BaseKind kind_;
  std::uint64_t radix_;
};

// Digits (n_0, n_1, ..., n_L), least significant first. Trailing zeros are
// stripped on construction so that zero is the empty vector and equal values
// compare equal structurally. Digit bounds are not enforced here; compress()
// and is_valid() check them.
class DigitVector {
 public:
  DigitVector(std::vector<std::uint64_t> digits, MixedRadixBase base)
      : digits_(std::move(digits)), base_(base) {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
  }

  const std::vector<std::uint64_t>& digits() const& noexcept { return digits_; }
  std::vector<std::uint64_t> digits() && noexcept { return std::move(digits_); }
  const MixedRadixBase& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  // Digit i, with implicit zeros past the end.
  std::uint64_t operator[](std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }

  bool is_valid() const noexcept {
    for (std::size_t i = 0; i < digits_.size(); ++i)
      if (digits_[i] >= base_.ratio(i)) return false;
    return true;
  }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  std::vector<std::uint64_t> digits_;
  MixedRadixBase base_;
};

inline DigitVector expand(const Natural& n, const MixedRadixBase& base) {
  std::vector<std::uint64_t> digits;
  Natural rest = n;
  for (std::size_t i = 0; !rest.is_zero(); ++i) digits.push_back(rest.divmod_inplace(base.ratio(i)));
  return DigitVector(std::move(digits), base);
}

inline Natural compress(const DigitVector& d) {
  if (!d.is_valid()) throw std::invalid_argument("compress: digit exceeds its bound in base " + d.base().name());
  // Horner from the most significant digit: n = n_0 + r_0 (n_1 + r_1 (n_2 + ...)).
  Natural value = 0U;
  for (std::size_t i = d.size(); i-- > 0;) {
    value *= Natural(d.base().ratio(i));
    value += Natural(d[i]);
  }
  return value;
}

// Number of nonzero digits of n in the given base.
inline std::uint64_t zeta(const Natural& n, const MixedRadixBase& base) {
  std::uint64_t count = 0;
  for (std::uint64_t digit : expand(n, base).digits())
    if (digit != 0) ++count;
  return count;
}

}  // namespace fibfractal
