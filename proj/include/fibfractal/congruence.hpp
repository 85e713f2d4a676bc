#pragma once

// Digit- and carry-based congruences for binomial and Fibonomial
// coefficients, plus sweeps that check the fractal self-similarity of the
// triangles mod 2 and mod 3 against exact arithmetic.

#include "fibfractal/exact_core.hpp"
#include "fibfractal/radix.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibfractal {

class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
    if (value >= modulus) throw std::invalid_argument("Residue: value out of range");
  }

  static Residue reduce(std::uint64_t value, std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("Residue: modulus must be >= 2");
    return Residue(value % modulus, modulus);
  }

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  // Representative in (-m/2, m/2]; for m = 3 this is {-1, 0, 1}.
  std::int64_t balanced() const noexcept {
    return value_ > modulus_ / 2 ? static_cast<std::int64_t>(value_) - static_cast<std::int64_t>(modulus_)
                                 : static_cast<std::int64_t>(value_);
  }

  Residue operator-() const noexcept { return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_, Unchecked{}); }

  friend Residue operator*(const Residue& a, const Residue& b) {
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("Residue: modulus mismatch");
    const auto product = static_cast<unsigned __int128>(a.value_) * b.value_ % a.modulus_;
    return Residue(static_cast<std::uint64_t>(product), a.modulus_, Unchecked{});
  }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Unchecked {};
  Residue(std::uint64_t value, std::uint64_t modulus, Unchecked) noexcept : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  std::uint64_t modulus_;
};

namespace detail {

// Fibonomials C(a,b)_F for 0 <= a <= 3. Digits of base F and base T never
// exceed 3, so this table covers every digit factor.
inline constexpr std::array<std::array<std::uint64_t, 4>, 4> kSmallFibonomial{{
    {1, 0, 0, 0},
    {1, 1, 0, 0},
    {1, 1, 1, 0},
    {1, 2, 2, 1},
}};

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m, b = base % m;
  while (e > 0) {
    if (e & 1U) result = result * b % m;
    b = b * b % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

// C(a,b) mod p for digits a, b < p, p prime.
inline std::uint64_t small_binomial_mod_prime(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  unsigned __int128 num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return static_cast<std::uint64_t>(num * pow_mod(static_cast<std::uint64_t>(den), p - 2, p) % p);
}

// Product over digits of C(n_i, k_i)_F mod m, with k_i > n_i giving 0.
inline std::uint64_t digit_fibonomial_product(const DigitVector& n, const DigitVector& k, std::uint64_t m) {
  std::uint64_t product = 1 % m;
  const std::size_t len = std::max(n.size(), k.size());
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t ni = n[i], ki = k[i];
    if (ki > ni) return 0;
    if (ni > 3) throw std::logic_error("digit_fibonomial_product: digit above 3");
    product = product * kSmallFibonomial[ni][ki] % m;
  }
  return product;
}

inline void check_prime_modulus(std::uint64_t p, const char* who) {
  if (p < 2) throw std::invalid_argument(std::string(who) + ": p must be a prime >= 2");
  if (p > (1ULL << 32)) throw std::invalid_argument(std::string(who) + ": p too large");
}

}  // namespace detail

// Lucas: C(n,k) = prod C(n_i, k_i) (mod p) over base-p digits.
inline Residue lucas_binomial_mod_p(const Natural& n, const Natural& k, std::uint64_t p) {
  detail::check_prime_modulus(p, "lucas_binomial_mod_p");
  const auto base = MixedRadixBase::power(p);
  const DigitVector nd = expand(n, base), kd = expand(k, base);
  std::uint64_t product = 1 % p;
  for (std::size_t i = 0; i < std::max(nd.size(), kd.size()); ++i) {
    product = product * detail::small_binomial_mod_prime(nd[i], kd[i], p) % p;
    if (product == 0) break;
  }
  return Residue(product, p);
}

// Kummer: nu_p(C(m+n, m)) is the number of carries adding m and n in base p.
inline std::uint64_t kummer_nu(const Natural& m, const Natural& n, std::uint64_t p) {
  detail::check_prime_modulus(p, "kummer_nu");
  const auto base = MixedRadixBase::power(p);
  const DigitVector md = expand(m, base), nd = expand(n, base);
  std::uint64_t carries = 0, carry = 0;
  for (std::size_t i = 0; i < std::max(md.size(), nd.size()); ++i) {
    carry = (md[i] + nd[i] + carry) >= p ? 1 : 0;
    carries += carry;
  }
  return carries;
}

// nu_2(C(m+n, m)_F) by carry counting, without forming the coefficient.
//
// Write m = 3 q1 + r1 and n = 3 q2 + r2. The fractional parts r1/3 + r2/3
// are summed as a single event: c0 = [r1 + r2 >= 3], which counts as one
// carry and feeds into the binary addition q1 + q2. Every binary carry is
// counted, and one more is added when a carry leaves bit 0.
inline std::uint64_t knuth_wilf_nu2_fibonomial(const Natural& m, const Natural& n) {
  Natural q1 = m, q2 = n;
  const std::uint64_t r1 = q1.divmod_inplace(3);
  const std::uint64_t r2 = q2.divmod_inplace(3);
  const std::uint64_t c0 = (r1 + r2 >= 3) ? 1 : 0;

  std::uint64_t total = c0;
  std::uint64_t carry = c0;
  const std::uint64_t width = std::max(q1.bit_length(), q2.bit_length());
  for (std::uint64_t bit = 0; bit < width || carry != 0; ++bit) {
    const std::uint64_t sum = (q1.bit(bit) ? 1U : 0U) + (q2.bit(bit) ? 1U : 0U) + carry;
    carry = sum >= 2 ? 1 : 0;
    if (carry == 0) continue;
    ++total;
    if (bit == 0) ++total;
  }
  return total;
}

// C(n,k)_F mod 2 as the product of digit Fibonomials over base F expansions.
inline Residue lucas_fibonomial_mod2(const Natural& n, const Natural& k) {
  const auto base = MixedRadixBase::base_f();
  const std::uint64_t product = detail::digit_fibonomial_product(expand(n, base), expand(k, base), 2);
  if (k > n && product != 0)
    throw std::logic_error("lucas_fibonomial_mod2: k > n without a dominating digit");
  return Residue(product, 2);
}

// C(n,k)_F mod 3 by recursive descent on rows.
//
// With B = 4*3^m the largest such value <= n:
//   B  <= n < 2B:  C(n,k) = (-1)^k C(n-B, k)                   for k < B
//   2B <= n < 3B:  C(n,k) = C(n-2B, k)                         for k < B
//                  C(n,k) = -(-1)^(n-2B) C(n-2B, k-B)          for B <= k < 2B
// and every other k is reached through C(n,k) = C(n,n-k).
inline Residue fibonomial_mod3_fast(const Natural& n_in, const Natural& k_in) {
  Natural n = n_in, k = k_in;
  bool negate = false;
  bool mirrored = false;
  const Natural four(4U);
  while (true) {
    if (k > n) return Residue(0, 3);
    if (n < four) {
      const std::uint64_t v = detail::kSmallFibonomial[n.to_u64()][k.to_u64()] % 3;
      return negate ? -Residue(v, 3) : Residue(v, 3);
    }
    Natural block = four;
    for (Natural next = block * Natural(3U); next <= n; next = block * Natural(3U)) block = std::move(next);
    const Natural twice = block + block;

    if (n < twice) {
      if (k < block) {
        if (k.is_odd()) negate = !negate;
        n -= block;
        mirrored = false;
        continue;
      }
    } else {
      if (k < block) {
        n -= twice;
        mirrored = false;
        continue;
      }
      if (k < twice) {
        n -= twice;
        k -= block;
        if (!n.is_odd()) negate = !negate;
        mirrored = false;
        continue;
      }
    }
    // Not inside a congruence range: reflect once. A second reflection in a
    // row would mean some cell is not determined by symmetry.
    if (mirrored) throw std::logic_error("fibonomial_mod3_fast: cell not covered by symmetry");
    k = n - k;
    mirrored = true;
  }
}

struct Mismatch {
  std::string check;
  Index n = 0;
  Index k = 0;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
};

struct ReportSection {
  std::string name;
  std::uint64_t cells = 0;
};

// cells_checked counts the cells of the theorem's own range; sections break
// the work down, including structural checks outside that range.
struct SelfSimilarityReport {
  std::uint64_t modulus = 0;
  std::uint64_t level = 0;
  std::uint64_t cells_checked = 0;
  std::vector<ReportSection> sections;
  std::vector<Mismatch> mismatches;

  bool verified() const noexcept { return mismatches.empty(); }

  std::uint64_t section_cells(const std::string& name) const {
    for (const auto& s : sections)
      if (s.name == name) return s.cells;
    return 0;
  }
};

namespace detail {
inline void expect_equal(SelfSimilarityReport& report, ReportSection& section, const char* check, Index n, Index k,
                         std::uint64_t expected, std::uint64_t got) {
  ++section.cells;
  if (expected != got) report.mismatches.push_back({check, n, k, expected, got});
}

inline std::uint64_t checked_shift(std::uint64_t factor, std::uint64_t level, std::uint64_t radix) {
  std::uint64_t v = factor;
  for (std::uint64_t i = 0; i < level; ++i) {
    if (v > (1ULL << 40)) throw std::invalid_argument("self-similarity level too large");
    v *= radix;
  }
  return v;
}
}  // namespace detail

// C(n + 3*2^m, k)_F = C(n,k)_F (mod 2) for 0 <= n,k < 3*2^m, plus the
// right-hand copy C(n + 3*2^m, k)_F = C(n, k - 3*2^m)_F and the zero
// triangle between the copies.
inline SelfSimilarityReport verify_self_similarity_mod2(std::uint64_t m) {
  const Index side = detail::checked_shift(3, m, 2);
  SelfSimilarityReport report;
  report.modulus = 2;
  report.level = m;
  ReportSection duplication{"duplication"}, zeros{"zero triangle"}, right{"right copy"};
  for (Index n = 0; n < side; ++n) {
    for (Index k = 0; k < side; ++k) {
      const auto ks = static_cast<std::int64_t>(k);
      detail::expect_equal(report, duplication, "duplication", n + side, k, fibonomial_mod(n, ks, 2),
                           fibonomial_mod(n + side, ks, 2));
      if (k > n) detail::expect_equal(report, zeros, "zero triangle", n + side, k, 0, fibonomial_mod(n + side, ks, 2));
    }
    for (Index k = side; k <= n + side; ++k) {
      detail::expect_equal(report, right, "right copy", n + side, k,
                           fibonomial_mod(n, static_cast<std::int64_t>(k - side), 2),
                           fibonomial_mod(n + side, static_cast<std::int64_t>(k), 2));
    }
  }
  report.cells_checked = duplication.cells;
  report.sections = {duplication, zeros, right};
  return report;
}

// C(n + 2^m, k) = C(n,k) (mod 2) for 0 <= n,k < 2^m.
inline SelfSimilarityReport verify_pascal_mod2(std::uint64_t m) {
  const Index side = detail::checked_shift(1, m, 2);
  SelfSimilarityReport report;
  report.modulus = 2;
  report.level = m;
  ReportSection section{"duplication"};
  for (Index n = 0; n < side; ++n)
    for (Index k = 0; k < side; ++k)
      detail::expect_equal(report, section, "duplication", n + side, k,
                           binomial(n, static_cast<std::int64_t>(k)).mod(2),
                           binomial(n + side, static_cast<std::int64_t>(k)).mod(2));
  report.cells_checked = section.cells;
  report.sections = {section};
  return report;
}

// The three mod-3 congruences on side B = 4*3^m, and the claim that every
// remaining cell of rows B .. 3B-1 mirrors a cell they cover.
inline SelfSimilarityReport verify_self_similarity_mod3(std::uint64_t m) {
  const Index block = detail::checked_shift(4, m, 3);
  SelfSimilarityReport report;
  report.modulus = 3;
  report.level = m;
  ReportSection first{"congruence 1"}, second{"congruence 2"}, third{"congruence 3"}, symmetry{"symmetry"};
  const auto neg = [](std::uint64_t r) { return (3 - r) % 3; };
  for (Index n = 0; n < block; ++n) {
    for (Index k = 0; k < block; ++k) {
      const auto ks = static_cast<std::int64_t>(k);
      const std::uint64_t base = fibonomial_mod(n, ks, 3);
      detail::expect_equal(report, first, "congruence 1", n + block, k, k % 2 == 0 ? base : neg(base),
                           fibonomial_mod(n + block, ks, 3));
      detail::expect_equal(report, second, "congruence 2", n + 2 * block, k, base,
                           fibonomial_mod(n + 2 * block, ks, 3));
      detail::expect_equal(report, third, "congruence 3", n + 2 * block, k + block, n % 2 == 0 ? neg(base) : base,
                           fibonomial_mod(n + 2 * block, ks + static_cast<std::int64_t>(block), 3));
    }
  }
  // Cells (row, k) covered above: rows [B, 2B) with k < B, rows [2B, 3B) with k < 2B.
  const auto covered = [block](Index row, Index k) { return row < 2 * block ? k < block : k < 2 * block; };
  for (Index row = block; row < 3 * block; ++row) {
    for (Index k = 0; k <= row; ++k) {
      if (covered(row, k)) continue;
      if (!covered(row, row - k)) {
        ++symmetry.cells;
        report.mismatches.push_back({"coverage", row, k, 0, 0});
        continue;
      }
      detail::expect_equal(report, symmetry, "symmetry", row, k,
                           fibonomial_mod(row, static_cast<std::int64_t>(row - k), 3),
                           fibonomial_mod(row, static_cast<std::int64_t>(k), 3));
    }
  }
  report.cells_checked = first.cells + second.cells + third.cells;
  report.sections = {first, second, third, symmetry};
  return report;
}

enum class SignClass { plus, minus, both, neither };

inline const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::plus:
      return "+";
    case SignClass::minus:
      return "-";
    case SignClass::both:
      return "both";
    case SignClass::neither:
      return "neither";
  }
  return "?";
}

struct SignRow {
  Index n = 0;
  Index k = 0;
  std::uint64_t lhs = 0;      // C(n,k)_F mod 3
  std::uint64_t product = 0;  // digit product over base T, mod 3
  SignClass sign = SignClass::neither;
};

// Compares C(n,k)_F mod 3 with the base-T digit product for 0 <= k <= n <= n_max
// and records which sign, if any, relates them. No rule for the sign is assumed.
inline std::vector<SignRow> mod3_sign_experiment(Index n_max) {
  const auto base = MixedRadixBase::base_t();
  std::vector<SignRow> rows;
  rows.reserve((n_max + 1) * (n_max + 2) / 2);
  for (Index n = 0; n <= n_max; ++n) {
    const DigitVector nd = expand(Natural(n), base);
    for (Index k = 0; k <= n; ++k) {
      SignRow row{.n = n, .k = k};
      row.lhs = fibonomial_mod(n, static_cast<std::int64_t>(k), 3);
      row.product = detail::digit_fibonomial_product(nd, expand(Natural(k), base), 3);
      const bool plus = row.lhs == row.product;
      const bool minus = row.lhs == (3 - row.product) % 3;
      row.sign = plus && minus ? SignClass::both
                               : plus ? SignClass::plus : minus ? SignClass::minus : SignClass::neither;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace fibfractal
