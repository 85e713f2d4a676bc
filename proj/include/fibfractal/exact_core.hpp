#pragma once

// Exact Fibonacci numbers, Fibotorials, Fibonomial and binomial coefficients,
// p-adic valuations and the rank of apparition.

#include "fibfractal/natural.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibfractal {

using Index = std::uint64_t;

// F_n by fast doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
inline Natural fib(Index n) {
  Integer a = 0, b = 1;  // (F_k, F_{k+1}) with k = 0
  for (int bit = 63; bit >= 0; --bit) {
    const Integer c = a * (2 * b - a);
    const Integer d = a * a + b * b;
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return Natural(std::move(a));
}

inline Natural fibotorial(Index n) {
  Natural product = 1U;
  Natural prev = 0U, cur = 1U;  // (F_{i-1}, F_i) with i = 1
  for (Index i = 1; i <= n; ++i) {
    product *= cur;
    Natural next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return product;
}

// Parity of F_n: F_n is even exactly when 3 divides n.
constexpr unsigned fib_parity(Index n) noexcept { return n % 3 == 0 ? 0U : 1U; }

// Memo table of Fibonomial coefficients built row by row from
//   C(n,k)_F = F_{n-k+1} C(n-1,k-1)_F + F_{k-1} C(n-1,k)_F.
// Only 0 <= k <= n/2 is stored; the other half follows from symmetry.
// Not synchronized: use one table per thread, or the locked global below.
class FibonomialTable {
 public:
  FibonomialTable() {
    rows_.push_back({Natural(1U)});
    fibs_ = {Natural(0U), Natural(1U)};
  }

  // The reference stays valid until a later call grows the table.
  const Natural& operator()(Index n, std::int64_t k) {
    static const Natural zero;
    if (k < 0 || static_cast<Index>(k) > n) return zero;
    grow_to(n);
    return stored(n, static_cast<Index>(k));
  }

  Index rows() const noexcept { return rows_.size(); }

 private:
  const Natural& stored(Index n, Index k) const {
    if (2 * k > n) k = n - k;
    return rows_[n][k];
  }

  const Natural& fibonacci(Index i) {
    while (fibs_.size() <= i) fibs_.push_back(fibs_[fibs_.size() - 1] + fibs_[fibs_.size() - 2]);
    return fibs_[i];
  }

  void grow_to(Index n) {
    while (rows_.size() <= n) {
      const Index row = rows_.size();
      std::vector<Natural> next(row / 2 + 1);
      next[0] = Natural(1U);
      for (Index k = 1; k <= row / 2; ++k) {
        Natural left = fibonacci(row - k + 1) * stored(row - 1, k - 1);
        const Natural& right = stored(row - 1, k);
        if (!right.is_zero()) left += fibonacci(k - 1) * right;
        next[k] = std::move(left);
      }
      rows_.push_back(std::move(next));
    }
  }

  std::vector<std::vector<Natural>> rows_;
  std::vector<Natural> fibs_;
};

namespace detail {
inline FibonomialTable& shared_table() {
  static FibonomialTable table;
  return table;
}
inline std::mutex& shared_table_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

// Exact Fibonomial coefficient; zero for k < 0 or k > n. Backed by a
// process-wide memo table guarded by a mutex.
inline Natural fibonomial(Index n, std::int64_t k) {
  if (k < 0 || static_cast<Index>(k) > n) return Natural(0U);
  std::scoped_lock lock(detail::shared_table_mutex());
  return detail::shared_table()(n, k);
}

inline std::uint64_t fibonomial_mod(Index n, std::int64_t k, std::uint64_t m) {
  if (k < 0 || static_cast<Index>(k) > n) return 0;
  std::scoped_lock lock(detail::shared_table_mutex());
  return detail::shared_table()(n, k).mod(m);
}

// Definition-level oracle n!_F / (k!_F (n-k)!_F).
inline Natural fibonomial_via_quotient(Index n, Index k) {
  if (k > n) throw std::invalid_argument("fibonomial_via_quotient: requires k <= n");
  return exact_div(fibotorial(n), fibotorial(k) * fibotorial(n - k));
}

inline Natural binomial(Index n, std::int64_t k) {
  if (k < 0 || static_cast<Index>(k) > n) return Natural(0U);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return Natural(std::move(r));
}

inline Natural catalan(Index n) { return exact_div(binomial(2 * n, static_cast<std::int64_t>(n)), Natural(n + 1)); }

// Largest e with p^e | x.
inline std::uint64_t nu(const Natural& x, std::uint64_t p) {
  if (x.is_zero()) throw std::domain_error("nu: valuation of zero is undefined");
  if (p < 2) throw std::invalid_argument("nu: base must be at least 2");
  if (p == 2) return x.trailing_zeros();
  Natural rest = x;
  std::uint64_t e = 0;
  while (rest.mod(p) == 0) {
    rest.divmod_inplace(p);
    ++e;
  }
  return e;
}

// Least n > 0 with p | F_n, scanning (F_n, F_{n+1}) mod p.
inline Index rank_of_apparition(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("rank_of_apparition: p must be >= 2");
  if (p > (1ULL << 30)) throw std::invalid_argument("rank_of_apparition: p too large");
  const std::uint64_t cap = 6 * p * p;
  std::uint64_t a = 1 % p, b = 1 % p;  // (F_1, F_2)
  for (Index n = 1; n <= cap; ++n) {
    if (a == 0) return n;
    const std::uint64_t c = (a + b) % p;
    a = b;
    b = c;
  }
  throw std::runtime_error("rank_of_apparition: scan exceeded 6p^2 steps for p = " +
                           std::to_string(p));
}

// 2-adic valuations of Fibonomial coefficients for all n up to a bound,
// from prefix sums of nu_2(F_i). nu_2(F_i) is read off F_i mod 2^64, which is
// exact because nu_2(F_i) <= log2(i) + 2 stays far below 64.
class FibonacciValuationTable {
 public:
  explicit FibonacciValuationTable(Index max_n) : prefix_(max_n + 1, 0) {
    std::uint64_t prev = 0, cur = 1;  // F_0, F_1 mod 2^64
    for (Index i = 1; i <= max_n; ++i) {
      if (cur == 0) throw std::runtime_error("FibonacciValuationTable: F_i vanished mod 2^64");
      prefix_[i] = prefix_[i - 1] + static_cast<std::uint64_t>(__builtin_ctzll(cur));
      const std::uint64_t next = prev + cur;
      prev = cur;
      cur = next;
    }
  }

  Index max_n() const noexcept { return prefix_.size() - 1; }

  std::uint64_t nu2_fibotorial(Index n) const { return prefix_.at(n); }

  std::uint64_t nu2_fibonomial(Index n, Index k) const {
    if (k > n) throw std::invalid_argument("nu2_fibonomial: requires k <= n");
    return prefix_.at(n) - prefix_.at(k) - prefix_.at(n - k);
  }

  // C(n,k)_F mod 2; zero for k > n.
  unsigned fibonomial_parity(Index n, Index k) const {
    if (k > n) return 0;
    return nu2_fibonomial(n, k) == 0 ? 1U : 0U;
  }

 private:
  std::vector<std::uint64_t> prefix_;
};

}  // namespace fibfractal
