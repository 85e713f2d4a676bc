#pragma once

// Timing of C(n,k)_F mod 2 by base-F digits against exact computation.

#include "fibfractal/congruence.hpp"
#include "fibfractal/exact_core.hpp"

#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibfractal {

struct BenchMethod {
  std::string name;
  double seconds = 0.0;
};

struct BenchReport {
  Index n_max = 0;
  std::uint64_t trials = 0;
  std::vector<BenchMethod> methods;  // methods[0] is the digit evaluator
  bool agreement = false;

  // Time of methods[i] divided by the digit evaluator's time.
  double speedup(std::size_t i) const {
    const double digit = methods.at(0).seconds;
    return digit > 0 ? methods.at(i).seconds / digit : 0.0;
  }
};

// Largest n for which the big-integer Fibotorial quotient is included.
inline constexpr Index kBenchExactLimit = 1000;

// Runs every method on the same random pairs (n uniform in [0, n_max], k
// uniform in [0, n]) and throws std::runtime_error if any two disagree, so
// a returned report always has agreement == true. The exact quotient method
// runs only when n_max <= kBenchExactLimit; the 2-adic valuation-sum method
// always runs.
inline BenchReport run_bench(Index n_max, std::uint64_t trials, std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("run_bench: n-max must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Index n = std::uniform_int_distribution<Index>(0, n_max)(rng);
    pairs.emplace_back(n, std::uniform_int_distribution<Index>(0, n)(rng));
  }

  using Clock = std::chrono::steady_clock;
  const auto seconds_since = [](Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  BenchReport report;
  report.n_max = n_max;
  report.trials = trials;
  std::vector<std::vector<std::uint64_t>> results;

  {
    std::vector<std::uint64_t> out;
    out.reserve(trials);
    const auto start = Clock::now();
    for (const auto& [n, k] : pairs) out.push_back(lucas_fibonomial_mod2(Natural(n), Natural(k)).value());
    report.methods.push_back({"base-F digit product", seconds_since(start)});
    results.push_back(std::move(out));
  }
  {
    std::vector<std::uint64_t> out;
    out.reserve(trials);
    const auto start = Clock::now();
    const FibonacciValuationTable table(n_max);
    for (const auto& [n, k] : pairs) out.push_back(table.fibonomial_parity(n, k));
    report.methods.push_back({"2-adic valuation sums", seconds_since(start)});
    results.push_back(std::move(out));
  }
  if (n_max <= kBenchExactLimit) {
    std::vector<std::uint64_t> out;
    out.reserve(trials);
    const auto start = Clock::now();
    std::vector<Natural> fibotorials{Natural(1U)};
    Natural prev = 0U, cur = 1U;
    for (Index i = 1; i <= n_max; ++i) {
      fibotorials.push_back(fibotorials.back() * cur);
      Natural next = prev + cur;
      prev = std::move(cur);
      cur = std::move(next);
    }
    for (const auto& [n, k] : pairs)
      out.push_back(exact_div(fibotorials[n], fibotorials[k] * fibotorials[n - k]).mod(2));
    report.methods.push_back({"exact big-integer quotient", seconds_since(start)});
    results.push_back(std::move(out));
  }

  for (std::size_t m = 1; m < results.size(); ++m)
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (results[m][i] != results[0][i])
        throw std::runtime_error("run_bench: " + report.methods[m].name + " disagrees at (" +
                                 std::to_string(pairs[i].first) + ", " + std::to_string(pairs[i].second) + ")");
  report.agreement = true;
  return report;
}

}  // namespace fibfractal
