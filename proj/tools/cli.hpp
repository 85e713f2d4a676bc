#pragma once

// Command-line front end for the fibfractal library.
//
//   fibfractal <command> [args] [--mod M] [--fast] [--balanced]
//              [--format text|pbm|pgm|csv] [--out PATH] [--m LEVEL] [--n-max N]
//
// Exit codes: 0 success or verified, 1 verification mismatch, 2 usage error.

#include "fibfractal/fibfractal.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibfractal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Thrown for malformed or unsupported requests; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Rows up to which exact Fibonomials come from the shared memo table; beyond
// it a single value is computed from the Fibotorial quotient.
inline constexpr Index kMemoRowLimit = 500;

namespace detail {

struct Options {
  std::string kind;
  std::vector<std::string> args;
  std::optional<std::uint64_t> mod;
  bool fast = false;
  bool balanced = false;
  std::string format = "text";
  std::string triangle_kind = "fibonomial";
  std::string out_path;
  std::optional<std::uint64_t> level;
  std::optional<std::uint64_t> n_max;
  std::uint64_t samples = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
};

inline Index parse_index(const std::string& text, const char* what) {
  try {
    const Natural n = Natural::parse(text);
    return n.to_u64();
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a nonnegative integer: '" + text + "'");
  }
}

inline Natural parse_natural(const std::string& text, const char* what) {
  try {
    return Natural::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be a nonnegative integer: '" + text + "'");
  }
}

inline Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError(std::string(what) + " must be an integer: '" + text + "'");
  return v;
}

inline void print_residue(std::ostream& out, std::uint64_t value, std::uint64_t modulus, bool balanced) {
  if (balanced) out << Residue(value, modulus).balanced() << '\n';
  else out << value << '\n';
}

inline void print_value(std::ostream& out, const Natural& value, const Options& o) {
  if (o.mod) print_residue(out, value.mod(*o.mod), *o.mod, o.balanced);
  else out << value << '\n';
}

inline void require_args(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.args.size() < lo || o.args.size() > hi)
    throw UsageError(o.kind + ": expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                     " argument(s), got " + std::to_string(o.args.size()));
}

inline int cmd_compute(const Options& o, std::ostream& out) {
  if (o.mod && *o.mod < 2) throw UsageError("--mod must be at least 2");
  if (o.balanced && !o.mod) throw UsageError("--balanced requires --mod");
  if (o.fast && !o.mod) throw UsageError("--fast requires --mod");

  if (o.kind == "fib") {
    require_args(o, 1, 1);
    const Index n = parse_index(o.args[0], "N");
    if (o.fast) {
      if (*o.mod != 2) throw UsageError("fib --fast supports only --mod 2");
      print_residue(out, fib_parity(n), 2, o.balanced);
      return kExitOk;
    }
    print_value(out, fib(n), o);
    return kExitOk;
  }
  if (o.kind == "fibonomial") {
    require_args(o, 2, 2);
    const bool negative_k = !o.args[1].empty() && o.args[1][0] == '-';
    if (negative_k) parse_integer(o.args[1], "K");
    if (o.fast) {
      if (*o.mod != 2 && *o.mod != 3) throw UsageError("fibonomial --fast supports only --mod 2 or --mod 3");
      if (negative_k) {
        print_residue(out, 0, *o.mod, o.balanced);
        return kExitOk;
      }
      const Natural n = parse_natural(o.args[0], "N"), k = parse_natural(o.args[1], "K");
      const Residue r = *o.mod == 2 ? lucas_fibonomial_mod2(n, k) : fibonomial_mod3_fast(n, k);
      print_residue(out, r.value(), r.modulus(), o.balanced);
      return kExitOk;
    }
    const Index n = parse_index(o.args[0], "N");
    if (negative_k) {
      print_value(out, Natural(0U), o);
      return kExitOk;
    }
    const Index k = parse_index(o.args[1], "K");
    if (k > n) print_value(out, Natural(0U), o);
    else if (n <= kMemoRowLimit) print_value(out, fibonomial(n, static_cast<std::int64_t>(k)), o);
    else print_value(out, fibonomial_via_quotient(n, k), o);
    return kExitOk;
  }
  if (o.fast) throw UsageError(o.kind + " does not support --fast");
  if (o.kind == "fibotorial") {
    require_args(o, 1, 1);
    print_value(out, fibotorial(parse_index(o.args[0], "N")), o);
    return kExitOk;
  }
  if (o.kind == "catalan") {
    require_args(o, 1, 1);
    print_value(out, catalan(parse_index(o.args[0], "N")), o);
    return kExitOk;
  }
  if (o.kind == "st-catalan") {
    require_args(o, 1, 3);
    if (o.args.size() == 2) throw UsageError("st-catalan: give both S and T or neither");
    const STPolynomial poly = st_catalan(parse_index(o.args[0], "N"));
    if (o.args.size() == 1) {
      if (o.mod) throw UsageError("st-catalan: --mod needs S and T to evaluate");
      out << poly.to_string() << '\n';
      return kExitOk;
    }
    const Integer value = poly.evaluate(parse_integer(o.args[1], "S"), parse_integer(o.args[2], "T"));
    if (o.mod) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), *o.mod);
      print_residue(out, r.get_ui(), *o.mod, o.balanced);
    } else {
      out << value << '\n';
    }
    return kExitOk;
  }
  throw UsageError("unknown command " + o.kind);
}

inline int cmd_triangle(const Options& o, std::ostream& out) {
  require_args(o, 1, 1);
  const Index rows = parse_index(o.args[0], "ROWS");
  const std::uint64_t modulus = o.mod.value_or(2);
  if (rows < 1) throw UsageError("triangle: ROWS must be at least 1");
  if (modulus < 2) throw UsageError("--mod must be at least 2");
  if (o.format == "pbm" && modulus != 2) throw UsageError("triangle: pbm format requires --mod 2");
  if (o.fast) throw UsageError("triangle does not support --fast");
  TriangleKind kind;
  if (o.triangle_kind == "fibonomial") kind = TriangleKind::fibonomial;
  else if (o.triangle_kind == "binomial") kind = TriangleKind::binomial;
  else throw UsageError("triangle: --kind must be fibonomial or binomial");

  const TriangleGrid grid = build_triangle(kind, rows, modulus);
  if (const auto bad = spot_check(grid); !bad.empty())
    throw std::logic_error("triangle: rendered cell (" + std::to_string(bad[0].n) + ", " + std::to_string(bad[0].k) +
                           ") disagrees with exact arithmetic");

  std::string text;
  if (o.format == "text") text = render_text(grid, o.balanced);
  else if (o.format == "csv") text = render_csv(grid, o.balanced);
  else if (o.format == "pbm") text = render_pbm(grid);
  else if (o.format == "pgm") text = render_pgm(grid);
  else throw UsageError("--format must be text, pbm, pgm or csv");

  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + o.out_path);
    file << text;
  }
  return kExitOk;
}

// Collects mismatch lines and prints a summary.
class Tally {
 public:
  explicit Tally(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    out_ << "MISMATCH " << what << '\n';
  }

  void add_report(const SelfSimilarityReport& r) {
    out_ << "level " << r.level << " (mod " << r.modulus << "): " << r.cells_checked << " cells";
    for (const auto& s : r.sections) out_ << ", " << s.name << " " << s.cells;
    out_ << ", " << r.mismatches.size() << " mismatches\n";
    for (const auto& m : r.mismatches)
      out_ << "MISMATCH [" << m.check << "] n=" << m.n << " k=" << m.k << " expected=" << m.expected
           << " got=" << m.got << '\n';
    checked_ += r.cells_checked;
    failed_ += r.mismatches.size();
  }

  int finish(const std::string& name) {
    out_ << name << ": " << checked_ << " checks, " << failed_ << " mismatches\n";
    return failed_ == 0 ? kExitOk : kExitMismatch;
  }

 private:
  std::ostream& out_;
  std::uint64_t checked_ = 0;
  std::uint64_t failed_ = 0;
};

inline std::string cell(Index n, Index k) { return "(" + std::to_string(n) + ", " + std::to_string(k) + ")"; }

inline int cmd_verify(const Options& o, std::ostream& out) {
  require_args(o, 1, 1);
  const std::string& which = o.args[0];
  Tally tally(out);
  const auto bound = [&](std::uint64_t def, std::uint64_t cap, const char* flag) {
    const std::uint64_t v = (std::string(flag) == "--m" ? o.level : o.n_max).value_or(def);
    if (v > cap) throw UsageError("verify " + which + ": " + flag + " is limited to " + std::to_string(cap));
    return v;
  };

  if (which == "main" || which == "mod3" || which == "pascal") {
    const std::uint64_t top = which == "main" ? bound(4, 7, "--m") : which == "mod3" ? bound(2, 3, "--m") : bound(8, 12, "--m");
    for (std::uint64_t m = 0; m <= top; ++m)
      tally.add_report(which == "main"   ? verify_self_similarity_mod2(m)
                       : which == "mod3" ? verify_self_similarity_mod3(m)
                                         : verify_pascal_mod2(m));
  } else if (which == "ss") {
    const Index n_max = bound(12, 16, "--n-max");
    for (Index n = 0; n <= n_max; ++n)
      for (Index k = 0; k <= n; ++k) {
        const Natural expected = fibonomial(n, static_cast<std::int64_t>(k));
        tally.check(sagan_savage_count(n, k) == expected, "product-formula count " + cell(n, k));
        if (n <= 8) tally.check(sagan_savage_count_enumerated(n, k) == expected, "enumerated count " + cell(n, k));
      }
  } else if (which == "lattice") {
    const Index n_max = bound(60, 200, "--n-max");
    for (Index n = 0; n <= n_max; ++n)
      for (Index k = 0; k <= n; ++k) {
        const Natural paths = lattice_fixed_points(n, k);
        tally.check(paths == lattice_lemma_rhs(n, k), "lattice paths vs closed form " + cell(n, k));
        tally.check(paths.mod(2) == fibonomial_mod(n, static_cast<std::int64_t>(k), 2), "lattice parity " + cell(n, k));
      }
  } else if (which == "kw") {
    const Index n_max = bound(300, 600, "--n-max");
    for (Index total = 0; total <= n_max; ++total)
      for (Index m = 0; m <= total; ++m)
        tally.check(knuth_wilf_nu2_fibonomial(Natural(m), Natural(total - m)) ==
                        nu(fibonomial(total, static_cast<std::int64_t>(m)), 2),
                    "carry count " + cell(m, total - m));
  } else if (which == "lucf") {
    const Index n_max = bound(300, 600, "--n-max");
    for (Index n = 0; n <= n_max; ++n)
      for (Index k = 0; k <= n; ++k)
        tally.check(lucas_fibonomial_mod2(Natural(n), Natural(k)).value() ==
                        fibonomial_mod(n, static_cast<std::int64_t>(k), 2),
                    "digit product " + cell(n, k));
    if (o.samples > 0) {
      constexpr Index kSampleMax = 1'000'000;
      const FibonacciValuationTable table(kSampleMax);
      std::mt19937_64 rng(o.seed);
      for (std::uint64_t i = 0; i < o.samples; ++i) {
        const Index n = std::uniform_int_distribution<Index>(0, kSampleMax)(rng);
        const Index k = std::uniform_int_distribution<Index>(0, n)(rng);
        tally.check(lucas_fibonomial_mod2(Natural(n), Natural(k)).value() == table.fibonomial_parity(n, k),
                    "sampled digit product " + cell(n, k));
      }
    }
  } else if (which == "nu2-catalan") {
    const Index n_max = bound(1000, 5000, "--n-max");
    for (Index n = 0; n <= n_max; ++n) {
      const auto c = check_nu2_catalan(n);
      tally.check(c.ok, "n=" + std::to_string(n) + " claimed=" + std::to_string(c.claimed) +
                            " actual=" + std::to_string(c.actual));
    }
  } else if (which == "nu2-st-catalan") {
    const Index n_max = bound(60, 80, "--n-max");
    const std::vector<std::pair<long, long>> params{{1, 1}, {3, 1}, {1, 9}, {5, 17}};
    for (Index n = 0; n <= n_max; ++n) {
      const STPolynomial poly = st_catalan(n);
      for (const auto& [s, t] : params) {
        const auto c = check_nu2_st_catalan(poly, n, Integer(s), Integer(t));
        tally.check(c.ok, "n=" + std::to_string(n) + " s=" + std::to_string(s) + " t=" + std::to_string(t) +
                              " claimed=" + std::to_string(c.claimed) + " actual=" + std::to_string(c.actual));
      }
    }
  } else if (which == "sign3") {
    const Index n_max = bound(40, 200, "--n-max");
    std::uint64_t counts[4] = {0, 0, 0, 0};
    out << "n k lhs product sign\n";
    for (const SignRow& row : mod3_sign_experiment(n_max)) {
      ++counts[static_cast<int>(row.sign)];
      out << row.n << ' ' << row.k << ' ' << row.lhs << ' ' << row.product << ' ' << to_string(row.sign) << '\n';
      tally.check(row.sign != SignClass::neither, "no sign relates " + cell(row.n, row.k));
    }
    out << "plus " << counts[0] << ", minus " << counts[1] << ", both " << counts[2] << ", neither " << counts[3] << '\n';
  } else {
    throw UsageError("verify: unknown check '" + which +
                     "' (main, mod3, pascal, ss, lattice, kw, lucf, nu2-catalan, nu2-st-catalan, sign3)");
  }
  return tally.finish("verify " + which);
}

inline int cmd_bench(const Options& o, std::ostream& out) {
  const Index n_max = o.n_max.value_or(1000);
  if (n_max < 1) throw UsageError("bench: --n-max must be at least 1");
  const BenchReport report = run_bench(n_max, o.trials, o.seed);
  out << "pairs " << report.trials << ", n <= " << report.n_max << ", agreement "
      << (report.agreement ? "yes" : "no") << '\n';
  out << std::fixed << std::setprecision(6);
  for (std::size_t i = 0; i < report.methods.size(); ++i) {
    out << report.methods[i].name << ": " << report.methods[i].seconds << " s";
    if (i > 0) out << " (digit evaluator speedup " << std::setprecision(2) << report.speedup(i) << "x)" << std::setprecision(6);
    out << '\n';
  }
  return kExitOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonomial coefficients and their fractal congruences", "fibfractal"};
  app.require_subcommand(1);
  detail::Options o;

  const auto add_mod = [&](CLI::App* sub) { sub->add_option("--mod", o.mod, "Reduce modulo M"); };
  const auto add_level = [&](CLI::App* sub) { sub->add_option("--m", o.level, "Largest level to verify"); };
  const auto add_n_max = [&](CLI::App* sub) { sub->add_option("--n-max", o.n_max, "Largest n to use"); };

  for (const char* name : {"fib", "fibotorial", "fibonomial", "catalan", "st-catalan"}) {
    auto* sub = app.add_subcommand(name, std::string("Compute ") + name);
    sub->add_option("args", o.args, "Arguments")->required();
    add_mod(sub);
    sub->add_flag("--fast", o.fast, "Use the digit/recursive evaluators (mod 2 or 3)");
    sub->add_flag("--balanced", o.balanced, "Print residues in balanced form, e.g. -1 for 2 mod 3");
  }
  auto* triangle = app.add_subcommand("triangle", "Render the first ROWS rows of a triangle mod M");
  triangle->add_option("args", o.args, "ROWS")->required();
  add_mod(triangle);
  triangle->add_flag("--fast", o.fast);
  triangle->add_flag("--balanced", o.balanced, "Balanced residues in text and csv output");
  triangle->add_option("--format", o.format, "text, pbm, pgm or csv");
  triangle->add_option("--kind", o.triangle_kind, "fibonomial or binomial");
  triangle->add_option("--out", o.out_path, "Write to PATH instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check a congruence or counting identity against exact arithmetic");
  verify->add_option("args", o.args, "Which check")->required();
  add_level(verify);
  add_n_max(verify);
  verify->add_option("--samples", o.samples, "lucf: extra random pairs with n <= 10^6");
  verify->add_option("--seed", o.seed, "Random seed");

  auto* bench = app.add_subcommand("bench", "Time digit evaluation of C(n,k)_F mod 2 against exact arithmetic");
  add_n_max(bench);
  bench->add_option("--trials", o.trials, "Number of random pairs");
  bench->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  o.kind = chosen->get_name();
  try {
    if (o.kind == "triangle") return detail::cmd_triangle(o, out);
    if (o.kind == "verify") return detail::cmd_verify(o, out);
    if (o.kind == "bench") return detail::cmd_bench(o, out);
    return detail::cmd_compute(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace fibfractal::cli
