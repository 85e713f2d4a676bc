#pragma once

// Residue triangles of Fibonomial or binomial coefficients and their text,
// PBM, PGM and CSV renderings.

#include "fibfractal/congruence.hpp"
#include "fibfractal/exact_core.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibfractal {

enum class TriangleKind { fibonomial, binomial };

struct TriangleGrid {
  Index rows = 0;
  std::uint64_t modulus = 2;
  TriangleKind kind = TriangleKind::fibonomial;
  std::vector<std::vector<std::uint64_t>> cells;  // cells[n] has n + 1 entries

  std::uint64_t at(Index n, Index k) const { return k > n ? 0 : cells.at(n).at(k); }
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Largest row whose cells are compared with exact big-integer values.
inline constexpr Index kSpotCheckRowLimit = 200;

inline std::uint64_t exact_cell(TriangleKind kind, Index n, Index k, std::uint64_t m) {
  const auto ks = static_cast<std::int64_t>(k);
  return kind == TriangleKind::fibonomial ? fibonomial_mod(n, ks, m) : binomial(n, ks).mod(m);
}

}  // namespace detail

// Row recurrences reduced mod m: Pascal's rule for binomials and
//   C(n,k)_F = F_{n-k+1} C(n-1,k-1)_F + F_{k-1} C(n-1,k)_F
// for Fibonomials, both exact identities over the integers.
inline TriangleGrid build_triangle(TriangleKind kind, Index rows, std::uint64_t modulus) {
  if (rows < 1) throw std::invalid_argument("build_triangle: need at least one row");
  if (modulus < 2) throw std::invalid_argument("build_triangle: modulus must be >= 2");
  TriangleGrid grid{rows, modulus, kind, {}};
  grid.cells.reserve(rows);

  std::vector<std::uint64_t> fib_mod(rows + 2);
  fib_mod[0] = 0;
  fib_mod[1] = 1 % modulus;
  for (std::size_t i = 2; i < fib_mod.size(); ++i) fib_mod[i] = (fib_mod[i - 1] + fib_mod[i - 2]) % modulus;

  grid.cells.push_back({1 % modulus});
  for (Index n = 1; n < rows; ++n) {
    const auto& prev = grid.cells[n - 1];
    std::vector<std::uint64_t> row(n + 1);
    for (Index k = 0; k <= n; ++k) {
      const std::uint64_t up_left = k > 0 ? prev[k - 1] : 0;
      const std::uint64_t up = k < n ? prev[k] : 0;
      if (kind == TriangleKind::binomial) {
        row[k] = (up_left + up) % modulus;
      } else {
        const std::uint64_t a = detail::mul_mod(fib_mod[n - k + 1], up_left, modulus);
        const std::uint64_t b = k > 0 ? detail::mul_mod(fib_mod[k - 1], up, modulus) : up;  // F_{-1} = 1
        row[k] = (a + b) % modulus;
      }
    }
    grid.cells.push_back(std::move(row));
  }
  return grid;
}

// Compares a handful of cells per row (edges, middle, quarter points) with
// exact values, for rows up to kSpotCheckRowLimit. Returns the mismatches.
inline std::vector<Mismatch> spot_check(const TriangleGrid& grid) {
  std::vector<Mismatch> out;
  const Index last = std::min<Index>(grid.rows, detail::kSpotCheckRowLimit + 1);
  for (Index n = 0; n < last; ++n) {
    for (Index k : {Index{0}, n / 4, n / 2, (3 * n) / 4, n}) {
      const std::uint64_t expected = detail::exact_cell(grid.kind, n, k, grid.modulus);
      if (expected != grid.at(n, k)) out.push_back({"spot check", n, k, expected, grid.at(n, k)});
    }
  }
  return out;
}

namespace detail {
inline std::string cell_label(std::uint64_t v, std::uint64_t modulus, bool balanced) {
  return balanced ? std::to_string(Residue(v, modulus).balanced()) : std::to_string(v);
}
}  // namespace detail

// Centered layout: labels right-aligned to a common width w, w spaces between
// cells and w spaces of indent per row above the last, so that each cell sits
// between the two cells above it.
inline std::string render_text(const TriangleGrid& grid, bool balanced) {
  std::size_t width = 1;
  for (const auto& row : grid.cells)
    for (std::uint64_t v : row) width = std::max(width, detail::cell_label(v, grid.modulus, balanced).size());
  std::ostringstream os;
  for (Index n = 0; n < grid.rows; ++n) {
    os << std::string((grid.rows - 1 - n) * width, ' ');
    for (Index k = 0; k <= n; ++k) {
      if (k > 0) os << std::string(width, ' ');
      const std::string label = detail::cell_label(grid.cells[n][k], grid.modulus, balanced);
      os << std::string(width - label.size(), ' ') << label;
    }
    os << '\n';
  }
  return os.str();
}

// ASCII P1 bitmap, rows x rows, row n in columns 0..n, 1 marks an odd entry.
inline std::string render_pbm(const TriangleGrid& grid) {
  if (grid.modulus != 2) throw std::invalid_argument("render_pbm: PBM output requires modulus 2");
  std::ostringstream os;
  os << "P1\n" << grid.rows << ' ' << grid.rows << '\n';
  for (Index n = 0; n < grid.rows; ++n) {
    for (Index x = 0; x < grid.rows; ++x) {
      if (x > 0) os << ' ';
      os << (x <= n ? grid.cells[n][x] : 0);
    }
    os << '\n';
  }
  return os.str();
}

// ASCII P2 graymap with maxval = modulus - 1; the gray level is the residue.
inline std::string render_pgm(const TriangleGrid& grid) {
  std::ostringstream os;
  os << "P2\n" << grid.rows << ' ' << grid.rows << '\n' << grid.modulus - 1 << '\n';
  for (Index n = 0; n < grid.rows; ++n) {
    for (Index x = 0; x < grid.rows; ++x) {
      if (x > 0) os << ' ';
      os << (x <= n ? grid.cells[n][x] : 0);
    }
    os << '\n';
  }
  return os.str();
}

inline std::string render_csv(const TriangleGrid& grid, bool balanced) {
  std::ostringstream os;
  for (Index n = 0; n < grid.rows; ++n) {
    for (Index k = 0; k <= n; ++k) {
      if (k > 0) os << ',';
      os << detail::cell_label(grid.cells[n][k], grid.modulus, balanced);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fibfractal
