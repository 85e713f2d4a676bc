#pragma once

// Monomino/domino tilings of rows and of Ferrers diagrams in a box, the
// parity involution on tilings, and the tiling and lattice-path counts that
// reproduce Fibonomial coefficients and their parities.

#include "fibfractal/exact_core.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibfractal {

enum class Tile : unsigned char { monomino = 1, domino = 2 };

class Tiling {
 public:
  Tiling() = default;
  explicit Tiling(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {}

  // "MDM" style: M for a monomino, D for a domino.
  static Tiling parse(std::string_view text) {
    std::vector<Tile> tiles;
    for (char c : text) {
      if (c == 'M') tiles.push_back(Tile::monomino);
      else if (c == 'D') tiles.push_back(Tile::domino);
      else throw std::invalid_argument("Tiling::parse: expected M or D, got '" + std::string(1, c) + "'");
    }
    return Tiling(std::move(tiles));
  }

  const std::vector<Tile>& tiles() const& noexcept { return tiles_; }
  std::vector<Tile> tiles() && noexcept { return std::move(tiles_); }

  std::size_t length() const noexcept {
    std::size_t n = 0;
    for (Tile t : tiles_) n += static_cast<std::size_t>(t);
    return n;
  }

  std::string to_string() const {
    std::string s;
    for (Tile t : tiles_) s += t == Tile::monomino ? 'M' : 'D';
    return s;
  }

  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;

 private:
  std::vector<Tile> tiles_;
};

inline std::vector<Tiling> enumerate_tilings(std::size_t n) {
  std::vector<Tiling> out;
  std::vector<Tile> current;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    current.push_back(Tile::monomino);
    extend(remaining - 1);
    current.pop_back();
    if (remaining >= 2) {
      current.push_back(Tile::domino);
      extend(remaining - 2);
      current.pop_back();
    }
  };
  extend(n);
  return out;
}

// The parity involution. Squares are read in blocks of three; blocks that are
// a monomino followed by a domino are skipped. In the first other block the
// leading pair of squares is toggled between two monominos and one domino.
// When fewer than two squares remain the tiling is fixed.
inline Tiling iota(const Tiling& t) {
  std::vector<Tile> tiles = t.tiles();
  const std::size_t n = t.length();
  std::size_t square = 0, i = 0;
  while (n - square >= 2) {
    if (tiles[i] == Tile::domino) {
      tiles[i] = Tile::monomino;
      tiles.insert(tiles.begin() + static_cast<std::ptrdiff_t>(i), Tile::monomino);
      return Tiling(std::move(tiles));
    }
    if (tiles[i + 1] == Tile::monomino) {
      tiles[i] = Tile::domino;
      tiles.erase(tiles.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return Tiling(std::move(tiles));
    }
    square += 3;
    i += 2;
  }
  return t;
}

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  const std::vector<std::uint32_t>& parts() const& noexcept { return parts_; }
  // By value on rvalues, so `for (x : complement(bp).parts())` is safe.
  std::vector<std::uint32_t> parts() && noexcept { return std::move(parts_); }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return parts_.at(i); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

class BoxedPartition {
 public:
  BoxedPartition(Partition partition, std::uint32_t rows, std::uint32_t cols)
      : partition_(std::move(partition)), rows_(rows), cols_(cols) {
    if (partition_.size() > rows_) throw std::invalid_argument("BoxedPartition: too many parts for the box");
    if (!partition_.empty() && partition_[0] > cols_) throw std::invalid_argument("BoxedPartition: part wider than the box");
  }

  const Partition& partition() const noexcept { return partition_; }
  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return cols_; }

  friend bool operator==(const BoxedPartition&, const BoxedPartition&) = default;

 private:
  Partition partition_;
  std::uint32_t rows_;
  std::uint32_t cols_;
};

inline std::vector<BoxedPartition> enumerate_partitions_in_box(std::uint32_t rows, std::uint32_t cols) {
  std::vector<BoxedPartition> out;
  std::vector<std::uint32_t> parts;
  std::function<void(std::uint32_t)> extend = [&](std::uint32_t max_part) {
    out.emplace_back(Partition(parts), rows, cols);
    if (parts.size() == rows) return;
    for (std::uint32_t p = 1; p <= max_part; ++p) {
      parts.push_back(p);
      extend(p);
      parts.pop_back();
    }
  };
  extend(cols);
  return out;
}

// Column lengths of the box minus the diagram, largest first.
inline Partition complement(const BoxedPartition& bp) {
  const auto& parts = bp.partition().parts();
  std::vector<std::uint32_t> columns;
  for (std::uint32_t col = 1; col <= bp.cols(); ++col) {
    const auto filled = static_cast<std::uint32_t>(
        std::count_if(parts.begin(), parts.end(), [col](std::uint32_t p) { return p >= col; }));
    if (filled < bp.rows()) columns.push_back(bp.rows() - filled);
  }
  std::sort(columns.rbegin(), columns.rend());
  return Partition(std::move(columns));
}

// |T_lambda| * |D_{lambda*}| = prod F_{lambda_i + 1} * prod F_{mu_j - 1}.
// A complementary column of length 1 has no domino-led tiling: F_0 = 0.
inline Natural count_weighted(const BoxedPartition& bp) {
  Natural product = 1U;
  for (std::uint32_t part : bp.partition().parts()) product *= fib(part + 1);
  for (std::uint32_t column : complement(bp).parts()) product *= fib(column - 1);
  return product;
}

inline Natural sagan_savage_count(Index n, Index k) {
  if (k > n) throw std::invalid_argument("sagan_savage_count: requires k <= n");
  Natural total = 0U;
  for (const auto& bp : enumerate_partitions_in_box(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n - k)))
    total += count_weighted(bp);
  return total;
}

// An element of T_lambda x D_{lambda*}: one tiling per row of lambda and one
// per column of lambda*, each column tiling starting with a domino.
struct RectTiling {
  std::vector<Tiling> rows;
  std::vector<Tiling> columns;

  friend bool operator==(const RectTiling&, const RectTiling&) = default;
};

inline std::vector<RectTiling> enumerate_rect_tilings(const BoxedPartition& bp) {
  std::vector<std::vector<Tiling>> row_choices, column_choices;
  for (std::uint32_t part : bp.partition().parts()) row_choices.push_back(enumerate_tilings(part));
  for (std::uint32_t column : complement(bp).parts()) {
    std::vector<Tiling> led;
    if (column >= 2) {
      for (const Tiling& tail : enumerate_tilings(column - 2)) {
        std::vector<Tile> tiles{Tile::domino};
        tiles.insert(tiles.end(), tail.tiles().begin(), tail.tiles().end());
        led.emplace_back(std::move(tiles));
      }
    }
    column_choices.push_back(std::move(led));
  }

  std::vector<RectTiling> out;
  RectTiling current;
  std::function<void(std::size_t)> fill = [&](std::size_t slot) {
    const std::size_t nrows = row_choices.size();
    if (slot == nrows + column_choices.size()) {
      out.push_back(current);
      return;
    }
    const auto& choices = slot < nrows ? row_choices[slot] : column_choices[slot - nrows];
    auto& target = slot < nrows ? current.rows : current.columns;
    for (const Tiling& t : choices) {
      target.push_back(t);
      fill(slot + 1);
      target.pop_back();
    }
  };
  fill(0);
  return out;
}

// Applies iota to the first row of lambda it moves, otherwise to the first
// column of lambda* (the part above the leading domino) it moves. Columns are
// taken in the order complement() lists them.
inline RectTiling extended_iota(const RectTiling& r) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    Tiling moved = iota(r.rows[i]);
    if (moved != r.rows[i]) {
      RectTiling out = r;
      out.rows[i] = std::move(moved);
      return out;
    }
  }
  for (std::size_t j = 0; j < r.columns.size(); ++j) {
    const auto& tiles = r.columns[j].tiles();
    if (tiles.empty() || tiles.front() != Tile::domino)
      throw std::invalid_argument("extended_iota: column tiling must start with a domino");
    const Tiling tail(std::vector<Tile>(tiles.begin() + 1, tiles.end()));
    const Tiling moved = iota(tail);
    if (moved != tail) {
      std::vector<Tile> column{Tile::domino};
      column.insert(column.end(), moved.tiles().begin(), moved.tiles().end());
      RectTiling out = r;
      out.columns[j] = Tiling(std::move(column));
      return out;
    }
  }
  return r;
}

// lambda_i = 0 or 1 (mod 3) for every row and lambda*_j = 0 or 2 (mod 3)
// for every complementary column.
inline bool satisfies_fixed_point_criterion(const BoxedPartition& bp) {
  for (std::uint32_t part : bp.partition().parts())
    if (part % 3 == 2) return false;
  for (std::uint32_t column : complement(bp).parts())
    if (column % 3 == 1) return false;
  return true;
}

inline Natural sagan_savage_count_enumerated(Index n, Index k) {
  if (k > n) throw std::invalid_argument("sagan_savage_count_enumerated: requires k <= n");
  Natural total = 0U;
  for (const auto& bp : enumerate_partitions_in_box(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n - k)))
    total += Natural(enumerate_rect_tilings(bp).size());
  return total;
}

// Monotone lattice paths from (0,0) to (n-k, k) using east steps only on rows
// y = 0, 2 (mod 3) and north steps only on columns x = 0, 1 (mod 3).
inline Natural lattice_fixed_points(Index n, Index k) {
  if (k > n) throw std::invalid_argument("lattice_fixed_points: requires k <= n");
  const Index width = n - k, height = k;
  const auto east_ok = [](Index y) { return y % 3 != 1; };
  const auto north_ok = [](Index x) { return x % 3 != 2; };
  std::vector<Natural> column(height + 1);  // paths to (x, y) for the current x
  column[0] = Natural(1U);
  for (Index y = 1; y <= height; ++y) column[y] = north_ok(0) ? column[y - 1] : Natural(0U);
  for (Index x = 1; x <= width; ++x) {
    for (Index y = 0; y <= height; ++y) {
      Natural paths = east_ok(y) ? column[y] : Natural(0U);
      if (y > 0 && north_ok(x)) paths += column[y - 1];
      column[y] = std::move(paths);
    }
  }
  return column[height];
}

inline Natural lattice_lemma_rhs(Index n, Index k) {
  if (k > n) throw std::invalid_argument("lattice_lemma_rhs: requires k <= n");
  if (n % 3 == 0 && k % 3 == 1) return Natural(0U);
  if (n % 3 == 1 && k % 3 == 0)
    return binomial((2 * n + 2) / 3, static_cast<std::int64_t>((2 * k + 2) / 3));
  return binomial(2 * n / 3, static_cast<std::int64_t>(2 * k / 3));
}

}  // namespace fibfractal
