#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace gsnf {

// A cell of a Young diagram, 1-based, row 1 at the top and column 1 at
// the left. The content j - i is intrinsic to the cell.
struct Cell {
  int row = 0;
  int col = 0;
  int content() const { return col - row; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Frobenius notation (alpha | beta): arm and leg lengths of the diagonal
// cells, both strictly decreasing, one pair per diagonal cell.
struct FrobeniusNotation {
  std::vector<int> alphas;
  std::vector<int> betas;
  int rank() const { return static_cast<int>(alphas.size()); }
  friend bool operator==(const FrobeniusNotation&, const FrobeniusNotation&) = default;
};

class BorderStrip;

// Integer partition; the empty partition is a first-class value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  // Parses "4,3,1" (empty string gives the empty partition).
  static Partition parse(std::string_view s);

  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  long size() const;
  // 1-based part access; 0 beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Cell& c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }
  bool contains(const Partition& inner) const;
  std::vector<Cell> cells() const;  // row-major

  int rank() const;
  FrobeniusNotation frobenius() const;
  static Partition from_frobenius(const FrobeniusNotation& fr);

  // i-th diagonal hook as cells ordered by ascending content; empty for
  // i beyond the rank.
  std::vector<Cell> diagonal_hook(int i) const;
  int hook_length(const Cell& c) const;  // throws if c lies outside

  // Successive rims, outermost first; exactly rank() strips.
  std::vector<BorderStrip> rim_decomposition() const;

  int num_diagonals() const { return empty() ? 0 : parts_[0] + length() - 1; }
  int min_content() const { return empty() ? 0 : 1 - length(); }
  int max_content() const { return empty() ? 0 : parts_[0] - 1; }

  // b(lambda) = sum over k of (k-1) * lambda_k.
  long b_exponent() const;

  std::string str() const;  // "(3,2,1)", "()" for empty

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = Partition());

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  long size() const { return outer_.size() - inner_.size(); }
  bool contains(const Cell& c) const {
    return outer_.contains(c) && c.col > inner_.part(c.row);
  }
  std::vector<Cell> cells() const;  // row-major
  std::string str() const;          // "(2,2)/(1)"

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_, inner_;
};

// Edgewise-connected ribbon: cells ordered by ascending content, each
// step to the cell directly above or directly to the right, so contents
// increase by exactly one and no 2x2 block can occur.
class BorderStrip {
 public:
  explicit BorderStrip(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  // p and q: contents of the starting and ending cells.
  int p() const { return cells_.front().content(); }
  int q() const { return cells_.back().content(); }
  const Cell& cell_at_content(int c) const;

  // Contiguous sub-ribbon over contents [from, to] (must be in range).
  BorderStrip segment(int from, int to) const;

  friend bool operator==(const BorderStrip&, const BorderStrip&) = default;

 private:
  std::vector<Cell> cells_;
};

// Translate of a ribbon normalized into skew-shape position; the offset
// restores absolute contents (original = normalized + content_offset).
struct RibbonAsSkew {
  SkewShape shape;
  int content_offset = 0;
};
RibbonAsSkew ribbon_to_skew(const BorderStrip& strip);

// All partitions of n, reverse-lexicographic ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace gsnf
