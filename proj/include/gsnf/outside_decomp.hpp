#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsnf/partition.hpp"

namespace gsnf {

enum class Step : uint8_t { Up, Right };

// Per-diagonal up/right choices: steps[i] governs how cells of content
// min_content + i leave their diagonal; one step per diagonal except the
// last, d - 1 in total.
struct DirectionVector {
  int min_content = 0;
  std::vector<Step> steps;

  Step at(int content) const;
  // "URRU" ordered by increasing content
  static DirectionVector parse(std::string_view s, int min_content);
  std::string str() const;

  friend bool operator==(const DirectionVector&, const DirectionVector&) = default;
};

enum class DecompKind { Horizontal, Hook, Rim };

std::string_view kind_name(DecompKind k);
std::optional<DecompKind> parse_kind(std::string_view s);

DirectionVector canonical_direction(const Partition& p, DecompKind kind);

// theta[p, q]: a concrete sub-ribbon of the cutting strip, the empty
// strip (Schur value 1), or undefined (Schur value 0).
class ThetaSegment {
 public:
  enum class Kind { Strip, Empty, Undefined };

  static ThetaSegment make_strip(BorderStrip s) { return ThetaSegment(Kind::Strip, std::move(s)); }
  static ThetaSegment make_empty() { return ThetaSegment(Kind::Empty, std::nullopt); }
  static ThetaSegment make_undefined() { return ThetaSegment(Kind::Undefined, std::nullopt); }

  Kind kind() const { return kind_; }
  const BorderStrip& strip() const { return *strip_; }

 private:
  ThetaSegment(Kind k, std::optional<BorderStrip> s) : kind_(k), strip_(std::move(s)) {}
  Kind kind_;
  std::optional<BorderStrip> strip_;
};

// An outside decomposition of a straight shape, generated from its
// direction vector (equivalently, its cutting strip). Strips are kept in
// strictly decreasing starting-content order, and the cutting strip
// carries the true contents of the shape's diagonals.
class OutsideDecomposition {
 public:
  static OutsideDecomposition build(const Partition& p, DirectionVector dir);
  static OutsideDecomposition canonical(const Partition& p, DecompKind kind);
  // Validates an explicit strip list against the direction vector it
  // induces; throws if the list is not an outside decomposition of p.
  static OutsideDecomposition from_strips(const Partition& p, const std::vector<BorderStrip>& strips);
  static std::vector<OutsideDecomposition> enumerate(const Partition& p);

  const Partition& shape() const { return shape_; }
  const DirectionVector& direction() const { return dir_; }
  const std::vector<BorderStrip>& strips() const { return strips_; }
  const BorderStrip& cutting_strip() const { return *cutting_; }
  int num_strips() const { return static_cast<int>(strips_.size()); }

  ThetaSegment theta_segment(int from, int to) const;

 private:
  OutsideDecomposition() = default;
  Partition shape_;
  DirectionVector dir_;
  std::vector<BorderStrip> strips_;
  std::optional<BorderStrip> cutting_;
};

}  // namespace gsnf
