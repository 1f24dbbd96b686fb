#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dispnet/exec.hpp"
#include "dispnet/rational.hpp"

namespace dispnet {

using Coord = std::uint64_t;

struct GridPoint {
  Coord x = 0;
  Coord y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// N points in [0,1)^2 sharing the denominator den = base^m; coordinates are
/// stored as integer numerators. Generated nets keep their generation order.
class GridPointSet {
 public:
  /// Upper limit on den so that every area numerator fits in 128 bits.
  static constexpr Coord kMaxDen = Coord{1} << 62;

  GridPointSet(std::uint32_t base, std::uint32_t m, std::vector<GridPoint> points);

  std::uint32_t base() const noexcept { return base_; }
  std::uint32_t m() const noexcept { return m_; }
  Coord den() const noexcept { return den_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::span<const GridPoint> points() const noexcept { return points_; }
  const GridPoint& operator[](std::size_t i) const { return points_[i]; }

  Rational x(std::size_t i) const { return Rational(points_[i].x, den_); }
  Rational y(std::size_t i) const { return Rational(points_[i].y, den_); }

  /// {(y, x) : (x, y) in this}, same order.
  GridPointSet swapped() const;
  GridPointSet without(std::size_t index) const;
  /// Points sorted lexicographically; two sets are equal as multisets iff
  /// their sorted forms compare equal.
  std::vector<GridPoint> sorted_points() const;

  friend bool operator==(const GridPointSet&, const GridPointSet&) = default;

 private:
  std::uint32_t base_;
  std::uint32_t m_;
  Coord den_;
  std::vector<GridPoint> points_;
};

/// base^m, or an Error(too_large) if it exceeds GridPointSet::kMaxDen.
Coord checked_power(std::uint64_t base, std::uint32_t m);

bool same_point_multiset(const GridPointSet& a, const GridPointSet& b);

/// Axis-parallel box on the point set's grid, in numerator units.
struct GridBox {
  Coord x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;

  u128 area() const { return u128(x_hi - x_lo) * (y_hi - y_lo); }
  friend auto operator<=>(const GridBox&, const GridBox&) = default;
};

// Lexicographic order (x_lo, y_lo, x_hi, y_hi) used for tie-breaking.
inline bool lex_less(const GridBox& a, const GridBox& b) {
  if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
  if (a.y_lo != b.y_lo) return a.y_lo < b.y_lo;
  if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
  return a.y_hi < b.y_hi;
}

/// Box with rational corners, 0 <= x_lo < x_hi <= 1 and 0 <= y_lo < y_hi <= 1.
struct BoxReport {
  Rational x_lo, x_hi, y_lo, y_hi, area;

  static BoxReport make(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi);
  static BoxReport from_grid(const GridBox& box, Coord den);
};

/// True iff no point lies strictly inside (x_lo, x_hi) x (y_lo, y_hi).
bool box_is_interior_empty(const GridPointSet& points, const BoxReport& box);
bool box_is_interior_empty(const GridPointSet& points, const GridBox& box);

nlohmann::json to_json(const GridPointSet& points);
nlohmann::json to_json(const BoxReport& box);
GridPointSet point_set_from_json(const nlohmann::json& j);
/// Parses the point-set schema; malformed input throws Error(parse_error).
GridPointSet parse_point_set(std::string_view text);
std::string dump_point_set(const GridPointSet& points);

}  // namespace dispnet
