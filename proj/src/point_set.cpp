#include "dispnet/point_set.hpp"

#include <algorithm>

#include "dispnet/error.hpp"

namespace dispnet {

Coord checked_power(std::uint64_t base, std::uint32_t m) {
  if (base < 2) throw Error(Errc::invalid_argument, "base must be >= 2");
  u128 value = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    value *= base;
    if (value > GridPointSet::kMaxDen) {
      throw Error(Errc::too_large, std::to_string(base) + "^" + std::to_string(m) + " exceeds 2^62");
    }
  }
  return static_cast<Coord>(value);
}

GridPointSet::GridPointSet(std::uint32_t base, std::uint32_t m, std::vector<GridPoint> points)
    : base_(base), m_(m), den_(0), points_(std::move(points)) {
  if (m_ < 1) throw Error(Errc::invalid_argument, "m must be >= 1");
  den_ = checked_power(base_, m_);
  for (const auto& p : points_) {
    if (p.x >= den_ || p.y >= den_) {
      throw Error(Errc::out_of_range, "coordinate numerator outside [0, den)");
    }
  }
}

GridPointSet GridPointSet::swapped() const {
  std::vector<GridPoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({p.y, p.x});
  return GridPointSet(base_, m_, std::move(out));
}

GridPointSet GridPointSet::without(std::size_t index) const {
  std::vector<GridPoint> out = points_;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return GridPointSet(base_, m_, std::move(out));
}

std::vector<GridPoint> GridPointSet::sorted_points() const {
  std::vector<GridPoint> out = points_;
  std::sort(out.begin(), out.end());
  return out;
}

bool same_point_multiset(const GridPointSet& a, const GridPointSet& b) {
  return a.den() == b.den() && a.sorted_points() == b.sorted_points();
}

BoxReport BoxReport::make(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi) {
  const Rational zero(0), one(1);
  if (x_lo < zero || x_hi > one || y_lo < zero || y_hi > one || !(x_lo < x_hi) || !(y_lo < y_hi)) {
    throw Error(Errc::invalid_argument, "box corners must satisfy 0 <= lo < hi <= 1");
  }
  Rational area = (x_hi - x_lo) * (y_hi - y_lo);
  return BoxReport{std::move(x_lo), std::move(x_hi), std::move(y_lo), std::move(y_hi), std::move(area)};
}

BoxReport BoxReport::from_grid(const GridBox& box, Coord den) {
  return make(Rational(box.x_lo, den), Rational(box.x_hi, den), Rational(box.y_lo, den),
              Rational(box.y_hi, den));
}

bool box_is_interior_empty(const GridPointSet& points, const BoxReport& box) {
  // point p/den is strictly above a/b  <=>  p*b > a*den
  const BigInt den = points.den();
  auto above = [&](Coord p, const Rational& r) { return BigInt(p) * r.den() > r.num() * den; };
  auto below = [&](Coord p, const Rational& r) { return BigInt(p) * r.den() < r.num() * den; };
  for (const auto& p : points.points()) {
    if (above(p.x, box.x_lo) && below(p.x, box.x_hi) && above(p.y, box.y_lo) && below(p.y, box.y_hi)) {
      return false;
    }
  }
  return true;
}

bool box_is_interior_empty(const GridPointSet& points, const GridBox& box) {
  return std::none_of(points.points().begin(), points.points().end(), [&](const GridPoint& p) {
    return box.x_lo < p.x && p.x < box.x_hi && box.y_lo < p.y && p.y < box.y_hi;
  });
}

nlohmann::json to_json(const GridPointSet& points) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points.points()) pts.push_back({p.x, p.y});
  return {{"base", points.base()}, {"m", points.m()}, {"den", points.den()}, {"points", std::move(pts)}};
}

nlohmann::json to_json(const BoxReport& box) {
  return {{"x_lo", box.x_lo.str()}, {"x_hi", box.x_hi.str()}, {"y_lo", box.y_lo.str()},
          {"y_hi", box.y_hi.str()}, {"area", box.area.str()}};
}

GridPointSet point_set_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw Error(Errc::parse_error, "point set must be a JSON object");
    for (const char* key : {"base", "m", "den", "points"}) {
      if (!j.contains(key)) throw Error(Errc::parse_error, std::string("missing key '") + key + "'");
    }
    auto base = j.at("base").get<std::uint32_t>();
    auto m = j.at("m").get<std::uint32_t>();
    auto den = j.at("den").get<Coord>();
    std::vector<GridPoint> pts;
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw Error(Errc::parse_error, "point must be [x_num, y_num]");
      pts.push_back({p[0].get<Coord>(), p[1].get<Coord>()});
    }
    GridPointSet out(base, m, std::move(pts));
    if (out.den() != den) throw Error(Errc::grid_mismatch, "den must equal base^m");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

GridPointSet parse_point_set(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::parse_error, "malformed JSON");
  return point_set_from_json(j);
}

std::string dump_point_set(const GridPointSet& points) { return to_json(points).dump(); }

}  // namespace dispnet
