#include "dispnet/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>
#include <vector>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

void require_points(const GridPointSet& points) {
  if (points.empty()) throw Error(Errc::empty_set, "discrepancy of an empty set");
}

int bits_of(std::uint64_t v) { return std::bit_width(v); }

// True when |values| bounded by 2^bits fit the signed 128-bit kernels.
bool fits_i128(int bits) { return bits < 125; }

template <class Int>
Int make_int(std::uint64_t v) {
  return Int(v);
}

template <class Int>
BigInt widen(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else {
    return to_bigint(v);
  }
}

std::vector<Coord> distinct(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t rank_of(const std::vector<Coord>& sorted, Coord v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

struct Axes {
  std::vector<Coord> xs, ys;           // sorted distinct grid values (with extras)
  std::vector<std::size_t> xr, yr;     // per point, rank in xs / ys
  std::vector<std::size_t> by_x;       // point indices sorted by x
};

Axes make_axes(const GridPointSet& points, std::vector<Coord> extra) {
  Axes ax;
  std::vector<Coord> xs = extra, ys = extra;
  for (const auto& p : points.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  ax.xs = distinct(std::move(xs));
  ax.ys = distinct(std::move(ys));
  for (const auto& p : points.points()) {
    ax.xr.push_back(rank_of(ax.xs, p.x));
    ax.yr.push_back(rank_of(ax.ys, p.y));
  }
  ax.by_x.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ax.by_x[i] = i;
  std::stable_sort(ax.by_x.begin(), ax.by_x.end(),
                   [&](std::size_t a, std::size_t b) { return ax.xr[a] < ax.xr[b]; });
  return ax;
}

DiscrepancyWitness witness_of(Coord den, Coord x_lo, Coord x_hi, Coord y_lo, Coord y_hi, bool closed) {
  return {Rational(x_lo, den), Rational(x_hi, den), Rational(y_lo, den), Rational(y_hi, den), closed};
}

// Best value with the position it was found at; ties keep the smallest key
// so serial and parallel runs agree.
template <class Int>
struct Best {
  Int value{};
  std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t> key{};
  bool set = false;

  void offer(const Int& v, const decltype(key)& k) {
    if (!set || v > value || (v == value && k < key)) {
      value = v;
      key = k;
      set = true;
    }
  }
};

// ---- star ----

template <class Int>
DiscrepancyReport star_kernel(const GridPointSet& points) {
  const Coord den = points.den();
  const Axes ax = make_axes(points, {den});
  const Int d2 = make_int<Int>(den) * make_int<Int>(den);
  const Int n = make_int<Int>(points.size());
  const std::size_t ky = ax.ys.size();

  std::vector<std::uint64_t> hist(ky, 0);
  Best<Int> best;
  std::size_t next = 0;
  for (std::size_t ia = 0; ia < ax.xs.size(); ++ia) {
    const Int na = n * make_int<Int>(ax.xs[ia]);
    // open: points with x < a, counted strictly below b
    std::uint64_t below = 0;
    for (std::size_t j = 0; j < ky; ++j) {
      best.offer(na * make_int<Int>(ax.ys[j]) - d2 * make_int<Int>(below), {0, ia, j, 0, 0});
      below += hist[j];
    }
    while (next < ax.by_x.size() && ax.xr[ax.by_x[next]] == ia) {
      ++hist[ax.yr[ax.by_x[next]]];
      ++next;
    }
    // closed: points with x <= a and y <= b
    std::uint64_t le = 0;
    for (std::size_t j = 0; j < ky; ++j) {
      le += hist[j];
      best.offer(d2 * make_int<Int>(le) - na * make_int<Int>(ax.ys[j]), {1, ia, j, 0, 0});
    }
  }

  const auto [closed, ia, j, u1, u2] = best.key;
  return {DiscrepancyKind::star, Rational(widen(best.value), widen(d2)),
          witness_of(den, 0, ax.xs[ia], 0, ax.ys[j], closed == 1)};
}

// ---- L2 ----

template <class Int>
Int warnock_pair_sum(const GridPointSet& points, Exec exec) {
  const Coord den = points.den();
  const auto pts = points.points();
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  Int total{};
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        total += make_int<Int>(den - std::max(pts[i].x, pts[k].x)) * make_int<Int>(den - std::max(pts[i].y, pts[k].y));
      }
    }
    return total;
  }
#pragma omp parallel
  {
    Int local{};
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::ptrdiff_t k = 0; k < n; ++k) {
        local += make_int<Int>(den - std::max(pts[i].x, pts[k].x)) * make_int<Int>(den - std::max(pts[i].y, pts[k].y));
      }
    }
#pragma omp critical(dispnet_warnock)
    total += local;
  }
  return total;
}

template <class Int>
DiscrepancyReport l2_kernel(const GridPointSet& points, Exec exec) {
  const Coord den = points.den();
  const Int d = make_int<Int>(den);
  const Int d2 = d * d;
  const Int n = make_int<Int>(points.size());
  const Int t1 = warnock_pair_sum<Int>(points, exec);
  Int s2{};
  for (const auto& p : points.points()) {
    const Int x = make_int<Int>(p.x), y = make_int<Int>(p.y);
    s2 += (d2 - x * x) * (d2 - y * y);
  }
  // T1/D^2 - (N/2) S2/D^4 + N^2/9 over the common denominator 18 D^4
  const Int num = 18 * d2 * t1 - 9 * n * s2 + 2 * n * n * d2 * d2;
  return {DiscrepancyKind::l2_squared, Rational(widen(num), widen(Int(18) * d2 * d2)), std::nullopt};
}

// ---- extreme ----

// Closed boxes [xs[i1], xs[i2]] x [ys[i], ys[j]] maximizing D^2 count - N area.
template <class Int>
void extreme_closed_rows(const GridPointSet& points, const Axes& ax, std::size_t i1, Best<Int>& best) {
  const Int d2 = make_int<Int>(points.den()) * make_int<Int>(points.den());
  const Int n = make_int<Int>(points.size());
  const std::size_t ky = ax.ys.size();
  std::vector<std::uint64_t> hist(ky, 0);
  std::size_t next = static_cast<std::size_t>(
      std::lower_bound(ax.by_x.begin(), ax.by_x.end(), i1, [&](std::size_t p, std::size_t r) { return ax.xr[p] < r; }) -
      ax.by_x.begin());
  for (std::size_t i2 = i1; i2 < ax.xs.size(); ++i2) {
    while (next < ax.by_x.size() && ax.xr[ax.by_x[next]] == i2) {
      ++hist[ax.yr[ax.by_x[next]]];
      ++next;
    }
    const Int nw = n * make_int<Int>(ax.xs[i2] - ax.xs[i1]);
    std::uint64_t below = 0;
    Int low{};
    std::size_t low_at = 0;
    for (std::size_t j = 0; j < ky; ++j) {
      const Int term = d2 * make_int<Int>(below) - nw * make_int<Int>(ax.ys[j]);
      if (j == 0 || term < low) {
        low = term;
        low_at = j;
      }
      below += hist[j];
      best.offer(d2 * make_int<Int>(below) - nw * make_int<Int>(ax.ys[j]) - low, {0, i1, i2, j, low_at});
    }
  }
}

// Open boxes (xs[i1], xs[i2]) x (ys[i], ys[j]) maximizing N area - D^2 count;
// here the axes include 0 and den.
template <class Int>
void extreme_open_rows(const GridPointSet& points, const Axes& ax, std::size_t i1, Best<Int>& best) {
  const Int d2 = make_int<Int>(points.den()) * make_int<Int>(points.den());
  const Int n = make_int<Int>(points.size());
  const std::size_t ky = ax.ys.size();
  std::vector<std::uint64_t> hist(ky, 0);
  std::size_t next = static_cast<std::size_t>(
      std::upper_bound(ax.by_x.begin(), ax.by_x.end(), i1, [&](std::size_t r, std::size_t p) { return r < ax.xr[p]; }) -
      ax.by_x.begin());
  for (std::size_t i2 = i1 + 1; i2 < ax.xs.size(); ++i2) {
    // strip holds points with xs[i1] < x < xs[i2]
    while (next < ax.by_x.size() && ax.xr[ax.by_x[next]] < i2) {
      ++hist[ax.yr[ax.by_x[next]]];
      ++next;
    }
    const Int nw = n * make_int<Int>(ax.xs[i2] - ax.xs[i1]);
    std::uint64_t below = 0;
    Int low{};
    std::size_t low_at = 0;
    for (std::size_t j = 0; j < ky; ++j) {
      if (j > 0) {
        best.offer(nw * make_int<Int>(ax.ys[j]) - d2 * make_int<Int>(below) - low, {1, i1, i2, j, low_at});
      }
      below += hist[j];
      const Int term = nw * make_int<Int>(ax.ys[j]) - d2 * make_int<Int>(below);
      if (j == 0 || term < low) {
        low = term;
        low_at = j;
      }
    }
  }
}

template <class Int>
DiscrepancyReport extreme_kernel(const GridPointSet& points, Exec exec) {
  const Coord den = points.den();
  const Axes closed_ax = make_axes(points, {});
  const Axes open_ax = make_axes(points, {0, den});
  const auto kc = static_cast<std::ptrdiff_t>(closed_ax.xs.size());
  const auto ko = static_cast<std::ptrdiff_t>(open_ax.xs.size());

  Best<Int> best;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < kc; ++i) extreme_closed_rows(points, closed_ax, static_cast<std::size_t>(i), best);
    for (std::ptrdiff_t i = 0; i < ko; ++i) extreme_open_rows(points, open_ax, static_cast<std::size_t>(i), best);
  } else {
#pragma omp parallel
    {
      Best<Int> local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::ptrdiff_t i = 0; i < kc; ++i) extreme_closed_rows(points, closed_ax, static_cast<std::size_t>(i), local);
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < ko; ++i) extreme_open_rows(points, open_ax, static_cast<std::size_t>(i), local);
#pragma omp critical(dispnet_extreme)
      if (local.set) best.offer(local.value, local.key);
    }
  }

  const Int d2 = make_int<Int>(den) * make_int<Int>(den);
  const auto [open, i1, i2, j, i] = best.key;
  const Axes& ax = open ? open_ax : closed_ax;
  return {DiscrepancyKind::extreme, Rational(widen(best.value), widen(d2)),
          witness_of(den, ax.xs[i1], ax.xs[i2], ax.ys[i], ax.ys[j], open == 0)};
}

}  // namespace

const char* discrepancy_kind_name(DiscrepancyKind kind) {
  switch (kind) {
    case DiscrepancyKind::star: return "star";
    case DiscrepancyKind::l2_squared: return "l2";
    case DiscrepancyKind::extreme: return "extreme";
  }
  return "";
}

DiscrepancyKind parse_discrepancy_kind(std::string_view name) {
  if (name == "star") return DiscrepancyKind::star;
  if (name == "l2" || name == "l2_squared") return DiscrepancyKind::l2_squared;
  if (name == "extreme") return DiscrepancyKind::extreme;
  throw Error(Errc::invalid_argument, "unknown discrepancy kind '" + std::string(name) + "'");
}

DiscrepancyReport star_discrepancy(const GridPointSet& points) {
  require_points(points);
  // |values| <= N D^2
  const int bits = bits_of(points.size()) + 2 * bits_of(points.den()) + 1;
  return fits_i128(bits) ? star_kernel<i128>(points) : star_kernel<BigInt>(points);
}

DiscrepancyReport l2_star_discrepancy_squared(const GridPointSet& points, Exec exec) {
  require_points(points);
  // largest intermediate is about 18 N^2 D^4
  const int bits = 2 * bits_of(points.size()) + 4 * bits_of(points.den()) + 6;
  return fits_i128(bits) ? l2_kernel<i128>(points, exec) : l2_kernel<BigInt>(points, exec);
}

DiscrepancyReport extreme_discrepancy(const GridPointSet& points, Exec exec, std::size_t max_points) {
  require_points(points);
  if (points.size() > max_points) {
    throw Error(Errc::too_large, "extreme discrepancy limited to " + std::to_string(max_points) + " points");
  }
  const int bits = bits_of(points.size()) + 2 * bits_of(points.den()) + 2;
  return fits_i128(bits) ? extreme_kernel<i128>(points, exec) : extreme_kernel<BigInt>(points, exec);
}

DiscrepancyReport compute_discrepancy(const GridPointSet& points, DiscrepancyKind kind, Exec exec) {
  switch (kind) {
    case DiscrepancyKind::star: return star_discrepancy(points);
    case DiscrepancyKind::l2_squared: return l2_star_discrepancy_squared(points, exec);
    case DiscrepancyKind::extreme: return extreme_discrepancy(points, exec);
  }
  throw Error(Errc::invalid_argument, "unknown discrepancy kind");
}

nlohmann::json to_json(const DiscrepancyReport& report) {
  nlohmann::json j{{"kind", discrepancy_kind_name(report.kind)}, {"value", report.value.str()}};
  if (report.witness) {
    const auto& w = *report.witness;
    j["witness"] = {{"x_lo", w.x_lo.str()}, {"x_hi", w.x_hi.str()}, {"y_lo", w.y_lo.str()},
                    {"y_hi", w.y_hi.str()}, {"closed", w.closed}};
  }
  return j;
}

}  // namespace dispnet
