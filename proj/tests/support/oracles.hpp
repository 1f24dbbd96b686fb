#pragma once

// Independent reference computations used only by the tests. They work on
// Rationals directly and share no code with the library kernels.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dispnet/point_set.hpp"
#include "dispnet/rational.hpp"

namespace oracle {

using dispnet::Coord;
using dispnet::GridPoint;
using dispnet::GridPointSet;
using dispnet::Rational;

inline std::vector<Rational> unique_sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Coordinates plus {0, 1} plus midpoints of consecutive values.
inline std::vector<Rational> dense_axis(const GridPointSet& p, bool use_x) {
  std::vector<Rational> v{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < p.size(); ++i) v.push_back(use_x ? p.x(i) : p.y(i));
  v = unique_sorted(std::move(v));
  const std::size_t k = v.size();
  for (std::size_t i = 0; i + 1 < k; ++i) v.push_back((v[i] + v[i + 1]) / 2);
  return unique_sorted(std::move(v));
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// sup |#{z in [0,t)} - N t1 t2|; the closed count stands for the limit from
// above.
inline Rational star_dense(const GridPointSet& p) {
  const auto xs = dense_axis(p, true), ys = dense_axis(p, false);
  const Rational n(static_cast<std::int64_t>(p.size()));
  Rational best(0);
  for (const auto& a : xs) {
    for (const auto& b : ys) {
      std::int64_t open = 0, closed = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.x(i) < a && p.y(i) < b) ++open;
        if (p.x(i) <= a && p.y(i) <= b) ++closed;
      }
      const Rational vol = n * a * b;
      best = dispnet::max(best, abs(Rational(open) - vol));
      best = dispnet::max(best, abs(Rational(closed) - vol));
    }
  }
  return best;
}

// Integral of Delta^2 cell by cell: on (x_a, x_a+1] x (y_b, y_b+1] the count
// of [0,t) is constant.
inline Rational l2_cells(const GridPointSet& p) {
  std::vector<Rational> xs{Rational(0), Rational(1)}, ys{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < p.size(); ++i) {
    xs.push_back(p.x(i));
    ys.push_back(p.y(i));
  }
  xs = unique_sorted(std::move(xs));
  ys = unique_sorted(std::move(ys));
  const Rational n(static_cast<std::int64_t>(p.size()));
  Rational total(0);
  for (std::size_t a = 0; a + 1 < xs.size(); ++a) {
    const Rational &x0 = xs[a], &x1 = xs[a + 1];
    const Rational dx1 = x1 - x0, dx2 = (x1 * x1 - x0 * x0) / 2, dx3 = (x1 * x1 * x1 - x0 * x0 * x0) / 3;
    for (std::size_t b = 0; b + 1 < ys.size(); ++b) {
      const Rational &y0 = ys[b], &y1 = ys[b + 1];
      const Rational dy1 = y1 - y0, dy2 = (y1 * y1 - y0 * y0) / 2, dy3 = (y1 * y1 * y1 - y0 * y0 * y0) / 3;
      std::int64_t c = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.x(i) <= x0 && p.y(i) <= y0) ++c;
      }
      const Rational cr(c);
      total += cr * cr * dx1 * dy1 - 2 * cr * n * dx2 * dy2 + n * n * dx3 * dy3;
    }
  }
  return total;
}

// sup over boxes of |count - N area| by scanning all boxes on the dense
// axes with open and closed counts.
inline Rational extreme_dense(const GridPointSet& p) {
  const auto xs = dense_axis(p, true), ys = dense_axis(p, false);
  const Rational n(static_cast<std::int64_t>(p.size()));
  Rational best(0);
  for (std::size_t a0 = 0; a0 < xs.size(); ++a0) {
    for (std::size_t a1 = a0; a1 < xs.size(); ++a1) {
      for (std::size_t b0 = 0; b0 < ys.size(); ++b0) {
        for (std::size_t b1 = b0; b1 < ys.size(); ++b1) {
          std::int64_t open = 0, closed = 0;
          for (std::size_t i = 0; i < p.size(); ++i) {
            const auto &x = p.x(i), &y = p.y(i);
            if (xs[a0] < x && x < xs[a1] && ys[b0] < y && y < ys[b1]) ++open;
            if (xs[a0] <= x && x <= xs[a1] && ys[b0] <= y && y <= ys[b1]) ++closed;
          }
          const Rational vol = n * (xs[a1] - xs[a0]) * (ys[b1] - ys[b0]);
          best = dispnet::max(best, abs(Rational(open) - vol));
          best = dispnet::max(best, abs(Rational(closed) - vol));
        }
      }
    }
  }
  return best;
}

// ---- random sets ----

// n points anywhere on the base^m grid; duplicates allowed.
inline GridPointSet random_grid_set(std::mt19937_64& rng, std::uint32_t base, std::uint32_t m, std::size_t n) {
  const Coord den = dispnet::checked_power(base, m);
  std::uniform_int_distribution<Coord> coord(0, den - 1);
  std::vector<GridPoint> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return GridPointSet(base, m, std::move(pts));
}

// x-coordinates exactly {0, 1/N, ..., (N-1)/N}. With fine_y the y values lie
// on the finer grid 1/N^2, otherwise they form a permutation of the columns.
inline GridPointSet random_permutation_set(std::mt19937_64& rng, std::size_t n, bool fine_y) {
  std::vector<GridPoint> pts(n);
  const auto nn = static_cast<Coord>(n);
  if (fine_y) {
    std::uniform_int_distribution<Coord> coord(0, nn * nn - 1);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {static_cast<Coord>(i) * nn, coord(rng)};
    return GridPointSet(static_cast<std::uint32_t>(n), 2, std::move(pts));
  }
  std::vector<Coord> perm(n);
  std::iota(perm.begin(), perm.end(), Coord{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < n; ++i) pts[i] = {static_cast<Coord>(i), perm[i]};
  return GridPointSet(static_cast<std::uint32_t>(n), 1, std::move(pts));
}

}  // namespace oracle
