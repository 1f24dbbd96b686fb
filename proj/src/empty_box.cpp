#include "dispnet/empty_box.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

struct Best {
  u128 area = 0;
  GridBox box{};
  bool set = false;

  void offer(const GridBox& b, u128 a) {
    if (!set || a > area || (a == area && lex_less(b, box))) {
      area = a;
      box = b;
      set = true;
    }
  }
  void merge(const Best& other) {
    if (other.set) offer(other.box, other.area);
  }
};

DispersionResult finish(const Best& best, Coord den, DispersionAlgorithm algo) {
  return DispersionResult{Rational::from_u128(best.area, u128(den) * den), BoxReport::from_grid(best.box, den),
                          best.box, algo};
}

void require_points(const GridPointSet& points) {
  if (points.empty()) throw Error(Errc::empty_set, "dispersion of an empty set");
}

// Widest-gap box spanning the whole unit width.
Best full_width_box(const GridPointSet& points) {
  std::vector<Coord> ys;
  ys.reserve(points.size() + 2);
  for (const auto& p : points.points()) ys.push_back(p.y);
  ys.push_back(0);
  ys.push_back(points.den());
  std::sort(ys.begin(), ys.end());
  Best best;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const GridBox b{0, points.den(), ys[i], ys[i + 1]};
    if (b.y_hi > b.y_lo) best.offer(b, b.area());
  }
  return best;
}

struct SortedColumns {
  std::vector<Coord> xs, ys;
};

// Rightward sweep from the support point at index i: the box keeps x_lo at the
// support's x and the tightest y-interval around its y.
void sweep_from(const SortedColumns& cols, std::size_t i, Coord den, bool mirrored, Best& best) {
  const auto& xs = cols.xs;
  const auto& ys = cols.ys;
  const std::size_t n = xs.size();
  const Coord left = xs[i];
  const Coord py = ys[i];
  Coord top = den, bot = 0;

  auto offer = [&](Coord right) {
    const u128 a = u128(right - left) * (top - bot);
    if (a == 0 || a < best.area) return;
    best.offer(mirrored ? GridBox{den - right, den - left, bot, top} : GridBox{left, right, bot, top}, a);
  };

  std::size_t j = i + 1;
  while (j < n && xs[j] == left) ++j;
  while (j < n) {
    const Coord right = xs[j];
    offer(right);
    for (; j < n && xs[j] == right; ++j) {
      const Coord y = ys[j];
      if (y > py) {
        top = std::min(top, y);
      } else if (y < py) {
        bot = std::max(bot, y);
      } else {
        return;  // a point level with the support blocks every wider box
      }
    }
    if (u128(den - left) * (top - bot) < best.area) return;
  }
  offer(den);
}

}  // namespace

const char* algorithm_name(DispersionAlgorithm algo) {
  switch (algo) {
    case DispersionAlgorithm::sweep: return "sweep";
    case DispersionAlgorithm::brute: return "brute";
    case DispersionAlgorithm::column_gap: return "column";
  }
  return "sweep";
}

DispersionAlgorithm parse_algorithm(std::string_view name) {
  if (name == "sweep") return DispersionAlgorithm::sweep;
  if (name == "brute") return DispersionAlgorithm::brute;
  if (name == "column" || name == "column_gap") return DispersionAlgorithm::column_gap;
  throw Error(Errc::invalid_argument, "unknown algorithm '" + std::string(name) + "'");
}

DispersionResult largest_empty_box(const GridPointSet& points, Exec exec) {
  require_points(points);
  const Coord den = points.den();
  const std::size_t n = points.size();

  std::vector<GridPoint> sorted = points.sorted_points();
  SortedColumns forward, backward;
  forward.xs.resize(n);
  forward.ys.resize(n);
  backward.xs.resize(n);
  backward.ys.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    forward.xs[k] = sorted[k].x;
    forward.ys[k] = sorted[k].y;
    // mirror x -> den - x so leftward sweeps reuse the rightward kernel
    backward.xs[k] = den - sorted[n - 1 - k].x;
    backward.ys[k] = sorted[n - 1 - k].y;
  }

  Best best = full_width_box(points);
  const auto tasks = static_cast<std::int64_t>(2 * n);
  auto run_task = [&](std::int64_t t, Best& local) {
    const auto idx = static_cast<std::size_t>(t);
    if (idx < n) {
      sweep_from(forward, idx, den, false, local);
    } else {
      sweep_from(backward, idx - n, den, true, local);
    }
  };

  if (exec == Exec::parallel) {
    const Best seed = best;
#pragma omp parallel
    {
      Best local = seed;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t t = 0; t < tasks; ++t) run_task(t, local);
#pragma omp critical(dispnet_sweep_merge)
      best.merge(local);
    }
  } else {
    for (std::int64_t t = 0; t < tasks; ++t) run_task(t, best);
  }
  return finish(best, den, DispersionAlgorithm::sweep);
}

DispersionResult dispersion_bruteforce(const GridPointSet& points, std::size_t max_points) {
  require_points(points);
  if (points.size() > max_points) {
    throw Error(Errc::too_large, "brute force limited to " + std::to_string(max_points) + " points");
  }
  const Coord den = points.den();
  std::vector<Coord> xg{0, den}, yg{0, den};
  for (const auto& p : points.points()) {
    xg.push_back(p.x);
    yg.push_back(p.y);
  }
  for (auto* g : {&xg, &yg}) {
    std::sort(g->begin(), g->end());
    g->erase(std::unique(g->begin(), g->end()), g->end());
  }

  // Loop order is lexicographic in (x_lo, y_lo, x_hi, y_hi), so keeping only
  // strict improvements yields the lexicographically smallest maximum.
  Best best;
  for (std::size_t a = 0; a < xg.size(); ++a) {
    for (std::size_t c = 0; c < yg.size(); ++c) {
      for (std::size_t b = a + 1; b < xg.size(); ++b) {
        for (std::size_t d = c + 1; d < yg.size(); ++d) {
          const GridBox box{xg[a], xg[b], yg[c], yg[d]};
          const u128 area = box.area();
          if (best.set && area <= best.area) continue;
          if (box_is_interior_empty(points, box)) best.offer(box, area);
        }
      }
    }
  }
  return finish(best, den, DispersionAlgorithm::brute);
}

bool is_permutation_structured(const GridPointSet& points) {
  const std::size_t n = points.size();
  if (n == 0 || points.den() % n != 0) return false;
  const Coord step = points.den() / n;
  std::vector<bool> seen(n, false);
  for (const auto& p : points.points()) {
    if (p.x % step != 0) return false;
    const Coord col = p.x / step;
    if (seen[col]) return false;
    seen[col] = true;
  }
  return true;
}

DispersionResult column_gap_dispersion(const GridPointSet& points) {
  require_points(points);
  if (!is_permutation_structured(points)) {
    throw Error(Errc::not_permutation_structured, "x-coordinates must be exactly {0, 1/N, ..., (N-1)/N}");
  }
  const std::size_t n = points.size();
  const Coord den = points.den();
  const Coord step = den / n;

  std::vector<Coord> y_of_col(n);
  for (const auto& p : points.points()) y_of_col[p.x / step] = p.y;

  Best best;
  best.offer(GridBox{0, step, 0, den}, u128(step) * den);  // no interior column
  if (n == 1) return finish(best, den, DispersionAlgorithm::column_gap);

  // Doubly linked list over columns 1..n-1 in y order with sentinels 0 and den.
  // Node 0 is the low sentinel, node k the k-th smallest y, node n the high one.
  const std::size_t k_count = n - 1;
  std::vector<std::size_t> by_y(k_count);
  std::iota(by_y.begin(), by_y.end(), std::size_t{1});
  std::stable_sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) { return y_of_col[a] < y_of_col[b]; });
  std::vector<Coord> value(n + 1);
  std::vector<std::size_t> node_of_col(n);
  value[0] = 0;
  value[n] = den;
  for (std::size_t k = 0; k < k_count; ++k) {
    value[k + 1] = y_of_col[by_y[k]];
    node_of_col[by_y[k]] = k + 1;
  }
  std::vector<std::size_t> base_next(n + 1), base_prev(n + 1);
  for (std::size_t v = 0; v <= n; ++v) {
    base_next[v] = v + 1;
    base_prev[v] = v == 0 ? 0 : v - 1;
  }

  std::vector<std::size_t> next, prev;
  for (std::size_t n1 = 1; n1 < n; ++n1) {
    next = base_next;
    prev = base_prev;
    Coord gap = 0, gap_lo = 0;
    for (std::size_t u = 0; u != n; u = next[u]) {
      const Coord g = value[next[u]] - value[u];
      if (g > gap) {
        gap = g;
        gap_lo = value[u];
      }
    }
    // Shrink the window from the right; removals only merge gaps.
    for (std::size_t n2 = n - 1; n2 >= n1; --n2) {
      const Coord width = (n2 - n1 + 2) * step;
      const u128 area = u128(width) * gap;
      if (area >= best.area && gap > 0) {
        best.offer(GridBox{(n1 - 1) * step, (n1 - 1) * step + width, gap_lo, gap_lo + gap}, area);
      }
      const std::size_t x = node_of_col[n2];
      const std::size_t u = prev[x], v = next[x];
      next[u] = v;
      prev[v] = u;
      const Coord merged = value[v] - value[u];
      if (merged > gap || (merged == gap && value[u] < gap_lo)) {
        gap = merged;
        gap_lo = value[u];
      }
      if (n2 == n1) break;
    }
    const std::size_t x = node_of_col[n1];
    base_next[base_prev[x]] = base_next[x];
    base_prev[base_next[x]] = base_prev[x];
  }
  return finish(best, den, DispersionAlgorithm::column_gap);
}

DispersionResult compute_dispersion(const GridPointSet& points, DispersionAlgorithm algo, Exec exec) {
  switch (algo) {
    case DispersionAlgorithm::sweep: return largest_empty_box(points, exec);
    case DispersionAlgorithm::brute: return dispersion_bruteforce(points);
    case DispersionAlgorithm::column_gap: return column_gap_dispersion(points);
  }
  return largest_empty_box(points, exec);
}

}  // namespace dispnet
