#pragma once

#include <string_view>

#include "dispnet/exec.hpp"
#include "dispnet/point_set.hpp"
#include "dispnet/rational.hpp"

namespace dispnet {

enum class DispersionAlgorithm { sweep, brute, column_gap };

const char* algorithm_name(DispersionAlgorithm algo);
DispersionAlgorithm parse_algorithm(std::string_view name);

/// Largest box whose open interior misses the point set, with its witness.
/// Among boxes of maximal area the witness is the lexicographically smallest
/// by (x_lo, y_lo, x_hi, y_hi); `column_gap` only guarantees the area.
struct DispersionResult {
  Rational area;
  BoxReport witness;
  GridBox box;
  DispersionAlgorithm algorithm;
};

/// Exact dispersion by support sweeps: every maximal empty box has its left
/// edge on a point (swept rightwards), its right edge on a point (swept
/// leftwards) or spans the full width. O(N^2) worst case, pruned by area.
DispersionResult largest_empty_box(const GridPointSet& points, Exec exec = Exec::parallel);

/// Enumerates every box with edges in the coordinate grid plus {0,1} and
/// scans for emptiness. Test oracle; refuses sets larger than `max_points`.
DispersionResult dispersion_bruteforce(const GridPointSet& points, std::size_t max_points = 64);

/// x-coordinates are exactly {0, 1/N, ..., (N-1)/N}.
bool is_permutation_structured(const GridPointSet& points);

/// Window formula over consecutive columns: max(1/N, max over windows
/// [n1, n2] of (n2 - n1 + 2)/N * largest gap of their y-values with {0,1}).
DispersionResult column_gap_dispersion(const GridPointSet& points);

DispersionResult compute_dispersion(const GridPointSet& points, DispersionAlgorithm algo,
                                    Exec exec = Exec::parallel);

}  // namespace dispnet
