#pragma once

#include <optional>
#include <string_view>

#include "json.hpp"

#include "dispnet/exec.hpp"
#include "dispnet/point_set.hpp"
#include "dispnet/rational.hpp"

namespace dispnet {

// All values use the unnormalized discrepancy function
//   Delta(t) = #{z in P : z in [0, t)} - N t1 t2.

enum class DiscrepancyKind { star, l2_squared, extreme };

const char* discrepancy_kind_name(DiscrepancyKind kind);
DiscrepancyKind parse_discrepancy_kind(std::string_view name);

/// Box attaining the supremum. `closed` means the count includes points on
/// the boundary (approached from outside) and the value is count - N*area;
/// otherwise only strictly interior points count and the value is
/// N*area - count. Open star witnesses are anchored boxes [0,a) x [0,b), so
/// points on the lower edges count. The box may be degenerate for closed
/// witnesses.
struct DiscrepancyWitness {
  Rational x_lo, x_hi, y_lo, y_hi;
  bool closed = false;
};

struct DiscrepancyReport {
  DiscrepancyKind kind;
  Rational value;
  std::optional<DiscrepancyWitness> witness;
};

/// sup_t |Delta(t)| over anchored boxes, evaluated at critical corners.
DiscrepancyReport star_discrepancy(const GridPointSet& points);

/// Integral of Delta^2 over the unit square via the pairwise (Warnock) sum.
DiscrepancyReport l2_star_discrepancy_squared(const GridPointSet& points, Exec exec = Exec::parallel);

inline constexpr std::size_t kExtremeDefaultCap = 1024;

/// sup over all axis-parallel boxes of |count - N*area|. O(K^3) in the number
/// of distinct coordinates; sets above `max_points` throw Error(too_large).
DiscrepancyReport extreme_discrepancy(const GridPointSet& points, Exec exec = Exec::parallel,
                                      std::size_t max_points = kExtremeDefaultCap);

DiscrepancyReport compute_discrepancy(const GridPointSet& points, DiscrepancyKind kind, Exec exec = Exec::parallel);

nlohmann::json to_json(const DiscrepancyReport& report);

}  // namespace dispnet
