#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dispnet/exec.hpp"
#include "dispnet/gf_matrix.hpp"
#include "dispnet/point_set.hpp"
#include "dispnet/rational.hpp"

namespace dispnet {

/// Strict upper-triangular entries of a dyadic NUT matrix with unit diagonal,
/// ordered (c12, c13, c23, c14, c24, c34, c15, c25, c35, c45).
struct NutCoeffs {
  std::array<std::uint8_t, 10> bits{};

  /// Case index i in [0, 1024): bits[j] = (i >> (9 - j)) & 1, so c12 is the
  /// most significant bit.
  static NutCoeffs from_index(std::uint32_t index);
  std::uint32_t index() const;
  std::string str() const;  // e.g. "1110000000"

  /// The 5x5 generator matrix C2.
  GFMatrix matrix() const;
};

inline constexpr std::uint32_t kNutCases = 1024;
inline constexpr std::uint32_t kNutM = 5;

/// nu(n) = second coordinate of point n of the (J_5, C2) net, n = 0..31.
std::vector<Rational> nu5_values(const NutCoeffs& coeffs);

enum class GapCondition { w2, w4, w9, w19, w28, general };

const char* condition_name(GapCondition c);

/// Window of w consecutive indices n_start..n_start+w-1 whose sorted values
/// have an adjacent difference of `gap` (0 and 1 not included) starting at
/// `gap_lo`. The implied empty box is ((n_start-1)/32, (n_start+w)/32) x
/// (gap_lo, gap_lo + gap) with area (w+1) * gap / 32.
struct GapWitness {
  std::uint32_t n_start = 0;
  std::uint32_t w = 0;
  Rational gap;
  Rational gap_lo;
  Rational implied_area_scaled;  // (w+1) * gap, in units of 2^-m
  GapCondition condition = GapCondition::general;

  BoxReport box(std::uint32_t m = kNutM) const;
};

/// First window (smallest n_start, then smallest w) among w in {2,4,9,19,28}
/// with gap at least {29/32, 1/2, 1/4, 1/8, 3/32}. Only indices 1..max_index
/// are used.
std::optional<GapWitness> find_gap_witness(const std::vector<Rational>& values, std::uint32_t max_index = 31);

/// First window of any length with (w+1) * gap >= target, same search order.
std::optional<GapWitness> find_window_witness(const std::vector<Rational>& values, const Rational& target,
                                              std::uint32_t max_index = 31);

struct CaseResult {
  NutCoeffs coeffs;
  std::optional<GapWitness> witness;   // listed conditions
  std::optional<GapWitness> fallback;  // general window, only when `witness` is empty
  Rational dispersion;
  bool witness_box_empty = false;
  bool witness_below_disp = false;
  bool disp_in_range = false;  // 5/64 <= disp <= 31/256

  const GapWitness* used() const { return witness ? &*witness : fallback ? &*fallback : nullptr; }
  bool ok() const;
};

struct EnumerationSummary {
  std::vector<CaseResult> cases;  // by case index
  std::array<std::uint32_t, 6> per_condition{};  // indexed by GapCondition
  std::uint32_t listed_covered = 0;
  std::uint32_t covered = 0;
  std::uint32_t failures = 0;
  Rational min_implied_area;
  Rational min_fallback_area;  // over w2/w28 witnesses; 0 if none
  Rational min_dispersion, max_dispersion;

  bool all_ok() const { return failures == 0 && covered == kNutCases; }
};

EnumerationSummary enumerate_theorem3(Exec exec = Exec::parallel);

/// One row per case: bits,index,condition,n_start,w,gap,implied_area,dispersion,dispersion_decimal,ok
std::string to_csv(const EnumerationSummary& summary);
nlohmann::json to_json(const EnumerationSummary& summary);

}  // namespace dispnet
