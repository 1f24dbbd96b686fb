#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dispnet/empty_box.hpp"
#include "dispnet/net_construction.hpp"
#include "dispnet/rational.hpp"

namespace dispnet {

enum class BoundKind {
  dumi_lower,
  prop1_upper,
  prop2_lower,
  thm2_nut_upper,
  thm3_dyadic_nut_lower,
  prop4_c11_lower,
  thm4_hammersley_exact,
  thm5_badic_hammersley_lower,
  thm6_pu_exact,
  thm7_pl_lower,
  fibonacci_exact,
};

inline constexpr std::array<BoundKind, 11> kAllBounds = {
    BoundKind::dumi_lower,          BoundKind::prop1_upper,
    BoundKind::prop2_lower,         BoundKind::thm2_nut_upper,
    BoundKind::thm3_dyadic_nut_lower, BoundKind::prop4_c11_lower,
    BoundKind::thm4_hammersley_exact, BoundKind::thm5_badic_hammersley_lower,
    BoundKind::thm6_pu_exact,       BoundKind::thm7_pl_lower,
    BoundKind::fibonacci_exact,
};

enum class Relation { lower, upper, exact };

const char* bound_name(BoundKind kind);
BoundKind parse_bound(std::string_view name);
Relation relation_of(BoundKind kind);
const char* relation_name(Relation rel);

/// Exact value of a bound. `m_or_n` is the point count N for dumi_lower and
/// fibonacci_exact and the exponent m otherwise. Max-form bounds are
/// evaluated by direct maximization. Throws Error(domain_error) outside the
/// bound's domain.
Rational closed_form(BoundKind kind, std::uint32_t base, std::uint64_t m_or_n);

struct MaxForm {
  Rational value;
  std::uint32_t argmax;  // w for prop4/thm5, k for thm7; first maximizer
};

/// max_{w=0..b-1} (w+1)/b * (b-w)/b^m
MaxForm prop4_max_form(std::uint32_t base, std::uint32_t m);
/// b^-2m max_{w=2..b} (w+1)((b-w+2) b^(m-1) - b - 1)
MaxForm thm5_max_form(std::uint32_t base, std::uint32_t m);
/// max_{k=2..m-2} (2^(k+1)-1)/2^m (2^-(k-1) - 2^-m)
MaxForm thm7_max_form(std::uint32_t m);

/// The even/odd closed forms stated next to the max forms above.
Rational prop4_case_split(std::uint32_t base, std::uint32_t m);
Rational thm5_case_split(std::uint32_t base, std::uint32_t m);
Rational thm7_case_split(std::uint32_t m);

enum class Verdict { pass, fail, skipped };
const char* verdict_name(Verdict v);

struct BoundCheck {
  BoundKind kind;
  Relation relation;
  std::optional<Rational> value;
  Verdict verdict = Verdict::skipped;
  bool tight = false;  // disp == value; reported for lower bounds too
  std::string reason;  // why a bound was skipped
};

struct ConformanceReport {
  std::size_t n_points = 0;
  NetMeta meta;
  Rational dispersion;
  BoxReport witness;
  std::vector<BoundCheck> checks;

  bool all_pass() const;
};

/// Checks `disp` against every bound applicable to the construction `meta`.
ConformanceReport check_bounds(std::size_t n_points, const NetMeta& meta, const DispersionResult& disp);
ConformanceReport check_bounds(const GridPointSet& points, const NetMeta& meta, Exec exec = Exec::parallel);

nlohmann::json to_json(const ConformanceReport& report);
/// One row per bound: kind,relation,value,value_decimal,disp,disp_decimal,verdict,tight,reason
std::string to_csv(const ConformanceReport& report);

}  // namespace dispnet
