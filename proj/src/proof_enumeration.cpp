#include "dispnet/proof_enumeration.hpp"

#include <algorithm>
#include <sstream>

#include "dispnet/empty_box.hpp"
#include "dispnet/net_construction.hpp"

namespace dispnet {

namespace {

// (row, col) of each coefficient, 0-based.
constexpr std::array<std::pair<int, int>, 10> kPositions = {{
    {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4},
}};

struct Listed {
  std::uint32_t w;
  Rational threshold;
  GapCondition condition;
};

const std::array<Listed, 5>& listed_conditions() {
  static const std::array<Listed, 5> conds = {{
      {2, Rational(29, 32), GapCondition::w2},
      {4, Rational(1, 2), GapCondition::w4},
      {9, Rational(1, 4), GapCondition::w9},
      {19, Rational(1, 8), GapCondition::w19},
      {28, Rational(3, 32), GapCondition::w28},
  }};
  return conds;
}

// Largest adjacent difference of the sorted window; first one on ties.
std::pair<Rational, Rational> window_gap(const std::vector<Rational>& values, std::uint32_t start, std::uint32_t w) {
  std::vector<Rational> win(values.begin() + start, values.begin() + start + w);
  std::sort(win.begin(), win.end());
  Rational gap(0), lo = win.front();
  for (std::size_t i = 0; i + 1 < win.size(); ++i) {
    Rational d = win[i + 1] - win[i];
    if (d > gap) {
      gap = std::move(d);
      lo = win[i];
    }
  }
  return {gap, lo};
}

GapWitness make_witness(std::uint32_t start, std::uint32_t w, Rational gap, Rational lo, GapCondition c) {
  Rational scaled = Rational(static_cast<std::int64_t>(w) + 1) * gap;
  return {start, w, std::move(gap), std::move(lo), std::move(scaled), c};
}

}  // namespace

NutCoeffs NutCoeffs::from_index(std::uint32_t index) {
  NutCoeffs c;
  for (int j = 0; j < 10; ++j) c.bits[j] = static_cast<std::uint8_t>((index >> (9 - j)) & 1U);
  return c;
}

std::uint32_t NutCoeffs::index() const {
  std::uint32_t i = 0;
  for (auto b : bits) i = (i << 1) | b;
  return i;
}

std::string NutCoeffs::str() const {
  std::string s;
  for (auto b : bits) s += static_cast<char>('0' + b);
  return s;
}

GFMatrix NutCoeffs::matrix() const {
  GFMatrix c = GFMatrix::identity(2, kNutM);
  for (std::size_t j = 0; j < kPositions.size(); ++j) {
    c.set(static_cast<std::size_t>(kPositions[j].first), static_cast<std::size_t>(kPositions[j].second), bits[j]);
  }
  return c;
}

std::vector<Rational> nu5_values(const NutCoeffs& coeffs) {
  const GridPointSet net = generate_net({GFMatrix::reversal(2, kNutM), coeffs.matrix()}, Exec::serial);
  std::vector<Rational> nu;
  nu.reserve(net.size());
  for (std::size_t n = 0; n < net.size(); ++n) nu.push_back(net.y(n));
  return nu;
}

const char* condition_name(GapCondition c) {
  switch (c) {
    case GapCondition::w2: return "w2";
    case GapCondition::w4: return "w4";
    case GapCondition::w9: return "w9";
    case GapCondition::w19: return "w19";
    case GapCondition::w28: return "w28";
    case GapCondition::general: return "general";
  }
  return "";
}

BoxReport GapWitness::box(std::uint32_t m) const {
  const BigInt den = BigInt(1) << m;
  return BoxReport::make(Rational(BigInt(n_start - 1), den), Rational(BigInt(n_start + w), den), gap_lo,
                         gap_lo + gap);
}

std::optional<GapWitness> find_gap_witness(const std::vector<Rational>& values, std::uint32_t max_index) {
  const auto last = std::min<std::uint32_t>(max_index, static_cast<std::uint32_t>(values.size()) - 1);
  for (std::uint32_t start = 1; start <= last; ++start) {
    for (const auto& cond : listed_conditions()) {
      if (start + cond.w - 1 > last) continue;
      auto [gap, lo] = window_gap(values, start, cond.w);
      if (gap >= cond.threshold) return make_witness(start, cond.w, std::move(gap), std::move(lo), cond.condition);
    }
  }
  return std::nullopt;
}

std::optional<GapWitness> find_window_witness(const std::vector<Rational>& values, const Rational& target,
                                              std::uint32_t max_index) {
  const auto last = std::min<std::uint32_t>(max_index, static_cast<std::uint32_t>(values.size()) - 1);
  for (std::uint32_t start = 1; start <= last; ++start) {
    for (std::uint32_t w = 2; start + w - 1 <= last; ++w) {
      auto [gap, lo] = window_gap(values, start, w);
      if (Rational(static_cast<std::int64_t>(w) + 1) * gap >= target) {
        return make_witness(start, w, std::move(gap), std::move(lo), GapCondition::general);
      }
    }
  }
  return std::nullopt;
}

bool CaseResult::ok() const {
  const GapWitness* wit = used();
  return wit != nullptr && wit->implied_area_scaled >= Rational(5, 2) && wit->n_start + wit->w <= 32 &&
         witness_box_empty && witness_below_disp && disp_in_range;
}

namespace {

CaseResult run_case(std::uint32_t index) {
  CaseResult r;
  r.coeffs = NutCoeffs::from_index(index);
  const GridPointSet net = generate_net({GFMatrix::reversal(2, kNutM), r.coeffs.matrix()}, Exec::serial);
  std::vector<Rational> nu;
  for (std::size_t n = 0; n < net.size(); ++n) nu.push_back(net.y(n));

  r.witness = find_gap_witness(nu);
  if (!r.witness) r.fallback = find_window_witness(nu, Rational(5, 2));
  r.dispersion = largest_empty_box(net, Exec::serial).area;
  r.disp_in_range = r.dispersion >= Rational(5, 64) && r.dispersion <= Rational(31, 256);
  if (const GapWitness* wit = r.used()) {
    const BoxReport box = wit->box();
    r.witness_box_empty = box_is_interior_empty(net, box);
    r.witness_below_disp = box.area <= r.dispersion;
  }
  return r;
}

}  // namespace

EnumerationSummary enumerate_theorem3(Exec exec) {
  EnumerationSummary s;
  s.cases.resize(kNutCases);
  if (exec == Exec::serial) {
    for (std::uint32_t i = 0; i < kNutCases; ++i) s.cases[i] = run_case(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < std::int64_t{kNutCases}; ++i) {
      s.cases[static_cast<std::size_t>(i)] = run_case(static_cast<std::uint32_t>(i));
    }
  }

  bool first = true, first_fallback = true;
  for (const auto& c : s.cases) {
    if (c.witness) ++s.listed_covered;
    const GapWitness* wit = c.used();
    if (wit && wit->implied_area_scaled >= Rational(5, 2)) ++s.covered;
    if (!c.ok()) ++s.failures;
    if (wit) {
      ++s.per_condition[static_cast<std::size_t>(wit->condition)];
      if (first || wit->implied_area_scaled < s.min_implied_area) s.min_implied_area = wit->implied_area_scaled;
      if (wit->condition == GapCondition::w2 || wit->condition == GapCondition::w28) {
        if (first_fallback || wit->implied_area_scaled < s.min_fallback_area) {
          s.min_fallback_area = wit->implied_area_scaled;
        }
        first_fallback = false;
      }
    }
    if (first || c.dispersion < s.min_dispersion) s.min_dispersion = c.dispersion;
    if (first || c.dispersion > s.max_dispersion) s.max_dispersion = c.dispersion;
    first = false;
  }
  return s;
}

std::string to_csv(const EnumerationSummary& summary) {
  std::ostringstream out;
  out << "bits,index,condition,n_start,w,gap,implied_area,dispersion,dispersion_decimal,ok\n";
  for (const auto& c : summary.cases) {
    out << c.coeffs.str() << ',' << c.coeffs.index() << ',';
    if (const GapWitness* w = c.used()) {
      out << condition_name(w->condition) << ',' << w->n_start << ',' << w->w << ',' << w->gap.str() << ','
          << w->implied_area_scaled.str() << ',';
    } else {
      out << "none,,,,,";
    }
    out << c.dispersion.str() << ',' << c.dispersion.decimal() << ',' << (c.ok() ? "pass" : "fail") << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const EnumerationSummary& summary) {
  nlohmann::json counts = nlohmann::json::object();
  for (std::size_t i = 0; i < summary.per_condition.size(); ++i) {
    counts[condition_name(static_cast<GapCondition>(i))] = summary.per_condition[i];
  }
  return {{"cases", kNutCases},
          {"covered", summary.covered},
          {"listed_covered", summary.listed_covered},
          {"failures", summary.failures},
          {"per_condition", std::move(counts)},
          {"min_implied_area_scaled", summary.min_implied_area.str()},
          {"min_fallback_area_scaled", summary.min_fallback_area.str()},
          {"min_dispersion", summary.min_dispersion.str()},
          {"max_dispersion", summary.max_dispersion.str()},
          {"all_ok", summary.all_ok()}};
}

}  // namespace dispnet
