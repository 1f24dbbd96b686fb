#include "dispnet/bounds.hpp"

#include <sstream>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

BigInt pow_big(std::uint64_t base, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

Rational frac(const BigInt& num, const BigInt& den) { return Rational(num, den); }

[[noreturn]] void domain(BoundKind kind, const std::string& why) {
  throw Error(Errc::domain_error, std::string(bound_name(kind)) + ": " + why);
}

void require_base2(BoundKind kind, std::uint32_t base) {
  if (base != 2) domain(kind, "defined for base 2 only");
}

void require_base(BoundKind kind, std::uint32_t base) {
  if (base < 2) domain(kind, "base must be >= 2");
}

}  // namespace

const char* bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::dumi_lower: return "dumi_lower";
    case BoundKind::prop1_upper: return "prop1_upper";
    case BoundKind::prop2_lower: return "prop2_lower";
    case BoundKind::thm2_nut_upper: return "thm2_nut_upper";
    case BoundKind::thm3_dyadic_nut_lower: return "thm3_dyadic_nut_lower";
    case BoundKind::prop4_c11_lower: return "prop4_c11_lower";
    case BoundKind::thm4_hammersley_exact: return "thm4_hammersley_exact";
    case BoundKind::thm5_badic_hammersley_lower: return "thm5_badic_hammersley_lower";
    case BoundKind::thm6_pu_exact: return "thm6_pu_exact";
    case BoundKind::thm7_pl_lower: return "thm7_pl_lower";
    case BoundKind::fibonacci_exact: return "fibonacci_exact";
  }
  return "";
}

BoundKind parse_bound(std::string_view name) {
  for (auto kind : kAllBounds) {
    if (name == bound_name(kind)) return kind;
  }
  throw Error(Errc::invalid_argument, "unknown bound '" + std::string(name) + "'");
}

Relation relation_of(BoundKind kind) {
  switch (kind) {
    case BoundKind::prop1_upper:
    case BoundKind::thm2_nut_upper:
      return Relation::upper;
    case BoundKind::thm4_hammersley_exact:
    case BoundKind::thm6_pu_exact:
    case BoundKind::fibonacci_exact:
      return Relation::exact;
    default:
      return Relation::lower;
  }
}

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::lower: return "lower";
    case Relation::upper: return "upper";
    case Relation::exact: return "exact";
  }
  return "";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "";
}

MaxForm prop4_max_form(std::uint32_t base, std::uint32_t m) {
  const BigInt den = BigInt(base) * pow_big(base, m);
  MaxForm best{Rational(0), 0};
  for (std::uint32_t w = 0; w < base; ++w) {
    Rational v = frac(BigInt(w + 1) * (base - w), den);
    if (w == 0 || v > best.value) best = {std::move(v), w};
  }
  return best;
}

MaxForm thm5_max_form(std::uint32_t base, std::uint32_t m) {
  const BigInt bm1 = pow_big(base, m - 1);
  const BigInt den = pow_big(base, 2 * std::uint64_t{m});
  MaxForm best{Rational(0), 0};
  for (std::uint32_t w = 2; w <= base; ++w) {
    Rational v = frac(BigInt(w + 1) * (BigInt(base - w + 2) * bm1 - base - 1), den);
    if (w == 2 || v > best.value) best = {std::move(v), w};
  }
  return best;
}

MaxForm thm7_max_form(std::uint32_t m) {
  const Rational inv_2m = frac(1, pow_big(2, m));
  MaxForm best{Rational(0), 0};
  for (std::uint32_t k = 2; k + 2 <= m; ++k) {
    Rational v = frac(pow_big(2, k + 1) - 1, pow_big(2, m)) * (frac(1, pow_big(2, k - 1)) - inv_2m);
    if (k == 2 || v > best.value) best = {std::move(v), k};
  }
  return best;
}

Rational prop4_case_split(std::uint32_t base, std::uint32_t m) {
  const Rational inv = frac(1, pow_big(base, m));
  const Rational b(static_cast<std::int64_t>(base));
  if (base % 2 == 0) return Rational(1, 2) * (b / 2 + 1) * inv;
  const Rational half = (b + 1) / 2;
  return Rational(1) / b * half * half * inv;
}

Rational thm5_case_split(std::uint32_t base, std::uint32_t m) {
  const BigInt bm = pow_big(base, m);
  const Rational b(static_cast<std::int64_t>(base));
  if (base == 2) {
    const Rational t = frac(3, bm);
    return t * (Rational(1) - t);
  }
  if (base % 2 == 0) {
    return frac(base + 2, 2 * bm) * (frac(base + 4, 2 * BigInt(base)) - frac(base + 1, bm));
  }
  return frac(base + 3, 2 * bm) * (frac(base + 3, 2 * BigInt(base)) - frac(base + 1, bm));
}

Rational thm7_case_split(std::uint32_t m) {
  const BigInt two_m = pow_big(2, m);
  const Rational inv = frac(1, two_m);
  const Rational tail = m % 2 == 0 ? frac(4, pow_big(2, m / 2)) : frac(3, pow_big(2, (m - 1) / 2));
  return inv * (Rational(4) - tail + inv);
}

Rational closed_form(BoundKind kind, std::uint32_t base, std::uint64_t m_or_n) {
  const auto m = static_cast<std::uint32_t>(m_or_n);
  if (kind != BoundKind::dumi_lower && kind != BoundKind::fibonacci_exact && m_or_n < 1) {
    domain(kind, "m must be >= 1");
  }
  switch (kind) {
    case BoundKind::dumi_lower: {
      if (m_or_n < 1) domain(kind, "N must be >= 1");
      const BigInt n = m_or_n;
      return max(frac(1, n + 1), frac(5, 4 * (n + 5)));
    }
    case BoundKind::prop1_upper:
      require_base(kind, base);
      return frac(4 * BigInt(base) * base, pow_big(base, m));
    case BoundKind::prop2_lower: {
      require_base(kind, base);
      const Rational inv = frac(1, pow_big(base, m));
      return Rational(2) * inv * (Rational(1) - inv);
    }
    case BoundKind::thm2_nut_upper: {
      require_base(kind, base);
      const BigInt bm = pow_big(base, m);
      return frac(2 * BigInt(base), bm) * (Rational(1) - frac(base, 2 * bm));
    }
    case BoundKind::thm3_dyadic_nut_lower:
      require_base2(kind, base);
      if (m < 5) domain(kind, "requires m >= 5");
      return frac(5, 2 * pow_big(2, m));
    case BoundKind::prop4_c11_lower:
      require_base(kind, base);
      return prop4_max_form(base, m).value;
    case BoundKind::thm4_hammersley_exact: {
      require_base2(kind, base);
      if (m == 1) return Rational(1, 2);
      if (m == 2) return Rational(3, 8);
      if (m == 3) return Rational(1, 4);
      const Rational t = frac(3, pow_big(2, m));
      return t * (Rational(1) - t);
    }
    case BoundKind::thm5_badic_hammersley_lower:
      require_base(kind, base);
      if (m < 2) domain(kind, "requires m >= 2");
      return thm5_max_form(base, m).value;
    case BoundKind::thm6_pu_exact:
      require_base2(kind, base);
      if (m < 4) domain(kind, "requires m >= 4");
      return frac(5, pow_big(2, m + 1));
    case BoundKind::thm7_pl_lower:
      require_base2(kind, base);
      if (m < 4) domain(kind, "requires m >= 4");
      return thm7_max_form(m).value;
    case BoundKind::fibonacci_exact: {
      if (m_or_n < 2 || !is_fibonacci(m_or_n)) domain(kind, "N must be a Fibonacci number >= 2");
      const BigInt n = m_or_n;
      return frac(2 * (n - 1), n * n);
    }
  }
  domain(kind, "unknown bound");
}

namespace {

// Empty string when the bound applies, otherwise the reason it does not.
std::string inapplicable(BoundKind kind, const NetMeta& meta, std::size_t n_points) {
  const bool triangular = meta.digital && meta.is_net && meta.c2_shape != Triangular::other;
  switch (kind) {
    case BoundKind::dumi_lower:
      return "";
    case BoundKind::prop1_upper:
    case BoundKind::prop2_lower:
      return meta.is_net ? "" : "not a (0,m,2)-net";
    case BoundKind::thm2_nut_upper:
      return triangular ? "" : "not a digital NUT/NLT net";
    case BoundKind::thm3_dyadic_nut_lower:
      if (!triangular) return "not a digital NUT/NLT net";
      if (meta.base != 2) return "base is not 2";
      return meta.m >= 5 ? "" : "requires m >= 5";
    case BoundKind::prop4_c11_lower:
      if (!triangular) return "not a digital NUT/NLT net";
      return meta.corner_unit ? "" : "corner diagonal entry is not 1";
    case BoundKind::thm4_hammersley_exact:
      if (meta.family != Family::hammersley) return "not a Hammersley set";
      return meta.base == 2 ? "" : "base is not 2";
    case BoundKind::thm5_badic_hammersley_lower:
      if (meta.family != Family::hammersley) return "not a Hammersley set";
      return meta.m >= 2 ? "" : "requires m >= 2";
    case BoundKind::thm6_pu_exact:
      if (meta.family != Family::pu) return "not the PU net";
      return meta.m >= 4 ? "" : "requires m >= 4";
    case BoundKind::thm7_pl_lower:
      if (meta.family != Family::pl) return "not the PL net";
      return meta.m >= 4 ? "" : "requires m >= 4";
    case BoundKind::fibonacci_exact:
      if (meta.family != Family::fibonacci) return "not a Fibonacci lattice";
      return n_points >= 8 ? "" : "requires N >= F_6 = 8";
  }
  return "unknown bound";
}

}  // namespace

bool ConformanceReport::all_pass() const {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return false;
  }
  return true;
}

ConformanceReport check_bounds(std::size_t n_points, const NetMeta& meta, const DispersionResult& disp) {
  ConformanceReport report{n_points, meta, disp.area, disp.witness, {}};
  for (auto kind : kAllBounds) {
    BoundCheck check{kind, relation_of(kind), std::nullopt, Verdict::skipped, false, ""};
    check.reason = inapplicable(kind, meta, n_points);
    if (check.reason.empty()) {
      const std::uint64_t arg = (kind == BoundKind::dumi_lower || kind == BoundKind::fibonacci_exact) ? n_points : meta.m;
      Rational value = closed_form(kind, meta.base, arg);
      bool ok = false;
      switch (check.relation) {
        case Relation::lower: ok = disp.area >= value; break;
        case Relation::upper: ok = disp.area <= value; break;
        case Relation::exact: ok = disp.area == value; break;
      }
      check.tight = disp.area == value;
      check.verdict = ok ? Verdict::pass : Verdict::fail;
      check.value = std::move(value);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

ConformanceReport check_bounds(const GridPointSet& points, const NetMeta& meta, Exec exec) {
  return check_bounds(points.size(), meta, largest_empty_box(points, exec));
}

nlohmann::json to_json(const ConformanceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json row{{"kind", bound_name(c.kind)},
                       {"relation", relation_name(c.relation)},
                       {"verdict", verdict_name(c.verdict)}};
    if (c.value) {
      row["value"] = c.value->str();
      row["tight"] = c.tight;
    } else {
      row["reason"] = c.reason;
    }
    rows.push_back(std::move(row));
  }
  return {{"n_points", report.n_points},
          {"family", family_name(report.meta.family)},
          {"base", report.meta.base},
          {"m", report.meta.m},
          {"dispersion", report.dispersion.str()},
          {"witness", to_json(report.witness)},
          {"all_pass", report.all_pass()},
          {"checks", std::move(rows)}};
}

std::string to_csv(const ConformanceReport& report) {
  std::ostringstream out;
  out << "kind,relation,value,value_decimal,disp,disp_decimal,verdict,tight,reason\n";
  for (const auto& c : report.checks) {
    out << bound_name(c.kind) << ',' << relation_name(c.relation) << ',';
    if (c.value) {
      out << c.value->str() << ',' << c.value->decimal() << ',';
    } else {
      out << ",,";
    }
    out << report.dispersion.str() << ',' << report.dispersion.decimal() << ',' << verdict_name(c.verdict) << ','
        << (c.value ? (c.tight ? "equal" : "strict") : "") << ',' << c.reason << '\n';
  }
  return out.str();
}

}  // namespace dispnet
