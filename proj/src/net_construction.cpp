#include "dispnet/net_construction.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

std::vector<std::uint32_t> digits_of(std::uint64_t n, std::uint32_t base, std::size_t m) {
  std::vector<std::uint32_t> e(m);
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = static_cast<std::uint32_t>(n % base);
    n /= base;
  }
  return e;
}

// sum_i y_i b^(m-i), i = 1..m, y stored 0-based.
Coord to_numerator(const std::vector<std::uint32_t>& y, std::uint32_t base) {
  Coord v = 0;
  for (auto d : y) v = v * base + d;
  return v;
}

}  // namespace

GridPointSet generate_net(const NetSpec& spec, Exec exec) {
  const auto& c1 = spec.c1;
  const auto& c2 = spec.c2;
  if (c1.base() != c2.base() || c1.m() != c2.m()) {
    throw Error(Errc::dimension_mismatch, "generator matrices differ in base or size");
  }
  const std::uint32_t b = c1.base();
  const auto m = static_cast<std::uint32_t>(c1.m());
  const Coord n_points = checked_power(b, m);
  std::vector<GridPoint> pts(n_points);

  auto fill = [&](std::int64_t n) {
    const auto e = digits_of(static_cast<std::uint64_t>(n), b, m);
    std::vector<std::uint32_t> y1(m), y2(m);
    c1.apply(e, y1);
    c2.apply(e, y2);
    pts[static_cast<std::size_t>(n)] = {to_numerator(y1, b), to_numerator(y2, b)};
  };
  const auto count = static_cast<std::int64_t>(n_points);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n < count; ++n) fill(n);
  } else {
    for (std::int64_t n = 0; n < count; ++n) fill(n);
  }
  return GridPointSet(b, m, std::move(pts));
}

Coord digit_map_numerator(DigitMap kind, std::uint32_t base, std::uint32_t m, std::uint64_t n) {
  const Coord den = checked_power(base, m);
  if (n >= den) throw Error(Errc::out_of_range, "n must be < base^m");
  if (kind != DigitMap::radical_inverse && base != 2) {
    throw Error(Errc::unsupported_base, "psi and omega are defined for base 2 only");
  }
  const auto e = digits_of(n, base, m);
  std::vector<std::uint32_t> y(m);
  std::uint32_t prefix = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    switch (kind) {
      case DigitMap::radical_inverse: y[i] = e[i]; break;
      case DigitMap::psi: y[i] = (i == 0 ? 0u : e[i - 1]) ^ e[i]; break;
      case DigitMap::omega: prefix ^= e[i]; y[i] = prefix; break;
    }
  }
  return to_numerator(y, base);
}

Rational digit_map(DigitMap kind, std::uint32_t base, std::uint32_t m, std::uint64_t n) {
  return Rational(digit_map_numerator(kind, base, m, n), checked_power(base, m));
}

GridPointSet hammersley(std::uint32_t base, std::uint32_t m) {
  const Coord den = checked_power(base, m);
  std::vector<GridPoint> pts(den);
  for (Coord n = 0; n < den; ++n) {
    pts[n] = {n, digit_map_numerator(DigitMap::radical_inverse, base, m, n)};
  }
  return GridPointSet(base, m, std::move(pts));
}

GridPointSet named_net(NamedNet kind, std::uint32_t base, std::uint32_t m) {
  if (kind == NamedNet::hammersley) return hammersley(base, m);
  if (base != 2) throw Error(Errc::unsupported_base, "PU and PL are defined in base 2");
  GFMatrix c2 = kind == NamedNet::pu ? GFMatrix::upper_ones(2, m) : GFMatrix::lower_ones(2, m);
  return generate_net(NetSpec{GFMatrix::reversal(2, m), std::move(c2)});
}

std::uint64_t fibonacci_number(std::uint32_t k) {
  if (k == 0) return 0;
  std::uint64_t a = 1, b = 1;  // F_1, F_2
  for (std::uint32_t i = 2; i < k; ++i) {
    if (b > std::uint64_t{1} << 62) throw Error(Errc::too_large, "Fibonacci index too large");
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return k == 1 ? a : b;
}

bool is_fibonacci(std::uint64_t n) {
  std::uint64_t a = 1, b = 1;
  while (b < n) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b == n;
}

GridPointSet fibonacci_lattice(std::uint64_t n) {
  if (n < 2 || !is_fibonacci(n)) throw Error(Errc::not_fibonacci, std::to_string(n) + " is not a Fibonacci number >= 2");
  if (n > GridPointSet::kMaxDen) throw Error(Errc::too_large, "lattice too large");
  std::uint64_t prev = 1, cur = 1;
  while (cur < n) {
    std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  std::vector<GridPoint> pts(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    pts[i] = {i, static_cast<Coord>(u128(i) * prev % n)};
  }
  return GridPointSet(static_cast<std::uint32_t>(n), 1, std::move(pts));
}

bool is_0m2_net_by_counting(const GridPointSet& points) {
  const std::uint32_t b = points.base();
  const std::uint32_t m = points.m();
  const Coord den = points.den();
  if (points.size() != den) {
    throw Error(Errc::grid_mismatch, "a (0,m,2)-net in base b has exactly b^m points");
  }
  std::vector<std::uint32_t> counts(den);
  for (std::uint32_t j1 = 0; j1 <= m; ++j1) {
    const Coord x_width = checked_power(b, m - j1);  // b^j1 intervals across x
    const Coord y_width = checked_power(b, j1);      // b^(m-j1) intervals across y
    const Coord y_cells = x_width;
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& p : points.points()) {
      const Coord cell = (p.x / x_width) * y_cells + p.y / y_width;
      if (++counts[cell] > 1) return false;
    }
  }
  return true;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::raw: return "raw";
    case Family::digital: return "digital";
    case Family::hammersley: return "hammersley";
    case Family::pu: return "PU";
    case Family::pl: return "PL";
    case Family::fibonacci: return "fibonacci";
  }
  return "raw";
}

NetMeta describe(const NetSpec& spec) {
  NetMeta meta;
  meta.family = Family::digital;
  meta.base = spec.base();
  meta.m = static_cast<std::uint32_t>(spec.m());
  meta.is_net = net_rank_condition(spec.c1, spec.c2);
  meta.digital = spec.c1 == GFMatrix::reversal(spec.base(), spec.m());
  if (meta.digital) {
    meta.c2_shape = classify_triangular(spec.c2);
    const std::size_t last = spec.m() - 1;
    switch (meta.c2_shape) {
      case Triangular::nut: meta.corner_unit = spec.c2(0, 0) == 1; break;
      case Triangular::nlt: meta.corner_unit = spec.c2(last, last) == 1; break;
      case Triangular::diagonal: meta.corner_unit = spec.c2(0, 0) == 1 || spec.c2(last, last) == 1; break;
      case Triangular::other: break;
    }
  }
  return meta;
}

NetMeta describe_hammersley(std::uint32_t base, std::uint32_t m) {
  NetMeta meta;
  if (is_prime(base)) {
    meta = describe(NetSpec{GFMatrix::reversal(base, m), GFMatrix::identity(base, m)});
  } else {
    meta.base = base;
    meta.m = m;
    meta.is_net = true;
  }
  meta.family = Family::hammersley;
  return meta;
}

NetMeta describe_named(NamedNet kind, std::uint32_t base, std::uint32_t m) {
  if (kind == NamedNet::hammersley) return describe_hammersley(base, m);
  if (base != 2) throw Error(Errc::unsupported_base, "PU and PL are defined in base 2");
  GFMatrix c2 = kind == NamedNet::pu ? GFMatrix::upper_ones(2, m) : GFMatrix::lower_ones(2, m);
  NetMeta meta = describe(NetSpec{GFMatrix::reversal(2, m), std::move(c2)});
  meta.family = kind == NamedNet::pu ? Family::pu : Family::pl;
  return meta;
}

NetMeta describe_fibonacci(std::uint64_t n) {
  NetMeta meta;
  meta.family = Family::fibonacci;
  meta.base = static_cast<std::uint32_t>(n);
  meta.m = 1;
  return meta;
}

NetMeta describe_raw(const GridPointSet& points) {
  NetMeta meta;
  meta.base = points.base();
  meta.m = points.m();
  return meta;
}

}  // namespace dispnet
