#include <random>
#include <set>

#include "doctest.h"

#include "dispnet/empty_box.hpp"
#include "dispnet/error.hpp"
#include "dispnet/net_construction.hpp"

using namespace dispnet;

namespace {

std::vector<GridPoint> pts(std::initializer_list<GridPoint> l) { return l; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::invalid_argument;
}

GFMatrix random_triangular(std::mt19937_64& rng, std::uint32_t b, std::size_t m, bool upper) {
  GFMatrix a(b, m);
  std::uniform_int_distribution<std::uint32_t> any(0, b - 1), nonzero(1, b - 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r == c) a.set(r, c, nonzero(rng));
      else if ((c > r) == upper) a.set(r, c, any(rng));
    }
  }
  return a;
}

}  // namespace

TEST_CASE("generate_net small cases") {
  const auto h = generate_net({GFMatrix::reversal(2, 2), GFMatrix::identity(2, 2)});
  CHECK(std::vector<GridPoint>(h.points().begin(), h.points().end()) == pts({{0, 0}, {1, 2}, {2, 1}, {3, 3}}));
  const auto one = generate_net({GFMatrix::reversal(2, 1), GFMatrix::identity(2, 1)});
  CHECK(std::vector<GridPoint>(one.points().begin(), one.points().end()) == pts({{0, 0}, {1, 1}}));
  CHECK(code_of([] { generate_net({GFMatrix::reversal(2, 3), GFMatrix::identity(2, 2)}); }) ==
        Errc::dimension_mismatch);
}

TEST_CASE("C1 = J gives x = n / b^m and serial equals parallel") {
  std::mt19937_64 rng(11);
  for (std::uint32_t b : {2U, 3U, 5U}) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const NetSpec spec{GFMatrix::reversal(b, m), random_triangular(rng, b, m, m % 2 == 0)};
      const auto a = generate_net(spec, Exec::serial);
      const auto p = generate_net(spec, Exec::parallel);
      CHECK(a == p);
      for (std::size_t n = 0; n < a.size(); ++n) CHECK(a[n].x == n);
    }
  }
}

TEST_CASE("digit maps") {
  for (std::uint32_t m = 2; m <= 12; ++m) {
    const Rational inv(BigInt(1), BigInt(1) << m);
    CHECK(digit_map(DigitMap::radical_inverse, 2, m, std::uint64_t{1} << (m - 1)) == inv);
    CHECK(digit_map(DigitMap::radical_inverse, 2, m, (std::uint64_t{1} << (m - 1)) - 1) == Rational(1) - 2 * inv);
    CHECK(digit_map(DigitMap::radical_inverse, 2, m, 0) == Rational(0));
  }
  for (std::uint32_t m = 4; m <= 10; ++m) {
    CHECK(digit_map(DigitMap::psi, 2, m, 4) == Rational(3, 16));
    CHECK(digit_map(DigitMap::psi, 2, m, 5) == Rational(15, 16));
    CHECK(digit_map(DigitMap::psi, 2, m, 6) == Rational(5, 16));
  }
  for (std::uint32_t m = 4; m <= 10; ++m) {
    for (std::uint32_t k = 1; k + 1 < m; ++k) {
      Rational expect(0);
      for (std::uint32_t j = k + 2; j <= m; ++j) expect += Rational(BigInt(1), BigInt(1) << j);
      CHECK(digit_map(DigitMap::omega, 2, m, std::uint64_t{1} << (k + 1)) == expect);
    }
  }
  CHECK(digit_map(DigitMap::radical_inverse, 3, 2, 5) == Rational(7, 9));  // 5 = 12_3 -> 0.21_3
  CHECK(code_of([] { digit_map(DigitMap::psi, 3, 2, 1); }) == Errc::unsupported_base);
  CHECK(code_of([] { digit_map(DigitMap::radical_inverse, 2, 3, 8); }) == Errc::out_of_range);
}

TEST_CASE("hammersley") {
  const auto h22 = hammersley(2, 2);
  CHECK(std::vector<GridPoint>(h22.points().begin(), h22.points().end()) == pts({{0, 0}, {1, 2}, {2, 1}, {3, 3}}));
  const auto h31 = hammersley(3, 1);
  CHECK(std::vector<GridPoint>(h31.points().begin(), h31.points().end()) == pts({{0, 0}, {1, 1}, {2, 2}}));
  for (std::uint32_t m = 1; m <= 8; ++m) {
    CHECK(hammersley(2, m) == generate_net({GFMatrix::reversal(2, m), GFMatrix::identity(2, m)}));
  }
  CHECK(hammersley(3, 4) == generate_net({GFMatrix::reversal(3, 4), GFMatrix::identity(3, 4)}));
  // composite base goes through the radical inverse
  const auto h6 = hammersley(6, 2);
  CHECK(h6.size() == 36);
  CHECK(is_0m2_net_by_counting(h6));
  CHECK(describe_hammersley(6, 2).is_net);
  CHECK_FALSE(describe_hammersley(6, 2).digital);
}

TEST_CASE("named nets and their digit maps") {
  for (std::uint32_t m = 1; m <= 10; ++m) {
    const auto pl = named_net(NamedNet::pl, 2, m);
    for (std::size_t n = 0; n < pl.size(); ++n) CHECK(pl.y(n) == digit_map(DigitMap::omega, 2, m, n));
    // the swap of PU is generated by (J, J U^{-1} J); its point n is (n/2^m, psi(n))
    const auto pu = named_net(NamedNet::pu, 2, m);
    const auto dual = generate_net({GFMatrix::reversal(2, m), nlt_dual(GFMatrix::upper_ones(2, m))});
    CHECK(same_point_multiset(pu.swapped(), dual));
    CHECK(same_point_multiset(pu, generate_net({nlt_dual(GFMatrix::upper_ones(2, m)), GFMatrix::reversal(2, m)})));
    for (std::size_t n = 0; n < dual.size(); ++n) CHECK(dual.y(n) == digit_map(DigitMap::psi, 2, m, n));
  }
  CHECK(named_net(NamedNet::pu, 2, 4) == generate_net({GFMatrix::reversal(2, 4), GFMatrix::upper_ones(2, 4)}));
  CHECK(named_net(NamedNet::hammersley, 3, 3) == hammersley(3, 3));
  CHECK(code_of([] { named_net(NamedNet::pl, 3, 3); }) == Errc::unsupported_base);
}

TEST_CASE("duality: net(nlt_dual(C2), J) equals net(J, C2) and swapping the roles swaps the set") {
  std::mt19937_64 rng(21);
  for (std::size_t m = 1; m <= 6; ++m) {
    for (int t = 0; t < 10; ++t) {
      const GFMatrix c2 = random_triangular(rng, 2, m, t % 2 == 0);
      const auto net = generate_net({GFMatrix::reversal(2, m), c2});
      const auto dual = generate_net({nlt_dual(c2), GFMatrix::reversal(2, m)});
      const auto switched = generate_net({GFMatrix::reversal(2, m), nlt_dual(c2)});
      CHECK(same_point_multiset(net, dual));
      CHECK(same_point_multiset(net.swapped(), switched));
      CHECK(largest_empty_box(net).area == largest_empty_box(switched).area);
    }
  }
}

TEST_CASE("fibonacci lattices") {
  CHECK(fibonacci_number(1) == 1);
  CHECK(fibonacci_number(2) == 1);
  CHECK(fibonacci_number(7) == 13);
  CHECK(fibonacci_number(13) == 233);
  CHECK(is_fibonacci(144));
  CHECK_FALSE(is_fibonacci(12));
  const auto f2 = fibonacci_lattice(2);
  CHECK(std::vector<GridPoint>(f2.points().begin(), f2.points().end()) == pts({{0, 0}, {1, 1}}));
  const auto f13 = fibonacci_lattice(13);
  CHECK(f13.size() == 13);
  CHECK(f13.den() == 13);
  CHECK(f13[1] == GridPoint{1, 8});
  CHECK(f13[5] == GridPoint{5, 1});
  CHECK(code_of([] { fibonacci_lattice(12); }) == Errc::not_fibonacci);
  CHECK(code_of([] { fibonacci_lattice(1); }) == Errc::not_fibonacci);
}

TEST_CASE("counting oracle agrees with the rank condition") {
  CHECK(is_0m2_net_by_counting(hammersley(2, 3)));
  auto dup = hammersley(2, 2);
  std::vector<GridPoint> p(dup.points().begin(), dup.points().end());
  p[3] = p[2];
  CHECK_FALSE(is_0m2_net_by_counting(GridPointSet(2, 2, p)));
  CHECK(code_of([] { is_0m2_net_by_counting(GridPointSet(2, 2, {{0, 0}})); }) == Errc::grid_mismatch);

  // exhaustive over all 2x2..4x4 binary C2 for small m, and random over b = 3, 5
  for (std::size_t m = 1; m <= 3; ++m) {
    const std::uint64_t cases = std::uint64_t{1} << (m * m);
    for (std::uint64_t bits = 0; bits < cases; ++bits) {
      GFMatrix c2(2, m);
      for (std::size_t i = 0; i < m * m; ++i) c2.set(i / m, i % m, (bits >> i) & 1U);
      for (const auto& c1 : {GFMatrix::reversal(2, m), GFMatrix::identity(2, m)}) {
        const NetSpec spec{c1, c2};
        CHECK(is_0m2_net_by_counting(generate_net(spec)) == net_rank_condition(c1, c2));
      }
    }
  }
  for (std::uint64_t bits = 0; bits < (1U << 6); ++bits) {
    for (bool upper : {true, false}) {
      GFMatrix c2 = GFMatrix::identity(2, 4);
      std::uint64_t k = bits;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r + 1; c < 4; ++c, k >>= 1) upper ? c2.set(r, c, k & 1U) : c2.set(c, r, k & 1U);
      CHECK(is_0m2_net_by_counting(generate_net({GFMatrix::reversal(2, 4), c2})));
    }
  }
  std::mt19937_64 rng(8);
  for (std::uint32_t b : {3U, 5U}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (int t = 0; t < 6; ++t) {
        GFMatrix c2(b, m);
        std::uniform_int_distribution<std::uint32_t> d(0, b - 1);
        for (std::size_t i = 0; i < m * m; ++i) c2.set(i / m, i % m, d(rng));
        const NetSpec spec{GFMatrix::reversal(b, m), c2};
        CHECK(is_0m2_net_by_counting(generate_net(spec)) == net_rank_condition(spec.c1, spec.c2));
      }
    }
  }
}

TEST_CASE("describe") {
  const auto pu = describe_named(NamedNet::pu, 2, 5);
  CHECK(pu.family == Family::pu);
  CHECK(pu.is_net);
  CHECK(pu.digital);
  CHECK(pu.c2_shape == Triangular::nut);
  CHECK(pu.corner_unit);
  const auto pl = describe_named(NamedNet::pl, 2, 5);
  CHECK(pl.c2_shape == Triangular::nlt);
  CHECK(pl.corner_unit);
  const auto h = describe_hammersley(3, 3);
  CHECK(h.c2_shape == Triangular::diagonal);
  const auto bad = describe({GFMatrix::identity(2, 3), GFMatrix::identity(2, 3)});
  CHECK_FALSE(bad.is_net);
  CHECK_FALSE(bad.digital);
  const auto f = describe_fibonacci(21);
  CHECK(f.family == Family::fibonacci);
  CHECK_FALSE(f.is_net);
  const auto raw = describe_raw(hammersley(2, 3));
  CHECK(raw.family == Family::raw);
  CHECK_FALSE(raw.is_net);
}
