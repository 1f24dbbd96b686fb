#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "dispnet/discrepancy.hpp"
#include "dispnet/empty_box.hpp"
#include "dispnet/error.hpp"
#include "dispnet/net_construction.hpp"

using namespace dispnet;

TEST_CASE("star discrepancy examples") {
  CHECK(star_discrepancy(GridPointSet(2, 1, {{0, 0}})).value == Rational(1));
  const auto two = star_discrepancy(GridPointSet(2, 1, {{0, 0}, {1, 1}}));
  CHECK(two.value == Rational(3, 2));
  REQUIRE(two.witness);
  CHECK(two.witness->closed);
  CHECK(two.witness->x_hi == Rational(1, 2));
  CHECK(two.witness->y_hi == Rational(1, 2));
  CHECK(star_discrepancy(GridPointSet(2, 1, {{0, 0}, {0, 0}})).value == Rational(2));
  CHECK_THROWS_AS(star_discrepancy(GridPointSet(2, 1, {})), Error);
}

TEST_CASE("L2 examples") {
  CHECK(l2_star_discrepancy_squared(GridPointSet(2, 1, {{0, 0}})).value == Rational(11, 18));
  CHECK(l2_star_discrepancy_squared(hammersley(2, 3)).value == Rational(4499, 4608));
  CHECK_THROWS_AS(l2_star_discrepancy_squared(GridPointSet(2, 1, {})), Error);
}

TEST_CASE("extreme discrepancy examples") {
  CHECK(extreme_discrepancy(GridPointSet(2, 1, {{1, 1}})).value == Rational(1));
  CHECK(extreme_discrepancy(GridPointSet(2, 1, {{0, 0}, {1, 1}})).value == Rational(3, 2));
  try {
    extreme_discrepancy(hammersley(2, 4), Exec::serial, 8);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
  }
  CHECK(parse_discrepancy_kind("l2") == DiscrepancyKind::l2_squared);
  CHECK_THROWS_AS(parse_discrepancy_kind("l3"), Error);
}

TEST_CASE("star discrepancy against the dense corner oracle") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 80; ++t) {
    const auto p = oracle::random_grid_set(rng, t % 3 == 0 ? 3 : 2, 1 + static_cast<std::uint32_t>(rng() % 4),
                                           1 + rng() % 16);
    CHECK(star_discrepancy(p).value == oracle::star_dense(p));
  }
  for (std::uint32_t m = 1; m <= 4; ++m) CHECK(star_discrepancy(hammersley(2, m)).value == oracle::star_dense(hammersley(2, m)));
}

TEST_CASE("Warnock sum against cell integration") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto p = oracle::random_grid_set(rng, 2, 1 + static_cast<std::uint32_t>(rng() % 5), 1 + rng() % 8);
    const Rational v = l2_star_discrepancy_squared(p, Exec::serial).value;
    CHECK(v == oracle::l2_cells(p));
    CHECK(l2_star_discrepancy_squared(p, Exec::parallel).value == v);
  }
  CHECK(l2_star_discrepancy_squared(hammersley(3, 2)).value == oracle::l2_cells(hammersley(3, 2)));
}

TEST_CASE("L2 is invariant under point order") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const auto p = oracle::random_grid_set(rng, 2, 6, 2 + rng() % 30);
    std::vector<GridPoint> q(p.points().begin(), p.points().end());
    std::shuffle(q.begin(), q.end(), rng);
    CHECK(l2_star_discrepancy_squared(GridPointSet(2, 6, q)).value == l2_star_discrepancy_squared(p).value);
  }
}

TEST_CASE("extreme discrepancy against the box oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    const auto p = oracle::random_grid_set(rng, 2, 1 + static_cast<std::uint32_t>(rng() % 3), 1 + rng() % 6);
    const auto serial = extreme_discrepancy(p, Exec::serial);
    CHECK(serial.value == oracle::extreme_dense(p));
    const auto par = extreme_discrepancy(p, Exec::parallel);
    CHECK(par.value == serial.value);
    CHECK(par.witness->x_lo == serial.witness->x_lo);
    CHECK(par.witness->y_hi == serial.witness->y_hi);
  }
}

TEST_CASE("witnesses reproduce the value") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const auto p = oracle::random_grid_set(rng, 2, 4, 1 + rng() % 12);
    const Rational n(static_cast<std::int64_t>(p.size()));
    for (const auto& rep : {star_discrepancy(p), extreme_discrepancy(p)}) {
      const auto& w = *rep.witness;
      const bool anchored = rep.kind == DiscrepancyKind::star;
      std::int64_t count = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto &x = p.x(i), &y = p.y(i);
        const bool in = w.closed ? (w.x_lo <= x && x <= w.x_hi && w.y_lo <= y && y <= w.y_hi)
                  : anchored ? (x < w.x_hi && y < w.y_hi)
                             : (w.x_lo < x && x < w.x_hi && w.y_lo < y && y < w.y_hi);
        if (in) ++count;
      }
      const Rational vol = n * (w.x_hi - w.x_lo) * (w.y_hi - w.y_lo);
      CHECK(rep.value == (w.closed ? Rational(count) - vol : vol - Rational(count)));
    }
  }
}

TEST_CASE("relations between discrepancies and dispersion") {
  std::vector<GridPointSet> sets;
  for (std::uint32_t m = 1; m <= 6; ++m) {
    sets.push_back(hammersley(2, m));
    sets.push_back(named_net(NamedNet::pu, 2, m));
    sets.push_back(named_net(NamedNet::pl, 2, m));
  }
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) sets.push_back(oracle::random_grid_set(rng, 2, 5, 1 + rng() % 20));
  for (const auto& p : sets) {
    const Rational n(static_cast<std::int64_t>(p.size()));
    const Rational star = star_discrepancy(p).value;
    const Rational ext = extreme_discrepancy(p).value;
    CHECK(ext >= star);
    CHECK(ext >= n * largest_empty_box(p).area);
    CHECK(star >= Rational(0));
    CHECK(ext <= n);
  }
}

TEST_CASE("Hammersley values at m = 12") {
  const auto h = hammersley(2, 12);
  CHECK(star_discrepancy(h).value == Rational(5575, 1024));
  CHECK(l2_star_discrepancy_squared(h).value == Rational(BigInt(5360173055LL), BigInt(1207959552LL)));
  CHECK(l2_star_discrepancy_squared(named_net(NamedNet::pu, 2, 12)).value ==
        Rational(BigInt(943792127LL), BigInt(1207959552LL)));
}

TEST_CASE("big-integer path matches the 128-bit path") {
  // den = 2^60 pushes every kernel onto arbitrary precision integers
  std::mt19937_64 rng(61);
  const auto small = oracle::random_grid_set(rng, 2, 4, 6);
  std::vector<GridPoint> scaled;
  for (const auto& q : small.points()) scaled.push_back({q.x << 56, q.y << 56});
  const GridPointSet big(2, 60, scaled);
  CHECK(l2_star_discrepancy_squared(big).value == l2_star_discrepancy_squared(small).value);
  CHECK(star_discrepancy(big).value == star_discrepancy(small).value);
  CHECK(extreme_discrepancy(big).value == extreme_discrepancy(small).value);
}

TEST_CASE("json") {
  const auto j = to_json(star_discrepancy(GridPointSet(2, 1, {{0, 0}, {1, 1}})));
  CHECK(j["kind"] == "star");
  CHECK(j["value"] == "3/2");
  CHECK(j["witness"]["closed"] == true);
}
