#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "dispnet/bounds.hpp"
#include "dispnet/error.hpp"
#include "dispnet/empty_box.hpp"
#include "dispnet/net_construction.hpp"

using namespace dispnet;

namespace {

Rational pow2_inv(std::uint32_t m) { return Rational(BigInt(1), BigInt(1) << m); }

void check_all_agree(const GridPointSet& p) {
  const auto sweep = largest_empty_box(p, Exec::serial);
  const auto par = largest_empty_box(p, Exec::parallel);
  const auto brute = dispersion_bruteforce(p);
  CHECK(sweep.area == brute.area);
  CHECK(sweep.box == brute.box);
  CHECK(par.area == sweep.area);
  CHECK(par.box == sweep.box);
  CHECK(box_is_interior_empty(p, sweep.witness));
  CHECK(sweep.witness.area == sweep.area);
  if (is_permutation_structured(p)) CHECK(column_gap_dispersion(p).area == sweep.area);
}

}  // namespace

TEST_CASE("small examples") {
  const GridPointSet mid(2, 1, {{1, 1}});
  for (auto algo : {DispersionAlgorithm::sweep, DispersionAlgorithm::brute}) {
    CHECK(compute_dispersion(mid, algo).area == Rational(1, 2));
  }
  CHECK(largest_empty_box(hammersley(2, 4)).area == Rational(39, 256));
  CHECK(largest_empty_box(hammersley(2, 2)).area == Rational(3, 8));
  CHECK(largest_empty_box(named_net(NamedNet::pu, 2, 5)).area == Rational(5, 64));
  CHECK(dispersion_bruteforce(hammersley(2, 3)).area == Rational(1, 4));
  // lexicographically smallest witness among the two half-plane boxes
  const auto w = largest_empty_box(mid).witness;
  CHECK(w.x_lo == Rational(0));
  CHECK(w.y_lo == Rational(0));
  CHECK(w.x_hi == Rational(1, 2));
  CHECK(w.y_hi == Rational(1));
}

TEST_CASE("errors") {
  const GridPointSet empty(2, 2, {});
  CHECK_THROWS_AS(largest_empty_box(empty), Error);
  CHECK_THROWS_AS(dispersion_bruteforce(empty), Error);
  CHECK_THROWS_AS(dispersion_bruteforce(hammersley(2, 7)), Error);
  try {
    column_gap_dispersion(GridPointSet(2, 2, {{0, 0}, {0, 1}, {2, 2}, {3, 3}}));
    FAIL("expected NotPermutationStructured");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_permutation_structured);
  }
  CHECK(parse_algorithm("column") == DispersionAlgorithm::column_gap);
  CHECK_THROWS_AS(parse_algorithm("fast"), Error);
}

TEST_CASE("Hammersley and PU closed forms") {
  for (std::uint32_t m = 4; m <= 10; ++m) {
    const Rational t = 3 * pow2_inv(m);
    const auto h = hammersley(2, m);
    CHECK(largest_empty_box(h).area == t * (Rational(1) - t));
    CHECK(column_gap_dispersion(h).area == t * (Rational(1) - t));
  }
  CHECK(column_gap_dispersion(hammersley(2, 2)).area == Rational(3, 8));
  CHECK(column_gap_dispersion(named_net(NamedNet::pu, 2, 4)).area == Rational(5, 32));
}

TEST_CASE("oracle triangle on nets") {
  for (std::uint32_t m = 1; m <= 6; ++m) {
    CAPTURE(m);
    check_all_agree(hammersley(2, m));
    check_all_agree(named_net(NamedNet::pu, 2, m));
    check_all_agree(named_net(NamedNet::pl, 2, m));
  }
  for (std::uint32_t m = 1; m <= 3; ++m) check_all_agree(hammersley(3, m));
  check_all_agree(hammersley(5, 2));
  for (std::uint64_t n : {2, 3, 5, 8, 13, 21, 34, 55}) check_all_agree(fibonacci_lattice(n));
}

TEST_CASE("oracle triangle on random sets") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 31;
    check_all_agree(oracle::random_permutation_set(rng, n, t % 2 == 1));
  }
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 4);
    check_all_agree(oracle::random_grid_set(rng, 2, m, 1 + rng() % 16));
  }
  // heavy duplication of coordinates
  for (int t = 0; t < 50; ++t) check_all_agree(oracle::random_grid_set(rng, 3, 1, 1 + rng() % 12));
}

TEST_CASE("swap invariance, monotonicity and universal bounds") {
  std::mt19937_64 rng(77);
  std::vector<GridPointSet> sets;
  for (std::uint32_t m = 1; m <= 7; ++m) {
    sets.push_back(hammersley(2, m));
    sets.push_back(named_net(NamedNet::pl, 2, m));
  }
  for (int t = 0; t < 60; ++t) sets.push_back(oracle::random_grid_set(rng, 2, 5, 1 + rng() % 40));
  for (const auto& p : sets) {
    const Rational d = largest_empty_box(p).area;
    CHECK(largest_empty_box(p.swapped()).area == d);
    CHECK(d >= closed_form(BoundKind::dumi_lower, 2, p.size()));
    if (p.size() > 1) {
      const std::size_t k = rng() % p.size();
      CHECK(largest_empty_box(p.without(k)).area >= d);
    }
  }
}

TEST_CASE("nets respect the (0,m,2) upper bound") {
  for (std::uint32_t b : {2U, 3U, 5U, 7U}) {
    for (std::uint32_t m = 1; checked_power(b, m) <= 4096; ++m) {
      const auto h = hammersley(b, m);
      CHECK(largest_empty_box(h).area <= closed_form(BoundKind::prop1_upper, b, m));
    }
  }
}

TEST_CASE("large coordinates stay exact") {
  // den = 2^62 exercises the 128-bit area path
  const Coord den = GridPointSet::kMaxDen;
  const GridPointSet single(2, 62, {{3, den - 5}});
  CHECK(largest_empty_box(single).area == Rational(BigInt(den) - 3, BigInt(den)));
  const GridPointSet pair(2, 62, {{3, den - 5}, {den - 7, 11}});
  const auto r = largest_empty_box(pair);
  CHECK(r.area == dispersion_bruteforce(pair).area);
  CHECK(r.area < Rational(1));
  CHECK(box_is_interior_empty(pair, r.witness));
}
