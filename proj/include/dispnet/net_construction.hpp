#pragma once

#include <cstdint>

#include "dispnet/exec.hpp"
#include "dispnet/gf_matrix.hpp"
#include "dispnet/point_set.hpp"
#include "dispnet/rational.hpp"

namespace dispnet {

/// Generator matrices of a digital net in prime base; the digit bijection is
/// the identity on {0, ..., b-1}.
struct NetSpec {
  GFMatrix c1;
  GFMatrix c2;

  std::uint32_t base() const { return c1.base(); }
  std::size_t m() const { return c1.m(); }
};

/// Point n has coordinate j equal to sum_i y_i b^-i with y = C_j * (digits of
/// n, least significant first). Output is ordered by n.
GridPointSet generate_net(const NetSpec& spec, Exec exec = Exec::parallel);

enum class DigitMap { radical_inverse, psi, omega };

/// Numerator over base^m of the digit map at n.
///   radical_inverse: sum e_i b^-i
///   psi:   sum (e_{i-1} xor e_i) 2^-i, e_0 = 0   (base 2 only)
///   omega: sum (e_1 xor ... xor e_i) 2^-i        (base 2 only)
Coord digit_map_numerator(DigitMap kind, std::uint32_t base, std::uint32_t m, std::uint64_t n);
Rational digit_map(DigitMap kind, std::uint32_t base, std::uint32_t m, std::uint64_t n);

/// {(n / b^m, phi_b(n))}; any base >= 2, prime or not.
GridPointSet hammersley(std::uint32_t base, std::uint32_t m);

enum class NamedNet { hammersley, pu, pl };

/// PU / PL: digital nets in base 2 generated by (J_m, U_m) / (J_m, L_m).
GridPointSet named_net(NamedNet kind, std::uint32_t base, std::uint32_t m);

bool is_fibonacci(std::uint64_t n);
/// {(i/N, (i * F_{k-1} mod N) / N)} for N = F_k >= 2 (F_1 = F_2 = 1).
GridPointSet fibonacci_lattice(std::uint64_t n);
/// F_k with F_1 = F_2 = 1.
std::uint64_t fibonacci_number(std::uint32_t k);

/// Counts points in every elementary b-adic box of area b^-m.
bool is_0m2_net_by_counting(const GridPointSet& points);

enum class Family { raw, digital, hammersley, pu, pl, fibonacci };

const char* family_name(Family f);

/// Construction facts that decide which dispersion bounds apply. Raw point
/// files carry Family::raw and only get the universal bound.
struct NetMeta {
  Family family = Family::raw;
  std::uint32_t base = 0;
  std::uint32_t m = 0;
  bool is_net = false;         // (0,m,2)-net in `base`
  bool digital = false;        // prime base, first matrix is J_m
  Triangular c2_shape = Triangular::other;
  bool corner_unit = false;    // NUT with c_{1,1}=1, or NLT with c_{m,m}=1
};

NetMeta describe(const NetSpec& spec);
NetMeta describe_hammersley(std::uint32_t base, std::uint32_t m);
NetMeta describe_named(NamedNet kind, std::uint32_t base, std::uint32_t m);
NetMeta describe_fibonacci(std::uint64_t n);
NetMeta describe_raw(const GridPointSet& points);

}  // namespace dispnet
