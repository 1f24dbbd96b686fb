#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

namespace dispnet {

bool is_prime(std::uint64_t n);

/// Square matrix over Z_b for a prime b, row-major, entries reduced mod b.
class GFMatrix {
 public:
  GFMatrix(std::uint32_t base, std::size_t m);
  GFMatrix(std::uint32_t base, const std::vector<std::vector<std::uint32_t>>& rows);

  static GFMatrix identity(std::uint32_t base, std::size_t m);
  /// J_m: ones on the anti-diagonal (digit reversal).
  static GFMatrix reversal(std::uint32_t base, std::size_t m);
  /// U_m: ones on and above the diagonal.
  static GFMatrix upper_ones(std::uint32_t base, std::size_t m);
  /// L_m: ones on and below the diagonal.
  static GFMatrix lower_ones(std::uint32_t base, std::size_t m);

  std::uint32_t base() const noexcept { return base_; }
  std::size_t m() const noexcept { return m_; }
  std::uint32_t operator()(std::size_t row, std::size_t col) const { return entries_[row * m_ + col]; }
  void set(std::size_t row, std::size_t col, std::uint64_t value);
  std::span<const std::uint32_t> row(std::size_t r) const { return {entries_.data() + r * m_, m_}; }

  GFMatrix operator*(const GFMatrix& rhs) const;
  /// Matrix-vector product mod b; `vec` has m entries in [0, b).
  void apply(std::span<const std::uint32_t> vec, std::span<std::uint32_t> out) const;

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  std::uint32_t base_;
  std::size_t m_;
  std::vector<std::uint32_t> entries_;
};

/// Rank over Z_b of the given rows (each of equal length), by Gaussian
/// elimination with the first non-zero pivot in column order.
std::size_t rank_of_rows(std::uint32_t base, std::vector<std::vector<std::uint32_t>> rows);
std::size_t rank(const GFMatrix& a);

/// Inverse over Z_b; throws Error(singular) if rank < m.
GFMatrix mat_inverse(const GFMatrix& a);

/// (0,m,2)-net criterion: for every d1 + d2 = m the first d1 rows of c1 and
/// the first d2 rows of c2 are linearly independent.
bool net_rank_condition(const GFMatrix& c1, const GFMatrix& c2);

/// J * c2^{-1} * J. Maps NUT matrices to NLT matrices and back.
GFMatrix nlt_dual(const GFMatrix& c2);

enum class Triangular { nut, nlt, diagonal, other };

Triangular classify_triangular(const GFMatrix& a);
const char* triangular_name(Triangular t);

/// Matrix file format: JSON array of m rows of m integers in [0, base).
GFMatrix matrix_from_json(const nlohmann::json& j, std::uint32_t base);
nlohmann::json to_json(const GFMatrix& a);

}  // namespace dispnet
