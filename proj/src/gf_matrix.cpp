#include "dispnet/gf_matrix.hpp"

#include <string>
#include <utility>

#include "dispnet/error.hpp"

namespace dispnet {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p, p prime.
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void require_prime(std::uint32_t base) {
  if (!is_prime(base)) throw Error(Errc::non_prime_base, "base " + std::to_string(base) + " is not prime");
}

void require_same_shape(const GFMatrix& a, const GFMatrix& b) {
  if (a.base() != b.base() || a.m() != b.m()) {
    throw Error(Errc::dimension_mismatch, "matrices differ in base or size");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

GFMatrix::GFMatrix(std::uint32_t base, std::size_t m) : base_(base), m_(m), entries_(m * m, 0) {
  require_prime(base_);
  if (m_ < 1) throw Error(Errc::invalid_argument, "matrix size must be >= 1");
}

GFMatrix::GFMatrix(std::uint32_t base, const std::vector<std::vector<std::uint32_t>>& rows)
    : GFMatrix(base, rows.size()) {
  for (std::size_t r = 0; r < m_; ++r) {
    if (rows[r].size() != m_) throw Error(Errc::dimension_mismatch, "matrix must be square");
    for (std::size_t c = 0; c < m_; ++c) {
      if (rows[r][c] >= base_) throw Error(Errc::out_of_range, "matrix entry not in [0, base)");
      entries_[r * m_ + c] = rows[r][c];
    }
  }
}

GFMatrix GFMatrix::identity(std::uint32_t base, std::size_t m) {
  GFMatrix a(base, m);
  for (std::size_t i = 0; i < m; ++i) a.set(i, i, 1);
  return a;
}

GFMatrix GFMatrix::reversal(std::uint32_t base, std::size_t m) {
  GFMatrix a(base, m);
  for (std::size_t i = 0; i < m; ++i) a.set(i, m - 1 - i, 1);
  return a;
}

GFMatrix GFMatrix::upper_ones(std::uint32_t base, std::size_t m) {
  GFMatrix a(base, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) a.set(i, j, 1);
  return a;
}

GFMatrix GFMatrix::lower_ones(std::uint32_t base, std::size_t m) {
  GFMatrix a(base, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j) a.set(i, j, 1);
  return a;
}

void GFMatrix::set(std::size_t row, std::size_t col, std::uint64_t value) {
  entries_[row * m_ + col] = static_cast<std::uint32_t>(value % base_);
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  require_same_shape(*this, rhs);
  GFMatrix out(base_, m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < m_; ++k) acc += std::uint64_t((*this)(i, k)) * rhs(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

void GFMatrix::apply(std::span<const std::uint32_t> vec, std::span<std::uint32_t> out) const {
  for (std::size_t i = 0; i < m_; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* r = entries_.data() + i * m_;
    for (std::size_t k = 0; k < m_; ++k) acc += std::uint64_t(r[k]) * vec[k];
    out[i] = static_cast<std::uint32_t>(acc % base_);
  }
}

std::size_t rank_of_rows(std::uint32_t base, std::vector<std::vector<std::uint32_t>> rows) {
  require_prime(base);
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] % base == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = mod_inverse(rows[rank][col] % base, base);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % base);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const std::uint64_t factor = rows[r][col] % base;
      if (factor == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + (base - factor) * rows[rank][c]) % base);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const GFMatrix& a) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < a.m(); ++r) rows.emplace_back(a.row(r).begin(), a.row(r).end());
  return rank_of_rows(a.base(), std::move(rows));
}

GFMatrix mat_inverse(const GFMatrix& a) {
  const std::size_t m = a.m();
  const std::uint32_t b = a.base();
  // Gauss-Jordan on [A | I].
  std::vector<std::vector<std::uint64_t>> aug(m, std::vector<std::uint64_t>(2 * m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug[r][c] = a(r, c);
    aug[r][m + r] = 1;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && aug[pivot][col] == 0) ++pivot;
    if (pivot == m) throw Error(Errc::singular, "matrix has rank < " + std::to_string(m));
    std::swap(aug[col], aug[pivot]);
    const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(aug[col][col]), b);
    for (auto& v : aug[col]) v = v * inv % b;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const std::uint64_t factor = aug[r][col];
      for (std::size_t c = 0; c < 2 * m; ++c) aug[r][c] = (aug[r][c] + (b - factor) * aug[col][c]) % b;
    }
  }
  GFMatrix out(b, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out.set(r, c, aug[r][m + c]);
  return out;
}

bool net_rank_condition(const GFMatrix& c1, const GFMatrix& c2) {
  require_same_shape(c1, c2);
  const std::size_t m = c1.m();
  for (std::size_t d1 = 0; d1 <= m; ++d1) {
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t r = 0; r < d1; ++r) rows.emplace_back(c1.row(r).begin(), c1.row(r).end());
    for (std::size_t r = 0; r < m - d1; ++r) rows.emplace_back(c2.row(r).begin(), c2.row(r).end());
    if (rank_of_rows(c1.base(), std::move(rows)) != m) return false;
  }
  return true;
}

GFMatrix nlt_dual(const GFMatrix& c2) {
  const GFMatrix inv = mat_inverse(c2);
  const std::size_t m = c2.m();
  // (J A J)_{ij} = A_{m-1-i, m-1-j}
  GFMatrix out(c2.base(), m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, inv(m - 1 - i, m - 1 - j));
  return out;
}

Triangular classify_triangular(const GFMatrix& a) {
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < a.m(); ++i) {
    if (a(i, i) == 0) return Triangular::other;
    for (std::size_t j = 0; j < a.m(); ++j) {
      if (j < i && a(i, j) != 0) upper = false;
      if (j > i && a(i, j) != 0) lower = false;
    }
  }
  if (upper && lower) return Triangular::diagonal;
  if (upper) return Triangular::nut;
  if (lower) return Triangular::nlt;
  return Triangular::other;
}

const char* triangular_name(Triangular t) {
  switch (t) {
    case Triangular::nut: return "NUT";
    case Triangular::nlt: return "NLT";
    case Triangular::diagonal: return "diagonal";
    case Triangular::other: return "other";
  }
  return "other";
}

GFMatrix matrix_from_json(const nlohmann::json& j, std::uint32_t base) {
  try {
    if (!j.is_array() || j.empty()) throw Error(Errc::parse_error, "matrix must be a non-empty JSON array");
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& row : j) rows.push_back(row.get<std::vector<std::uint32_t>>());
    return GFMatrix(base, rows);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

nlohmann::json to_json(const GFMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < a.m(); ++r) rows.push_back(std::vector<std::uint32_t>(a.row(r).begin(), a.row(r).end()));
  return rows;
}

}  // namespace dispnet
