#include "dexp/exactnum/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dexp {

namespace {

using IntMat = std::vector<std::vector<BigInt>>;

// Clears denominators row by row. Returns the integer matrix and the product
// of the row multipliers.
IntMat to_integer_rows(const RatMat& m, BigInt& scale) {
  IntMat out(m.rows(), std::vector<BigInt>(m.cols()));
  scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& v = m(r, c).raw();
      out[r][c] = v.get_num() * (l / v.get_den());
    }
    scale *= l;
  }
  return out;
}

// One fraction-free elimination pass. Rows are swapped to bring the
// smallest-index nonzero entry into pivot position. Returns the number of
// pivots found; `swaps` counts row exchanges.
std::size_t bareiss(IntMat& a, std::size_t cols, std::size_t& swaps) {
  const std::size_t rows = a.size();
  BigInt prev = 1;
  std::size_t pivot_row = 0;
  swaps = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != pivot_row) {
      std::swap(a[p], a[pivot_row]);
      ++swaps;
    }
    const BigInt& piv = a[pivot_row][c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = piv * a[r][j] - a[r][c] * a[pivot_row][j];
        mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = piv;
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
  return m;
}

std::vector<Rat> RatMat::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RatMat::append_row(const std::vector<Rat>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length does not match matrix");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatMat RatMat::select_rows(const std::vector<std::size_t>& which) const {
  RatMat out(0, cols_);
  for (std::size_t r : which) {
    if (r >= rows_) throw std::out_of_range("row index out of range");
    out.append_row(row(r));
  }
  return out;
}

Rat mat_det(const RatMat& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  BigInt scale;
  IntMat a = to_integer_rows(m, scale);
  std::size_t swaps = 0;
  if (bareiss(a, n, swaps) < n) return Rat(0);
  BigInt det = a[n - 1][n - 1];
  if (swaps % 2 == 1) det = -det;
  return Rat(det, scale);
}

std::size_t mat_rank(const RatMat& m) {
  BigInt scale;
  IntMat a = to_integer_rows(m, scale);
  std::size_t swaps = 0;
  return bareiss(a, m.cols(), swaps);
}

}  // namespace dexp
