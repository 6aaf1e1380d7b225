#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dexp/exactnum/rat.hpp"

namespace dexp {

/// Dense row-major matrix of exact rationals.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; throws std::invalid_argument if ragged.
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> row(std::size_t r) const;
  void append_row(const std::vector<Rat>& values);
  /// Sub-matrix made of the listed rows, in the listed order.
  RatMat select_rows(const std::vector<std::size_t>& which) const;

  friend bool operator==(const RatMat&, const RatMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input.
Rat mat_det(const RatMat& m);

/// Exact rank over Q. Pivots are chosen at the smallest available row index.
std::size_t mat_rank(const RatMat& m);

}  // namespace dexp
