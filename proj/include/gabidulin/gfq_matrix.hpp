#pragma once

#include <cstdint>
#include <vector>

#include "gabidulin/errors.hpp"

namespace gabidulin {

/// Dense row-major matrix over the prime field GF(q). Support type for the
/// base-field linear algebra behind rank computations, span bases, kernel
/// bases and the rank-error channel.
class GfqMatrix {
 public:
  GfqMatrix(unsigned q, std::size_t rows, std::size_t cols);

  unsigned q() const noexcept { return q_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    a_[r * cols_ + c] = v % q_;
  }

  GfqMatrix multiplied_by(const GfqMatrix& rhs) const;

  /// Reduced row echelon form; optionally reports the pivot columns.
  GfqMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  std::size_t rank() const;

  /// Basis of {x : A x = 0}, one vector per free column, in ascending free
  /// column order (deterministic).
  std::vector<std::vector<std::uint32_t>> kernel_basis() const;

  bool operator==(const GfqMatrix&) const = default;

 private:
  std::uint32_t inv_mod(std::uint32_t v) const;

  unsigned q_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

}  // namespace gabidulin
