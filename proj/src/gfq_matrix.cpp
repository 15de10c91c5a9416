#include "gabidulin/gfq_matrix.hpp"

#include <cstdint>
#include <utility>

namespace gabidulin {

GfqMatrix::GfqMatrix(unsigned q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (q < 2) throw InvariantError("GfqMatrix requires q >= 2");
}

std::uint32_t GfqMatrix::inv_mod(std::uint32_t v) const {
  // extended Euclid on (v, q), q prime
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = v % q_;
  while (new_r != 0) {
    std::int64_t quo = r / new_r;
    t = std::exchange(new_t, t - quo * new_t);
    r = std::exchange(new_r, r - quo * new_r);
  }
  if (r != 1) throw InvariantError("no inverse mod q");
  if (t < 0) t += q_;
  return static_cast<std::uint32_t>(t);
}

GfqMatrix GfqMatrix::multiplied_by(const GfqMatrix& rhs) const {
  if (cols_ != rhs.rows_ || q_ != rhs.q_)
    throw InvariantError("matrix shape mismatch");
  GfqMatrix out(q_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        acc += static_cast<std::uint64_t>(at(i, k)) * rhs.at(k, j) % q_;
      out.set(i, j, static_cast<std::uint32_t>(acc % q_));
    }
  return out;
}

GfqMatrix GfqMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
  GfqMatrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols_; ++j) {
        std::uint32_t tmp = m.at(row, j);
        m.set(row, j, m.at(pivot, j));
        m.set(pivot, j, tmp);
      }
    std::uint32_t piv_inv = inv_mod(m.at(row, col));
    for (std::size_t j = col; j < cols_; ++j)
      m.set(row, j,
            static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(m.at(row, j)) * piv_inv % q_));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      std::uint32_t f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols_; ++j) {
        std::uint64_t v = m.at(i, j) +
                          static_cast<std::uint64_t>(q_ - f) * m.at(row, j);
        m.set(i, j, static_cast<std::uint32_t>(v % q_));
      }
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

std::size_t GfqMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<std::uint32_t>> GfqMatrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  GfqMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (q_ - r.at(i, free_col)) % q_;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gabidulin
