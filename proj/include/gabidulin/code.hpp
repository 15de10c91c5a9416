#pragma once

#include <cstdint>
#include <memory>

#include "gabidulin/linpoly.hpp"

namespace gabidulin {

/// Length-n vector over GF(q^m).
using Word = std::vector<Element>;

/// Message polynomial: a linearized polynomial of q-degree < k.
using Message = LinPoly;

/// Gabidulin code of length n and dimension k over GF(q^m): evaluations of
/// linearized polynomials of q-degree < k at n GF(q)-linearly independent
/// generators. Its generator matrix is the k x n Moore matrix of the
/// generators and its minimum rank distance is n - k + 1.
class CodeSpec {
 public:
  CodeSpec(std::shared_ptr<const Field> field, std::size_t n, std::size_t k,
           std::vector<Element> generators);

  const Field& field() const noexcept { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const noexcept {
    return field_;
  }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::span<const Element> generators() const noexcept { return generators_; }

  std::size_t min_distance() const noexcept { return n_ - k_ + 1; }
  std::size_t unique_radius() const noexcept { return (n_ - k_) / 2; }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t n_, k_;
  std::vector<Element> generators_;
};

/// c_i = msg(g_i). Throws when qdeg(msg) >= k.
Word encode(const CodeSpec& spec, const Message& msg);

/// Dimension over GF(q) of the span of the word's entries, i.e. the rank of
/// its m x n coordinate matrix.
std::size_t rank_weight(const CodeSpec& spec, const Word& w);
std::size_t rank_weight(const Field& f, std::span<const Element> entries);

std::size_t rank_distance(const CodeSpec& spec, const Word& a, const Word& b);

/// Echelonized GF(q)-basis of the span of the entries, pivots in ascending
/// coordinate order. Deterministic: two words with the same span yield the
/// same basis.
std::vector<Element> span_basis(const Field& f,
                                std::span<const Element> entries);
std::vector<Element> span_basis(const CodeSpec& spec, const Word& w);

/// Word of rank exactly t, built as an m x t by t x n product of uniformly
/// drawn GF(q) matrices, resampled until both factors have rank t.
/// Deterministic for a given seed.
Word random_error(const CodeSpec& spec, std::size_t t, std::uint64_t seed);

/// Monic annihilator of the span of a nonzero error word; its q-degree
/// equals the word's rank weight. For e = r - c it takes equal values on
/// corresponding entries of r and c.
LinPoly error_span_poly(const CodeSpec& spec, const Word& e);

Word word_add(const Field& f, const Word& a, const Word& b);
Word word_sub(const Field& f, const Word& a, const Word& b);

}  // namespace gabidulin
