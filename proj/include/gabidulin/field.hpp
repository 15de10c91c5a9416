#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "gabidulin/errors.hpp"

namespace gabidulin {

/// Element of GF(q^m), stored as the canonical integer code
/// sum a_i * q^i of its coordinates (a_0, ..., a_{m-1}) in the polynomial
/// basis {1, alpha, ..., alpha^{m-1}}. Codes round-trip bijectively with
/// [0, q^m). The zero-initialized Element is the field zero.
struct Element {
  std::uint64_t code = 0;
  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// Running tally of field work since the last reset. Additions and Frobenius
/// powers are free in this cost model; `sym_div` counts symbolic divisions of
/// linearized polynomials and is bumped by the polynomial layer.
struct OpTally {
  std::uint64_t mul = 0;
  std::uint64_t div = 0;
  std::uint64_t sym_div = 0;

  OpTally operator-(const OpTally& rhs) const {
    return {mul - rhs.mul, div - rhs.div, sym_div - rhs.sym_div};
  }
  OpTally& operator+=(const OpTally& rhs) {
    mul += rhs.mul;
    div += rhs.div;
    sym_div += rhs.sym_div;
    return *this;
  }
};

/// Exact arithmetic in GF(q^m) = GF(q)[x]/(modulus) for prime q.
///
/// Fields with at most 2^16 elements are backed by log/antilog tables plus a
/// one-step Frobenius permutation table; larger fields (up to 2^32 elements)
/// use direct polynomial arithmetic on the coordinate digits. Both backends
/// expose identical behavior.
///
/// A Field is immutable after construction and safe to share across threads;
/// the operation tally is advisory and meaningful for single-threaded runs.
class Field {
 public:
  enum class Backend { Auto, Table, Direct };

  /// Constructs GF(q^m) with the default modulus: the monic irreducible of
  /// degree m over GF(q) with the smallest integer encoding sum c_i * q^i.
  Field(unsigned q, unsigned m);

  /// Constructs GF(q^m) with an explicit modulus given as ascending
  /// coefficients (length m+1, monic, irreducible over GF(q)).
  Field(unsigned q, unsigned m, std::vector<unsigned> modulus,
        Backend backend = Backend::Auto);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned q() const noexcept { return q_; }
  unsigned m() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  bool table_backed() const noexcept { return tabled_; }

  Element zero() const noexcept { return {}; }
  Element one() const noexcept { return Element{1}; }
  /// The residue class of x modulo the field modulus.
  Element alpha() const noexcept;

  /// Validates an integer code and wraps it as an Element.
  Element element(std::uint64_t code) const;
  Element from_coords(std::span<const unsigned> coords) const;
  std::vector<unsigned> coords(Element a) const;
  unsigned coord(Element a, unsigned i) const;

  static bool is_zero(Element a) noexcept { return a.code == 0; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const;
  Element div(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// a^(q^i). The exponent is reduced mod m since x^(q^m) = x on GF(q^m).
  Element frobenius(Element a, unsigned i) const;
  /// The unique b with b^(q^i) = a; equals frobenius(a, m - (i mod m)).
  Element frobenius_inv(Element a, unsigned i) const;

  OpTally tally() const noexcept;
  void reset_tally() const noexcept;
  void count_sym_div() const noexcept;

 private:
  void validate_and_build(Backend backend);
  void build_tables();
  std::uint64_t find_generator() const;

  std::uint64_t mul_direct(std::uint64_t a, std::uint64_t b) const noexcept;
  std::uint64_t pow_direct(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t raw_mul(std::uint64_t a, std::uint64_t b) const noexcept;

  unsigned q_ = 0;
  unsigned m_ = 0;
  std::uint64_t size_ = 0;
  std::vector<unsigned> modulus_;
  bool tabled_ = false;

  std::uint64_t modbits_ = 0;  // q == 2: modulus as a bitmask

  std::vector<std::uint32_t> exp_;   // exp_[i] = generator^i
  std::vector<std::uint32_t> log_;   // inverse of exp_, log_[0] unused
  std::vector<std::uint32_t> frob_;  // one Frobenius step a -> a^q

  mutable std::atomic<std::uint64_t> mul_count_{0};
  mutable std::atomic<std::uint64_t> div_count_{0};
  mutable std::atomic<std::uint64_t> sym_div_count_{0};
};

}  // namespace gabidulin
