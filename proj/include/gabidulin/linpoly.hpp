#pragma once

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gabidulin/field.hpp"

namespace gabidulin {

/// q-degree of the zero polynomial. A dedicated sentinel (not -1) so that
/// weighted-degree comparisons stay total: it is far below any real degree
/// and survives the addition of small weights without wrapping.
inline constexpr int kQdegNegInf = std::numeric_limits<int>::min() / 4;

/// q-linearized polynomial f(x) = sum_i coeffs[i] * x^(q^i) over GF(q^m).
///
/// As a map on GF(q^m) it is GF(q)-linear. Together with addition and
/// composition these polynomials form a non-commutative ring with no zero
/// divisors; x is the two-sided identity of composition. Coefficients are
/// stored densely by q-degree with trailing zeros trimmed.
class LinPoly {
 public:
  explicit LinPoly(const Field& f) : field_(&f) {}
  LinPoly(const Field& f, std::vector<Element> coeffs);

  static LinPoly zero(const Field& f) { return LinPoly(f); }
  /// x, the identity of composition.
  static LinPoly identity(const Field& f);
  /// c * x^(q^i)
  static LinPoly monomial(const Field& f, Element c, unsigned i);
  /// Convenience for tests and goldens: coefficients by integer code,
  /// ascending q-degree.
  static LinPoly from_codes(const Field& f,
                            std::initializer_list<std::uint64_t> codes);

  const Field& field() const noexcept { return *field_; }
  int qdeg() const noexcept {
    return coeffs_.empty() ? kQdegNegInf
                           : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept {
    return !coeffs_.empty() && coeffs_.back().code == 1;
  }
  Element coeff(unsigned i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Element{};
  }
  Element leading_coeff() const noexcept {
    return coeffs_.empty() ? Element{} : coeffs_.back();
  }
  std::span<const Element> coeffs() const noexcept { return coeffs_; }

  Element eval(Element a) const;

  bool operator==(const LinPoly& rhs) const {
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
  }

 private:
  friend LinPoly add(const LinPoly&, const LinPoly&);
  friend LinPoly sub(const LinPoly&, const LinPoly&);
  friend LinPoly neg(const LinPoly&);
  friend LinPoly scale(Element, const LinPoly&);
  friend LinPoly compose(const LinPoly&, const LinPoly&);
  friend LinPoly frobenius_shift(const LinPoly&);

  void trim();

  const Field* field_;
  std::vector<Element> coeffs_;
};

LinPoly add(const LinPoly& f, const LinPoly& g);
LinPoly sub(const LinPoly& f, const LinPoly& g);
LinPoly neg(const LinPoly& f);
LinPoly scale(Element c, const LinPoly& f);

/// Composition (f o g)(x) = f(g(x)); coefficient k is
/// sum_{i+j=k} f_i * g_j^(q^i). qdeg(f o g) = qdeg(f) + qdeg(g) for nonzero
/// operands (the ring has no zero divisors).
LinPoly compose(const LinPoly& f, const LinPoly& g);

/// x^q o f: every coefficient to the q-th power, indices shifted up by one.
LinPoly frobenius_shift(const LinPoly& f);

struct DivResult {
  LinPoly quo;
  LinPoly rem;
};

/// Right symbolic division: f = quo o g + rem with qdeg(rem) < qdeg(g).
/// Elimination step for the current top index s: quo_s = f_{s+t} / g_t^(q^s).
DivResult right_divide(const LinPoly& f, const LinPoly& g);

/// Left symbolic division: f = g o quo + rem with qdeg(rem) < qdeg(g).
/// Each step extracts a q^t-th root: quo_s = (f_{s+t} / g_t)^(q^-t). The
/// root always exists and is unique because Frobenius is an automorphism,
/// so left division never fails on a nonzero divisor.
DivResult left_divide(const LinPoly& f, const LinPoly& g);

/// Monic polynomial of q-degree len(basis) whose roots are exactly the
/// GF(q)-span of the given independent elements. Built by the iterative
/// construction Pi_{i+1} = (x^q - Pi_i(b_{i+1})^(q-1) x) o Pi_i.
/// Throws InvariantError when the elements are dependent (detected by
/// Pi_i(b_{i+1}) = 0). An empty basis yields x.
LinPoly annihilator(const Field& f, std::span<const Element> basis);

/// Interpolant of q-degree < n with value r_i at g_i, for GF(q)-independent
/// g. Built jointly with the annihilator sequence.
LinPoly lagrange(const Field& f, std::span<const Element> g,
                 std::span<const Element> r);

/// k x n matrix with entry (i, j) = v_j^(q^i): row i+1 is the coordinatewise
/// Frobenius image of row i.
struct MooreMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> entries;  // row-major

  Element at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
};

MooreMatrix moore(const Field& f, std::size_t k_rows,
                  std::span<const Element> v);

/// GF(q)-basis of {a in GF(q^m) : f(a) = 0}, computed as the kernel of the
/// coordinate matrix of a -> f(a). Roots in proper extension fields are out
/// of scope. Throws on the zero polynomial.
std::vector<Element> root_space(const LinPoly& f);

/// Debug/golden form: space-separated "index:code" pairs by ascending
/// q-degree; the zero polynomial renders as the empty string.
std::string to_string(const LinPoly& f);

}  // namespace gabidulin
