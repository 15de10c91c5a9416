#pragma once

#include <array>
#include <functional>

#include "gabidulin/linpoly.hpp"

namespace gabidulin {

/// Weights of the term-over-position order on pairs of linearized
/// polynomials. Decoding a dimension-k code uses (0, k-1).
struct OrderWeights {
  int k1 = 0;
  int k2 = 0;

  static OrderWeights for_dimension(std::size_t k) {
    return {0, static_cast<int>(k) - 1};
  }
};

/// Pair [f1(x) f2(x)], identified with the bivariate map
/// Q(x, y) = f1(x) + f2(y). A received word's interpolation module consists
/// of exactly the pairs with Q(g_i, r_i) = 0 for every point.
struct ModVec {
  LinPoly f1;
  LinPoly f2;
};

/// Monomial x^(q^qdeg) e_pos of a vector of linearized polynomials.
struct ModMonomial {
  int qdeg = 0;
  int pos = 1;

  bool operator==(const ModMonomial&) const = default;
};

/// max(qdeg(f1) + k1, qdeg(f2) + k2); the zero vector yields kQdegNegInf.
int weighted_qdeg(const ModVec& v, const OrderWeights& w);

/// Position (1 or 2) of the greatest monomial. Ties in weighted degree go to
/// position 2, which the order ranks higher. Throws on the zero vector.
int leading_position(const ModVec& v, const OrderWeights& w);

ModMonomial leading_monomial(const ModVec& v, const OrderWeights& w);

/// Strict comparison in the weighted term-over-position order.
bool monomial_less(const ModMonomial& a, const ModMonomial& b,
                   const OrderWeights& w);

/// Two-row basis of an interpolation module with row 1 leading in position 1
/// and row 2 in position 2; ell1/ell2 are the rows' weighted q-degrees.
struct Basis2 {
  ModVec b1;
  ModVec b2;
  int ell1 = 0;
  int ell2 = 0;
};

/// Defining (generally non-minimal) basis of the interpolation module for
/// points g and values r: rows [Pi_g, 0] and [-Lambda_{g,r}, x].
std::array<ModVec, 2> interpolation_module(const Field& f,
                                           std::span<const Element> g,
                                           std::span<const Element> r,
                                           std::size_t k);

/// Minimal basis via the extended Euclidean algorithm for right symbolic
/// division, starting from the defining basis. Loop guard:
/// qdeg(D_j) + k - 1 < qdeg(N_j).
Basis2 minimal_basis_eea(const Field& f, std::span<const Element> g,
                         std::span<const Element> r, std::size_t k);

/// State of the iterative minimal-basis computation. The stored matrix rows
/// are [P -K] and [N -D]; gamma and delta are the discrepancies
/// P(g_i) - K(r_i) and N(g_i) - D(r_i) used at the step just taken.
struct IterState {
  LinPoly P;
  LinPoly K;
  LinPoly N;
  LinPoly D;
  Element gamma;
  Element delta;
};

using IterObserver =
    std::function<void(std::size_t points_done, const IterState&)>;

/// Minimal basis via one pass over the points, updating a 2x2 matrix per
/// point. After i points the rows form a minimal basis of the module of the
/// first i points and their weighted degrees sum to i + k - 1.
///
/// A point with gamma = delta = 0 is already interpolated by both rows and
/// is skipped as an identity step; this cannot happen for independent g but
/// keeps repeated points well defined.
Basis2 minimal_basis_iterative(const Field& f, std::span<const Element> g,
                               std::span<const Element> r, std::size_t k,
                               const IterObserver& observer = {});

/// Distinct leading positions are equivalent to minimality for a basis.
bool is_minimal(const Basis2& b, const OrderWeights& w);

/// Leading monomial of a1 o b1 + a2 o b2 as predicted from the summands:
/// max of lm(a_i) o lm(b_i) over the nonzero a_i. For a minimal basis this
/// equals the directly computed leading monomial.
ModMonomial plm_predicted_leading(const LinPoly& a1, const LinPoly& a2,
                                  const Basis2& basis, const OrderWeights& w);

}  // namespace gabidulin
