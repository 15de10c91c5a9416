#include "gabidulin/interp.hpp"

#include <utility>

namespace gabidulin {
namespace {

int component_weight(const LinPoly& p, int weight) {
  return p.is_zero() ? kQdegNegInf : p.qdeg() + weight;
}

void validate_points(std::span<const Element> g, std::span<const Element> r,
                     std::size_t k) {
  if (g.size() != r.size())
    throw InvariantError("point and value lists differ in length");
  if (k < 1 || k > g.size())
    throw InvariantError("dimension k must satisfy 1 <= k <= n");
}

// Joint run of the annihilator/interpolant recursion; detects dependence.
struct PiLambda {
  LinPoly pi;
  LinPoly lambda;
};

PiLambda build_pi_lambda(const Field& f, std::span<const Element> g,
                         std::span<const Element> r) {
  PiLambda out{LinPoly::identity(f), LinPoly::zero(f)};
  for (std::size_t i = 0; i < g.size(); ++i) {
    Element pg = out.pi.eval(g[i]);
    if (pg.code == 0)
      throw InvariantError(
          "interpolation points must be GF(q)-linearly independent");
    Element mismatch = f.sub(out.lambda.eval(g[i]), r[i]);
    if (mismatch.code != 0)
      out.lambda = sub(out.lambda, scale(f.div(mismatch, pg), out.pi));
    Element step = f.q() == 2 ? pg : f.div(f.frobenius(pg, 1), pg);
    out.pi = sub(frobenius_shift(out.pi), scale(step, out.pi));
  }
  return out;
}

// x^q - c^(q-1) x for nonzero c: the annihilator of the span of c.
LinPoly span_step(const Field& f, Element c) {
  return annihilator(f, std::span<const Element>(&c, 1));
}

}  // namespace

int weighted_qdeg(const ModVec& v, const OrderWeights& w) {
  return std::max(component_weight(v.f1, w.k1), component_weight(v.f2, w.k2));
}

int leading_position(const ModVec& v, const OrderWeights& w) {
  if (v.f1.is_zero() && v.f2.is_zero())
    throw InvariantError("the zero vector has no leading position");
  int w1 = component_weight(v.f1, w.k1);
  int w2 = component_weight(v.f2, w.k2);
  return w2 >= w1 ? 2 : 1;
}

ModMonomial leading_monomial(const ModVec& v, const OrderWeights& w) {
  int pos = leading_position(v, w);
  return {pos == 1 ? v.f1.qdeg() : v.f2.qdeg(), pos};
}

bool monomial_less(const ModMonomial& a, const ModMonomial& b,
                   const OrderWeights& w) {
  int wa = a.qdeg + (a.pos == 1 ? w.k1 : w.k2);
  int wb = b.qdeg + (b.pos == 1 ? w.k1 : w.k2);
  return wa < wb || (wa == wb && a.pos < b.pos);
}

std::array<ModVec, 2> interpolation_module(const Field& f,
                                           std::span<const Element> g,
                                           std::span<const Element> r,
                                           std::size_t k) {
  validate_points(g, r, k);
  PiLambda pl = build_pi_lambda(f, g, r);
  ModVec row1{pl.pi, LinPoly::zero(f)};
  ModVec row2{neg(pl.lambda), LinPoly::identity(f)};
  return {std::move(row1), std::move(row2)};
}

Basis2 minimal_basis_eea(const Field& f, std::span<const Element> g,
                         std::span<const Element> r, std::size_t k) {
  validate_points(g, r, k);
  PiLambda pl = build_pi_lambda(f, g, r);

  LinPoly P = pl.pi;
  LinPoly K = LinPoly::zero(f);
  LinPoly N = neg(pl.lambda);
  LinPoly D = LinPoly::identity(f);

  const int kk = static_cast<int>(k);
  while (D.qdeg() + kk - 1 < N.qdeg()) {
    DivResult div = right_divide(P, N);
    LinPoly new_D = sub(K, compose(div.quo, D));
    P = std::exchange(N, std::move(div.rem));
    K = std::exchange(D, std::move(new_D));
  }

  OrderWeights w = OrderWeights::for_dimension(k);
  Basis2 b{{std::move(P), std::move(K)}, {std::move(N), std::move(D)}, 0, 0};
  b.ell1 = weighted_qdeg(b.b1, w);
  b.ell2 = weighted_qdeg(b.b2, w);
  if (leading_position(b.b1, w) != 1 || leading_position(b.b2, w) != 2)
    throw GuardError("minimal basis rows have unexpected leading positions");
  return b;
}

Basis2 minimal_basis_iterative(const Field& f, std::span<const Element> g,
                               std::span<const Element> r, std::size_t k,
                               const IterObserver& observer) {
  validate_points(g, r, k);

  IterState st{LinPoly::identity(f), LinPoly::zero(f), LinPoly::zero(f),
               neg(LinPoly::identity(f)), f.zero(), f.zero()};

  const int kk = static_cast<int>(k);
  for (std::size_t i = 0; i < g.size(); ++i) {
    st.gamma = f.sub(st.P.eval(g[i]), st.K.eval(r[i]));
    st.delta = f.sub(st.N.eval(g[i]), st.D.eval(r[i]));

    if (st.gamma.code == 0 && st.delta.code == 0) {
      // point already interpolated by both rows; identity step
      if (observer) observer(i + 1, st);
      continue;
    }

    if ((st.P.qdeg() <= st.D.qdeg() + kk - 1 && st.gamma.code != 0) ||
        st.delta.code == 0) {
      LinPoly step = span_step(f, st.gamma);
      LinPoly new_N = sub(scale(st.delta, st.P), scale(st.gamma, st.N));
      LinPoly new_D = sub(scale(st.delta, st.K), scale(st.gamma, st.D));
      st.P = compose(step, st.P);
      st.K = compose(step, st.K);
      st.N = std::move(new_N);
      st.D = std::move(new_D);
    } else {
      LinPoly step = span_step(f, st.delta);
      LinPoly new_P = sub(scale(st.delta, st.P), scale(st.gamma, st.N));
      LinPoly new_K = sub(scale(st.delta, st.K), scale(st.gamma, st.D));
      st.N = compose(step, st.N);
      st.D = compose(step, st.D);
      st.P = std::move(new_P);
      st.K = std::move(new_K);
    }
    if (observer) observer(i + 1, st);
  }

  OrderWeights w = OrderWeights::for_dimension(k);
  Basis2 b{{st.P, neg(st.K)}, {st.N, neg(st.D)}, 0, 0};
  b.ell1 = weighted_qdeg(b.b1, w);
  b.ell2 = weighted_qdeg(b.b2, w);
  if (leading_position(b.b1, w) != 1 || leading_position(b.b2, w) != 2)
    throw GuardError("minimal basis rows have unexpected leading positions");
  return b;
}

bool is_minimal(const Basis2& b, const OrderWeights& w) {
  return leading_position(b.b1, w) != leading_position(b.b2, w);
}

ModMonomial plm_predicted_leading(const LinPoly& a1, const LinPoly& a2,
                                  const Basis2& basis, const OrderWeights& w) {
  if (a1.is_zero() && a2.is_zero())
    throw InvariantError("at least one multiplier must be nonzero");
  bool have = false;
  ModMonomial best{};
  auto consider = [&](const LinPoly& a, const ModVec& b) {
    if (a.is_zero()) return;
    ModMonomial lm = leading_monomial(b, w);
    ModMonomial cand{a.qdeg() + lm.qdeg, lm.pos};
    if (!have || monomial_less(best, cand, w)) {
      best = cand;
      have = true;
    }
  };
  consider(a1, basis.b1);
  consider(a2, basis.b2);
  return best;
}

}  // namespace gabidulin
