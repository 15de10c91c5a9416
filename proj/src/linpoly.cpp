#include "gabidulin/linpoly.hpp"

#include <sstream>

#include "gabidulin/gfq_matrix.hpp"

namespace gabidulin {
namespace {

void require_same_field(const LinPoly& a, const LinPoly& b) {
  if (&a.field() != &b.field())
    throw InvariantError("operands belong to different fields");
}

// c^(q-1) for nonzero c, computed as c^q / c.
Element pow_q_minus_one(const Field& f, Element c) {
  if (f.q() == 2) return c;
  return f.div(f.frobenius(c, 1), c);
}

}  // namespace

LinPoly::LinPoly(const Field& f, std::vector<Element> coeffs)
    : field_(&f), coeffs_(std::move(coeffs)) {
  trim();
}

void LinPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

LinPoly LinPoly::identity(const Field& f) {
  return LinPoly(f, {f.one()});
}

LinPoly LinPoly::monomial(const Field& f, Element c, unsigned i) {
  std::vector<Element> coeffs(i + 1);
  coeffs[i] = c;
  return LinPoly(f, std::move(coeffs));
}

LinPoly LinPoly::from_codes(const Field& f,
                            std::initializer_list<std::uint64_t> codes) {
  std::vector<Element> coeffs;
  coeffs.reserve(codes.size());
  for (std::uint64_t c : codes) coeffs.push_back(f.element(c));
  return LinPoly(f, std::move(coeffs));
}

Element LinPoly::eval(Element a) const {
  const Field& f = *field_;
  Element acc = f.zero();
  Element frob_pow = a;  // a^(q^i), advanced one Frobenius step per index
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) frob_pow = f.frobenius(frob_pow, 1);
    if (coeffs_[i].code != 0) acc = f.add(acc, f.mul(coeffs_[i], frob_pow));
  }
  return acc;
}

LinPoly add(const LinPoly& f, const LinPoly& g) {
  require_same_field(f, g);
  const Field& fld = f.field();
  std::vector<Element> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fld.add(f.coeff(static_cast<unsigned>(i)),
                     g.coeff(static_cast<unsigned>(i)));
  return LinPoly(fld, std::move(out));
}

LinPoly sub(const LinPoly& f, const LinPoly& g) {
  require_same_field(f, g);
  const Field& fld = f.field();
  std::vector<Element> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fld.sub(f.coeff(static_cast<unsigned>(i)),
                     g.coeff(static_cast<unsigned>(i)));
  return LinPoly(fld, std::move(out));
}

LinPoly neg(const LinPoly& f) {
  const Field& fld = f.field();
  std::vector<Element> out(f.coeffs_);
  for (Element& c : out) c = fld.neg(c);
  return LinPoly(fld, std::move(out));
}

LinPoly scale(Element c, const LinPoly& f) {
  const Field& fld = f.field();
  if (c.code == 0) return LinPoly(fld);
  std::vector<Element> out(f.coeffs_);
  for (Element& x : out)
    if (x.code != 0) x = fld.mul(c, x);
  return LinPoly(fld, std::move(out));
}

LinPoly compose(const LinPoly& f, const LinPoly& g) {
  require_same_field(f, g);
  const Field& fld = f.field();
  if (f.is_zero() || g.is_zero()) return LinPoly(fld);
  std::vector<Element> out(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    Element fi = f.coeffs_[i];
    if (fi.code == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      Element gj = g.coeffs_[j];
      if (gj.code == 0) continue;
      out[i + j] = fld.add(
          out[i + j],
          fld.mul(fi, fld.frobenius(gj, static_cast<unsigned>(i))));
    }
  }
  return LinPoly(fld, std::move(out));
}

LinPoly frobenius_shift(const LinPoly& f) {
  const Field& fld = f.field();
  if (f.is_zero()) return LinPoly(fld);
  std::vector<Element> out(f.coeffs_.size() + 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    out[i + 1] = fld.frobenius(f.coeffs_[i], 1);
  return LinPoly(fld, std::move(out));
}

DivResult right_divide(const LinPoly& f, const LinPoly& g) {
  require_same_field(f, g);
  const Field& fld = f.field();
  if (g.is_zero()) throw InvariantError("symbolic division by zero polynomial");
  fld.count_sym_div();

  const unsigned t = static_cast<unsigned>(g.qdeg());
  std::vector<Element> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Element> quo(
      f.qdeg() >= g.qdeg() ? f.qdeg() - g.qdeg() + 1 : 0);

  int top = static_cast<int>(rem.size()) - 1;
  while (top >= static_cast<int>(t)) {
    if (rem[top].code != 0) {
      const unsigned s = top - t;
      Element c = fld.div(rem[top], fld.frobenius(g.leading_coeff(), s));
      quo[s] = c;
      // subtract (c x^(q^s)) o g
      for (unsigned j = 0; j <= t; ++j) {
        Element gj = g.coeff(j);
        if (gj.code != 0)
          rem[s + j] = fld.sub(rem[s + j], fld.mul(c, fld.frobenius(gj, s)));
      }
    }
    --top;
  }
  return {LinPoly(fld, std::move(quo)), LinPoly(fld, std::move(rem))};
}

DivResult left_divide(const LinPoly& f, const LinPoly& g) {
  require_same_field(f, g);
  const Field& fld = f.field();
  if (g.is_zero()) throw InvariantError("symbolic division by zero polynomial");
  fld.count_sym_div();

  const unsigned t = static_cast<unsigned>(g.qdeg());
  std::vector<Element> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Element> quo(
      f.qdeg() >= g.qdeg() ? f.qdeg() - g.qdeg() + 1 : 0);

  int top = static_cast<int>(rem.size()) - 1;
  while (top >= static_cast<int>(t)) {
    if (rem[top].code != 0) {
      const unsigned s = top - t;
      Element c =
          fld.frobenius_inv(fld.div(rem[top], g.leading_coeff()), t);
      quo[s] = c;
      // subtract g o (c x^(q^s))
      for (unsigned i = 0; i <= t; ++i) {
        Element gi = g.coeff(i);
        if (gi.code != 0)
          rem[i + s] = fld.sub(rem[i + s], fld.mul(gi, fld.frobenius(c, i)));
      }
    }
    --top;
  }
  return {LinPoly(fld, std::move(quo)), LinPoly(fld, std::move(rem))};
}

LinPoly annihilator(const Field& f, std::span<const Element> basis) {
  LinPoly pi = LinPoly::identity(f);
  for (Element b : basis) {
    Element pb = pi.eval(b);
    if (pb.code == 0)
      throw InvariantError(
          "annihilator requires GF(q)-linearly independent elements");
    pi = sub(frobenius_shift(pi), scale(pow_q_minus_one(f, pb), pi));
  }
  return pi;
}

LinPoly lagrange(const Field& f, std::span<const Element> g,
                 std::span<const Element> r) {
  if (g.size() != r.size())
    throw InvariantError("point and value lists differ in length");
  if (g.empty()) throw InvariantError("lagrange needs at least one point");

  LinPoly pi = LinPoly::identity(f);
  LinPoly lam = LinPoly::zero(f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    Element pg = pi.eval(g[i]);
    if (pg.code == 0)
      throw InvariantError(
          "lagrange requires GF(q)-linearly independent points");
    Element mismatch = f.sub(lam.eval(g[i]), r[i]);
    if (mismatch.code != 0) lam = sub(lam, scale(f.div(mismatch, pg), pi));
    pi = sub(frobenius_shift(pi), scale(pow_q_minus_one(f, pg), pi));
  }
  return lam;
}

MooreMatrix moore(const Field& f, std::size_t k_rows,
                  std::span<const Element> v) {
  if (k_rows == 0) throw InvariantError("Moore matrix needs at least one row");
  MooreMatrix m;
  m.rows = k_rows;
  m.cols = v.size();
  m.entries.resize(k_rows * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m.entries[j] = v[j];
  for (std::size_t i = 1; i < k_rows; ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      m.entries[i * m.cols + j] = f.frobenius(m.entries[(i - 1) * m.cols + j], 1);
  return m;
}

std::vector<Element> root_space(const LinPoly& f) {
  if (f.is_zero())
    throw InvariantError("root space of the zero polynomial is everything");
  const Field& fld = f.field();
  const unsigned m = fld.m();

  // coordinate matrix of the GF(q)-linear map a -> f(a)
  GfqMatrix mat(fld.q(), m, m);
  std::uint64_t basis_code = 1;
  for (unsigned j = 0; j < m; ++j) {
    Element image = f.eval(Element{basis_code});
    std::vector<unsigned> co = fld.coords(image);
    for (unsigned i = 0; i < m; ++i) mat.set(i, j, co[i]);
    basis_code *= fld.q();
  }

  std::vector<Element> out;
  for (const auto& v : mat.kernel_basis()) {
    std::vector<unsigned> co(v.begin(), v.end());
    out.push_back(fld.from_coords(co));
  }
  return out;
}

std::string to_string(const LinPoly& f) {
  if (f.is_zero()) return "";
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i <= static_cast<unsigned>(f.qdeg()); ++i) {
    if (f.coeff(i).code == 0) continue;
    if (!first) os << ' ';
    os << i << ':' << f.coeff(i).code;
    first = false;
  }
  return os.str();
}

}  // namespace gabidulin
