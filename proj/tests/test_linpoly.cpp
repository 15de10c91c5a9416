#include <random>

#include "doctest.h"
#include "gabidulin/gfq_matrix.hpp"
#include "gabidulin/linpoly.hpp"
#include "oracle_helpers.hpp"

using namespace gabidulin;
using namespace gabidulin::testing;

namespace {

// shared GF(8) with a^3 = a + 1; codes 1=1, a=2, a+1=3, a^2=4, ...
const Field& f8() {
  static Field f(2, 3, {1, 1, 0, 1});
  return f;
}

const Field& f9() {
  static Field f(3, 2);
  return f;
}

}  // namespace

TEST_CASE("evaluation of linearized polynomials") {
  const Field& f = f8();
  LinPoly lam = LinPoly::from_codes(f, {7, 0, 4});  // a^2 x^4 + a^5 x
  CHECK(lam.eval(f.one()) == f.element(3));         // a + 1
  CHECK(LinPoly::zero(f).eval(f.element(5)) == f.zero());

  LinPoly pi = LinPoly::from_codes(f, {1, 0, 0, 1});  // x^8 + x
  for (std::uint64_t c = 0; c < 8; ++c)               // annihilates all of GF(8)
    CHECK(pi.eval(f.element(c)) == f.zero());
}

TEST_CASE("addition and scaling") {
  const Field& f = f8();
  std::mt19937_64 rng(5);
  LinPoly p = random_poly(f, 3, rng);
  CHECK(add(p, LinPoly::zero(f)) == p);
  CHECK(scale(f.one(), p) == p);

  LinPoly pi = LinPoly::from_codes(f, {1, 0, 0, 1});   // x^8 + x
  LinPoly rem = LinPoly::from_codes(f, {1, 5});        // a^6 x^2 + x
  CHECK(add(pi, rem) == LinPoly::from_codes(f, {0, 5, 0, 1}));
}

TEST_CASE("composition matches the known worked product") {
  const Field& f = f8();
  LinPoly quo = LinPoly::from_codes(f, {0, 3});       // a^3 x^2
  LinPoly lam = LinPoly::from_codes(f, {7, 0, 4});    // a^2 x^4 + a^5 x
  CHECK(compose(quo, lam) == LinPoly::from_codes(f, {0, 5, 0, 1}));
}

TEST_CASE("x is the two-sided identity of composition") {
  const Field& f = f8();
  std::mt19937_64 rng(6);
  LinPoly x = LinPoly::identity(f);
  for (int i = 0; i < 20; ++i) {
    LinPoly p = random_poly(f, 4, rng);
    CHECK(compose(x, p) == p);
    CHECK(compose(p, x) == p);
  }
}

TEST_CASE("q-degrees add under composition and evaluation agrees pointwise") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
      LinPoly a = random_poly_exact(f, static_cast<int>(rng() % 4), rng);
      LinPoly b = random_poly_exact(f, static_cast<int>(rng() % 4), rng);
      LinPoly c = compose(a, b);
      CHECK(c.qdeg() == a.qdeg() + b.qdeg());
      for (std::uint64_t code = 0; code < f.size(); ++code) {
        Element x = f.element(code);
        CHECK(c.eval(x) == a.eval(b.eval(x)));
      }
    }
  }
}

TEST_CASE("composition is associative and distributes over addition") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
      LinPoly a = random_poly(f, 3, rng);
      LinPoly b = random_poly(f, 3, rng);
      LinPoly c = random_poly(f, 3, rng);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, add(b, c)) == add(compose(a, b), compose(a, c)));
      CHECK(compose(add(a, b), c) == add(compose(a, c), compose(b, c)));
    }
  }
}

TEST_CASE("composition is not commutative") {
  const Field& f = f8();
  LinPoly c_x = LinPoly::from_codes(f, {2});     // a x, a not in GF(2)
  LinPoly x_q = LinPoly::monomial(f, f.one(), 1);  // x^2
  CHECK(compose(c_x, x_q) != compose(x_q, c_x));
}

TEST_CASE("right division reproduces the worked example") {
  const Field& f = f8();
  LinPoly pi = LinPoly::from_codes(f, {1, 0, 0, 1});   // x^8 + x
  LinPoly lam = LinPoly::from_codes(f, {7, 0, 4});     // a^2 x^4 + a^5 x
  DivResult d = right_divide(pi, lam);
  CHECK(d.quo == LinPoly::from_codes(f, {0, 3}));      // a^3 x^2
  CHECK(d.rem == LinPoly::from_codes(f, {1, 5}));      // a^6 x^2 + x

  DivResult self = right_divide(lam, lam);
  CHECK(self.quo == LinPoly::identity(f));
  CHECK(self.rem.is_zero());
}

TEST_CASE("right division round-trips on random instances") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
      LinPoly a = random_poly(f, 5, rng);
      LinPoly g = random_poly_exact(f, 1 + static_cast<int>(rng() % 3), rng);
      DivResult d = right_divide(a, g);
      CHECK(d.rem.qdeg() < g.qdeg());
      CHECK(add(compose(d.quo, g), d.rem) == a);
    }
    CHECK_THROWS_AS(right_divide(random_poly(f, 2, rng), LinPoly::zero(f)),
                    InvariantError);
  }
}

TEST_CASE("left division extracts right compositional factors") {
  const Field& f = f8();
  // a^3 x^2 composed with a^5 x gives a^6 x^2
  DivResult d = left_divide(LinPoly::from_codes(f, {0, 5}),
                            LinPoly::from_codes(f, {0, 3}));
  CHECK(d.quo == LinPoly::from_codes(f, {7}));  // a^5 x
  CHECK(d.rem.is_zero());
}

TEST_CASE("left division round-trips and is unique") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
      LinPoly g = random_poly_exact(f, 1 + static_cast<int>(rng() % 2), rng);
      LinPoly m = random_poly(f, 3, rng);
      DivResult d = left_divide(compose(g, m), g);
      CHECK(d.quo == m);
      CHECK(d.rem.is_zero());

      // with an added remainder below qdeg(g), both parts come back exactly
      LinPoly r = random_poly(f, g.qdeg() - 1, rng);
      DivResult d2 = left_divide(add(compose(g, m), r), g);
      CHECK(d2.quo == m);
      CHECK(d2.rem == r);

      // general round trip
      LinPoly a = random_poly(f, 5, rng);
      DivResult d3 = left_divide(a, g);
      CHECK(d3.rem.qdeg() < g.qdeg());
      CHECK(add(compose(g, d3.quo), d3.rem) == a);
    }
  }
}

TEST_CASE("annihilator of the span of (1, a, a^2) in GF(8) is x^8 + x") {
  const Field& f = f8();
  std::vector<Element> basis{f.element(1), f.element(2), f.element(4)};
  CHECK(annihilator(f, basis) == LinPoly::from_codes(f, {1, 0, 0, 1}));
}

TEST_CASE("annihilator of a single element is x^q - g^(q-1) x") {
  const Field& f8v = f8();
  std::vector<Element> one_elem{f8v.element(5)};
  LinPoly p = annihilator(f8v, one_elem);
  CHECK(p.qdeg() == 1);
  CHECK(p.is_monic());
  CHECK(p.coeff(0) == f8v.neg(f8v.element(5)));  // q = 2: g^(q-1) = g

  const Field& f = f9();
  Element g = f.alpha();
  LinPoly p9 = annihilator(f, std::vector<Element>{g});
  CHECK(p9.qdeg() == 1);
  CHECK(p9.is_monic());
  CHECK(p9.coeff(0) == f.neg(f.div(f.frobenius(g, 1), g)));
  CHECK(p9.eval(g) == f.zero());
  CHECK(p9.eval(f.mul(f.element(2), g)) == f.zero());  // whole GF(3)-span
}

TEST_CASE("annihilator rejects dependent inputs") {
  const Field& f = f8();
  std::vector<Element> dep{f.element(1), f.element(2), f.element(3)};
  CHECK_THROWS_AS(annihilator(f, dep), InvariantError);
  std::vector<Element> with_zero{f.element(0)};
  CHECK_THROWS_AS(annihilator(f, with_zero), InvariantError);
}

TEST_CASE("annihilator roots are exactly the span") {
  const Field& f = f8();
  std::vector<Element> basis{f.element(1), f.element(2)};
  LinPoly p = annihilator(f, basis);
  for (std::uint64_t c = 0; c < 8; ++c) {
    bool in_span = c == 0 || c == 1 || c == 2 || c == 3;
    CHECK((p.eval(f.element(c)) == f.zero()) == in_span);
  }
}

TEST_CASE("annihilator matches the determinantal oracle") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(15);
    for (int i = 0; i < 25; ++i) {
      std::size_t n = 1 + rng() % f.m();
      auto basis = random_independent(f, n, rng);
      CHECK(annihilator(f, basis) == annihilator_oracle(f, basis));
    }
  }
}

TEST_CASE("lagrange interpolation reproduces the worked interpolant") {
  const Field& f = f8();
  std::vector<Element> g{f.element(1), f.element(2), f.element(4)};
  std::vector<Element> r{f.element(3), f.element(0), f.element(2)};
  CHECK(lagrange(f, g, r) == LinPoly::from_codes(f, {7, 0, 4}));

  // single point: (r1 / g1) x
  std::vector<Element> g1{f.element(4)}, r1{f.element(3)};
  CHECK(lagrange(f, g1, r1) ==
        LinPoly(f, {f.div(f.element(3), f.element(4))}));

  // zero data interpolates to the zero polynomial
  std::vector<Element> zeros{f.zero(), f.zero(), f.zero()};
  CHECK(lagrange(f, g, zeros).is_zero());
}

TEST_CASE("lagrange hits every prescribed value and matches the oracle") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
      std::size_t n = 1 + rng() % f.m();
      auto g = random_independent(f, n, rng);
      std::vector<Element> r(n);
      for (Element& e : r) e = random_element(f, rng);
      LinPoly lam = lagrange(f, g, r);
      CHECK(lam.qdeg() < static_cast<int>(n));
      for (std::size_t j = 0; j < n; ++j) CHECK(lam.eval(g[j]) == r[j]);
      CHECK(lam == lagrange_oracle(f, g, r));
    }
  }
}

TEST_CASE("moore matrix rows are successive frobenius images") {
  const Field& f = f8();
  std::vector<Element> v{f.element(1), f.element(2), f.element(4)};
  MooreMatrix m = moore(f, 2, v);
  CHECK(m.rows == 2);
  CHECK(m.at(0, 0) == f.element(1));
  CHECK(m.at(0, 1) == f.element(2));
  CHECK(m.at(0, 2) == f.element(4));
  CHECK(m.at(1, 0) == f.element(1));
  CHECK(m.at(1, 1) == f.element(4));           // a^2
  CHECK(m.at(1, 2) == f.element(6));           // a^4 = a^2 + a

  MooreMatrix one_row = moore(f, 1, v);
  for (std::size_t j = 0; j < 3; ++j) CHECK(one_row.at(0, j) == v[j]);

  std::mt19937_64 rng(19);
  MooreMatrix big = moore(f, 3, std::vector<Element>{random_element(f, rng),
                                                     random_element(f, rng)});
  for (std::size_t i = 1; i < big.rows; ++i)
    for (std::size_t j = 0; j < big.cols; ++j)
      CHECK(big.at(i, j) == f.frobenius(big.at(i - 1, j), 1));
}

TEST_CASE("root space dimensions and spans") {
  const Field& f = f8();
  LinPoly pi = LinPoly::from_codes(f, {1, 0, 0, 1});  // x^8 + x
  CHECK(root_space(pi).size() == 3);
  CHECK(root_space(LinPoly::identity(f)).empty());
  CHECK_THROWS_AS(root_space(LinPoly::zero(f)), InvariantError);

  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + rng() % 3;
    auto basis = random_independent(f, n, rng);
    auto roots = root_space(annihilator(f, basis));
    REQUIRE(roots.size() == n);
    // same span: stacking both bases does not increase the rank
    std::vector<Element> both(basis.begin(), basis.end());
    both.insert(both.end(), roots.begin(), roots.end());
    CHECK(rank_weight(f, both) == n);
  }
}

TEST_CASE("a polynomial vanishing on all points is divisible by the annihilator") {
  for (const Field* fp : {&f8(), &f9()}) {
    const Field& f = *fp;
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
      auto g = random_independent(f, 2, rng);
      LinPoly pi = annihilator(f, g);
      LinPoly h = random_poly(f, 2, rng);
      LinPoly l = compose(h, pi);
      if (l.is_zero()) continue;
      for (Element p : g) CHECK(l.eval(p) == f.zero());
      CHECK(right_divide(l, pi).rem.is_zero());
    }
  }
}

TEST_CASE("textual form lists index:code pairs") {
  const Field& f = f8();
  CHECK(to_string(LinPoly::from_codes(f, {7, 0, 4})) == "0:7 2:4");
  CHECK(to_string(LinPoly::zero(f)).empty());
  CHECK(to_string(LinPoly::identity(f)) == "0:1");
}
