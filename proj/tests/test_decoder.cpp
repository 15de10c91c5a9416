#include <memory>
#include <random>
#include <set>

#include "doctest.h"
#include "gabidulin/decoder.hpp"
#include "oracle_helpers.hpp"

using namespace gabidulin;
using namespace gabidulin::testing;

namespace {

std::shared_ptr<const Field> shared_f8() {
  static auto f = std::make_shared<const Field>(
      2, 3, std::vector<unsigned>{1, 1, 0, 1});
  return f;
}

std::shared_ptr<const Field> shared_f16() {
  static auto f = std::make_shared<const Field>(2, 4);
  return f;
}

CodeSpec example_code() {
  auto f = shared_f8();
  return CodeSpec(f, 3, 2, {f->element(1), f->element(2), f->element(4)});
}

CodeSpec f16_code() {
  auto f = shared_f16();
  return CodeSpec(f, 4, 2,
                  {f->element(1), f->element(2), f->element(4),
                   f->element(8)});
}

std::vector<std::vector<std::uint64_t>> codes_of(const DecodeOutput& out,
                                                 std::size_t k) {
  std::vector<std::vector<std::uint64_t>> v;
  for (const Message& m : out.messages) v.push_back(message_codes(m, k));
  return v;
}

Message random_message(const CodeSpec& spec, std::mt19937_64& rng) {
  std::vector<Element> coeffs(spec.k());
  for (Element& c : coeffs) c = random_element(spec.field(), rng);
  return Message(spec.field(), std::move(coeffs));
}

}  // namespace

TEST_CASE("the worked GF(8) decode returns the seven tied messages") {
  CodeSpec spec = example_code();
  const Field& f = spec.field();
  Word r{f.element(3), f.element(0), f.element(2)};

  const std::vector<std::vector<std::uint64_t>> expected{
      {0, 6}, {1, 2}, {2, 1}, {3, 4}, {4, 7}, {5, 5}, {6, 3}};

  for (BasisAlg alg : {BasisAlg::Eea, BasisAlg::Iterative}) {
    DecodeOutput out = decode_closest(spec, r, alg);
    CHECK(codes_of(out, 2) == expected);
    CHECK(out.t == 1);
    CHECK(out.j_final == 0);
    CHECK(out.ell1 == 2);
    CHECK(out.ell2 == 2);
    // t = ell2 + j - k + 1
    CHECK(out.t == static_cast<std::size_t>(out.ell2) + out.j_final -
                       spec.k() + 1);
  }
}

TEST_CASE("decoding an uncorrupted codeword returns exactly the message") {
  CodeSpec spec = f16_code();
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 10; ++rep) {
    Message msg = random_message(spec, rng);
    Word c = encode(spec, msg);
    DecodeOutput out = decode_closest(spec, c, BasisAlg::Iterative);
    REQUIRE(out.messages.size() == 1);
    CHECK(out.messages[0] == msg);
    CHECK(out.t == 0);
    CHECK(out.j_final == 0);
    // with beta forced to zero, the sweep runs a single symbolic division
    CHECK(out.counters.search.sym_divs == 1);
    CHECK(out.ell2 == static_cast<int>(spec.k()) - 1);
  }
}

TEST_CASE("within the unique radius the transmitted message is recovered") {
  CodeSpec spec = f16_code();  // unique radius 1
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 25; ++rep) {
    Message msg = random_message(spec, rng);
    std::size_t t = rng() % (spec.unique_radius() + 1);
    Word r = word_add(spec.field(), encode(spec, msg),
                      random_error(spec, t, rng()));
    for (BasisAlg alg : {BasisAlg::Eea, BasisAlg::Iterative}) {
      DecodeOutput out = decode_closest(spec, r, alg);
      REQUIRE(out.messages.size() == 1);
      CHECK(out.messages[0] == msg);
      CHECK(out.t == t);
      CHECK(out.counters.search.sym_divs == 1);
      CHECK(out.ell2 == static_cast<int>(t + spec.k()) - 1);
      CHECK(out.ell1 == static_cast<int>(spec.n() - t));
    }
  }
}

TEST_CASE("divisibility check") {
  const Field& f = *shared_f8();
  // the second minimal basis row of the worked example is not divisible:
  // a remainder of x survives
  LinPoly f1 = LinPoly::from_codes(f, {1, 5});  // a^6 x^2 + x
  LinPoly f2 = LinPoly::from_codes(f, {0, 3});  // a^3 x^2
  CHECK(!divisibility_check(f2, f1, 2).has_value());

  CHECK_THROWS_AS(divisibility_check(LinPoly::zero(f), f1, 2),
                  InvariantError);

  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 30; ++rep) {
    LinPoly d = random_poly_exact(f, 1, rng);
    LinPoly m = random_poly(f, 1, rng);
    auto got = divisibility_check(d, compose(d, m), 2);
    REQUIRE(got.has_value());
    CHECK(*got == m);
  }

  // quotients of q-degree k or larger are rejected
  LinPoly big = random_poly_exact(f, 2, rng);
  LinPoly dd = random_poly_exact(f, 0, rng);
  CHECK(!divisibility_check(dd, compose(dd, big), 2).has_value());
}

TEST_CASE("the iterative basis rejects exactly one multiplier b0") {
  // same received word, iterative basis: divisibility fails only for
  // beta = a^6 x, matching the second worked run
  CodeSpec spec = example_code();
  const Field& f = spec.field();
  Word r{f.element(3), f.element(0), f.element(2)};
  Basis2 basis = minimal_basis_iterative(f, spec.generators(), r, spec.k());

  std::size_t accepted = 0;
  for (std::uint64_t b0 = 0; b0 < 8; ++b0) {
    LinPoly beta(f, {f.element(b0)});
    Candidate cand =
        make_candidate(basis, beta, LinPoly::identity(f), spec.k());
    if (cand.message) {
      ++accepted;
      // the attached message is the exact left quotient of f1 by -f2
      CHECK(compose(neg(cand.f2), *cand.message) == cand.f1);
    }
    if (b0 == 5)  // a^6 has code 5
      CHECK(!cand.message.has_value());
  }
  CHECK(accepted == 7);
}

TEST_CASE("exhaustive decoder agrees with the worked example") {
  CodeSpec spec = example_code();
  const Field& f = spec.field();
  Word r{f.element(3), f.element(0), f.element(2)};
  DecodeOutput out = decode_exhaustive(spec, r);
  CHECK(out.t == 1);
  CHECK(codes_of(out, 2) ==
        std::vector<std::vector<std::uint64_t>>{
            {0, 6}, {1, 2}, {2, 1}, {3, 4}, {4, 7}, {5, 5}, {6, 3}});
}

TEST_CASE("parametrization agrees with exhaustive search on random words") {
  for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
    auto f = shared_f8();
    CodeSpec spec(f, 3, k, {f->element(1), f->element(2), f->element(4)});
    std::mt19937_64 rng(57);
    for (int rep = 0; rep < 60; ++rep) {
      Word r = random_word(spec.field(), spec.n(), rng);
      DecodeOutput truth = decode_exhaustive(spec, r);
      for (BasisAlg alg : {BasisAlg::Eea, BasisAlg::Iterative}) {
        DecodeOutput out = decode_closest(spec, r, alg);
        CHECK(out.t == truth.t);
        CHECK(codes_of(out, k) == codes_of(truth, k));
      }
    }
  }
}

TEST_CASE("odd-characteristic decoding matches the exhaustive oracle") {
  // the -K/-D bookkeeping and the divisibility sign only matter for q > 2
  for (auto [q, m, n, k] :
       {std::tuple<unsigned, unsigned, std::size_t, std::size_t>{3, 2, 2, 1},
        {3, 3, 3, 2},
        {5, 2, 2, 1}}) {
    auto f = std::make_shared<const Field>(q, m);
    std::vector<Element> gens;
    Element g = f->one(), a = f->alpha();
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back(g);
      g = f->mul(g, a);
    }
    CodeSpec spec(f, n, k, gens);
    std::mt19937_64 rng(1234 + q + m);
    for (int rep = 0; rep < 80; ++rep) {
      Word r = random_word(*f, n, rng);
      DecodeOutput truth = decode_exhaustive(spec, r);
      for (BasisAlg alg : {BasisAlg::Eea, BasisAlg::Iterative}) {
        DecodeOutput out = decode_closest(spec, r, alg);
        CHECK(out.t == truth.t);
        CHECK(codes_of(out, k) == codes_of(truth, k));
        // every returned message really encodes at the reported distance
        for (const Message& mm : out.messages)
          CHECK(rank_distance(spec, encode(spec, mm), r) == out.t);
      }
    }
  }
}

TEST_CASE("decoding beyond the unique radius lists all tied codewords") {
  CodeSpec spec = f16_code();
  std::mt19937_64 rng(59);
  int beyond = 0;
  for (int rep = 0; rep < 10 || beyond == 0; ++rep) {
    REQUIRE(rep < 200);
    Word r = word_add(spec.field(), encode(spec, random_message(spec, rng)),
                      random_error(spec, 2, rng()));
    DecodeOutput truth = decode_exhaustive(spec, r);
    DecodeOutput out = decode_closest(spec, r, BasisAlg::Eea);
    CHECK(out.t == truth.t);
    CHECK(codes_of(out, 2) == codes_of(truth, 2));
    if (truth.t >= 2) ++beyond;
  }
}

TEST_CASE("decoded messages always sit at the reported distance") {
  CodeSpec spec = f16_code();
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 20; ++rep) {
    Word r = random_word(spec.field(), spec.n(), rng);
    DecodeOutput out = decode_closest(spec, r, BasisAlg::Iterative);
    CHECK(!out.messages.empty());
    for (const Message& m : out.messages)
      CHECK(rank_distance(spec, encode(spec, m), r) == out.t);
    // messages are sorted and unique
    auto codes = codes_of(out, spec.k());
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
  }
}

TEST_CASE("basis degree bounds against the achieved distance") {
  CodeSpec spec = f16_code();
  std::mt19937_64 rng(63);
  for (int rep = 0; rep < 30; ++rep) {
    Word r = random_word(spec.field(), spec.n(), rng);
    DecodeOutput out = decode_closest(spec, r, BasisAlg::Eea);
    const auto t = static_cast<int>(out.t);
    const auto n = static_cast<int>(spec.n());
    const auto k = static_cast<int>(spec.k());
    CHECK(out.ell1 + out.ell2 == n + k - 1);
    CHECK(out.ell2 <= t + k - 1);
    CHECK(out.ell1 >= n - t);
    if (out.t <= spec.unique_radius()) CHECK(out.ell2 == t + k - 1);
  }
}

TEST_CASE("chase decoder finds every codeword within the radius") {
  CodeSpec spec = example_code();
  const Field& f = spec.field();
  std::mt19937_64 rng(65);
  for (int rep = 0; rep < 12; ++rep) {
    Word r = random_word(f, spec.n(), rng);
    const std::size_t radius = 1 + rng() % 2;
    DecodeOutput chase = decode_chase(spec, r, radius);

    // brute-force reference: all messages whose codewords lie within radius
    std::set<std::vector<std::uint64_t>> expected;
    for (std::uint64_t a0 = 0; a0 < 8; ++a0)
      for (std::uint64_t a1 = 0; a1 < 8; ++a1) {
        Message msg(f, {f.element(a0), f.element(a1)});
        if (rank_distance(spec, encode(spec, msg), r) <= radius)
          expected.insert({a0, a1});
      }
    std::set<std::vector<std::uint64_t>> got;
    for (const Message& m : chase.messages) got.insert(message_codes(m, 2));
    CHECK(got == expected);
  }
}

TEST_CASE("chase with the unique radius reduces to one unique decode") {
  CodeSpec spec = f16_code();
  std::mt19937_64 rng(67);
  Message msg = random_message(spec, rng);
  Word r = word_add(spec.field(), encode(spec, msg),
                    random_error(spec, 1, 4711));
  DecodeOutput out = decode_chase(spec, r, spec.unique_radius());
  REQUIRE(out.messages.size() == 1);
  CHECK(out.messages[0] == msg);
  CHECK(out.t == 1);

  CHECK_THROWS_AS(decode_chase(spec, r, 0), InvariantError);
}

TEST_CASE("counters start at zero and phases add up") {
  auto field = std::make_shared<const Field>(
      2, 3, std::vector<unsigned>{1, 1, 0, 1});
  CodeSpec spec(field, 3, 2,
                {field->element(1), field->element(2), field->element(4)});
  CHECK(field->tally().mul == 0);
  CHECK(field->tally().sym_div == 0);

  Word r{field->element(3), field->element(0), field->element(2)};
  DecodeOutput out = decode_closest(spec, r, BasisAlg::Eea);
  CHECK(out.counters.basis.field_muls > 0);
  CHECK(out.counters.basis.sym_divs == 1);   // one Euclidean step
  CHECK(out.counters.search.sym_divs == 8);  // eight (beta, gamma) pairs
  CHECK(op_counters(out).search.sym_divs == 8);
  CHECK(!to_string(out.counters).empty());
}

TEST_CASE("exhaustive decoder guards oversized enumerations") {
  auto field = std::make_shared<const Field>(2, 8);
  std::vector<Element> gens;
  Element g = field->one();
  for (int i = 0; i < 8; ++i) {
    gens.push_back(g);
    g = field->mul(g, field->alpha());
  }
  CodeSpec spec(field, 8, 4, gens);
  Word r(8, field->zero());
  CHECK_THROWS_AS(decode_exhaustive(spec, r), GuardError);
}
