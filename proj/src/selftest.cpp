#include "gabidulin/selftest.hpp"

#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include "gabidulin/decoder.hpp"

namespace gabidulin {
namespace {

// GF(8), g = (1, a, a^2), k = 2, received word (a+1, 0, a). Element codes
// follow the a-dictionary 1=1, a=2, a+1=3, a^2=4, a^2+1=5, a^2+a=6,
// a^2+a+1=7.
struct Golden {
  std::vector<std::uint64_t> generators{1, 2, 4};
  std::vector<std::uint64_t> received{3, 0, 2};

  std::vector<std::uint64_t> pi{1, 0, 0, 1};           // x^8 + x
  std::vector<std::uint64_t> lambda_row{7, 0, 4};      // a^2 x^4 + a^5 x
  std::vector<std::uint64_t> eea_quo{0, 3};            // a^3 x^2
  std::vector<std::uint64_t> eea_rem{1, 5};            // a^6 x^2 + x
  std::vector<std::uint64_t> eea_b2_f1{1, 5};          // a^6 x^2 + x
  std::vector<std::uint64_t> eea_b2_f2{0, 3};          // a^3 x^2

  std::vector<std::vector<std::uint64_t>> messages{
      {0, 6}, {1, 2}, {2, 1}, {3, 4}, {4, 7}, {5, 5}, {6, 3}};
};

std::string codes_str(const std::vector<std::uint64_t>& codes) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) os << ' ';
    os << codes[i];
  }
  os << ']';
  return os.str();
}

std::vector<std::uint64_t> poly_codes(const LinPoly& p) {
  std::vector<std::uint64_t> codes(std::max(p.qdeg() + 1, 0));
  for (std::size_t i = 0; i < codes.size(); ++i)
    codes[i] = p.coeff(static_cast<unsigned>(i)).code;
  return codes;
}

class Checker {
 public:
  explicit Checker(std::ostream& os) : os_(os) {}

  void poly(const char* name, const LinPoly& got,
            const std::vector<std::uint64_t>& expected) {
    compare(name, poly_codes(got), expected);
  }

  void compare(const char* name, const std::vector<std::uint64_t>& got,
               const std::vector<std::uint64_t>& expected) {
    if (got == expected) {
      os_ << "ok:   " << name << '\n';
    } else {
      ok_ = false;
      os_ << "FAIL: " << name << ": expected " << codes_str(expected)
          << ", got " << codes_str(got) << '\n';
    }
  }

  void value(const char* name, std::uint64_t got, std::uint64_t expected) {
    if (got == expected) {
      os_ << "ok:   " << name << '\n';
    } else {
      ok_ = false;
      os_ << "FAIL: " << name << ": expected " << expected << ", got " << got
          << '\n';
    }
  }

  void fail(const std::string& message) {
    ok_ = false;
    os_ << "FAIL: " << message << '\n';
  }
  void pass(const std::string& message) { os_ << "ok:   " << message << '\n'; }

  bool ok() const { return ok_; }

 private:
  std::ostream& os_;
  bool ok_ = true;
};

}  // namespace

bool run_selftest(std::ostream& os, const Field& f8) {
  Checker check(os);
  Golden golden;

  std::vector<Element> g, r;
  for (auto c : golden.generators) g.push_back(f8.element(c));
  for (auto c : golden.received) r.push_back(f8.element(c));
  const std::size_t k = 2;

  // interpolation module rows
  auto rows = interpolation_module(f8, g, r, k);
  check.poly("module row 1, position 1", rows[0].f1, golden.pi);
  check.poly("module row 1, position 2", rows[0].f2, {});
  check.poly("module row 2, position 1", rows[1].f1, golden.lambda_row);
  check.poly("module row 2, position 2", rows[1].f2, {1});

  // one Euclidean division step
  DivResult div = right_divide(rows[0].f1, rows[1].f1);
  check.poly("division quotient", div.quo, golden.eea_quo);
  check.poly("division remainder", div.rem, golden.eea_rem);

  // minimal basis via the Euclidean algorithm
  Basis2 eea = minimal_basis_eea(f8, g, r, k);
  check.poly("eea basis row 1, position 1", eea.b1.f1, golden.lambda_row);
  check.poly("eea basis row 1, position 2", eea.b1.f2, {1});
  check.poly("eea basis row 2, position 1", eea.b2.f1, golden.eea_b2_f1);
  check.poly("eea basis row 2, position 2", eea.b2.f2, golden.eea_b2_f2);
  check.value("eea weighted degree ell1", eea.ell1, 2);
  check.value("eea weighted degree ell2", eea.ell2, 2);

  // iterative run with pinned intermediate states, printed as [P -K; N -D]
  struct StepGolden {
    std::vector<std::uint64_t> p, neg_k, n, neg_d;
  };
  const std::vector<StepGolden> steps{
      {{1, 1}, {}, {3}, {1}},
      {{6, 7, 1}, {}, {7, 6}, {6}},
      {{7, 0, 4}, {1}, {1, 6, 2}, {5, 2}},
  };
  std::vector<IterState> seen;
  Basis2 iter = minimal_basis_iterative(
      f8, g, r, k,
      [&seen](std::size_t, const IterState& st) { seen.push_back(st); });
  check.value("iterative step count", seen.size(), steps.size());
  for (std::size_t i = 0; i < std::min(seen.size(), steps.size()); ++i) {
    std::string label = "iterative state B" + std::to_string(i + 1);
    check.compare((label + " entry P").c_str(), poly_codes(seen[i].P),
                  steps[i].p);
    check.compare((label + " entry -K").c_str(), poly_codes(neg(seen[i].K)),
                  steps[i].neg_k);
    check.compare((label + " entry N").c_str(), poly_codes(seen[i].N),
                  steps[i].n);
    check.compare((label + " entry -D").c_str(), poly_codes(neg(seen[i].D)),
                  steps[i].neg_d);
  }
  check.value("iterative weighted degree ell1", iter.ell1, 2);
  check.value("iterative weighted degree ell2", iter.ell2, 2);

  // full decode through both bases
  auto field_ptr =
      std::shared_ptr<const Field>(&f8, [](const Field*) {});  // non-owning
  CodeSpec spec(field_ptr, 3, k, g);
  for (BasisAlg alg : {BasisAlg::Eea, BasisAlg::Iterative}) {
    const char* name = alg == BasisAlg::Eea ? "decode via eea basis"
                                            : "decode via iterative basis";
    DecodeOutput out = decode_closest(spec, r, alg);
    std::vector<std::vector<std::uint64_t>> got;
    for (const Message& msg : out.messages) got.push_back(message_codes(msg, k));
    if (got == golden.messages && out.t == 1) {
      check.pass(name);
    } else {
      std::ostringstream detail;
      detail << name << ": t=" << out.t << ", messages:";
      for (const auto& codes : got) detail << ' ' << codes_str(codes);
      check.fail(detail.str());
    }
  }

  return check.ok();
}

bool run_selftest(std::ostream& os) {
  Field f8(2, 3, {1, 1, 0, 1});
  return run_selftest(os, f8);
}

}  // namespace gabidulin
