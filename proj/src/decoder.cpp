#include "gabidulin/decoder.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gabidulin/gfq_matrix.hpp"

namespace gabidulin {
namespace {

constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 24;

PhaseCounters phase_from(const OpTally& tally) {
  return {tally.mul, tally.div, tally.sym_div};
}

// q^e, throwing the given guard message when the count exceeds the limit.
std::uint64_t checked_enum_count(std::uint64_t base, std::size_t e,
                                 std::uint64_t limit, const char* what) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (count > limit / base) throw GuardError(what);
    count *= base;
  }
  return count;
}

LinPoly poly_from_index(const Field& f, std::uint64_t index,
                        std::size_t n_coeffs) {
  std::vector<Element> coeffs(n_coeffs);
  for (std::size_t i = 0; i < n_coeffs; ++i) {
    coeffs[i] = Element{index % f.size()};
    index /= f.size();
  }
  return LinPoly(f, std::move(coeffs));
}

void validate_received(const CodeSpec& spec, const Word& r) {
  if (r.size() != spec.n())
    throw InvariantError("received word length mismatch");
  for (Element e : r)
    if (e.code >= spec.field().size())
      throw InvariantError("received word entry out of range");
}

struct CoreResult {
  bool found = false;
  DecodeOutput out;
};

// Shared sweep used by decode_closest (t_max = min(m, n), cap is a bug) and
// the chase's unique decoder (t_max = unique radius, cap means "no result").
CoreResult decode_core(const CodeSpec& spec, const Word& r, BasisAlg alg,
                       std::size_t t_max, bool cap_is_error) {
  const Field& f = spec.field();
  const std::size_t k = spec.k();
  const std::uint64_t field_size = f.size();

  CoreResult res;
  OpTally before_basis = f.tally();
  Basis2 basis = alg == BasisAlg::Eea
                     ? minimal_basis_eea(f, spec.generators(), r, k)
                     : minimal_basis_iterative(f, spec.generators(), r, k);
  res.out.ell1 = basis.ell1;
  res.out.ell2 = basis.ell2;
  OpTally after_basis = f.tally();
  res.out.counters.basis = phase_from(after_basis - before_basis);

  std::set<std::vector<std::uint64_t>> found;
  std::size_t j = 0;
  for (;; ++j) {
    // distance reached by this sweep
    const std::int64_t t_j =
        static_cast<std::int64_t>(basis.ell2) + static_cast<std::int64_t>(j) -
        static_cast<std::int64_t>(k) + 1;
    if (t_j > static_cast<std::int64_t>(t_max)) {
      if (cap_is_error)
        throw GuardError("list decoder exceeded the rank-t safety cap");
      res.out.counters.search =
          phase_from(f.tally() - after_basis);
      return res;  // not found
    }

    const int beta_bound = basis.ell2 - basis.ell1 + static_cast<int>(j);
    const std::uint64_t beta_count =
        beta_bound < 0 ? 1
                       : checked_enum_count(field_size, beta_bound + 1,
                                            kEnumerationLimit,
                                            "parametrization sweep too large");
    const std::uint64_t gamma_count = checked_enum_count(
        field_size, j, kEnumerationLimit, "parametrization sweep too large");

    for (std::uint64_t bi = 0; bi < beta_count; ++bi) {
      LinPoly beta = beta_bound < 0
                         ? LinPoly::zero(f)
                         : poly_from_index(f, bi, beta_bound + 1);
      for (std::uint64_t gi = 0; gi < gamma_count; ++gi) {
        // monic gamma of q-degree exactly j
        std::vector<Element> gcoeffs(j + 1);
        std::uint64_t idx = gi;
        for (std::size_t i = 0; i < j; ++i) {
          gcoeffs[i] = Element{idx % field_size};
          idx /= field_size;
        }
        gcoeffs[j] = f.one();
        LinPoly gamma(f, std::move(gcoeffs));

        Candidate cand = make_candidate(basis, beta, gamma, k);
        if (cand.message) found.insert(message_codes(*cand.message, k));
      }
    }
    if (!found.empty()) break;
  }

  res.found = true;
  res.out.j_final = j;
  res.out.t = static_cast<std::size_t>(static_cast<std::int64_t>(basis.ell2) +
                                       static_cast<std::int64_t>(j) -
                                       static_cast<std::int64_t>(k) + 1);
  res.out.messages.reserve(found.size());
  for (const auto& codes : found) {
    std::vector<Element> coeffs(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) coeffs[i] = Element{codes[i]};
    res.out.messages.emplace_back(f, std::move(coeffs));
  }
  res.out.counters.search = phase_from(f.tally() - after_basis);
  return res;
}

}  // namespace

std::optional<Message> divisibility_check(const LinPoly& f2, const LinPoly& f1,
                                          std::size_t k) {
  if (f2.is_zero())
    throw InvariantError("divisibility check against the zero polynomial");
  DivResult d = left_divide(f1, f2);
  if (!d.rem.is_zero()) return std::nullopt;
  if (d.quo.qdeg() >= static_cast<int>(k)) return std::nullopt;
  return d.quo;
}

Candidate make_candidate(const Basis2& basis, const LinPoly& beta,
                         const LinPoly& gamma, std::size_t k) {
  Candidate cand{
      add(compose(beta, basis.b1.f1), compose(gamma, basis.b2.f1)),
      add(compose(beta, basis.b1.f2), compose(gamma, basis.b2.f2)),
      std::nullopt};
  if (!cand.f2.is_zero())
    cand.message = divisibility_check(neg(cand.f2), cand.f1, k);
  return cand;
}

DecodeOutput decode_closest(const CodeSpec& spec, const Word& r,
                            BasisAlg alg) {
  validate_received(spec, r);
  const std::size_t t_max =
      std::min<std::size_t>(spec.field().m(), spec.n());
  CoreResult res = decode_core(spec, r, alg, t_max, /*cap_is_error=*/true);
  return std::move(res.out);
}

DecodeOutput decode_exhaustive(const CodeSpec& spec, const Word& r) {
  validate_received(spec, r);
  const Field& f = spec.field();
  const std::size_t k = spec.k();
  const std::uint64_t total = checked_enum_count(
      f.size(), k, kEnumerationLimit, "exhaustive search too large");

  OpTally before = f.tally();
  DecodeOutput out;
  std::size_t best = spec.n() + 1;
  std::vector<std::vector<std::uint64_t>> best_codes;
  for (std::uint64_t mi = 0; mi < total; ++mi) {
    Message msg = poly_from_index(f, mi, k);
    std::size_t d = rank_distance(spec, encode(spec, msg), r);
    if (d < best) {
      best = d;
      best_codes.clear();
    }
    if (d == best) best_codes.push_back(message_codes(msg, k));
  }
  std::sort(best_codes.begin(), best_codes.end());
  for (const auto& codes : best_codes) {
    std::vector<Element> coeffs(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) coeffs[i] = Element{codes[i]};
    out.messages.emplace_back(f, std::move(coeffs));
  }
  out.t = best;
  out.counters.search = phase_from(f.tally() - before);
  return out;
}

DecodeOutput decode_chase(const CodeSpec& spec, const Word& r,
                          std::size_t radius) {
  validate_received(spec, r);
  const Field& f = spec.field();
  const std::size_t n = spec.n();
  const std::size_t d = spec.min_distance();
  if (radius < d / 2)  // ceil((d-1)/2)
    throw InvariantError("chase radius below the unique decoding threshold");
  const std::size_t u = spec.unique_radius();
  const std::size_t s_max = radius - u;

  // candidate partial errors of rank 0..s_max, via rank factorizations with
  // the row-space factor in reduced echelon form (duplicate-free)
  std::set<std::vector<std::uint64_t>> error_words;
  error_words.insert(std::vector<std::uint64_t>(n, 0));
  for (std::size_t s = 1; s <= s_max; ++s) {
    const std::uint64_t b_total = checked_enum_count(
        f.q(), s * n, kEnumerationLimit, "chase enumeration too large");
    const std::uint64_t a_total = checked_enum_count(
        f.q(), s * f.m(), kEnumerationLimit, "chase enumeration too large");

    std::vector<GfqMatrix> b_mats;
    for (std::uint64_t code = 0; code < b_total; ++code) {
      GfqMatrix b(f.q(), s, n);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t jj = 0; jj < n; ++jj) {
          b.set(i, jj, static_cast<std::uint32_t>(c % f.q()));
          c /= f.q();
        }
      if (b.rank() == s && b.rref() == b) b_mats.push_back(std::move(b));
    }
    std::vector<GfqMatrix> a_mats;
    for (std::uint64_t code = 0; code < a_total; ++code) {
      GfqMatrix a(f.q(), f.m(), s);
      std::uint64_t c = code;
      for (unsigned i = 0; i < f.m(); ++i)
        for (std::size_t jj = 0; jj < s; ++jj) {
          a.set(i, jj, static_cast<std::uint32_t>(c % f.q()));
          c /= f.q();
        }
      if (a.rank() == s) a_mats.push_back(std::move(a));
    }

    for (const GfqMatrix& a : a_mats)
      for (const GfqMatrix& b : b_mats) {
        GfqMatrix prod = a.multiplied_by(b);
        std::vector<std::uint64_t> codes(n);
        for (std::size_t jj = 0; jj < n; ++jj) {
          std::vector<unsigned> co(f.m());
          for (unsigned i = 0; i < f.m(); ++i) co[i] = prod.at(i, jj);
          codes[jj] = f.from_coords(co).code;
        }
        error_words.insert(std::move(codes));
      }
  }

  DecodeOutput out;
  std::set<std::vector<std::uint64_t>> accepted;
  std::size_t best = radius + 1;
  for (const auto& codes : error_words) {
    Word shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = Element{codes[i]};
    Word w = word_sub(f, r, shift);
    CoreResult res =
        decode_core(spec, w, BasisAlg::Iterative, u, /*cap_is_error=*/false);
    out.counters.basis.field_muls += res.out.counters.basis.field_muls;
    out.counters.basis.field_divs += res.out.counters.basis.field_divs;
    out.counters.basis.sym_divs += res.out.counters.basis.sym_divs;
    out.counters.search.field_muls += res.out.counters.search.field_muls;
    out.counters.search.field_divs += res.out.counters.search.field_divs;
    out.counters.search.sym_divs += res.out.counters.search.sym_divs;
    if (!res.found) continue;
    for (const Message& msg : res.out.messages) {
      std::size_t dist = rank_distance(spec, encode(spec, msg), r);
      if (dist <= radius) {
        best = std::min(best, dist);
        accepted.insert(message_codes(msg, spec.k()));
      }
    }
  }

  for (const auto& codes : accepted) {
    std::vector<Element> coeffs(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) coeffs[i] = Element{codes[i]};
    out.messages.emplace_back(f, std::move(coeffs));
  }
  out.t = accepted.empty() ? radius : best;
  return out;
}

std::vector<std::uint64_t> message_codes(const Message& msg, std::size_t k) {
  std::vector<std::uint64_t> codes(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    codes[i] = msg.coeff(static_cast<unsigned>(i)).code;
  return codes;
}

std::string to_string(const DecodeCounters& c) {
  std::ostringstream os;
  os << "basis: mul=" << c.basis.field_muls << " div=" << c.basis.field_divs
     << " symdiv=" << c.basis.sym_divs << "; search: mul="
     << c.search.field_muls << " div=" << c.search.field_divs
     << " symdiv=" << c.search.sym_divs;
  return os.str();
}

}  // namespace gabidulin
