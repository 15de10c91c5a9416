#pragma once

#include <optional>
#include <string>

#include "gabidulin/code.hpp"
#include "gabidulin/interp.hpp"

namespace gabidulin {

enum class BasisAlg { Eea, Iterative };

/// Field multiplications/divisions and symbolic divisions spent in one phase
/// of a decode.
struct PhaseCounters {
  std::uint64_t field_muls = 0;
  std::uint64_t field_divs = 0;
  std::uint64_t sym_divs = 0;
};

/// Per-decode work, split into the minimal-basis construction and the
/// parametrization search.
struct DecodeCounters {
  PhaseCounters basis;
  PhaseCounters search;
};

std::string to_string(const DecodeCounters& c);

/// Result of a decode. For the parametrization decoder, messages is the
/// complete deduplicated set of message polynomials whose codewords are
/// closest to the received word, sorted by coefficient codes, and
/// t = ell2 + j_final - k + 1 is their common rank distance. The oracle
/// decoders fill messages/t the same way and leave j_final and the basis
/// data at zero.
struct DecodeOutput {
  std::vector<Message> messages;
  std::size_t t = 0;
  std::size_t j_final = 0;
  int ell1 = 0;
  int ell2 = 0;
  DecodeCounters counters;
};

/// Counter report of an instrumented run.
inline const DecodeCounters& op_counters(const DecodeOutput& out) {
  return out.counters;
}

/// Finds all messages whose codewords are closest to r.
///
/// Builds a minimal basis {b1, b2} of the interpolation module of r, then
/// for j = 0, 1, ... sweeps every pair of a polynomial beta with
/// qdeg <= ell2 - ell1 + j (the zero polynomial included) and a monic gamma
/// with qdeg = j, forming f = beta o b1 + gamma o b2 and keeping the left
/// quotient when f1 is exactly divisible. Each sweep is completed before the
/// emptiness check so distance ties are all returned. A sweep that finds
/// candidates stops the loop at distance t = ell2 + j - k + 1.
///
/// Throws GuardError if j exceeds the bound implied by t <= min(m, n); a
/// codeword always exists within that radius, so the cap signals a bug.
DecodeOutput decode_closest(const CodeSpec& spec, const Word& r,
                            BasisAlg alg = BasisAlg::Eea);

/// Left-divides f1 by f2 and returns the quotient as a message when the
/// remainder vanishes and qdeg(quo) < k; otherwise nullopt. f2 must be
/// nonzero.
std::optional<Message> divisibility_check(const LinPoly& f2, const LinPoly& f1,
                                          std::size_t k);

/// One element of the parametrization sweep: beta o b1 + gamma o b2,
/// together with the message it yields when the divisibility check accepts
/// it. The negated second component is the candidate's error span
/// polynomial, so message m satisfies f1 = (-f2) o m when present.
struct Candidate {
  LinPoly f1;
  LinPoly f2;
  std::optional<Message> message;
};

Candidate make_candidate(const Basis2& basis, const LinPoly& beta,
                         const LinPoly& gamma, std::size_t k);

/// Ground-truth closest set by scoring every one of the q^(mk) messages.
/// Guarded to enumerations of at most 2^24 messages.
DecodeOutput decode_exhaustive(const CodeSpec& spec, const Word& r);

/// All messages whose codewords lie within rank `radius` of r, found by
/// enumerating candidate partial errors e' of rank up to
/// radius - floor((d-1)/2) and unique-decoding r - e'. Requires
/// radius >= ceil((d-1)/2) with d = n - k + 1. The reported t is the
/// smallest distance among the returned codewords (radius when none).
DecodeOutput decode_chase(const CodeSpec& spec, const Word& r,
                          std::size_t radius);

/// Coefficient codes (a_0, ..., a_{k-1}) of a message polynomial.
std::vector<std::uint64_t> message_codes(const Message& msg, std::size_t k);

}  // namespace gabidulin
