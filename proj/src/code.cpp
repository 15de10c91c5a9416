#include "gabidulin/code.hpp"

#include <random>

#include "gabidulin/gfq_matrix.hpp"

namespace gabidulin {
namespace {

GfqMatrix coordinate_matrix(const Field& f, std::span<const Element> entries) {
  // rows = entries, columns = GF(q) coordinates
  GfqMatrix m(f.q(), entries.size(), f.m());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::vector<unsigned> co = f.coords(entries[i]);
    for (unsigned j = 0; j < f.m(); ++j) m.set(i, j, co[j]);
  }
  return m;
}

}  // namespace

CodeSpec::CodeSpec(std::shared_ptr<const Field> field, std::size_t n,
                   std::size_t k, std::vector<Element> generators)
    : field_(std::move(field)), n_(n), k_(k), generators_(std::move(generators)) {
  if (!field_) throw InvariantError("code spec needs a field");
  if (k_ < 1 || k_ > n_ || n_ > field_->m())
    throw InvariantError("code parameters must satisfy 1 <= k <= n <= m");
  if (generators_.size() != n_)
    throw InvariantError("expected n generators");
  for (Element g : generators_)
    if (g.code >= field_->size())
      throw InvariantError("generator code out of range");
  if (rank_weight(*field_, generators_) != n_)
    throw InvariantError(
        "generators must be GF(q)-linearly independent");
}

Word encode(const CodeSpec& spec, const Message& msg) {
  if (&msg.field() != &spec.field())
    throw InvariantError("message belongs to a different field");
  if (msg.qdeg() >= static_cast<int>(spec.k()))
    throw InvariantError("message q-degree must be below k");
  Word c;
  c.reserve(spec.n());
  for (Element g : spec.generators()) c.push_back(msg.eval(g));
  return c;
}

std::size_t rank_weight(const Field& f, std::span<const Element> entries) {
  return coordinate_matrix(f, entries).rank();
}

std::size_t rank_weight(const CodeSpec& spec, const Word& w) {
  if (w.size() != spec.n()) throw InvariantError("word length mismatch");
  return rank_weight(spec.field(), w);
}

std::size_t rank_distance(const CodeSpec& spec, const Word& a, const Word& b) {
  if (a.size() != spec.n() || b.size() != spec.n())
    throw InvariantError("word length mismatch");
  return rank_weight(spec.field(), word_sub(spec.field(), a, b));
}

std::vector<Element> span_basis(const Field& f,
                                std::span<const Element> entries) {
  GfqMatrix reduced = coordinate_matrix(f, entries).rref();
  std::vector<Element> basis;
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    std::vector<unsigned> co(f.m());
    bool nonzero = false;
    for (unsigned j = 0; j < f.m(); ++j) {
      co[j] = reduced.at(i, j);
      nonzero |= co[j] != 0;
    }
    if (nonzero) basis.push_back(f.from_coords(co));
  }
  return basis;
}

std::vector<Element> span_basis(const CodeSpec& spec, const Word& w) {
  if (w.size() != spec.n()) throw InvariantError("word length mismatch");
  return span_basis(spec.field(), w);
}

Word random_error(const CodeSpec& spec, std::size_t t, std::uint64_t seed) {
  const Field& f = spec.field();
  if (t > std::min<std::size_t>(f.m(), spec.n()))
    throw InvariantError("error rank t out of range");
  Word e(spec.n(), f.zero());
  if (t == 0) return e;

  std::mt19937_64 rng(seed);
  auto draw_full_rank = [&](std::size_t rows, std::size_t cols) {
    GfqMatrix m(f.q(), rows, cols);
    do {
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          m.set(i, j, static_cast<std::uint32_t>(rng() % f.q()));
    } while (m.rank() != std::min(rows, cols));
    return m;
  };

  GfqMatrix a = draw_full_rank(f.m(), t);
  GfqMatrix b = draw_full_rank(t, spec.n());
  GfqMatrix prod = a.multiplied_by(b);
  for (std::size_t j = 0; j < spec.n(); ++j) {
    std::vector<unsigned> co(f.m());
    for (unsigned i = 0; i < f.m(); ++i) co[i] = prod.at(i, j);
    e[j] = f.from_coords(co);
  }
  return e;
}

LinPoly error_span_poly(const CodeSpec& spec, const Word& e) {
  if (e.size() != spec.n()) throw InvariantError("word length mismatch");
  std::vector<Element> basis = span_basis(spec.field(), e);
  if (basis.empty())
    throw InvariantError("error span polynomial of the zero word");
  return annihilator(spec.field(), basis);
}

Word word_add(const Field& f, const Word& a, const Word& b) {
  if (a.size() != b.size()) throw InvariantError("word length mismatch");
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Word word_sub(const Field& f, const Word& a, const Word& b) {
  if (a.size() != b.size()) throw InvariantError("word length mismatch");
  Word out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

}  // namespace gabidulin
