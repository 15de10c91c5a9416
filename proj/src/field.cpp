#include "gabidulin/field.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace gabidulin {
namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

std::uint64_t checked_field_size(std::uint64_t q, unsigned m) {
  std::uint64_t s = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (s > kMaxFieldSize / q)
      throw InvariantError("field too large: q^m must be <= 2^32");
    s *= q;
  }
  return s;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % q);
}

// --- GF(2) polynomials as bitmasks, ascending bit i = coefficient of x^i ---

bool poly2_divides(std::uint64_t divisor, unsigned ddeg, std::uint64_t f,
                   unsigned fdeg) {
  for (int b = static_cast<int>(fdeg); b >= static_cast<int>(ddeg); --b)
    if (f >> b & 1) f ^= divisor << (b - ddeg);
  return f == 0;
}

bool irreducible2(std::uint64_t mod_bits, unsigned m) {
  for (unsigned d = 1; 2 * d <= m; ++d)
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low)
      if (poly2_divides((std::uint64_t{1} << d) | low, d, mod_bits, m))
        return false;
  return true;
}

// --- generic GF(q) polynomials as ascending digit vectors ---

// Divisibility of f (degree fdeg, digits mod q) by a monic divisor.
bool polyq_divides(const std::vector<std::uint32_t>& divisor, unsigned ddeg,
                   std::vector<std::uint64_t> rem, unsigned fdeg,
                   std::uint64_t q) {
  for (int pos = static_cast<int>(fdeg); pos >= static_cast<int>(ddeg); --pos) {
    std::uint64_t c = rem[pos] % q;
    if (c == 0) continue;
    for (unsigned i = 0; i <= ddeg; ++i)
      rem[pos - ddeg + i] += c * (q - divisor[i] % q);
  }
  for (unsigned i = 0; i < ddeg; ++i)
    if (rem[i] % q != 0) return false;
  return true;
}

bool irreducible_generic(const std::vector<unsigned>& modulus, unsigned m,
                         std::uint64_t q) {
  std::vector<std::uint64_t> f(modulus.begin(), modulus.end());
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::vector<std::uint32_t> divisor(d + 1, 0);
    divisor[d] = 1;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % q);
        c /= q;
      }
      if (polyq_divides(divisor, d, f, m, q)) return false;
    }
  }
  return true;
}

bool modulus_irreducible(const std::vector<unsigned>& modulus, unsigned q,
                         unsigned m) {
  if (q == 2) {
    std::uint64_t bits = 0;
    for (unsigned i = 0; i <= m; ++i)
      if (modulus[i]) bits |= std::uint64_t{1} << i;
    return irreducible2(bits, m);
  }
  return irreducible_generic(modulus, m, q);
}

// Monic irreducible of degree m with the smallest integer encoding of the
// non-leading part. Cached since the degree-32 search takes a moment.
std::vector<unsigned> default_modulus(unsigned q, unsigned m) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({q, m});
  if (it != cache.end()) return it->second;

  std::vector<unsigned> candidate(m + 1, 0);
  candidate[m] = 1;
  std::uint64_t limit = checked_field_size(q, m);
  for (std::uint64_t low = 0; low < limit; ++low) {
    std::uint64_t c = low;
    for (unsigned i = 0; i < m; ++i) {
      candidate[i] = static_cast<unsigned>(c % q);
      c /= q;
    }
    if (modulus_irreducible(candidate, q, m)) {
      cache[{q, m}] = candidate;
      return candidate;
    }
  }
  throw InvariantError("no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(unsigned q, unsigned m) : q_(q), m_(m) {
  if (!is_prime(q_)) throw InvariantError("q must be prime");
  if (m_ == 0) throw InvariantError("extension degree m must be >= 1");
  checked_field_size(q_, m_);
  modulus_ = default_modulus(q_, m_);
  validate_and_build(Backend::Auto);
}

Field::Field(unsigned q, unsigned m, std::vector<unsigned> modulus,
             Backend backend)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
  validate_and_build(backend);
}

void Field::validate_and_build(Backend backend) {
  if (!is_prime(q_)) throw InvariantError("q must be prime");
  if (m_ == 0) throw InvariantError("extension degree m must be >= 1");
  size_ = checked_field_size(q_, m_);

  if (modulus_.size() != static_cast<std::size_t>(m_) + 1)
    throw InvariantError("modulus must have degree exactly m");
  for (unsigned c : modulus_)
    if (c >= q_) throw InvariantError("modulus coefficients must lie in [0, q)");
  if (modulus_[m_] != 1) throw InvariantError("modulus must be monic");
  if (!modulus_irreducible(modulus_, q_, m_))
    throw InvariantError("modulus is reducible over GF(q)");

  if (q_ == 2) {
    modbits_ = 0;
    for (unsigned i = 0; i <= m_; ++i)
      if (modulus_[i]) modbits_ |= std::uint64_t{1} << i;
  }

  switch (backend) {
    case Backend::Auto:
      tabled_ = size_ <= kTableLimit;
      break;
    case Backend::Table:
      if (size_ > kTableLimit)
        throw InvariantError("table backend limited to 2^16 elements");
      tabled_ = true;
      break;
    case Backend::Direct:
      tabled_ = false;
      break;
  }
  if (tabled_) build_tables();
}

Element Field::alpha() const noexcept {
  if (m_ >= 2) return Element{q_};
  return Element{(q_ - modulus_[0] % q_) % q_};  // x = -c mod (x + c)
}

Element Field::element(std::uint64_t code) const {
  if (code >= size_)
    throw InvariantError("element code " + std::to_string(code) +
                         " out of range for field of size " +
                         std::to_string(size_));
  return Element{code};
}

Element Field::from_coords(std::span<const unsigned> coords) const {
  if (coords.size() != m_)
    throw InvariantError("coordinate vector must have length m");
  std::uint64_t code = 0;
  std::uint64_t pw = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (coords[i] >= q_)
      throw InvariantError("coordinate out of range [0, q)");
    code += coords[i] * pw;
    pw *= q_;
  }
  return Element{code};
}

std::vector<unsigned> Field::coords(Element a) const {
  std::vector<unsigned> out(m_);
  std::uint64_t x = a.code;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = static_cast<unsigned>(x % q_);
    x /= q_;
  }
  return out;
}

unsigned Field::coord(Element a, unsigned i) const {
  std::uint64_t x = a.code;
  for (unsigned j = 0; j < i; ++j) x /= q_;
  return static_cast<unsigned>(x % q_);
}

Element Field::add(Element a, Element b) const noexcept {
  if (q_ == 2) return Element{a.code ^ b.code};
  std::uint64_t r = 0, pw = 1, x = a.code, y = b.code;
  for (unsigned i = 0; i < m_; ++i) {
    r += (x % q_ + y % q_) % q_ * pw;
    x /= q_;
    y /= q_;
    pw *= q_;
  }
  return Element{r};
}

Element Field::neg(Element a) const noexcept {
  if (q_ == 2) return a;
  std::uint64_t r = 0, pw = 1, x = a.code;
  for (unsigned i = 0; i < m_; ++i) {
    r += (q_ - x % q_) % q_ * pw;
    x /= q_;
    pw *= q_;
  }
  return Element{r};
}

Element Field::sub(Element a, Element b) const noexcept {
  if (q_ == 2) return Element{a.code ^ b.code};
  return add(a, neg(b));
}

std::uint64_t Field::mul_direct(std::uint64_t a, std::uint64_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (q_ == 2) {
    std::uint64_t acc = 0;
    for (std::uint64_t x = a; x; x &= x - 1)
      acc ^= b << std::countr_zero(x);
    int bit = std::bit_width(acc) - 1;
    while (bit >= static_cast<int>(m_)) {
      acc ^= modbits_ << (bit - m_);
      bit = std::bit_width(acc) - 1;
    }
    return acc;
  }
  if (m_ == 1) return mulmod(a, b, q_);

  // digit convolution followed by reduction by the monic modulus
  std::uint64_t conv[127] = {0};
  std::uint32_t da[64], db[64];
  std::uint64_t x = a, y = b;
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = static_cast<std::uint32_t>(x % q_);
    db[i] = static_cast<std::uint32_t>(y % q_);
    x /= q_;
    y /= q_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      conv[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  for (int pos = 2 * static_cast<int>(m_) - 2; pos >= static_cast<int>(m_);
       --pos) {
    std::uint64_t c = conv[pos] % q_;
    if (c == 0) continue;
    for (unsigned i = 0; i < m_; ++i)
      conv[pos - m_ + i] += c * (q_ - modulus_[i]);
  }
  std::uint64_t r = 0, pw = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += conv[i] % q_ * pw;
    pw *= q_;
  }
  return r;
}

std::uint64_t Field::pow_direct(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_direct(r, a);
    a = mul_direct(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::raw_mul(std::uint64_t a, std::uint64_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (tabled_) {
    std::uint64_t order = size_ - 1;
    return exp_[(log_[a] + log_[b]) % order];
  }
  return mul_direct(a, b);
}

Element Field::mul(Element a, Element b) const {
  mul_count_.fetch_add(1, std::memory_order_relaxed);
  return Element{raw_mul(a.code, b.code)};
}

Element Field::inv(Element a) const {
  if (a.code == 0) throw InvariantError("inversion of zero");
  div_count_.fetch_add(1, std::memory_order_relaxed);
  if (tabled_) {
    std::uint64_t order = size_ - 1;
    return Element{exp_[(order - log_[a.code]) % order]};
  }
  return Element{pow_direct(a.code, size_ - 2)};
}

Element Field::div(Element a, Element b) const {
  if (b.code == 0) throw InvariantError("division by zero");
  div_count_.fetch_add(1, std::memory_order_relaxed);
  if (a.code == 0) return Element{0};
  if (tabled_) {
    std::uint64_t order = size_ - 1;
    return Element{exp_[(log_[a.code] + order - log_[b.code]) % order]};
  }
  return Element{mul_direct(a.code, pow_direct(b.code, size_ - 2))};
}

Element Field::pow(Element a, std::uint64_t e) const {
  Element r = one();
  Element base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Element Field::frobenius(Element a, unsigned i) const {
  unsigned r = i % m_;
  std::uint64_t x = a.code;
  if (tabled_) {
    for (unsigned s = 0; s < r; ++s) x = frob_[x];
  } else {
    for (unsigned s = 0; s < r; ++s) x = pow_direct(x, q_);
  }
  return Element{x};
}

Element Field::frobenius_inv(Element a, unsigned i) const {
  unsigned r = i % m_;
  if (r == 0) return a;
  return frobenius(a, m_ - r);
}

OpTally Field::tally() const noexcept {
  return {mul_count_.load(std::memory_order_relaxed),
          div_count_.load(std::memory_order_relaxed),
          sym_div_count_.load(std::memory_order_relaxed)};
}

void Field::reset_tally() const noexcept {
  mul_count_.store(0, std::memory_order_relaxed);
  div_count_.store(0, std::memory_order_relaxed);
  sym_div_count_.store(0, std::memory_order_relaxed);
}

void Field::count_sym_div() const noexcept {
  sym_div_count_.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t Field::find_generator() const {
  std::uint64_t order = size_ - 1;
  if (order == 1) return 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t n = order;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  for (std::uint64_t cand = 2; cand < size_; ++cand) {
    bool ok = true;
    for (std::uint64_t p : primes) {
      if (pow_direct(cand, order / p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw InvariantError("no multiplicative generator found");  // unreachable
}

void Field::build_tables() {
  const std::uint64_t order = size_ - 1;
  exp_.resize(order);
  log_.assign(size_, 0);
  frob_.resize(size_);
  const std::uint64_t gamma = find_generator();
  std::uint64_t e = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(e);
    log_[e] = static_cast<std::uint32_t>(i);
    e = mul_direct(e, gamma);
  }
  if (e != 1) throw InvariantError("generator order mismatch");  // unreachable
  frob_[0] = 0;
  for (std::uint64_t i = 0; i < order; ++i)
    frob_[exp_[i]] = exp_[i * q_ % order];
}

}  // namespace gabidulin
