#include "markov12/laurent.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <queue>

#include "markov12/errors.hpp"

namespace markov12 {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::int64_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::int64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::map<std::size_t, std::int64_t> Monomial::support() const {
  std::map<std::size_t, std::int64_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.emplace(i, exps_[i]);
  }
  return out;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (o.nvars() != nvars()) throw VariableCountMismatch("monomial variable counts differ");
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
  return *this;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& e : m.exps_) e = -e;
  return m;
}

int grlex_compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void require_same_nvars(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  if (p.nvars() != q.nvars()) {
    throw VariableCountMismatch("polynomials in " + std::to_string(p.nvars()) + " and " +
                                std::to_string(q.nvars()) + " variables");
  }
}

// Mixed-radix index over an exponent box, x1 most significant, so index order
// within one total degree is lex order.
struct Box {
  std::vector<std::int64_t> lo;
  std::vector<std::uint64_t> width;
  std::vector<std::uint64_t> stride;
  bool fits = true;

  Box(const std::vector<std::int64_t>& lower, const std::vector<std::int64_t>& upper)
      : lo(lower), width(lower.size()), stride(lower.size()) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    std::uint64_t cells = 1;
    for (std::size_t i = lower.size(); i-- > 0;) {
      width[i] = static_cast<std::uint64_t>(upper[i] - lower[i]) + 1;
      stride[i] = cells;
      if (width[i] > kLimit / cells) {
        fits = false;
        return;
      }
      cells *= width[i];
    }
  }

  std::uint64_t index(std::span<const std::int64_t> e, const std::vector<std::int64_t>& base) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k += static_cast<std::uint64_t>(e[i] - base[i]) * stride[i];
    return k;
  }

  void decode(std::uint64_t key, std::int64_t* out) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      out[i] = lo[i] + static_cast<std::int64_t>((key / stride[i]) % width[i]);
    }
  }
};

// Open-addressing map from packed monomial keys to coefficients.
class Accumulator {
 public:
  explicit Accumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    rehash(cap);
    vals_.reserve(expected);
    keys_.reserve(expected);
  }

  Integer& at(std::uint64_t key) {
    std::size_t h = hash(key);
    while (true) {
      const std::uint32_t s = table_[h];
      if (s == kEmpty) break;
      if (keys_[s] == key) return vals_[s];
      h = (h + 1) & mask_;
    }
    if (2 * (keys_.size() + 1) > table_.size()) {
      rehash(table_.size() * 2);
      h = hash(key);
      while (table_[h] != kEmpty) h = (h + 1) & mask_;
    }
    table_[h] = static_cast<std::uint32_t>(keys_.size());
    keys_.push_back(key);
    vals_.emplace_back(0);
    return vals_.back();
  }

  const Integer* find(std::uint64_t key) const {
    std::size_t h = hash(key);
    while (true) {
      const std::uint32_t s = table_[h];
      if (s == kEmpty) return nullptr;
      if (keys_[s] == key) return &vals_[s];
      h = (h + 1) & mask_;
    }
  }

  std::size_t size() const { return keys_.size(); }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  Integer& value(std::size_t i) { return vals_[i]; }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::size_t hash(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_);
  }

  void rehash(std::size_t cap) {
    table_.assign(cap, kEmpty);
    mask_ = cap - 1;
    shift_ = 64 - static_cast<unsigned>(std::countr_zero(cap));
    for (std::uint32_t s = 0; s < keys_.size(); ++s) {
      std::size_t h = hash(keys_[s]);
      while (table_[h] != kEmpty) h = (h + 1) & mask_;
      table_[h] = s;
    }
  }

  std::vector<std::uint32_t> table_;
  std::vector<std::uint64_t> keys_;
  std::vector<Integer> vals_;
  std::size_t mask_ = 0;
  unsigned shift_ = 0;
};

LaurentPolynomial collect(std::size_t n, const Box& box, Accumulator& acc) {
  struct Entry {
    std::int64_t degree;
    std::uint64_t key;
    std::size_t slot;
  };
  std::vector<Entry> entries;
  std::vector<std::int64_t> e(n);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc.value(i) == 0) continue;
    box.decode(acc.key(i), e.data());
    entries.push_back({std::accumulate(e.begin(), e.end(), std::int64_t{0}), acc.key(i), i});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.key > b.key;
  });
  TermBuilder out(n);
  out.reserve(entries.size());
  for (const auto& en : entries) {
    box.decode(en.key, e.data());
    out.append(e, std::move(acc.value(en.slot)));
  }
  return out.finish();
}

struct GrlexGreater {
  bool operator()(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
    return grlex_compare(a, b) > 0;
  }
};
using SparseMap = std::map<std::vector<std::int64_t>, Integer, GrlexGreater>;

LaurentPolynomial from_sparse(std::size_t n, const SparseMap& m) {
  TermBuilder out(n);
  for (const auto& [e, c] : m) {
    if (c != 0) out.append(e, c);
  }
  return out.finish();
}

// Used only when the exponent box is too large to pack into 64 bits.
LaurentPolynomial sparse_mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  const std::size_t n = p.nvars();
  SparseMap acc;
  std::vector<std::int64_t> e(n);
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    for (std::size_t j = 0; j < q.term_count(); ++j) {
      for (std::size_t v = 0; v < n; ++v) e[v] = p.exponents(i)[v] + q.exponents(j)[v];
      acc[e] += p.coefficient(i) * q.coefficient(j);
    }
  }
  return from_sparse(n, acc);
}

void check_quotient_term(std::span<const std::int64_t> t, const std::vector<std::int64_t>& lo,
                         const std::vector<std::int64_t>& hi) {
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t[v] < lo[v] || t[v] > hi[v]) throw NotDivisible("no exact Laurent quotient");
  }
}

LaurentPolynomial sparse_div(const LaurentPolynomial& p, const LaurentPolynomial& q,
                             const std::vector<std::int64_t>& lo,
                             const std::vector<std::int64_t>& hi) {
  const std::size_t n = p.nvars();
  SparseMap rem;
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    rem.emplace(std::vector<std::int64_t>(p.exponents(i).begin(), p.exponents(i).end()),
                p.coefficient(i));
  }
  TermBuilder quot(n);
  std::vector<std::int64_t> t(n), e(n);
  while (!rem.empty()) {
    auto it = rem.begin();
    if (it->second == 0) {
      rem.erase(it);
      continue;
    }
    for (std::size_t v = 0; v < n; ++v) t[v] = it->first[v] - q.exponents(0)[v];
    check_quotient_term(t, lo, hi);
    if (!mpz_divisible_p(it->second.get_mpz_t(), q.coefficient(0).get_mpz_t())) {
      throw NotDivisible("no exact Laurent quotient");
    }
    Integer c = it->second / q.coefficient(0);
    for (std::size_t j = 0; j < q.term_count(); ++j) {
      for (std::size_t v = 0; v < n; ++v) e[v] = t[v] + q.exponents(j)[v];
      rem[e] -= c * q.coefficient(j);
    }
    quot.append(t, std::move(c));
  }
  return quot.finish();
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Integer& c) {
  return from_monomial(Monomial(nvars), c);
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t index) {
  return from_monomial(Monomial::variable(nvars, index));
}

LaurentPolynomial LaurentPolynomial::from_monomial(const Monomial& m, const Integer& c) {
  TermBuilder b(m.nvars());
  b.append(m.exponents(), c);
  return b.finish();
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars,
                                                std::vector<std::pair<Monomial, Integer>> terms) {
  SparseMap acc;
  for (auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw VariableCountMismatch("term has wrong variable count");
    acc[std::vector<std::int64_t>(m.exponents().begin(), m.exponents().end())] += c;
  }
  return from_sparse(nvars, acc);
}

Monomial LaurentPolynomial::monomial(std::size_t term) const {
  auto e = exponents(term);
  return Monomial(std::vector<std::int64_t>(e.begin(), e.end()));
}

Integer LaurentPolynomial::coefficient_of(const Monomial& m) const {
  if (m.nvars() != n_) throw VariableCountMismatch("monomial has wrong variable count");
  std::size_t lo = 0, hi = term_count();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = grlex_compare(exponents(mid), m.exponents());
    if (c == 0) return coefs_[mid];
    if (c > 0) lo = mid + 1;
    else hi = mid;
  }
  return 0;
}

std::vector<std::int64_t> LaurentPolynomial::min_exponents() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(exponents(0).begin(), exponents(0).end());
  for (std::size_t i = 1; i < term_count(); ++i) {
    for (std::size_t v = 0; v < n_; ++v) out[v] = std::min(out[v], exponents(i)[v]);
  }
  return out;
}

std::vector<std::int64_t> LaurentPolynomial::max_exponents() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(exponents(0).begin(), exponents(0).end());
  for (std::size_t i = 1; i < term_count(); ++i) {
    for (std::size_t v = 0; v < n_; ++v) out[v] = std::max(out[v], exponents(i)[v]);
  }
  return out;
}

void TermBuilder::reserve(std::size_t terms) {
  poly_.exps_.reserve(terms * poly_.n_);
  poly_.coefs_.reserve(terms);
}

void TermBuilder::append(std::span<const std::int64_t> exps, Integer coef) {
  if (coef == 0) return;
  if (exps.size() != poly_.n_) throw VariableCountMismatch("term has wrong variable count");
  poly_.exps_.insert(poly_.exps_.end(), exps.begin(), exps.end());
  poly_.coefs_.push_back(std::move(coef));
}

LaurentPolynomial lp_add(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_nvars(p, q);
  TermBuilder out(p.nvars());
  out.reserve(p.term_count() + q.term_count());
  std::size_t i = 0, j = 0;
  while (i < p.term_count() || j < q.term_count()) {
    int c;
    if (i == p.term_count()) c = -1;
    else if (j == q.term_count()) c = 1;
    else c = grlex_compare(p.exponents(i), q.exponents(j));
    if (c > 0) {
      out.append(p.exponents(i), p.coefficient(i));
      ++i;
    } else if (c < 0) {
      out.append(q.exponents(j), q.coefficient(j));
      ++j;
    } else {
      out.append(p.exponents(i), p.coefficient(i) + q.coefficient(j));
      ++i;
      ++j;
    }
  }
  return out.finish();
}

LaurentPolynomial lp_neg(const LaurentPolynomial& p) {
  TermBuilder out(p.nvars());
  out.reserve(p.term_count());
  for (std::size_t i = 0; i < p.term_count(); ++i) out.append(p.exponents(i), -p.coefficient(i));
  return out.finish();
}

LaurentPolynomial lp_sub(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return lp_add(p, lp_neg(q));
}

LaurentPolynomial lp_mul_monomial(const LaurentPolynomial& p, const Monomial& m, const Integer& c) {
  if (m.nvars() != p.nvars()) throw VariableCountMismatch("monomial has wrong variable count");
  TermBuilder out(p.nvars());
  if (c == 0) return out.finish();
  out.reserve(p.term_count());
  std::vector<std::int64_t> e(p.nvars());
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = p.exponents(i)[v] + m[v];
    out.append(e, p.coefficient(i) * c);
  }
  return out.finish();
}

LaurentPolynomial lp_mul(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_nvars(p, q);
  const std::size_t n = p.nvars();
  if (p.is_zero() || q.is_zero()) return LaurentPolynomial(n);
  if (q.term_count() == 1) return lp_mul_monomial(p, q.monomial(0), q.coefficient(0));
  if (p.term_count() == 1) return lp_mul_monomial(q, p.monomial(0), p.coefficient(0));

  const auto pmin = p.min_exponents(), pmax = p.max_exponents();
  const auto qmin = q.min_exponents(), qmax = q.max_exponents();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t v = 0; v < n; ++v) {
    lo[v] = pmin[v] + qmin[v];
    hi[v] = pmax[v] + qmax[v];
  }
  const Box box(lo, hi);
  if (!box.fits) return sparse_mul(p, q);

  std::vector<std::uint64_t> pk(p.term_count()), qk(q.term_count());
  for (std::size_t i = 0; i < pk.size(); ++i) pk[i] = box.index(p.exponents(i), pmin);
  for (std::size_t j = 0; j < qk.size(); ++j) qk[j] = box.index(q.exponents(j), qmin);

  Accumulator acc(std::min<std::size_t>(p.term_count() * q.term_count(), 4 * (pk.size() + qk.size())));
  for (std::size_t i = 0; i < pk.size(); ++i) {
    const mpz_srcptr a = p.coefficient(i).get_mpz_t();
    for (std::size_t j = 0; j < qk.size(); ++j) {
      mpz_addmul(acc.at(pk[i] + qk[j]).get_mpz_t(), a, q.coefficient(j).get_mpz_t());
    }
  }
  return collect(n, box, acc);
}

LaurentPolynomial lp_pow(const LaurentPolynomial& p, unsigned exponent) {
  LaurentPolynomial result = LaurentPolynomial::constant(p.nvars(), 1);
  LaurentPolynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = lp_mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = lp_mul(base, base);
  }
  return result;
}

LaurentPolynomial lp_div_exact(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  require_same_nvars(p, q);
  const std::size_t n = p.nvars();
  if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (p.is_zero()) return LaurentPolynomial(n);

  if (q.term_count() == 1) {
    TermBuilder out(n);
    out.reserve(p.term_count());
    std::vector<std::int64_t> e(n);
    const Integer& d = q.coefficient(0);
    for (std::size_t i = 0; i < p.term_count(); ++i) {
      if (!mpz_divisible_p(p.coefficient(i).get_mpz_t(), d.get_mpz_t())) {
        throw NotDivisible("coefficient not divisible by " + d.get_str());
      }
      for (std::size_t v = 0; v < n; ++v) e[v] = p.exponents(i)[v] - q.exponents(0)[v];
      Integer c;
      mpz_divexact(c.get_mpz_t(), p.coefficient(i).get_mpz_t(), d.get_mpz_t());
      out.append(e, std::move(c));
    }
    return out.finish();
  }

  // Newton polytopes add under multiplication, so every quotient exponent lies in
  // [min(p) - min(q), max(p) - max(q)] per variable.
  const auto pmin = p.min_exponents(), pmax = p.max_exponents();
  const auto qmin = q.min_exponents(), qmax = q.max_exponents();
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t v = 0; v < n; ++v) {
    lo[v] = pmin[v] - qmin[v];
    hi[v] = pmax[v] - qmax[v];
    if (lo[v] > hi[v]) throw NotDivisible("no exact Laurent quotient");
  }
  const Box box(pmin, pmax);
  if (!box.fits) return sparse_div(p, q, lo, hi);

  std::vector<std::uint64_t> qk(q.term_count());
  std::vector<std::int64_t> qdeg(q.term_count());
  for (std::size_t j = 0; j < qk.size(); ++j) {
    qk[j] = box.index(q.exponents(j), qmin);
    qdeg[j] = std::accumulate(q.exponents(j).begin(), q.exponents(j).end(), std::int64_t{0});
  }

  // Remainder keyed by packed monomial; the heap yields the grlex-leading key.
  Accumulator rem(2 * p.term_count());
  std::priority_queue<std::pair<std::int64_t, std::uint64_t>> heap;
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    const auto k = box.index(p.exponents(i), pmin);
    rem.at(k) = p.coefficient(i);
    heap.emplace(std::accumulate(p.exponents(i).begin(), p.exponents(i).end(), std::int64_t{0}), k);
  }

  const Integer& lead = q.coefficient(0);
  TermBuilder quot(n);
  std::vector<std::int64_t> m(n), t(n);
  while (!heap.empty()) {
    const auto [deg, key] = heap.top();
    heap.pop();
    const Integer* r = rem.find(key);
    if (r == nullptr || *r == 0) continue;
    box.decode(key, m.data());
    for (std::size_t v = 0; v < n; ++v) t[v] = m[v] - q.exponents(0)[v];
    check_quotient_term(t, lo, hi);
    if (!mpz_divisible_p(r->get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible("no exact Laurent quotient");
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), r->get_mpz_t(), lead.get_mpz_t());
    const std::uint64_t tk = key - qk[0];
    const std::int64_t tdeg = deg - qdeg[0];
    for (std::size_t j = 0; j < qk.size(); ++j) {
      Integer& slot = rem.at(tk + qk[j]);
      const bool was_zero = slot == 0;
      mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), q.coefficient(j).get_mpz_t());
      if (was_zero && slot != 0) heap.emplace(tdeg + qdeg[j], tk + qk[j]);
    }
    quot.append(t, std::move(c));
  }
  return quot.finish();
}

Rational lp_eval(const LaurentPolynomial& p, std::span<const Rational> point) {
  const std::size_t n = p.nvars();
  if (point.size() != n) throw VariableCountMismatch("evaluation point has wrong length");
  if (p.is_zero()) return Rational(0);
  const auto lo = p.min_exponents(), hi = p.max_exponents();
  // powers[v][e - lo[v]] = point[v]^e
  std::vector<std::vector<Rational>> powers(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (point[v].is_zero() && lo[v] < 0) {
      throw EvaluationError("x" + std::to_string(v + 1) + " = 0 under a negative exponent");
    }
    for (std::int64_t e = lo[v]; e <= hi[v]; ++e) powers[v].push_back(pow(point[v], e));
  }
  Integer num = 0, den = 1;
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    Rational term(p.coefficient(i));
    for (std::size_t v = 0; v < n; ++v) term *= powers[v][static_cast<std::size_t>(p.exponents(i)[v] - lo[v])];
    // Accumulate over a running common denominator to avoid a gcd per term.
    num = num * term.denominator() + term.numerator() * den;
    den *= term.denominator();
  }
  return Rational(num, den);
}

bool lp_is_laurent_positive(const LaurentPolynomial& p) {
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    if (p.coefficient(i) <= 0) return false;
  }
  return true;
}

bool lp_is_polynomial(const LaurentPolynomial& p) {
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    for (auto e : p.exponents(i)) {
      if (e < 0) return false;
    }
  }
  return true;
}

namespace {

std::string monomial_body(std::span<const std::int64_t> e) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v + 1);
    if (e[v] != 1) out += '^' + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

std::string to_text(const Monomial& m) {
  auto body = monomial_body(m.exponents());
  return body.empty() ? "1" : body;
}

std::string to_text(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.term_count(); ++i) {
    const Integer& c = p.coefficient(i);
    const bool negative = c < 0;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer mag = abs(c);
    const auto body = monomial_body(p.exponents(i));
    if (body.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += body;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  LaurentPolynomial parse() {
    std::vector<std::pair<Monomial, Integer>> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [m, c] = parse_term();
      terms.emplace_back(std::move(m), sign * c);
      skip_ws();
      if (pos_ == s_.size()) break;
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos_;
    }
    return LaurentPolynomial::from_terms(n_, std::move(terms));
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Monomial m(n_);
    Integer c = 1;
    while (true) {
      skip_ws();
      if (peek() == 'x') {
        ++pos_;
        const auto idx = parse_digits();
        if (idx < 1 || idx > static_cast<long>(n_)) fail("variable index out of range");
        std::int64_t e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          bool neg = false;
          if (peek() == '-') {
            neg = true;
            ++pos_;
          }
          e = parse_digits();
          if (neg) e = -e;
        }
        m[static_cast<std::size_t>(idx - 1)] += e;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const auto start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        c *= Integer(std::string(s_.substr(start, pos_ - start)));
      } else {
        fail("expected a coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  long parse_digits() {
    const auto start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a small integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  return PolyParser(text, nvars).parse();
}

}  // namespace markov12
