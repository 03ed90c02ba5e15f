#include "gaussian/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace gaussian {

Monomial::Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {
  for (auto x : e_) deg_ += x;
}

Monomial Monomial::one(std::size_t arity) {
  return Monomial(std::vector<std::uint32_t>(arity, 0));
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
  std::vector<std::uint32_t> e(arity, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<std::uint32_t> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& other) const {
  std::vector<std::uint32_t> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.e_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

namespace {

// Degrevlex on the index window [lo, hi): higher degree wins; on ties the
// monomial with the smaller exponent at the last differing index wins.
int degrevlex_cmp_window(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int order_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::lex:
      return lex_cmp(a, b);
    case MonomialOrder::Kind::degrevlex:
      return degrevlex_cmp_window(a, b, 0, a.arity());
    case MonomialOrder::Kind::block_elim: {
      std::size_t k = std::min(order.block, a.arity());
      if (int c = degrevlex_cmp_window(a, b, 0, k)) return c;
      return degrevlex_cmp_window(a, b, k, a.arity());
    }
  }
  return 0;
}

PolyRing::PolyRing(std::vector<std::string> variables, FieldSpec field, MonomialOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {}

RingPtr PolyRing::make(std::vector<std::string> variables, FieldSpec field, MonomialOrder order) {
  if (variables.empty()) throw DomainError("polynomial ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_'))
      throw DomainError("bad variable name: '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw DomainError("bad variable name: '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name: '" + v + "'");
  }
  if (order.kind == MonomialOrder::Kind::block_elim &&
      (order.block == 0 || order.block >= variables.size()))
    throw DomainError("elimination block must cover a proper nonempty prefix");
  return RingPtr(new PolyRing(std::move(variables), field, order));
}

int PolyRing::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::same_as(const PolyRing& other) const {
  return variables_ == other.variables_ && field_.spec() == other.field_.spec() &&
         order_ == other.order_;
}

bool PolyRing::same_variables(const PolyRing& other) const {
  return variables_ == other.variables_ && field_.spec() == other.field_.spec();
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw RingMismatchError("operation on a ring-less polynomial");
  if (a.get() == b.get()) return;
  if (!a->same_as(*b)) throw RingMismatchError("polynomials live in different rings");
}

Polynomial Polynomial::zero(RingPtr ring) {
  Polynomial p;
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  Polynomial p;
  p.terms_.push_back({std::move(c), Monomial::one(ring->arity())});
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::one(RingPtr ring) {
  Scalar c = ring->field().one();
  return constant(std::move(ring), std::move(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p;
  p.terms_.push_back({ring->field().one(), Monomial::variable(ring->arity(), index)});
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Scalar c, Monomial m) {
  if (m.arity() != ring->arity()) throw RingMismatchError("term arity does not match ring");
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  Polynomial p;
  p.terms_.push_back({std::move(c), std::move(m)});
  p.ring_ = std::move(ring);
  return p;
}

Polynomial Polynomial::make(RingPtr ring, std::vector<Term> terms) {
  const Field& F = ring->field();
  const MonomialOrder& ord = ring->order();
  for (const auto& t : terms)
    if (t.mono.arity() != ring->arity()) throw RingMismatchError("term arity does not match ring");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order_cmp(a.mono, b.mono, ord) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (F.is_zero(out.back().coeff)) out.pop_back();
    } else if (!F.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  Polynomial p;
  p.ring_ = std::move(ring);
  p.terms_ = std::move(out);
  return p;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const Field& F = ring_->field();
  const MonomialOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = order_cmp(terms_[i].mono, o.terms_[j].mono, ord);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = F.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!F.is_zero(s)) out.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial p;
  p.ring_ = ring_;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  const Field& F = ring_->field();
  Polynomial p;
  p.ring_ = ring_;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({F.neg(t.coeff), t.mono});
  return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  Polynomial p;
  p.ring_ = ring_;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({F.mul(t.coeff, c), t.mono});
  return p;
}

Polynomial Polynomial::times_monomial(const Scalar& c, const Monomial& m) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return zero(ring_);
  Polynomial p;
  p.ring_ = ring_;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({F.mul(t.coeff, c), t.mono.times(m)});
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  // Multiply by the shorter factor term by term; accumulate via +, which
  // keeps every intermediate canonical.
  const Polynomial* longer = this;
  const Polynomial* shorter = &o;
  if (longer->terms_.size() < shorter->terms_.size()) std::swap(longer, shorter);
  Polynomial acc = zero(ring_);
  for (const auto& t : shorter->terms_) acc = acc + longer->times_monomial(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::tail() const {
  Polynomial p;
  p.ring_ = ring_;
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Field& F = ring_->field();
  if (F.is_one(leading_coeff())) return *this;
  return scaled(F.inv(leading_coeff()));
}

Polynomial Polynomial::rebase(RingPtr other) const {
  if (!ring_->same_variables(*other)) throw RingMismatchError("rebase changes variables");
  std::vector<Term> ts = terms_;
  return make(std::move(other), std::move(ts));
}

Polynomial Polynomial::embed(RingPtr big, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->arity()) throw RingMismatchError("embed map has wrong arity");
  if (ring_->field_spec() != big->field_spec()) throw RingMismatchError("embed changes the field");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(big->arity(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) e.at(var_map[i]) = t.mono[i];
    ts.push_back({t.coeff, Monomial(std::move(e))});
  }
  return make(std::move(big), std::move(ts));
}

Polynomial Polynomial::contract(RingPtr small, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != small->arity()) throw RingMismatchError("contract map has wrong arity");
  if (ring_->field_spec() != small->field_spec())
    throw RingMismatchError("contract changes the field");
  std::vector<bool> in_image(ring_->arity(), false);
  for (std::size_t j : var_map) in_image.at(j) = true;
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < ring_->arity(); ++i)
      if (!in_image[i] && t.mono[i] != 0)
        throw DomainError("contract: polynomial involves an eliminated variable");
    std::vector<std::uint32_t> e(small->arity());
    for (std::size_t j = 0; j < var_map.size(); ++j) e[j] = t.mono[var_map[j]];
    ts.push_back({t.coeff, Monomial(std::move(e))});
  }
  return make(std::move(small), std::move(ts));
}

bool Polynomial::operator==(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  return terms_ == o.terms_;
}

Polynomial subtract_scaled(const Polynomial& p, const Scalar& c, const Monomial& m,
                           const Polynomial& g) {
  require_same_ring(p.ring(), g.ring());
  const Field& F = p.ring()->field();
  const MonomialOrder& ord = p.ring()->order();
  const auto& pt = p.terms();
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(pt.size() + gt.size());
  std::size_t i = 0, j = 0;
  while (i < pt.size() && j < gt.size()) {
    Monomial gm = gt[j].mono.times(m);
    int cmp = order_cmp(pt[i].mono, gm, ord);
    if (cmp > 0) {
      out.push_back(pt[i++]);
    } else if (cmp < 0) {
      out.push_back({F.neg(F.mul(c, gt[j].coeff)), std::move(gm)});
      ++j;
    } else {
      Scalar s = F.sub(pt[i].coeff, F.mul(c, gt[j].coeff));
      if (!F.is_zero(s)) out.push_back({std::move(s), pt[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < pt.size(); ++i) out.push_back(pt[i]);
  for (; j < gt.size(); ++j)
    out.push_back({F.neg(F.mul(c, gt[j].coeff)), gt[j].mono.times(m)});
  // Both inputs were canonical and the merge preserves strict descending
  // order, so skip the normalizing constructor.
  Polynomial r;
  r.ring_ = p.ring();
  r.terms_ = std::move(out);
  return r;
}

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ring.variable(i);
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  return os.str();
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Field& F = p.ring()->field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = F.to_string(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (t.mono.is_one()) {
      os << mag;
    } else if (mag == "1") {
      os << format_monomial(*p.ring(), t.mono);
    } else {
      os << mag << "*" << format_monomial(*p.ring(), t.mono);
    }
    first = false;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (pos == start) throw ParseError("expected a number at position " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    if (pos == start) throw ParseError("expected a name at position " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
};

Scalar parse_coeff_literal(const Field& F, Lexer& lx) {
  std::string num = lx.number();
  if (num.find('.') != std::string::npos) return F.from_decimal_string(num);
  if (lx.eat('/')) {
    std::string den = lx.number();
    if (den.find('.') != std::string::npos) throw ParseError("fraction denominator must be an integer");
    return F.from_fraction(mpz_class(num), mpz_class(den));
  }
  return F.from_fraction(mpz_class(num), 1);
}

std::uint32_t parse_exponent(Lexer& lx) {
  std::string n = lx.number();
  if (n.find('.') != std::string::npos) throw ParseError("exponent must be an integer");
  unsigned long v = 0;
  try {
    v = std::stoul(n);
  } catch (const std::exception&) {
    throw ParseError("exponent out of range: " + n);
  }
  if (v > 1'000'000) throw ParseError("exponent out of range: " + n);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
  const Field& F = ring->field();
  Lexer lx{text};
  std::vector<Term> terms;
  if (lx.done()) throw ParseError("empty polynomial text");
  bool first = true;
  while (!lx.done()) {
    bool negate = false;
    if (lx.eat('-')) {
      negate = true;
    } else if (lx.eat('+')) {
      // explicit plus
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms near position " +
                       std::to_string(lx.pos));
    }
    first = false;
    Scalar coeff = F.one();
    std::vector<std::uint32_t> exps(ring->arity(), 0);
    bool have_factor = false;
    for (;;) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        coeff = F.mul(coeff, parse_coeff_literal(F, lx));
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = lx.ident();
        int idx = ring->variable_index(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'");
        std::uint32_t e = 1;
        if (lx.eat('^')) e = parse_exponent(lx);
        exps[static_cast<std::size_t>(idx)] += e;
        have_factor = true;
      } else {
        throw ParseError("expected a coefficient or variable near position " +
                         std::to_string(lx.pos));
      }
      if (lx.eat('*')) continue;
      break;
    }
    if (!have_factor) throw ParseError("empty term");
    if (negate) coeff = F.neg(coeff);
    terms.push_back({std::move(coeff), Monomial(std::move(exps))});
  }
  return Polynomial::make(ring, std::move(terms));
}

UniPoly UniPoly::make(RingPtr ring, std::vector<Polynomial> coeffs) {
  for (const auto& c : coeffs) require_same_ring(ring, c.ring());
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  UniPoly u;
  u.ring_ = std::move(ring);
  u.coeffs_ = std::move(coeffs);
  return u;
}

UniPoly UniPoly::zero(RingPtr ring) {
  UniPoly u;
  u.ring_ = std::move(ring);
  return u;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  std::vector<Polynomial> out(coeffs_.size() + o.coeffs_.size() - 1, Polynomial::zero(ring_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
  return make(ring_, std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Polynomial> out(std::max(coeffs_.size(), o.coeffs_.size()), Polynomial::zero(ring_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
  return make(ring_, std::move(out));
}

bool UniPoly::operator==(const UniPoly& o) const {
  require_same_ring(ring_, o.ring_);
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

}  // namespace gaussian
