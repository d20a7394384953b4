#include "arr/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace arr {

Polynomial Polynomial::constant(int nvars, Rat c) {
  Polynomial p(nvars);
  if (c != 0) {
    p.terms_.push_back({Monomial::one(nvars), std::move(c)});
    p.max_deg_ = 0;
  }
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::var(nvars, i), Rat(1)});
  p.max_deg_ = 1;
  return p;
}

Polynomial Polynomial::term(int nvars, Monomial m, Rat c) {
  Polynomial p(nvars);
  if (c != 0) {
    p.max_deg_ = m.deg;
    p.terms_.push_back({m, std::move(c)});
  }
  return p;
}

void Polynomial::recompute_degree() {
  max_deg_ = terms_.empty() ? 0 : terms_.front().mono.deg;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().mono.deg;
  return terms_.back().mono.deg == d;
}

Rat Polynomial::coefficient_of(const Monomial& m) const {
  // Terms are sorted descending; binary search.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) {
                               return degrevlex_cmp(t.mono, key) > 0;
                             });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rat(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool negate_b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("mismatched variable count");
  Polynomial r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = degrevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      const Term& t = b.terms_[j++];
      r.terms_.push_back({t.mono, negate_b ? Rat(-t.coef) : t.coef});
    } else {
      Rat s = negate_b ? Rat(a.terms_[i].coef - b.terms_[j].coef)
                       : Rat(a.terms_[i].coef + b.terms_[j].coef);
      if (s != 0) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) {
    const Term& t = b.terms_[j];
    r.terms_.push_back({t.mono, negate_b ? Rat(-t.coef) : t.coef});
  }
  r.recompute_degree();
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& b) const { return merge_add(*this, b, false); }
Polynomial Polynomial::operator-(const Polynomial& b) const { return merge_add(*this, b, true); }

Polynomial Polynomial::operator*(const Polynomial& b) const {
  if (nvars_ != b.nvars_) throw std::invalid_argument("mismatched variable count");
  Polynomial r(nvars_);
  if (is_zero() || b.is_zero()) return r;
  // Accumulate into an ordered map keyed descending.
  auto cmp = [](const Monomial& x, const Monomial& y) { return degrevlex_cmp(x, y) > 0; };
  std::map<Monomial, Rat, decltype(cmp)> acc(cmp);
  for (const auto& ta : terms_)
    for (const auto& tb : b.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto [it, inserted] = acc.try_emplace(m, 0);
      it->second += ta.coef * tb.coef;
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  r.recompute_degree();
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, Rat(t.coef * c)});
  r.max_deg_ = max_deg_;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, Rat(t.coef * c)});
  r.recompute_degree();
  return r;
}

void Polynomial::sub_mul_term(const Polynomial& g, const Monomial& m, const Rat& c) {
  *this = merge_add(*this, g.mul_term(m, c), true);
}

bool Polynomial::operator==(const Polynomial& b) const {
  if (nvars_ != b.nvars_ || terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != b.terms_[i].mono || terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::partial(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("variable index");
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono.e[i] == 0) continue;
    Monomial m = t.mono;
    Rat c = t.coef * static_cast<long>(m.e[i]);
    m.e[i] -= 1;
    m.deg -= 1;
    raw.push_back({m, std::move(c)});
  }
  return from_terms(nvars_, std::move(raw));
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = Polynomial::constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& replacement) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("variable index");
  // Group by the power of x_var, then expand with Horner on the powers.
  int maxp = 0;
  for (const auto& t : terms_) maxp = std::max<int>(maxp, t.mono.e[var]);
  std::vector<std::vector<Term>> by_power(maxp + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int p = m.e[var];
    m.deg = static_cast<std::uint16_t>(m.deg - m.e[var]);
    m.e[var] = 0;
    by_power[p].push_back({m, t.coef});
  }
  Polynomial acc(nvars_);
  for (int p = maxp; p >= 0; --p) {
    if (p != maxp) acc = acc * replacement;
    acc = acc + from_terms(nvars_, std::move(by_power[p]));
  }
  return acc;
}

Polynomial Polynomial::drop_variable(int var) const {
  Polynomial r(nvars_ - 1);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono.e[var] != 0) throw std::logic_error("drop_variable: variable occurs");
    Monomial m = Monomial::one(nvars_ - 1);
    for (int i = 0, j = 0; i < nvars_; ++i) {
      if (i == var) continue;
      m.e[j++] = t.mono.e[i];
    }
    m.deg = t.mono.deg;
    r.terms_.push_back({m, t.coef});
  }
  r.recompute_degree();
  return r;
}

Rat Polynomial::content() const {
  if (terms_.empty()) return Rat(1);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Rat Polynomial::normalize_content() {
  if (terms_.empty()) return Rat(1);
  Rat c = content();
  if (sign(leading_coef()) < 0) c = -c;
  Rat inv = 1 / c;
  for (auto& t : terms_) t.coef *= inv;
  return inv;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return degrevlex_cmp(a.mono, b.mono) > 0; });
  Polynomial r(nvars);
  for (auto& t : raw) {
    if (t.coef == 0) continue;
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef += t.coef;
      if (r.terms_.back().coef == 0) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  r.recompute_degree();
  return r;
}

// ---------------------------------------------------------------------------
// Text I/O

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.coef;
    bool neg = sign(c) < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool unit = (c == 1);
    if (!unit || t.mono.is_one()) out << c.get_str();
    bool printed = !unit || t.mono.is_one();
    for (int i = 0; i < t.mono.nvars; ++i) {
      if (t.mono.e[i] == 0) continue;
      if (printed) out << "*";
      out << "x" << (i + 1);
      if (t.mono.e[i] > 1) out << "^" << static_cast<int>(t.mono.e[i]);
      printed = true;
    }
  }
  return out.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw PolyParseError(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }
  Int read_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return Int(s.substr(start, pos - start));
  }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw PolyParseError("variable count out of range");
  Lexer lx(text);
  std::vector<Term> raw;
  bool expect_term = true;
  int term_sign = 1;
  while (!lx.eof()) {
    char c = lx.peek();
    if (c == '+' || c == '-') {
      ++lx.pos;
      if (expect_term) {
        term_sign = (c == '-') ? -term_sign : term_sign;
      } else {
        term_sign = (c == '-') ? -1 : 1;
        expect_term = true;
      }
      continue;
    }
    if (!expect_term) lx.fail("expected '+' or '-'");
    // One term: sequence of factors joined by optional '*'.
    Rat coef(term_sign);
    Monomial mono = Monomial::one(nvars);
    bool have_factor = false;
    for (;;) {
      char f = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        Int num = lx.read_int();
        Int den(1);
        if (lx.peek() == '/') {
          ++lx.pos;
          den = lx.read_int();
          if (den == 0) lx.fail("zero denominator");
        }
        Rat q(num, den);
        q.canonicalize();
        coef *= q;
        have_factor = true;
      } else if (f == 'x' || f == 'X') {
        ++lx.pos;
        Int idx = lx.read_int();
        if (idx < 1 || idx > nvars) lx.fail("variable index out of range");
        int i = static_cast<int>(idx.get_si()) - 1;
        int power = 1;
        if (lx.peek() == '^') {
          ++lx.pos;
          Int p = lx.read_int();
          if (p < 0 || p > 1000) lx.fail("exponent out of range");
          power = static_cast<int>(p.get_si());
        }
        mono.e[i] = static_cast<std::uint16_t>(mono.e[i] + power);
        mono.deg = static_cast<std::uint16_t>(mono.deg + power);
        have_factor = true;
      } else {
        break;
      }
      if (lx.peek() == '*') {
        ++lx.pos;
        if (lx.eof()) lx.fail("dangling '*'");
        continue;
      }
      char nxt = lx.peek();
      if (nxt == 'x' || nxt == 'X' || std::isdigit(static_cast<unsigned char>(nxt))) continue;
      break;
    }
    if (!have_factor) lx.fail("expected term");
    raw.push_back({mono, coef});
    expect_term = false;
    term_sign = 1;
  }
  if (expect_term && !raw.empty()) throw PolyParseError("dangling sign in '" + text + "'");
  return Polynomial::from_terms(nvars, std::move(raw));
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  std::vector<Term> q_raw, r_raw;
  Polynomial w = f;
  const Monomial& lg = g.leading_monomial();
  const Rat& cg = g.leading_coef();
  std::size_t skip = 0; // leading irreducible terms already moved to r
  while (skip < w.term_count()) {
    const Term& lt = w.terms()[skip];
    if (lg.divides(lt.mono)) {
      Monomial m = lt.mono / lg;
      Rat c = lt.coef / cg;
      q_raw.push_back({m, c});
      w.sub_mul_term(g, m, c);
    } else {
      r_raw.push_back(lt);
      ++skip;
    }
  }
  return {Polynomial::from_terms(f.nvars(), std::move(q_raw)),
          Polynomial::from_terms(f.nvars(), std::move(r_raw))};
}

bool divides_exactly(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  return divrem(f, g).second.is_zero();
}

} // namespace arr
