#include "rootedpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace rootedpoly {

std::string Var::name() const {
  switch (kind) {
    case VarKind::XSimple:
      return "x";
    case VarKind::X:
      return "x" + std::to_string(index);
    case VarKind::Y:
      return "y" + std::to_string(index);
    case VarKind::W:
      return "w" + std::to_string(index);
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const noexcept {
  for (const auto& [u, e] : factors_) {
    if (u == v) return e;
  }
  return 0;
}

Monomial Monomial::without(Var v) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.first != v) m.factors_.push_back(f);
  }
  return m;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& divisor) const {
  Monomial m;
  auto it = factors_.begin();
  for (const auto& [v, e] : divisor.factors_) {
    while (it != factors_.end() && it->first < v) m.factors_.push_back(*it++);
    if (it == factors_.end() || it->first != v || it->second < e) return std::nullopt;
    if (it->second > e) m.factors_.emplace_back(v, it->second - e);
    ++it;
  }
  while (it != factors_.end()) m.factors_.push_back(*it++);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      m.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  return m;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return i < fa.size() && i >= fb.size();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : m.factors()) {
    std::size_t k = (static_cast<std::size_t>(v.kind) << 56) ^ (std::size_t{v.index} << 20) ^ e;
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// -------------------------------------------------------------------- Poly

namespace {

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Poly::Term> drain(Accumulator& acc) {
  std::vector<Poly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.emplace_back(m, std::move(c));
  }
  return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(Var v) { terms_.emplace_back(Monomial(v), Rational(1)); }

Poly::Poly(Monomial m, Rational c) {
  if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return CanonicalOrder{}(a.first, b.first); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    // mpq_class(n, d) is not reduced; equality needs canonical values.
    t.second.canonicalize();
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational Poly::constant() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rational(0);
}

std::uint32_t Poly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

std::uint32_t Poly::degree_in(Var v) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
  return d;
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.first.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Poly::is_univariate_in(Var v) const noexcept {
  for (const auto& t : terms_) {
    for (const auto& f : t.first.factors()) {
      if (f.first != v) return false;
    }
  }
  return true;
}

Poly Poly::coefficient(Var v, std::uint32_t exponent) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) == exponent) out.emplace_back(m.without(v), c);
  }
  return from_terms(std::move(out));
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.first == m) return t.second;
  }
  return Rational(0);
}

Poly Poly::rename(const std::function<Var(Var)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : m.factors()) fs.emplace_back(f(v), e);
    out.emplace_back(Monomial::from_factors(std::move(fs)), c);
  }
  return from_terms(std::move(out));
}

Poly& Poly::operator+=(const Poly& b) {
  if (b.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  CanonicalOrder before;
  while (i != terms_.end() && j != b.terms_.end()) {
    if (before(i->first, j->first)) {
      out.push_back(std::move(*i++));
    } else if (before(j->first, i->first)) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) out.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != b.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& b) { return *this += -b; }

Poly& Poly::operator*=(const Poly& b) { return *this = *this * b; }

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) {
    Poly r = b;
    const Rational& c = a.terms_.front().second;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  if (b.is_constant()) return b * a;
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      acc[ma * mb] += prod;
    }
  }
  Poly r;
  r.terms_ = drain(acc);
  r.normalize();
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += format_rational(mag);
    } else {
      if (mag != 1) s += format_rational(mag) + '*';
      s += m.to_string();
    }
  }
  return s;
}

// -------------------------------------------------------------- operations

Poly add(const Poly& a, const Poly& b) { return a + b; }

Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly pow(const Poly& a, std::uint32_t n) {
  Poly result(1L);
  Poly base = a;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly substitute(const Poly& p, Var v, const Poly& q) {
  const auto d = p.degree_in(v);
  if (d == 0) return p;
  std::vector<Poly> powers{Poly(1L)};
  for (std::uint32_t k = 1; k <= d; ++k) powers.push_back(powers.back() * q);
  std::vector<Poly> by_power(d + 1);
  for (std::uint32_t k = 0; k <= d; ++k) by_power[k] = p.coefficient(v, k);
  Poly result;
  for (std::uint32_t k = 0; k <= d; ++k) {
    if (!by_power[k].is_zero()) result += by_power[k] * powers[k];
  }
  return result;
}

namespace {

Poly ratio_recurse(const Poly& p, std::span<const RatioTarget> targets) {
  if (targets.empty() || p.is_zero()) {
    if (p.is_zero()) return {};
    Poly denominators(1L);
    for (const auto& t : targets) denominators *= t.denominator;
    return p * denominators;
  }
  const auto& head = targets.front();
  const auto rest = targets.subspan(1);
  const Poly with = p.coefficient(head.var, 1);
  const Poly without = p.coefficient(head.var, 0);
  Poly result;
  if (!with.is_zero()) result += head.numerator * ratio_recurse(with, rest);
  if (!without.is_zero()) result += head.denominator * ratio_recurse(without, rest);
  return result;
}

}  // namespace

Poly multilinear_ratio_substitute(const Poly& p, std::span<const RatioTarget> targets) {
  for (const auto& t : targets) {
    if (p.degree_in(t.var) > 1) {
      throw InputError("not multilinear in " + t.var.name());
    }
  }
  return ratio_recurse(p, targets);
}

std::optional<Poly> divides(const Poly& divisor, const Poly& p) {
  if (divisor.is_zero()) throw InputError("unsupported divisor: zero");
  if (!divisor.is_univariate_in(Var::x())) {
    throw InputError("unsupported divisor: must be univariate in x");
  }
  const auto dd = divisor.degree_in(Var::x());
  const Rational lead = divisor.coefficient(Var::x(), dd).constant();
  // Coefficients of p by power of x, each a polynomial in the other variables.
  const auto dp = p.degree_in(Var::x());
  std::vector<Poly> rem(dp + 1);
  for (std::uint32_t k = 0; k <= dp; ++k) rem[k] = p.coefficient(Var::x(), k);
  std::vector<Rational> dcoef(dd + 1);
  for (std::uint32_t k = 0; k <= dd; ++k) dcoef[k] = divisor.coefficient(Monomial(Var::x(), k));
  if (p.is_zero()) return Poly{};
  if (dp < dd) return std::nullopt;
  std::vector<Poly> quot(dp - dd + 1);
  for (std::uint32_t k = dp + 1; k-- > dd;) {
    if (rem[k].is_zero()) continue;
    Poly q = rem[k] * Poly(Rational(1) / lead);
    for (std::uint32_t i = 0; i <= dd; ++i) {
      if (dcoef[i] != 0) rem[k - dd + i] -= q * Poly(dcoef[i]);
    }
    quot[k - dd] = std::move(q);
  }
  for (std::uint32_t k = 0; k < dd; ++k) {
    if (!rem[k].is_zero()) return std::nullopt;
  }
  Poly result;
  for (std::uint32_t k = 0; k < quot.size(); ++k) {
    if (!quot[k].is_zero()) result += quot[k] * Poly(Monomial(Var::x(), k), Rational(1));
  }
  return result;
}

std::vector<Poly> coeffs_in_x(const Poly& p) {
  const auto d = p.degree_in(Var::x());
  std::vector<Poly> out;
  out.reserve(d + 1);
  for (std::uint32_t k = d + 1; k-- > 0;) out.push_back(p.coefficient(Var::x(), k));
  return out;
}

Rational eval(const Poly& p, const std::map<Var, Rational>& assignment) {
  return eval<Rational>(p, assignment, [](const Rational& q) { return q; });
}

double eval(const Poly& p, const std::map<Var, double>& assignment) {
  return eval<double>(p, assignment, [](const Rational& q) { return q.get_d(); });
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip();
    if (at_end()) throw InputError("empty polynomial");
    Poly result;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    result = term();
    if (negative) result = -result;
    for (skip(); !at_end(); skip()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      Poly t = term();
      result += op == '-' ? -t : t;
    }
    return result;
  }

 private:
  Poly term() {
    Poly t = factor();
    for (skip(); !at_end() && peek() == '*'; skip()) {
      get();
      t *= factor();
    }
    return t;
  }

  Poly factor() {
    skip();
    if (at_end()) fail("unexpected end");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(mpz_class(digits(), 10));
      skip();
      if (!at_end() && peek() == '/') {
        get();
        skip();
        mpz_class den(digits(), 10);
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      return Poly(q);
    }
    if (c == '(') {
      get();
      Poly inner = Parser::sub(*this);
      skip();
      if (at_end() || get() != ')') fail("expected ')'");
      return power(inner);
    }
    return power(Poly(variable()));
  }

  static Poly sub(Parser& outer) {
    // Parses a parenthesised sum sharing the outer cursor.
    Poly result;
    outer.skip();
    bool negative = false;
    if (!outer.at_end() && (outer.peek() == '-' || outer.peek() == '+')) negative = outer.get() == '-';
    result = outer.term();
    if (negative) result = -result;
    for (outer.skip(); !outer.at_end() && (outer.peek() == '+' || outer.peek() == '-'); outer.skip()) {
      const char op = outer.get();
      Poly t = outer.term();
      result += op == '-' ? -t : t;
    }
    return result;
  }

  Poly power(const Poly& base) {
    skip();
    if (!at_end() && peek() == '^') {
      get();
      skip();
      const auto e = std::stoul(digits());
      return pow(base, static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Var variable() {
    const char c = get();
    std::string idx;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) idx += get();
    const auto index = idx.empty() ? 0U : static_cast<std::uint32_t>(std::stoul(idx));
    switch (c) {
      case 'x':
        return idx.empty() ? Var::x() : Var::x(index);
      case 'y':
        if (index == 1 || index == 2) return Var::y(index);
        break;
      case 'w':
        if (index >= 1) return Var::w(index);
        break;
      default:
        break;
    }
    fail(std::string("unknown variable starting with '") + c + "'");
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace rootedpoly
