#include "iqc/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace iqc {

namespace {

using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const QLaurent& a) {
  Dense d(a.high() - a.low() + 1);
  for (const auto& [e, c] : a.terms()) d[e - a.low()] = c;
  return d;
}

mpz_class dense_content(const Dense& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  mpz_class g = dense_content(p);
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
}

// Pseudo-remainder of a by b (deg a >= deg b).
Dense pseudo_rem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense primitive_gcd(Dense a, Dense b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    make_primitive(b);
  }
  make_primitive(a);
  return a;
}

}  // namespace

QLaurent::QLaurent(long c) {
  if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

QLaurent QLaurent::monomial(int twice_exp, mpz_class coeff) {
  QLaurent r;
  if (coeff != 0) r.terms_.emplace_back(twice_exp, std::move(coeff));
  return r;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

mpz_class QLaurent::coeff(int twice_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), twice_exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == twice_exp) return it->second;
  return 0;
}

mpz_class QLaurent::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QLaurent QLaurent::shifted(int twice_exp) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.first += twice_exp;
  return r;
}

QLaurent QLaurent::bar() const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) t.emplace_back(-it->first, it->second);
  return QLaurent(std::move(t));
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      mpz_class s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent& QLaurent::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

QLaurent QLaurent::divided_by_integer(const mpz_class& c) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
  return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_monomial()) {
    QLaurent r = b.shifted(a.low());
    r *= a.terms_[0].second;
    return r;
  }
  if (b.is_monomial()) return b * a;
  const int lo = a.low() + b.low();
  Dense acc(a.high() + b.high() - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  std::vector<QLaurent::Term> t;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != 0) t.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
  return QLaurent(std::move(t));
}

std::strong_ordering operator<=>(const QLaurent& a, const QLaurent& b) {
  const std::size_t m = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
    int s = cmp(a.terms_[i].second, b.terms_[i].second);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool QLaurent::try_divide(const QLaurent& a, const QLaurent& b, QLaurent& quotient) {
  if (b.is_zero()) throw DivisionByZero();
  quotient = QLaurent();
  if (a.is_zero()) return true;
  if (b.is_monomial()) {
    const mpz_class& c = b.terms_[0].second;
    for (const auto& [e, ca] : a.terms_)
      if (!mpz_divisible_p(ca.get_mpz_t(), c.get_mpz_t())) return false;
    quotient = a.divided_by_integer(c).shifted(-b.low());
    return true;
  }
  const int min_exp = a.low() - b.low();
  QLaurent rem = a;
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const int t = rem.high() - b.high();
    if (t < min_exp) return false;
    if (!mpz_divisible_p(rem.leading_coeff().get_mpz_t(), b.leading_coeff().get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rem.leading_coeff().get_mpz_t(), b.leading_coeff().get_mpz_t());
    QLaurent step = b.shifted(t);
    step *= c;
    rem -= step;
    q.emplace_back(t, std::move(c));
  }
  std::reverse(q.begin(), q.end());
  quotient = QLaurent(std::move(q));
  return true;
}

QLaurent QLaurent::gcd(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    Dense d = to_dense(a.is_zero() ? b : a);
    make_primitive(d);
    std::vector<Term> t;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) t.emplace_back(static_cast<int>(i), d[i]);
    return QLaurent(std::move(t));
  }
  Dense g = primitive_gcd(to_dense(a), to_dense(b));
  std::vector<Term> t;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) t.emplace_back(static_cast<int>(i), g[i]);
  return QLaurent(std::move(t));
}

namespace {

std::string q_factor(int e) {
  if (e == 2) return "q";
  if (e % 2 == 0 && e > 0) return "q^" + std::to_string(e / 2);
  if (e % 2 == 0) return "q^(" + std::to_string(e / 2) + ")";
  return "q^(" + std::to_string(e) + "/2)";
}

}  // namespace

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += q_factor(e);
    }
  }
  return out;
}

QScalar::QScalar(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QScalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = QLaurent(1);
    return;
  }
  if (den_.is_one()) return;
  if (!den_.is_monomial()) {
    QLaurent g = QLaurent::gcd(num_, den_);
    if (!g.is_monomial()) {
      QLaurent qn, qd;
      QLaurent::try_divide(num_, g, qn);
      QLaurent::try_divide(den_, g, qd);
      num_ = std::move(qn);
      den_ = std::move(qd);
    }
  }
  const int s = den_.low();
  if (s != 0) {
    num_ = num_.shifted(-s);
    den_ = den_.shifted(-s);
  }
  mpz_class g = gcd(num_.content(), den_.content());
  if (den_.leading_coeff() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divided_by_integer(g);
    den_ = den_.divided_by_integer(g);
  }
}

int QScalar::signed_q_power(int& twice_exp) const {
  if (!den_.is_one() || !num_.is_monomial()) return 0;
  const mpz_class& c = num_.terms()[0].second;
  if (c != 1 && c != -1) return 0;
  twice_exp = num_.low();
  return c > 0 ? 1 : -1;
}

QScalar QScalar::bar() const { return QScalar(num_.bar(), den_.bar()); }

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QScalar(den_, num_);
}

QScalar QScalar::shifted(int twice_exp) const {
  QScalar r = *this;
  r.num_ = r.num_.shifted(twice_exp);
  return r;
}

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = QLaurent(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QScalar();
  num_ = num_ * o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  QLaurent n = num_ * o.den_;
  QLaurent d = den_ * o.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::string QScalar::str() const {
  if (den_.is_one()) return num_.str();
  auto wrap = [](const QLaurent& p) {
    return p.terms().size() == 1 && p.terms()[0].second > 0 ? p.str() : "(" + p.str() + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

QScalar q_minus_qinv(int k) {
  return QScalar(QLaurent::q_power(2 * k) - QLaurent::q_power(-2 * k));
}

// Grammar: expr := ['-'] term (('+'|'-') term)*
//          term := factor (('*'|'/') factor)*
//          factor := integer | 'q' ['^' exponent] | '(' expr ')'
//          exponent := ['-'] integer | '(' ['-'] integer ['/' integer] ')'
namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QScalar parse() {
    QScalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  int exponent() {
    if (eat('(')) {
      bool neg = eat('-');
      mpz_class v = integer();
      long den = 1;
      if (eat('/')) den = integer().get_si();
      if (!eat(')')) fail("expected ')'");
      if (den != 1 && den != 2) fail("exponent denominator must be 1 or 2");
      long twice = v.get_si() * (den == 1 ? 2 : 1);
      return static_cast<int>(neg ? -twice : twice);
    }
    bool neg = eat('-');
    long v = integer().get_si();
    return static_cast<int>(neg ? -2 * v : 2 * v);
  }
  QScalar factor() {
    skip();
    if (eat('(')) {
      QScalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat('q')) {
      int e = 2;
      if (eat('^')) e = exponent();
      return QScalar::q_power(e);
    }
    return QScalar(QLaurent::monomial(0, integer()));
  }
  QScalar term() {
    QScalar v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        v /= factor();
      } else {
        skip();
        // juxtaposition such as "3q" multiplies
        if (pos_ < s_.size() && (s_[pos_] == 'q' || s_[pos_] == '(')) v *= factor();
        else return v;
      }
    }
  }
  QScalar expr() {
    QScalar v = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QScalar QScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace iqc
