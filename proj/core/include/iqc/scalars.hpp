#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iqc {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Laurent polynomial in q^{1/2} with integer coefficients. Exponents are
// stored doubled, so the key 3 means q^{3/2}.
class QLaurent {
 public:
  using Term = std::pair<int, mpz_class>;

  QLaurent() = default;
  QLaurent(long c);  // NOLINT: integers embed as constants
  static QLaurent monomial(int twice_exp, mpz_class coeff = 1);
  static QLaurent q_power(int twice_exp) { return monomial(twice_exp); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int low() const { return terms_.front().first; }
  int high() const { return terms_.back().first; }
  const mpz_class& leading_coeff() const { return terms_.back().second; }
  const mpz_class& trailing_coeff() const { return terms_.front().second; }
  mpz_class coeff(int twice_exp) const;
  mpz_class content() const;

  QLaurent shifted(int twice_exp) const;
  QLaurent bar() const;
  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const mpz_class& c);
  QLaurent divided_by_integer(const mpz_class& c) const;  // exact

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;
  friend std::strong_ordering operator<=>(const QLaurent& a, const QLaurent& b);

  // Exact quotient a/b in Z[q^{±1/2}], or nullopt-like false when b does not divide a.
  static bool try_divide(const QLaurent& a, const QLaurent& b, QLaurent& quotient);
  static QLaurent gcd(const QLaurent& a, const QLaurent& b);

  std::string str() const;

 private:
  explicit QLaurent(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

// Element of Q(q^{1/2}) as a reduced fraction num/den.
class QScalar {
 public:
  QScalar() = default;
  QScalar(long c) : num_(c), den_(1) {}  // NOLINT
  QScalar(QLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
  QScalar(QLaurent num, QLaurent den);

  static QScalar q_power(int twice_exp) { return QScalar(QLaurent::q_power(twice_exp)); }
  static QScalar parse(std::string_view text);

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }
  // Nonzero iff the scalar is ±q^{k/2}; returns the sign and sets twice_exp.
  int signed_q_power(int& twice_exp) const;

  QScalar bar() const;
  QScalar inverse() const;
  QScalar shifted(int twice_exp) const;
  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend bool operator==(const QScalar& a, const QScalar& b) = default;

  std::string str() const;

 private:
  void normalize();
  QLaurent num_;
  QLaurent den_{1};
};

// q^{k} - q^{-k} for integer k, a frequent denominator.
QScalar q_minus_qinv(int k = 1);

}  // namespace iqc
