#pragma once

#include <iqc/iqg.hpp>
#include <iqc/scalars.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace iqc {

// Element of the rank-one Drinfeld double in the basis F^a K^b K'^c E^d.
class RankOne {
 public:
  using Word = std::array<int, 4>;  // (a, b, c, d)
  using Terms = std::map<Word, QScalar>;

  RankOne() = default;
  static RankOne constant(const QScalar& c);
  static RankOne word(const Word& w, const QScalar& c = 1);
  static RankOne E(int power = 1) { return word({0, 0, 0, power}); }
  static RankOne F(int power = 1) { return word({power, 0, 0, 0}); }
  static RankOne K(int power = 1) { return word({0, power, 0, 0}); }
  static RankOne Kp(int power = 1) { return word({0, 0, power, 0}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QScalar coeff(const Word& w) const;
  int e_degree() const;
  // Drops every term of E-degree above the bound.
  RankOne truncated(int max_e_degree) const;

  void add_term(const Word& w, const QScalar& c);
  RankOne& operator+=(const RankOne& o);
  RankOne& operator-=(const RankOne& o);
  RankOne& operator*=(const QScalar& c);
  friend RankOne operator+(RankOne a, const RankOne& b) { return a += b; }
  friend RankOne operator-(RankOne a, const RankOne& b) { return a -= b; }
  friend RankOne operator*(RankOne a, const QScalar& c) { return a *= c; }
  friend RankOne operator*(const QScalar& c, RankOne a) { return a *= c; }
  friend RankOne operator*(const RankOne& a, const RankOne& b);
  friend bool operator==(const RankOne& a, const RankOne& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

// Coefficients of Psi_t(x) = sum_n t^{-n(n-1)/2} / prod_{k<=n} (t^k - t^{-k}) x^n for t = q^base.
struct DilogSeries {
  int base = 1;
  std::vector<QScalar> coeffs;
};
DilogSeries psi_series(int base, int order);
// Psi_t(t^2 x) = (1 + t x) Psi_t(x) at the given order.
bool difference_relation_holds(const DilogSeries& series, int order);

// a_0 = 1, a_{2n} = -q^{-2n+2} / (q^{2n} - q^{-2n}) a_{2n-2}; entry n holds a_{2n}.
std::vector<QScalar> quasi_k_coeffs(int order);

// sum_{n<=order} a_{2n} E^{2n}
RankOne quasi_k(int order);

Report verify_klog(int order);

}  // namespace iqc
