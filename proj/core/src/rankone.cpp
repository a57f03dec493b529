#include <iqc/rankone.hpp>

#include <algorithm>
#include <sstream>

#include "checks.hpp"

namespace iqc {

namespace {

using detail::holds;

QScalar qp(int twice) { return QScalar::q_power(twice); }

// q^k - q^{-k}
QScalar quantum_difference(int k) { return qp(2 * k) - qp(-2 * k); }

// E * (F^a K^b K'^c E^d) in normal form. Uses E F^a = F^a E + F^{a-1} (alpha K' - beta K).
RankOne left_e(const RankOne& y) {
  RankOne out;
  for (const auto& [w, c] : y.terms()) {
    const auto [a, b, cp, d] = w;
    out.add_term({a, b, cp, d + 1}, c * qp(4 * (cp - b)));
    if (a == 0) continue;
    QScalar alpha, beta;
    for (int s = 0; s < a; ++s) {
      alpha += qp(4 * s);
      beta += qp(-4 * s);
    }
    alpha *= q_minus_qinv();
    beta *= q_minus_qinv();
    out.add_term({a - 1, b, cp + 1, d}, c * alpha);
    out.add_term({a - 1, b + 1, cp, d}, -(c * beta));
  }
  return out;
}

std::string power_text(const std::string& letter, int e) {
  if (e == 0) return {};
  if (e == 1) return letter;
  return letter + "^" + (e < 0 ? "{" + std::to_string(e) + "}" : std::to_string(e));
}

}  // namespace

RankOne RankOne::constant(const QScalar& c) { return word({0, 0, 0, 0}, c); }

RankOne RankOne::word(const Word& w, const QScalar& c) {
  if (w[0] < 0 || w[3] < 0) throw std::invalid_argument("E and F exponents must be nonnegative");
  RankOne out;
  out.add_term(w, c);
  return out;
}

QScalar RankOne::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar() : it->second;
}

int RankOne::e_degree() const {
  int top = 0;
  for (const auto& [w, c] : terms_) top = std::max(top, w[3]);
  return top;
}

RankOne RankOne::truncated(int max_e_degree) const {
  RankOne out;
  for (const auto& [w, c] : terms_)
    if (w[3] <= max_e_degree) out.terms_.emplace(w, c);
  return out;
}

void RankOne::add_term(const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RankOne& RankOne::operator+=(const RankOne& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

RankOne& RankOne::operator-=(const RankOne& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

RankOne& RankOne::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, d] : terms_) d *= c;
  return *this;
}

RankOne operator*(const RankOne& x, const RankOne& y) {
  // E^d y by repeated left multiplication, memoized per d
  std::map<int, RankOne> e_times_y{{0, y}};
  auto e_power = [&](int d) -> const RankOne& {
    int have = e_times_y.rbegin()->first;
    while (have < d) {
      RankOne next = left_e(e_times_y.at(have));
      e_times_y.emplace(++have, std::move(next));
    }
    return e_times_y.at(d);
  };
  RankOne out;
  for (const auto& [w, c] : x.terms()) {
    const auto [a, b, cp, d] = w;
    for (const auto& [v, e] : e_power(d).terms()) {
      // K^b K'^c F^i = q^{2(c-b)i} F^i K^b K'^c
      out.add_term({a + v[0], b + v[1], cp + v[2], v[3]}, c * e * qp(4 * (cp - b) * v[0]));
    }
  }
  return out;
}

std::string RankOne::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const std::string body =
        power_text("F", w[0]) + power_text("K", w[1]) + power_text("K'", w[2]) + power_text("E", w[3]);
    if (body.empty()) out << c.str();
    else if (c == QScalar(1)) out << body;
    else if (c == QScalar(-1)) out << "-" << body;
    else out << "(" << c.str() << ")" << body;
  }
  return out.str();
}

DilogSeries psi_series(int base, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  DilogSeries s{base, {QScalar(1)}};
  for (int n = 1; n <= order; ++n)
    s.coeffs.push_back(s.coeffs.back() * qp(2 * base * (1 - n)) / quantum_difference(base * n));
  return s;
}

bool difference_relation_holds(const DilogSeries& s, int order) {
  if (order < 0 || order >= static_cast<int>(s.coeffs.size())) return false;
  const QScalar lhs = s.coeffs[order] * qp(4 * s.base * order);
  QScalar rhs = s.coeffs[order];
  if (order > 0) rhs += qp(2 * s.base) * s.coeffs[order - 1];
  return lhs == rhs;
}

std::vector<QScalar> quasi_k_coeffs(int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<QScalar> a{QScalar(1)};
  for (int n = 1; n <= order; ++n) a.push_back(-(qp(-4 * n + 4) / quantum_difference(2 * n)) * a.back());
  return a;
}

RankOne quasi_k(int order) {
  RankOne out;
  const auto a = quasi_k_coeffs(order);
  for (int n = 0; n <= order; ++n) out.add_term({0, 0, 0, 2 * n}, a[n]);
  return out;
}

Report verify_klog(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  Report report{"dilog", order, {}};
  const auto a = quasi_k_coeffs(order);
  const auto psi = psi_series(2, order);
  for (int n = 0; n <= order; ++n) {
    const QScalar want = n % 2 == 0 ? psi.coeffs[n] : -psi.coeffs[n];
    report.results.push_back(holds("a_" + std::to_string(2 * n), a[n] == want,
                                   "recursion " + a[n].str() + ", series " + want.str()));
  }
  for (int n = 0; n <= order; ++n)
    report.results.push_back(holds("difference relation x^" + std::to_string(n), difference_relation_holds(psi, n),
                                   "coefficient " + psi.coeffs[n].str()));
  const RankOne upsilon = quasi_k(order);
  const RankOne b = RankOne::F() - RankOne::E() * RankOne::Kp() * qp(-2);
  const RankOne twisted = RankOne::F() - RankOne::E() * RankOne::K() * qp(2);
  const RankOne lhs = (b * upsilon).truncated(2 * order);
  const RankOne rhs = (upsilon * twisted).truncated(2 * order);
  for (int degree = 0; degree <= 2 * order; ++degree) {
    RankOne diff;
    for (const auto& [w, c] : (lhs - rhs).terms())
      if (w[3] == degree) diff.add_term(w, c);
    report.results.push_back(
        holds("intertwiner E-degree " + std::to_string(degree), diff.is_zero(), "difference " + diff.str()));
  }
  return report;
}

}  // namespace iqc
