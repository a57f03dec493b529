#include <iqc/qtorus.hpp>

#include <limits>
#include <unordered_map>

namespace iqc {

namespace {

// u_j = sum_{i>j} w2(j,i) a_i, so that the shift of X^a X^b is 2 * sum_j u_j b_j.
std::vector<int> left_profile(const Seed& s, const Exponent& a) {
  const int n = s.size();
  std::vector<int> u(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < n; ++i)
      if (a[i] != 0) u[j] += s.w2(j, i) * a[i];
  return u;
}

int pair_shift(const std::vector<int>& profile, const Exponent& b) {
  int total = 0;
  for (std::size_t j = 0; j < b.size(); ++j) total += profile[j] * b[j];
  return 2 * total;
}

std::string render_monomial(const Seed& s, const Exponent& a) {
  std::string out;
  for (int v = 0; v < s.size(); ++v) {
    if (a[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += "X_" + s.name(v);
    if (a[v] < 0) out += "^(" + std::to_string(a[v]) + ")";
    else if (a[v] != 1) out += "^" + std::to_string(a[v]);
  }
  return out;
}

}  // namespace

int product_shift(const Seed& s, const Exponent& a, const Exponent& b) {
  return pair_shift(left_profile(s, a), b);
}

int reversal_shift(const Seed& s, const Exponent& a) {
  int total = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (a[i] == 0) continue;
    for (int j = i + 1; j < s.size(); ++j) total += s.w2(i, j) * a[i] * a[j];
  }
  return total;
}

TorusElement TorusElement::constant(SeedPtr seed, const QScalar& c) {
  const int n = seed->size();
  return monomial(std::move(seed), Exponent(n, 0), c);
}

TorusElement TorusElement::monomial(SeedPtr seed, Exponent a, const QScalar& c) {
  if (static_cast<int>(a.size()) != seed->size()) throw SeedMismatch();
  TorusElement out(std::move(seed));
  out.add_term(a, c);
  return out;
}

TorusElement TorusElement::generator(SeedPtr seed, int v, int power) {
  Exponent a(seed->size(), 0);
  a.at(v) = power;
  return monomial(std::move(seed), std::move(a));
}

bool TorusElement::is_integral() const {
  for (const auto& [a, c] : terms_)
    if (!c.is_integral()) return false;
  return true;
}

QScalar TorusElement::coeff(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? QScalar() : it->second;
}

void TorusElement::add_term(const Exponent& a, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void require_same_seed(const TorusElement& a, const TorusElement& b) {
  if (a.seed_ptr() != b.seed_ptr() && !(a.seed() == b.seed())) throw SeedMismatch();
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  require_same_seed(*this, o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  require_same_seed(*this, o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

TorusElement& TorusElement::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement out = *this;
  for (auto& [a, v] : out.terms_) v = -v;
  return out;
}

TorusElement operator*(const TorusElement& f, const TorusElement& g) {
  require_same_seed(f, g);
  const Seed& s = f.seed();
  TorusElement out(f.seed_ptr());
  Exponent sum(s.size());
  for (const auto& [a, c] : f.terms_) {
    const std::vector<int> profile = left_profile(s, a);
    for (const auto& [b, d] : g.terms_) {
      for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = a[v] + b[v];
      out.add_term(sum, (c * d).shifted(pair_shift(profile, b)));
    }
  }
  return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
  if (a.seed_ptr() != b.seed_ptr() && !(a.seed() == b.seed())) return false;
  return a.terms_ == b.terms_;
}

TorusElement TorusElement::star() const {
  TorusElement out(seed_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c.bar().shifted(2 * reversal_shift(*seed_, a)));
  return out;
}

TorusElement TorusElement::rehomed(SeedPtr seed) const {
  if (seed->size() != seed_->size()) throw SeedMismatch();
  TorusElement out(std::move(seed));
  out.terms_ = terms_;
  return out;
}

std::string TorusElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest exponent first reads more naturally for polynomials in few variables
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    const std::string mono = render_monomial(*seed_, a);
    std::string coef = c.str();
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else {
      const bool single = c.is_integral() && c.num().is_monomial();
      term = (single ? coef : "(" + coef + ")") + "*" + mono;
    }
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

int renormalization_shift(const Seed& s, const Exponent& a) { return reversal_shift(s, a); }

TorusElement renormalize(const TorusElement& m) {
  if (!m.is_monomial()) throw NotMonomial("renormalization needs a single term");
  const auto& [a, c] = *m.terms().begin();
  int twice = 0;
  const int sign = c.signed_q_power(twice);
  if (sign == 0) throw NotMonomial("coefficient is not a signed power of q");
  return TorusElement::monomial(m.seed_ptr(), a, QScalar::q_power(renormalization_shift(m.seed(), a)) * QScalar(sign));
}

TorusElement renormalized(const SeedPtr& seed, const std::vector<std::pair<int, int>>& factors) {
  Exponent a(seed->size(), 0);
  for (const auto& [v, e] : factors) a.at(v) += e;
  return TorusElement::monomial(seed, a, QScalar::q_power(renormalization_shift(*seed, a)));
}

TorusElement monomial_inverse(const TorusElement& m) {
  if (!m.is_monomial()) throw NotMonomial("only monomials are invertible");
  const auto& [a, c] = *m.terms().begin();
  Exponent neg(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) neg[v] = -a[v];
  // X^a X^{-a} = q^{shift/2}, so (c X^a)^{-1} = c^{-1} q^{-shift/2} X^{-a}
  return TorusElement::monomial(m.seed_ptr(), neg, c.inverse().shifted(-product_shift(m.seed(), a, neg)));
}

namespace {

// Long division along the lexicographic order; every quotient exponent lies in the box spanned by the
// componentwise bounds of f and d, so the loop terminates.
std::optional<TorusElement> divide(const TorusElement& f, const TorusElement& d, bool left) {
  require_same_seed(f, d);
  if (d.is_zero()) throw DivisionByZero();
  TorusElement quotient(f.seed_ptr());
  if (f.is_zero()) return quotient;
  const std::size_t rank = f.seed().size();
  Exponent lo(rank, std::numeric_limits<int>::max()), hi(rank, std::numeric_limits<int>::min());
  Exponent d_lo = lo, d_hi = hi;
  for (const auto& [a, c] : f.terms())
    for (std::size_t v = 0; v < rank; ++v) lo[v] = std::min(lo[v], a[v]), hi[v] = std::max(hi[v], a[v]);
  for (const auto& [a, c] : d.terms())
    for (std::size_t v = 0; v < rank; ++v) d_lo[v] = std::min(d_lo[v], a[v]), d_hi[v] = std::max(d_hi[v], a[v]);
  for (std::size_t v = 0; v < rank; ++v) lo[v] -= d_lo[v], hi[v] -= d_hi[v];
  const auto& [lead, lead_coeff] = *d.terms().rbegin();
  TorusElement rest = f;
  while (!rest.is_zero()) {
    const auto& [a, c] = *rest.terms().rbegin();
    Exponent e(rank);
    for (std::size_t v = 0; v < rank; ++v) {
      e[v] = a[v] - lead[v];
      if (e[v] < lo[v] || e[v] > hi[v]) return std::nullopt;
    }
    const int shift = left ? product_shift(f.seed(), lead, e) : product_shift(f.seed(), e, lead);
    const TorusElement term = TorusElement::monomial(f.seed_ptr(), e, (c / lead_coeff).shifted(-shift));
    quotient += term;
    rest -= left ? d * term : term * d;
  }
  return quotient;
}

}  // namespace

std::optional<TorusElement> divide_left(const TorusElement& f, const TorusElement& d) { return divide(f, d, true); }
std::optional<TorusElement> divide_right(const TorusElement& f, const TorusElement& d) { return divide(f, d, false); }

TorusElement power(const TorusElement& f, int e) {
  if (e < 0) return power(monomial_inverse(f), -e);
  TorusElement result = TorusElement::constant(f.seed_ptr(), 1);
  TorusElement base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TorusElement substitute(const TorusElement& f, const std::vector<TorusElement>& images, const SeedPtr& target) {
  if (static_cast<int>(images.size()) != f.seed().size()) throw SeedMismatch();
  struct Key {
    int v, e;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return std::hash<long long>()((long long)k.v << 32 ^ (unsigned)k.e); }
  };
  std::unordered_map<Key, TorusElement, KeyHash> cache;
  auto pow_of = [&](int v, int e) -> const TorusElement& {
    auto it = cache.find({v, e});
    if (it != cache.end()) return it->second;
    const TorusElement& img = images[v];
    if (img.seed_ptr() != target && !(img.seed() == *target)) throw SeedMismatch();
    return cache.emplace(Key{v, e}, power(img, e)).first->second;
  };
  TorusElement out(target);
  for (const auto& [a, c] : f.terms()) {
    TorusElement term = TorusElement::constant(target, c);
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a[v] != 0) term = term * pow_of(static_cast<int>(v), a[v]);
    out += term;
  }
  return out;
}

TorusElement qcommutator(const TorusElement& f, const TorusElement& h) {
  TorusElement numerator = f * h * QScalar::q_power(1) - h * f * QScalar::q_power(-1);
  const QScalar denominator = q_minus_qinv();
  TorusElement out(f.seed_ptr());
  for (const auto& [a, c] : numerator.terms()) {
    QScalar quotient = c / denominator;
    if (c.is_integral() && !quotient.is_integral())
      throw NotDivisible("coefficient " + c.str() + " is not divisible by q - q^(-1)");
    out.add_term(a, quotient);
  }
  return out;
}

std::pair<Exponent, QScalar> leading_term(const TorusElement& f) {
  if (f.is_zero()) throw NoUniformLeadingTerm("zero has no leading term");
  const auto& terms = f.terms();
  Exponent low = terms.begin()->first;
  for (const auto& [a, c] : terms)
    for (std::size_t v = 0; v < a.size(); ++v) low[v] = std::min(low[v], a[v]);
  auto it = terms.find(low);
  if (it == terms.end()) throw NoUniformLeadingTerm("no term is dominated by all others");
  return *it;
}

SeedPtr tensor_seed(const Seed& first, const Seed& second) {
  Amalgam u = amalgamate(first, second, {});
  std::vector<std::string> names = u.seed.names();
  for (std::size_t v = first.size(); v < names.size(); ++v) names[v] += "'";
  return share(u.seed.with_names(std::move(names)));
}

TorusElement tensor(const TorusElement& f, const TorusElement& g, const SeedPtr& target) {
  const int offset = f.seed().size();
  if (offset + g.seed().size() != target->size()) throw SeedMismatch();
  TorusElement out(target);
  Exponent a(target->size());
  for (const auto& [x, c] : f.terms())
    for (const auto& [y, d] : g.terms()) {
      std::copy(x.begin(), x.end(), a.begin());
      std::copy(y.begin(), y.end(), a.begin() + offset);
      out.add_term(a, c * d);
    }
  return out;
}

TorusElement tensor_embed(const TorusElement& f, const Amalgam& glued, const SeedPtr& target) {
  const int offset = static_cast<int>(glued.from_first.size());
  if (static_cast<int>(glued.parts.size()) != f.seed().size() ||
      offset + static_cast<int>(glued.from_second.size()) != target->size())
    throw SeedMismatch();
  std::vector<TorusElement> images;
  for (const auto& [first, second] : glued.parts) {
    Exponent a(target->size(), 0);
    if (first >= 0) a[first] = 1;
    if (second >= 0) a[offset + second] = 1;
    images.push_back(TorusElement::monomial(target, a));
  }
  return substitute(f, images, target);
}

}  // namespace iqc
