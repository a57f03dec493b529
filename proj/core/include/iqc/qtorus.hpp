#pragma once

#include <iqc/quiver.hpp>
#include <iqc/scalars.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iqc {

struct SeedMismatch : std::invalid_argument {
  SeedMismatch() : std::invalid_argument("elements live over different seeds") {}
};
struct NotMonomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};
struct NoUniformLeadingTerm : std::domain_error {
  using std::domain_error::domain_error;
};

using SeedPtr = std::shared_ptr<const Seed>;
using Exponent = std::vector<int>;

inline SeedPtr share(Seed s) { return std::make_shared<const Seed>(std::move(s)); }

// Doubled q-exponent picked up when X^a X^b is rewritten as X^{a+b}.
int product_shift(const Seed& s, const Exponent& a, const Exponent& b);
// sum_{i<j} w2(i,j) a_i a_j: the reversed product X_N^{a_N}...X_1^{a_1} equals q^{this} X^a.
int reversal_shift(const Seed& s, const Exponent& a);

// Element of the quantum torus of a seed. The term with exponent a stands for the ordered
// product X_1^{a_1} ... X_N^{a_N} in vertex order.
class TorusElement {
 public:
  using Terms = std::map<Exponent, QScalar>;

  explicit TorusElement(SeedPtr seed) : seed_(std::move(seed)) {}
  static TorusElement constant(SeedPtr seed, const QScalar& c);
  static TorusElement monomial(SeedPtr seed, Exponent a, const QScalar& c = 1);
  static TorusElement generator(SeedPtr seed, int v, int power = 1);

  const Seed& seed() const { return *seed_; }
  const SeedPtr& seed_ptr() const { return seed_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  bool is_integral() const;
  QScalar coeff(const Exponent& a) const;

  void add_term(const Exponent& a, const QScalar& c);
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  TorusElement& operator*=(const QScalar& c);
  TorusElement operator-() const;
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  friend TorusElement operator*(TorusElement a, const QScalar& c) { return a *= c; }
  friend TorusElement operator*(const QScalar& c, TorusElement a) { return a *= c; }
  friend bool operator==(const TorusElement& a, const TorusElement& b);

  TorusElement star() const;
  // Same exponent table read over another seed with the same vertex count.
  TorusElement rehomed(SeedPtr seed) const;

  std::string str() const;

 private:
  SeedPtr seed_;
  Terms terms_;
};

void require_same_seed(const TorusElement& a, const TorusElement& b);

// The star-fixed q^{Z/2}-multiple of a monomial with coefficient +-q^{k/2}.
TorusElement renormalize(const TorusElement& m);
// Doubled exponent s with :X^a: = q^{s/2} X^a; odd s means the correction is a half-integer power.
int renormalization_shift(const Seed& s, const Exponent& a);
// :X_{v1}^{e1} X_{v2}^{e2} ...: for the listed factors, in any order.
TorusElement renormalized(const SeedPtr& seed, const std::vector<std::pair<int, int>>& factors);

TorusElement monomial_inverse(const TorusElement& m);
TorusElement power(const TorusElement& f, int e);

// Exact quotients: d^{-1} f and f d^{-1} when they are Laurent polynomials, nullopt otherwise.
std::optional<TorusElement> divide_left(const TorusElement& f, const TorusElement& d);
std::optional<TorusElement> divide_right(const TorusElement& f, const TorusElement& d);

// Algebra map determined by images of the generators; negative powers need monomial images.
TorusElement substitute(const TorusElement& f, const std::vector<TorusElement>& images, const SeedPtr& target);

// (q^{1/2} f h - q^{-1/2} h f) / (q - q^{-1})
TorusElement qcommutator(const TorusElement& f, const TorusElement& h);

// The term dominated componentwise by every other term of the support.
std::pair<Exponent, QScalar> leading_term(const TorusElement& f);

// The tensor product of two tori is the torus of their disjoint union: first block, then second.
SeedPtr tensor_seed(const Seed& first, const Seed& second);
TorusElement tensor(const TorusElement& f, const TorusElement& g, const SeedPtr& target);
// X_v maps to X_v (x) X_{phi(v)}, X_v (x) 1 or 1 (x) X_v according to the gluing record.
TorusElement tensor_embed(const TorusElement& f, const Amalgam& glued, const SeedPtr& target);

}  // namespace iqc
