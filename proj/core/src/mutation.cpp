#include <iqc/mutation.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

namespace iqc {

namespace {

// Laurent polynomial in the mutated variable x with scalar coefficients.
using XPoly = std::map<int, QScalar>;
// doubled q exponent s -> multiplicity of the factor (1 + q^{s/2} x)
using Binomials = std::map<int, int>;

// c * X^rest * x^xpow * prod (1 + q^{s/2} x)^{m_s}, with rest[k] = 0
struct Partial {
  Exponent rest;
  QScalar c;
  int xpow = 0;
  Binomials binom;
};

// sum over rest of X^rest * g_rest(x), all times denominator^{-1} on the right
struct Cleared {
  std::map<Exponent, XPoly> groups;
  Binomials denominator;
};

void add_to(XPoly& p, int e, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

XPoly times_binomial(const XPoly& p, int s) {
  XPoly out = p;
  for (const auto& [e, c] : p) add_to(out, e + 1, c.shifted(s));
  return out;
}

XPoly multiply(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [e, c] : a)
    for (const auto& [f, d] : b) add_to(out, e + f, c * d);
  return out;
}

bool divide_binomial(XPoly& p, int s) {
  if (p.empty()) return true;
  const int top = p.rbegin()->first;
  XPoly quotient;
  XPoly rest = p;
  while (!rest.empty()) {
    auto it = rest.begin();
    const int e = it->first;
    if (e >= top) return false;
    const QScalar c = it->second;
    rest.erase(it);
    quotient.emplace(e, c);
    add_to(rest, e + 1, -c.shifted(s));
  }
  p = std::move(quotient);
  return true;
}

XPoly expand(const Binomials& b) {
  XPoly out{{0, QScalar(1)}};
  for (const auto& [s, m] : b)
    for (int r = 0; r < m; ++r) out = times_binomial(out, s);
  return out;
}

void bump(Binomials& b, int s, int by) {
  if ((b[s] += by) == 0) b.erase(s);
}

// x -> q^{d/2} x applied to the rational function part
void rescale(Partial& p, int d) {
  if (d == 0) return;
  p.c = p.c.shifted(d * p.xpow);
  Binomials moved;
  for (const auto& [s, m] : p.binom) moved.emplace(s + d, m);
  p.binom = std::move(moved);
}

// right multiplication of the monomial part by X_j^{sign}
void times_generator(const Seed& s, Partial& p, int j, int sign) {
  int u = 0;
  for (int i = j + 1; i < s.size(); ++i)
    if (p.rest[i] != 0) u += s.w2(j, i) * p.rest[i];
  // X^rest X_j^sign = q^{u*sign} X^{rest + sign e_j}
  p.c = p.c.shifted(2 * u * sign);
  p.rest[j] += sign;
}

// multiply the rational part by F^{sign}, F = prod_{r=1}^{b}(1+q^{2r-1}x^{-1})^{-1} or prod_{r=1}^{-b}(1+q^{2r-1}x)
void times_factor(Partial& p, int b, int sign) {
  if (b > 0) {
    p.c = p.c.shifted(-2 * b * b * sign);
    p.xpow += b * sign;
    for (int r = 1; r <= b; ++r) bump(p.binom, 2 * (1 - 2 * r), -sign);
  } else {
    for (int r = 1; r <= -b; ++r) bump(p.binom, 2 * (2 * r - 1), sign);
  }
}

Cleared clear_denominators(const TorusElement& f, int k, const Seed& target) {
  const int n = target.size();
  std::vector<Partial> parts;
  parts.reserve(f.size());
  for (const auto& [a, c] : f.terms()) {
    Partial p{Exponent(n, 0), c, 0, {}};
    for (int j = 0; j < n; ++j) {
      const int e = a[j];
      if (e == 0) continue;
      if (j == k) {
        p.xpow -= e;
        continue;
      }
      const int b = target.w2(k, j) / 2;
      const int d = 2 * target.w2(j, k);
      for (int step = 0; step < std::abs(e); ++step) {
        if (e > 0) {
          rescale(p, d);
          times_generator(target, p, j, 1);
          times_factor(p, b, 1);
        } else {
          times_factor(p, b, -1);
          rescale(p, -d);
          times_generator(target, p, j, -1);
        }
      }
    }
    parts.push_back(std::move(p));
  }
  Cleared out;
  for (const auto& p : parts)
    for (const auto& [s, m] : p.binom)
      if (m < 0) out.denominator[s] = std::max(out.denominator[s], -m);
  std::map<Binomials, XPoly> cache;
  for (const auto& p : parts) {
    Binomials full = out.denominator;
    for (const auto& [s, m] : p.binom) bump(full, s, m);
    auto it = cache.find(full);
    if (it == cache.end()) it = cache.emplace(full, expand(full)).first;
    XPoly& g = out.groups[p.rest];
    for (const auto& [e, coeff] : it->second) add_to(g, e + p.xpow, coeff * p.c);
  }
  return out;
}

TorusElement assemble(const std::map<Exponent, XPoly>& groups, int k, const SeedPtr& target) {
  const Seed& s = *target;
  TorusElement out(target);
  for (const auto& [rest, g] : groups) {
    int u = 0;
    for (int i = k + 1; i < s.size(); ++i)
      if (rest[i] != 0) u += s.w2(k, i) * rest[i];
    Exponent a = rest;
    for (const auto& [e, c] : g) {
      a[k] = e;
      out.add_term(a, c.shifted(2 * u * e));
    }
  }
  return out;
}

void check_source(const Seed& s, int k) {
  if (k < 0 || k >= s.size()) throw BadIndex("vertex out of range");
  if (s.frozen(k)) throw FrozenVertex("cannot mutate at frozen vertex " + s.name(k));
}

}  // namespace

TorusElement mutate_element(const TorusElement& f, int k) {
  check_source(f.seed(), k);
  return mutate_element(f, k, share(f.seed().mutate(k)));
}

TorusElement mutate_element(const TorusElement& f, int k, const SeedPtr& target) {
  check_source(f.seed(), k);
  Cleared cl = clear_denominators(f, k, *target);
  for (auto& [rest, g] : cl.groups)
    for (const auto& [s, m] : cl.denominator)
      for (int r = 0; r < m; ++r)
        if (!divide_binomial(g, s)) throw NotLaurent("image under mutation at " + f.seed().name(k) + " is not Laurent");
  return assemble(cl.groups, k, target);
}

RightFraction mutate_fraction(const RightFraction& f, int k, const SeedPtr& target) {
  check_source(f.numerator.seed(), k);
  Cleared num = clear_denominators(f.numerator, k, *target);
  Cleared den = clear_denominators(f.denominator, k, *target);
  const XPoly gamma = expand(num.denominator), delta = expand(den.denominator);
  for (auto& [rest, g] : num.groups) g = multiply(g, delta);
  for (auto& [rest, g] : den.groups) g = multiply(g, gamma);
  return {assemble(num.groups, k, target), assemble(den.groups, k, target)};
}

std::vector<LaurentCheck> one_step_laurent_check(const TorusElement& f) {
  std::vector<LaurentCheck> out;
  for (int k : f.seed().unfrozen()) {
    bool ok = true;
    try {
      mutate_element(f, k);
    } catch (const NotLaurent&) {
      ok = false;
    }
    out.push_back({k, ok});
  }
  return out;
}

QuasiClusterMap& QuasiClusterMap::mutation(int k) {
  check_source(*target_, k);
  SeedPtr next = share(target_->mutate(k));
  atoms_.push_back({Kind::Mutation, k, {}, {}, target_, next});
  target_ = std::move(next);
  return *this;
}

QuasiClusterMap& QuasiClusterMap::permutation(std::vector<int> perm) {
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ids(target_->size());
  std::iota(ids.begin(), ids.end(), 0);
  if (sorted != ids) throw BadIndex("not a permutation of the vertices");
  SeedPtr next = share(target_->permuted(perm));
  atoms_.push_back({Kind::Permutation, -1, std::move(perm), {}, target_, next});
  target_ = std::move(next);
  return *this;
}

QuasiClusterMap& QuasiClusterMap::monomial(std::vector<TorusElement> images, const SeedPtr& target) {
  const Seed& s = *target_;
  if (static_cast<int>(images.size()) != s.size()) throw ChartMismatch("one image per generator is required");
  for (const auto& img : images) {
    if (!img.is_monomial()) throw NotMonomial("monomial maps need monomial images");
    if (img.seed_ptr() != target && !(img.seed() == *target)) throw ChartMismatch("image over the wrong chart");
  }
  for (int u = 0; u < s.size(); ++u)
    for (int v = u + 1; v < s.size(); ++v)
      if (!(images[u] * images[v] == images[v] * images[u] * QScalar::q_power(2 * s.w2(v, u))))
        throw ChartMismatch("images of " + s.name(u) + " and " + s.name(v) + " break the commutation relation");
  atoms_.push_back({Kind::Monomial, -1, {}, std::move(images), target_, target});
  target_ = target;
  return *this;
}

QuasiClusterMap& QuasiClusterMap::then(const QuasiClusterMap& next) {
  if (!(*next.source_ == *target_)) throw ChartMismatch("maps do not chain");
  for (const auto& atom : next.atoms_) atoms_.push_back(atom);
  target_ = next.target_;
  return *this;
}

namespace {

TorusElement apply_atom(const QuasiClusterMap::Atom& atom, const TorusElement& f) {
  using Kind = QuasiClusterMap::Kind;
  switch (atom.kind) {
    case Kind::Mutation:
      return mutate_element(f, atom.vertex, atom.target);
    case Kind::Permutation: {
      std::vector<TorusElement> images;
      for (int v = 0; v < f.seed().size(); ++v) images.push_back(TorusElement::generator(atom.target, atom.perm[v]));
      return substitute(f, images, atom.target);
    }
    case Kind::Monomial:
      return substitute(f, atom.images, atom.target);
  }
  return f;
}

std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw ChartMismatch("monomial map is not invertible");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class scale = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= factor * m[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<TorusElement> inverse_images(const QuasiClusterMap::Atom& atom) {
  const int n = atom.source->size();
  if (atom.target->size() != n) throw ChartMismatch("monomial map between charts of different rank");
  // column v of the exponent matrix is the exponent of the image of X_v
  std::vector<std::vector<mpq_class>> e(n, std::vector<mpq_class>(n, 0));
  for (int v = 0; v < n; ++v) {
    const Exponent& a = atom.images[v].terms().begin()->first;
    for (int w = 0; w < n; ++w) e[w][v] = a[w];
  }
  const auto inv = invert(e);
  std::vector<TorusElement> out;
  for (int w = 0; w < n; ++w) {
    Exponent y(n);
    for (int v = 0; v < n; ++v) {
      if (inv[v][w].get_den() != 1) throw ChartMismatch("monomial map is not unimodular");
      y[v] = static_cast<int>(inv[v][w].get_num().get_si());
    }
    TorusElement pre = TorusElement::monomial(atom.source, y);
    const QScalar scale = substitute(pre, atom.images, atom.target).terms().begin()->second;
    out.push_back(pre * scale.inverse());
  }
  return out;
}

}  // namespace

TorusElement QuasiClusterMap::apply(const TorusElement& f) const {
  if (f.seed_ptr() != source_ && !(f.seed() == *source_)) throw ChartMismatch("element is not over the source chart");
  TorusElement cur = f;
  for (std::size_t stage = 0; stage < atoms_.size(); ++stage) {
    try {
      cur = apply_atom(atoms_[stage], cur);
    } catch (const NotLaurent& e) {
      throw NotLaurent(e.what(), static_cast<int>(stage));
    }
  }
  return cur;
}

RightFraction QuasiClusterMap::apply(const RightFraction& f) const {
  if (!(f.numerator.seed() == *source_)) throw ChartMismatch("fraction is not over the source chart");
  RightFraction cur = f;
  for (const auto& atom : atoms_) {
    if (atom.kind == Kind::Mutation) cur = mutate_fraction(cur, atom.vertex, atom.target);
    else cur = {apply_atom(atom, cur.numerator), apply_atom(atom, cur.denominator)};
  }
  return cur;
}

QuasiClusterMap QuasiClusterMap::inverse() const {
  QuasiClusterMap out(target_);
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    switch (it->kind) {
      case Kind::Mutation:
        out.mutation(it->vertex);
        break;
      case Kind::Permutation: {
        std::vector<int> back(it->perm.size());
        for (std::size_t v = 0; v < back.size(); ++v) back[it->perm[v]] = static_cast<int>(v);
        out.permutation(std::move(back));
        break;
      }
      case Kind::Monomial: {
        std::vector<TorusElement> images = inverse_images(*it);
        out.monomial(std::move(images), it->source);
        break;
      }
    }
  }
  return out;
}

TorusElement apply_quasi_cluster(const QuasiClusterMap& map, const TorusElement& f) { return map.apply(f); }

QuasiClusterMap braid_cl(const SigmaQuiver& sigma, const SeedPtr& seed, int i) {
  const int n = sigma.n;
  if (i < 1 || i > n) throw BadIndex("braid index out of range");
  QuasiClusterMap map(seed);
  if (n >= 2) {
    for (int k = 2; k <= n; ++k) map.mutation(sigma.x(i, k));
    for (int k = n - 1; k >= 2; --k) map.mutation(sigma.x(i, k));
  }
  std::vector<int> swap(seed->size());
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[sigma.x(i, 1)], swap[sigma.x(i, n)]);
  map.permutation(std::move(swap));

  std::vector<std::pair<int, int>> central{{sigma.x(i, 0), 2}};
  for (int k = 1; k <= n; ++k) central.emplace_back(sigma.x(i, k), 1);
  const TorusElement c_inv = monomial_inverse(renormalized(seed, central));
  auto gen = [&](int v) { return TorusElement::generator(seed, v); };
  std::vector<TorusElement> images;
  for (int v = 0; v < seed->size(); ++v) images.push_back(gen(v));
  images[sigma.x(i, 0)] = gen(sigma.x(i, 0)) * c_inv;
  const QScalar half = QScalar::q_power(1);
  if (i > 1) images[sigma.x(i - 1, 0)] = gen(sigma.x(i - 1, 0)) * gen(sigma.x(i, 0)) * half;
  if (i < n) images[sigma.x(i + 1, 0)] = gen(sigma.x(i, 0)) * gen(sigma.x(i + 1, 0)) * gen(sigma.x(i + 1, 1)) * half;
  map.monomial(std::move(images), seed);
  return map;
}

QuasiClusterMap coxeter_map(const SigmaQuiver& sigma, const SeedPtr& seed) {
  const SigmaQuiver extended = build_sigma_prime(sigma.n);
  const std::vector<int> perm = coxeter_permutation(extended);
  std::vector<std::pair<int, int>> all;
  for (int v = 0; v < seed->size(); ++v) all.emplace_back(v, 1);
  const TorusElement m_inv = monomial_inverse(renormalized(seed, all));
  std::vector<TorusElement> images;
  for (int v = 0; v < seed->size(); ++v)
    images.push_back(perm[v] == *extended.x0 ? m_inv : TorusElement::generator(seed, perm[v]));
  QuasiClusterMap map(seed);
  map.monomial(std::move(images), seed);
  return map;
}

}  // namespace iqc
