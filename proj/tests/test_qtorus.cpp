#include <doctest.h>

#include <iqc/qtorus.hpp>

#include <set>

#include "generators.hpp"

using iqc::Exponent;
using iqc::QScalar;
using iqc::SeedPtr;
using iqc::TorusElement;

namespace {

QScalar q(int twice) { return QScalar::q_power(twice); }

SeedPtr sample_seed() {
  return iqc::share(iqc::Seed::from_arrows({"1", "2", "3", "4"}, {false, false, true, true},
                                           {{1, 0, 4}, {1, 2, 2}, {3, 1, 2}, {2, 3, 1}, {0, 3, 2}}));
}

TorusElement random_element(const SeedPtr& s, int terms, int spread = 2) {
  using iqc::testing::uniform;
  TorusElement f(s);
  for (int t = 0; t < terms; ++t) {
    Exponent a(s->size());
    for (auto& e : a) e = uniform(-spread, spread);
    f.add_term(a, iqc::testing::random_scalar());
  }
  return f;
}

// P_{i,k} = :X_{i,0} X_{i,1} ... X_{i,k}:
TorusElement row_prefix(const iqc::SigmaQuiver& sg, const SeedPtr& s, int i, int k) {
  std::vector<std::pair<int, int>> factors;
  for (int t = 0; t <= k; ++t) factors.emplace_back(sg.x(i, t), 1);
  return iqc::renormalized(s, factors);
}

}  // namespace

TEST_CASE("generators satisfy the defining commutation relation") {
  auto s = sample_seed();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto xi = TorusElement::generator(s, i), xj = TorusElement::generator(s, j);
      CHECK(xi * xj == xj * xi * q(2 * s->w2(j, i)));
    }
  auto sigma1 = iqc::build_sigma(1);
  auto s1 = iqc::share(sigma1.seed);
  auto x1 = TorusElement::generator(s1, 0), x2 = TorusElement::generator(s1, 1);
  CHECK(x1 * x2 == x2 * x1);
}

TEST_CASE("products are associative and distribute") {
  auto s = sample_seed();
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_element(s, 3), g = random_element(s, 3), h = random_element(s, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g).star() == g.star() * f.star());
    CHECK((f + g).star() == f.star() + g.star());
    CHECK(f.star().star() == f);
  }
}

TEST_CASE("star fixes generators and bars coefficients") {
  auto s = sample_seed();
  for (int v = 0; v < 4; ++v) CHECK(TorusElement::generator(s, v).star() == TorusElement::generator(s, v));
  auto x1 = TorusElement::generator(s, 0), x2 = TorusElement::generator(s, 1);
  auto m = x1 * x2 * q(1);
  CHECK(m.star() == x2 * x1 * q(-1));
}

TEST_CASE("monomial inverses and negative powers") {
  auto s = sample_seed();
  for (int trial = 0; trial < 20; ++trial) {
    Exponent a(4);
    for (auto& e : a) e = iqc::testing::uniform(-3, 3);
    auto m = TorusElement::monomial(s, a, q(iqc::testing::uniform(-4, 4)) * QScalar(iqc::testing::uniform(1, 5)));
    auto one = TorusElement::constant(s, 1);
    CHECK(m * iqc::monomial_inverse(m) == one);
    CHECK(iqc::monomial_inverse(m) * m == one);
    CHECK(iqc::power(m, 3) * iqc::power(m, -2) == m);
  }
  CHECK_THROWS_AS(iqc::monomial_inverse(random_element(s, 2) + TorusElement::constant(s, 7)), iqc::NotMonomial);
}

TEST_CASE("prefix monomials of neighbouring rows q-commute") {
  for (int n = 2; n <= 5; ++n) {
    auto sg = iqc::build_sigma(n);
    auto s = iqc::share(sg.seed);
    for (int i = 1; i < n; ++i) {
      for (int t = 0; t <= n; ++t) {
        for (int l = 0; l <= t; ++l) {
          if ((t == n - 1 && l == 1) || (t == n && l == 0)) continue;
          auto a = row_prefix(sg, s, i, t), b = row_prefix(sg, s, i + 1, l);
          INFO("n=" << n << " i=" << i << " t=" << t << " l=" << l);
          CHECK(a * b == b * a * q(-2));
        }
      }
      auto a = row_prefix(sg, s, i, n - 1), b = row_prefix(sg, s, i + 1, 1);
      CHECK(a * b == b * a * q(-6));
    }
  }
}

TEST_CASE("renormalized row products") {
  for (int n = 2; n <= 5; ++n) {
    auto sg = iqc::build_sigma(n);
    auto s = iqc::share(sg.seed);
    for (int i = 1; i <= n; ++i) {
      TorusElement ordered = TorusElement::constant(s, 1);
      for (int k = 0; k <= n; ++k) {
        ordered = ordered * TorusElement::generator(s, sg.x(i, k));
        CHECK(iqc::renormalize(ordered) == ordered * q(2 * k));
      }
      TorusElement central = TorusElement::generator(s, sg.x(i, 0)) * ordered;
      CHECK(iqc::renormalize(central) == central * q(2 * n));
    }
    for (int v = 0; v < s->size(); ++v)
      CHECK(iqc::renormalize(TorusElement::generator(s, v)) == TorusElement::generator(s, v));
  }
}

TEST_CASE("renormalized monomials are star-fixed and idempotent") {
  using iqc::testing::uniform;
  std::vector<iqc::Seed> seeds;
  for (int n = 1; n <= 5; ++n) {
    seeds.push_back(iqc::build_fg_triangle(n).seed);
    seeds.push_back(iqc::build_sigma(n).seed);
    seeds.push_back(iqc::build_sigma_prime(n).seed);
    seeds.push_back(iqc::build_dn(n).seed);
    seeds.push_back(iqc::build_zn(n).seed);
  }
  for (const auto& raw : seeds) {
    auto s = iqc::share(raw);
    for (int trial = 0; trial < 10; ++trial) {
      Exponent a(s->size());
      for (auto& e : a) e = uniform(-2, 2);
      auto m = TorusElement::monomial(s, a, q(uniform(-5, 5)) * QScalar(uniform(0, 1) ? 1 : -1));
      auto r = iqc::renormalize(m);
      CHECK(r.star() == r);
      CHECK(iqc::renormalize(r) == r);
    }
  }
}

TEST_CASE("half-integer frozen weights give half-integer renormalization") {
  auto s = iqc::share(iqc::Seed::from_arrows({"a", "b"}, {true, true}, {{0, 1, 1}}));
  auto m = TorusElement::monomial(s, {1, 1});
  CHECK(iqc::renormalization_shift(*s, {1, 1}) == 1);
  CHECK(iqc::renormalize(m) == m * q(1));
  CHECK(iqc::renormalize(m).star() == iqc::renormalize(m));
}

TEST_CASE("quantum commutator of q-commuting monomials") {
  auto s = iqc::share(iqc::Seed::from_arrows({"f", "h", "g", "k"}, {true, true, true, true},
                                             {{0, 1, 1}, {2, 3, 3}}));
  // f h = q^{2 eps(h,f)} h f
  auto f = TorusElement::generator(s, 1), h = TorusElement::generator(s, 0);
  REQUIRE(f * h == h * f * q(2));
  CHECK(iqc::qcommutator(f, h) == f * h * q(-1));
  CHECK(iqc::qcommutator(h, f).is_zero());
  auto g = TorusElement::generator(s, 3), k = TorusElement::generator(s, 2);
  REQUIRE(g * k == k * g * q(6));
  CHECK(iqc::qcommutator(g, k) == g * k * (q(2) + q(-2)) * q(-3));
  CHECK_THROWS_AS(iqc::qcommutator(f, g), iqc::NotDivisible);
}

TEST_CASE("leading terms") {
  auto s = sample_seed();
  auto m = TorusElement::monomial(s, {1, -1, 0, 2}, q(3));
  CHECK(iqc::leading_term(m).first == Exponent{1, -1, 0, 2});
  auto f = m * (TorusElement::constant(s, 1) + TorusElement::generator(s, 0) * q(2) + TorusElement::generator(s, 2));
  auto [a, c] = iqc::leading_term(f);
  CHECK(a == Exponent{1, -1, 0, 2});
  CHECK(c == q(3));
  auto bad = TorusElement::generator(s, 0) + TorusElement::generator(s, 1);
  CHECK_THROWS_AS(iqc::leading_term(bad), iqc::NoUniformLeadingTerm);
}

TEST_CASE("gluing embeds into the tensor product") {
  auto t1 = iqc::build_fg_triangle(2), t2 = iqc::build_fg_triangle(2);
  std::vector<std::pair<int, int>> glue;
  for (int k = 1; k <= 2; ++k) glue.emplace_back(t1.bc(k), t2.ab(k));
  auto am = iqc::amalgamate(t1.seed, t2.seed, glue);
  auto glued = iqc::share(am.seed);
  auto target = iqc::tensor_seed(t1.seed, t2.seed);
  const int offset = t1.seed.size();

  for (int v = 0; v < glued->size(); ++v) {
    auto img = iqc::tensor_embed(TorusElement::generator(glued, v), am, target);
    Exponent want(target->size(), 0);
    if (am.parts[v].first >= 0) want[am.parts[v].first] = 1;
    if (am.parts[v].second >= 0) want[offset + am.parts[v].second] = 1;
    CHECK(img == TorusElement::monomial(target, want));
  }
  std::set<Exponent> sources, images;
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_element(glued, 3), g = random_element(glued, 3);
    CHECK(iqc::tensor_embed(f * g, am, target) ==
          iqc::tensor_embed(f, am, target) * iqc::tensor_embed(g, am, target));
    for (const auto& [a, c] : f.terms()) {
      sources.insert(a);
      images.insert(iqc::tensor_embed(TorusElement::monomial(glued, a), am, target).terms().begin()->first);
    }
  }
  CHECK(images.size() == sources.size());
}

TEST_CASE("tensor factors commute") {
  auto a = iqc::share(iqc::build_sigma(2).seed);
  auto b = iqc::share(iqc::build_dn(1).seed);
  auto t = iqc::tensor_seed(*a, *b);
  auto f = random_element(a, 3), g = random_element(b, 3);
  auto one_a = TorusElement::constant(a, 1), one_b = TorusElement::constant(b, 1);
  CHECK(iqc::tensor(f, one_b, t) * iqc::tensor(one_a, g, t) == iqc::tensor(f, g, t));
  CHECK(iqc::tensor(one_a, g, t) * iqc::tensor(f, one_b, t) == iqc::tensor(f, g, t));
}

TEST_CASE("rendering") {
  auto s = sample_seed();
  auto x1 = TorusElement::generator(s, 0), x2 = TorusElement::generator(s, 1);
  CHECK((x1 * q(2) - x2 + TorusElement::constant(s, 3)).str() == "q*X_1 - X_2 + 3");
  CHECK(TorusElement(s).str() == "0");
  CHECK((x1 * x1 * (q(1) + q(-1))).str() == "(q^(1/2) + q^(-1/2))*X_1^2");
  CHECK(iqc::monomial_inverse(x2).str() == "X_2^(-1)");
  CHECK_THROWS_AS(x1 + TorusElement::generator(iqc::share(iqc::build_sigma(1).seed), 0), iqc::SeedMismatch);
}
