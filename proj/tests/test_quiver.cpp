#include <doctest.h>

#include <iqc/quiver.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "generators.hpp"

using iqc::Seed;

namespace {

struct Arrow {
  int from, to, w2;
};

// Compares the full weight matrix of s (vertices named by figure numbers) with an arrow list.
void expect_arrows(const Seed& s, const std::vector<Arrow>& arrows) {
  std::map<std::pair<int, int>, int> expected;
  for (const auto& a : arrows) {
    expected[{a.from, a.to}] += a.w2;
    expected[{a.to, a.from}] -= a.w2;
  }
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      const int a = std::stoi(s.name(i));
      const int b = std::stoi(s.name(j));
      auto it = expected.find({a, b});
      const int want = it == expected.end() ? 0 : it->second;
      INFO("pair " << a << " -> " << b);
      CHECK(s.w2(i, j) == want);
    }
  }
}

std::set<int> frozen_names(const Seed& s) {
  std::set<int> out;
  for (int v = 0; v < s.size(); ++v)
    if (s.frozen(v)) out.insert(std::stoi(s.name(v)));
  return out;
}

int named(const Seed& s, int v) { return std::stoi(s.name(v)); }

// independent transcription of the mutation rule on half-integer weights
std::vector<double> reference_mutation(const Seed& s, int k) {
  const int n = s.size();
  std::vector<double> eps(n * n), out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) eps[i * n + j] = s.w2(i, j) / 2.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double e = eps[i * n + j], eik = eps[i * n + k], ekj = eps[k * n + j];
      if (i == k || j == k) out[i * n + j] = -e;
      else if (eik * ekj <= 0) out[i * n + j] = e;
      else out[i * n + j] = e + (eik < 0 ? -eik : eik) * ekj;
    }
  }
  return out;
}

Seed random_seed(int n) {
  using iqc::testing::uniform;
  std::vector<std::string> names;
  std::vector<bool> frozen;
  for (int v = 0; v < n; ++v) {
    names.push_back(std::to_string(v + 1));
    frozen.push_back(v >= n - 2);
  }
  std::vector<std::tuple<int, int, int>> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int w = uniform(-3, 3);
      if (!(frozen[i] && frozen[j])) w *= 2;
      arrows.emplace_back(i, j, w);
    }
  return Seed::from_arrows(names, frozen, arrows);
}

}  // namespace

TEST_CASE("mutation in direction 2 of the four-vertex example") {
  Seed before = Seed::from_arrows({"1", "2", "3", "4"}, {false, false, true, true},
                                  {{1, 0, 4}, {1, 2, 2}, {3, 1, 2}, {2, 3, 1}, {0, 3, 2}});
  Seed after = before.mutate(1);
  expect_arrows(after, {{1, 2, 4}, {3, 2, 2}, {2, 4, 2}, {4, 3, 1}, {4, 1, 2}});
  CHECK(after.mutate(1) == before);
  CHECK_THROWS_AS(before.mutate(2), iqc::FrozenVertex);
}

TEST_CASE("mutation agrees with a second transcription of the rule") {
  for (int trial = 0; trial < 50; ++trial) {
    Seed s = random_seed(5);
    for (int k : s.unfrozen()) {
      Seed m = s.mutate(k);
      std::vector<double> ref = reference_mutation(s, k);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(m.w2(i, j) == static_cast<int>(2 * ref[i * 5 + j]));
      CHECK(m.mutate(k) == s);
    }
  }
}

TEST_CASE("triangle quiver for n = 3") {
  auto t = iqc::build_fg_triangle(3);
  CHECK(t.seed.size() == 12);
  CHECK(frozen_names(t.seed) == std::set<int>{1, 2, 3, 4, 7, 8, 10, 11, 12});
  expect_arrows(t.seed, {{2, 1, 1},  {3, 2, 1},  {10, 7, 1}, {12, 10, 1}, {8, 11, 1}, {4, 8, 1},
                         {3, 7, 2},  {12, 11, 2}, {4, 1, 2},  {9, 12, 2},  {5, 9, 2},  {1, 5, 2},
                         {6, 10, 2}, {2, 6, 2},  {6, 3, 2},  {9, 6, 2},   {11, 9, 2}, {5, 2, 2},
                         {8, 5, 2},  {7, 6, 2},  {6, 5, 2},  {5, 4, 2},   {10, 9, 2}, {9, 8, 2}});
}

TEST_CASE("triangle quiver for n = 1 is a single oriented triangle") {
  auto t = iqc::build_fg_triangle(1);
  CHECK(t.seed.size() == 3);
  CHECK(frozen_names(t.seed) == std::set<int>{1, 2, 3});
  const int a = t.ab(1), c = t.ca(1), b = t.bc(1);
  CHECK(t.seed.w2(b, a) == 2);
  CHECK(t.seed.w2(a, c) == 2);
  CHECK(t.seed.w2(c, b) == 2);
}

TEST_CASE("triangle vertex count matches lattice enumeration") {
  for (int n = 1; n <= 5; ++n) {
    int count = 0;
    for (int y = 0; y <= n + 1; ++y)
      for (int x = 0; x <= 2 * (n + 1); ++x)
        if ((x + y) % 2 == 0 && x >= y && x <= 2 * (n + 1) - y) ++count;
    count -= 3;
    auto t = iqc::build_fg_triangle(n);
    CHECK(t.seed.size() == count);
    CHECK(t.seed.size() == (n + 2) * (n + 3) / 2 - 3);
    int frozen = 0;
    for (int v = 0; v < t.seed.size(); ++v) frozen += t.seed.frozen(v);
    CHECK(frozen == 3 * n);
  }
  CHECK_THROWS_AS(iqc::build_fg_triangle(0), iqc::BadRank);
}

TEST_CASE("Sigma_1 is disconnected with one unfrozen vertex") {
  auto s = iqc::build_sigma(1);
  CHECK(s.seed.size() == 2);
  CHECK(named(s.seed, s.x(1, 1)) == 1);
  CHECK(named(s.seed, s.x(1, 0)) == 2);
  CHECK(frozen_names(s.seed) == std::set<int>{2});
  expect_arrows(s.seed, {});
}

TEST_CASE("Sigma_2 matches the figure") {
  auto s = iqc::build_sigma(2);
  expect_arrows(s.seed,
                {{5, 4, 1}, {5, 1, 2}, {3, 5, 2}, {4, 3, 2}, {2, 4, 2}, {1, 3, 4}, {3, 2, 4}, {2, 1, 4}});
  CHECK(frozen_names(s.seed) == std::set<int>{4, 5});
  const std::map<std::pair<int, int>, int> labels = {{{1, 0}, 5}, {{1, 1}, 1}, {{1, 2}, 3},
                                                     {{2, 0}, 4}, {{2, 1}, 3}, {{2, 2}, 2}};
  for (const auto& [ik, fig] : labels) CHECK(named(s.seed, s.x(ik.first, ik.second)) == fig);
}

TEST_CASE("Sigma_3 matches the figure") {
  auto s = iqc::build_sigma(3);
  expect_arrows(s.seed, {{9, 5, 1}, {5, 8, 1}, {9, 1, 2}, {1, 6, 2}, {6, 4, 2}, {4, 9, 2}, {5, 4, 2},
                         {4, 2, 2}, {2, 7, 2}, {7, 5, 2}, {8, 7, 2}, {7, 6, 2}, {6, 3, 2}, {3, 8, 2},
                         {1, 4, 2}, {4, 7, 2}, {7, 3, 2}, {3, 1, 2}, {2, 1, 2}, {3, 2, 2}});
  const int fig[3][4] = {{9, 1, 6, 4}, {5, 4, 2, 7}, {8, 7, 6, 3}};
  for (int i = 1; i <= 3; ++i)
    for (int k = 0; k <= 3; ++k) CHECK(named(s.seed, s.x(i, k)) == fig[i - 1][k]);
}

TEST_CASE("Sigma_n labels satisfy the relabeling identity") {
  for (int n = 1; n <= 6; ++n) {
    auto s = iqc::build_sigma(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(s.x(j, j - i) == s.x(i, n + i - j + 1));
    CHECK(s.seed.size() == n * (n + 3) / 2);
    for (int k : s.seed.unfrozen()) CHECK(s.seed.mutate(k).mutate(k) == s.seed);
  }
}

TEST_CASE("self-amalgamation bookkeeping") {
  auto t = iqc::build_fg_triangle(2);
  auto merged = iqc::self_amalgamate(t.seed, {{t.ab(1), t.ca(1)}, {t.ab(2), t.ca(2)}});
  CHECK(merged.seed.size() == t.seed.size() - 2);
  int frozen = 0;
  for (int v = 0; v < merged.seed.size(); ++v) frozen += merged.seed.frozen(v);
  CHECK(frozen == 6 - 4);
  CHECK(!merged.seed.frozen(merged.image[t.ab(1)]));
  CHECK(merged.image[t.ab(1)] == merged.image[t.ca(1)]);
  CHECK_THROWS_AS(iqc::self_amalgamate(t.seed, {{t.ab(1), t.ab(1)}}), iqc::OverlappingSubsets);
  const int interior = t.at(3, 1);
  CHECK_THROWS_AS(iqc::self_amalgamate(t.seed, {{interior, t.ca(1)}}), iqc::NonFrozenGlue);
}

TEST_CASE("amalgamation along the empty set is a disjoint union") {
  auto a = iqc::build_fg_triangle(1);
  auto b = iqc::build_fg_triangle(2);
  auto u = iqc::amalgamate(a.seed, b.seed, {});
  CHECK(u.seed.size() == a.seed.size() + b.seed.size());
  for (int i = 0; i < a.seed.size(); ++i)
    for (int j = 0; j < b.seed.size(); ++j) CHECK(u.seed.w2(u.from_first[i], u.from_second[j]) == 0);
}

TEST_CASE("amalgamation adds half weights of glued frozen pairs") {
  Seed a = Seed::from_arrows({"a", "b"}, {true, true}, {{0, 1, 1}});
  Seed b = Seed::from_arrows({"c", "d"}, {true, true}, {{0, 1, 1}});
  auto u = iqc::amalgamate(a, b, {{0, 0}, {1, 1}});
  CHECK(u.seed.size() == 2);
  CHECK(u.seed.w2(0, 1) == 2);
  CHECK(u.seed.frozen(0));
}

TEST_CASE("double quiver for n = 3") {
  auto d = iqc::build_dn(3);
  CHECK(d.seed.size() == 18);
  CHECK(frozen_names(d.seed) == std::set<int>{1, 3, 4, 8, 9, 15});
  expect_arrows(d.seed, {{1, 2, 2},   {2, 3, 2},   {4, 5, 2},   {5, 6, 2},   {6, 7, 2},   {7, 8, 2},
                         {9, 10, 2},  {10, 11, 2}, {11, 12, 2}, {12, 13, 2}, {13, 14, 2}, {14, 15, 2},
                         {15, 18, 2}, {18, 9, 2},  {8, 14, 2},  {14, 17, 2}, {17, 10, 2}, {10, 4, 2},
                         {3, 7, 2},   {7, 13, 2},  {13, 16, 2}, {16, 11, 2}, {11, 5, 2},  {5, 1, 2},
                         {6, 11, 2},  {11, 17, 2}, {17, 13, 2}, {13, 6, 2},  {2, 5, 2},   {5, 10, 2},
                         {10, 18, 2}, {18, 14, 2}, {14, 7, 2},  {7, 2, 2},   {1, 4, 1},   {4, 9, 1},
                         {8, 3, 1},   {15, 8, 1}});
  // V_1 is the top of the left column; its walk runs to the bottom of the right column
  std::vector<int> v1;
  for (int v : d.walk_v[0]) v1.push_back(named(d.seed, v));
  CHECK(v1 == std::vector<int>{9, 10, 11, 12, 13, 14, 15});
  std::vector<int> l1;
  for (int v : d.walk_lambda[0]) l1.push_back(named(d.seed, v));
  CHECK(l1.front() == 3);
  CHECK(l1.back() == 1);
  CHECK(l1.size() == 7);
}

TEST_CASE("double quiver sizes") {
  for (int n = 1; n <= 5; ++n) {
    auto d = iqc::build_dn(n);
    CHECK(d.seed.size() == n * n + 3 * n);
    for (int i = 1; i <= n; ++i) {
      CHECK(d.walk_v[i - 1].size() == static_cast<std::size_t>(2 * (n + 1 - i) + 1));
      CHECK(d.walk_lambda[i - 1].size() == d.walk_v[i - 1].size());
    }
  }
}

TEST_CASE("Z_2 matches the figure") {
  auto z = iqc::build_zn(2);
  CHECK(z.seed.size() == 13);
  CHECK(frozen_names(z.seed) == std::set<int>{1, 4});
  expect_arrows(z.seed, {{5, 6, 2},  {6, 7, 2},  {7, 10, 2}, {10, 5, 2}, {1, 2, 2},   {2, 3, 2},   {3, 7, 2},
                         {7, 8, 2},  {8, 9, 2},  {9, 4, 2},  {4, 5, 2},  {5, 1, 2},   {5, 9, 2},   {9, 7, 2},
                         {7, 2, 2},  {2, 5, 2},  {11, 3, 2}, {8, 11, 2}, {3, 12, 2},  {13, 8, 2},  {12, 11, 4},
                         {11, 13, 4}, {13, 12, 4}, {1, 4, 1}});
  auto names = [&](const std::vector<int>& path) {
    std::vector<int> out;
    for (int v : path) out.push_back(named(z.seed, v));
    return out;
  };
  CHECK(names(z.paths[0]) == std::vector<int>{1, 2, 3, 12, 11, 3, 7, 10, 5, 1});
  CHECK(names(z.paths[1]) == std::vector<int>{4, 5, 6, 7, 8, 11, 13, 8, 9, 4});
}

TEST_CASE("coideal path lengths") {
  for (int n = 1; n <= 5; ++n) {
    auto z = iqc::build_zn(n);
    for (const auto& path : z.paths) {
      CHECK(path.size() == static_cast<std::size_t>(3 * n + 4));
      CHECK(path.front() == path.back());
    }
  }
}

TEST_CASE("permutation helpers") {
  CHECK(iqc::permutation_order({0, 1, 2}) == 1);
  CHECK(iqc::permutation_order({1, 2, 0, 4, 3}) == 6);
  auto s = iqc::build_sigma(2).seed;
  std::vector<int> swap(s.size());
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  CHECK_FALSE(iqc::is_automorphism(s, swap));
  CHECK_FALSE(iqc::is_automorphism(s, {0}));
}

TEST_CASE("rotation of the extended quiver") {
  auto s2 = iqc::build_sigma_prime(2);
  auto p2 = iqc::coxeter_permutation(s2);
  const std::map<int, int> expected2 = {{5, 4}, {4, 0}, {0, 5}, {1, 3}, {3, 2}, {2, 1}};
  for (const auto& [from, to] : expected2) CHECK(named(s2.seed, p2[*s2.seed.find(std::to_string(from))]) == to);
  auto s3 = iqc::build_sigma_prime(3);
  auto p3 = iqc::coxeter_permutation(s3);
  const std::map<int, int> expected3 = {{9, 5}, {5, 8}, {8, 0}, {0, 9}, {1, 4},
                                        {4, 7}, {7, 3}, {3, 1}, {2, 6}, {6, 2}};
  for (const auto& [from, to] : expected3) CHECK(named(s3.seed, p3[*s3.seed.find(std::to_string(from))]) == to);

  for (int n = 1; n <= 6; ++n) {
    auto sp = iqc::build_sigma_prime(n);
    auto perm = iqc::coxeter_permutation(sp);
    CHECK(iqc::is_automorphism(sp.seed, perm));
    CHECK(iqc::permutation_order(perm) == n + 1);
  }
}
