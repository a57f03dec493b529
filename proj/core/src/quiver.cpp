#include "iqc/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

namespace iqc {

Seed::Seed(std::vector<std::string> names, std::vector<bool> frozen, std::vector<int> weight2)
    : names_(std::move(names)), frozen_(std::move(frozen)), weight2_(std::move(weight2)) {
  validate();
}

Seed Seed::from_arrows(std::vector<std::string> names, std::vector<bool> frozen,
                       const std::vector<std::tuple<int, int, int>>& arrows2) {
  const std::size_t n = names.size();
  std::vector<int> w(n * n, 0);
  for (const auto& [from, to, weight] : arrows2) {
    w[from * n + to] += weight;
    w[to * n + from] -= weight;
  }
  return Seed(std::move(names), std::move(frozen), std::move(w));
}

void Seed::validate() const {
  const int n = size();
  if (frozen_.size() != names_.size() || weight2_.size() != names_.size() * names_.size())
    throw InvalidSeed("seed dimensions disagree");
  for (int i = 0; i < n; ++i) {
    if (w2(i, i) != 0) throw InvalidSeed("nonzero diagonal weight");
    for (int j = i + 1; j < n; ++j) {
      if (w2(i, j) != -w2(j, i)) throw InvalidSeed("weight matrix is not skew-symmetric");
      if (w2(i, j) % 2 != 0 && !(frozen_[i] && frozen_[j]))
        throw InvalidSeed("half-integer weight between " + names_[i] + " and " + names_[j]);
    }
  }
}

std::optional<int> Seed::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<int> Seed::unfrozen() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (!frozen_[v]) out.push_back(v);
  return out;
}

std::uint64_t Seed::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::uint64_t>(size()));
  for (bool f : frozen_) mix(f);
  for (int w : weight2_) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(w)));
  return h;
}

Seed Seed::mutate(int k) const {
  if (frozen_[k]) throw FrozenVertex("cannot mutate at frozen vertex " + names_[k]);
  const int n = size();
  std::vector<int> w = weight2_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        w[i * n + j] = -w2(i, j);
      } else if (w2(i, k) * w2(k, j) > 0) {
        w[i * n + j] = w2(i, j) + std::abs(w2(i, k)) * w2(k, j) / 2;
      }
    }
  }
  return Seed(names_, frozen_, std::move(w));
}

Seed Seed::permuted(const std::vector<int>& perm) const {
  const int n = size();
  std::vector<std::string> names(n);
  std::vector<bool> frozen(n);
  std::vector<int> w(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    names[perm[v]] = names_[v];
    frozen[perm[v]] = frozen_[v];
    for (int u = 0; u < n; ++u) w[perm[v] * n + perm[u]] = w2(v, u);
  }
  return Seed(std::move(names), std::move(frozen), std::move(w));
}

Seed Seed::with_frozen(std::vector<bool> frozen) const { return Seed(names_, std::move(frozen), weight2_); }

Seed Seed::with_names(std::vector<std::string> names) const { return Seed(std::move(names), frozen_, weight2_); }

Seed Seed::with_weight(int i, int j, int w) const {
  std::vector<int> m = weight2_;
  m[i * size() + j] = w;
  m[j * size() + i] = -w;
  return Seed(names_, frozen_, std::move(m));
}

Amalgam amalgamate(const Seed& a, const Seed& b, const std::vector<std::pair<int, int>>& glue) {
  std::vector<int> partner(b.size(), -1);
  std::vector<bool> used_a(a.size(), false);
  for (const auto& [va, vb] : glue) {
    if (!a.frozen(va) || !b.frozen(vb)) throw NonFrozenGlue("glued vertices must be frozen");
    if (used_a[va] || partner[vb] != -1) throw NonFrozenGlue("gluing map is not injective");
    used_a[va] = true;
    partner[vb] = va;
  }
  Amalgam out;
  out.from_first.resize(a.size());
  out.from_second.resize(b.size());
  std::vector<std::string> names;
  std::vector<bool> frozen;
  for (int v = 0; v < a.size(); ++v) {
    out.from_first[v] = v;
    out.parts.emplace_back(v, -1);
    names.push_back(a.name(v));
    frozen.push_back(a.frozen(v));
  }
  for (int v = 0; v < b.size(); ++v) {
    if (partner[v] >= 0) {
      out.from_second[v] = partner[v];
      out.parts[partner[v]].second = v;
    } else {
      out.from_second[v] = static_cast<int>(names.size());
      out.parts.emplace_back(-1, v);
      names.push_back(b.name(v));
      frozen.push_back(b.frozen(v));
    }
  }
  const std::size_t n = names.size();
  std::vector<int> w(n * n, 0);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) w[out.from_first[i] * n + out.from_first[j]] += a.w2(i, j);
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) w[out.from_second[i] * n + out.from_second[j]] += b.w2(i, j);
  out.seed = Seed(std::move(names), std::move(frozen), std::move(w));
  return out;
}

SelfAmalgam self_amalgamate(const Seed& s, const std::vector<std::pair<int, int>>& glue) {
  std::vector<int> rep(s.size());
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<int> side(s.size(), 0);
  for (const auto& [u, v] : glue) {
    if (!s.frozen(u) || !s.frozen(v)) throw NonFrozenGlue("glued vertices must be frozen");
    if (side[u] == 2 || side[v] == 1 || u == v) throw OverlappingSubsets("gluing subsets overlap");
    if (side[u] == 1 || side[v] == 2) throw OverlappingSubsets("gluing map is not injective");
    side[u] = 1;
    side[v] = 2;
    rep[v] = u;
  }
  SelfAmalgam out;
  out.image.assign(s.size(), -1);
  std::vector<std::string> names;
  std::vector<bool> frozen;
  for (int v = 0; v < s.size(); ++v) {
    if (rep[v] != v) continue;
    out.image[v] = static_cast<int>(names.size());
    names.push_back(s.name(v));
    frozen.push_back(s.frozen(v) && side[v] == 0);
  }
  for (int v = 0; v < s.size(); ++v) out.image[v] = out.image[rep[v]];
  const std::size_t n = names.size();
  std::vector<int> w(n * n, 0);
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j)
      if (out.image[i] != out.image[j]) w[out.image[i] * n + out.image[j]] += s.w2(i, j);
  out.seed = Seed(std::move(names), std::move(frozen), std::move(w));
  return out;
}

int FgTriangle::at(int x, int y) const {
  auto it = std::find(points.begin(), points.end(), std::make_pair(x, y));
  if (it == points.end()) throw std::out_of_range("no vertex at lattice point");
  return static_cast<int>(it - points.begin());
}

FgTriangle build_fg_triangle(int n) {
  if (n < 1) throw BadRank("rank must be at least 1");
  FgTriangle t;
  t.n = n;
  const int top = n + 1;
  const int right = 2 * (n + 1);
  std::map<std::pair<int, int>, int> id;
  for (int y = 0; y <= top; ++y) {
    for (int x = y; x <= right - y; x += 2) {
      if ((x == 0 && y == 0) || (x == right && y == 0) || y == top) continue;
      id[{x, y}] = static_cast<int>(t.points.size());
      t.points.emplace_back(x, y);
    }
  }
  auto on_ab = [](int x, int y) { return x == y; };
  auto on_bc = [right](int x, int y) { return x == right - y; };
  auto on_ca = [](int, int y) { return y == 0; };
  std::vector<std::string> names;
  std::vector<bool> frozen;
  for (const auto& [x, y] : t.points) {
    names.push_back(std::to_string(names.size() + 1));
    frozen.push_back(on_ab(x, y) || on_bc(x, y) || on_ca(x, y));
  }
  std::vector<std::tuple<int, int, int>> arrows;
  auto link = [&](std::pair<int, int> from, std::pair<int, int> to) {
    auto f = id.find(from);
    auto g = id.find(to);
    if (f == id.end() || g == id.end()) return;
    const auto [x1, y1] = from;
    const auto [x2, y2] = to;
    const bool same_side = (on_ab(x1, y1) && on_ab(x2, y2)) || (on_bc(x1, y1) && on_bc(x2, y2)) ||
                           (on_ca(x1, y1) && on_ca(x2, y2));
    arrows.emplace_back(f->second, g->second, same_side ? 1 : 2);
  };
  for (const auto& [x, y] : t.points) {
    link({x + 2, y}, {x, y});
    link({x, y}, {x + 1, y + 1});
    link({x - 1, y + 1}, {x, y});
  }
  t.seed = Seed::from_arrows(std::move(names), std::move(frozen), arrows);
  return t;
}

namespace {

std::vector<std::string> numbered(int count, int first = 1) {
  std::vector<std::string> out;
  for (int v = 0; v < count; ++v) out.push_back(std::to_string(first + v));
  return out;
}

}  // namespace

SigmaQuiver build_sigma(int n) {
  FgTriangle tri = build_fg_triangle(n);
  std::vector<std::pair<int, int>> glue;
  for (int k = 1; k <= n; ++k) glue.emplace_back(tri.ab(k), tri.ca(k));
  SelfAmalgam merged = self_amalgamate(tri.seed, glue);

  // loop labels in triangle coordinates, then through the merge
  std::vector<std::vector<int>> loop(n, std::vector<int>(n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int t = 0; t <= i; ++t) loop[i - 1][t] = merged.image[tri.at(n + 1 + i - 2 * t, n + 1 - i)];
    for (int s = 1; s <= n - i; ++s) loop[i - 1][i + s] = merged.image[tri.at(2 * i + s, s)];
  }

  // numbering: X_{i,i} first, then X_{i,i-1}, ..., X_{i,0} for i = 2..n, then X_{1,0}
  std::vector<int> order;
  for (int i = 1; i <= n; ++i) order.push_back(loop[i - 1][i]);
  for (int i = 2; i <= n; ++i)
    for (int k = i - 1; k >= 0; --k) order.push_back(loop[i - 1][k]);
  order.push_back(loop[0][0]);
  const int size = merged.seed.size();
  if (static_cast<int>(order.size()) != size) throw std::logic_error("sigma numbering does not cover the quiver");
  std::vector<int> perm(size, -1);
  for (int pos = 0; pos < size; ++pos) perm[order[pos]] = pos;

  SigmaQuiver out;
  out.n = n;
  out.seed = merged.seed.permuted(perm).with_names(numbered(size));
  out.loop = loop;
  for (auto& row : out.loop)
    for (auto& v : row) v = perm[v];
  return out;
}

SigmaQuiver build_sigma_prime(int n) {
  SigmaQuiver s = build_sigma(n);
  const int size = s.seed.size();
  std::vector<std::string> names = s.seed.names();
  names.emplace_back("0");
  std::vector<bool> frozen = s.seed.frozen_mask();
  frozen.push_back(true);
  std::vector<std::tuple<int, int, int>> arrows;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (s.seed.w2(i, j) > 0) arrows.emplace_back(i, j, s.seed.w2(i, j));
  const int x0 = size;
  arrows.emplace_back(s.x(n, 0), x0, 1);
  arrows.emplace_back(x0, s.x(1, 0), 1);
  arrows.emplace_back(s.x(1, 1), x0, 2);
  arrows.emplace_back(x0, s.x(n, n), 2);
  s.seed = Seed::from_arrows(std::move(names), std::move(frozen), arrows);
  s.x0 = x0;
  return s;
}

DQuiver build_dn(int n) {
  FgTriangle tri = build_fg_triangle(n);
  std::vector<std::pair<int, int>> glue;
  for (int k = 1; k <= n; ++k) glue.emplace_back(tri.ca(k), tri.bc(k));
  for (int k = 1; k <= n; ++k) glue.emplace_back(tri.bc(k), tri.ca(k));
  Amalgam am = amalgamate(tri.seed, tri.seed, glue);
  std::vector<bool> frozen = am.seed.frozen_mask();
  for (const auto& [a, b] : glue) frozen[am.from_first[a]] = false;

  auto first = [&](int x, int y) { return am.from_first[tri.at(x, y)]; };
  auto second = [&](int x, int y) { return am.from_second[tri.at(x, y)]; };
  const int top = n + 1;

  // walk from the left frozen vertex of row m (m-th from the bottom), and its rotation
  auto walk = [&](int m, const std::function<int(int, int)>& near, const std::function<int(int, int)>& far) {
    std::vector<int> w;
    for (int s = 0; s <= m; ++s) w.push_back(near(m + s, m - s));
    for (int x = top + m - 2; x >= top - m; x -= 2) w.push_back(far(x, top - m));
    return w;
  };

  std::vector<int> order;
  for (int m = 1; m <= n; ++m)
    for (int v : walk(m, first, second)) order.push_back(v);
  for (int j = n; j >= 1; --j) order.push_back(first(top + j, top - j));
  const int size = am.seed.size();
  if (static_cast<int>(order.size()) != size) throw std::logic_error("double quiver numbering does not cover the quiver");
  std::vector<int> perm(size, -1);
  for (int pos = 0; pos < size; ++pos) perm[order[pos]] = pos;

  DQuiver out;
  out.n = n;
  out.seed = am.seed.with_frozen(std::move(frozen)).permuted(perm).with_names(numbered(size));
  out.parts.assign(size, {-1, -1});
  for (int v = 0; v < size; ++v) out.parts[perm[v]] = am.parts[v];
  for (int i = 1; i <= n; ++i) {
    const int m = n + 1 - i;
    std::vector<int> v = walk(m, first, second);
    std::vector<int> l = walk(m, second, first);
    for (auto& x : v) x = perm[x];
    for (auto& x : l) x = perm[x];
    out.walk_v.push_back(std::move(v));
    out.walk_lambda.push_back(std::move(l));
  }
  return out;
}

ZQuiver build_zn(int n) {
  ZQuiver z;
  z.n = n;
  z.sigma = build_sigma(n);
  z.d = build_dn(n);
  std::vector<std::pair<int, int>> glue;
  for (int i = 1; i <= n; ++i) glue.emplace_back(z.sigma.x(i, 0), z.d.walk_v[i - 1][0]);
  Amalgam am = amalgamate(z.sigma.seed, z.d.seed, glue);
  std::vector<bool> frozen = am.seed.frozen_mask();
  for (const auto& [a, b] : glue) frozen[am.from_first[a]] = false;

  // numbering: the rotated rows of D_n, the glued sides, then the remaining loop vertices
  const int dsize = z.d.seed.size();
  std::vector<int> order;
  std::vector<bool> placed(am.seed.size(), false);
  auto place = [&](int v) {
    if (!placed[v]) {
      placed[v] = true;
      order.push_back(v);
    }
  };
  for (int m = 1; m <= n; ++m)
    for (int v : z.d.walk_lambda[n - m]) place(am.from_second[v]);
  for (int v = 0; v < dsize; ++v) place(am.from_second[v]);
  for (int i = 1; i <= n; ++i)
    for (int k = n; k >= 1; --k) place(am.from_first[z.sigma.x(i, k)]);
  const int size = am.seed.size();
  if (static_cast<int>(order.size()) != size) throw std::logic_error("Z numbering does not cover the quiver");
  std::vector<int> perm(size, -1);
  for (int pos = 0; pos < size; ++pos) perm[order[pos]] = pos;

  z.seed = am.seed.with_frozen(std::move(frozen)).permuted(perm).with_names(numbered(size));
  z.parts.assign(size, {-1, -1});
  for (int v = 0; v < size; ++v) z.parts[perm[v]] = am.parts[v];
  z.from_sigma.resize(z.sigma.seed.size());
  z.from_d.resize(dsize);
  for (int v = 0; v < z.sigma.seed.size(); ++v) z.from_sigma[v] = perm[am.from_first[v]];
  for (int v = 0; v < dsize; ++v) z.from_d[v] = perm[am.from_second[v]];

  for (int i = 1; i <= n; ++i) {
    std::vector<int> path;
    for (int v : z.d.walk_lambda[n - i]) path.push_back(z.from_d[v]);
    for (int k = 1; k <= n; ++k) path.push_back(z.from_sigma[z.sigma.x(i, k)]);
    path.push_back(z.from_sigma[z.sigma.x(i, 0)]);
    const auto& wv = z.d.walk_v[i - 1];
    for (std::size_t s = 1; s < wv.size(); ++s) path.push_back(z.from_d[wv[s]]);
    z.paths.push_back(std::move(path));
  }
  return z;
}

std::vector<int> coxeter_permutation(const SigmaQuiver& sp) {
  if (!sp.x0) throw std::invalid_argument("coxeter permutation needs the extended quiver");
  const int n = sp.n;
  std::vector<int> perm(sp.seed.size(), -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      int image;
      if (i < n) image = sp.x(i + 1, j);
      else if (j == 0) image = *sp.x0;
      else image = sp.x(n - j + 1, n - j + 1);
      perm[sp.x(i, j)] = image;
    }
  }
  perm[*sp.x0] = sp.x(1, 0);
  return perm;
}

int permutation_order(const std::vector<int>& perm) {
  std::vector<int> power(perm);
  int order = 1;
  auto is_identity = [](const std::vector<int>& p) {
    for (std::size_t v = 0; v < p.size(); ++v)
      if (p[v] != static_cast<int>(v)) return false;
    return true;
  };
  while (!is_identity(power)) {
    for (auto& v : power) v = perm.at(v);
    ++order;
  }
  return order;
}

bool is_automorphism(const Seed& s, const std::vector<int>& perm) {
  const int size = s.size();
  if (static_cast<int>(perm.size()) != size) return false;
  std::vector<bool> hit(size, false);
  for (int v : perm) {
    if (v < 0 || v >= size || hit[v]) return false;
    hit[v] = true;
  }
  for (int i = 0; i < size; ++i) {
    if (s.frozen(perm[i]) != s.frozen(i)) return false;
    for (int j = 0; j < size; ++j)
      if (s.w2(perm[i], perm[j]) != s.w2(i, j)) return false;
  }
  return true;
}

}  // namespace iqc
