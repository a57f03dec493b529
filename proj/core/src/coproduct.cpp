#include <iqc/coproduct.hpp>

#include "checks.hpp"

namespace iqc {

namespace {

using detail::compare;
using detail::holds;
using detail::run_parallel;

std::vector<std::pair<int, int>> factors(const std::vector<int>& vertices, std::size_t length) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t s = 0; s < length; ++s) out.emplace_back(vertices[s], 1);
  return out;
}

TorusElement prefix_sum(const SeedPtr& seed, const std::vector<int>& walk) {
  TorusElement sum(seed);
  for (std::size_t l = 1; l < walk.size(); ++l) sum += renormalized(seed, factors(walk, l));
  return sum;
}

std::string pair_label(const std::string& name, int i, int j) {
  return name + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

DoubleTable build_t(int n) {
  if (n < 1) throw BadRank("rank must be at least 1");
  DoubleTable t;
  t.n = n;
  t.d = build_dn(n);
  t.seed = share(t.d.seed);
  t.f.resize(n, TorusElement(t.seed));
  t.k_prime.resize(n, TorusElement(t.seed));
  for (int i = 1; i <= n; ++i) {
    const auto& v = t.d.walk_v[i - 1];
    t.e.push_back(prefix_sum(t.seed, v));
    t.k.push_back(renormalized(t.seed, factors(v, v.size())));
    const auto& l = t.d.walk_lambda[i - 1];
    t.f[n - i] = prefix_sum(t.seed, l);
    t.k_prime[n - i] = renormalized(t.seed, factors(l, l.size()));
  }
  return t;
}

std::vector<std::vector<int>> coideal_paths(const ZQuiver& z) { return z.paths; }

Report verify_double_relations(const DoubleTable& t) {
  const int n = t.n;
  const auto one = TorusElement::constant(t.seed, 1);
  const QScalar d = q_minus_qinv();
  auto cartan = [](int i, int j) { return i == j ? 2 : std::abs(i - j) == 1 ? -1 : 0; };
  auto serre = [](const TorusElement& x, const TorusElement& y) {
    return x * x * y - x * y * x * (QScalar::q_power(2) + QScalar::q_power(-2)) + y * x * x;
  };
  struct Task {
    int i, j;
  };
  std::vector<Task> tasks;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) tasks.push_back({i, j});
  Report report{"double-relations", n, {}};
  auto rows = run_parallel(tasks.size(), [&](std::size_t s) {
    const auto [i, j] = tasks[s];
    std::vector<CheckResult> out;
    const TorusElement &ki = t.K(i), &kpi = t.Kp(i);
    const QScalar up = QScalar::q_power(2 * cartan(i, j)), down = QScalar::q_power(-2 * cartan(i, j));
    out.push_back(holds(pair_label("K", i, j),
                        ki * t.K(j) == t.K(j) * ki && kpi * t.Kp(j) == t.Kp(j) * kpi && ki * t.Kp(j) == t.Kp(j) * ki &&
                            ki * monomial_inverse(ki) == one && kpi * monomial_inverse(kpi) == one,
                        "Cartan part fails to commute"));
    out.push_back(compare(pair_label("KE", i, j), ki * t.E(j), up * (t.E(j) * ki)));
    out.push_back(compare(pair_label("K'E", i, j), kpi * t.E(j), down * (t.E(j) * kpi)));
    out.push_back(compare(pair_label("KF", i, j), ki * t.F(j), down * (t.F(j) * ki)));
    out.push_back(compare(pair_label("K'F", i, j), kpi * t.F(j), up * (t.F(j) * kpi)));
    const TorusElement ef = t.E(i) * t.F(j) - t.F(j) * t.E(i);
    out.push_back(compare(pair_label("EF", i, j), ef, i == j ? d * (kpi - ki) : TorusElement(t.seed)));
    if (std::abs(i - j) == 1) {
      out.push_back(compare(pair_label("serre E", i, j), serre(t.E(i), t.E(j)), TorusElement(t.seed)));
      out.push_back(compare(pair_label("serre F", i, j), serre(t.F(i), t.F(j)), TorusElement(t.seed)));
    } else if (std::abs(i - j) > 1) {
      out.push_back(compare(pair_label("EE", i, j), t.E(i) * t.E(j), t.E(j) * t.E(i)));
      out.push_back(compare(pair_label("FF", i, j), t.F(i) * t.F(j), t.F(j) * t.F(i)));
    }
    CheckResult packed{pair_label("pair", i, j), true, {}, {}};
    for (auto& r : out)
      if (!r.pass) {
        packed.pass = false;
        packed.witness = r.label + ": " + r.witness;
        break;
      }
    return packed;
  });
  report.results = std::move(rows);
  return report;
}

CoidealContext build_coideal(int n) {
  CoidealContext c{build_generators(n), build_t(n), build_zn(n), nullptr, nullptr};
  c.z_seed = share(c.z.seed);
  c.target = tensor_seed(*c.iota.seed, *c.t.seed);
  return c;
}

TorusElement delta_b(const CoidealContext& c, int i) {
  const auto one_sigma = TorusElement::constant(c.iota.seed, 1);
  TorusElement out = tensor(c.iota.b(i), c.t.Kp(i), c.target);
  out += tensor(one_sigma, c.t.F(i), c.target);
  out -= tensor(c.iota.k(i), c.t.E(i) * c.t.Kp(i), c.target) * QScalar::q_power(-2);
  return out;
}

TorusElement delta_k(const CoidealContext& c, int i) {
  return tensor(c.iota.k(i), c.t.K(i) * c.t.Kp(i), c.target);
}

TorusElement path_sum_b(const CoidealContext& c, int i) {
  const auto& path = c.z.paths.at(i - 1);
  const Amalgam glued{c.z.seed, c.z.parts, c.z.from_sigma, c.z.from_d};
  return tensor_embed(prefix_sum(c.z_seed, path), glued, c.target);
}

TorusElement path_sum_k(const CoidealContext& c, int i) {
  const auto& path = c.z.paths.at(i - 1);
  const Amalgam glued{c.z.seed, c.z.parts, c.z.from_sigma, c.z.from_d};
  return -tensor_embed(renormalized(c.z_seed, factors(path, path.size())), glued, c.target);
}

Report verify_coideal(const CoidealContext& c) {
  const int n = c.iota.n;
  Report report{"coideal", n, {}};
  auto rows = run_parallel(static_cast<std::size_t>(2 * n), [&](std::size_t s) {
    const int i = static_cast<int>(s / 2) + 1;
    if (s % 2 == 1) return compare("k_" + std::to_string(i), path_sum_k(c, i), delta_k(c, i));
    const auto path = c.z.paths.at(i - 1);
    if (path.size() != static_cast<std::size_t>(3 * n + 4))
      return holds("B_" + std::to_string(i), false, "path length " + std::to_string(path.size()));
    const TorusElement lhs = path_sum_b(c, i), rhs = delta_b(c, i);
    if (lhs.size() != rhs.size())
      return holds("B_" + std::to_string(i), false,
                   "term counts " + std::to_string(lhs.size()) + " and " + std::to_string(rhs.size()));
    return compare("B_" + std::to_string(i), lhs, rhs);
  });
  report.results = std::move(rows);
  return report;
}

}  // namespace iqc
