#include <iqc/iqg.hpp>

#include "checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace iqc {

namespace {

using detail::compare;
using detail::holds;
using detail::run_parallel;


QScalar qp(int twice) { return QScalar::q_power(twice); }

// One task per braid index; results are concatenated in index order.
std::vector<CheckResult> run_rows(int n, const std::function<void(int, std::vector<CheckResult>&)>& task) {
  std::vector<std::vector<CheckResult>> rows(n);
  auto errors = run_parallel(n, [&](std::size_t t) {
    task(static_cast<int>(t) + 1, rows[t]);
    return CheckResult{"index " + std::to_string(t + 1), true, {}, {}};
  });
  std::vector<CheckResult> out;
  for (int t = 0; t < n; ++t) {
    for (auto& r : rows[t]) out.push_back(std::move(r));
    if (!errors[t].pass) out.push_back({"index " + std::to_string(t + 1), false, errors[t].witness, {}});
  }
  return out;
}


std::string var(const Seed& s, int v) {
  const std::string& name = s.name(v);
  return name.size() == 1 ? "X_" + name : "X_{" + name + "}";
}

std::string sup(int e) {
  const std::string digits = std::to_string(e);
  return digits.size() == 1 ? "^" + digits : "^{" + digits + "}";
}

// sign and integer exponent of a scalar +-q^m; throws when it has another shape
std::pair<int, int> signed_integer_power(const QScalar& c) {
  int twice = 0;
  const int sign = c.signed_q_power(twice);
  if (sign == 0 || twice % 2 != 0) throw std::logic_error("coefficient " + c.str() + " is not +-q^m");
  return {sign, twice / 2};
}

std::string q_text(int m) { return m == 0 ? "" : m == 1 ? "q" : "q" + sup(m); }

TorusElement ordered_product(const SeedPtr& seed, const std::vector<std::pair<int, int>>& factors) {
  TorusElement out = TorusElement::constant(seed, 1);
  for (const auto& [v, e] : factors) out = out * TorusElement::generator(seed, v, e);
  return out;
}

std::string label(const std::string& head, std::initializer_list<int> args) {
  std::string out = head + "(";
  bool first = true;
  for (int a : args) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + ")";
}

std::string word_str(const std::vector<int>& word) {
  std::string out = "T";
  for (int w : word) out += std::to_string(w);
  return word.empty() ? "id" : out;
}

}  // namespace

bool Report::pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::size_t Report::failures() const {
  return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
}

std::size_t Report::notes() const {
  return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.note.empty(); });
}

std::string Generator::str() const { return (kind == Kind::B ? "B_" : "k_") + std::to_string(index); }

std::vector<Generator> all_generators(int n) {
  std::vector<Generator> out;
  for (int i = 1; i <= n; ++i) out.push_back({Generator::Kind::B, i});
  for (int i = 1; i <= n; ++i) out.push_back({Generator::Kind::K, i});
  return out;
}

GeneratorTable build_generators(int n) {
  if (n < 1) throw BadRank("rank must be at least 1");
  GeneratorTable t;
  t.n = n;
  t.sigma = build_sigma(n);
  t.seed = share(t.sigma.seed);
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<int, int>> row;
    std::vector<TorusElement> prefixes, partial;
    TorusElement b(t.seed), w(t.seed);
    for (int k = 0; k <= n; ++k) {
      row.emplace_back(t.sigma.x(i, k), 1);
      prefixes.push_back(renormalized(t.seed, row));
      b += prefixes.back();
      w += ordered_product(t.seed, row) * qp(2 * k);
      partial.push_back(w);
    }
    row.front().second = 2;
    TorusElement c = renormalized(t.seed, row);
    for (int v = 0; v < t.seed->size(); ++v) {
      auto x = TorusElement::generator(t.seed, v);
      if (x * c != c * x) throw std::logic_error("central monomial of row " + std::to_string(i) + " is not central");
    }
    t.prefix.push_back(std::move(prefixes));
    t.w.push_back(std::move(partial));
    t.iota_b.push_back(std::move(b));
    t.iota_k.push_back(-c);
    t.iota_k_inv.push_back(-monomial_inverse(c));
    t.central.push_back(std::move(c));
  }
  return t;
}

std::string render_b(const GeneratorTable& table, int i) {
  const Seed& s = *table.seed;
  TorusElement rest = table.b(i);
  std::vector<std::pair<int, int>> row;
  std::string head, tail;
  QScalar previous = 1;
  for (int k = 0; k <= table.n; ++k) {
    const int v = table.sigma.x(i, k);
    row.emplace_back(v, 1);
    const TorusElement ordered = ordered_product(table.seed, row);
    const auto& [a, unit] = *ordered.terms().begin();
    const QScalar c = rest.coeff(a) / unit;
    if (c.is_zero()) throw std::logic_error("chain breaks off at position " + std::to_string(k));
    rest -= ordered * c;
    const auto [sign, m] = signed_integer_power(c / previous);
    previous = c;
    if (k == 0) {
      head = (sign < 0 ? "-" : "") + q_text(m) + var(s, v);
      continue;
    }
    head += std::string("(1") + (sign < 0 ? "-" : "+") + q_text(m) + var(s, v);
    tail += ")";
  }
  if (!rest.is_zero()) throw std::logic_error("element is not a nested chain: " + rest.str());
  return head + tail;
}

std::string render_k(const GeneratorTable& table, int i) {
  const Seed& s = *table.seed;
  std::vector<std::pair<int, int>> factors{{table.sigma.x(i, 0), 2}};
  for (int k = 1; k <= table.n; ++k) factors.emplace_back(table.sigma.x(i, k), 1);
  const TorusElement ordered = ordered_product(table.seed, factors);
  const TorusElement& f = table.k(i);
  if (!f.is_monomial() || f.terms().begin()->first != ordered.terms().begin()->first)
    throw std::logic_error("element is not a multiple of the row monomial");
  const auto [sign, m] = signed_integer_power(f.terms().begin()->second / ordered.terms().begin()->second);
  std::string out = (sign < 0 ? "-" : "") + q_text(m);
  for (const auto& [v, e] : factors) out += var(s, v) + (e == 1 ? "" : sup(e));
  return out;
}

Evaluation identity_evaluation(const GeneratorTable& table) {
  return {table.iota_b, table.iota_k, table.iota_k_inv};
}

Evaluation twist(const Evaluation& phi, int i) {
  const int n = static_cast<int>(phi.b.size());
  if (i < 1 || i > n) throw BadIndex("braid index out of range");
  Evaluation out = phi;
  const int a = i - 1;
  out.b[a] = -(phi.k_inv[a] * phi.b[a]);
  out.k[a] = phi.k_inv[a];
  out.k_inv[a] = phi.k[a];
  for (int j : {a - 1, a + 1}) {
    if (j < 0 || j >= n) continue;
    out.b[j] = qcommutator(phi.b[a], phi.b[j]);
    out.k[j] = -(phi.k[a] * phi.k[j]);
    out.k_inv[j] = -(phi.k_inv[j] * phi.k_inv[a]);
  }
  return out;
}

Evaluation evaluate_word(const GeneratorTable& table, const std::vector<int>& word) {
  Evaluation phi = identity_evaluation(table);
  for (int w : word) phi = twist(phi, w);
  return phi;
}

TorusElement braid_T(const GeneratorTable& table, const std::vector<int>& word, const Generator& g) {
  if (g.index < 1 || g.index > table.n) throw BadIndex("generator index out of range");
  return evaluate_word(table, word)(g);
}

Report verify_relations(const GeneratorTable& table) {
  const int n = table.n;
  struct Task {
    int kind, i, j;
  };
  std::vector<Task> tasks;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      tasks.push_back({0, i, j});
      if (std::abs(i - j) > 1 && i < j) tasks.push_back({1, i, j});
      if (std::abs(i - j) == 1) tasks.push_back({2, i, j});
    }
  const auto one = TorusElement::constant(table.seed, 1);
  Report report{"relations", n, {}};
  report.results = run_parallel(tasks.size(), [&](std::size_t t) {
    const auto [kind, i, j] = tasks[t];
    const TorusElement &bi = table.b(i), &bj = table.b(j), &ki = table.k(i);
    if (kind == 0) {
      const TorusElement& kj = table.k(j);
      const bool ok = ki * bj == bj * ki && ki * kj == kj * ki && ki * table.iota_k_inv[i - 1] == one;
      return holds(label("R0", {i, j}), ok, "k_" + std::to_string(i) + " fails to commute");
    }
    if (kind == 1) return compare(label("R1", {i, j}), bi * bj, bj * bi);
    const TorusElement bii = bi * bi;
    const TorusElement lhs = bj * bii - bi * bj * bi * (qp(2) + qp(-2)) + bii * bj;
    const QScalar d = q_minus_qinv();
    return compare(label("R2", {i, j}), lhs, bj * ki * (d * d));
  });
  return report;
}

Report verify_theorem_braid(const GeneratorTable& table) {
  const int n = table.n;
  const auto gens = all_generators(n);
  Report report{"braid", n, {}};
  report.results = run_rows(n, [&](int i, std::vector<CheckResult>& out) {
    const QuasiClusterMap map = braid_cl(table.sigma, table.seed, i);
    const Evaluation phi = twist(identity_evaluation(table), i);
    for (const auto& g : gens) {
      const std::string name = "T" + std::to_string(i) + "(" + g.str() + ")";
      try {
        out.push_back(compare(name, map.apply(identity_evaluation(table)(g)), phi(g)));
      } catch (const NotLaurent& e) {
        out.push_back({name, false, std::string("not Laurent at stage ") + std::to_string(e.stage), {}});
      }
    }
  });
  return report;
}

Report verify_braid_relations(const GeneratorTable& table) {
  const int n = table.n;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j - i == 1)
        pairs.push_back({{i, j, i}, {j, i, j}});
      else
        pairs.push_back({{i, j}, {j, i}});
    }
  const auto gens = all_generators(n);
  Report report{"braid-relations", n, {}};
  report.results = run_parallel(pairs.size() * gens.size(), [&](std::size_t t) {
    const auto& [left, right] = pairs[t / gens.size()];
    const Generator& g = gens[t % gens.size()];
    return compare(word_str(left) + "=" + word_str(right) + " on " + g.str(), braid_T(table, left, g),
                   braid_T(table, right, g));
  });
  return report;
}

Report verify_coxeter(const GeneratorTable& table) {
  const int n = table.n;
  const auto gens = all_generators(n);
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 1);
  const Evaluation once = evaluate_word(table, c);
  Evaluation phi = once;
  std::vector<Evaluation> powers{once};
  for (int r = 1; r <= n; ++r) {
    for (int w : c) phi = twist(phi, w);
    powers.push_back(phi);
  }
  const Evaluation id = identity_evaluation(table);
  const QuasiClusterMap rho = coxeter_map(table.sigma, table.seed);
  Report report{"coxeter", n, {}};
  auto& out = report.results;
  for (const auto& g : gens) out.push_back(compare("Tc^" + std::to_string(n + 1) + "(" + g.str() + ")", powers[n](g), g.kind == Generator::Kind::B ? id.b[g.index - 1] : id.k[g.index - 1]));
  for (int i = 1; i < n; ++i) {
    out.push_back(compare(label("Tc(B_i)=B_i+1", {i}), once.b[i - 1], table.b(i + 1)));
    out.push_back(compare(label("Tc(k_i)=k_i+1", {i}), once.k[i - 1], table.k(i + 1)));
  }
  out.push_back(compare("Tc^2(B_n)=B_1", powers.size() > 1 ? powers[1].b[n - 1] : once.b[n - 1], table.b(1)));
  TorusElement inverse_product = TorusElement::constant(table.seed, n % 2 == 1 ? 1 : -1);
  for (int i = 1; i <= n; ++i) inverse_product = inverse_product * table.iota_k_inv[i - 1];
  out.push_back(compare("Tc(k_n)", once.k[n - 1], inverse_product));
  for (const auto& g : gens) out.push_back(compare("rho(" + g.str() + ")", rho.apply(id(g)), once(g)));
  auto is_identity = [&](const Evaluation& e) {
    return std::all_of(gens.begin(), gens.end(), [&](const Generator& g) { return e(g) == id(g); });
  };
  int order = 1;
  while (order <= n + 1 && !is_identity(powers[order - 1])) ++order;
  CheckResult cyclic = holds("order", order == n + 1);
  cyclic.witness = order <= n + 1 ? "order=" + std::to_string(order) : "order>" + std::to_string(n + 1);
  out.push_back(cyclic);
  return report;
}

namespace {

// One claimed value of T_i^cl on a generator, in whichever form makes the comparison exact.
struct Claim {
  enum class Form { Laurent, Left, Right } form;
  TorusElement first, second;  // Laurent: value; Left: L, P with value L^{-1} P; Right: numerator, denominator
};

}  // namespace

namespace {

int row_vertex(const GeneratorTable& table, int row, int k) {
  const int n = table.n;
  row = ((row % (n + 1)) + n + 1) % (n + 1);
  if (row > 0) return table.sigma.x(row, k);
  return k == 0 ? -1 : table.sigma.x(n + 1 - k, n + 1 - k);
}

}  // namespace

Report verify_closed_forms(const GeneratorTable& table) {
  const int n = table.n;
  if (n < 3) throw BadRank("closed forms are stated for rank at least 3");
  const auto& seed = table.seed;
  const auto one = TorusElement::constant(seed, 1);
  Report report{"closed-forms", n, {}};
  report.results = run_rows(n, [&](int i, std::vector<CheckResult>& out) {
    auto W = [&](int k) { return table.w[i - 1][k]; };
    auto X = [&](int row, int k) { return TorusElement::generator(seed, row_vertex(table, row, k)); };
    const int before = i - 1, after = i + 1;
    const TorusElement& C = table.central[i - 1];
    const TorusElement C_inv = monomial_inverse(C);
    TorusElement top = one;
    for (int k = 0; k <= n - 1; ++k) top = top * X(i, k);
    const TorusElement top_inv = monomial_inverse(top);
    // A X W_{n-2}^{-1} W_{n-1} as the right fraction A X (W' + q^{n-1} top) W'^{-1}, W' = top^{-1} W_{n-2} top
    auto mixed = [&](const TorusElement& ax) {
      const TorusElement shifted = top_inv * W(n - 2) * top;
      return Claim{Claim::Form::Right, ax * (shifted + top * qp(2 * (n - 1))), shifted};
    };
    auto laurent = [&](const TorusElement& value) { return Claim{Claim::Form::Laurent, value, one}; };
    auto left = [&](const TorusElement& l, const TorusElement& p) { return Claim{Claim::Form::Left, l, p}; };
    const Claim loop_one = left((one + monomial_inverse(X(i, 1)) * qp(2)) * X(i, 0) * W(n - 1) * qp(2), C);

    // Row 0 is the image of row n under the rotation: the diagonal X_{n,n}, ..., X_{1,1} after the
    // vertex X_0 that only the extended quiver has. It neighbours row 1 from above and row n from below.
    std::multimap<int, std::pair<std::string, Claim>> claims;
    auto claim = [&](const char* eq, int row, int k, Claim c) {
      const int v = row_vertex(table, row, k);
      if (v >= 0) claims.emplace(v, std::make_pair(std::string(eq) + " k=" + std::to_string(k), std::move(c)));
    };
    claim("T1", i, 0, laurent(W(n - 1) * C_inv));
    claim("T1", i, 1, loop_one);
    for (int k = 2; k <= n - 1; ++k) claim("T1", i, k, left(W(k), X(i, k) * W(k - 2)));
    claim("T1", i, n, laurent(X(i, 0) * X(i, n) * W(n - 2) * C_inv));

    if (before > 0) claim("T2", before, 0, laurent(X(before, 0) * X(i, 0) * qp(1)));
    for (int k = 1; k <= n - 2; ++k) claim("T2", before, k, left(W(k - 1), X(before, k) * W(k)));
    claim("T2", before, n - 1, mixed((one + X(i, 1) * qp(-2)) * X(before, n - 1)));
    claim("T2", before, n, loop_one);

    if (after <= n) claim("T3", after, 0, left(W(n - 1), X(after, 0) * C * qp(-1)));
    claim("T3", after, 1, laurent(X(i, 0) * X(after, 1) * W(n - 2) * C_inv));
    claim("T3", after, 2, mixed((one + X(i, 1) * qp(-2)) * X(after, 2)));
    for (int k = 3; k <= n; ++k) claim("T3", after, k, left(W(k - 2), X(after, k) * W(k - 1)));

    // the two printed forms of the sandwiched cases agree because the middle factor commutes
    for (int k = 2; k <= n - 1; ++k)
      out.push_back(compare(label("T1 commute", {i, k}), X(i, k) * W(k - 2), W(k - 2) * X(i, k)));
    for (int k = 1; k <= n - 2; ++k)
      out.push_back(compare(label("T2 commute", {i, k}), X(before, k) * W(k - 1), W(k - 1) * X(before, k)));
    for (int k = 3; k <= n; ++k)
      out.push_back(compare(label("T3 commute", {i, k}), X(after, k) * W(k - 2), W(k - 2) * X(after, k)));

    const QuasiClusterMap map = braid_cl(table.sigma, seed, i);
    for (int v = 0; v < seed->size(); ++v) {
      const TorusElement x = TorusElement::generator(seed, v);
      const std::string head = "T" + std::to_string(i) + "(X_" + seed->name(v) + ") ";
      const RightFraction image = map.apply(RightFraction::of(x));
      auto [from, to] = claims.equal_range(v);
      if (from == to) {
        out.push_back(compare(head + "fixed", image.numerator, x * image.denominator));
        continue;
      }
      for (auto it = from; it != to; ++it) {
        const auto& [eq, c] = it->second;
        const std::string name = head + eq;
        switch (c.form) {
          case Claim::Form::Laurent:
            out.push_back(compare(name, image.numerator, c.first * image.denominator));
            break;
          case Claim::Form::Left:
            out.push_back(compare(name, c.first * image.numerator, c.second * image.denominator));
            break;
          case Claim::Form::Right:
            // N D^{-1} = R S^{-1}: cancel a common right factor when one denominator divides the other
            if (auto g = divide_left(image.denominator, c.second))
              out.push_back(compare(name, image.numerator, c.first * *g));
            else if (auto h = divide_left(c.second, image.denominator))
              out.push_back(compare(name, image.numerator * *h, c.first));
            else
              out.push_back({name, false, "denominators share no Laurent right factor", {}});
            break;
        }
      }
    }
  });
  return report;
}

TorusElement reduce_central(const GeneratorTable& table, const TorusElement& f) {
  const Seed& s = *table.seed;
  std::vector<Exponent> blocks;
  for (const auto& c : table.central) blocks.push_back(c.terms().begin()->first);
  TorusElement out(table.seed);
  for (const auto& [a, c] : f.terms()) {
    // the last loop vertices of neighbouring rows overlap, so sweep until every pivot is cleared
    Exponent b = a;
    for (int pass = 0; pass <= table.n; ++pass)
      for (int i = table.n; i >= 1; --i) {
        const int m = b[table.sigma.x(i, table.n)];
        for (int v = 0; v < s.size(); ++v) b[v] -= m * blocks[i - 1][v];
      }
    for (int i = 1; i <= table.n; ++i)
      if (b[table.sigma.x(i, table.n)] != 0) throw std::logic_error("central reduction did not converge");
    out.add_term(b, c.shifted(renormalization_shift(s, b) - renormalization_shift(s, a)));
  }
  return out;
}

Report verify_central_reduction(const GeneratorTable& table) {
  const int n = table.n;
  Report report{"central-reduction", n, {}};
  auto& out = report.results;
  auto red = [&](const TorusElement& f) { return reduce_central(table, f); };
  const auto minus_one = TorusElement::constant(table.seed, -1);
  const QScalar d = q_minus_qinv();
  for (int i = 1; i <= n; ++i) {
    out.push_back(compare(label("k_i->-1", {i}), red(table.k(i)), minus_one));
    out.push_back(holds(label("B_i survives", {i}), red(table.b(i)).size() == table.b(i).size(),
                        "terms of B_i collapsed under the reduction"));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      out.push_back(compare(label("multiplicative", {i, j}), red(table.b(i) * table.b(j)), red(table.b(i)) * red(table.b(j))));
      if (std::abs(i - j) != 1) continue;
      const TorusElement &bi = table.b(i), &bj = table.b(j), &ki = table.k(i);
      const TorusElement residue =
          bj * bi * bi - bi * bj * bi * (qp(2) + qp(-2)) + bi * bi * bj - bj * ki * (d * d);
      out.push_back(holds(label("R2 residue", {i, j}), red(residue).is_zero(), red(residue).str()));
      const TorusElement ri = red(bi), rj = red(bj);
      out.push_back(compare(label("reduced Serre", {i, j}),
                            rj * ri * ri - ri * rj * ri * (qp(2) + qp(-2)) + ri * ri * rj, -(rj * (d * d))));
    }
  return report;
}

std::vector<int> standard_reduced_word(int n) {
  std::vector<int> word;
  for (int top = n; top >= 1; --top)
    for (int i = 1; i <= top; ++i) word.push_back(i);
  return word;
}

void require_reduced_word(int n, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != n * (n + 1) / 2)
    throw NotReducedWord("a reduced word for the longest element has length " + std::to_string(n * (n + 1) / 2));
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int w : word) {
    if (w < 1 || w > n) throw NotReducedWord("letter " + std::to_string(w) + " out of range");
    std::swap(perm[w - 1], perm[w]);
  }
  if (!std::is_sorted(perm.rbegin(), perm.rend())) throw NotReducedWord("word does not multiply to the longest element");
}

std::vector<TorusElement> root_vectors(const GeneratorTable& table, const std::vector<int>& word) {
  std::vector<TorusElement> roots;
  Evaluation phi = identity_evaluation(table);
  for (int w : word) {
    roots.push_back(phi.b.at(w - 1));
    phi = twist(phi, w);
  }
  return roots;
}

namespace {

TorusElement pbw_value(const SeedPtr& seed, const std::vector<TorusElement>& roots, const std::vector<int>& exponents) {
  TorusElement value = TorusElement::constant(seed, 1);
  for (std::size_t t = 0; t < roots.size(); ++t) {
    if (exponents[t] < 0) throw std::invalid_argument("PBW exponents must be nonnegative");
    if (exponents[t] > 0) value = value * power(roots[t], exponents[t]);
  }
  return value;
}

std::string vec_str(const std::vector<int>& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t t = 0; t < a.size(); ++t) os << (t ? "," : "") << a[t];
  os << ")";
  return os.str();
}

}  // namespace

PBWElement pbw_element(const GeneratorTable& table, const std::vector<int>& word, const std::vector<int>& exponents) {
  require_reduced_word(table.n, word);
  if (exponents.size() != word.size()) throw std::invalid_argument("one exponent per letter of the word");
  return {word, exponents, pbw_value(table.seed, root_vectors(table, word), exponents)};
}

std::vector<std::vector<int>> exponent_vectors(int length, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(length, 0);
  std::function<void(int, int)> fill = [&](int pos, int left) {
    if (pos == length) {
      out.push_back(a);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      a[pos] = e;
      fill(pos + 1, left - e);
    }
    a[pos] = 0;
  };
  fill(0, max_degree);
  return out;
}

Report verify_pbw(const GeneratorTable& table, int max_degree) {
  const int n = table.n;
  const auto word = standard_reduced_word(n);
  const auto roots = root_vectors(table, word);
  Report report{"pbw", n, {}};
  auto& out = report.results;

  // root vectors lead with :P_{k1,0} P_{k1+1,1} ... P_{k2,k2-k1}:, one for each k1 <= k2
  std::set<Exponent> expected_roots, root_leads;
  for (int k1 = 1; k1 <= n; ++k1)
    for (int k2 = k1; k2 <= n; ++k2) {
      std::vector<std::pair<int, int>> factors;
      for (int row = k1; row <= k2; ++row)
        for (int k = 0; k <= row - k1; ++k) factors.emplace_back(table.sigma.x(row, k), 1);
      const TorusElement m = renormalized(table.seed, factors);
      expected_roots.insert(m.terms().begin()->first);
    }
  bool roots_renormalized = true;
  for (const auto& r : roots) {
    const auto [a, c] = leading_term(r);
    root_leads.insert(a);
    roots_renormalized = roots_renormalized && TorusElement::monomial(table.seed, a, c) == renormalize(TorusElement::monomial(table.seed, a, c));
  }
  out.push_back(holds("root leading terms", root_leads == expected_roots && roots_renormalized,
                      "root vector leading monomials differ from the row-prefix products"));

  const auto vectors = exponent_vectors(static_cast<int>(word.size()), max_degree);
  std::vector<Exponent> leads(vectors.size());
  auto per = run_parallel(vectors.size(), [&](std::size_t t) {
    const TorusElement value = pbw_value(table.seed, roots, vectors[t]);
    const std::string name = "B" + vec_str(vectors[t]);
    if (!value.is_integral()) return CheckResult{name, false, "non-integral coefficient", {}};
    try {
      const auto [a, c] = leading_term(value);
      leads[t] = a;
      // coefficient against the renormalized monomial :X^a: = q^{s/2} X^a; a unit of Z[q^{1/2},q^{-1/2}]
      // is required, half-integer powers are flagged
      const QScalar unit = c.shifted(-renormalization_shift(*table.seed, a));
      int twice = 0;
      CheckResult r = holds(name, unit.signed_q_power(twice) != 0, "leading coefficient " + unit.str());
      if (r.pass && twice % 2 != 0) r.note = "half-integer leading power " + unit.str();
      return r;
    } catch (const NoUniformLeadingTerm& e) {
      return CheckResult{name, false, e.what(), {}};
    }
  });
  for (auto& r : per) out.push_back(std::move(r));
  std::map<Exponent, std::size_t> seen;
  bool distinct = true;
  std::string clash;
  for (std::size_t t = 0; t < vectors.size(); ++t) {
    auto [it, fresh] = seen.emplace(leads[t], t);
    if (!fresh && distinct) {
      distinct = false;
      clash = vec_str(vectors[it->second]) + " and " + vec_str(vectors[t]);
    }
  }
  out.push_back(holds("distinct leading monomials", distinct, clash));
  return report;
}

Report integrality_audit(const std::vector<NamedElement>& elements) {
  Report report{"integrality", 0, {}};
  for (const auto& e : elements) report.results.push_back(holds(e.label, e.value.is_integral(), e.value.str()));
  return report;
}

std::vector<NamedElement> audit_set(const GeneratorTable& table, int max_degree) {
  const int n = table.n;
  std::vector<NamedElement> out;
  const auto gens = all_generators(n);
  const Evaluation id = identity_evaluation(table);
  for (const auto& g : gens) out.push_back({"iota(" + g.str() + ")", id(g)});
  for (int i = 1; i <= n; ++i) {
    const Evaluation once = twist(id, i);
    for (const auto& g : gens) out.push_back({word_str({i}) + "(" + g.str() + ")", once(g)});
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Evaluation twice = twist(once, j);
      for (const auto& g : gens) out.push_back({word_str({i, j}) + "(" + g.str() + ")", twice(g)});
    }
  }
  const auto word = standard_reduced_word(n);
  const auto roots = root_vectors(table, word);
  for (const auto& a : exponent_vectors(static_cast<int>(word.size()), max_degree))
    out.push_back({"B" + vec_str(a), pbw_value(table.seed, roots, a)});
  return out;
}

Report verify_laurent(const GeneratorTable& table) {
  const auto gens = all_generators(table.n);
  Report report{"laurent", table.n, {}};
  auto rows = run_parallel(gens.size(), [&](std::size_t t) {
    const Generator& g = gens[t];
    const TorusElement& f = g.kind == Generator::Kind::B ? table.b(g.index) : table.k(g.index);
    std::string bad;
    for (const auto& check : one_step_laurent_check(f))
      if (!check.laurent) bad += (bad.empty() ? "" : ",") + table.seed->name(check.vertex);
    return holds(g.str(), bad.empty(), "not Laurent after mutating at " + bad);
  });
  report.results = std::move(rows);
  return report;
}

}  // namespace iqc
