#include <iqc/coproduct.hpp>
#include <iqc/iqg.hpp>
#include <iqc/rankone.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates reports so a second run can be compared byte for byte.
class Run {
 public:
  const iqc::Report& keep(iqc::Report r) {
    reports_.push_back(std::move(r));
    return reports_.back();
  }

  std::string serialized() const {
    std::ostringstream out;
    for (const auto& r : reports_) {
      out << r.check << ' ' << r.n << '\n';
      for (const auto& res : r.results)
        out << "  " << res.label << ' ' << res.pass << ' ' << res.witness << ' ' << res.note << '\n';
    }
    return out.str();
  }

 private:
  std::vector<iqc::Report> reports_;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string first_failure(const iqc::Report& r) {
  for (const auto& res : r.results)
    if (!res.pass) return r.check + " n=" + std::to_string(r.n) + " " + res.label + ": " + res.witness;
  return {};
}

// Folds a report into an outcome; returns the number of checks.
std::size_t absorb(Outcome& o, const iqc::Report& r) {
  if (!r.pass() && o.pass) o.detail = first_failure(r);
  o.pass = o.pass && r.pass() && !r.results.empty();
  return r.results.size();
}

Outcome embedding(Run&) {
  Outcome o;
  const auto start = Clock::now();
  struct Printed {
    int n, i;
    const char *b, *k;
  };
  const std::vector<Printed> printed = {
      {1, 1, "X_2(1+X_1)", "-X_2^2X_1"},
      {2, 1, "X_5(1+qX_1(1+qX_3))", "-q^2X_5^2X_1X_3"},
      {2, 2, "X_4(1+qX_3(1+qX_2))", "-q^2X_4^2X_3X_2"},
      {3, 1, "X_9(1+qX_1(1+qX_6(1+qX_4)))", "-q^3X_9^2X_1X_6X_4"},
      {3, 2, "X_5(1+qX_4(1+qX_2(1+qX_7)))", "-q^3X_5^2X_4X_2X_7"},
      {3, 3, "X_8(1+qX_7(1+qX_6(1+qX_3)))", "-q^3X_8^2X_7X_6X_3"},
  };
  for (const auto& p : printed) {
    const auto table = iqc::build_generators(p.n);
    const std::string b = iqc::render_b(table, p.i), k = iqc::render_k(table, p.i);
    if (b != p.b || k != p.k) {
      o.pass = false;
      o.detail = "n=" + std::to_string(p.n) + " i=" + std::to_string(p.i) + " rendered " + b + ", " + k;
      return o;
    }
  }
  const double elapsed = seconds_since(start);
  o.pass = elapsed < 1.0;
  o.detail = "12 printed images match; " + std::to_string(elapsed) + " s";
  return o;
}

Outcome relations(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  double n5 = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto start = Clock::now();
    checks += absorb(o, run.keep(iqc::verify_relations(iqc::build_generators(n))));
    if (n == 5) n5 = seconds_since(start);
  }
  if (n5 >= 60) o.pass = false;
  if (o.detail.empty()) o.detail = std::to_string(checks) + " relations, n = 1..5; n=5 in " + std::to_string(n5) + " s";
  return o;
}

Outcome theorem_braid(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  double n4 = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto start = Clock::now();
    checks += absorb(o, run.keep(iqc::verify_theorem_braid(iqc::build_generators(n))));
    if (n == 4) n4 = seconds_since(start);
  }
  if (n4 >= 120) o.pass = false;
  if (o.detail.empty()) o.detail = std::to_string(checks) + " generator images, n = 1..4; n=4 in " + std::to_string(n4) + " s";
  return o;
}

Outcome closed_forms(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 3; n <= 4; ++n) checks += absorb(o, run.keep(iqc::verify_closed_forms(iqc::build_generators(n))));
  if (o.detail.empty()) o.detail = std::to_string(checks) + " cluster-variable images, n = 3, 4";
  return o;
}

Outcome braid_relations(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 2; n <= 4; ++n) checks += absorb(o, run.keep(iqc::verify_braid_relations(iqc::build_generators(n))));
  if (o.detail.empty()) o.detail = std::to_string(checks) + " relations on generators, n = 2..4";
  return o;
}

Outcome coxeter(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 1; n <= 4; ++n) checks += absorb(o, run.keep(iqc::verify_coxeter(iqc::build_generators(n))));
  for (int n = 1; n <= 6; ++n) {
    const auto sp = iqc::build_sigma_prime(n);
    const auto perm = iqc::coxeter_permutation(sp);
    const int order = iqc::permutation_order(perm);
    if (!iqc::is_automorphism(sp.seed, perm) || order != n + 1) {
      if (o.pass) o.detail = "rotation at n=" + std::to_string(n) + " has order " + std::to_string(order);
      o.pass = false;
    }
  }
  if (o.detail.empty())
    o.detail = std::to_string(checks) + " checks, n = 1..4; rotation is a quiver automorphism of order n+1, n = 1..6";
  return o;
}

Outcome coideal(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 1; n <= 3; ++n) checks += absorb(o, run.keep(iqc::verify_coideal(iqc::build_coideal(n))));
  for (int n = 1; n <= 5; ++n)
    for (const auto& path : iqc::coideal_paths(iqc::build_zn(n)))
      if (path.size() != static_cast<std::size_t>(3 * n + 4)) {
        o.pass = false;
        o.detail = "path of length " + std::to_string(path.size()) + " at n=" + std::to_string(n);
      }
  const auto z = iqc::build_zn(2);
  const std::vector<std::vector<std::string>> printed = {{"1", "2", "3", "12", "11", "3", "7", "10", "5", "1"},
                                                         {"4", "5", "6", "7", "8", "11", "13", "8", "9", "4"}};
  for (int i = 0; i < 2; ++i) {
    std::vector<std::string> names;
    for (int v : z.paths[i]) names.push_back(z.seed.name(v));
    if (names != printed[i]) {
      o.pass = false;
      o.detail = "n=2 loop " + std::to_string(i + 1) + " differs from the printed vertex list";
    }
  }
  if (o.detail.empty())
    o.detail = std::to_string(checks) + " coproduct images, n = 1..3; p = 3n+4 for n <= 5; n=2 loops match";
  return o;
}

Outcome laurent(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 1; n <= 4; ++n) checks += absorb(o, run.keep(iqc::verify_laurent(iqc::build_generators(n))));
  const auto table = iqc::build_generators(2);
  const auto witness = table.x(1, 1) + iqc::TorusElement::constant(table.seed, 1);
  bool rejected = false;
  for (const auto& c : iqc::one_step_laurent_check(witness)) rejected = rejected || !c.laurent;
  if (!rejected) {
    o.pass = false;
    o.detail = "X_{1,1} + 1 passed the one-step check";
  }
  if (o.detail.empty()) o.detail = std::to_string(checks) + " generator images, n = 1..4; X_{1,1} + 1 rejected";
  return o;
}

Outcome pbw(Run& run) {
  Outcome o;
  std::size_t checks = 0, flagged = 0;
  for (int n = 2; n <= 3; ++n) {
    const auto& r = run.keep(iqc::verify_pbw(iqc::build_generators(n), 4));
    checks += absorb(o, r);
    flagged += r.notes();
  }
  if (o.detail.empty())
    o.detail = std::to_string(checks) + " checks, n = 2, 3, degree <= 4: distinct leading monomials, integral coefficients, "
               "leading coefficients are units +-q^{k/2}; " + std::to_string(flagged) +
               " are half-integer powers (flagged, not in +-q^Z)";
  return o;
}

Outcome quasi_k(Run& run) {
  Outcome o;
  const auto start = Clock::now();
  const std::size_t checks = absorb(o, run.keep(iqc::verify_klog(12)));
  const double elapsed = seconds_since(start);
  if (elapsed >= 10) o.pass = false;
  if (o.detail.empty()) o.detail = std::to_string(checks) + " checks at N=12 in " + std::to_string(elapsed) + " s";
  return o;
}

Outcome central(Run& run) {
  Outcome o;
  std::size_t checks = 0;
  for (int n = 2; n <= 3; ++n) checks += absorb(o, run.keep(iqc::verify_central_reduction(iqc::build_generators(n))));
  if (o.detail.empty()) o.detail = std::to_string(checks) + " reduced relations, n = 2, 3";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome(Run&)> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "embedding examples", embedding},
      {2, "relation suite", relations},
      {3, "braid symmetries as mutation composites", theorem_braid},
      {4, "closed forms of the braid symmetries", closed_forms},
      {5, "braid relations", braid_relations},
      {6, "Coxeter cyclicity and rotation", coxeter},
      {7, "coideal as path sums", coideal},
      {8, "Laurent phenomenon", laurent},
      {9, "PBW leading terms", pbw},
      {10, "quasi K-matrix", quasi_k},
      {11, "central reduction", central},
  };
  return list;
}

}  // namespace

int main() {
  bool all = true;
  auto print = [&](int number, const char* title, const Outcome& o) {
    all = all && o.pass;
    std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " - " << o.detail
              << std::endl;
  };

  iqc::set_thread_limit(4);
  Run first;
  for (const auto& c : criteria()) {
    Outcome o;
    try {
      o = c.check(first);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    print(c.number, c.title, o);
  }

  iqc::set_thread_limit(1);
  Run second;
  Outcome determinism;
  try {
    for (const auto& c : criteria()) c.check(second);
    determinism.pass = first.serialized() == second.serialized();
    determinism.detail = determinism.pass ? "second run with 1 worker gives identical reports"
                                          : "reports differ between 4 workers and 1 worker";
  } catch (const std::exception& e) {
    determinism = {false, std::string("exception: ") + e.what()};
  }
  print(12, "determinism", determinism);
  return all ? 0 : 1;
}
