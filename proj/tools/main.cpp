#include <iqc/coproduct.hpp>
#include <iqc/iqg.hpp>
#include <iqc/rankone.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "expression.hpp"
#include "quiver_json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Sink {
 public:
  explicit Sink(bool pretty) : pretty_(pretty) {}

  void report(const iqc::Report& r, json params, double elapsed_ms) {
    for (const auto& res : r.results) {
      if (pretty_) {
        std::cout << (res.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(18) << r.check << " n=" << std::setw(3)
                  << r.n << res.label;
        if (!res.witness.empty()) std::cout << "  [" << res.witness << "]";
        if (!res.note.empty()) std::cout << "  (" << res.note << ")";
        std::cout << '\n';
        continue;
      }
      json line{{"check", r.check}, {"n", r.n}, {"label", res.label}, {"pass", res.pass}};
      if (!res.witness.empty()) line["witness"] = res.witness;
      if (!res.note.empty()) line["note"] = res.note;
      std::cout << line.dump() << '\n';
    }
    const bool pass = r.pass();
    ok_ = ok_ && pass;
    if (pretty_) {
      std::cout << "== " << r.check << " n=" << r.n << ": " << (pass ? "pass" : "FAIL") << ", " << r.results.size()
                << " checks, " << r.failures() << " failed, " << r.notes() << " flagged, " << std::fixed
                << std::setprecision(1) << elapsed_ms << " ms\n";
      return;
    }
    json summary{{"check", r.check}, {"n", r.n}, {"params", std::move(params)}, {"pass", pass},
                 {"results", r.results.size()}, {"failures", r.failures()}, {"notes", r.notes()}};
    for (const auto& res : r.results)
      if (!res.pass) {
        summary["witness"] = res.label + ": " + res.witness;
        break;
      }
    summary["elapsed_ms"] = elapsed_ms;
    std::cout << summary.dump() << '\n';
  }

  void value(const json& line) {
    if (pretty_) {
      for (const auto& [key, v] : line.items()) std::cout << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      std::cout << '\n';
    } else {
      std::cout << line.dump() << '\n';
    }
  }

  void fail() { ok_ = false; }
  bool ok() const { return ok_; }

 private:
  bool pretty_;
  bool ok_ = true;
};

template <typename F>
void timed(Sink& sink, json params, F&& run) {
  const auto start = std::chrono::steady_clock::now();
  iqc::Report r = run();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  sink.report(r, std::move(params), elapsed.count());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw UsageError("not an integer: " + text);
    return value;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: " + text);
  }
}

struct Rank {
  int n = 2;
  bool unsafe = false;
  int checked() const {
    if (n < 1) throw UsageError("--n must be at least 1");
    if (n > 5 && !unsafe) throw UsageError("--n above 5 needs --unsafe-n");
    return n;
  }
};

void add_rank(CLI::App* cmd, Rank& rank) {
  cmd->add_option("--n", rank.n, "rank of the iquantum group")->required();
  cmd->add_flag("--unsafe-n", rank.unsafe, "allow --n above 5");
}

iqc::Seed named_quiver(const std::string& name, int n) {
  if (name == "sigma") return iqc::build_sigma(n).seed;
  if (name == "sigma-prime") return iqc::build_sigma_prime(n).seed;
  if (name == "triangle" || name == "sigma-tilde") return iqc::build_fg_triangle(n).seed;
  if (name == "dn") return iqc::build_dn(n).seed;
  if (name == "zn") return iqc::build_zn(n).seed;
  throw UsageError("unknown quiver " + name + " (sigma, sigma-prime, triangle, dn, zn)");
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(1) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int seed_vertex(const iqc::Seed& seed, const std::string& label) {
  auto v = seed.find(label);
  if (!v) throw UsageError("unknown vertex " + label);
  return *v;
}

struct Suite {
  std::string name;
  std::function<void(Sink&)> run;
};

// The default suite, in check-name order.
std::vector<Suite> default_suite() {
  auto per_rank = [](auto verify, int lo, int hi) {
    return [verify, lo, hi](Sink& sink) {
      for (int n = lo; n <= hi; ++n) {
        timed(sink, json::object(), [&] { return verify(iqc::build_generators(n)); });
      }
    };
  };
  return {
      {"braid", per_rank(iqc::verify_theorem_braid, 1, 3)},
      {"braid-relations", per_rank(iqc::verify_braid_relations, 2, 3)},
      {"central-reduction", per_rank(iqc::verify_central_reduction, 1, 3)},
      {"closed-forms", per_rank(iqc::verify_closed_forms, 3, 3)},
      {"coideal",
       [](Sink& sink) {
         for (int n = 1; n <= 2; ++n) timed(sink, json::object(), [&] { return iqc::verify_coideal(iqc::build_coideal(n)); });
       }},
      {"coxeter", per_rank(iqc::verify_coxeter, 1, 3)},
      {"dilog", [](Sink& sink) { timed(sink, json{{"order", 12}}, [] { return iqc::verify_klog(12); }); }},
      {"double-relations",
       [](Sink& sink) {
         for (int n = 1; n <= 2; ++n) timed(sink, json::object(), [&] { return iqc::verify_double_relations(iqc::build_t(n)); });
       }},
      {"integrality",
       [](Sink& sink) {
         timed(sink, json{{"max_degree", 1}}, [] {
           auto table = iqc::build_generators(2);
           auto report = iqc::integrality_audit(iqc::audit_set(table, 1));
           report.n = 2;
           return report;
         });
       }},
      {"laurent", per_rank(iqc::verify_laurent, 1, 3)},
      {"pbw",
       [](Sink& sink) {
         timed(sink, json{{"max_degree", 4}}, [] { return iqc::verify_pbw(iqc::build_generators(2), 4); });
       }},
      {"relations", per_rank(iqc::verify_relations, 1, 3)},
  };
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("IQC_THREADS")) {
    try {
      iqc::set_thread_limit(std::stoi(threads));
    } catch (const std::logic_error&) {
      std::cerr << "IQC_THREADS must be an integer\n";
      return 2;
    }
  }

  CLI::App app{"Exact verification of cluster realisations of iquantum groups of type AI"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable table instead of JSON lines");
  Sink* sink_ptr = nullptr;
  std::function<void()> action;

  Rank rank;
  int max_degree = 4;
  int order = 12;
  std::string name, in_path, out_path, seq, elem, file, expr, quiver = "sigma:2";

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  auto verify_rank = [&](const std::string& cmd, const std::string& help,
                         std::function<iqc::Report(const iqc::GeneratorTable&)> check) {
    auto* sub = verify->add_subcommand(cmd, help);
    add_rank(sub, rank);
    sub->callback([&, check] {
      action = [&, check] {
        const int n = rank.checked();
        timed(*sink_ptr, json::object(), [&] { return check(iqc::build_generators(n)); });
      };
    });
  };
  verify_rank("relations", "defining relations of the embedding", iqc::verify_relations);
  verify_rank("braid", "mutation composites against the braid symmetries", iqc::verify_theorem_braid);
  verify_rank("braid-relations", "braid relations on generator images", iqc::verify_braid_relations);
  verify_rank("coxeter", "Coxeter element and rotation", iqc::verify_coxeter);
  verify_rank("closed-forms", "closed forms of the braid symmetries on cluster variables", iqc::verify_closed_forms);
  verify_rank("central-reduction", "relations after setting the central monomials to 1", iqc::verify_central_reduction);
  verify_rank("laurent", "one-step Laurent check of the generator images", iqc::verify_laurent);

  auto* pbw = verify->add_subcommand("pbw", "PBW leading terms and integrality");
  add_rank(pbw, rank);
  pbw->add_option("--max-degree", max_degree, "bound on the total exponent")->check(CLI::Range(0, 12));
  pbw->callback([&] {
    action = [&] {
      const int n = rank.checked();
      timed(*sink_ptr, json{{"max_degree", max_degree}},
            [&] { return iqc::verify_pbw(iqc::build_generators(n), max_degree); });
    };
  });

  auto* coideal = verify->add_subcommand("coideal", "coproduct as a path sum on the glued quiver");
  add_rank(coideal, rank);
  coideal->callback([&] {
    action = [&] {
      const int n = rank.checked();
      timed(*sink_ptr, json::object(), [&] { return iqc::verify_coideal(iqc::build_coideal(n)); });
    };
  });

  auto* doubled = verify->add_subcommand("double-relations", "relations of the Drinfeld double embedding");
  add_rank(doubled, rank);
  doubled->callback([&] {
    action = [&] {
      const int n = rank.checked();
      timed(*sink_ptr, json::object(), [&] { return iqc::verify_double_relations(iqc::build_t(n)); });
    };
  });

  auto* dilog = verify->add_subcommand("dilog", "rank-one quasi K-matrix against the quantum dilogarithm");
  dilog->add_option("--order", order, "series order N")->check(CLI::Range(1, 40));
  dilog->callback([&] {
    action = [&] { timed(*sink_ptr, json{{"order", order}}, [&] { return iqc::verify_klog(order); }); };
  });

  auto* all = verify->add_subcommand("all", "the default suite at desk-scale ranks");
  all->callback([&] {
    action = [&] {
      for (const auto& suite : default_suite()) suite.run(*sink_ptr);
    };
  });

  auto* audit = app.add_subcommand("audit", "coefficient audits");
  audit->require_subcommand(1);
  auto* integrality = audit->add_subcommand("integrality", "all coefficients lie in Z[q^{1/2}, q^{-1/2}]");
  add_rank(integrality, rank);
  int audit_degree = 1;
  integrality->add_option("--max-degree", audit_degree, "PBW degree bound")->check(CLI::Range(0, 8));
  integrality->callback([&] {
    action = [&] {
      const int n = rank.checked();
      timed(*sink_ptr, json{{"max_degree", audit_degree}}, [&] {
        auto table = iqc::build_generators(n);
        auto report = iqc::integrality_audit(iqc::audit_set(table, audit_degree));
        report.n = n;
        return report;
      });
    };
  });

  auto* qcmd = app.add_subcommand("quiver", "build or mutate quivers");
  qcmd->require_subcommand(1);
  auto* build = qcmd->add_subcommand("build", "write a named quiver as JSON");
  build->add_option("--name", name, "sigma, sigma-prime, triangle, dn or zn")->required();
  add_rank(build, rank);
  build->add_option("--out", out_path, "output file (default stdout)");
  build->callback([&] {
    action = [&] {
      const iqc::Seed seed = named_quiver(name, rank.checked());
      write_json(iqc::cli::seed_to_json(seed), out_path);
      if (!out_path.empty() && out_path != "-")
        sink_ptr->value(json{{"command", "quiver build"}, {"name", name}, {"n", rank.n}, {"vertices", seed.size()},
                             {"frozen", seed.size() - static_cast<int>(seed.unfrozen().size())}, {"out", out_path}});
    };
  });

  auto* qmutate = qcmd->add_subcommand("mutate", "mutate a JSON quiver along vertex labels");
  qmutate->add_option("--in", in_path, "input quiver JSON")->required();
  qmutate->add_option("--seq", seq, "comma-separated vertex labels")->required();
  qmutate->add_option("--out", out_path, "output file (default stdout)");
  qmutate->callback([&] {
    action = [&] {
      iqc::Seed seed;
      try {
        seed = iqc::cli::seed_from_json(read_json_file(in_path));
      } catch (const std::exception& e) {
        throw UsageError(in_path + ": " + e.what());
      }
      for (const auto& label : split(seq, ',')) {
        try {
          seed = seed.mutate(seed_vertex(seed, label));
        } catch (const iqc::FrozenVertex& e) {
          throw UsageError(e.what());
        }
      }
      write_json(iqc::cli::seed_to_json(seed), out_path);
    };
  });

  auto* torus = app.add_subcommand("torus", "evaluate expressions in the quantum torus of Sigma_n");
  torus->require_subcommand(1);
  auto* eval = torus->add_subcommand("eval", "evaluate one expression per line");
  add_rank(eval, rank);
  eval->add_option("--file", file, "expression file, one per line, '#' starts a comment");
  eval->add_option("--expr", expr, "a single expression");
  eval->callback([&] {
    action = [&] {
      const int n = rank.checked();
      std::vector<std::string> lines;
      if (!expr.empty()) lines.push_back(expr);
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot read " + file);
        for (std::string line; std::getline(in, line);) {
          line = line.substr(0, line.find('#'));
          if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
        }
      }
      if (lines.empty()) throw UsageError("give --expr or --file");
      const auto table = iqc::build_generators(n);
      for (const auto& line : lines) {
        try {
          const auto value = iqc::cli::parse_expression(table, line);
          sink_ptr->value(json{{"command", "torus eval"}, {"n", n}, {"expr", line}, {"value", value.str()},
                               {"terms", value.size()}, {"integral", value.is_integral()}});
        } catch (const iqc::cli::ParseError& e) {
          throw UsageError(line + ": " + e.what());
        }
      }
    };
  });

  auto* mutate = app.add_subcommand("mutate", "mutate a generator image along a vertex sequence");
  mutate->add_option("--quiver", quiver, "sigma:N")->required();
  mutate->add_option("--elem", elem, "expression, e.g. iota_B(2)")->required();
  mutate->add_option("--seq", seq, "comma-separated row:pos addresses or vertex labels")->required();
  mutate->add_flag("--unsafe-n", rank.unsafe, "allow N above 5");
  mutate->callback([&] {
    action = [&] {
      const auto parts = split(quiver, ':');
      if (parts.size() != 2 || parts[0] != "sigma") throw UsageError("--quiver must be sigma:N");
      rank.n = to_int(parts[1]);
      const auto table = iqc::build_generators(rank.checked());
      iqc::TorusElement f(table.seed);
      try {
        f = iqc::cli::parse_expression(table, elem);
      } catch (const iqc::cli::ParseError& e) {
        throw UsageError(elem + ": " + e.what());
      }
      json steps = json::array();
      bool pass = true;
      for (const auto& address : split(seq, ',')) {
        const auto rc = split(address, ':');
        int v;
        if (rc.size() == 2) {
          const int row = to_int(rc[0]), pos = to_int(rc[1]);
          if (row < 1 || row > table.n || pos < 0 || pos > table.n) throw UsageError("address out of range: " + address);
          v = table.sigma.x(row, pos);
        } else {
          v = seed_vertex(f.seed(), address);
        }
        if (f.seed().frozen(v)) throw UsageError("cannot mutate at frozen vertex " + address);
        json step{{"vertex", address}, {"label", f.seed().name(v)}};
        try {
          f = iqc::mutate_element(f, v);
          step["laurent"] = true;
          step["terms"] = f.size();
        } catch (const iqc::NotLaurent& e) {
          step["laurent"] = false;
          step["witness"] = e.what();
          pass = false;
        }
        steps.push_back(std::move(step));
        if (!pass) break;
      }
      json out{{"command", "mutate"}, {"quiver", quiver}, {"elem", elem}, {"pass", pass}, {"steps", std::move(steps)}};
      if (pass) out["value"] = f.str();
      sink_ptr->value(out);
      if (!pass) sink_ptr->fail();
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  Sink sink(pretty);
  sink_ptr = &sink;
  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const iqc::BadRank& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return sink.ok() ? 0 : 1;
}
