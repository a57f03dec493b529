#pragma once

#include <iqc/mutation.hpp>

#include <string>
#include <vector>

namespace iqc {

struct NotReducedWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Images of the generators B_i, k_i of the universal iquantum group of type AI_n in the torus of Sigma_n.
// Row indices i run over 1..n and are stored at position i-1.
struct GeneratorTable {
  int n = 0;
  SigmaQuiver sigma;
  SeedPtr seed;
  std::vector<TorusElement> iota_b, iota_k, iota_k_inv;
  std::vector<std::vector<TorusElement>> prefix;  // prefix[i-1][k] = :X_{i,0} ... X_{i,k}:
  std::vector<std::vector<TorusElement>> w;       // w[i-1][k] = sum_{t<=k} q^t X_{i,0} ... X_{i,t}
  std::vector<TorusElement> central;              // :X_{i,0}^2 X_{i,1} ... X_{i,n}:

  const TorusElement& b(int i) const { return iota_b.at(i - 1); }
  const TorusElement& k(int i) const { return iota_k.at(i - 1); }
  TorusElement x(int i, int pos) const { return TorusElement::generator(seed, sigma.x(i, pos)); }
};

GeneratorTable build_generators(int n);

// Nested form X_{i,0}(1+qX_{i,1}(1+qX_{i,2}(...))) of iota(B_i), read off the element itself.
std::string render_b(const GeneratorTable& table, int i);
// -q^nX_{i,0}^2X_{i,1}...X_{i,n}, read off iota(k_i).
std::string render_k(const GeneratorTable& table, int i);

struct CheckResult {
  std::string label;
  bool pass = false;
  std::string witness;
  std::string note;
};

struct Report {
  std::string check;
  int n = 0;
  std::vector<CheckResult> results;
  bool pass() const;
  std::size_t failures() const;
  std::size_t notes() const;
};

// Upper bound on worker threads for the verifiers; 0 means hardware concurrency.
void set_thread_limit(int threads);
int thread_limit();

// A generator B_i (or k_i) of the iquantum group.
struct Generator {
  enum class Kind { B, K } kind;
  int index;
  std::string str() const;
};
std::vector<Generator> all_generators(int n);

// phi o T_w for a word w = (w_1, ..., w_r) meaning T_{w_1} ... T_{w_r}, with phi = iota.
// Holds the evaluated images of B_j, k_j and k_j^{-1}.
struct Evaluation {
  std::vector<TorusElement> b, k, k_inv;
  const TorusElement& operator()(const Generator& g) const {
    return g.kind == Generator::Kind::B ? b.at(g.index - 1) : k.at(g.index - 1);
  }
};

Evaluation identity_evaluation(const GeneratorTable& table);
// phi o T_i
Evaluation twist(const Evaluation& phi, int i);
Evaluation evaluate_word(const GeneratorTable& table, const std::vector<int>& word);
// iota(T_{w_1} ... T_{w_r}(g))
TorusElement braid_T(const GeneratorTable& table, const std::vector<int>& word, const Generator& g);

Report verify_relations(const GeneratorTable& table);
Report verify_theorem_braid(const GeneratorTable& table);
Report verify_braid_relations(const GeneratorTable& table);
Report verify_coxeter(const GeneratorTable& table);
Report verify_closed_forms(const GeneratorTable& table);
Report verify_central_reduction(const GeneratorTable& table);
// One-step Laurent check of every generator image at every unfrozen vertex.
Report verify_laurent(const GeneratorTable& table);

std::vector<int> standard_reduced_word(int n);
// Throws NotReducedWord unless word is a reduced expression of the longest element of S_{n+1}.
void require_reduced_word(int n, const std::vector<int>& word);

struct PBWElement {
  std::vector<int> word;
  std::vector<int> exponents;
  TorusElement value;
};

// Root vectors iota(T_{w_1} ... T_{w_{t-1}}(B_{w_t})) for t = 1..r.
std::vector<TorusElement> root_vectors(const GeneratorTable& table, const std::vector<int>& word);
PBWElement pbw_element(const GeneratorTable& table, const std::vector<int>& word, const std::vector<int>& exponents);

// All exponent vectors of the given length with entries summing to at most max_degree.
std::vector<std::vector<int>> exponent_vectors(int length, int max_degree);
Report verify_pbw(const GeneratorTable& table, int max_degree);

struct NamedElement {
  std::string label;
  TorusElement value;
};
Report integrality_audit(const std::vector<NamedElement>& elements);
// Generator images, their braid images under every T_i and T_iT_j, and PBW values up to max_degree.
std::vector<NamedElement> audit_set(const GeneratorTable& table, int max_degree);

// Quotient by C_i - 1 for every i: the image in the subtorus with no X_{i,n}.
TorusElement reduce_central(const GeneratorTable& table, const TorusElement& f);

}  // namespace iqc
