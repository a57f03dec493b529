#pragma once

#include <iqc/qtorus.hpp>

#include <string>
#include <vector>

namespace iqc {

struct NotLaurent : std::domain_error {
  NotLaurent(const std::string& what, int stage = -1) : std::domain_error(what), stage(stage) {}
  int stage;
};
struct BadIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ChartMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// numerator * denominator^{-1}
struct RightFraction {
  TorusElement numerator;
  TorusElement denominator;
  static RightFraction of(const TorusElement& f) { return {f, TorusElement::constant(f.seed_ptr(), 1)}; }
  const SeedPtr& seed_ptr() const { return numerator.seed_ptr(); }
  // Equality with an element of the torus: numerator == f * denominator.
  bool equals(const TorusElement& f) const { return numerator == f * denominator; }
};

// Image of f under the cluster mutation in direction k, expressed in the chart mu_k(f.seed()).
// Throws NotLaurent when the image is not a Laurent polynomial there.
TorusElement mutate_element(const TorusElement& f, int k);
TorusElement mutate_element(const TorusElement& f, int k, const SeedPtr& target);
RightFraction mutate_fraction(const RightFraction& f, int k, const SeedPtr& target);

struct LaurentCheck {
  int vertex;
  bool laurent;
};
std::vector<LaurentCheck> one_step_laurent_check(const TorusElement& f);

// A composite of mutations, vertex permutations and monomial maps, chained chart to chart.
class QuasiClusterMap {
 public:
  enum class Kind { Mutation, Permutation, Monomial };
  struct Atom {
    Kind kind;
    int vertex = -1;                  // Mutation
    std::vector<int> perm;            // Permutation: vertex v becomes perm[v]
    std::vector<TorusElement> images; // Monomial: images of the generators of the source chart
    SeedPtr source, target;
  };

  explicit QuasiClusterMap(SeedPtr source) : source_(source), target_(std::move(source)) {}

  QuasiClusterMap& mutation(int k);
  QuasiClusterMap& permutation(std::vector<int> perm);
  // images live over the given target; q-commutation of the current chart is checked.
  QuasiClusterMap& monomial(std::vector<TorusElement> images, const SeedPtr& target);
  QuasiClusterMap& then(const QuasiClusterMap& next);

  const SeedPtr& source() const { return source_; }
  const SeedPtr& target() const { return target_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  TorusElement apply(const TorusElement& f) const;
  RightFraction apply(const RightFraction& f) const;
  QuasiClusterMap inverse() const;

 private:
  SeedPtr source_, target_;
  std::vector<Atom> atoms_;
};

TorusElement apply_quasi_cluster(const QuasiClusterMap& map, const TorusElement& f);

// The quasi-cluster transformation realizing the i-th braid symmetry on the torus of Sigma_n.
QuasiClusterMap braid_cl(const SigmaQuiver& sigma, const SeedPtr& seed, int i);
// Rotation of Sigma_n descended from Sigma'_n, with X_0 sent to the inverse of :prod X:.
QuasiClusterMap coxeter_map(const SigmaQuiver& sigma, const SeedPtr& seed);

}  // namespace iqc
