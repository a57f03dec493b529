#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace iqc {

struct FrozenVertex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonFrozenGlue : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct OverlappingSubsets : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidSeed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quiver data (I, I_0, eps). Weights are stored doubled: weight2(i, j) = 2 eps_ij.
class Seed {
 public:
  Seed() = default;
  Seed(std::vector<std::string> names, std::vector<bool> frozen, std::vector<int> weight2);
  static Seed from_arrows(std::vector<std::string> names, std::vector<bool> frozen,
                          const std::vector<std::tuple<int, int, int>>& arrows2);

  int size() const { return static_cast<int>(names_.size()); }
  int w2(int i, int j) const { return weight2_[i * size() + j]; }
  bool frozen(int v) const { return frozen_[v]; }
  const std::vector<bool>& frozen_mask() const { return frozen_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  std::vector<int> unfrozen() const;
  std::uint64_t fingerprint() const;

  Seed mutate(int k) const;
  Seed permuted(const std::vector<int>& perm) const;  // vertex v of this seed becomes perm[v]
  Seed with_frozen(std::vector<bool> frozen) const;
  Seed with_names(std::vector<std::string> names) const;
  Seed with_weight(int i, int j, int w2) const;  // sets w2(i,j) = w2, w2(j,i) = -w2

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  void validate() const;
  std::vector<std::string> names_;
  std::vector<bool> frozen_;
  std::vector<int> weight2_;
};

// Result of gluing: parts[v] records which vertex of each input seed v came from (-1 if none).
struct Amalgam {
  Seed seed;
  std::vector<std::pair<int, int>> parts;
  std::vector<int> from_first;
  std::vector<int> from_second;
};

Amalgam amalgamate(const Seed& a, const Seed& b, const std::vector<std::pair<int, int>>& glue);

struct SelfAmalgam {
  Seed seed;
  std::vector<int> image;  // old vertex -> new vertex
};

SelfAmalgam self_amalgamate(const Seed& s, const std::vector<std::pair<int, int>>& glue);

// Triangle quiver for the n-triangulation. Vertex v sits at lattice point points[v];
// corners are A = (0,0), B = (n+1,n+1), C = (2n+2,0).
struct FgTriangle {
  int n = 0;
  Seed seed;
  std::vector<std::pair<int, int>> points;
  int at(int x, int y) const;
  int ab(int k) const { return at(n + 1 - k, n + 1 - k); }  // k-th from B on side AB
  int ca(int k) const { return at(2 * k, 0); }              // k-th from A on side CA
  int bc(int k) const { return at(n + 1 + k, n + 1 - k); }  // k-th from B on side BC
};

FgTriangle build_fg_triangle(int n);

// Sigma_n with its loop labels X_{i,k}, 1 <= i <= n, 0 <= k <= n.
struct SigmaQuiver {
  int n = 0;
  Seed seed;
  std::vector<std::vector<int>> loop;  // loop[i-1][k] = vertex of X_{i,k}
  int x(int i, int k) const { return loop[i - 1][k]; }
  std::optional<int> x0;  // the extra vertex of Sigma'_n
};

SigmaQuiver build_sigma(int n);
SigmaQuiver build_sigma_prime(int n);

// The double quiver D_n. walk_v[i-1] lists the vertices on the walk starting at the left
// frozen vertex i-th from the top; walk_lambda[i-1] is its rotation, starting at the right
// frozen vertex i-th from the bottom.
struct DQuiver {
  int n = 0;
  Seed seed;
  std::vector<std::vector<int>> walk_v;
  std::vector<std::vector<int>> walk_lambda;
  std::vector<std::pair<int, int>> parts;  // D vertex -> (first triangle vertex, second triangle vertex)
};

DQuiver build_dn(int n);

// Z_n = Sigma_n glued to D_n. parts[v] = (Sigma_n vertex or -1, D_n vertex or -1).
struct ZQuiver {
  int n = 0;
  Seed seed;
  SigmaQuiver sigma;
  DQuiver d;
  std::vector<std::pair<int, int>> parts;
  std::vector<int> from_sigma;
  std::vector<int> from_d;
  std::vector<std::vector<int>> paths;  // paths[i-1] = Z_{i,1}, ..., Z_{i,p}
};

ZQuiver build_zn(int n);

// Rotation of Sigma'_n: perm[v] = image vertex.
std::vector<int> coxeter_permutation(const SigmaQuiver& sigma_prime);

// Smallest m >= 1 with perm^m = id.
int permutation_order(const std::vector<int>& perm);
// perm preserves frozen flags and all weights.
bool is_automorphism(const Seed& s, const std::vector<int>& perm);

}  // namespace iqc
