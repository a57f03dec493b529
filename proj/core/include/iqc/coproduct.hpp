#pragma once

#include <iqc/iqg.hpp>

#include <string>
#include <vector>

namespace iqc {

// Images of E_i, F_i, K_i, K'_i of the Drinfeld double in the torus of D_n, indexed from 1.
struct DoubleTable {
  int n = 0;
  DQuiver d;
  SeedPtr seed;
  std::vector<TorusElement> e, f, k, k_prime;

  const TorusElement& E(int i) const { return e.at(i - 1); }
  const TorusElement& F(int i) const { return f.at(i - 1); }
  const TorusElement& K(int i) const { return k.at(i - 1); }
  const TorusElement& Kp(int i) const { return k_prime.at(i - 1); }
};

// E_i is the sum of the renormalized proper prefixes of the walk from V_i and K_i the whole walk;
// F_{n+1-j}, K'_{n+1-j} likewise along the rotated walk from Lambda_j.
DoubleTable build_t(int n);

// Loops L_i in Z_n as vertex lists Z_{i,1}, ..., Z_{i,p} with p = 3n+4.
std::vector<std::vector<int>> coideal_paths(const ZQuiver& z);

// Defining relations of the Drinfeld double on the images.
Report verify_double_relations(const DoubleTable& table);

// Both sides of the coideal formulas in T_{Sigma_n} (x) T_{D_n}.
struct CoidealContext {
  GeneratorTable iota;
  DoubleTable t;
  ZQuiver z;
  SeedPtr z_seed;
  SeedPtr target;
};
CoidealContext build_coideal(int n);

// B_i (x) K'_i + 1 (x) F_i - q^{-1} k_i (x) E_i K'_i, the coproduct of B_i = F_i - q^{-1} E_i K'_i.
TorusElement delta_b(const CoidealContext& c, int i);
// k_i (x) K_i K'_i
TorusElement delta_k(const CoidealContext& c, int i);
// Path sums over L_i pushed into the tensor torus.
TorusElement path_sum_b(const CoidealContext& c, int i);
TorusElement path_sum_k(const CoidealContext& c, int i);

Report verify_coideal(const CoidealContext& c);

}  // namespace iqc
