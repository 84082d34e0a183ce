#pragma once

// Splitting-principle rewriting: symmetric polynomials in formal roots
// t_1..t_nu expressed in the elementary symmetric functions e_1..e_nu.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coinc/gpoly.hpp"

namespace coinc::symfun {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct FormalRoots {
  int count = 1;
  int root_degree = 1;  // 1 for Stiefel-Whitney roots, 2 for Euler roots of 2-planes
  std::string prefix = "t";
};

/// Z_p[t_1..t_nu], every root of degree root_degree.
Ring roots_ring(std::uint32_t p, const FormalRoots& roots);

/// Z_p[e_1..e_count] with deg e_j = j * root_degree. Generator j is named
/// prefix + (j * name_step), so ("w", 1) gives w1, w2, ... and ("p", 4) gives
/// p4, p8, ....
Ring elementary_ring(std::uint32_t p, int count, int root_degree, const std::string& prefix = "e",
                     int name_step = 1);

/// A symmetric polynomial in nvars roots stored by its coefficients on the
/// monomial symmetric functions m_lambda.
struct SymmetricPoly {
  std::uint32_t p = 2;
  int nvars = 1;
  std::map<Partition, Residue> coeffs;  // nonzero only
};

/// Monomial-basis form of S. Every generator of S's ring is treated as a
/// root. Throws std::invalid_argument if S is not symmetric or its ring has
/// relations.
SymmetricPoly to_monomial_basis(const GradedPoly& S);

/// Express S in the elementary generators of `elementary` (generator j-1 is
/// e_j). The ring must have at least S.nvars generators.
GradedPoly elementary_rewrite(const SymmetricPoly& S, const Ring& elementary);
GradedPoly elementary_rewrite(const GradedPoly& S, const Ring& elementary);

/// Substitute e_j = sigma_j(t_1..t_nu). Throws if E uses e_j with j > nu.
GradedPoly expand_elementary(const GradedPoly& E, const Ring& roots);

/// sigma_j(t) in the roots ring.
GradedPoly elementary_symmetric(const Ring& roots, int j);
/// m_lambda(t) in the roots ring (zero if lambda has more parts than roots).
GradedPoly monomial_symmetric(const Ring& roots, const Partition& lambda);

/// Schwartz-Zippel comparison of S (over roots) and E (over elementary
/// generators) at `trials` random points of Z_p^nu.
bool random_eval_check(const GradedPoly& S, const GradedPoly& E, int trials,
                       std::uint64_t seed = 0x5eed);

/// Partitions of n with at most max_parts parts, in decreasing lex order.
std::vector<Partition> partitions(int n, int max_parts);

/// Coefficient of m_kappa in prod_j e_{rho_j}, mod p: the number of 0-1
/// matrices with row sums rho and column sums kappa.
Residue elementary_product_coefficient(const Partition& rho, const Partition& kappa, std::uint32_t p);

}  // namespace coinc::symfun
