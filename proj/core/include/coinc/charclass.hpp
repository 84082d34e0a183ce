#pragma once

// Leading characteristic classes of local coincident tuples.
//
// s_{q,d} (q = 2, 4; mod 2) is the coefficient of the top class of the
// configuration-space factor in the Euler class of A_q tensored with the
// split bundle, rewritten in the Stiefel-Whitney classes w_j. For an odd
// prime p, alpha_{p,i} = sigma_i(t^{p-1}) is rewritten in the Pontryagin
// classes p_{4j} = sigma_j(t^2).

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "coinc/gpoly.hpp"

namespace coinc::charclass {

/// Raised when two routes or two stabilization sizes disagree. Signals a bug,
/// never a valid result.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Z_2[w_1..w_n], deg w_j = j.
Ring sw_ring(int n);
/// Z_p[p_4, p_8, .., p_{4k}], deg p_{4j} = 4j.
Ring pontryagin_ring(std::uint32_t p, int k);

/// Euler product with the configuration-space generators capped at
/// exponent mu-1. `overflow` (when requested) holds the discarded terms in
/// the uncapped ring, so capped + overflow is the full expansion.
struct EulerProduct {
  GradedPoly capped;
  std::optional<GradedPoly> overflow;
};

/// prod_{i<=nu} (t_i + u) over Z_2[u, t_1..t_nu]/(u^mu). Requires
/// nu >= mu >= 2.
EulerProduct euler_product_q2(int nu, int mu, bool keep_overflow = false);

/// prod_{i<=nu} (t_i^2 + (a+c) t_i + b)(t_i + c) over
/// Z_2[b, c, t_1..t_nu]/(b^mu, c^mu), the D_8 presentation with a = 0. With
/// `with_a` the generator a is kept subject to ac = 0.
EulerProduct euler_product_q4(int nu, int mu, bool keep_overflow = false, bool with_a = false);

struct SqdResult {
  int q = 2;
  int d = 0;
  GradedPoly formula;  // in sw_ring((q-1)(d+1))
  int nu = 0;
  int mu = 0;
};

/// Default stabilization size: mu = (q-1)(d+1) + 2, nu = mu + d.
int default_mu(int q, int d);

/// s_{q,d} at the default size, verified equal at (nu+1, mu+1).
SqdResult compute_s(int q, int d);

/// s_{q,d} at an explicit size. Only the coefficients of the Euler product at
/// partition-shaped root monomials are formed.
GradedPoly compute_s_at(int q, int d, int nu, int mu, bool with_a = false);

/// Same class through the full Euler product expansion, coefficient_of and
/// the sparse elementary rewrite. Exponential in nu; for cross-checks.
GradedPoly compute_s_expanded(int q, int d, int nu, int mu, bool with_a = false);

/// Set w_{d+2} = w_{d+3} = ... = 0.
GradedPoly leading_term_reduce(const SqdResult& r);
GradedPoly leading_term_reduce(const GradedPoly& formula, int d);

/// prod_{i<=k} (u^2 - e_i^{p-1}), times u when nu is odd; k = floor(nu/2),
/// over Z_p[u, e_1..e_k] with deg u = p-1, deg e_i = 2.
GradedPoly euler_product_modp(std::uint32_t p, int nu);

struct AlphaResult {
  std::uint32_t p = 3;
  int i = 0;
  int k = 0;
  GradedPoly formula;  // in pontryagin_ring(p, max(1, i(p-1)/2))
};

/// Smallest k for which alpha_{p,i} is stable.
int alpha_stable_k(std::uint32_t p, int i);

/// alpha_{p,i} in the Pontryagin classes, from k two-plane roots. When k is
/// in the stable range the result is re-derived at k+1 and compared.
AlphaResult alpha_class(std::uint32_t p, int i, int k);
AlphaResult alpha_class(std::uint32_t p, int i);

}  // namespace coinc::charclass
