#pragma once

// Cohomology models of concrete manifolds and total classes of (virtual)
// bundles over them.

#include <cstdint>
#include <string>
#include <string_view>

#include "coinc/gpoly.hpp"

namespace coinc::spaces {

struct ClassSeries {
  Ring ring;
  GradedPoly total;     // constant term 1
  int virtual_dim = 0;  // dim eta - dim xi; carried as data, never inferred
};

/// Validates the constant term and builds the series.
ClassSeries make_series(GradedPoly total, int virtual_dim);

/// H^*(RP^m; Z_2) = Z_2[u]/(u^{m+1}).
Ring rp_ring(int m);

/// w(eps^n - T RP^m) = (1+u)^{-(m+1)}, virtual dimension n - m.
ClassSeries virtual_sw_rp(int m, int n);

/// Dual (normal) Stiefel-Whitney series of RP^m, (1+u)^{-(m+1)}; the same
/// total class as virtual_sw_rp with virtual dimension -m.
ClassSeries normal_sw_rp(int m);

/// Z_p[x]/(x^{m+1}) with deg x = 2 and total (1+x^2)^{-(m+1)}, the inverse
/// Pontryagin class of CP^m; virtual dimension n - 2m.
ClassSeries cp_pontryagin_virtual(int m, int n, std::uint32_t p);

/// Substitute each generator of F's ring by the component of S.total of the
/// same degree (w_j -> degree j, p_{4j} -> degree 4j) and reduce in S.ring.
GradedPoly evaluate_class(const GradedPoly& F, const ClassSeries& S);

/// Parse a space manifest:
///
///   # comment
///   characteristic 2
///   generator u 1
///   truncate u 7          # u^7 = 0
///   relation a*c          # optional monomial relation
///   total 1 + u + u^2
///   virtual_dim -6
///
/// Throws std::invalid_argument with a line number on malformed input.
ClassSeries parse_manifest(std::string_view text);
ClassSeries load_manifest(const std::string& path);

}  // namespace coinc::spaces
