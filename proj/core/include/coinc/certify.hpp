#pragma once

// Verdicts built from evaluated characteristic classes. Certificates are
// one-sided: a nonzero class proves a lower bound, a zero class proves
// nothing.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coinc/gpoly.hpp"
#include "coinc/spaces.hpp"

namespace coinc::certify {

enum class Kind { Multiplicity, Genus };

using ParamValue = std::variant<long long, bool>;

struct Certificate {
  Kind kind = Kind::Multiplicity;
  std::vector<std::pair<std::string, ParamValue>> params;
  GradedPoly evaluated;
  std::optional<GradedPoly> witness;  // leading nonzero term of `evaluated`
  std::optional<long long> bound;     // present iff conclusive
  bool conclusive = false;
  std::vector<std::string> notes;

  const ParamValue* param(const std::string& name) const;
};

const char* kind_name(Kind k);

/// Any continuous map RP^m -> R^n has multiplicity >= q when the class
/// s_{q,n-m} of eps^n - T RP^m is nonzero. q must be a power of two.
/// Throws charclass::ConsistencyError if the leading-term route and the
/// explicit-formula route (q = 2, 4) disagree.
Certificate multiplicity_rp(int m, int n, int q);

/// Scan alpha_{p,i}(S) for 2i >= d+1 up to the ring's top degree; the first
/// nonzero value certifies multiplicity >= p.
Certificate multiplicity_modp(const spaces::ClassSeries& S, std::uint32_t p);

/// g(K^q(M)) >= (m+d)(q-1)+1 when wbar_{d+1}^{q-1} != 0. The dual series must
/// vanish above degree d+1 (std::invalid_argument otherwise).
Certificate genus_pow2(int m, int d, int q, const spaces::ClassSeries& dual_sw);

/// genus_pow2 on RP^{2^l-2-d}, also reporting the specialized RP figure
/// (2^l-3)(q-1)+1.
Certificate genus_pow2_rp(int l, int d, int q);

/// g(K^4(M)) >= 3m+1 from s_{4,0}(TM^perp), >= 3m+4 from s_{4,1}(TM^perp).
Certificate genus_four(int m, const spaces::ClassSeries& dual_sw);

/// g(K^p(M)) >= (m+2i-1)(p-1)+1 when alpha_{p,i}(TM^perp) != 0.
Certificate genus_oddp(int m, std::uint32_t p, int i, const spaces::ClassSeries& dual_pontryagin);

struct Theorem3Row {
  int q = 2;
  int d = 0;
  Certificate cert;
};

/// multiplicity_rp(2^l-2-d, 2^l-2, q) for q = 2, 4, .., 2^{l-1} and
/// d = 0 .. 2^l-3, in that order.
std::vector<Theorem3Row> theorem3_table(int l);

bool is_power_of_two(long long q);

}  // namespace coinc::certify
