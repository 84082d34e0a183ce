#include "coinc/certify.hpp"

#include <stdexcept>

#include "coinc/charclass.hpp"

namespace coinc::certify {

namespace {

constexpr const char* kOneSided =
    "inconclusive: the evaluated class vanishes; this does not show that no coincident tuple exists";

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void finish(Certificate& c, long long bound_if_nonzero) {
  c.conclusive = !c.evaluated.is_zero();
  if (c.conclusive) {
    const Term& lead = c.evaluated.terms().front();
    c.witness = GradedPoly(c.evaluated.ring(), {lead});
    c.bound = bound_if_nonzero;
  } else {
    c.notes.emplace_back(kOneSided);
  }
}

/// The class w_j^e as a formula in Z_2[w_1..w_j].
GradedPoly sw_power(int j, int e) {
  Ring ring = charclass::sw_ring(j);
  return pow(GradedPoly::gen(ring, "w" + std::to_string(j)), unsigned(e));
}

bool vanishes_above(const GradedPoly& total, int degree) { return truncate_degree(total, degree) == total; }

std::optional<int> log2_exact(long long x) {
  if (!is_power_of_two(x)) return std::nullopt;
  int l = 0;
  while ((1LL << l) < x) ++l;
  return l;
}

}  // namespace

bool is_power_of_two(long long q) { return q >= 1 && (q & (q - 1)) == 0; }

const char* kind_name(Kind k) { return k == Kind::Multiplicity ? "multiplicity" : "genus"; }

const ParamValue* Certificate::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return &v;
  return nullptr;
}

Certificate multiplicity_rp(int m, int n, int q) {
  require(q >= 2 && is_power_of_two(q), "q must be a power of two >= 2");
  require(m >= 1, "m must be >= 1");
  require(n >= 1, "n must be >= 1");
  const int d = n - m;
  Certificate c{Kind::Multiplicity, {}, GradedPoly(spaces::rp_ring(m)), {}, {}, false, {}};
  c.params = {{"m", (long long)m}, {"n", (long long)n}, {"q", (long long)q}, {"d", (long long)d}};
  if (auto l = log2_exact((long long)n + 2); l && m == (1 << *l) - 2 - d) {
    c.params.emplace_back("l", (long long)*l);
    c.params.emplace_back("theorem_hypothesis", q * (d + 1) < (1 << *l) - 1);
  }
  if (d < 0) {
    c.notes.emplace_back("codimension d = n - m < 0 is not covered by these classes");
    finish(c, q);
    return c;
  }
  const int degree = (q - 1) * (d + 1);
  c.params.emplace_back("class_degree", (long long)degree);
  c.params.emplace_back("proof_condition", degree <= m);

  spaces::ClassSeries series = spaces::virtual_sw_rp(m, n);
  const bool truncated_series = vanishes_above(series.total, d + 1);
  c.params.emplace_back("series_vanishes_above_d_plus_1", truncated_series);

  std::optional<GradedPoly> leading, explicit_route;
  if (truncated_series) leading = spaces::evaluate_class(sw_power(d + 1, q - 1), series);
  if (q == 2 || q == 4) {
    if (degree > m) {
      // Homogeneous of degree above the top class of RP^m.
      explicit_route = GradedPoly(series.ring);
      c.notes.emplace_back("s_{q,d} has degree " + std::to_string(degree) + " > m = " + std::to_string(m) +
                           ", so it vanishes on RP^m");
    } else {
      charclass::SqdResult s = charclass::compute_s(q, d);
      explicit_route = spaces::evaluate_class(s.formula, series);
      c.notes.emplace_back("explicit class s_{" + std::to_string(q) + "," + std::to_string(d) +
                           "} = " + s.formula.to_string());
    }
  }
  if (leading && explicit_route && !(*leading == *explicit_route))
    throw charclass::ConsistencyError("leading-term route " + leading->to_string() +
                                      " disagrees with explicit formula route " + explicit_route->to_string());
  if (leading) {
    c.evaluated = *leading;
    c.notes.emplace_back("evaluated w_{d+1}^{q-1} on w(eps^n - T RP^m) = " + series.total.to_string());
  } else if (explicit_route) {
    c.evaluated = *explicit_route;
  } else {
    c.notes.emplace_back("series has components above degree d+1 and no explicit formula is known for q = " +
                         std::to_string(q));
  }
  finish(c, q);
  return c;
}

Certificate multiplicity_modp(const spaces::ClassSeries& S, std::uint32_t p) {
  require(p > 2 && is_prime(p), "p must be an odd prime");
  require(S.ring.characteristic() == p, "series is over Z" + std::to_string(S.ring.characteristic()) +
                                            ", expected Z" + std::to_string(p));
  auto top = S.ring.top_degree();
  require(top.has_value(), "multiplicity_modp needs a ring with nilpotent generators (finite top degree)");
  const int d = S.virtual_dim;
  // smallest i >= 0 with 2i >= d+1
  int first = 0;
  while (2 * first < d + 1) ++first;
  Certificate c{Kind::Multiplicity, {}, GradedPoly(S.ring), {}, {}, false, {}};
  c.params = {{"p", (long long)p}, {"d", (long long)d}, {"i_min", (long long)first}};
  for (int i = first; 2 * int(p - 1) * i <= *top; ++i) {
    charclass::AlphaResult a = charclass::alpha_class(p, i);
    GradedPoly value = spaces::evaluate_class(a.formula, S);
    if (!value.is_zero()) {
      c.evaluated = value;
      c.params.emplace_back("i", (long long)i);
      c.notes.emplace_back("alpha_{" + std::to_string(p) + "," + std::to_string(i) + "} = " + a.formula.to_string());
      break;
    }
  }
  if (c.evaluated.is_zero())
    c.notes.emplace_back("every alpha_{p,i} with 2i >= d+1 vanishes up to the top degree " + std::to_string(*top));
  finish(c, p);
  return c;
}

Certificate genus_pow2(int m, int d, int q, const spaces::ClassSeries& dual_sw) {
  require(q >= 2 && is_power_of_two(q), "q must be a power of two >= 2");
  require(d >= 0, "d must be >= 0");
  require(dual_sw.ring.characteristic() == 2, "dual Stiefel-Whitney series must be over Z2");
  if (!vanishes_above(dual_sw.total, d + 1))
    throw std::invalid_argument("hypothesis violated: dual Stiefel-Whitney class " + dual_sw.total.to_string() +
                                " has components above degree d+1 = " + std::to_string(d + 1));
  Certificate c{Kind::Genus, {}, GradedPoly(dual_sw.ring), {}, {}, false, {}};
  c.params = {{"m", (long long)m}, {"d", (long long)d}, {"q", (long long)q}};
  c.evaluated = spaces::evaluate_class(sw_power(d + 1, q - 1), dual_sw);
  c.notes.emplace_back("evaluated wbar_{d+1}^{q-1} on wbar = " + dual_sw.total.to_string());
  finish(c, (long long)(m + d) * (q - 1) + 1);
  return c;
}

Certificate genus_pow2_rp(int l, int d, int q) {
  require(l >= 1 && l < 30, "l out of range");
  const int m = (1 << l) - 2 - d;
  require(m >= 1, "RP^{2^l-2-d} needs 2^l-2-d >= 1");
  Certificate c = genus_pow2(m, d, q, spaces::normal_sw_rp(m));
  const long long general = (long long)(m + d) * (q - 1) + 1;
  const long long specialized = (long long)((1 << l) - 3) * (q - 1) + 1;
  c.params.emplace_back("l", (long long)l);
  c.params.emplace_back("theorem_hypothesis", q * (d + 1) < (1 << l) - 1);
  c.params.emplace_back("general_bound", general);
  c.params.emplace_back("rp_specialized_bound", specialized);
  c.notes.emplace_back("the specialized RP figure (2^l-3)(q-1)+1 = " + std::to_string(specialized) +
                       " is weaker than the general bound (m+d)(q-1)+1 = " + std::to_string(general) +
                       " for the same space; both are reported");
  return c;
}

Certificate genus_four(int m, const spaces::ClassSeries& dual_sw) {
  require(dual_sw.ring.characteristic() == 2, "dual Stiefel-Whitney series must be over Z2");
  charclass::SqdResult s0 = charclass::compute_s(4, 0);
  charclass::SqdResult s1 = charclass::compute_s(4, 1);
  GradedPoly v0 = spaces::evaluate_class(s0.formula, dual_sw);
  GradedPoly v1 = spaces::evaluate_class(s1.formula, dual_sw);
  Certificate c{Kind::Genus, {}, GradedPoly(dual_sw.ring), {}, {}, false, {}};
  c.params = {{"m", (long long)m}, {"q", 4LL}, {"s40_nonzero", !v0.is_zero()}, {"s41_nonzero", !v1.is_zero()}};
  c.notes.emplace_back("s_{4,0}(wbar) = " + s0.formula.to_string() + " -> " + v0.to_string());
  c.notes.emplace_back("s_{4,1}(wbar) = " + s1.formula.to_string() + " -> " + v1.to_string());
  if (!v1.is_zero()) {
    c.evaluated = v1;
    finish(c, 3LL * m + 4);
  } else {
    c.evaluated = v0;
    finish(c, 3LL * m + 1);
  }
  return c;
}

Certificate genus_oddp(int m, std::uint32_t p, int i, const spaces::ClassSeries& dual_pontryagin) {
  require(p > 2 && is_prime(p), "p must be an odd prime");
  require(i >= 1, "i must be >= 1");
  require(dual_pontryagin.ring.characteristic() == p, "dual Pontryagin series must be over Z" + std::to_string(p));
  charclass::AlphaResult a = charclass::alpha_class(p, i);
  Certificate c{Kind::Genus, {}, GradedPoly(dual_pontryagin.ring), {}, {}, false, {}};
  c.params = {{"m", (long long)m}, {"p", (long long)p}, {"i", (long long)i}};
  c.evaluated = spaces::evaluate_class(a.formula, dual_pontryagin);
  c.notes.emplace_back("alpha_{" + std::to_string(p) + "," + std::to_string(i) + "} = " + a.formula.to_string());
  finish(c, (long long)(m + 2 * i - 1) * (p - 1) + 1);
  return c;
}

std::vector<Theorem3Row> theorem3_table(int l) {
  require(l >= 2 && l <= 10, "l must be in 2..10");
  const int n = (1 << l) - 2;
  std::vector<Theorem3Row> rows;
  for (int q = 2; q < (1 << l); q *= 2)
    for (int d = 0; n - d >= 1; ++d) rows.push_back({q, d, multiplicity_rp(n - d, n, q)});
  return rows;
}

}  // namespace coinc::certify
