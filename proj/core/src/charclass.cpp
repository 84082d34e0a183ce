#include "coinc/charclass.hpp"

#include <map>
#include <string>
#include <vector>

#include "coinc/symfun.hpp"

namespace coinc::charclass {

namespace {

using symfun::Partition;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_odd_prime(std::uint32_t p) {
  require(p > 2 && is_prime(p), "p = " + std::to_string(p) + " is not an odd prime");
}

void check_sizes(int q, int d, int nu, int mu) {
  require(q == 2 || q == 4, "q must be 2 or 4 (got " + std::to_string(q) + ")");
  require(d >= 0, "codimension d must be >= 0");
  require(mu >= 2, "mu must be >= 2");
  require(nu == mu + d, "sizes must satisfy nu = mu + d");
}

std::vector<Generator> root_generators(int nu) {
  std::vector<Generator> gens;
  for (int i = 1; i <= nu; ++i) gens.push_back({"t" + std::to_string(i), 1});
  return gens;
}

/// Configuration-space generators of the Euler product and the exact top
/// monomial whose coefficient is the leading class.
struct ParameterRing {
  std::vector<Generator> gens;
  std::vector<ExponentMap> relations;       // without the mu-truncation
  std::vector<ExponentMap> truncation;      // g^mu = 0
  ExponentMap top;                          // selector of the top class
};

ParameterRing parameter_ring(int q, int mu, bool with_a) {
  const unsigned m = unsigned(mu);
  ParameterRing pr;
  if (q == 2) {
    pr.gens = {{"u", 1}};
    pr.truncation = {{{"u", m}}};
    pr.top = {{"u", m - 1}};
  } else {
    if (with_a) {
      pr.gens.push_back({"a", 1});
      pr.relations.push_back({{"a", 1}, {"c", 1}});
    }
    pr.gens.push_back({"b", 2});
    pr.gens.push_back({"c", 1});
    pr.truncation = {{{"b", m}}, {{"c", m}}};
    pr.top = {{"b", m - 1}, {"c", m - 1}};
    if (with_a) pr.top.push_back({"a", 0});
  }
  return pr;
}

/// One factor of the Euler product in the variable named `t`.
GradedPoly euler_factor(int q, const Ring& ring, const std::string& t, bool with_a) {
  GradedPoly tv = GradedPoly::gen(ring, t);
  if (q == 2) return tv + GradedPoly::gen(ring, "u");
  GradedPoly b = GradedPoly::gen(ring, "b");
  GradedPoly c = GradedPoly::gen(ring, "c");
  GradedPoly ac = with_a ? GradedPoly::gen(ring, "a") + c : c;
  return (tv * tv + ac * tv + b) * (tv + c);
}

EulerProduct euler_product(int q, int nu, int mu, bool keep_overflow, bool with_a) {
  ParameterRing pr = parameter_ring(q, mu, with_a);
  std::vector<Generator> gens = pr.gens;
  for (auto& g : root_generators(nu)) gens.push_back(std::move(g));
  std::vector<ExponentMap> capped_rels = pr.relations;
  capped_rels.insert(capped_rels.end(), pr.truncation.begin(), pr.truncation.end());
  Ring capped = Ring::create(2, gens, capped_rels);

  if (!keep_overflow) {
    GradedPoly prod = GradedPoly::constant(capped, 1);
    for (int i = 1; i <= nu; ++i) prod *= euler_factor(q, capped, "t" + std::to_string(i), with_a);
    return {prod, std::nullopt};
  }
  Ring full = Ring::create(2, gens, pr.relations);
  GradedPoly prod = GradedPoly::constant(full, 1);
  for (int i = 1; i <= nu; ++i) prod *= euler_factor(q, full, "t" + std::to_string(i), with_a);
  std::vector<Term> over;
  for (const auto& t : prod.terms())
    if (capped.is_zero(t.mono)) over.push_back(t);
  return {transfer(prod, capped), GradedPoly(full, std::move(over))};
}

}  // namespace

Ring sw_ring(int n) { return symfun::elementary_ring(2, std::max(n, 1), 1, "w", 1); }

Ring pontryagin_ring(std::uint32_t p, int k) { return symfun::elementary_ring(p, std::max(k, 1), 4, "p", 4); }

EulerProduct euler_product_q2(int nu, int mu, bool keep_overflow) {
  require(mu >= 2 && nu >= mu, "euler_product_q2 requires nu >= mu >= 2");
  return euler_product(2, nu, mu, keep_overflow, false);
}

EulerProduct euler_product_q4(int nu, int mu, bool keep_overflow, bool with_a) {
  require(mu >= 1 && nu >= 1, "euler_product_q4 requires nu, mu >= 1");
  return euler_product(4, nu, mu, keep_overflow, with_a);
}

int default_mu(int q, int d) { return (q - 1) * (d + 1) + 2; }

GradedPoly compute_s_at(int q, int d, int nu, int mu, bool with_a) {
  check_sizes(q, d, nu, mu);
  ParameterRing pr = parameter_ring(q, mu, with_a);
  std::vector<ExponentMap> rels = pr.relations;
  rels.insert(rels.end(), pr.truncation.begin(), pr.truncation.end());
  Ring params = Ring::create(2, pr.gens, rels);

  // Per-root factor sum_k F_k t^k with F_k in the parameter ring.
  std::vector<Generator> with_t = pr.gens;
  with_t.push_back({"t", 1});
  Ring factor_ring = Ring::create(2, with_t, rels);
  GradedPoly factor = euler_factor(q, factor_ring, "t", with_a);
  std::vector<GradedPoly> coeff;
  for (unsigned k = 0; k <= unsigned(q - 1); ++k)
    coeff.push_back(transfer(coefficient_of(factor, {{"t", k}}), params));

  const int degree = (q - 1) * (d + 1);
  // The product factorizes over the roots, so the coefficient of t^lambda is
  // the product of the per-root coefficients F_{lambda_i}.
  std::map<int, GradedPoly> f0_powers;
  auto f0_pow = [&](int e) -> const GradedPoly& {
    auto it = f0_powers.find(e);
    if (it == f0_powers.end()) it = f0_powers.emplace(e, pow(coeff[0], unsigned(e))).first;
    return it->second;
  };
  symfun::SymmetricPoly sym;
  sym.p = 2;
  sym.nvars = nu;
  for (const Partition& lambda : symfun::partitions(degree, nu)) {
    GradedPoly prod = f0_pow(nu - int(lambda.size()));
    for (int part : lambda) {
      if (part >= int(coeff.size())) {
        prod = GradedPoly(params);
        break;
      }
      prod *= coeff[std::size_t(part)];
      if (prod.is_zero()) break;
    }
    GradedPoly c = coefficient_of(prod, pr.top);
    if (c.is_zero()) continue;
    if (c.size() != 1 || !c.terms()[0].mono.is_one())
      throw ConsistencyError("top-class coefficient is not a scalar: " + c.to_string());
    sym.coeffs[lambda] = c.terms()[0].coeff;
  }
  GradedPoly in_w = symfun::elementary_rewrite(sym, symfun::elementary_ring(2, nu, 1, "w", 1));
  return transfer(in_w, sw_ring(degree));
}

GradedPoly compute_s_expanded(int q, int d, int nu, int mu, bool with_a) {
  check_sizes(q, d, nu, mu);
  ParameterRing pr = parameter_ring(q, mu, with_a);
  EulerProduct e = euler_product(q, nu, mu, false, with_a);
  GradedPoly coef = coefficient_of(e.capped, pr.top);
  Ring roots = Ring::create(2, root_generators(nu));
  GradedPoly sym = transfer(coef, roots);
  GradedPoly in_w = symfun::elementary_rewrite(sym, symfun::elementary_ring(2, nu, 1, "w", 1));
  return transfer(in_w, sw_ring((q - 1) * (d + 1)));
}

SqdResult compute_s(int q, int d) {
  require(q == 2 || q == 4, "q must be 2 or 4 (got " + std::to_string(q) + ")");
  require(d >= 0, "codimension d must be >= 0");
  const int mu = default_mu(q, d);
  const int nu = mu + d;
  GradedPoly base = compute_s_at(q, d, nu, mu);
  GradedPoly next = compute_s_at(q, d, nu + 1, mu + 1);
  if (!(base == next))
    throw ConsistencyError("s_{" + std::to_string(q) + "," + std::to_string(d) + "} unstable: " +
                           base.to_string() + " vs " + next.to_string());
  if (!base.is_homogeneous() || (!base.is_zero() && *base.degree() != (q - 1) * (d + 1)))
    throw ConsistencyError("s_{q,d} is not homogeneous of degree (q-1)(d+1)");
  return {q, d, std::move(base), nu, mu};
}

GradedPoly leading_term_reduce(const GradedPoly& formula, int d) {
  const Ring& ring = formula.ring();
  std::vector<GradedPoly> images;
  for (const auto& g : ring.generators()) {
    if (g.degree <= d + 1)
      images.push_back(GradedPoly::gen(ring, g.name));
    else
      images.push_back(GradedPoly(ring));
  }
  return substitute(formula, ring, images);
}

GradedPoly leading_term_reduce(const SqdResult& r) { return leading_term_reduce(r.formula, r.d); }

GradedPoly euler_product_modp(std::uint32_t p, int nu) {
  require_odd_prime(p);
  require(nu >= 1, "nu must be >= 1");
  const int k = nu / 2;
  std::vector<Generator> gens{{"u", int(p) - 1}};
  for (int i = 1; i <= k; ++i) gens.push_back({"e" + std::to_string(i), 2});
  Ring ring = Ring::create(p, gens);
  GradedPoly u = GradedPoly::gen(ring, "u");
  GradedPoly prod = nu % 2 == 1 ? u : GradedPoly::constant(ring, 1);
  for (int i = 1; i <= k; ++i)
    prod *= u * u - pow(GradedPoly::gen(ring, "e" + std::to_string(i)), p - 1);
  return prod;
}

int alpha_stable_k(std::uint32_t p, int i) { return std::max(1, i * int((p - 1) / 2)); }

namespace {

GradedPoly alpha_at(std::uint32_t p, int i, int k) {
  const int half = int((p - 1) / 2);
  // Squares s_j = t_j^2 of the Euler roots carry the Pontryagin degree 4.
  Ring squares = symfun::roots_ring(p, {k, 4, "s"});
  GradedPoly sigma = symfun::monomial_symmetric(squares, Partition(std::size_t(i), half));
  GradedPoly in_p = symfun::elementary_rewrite(sigma, symfun::elementary_ring(p, k, 4, "p", 4));
  return transfer(in_p, pontryagin_ring(p, alpha_stable_k(p, i)));
}

}  // namespace

AlphaResult alpha_class(std::uint32_t p, int i, int k) {
  require_odd_prime(p);
  require(k >= 1, "k must be >= 1");
  require(i >= 0 && i <= k, "alpha_{p,i} needs 0 <= i <= k");
  GradedPoly formula = alpha_at(p, i, k);
  if (k >= alpha_stable_k(p, i)) {
    GradedPoly next = alpha_at(p, i, k + 1);
    if (!(formula == next))
      throw ConsistencyError("alpha_{" + std::to_string(p) + "," + std::to_string(i) + "} unstable in k: " +
                             formula.to_string() + " vs " + next.to_string());
  }
  if (!formula.is_homogeneous() || (!formula.is_zero() && *formula.degree() != 2 * int(p - 1) * i))
    throw ConsistencyError("alpha_{p,i} is not homogeneous of degree 2(p-1)i");
  return {p, i, k, std::move(formula)};
}

AlphaResult alpha_class(std::uint32_t p, int i) {
  require(i >= 0, "i must be >= 0");
  return alpha_class(p, i, std::max(alpha_stable_k(p, i), std::max(i, 1)));
}

}  // namespace coinc::charclass
