#include <doctest.h>

#include "coinc/charclass.hpp"
#include "coinc/spaces.hpp"
#include "coinc/symfun.hpp"

using namespace coinc;
using namespace coinc::charclass;

namespace {

GradedPoly w(int n, const std::string& text) { return parse_poly(sw_ring(n), text); }

}  // namespace

TEST_CASE("euler_product_q2 examples") {
  EulerProduct e = euler_product_q2(2, 2);
  CHECK(e.capped == parse_poly(e.capped.ring(), "t1*t2 + t1*u + t2*u + u^2") - parse_poly(e.capped.ring(), "u^2"));
  CHECK_FALSE(e.overflow.has_value());
  EulerProduct full = euler_product_q2(2, 2, true);
  REQUIRE(full.overflow.has_value());
  CHECK(full.capped.to_string() == "u*t1 + u*t2 + t1*t2");
  CHECK(full.overflow->to_string() == "u^2");

  // coefficient of u^{mu-1}
  EulerProduct e3 = euler_product_q2(3, 3);
  CHECK(coefficient_of(e3.capped, {{"u", 2}}).to_string() == "t1 + t2 + t3");
  EulerProduct e5 = euler_product_q2(5, 3);
  GradedPoly coeff = transfer(coefficient_of(e5.capped, {{"u", 2}}), symfun::roots_ring(2, {5, 1}));
  CHECK(symfun::elementary_rewrite(coeff, symfun::elementary_ring(2, 5, 1)).to_string() == "e3");
}

TEST_CASE("euler_product_q4 examples") {
  EulerProduct one = euler_product_q4(1, 1);
  CHECK(coefficient_of(one.capped, {{"b", 0}, {"c", 0}}).to_string() == "t1^3");
  // (t^2 + ct + b)(t + c) = t^3 + (b + c^2) t + bc over Z2; c^2 survives once mu >= 3
  EulerProduct one2 = euler_product_q4(1, 2);
  CHECK(one2.capped.to_string() == "b*c + b*t1 + t1^3");
  EulerProduct one3 = euler_product_q4(1, 3);
  Ring r = one3.capped.ring();
  CHECK(one3.capped == parse_poly(r, "t1^3 + b*t1 + c^2*t1 + b*c"));
  for (int nu = 1; nu <= 3; ++nu) {
    EulerProduct e = euler_product_q4(nu, 5);
    CHECK(e.capped.is_homogeneous());
    CHECK(*e.capped.degree() == 3 * nu);
  }
}

TEST_CASE("compute_s published values") {
  for (int d = 0; d <= 6; ++d)
    CHECK(compute_s(2, d).formula == w(d + 1, "w" + std::to_string(d + 1)));
  CHECK(compute_s(4, 0).formula.to_string() == "w1^3 + w1*w2");
  CHECK(compute_s(4, 1).formula == w(6, "w2^3 + w3^2 + w1*w2*w3 + w2*w4"));
}

TEST_CASE("compute_s agrees with an independent brute-force expansion") {
  // Values produced by tests/oracles/sqd_bruteforce.py.
  CHECK(compute_s(4, 2).formula ==
        w(9, "w3*w6 + w4*w5 + w1*w3*w5 + w1*w4^2 + w2*w3*w4 + w3^3"));
}

TEST_CASE("fast route matches the literal expansion") {
  for (int d = 0; d <= 2; ++d) {
    for (int q : {2, 4}) {
      int mu = default_mu(q, d);
      int nu = mu + d;
      CHECK(compute_s_at(q, d, nu, mu) == compute_s_expanded(q, d, nu, mu));
    }
  }
  CHECK(compute_s_expanded(4, 1, 7, 6, true) == compute_s(4, 1).formula);
}

TEST_CASE("invariants: degree, stability, a-irrelevance") {
  for (int q : {2, 4}) {
    for (int d = 0; d <= 3; ++d) {
      SqdResult r = compute_s(q, d);
      CHECK(r.formula.is_homogeneous());
      CHECK(*r.formula.degree() == (q - 1) * (d + 1));
      CHECK(compute_s_at(q, d, r.nu + 1, r.mu + 1) == r.formula);
      CHECK(compute_s_at(q, d, r.nu + 2, r.mu + 2) == r.formula);
      if (q == 4) CHECK(compute_s_at(q, d, r.nu, r.mu, true) == r.formula);
    }
  }
}

TEST_CASE("leading_term_reduce") {
  CHECK(leading_term_reduce(compute_s(4, 0)).to_string() == "w1^3");
  CHECK(leading_term_reduce(compute_s(4, 1)).to_string() == "w2^3");
  for (int d = 0; d <= 3; ++d) {
    CHECK(leading_term_reduce(compute_s(2, d)) == w(d + 1, "w" + std::to_string(d + 1)));
    CHECK(leading_term_reduce(compute_s(4, d)) == w(3 * (d + 1), "w" + std::to_string(d + 1) + "^3"));
  }
}

TEST_CASE("evaluation on RP series reproduces the leading power") {
  // On virtual_sw_rp(2^l-2-d, 2^l-2) all w_j with j > d+1 vanish, so s_{q,d}
  // evaluates to u^{(q-1)(d+1)}.
  for (int d = 0; d <= 2; ++d) {
    int m = 14 - d;
    spaces::ClassSeries S = spaces::virtual_sw_rp(m, 14);
    for (int q : {2, 4}) {
      GradedPoly v = spaces::evaluate_class(compute_s(q, d).formula, S);
      GradedPoly expected = GradedPoly::monomial(S.ring, {{"u", unsigned((q - 1) * (d + 1))}});
      CHECK(v == expected);
    }
  }
}

TEST_CASE("euler_product_modp") {
  // nu real dimensions split into nu/2 two-plane roots
  CHECK(euler_product_modp(3, 2).to_string() == "u^2 + 2*e1^2");
  GradedPoly f = euler_product_modp(5, 4);
  Ring r = f.ring();
  CHECK(f == parse_poly(r, "u^2 + 4*e1^4") * parse_poly(r, "u^2 + 4*e2^4"));
  CHECK(f.is_homogeneous());
  CHECK(*f.degree() == 16);
  CHECK(coefficient_of(f, {{"u", 2}}).to_string() == "4*e1^4 + 4*e2^4");
  CHECK(euler_product_modp(3, 3).to_string() == "u^3 + 2*u*e1^2");
}

TEST_CASE("alpha_class") {
  for (int i = 0; i <= 4; ++i) {
    AlphaResult a = alpha_class(3, i);
    Ring r = a.formula.ring();
    CHECK(a.formula == (i == 0 ? GradedPoly::constant(r, 1) : parse_poly(r, "p" + std::to_string(4 * i))));
  }
  for (int k = 2; k <= 4; ++k) CHECK(alpha_class(5, 1, k).formula.to_string() == "p4^2 + 3*p8");
  CHECK(alpha_class(7, 0, 3).formula.to_string() == "1");
  CHECK(alpha_stable_k(5, 3) == 6);
  CHECK(alpha_class(3, 2, 3).formula == alpha_class(3, 2, 4).formula);
}

namespace {

// sigma_i of the given values, computed by expanding prod (1 + x z).
std::vector<GradedPoly> elementary_of(const Ring& ring, const std::vector<GradedPoly>& xs) {
  std::vector<GradedPoly> e(xs.size() + 1, GradedPoly(ring));
  e[0] = GradedPoly::constant(ring, 1);
  for (std::size_t n = 0; n < xs.size(); ++n)
    for (std::size_t j = n + 1; j >= 1; --j) e[j] += e[j - 1] * xs[n];
  return e;
}

}  // namespace

TEST_CASE("alpha_class passes random evaluation") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int i = 1; i <= 3; ++i) {
      const int k = alpha_stable_k(p, i);
      AlphaResult a = alpha_class(p, i, k);
      Ring elem = symfun::elementary_ring(p, k, 4, "p", 4);
      REQUIRE(a.formula.ring() == elem);

      // In the variables s_j = t_j^2 the class is sigma_i(s^{(p-1)/2}).
      Ring sring = symfun::roots_ring(p, {k, 4, "s"});
      std::vector<GradedPoly> powers;
      for (int j = 1; j <= k; ++j)
        powers.push_back(pow(GradedPoly::gen(sring, "s" + std::to_string(j)), (p - 1) / 2));
      GradedPoly S = elementary_of(sring, powers)[std::size_t(i)];
      CHECK(symfun::random_eval_check(S, a.formula, 100));
    }
  }
}

TEST_CASE("alpha_class over Euler roots, exactly") {
  // Small cases expanded fully in t_j with p_{4j} = sigma_j(t^2).
  for (auto [p, i] : {std::pair{3u, 1}, {3u, 2}, {5u, 1}, {5u, 2}, {7u, 1}}) {
    const int k = alpha_stable_k(p, i);
    AlphaResult a = alpha_class(p, i, k);
    Ring troots = symfun::roots_ring(p, {k, 2});
    std::vector<GradedPoly> squares, powers;
    for (int j = 1; j <= k; ++j) {
      GradedPoly t = GradedPoly::gen(troots, "t" + std::to_string(j));
      squares.push_back(t * t);
      powers.push_back(pow(t, p - 1));
    }
    auto pont = elementary_of(troots, squares);
    GradedPoly in_t = substitute(a.formula, troots, std::vector<GradedPoly>(pont.begin() + 1, pont.end()));
    CHECK(in_t == elementary_of(troots, powers)[std::size_t(i)]);
  }
}
