// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coinc/certify.hpp"
#include "coinc/charclass.hpp"
#include "coinc/cli.hpp"
#include "coinc/gpoly.hpp"
#include "coinc/oracle.hpp"
#include "coinc/spaces.hpp"
#include "coinc/symfun.hpp"

using namespace coinc;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

GradedPoly w(int n, const std::string& text) { return parse_poly(charclass::sw_ring(n), text); }

std::string wj(int j, int e = 1) { return "w" + std::to_string(j) + (e == 1 ? "" : "^" + std::to_string(e)); }

void c1(Check& c) {
  for (int d = 0; d <= 6; ++d)
    c.expect(charclass::compute_s(2, d).formula == w(d + 1, wj(d + 1)), "s_{2," + std::to_string(d) + "}");
}

void c2(Check& c) {
  auto s0 = charclass::compute_s(4, 0).formula;
  auto s1 = charclass::compute_s(4, 1).formula;
  c.expect(s0 == w(3, "w1^3 + w1*w2"), "s_{4,0} = " + s0.to_string());
  c.expect(s1 == w(6, "w2^3 + w3^2 + w1*w2*w3 + w2*w4"), "s_{4,1} = " + s1.to_string());
  c.expect(s0.to_string() == "w1^3 + w1*w2", "canonical text of s_{4,0}");
}

void c3(Check& c) {
  for (int q : {2, 4})
    for (int d = 0; d <= 3; ++d) {
      auto lt = charclass::leading_term_reduce(charclass::compute_s(q, d));
      c.expect(lt == w((q - 1) * (d + 1), wj(d + 1, q - 1)), "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                                                               ": " + lt.to_string());
    }
}

void c4(Check& c) {
  for (int q : {2, 4})
    for (int d = 0; d <= 3; ++d) {
      auto r = charclass::compute_s(q, d);
      std::string tag = "q=" + std::to_string(q) + " d=" + std::to_string(d);
      c.expect(charclass::compute_s_at(q, d, r.nu + 1, r.mu + 1) == r.formula, "sqd stability " + tag);
      if (q == 4) c.expect(charclass::compute_s_at(q, d, r.nu, r.mu, true) == r.formula, "a-irrelevance " + tag);
    }
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int i = 0; i <= 3; ++i) {
      int k = charclass::alpha_stable_k(p, i);
      c.expect(charclass::alpha_class(p, i, k).formula == charclass::alpha_class(p, i, k + 1).formula,
               "alpha stability p=" + std::to_string(p) + " i=" + std::to_string(i));
    }
}

void c5(Check& c) {
  for (int i = 1; i <= 4; ++i)
    for (int k = charclass::alpha_stable_k(3, i); k <= charclass::alpha_stable_k(3, i) + 1; ++k) {
      auto a = charclass::alpha_class(3, i, k);
      c.expect(a.formula == parse_poly(a.formula.ring(), "p" + std::to_string(4 * i)),
               "alpha_{3," + std::to_string(i) + "} = " + a.formula.to_string());
    }
  for (std::uint32_t p : {3u, 5u, 7u})
    for (int i = 1; i <= 3; ++i) {
      const int k = charclass::alpha_stable_k(p, i);
      auto a = charclass::alpha_class(p, i, k);
      Ring s = symfun::roots_ring(p, {k, 4, "s"});
      std::vector<GradedPoly> e(std::size_t(k + 1), GradedPoly(s));
      e[0] = GradedPoly::constant(s, 1);
      for (int j = 1; j <= k; ++j) {
        GradedPoly x = pow(GradedPoly::gen(s, "s" + std::to_string(j)), (p - 1) / 2);
        for (int l = j; l >= 1; --l) e[std::size_t(l)] += e[std::size_t(l - 1)] * x;
      }
      c.expect(symfun::random_eval_check(e[std::size_t(i)], a.formula, 100, 1000 * p + std::uint64_t(i)),
               "random evaluation p=" + std::to_string(p) + " i=" + std::to_string(i));
    }
}

void c6(Check& c) {
  for (int l : {3, 4}) {
    const int n = (1 << l) - 2;
    for (const auto& row : certify::theorem3_table(l)) {
      const int m = n - row.d, degree = (row.q - 1) * (row.d + 1);
      std::string tag = "l=" + std::to_string(l) + " q=" + std::to_string(row.q) + " d=" + std::to_string(row.d);
      c.expect(row.cert.conclusive == (degree <= m), "verdict " + tag);
      if (row.cert.conclusive)
        c.expect(row.cert.witness && *row.cert.witness == GradedPoly::monomial(spaces::rp_ring(m), {{"u", unsigned(degree)}}),
                 "witness " + tag);
      if (row.q == 2 || row.q == 4) {
        auto series = spaces::virtual_sw_rp(m, n);
        auto leading = spaces::evaluate_class(w(degree, wj(row.d + 1, row.q - 1)), series);
        auto explicit_route = spaces::evaluate_class(charclass::compute_s(row.q, row.d).formula, series);
        c.expect(leading == explicit_route, "route agreement " + tag);
        c.expect(leading == row.cert.evaluated, "certificate value " + tag);
      }
    }
  }
}

void c7(Check& c) {
  for (int l : {3, 4, 5})
    for (int d = 0; (1 << l) - 2 - d >= 1; ++d)
      for (int q = 2; q * (d + 1) < (1 << l) - 1; q *= 2) {
        auto cert = certify::genus_pow2_rp(l, d, q);
        const long long m = (1 << l) - 2 - d;
        std::string tag = "l=" + std::to_string(l) + " d=" + std::to_string(d) + " q=" + std::to_string(q);
        c.expect(cert.conclusive && cert.bound && *cert.bound == (m + d) * (q - 1) + 1, "general bound " + tag);
        auto* spec = cert.param("rp_specialized_bound");
        c.expect(spec && std::get<long long>(*spec) == (long long)((1 << l) - 3) * (q - 1) + 1,
                 "specialized bound " + tag);
      }
  auto four = certify::genus_four(6, spaces::normal_sw_rp(6));
  c.expect(four.conclusive && four.evaluated.to_string() == "u^3" && four.bound && *four.bound == 19, "genus_four RP^6");

  for (std::uint32_t p : {3u, 5u, 7u})
    for (int i = 1; i <= 2; ++i) {
      // Dual Pontryagin series prod_{j<=i} (1 + j x^2): i Euler roots with
      // squares j x^2, so alpha_{p,i} = prod j^{(p-1)/2} x^{(p-1)i} != 0.
      const int m = (int(p) - 1) * i;
      Ring r = Ring::truncated(p, {{"x", 2}}, {unsigned(m + 1)});
      GradedPoly x = GradedPoly::gen(r, "x"), total = GradedPoly::constant(r, 1);
      for (int j = 1; j <= i; ++j) total *= GradedPoly::constant(r, 1) + (long long)j * x * x;
      auto cert = certify::genus_oddp(m, p, i, spaces::make_series(total, -m));
      std::string tag = "p=" + std::to_string(p) + " i=" + std::to_string(i);
      c.expect(cert.conclusive, "genus_oddp conclusive " + tag);
      c.expect(cert.bound && *cert.bound == (long long)(m + 2 * i - 1) * (p - 1) + 1, "genus_oddp bound " + tag);
    }
}

void c8(Check& c) {
  using oracle::Rational;
  for (int k = 1; k <= 3; ++k) {
    auto exact = oracle::morin_tuple<Rational>(k, 2 * k, 2 * k);
    std::string tag = "k=" + std::to_string(k);
    c.expect(exact.tuple.points.size() == std::size_t(k + 1), "point count " + tag);
    c.expect(exact.tuple.residual == 0, "exact residual " + tag);
    c.expect(exact.tuple.min_separation > 0, "distinct points " + tag);
    auto fl = oracle::morin_tuple<double>(k, 2 * k, 2 * k);
    c.expect(fl.tuple.residual < 1e-9 && fl.tuple.min_separation > 0, "float residual " + tag);
  }
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + int(rng() % 5), d = int(rng() % 4), q = 2 + int(rng() % 5);
    std::vector<Rational> cs, ts;
    for (int i = 0; i < n + d; ++i) cs.push_back(Rational((long long)(rng() % 2001) - 1000, 1 + (long long)(rng() % 97)));
    while (int(ts.size()) < q) {
      Rational v((long long)(rng() % 201) - 100, 1 + (long long)(rng() % 13));
      if (std::find(ts.begin(), ts.end(), v) == ts.end()) ts.push_back(v);
    }
    auto t = oracle::moment_tuple<Rational>(n, d, q, cs, ts);
    c.expect(t.residual == 0 && t.image == cs, "moment instance " + std::to_string(trial));
  }
  // Perturbing a last-row coefficient must break the coincidence.
  auto wit = oracle::morin_tuple<Rational>(3, 4, 4);
  auto points = wit.tuple.points;
  points[0][std::size_t(wit.model.last_coefficient_index(1) - 1)] += Rational(1, 1000);
  auto broken = oracle::morin_verify(wit.model, points);
  c.expect(broken.residual > 0, "perturbation detected");
  auto fold = oracle::morin_tuple<Rational>(1, 2, 2);
  auto fp = fold.tuple.points;
  fp[0][1] += Rational(1, 1000);
  c.expect(oracle::morin_verify(fold.model, fp).residual > 0, "fold perturbation detected");
}

void c9(Check& c) {
  std::mt19937_64 rng(9);
  const std::vector<Ring> rings{
      Ring::create(2, {{"a", 1}, {"b", 2}, {"c", 1}}, {{{"a", 1}, {"c", 1}}}),
      Ring::truncated(2, {{"u", 1}}, {9}),
      Ring::truncated(3, {{"x", 2}, {"y", 1}}, {4, 5}),
      Ring::create(7, {{"a", 1}, {"b", 3}}, {{{"a", 3}, {"b", 2}}}),
  };
  auto random_poly = [&](const Ring& r) {
    std::vector<Term> terms;
    for (int t = int(rng() % 7); t > 0; --t) {
      std::vector<Exponent> e(r.num_generators());
      for (auto& x : e) x = Exponent(rng() % 4);
      terms.push_back({Monomial(std::move(e)), Residue(rng() % r.characteristic())});
    }
    return GradedPoly(r, std::move(terms));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Ring& r = rings[std::size_t(trial) % rings.size()];
    GradedPoly f = random_poly(r), g = random_poly(r), h = random_poly(r);
    bool ok = f + g == g + f && f * g == g * f && (f * g) * h == f * (g * h) && (f + g) + h == f + (g + h) &&
              f * (g + h) == f * g + f * h && f * GradedPoly::constant(r, 1) == f &&
              (long long)r.characteristic() * f == GradedPoly(r);
    c.expect(ok, "ring axioms, trial " + std::to_string(trial));
    GradedPoly nf = normal_form(f * h);
    c.expect(normal_form(nf) == nf, "normal form idempotence, trial " + std::to_string(trial));
  }

  // Symmetric functions: monomial basis -> elementary basis -> monomial basis.
  for (int nu : {1, 3, 6, 10, 14}) {
    Ring ebasis = symfun::elementary_ring(2, nu, 1);
    for (int deg = 0; deg <= 12; ++deg)
      for (const auto& lambda : symfun::partitions(deg, nu)) {
        GradedPoly E = symfun::elementary_rewrite(symfun::SymmetricPoly{2, nu, {{lambda, 1}}}, ebasis);
        std::map<symfun::Partition, Residue> back;
        for (const auto& t : E.terms()) {
          symfun::Partition rho;
          for (std::size_t j = t.mono.size(); j-- > 0;)
            for (int e = 0; e < t.mono[j]; ++e) rho.push_back(int(j + 1));
          for (const auto& kappa : symfun::partitions(deg, nu))
            back[kappa] = Residue((back[kappa] + symfun::elementary_product_coefficient(rho, kappa, 2) * t.coeff) % 2);
        }
        std::erase_if(back, [](const auto& kv) { return kv.second == 0; });
        c.expect(back == std::map<symfun::Partition, Residue>{{lambda, 1}},
                 "symfun round trip nu=" + std::to_string(nu) + " deg=" + std::to_string(deg));
      }
  }
  for (std::uint32_t p : {3u, 5u}) {
    Ring roots = symfun::roots_ring(p, {4, 1});
    Ring ebasis = symfun::elementary_ring(p, 4, 1);
    for (int deg = 1; deg <= 8; ++deg)
      for (const auto& lambda : symfun::partitions(deg, 4)) {
        GradedPoly S = symfun::monomial_symmetric(roots, lambda);
        GradedPoly E = symfun::elementary_rewrite(S, ebasis);
        c.expect(symfun::expand_elementary(E, roots) == S, "expand round trip p=" + std::to_string(p));
      }
  }

  // Every constructed series multiplies back to 1.
  for (int m = 1; m <= 40; ++m) {
    auto s = spaces::virtual_sw_rp(m, m + 3);
    GradedPoly one = GradedPoly::constant(s.ring, 1), u = GradedPoly::gen(s.ring, "u");
    c.expect(s.total * pow(one + u, unsigned(m + 1)) == one, "RP series m=" + std::to_string(m));
    auto nu = spaces::normal_sw_rp(m);
    c.expect(nu.total == s.total, "normal RP series m=" + std::to_string(m));
    c.expect(invert_unit_series(s.total, m) == pow(one + u, unsigned(m + 1)), "RP re-inversion m=" + std::to_string(m));
    for (std::uint32_t p : {3u, 5u, 7u}) {
      auto cp = spaces::cp_pontryagin_virtual(m, 2 * m + 1, p);
      GradedPoly o = GradedPoly::constant(cp.ring, 1), x = GradedPoly::gen(cp.ring, "x");
      c.expect(cp.total * pow(o + x * x, unsigned(m + 1)) == o, "CP series m=" + std::to_string(m));
    }
  }
}

void c10(Check& c) {
  auto once = [] {
    std::ostringstream out, err;
    int code = cli::run({"coinc", "table", "theorem3", "--l", "4", "--json"}, out, err);
    return std::pair{code, out.str()};
  };
  auto a = once(), b = once();
  c.expect(a.first == 0 && b.first == 0, "exit codes");
  c.expect(!a.second.empty() && a.second == b.second, "outputs differ");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 means no runtime requirement
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "s_{2,d} = w_{d+1}, d = 0..6", 1.0, c1},
      {2, "s_{4,0} and s_{4,1} exact", 30.0, c2},
      {3, "leading term w_{d+1}^{q-1}, q in {2,4}, d <= 3", 0, c3},
      {4, "stability under (nu,mu) -> (nu+1,mu+1), alpha stability, a-irrelevance", 0, c4},
      {5, "alpha_{3,i} = p_{4i}; random evaluation for p in {3,5,7}", 0, c5},
      {6, "RP^{2^l-2-d} sweep at l in {3,4}, route agreement", 10.0, c6},
      {7, "genus bounds", 0, c7},
      {8, "oracle tuples and perturbation", 0, c8},
      {9, "kernel property suite", 60.0, c9},
      {10, "table theorem3 --l 4 --json is deterministic", 0, c10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.ok && cr.limit_s > 0 && secs >= cr.limit_s) {
      check.ok = false;
      check.why = "runtime " + std::to_string(secs) + " s over limit";
    }
    std::printf("%s criterion %2d: %s (%.3f s%s)%s%s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.title, secs,
                cr.limit_s > 0 ? (", limit " + std::to_string(int(cr.limit_s)) + " s").c_str() : "",
                check.ok ? "" : " -- ", check.why.c_str());
    failed += !check.ok;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
