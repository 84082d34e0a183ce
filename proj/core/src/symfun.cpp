#include "coinc/symfun.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace coinc::symfun {

namespace {

Partition sorted_partition(const Monomial& m) {
  Partition lambda;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) lambda.push_back(m[i]);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return lambda;
}

int weight(const Partition& lambda) {
  int s = 0;
  for (int x : lambda) s += x;
  return s;
}

/// nvars! / prod(multiplicity!) including the zero parts, saturating.
std::uint64_t orbit_size(const Partition& lambda, int nvars) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::map<int, int> mult;
  for (int x : lambda) ++mult[x];
  mult[0] = nvars - int(lambda.size());
  // Product of binomials C(remaining, mult_k).
  std::uint64_t total = 1;
  int remaining = nvars;
  for (const auto& [part, k] : mult) {
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) {
      // b = b * (remaining - k + i) / i stays integral.
      const std::uint64_t f = std::uint64_t(remaining - k + i);
      if (b > kMax / f) return kMax;
      b = b * f / std::uint64_t(i);
    }
    if (b != 0 && total > kMax / b) return kMax;
    total *= b;
    remaining -= k;
  }
  return total;
}

Residue binomial_mod(int n, int k, std::uint32_t p) {
  if (k < 0 || k > n) return 0;
  // Pascal row mod p; n is small (number of roots).
  std::vector<std::uint64_t> row(std::size_t(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] = (row[j] + row[j - 1]) % p;
  return Residue(row[k]);
}

}  // namespace

Ring roots_ring(std::uint32_t p, const FormalRoots& roots) {
  if (roots.count < 1) throw std::invalid_argument("need at least one formal root");
  std::vector<Generator> gens;
  for (int i = 1; i <= roots.count; ++i) gens.push_back({roots.prefix + std::to_string(i), roots.root_degree});
  return Ring::create(p, std::move(gens));
}

Ring elementary_ring(std::uint32_t p, int count, int root_degree, const std::string& prefix, int name_step) {
  if (count < 1) throw std::invalid_argument("need at least one elementary generator");
  std::vector<Generator> gens;
  for (int j = 1; j <= count; ++j) gens.push_back({prefix + std::to_string(j * name_step), j * root_degree});
  return Ring::create(p, std::move(gens));
}

std::vector<Partition> partitions(int n, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (int(cur.size()) == max_parts) return;
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Residue elementary_product_coefficient(const Partition& rho, const Partition& kappa, std::uint32_t p) {
  if (weight(rho) != weight(kappa)) return 0;
  // Rows are the e-factors, columns the parts of kappa. The remaining column
  // sums form a multiset, so the count only depends on the sorted vector.
  std::map<std::pair<std::size_t, std::vector<int>>, Residue> memo;
  std::function<Residue(std::size_t, const std::vector<int>&)> count =
      [&](std::size_t row, const std::vector<int>& cols) -> Residue {
    if (row == rho.size()) {
      return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    int rows_left = int(rho.size() - row);
    for (int c : cols)
      if (c > rows_left) return 0;
    auto key = std::make_pair(row, cols);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Group equal positive remaining sums.
    std::vector<std::pair<int, int>> groups;  // (value, size)
    for (int c : cols) {
      if (c == 0) continue;
      if (!groups.empty() && groups.back().first == c)
        ++groups.back().second;
      else
        groups.emplace_back(c, 1);
    }
    std::uint64_t total = 0;
    std::vector<int> take(groups.size(), 0);
    std::function<void(std::size_t, int, std::uint64_t)> choose = [&](std::size_t g, int need,
                                                                     std::uint64_t ways) {
      if (g == groups.size()) {
        if (need != 0) return;
        std::vector<int> next;
        next.reserve(cols.size());
        for (std::size_t i = 0; i < groups.size(); ++i) {
          for (int x = 0; x < take[i]; ++x) next.push_back(groups[i].first - 1);
          for (int x = take[i]; x < groups[i].second; ++x) next.push_back(groups[i].first);
        }
        std::sort(next.begin(), next.end(), std::greater<>());
        while (!next.empty() && next.back() == 0) next.pop_back();
        total = (total + ways * count(row + 1, next)) % p;
        return;
      }
      for (int x = 0; x <= std::min(need, groups[g].second); ++x) {
        Residue b = binomial_mod(groups[g].second, x, p);
        if (b == 0) continue;
        take[g] = x;
        choose(g + 1, need - x, ways * b % p);
      }
      take[g] = 0;
    };
    choose(0, rho[row], 1);
    memo.emplace(std::move(key), Residue(total));
    return Residue(total);
  };
  Partition cols(kappa.begin(), kappa.end());
  std::sort(cols.begin(), cols.end(), std::greater<>());
  return count(0, cols);
}

SymmetricPoly to_monomial_basis(const GradedPoly& S) {
  const Ring& ring = S.ring();
  if (!ring.relations().empty())
    throw std::invalid_argument("symmetric rewriting needs a ring without relations, got " + ring.id());
  SymmetricPoly out;
  out.p = ring.characteristic();
  out.nvars = int(ring.num_generators());
  std::map<Partition, std::uint64_t> seen;
  for (const auto& t : S.terms()) {
    Partition lambda = sorted_partition(t.mono);
    auto [it, inserted] = out.coeffs.emplace(lambda, t.coeff);
    if (!inserted && it->second != t.coeff)
      throw std::invalid_argument("polynomial is not symmetric: coefficients differ within the orbit of " +
                                  ring.render(t.mono));
    ++seen[lambda];
  }
  for (const auto& [lambda, n] : seen)
    if (n != orbit_size(lambda, out.nvars))
      throw std::invalid_argument("polynomial is not symmetric: incomplete orbit for partition of size " +
                                  std::to_string(weight(lambda)));
  return out;
}

GradedPoly elementary_rewrite(const SymmetricPoly& S, const Ring& elementary) {
  if (elementary.characteristic() != S.p)
    throw std::invalid_argument("elementary ring characteristic mismatch");
  if (int(elementary.num_generators()) < S.nvars)
    throw std::invalid_argument("elementary ring has fewer generators than roots");
  const std::uint32_t p = S.p;
  // Lex-descending work list; the leading partition is the first entry.
  std::map<Partition, Residue, std::greater<>> work;
  for (const auto& [lambda, c] : S.coeffs) {
    if (int(lambda.size()) > S.nvars)
      throw std::invalid_argument("partition longer than the number of roots");
    if (c % p != 0) work[lambda] = c % p;
  }
  std::map<int, std::vector<Partition>> by_degree;
  std::vector<Term> result;
  while (!work.empty()) {
    auto lead = work.begin();
    const Partition lambda = lead->first;
    const Residue c = lead->second;
    // e_1^{l1-l2} e_2^{l2-l3} ... has leading monomial t^lambda.
    std::vector<Exponent> e(elementary.num_generators(), 0);
    Partition rho;  // conjugate partition: the e-indices of the product
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      int next = j + 1 < lambda.size() ? lambda[j + 1] : 0;
      e[j] = Exponent(lambda[j] - next);
    }
    for (int col = 1; col <= (lambda.empty() ? 0 : lambda[0]); ++col) {
      int len = 0;
      for (int x : lambda) len += x >= col;
      rho.push_back(len);
    }
    result.push_back({Monomial(std::move(e)), c});

    const int n = weight(lambda);
    auto [dit, fresh] = by_degree.try_emplace(n);
    if (fresh) dit->second = partitions(n, S.nvars);
    for (const auto& kappa : dit->second) {
      if (std::lexicographical_compare(lambda.begin(), lambda.end(), kappa.begin(), kappa.end())) continue;
      Residue k = elementary_product_coefficient(rho, kappa, p);
      if (k == 0) continue;
      auto& slot = work[kappa];
      slot = Residue((slot + std::uint64_t(p - c) * k) % p);
      if (slot == 0) work.erase(kappa);
    }
    if (work.count(lambda))
      throw std::logic_error("leading partition did not cancel during elementary rewrite");
  }
  return GradedPoly(elementary, std::move(result));
}

GradedPoly elementary_rewrite(const GradedPoly& S, const Ring& elementary) {
  return elementary_rewrite(to_monomial_basis(S), elementary);
}

GradedPoly elementary_symmetric(const Ring& roots, int j) {
  const int n = int(roots.num_generators());
  if (j < 0 || j > n) return GradedPoly(roots);
  std::vector<Term> terms;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - j, pick.end(), 1);
  do {
    std::vector<Exponent> e(pick.begin(), pick.end());
    terms.push_back({Monomial(std::move(e)), 1});
  } while (std::next_permutation(pick.begin(), pick.end()));
  return GradedPoly(roots, std::move(terms));
}

GradedPoly monomial_symmetric(const Ring& roots, const Partition& lambda) {
  const int n = int(roots.num_generators());
  if (int(lambda.size()) > n) return GradedPoly(roots);
  std::vector<int> exps(lambda.begin(), lambda.end());
  exps.resize(n, 0);
  std::sort(exps.begin(), exps.end());
  std::vector<Term> terms;
  do {
    std::vector<Exponent> e(exps.begin(), exps.end());
    terms.push_back({Monomial(std::move(e)), 1});
  } while (std::next_permutation(exps.begin(), exps.end()));
  return GradedPoly(roots, std::move(terms));
}

GradedPoly expand_elementary(const GradedPoly& E, const Ring& roots) {
  const Ring& er = E.ring();
  const int nu = int(roots.num_generators());
  std::vector<bool> used(er.num_generators(), false);
  for (const auto& t : E.terms())
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) used[i] = true;
  std::vector<GradedPoly> images;
  for (std::size_t i = 0; i < er.num_generators(); ++i) {
    int j = int(i) + 1;
    if (j > nu && used[i])
      throw std::invalid_argument("elementary generator " + er.generators()[i].name + " exceeds " +
                                  std::to_string(nu) + " roots");
    images.push_back(elementary_symmetric(roots, j));
  }
  return substitute(E, roots, images);
}

bool random_eval_check(const GradedPoly& S, const GradedPoly& E, int trials, std::uint64_t seed) {
  const std::uint32_t p = S.ring().characteristic();
  if (E.ring().characteristic() != p) throw std::invalid_argument("characteristic mismatch");
  const std::size_t nu = S.ring().num_generators();
  const std::size_t ne = E.ring().num_generators();
  std::mt19937_64 rng(seed);
  std::vector<Residue> point(nu), sigma(std::max(ne, nu) + 1);
  for (int trial = 0; trial < trials; ++trial) {
    for (auto& x : point) x = Residue(rng() % p);
    // sigma_j by the product prod(1 + x_i z).
    std::vector<std::uint64_t> s(nu + 1, 0);
    s[0] = 1;
    for (std::size_t i = 0; i < nu; ++i)
      for (std::size_t j = i + 1; j >= 1; --j) s[j] = (s[j] + s[j - 1] * point[i]) % p;
    std::vector<Residue> evals(ne, 0);
    for (std::size_t j = 0; j < ne; ++j) evals[j] = j + 1 <= nu ? Residue(s[j + 1]) : 0;
    if (evaluate(S, point) != evaluate(E, evals)) return false;
  }
  return true;
}

}  // namespace coinc::symfun
