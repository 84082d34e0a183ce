#include "coinc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coinc::oracle {

namespace {

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <class Scalar>
Scalar max_norm_distance(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar best(0);
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, abs_value<Scalar>(a[i] - b[i]));
  return best;
}

template <class Scalar>
CoincidentTuple<Scalar> summarize(std::vector<std::vector<Scalar>> points,
                                  const std::vector<std::vector<Scalar>>& images) {
  CoincidentTuple<Scalar> out;
  out.image = images.front();
  out.residual = Scalar(0);
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      out.residual = std::max(out.residual, max_norm_distance(images[i], images[j]));
      Scalar sep = max_norm_distance(points[i], points[j]);
      if (first || sep < out.min_separation) out.min_separation = sep;
      first = false;
    }
  }
  out.points = std::move(points);
  return out;
}

template <class Scalar>
Scalar ipow(const Scalar& x, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

void MorinModel::validate() const {
  if (k < 1) throw std::invalid_argument("Morin model needs k >= 1");
  if (m < 1 || n < m) throw std::invalid_argument("Morin model needs n >= m >= 1");
  if (k * (n - m + 1) > m)
    throw std::invalid_argument("Morin model needs k(n - m + 1) <= m (got k=" + std::to_string(k) +
                                ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
}

template <class Scalar>
std::vector<Scalar> morin_eval(std::span<const Scalar> x, const MorinModel& model) {
  model.validate();
  if (int(x.size()) != model.m)
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, model expects " +
                                std::to_string(model.m));
  const int k = model.k, m = model.m, n = model.n;
  auto X = [&](int i) -> const Scalar& { return x[std::size_t(i - 1)]; };
  const Scalar& xm = X(m);
  std::vector<Scalar> y;
  y.reserve(std::size_t(n));
  for (int i = 1; i <= m - 1; ++i) y.push_back(X(i));
  for (int i = m; i <= n - 1; ++i) {
    Scalar s(0);
    for (int l = 1; l <= k; ++l) s += X((i - m) * k + l) * ipow(xm, l);
    y.push_back(s);
  }
  Scalar last = ipow(xm, k + 1);
  for (int l = 1; l <= k - 1; ++l) last += X((n - m) * k + l) * ipow(xm, l);
  y.push_back(last);
  return y;
}

template <class Scalar>
CoincidentTuple<Scalar> morin_verify(const MorinModel& model, std::vector<std::vector<Scalar>> points) {
  if (points.size() < 2) throw std::invalid_argument("a tuple needs at least two points");
  std::vector<std::vector<Scalar>> images;
  for (const auto& p : points) images.push_back(morin_eval<Scalar>(p, model));
  return summarize(std::move(points), images);
}

template <class Scalar>
std::vector<Scalar> default_roots(int k) {
  std::vector<Scalar> r;
  for (int j = 0; j <= k; ++j) r.push_back(Scalar(2 * j - k) / Scalar(2));
  return r;
}

template <class Scalar>
MorinWitness<Scalar> morin_tuple(int k, int m, int n, std::optional<std::vector<Scalar>> roots) {
  MorinModel model{k, m, n};
  model.validate();
  std::vector<Scalar> r = roots ? *roots : default_roots<Scalar>(k);
  if (int(r.size()) != k + 1) throw std::invalid_argument("need exactly k+1 roots");
  Scalar sum(0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    sum += r[i];
    for (std::size_t j = 0; j < i; ++j)
      if (r[i] == r[j]) throw std::invalid_argument("roots must be pairwise distinct");
  }
  if (sum != Scalar(0)) throw std::invalid_argument("roots must sum to zero (no x_m^k term in the normal form)");

  // prod (x - r_j), coefficients in increasing degree.
  std::vector<Scalar> poly{Scalar(1)};
  for (const auto& root : r) {
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }

  // Linear rows vanish; the last row carries c_1..c_{k-1}.
  std::vector<Scalar> base(std::size_t(m), Scalar(0));
  for (int l = 1; l <= k - 1; ++l) base[std::size_t(model.last_coefficient_index(l) - 1)] = poly[std::size_t(l)];
  std::vector<std::vector<Scalar>> points;
  for (const auto& root : r) {
    auto pt = base;
    pt[std::size_t(m - 1)] = root;
    points.push_back(std::move(pt));
  }
  return {model, r, poly, morin_verify(model, std::move(points))};
}

template <class Scalar>
std::vector<Scalar> moment_map(std::span<const Scalar> x) {
  if (x.size() < 2) throw std::invalid_argument("moment map needs at least two coordinates");
  const std::size_t N = x.size() - 1;
  const Scalar& t = x[N];
  std::vector<Scalar> y;
  y.reserve(N);
  for (std::size_t i = 0; i < N; ++i) y.push_back(x[i] - ipow(t, int(i) + 2));
  return y;
}

template <class Scalar>
CoincidentTuple<Scalar> moment_tuple(int n, int d, int q, std::span<const Scalar> c, std::span<const Scalar> t) {
  const int N = n + d;
  if (N < 1) throw std::invalid_argument("moment curve needs n + d >= 1");
  if (int(c.size()) != N) throw std::invalid_argument("c must have n + d entries");
  if (q < 2 || int(t.size()) != q) throw std::invalid_argument("need q >= 2 parameter values");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (t[i] == t[j]) throw std::invalid_argument("moment curve parameters must be distinct");
  std::vector<std::vector<Scalar>> points, images;
  for (const auto& ti : t) {
    std::vector<Scalar> pt;
    for (int i = 0; i < N; ++i) pt.push_back(c[std::size_t(i)] + ipow(ti, i + 2));
    pt.push_back(ti);
    images.push_back(moment_map<Scalar>(pt));
    points.push_back(std::move(pt));
  }
  return summarize(std::move(points), images);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }
double to_double(double x) { return x; }

#define COINC_INSTANTIATE(S)                                                                          \
  template std::vector<S> morin_eval<S>(std::span<const S>, const MorinModel&);                       \
  template CoincidentTuple<S> morin_verify<S>(const MorinModel&, std::vector<std::vector<S>>);        \
  template std::vector<S> default_roots<S>(int);                                                      \
  template MorinWitness<S> morin_tuple<S>(int, int, int, std::optional<std::vector<S>>);              \
  template std::vector<S> moment_map<S>(std::span<const S>);                                          \
  template CoincidentTuple<S> moment_tuple<S>(int, int, int, std::span<const S>, std::span<const S>);

COINC_INSTANTIATE(Rational)
COINC_INSTANTIATE(double)

#undef COINC_INSTANTIATE

}  // namespace coinc::oracle
