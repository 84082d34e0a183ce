#pragma once

// Explicit coincident tuples for the local models: Morin canonical forms of
// Sigma^{1^k} singularities and the moment-curve map. Both constructions are
// templated on the scalar so they run in exact rationals or in doubles.

#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coinc::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Canonical form of a Sigma^{1^k} map germ R^m -> R^n.
struct MorinModel {
  int k = 1;
  int m = 1;
  int n = 1;

  /// Throws std::invalid_argument unless k >= 1, n >= m >= 1 and
  /// k(n - m + 1) <= m.
  void validate() const;
  /// 1-based index of the coordinate multiplying x_m^l in the last output.
  int last_coefficient_index(int l) const { return (n - m) * k + l; }
};

template <class Scalar>
struct CoincidentTuple {
  std::vector<std::vector<Scalar>> points;
  std::vector<Scalar> image;     // image of the first point
  Scalar residual{};             // max-norm spread of the images
  Scalar min_separation{};       // min max-norm distance between points
};

/// Image of x = (x_1..x_m) under the canonical form.
template <class Scalar>
std::vector<Scalar> morin_eval(std::span<const Scalar> x, const MorinModel& model);

/// Images of `points` under the model, with residual and separation.
template <class Scalar>
CoincidentTuple<Scalar> morin_verify(const MorinModel& model, std::vector<std::vector<Scalar>> points);

template <class Scalar>
struct MorinWitness {
  MorinModel model;
  std::vector<Scalar> roots;         // the k+1 values of x_m
  std::vector<Scalar> polynomial;    // coefficients c_0..c_{k+1} of prod (x - r_j)
  CoincidentTuple<Scalar> tuple;
};

/// Roots j - k/2, j = 0..k: distinct, summing to zero.
template <class Scalar>
std::vector<Scalar> default_roots(int k);

/// A coincident (k+1)-tuple of the canonical form. `roots` must be k+1
/// distinct values summing to zero; default_roots(k) when omitted.
template <class Scalar>
MorinWitness<Scalar> morin_tuple(int k, int m, int n, std::optional<std::vector<Scalar>> roots = std::nullopt);

/// f(x_1..x_{N+1}) = (x_1 - x_{N+1}^2, ..., x_N - x_{N+1}^{N+1}), N = n + d.
template <class Scalar>
std::vector<Scalar> moment_map(std::span<const Scalar> x);

/// Points (c_1 + t^2, ..., c_N + t^{N+1}, t) for the given q parameters t.
/// Throws std::invalid_argument if c has the wrong length, the t values
/// repeat, or t.size() != q.
template <class Scalar>
CoincidentTuple<Scalar> moment_tuple(int n, int d, int q, std::span<const Scalar> c, std::span<const Scalar> t);

double to_double(const Rational& r);
double to_double(double x);

}  // namespace coinc::oracle
