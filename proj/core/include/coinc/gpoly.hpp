#pragma once

// Sparse graded-commutative polynomials over Z_p, modulo monomial ideals.
//
// A Ring is an immutable, shared presentation: a prime characteristic, an
// ordered list of graded generators and a set of monomials declared zero.
// GradedPoly values always live in normal form: no stored term is divisible
// by a relation monomial and every coefficient is a residue in [0, p).
//
// Terms are kept in the canonical order: descending total (weighted) degree,
// ties broken lexicographically by exponent in generator declaration order.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coinc {

using Residue = std::uint32_t;
using Exponent = std::uint16_t;

struct Generator {
  std::string name;
  int degree = 1;
};

/// Exponents listed by generator name, e.g. {{"b", 2}, {"c", 2}}.
using ExponentMap = std::vector<std::pair<std::string, unsigned>>;

/// Exponent vector indexed by the owning ring's generator order.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return i < exps_.size() ? exps_[i] : 0; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;  // trailing zeros trimmed
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Residue coeff = 0;
};

class RingPresentation;

/// Shared handle to an immutable ring presentation.
class Ring {
 public:
  /// Throws std::invalid_argument on non-prime p, duplicate or empty names,
  /// degree < 1, or relations naming undeclared generators.
  static Ring create(std::uint32_t p, std::vector<Generator> generators,
                     const std::vector<ExponentMap>& relations = {});

  /// Z_p[g_1..g_k]/(g_1^{n_1}, ...); a power of 0 means "no truncation".
  static Ring truncated(std::uint32_t p, std::vector<Generator> generators,
                        const std::vector<unsigned>& powers);

  std::uint32_t characteristic() const;
  std::span<const Generator> generators() const;
  std::size_t num_generators() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  const std::vector<Monomial>& relations() const;

  Monomial monomial(const ExponentMap& exps) const;
  int degree(const Monomial& m) const;
  bool is_zero(const Monomial& m) const;
  /// Canonical order: true if a precedes b (higher degree, then lex-larger).
  bool precedes(const Monomial& a, const Monomial& b) const;

  /// Upper bound on the degree of a nonzero monomial when every generator is
  /// nilpotent by a pure-power relation; empty otherwise.
  std::optional<int> top_degree() const;

  /// Human-readable presentation, e.g. "Z2[u]/(u^3)". Two rings are equal
  /// iff their presentations are identical.
  const std::string& id() const;
  std::string render(const Monomial& m) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  explicit Ring(std::shared_ptr<const RingPresentation> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const RingPresentation> impl_;
};

class GradedPoly {
 public:
  /// Zero polynomial in `ring`.
  explicit GradedPoly(Ring ring);
  /// Normal form of an arbitrary term list (duplicates merged, coefficients
  /// reduced, relation-divisible terms dropped).
  GradedPoly(Ring ring, std::vector<Term> raw_terms);

  static GradedPoly constant(const Ring& ring, long long c);
  static GradedPoly gen(const Ring& ring, std::string_view name);
  static GradedPoly monomial(const Ring& ring, const ExponentMap& exps, long long c = 1);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Residue constant_term() const;
  Residue coefficient(const Monomial& m) const;
  /// True when every term has the same degree (the zero polynomial counts).
  bool is_homogeneous() const;
  /// Degree of the leading term; empty for zero.
  std::optional<int> degree() const;

  GradedPoly& operator+=(const GradedPoly& g);
  GradedPoly& operator-=(const GradedPoly& g);
  GradedPoly& operator*=(const GradedPoly& g);

  friend GradedPoly operator+(GradedPoly f, const GradedPoly& g) { return f += g; }
  friend GradedPoly operator-(GradedPoly f, const GradedPoly& g) { return f -= g; }
  friend GradedPoly operator*(const GradedPoly& f, const GradedPoly& g);
  friend GradedPoly operator*(long long c, const GradedPoly& f);
  GradedPoly operator-() const;

  friend bool operator==(const GradedPoly& f, const GradedPoly& g);

  /// Deterministic rendering, e.g. "w1^3 + w1*w2"; "0" for zero.
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;  // canonical order, nonzero, normal form
};

GradedPoly pow(const GradedPoly& f, unsigned n);

/// Reduce a raw term list modulo the ring's relations and characteristic.
GradedPoly normal_form(const Ring& ring, std::vector<Term> raw_terms);
/// Idempotent re-normalization of an existing value.
GradedPoly normal_form(const GradedPoly& f);

/// Coefficient of the exact monomial `selector` in the generators it names
/// (zero exponents allowed): the sum of matching terms with those generators
/// removed. Result stays in f's ring.
GradedPoly coefficient_of(const GradedPoly& f, const ExponentMap& selector);

/// Sum of the terms of degree k.
GradedPoly graded_component(const GradedPoly& f, int k);

/// Terms of degree <= max_degree.
GradedPoly truncate_degree(const GradedPoly& f, int max_degree);

/// Inverse of a series with constant term 1, computed up to degree `trunc`.
/// Throws std::invalid_argument if the constant term is not 1.
GradedPoly invert_unit_series(const GradedPoly& f, int trunc);

/// Ring homomorphism: generator i of f's ring is sent to images[i].
GradedPoly substitute(const GradedPoly& f, const Ring& target,
                      std::span<const GradedPoly> images);

/// Move f into `target`, matching generators by name. Throws if a generator
/// used by f is absent from target or the characteristics differ.
GradedPoly transfer(const GradedPoly& f, const Ring& target);

/// Value of f with generator i set to values[i] (mod p).
Residue evaluate(const GradedPoly& f, std::span<const Residue> values);

/// Parse the text rendering ("2*x^4 + w1*w2 - 1") into `ring`.
GradedPoly parse_poly(const Ring& ring, std::string_view text);

bool is_prime(std::uint64_t n);
Residue mod_p(long long c, std::uint32_t p);

}  // namespace coinc
