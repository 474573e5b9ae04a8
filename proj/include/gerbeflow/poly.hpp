#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gerbeflow/multi_index.hpp"
#include "gerbeflow/scalar.hpp"

namespace gerbeflow {

/// Polynomial in x_0..x_{n-1} with coefficients in Q[h]/(h^N).
///
/// Terms are kept sorted by exponent (lexicographic), with zero coefficients
/// pruned, so two polynomials are equal iff their term lists are equal.
class Poly {
 public:
  using Term = std::pair<MultiIndex, Scalar>;

  Poly() : Poly(1) {}
  explicit Poly(int num_vars, ArtinRing ring = ArtinRing{});
  /// Canonicalizes: sorts, merges duplicate exponents, prunes zeros.
  Poly(int num_vars, ArtinRing ring, std::vector<Term> terms);

  static Poly constant(const Rational& c, int num_vars, ArtinRing ring = ArtinRing{});
  static Poly constant(const Scalar& c, int num_vars, ArtinRing ring);
  static Poly variable(int var, int num_vars, ArtinRing ring = ArtinRing{});
  static Poly monomial(const MultiIndex& exp, const Rational& c, int num_vars, ArtinRing ring = ArtinRing{});
  /// c * h^e.
  static Poly h_power(int e, int num_vars, ArtinRing ring);

  int num_vars() const noexcept { return num_vars_; }
  const ArtinRing& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total x-degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Smallest h-exponent over all coefficients; ring order for zero.
  int h_valuation() const noexcept;
  /// The h^e coefficient as an h-free polynomial over the same ring.
  Poly h_coefficient(int e) const;
  /// Truncate to h-exponents < e.
  Poly h_truncated(int e) const;
  /// Multiply by h^e.
  Poly h_shifted(int e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Scalar& c);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.num_vars_ == b.num_vars_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  bool same_space(const Poly& o) const noexcept { return num_vars_ == o.num_vars_ && ring_ == o.ring_; }
  void check_same_space(const Poly& o) const;

  std::string to_string() const;

 private:
  void canonicalize();

  int num_vars_;
  ArtinRing ring_;
  std::vector<Term> terms_;
};

/// Exact product, truncated at h^N.
Poly poly_mul(const Poly& p, const Poly& q);
/// d/dx_i; throws DomainError when i is out of range.
Poly poly_partial(const Poly& p, int i);
/// d^beta (iterated partials).
Poly poly_partial(const Poly& p, const MultiIndex& beta);

}  // namespace gerbeflow
