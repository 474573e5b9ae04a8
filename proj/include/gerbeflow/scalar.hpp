#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace gerbeflow {

using Rational = mpq_class;

/// The coefficient ring Q[h]/(h^N). N = 1 is plain Q.
class ArtinRing {
 public:
  explicit ArtinRing(int order = 1, std::string param_name = "h");

  int order() const noexcept { return order_; }
  const std::string& param_name() const noexcept { return param_name_; }

  friend bool operator==(const ArtinRing& a, const ArtinRing& b) {
    return a.order_ == b.order_ && a.param_name_ == b.param_name_;
  }

 private:
  int order_;
  std::string param_name_;
};

/// Element of Q[h]/(h^N): sparse list of (h-exponent, nonzero rational),
/// sorted by exponent, every exponent < N.
class Scalar {
 public:
  using Term = std::pair<int, Rational>;

  Scalar() = default;
  explicit Scalar(int order);
  Scalar(const Rational& value, int order);
  static Scalar monomial(const Rational& c, int exponent, int order);

  int order() const noexcept { return order_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Lowest h-exponent present; order() for zero.
  int valuation() const noexcept;
  Rational coeff(int exponent) const;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_constant() const noexcept;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Rational& c);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Rational& c) { return a *= c; }
  friend Scalar operator*(const Rational& c, Scalar a) { return a *= c; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Multiply by h^e (truncating).
  Scalar shifted(int e) const;

  std::string to_string() const;

 private:
  void check_same_ring(const Scalar& o) const;

  int order_ = 1;
  std::vector<Term> terms_;
};

/// Canonical "a/b" text of a rational (denominator always printed).
std::string rational_to_string(const Rational& q);
/// Accepts "a/b" or "a"; throws ParseError otherwise.
Rational rational_from_string(const std::string& s);

}  // namespace gerbeflow
