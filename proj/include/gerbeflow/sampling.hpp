#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "gerbeflow/cartan.hpp"
#include "gerbeflow/hochschild.hpp"

namespace gerbeflow {

/// Deterministic generator used by every seeded suite. The name is part of the
/// report so that a change of algorithm is visible in the output.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi]. Uses rejection on raw 64-bit draws instead of
  /// std::uniform_int_distribution, whose output is implementation-defined.
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// Nonzero integer coefficient in [-3, 3].
  Rational coefficient();
  /// Integer coefficient in [-3, 3], zero allowed.
  Rational coefficient_or_zero() { return Rational(uniform(-3, 3)); }

 private:
  std::mt19937_64 engine_;
};

/// Monomial exponent in n variables with total degree <= max_deg.
MultiIndex random_exponent(Rng& rng, int n, int max_deg);

/// Sum of up to max_terms monomials with coefficients in [-3, 3].
Poly random_poly(Rng& rng, int n, int max_deg, const ArtinRing& ring, int max_terms = 3);

/// Homogeneous polyvector of degree k with up to max_terms basis terms.
MultiVector random_multivector(Rng& rng, const Chart& chart, int k, int max_deg, int max_terms = 2);
/// Homogeneous differential form of degree k.
DiffForm random_form(Rng& rng, const Chart& chart, int k, int max_deg, int max_terms = 2);

/// Multidifferential operator of the given arity: up to max_terms terms, each
/// slot of derivative order <= max_order, coefficients of degree <= max_deg.
MultiDiffOp random_mdo(Rng& rng, int n, int arity, int max_order, int max_deg, const ArtinRing& ring, int max_terms = 2);

/// Random strictly increasing tuple of k indices below n.
BasisSet random_basis(Rng& rng, int n, int k);

}  // namespace gerbeflow
