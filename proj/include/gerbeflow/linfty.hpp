#pragma once

#include <optional>
#include <string>

#include "gerbeflow/ce_complex.hpp"

namespace gerbeflow {

/// Multivectors with l2 = m and l3 = Phi(H) for a closed 3-form H.
class TwistedLInfty {
 public:
  /// Throws DomainError unless H is zero or of pure degree 3 with dH = 0.
  static TwistedLInfty make(const DiffForm& H);
  /// Skips the closedness check (negative controls only). H must still be of degree 3.
  static TwistedLInfty make_unchecked(const DiffForm& H);

  const Chart& chart() const noexcept { return chart_; }
  const ArtinRing& ring() const noexcept { return chart_.ring; }
  const DiffForm& H() const noexcept { return H_; }
  const Cochain& l2() const noexcept { return l2_; }
  const Cochain& l3() const noexcept { return l3_; }
  bool is_closed() const { return de_rham_d(H_).is_zero(); }

 private:
  TwistedLInfty(DiffForm H);

  Chart chart_;
  DiffForm H_;
  Cochain l2_;
  Cochain l3_;
};

/// d(l3); zero iff dH = 0, in which case it equals Phi(dH) = 0.
Cochain jacobi_defect_4(const TwistedLInfty& L);
/// [l3, l3]; zero by the abelian image of Phi.
Cochain jacobi_defect_5(const TwistedLInfty& L);

/// Bivector whose coefficients all lie in the maximal ideal (h).
class MCElement {
 public:
  /// Throws DomainError if pi is not of pure degree 2 or has an h-free term.
  explicit MCElement(MultiVector pi);
  const MultiVector& pi() const noexcept { return pi_; }

 private:
  MultiVector pi_;
};

/// [pi, pi] - Phi(H)(pi, pi, pi).
MultiVector mc_residual(const TwistedLInfty& L, const MCElement& pi);
MultiVector mc_residual(const TwistedLInfty& L, const MultiVector& pi);

struct MCSolveResult {
  bool solved = false;
  /// Order of the first obstruction, or the requested order when solved.
  int order = 0;
  MultiVector pi;
  /// Residual of pi reduced mod h^N; zero when solved.
  MultiVector residual;
};

/// Extends pi = h pi1 + h^2 pi2 + ... order by order so that the residual
/// vanishes mod h^N. At order n the unknown pi_{n-1} solves
/// 2[pi1, pi_{n-1}] = -(h^n part of the residual with pi_{n-1} = 0)
/// over polynomial coefficients of degree <= degree_cap. Ties are broken by
/// exact row reduction with pivots taken in lexicographic unknown order and
/// free unknowns set to zero.
MCSolveResult mc_solve(const TwistedLInfty& L, const MultiVector& pi1, int max_order, int degree_cap = 2);

/// exp(ad_lambda)(x) for the Schouten bracket, summed until the terms vanish.
MultiVector exp_ad(const MultiVector& lambda, const MultiVector& x);

/// exp(ad_lambda)(pi) when H = 0; throws UnsupportedError otherwise.
MCElement gauge_apply_untwisted(const TwistedLInfty& L, const MultiVector& lambda, const MCElement& pi);

/// Reduce every coefficient mod h^e.
MultiVector h_truncated(const MultiVector& x, int e);

}  // namespace gerbeflow
