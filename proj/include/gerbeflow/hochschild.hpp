#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gerbeflow/cartan.hpp"

namespace gerbeflow {

/// Multidifferential operator on A = Q[x_1..x_n] (coefficients in the Artin ring):
///   D(a_1, .., a_p) = sum_t coef_t * d^{beta_t1} a_1 * ... * d^{beta_tp} a_p.
/// Terms are keyed by their beta tuple, kept sorted, with zero coefficients pruned.
class MultiDiffOp {
 public:
  using Betas = std::vector<MultiIndex>;
  using Term = std::pair<Betas, Poly>;

  MultiDiffOp() = default;
  MultiDiffOp(int num_vars, ArtinRing ring, int arity);
  MultiDiffOp(int num_vars, ArtinRing ring, int arity, std::vector<Term> terms);

  /// The 0-cochain a.
  static MultiDiffOp element(const Poly& a);
  /// m_A(a, b) = ab.
  static MultiDiffOp multiplication(int num_vars, ArtinRing ring = ArtinRing{});
  /// id(a) = a.
  static MultiDiffOp identity(int num_vars, ArtinRing ring = ArtinRing{});
  /// coef * d^{beta_1} (.) ... d^{beta_p} (.)
  static MultiDiffOp monomial(const Poly& coef, Betas betas);

  int num_vars() const noexcept { return num_vars_; }
  const ArtinRing& ring() const noexcept { return ring_; }
  int arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest total derivative order in a single slot; -1 for zero.
  int order() const noexcept;

  MultiDiffOp& operator+=(const MultiDiffOp& o);
  MultiDiffOp& operator-=(const MultiDiffOp& o);
  MultiDiffOp& operator*=(const Rational& c);
  MultiDiffOp operator-() const;
  friend MultiDiffOp operator+(MultiDiffOp a, const MultiDiffOp& b) { return a += b; }
  friend MultiDiffOp operator-(MultiDiffOp a, const MultiDiffOp& b) { return a -= b; }
  friend MultiDiffOp operator*(MultiDiffOp a, const Rational& c) { return a *= c; }
  friend MultiDiffOp operator*(const Rational& c, MultiDiffOp a) { return a *= c; }
  /// The zero operator is compatible with every arity: sums and comparisons
  /// involving it ignore its nominal arity.
  friend bool operator==(const MultiDiffOp& a, const MultiDiffOp& b) {
    return a.num_vars_ == b.num_vars_ && a.ring_ == b.ring_ && (a.arity_ == b.arity_ || a.is_zero()) &&
           a.terms_ == b.terms_;
  }

  void check_same_space(const MultiDiffOp& o) const;
  std::string to_string() const;

 private:
  void canonicalize();

  int num_vars_ = 1;
  ArtinRing ring_{};
  int arity_ = 0;
  std::vector<Term> terms_;
};

/// Evaluate on p polynomials.
Poly mdo_eval(const MultiDiffOp& D, const std::vector<Poly>& args);

/// D o_i E (1-based slot): E's output fed into slot i of D, expanded in closed
/// form by the generalized Leibniz rule.
MultiDiffOp gerst_compose_i(const MultiDiffOp& D, const MultiDiffOp& E, int i);
/// D o E = sum_i (-1)^{(i-1)(q-1)} D o_i E.
MultiDiffOp gerst_compose(const MultiDiffOp& D, const MultiDiffOp& E);
/// [D, E] = D o E - (-1)^{(p-1)(q-1)} E o D.
MultiDiffOp gerstenhaber_bracket(const MultiDiffOp& D, const MultiDiffOp& E);
/// delta D = [m_A, D].
MultiDiffOp hochschild_delta(const MultiDiffOp& D);
/// The textbook coboundary a_0 D(a_1..) + sum_i (-1)^i D(.., a_{i-1} a_i, ..) + (-1)^{p+1} D(..) a_p.
/// Relation: hochschild_delta(D) = (-1)^{p-1} hochschild_delta_standard(D).
MultiDiffOp hochschild_delta_standard(const MultiDiffOp& D);
/// (D u E)(a_1..a_{p+q}) = D(a_1..a_p) E(a_{p+1}..a_{p+q}).
MultiDiffOp cup(const MultiDiffOp& D, const MultiDiffOp& E);
/// D{E_1..E_k}: every order-preserving placement of the E_j into distinct slots of D,
/// with sign sum_j (q_j - 1)(number of final inputs to the left of E_j).
MultiDiffOp brace(const MultiDiffOp& D, const std::vector<MultiDiffOp>& Es);

/// sum_{i=0}^{p-1} (-1)^i D(a_1, .., a_i, a, a_{i+1}, ..). Equals [D, a].
MultiDiffOp i_a_displayed(const Poly& a, const MultiDiffOp& D);
/// The adjoint action [a, D] = (-1)^p i_a_displayed(a, D). Anticommutes with delta
/// and is a derivation of the bracket of shifted degree -1.
MultiDiffOp i_a_cochain(const Poly& a, const MultiDiffOp& D);

/// Alternation map: hkr(f X_1^..^X_k)(a_1..a_k) = (f/k!) sum_sigma sgn(sigma) X_sigma(1)(a_1)..X_sigma(k)(a_k).
MultiDiffOp hkr(const MultiVector& pi);

/// Outcome of comparing i_a on cochains with contraction by da on multivectors:
/// i_a(hkr(pi)) against hkr(<da, pi>).
struct HkrIaComparison {
  /// c with i_a(hkr pi) = c * hkr(<da, pi>), when hkr(<da, pi>) is nonzero and
  /// such a scalar exists.
  std::optional<Rational> ratio;
  bool both_zero = false;
  MultiDiffOp lhs;
  MultiDiffOp rhs;
};
HkrIaComparison compare_hkr_ia(const Poly& a, const MultiVector& pi);

}  // namespace gerbeflow
