#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gerbeflow/cartan.hpp"
#include "gerbeflow/permutation.hpp"

namespace gerbeflow {

/// Multilinear operator on multivectors, given by an evaluator on homogeneous
/// arguments. Equality is decided by evaluation (see agree_on_span).
class Cochain {
 public:
  using Evaluator = std::function<MultiVector(std::span<const MultiVector>)>;

  Cochain(int arity, int sign_degree, Chart chart, std::string tag, Evaluator eval);

  int arity() const noexcept { return arity_; }
  int sign_degree() const noexcept { return sign_degree_; }
  const Chart& chart() const noexcept { return chart_; }
  const std::string& tag() const noexcept { return tag_; }

  /// Multilinear extension: mixed-degree arguments are split into homogeneous
  /// parts and the evaluator is summed over every choice.
  MultiVector operator()(std::span<const MultiVector> args) const;
  MultiVector operator()(std::initializer_list<MultiVector> args) const {
    return (*this)(std::span<const MultiVector>(args.begin(), args.size()));
  }

 private:
  int arity_;
  int sign_degree_;
  Chart chart_;
  std::string tag_;
  std::shared_ptr<const Evaluator> eval_;
};

/// m(pi, rho) = (-1)^{|pi|} [pi, rho]; arity 2, sign degree 1.
Cochain m_cochain(const Chart& chart);

/// Phi of the degree-k part of omega (which may be zero): arity k, sign degree k-2.
/// Phi(omega)(pi_1..pi_k) = (-1)^{sum_{i<k} (k-i)(|pi_i|-1)}
///                          sum_sigma sgn(sigma) <a_sigma(1), pi_1> ^ ... ^ <a_sigma(k), pi_k>
/// on decomposables a_1 ^ ... ^ a_k; Phi(f) is the constant f.
Cochain phi_component(const DiffForm& omega, int k);
/// One handle per form degree present in omega, ascending.
std::vector<Cochain> phi_of_form(const DiffForm& omega);

/// (phi o psi)(pi_1..pi_{k+l-1}) = 1/(k!(l-1)!) sum_{sigma in S_{k+l-1}} eps(sigma, |pi|)
///     phi(psi(pi_sigma(1), .., pi_sigma(k)), pi_sigma(k+1), ..),
/// k = arity(psi), l = arity(phi) >= 1. The Koszul sign uses polyvector degrees.
Cochain ce_compose(const Cochain& phi, const Cochain& psi);

/// [phi, psi] = phi o psi - (-1)^{|phi||psi|} psi o phi. A side whose outer
/// operator has arity 0 contributes nothing.
Cochain ce_bracket(const Cochain& phi, const Cochain& psi);

/// d(phi) = [phi, m], the right adjoint action of m. It squares to zero and
/// sends Phi(omega) to Phi(d omega) in every degree. On odd cochains it equals
/// [m, phi]; on even ones it differs from [m, phi] by a sign.
Cochain ce_differential(const Cochain& phi);

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator*(const Rational& c, const Cochain& a);

/// One sigma-term of a composition, for audit output.
struct TraceTerm {
  Permutation sigma;
  int eps;
  MultiVector inner;
  MultiVector value;
};
/// Evaluates phi o psi on homogeneous arguments, recording every sigma-term
/// (before the 1/(k!(l-1)!) prefactor). Returns the weighted total.
MultiVector ce_compose_trace(const Cochain& phi, const Cochain& psi, std::span<const MultiVector> args,
                             std::vector<TraceTerm>& trace);

/// Monomial multivectors x^a d_I with |a| <= poly_deg and |I| <= mv_deg.
std::vector<MultiVector> spanning_family(const Chart& chart, int poly_deg, int mv_deg);

struct Disagreement {
  std::vector<MultiVector> args;
  MultiVector lhs;
  MultiVector rhs;
};
/// Compares two cochains of equal arity on every tuple drawn from the spanning
/// family. Returns the first disagreement, if any.
std::optional<Disagreement> agree_on_span(const Cochain& a, const Cochain& b, int poly_deg, int mv_deg);

}  // namespace gerbeflow
