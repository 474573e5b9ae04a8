#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gerbeflow/poly.hpp"

namespace gerbeflow {

/// A polynomial chart: dimension plus coefficient ring.
struct Chart {
  int num_vars = 1;
  ArtinRing ring{};

  friend bool operator==(const Chart&, const Chart&) = default;
  Poly zero() const { return Poly(num_vars, ring); }
  Poly one() const { return Poly::constant(1, num_vars, ring); }
};

/// Set of basis directions (coordinate vector fields or coordinate covectors),
/// bit i set <=> index i present. Corresponds to the increasing tuple of set bits.
using BasisSet = std::uint32_t;

std::vector<int> basis_indices(BasisSet s);
BasisSet basis_set(const std::vector<int>& increasing);
inline int basis_degree(BasisSet s) { return __builtin_popcount(s); }
/// Sign of e_a ^ e_b relative to the sorted product e_{a|b}; 0 if they overlap.
int wedge_sign(BasisSet a, BasisSet b);
/// Sort an arbitrary tuple of indices: returns (sign, set), sign 0 for repeats.
std::pair<int, BasisSet> sort_tuple(const std::vector<int>& tuple);

struct VectorTag {};
struct FormTag {};

/// Element of the exterior algebra over polynomials on a chart: a finite sum of
/// p * e_{i_1} ^ ... ^ e_{i_k} with i_1 < ... < i_k. Mixed degrees are allowed.
/// Terms are ordered by (degree, increasing tuple lexicographically); zero
/// coefficients are pruned.
template <class Tag>
class Exterior {
 public:
  using Term = std::pair<BasisSet, Poly>;

  Exterior() = default;
  explicit Exterior(Chart chart) : chart_(std::move(chart)) {}
  Exterior(Chart chart, std::vector<Term> terms);

  /// p times the basis element on the given (arbitrary-order) tuple.
  static Exterior basis(const Chart& chart, const std::vector<int>& tuple, Poly coef);
  static Exterior basis(const Chart& chart, const std::vector<int>& tuple) { return basis(chart, tuple, chart.one()); }
  /// Degree-0 element.
  static Exterior function(Poly f);

  const Chart& chart() const noexcept { return chart_; }
  int num_vars() const noexcept { return chart_.num_vars; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Degree of a homogeneous element; -1 for zero; throws DomainError if mixed.
  int degree() const;
  bool is_homogeneous() const noexcept;
  /// Distinct degrees present, ascending.
  std::vector<int> degrees() const;
  Exterior homogeneous_part(int k) const;
  /// Coefficient of the given basis set (zero poly if absent).
  Poly coefficient(BasisSet s) const;
  int h_valuation() const noexcept;
  Exterior h_coefficient(int e) const;
  Exterior h_shifted(int e) const;
  int poly_degree() const noexcept;

  Exterior& operator+=(const Exterior& o);
  Exterior& operator-=(const Exterior& o);
  Exterior& operator*=(const Rational& c);
  Exterior operator-() const;
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend Exterior operator*(Exterior a, const Rational& c) { return a *= c; }
  friend Exterior operator*(const Rational& c, Exterior a) { return a *= c; }
  friend bool operator==(const Exterior& a, const Exterior& b) { return a.chart_ == b.chart_ && a.terms_ == b.terms_; }

  /// Multiply every coefficient by a function.
  Exterior times(const Poly& f) const;

  void check_same_chart(const Exterior& o) const;
  std::string to_string() const;

 private:
  void canonicalize();

  Chart chart_{};
  std::vector<Term> terms_;
};

using MultiVector = Exterior<VectorTag>;
using DiffForm = Exterior<FormTag>;

extern template class Exterior<VectorTag>;
extern template class Exterior<FormTag>;

/// Graded-commutative product of polyvector fields.
MultiVector mv_wedge(const MultiVector& pi, const MultiVector& rho);
/// Wedge product of differential forms.
DiffForm form_wedge(const DiffForm& a, const DiffForm& b);
/// Exterior derivative.
DiffForm de_rham_d(const DiffForm& a);

/// <alpha, f X_1 ^ ... ^ X_k> = f sum_i (-1)^{i-1} alpha(X_i) X_1 ^ .. X_i^ .. ^ X_k.
/// alpha must be of pure form degree 1.
MultiVector contract(const DiffForm& alpha, const MultiVector& pi);
/// Nested contraction, last element applied first: [b, a] gives <b, <a, pi>>.
MultiVector contract_iterated(const std::vector<DiffForm>& alphas, const MultiVector& pi);

/// Lie bracket of vector fields (degree-1 multivectors).
MultiVector lie_bracket(const MultiVector& x, const MultiVector& y);
/// X(f) for a vector field X.
Poly apply_vector_field(const MultiVector& x, const Poly& f);

/// Schouten bracket, bilinear in mixed-degree arguments. On f X_1..X_k, g Y_1..Y_l:
///   sum_i (-1)^{k-i} f X_i(g) X_1..X_i^..X_k Y_1..Y_l
/// + sum_j (-1)^j Y_j(f) g X_1..X_k Y_1..Y_j^..Y_l
/// + sum_{i,j} (-1)^{i+j} f g [X_i, Y_j] X_1..X_i^..X_k Y_1..Y_j^..Y_l.
/// With this sign in the first sum the bracket satisfies
/// [P,Q] = -(-1)^{(p-1)(q-1)}[Q,P], the graded Jacobi identity, and the
/// left Leibniz rule.
MultiVector schouten(const MultiVector& pi, const MultiVector& rho);

/// The same three-sum formula evaluated directly on decomposables whose factors
/// are arbitrary (polynomial-coefficient) vector fields.
MultiVector schouten_decomposable(const Poly& f, const std::vector<MultiVector>& xs, const Poly& g,
                                  const std::vector<MultiVector>& ys);

/// Wedge of a list of vector fields (empty list gives the constant 1).
MultiVector wedge_all(const Chart& chart, const std::vector<MultiVector>& factors);

}  // namespace gerbeflow
