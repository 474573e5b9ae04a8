#include "gerbeflow/deligne.hpp"

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

NilpotentDGLA::NilpotentDGLA(Chart chart, Bracket bracket, Differential d, std::string name)
    : chart_(std::move(chart)), bracket_(std::move(bracket)), d_(std::move(d)), name_(std::move(name)) {}

NilpotentDGLA NilpotentDGLA::schouten(const Chart& chart) {
  return NilpotentDGLA(chart, [](const MultiVector& a, const MultiVector& b) { return gerbeflow::schouten(a, b); },
                       [chart](const MultiVector&) { return MultiVector(chart); }, "schouten");
}

NilpotentDGLA NilpotentDGLA::schouten_twisted_by(const MultiVector& pi0) {
  if (!pi0.is_zero() && (!pi0.is_homogeneous() || pi0.degree() != 2))
    throw DomainError("schouten_twisted_by: the differential needs a bivector");
  if (!gerbeflow::schouten(pi0, pi0).is_zero()) throw DomainError("schouten_twisted_by: [pi0, pi0] != 0, so d would not square to zero");
  return NilpotentDGLA(pi0.chart(), [](const MultiVector& a, const MultiVector& b) { return gerbeflow::schouten(a, b); },
                       [pi0](const MultiVector& x) { return gerbeflow::schouten(pi0, x); }, "schouten, d = [pi0, .]");
}

NilpotentDGLA NilpotentDGLA::abelian(const Chart& chart, Differential d) {
  if (!d) d = [chart](const MultiVector&) { return MultiVector(chart); };
  return NilpotentDGLA(chart, [chart](const MultiVector&, const MultiVector&) { return MultiVector(chart); }, std::move(d),
                       "abelian");
}

NilpotentDGLA NilpotentDGLA::custom(const Chart& chart, Bracket bracket, Differential d, std::string name) {
  if (!bracket || !d) throw DomainError("custom DGLA needs both a bracket and a differential");
  return NilpotentDGLA(chart, std::move(bracket), std::move(d), std::move(name));
}

MultiVector NilpotentDGLA::bracket(const MultiVector& a, const MultiVector& b) const {
  if (!(a.chart() == chart_) || !(b.chart() == chart_)) throw StructuralError("DGLA bracket: chart mismatch");
  MultiVector r = bracket_(a, b);
  // Everything above shifted degree 2 is outside the carrier.
  for (int k : r.degrees())
    if (k > 3) r -= r.homogeneous_part(k);
  return r;
}

MultiVector NilpotentDGLA::d(const MultiVector& a) const {
  if (!(a.chart() == chart_)) throw StructuralError("DGLA differential: chart mismatch");
  MultiVector r = d_(a);
  for (int k : r.degrees())
    if (k > 3) r -= r.homogeneous_part(k);
  return r;
}

void NilpotentDGLA::check_element(const MultiVector& x, int shifted_degree, const char* what) const {
  if (!(x.chart() == chart_)) throw StructuralError(std::string(what) + ": chart mismatch");
  if (shifted_degree < -1 || shifted_degree > 2) throw DomainError(std::string(what) + ": degree outside -1..2");
  if (x.is_zero()) return;
  if (!x.is_homogeneous() || x.degree() != shifted_degree + 1)
    throw DomainError(std::string(what) + ": expected an element of degree " + std::to_string(shifted_degree));
  if (x.h_valuation() < 1) throw DomainError(std::string(what) + ": coefficients must lie in the maximal ideal (h)");
}

MultiVector is_mc(const NilpotentDGLA& g, const MultiVector& gamma) {
  g.check_element(gamma, 1, "is_mc");
  return g.d(gamma) + g.bracket(gamma, gamma) * Rational(1, 2);
}

MultiVector gauge_action(const NilpotentDGLA& g, const MultiVector& lambda, const MultiVector& gamma) {
  g.check_element(lambda, 0, "gauge_action (lambda)");
  g.check_element(gamma, 1, "gauge_action (gamma)");
  MultiVector term = g.bracket(lambda, gamma) - g.d(lambda);
  MultiVector total = gamma;
  Rational inv_fact = 1;
  for (int k = 0; !term.is_zero(); ++k) {
    inv_fact /= (k + 1);
    total += term * inv_fact;
    term = g.bracket(lambda, term);
    if (k > g.order() + 1) throw DomainError("gauge_action: adjoint action failed to vanish; the bracket is not nilpotent");
  }
  return total;
}

MultiVector bch(const NilpotentDGLA& g, const MultiVector& a, const MultiVector& b) {
  g.check_element(a, 0, "bch");
  g.check_element(b, 0, "bch");
  return dynkin_bch(
      a, b, g.order() - 1, MultiVector(g.chart()), [&g](const MultiVector& x, const MultiVector& y) { return g.bracket(x, y); },
      [](const MultiVector& x, const Rational& c) { return x * c; });
}

MultiVector bch_inverse(const MultiVector& a) { return -a; }

MultiVector two_cell_target(const NilpotentDGLA& g, const MultiVector& lambda, const MultiVector& a, const MultiVector& gamma) {
  g.check_element(lambda, 0, "two_cell_target (lambda)");
  g.check_element(a, -1, "two_cell_target (a)");
  g.check_element(gamma, 1, "two_cell_target (gamma)");
  return bch(g, lambda, g.d(a) + g.bracket(gamma, a));
}

}  // namespace gerbeflow
