#include "gerbeflow/linfty.hpp"

#include <map>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

namespace {

void require_degree_three(const DiffForm& H) {
  if (!H.is_zero() && (!H.is_homogeneous() || H.degree() != 3))
    throw DomainError("the twisting form H must be of pure degree 3");
}

}  // namespace

TwistedLInfty::TwistedLInfty(DiffForm H)
    : chart_(H.chart()), H_(std::move(H)), l2_(m_cochain(chart_)), l3_(phi_component(H_, 3)) {}

TwistedLInfty TwistedLInfty::make(const DiffForm& H) {
  require_degree_three(H);
  if (!de_rham_d(H).is_zero()) throw DomainError("the twisting form H is not closed: dH = " + de_rham_d(H).to_string());
  return TwistedLInfty(H);
}

TwistedLInfty TwistedLInfty::make_unchecked(const DiffForm& H) {
  require_degree_three(H);
  return TwistedLInfty(H);
}

Cochain jacobi_defect_4(const TwistedLInfty& L) { return ce_differential(L.l3()); }

Cochain jacobi_defect_5(const TwistedLInfty& L) { return ce_bracket(L.l3(), L.l3()); }

MCElement::MCElement(MultiVector pi) : pi_(std::move(pi)) {
  if (!pi_.is_zero() && (!pi_.is_homogeneous() || pi_.degree() != 2))
    throw DomainError("an MC element must be a bivector");
  if (pi_.h_valuation() < 1) throw DomainError("an MC element must have every coefficient in the maximal ideal (h)");
}

MultiVector mc_residual(const TwistedLInfty& L, const MultiVector& pi) {
  if (!(pi.chart() == L.chart())) throw StructuralError("mc_residual: bivector and structure live on different charts");
  return schouten(pi, pi) - L.l3()({pi, pi, pi});
}

MultiVector mc_residual(const TwistedLInfty& L, const MCElement& pi) { return mc_residual(L, pi.pi()); }

MultiVector h_truncated(const MultiVector& x, int e) {
  std::vector<MultiVector::Term> out;
  for (const auto& [s, p] : x.terms()) out.emplace_back(s, p.h_truncated(e));
  return MultiVector(x.chart(), std::move(out));
}

namespace {

using Row = std::pair<BasisSet, MultiIndex>;

/// Solve A c = b exactly; columns given as sparse maps. Returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_exact(const std::vector<std::map<Row, Rational>>& cols,
                                                 const std::map<Row, Rational>& rhs) {
  std::map<Row, int> row_index;
  for (const auto& c : cols)
    for (const auto& [r, v] : c) row_index.emplace(r, 0);
  for (const auto& [r, v] : rhs) row_index.emplace(r, 0);
  int nr = 0;
  for (auto& [r, i] : row_index) i = nr++;
  const int nc = static_cast<int>(cols.size());
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(nr), std::vector<Rational>(static_cast<std::size_t>(nc + 1), 0));
  for (int j = 0; j < nc; ++j)
    for (const auto& [r, v] : cols[static_cast<std::size_t>(j)]) a[static_cast<std::size_t>(row_index[r])][static_cast<std::size_t>(j)] = v;
  for (const auto& [r, v] : rhs) a[static_cast<std::size_t>(row_index[r])][static_cast<std::size_t>(nc)] = v;

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int p = row;
    while (p < nr && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(row)]);
    auto& pr = a[static_cast<std::size_t>(row)];
    Rational inv = 1 / pr[static_cast<std::size_t>(col)];
    for (auto& v : pr) v *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == row) continue;
      auto& rr = a[static_cast<std::size_t>(r)];
      Rational f = rr[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= nc; ++j) rr[static_cast<std::size_t>(j)] -= f * pr[static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < nr; ++r)
    if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(nc)] != 0) return std::nullopt;
  std::vector<Rational> sol(static_cast<std::size_t>(nc), 0);
  for (int r = 0; r < row; ++r) sol[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(nc)];
  return sol;
}

std::map<Row, Rational> flatten(const MultiVector& x) {
  std::map<Row, Rational> out;
  for (const auto& [s, p] : x.terms())
    for (const auto& [e, c] : p.terms()) {
      Rational v = c.coeff(0);
      if (v != 0) out[{s, e}] = v;
    }
  return out;
}

}  // namespace

MCSolveResult mc_solve(const TwistedLInfty& L, const MultiVector& pi1, int max_order, int degree_cap) {
  const Chart& chart = L.chart();
  if (!(pi1.chart() == chart)) throw StructuralError("mc_solve: pi1 lives on a different chart");
  if (!pi1.is_zero() && (!pi1.is_homogeneous() || pi1.degree() != 2)) throw DomainError("mc_solve: pi1 must be a bivector");
  if (!(pi1.h_coefficient(0) == pi1))
    throw DomainError("mc_solve: pi1 must be h-free");
  if (max_order < 1) throw DomainError("mc_solve: order must be at least 1");
  if (chart.ring.order() < max_order)
    throw DomainError("mc_solve: ring order " + std::to_string(chart.ring.order()) + " is below the requested order " +
                      std::to_string(max_order));
  if (degree_cap < 0) throw DomainError("mc_solve: negative degree cap");

  MultiVector pi = pi1.h_shifted(1);
  // Unknown basis: x^a d_I with |I| = 2 and |a| <= degree_cap, in lexicographic order.
  std::vector<MultiVector> unknowns;
  std::vector<std::map<Row, Rational>> columns;
  for (BasisSet s = 0; s < (1u << chart.num_vars); ++s) {
    if (basis_degree(s) != 2) continue;
    for (const auto& e : multi_indices_up_to(chart.num_vars, degree_cap)) {
      MultiVector u(chart, {{s, Poly::monomial(e, 1, chart.num_vars, chart.ring)}});
      columns.push_back(flatten(schouten(pi1, u) * Rational(2)));
      unknowns.push_back(std::move(u));
    }
  }

  for (int n = 2; n < max_order; ++n) {
    MultiVector rn = mc_residual(L, pi).h_coefficient(n);
    if (rn.is_zero()) continue;
    std::optional<std::vector<Rational>> sol;
    if (n >= 3) {
      std::map<Row, Rational> rhs;
      for (auto& [r, v] : flatten(rn)) rhs[r] = -v;
      sol = solve_exact(columns, rhs);
    }
    if (!sol) return {false, n, pi, h_truncated(mc_residual(L, pi), max_order)};
    MultiVector next(chart);
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if ((*sol)[j] != 0) next += unknowns[j] * (*sol)[j];
    pi += next.h_shifted(n - 1);
  }
  MultiVector residual = h_truncated(mc_residual(L, pi), max_order);
  if (!residual.is_zero()) throw Error("mc_solve: internal inconsistency, residual survived the order-by-order solve");
  return {true, max_order, pi, residual};
}

MultiVector exp_ad(const MultiVector& lambda, const MultiVector& x) {
  MultiVector total = x;
  MultiVector term = x;
  Rational inv_fact = 1;
  for (int k = 1;; ++k) {
    term = schouten(lambda, term);
    if (term.is_zero()) break;
    inv_fact /= k;
    total += term * inv_fact;
    if (k > 64) throw DomainError("exp_ad: adjoint action is not nilpotent on this element");
  }
  return total;
}

MCElement gauge_apply_untwisted(const TwistedLInfty& L, const MultiVector& lambda, const MCElement& pi) {
  if (!L.H().is_zero()) throw UnsupportedError("gauge action with H != 0 needs the full L-infinity gauge calculus");
  if (!(lambda.chart() == L.chart())) throw StructuralError("gauge_apply_untwisted: chart mismatch");
  if (!lambda.is_zero() && (!lambda.is_homogeneous() || lambda.degree() != 1))
    throw DomainError("gauge_apply_untwisted: lambda must be a vector field");
  if (lambda.h_valuation() < 1) throw DomainError("gauge_apply_untwisted: lambda must lie in the maximal ideal");
  return MCElement(exp_ad(lambda, pi.pi()));
}

}  // namespace gerbeflow
