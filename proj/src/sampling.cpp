#include "gerbeflow/sampling.hpp"

#include <limits>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Rational Rng::coefficient() {
  int c = uniform(-3, 2);
  return Rational(c >= 0 ? c + 1 : c);
}

MultiIndex random_exponent(Rng& rng, int n, int max_deg) {
  MultiIndex e;
  int budget = rng.uniform(0, max_deg);
  for (int t = 0; t < budget && n > 0; ++t) ++e[rng.uniform(0, n - 1)];
  return e;
}

Poly random_poly(Rng& rng, int n, int max_deg, const ArtinRing& ring, int max_terms) {
  std::vector<Poly::Term> terms;
  int count = rng.uniform(1, max_terms);
  for (int t = 0; t < count; ++t)
    terms.emplace_back(random_exponent(rng, n, max_deg), Scalar(rng.coefficient(), ring.order()));
  return Poly(n, ring, std::move(terms));
}

BasisSet random_basis(Rng& rng, int n, int k) {
  if (k < 0 || k > n) throw DomainError("random_basis: degree exceeds dimension");
  BasisSet s = 0;
  while (basis_degree(s) < k) s |= 1u << rng.uniform(0, n - 1);
  return s;
}

MultiDiffOp random_mdo(Rng& rng, int n, int arity, int max_order, int max_deg, const ArtinRing& ring, int max_terms) {
  std::vector<MultiDiffOp::Term> terms;
  int count = rng.uniform(1, max_terms);
  for (int t = 0; t < count; ++t) {
    MultiDiffOp::Betas betas;
    for (int j = 0; j < arity; ++j) betas.push_back(random_exponent(rng, n, max_order));
    terms.emplace_back(std::move(betas), random_poly(rng, n, max_deg, ring, 2));
  }
  return MultiDiffOp(n, ring, arity, std::move(terms));
}

namespace {

template <class E>
E random_exterior(Rng& rng, const Chart& chart, int k, int max_deg, int max_terms) {
  std::vector<typename E::Term> terms;
  int count = rng.uniform(1, max_terms);
  for (int t = 0; t < count; ++t)
    terms.emplace_back(random_basis(rng, chart.num_vars, k), random_poly(rng, chart.num_vars, max_deg, chart.ring, 2));
  return E(chart, std::move(terms));
}

}  // namespace

MultiVector random_multivector(Rng& rng, const Chart& chart, int k, int max_deg, int max_terms) {
  return random_exterior<MultiVector>(rng, chart, k, max_deg, max_terms);
}

DiffForm random_form(Rng& rng, const Chart& chart, int k, int max_deg, int max_terms) {
  return random_exterior<DiffForm>(rng, chart, k, max_deg, max_terms);
}

}  // namespace gerbeflow
