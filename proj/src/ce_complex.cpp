#include "gerbeflow/ce_complex.hpp"

#include <map>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int parity_sign(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

Cochain::Cochain(int arity, int sign_degree, Chart chart, std::string tag, Evaluator eval)
    : arity_(arity),
      sign_degree_(sign_degree),
      chart_(std::move(chart)),
      tag_(std::move(tag)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {
  if (arity_ < 0) throw DomainError("cochain arity must be non-negative");
}

MultiVector Cochain::operator()(std::span<const MultiVector> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw DomainError("cochain '" + tag_ + "' expects " + std::to_string(arity_) + " arguments, got " +
                      std::to_string(args.size()));
  std::vector<std::vector<MultiVector>> parts;
  parts.reserve(args.size());
  for (const auto& a : args) {
    if (!(a.chart() == chart_)) throw StructuralError("cochain '" + tag_ + "': argument lives on a different chart");
    if (a.is_zero()) return MultiVector(chart_);
    std::vector<MultiVector> hs;
    for (int d : a.degrees()) hs.push_back(a.homogeneous_part(d));
    parts.push_back(std::move(hs));
  }
  MultiVector total(chart_);
  std::vector<MultiVector> pick(args.size());
  std::vector<std::size_t> idx(args.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < args.size(); ++i) pick[i] = parts[i][idx[i]];
    total += (*eval_)(pick);
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < parts[i].size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return total;
}

Cochain m_cochain(const Chart& chart) {
  return Cochain(2, 1, chart, "m", [](std::span<const MultiVector> a) {
    MultiVector b = schouten(a[0], a[1]);
    return (a[0].degree() & 1) ? -b : b;
  });
}

Cochain phi_component(const DiffForm& omega, int k) {
  if (k < 0) throw DomainError("phi_component: negative form degree");
  DiffForm part = omega.homogeneous_part(k);
  const Chart chart = omega.chart();
  std::string tag = "phi(" + part.to_string() + ")";
  if (k == 0) {
    Poly f = part.coefficient(0);
    return Cochain(0, -2, chart, std::move(tag),
                   [f](std::span<const MultiVector>) { return MultiVector::function(f); });
  }
  auto perms = std::make_shared<const std::vector<Permutation>>(Permutation::all(k));
  return Cochain(k, k - 2, chart, std::move(tag), [part, k, perms, chart](std::span<const MultiVector> pis) {
    int prefix = 0;
    for (int i = 1; i < k; ++i) prefix += (k - i) * (pis[static_cast<std::size_t>(i - 1)].degree() - 1);
    MultiVector total(chart);
    for (const auto& [covs, f] : part.terms()) {
      const auto cs = basis_indices(covs);
      // table[j][i] = <dx_{c_j}, pi_i>
      std::vector<std::vector<MultiVector>> table(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
          table[static_cast<std::size_t>(j)].push_back(
              contract(DiffForm::basis(chart, {cs[static_cast<std::size_t>(j)]}), pis[static_cast<std::size_t>(i)]));
      MultiVector sum(chart);
      for (const auto& sigma : *perms) {
        MultiVector w = MultiVector::function(chart.one());
        for (int i = 0; i < k && !w.is_zero(); ++i)
          w = mv_wedge(w, table[static_cast<std::size_t>(sigma(i))][static_cast<std::size_t>(i)]);
        if (w.is_zero()) continue;
        sum += sigma.sign() < 0 ? -w : w;
      }
      total += sum.times(f);
    }
    return (prefix & 1) ? -total : total;
  });
}

std::vector<Cochain> phi_of_form(const DiffForm& omega) {
  std::vector<Cochain> out;
  for (int k : omega.degrees()) out.push_back(phi_component(omega, k));
  return out;
}

namespace {

MultiVector compose_eval(const Cochain& phi, const Cochain& psi, std::span<const MultiVector> args,
                         std::vector<TraceTerm>* trace) {
  const int k = psi.arity();
  const int l = phi.arity();
  const int n = k + l - 1;
  const Chart& chart = phi.chart();
  std::vector<int> degs;
  for (const auto& a : args) degs.push_back(a.degree());
  std::map<std::vector<int>, MultiVector> inner_cache;
  MultiVector total(chart);
  std::vector<MultiVector> outer(static_cast<std::size_t>(l), MultiVector(chart));
  std::vector<MultiVector> inner_args(static_cast<std::size_t>(k), MultiVector(chart));
  for (const auto& sigma : Permutation::all(n)) {
    const int eps = koszul_sign(sigma, degs);
    std::vector<int> key(sigma.images().begin(), sigma.images().begin() + k);
    auto it = inner_cache.find(key);
    if (it == inner_cache.end()) {
      for (int j = 0; j < k; ++j) inner_args[static_cast<std::size_t>(j)] = args[static_cast<std::size_t>(key[static_cast<std::size_t>(j)])];
      it = inner_cache.emplace(key, psi(inner_args)).first;
    }
    outer[0] = it->second;
    for (int j = k; j < n; ++j) outer[static_cast<std::size_t>(j - k + 1)] = args[static_cast<std::size_t>(sigma(j))];
    MultiVector value = it->second.is_zero() ? MultiVector(chart) : phi(outer);
    if (trace) trace->push_back({sigma, eps, it->second, value});
    if (value.is_zero()) continue;
    total += eps < 0 ? -value : value;
  }
  return total * (Rational(1) / (factorial(k) * factorial(l - 1)));
}

}  // namespace

Cochain ce_compose(const Cochain& phi, const Cochain& psi) {
  if (phi.arity() == 0) throw DomainError("ce_compose: outer cochain of arity 0 has no slot to insert into");
  if (!(phi.chart() == psi.chart())) throw StructuralError("ce_compose: chart mismatch");
  return Cochain(phi.arity() + psi.arity() - 1, phi.sign_degree() + psi.sign_degree(), phi.chart(),
                 "(" + phi.tag() + " o " + psi.tag() + ")",
                 [phi, psi](std::span<const MultiVector> a) { return compose_eval(phi, psi, a, nullptr); });
}

MultiVector ce_compose_trace(const Cochain& phi, const Cochain& psi, std::span<const MultiVector> args,
                             std::vector<TraceTerm>& trace) {
  if (phi.arity() == 0) throw DomainError("ce_compose: outer cochain of arity 0 has no slot to insert into");
  if (static_cast<int>(args.size()) != phi.arity() + psi.arity() - 1) throw DomainError("ce_compose_trace: wrong number of arguments");
  for (const auto& a : args)
    if (!a.is_homogeneous() || a.is_zero()) throw DomainError("ce_compose_trace: arguments must be nonzero and homogeneous");
  return compose_eval(phi, psi, args, &trace);
}

Cochain ce_bracket(const Cochain& phi, const Cochain& psi) {
  if (phi.arity() == 0 && psi.arity() == 0) throw DomainError("ce_bracket: both cochains have arity 0");
  if (!(phi.chart() == psi.chart())) throw StructuralError("ce_bracket: chart mismatch");
  const int sign = parity_sign(phi.sign_degree() * psi.sign_degree());
  std::optional<Cochain> left, right;
  if (phi.arity() > 0) left = ce_compose(phi, psi);
  if (psi.arity() > 0) right = ce_compose(psi, phi);
  return Cochain(phi.arity() + psi.arity() - 1, phi.sign_degree() + psi.sign_degree(), phi.chart(),
                 "[" + phi.tag() + ", " + psi.tag() + "]", [left, right, sign, chart = phi.chart()](std::span<const MultiVector> a) {
                   MultiVector r(chart);
                   if (left) r += (*left)(a);
                   if (right) r -= sign < 0 ? -(*right)(a) : (*right)(a);
                   return r;
                 });
}

Cochain ce_differential(const Cochain& phi) {
  Cochain b = ce_bracket(phi, m_cochain(phi.chart()));
  return Cochain(b.arity(), b.sign_degree(), b.chart(), "d" + phi.tag(),
                 [b](std::span<const MultiVector> a) { return b(a); });
}

namespace {

Cochain combine(const Cochain& a, const Cochain& b, const Rational& cb, const char* op) {
  if (a.arity() != b.arity()) throw DomainError("cochain sum: arity mismatch");
  if (a.sign_degree() != b.sign_degree()) throw DomainError("cochain sum: sign degree mismatch");
  if (!(a.chart() == b.chart())) throw StructuralError("cochain sum: chart mismatch");
  return Cochain(a.arity(), a.sign_degree(), a.chart(), "(" + a.tag() + op + b.tag() + ")",
                 [a, b, cb](std::span<const MultiVector> x) { return a(x) + b(x) * cb; });
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, 1, " + "); }
Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, -1, " - "); }

Cochain operator*(const Rational& c, const Cochain& a) {
  return Cochain(a.arity(), a.sign_degree(), a.chart(), rational_to_string(c) + "*" + a.tag(),
                 [a, c](std::span<const MultiVector> x) { return a(x) * c; });
}

std::vector<MultiVector> spanning_family(const Chart& chart, int poly_deg, int mv_deg) {
  std::vector<MultiVector> out;
  const int n = chart.num_vars;
  for (BasisSet s = 0; s < (1u << n); ++s) {
    if (basis_degree(s) > mv_deg) continue;
    for (const auto& e : multi_indices_up_to(n, poly_deg))
      out.push_back(MultiVector(chart, {{s, Poly::monomial(e, 1, n, chart.ring)}}));
  }
  return out;
}

std::optional<Disagreement> agree_on_span(const Cochain& a, const Cochain& b, int poly_deg, int mv_deg) {
  if (a.arity() != b.arity()) throw DomainError("agree_on_span: arity mismatch");
  const auto family = spanning_family(a.chart(), poly_deg, mv_deg);
  const std::size_t k = static_cast<std::size_t>(a.arity());
  std::vector<std::size_t> idx(k, 0);
  std::vector<MultiVector> args(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) args[i] = family[idx[i]];
    MultiVector lhs = a(args), rhs = b(args);
    if (!(lhs == rhs)) return Disagreement{args, lhs, rhs};
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++idx[i] < family.size()) break;
      idx[i] = 0;
    }
    if (i == k) break;
  }
  return std::nullopt;
}

}  // namespace gerbeflow
