#include "gerbeflow/hochschild.hpp"

#include <algorithm>
#include <sstream>

#include "gerbeflow/errors.hpp"
#include "gerbeflow/permutation.hpp"

namespace gerbeflow {

namespace {

int parity_sign(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

MultiDiffOp::MultiDiffOp(int num_vars, ArtinRing ring, int arity)
    : num_vars_(num_vars), ring_(std::move(ring)), arity_(arity) {
  if (arity_ < 0) throw DomainError("cochain arity must be non-negative");
  if (num_vars_ < 0 || num_vars_ > kMaxVars) throw StructuralError("number of variables out of range");
}

MultiDiffOp::MultiDiffOp(int num_vars, ArtinRing ring, int arity, std::vector<Term> terms)
    : MultiDiffOp(num_vars, std::move(ring), arity) {
  terms_ = std::move(terms);
  for (const auto& [betas, c] : terms_) {
    if (static_cast<int>(betas.size()) != arity_) throw StructuralError("beta tuple length differs from the arity");
    if (!(c.num_vars() == num_vars_ && c.ring() == ring_)) throw StructuralError("coefficient lives in a different space");
    for (const auto& b : betas)
      for (int v = num_vars_; v < kMaxVars; ++v)
        if (b[v] != 0) throw StructuralError("derivative index outside the chart");
  }
  canonicalize();
}

void MultiDiffOp::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

MultiDiffOp MultiDiffOp::element(const Poly& a) { return MultiDiffOp(a.num_vars(), a.ring(), 0, {{{}, a}}); }

MultiDiffOp MultiDiffOp::multiplication(int num_vars, ArtinRing ring) {
  Poly one = Poly::constant(1, num_vars, ring);
  return MultiDiffOp(num_vars, std::move(ring), 2, {{{MultiIndex{}, MultiIndex{}}, one}});
}

MultiDiffOp MultiDiffOp::identity(int num_vars, ArtinRing ring) {
  Poly one = Poly::constant(1, num_vars, ring);
  return MultiDiffOp(num_vars, std::move(ring), 1, {{{MultiIndex{}}, one}});
}

MultiDiffOp MultiDiffOp::monomial(const Poly& coef, Betas betas) {
  int p = static_cast<int>(betas.size());
  return MultiDiffOp(coef.num_vars(), coef.ring(), p, {{std::move(betas), coef}});
}

int MultiDiffOp::order() const noexcept {
  int o = -1;
  for (const auto& t : terms_)
    for (const auto& b : t.first) o = std::max(o, b.total());
  if (o < 0 && !terms_.empty()) o = 0;
  return o;
}

void MultiDiffOp::check_same_space(const MultiDiffOp& o) const {
  if (num_vars_ != o.num_vars_ || !(ring_ == o.ring_)) throw StructuralError("cochains live over different algebras");
}

MultiDiffOp& MultiDiffOp::operator+=(const MultiDiffOp& o) {
  check_same_space(o);
  if (o.is_zero()) return *this;
  if (is_zero()) arity_ = o.arity_;
  if (arity_ != o.arity_) throw DomainError("cannot add cochains of arity " + std::to_string(arity_) + " and " + std::to_string(o.arity_));
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

MultiDiffOp& MultiDiffOp::operator-=(const MultiDiffOp& o) { return *this += -o; }

MultiDiffOp& MultiDiffOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiDiffOp MultiDiffOp::operator-() const {
  MultiDiffOp r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

std::string MultiDiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [betas, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (const auto& b : betas) {
      os << " [";
      for (int v = 0; v < num_vars_; ++v) os << (v ? "," : "") << b[v];
      os << "]";
    }
  }
  return os.str();
}

Poly mdo_eval(const MultiDiffOp& D, const std::vector<Poly>& args) {
  // The zero operator carries no arity of its own.
  if (static_cast<int>(args.size()) != D.arity() && !D.is_zero())
    throw DomainError("mdo_eval: expected " + std::to_string(D.arity()) + " arguments, got " + std::to_string(args.size()));
  Poly total(D.num_vars(), D.ring());
  for (const auto& a : args)
    if (!(a.num_vars() == D.num_vars() && a.ring() == D.ring())) throw StructuralError("mdo_eval: argument lives in a different algebra");
  for (const auto& [betas, c] : D.terms()) {
    Poly v = c;
    for (std::size_t j = 0; j < betas.size() && !v.is_zero(); ++j) v = v * poly_partial(args[j], betas[j]);
    total += v;
  }
  return total;
}

MultiDiffOp gerst_compose_i(const MultiDiffOp& D, const MultiDiffOp& E, int i) {
  D.check_same_space(E);
  const int p = D.arity(), q = E.arity();
  if (i < 1 || i > p) throw DomainError("gerst_compose_i: slot " + std::to_string(i) + " outside 1.." + std::to_string(p));
  const int n = D.num_vars();
  std::vector<MultiDiffOp::Term> out;
  for (const auto& [bd, cd] : D.terms()) {
    const MultiIndex& bi = bd[static_cast<std::size_t>(i - 1)];
    const auto splits = compositions(bi, n, q + 1);
    for (const auto& [be, ce] : E.terms())
      for (const auto& mu : splits) {
        // d^{beta_i}(ce * prod_j d^{gamma_j} a_j) = sum_mu binom * d^{mu_0} ce * prod_j d^{mu_j + gamma_j} a_j
        Poly coef = poly_partial(ce, mu[0]);
        if (coef.is_zero()) continue;
        coef = cd * coef * Rational(static_cast<unsigned long>(multinomial(bi, mu, n)));
        MultiDiffOp::Betas betas;
        betas.reserve(static_cast<std::size_t>(p + q - 1));
        for (int j = 0; j < i - 1; ++j) betas.push_back(bd[static_cast<std::size_t>(j)]);
        for (int j = 0; j < q; ++j) betas.push_back(be[static_cast<std::size_t>(j)] + mu[static_cast<std::size_t>(j + 1)]);
        for (int j = i; j < p; ++j) betas.push_back(bd[static_cast<std::size_t>(j)]);
        out.emplace_back(std::move(betas), std::move(coef));
      }
  }
  return MultiDiffOp(n, D.ring(), p + q - 1, std::move(out));
}

MultiDiffOp gerst_compose(const MultiDiffOp& D, const MultiDiffOp& E) {
  D.check_same_space(E);
  const int p = D.arity(), q = E.arity();
  MultiDiffOp r(D.num_vars(), D.ring(), std::max(p + q - 1, 0));
  if (p == 0) return r;
  for (int i = 1; i <= p; ++i) {
    MultiDiffOp t = gerst_compose_i(D, E, i);
    r += parity_sign((i - 1) * (q - 1)) < 0 ? -t : t;
  }
  return r;
}

MultiDiffOp gerstenhaber_bracket(const MultiDiffOp& D, const MultiDiffOp& E) {
  D.check_same_space(E);
  const int p = D.arity(), q = E.arity();
  if (p == 0 && q == 0) return MultiDiffOp(D.num_vars(), D.ring(), 0);
  MultiDiffOp r(D.num_vars(), D.ring(), p + q - 1);
  if (p > 0) r += gerst_compose(D, E);
  if (q > 0) {
    MultiDiffOp t = gerst_compose(E, D);
    r -= parity_sign((p - 1) * (q - 1)) < 0 ? -t : t;
  }
  return r;
}

MultiDiffOp hochschild_delta(const MultiDiffOp& D) {
  return gerstenhaber_bracket(MultiDiffOp::multiplication(D.num_vars(), D.ring()), D);
}

MultiDiffOp hochschild_delta_standard(const MultiDiffOp& D) {
  const int p = D.arity();
  const MultiDiffOp id = MultiDiffOp::identity(D.num_vars(), D.ring());
  const MultiDiffOp m = MultiDiffOp::multiplication(D.num_vars(), D.ring());
  MultiDiffOp r = cup(id, D);
  for (int i = 1; i <= p; ++i) {
    MultiDiffOp t = gerst_compose_i(D, m, i);
    r += (i & 1) ? -t : t;
  }
  MultiDiffOp last = cup(D, id);
  r += ((p + 1) & 1) ? -last : last;
  return r;
}

MultiDiffOp cup(const MultiDiffOp& D, const MultiDiffOp& E) {
  D.check_same_space(E);
  std::vector<MultiDiffOp::Term> out;
  for (const auto& [bd, cd] : D.terms())
    for (const auto& [be, ce] : E.terms()) {
      MultiDiffOp::Betas b = bd;
      b.insert(b.end(), be.begin(), be.end());
      out.emplace_back(std::move(b), cd * ce);
    }
  return MultiDiffOp(D.num_vars(), D.ring(), D.arity() + E.arity(), std::move(out));
}

MultiDiffOp brace(const MultiDiffOp& D, const std::vector<MultiDiffOp>& Es) {
  const int p = D.arity();
  const int k = static_cast<int>(Es.size());
  if (k > p) throw DomainError("brace: " + std::to_string(k) + " insertions into an operator of arity " + std::to_string(p));
  int arity = p;
  for (const auto& E : Es) {
    D.check_same_space(E);
    arity += E.arity() - 1;
  }
  MultiDiffOp total(D.num_vars(), D.ring(), arity);
  // Enumerate slot choices s_1 < .. < s_k as a k-subset of 1..p.
  std::vector<int> slots(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) slots[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    int exponent = 0, shift = 0;
    for (int j = 0; j < k; ++j) {
      const int qj = Es[static_cast<std::size_t>(j)].arity();
      exponent += (qj - 1) * (slots[static_cast<std::size_t>(j)] - 1 + shift);
      shift += qj - 1;
    }
    MultiDiffOp r = D;
    for (int j = k - 1; j >= 0; --j) r = gerst_compose_i(r, Es[static_cast<std::size_t>(j)], slots[static_cast<std::size_t>(j)]);
    total += parity_sign(exponent) < 0 ? -r : r;
    int j = k - 1;
    while (j >= 0 && slots[static_cast<std::size_t>(j)] == p - (k - 1 - j)) --j;
    if (j < 0) break;
    ++slots[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) slots[static_cast<std::size_t>(t)] = slots[static_cast<std::size_t>(t - 1)] + 1;
  }
  return total;
}

MultiDiffOp i_a_displayed(const Poly& a, const MultiDiffOp& D) {
  const int p = D.arity();
  if (D.is_zero()) return MultiDiffOp(D.num_vars(), D.ring(), std::max(p - 1, 0));
  if (p == 0) throw DomainError("i_a: the cochain has no slot to insert into");
  const MultiDiffOp e = MultiDiffOp::element(a);
  MultiDiffOp r(D.num_vars(), D.ring(), p - 1);
  for (int i = 0; i < p; ++i) {
    MultiDiffOp t = gerst_compose_i(D, e, i + 1);
    r += (i & 1) ? -t : t;
  }
  return r;
}

MultiDiffOp i_a_cochain(const Poly& a, const MultiDiffOp& D) {
  MultiDiffOp r = i_a_displayed(a, D);
  return (D.arity() & 1) ? -r : r;
}

MultiDiffOp hkr(const MultiVector& pi) {
  const Chart& chart = pi.chart();
  if (pi.is_zero()) return MultiDiffOp(chart.num_vars, chart.ring, 0);
  const int k = pi.degree();
  const auto perms = Permutation::all(k);
  Rational inv_fact = 1;
  for (int j = 2; j <= k; ++j) inv_fact /= j;
  std::vector<MultiDiffOp::Term> out;
  for (const auto& [s, f] : pi.terms()) {
    const auto idx = basis_indices(s);
    for (const auto& sigma : perms) {
      MultiDiffOp::Betas betas;
      for (int j = 0; j < k; ++j) betas.push_back(MultiIndex::unit(idx[static_cast<std::size_t>(sigma(j))]));
      out.emplace_back(std::move(betas), f * (inv_fact * sigma.sign()));
    }
  }
  return MultiDiffOp(chart.num_vars, chart.ring, k, std::move(out));
}

HkrIaComparison compare_hkr_ia(const Poly& a, const MultiVector& pi) {
  DiffForm da = de_rham_d(DiffForm::function(a));
  HkrIaComparison out{std::nullopt, false, i_a_cochain(a, hkr(pi)), hkr(contract(da, pi))};
  if (out.rhs.is_zero()) {
    out.both_zero = out.lhs.is_zero();
    return out;
  }
  const auto& [betas, c] = out.rhs.terms().front();
  Rational r_coef = c.terms().front().second.coeff(c.terms().front().second.valuation());
  Rational l_coef = 0;
  for (const auto& [lb, lc] : out.lhs.terms())
    if (lb == betas) {
      auto it = std::find_if(lc.terms().begin(), lc.terms().end(), [&](const Poly::Term& t) { return t.first == c.terms().front().first; });
      if (it != lc.terms().end()) l_coef = it->second.coeff(c.terms().front().second.valuation());
    }
  Rational ratio = l_coef / r_coef;
  if (out.lhs == out.rhs * ratio) out.ratio = ratio;
  return out;
}

}  // namespace gerbeflow
