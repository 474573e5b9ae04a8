#include "gerbeflow/cartan.hpp"

#include <algorithm>
#include <sstream>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

std::vector<int> basis_indices(BasisSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

BasisSet basis_set(const std::vector<int>& increasing) {
  BasisSet s = 0;
  int prev = -1;
  for (int i : increasing) {
    if (i <= prev || i < 0 || i >= kMaxVars) throw DomainError("basis tuple must be strictly increasing and in range");
    s |= (1u << i);
    prev = i;
  }
  return s;
}

int wedge_sign(BasisSet a, BasisSet b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (BasisSet rest = b; rest != 0; rest &= rest - 1) {
    BasisSet low = rest & (~rest + 1);
    inversions += __builtin_popcount(a & ~((low << 1) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::pair<int, BasisSet> sort_tuple(const std::vector<int>& tuple) {
  int sign = 1;
  BasisSet s = 0;
  for (int i : tuple) {
    if (i < 0 || i >= kMaxVars) throw DomainError("basis index out of range");
    BasisSet bit = 1u << i;
    if (s & bit) return {0, 0};
    sign *= wedge_sign(s, bit);
    s |= bit;
  }
  return {sign, s};
}

namespace {

// Degree first, then lexicographic order of the increasing index tuples.
bool basis_less(BasisSet a, BasisSet b) {
  int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  BasisSet d = a ^ b;
  BasisSet low = d & (~d + 1);
  return (a & low) != 0;
}

}  // namespace

template <class Tag>
Exterior<Tag>::Exterior(Chart chart, std::vector<Term> terms) : chart_(std::move(chart)), terms_(std::move(terms)) {
  for (const auto& [s, p] : terms_) {
    if (!(p.num_vars() == chart_.num_vars && p.ring() == chart_.ring))
      throw StructuralError("coefficient does not live on the chart");
    if (s >> chart_.num_vars) throw DomainError("basis index outside the chart");
  }
  canonicalize();
}

template <class Tag>
void Exterior<Tag>::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return basis_less(a.first, b.first); });
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

template <class Tag>
Exterior<Tag> Exterior<Tag>::basis(const Chart& chart, const std::vector<int>& tuple, Poly coef) {
  for (int i : tuple)
    if (i < 0 || i >= chart.num_vars) throw DomainError("basis index outside the chart");
  auto [sign, s] = sort_tuple(tuple);
  Exterior r(chart);
  if (sign == 0 || coef.is_zero()) return r;
  if (sign < 0) coef = -coef;
  return Exterior(chart, {{s, std::move(coef)}});
}

template <class Tag>
Exterior<Tag> Exterior<Tag>::function(Poly f) {
  Chart chart{f.num_vars(), f.ring()};
  if (f.is_zero()) return Exterior(chart);
  return Exterior(chart, {{0u, std::move(f)}});
}

template <class Tag>
int Exterior<Tag>::degree() const {
  if (terms_.empty()) return -1;
  int d = basis_degree(terms_.front().first);
  if (basis_degree(terms_.back().first) != d) throw DomainError("element is not homogeneous");
  return d;
}

template <class Tag>
bool Exterior<Tag>::is_homogeneous() const noexcept {
  return terms_.empty() || basis_degree(terms_.front().first) == basis_degree(terms_.back().first);
}

template <class Tag>
std::vector<int> Exterior<Tag>::degrees() const {
  std::vector<int> out;
  for (const auto& t : terms_) {
    int d = basis_degree(t.first);
    if (out.empty() || out.back() != d) out.push_back(d);
  }
  return out;
}

template <class Tag>
Exterior<Tag> Exterior<Tag>::homogeneous_part(int k) const {
  Exterior r(chart_);
  for (const auto& t : terms_)
    if (basis_degree(t.first) == k) r.terms_.push_back(t);
  return r;
}

template <class Tag>
Poly Exterior<Tag>::coefficient(BasisSet s) const {
  for (const auto& t : terms_)
    if (t.first == s) return t.second;
  return chart_.zero();
}

template <class Tag>
int Exterior<Tag>::h_valuation() const noexcept {
  int v = chart_.ring.order();
  for (const auto& t : terms_) v = std::min(v, t.second.h_valuation());
  return v;
}

template <class Tag>
Exterior<Tag> Exterior<Tag>::h_coefficient(int e) const {
  std::vector<Term> out;
  for (const auto& [s, p] : terms_) out.emplace_back(s, p.h_coefficient(e));
  return Exterior(chart_, std::move(out));
}

template <class Tag>
Exterior<Tag> Exterior<Tag>::h_shifted(int e) const {
  std::vector<Term> out;
  for (const auto& [s, p] : terms_) out.emplace_back(s, p.h_shifted(e));
  return Exterior(chart_, std::move(out));
}

template <class Tag>
int Exterior<Tag>::poly_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.second.degree());
  return d;
}

template <class Tag>
void Exterior<Tag>::check_same_chart(const Exterior& o) const {
  if (!(chart_ == o.chart_))
    throw StructuralError("chart mismatch: dimension " + std::to_string(chart_.num_vars) + " vs " +
                          std::to_string(o.chart_.num_vars) + " or different coefficient rings");
}

template <class Tag>
Exterior<Tag>& Exterior<Tag>::operator+=(const Exterior& o) {
  check_same_chart(o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

template <class Tag>
Exterior<Tag>& Exterior<Tag>::operator-=(const Exterior& o) {
  check_same_chart(o);
  for (const auto& [s, p] : o.terms_) terms_.emplace_back(s, -p);
  canonicalize();
  return *this;
}

template <class Tag>
Exterior<Tag>& Exterior<Tag>::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

template <class Tag>
Exterior<Tag> Exterior<Tag>::operator-() const {
  Exterior r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

template <class Tag>
Exterior<Tag> Exterior<Tag>::times(const Poly& f) const {
  std::vector<Term> out;
  for (const auto& [s, p] : terms_) out.emplace_back(s, p * f);
  return Exterior(chart_, std::move(out));
}

template <class Tag>
std::string Exterior<Tag>::to_string() const {
  if (terms_.empty()) return "0";
  constexpr bool kVector = std::is_same_v<Tag, VectorTag>;
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string() << ")";
    for (int i : basis_indices(s)) os << (kVector ? " d/dx" : " dx") << i;
  }
  return os.str();
}

template class Exterior<VectorTag>;
template class Exterior<FormTag>;

namespace {

template <class Tag>
Exterior<Tag> wedge_impl(const Exterior<Tag>& a, const Exterior<Tag>& b) {
  a.check_same_chart(b);
  std::vector<typename Exterior<Tag>::Term> out;
  for (const auto& [sa, pa] : a.terms())
    for (const auto& [sb, pb] : b.terms()) {
      int sign = wedge_sign(sa, sb);
      if (sign == 0) continue;
      Poly c = pa * pb;
      if (sign < 0) c = -c;
      out.emplace_back(sa | sb, std::move(c));
    }
  return Exterior<Tag>(a.chart(), std::move(out));
}

}  // namespace

MultiVector mv_wedge(const MultiVector& pi, const MultiVector& rho) { return wedge_impl(pi, rho); }

DiffForm form_wedge(const DiffForm& a, const DiffForm& b) { return wedge_impl(a, b); }

DiffForm de_rham_d(const DiffForm& a) {
  std::vector<DiffForm::Term> out;
  for (const auto& [s, p] : a.terms())
    for (int v = 0; v < a.num_vars(); ++v) {
      BasisSet bit = 1u << v;
      int sign = wedge_sign(bit, s);
      if (sign == 0) continue;
      Poly c = poly_partial(p, v);
      if (c.is_zero()) continue;
      if (sign < 0) c = -c;
      out.emplace_back(bit | s, std::move(c));
    }
  return DiffForm(a.chart(), std::move(out));
}

MultiVector contract(const DiffForm& alpha, const MultiVector& pi) {
  if (!(alpha.chart() == pi.chart())) throw StructuralError("contract: chart mismatch");
  for (const auto& t : alpha.terms())
    if (basis_degree(t.first) != 1) throw DomainError("contract: the form must be of pure degree 1");
  std::vector<MultiVector::Term> out;
  for (const auto& [sa, a] : alpha.terms())
    for (const auto& [sp, f] : pi.terms()) {
      if (!(sp & sa)) continue;
      // Position of the direction inside the increasing tuple, 0-based.
      int pos = __builtin_popcount(sp & (sa - 1));
      Poly c = a * f;
      if (pos & 1) c = -c;
      out.emplace_back(sp & ~sa, std::move(c));
    }
  return MultiVector(pi.chart(), std::move(out));
}

MultiVector contract_iterated(const std::vector<DiffForm>& alphas, const MultiVector& pi) {
  MultiVector r = pi;
  for (auto it = alphas.rbegin(); it != alphas.rend(); ++it) r = contract(*it, r);
  return r;
}

Poly apply_vector_field(const MultiVector& x, const Poly& f) {
  Poly r(f.num_vars(), f.ring());
  for (const auto& [s, c] : x.terms()) {
    if (basis_degree(s) != 1) throw DomainError("apply_vector_field: not a vector field");
    r += c * poly_partial(f, __builtin_ctz(s));
  }
  return r;
}

MultiVector lie_bracket(const MultiVector& x, const MultiVector& y) {
  x.check_same_chart(y);
  std::vector<MultiVector::Term> out;
  for (int j = 0; j < x.num_vars(); ++j) {
    BasisSet bit = 1u << j;
    Poly c = apply_vector_field(x, y.coefficient(bit)) - apply_vector_field(y, x.coefficient(bit));
    if (!c.is_zero()) out.emplace_back(bit, std::move(c));
  }
  return MultiVector(x.chart(), std::move(out));
}

MultiVector schouten(const MultiVector& pi, const MultiVector& rho) {
  pi.check_same_chart(rho);
  std::vector<MultiVector::Term> out;
  for (const auto& [si, f] : pi.terms()) {
    const auto is = basis_indices(si);
    const int k = static_cast<int>(is.size());
    for (const auto& [sj, g] : rho.terms()) {
      const auto js = basis_indices(sj);
      // Coordinate fields commute, so the [X_i, Y_j] sum vanishes on basis terms.
      for (int i = 1; i <= k; ++i) {
        BasisSet rest = si & ~(1u << is[static_cast<std::size_t>(i - 1)]);
        int sign = wedge_sign(rest, sj);
        if (sign == 0) continue;
        Poly c = f * poly_partial(g, is[static_cast<std::size_t>(i - 1)]);
        if (c.is_zero()) continue;
        if (((k - i) & 1) != (sign < 0)) c = -c;
        out.emplace_back(rest | sj, std::move(c));
      }
      for (int j = 1; j <= static_cast<int>(js.size()); ++j) {
        BasisSet rest = sj & ~(1u << js[static_cast<std::size_t>(j - 1)]);
        int sign = wedge_sign(si, rest);
        if (sign == 0) continue;
        Poly c = g * poly_partial(f, js[static_cast<std::size_t>(j - 1)]);
        if (c.is_zero()) continue;
        if ((j & 1) != (sign < 0)) c = -c;
        out.emplace_back(si | rest, std::move(c));
      }
    }
  }
  return MultiVector(pi.chart(), std::move(out));
}

MultiVector wedge_all(const Chart& chart, const std::vector<MultiVector>& factors) {
  MultiVector r = MultiVector::function(chart.one());
  for (const auto& x : factors) r = mv_wedge(r, x);
  return r;
}

MultiVector schouten_decomposable(const Poly& f, const std::vector<MultiVector>& xs, const Poly& g,
                                  const std::vector<MultiVector>& ys) {
  f.check_same_space(g);
  Chart chart{f.num_vars(), f.ring()};
  for (const auto& v : xs)
    if (v.degree() > 1 || !(v.chart() == chart)) throw DomainError("schouten_decomposable: factors must be vector fields");
  for (const auto& v : ys)
    if (v.degree() > 1 || !(v.chart() == chart)) throw DomainError("schouten_decomposable: factors must be vector fields");
  const int k = static_cast<int>(xs.size());
  const int l = static_cast<int>(ys.size());
  auto without = [](const std::vector<MultiVector>& v, int skip) {
    std::vector<MultiVector> r;
    for (int t = 0; t < static_cast<int>(v.size()); ++t)
      if (t != skip) r.push_back(v[static_cast<std::size_t>(t)]);
    return r;
  };
  MultiVector result(chart);
  const MultiVector all_x = wedge_all(chart, xs);
  const MultiVector all_y = wedge_all(chart, ys);
  for (int i = 1; i <= k; ++i) {
    Poly c = f * apply_vector_field(xs[static_cast<std::size_t>(i - 1)], g);
    MultiVector term = mv_wedge(wedge_all(chart, without(xs, i - 1)), all_y).times(c);
    result += ((k - i) & 1) ? -term : term;
  }
  for (int j = 1; j <= l; ++j) {
    Poly c = apply_vector_field(ys[static_cast<std::size_t>(j - 1)], f) * g;
    MultiVector term = mv_wedge(all_x, wedge_all(chart, without(ys, j - 1))).times(c);
    result += (j & 1) ? -term : term;
  }
  const Poly fg = f * g;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) {
      MultiVector bracket = lie_bracket(xs[static_cast<std::size_t>(i - 1)], ys[static_cast<std::size_t>(j - 1)]);
      MultiVector term = mv_wedge(mv_wedge(bracket, wedge_all(chart, without(xs, i - 1))),
                                  wedge_all(chart, without(ys, j - 1)))
                             .times(fg);
      result += ((i + j) & 1) ? -term : term;
    }
  return result;
}

}  // namespace gerbeflow
