#include "gerbeflow/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

Poly::Poly(int num_vars, ArtinRing ring) : num_vars_(num_vars), ring_(std::move(ring)) {
  if (num_vars_ < 0 || num_vars_ > kMaxVars)
    throw StructuralError("number of variables must be in [0, " + std::to_string(kMaxVars) + "]");
}

Poly::Poly(int num_vars, ArtinRing ring, std::vector<Term> terms) : Poly(num_vars, std::move(ring)) {
  terms_ = std::move(terms);
  for (const auto& [e, c] : terms_) {
    if (c.order() != ring_.order()) throw StructuralError("coefficient ring does not match polynomial ring");
    for (int v = num_vars_; v < kMaxVars; ++v)
      if (e[v] != 0) throw StructuralError("exponent refers to a variable outside the chart");
  }
  canonicalize();
}

void Poly::canonicalize() {
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

Poly Poly::constant(const Rational& c, int num_vars, ArtinRing ring) {
  int order = ring.order();
  return constant(Scalar(c, order), num_vars, std::move(ring));
}

Poly Poly::constant(const Scalar& c, int num_vars, ArtinRing ring) {
  Poly p(num_vars, std::move(ring));
  if (!c.is_zero()) {
    if (c.order() != p.ring_.order()) throw StructuralError("coefficient ring does not match polynomial ring");
    p.terms_.emplace_back(MultiIndex{}, c);
  }
  return p;
}

Poly Poly::variable(int var, int num_vars, ArtinRing ring) {
  if (var < 0 || var >= num_vars) throw DomainError("variable index out of range");
  return monomial(MultiIndex::unit(var), 1, num_vars, std::move(ring));
}

Poly Poly::monomial(const MultiIndex& exp, const Rational& c, int num_vars, ArtinRing ring) {
  int order = ring.order();
  return Poly(num_vars, std::move(ring), {{exp, Scalar(c, order)}});
}

Poly Poly::h_power(int e, int num_vars, ArtinRing ring) {
  int order = ring.order();
  return constant(Scalar::monomial(1, e, order), num_vars, std::move(ring));
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.total());
  return d;
}

int Poly::h_valuation() const noexcept {
  int v = ring_.order();
  for (const auto& t : terms_) v = std::min(v, t.second.valuation());
  return v;
}

Poly Poly::h_coefficient(int e) const {
  Poly r(num_vars_, ring_);
  for (const auto& [m, c] : terms_) {
    Rational q = c.coeff(e);
    if (q != 0) r.terms_.emplace_back(m, Scalar(q, ring_.order()));
  }
  return r;
}

Poly Poly::h_truncated(int e) const {
  Poly r(num_vars_, ring_);
  for (const auto& [m, c] : terms_) {
    Scalar s(ring_.order());
    for (const auto& [x, q] : c.terms())
      if (x < e) s += Scalar::monomial(q, x, ring_.order());
    if (!s.is_zero()) r.terms_.emplace_back(m, std::move(s));
  }
  return r;
}

Poly Poly::h_shifted(int e) const {
  Poly r(num_vars_, ring_);
  for (const auto& [m, c] : terms_) {
    Scalar s = c.shifted(e);
    if (!s.is_zero()) r.terms_.emplace_back(m, std::move(s));
  }
  return r;
}

void Poly::check_same_space(const Poly& o) const {
  if (num_vars_ != o.num_vars_)
    throw StructuralError("polynomial variable count mismatch: " + std::to_string(num_vars_) + " vs " +
                          std::to_string(o.num_vars_));
  if (!(ring_ == o.ring_)) throw StructuralError("polynomial coefficient ring mismatch");
}

namespace {

void merge_terms(std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? -j->second : j->second);
      ++j;
    } else {
      Scalar c = subtract ? i->second - j->second : i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_same_space(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_space(o);
  if (o.terms_.empty()) return *this;
  merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_space(b);
  Poly r(a.num_vars_, a.ring_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Scalar c = ca * cb;
      if (!c.is_zero()) r.terms_.emplace_back(ea + eb, std::move(c));
    }
  r.canonicalize();
  return r;
}

Poly operator*(const Poly& a, const Scalar& c) {
  if (c.order() != a.ring_.order()) throw StructuralError("scalar ring mismatch");
  Poly r(a.num_vars_, a.ring_);
  for (const auto& [e, s] : a.terms_) {
    Scalar t = s * c;
    if (!t.is_zero()) r.terms_.emplace_back(e, std::move(t));
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int v = 0; v < num_vars_; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_constant() && c.coeff(0) == 1;
    if (mono.empty())
      os << c.to_string();
    else if (unit)
      os << mono;
    else
      os << c.to_string() << "*" << mono;
  }
  return os.str();
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Poly poly_partial(const Poly& p, int i) {
  if (i < 0 || i >= p.num_vars()) throw DomainError("partial derivative index " + std::to_string(i) + " out of range");
  std::vector<Poly::Term> out;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    MultiIndex d = e;
    d[i] = static_cast<std::uint16_t>(d[i] - 1);
    out.emplace_back(d, c * Rational(e[i]));
  }
  // Differentiating in one variable keeps exponents strictly ordered.
  return Poly(p.num_vars(), p.ring(), std::move(out));
}

Poly poly_partial(const Poly& p, const MultiIndex& beta) {
  std::vector<Poly::Term> out;
  for (int v = p.num_vars(); v < kMaxVars; ++v)
    if (beta[v] != 0) throw DomainError("derivative multi-index outside the chart");
  for (const auto& [e, c] : p.terms()) {
    if (!beta.divides(e)) continue;
    Rational factor = 1;
    for (int v = 0; v < p.num_vars(); ++v)
      for (int k = 0; k < beta[v]; ++k) factor *= e[v] - k;
    out.emplace_back(e - beta, c * factor);
  }
  return Poly(p.num_vars(), p.ring(), std::move(out));
}

}  // namespace gerbeflow
