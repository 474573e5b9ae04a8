#include "gerbeflow/scalar.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

ArtinRing::ArtinRing(int order, std::string param_name)
    : order_(order), param_name_(std::move(param_name)) {
  if (order_ < 1) throw DomainError("ArtinRing order must be >= 1");
  if (param_name_.empty()) throw DomainError("ArtinRing parameter name must be non-empty");
}

Scalar::Scalar(int order) : order_(order) {
  if (order_ < 1) throw DomainError("Scalar order must be >= 1");
}

Scalar::Scalar(const Rational& value, int order) : Scalar(order) {
  if (value != 0) terms_.emplace_back(0, value);
}

Scalar Scalar::monomial(const Rational& c, int exponent, int order) {
  if (exponent < 0) throw DomainError("negative h-exponent");
  Scalar s(order);
  if (c != 0 && exponent < order) s.terms_.emplace_back(exponent, c);
  return s;
}

int Scalar::valuation() const noexcept { return terms_.empty() ? order_ : terms_.front().first; }

Rational Scalar::coeff(int exponent) const {
  for (const auto& [e, c] : terms_)
    if (e == exponent) return c;
  return 0;
}

bool Scalar::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (order_ != o.order_)
    throw StructuralError("scalar ring mismatch: order " + std::to_string(order_) + " vs " +
                          std::to_string(o.order_));
}

namespace {

// Merge b (scaled by sign) into a; both sorted by exponent.
void merge_into(std::vector<Scalar::Term>& a, const std::vector<Scalar::Term>& b, int sign) {
  std::vector<Scalar::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  merge_into(terms_, o.terms_, +1);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_ring(o);
  if (o.terms_.empty()) return *this;
  merge_into(terms_, o.terms_, -1);
  return *this;
}

Scalar& Scalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  Scalar r(a.order_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    int e = a.terms_[0].first + b.terms_[0].first;
    if (e < a.order_) r.terms_.emplace_back(e, a.terms_[0].second * b.terms_[0].second);
    return r;
  }
  std::vector<Rational> dense(static_cast<std::size_t>(a.order_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      if (ea + eb < a.order_) dense[static_cast<std::size_t>(ea + eb)] += ca * cb;
  for (int e = 0; e < a.order_; ++e)
    if (dense[static_cast<std::size_t>(e)] != 0) r.terms_.emplace_back(e, dense[static_cast<std::size_t>(e)]);
  return r;
}

Scalar Scalar::shifted(int e) const {
  if (e < 0) throw DomainError("negative h-shift");
  Scalar r(order_);
  for (const auto& [x, c] : terms_)
    if (x + e < order_) r.terms_.emplace_back(x + e, c);
  return r;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (e == 1) os << "*h";
    if (e > 1) os << "*h^" << e;
  }
  return os.str();
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(s, pattern)) throw ParseError("not a rational literal: \"" + s + "\"");
  auto slash = s.find('/');
  if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos)
    throw ParseError("zero denominator in \"" + s + "\"");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

}  // namespace gerbeflow
