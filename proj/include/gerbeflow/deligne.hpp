#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gerbeflow/cartan.hpp"

namespace gerbeflow {

/// A DGLA structure on multivectors of degree 0..3 (shifted degree -1..2) with
/// coefficients in the maximal ideal of the chart's Artin ring. Shifted degree
/// is polyvector degree minus one.
class NilpotentDGLA {
 public:
  using Bracket = std::function<MultiVector(const MultiVector&, const MultiVector&)>;
  using Differential = std::function<MultiVector(const MultiVector&)>;

  /// Schouten bracket, zero differential.
  static NilpotentDGLA schouten(const Chart& chart);
  /// Schouten bracket, d = [pi0, .] for a Poisson bivector pi0 (checked).
  static NilpotentDGLA schouten_twisted_by(const MultiVector& pi0);
  /// Zero bracket and the given differential (zero if empty).
  static NilpotentDGLA abelian(const Chart& chart, Differential d = {});
  /// Caller-supplied pair; the DGLA axioms are the caller's responsibility.
  static NilpotentDGLA custom(const Chart& chart, Bracket bracket, Differential d, std::string name);

  const Chart& chart() const noexcept { return chart_; }
  int order() const noexcept { return chart_.ring.order(); }
  const std::string& name() const noexcept { return name_; }

  MultiVector bracket(const MultiVector& a, const MultiVector& b) const;
  MultiVector d(const MultiVector& a) const;

  /// Throws DomainError unless x is homogeneous of the given shifted degree with
  /// every coefficient in (h). Zero passes.
  void check_element(const MultiVector& x, int shifted_degree, const char* what) const;

 private:
  NilpotentDGLA(Chart chart, Bracket bracket, Differential d, std::string name);

  Chart chart_;
  Bracket bracket_;
  Differential d_;
  std::string name_;
};

/// d(gamma) + 1/2 [gamma, gamma] for gamma of shifted degree 1.
MultiVector is_mc(const NilpotentDGLA& g, const MultiVector& gamma);

/// gamma + sum_{k>=0} ad_lambda^k / (k+1)! ([lambda, gamma] - d lambda).
MultiVector gauge_action(const NilpotentDGLA& g, const MultiVector& lambda, const MultiVector& gamma);

/// Dynkin series of log(e^a e^b) truncated at bracket words of length max_len,
/// with words bracketed right-nested: [w1, [w2, .. [w_{m-1}, w_m]]].
template <class T, class Br, class Scale>
T dynkin_bch(const T& a, const T& b, int max_len, const T& zero, Br bracket, Scale scale);

/// Dynkin BCH with word length <= N-1 (longer words vanish since a, b lie in (h)).
MultiVector bch(const NilpotentDGLA& g, const MultiVector& a, const MultiVector& b);
/// Inverse for bch: -a.
MultiVector bch_inverse(const MultiVector& a);

/// bch(lambda, da + [gamma, a]) for a of shifted degree -1: the target of the
/// 2-morphism a from lambda at the object gamma.
MultiVector two_cell_target(const NilpotentDGLA& g, const MultiVector& lambda, const MultiVector& a, const MultiVector& gamma);

// ---------------------------------------------------------------------------

template <class T, class Br, class Scale>
T dynkin_bch(const T& a, const T& b, int max_len, const T& zero, Br bracket, Scale scale) {
  T total = zero;
  if (max_len < 1) return total;
  // Blocks (r_i, s_i) with r_i + s_i > 0, total word length <= max_len.
  std::vector<std::pair<int, int>> blocks;
  std::function<void(int)> rec = [&](int used) {
    if (!blocks.empty()) {
      const int n = static_cast<int>(blocks.size());
      std::vector<const T*> word;
      Rational denom = n * used;
      for (const auto& [r, s] : blocks) {
        for (int i = 0; i < r; ++i) word.push_back(&a);
        for (int i = 0; i < s; ++i) word.push_back(&b);
        for (int i = 2; i <= r; ++i) denom *= i;
        for (int i = 2; i <= s; ++i) denom *= i;
      }
      T nested = *word.back();
      for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) nested = bracket(*word[static_cast<std::size_t>(i)], nested);
      Rational coef = Rational((n & 1) ? 1 : -1) / denom;
      total = total + scale(nested, coef);
    }
    for (int r = 0; used + r <= max_len; ++r)
      for (int s = 0; used + r + s <= max_len; ++s) {
        if (r + s == 0) continue;
        blocks.emplace_back(r, s);
        rec(used + r + s);
        blocks.pop_back();
      }
  };
  rec(0);
  return total;
}

}  // namespace gerbeflow
