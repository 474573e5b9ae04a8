#include "gerbeflow/multi_index.hpp"

#include <functional>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

MultiIndex MultiIndex::unit(int var) {
  if (var < 0 || var >= kMaxVars) throw DomainError("variable index out of range");
  MultiIndex m;
  m[var] = 1;
  return m;
}

MultiIndex MultiIndex::from_vector(const std::vector<int>& v) {
  if (static_cast<int>(v.size()) > kMaxVars) throw StructuralError("too many variables");
  MultiIndex m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > 0xFFFF) throw DomainError("exponent out of range");
    m.exps[i] = static_cast<std::uint16_t>(v[i]);
  }
  return m;
}

std::vector<int> MultiIndex::to_vector(int num_vars) const {
  return {exps.begin(), exps.begin() + num_vars};
}

int MultiIndex::total() const noexcept {
  int t = 0;
  for (auto e : exps) t += e;
  return t;
}

bool MultiIndex::divides(const MultiIndex& other) const noexcept {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) noexcept {
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = static_cast<std::uint16_t>(exps[i] + o.exps[i]);
  return *this;
}

MultiIndex operator-(MultiIndex a, const MultiIndex& b) noexcept {
  for (std::size_t i = 0; i < a.exps.size(); ++i) a.exps[i] = static_cast<std::uint16_t>(a.exps[i] - b.exps[i]);
  return a;
}

std::vector<MultiIndex> multi_indices_up_to(int num_vars, int max_total) {
  std::vector<MultiIndex> out;
  MultiIndex cur;
  std::function<void(int, int)> rec = [&](int var, int budget) {
    if (var == num_vars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      cur[var] = static_cast<std::uint16_t>(e);
      rec(var + 1, budget - e);
    }
    cur[var] = 0;
  };
  if (max_total >= 0) rec(0, max_total);
  return out;
}

std::vector<std::vector<MultiIndex>> compositions(const MultiIndex& beta, int num_vars, int parts) {
  std::vector<std::vector<MultiIndex>> out;
  if (parts <= 0) return out;
  std::vector<MultiIndex> cur(static_cast<std::size_t>(parts));
  // Distribute each variable's exponent over the parts independently.
  std::function<void(int, int, int)> rec = [&](int var, int part, int remaining) {
    if (var == num_vars) {
      out.push_back(cur);
      return;
    }
    if (part == parts - 1) {
      cur[static_cast<std::size_t>(part)][var] = static_cast<std::uint16_t>(remaining);
      rec(var + 1, 0, var + 1 < num_vars ? beta[var + 1] : 0);
      cur[static_cast<std::size_t>(part)][var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[static_cast<std::size_t>(part)][var] = static_cast<std::uint16_t>(e);
      rec(var, part + 1, remaining - e);
    }
    cur[static_cast<std::size_t>(part)][var] = 0;
  };
  rec(0, 0, num_vars > 0 ? beta[0] : 0);
  return out;
}

std::uint64_t multinomial(const MultiIndex& beta, const std::vector<MultiIndex>& parts, int num_vars) {
  std::uint64_t result = 1;
  for (int v = 0; v < num_vars; ++v) {
    // Product of binomials: C(b, m0) * C(b - m0, m1) * ...
    std::uint64_t left = beta[v];
    for (const auto& p : parts) {
      std::uint64_t k = p[v];
      std::uint64_t c = 1;
      for (std::uint64_t i = 1; i <= k; ++i) c = c * (left - k + i) / i;
      result *= c;
      left -= k;
    }
  }
  return result;
}

}  // namespace gerbeflow
