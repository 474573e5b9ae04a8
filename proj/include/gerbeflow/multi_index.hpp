#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gerbeflow {

/// Upper bound on the chart dimension. Desk-scale computations never need more,
/// and a fixed bound keeps exponents and direction sets allocation-free.
inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial x^a (entries beyond the chart dimension are zero).
struct MultiIndex {
  std::array<std::uint16_t, kMaxVars> exps{};

  static MultiIndex unit(int var);
  static MultiIndex from_vector(const std::vector<int>& v);
  std::vector<int> to_vector(int num_vars) const;

  int total() const noexcept;
  std::uint16_t operator[](int i) const { return exps[static_cast<std::size_t>(i)]; }
  std::uint16_t& operator[](int i) { return exps[static_cast<std::size_t>(i)]; }

  /// Componentwise <=.
  bool divides(const MultiIndex& other) const noexcept;

  MultiIndex& operator+=(const MultiIndex& o) noexcept;
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) noexcept { return a += b; }
  /// Componentwise difference; caller guarantees divides().
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) noexcept;

  auto operator<=>(const MultiIndex&) const = default;
};

/// Enumerate every multi-index in `num_vars` variables with total degree <= max_total,
/// in ascending lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(int num_vars, int max_total);

/// All decompositions beta = mu_0 + ... + mu_{parts-1}; each entry is the list of parts.
std::vector<std::vector<MultiIndex>> compositions(const MultiIndex& beta, int num_vars, int parts);

/// beta! / (mu_0! ... mu_r!) as an integer (componentwise multinomial product).
std::uint64_t multinomial(const MultiIndex& beta, const std::vector<MultiIndex>& parts, int num_vars);

}  // namespace gerbeflow
