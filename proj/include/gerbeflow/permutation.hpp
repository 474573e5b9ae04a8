#pragma once

#include <span>
#include <vector>

namespace gerbeflow {

/// Bijection of {0, ..., m-1}; images()[i] is sigma(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `images` is a bijection of 0..m-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  static Permutation transposition(int m, int i, int j);
  /// Every permutation of m letters, in lexicographic order of images.
  static std::vector<Permutation> all(int m);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  /// +1 / -1.
  int sign() const;
  Permutation inverse() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Koszul sign eps(sigma, |x_1|, ..., |x_m|) defined by
///   x_{sigma(1)} ^ ... ^ x_{sigma(m)} = eps * x_1 ^ ... ^ x_m
/// in a graded-commutative algebra; a swap of neighbours of degrees p, q
/// contributes (-1)^{pq}. Throws DomainError on size mismatch.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// Degrees seen after reordering: result[j] = degrees[sigma(j)].
std::vector<int> permute_degrees(const Permutation& sigma, std::span<const int> degrees);

}  // namespace gerbeflow
