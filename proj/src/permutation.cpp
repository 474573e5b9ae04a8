#include "gerbeflow/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "gerbeflow/errors.hpp"

namespace gerbeflow {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation images must be a bijection of 0..m-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int m, int i, int j) {
  auto p = identity(m);
  std::swap(p.images_.at(static_cast<std::size_t>(i)), p.images_.at(static_cast<std::size_t>(j)));
  return p;
}

std::vector<Permutation> Permutation::all(int m) {
  std::vector<Permutation> out;
  auto p = identity(m).images_;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int Permutation::sign() const {
  std::vector<int> ones(images_.size(), 1);
  return koszul_sign(*this, ones);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("cannot compose permutations of different sizes");
  std::vector<int> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a(b(static_cast<int>(i)));
  return Permutation(std::move(out));
}

int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != sigma.size())
    throw DomainError("koszul_sign: permutation and degree list differ in length");
  // Bubble-sort the sequence sigma(0..m-1) back to the identity; every adjacent
  // swap exchanges two original factors and contributes (-1)^{pq}.
  std::vector<int> seq = sigma.images();
  int parity = 0;
  for (std::size_t pass = 0; pass < seq.size(); ++pass)
    for (std::size_t j = 0; j + 1 < seq.size() - pass; ++j)
      if (seq[j] > seq[j + 1]) {
        parity ^= (degrees[static_cast<std::size_t>(seq[j])] & degrees[static_cast<std::size_t>(seq[j + 1])]) & 1;
        std::swap(seq[j], seq[j + 1]);
      }
  return parity ? -1 : 1;
}

std::vector<int> permute_degrees(const Permutation& sigma, std::span<const int> degrees) {
  if (static_cast<int>(degrees.size()) != sigma.size())
    throw DomainError("permute_degrees: size mismatch");
  std::vector<int> out(degrees.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = degrees[static_cast<std::size_t>(sigma(static_cast<int>(j)))];
  return out;
}

}  // namespace gerbeflow
