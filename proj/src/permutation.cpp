#include "symbreak/permutation.hpp"

#include <numeric>

#include "symbreak/error.hpp"

namespace symbreak {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= degree() || seen[x])
      throw InvalidArgument("permutation image is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  std::vector<int> image(a.image_.size());
  for (int i = 0; i < a.degree(); ++i) image[i] = a.image_[b.image_[i]];
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

}  // namespace symbreak
