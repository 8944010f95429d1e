#pragma once

#include <span>
#include <string>
#include <vector>

namespace symbreak {

/// Bijection on {0..n-1}, stored as its image array.
class Permutation {
 public:
  /// Raises InvalidArgument unless `image` is a bijection on {0..size-1}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;
};

std::string to_string(const Permutation& p);

}  // namespace symbreak
