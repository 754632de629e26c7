#pragma once

#include <vector>

namespace godel {

/// A bijection of {1..n}. image()[i-1] is the image of i.
class Permutation {
public:
  /// Throws std::invalid_argument unless `image` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// The transposition of a and b in {1..n} (a == b gives the identity).
  static Permutation transposition(int n, int a, int b);

  int n() const noexcept { return static_cast<int>(image_.size()); }
  int apply(int i) const;  // 1-based
  const std::vector<int>& image() const noexcept { return image_; }

  Permutation inverse() const;
  /// (this ∘ inner)(i) = this(inner(i)).
  Permutation compose(const Permutation& inner) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;
};

}  // namespace godel
