#include "godel/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace godel {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation image is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("permutation size must be >= 0");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::invalid_argument("transposition indices out of range");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::swap(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(image));
}

int Permutation::apply(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("permutation applied outside {1..n}");
  return image_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> image(image_.size());
  for (int i = 1; i <= n(); ++i) image[static_cast<std::size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.n() != n()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> image(image_.size());
  for (int i = 1; i <= n(); ++i) image[static_cast<std::size_t>(i - 1)] = apply(inner.apply(i));
  return Permutation(std::move(image));
}

}  // namespace godel
