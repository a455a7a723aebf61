#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monokit {

/// A bijection of {0, ..., n-1}, stored as its image list.
///
/// Products read left to right: (a * b)(i) = b(a(i)), i.e. apply a, then b.
/// This matches path composition, so the permutation of a loop product
/// gamma1 . gamma2 is perm(gamma1) * perm(gamma2).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  /// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;
  Permutation pow(std::int64_t e) const;
  /// Lengths-lcm of the cycle decomposition.
  std::int64_t order() const;
  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  /// One cycle through all points.
  bool is_full_cycle() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b) { return a.then(b); }
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

}  // namespace monokit
