#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ybfuse {

// Bijection of {1..n}. Products compose right to left: (p*s)(k) = p(s(k)),
// so (1,2)*(2,3) = (1,2,3).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  // One-line notation, 1-based images.
  static Permutation from_images(const std::vector<int>& images);
  static Permutation transposition(int n, int i, int j);
  static Permutation cycle(int n, std::initializer_list<int> points);
  // w_n(i) = n - i + 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1] + 1; }
  std::vector<int> images() const;

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  // Number of inversions.
  int length() const;
  bool is_identity() const;
  // Word i_1 .. i_l with p = s_{i_1} ... s_{i_l}, l = length().
  std::vector<int> reduced_word() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<std::uint8_t> images_;
};

// All permutations of n letters in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(int n);

}  // namespace ybfuse
