#pragma once

#include <string>
#include <vector>

namespace klv {

inline constexpr int kDefaultWeylCap = 6;

/// Permutation of {1..n} in one-line notation.  Acts as an element of the
/// symmetric group; simple reflections act by left multiplication, i.e. by
/// swapping the values s and s+1.
class Permutation {
 public:
  /// Validates that the input is a bijection on {1..n}.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// Inverse of payload(): parses a digit string like "231".
  static Permutation from_payload(const std::string& digits);

  int n() const { return static_cast<int>(w_.size()); }
  /// Image of i under the permutation, 1-based.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  /// Number of inversions.
  int length() const;
  /// Left multiplication by the simple transposition (s, s+1): swaps the
  /// values s and s+1 wherever they occur.  Requires 1 <= s <= n-1.
  Permutation left_mult(int s) const;
  Permutation inverse() const;

  /// Digits of the one-line word, e.g. "231".  Requires n <= 9.
  std::string payload() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.w_ == b.w_;
  }
  /// Lexicographic order on one-line notation.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.w_ < b.w_;
  }

 private:
  std::vector<int> w_;
};

/// Rank-matrix test for the Bruhat order: x <= w iff every northwest rank of
/// x dominates the corresponding rank of w.  Permutations must share n.
bool bruhat_leq(const Permutation& x, const Permutation& w);

/// All n! permutations in lexicographic order.  Throws SizeError when n
/// exceeds the cap.
std::vector<Permutation> symmetric_group(int n, int max_n = kDefaultWeylCap);

}  // namespace klv
