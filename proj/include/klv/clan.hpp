#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace klv {

inline constexpr int kDefaultClanCap = 7;

/// A (p,q)-clan: a string of n = p+q symbols, each '+', '-', or one of k
/// matched digit pairs, with #(+) = p-k and #(-) = q-k.  Parameterizes the
/// K-orbits on the flag variety of GL(p+q) for K = GL(p) x GL(q).
///
/// Symbols are stored as ints: kPlus, kMinus, or a pair label >= 1.  Clans are
/// kept normalized: pair labels are assigned 1,2,3,... in order of first
/// occurrence, so equality of symbol vectors is equality of clans.
class Clan {
 public:
  static constexpr int kPlus = 0;
  static constexpr int kMinus = -1;

  /// Normalizes on construction; validates that every label occurs exactly
  /// twice.
  explicit Clan(std::vector<int> symbols);
  /// Parses a string over {+, -, 1..9}; accepts ASCII '-' only.
  static Clan parse(std::string_view text);

  int size() const { return static_cast<int>(sym_.size()); }
  int symbol(int pos) const { return sym_[static_cast<std::size_t>(pos)]; }
  bool is_sign(int pos) const { return symbol(pos) <= 0; }
  /// Position of the other endpoint of the pair at pos; -1 for signs.
  int partner(int pos) const { return partner_[static_cast<std::size_t>(pos)]; }
  int pair_count() const { return pairs_; }
  int plus_count() const;
  int minus_count() const;

  /// Relative length d: each pair (a < b) contributes (b - a) minus the
  /// number of pairs (a' < b') with a < a' < b < b'.  Closed orbits (no
  /// pairs) have d = 0.
  int length() const;

  /// Swap the symbols at positions pos, pos+1 and renormalize.
  Clan swapped(int pos) const;
  /// Replace the two signs at positions pos, pos+1 by a fresh matched pair.
  /// Requires opposite signs there.
  Clan with_pair(int pos) const;
  /// Replace the matched pair at positions pos, pos+1 by two signs.  Requires
  /// partner(pos) == pos+1.
  Clan with_signs(int pos, bool plus_first) const;

  std::string str() const;

  friend bool operator==(const Clan& a, const Clan& b) {
    return a.sym_ == b.sym_;
  }
  /// Lexicographic order of the string form ('+' < '-' < digits in ASCII).
  friend bool operator<(const Clan& a, const Clan& b);

 private:
  void normalize();

  std::vector<int> sym_;
  std::vector<int> partner_;
  int pairs_ = 0;
};

/// All (p,q)-clans.  The count is sum over k of n! / (2^k k! (p-k)! (q-k)!).
/// Requires p, q >= 1 and min(p,q) <= 9 so pair labels stay single digits.
std::vector<Clan> enumerate_clans(int p, int q);

}  // namespace klv
