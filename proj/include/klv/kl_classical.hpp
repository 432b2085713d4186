#pragma once

#include <map>
#include <utility>
#include <vector>

#include "klv/poly.hpp"
#include "klv/weyl.hpp"

namespace klv {

/// Classical Kazhdan-Lusztig polynomials for the symmetric group S_n, computed
/// by the one-step recursion with mu-corrections.  Serves as the independent
/// oracle against which the Hecke-module engine is compared on the diagonal
/// orbit model.
///
/// For a left descent s of w (l(sw) < l(w)) and c = 1 if l(sx) < l(x) else 0:
///
///   P_{x,w} = q^{1-c} P_{sx,sw} + q^c P_{x,sw}
///             - sum over z with sz < z and mu(z,sw) != 0 of
///               mu(z,sw) * q^{(l(w)-l(z))/2} * P_{x,z}
///
/// where mu(z,v) is the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v} at odd
/// length gap.  Entries are memoized keyed by (x, w); the recursion only
/// refers to strictly shorter w.
class KLTable {
 public:
  explicit KLTable(int n, int max_n = kDefaultWeylCap);

  int n() const { return n_; }
  /// Group elements in lexicographic order of one-line notation.
  const std::vector<Permutation>& group() const { return group_; }
  int index_of(const Permutation& w) const;

  /// The polynomial P_{x,w}; zero unless x <= w in the Bruhat order.
  const Poly& poly(const Permutation& x, const Permutation& w);
  const Poly& poly(int x, int w);

  /// mu(z,w): top allowed coefficient of P_{z,w} at odd length gap; 0 at even
  /// gap or when z is not below w.
  Int mu(const Permutation& z, const Permutation& w);
  Int mu(int z, int w);

  bool leq(int x, int w) const { return leq_[idx(x, w)]; }
  int length(int w) const { return len_[static_cast<std::size_t>(w)]; }

  /// Recomputes P_{x,w} via the recursion anchored at the given left descent
  /// s of w, reusing memoized entries for shorter elements.  Used to check
  /// that the result does not depend on the choice of descent.
  Poly poly_via_descent(int x, int w, int s);

 private:
  std::size_t idx(int x, int w) const {
    return static_cast<std::size_t>(x) * group_.size() +
           static_cast<std::size_t>(w);
  }
  const Poly& compute(int x, int w);

  int n_;
  std::vector<Permutation> group_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> len_;
  std::vector<bool> leq_;
  std::vector<std::vector<int>> left_mult_;  // [s-1][w] -> index of s*w
  std::map<std::pair<int, int>, Poly> memo_;
  Poly zero_;
};

}  // namespace klv
