#pragma once

#include <utility>
#include <vector>

#include "klv/orbit_model.hpp"

namespace klv {

/// Containment-of-closures partial order on the orbits of a model.  Indices
/// refer to the model's (d, payload) orbit order.  Immutable once built.
class ClosurePoset {
 public:
  int size() const { return static_cast<int>(down_.size()); }
  const std::vector<OrbitId>& ground() const { return ground_; }

  bool leq(int a, int b) const {
    return down_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
  }
  bool leq(const OrbitId& a, const OrbitId& b) const;

  /// Orbits in the closure of b, ascending index order.
  std::vector<int> down_set(int b) const;
  /// Orbits whose closure contains a, ascending index order.
  std::vector<int> up_set(int a) const;
  /// {x : a <= x <= b}; empty when a is not below b.
  std::vector<int> interval(int a, int b) const;
  std::vector<OrbitId> interval(const OrbitId& a, const OrbitId& b) const;

  /// Hasse covers (lower, upper), the transitive reduction of leq, sorted by
  /// (upper, lower) index.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

 private:
  friend ClosurePoset build_poset(const OrbitModel& model);
  ClosurePoset() = default;
  int index_of(const OrbitId& o) const;

  std::vector<OrbitId> ground_;
  std::vector<std::vector<bool>> down_;  // down_[b][a] = (a <= b)
  std::vector<std::vector<bool>> up_;    // transpose of down_
  std::vector<std::pair<int, int>> covers_;
};

/// Builds the closure order by saturating lower closures along simple-root
/// strings: closed orbits are their own closure, and for any raising pair
/// (s, γ) of γ' the closure of γ' is the union of string_set(s, δ) over δ in
/// the closure of γ.  Every valid raising pair is checked to give the same
/// set; disagreement or a cover changing d by more than 1 is an EngineError.
ClosurePoset build_poset(const OrbitModel& model);

}  // namespace klv
