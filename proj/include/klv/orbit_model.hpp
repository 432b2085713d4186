#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klv/clan.hpp"
#include "klv/weyl.hpp"

namespace klv {

inline constexpr int kDefaultDiagonalCap = kDefaultWeylCap;

enum class ModelKind { Clans, Diagonal };

/// Classification of a simple root relative to an orbit.  RealNonparity and
/// TypeIIUnsupported are kept so the case analysis is total, but the
/// supported backends never produce them.
enum class RootType {
  ComplexAscent,
  ComplexDescent,
  ImaginaryCompact,
  NoncompactTypeI,
  RealParity,
  RealNonparity,
  TypeIIUnsupported,
};

std::string_view root_type_name(RootType t);

/// Orbit parameter: backend tag, canonical payload string, and the relative
/// length d above the closed orbits.
struct OrbitId {
  ModelKind backend;
  std::string payload;
  int d = 0;

  friend bool operator==(const OrbitId& a, const OrbitId& b) {
    return a.backend == b.backend && a.payload == b.payload;
  }
};

/// A symmetric-pair orbit backend with all moves precomputed.  Orbits are
/// indexed 0..size()-1 in (d, payload) order; every operation is available
/// both on indices and on OrbitId values.
///
/// For the clan backend, positions s, s+1 of the symbol string decide the
/// root type: equal signs are imaginary compact, opposite signs noncompact
/// of type I, a matched pair is real (parity holds), and everything else is
/// complex with ascent/descent read off the length change of the swap.  The
/// diagonal backend has permutations as orbits and only complex roots.
class OrbitModel {
 public:
  ModelKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Number of simple root indices (n - 1 for both backends).
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(orbits_.size()); }
  const std::vector<OrbitId>& orbits() const { return orbits_; }
  const OrbitId& orbit(int i) const {
    return orbits_[static_cast<std::size_t>(i)];
  }
  int d(int i) const { return orbit(i).d; }
  /// Index of the orbit with the given payload; throws for unknown payloads.
  int index_of(std::string_view payload) const;
  /// Validated OrbitId for a payload string.
  OrbitId make_orbit(std::string_view payload) const;

  RootType classify(int s, int i) const { return row(s, i).type; }
  /// Cross action of the simple reflection s.  Fixes imaginary and real
  /// orbits; swaps the parameter otherwise.
  int cross(int s, int i) const { return row(s, i).cross; }
  /// Defined exactly for noncompact type I roots; raises d by 1.
  std::optional<int> cayley_up(int s, int i) const;
  /// The two lower orbits of a real parity root; empty otherwise.
  std::vector<int> cayley_down_fiber(int s, int i) const;
  /// Single-valued raising move: cross on a complex ascent, Cayley up on a
  /// noncompact type I root, absent otherwise.
  std::optional<int> monoid_raise(int s, int i) const;
  /// Orbits of the s-string through i: the fiber of the projection to the
  /// flag variety of the minimal parabolic attached to s.
  std::vector<int> string_set(int s, int i) const;
  /// Canonical (smallest s, then lexicographically smallest lower orbit)
  /// pair with monoid_raise(s, lower) == i; absent iff d(i) == 0.  Throws
  /// EngineError if d(i) > 0 and no raising pair exists.
  std::optional<std::pair<int, int>> raising_pair(int i) const;
  /// All raising pairs of i in canonical order.
  std::vector<std::pair<int, int>> raising_pairs(int i) const;

  // OrbitId-level counterparts.
  RootType classify(int s, const OrbitId& o) const;
  OrbitId cross(int s, const OrbitId& o) const;
  std::optional<OrbitId> cayley_up(int s, const OrbitId& o) const;
  std::vector<OrbitId> cayley_down_fiber(int s, const OrbitId& o) const;
  std::optional<OrbitId> monoid_raise(int s, const OrbitId& o) const;
  std::vector<OrbitId> string_set(int s, const OrbitId& o) const;
  std::optional<std::pair<int, OrbitId>> raising_pair(const OrbitId& o) const;

 private:
  struct MoveRow {
    RootType type = RootType::TypeIIUnsupported;
    int cross = -1;
    int up = -1;       // Cayley up image, -1 when absent
    int fiber0 = -1;   // Cayley down fiber, -1 when absent
    int fiber1 = -1;
  };

  const MoveRow& row(int s, int i) const;
  void check_index(int i) const;

  ModelKind kind_;
  std::string name_;
  int rank_ = 0;
  std::vector<OrbitId> orbits_;
  std::map<std::string, int> index_;
  std::vector<std::vector<MoveRow>> moves_;  // [s-1][orbit]

  friend OrbitModel make_clan_model(int p, int q, int max_size);
  friend OrbitModel make_diagonal_model(int n, int max_size);
  OrbitModel() = default;
};

/// K-orbits of GL(p) x GL(q) on the flag variety of GL(p+q), parameterized
/// by (p,q)-clans.  Throws SizeError when p+q exceeds the cap.
OrbitModel make_clan_model(int p, int q, int max_size = kDefaultClanCap);

/// Diagonal model: orbits are permutations, all roots complex, the closure
/// order is the Bruhat order.  Throws SizeError when n exceeds the cap.
OrbitModel make_diagonal_model(int n, int max_size = kDefaultDiagonalCap);

}  // namespace klv
