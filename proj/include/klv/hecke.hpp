#pragma once

#include <map>
#include <string>
#include <vector>

#include "klv/orbit_model.hpp"
#include "klv/poly.hpp"

namespace klv {

/// Element of the Hecke module: finite Poly-linear combination of standard
/// basis vectors m_i, indexed by orbit index.  Zero coefficients are never
/// stored, so map equality is element equality.
class ModuleElement {
 public:
  ModuleElement() = default;
  static ModuleElement basis(int i);

  const std::map<int, Poly>& terms() const { return terms_; }
  Poly coeff(int i) const;
  bool is_zero() const { return terms_.empty(); }

  void add(int i, const Poly& p);
  /// *this += factor * e.
  void add_scaled(const ModuleElement& e, const Poly& factor);

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, Poly> terms_;
};

/// Action of T_s on the standard basis, extended linearly:
///   complex ascent      T_s m = m_{s x}
///   complex descent     T_s m = q m_{s x} + (q-1) m
///   imaginary compact   T_s m = q m
///   noncompact type I   T_s m = m_{s x} + m_{up}
///   real parity         T_s m = (q-1)(m_{f0} + m_{f1}) + (q-2) m
///   real nonparity      T_s m = -m
/// A type II root is a hard error: the module carries trivial local systems
/// only, and that hypothesis excludes type II.
ModuleElement t_action(const OrbitModel& model, int s, const ModuleElement& e);

struct KLVResult;
KLVResult klv_table(const OrbitModel& model);

/// Polynomials P(lower, upper): the coefficient of m_lower in the self-dual
/// basis element C_upper.  Columns are stored sparsely; absent entries are
/// zero.
class KLVTable {
 public:
  /// Assembles a table from raw columns (cols[upper] maps lower -> P), e.g.
  /// when reading a serialized table back.  No invariants are enforced; run
  /// the verify checks on the result.
  static KLVTable from_columns(std::string name, ModelKind kind,
                               std::vector<OrbitId> orbits,
                               std::vector<std::map<int, Poly>> cols);

  const std::string& model_name() const { return name_; }
  ModelKind kind() const { return kind_; }
  int size() const { return static_cast<int>(cols_.size()); }
  const std::vector<OrbitId>& orbits() const { return orbits_; }
  int index_of(const std::string& payload) const;

  const Poly& poly(int lower, int upper) const;
  Poly poly(const OrbitId& lower, const OrbitId& upper) const;
  /// Nonzero entries of one column, keyed by lower index.
  const std::map<int, Poly>& column(int upper) const {
    return cols_[static_cast<std::size_t>(upper)];
  }

 private:
  friend KLVResult klv_table(const OrbitModel& model);
  std::string name_;
  ModelKind kind_ = ModelKind::Clans;
  std::vector<OrbitId> orbits_;
  std::map<std::string, int> index_;
  std::vector<std::map<int, Poly>> cols_;
};

/// Top-degree coefficients mu(lower, upper): the coefficient of
/// q^{(gap-1)/2} in P(lower, upper) when the length gap is odd, zero
/// otherwise.  These drive the correction step of the basis construction.
class MuTable {
 public:
  int size() const { return static_cast<int>(rows_.size()); }
  Int mu(int lower, int upper) const;
  /// Nonzero mu entries below one upper orbit, keyed by lower index.
  const std::map<int, Int>& row(int upper) const {
    return rows_[static_cast<std::size_t>(upper)];
  }

 private:
  friend KLVResult klv_table(const OrbitModel& model);
  std::vector<std::map<int, Int>> rows_;
};

struct KLVResult {
  KLVTable table;
  MuTable mu;
};

/// Builds the self-dual basis column by column in (d, payload) order using
/// the canonical raising pair:
///   C_upper = (T_s + 1) C_lower
///             - sum over delta with mu(delta, lower) != 0 and
///               classify(s, delta) in {complex descent, real parity,
///               imaginary compact} of
///               mu(delta, lower) q^{(d(lower)+1-d(delta))/2} C_delta.
/// Each finished column is checked: unit diagonal, support strictly below in
/// d, constant term 1, and degree bound 2 deg < gap.  Any breach is an
/// EngineError carrying a JSON detail.
KLVResult klv_table(const OrbitModel& model);

/// The stored column of C_upper as a module element.
ModuleElement c_column(const KLVResult& r, int upper);

/// Rebuilds C_upper from a caller-chosen raising pair (s, lower), reading
/// the needed lower columns from a finished table.  The canonical choice
/// reproduces c_column exactly; agreement for every valid pair is the
/// choice-independence property.
ModuleElement c_basis_via(const OrbitModel& model, const KLVResult& r,
                          int upper, int s, int lower);

}  // namespace klv
