#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "klv/closure.hpp"
#include "klv/hecke.hpp"
#include "klv/kl_classical.hpp"
#include "klv/orbit_model.hpp"

namespace klv {

enum class ViolationKind {
  Semicontinuity,
  ConstantTerm,
  Degree,
  Support,
  Reachability,
  RootType,
  Mismatch,
};

std::string_view violation_kind_name(ViolationKind k);

/// One failed check, with enough data to replay the comparison.
struct Violation {
  ViolationKind kind;
  std::vector<std::string> orbits;  // payloads, in check-specific order
  int coeff_index = -1;             // -1 when not about one coefficient
  std::string observed;             // the failing values
  std::string detail;               // full context (polynomials involved)
};

struct ReportCounts {
  int orbits = 0;
  long long comparable_pairs = 0;
  long long chains = 0;
};

struct Report {
  std::string model;
  std::string check;
  ReportCounts counts;
  std::vector<Violation> violations;
  long long elapsed_ms = 0;
  bool ok() const { return violations.empty(); }
};

/// Coefficientwise monotonicity along closure chains: for every chain
/// O1 <= O2 <= O3 and every i, coeff_i P(O1,O3) >= coeff_i P(O2,O3).
/// Every failing (chain, i) is recorded.  The number of chains enumerated is
/// cross-checked against a count derived from down-set sizes.  Throws
/// invalid_argument when table and poset disagree on the ground set.
Report check_semicontinuity(const KLVTable& table, const ClosurePoset& poset);

/// The supporting claims: constant term 1 on comparable pairs, the degree
/// bound on strict pairs, support of each column equal to the closure
/// interval, reachability of every orbit from a closed orbit by raising
/// moves, and absence of real nonparity or type II classifications.
Report check_paper_claims(const KLVTable& table, const ClosurePoset& poset,
                          const OrbitModel& model);

/// Entrywise comparison of the diagonal-model table against the classical
/// one-step recursion.  Throws SizeError beyond the cap.
Report compare_engines(int n, int max_n = 4);

/// JSON form: {model, check, counts, violations[]}, plus elapsed_ms when
/// include_timing is set.  Deterministic for fixed inputs when timing is
/// excluded.
std::string report_to_json(const Report& r, bool include_timing = false);

/// One-paragraph human-readable form.
std::string report_summary(const Report& r);

}  // namespace klv
