#include "klv/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "klv/errors.hpp"

namespace klv {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

void require_same_ground(const KLVTable& table, const ClosurePoset& poset) {
  if (table.size() != poset.size())
    throw std::invalid_argument("table and poset sizes differ");
  for (int i = 0; i < table.size(); ++i)
    if (!(table.orbits()[static_cast<std::size_t>(i)] ==
          poset.ground()[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("table and poset ground sets differ");
}

long long count_comparable(const ClosurePoset& poset) {
  long long c = 0;
  for (int b = 0; b < poset.size(); ++b)
    for (int a = 0; a < poset.size(); ++a)
      if (poset.leq(a, b)) ++c;
  return c;
}

std::string pair_detail(const KLVTable& t, int lo, int hi) {
  std::ostringstream os;
  os << "P(" << t.orbits()[static_cast<std::size_t>(lo)].payload << ","
     << t.orbits()[static_cast<std::size_t>(hi)].payload
     << ") = " << t.poly(lo, hi).str();
  return os.str();
}

}  // namespace

std::string_view violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Semicontinuity:
      return "semicontinuity";
    case ViolationKind::ConstantTerm:
      return "constant_term";
    case ViolationKind::Degree:
      return "degree";
    case ViolationKind::Support:
      return "support";
    case ViolationKind::Reachability:
      return "reachability";
    case ViolationKind::RootType:
      return "root_type";
    case ViolationKind::Mismatch:
      return "mismatch";
  }
  return "unknown";
}

Report check_semicontinuity(const KLVTable& table, const ClosurePoset& poset) {
  const auto t0 = Clock::now();
  require_same_ground(table, poset);
  const int n = table.size();

  Report r;
  r.model = table.model_name();
  r.check = "semicontinuity";
  r.counts.orbits = n;
  r.counts.comparable_pairs = count_comparable(poset);

  long long chains = 0;
  for (int o3 = 0; o3 < n; ++o3) {
    const auto down3 = poset.down_set(o3);
    for (int o2 : down3) {
      const Poly& upper_poly = table.poly(o2, o3);
      for (int o1 : poset.down_set(o2)) {
        ++chains;
        const Poly& lower_poly = table.poly(o1, o3);
        const int top =
            std::max(lower_poly.degree(), upper_poly.degree());
        for (int i = 0; i <= top; ++i) {
          const Int a = lower_poly.coeff(static_cast<std::size_t>(i));
          const Int b = upper_poly.coeff(static_cast<std::size_t>(i));
          if (a >= b) continue;
          Violation v;
          v.kind = ViolationKind::Semicontinuity;
          v.orbits = {
              table.orbits()[static_cast<std::size_t>(o1)].payload,
              table.orbits()[static_cast<std::size_t>(o2)].payload,
              table.orbits()[static_cast<std::size_t>(o3)].payload};
          v.coeff_index = i;
          {
            std::ostringstream os;
            os << "coeff " << i << ": " << a << " < " << b;
            v.observed = os.str();
          }
          v.detail = pair_detail(table, o1, o3) + "; " +
                     pair_detail(table, o2, o3);
          r.violations.push_back(std::move(v));
        }
      }
    }
  }
  r.counts.chains = chains;

  // Independent chain count from down-set sizes.
  long long expected = 0;
  for (int o3 = 0; o3 < n; ++o3)
    for (int o2 : poset.down_set(o3))
      expected += static_cast<long long>(poset.down_set(o2).size());
  if (expected != chains)
    throw EngineError("chain enumeration does not match down-set count");

  r.elapsed_ms = ms_since(t0);
  return r;
}

Report check_paper_claims(const KLVTable& table, const ClosurePoset& poset,
                          const OrbitModel& model) {
  const auto t0 = Clock::now();
  require_same_ground(table, poset);
  if (table.model_name() != model.name())
    throw std::invalid_argument("table and model descriptors differ");
  const int n = table.size();

  Report r;
  r.model = table.model_name();
  r.check = "paper_claims";
  r.counts.orbits = n;
  r.counts.comparable_pairs = count_comparable(poset);
  r.counts.chains = 0;

  auto payload = [&](int i) {
    return table.orbits()[static_cast<std::size_t>(i)].payload;
  };

  for (int hi = 0; hi < n; ++hi) {
    for (int lo = 0; lo < n; ++lo) {
      const Poly& p = table.poly(lo, hi);
      const bool comparable = poset.leq(lo, hi);
      if (p.is_zero() != !comparable) {
        Violation v;
        v.kind = ViolationKind::Support;
        v.orbits = {payload(lo), payload(hi)};
        v.observed = comparable ? "P = 0 on a comparable pair"
                                : "P != 0 off the closure interval";
        v.detail = pair_detail(table, lo, hi);
        r.violations.push_back(std::move(v));
      }
      if (!comparable) continue;
      if (p.coeff(0) != 1) {
        Violation v;
        v.kind = ViolationKind::ConstantTerm;
        v.orbits = {payload(lo), payload(hi)};
        v.coeff_index = 0;
        {
          std::ostringstream os;
          os << "constant term " << p.coeff(0);
          v.observed = os.str();
        }
        v.detail = pair_detail(table, lo, hi);
        r.violations.push_back(std::move(v));
      }
      const int gap = model.d(hi) - model.d(lo);
      if (lo != hi && 2 * p.degree() > gap - 1) {
        Violation v;
        v.kind = ViolationKind::Degree;
        v.orbits = {payload(lo), payload(hi)};
        {
          std::ostringstream os;
          os << "deg " << p.degree() << " with gap " << gap;
          v.observed = os.str();
        }
        v.detail = pair_detail(table, lo, hi);
        r.violations.push_back(std::move(v));
      }
    }
  }

  // Every orbit reaches d = 0 along raising pairs run backwards.
  for (int i = 0; i < n; ++i) {
    int cur = i;
    while (model.d(cur) > 0) {
      try {
        cur = model.raising_pair(cur)->second;
      } catch (const EngineError& e) {
        Violation v;
        v.kind = ViolationKind::Reachability;
        v.orbits = {payload(i), payload(cur)};
        v.observed = "no raising pair";
        v.detail = e.what();
        r.violations.push_back(std::move(v));
        break;
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int s = 1; s <= model.rank(); ++s) {
      const RootType t = model.classify(s, i);
      if (t != RootType::RealNonparity && t != RootType::TypeIIUnsupported)
        continue;
      Violation v;
      v.kind = ViolationKind::RootType;
      v.orbits = {payload(i)};
      {
        std::ostringstream os;
        os << "s = " << s << ": " << root_type_name(t);
        v.observed = os.str();
      }
      r.violations.push_back(std::move(v));
    }
  }

  r.elapsed_ms = ms_since(t0);
  return r;
}

Report compare_engines(int n, int max_n) {
  const auto t0 = Clock::now();
  if (n > max_n)
    throw SizeError("compare_engines: n = " + std::to_string(n) +
                    " exceeds cap " + std::to_string(max_n));
  const OrbitModel model = make_diagonal_model(n, std::max(n, max_n));
  const KLVResult res = klv_table(model);
  KLTable oracle(n, std::max(n, max_n));

  Report r;
  r.model = model.name();
  r.check = "engine_comparison";
  r.counts.orbits = model.size();

  const auto group = symmetric_group(n, std::max(n, max_n));
  long long comparable = 0;
  for (const Permutation& w : group) {
    const int hi = model.index_of(w.payload());
    for (const Permutation& x : group) {
      const int lo = model.index_of(x.payload());
      const Poly a = res.table.poly(lo, hi);
      const Poly b = oracle.poly(x, w);
      if (!b.is_zero()) ++comparable;
      if (a == b) continue;
      Violation v;
      v.kind = ViolationKind::Mismatch;
      v.orbits = {x.payload(), w.payload()};
      v.observed = "module: " + a.str() + "; recursion: " + b.str();
      r.violations.push_back(std::move(v));
    }
  }
  r.counts.comparable_pairs = comparable;
  r.counts.chains = 0;
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::string report_to_json(const Report& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["model"] = r.model;
  j["check"] = r.check;
  j["counts"]["orbits"] = r.counts.orbits;
  j["counts"]["comparable_pairs"] = r.counts.comparable_pairs;
  j["counts"]["chains"] = r.counts.chains;
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json jv;
    jv["kind"] = std::string(violation_kind_name(v.kind));
    jv["orbits"] = v.orbits;
    if (v.coeff_index >= 0) jv["coeff_index"] = v.coeff_index;
    jv["observed"] = v.observed;
    if (!v.detail.empty()) jv["detail"] = v.detail;
    j["violations"].push_back(std::move(jv));
  }
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string report_summary(const Report& r) {
  std::ostringstream os;
  os << r.model << " " << r.check << ": " << r.counts.orbits << " orbits, "
     << r.counts.comparable_pairs << " comparable pairs";
  if (r.counts.chains > 0) os << ", " << r.counts.chains << " chains";
  if (r.ok())
    os << "; all checks passed";
  else
    os << "; " << r.violations.size() << " violation(s)";
  os << "\n";
  for (const Violation& v : r.violations) {
    os << "  [" << violation_kind_name(v.kind) << "]";
    for (const std::string& o : v.orbits) os << " " << o;
    os << ": " << v.observed;
    if (!v.detail.empty()) os << " (" << v.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace klv
