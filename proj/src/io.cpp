#include "klv/io.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "klv/errors.hpp"

namespace klv {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_ll(const Int& v) {
  if (v < std::numeric_limits<long long>::min() ||
      v > std::numeric_limits<long long>::max())
    throw EngineError("coefficient exceeds the 64-bit serialization range");
  return v.convert_to<long long>();
}

ordered_json coeff_array(const Poly& p) {
  ordered_json a = ordered_json::array();
  for (const Int& c : p.coeffs()) a.push_back(to_ll(c));
  return a;
}

std::string coeff_field(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (const Int& c : p.coeffs()) {
    if (!first) os << ' ';
    os << c;
    first = false;
  }
  return os.str();
}

ordered_json orbit_record(const OrbitId& o) {
  ordered_json j;
  j["backend"] = std::string(backend_tag(o.backend));
  j["payload"] = o.payload;
  j["d"] = o.d;
  return j;
}

}  // namespace

std::string_view backend_tag(ModelKind k) {
  return k == ModelKind::Clans ? "clan" : "diagonal";
}

std::string orbits_to_json(const OrbitModel& model) {
  ordered_json j;
  j["model"] = model.name();
  j["orbits"] = ordered_json::array();
  for (const OrbitId& o : model.orbits()) j["orbits"].push_back(orbit_record(o));
  return j.dump(2) + "\n";
}

std::string orbits_to_csv(const OrbitModel& model) {
  std::ostringstream os;
  os << "backend,payload,d\n";
  for (const OrbitId& o : model.orbits())
    os << backend_tag(o.backend) << ',' << o.payload << ',' << o.d << '\n';
  return os.str();
}

std::string orbits_to_text(const OrbitModel& model) {
  std::ostringstream os;
  os << model.name() << ": " << model.size() << " orbits\n";
  for (const OrbitId& o : model.orbits())
    os << "  " << o.payload << " (d=" << o.d << ")\n";
  return os.str();
}

std::string poset_to_json(const OrbitModel& model, const ClosurePoset& poset) {
  ordered_json j;
  j["model"] = model.name();
  j["orbits"] = ordered_json::array();
  for (const OrbitId& o : poset.ground()) j["orbits"].push_back(orbit_record(o));
  j["covers"] = ordered_json::array();
  for (auto [a, b] : poset.covers()) {
    ordered_json e;
    e["lower"] = poset.ground()[static_cast<std::size_t>(a)].payload;
    e["upper"] = poset.ground()[static_cast<std::size_t>(b)].payload;
    j["covers"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string poset_to_csv(const ClosurePoset& poset) {
  std::ostringstream os;
  os << "lower,upper\n";
  for (auto [a, b] : poset.covers())
    os << poset.ground()[static_cast<std::size_t>(a)].payload << ','
       << poset.ground()[static_cast<std::size_t>(b)].payload << '\n';
  return os.str();
}

std::string poset_to_dot(const ClosurePoset& poset) {
  std::ostringstream os;
  os << "digraph closure {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < poset.size(); ++i) {
    const OrbitId& o = poset.ground()[static_cast<std::size_t>(i)];
    os << "  n" << i << " [label=\"" << o.payload << " (d=" << o.d << ")\"];\n";
  }
  for (auto [a, b] : poset.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string poset_to_text(const ClosurePoset& poset) {
  std::ostringstream os;
  os << poset.size() << " orbits, " << poset.covers().size() << " covers\n";
  for (auto [a, b] : poset.covers())
    os << "  " << poset.ground()[static_cast<std::size_t>(a)].payload << " < "
       << poset.ground()[static_cast<std::size_t>(b)].payload << '\n';
  return os.str();
}

std::string table_to_json(const KLVResult& r, bool with_mu) {
  const KLVTable& t = r.table;
  ordered_json j;
  j["model"] = t.model_name();
  j["entries"] = ordered_json::array();
  for (int hi = 0; hi < t.size(); ++hi) {
    for (const auto& [lo, p] : t.column(hi)) {
      ordered_json e;
      e["lower"] = t.orbits()[static_cast<std::size_t>(lo)].payload;
      e["upper"] = t.orbits()[static_cast<std::size_t>(hi)].payload;
      e["coeffs"] = coeff_array(p);
      if (with_mu) e["mu"] = to_ll(r.mu.mu(lo, hi));
      j["entries"].push_back(std::move(e));
    }
  }
  return j.dump(2) + "\n";
}

std::string table_to_csv(const KLVResult& r, bool with_mu) {
  const KLVTable& t = r.table;
  std::ostringstream os;
  os << (with_mu ? "lower,upper,coeffs,mu\n" : "lower,upper,coeffs\n");
  for (int hi = 0; hi < t.size(); ++hi) {
    for (const auto& [lo, p] : t.column(hi)) {
      os << t.orbits()[static_cast<std::size_t>(lo)].payload << ','
         << t.orbits()[static_cast<std::size_t>(hi)].payload << ",\""
         << coeff_field(p) << '"';
      if (with_mu) os << ',' << r.mu.mu(lo, hi);
      os << '\n';
    }
  }
  return os.str();
}

std::string table_to_text(const KLVResult& r, bool with_mu) {
  const KLVTable& t = r.table;
  std::ostringstream os;
  os << t.model_name() << " polynomials\n";
  for (int hi = 0; hi < t.size(); ++hi) {
    for (const auto& [lo, p] : t.column(hi)) {
      os << "  P(" << t.orbits()[static_cast<std::size_t>(lo)].payload << ", "
         << t.orbits()[static_cast<std::size_t>(hi)].payload
         << ") = " << p.str();
      if (with_mu) os << "  mu=" << r.mu.mu(lo, hi);
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace klv
