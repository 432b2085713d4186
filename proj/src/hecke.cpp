#include "klv/hecke.hpp"

#include <sstream>
#include <stdexcept>

#include "klv/errors.hpp"

namespace klv {

ModuleElement ModuleElement::basis(int i) {
  ModuleElement e;
  e.terms_[i] = Poly::one();
  return e;
}

Poly ModuleElement::coeff(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Poly::zero() : it->second;
}

void ModuleElement::add(int i, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(i, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ModuleElement::add_scaled(const ModuleElement& e, const Poly& factor) {
  if (factor.is_zero()) return;
  for (const auto& [i, p] : e.terms_) add(i, p * factor);
}

ModuleElement t_action(const OrbitModel& model, int s, const ModuleElement& e) {
  const Poly qm1 = Poly::q() - Poly::one();
  ModuleElement out;
  for (const auto& [i, f] : e.terms()) {
    switch (model.classify(s, i)) {
      case RootType::ComplexAscent:
        out.add(model.cross(s, i), f);
        break;
      case RootType::ComplexDescent:
        out.add(model.cross(s, i), f * Poly::q());
        out.add(i, f * qm1);
        break;
      case RootType::ImaginaryCompact:
        out.add(i, f * Poly::q());
        break;
      case RootType::NoncompactTypeI:
        out.add(model.cross(s, i), f);
        out.add(*model.cayley_up(s, i), f);
        break;
      case RootType::RealParity: {
        const auto fiber = model.cayley_down_fiber(s, i);
        out.add(fiber[0], f * qm1);
        out.add(fiber[1], f * qm1);
        out.add(i, f * (Poly::q() - Poly::constant(2)));
        break;
      }
      case RootType::RealNonparity:
        out.add(i, -f);
        break;
      default: {
        std::ostringstream os;
        os << "{\"orbit\":\"" << model.orbit(i).payload << "\",\"s\":" << s
           << ",\"model\":\"" << model.name() << "\"}";
        throw EngineError(
            "type II root: nontrivial local systems are out of scope",
            os.str());
      }
    }
  }
  return out;
}

KLVTable KLVTable::from_columns(std::string name, ModelKind kind,
                                std::vector<OrbitId> orbits,
                                std::vector<std::map<int, Poly>> cols) {
  if (orbits.size() != cols.size())
    throw std::invalid_argument("from_columns: orbit/column count mismatch");
  KLVTable t;
  t.name_ = std::move(name);
  t.kind_ = kind;
  t.orbits_ = std::move(orbits);
  for (int i = 0; i < static_cast<int>(t.orbits_.size()); ++i)
    t.index_[t.orbits_[static_cast<std::size_t>(i)].payload] = i;
  t.cols_ = std::move(cols);
  return t;
}

int KLVTable::index_of(const std::string& payload) const {
  auto it = index_.find(payload);
  if (it == index_.end())
    throw std::invalid_argument("payload not in table: " + payload);
  return it->second;
}

const Poly& KLVTable::poly(int lower, int upper) const {
  static const Poly kZero;
  const auto& col = cols_[static_cast<std::size_t>(upper)];
  auto it = col.find(lower);
  return it == col.end() ? kZero : it->second;
}

Poly KLVTable::poly(const OrbitId& lower, const OrbitId& upper) const {
  return poly(index_of(lower.payload), index_of(upper.payload));
}

Int MuTable::mu(int lower, int upper) const {
  const auto& row = rows_[static_cast<std::size_t>(upper)];
  auto it = row.find(lower);
  return it == row.end() ? Int(0) : it->second;
}

namespace {

bool correction_applies(RootType t) {
  return t == RootType::ComplexDescent || t == RootType::RealParity ||
         t == RootType::ImaginaryCompact;
}

std::string entry_detail(const OrbitModel& model, int lower, int upper,
                         const Poly& p, const char* check) {
  std::ostringstream os;
  os << "{\"check\":\"" << check << "\",\"lower\":\""
     << model.orbit(lower).payload << "\",\"upper\":\""
     << model.orbit(upper).payload << "\",\"coeffs\":\"" << p.str()
     << "\",\"model\":\"" << model.name() << "\"}";
  return os.str();
}

/// One raising step: (T_s + 1) C_lower minus mu corrections, with all
/// lower columns supplied by the caller.
ModuleElement raise_column(const OrbitModel& model,
                           const std::vector<ModuleElement>& cols,
                           const std::vector<std::map<int, Int>>& mu_rows,
                           int upper, int s, int lower) {
  ModuleElement c = t_action(model, s, cols[static_cast<std::size_t>(lower)]);
  c.add_scaled(cols[static_cast<std::size_t>(lower)], Poly::one());
  for (const auto& [delta, m] : mu_rows[static_cast<std::size_t>(lower)]) {
    if (!correction_applies(model.classify(s, delta))) continue;
    const int twice_exp = model.d(lower) + 1 - model.d(delta);
    if (twice_exp < 0 || twice_exp % 2 != 0)
      throw EngineError("correction exponent is not a nonnegative integer",
                        entry_detail(model, delta, upper,
                                     Poly::constant(m), "mu_exponent"));
    c.add_scaled(cols[static_cast<std::size_t>(delta)],
                 -Poly::constant(m).shifted(twice_exp / 2));
  }
  return c;
}

void check_column(const OrbitModel& model, int upper, const ModuleElement& c) {
  if (!c.coeff(upper).is_one())
    throw EngineError("diagonal coefficient is not 1",
                      entry_detail(model, upper, upper, c.coeff(upper),
                                   "triangularity"));
  for (const auto& [lower, p] : c.terms()) {
    if (lower == upper) continue;
    const int gap = model.d(upper) - model.d(lower);
    if (gap <= 0)
      throw EngineError("support not strictly below in d",
                        entry_detail(model, lower, upper, p, "support"));
    if (p.coeff(0) != 1)
      throw EngineError("constant term is not 1",
                        entry_detail(model, lower, upper, p, "constant_term"));
    if (2 * p.degree() > gap - 1)
      throw EngineError("degree bound exceeded",
                        entry_detail(model, lower, upper, p, "degree"));
  }
}

}  // namespace

KLVResult klv_table(const OrbitModel& model) {
  const int n = model.size();
  std::vector<ModuleElement> cols(static_cast<std::size_t>(n));
  std::vector<std::map<int, Int>> mu_rows(static_cast<std::size_t>(n));

  for (int i = 0; i < n; ++i) {
    if (model.d(i) == 0) {
      cols[static_cast<std::size_t>(i)] = ModuleElement::basis(i);
    } else {
      const auto pair = *model.raising_pair(i);
      cols[static_cast<std::size_t>(i)] =
          raise_column(model, cols, mu_rows, i, pair.first, pair.second);
    }
    const ModuleElement& c = cols[static_cast<std::size_t>(i)];
    check_column(model, i, c);
    for (const auto& [lower, p] : c.terms()) {
      if (lower == i) continue;
      const int gap = model.d(i) - model.d(lower);
      if (gap % 2 == 0) continue;
      const Int top = p.coeff(static_cast<std::size_t>((gap - 1) / 2));
      if (top != 0) mu_rows[static_cast<std::size_t>(i)][lower] = top;
    }
  }

  KLVResult r;
  r.table.name_ = model.name();
  r.table.kind_ = model.kind();
  r.table.orbits_ = model.orbits();
  for (int i = 0; i < n; ++i)
    r.table.index_[model.orbit(i).payload] = i;
  r.table.cols_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    r.table.cols_[static_cast<std::size_t>(i)] =
        cols[static_cast<std::size_t>(i)].terms();
  r.mu.rows_ = std::move(mu_rows);
  return r;
}

ModuleElement c_column(const KLVResult& r, int upper) {
  ModuleElement e;
  for (const auto& [lower, p] : r.table.column(upper)) e.add(lower, p);
  return e;
}

ModuleElement c_basis_via(const OrbitModel& model, const KLVResult& r,
                          int upper, int s, int lower) {
  auto raised = model.monoid_raise(s, lower);
  if (!raised || *raised != upper)
    throw std::invalid_argument("(s, lower) is not a raising pair of upper");
  std::vector<ModuleElement> cols(static_cast<std::size_t>(model.size()));
  for (int i = 0; i < model.size(); ++i)
    if (model.d(i) < model.d(upper)) cols[static_cast<std::size_t>(i)] = c_column(r, i);
  std::vector<std::map<int, Int>> mu_rows(
      static_cast<std::size_t>(model.size()));
  for (int i = 0; i < model.size(); ++i)
    if (model.d(i) < model.d(upper)) mu_rows[static_cast<std::size_t>(i)] = r.mu.row(i);
  return raise_column(model, cols, mu_rows, upper, s, lower);
}

}  // namespace klv
