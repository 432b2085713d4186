#include "klv/orbit_model.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "klv/errors.hpp"

namespace klv {

std::string_view root_type_name(RootType t) {
  switch (t) {
    case RootType::ComplexAscent:
      return "complex_ascent";
    case RootType::ComplexDescent:
      return "complex_descent";
    case RootType::ImaginaryCompact:
      return "imaginary_compact";
    case RootType::NoncompactTypeI:
      return "noncompact_type_I";
    case RootType::RealParity:
      return "real_parity";
    case RootType::RealNonparity:
      return "real_nonparity";
    case RootType::TypeIIUnsupported:
      return "type_II_unsupported";
  }
  return "unknown";
}

int OrbitModel::index_of(std::string_view payload) const {
  auto it = index_.find(std::string(payload));
  if (it == index_.end()) {
    std::ostringstream os;
    os << "unknown orbit payload '" << payload << "' in model " << name_;
    throw std::invalid_argument(os.str());
  }
  return it->second;
}

OrbitId OrbitModel::make_orbit(std::string_view payload) const {
  return orbit(index_of(payload));
}

void OrbitModel::check_index(int i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("orbit index out of range");
}

const OrbitModel::MoveRow& OrbitModel::row(int s, int i) const {
  if (s < 1 || s > rank_) throw std::out_of_range("simple index out of range");
  check_index(i);
  return moves_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i)];
}

std::optional<int> OrbitModel::cayley_up(int s, int i) const {
  const MoveRow& r = row(s, i);
  if (r.up < 0) return std::nullopt;
  return r.up;
}

std::vector<int> OrbitModel::cayley_down_fiber(int s, int i) const {
  const MoveRow& r = row(s, i);
  if (r.fiber0 < 0) return {};
  return {r.fiber0, r.fiber1};
}

std::optional<int> OrbitModel::monoid_raise(int s, int i) const {
  const MoveRow& r = row(s, i);
  if (r.type == RootType::ComplexAscent) return r.cross;
  if (r.type == RootType::NoncompactTypeI) return r.up;
  return std::nullopt;
}

std::vector<int> OrbitModel::string_set(int s, int i) const {
  const MoveRow& r = row(s, i);
  std::vector<int> out{i};
  switch (r.type) {
    case RootType::ComplexAscent:
    case RootType::ComplexDescent:
      out.push_back(r.cross);
      break;
    case RootType::NoncompactTypeI:
      out.push_back(r.cross);
      out.push_back(r.up);
      break;
    case RootType::RealParity:
      out.push_back(r.fiber0);
      out.push_back(r.fiber1);
      break;
    case RootType::ImaginaryCompact:
      break;
    default:
      throw EngineError("string_set: unsupported root type");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<int, int>> OrbitModel::raising_pairs(int i) const {
  check_index(i);
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= rank_; ++s) {
    // Candidates sit one level below; orbit order is (d, payload), so
    // ascending j already matches the canonical payload order.
    for (int j = 0; j < size(); ++j) {
      if (d(j) != d(i) - 1) continue;
      auto up = monoid_raise(s, j);
      if (up && *up == i) out.emplace_back(s, j);
    }
  }
  return out;
}

std::optional<std::pair<int, int>> OrbitModel::raising_pair(int i) const {
  check_index(i);
  if (d(i) == 0) return std::nullopt;
  auto pairs = raising_pairs(i);
  if (pairs.empty()) {
    std::ostringstream os;
    os << "{\"orbit\":\"" << orbit(i).payload << "\",\"d\":" << d(i)
       << ",\"model\":\"" << name_ << "\"}";
    throw EngineError("no raising pair for an orbit of positive length",
                      os.str());
  }
  return pairs.front();
}

RootType OrbitModel::classify(int s, const OrbitId& o) const {
  return classify(s, index_of(o.payload));
}

OrbitId OrbitModel::cross(int s, const OrbitId& o) const {
  return orbit(cross(s, index_of(o.payload)));
}

std::optional<OrbitId> OrbitModel::cayley_up(int s, const OrbitId& o) const {
  auto r = cayley_up(s, index_of(o.payload));
  if (!r) return std::nullopt;
  return orbit(*r);
}

std::vector<OrbitId> OrbitModel::cayley_down_fiber(int s,
                                                   const OrbitId& o) const {
  std::vector<OrbitId> out;
  for (int j : cayley_down_fiber(s, index_of(o.payload))) out.push_back(orbit(j));
  return out;
}

std::optional<OrbitId> OrbitModel::monoid_raise(int s, const OrbitId& o) const {
  auto r = monoid_raise(s, index_of(o.payload));
  if (!r) return std::nullopt;
  return orbit(*r);
}

std::vector<OrbitId> OrbitModel::string_set(int s, const OrbitId& o) const {
  std::vector<OrbitId> out;
  for (int j : string_set(s, index_of(o.payload))) out.push_back(orbit(j));
  return out;
}

std::optional<std::pair<int, OrbitId>> OrbitModel::raising_pair(
    const OrbitId& o) const {
  auto r = raising_pair(index_of(o.payload));
  if (!r) return std::nullopt;
  return std::make_pair(r->first, orbit(r->second));
}

namespace {

void sort_and_index(OrbitModel& m, std::vector<OrbitId>& ids,
                    std::vector<OrbitId>& out_orbits,
                    std::map<std::string, int>& out_index) {
  (void)m;
  std::sort(ids.begin(), ids.end(), [](const OrbitId& a, const OrbitId& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.payload < b.payload;
  });
  out_orbits = ids;
  for (int i = 0; i < static_cast<int>(out_orbits.size()); ++i)
    out_index[out_orbits[static_cast<std::size_t>(i)].payload] = i;
}

}  // namespace

OrbitModel make_clan_model(int p, int q, int max_size) {
  if (p < 1 || q < 1) throw std::invalid_argument("clan model needs p, q >= 1");
  if (p + q > max_size) {
    std::ostringstream os;
    os << "clan model (" << p << "," << q << ") exceeds cap p+q <= " << max_size;
    throw SizeError(os.str());
  }

  OrbitModel m;
  m.kind_ = ModelKind::Clans;
  {
    std::ostringstream os;
    os << "clans(" << p << "," << q << ")";
    m.name_ = os.str();
  }
  const int n = p + q;
  m.rank_ = n - 1;

  std::vector<Clan> clans = enumerate_clans(p, q);
  std::vector<OrbitId> ids;
  ids.reserve(clans.size());
  for (const Clan& c : clans)
    ids.push_back(OrbitId{ModelKind::Clans, c.str(), c.length()});
  sort_and_index(m, ids, m.orbits_, m.index_);

  m.moves_.assign(static_cast<std::size_t>(m.rank_),
                  std::vector<OrbitModel::MoveRow>(
                      static_cast<std::size_t>(m.size())));
  for (int i = 0; i < m.size(); ++i) {
    const Clan c = Clan::parse(m.orbit(i).payload);
    for (int s = 1; s <= m.rank_; ++s) {
      OrbitModel::MoveRow& r =
          m.moves_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i)];
      const int a = c.symbol(s - 1);
      const int b = c.symbol(s);
      const bool sign_a = a <= 0;
      const bool sign_b = b <= 0;
      if (sign_a && sign_b) {
        if (a == b) {
          r.type = RootType::ImaginaryCompact;
          r.cross = i;
        } else {
          r.type = RootType::NoncompactTypeI;
          r.cross = m.index_.at(c.swapped(s - 1).str());
          r.up = m.index_.at(c.with_pair(s - 1).str());
          assert(m.d(r.up) == m.d(i) + 1);
        }
      } else if (!sign_a && a == b) {
        r.type = RootType::RealParity;
        r.cross = i;
        const int f0 = m.index_.at(c.with_signs(s - 1, true).str());
        const int f1 = m.index_.at(c.with_signs(s - 1, false).str());
        r.fiber0 = std::min(f0, f1);
        r.fiber1 = std::max(f0, f1);
        assert(m.d(r.fiber0) == m.d(i) - 1 && m.d(r.fiber1) == m.d(i) - 1);
      } else {
        const int x = m.index_.at(c.swapped(s - 1).str());
        const int dd = m.d(x) - m.d(i);
        assert(dd == 1 || dd == -1);
        r.type = dd == 1 ? RootType::ComplexAscent : RootType::ComplexDescent;
        r.cross = x;
      }
    }
  }
  return m;
}

OrbitModel make_diagonal_model(int n, int max_size) {
  if (n < 1) throw std::invalid_argument("diagonal model needs n >= 1");
  if (n > max_size) {
    std::ostringstream os;
    os << "diagonal model n=" << n << " exceeds cap n <= " << max_size;
    throw SizeError(os.str());
  }

  OrbitModel m;
  m.kind_ = ModelKind::Diagonal;
  {
    std::ostringstream os;
    os << "diagonal(" << n << ")";
    m.name_ = os.str();
  }
  m.rank_ = n - 1;

  std::vector<Permutation> group = symmetric_group(n, std::max(n, max_size));
  std::vector<OrbitId> ids;
  ids.reserve(group.size());
  for (const Permutation& w : group)
    ids.push_back(OrbitId{ModelKind::Diagonal, w.payload(), w.length()});
  sort_and_index(m, ids, m.orbits_, m.index_);

  m.moves_.assign(static_cast<std::size_t>(m.rank_),
                  std::vector<OrbitModel::MoveRow>(
                      static_cast<std::size_t>(m.size())));
  for (int i = 0; i < m.size(); ++i) {
    Permutation w = Permutation::from_payload(m.orbit(i).payload);
    for (int s = 1; s <= m.rank_; ++s) {
      OrbitModel::MoveRow& r =
          m.moves_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(i)];
      const Permutation sw = w.left_mult(s);
      const int x = m.index_.at(sw.payload());
      r.type = m.d(x) > m.d(i) ? RootType::ComplexAscent
                               : RootType::ComplexDescent;
      r.cross = x;
    }
  }
  return m;
}

}  // namespace klv
