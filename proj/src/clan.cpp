#include "klv/clan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "klv/errors.hpp"

namespace klv {

Clan::Clan(std::vector<int> symbols) : sym_(std::move(symbols)) {
  if (sym_.empty()) throw std::invalid_argument("Clan: empty symbol string");
  normalize();
  partner_.assign(sym_.size(), -1);
  std::map<int, int> first_pos;
  for (int i = 0; i < size(); ++i) {
    const int s = sym_[static_cast<std::size_t>(i)];
    if (s <= 0) continue;
    auto it = first_pos.find(s);
    if (it == first_pos.end()) {
      first_pos[s] = i;
    } else if (partner_[static_cast<std::size_t>(it->second)] != -1) {
      throw std::invalid_argument("Clan: label occurs more than twice");
    } else {
      partner_[static_cast<std::size_t>(i)] = it->second;
      partner_[static_cast<std::size_t>(it->second)] = i;
    }
  }
  for (int i = 0; i < size(); ++i)
    if (!is_sign(i) && partner_[static_cast<std::size_t>(i)] == -1)
      throw std::invalid_argument("Clan: unmatched pair label");
  pairs_ = static_cast<int>(first_pos.size());
}

Clan Clan::parse(std::string_view text) {
  std::vector<int> sym;
  sym.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      sym.push_back(kPlus);
    else if (c == '-')
      sym.push_back(kMinus);
    else if (c >= '1' && c <= '9')
      sym.push_back(c - '0');
    else
      throw std::invalid_argument(std::string("Clan: bad symbol '") + c + "'");
  }
  return Clan(std::move(sym));
}

int Clan::plus_count() const {
  return static_cast<int>(std::count(sym_.begin(), sym_.end(), kPlus));
}

int Clan::minus_count() const {
  return static_cast<int>(std::count(sym_.begin(), sym_.end(), kMinus));
}

int Clan::length() const {
  int d = 0;
  for (int a = 0; a < size(); ++a) {
    const int b = partner(a);
    if (b <= a) continue;  // signs and second endpoints
    int crossings = 0;
    for (int a2 = a + 1; a2 < b; ++a2) {
      if (partner(a2) > b) ++crossings;
    }
    d += (b - a) - crossings;
  }
  return d;
}

Clan Clan::swapped(int pos) const {
  std::vector<int> sym = sym_;
  std::swap(sym[static_cast<std::size_t>(pos)],
            sym[static_cast<std::size_t>(pos + 1)]);
  return Clan(std::move(sym));
}

Clan Clan::with_pair(int pos) const {
  const int a = symbol(pos), b = symbol(pos + 1);
  if (!(a <= 0 && b <= 0 && a != b))
    throw std::invalid_argument("Clan::with_pair: needs opposite signs");
  std::vector<int> sym = sym_;
  const int fresh = pairs_ + 1;
  sym[static_cast<std::size_t>(pos)] = fresh;
  sym[static_cast<std::size_t>(pos + 1)] = fresh;
  return Clan(std::move(sym));
}

Clan Clan::with_signs(int pos, bool plus_first) const {
  if (partner(pos) != pos + 1)
    throw std::invalid_argument("Clan::with_signs: needs an adjacent pair");
  std::vector<int> sym = sym_;
  sym[static_cast<std::size_t>(pos)] = plus_first ? kPlus : kMinus;
  sym[static_cast<std::size_t>(pos + 1)] = plus_first ? kMinus : kPlus;
  return Clan(std::move(sym));
}

std::string Clan::str() const {
  std::string out;
  out.reserve(sym_.size());
  for (int s : sym_) {
    if (s == kPlus)
      out += '+';
    else if (s == kMinus)
      out += '-';
    else if (s <= 9)
      out += static_cast<char>('0' + s);
    else
      throw SizeError("Clan::str: pair label beyond 9");
  }
  return out;
}

bool operator<(const Clan& a, const Clan& b) { return a.str() < b.str(); }

void Clan::normalize() {
  std::map<int, int> relabel;
  int next = 1;
  for (int& s : sym_) {
    if (s <= 0) continue;
    auto it = relabel.find(s);
    if (it == relabel.end()) it = relabel.emplace(s, next++).first;
    s = it->second;
  }
}

namespace {

void enumerate_rec(std::vector<int>& sym, int plus_left, int minus_left,
                   int pairs_used, std::vector<Clan>& out) {
  const int n = static_cast<int>(sym.size());
  int pos = 0;
  while (pos < n && sym[static_cast<std::size_t>(pos)] != -2) ++pos;
  if (pos == n) {
    if (plus_left == 0 && minus_left == 0) out.push_back(Clan(sym));
    return;
  }
  if (plus_left > 0) {
    sym[static_cast<std::size_t>(pos)] = Clan::kPlus;
    enumerate_rec(sym, plus_left - 1, minus_left, pairs_used, out);
    sym[static_cast<std::size_t>(pos)] = -2;
  }
  if (minus_left > 0) {
    sym[static_cast<std::size_t>(pos)] = Clan::kMinus;
    enumerate_rec(sym, plus_left, minus_left - 1, pairs_used, out);
    sym[static_cast<std::size_t>(pos)] = -2;
  }
  if (plus_left > 0 && minus_left > 0) {
    const int label = pairs_used + 1;
    for (int j = pos + 1; j < n; ++j) {
      if (sym[static_cast<std::size_t>(j)] != -2) continue;
      sym[static_cast<std::size_t>(pos)] = label;
      sym[static_cast<std::size_t>(j)] = label;
      enumerate_rec(sym, plus_left - 1, minus_left - 1, pairs_used + 1, out);
      sym[static_cast<std::size_t>(pos)] = -2;
      sym[static_cast<std::size_t>(j)] = -2;
    }
  }
}

}  // namespace

std::vector<Clan> enumerate_clans(int p, int q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("enumerate_clans: p, q must be >= 1");
  if (std::min(p, q) > 9)
    throw SizeError("enumerate_clans: more than 9 pairs possible");
  // -2 marks an unfilled slot; a pair consumes one + and one - from the
  // signature budgets, so #(+) = p-k and #(-) = q-k hold at the leaves.
  std::vector<int> sym(static_cast<std::size_t>(p + q), -2);
  std::vector<Clan> out;
  enumerate_rec(sym, p, q, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace klv
