#include "klv/poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace klv {

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::one() { return Poly{1}; }

Poly Poly::q() { return Poly{0, 1}; }

Poly Poly::constant(Int c) {
  Poly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Int Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Int(0);
}

Int Poly::eval_at_one() const {
  Int s = 0;
  for (const Int& v : c_) s += v;
  return s;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted: negative exponent");
  if (is_zero()) return Poly();
  Poly r;
  r.c_.assign(static_cast<std::size_t>(k), Int(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::operator-() const {
  Poly r(*this);
  for (Int& v : r.c_) v = -v;
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int v = c_[i];
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      out << v.str();
    } else {
      if (v != 1) out << v.str();
      out << "q";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace klv
