#include "klv/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "klv/errors.hpp"

namespace klv {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int n = static_cast<int>(w_.size());
  if (n == 0) throw std::invalid_argument("Permutation: empty word");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : w_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("Permutation: not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_payload(const std::string& digits) {
  std::vector<int> w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("Permutation::from_payload: bad digit");
    w.push_back(c - '0');
  }
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::left_mult(int s) const {
  if (s < 1 || s >= n())
    throw std::invalid_argument("left_mult: simple index out of range");
  std::vector<int> w = w_;
  for (int& v : w) {
    if (v == s)
      v = s + 1;
    else if (v == s + 1)
      v = s;
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i)
    w[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

std::string Permutation::payload() const {
  if (n() > 9) throw SizeError("Permutation::payload: n > 9 has no digit form");
  std::string s;
  for (int v : w_) s += static_cast<char>('0' + v);
  return s;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  const int n = x.n();
  if (n != w.n())
    throw std::invalid_argument("bruhat_leq: ranks differ");
  // rank(i,j) = #{k <= i : value(k) <= j}; x <= w iff rank_x >= rank_w
  // pointwise.
  for (int i = 1; i <= n; ++i) {
    std::vector<int> rx(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> rw(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= i; ++k) {
      ++rx[static_cast<std::size_t>(x(k))];
      ++rw[static_cast<std::size_t>(w(k))];
    }
    int cx = 0, cw = 0;
    for (int j = 1; j <= n; ++j) {
      cx += rx[static_cast<std::size_t>(j)];
      cw += rw[static_cast<std::size_t>(j)];
      if (cx < cw) return false;
    }
  }
  return true;
}

std::vector<Permutation> symmetric_group(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n must be >= 1");
  if (n > max_n)
    throw SizeError("symmetric_group: n = " + std::to_string(n) +
                    " exceeds cap " + std::to_string(max_n));
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace klv
