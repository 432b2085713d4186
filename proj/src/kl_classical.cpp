#include "klv/kl_classical.hpp"

#include <stdexcept>

#include "klv/errors.hpp"

namespace klv {

KLTable::KLTable(int n, int max_n) : n_(n), group_(symmetric_group(n, max_n)) {
  const int N = static_cast<int>(group_.size());
  for (int i = 0; i < N; ++i) index_[group_[static_cast<std::size_t>(i)].one_line()] = i;
  len_.resize(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    len_[static_cast<std::size_t>(i)] = group_[static_cast<std::size_t>(i)].length();
  leq_.assign(static_cast<std::size_t>(N) * static_cast<std::size_t>(N), false);
  for (int x = 0; x < N; ++x)
    for (int w = 0; w < N; ++w)
      leq_[idx(x, w)] = bruhat_leq(group_[static_cast<std::size_t>(x)],
                                   group_[static_cast<std::size_t>(w)]);
  left_mult_.assign(static_cast<std::size_t>(n_ - 1),
                    std::vector<int>(static_cast<std::size_t>(N)));
  for (int s = 1; s < n_; ++s)
    for (int w = 0; w < N; ++w)
      left_mult_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(w)] =
          index_.at(group_[static_cast<std::size_t>(w)].left_mult(s).one_line());
}

int KLTable::index_of(const Permutation& w) const {
  auto it = index_.find(w.one_line());
  if (it == index_.end())
    throw std::invalid_argument("KLTable: permutation has wrong rank");
  return it->second;
}

const Poly& KLTable::poly(const Permutation& x, const Permutation& w) {
  return poly(index_of(x), index_of(w));
}

const Poly& KLTable::poly(int x, int w) { return compute(x, w); }

Int KLTable::mu(const Permutation& z, const Permutation& w) {
  return mu(index_of(z), index_of(w));
}

Int KLTable::mu(int z, int w) {
  if (!leq(z, w)) return 0;
  const int gap = length(w) - length(z);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return compute(z, w).coeff(static_cast<std::size_t>((gap - 1) / 2));
}

const Poly& KLTable::compute(int x, int w) {
  if (!leq(x, w)) return zero_;
  auto key = std::make_pair(x, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Poly result;
  if (x == w) {
    result = Poly::one();
  } else {
    // Canonical choice: smallest left descent of w.
    int s = 0;
    for (int t = 1; t < n_; ++t) {
      const int tw = left_mult_[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(w)];
      if (length(tw) < length(w)) {
        s = t;
        break;
      }
    }
    result = poly_via_descent(x, w, s);
  }
  const int gap = length(w) - length(x);
  if (x != w && 2 * result.degree() > gap - 1)
    throw EngineError("KLTable: degree bound violated at (" +
                      group_[static_cast<std::size_t>(x)].payload() + ", " +
                      group_[static_cast<std::size_t>(w)].payload() + ")");
  return memo_.emplace(key, std::move(result)).first->second;
}

Poly KLTable::poly_via_descent(int x, int w, int s) {
  const auto& row = left_mult_[static_cast<std::size_t>(s - 1)];
  const int sw = row[static_cast<std::size_t>(w)];
  if (length(sw) >= length(w))
    throw std::invalid_argument("poly_via_descent: s is not a descent of w");
  const int sx = row[static_cast<std::size_t>(x)];
  const int c = length(sx) < length(x) ? 1 : 0;
  Poly result = compute(sx, sw).shifted(1 - c) + compute(x, sw).shifted(c);
  const int N = static_cast<int>(group_.size());
  for (int z = 0; z < N; ++z) {
    if (!leq(x, z) || !leq(z, sw) || z == sw) continue;
    if (length(row[static_cast<std::size_t>(z)]) >= length(z)) continue;
    const Int m = mu(z, sw);
    if (m == 0) continue;
    const int e = length(w) - length(z);
    if (e % 2 != 0)
      throw EngineError("KLTable: odd correction exponent");
    result -= Poly::constant(m) * compute(x, z).shifted(e / 2);
  }
  return result;
}

}  // namespace klv
