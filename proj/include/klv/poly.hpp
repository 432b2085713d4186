#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace klv {

/// Exact integer type for polynomial coefficients.
using Int = boost::multiprecision::cpp_int;

/// Integer polynomial in one variable q, stored densely by ascending degree.
/// The zero polynomial stores no coefficients; otherwise the highest stored
/// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);
  Poly(std::initializer_list<long long> coeffs);

  static Poly zero() { return Poly(); }
  static Poly one();
  static Poly q();
  static Poly constant(Int c);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  /// Coefficient of q^i; 0 beyond the stored range.
  Int coeff(std::size_t i) const;
  Int eval_at_one() const;
  /// Multiply by q^k.  Requires k >= 0.
  Poly shifted(int k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form, e.g. "1 + 2q + q^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

}  // namespace klv
