#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stconv/stgroup.hpp"

namespace stconv {

/// Integer-valued class function with an exact representation.
///
///  SU2            polynomial in x = 2cos(theta)
///  SU2xSU2, USp4  polynomial in x = 2cos(alpha), y = 2cos(beta)
///  U1             Laurent polynomial in u = e^{i theta}
///  NU1            Laurent polynomial in u on the identity component plus a
///                 single value on the sigma component (all of sigma is one class)
///
/// Monomials are keyed by exponent pairs; Laurent terms use (k, 0).
class ClassFunction {
 public:
  using Monomial = std::array<int, 2>;
  using Terms = std::map<Monomial, std::int64_t>;

  explicit ClassFunction(Group group = Group::SU2) : group_(group) {}

  static ClassFunction constant(Group group, std::int64_t c);
  /// x^i y^j, or u^i for the Laurent groups (zero on sigma).
  static ClassFunction monomial(Group group, int i, int j = 0, std::int64_t c = 1);

  Group group() const noexcept { return group_; }
  const Terms& terms() const noexcept { return terms_; }
  std::int64_t sigma_value() const noexcept { return sigma_; }
  void set_sigma_value(std::int64_t v) { sigma_ = v; }
  std::int64_t coefficient(int i, int j = 0) const;

  bool is_zero() const noexcept { return terms_.empty() && sigma_ == 0; }
  /// Total degree, or the largest |k| of a Laurent polynomial; -1 for zero.
  int degree() const noexcept;
  bool is_laurent() const noexcept { return group_ == Group::U1 || group_ == Group::NU1; }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(std::int64_t c);
  ClassFunction operator-() const;
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, std::int64_t c) { return a *= c; }
  friend ClassFunction operator*(std::int64_t c, ClassFunction a) { return a *= c; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  ClassFunction pow(int n) const;

  std::complex<double> eval(const ClassCoords& c) const;
  std::complex<double> eval(const ClassPoint& p) const;
  /// Value at the identity element.
  std::int64_t value_at_identity() const;

  /// Same class function seen on a subgroup: USp4 -> SU2xSU2 keeps the
  /// polynomial; SU2 -> U1/NU1 substitutes x = u + 1/u and takes x = 0 on sigma.
  ClassFunction restrict_to(Group sub) const;

  /// Swapping x and y leaves the polynomial unchanged.
  bool is_symmetric() const;
  /// Laurent coefficients satisfy c_k = c_{-k}.
  bool is_selfdual() const;

  std::string to_string() const;

  /// Flattened terms for repeated evaluation.
  struct Compiled {
    Group group = Group::SU2;
    std::vector<std::array<int, 2>> exps;
    std::vector<double> coeffs;
    int max_i = 0, max_j = 0, min_i = 0;
    double sigma = 0;
    std::complex<double> eval(const ClassCoords& c) const;
  };
  Compiled compile() const;

 private:
  void check_group(const ClassFunction& o) const;
  void prune();

  Group group_;
  Terms terms_;
  std::int64_t sigma_ = 0;
};

/// Monic Chebyshev-type family S_k(2cos t) = sin((k+1)t)/sin t, as a
/// polynomial in x (or in y when `in_y`).
ClassFunction chebyshev_s(Group group, int k, bool in_y = false);
/// C_k(2cos t) = 2cos(kt): C_0 = 2, C_1 = x.
ClassFunction chebyshev_c(Group group, int k, bool in_y = false);

}  // namespace stconv
