#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stconv {

using BigInt = boost::multiprecision::cpp_int;

enum class CurveKind { elliptic, genus2 };

/// A curve over Q given by an integral model.
///
/// Elliptic curves use the general Weierstrass form
///   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
/// genus-2 curves the hyperelliptic form y^2 + h(x) y = f(x) with f of degree
/// 5 or 6 and h of degree at most 3 (coefficients ascending).
class CurveModel {
 public:
  static CurveModel elliptic(std::string label, const std::array<std::int64_t, 5>& ainvs);
  static CurveModel genus2(std::string label, std::vector<std::int64_t> f,
                           std::vector<std::int64_t> h);

  const std::string& label() const noexcept { return label_; }
  CurveKind kind() const noexcept { return kind_; }
  int genus() const noexcept { return kind_ == CurveKind::elliptic ? 1 : 2; }

  const std::array<std::int64_t, 5>& ainvs() const noexcept { return ainvs_; }
  /// Always padded to length 7 (f) and 4 (h).
  const std::vector<std::int64_t>& f() const noexcept { return f_; }
  const std::vector<std::int64_t>& h() const noexcept { return h_; }

  /// Completed square F = 4f + h^2 of a genus-2 model (length 7, ascending).
  std::vector<std::int64_t> completed_square() const;

  /// Discriminant of the model: the usual Weierstrass discriminant for elliptic
  /// curves, 2^-12 disc_6(4f + h^2) for genus 2 (binary sextic discriminant).
  const BigInt& discriminant() const noexcept { return disc_; }

 private:
  CurveModel() = default;

  std::string label_;
  CurveKind kind_ = CurveKind::elliptic;
  std::array<std::int64_t, 5> ainvs_{};
  std::vector<std::int64_t> f_;
  std::vector<std::int64_t> h_;
  BigInt disc_;
};

/// Euler factor of an abelian variety of dimension 1 or 2 at a prime of norm `norm`.
///
/// genus 1: 1 - c1 T + norm T^2 (c2 is unused and kept at 0)
/// genus 2: 1 - c1 T + c2 T^2 - norm c1 T^3 + norm^2 T^4
struct EulerFactor {
  std::uint64_t norm = 0;
  int genus = 1;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  /// Integer coefficients of the full polynomial, ascending in T (length 2g+1).
  std::vector<BigInt> coefficients() const;

  friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
};

/// Factors produced by point counting always have prime norm.
using LPolynomial = EulerFactor;

/// cos(alpha), cos(beta) for a genus-2 factor, ascending. They are the roots of
/// z^2 - (a1/2) z + (a2 - 2)/4 with a1 = c1/sqrt(norm), a2 = c2/norm; the
/// discriminant is evaluated exactly as the integer c1^2 - 4 c2 + 8 norm.
/// Values within 1e-9 outside [-1, 1] are clamped, anything further throws
/// WeilViolation.
std::array<double, 2> eigen_cosines(std::int64_t c1, std::int64_t c2, std::uint64_t norm);

/// Throws WeilViolation when the factor cannot come from a unitary class:
/// |c1| > 2 sqrt(norm) in genus 1, or the eigen-angle quadratic having roots
/// outside [-1, 1] (tolerance 1e-9) in genus 2.
void check_weil(const EulerFactor& factor);

std::vector<std::uint32_t> sieve_primes(std::uint64_t bound);

bool is_prime(std::uint64_t n);

/// p does not divide the model discriminant; genus 2 additionally excludes p = 2.
bool good_reduction(const CurveModel& curve, std::uint64_t p);

/// a_p = p + 1 - #E(F_p). Primes 2 and 3 are counted by direct projective
/// enumeration, larger primes through a quadratic-residue table.
std::int64_t ec_trace(const CurveModel& curve, std::uint32_t p);

inline constexpr std::uint64_t default_g2_prime_cap = 3000;

/// L-polynomial of a genus-2 curve from #C(F_p) and #C(F_{p^2}).
LPolynomial g2_lpoly(const CurveModel& curve, std::uint32_t p,
                     std::uint64_t prime_cap = default_g2_prime_cap);

/// Euler factors over a quadratic field above a rational prime p given the
/// trace a_p of an elliptic curve over Q. Split primes give two factors of norm
/// p; an inert prime gives one factor of norm p^2 with trace a_p^2 - 2p.
std::vector<EulerFactor> quadratic_base_change(std::int64_t a_p, std::uint64_t p, bool split);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::uint64_t p);

/// L-polynomial CSV: header `norm,c1` (genus 1) or `norm,c1,c2` (genus 2).
std::vector<EulerFactor> read_lpoly_csv(std::istream& in, std::string_view source = "<stream>");
std::vector<EulerFactor> ingest_lpoly_file(const std::string& path);
void write_lpoly_csv(std::ostream& out, std::span<const EulerFactor> factors, int genus);

/// Curve file: one JSON object per line,
///   {"label": ..., "kind": "ec", "coeffs": {"ainvs": [a1,a2,a3,a4,a6]}}
///   {"label": ..., "kind": "g2", "coeffs": {"f": [...], "h": [...]}}
CurveModel parse_curve_json(std::string_view line);
std::vector<CurveModel> read_curve_file(const std::string& path);

}  // namespace stconv
