#pragma once

// Point-counting kernels. Each kernel exists twice: a plain reference loop and
// an optimized finite-difference version. For elliptic curves the optimized
// path switches to point orders (ec_trace_bsgs) once p >= kBsgsMinPrime. The
// batch drivers run the reference serially and the optimized kernels under
// OpenMP; both emit factors sorted by prime whatever order the work completes in.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stconv/arith.hpp"

namespace stconv {

enum class Exec { serial, parallel };

/// Quadratic character of F_p as a lookup table (p odd).
class QrTable {
 public:
  QrTable() = default;
  explicit QrTable(std::uint32_t p) { rebuild(p); }

  void rebuild(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }
  /// Smallest quadratic non-residue mod p.
  std::uint32_t nonresidue() const noexcept { return nonresidue_; }
  const std::int8_t* data() const noexcept { return chi_.data(); }
  int operator()(std::uint32_t v) const noexcept { return chi_[v]; }

 private:
  std::uint32_t p_ = 0;
  std::uint32_t nonresidue_ = 0;
  std::vector<std::int8_t> chi_;
};

/// Coefficients of g(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 reduced mod p, ascending.
std::array<std::uint32_t, 4> ec_cubic_mod(const CurveModel& curve, std::uint32_t p);

/// Both return sum over x in F_p of chi(g(x)), i.e. -a_p, for odd p.
std::int64_t ec_char_sum_reference(const std::array<std::uint32_t, 4>& g, const QrTable& qr);
std::int64_t ec_char_sum_fast(const std::array<std::uint32_t, 4>& g, const QrTable& qr);

inline constexpr std::uint32_t kBsgsMinPrime = 1000;

/// a_p from the orders of points on the curve and its quadratic twist
/// (baby-step giant-step over the Hasse interval), about p^{1/4} group
/// operations. Returns nullopt below kBsgsMinPrime or when max_points points
/// leave the trace ambiguous.
std::optional<std::int64_t> ec_trace_bsgs(const CurveModel& curve, std::uint32_t p, int max_points = 64);

/// a_p at p = 2 or 3 by enumerating the projective Weierstrass model.
std::int64_t ec_trace_small(const CurveModel& curve, std::uint32_t p);

/// Frobenius power sums (t1, t2) of a genus-2 curve at an odd prime.
std::array<std::int64_t, 2> g2_power_sums_reference(const CurveModel& curve, const QrTable& qr);
std::array<std::int64_t, 2> g2_power_sums_fast(const CurveModel& curve, const QrTable& qr);

/// Genus-2 factor from power sums.
EulerFactor g2_factor(std::uint32_t p, std::int64_t t1, std::int64_t t2);

/// Euler factors at all good primes <= bound, one vector per curve. Curves in
/// a batch share the residue table built for each prime.
std::vector<std::vector<EulerFactor>> ec_lpolys(std::span<const CurveModel> curves,
                                                std::uint64_t bound, Exec exec = Exec::parallel);

/// Throws BudgetExceeded up front when bound exceeds prime_cap.
std::vector<EulerFactor> g2_lpolys(const CurveModel& curve, std::uint64_t bound,
                                   std::uint64_t prime_cap = default_g2_prime_cap,
                                   Exec exec = Exec::parallel);

/// Dispatches on curve kind.
std::vector<EulerFactor> lpolys(const CurveModel& curve, std::uint64_t bound,
                                std::uint64_t g2_cap = default_g2_prime_cap,
                                Exec exec = Exec::parallel);

/// Number of worker threads the parallel drivers will use.
int worker_threads();

}  // namespace stconv
