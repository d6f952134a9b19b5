#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stconv/arith.hpp"
#include "stconv/quadrature.hpp"
#include "stconv/stgroup.hpp"

namespace stconv {

struct ClassSample {
  std::uint64_t norm = 0;
  ClassPoint point;
};

/// Cumulative character sums indexed by norm. Primes of equal norm are merged
/// into one entry; `count` is the number of primes with norm <= `norm`.
struct StatSeries {
  struct Entry {
    std::uint64_t norm = 0;
    std::complex<double> sum;
    std::uint64_t count = 0;
  };
  std::vector<Entry> entries;
  std::string character;
  std::string curve;

  bool empty() const noexcept { return entries.empty(); }
};

/// Ordered fold of (norm, value) pairs. Throws OrderError on decreasing norms.
StatSeries build_series(std::span<const std::pair<std::uint64_t, std::complex<double>>> values);
/// phi evaluated on every class (in parallel), then folded in norm order.
StatSeries build_series(std::span<const ClassSample> classes, const Evaluable& phi,
                        Exec exec = Exec::parallel);

std::vector<ClassSample> to_classes(std::span<const EulerFactor> factors, Group group);

/// Index of the last entry with norm <= x, or -1.
std::ptrdiff_t entry_at(const StatSeries& s, double x);

/// delta(phi, x) = S(x) / pi(x); zero before the first norm. Throws EmptySeries.
std::complex<double> delta(const StatSeries& s, double x);
/// (1/log X) * integral_2^X |delta(phi, x)|^2 dx, summed exactly over the
/// constant pieces. Needs X >= the first norm.
double i_norm(const StatSeries& s, double X);
/// psi(phi, x) = log(x)/sqrt(x) * S(x).
std::complex<double> psi_value(const StatSeries& s, double x);
/// (1/log X) * integral_2^X psi(phi, x) dx/x, using
/// integral log(x) x^{-3/2} dx = -2 x^{-1/2} (log x + 2) on each piece.
std::complex<double> bias_mean(const StatSeries& s, double X);

/// phi minus its trivial multiplicity on `group`.
Evaluable tilde_char(Group group, const Evaluable& phi);

/// n points from lo to hi, evenly spaced in log x (both ends included).
std::vector<double> log_checkpoints(double lo, double hi, int n);

}  // namespace stconv
