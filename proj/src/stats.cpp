#include "stconv/stats.hpp"

#include <algorithm>
#include <cmath>

#include "stconv/chars.hpp"
#include "stconv/error.hpp"

namespace stconv {

namespace {

constexpr double kLower = 2.0;

void require_nonempty(const StatSeries& s) {
  if (s.empty()) throw Error(Errc::empty_series, "statistic requested on an empty series");
}

void require_range(const StatSeries& s, double X) {
  require_nonempty(s);
  if (!(X >= static_cast<double>(s.entries.front().norm)) || !(X > 1.0))
    throw Error(Errc::invalid_argument, "X = " + std::to_string(X) + " is below the first norm " +
                                            std::to_string(s.entries.front().norm));
}

std::complex<double> complex_pairwise(const std::vector<double>& re, const std::vector<double>& im) {
  return {pairwise_sum(re), pairwise_sum(im)};
}

// -2 x^{-1/2} (log x + 2)
double bias_antiderivative(double x) { return -2.0 * (std::log(x) + 2.0) / std::sqrt(x); }

}  // namespace

StatSeries build_series(std::span<const std::pair<std::uint64_t, std::complex<double>>> values) {
  StatSeries s;
  std::complex<double> sum = 0;
  std::uint64_t count = 0;
  for (const auto& [norm, v] : values) {
    if (!s.entries.empty() && norm < s.entries.back().norm)
      throw Error(Errc::order_error, "norm " + std::to_string(norm) + " after " +
                                         std::to_string(s.entries.back().norm));
    sum += v;
    ++count;
    if (!s.entries.empty() && s.entries.back().norm == norm) {
      s.entries.back().sum = sum;
      s.entries.back().count = count;
    } else {
      s.entries.push_back({norm, sum, count});
    }
  }
  return s;
}

StatSeries build_series(std::span<const ClassSample> classes, const Evaluable& phi, Exec exec) {
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (classes[i].norm < classes[i - 1].norm)
      throw Error(Errc::order_error, "norm " + std::to_string(classes[i].norm) + " after " +
                                         std::to_string(classes[i - 1].norm));
  std::vector<std::pair<std::uint64_t, std::complex<double>>> values(classes.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
  for (std::size_t i = 0; i < classes.size(); ++i) {
    try {
      values[i] = {classes[i].norm, phi(classes[i].point)};
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return build_series(values);
}

std::vector<ClassSample> to_classes(std::span<const EulerFactor> factors, Group group) {
  std::vector<ClassSample> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back({f.norm, normalize(f, group)});
  return out;
}

std::ptrdiff_t entry_at(const StatSeries& s, double x) {
  auto it = std::upper_bound(s.entries.begin(), s.entries.end(), x,
                             [](double v, const StatSeries::Entry& e) { return v < static_cast<double>(e.norm); });
  return std::distance(s.entries.begin(), it) - 1;
}

std::complex<double> delta(const StatSeries& s, double x) {
  require_nonempty(s);
  const auto k = entry_at(s, x);
  if (k < 0) return 0.0;
  const auto& e = s.entries[k];
  return e.sum / static_cast<double>(e.count);
}

double i_norm(const StatSeries& s, double X) {
  require_range(s, X);
  std::vector<double> pieces;
  pieces.reserve(s.entries.size());
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    const double a = std::max(static_cast<double>(s.entries[k].norm), kLower);
    if (a > X) break;
    const double b = k + 1 < s.entries.size() ? std::min(static_cast<double>(s.entries[k + 1].norm), X) : X;
    if (b <= a) continue;
    const double d2 = std::norm(s.entries[k].sum / static_cast<double>(s.entries[k].count));
    pieces.push_back(d2 * (b - a));
  }
  return pairwise_sum(pieces) / std::log(X);
}

std::complex<double> psi_value(const StatSeries& s, double x) {
  require_range(s, x);
  const auto k = entry_at(s, x);
  return std::log(x) / std::sqrt(x) * s.entries[k].sum;
}

std::complex<double> bias_mean(const StatSeries& s, double X) {
  require_range(s, X);
  std::vector<double> re, im;
  re.reserve(s.entries.size());
  im.reserve(s.entries.size());
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    const double a = std::max(static_cast<double>(s.entries[k].norm), kLower);
    if (a > X) break;
    const double b = k + 1 < s.entries.size() ? std::min(static_cast<double>(s.entries[k + 1].norm), X) : X;
    if (b <= a) continue;
    const double w = bias_antiderivative(b) - bias_antiderivative(a);
    re.push_back(w * s.entries[k].sum.real());
    im.push_back(w * s.entries[k].sum.imag());
  }
  return complex_pairwise(re, im) / std::log(X);
}

Evaluable tilde_char(Group group, const Evaluable& phi) {
  const std::complex<double> t = trivial_multiplicity(group, phi);
  if (t == 0.0) return phi;
  return [phi, t](const ClassPoint& p) { return phi(p) - t; };
}

std::vector<double> log_checkpoints(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi >= lo) || n < 1) throw Error(Errc::invalid_argument, "bad checkpoint range");
  if (n == 1) return {hi};
  std::vector<double> out(n);
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace stconv
