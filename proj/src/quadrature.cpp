#include "stconv/quadrature.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "stconv/error.hpp"

namespace stconv {

namespace {

constexpr double kPi = std::numbers::pi;

// Runs body(i) for i in [0, n), in parallel when asked. The first exception
// thrown by any iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw Error(Errc::invalid_argument, "quadrature needs at least one node");
  std::vector<std::pair<double, double>> out(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  // P_n(z) and P_n'(z) by the three-term recurrence
  auto legendre = [n](double z) {
    double p0 = 1, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (z * p1 - p0) / (z * z - 1)};
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = legendre(z).second;
    const double w = 2.0 / ((1 - z * z) * dp * dp);
    out[i] = {mid - half * z, half * w};
    out[n - 1 - i] = {mid + half * z, half * w};
  }
  return out;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 64) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

HaarQuadrature::HaarQuadrature(Group group, int n) : group_(group) {
  auto add = [&](ClassPoint pt, double w) { nodes_.push_back({pt, coords(pt), w}); };
  switch (group) {
    case Group::U1:
    case Group::NU1: {
      const double mass = group == Group::U1 ? 1.0 : 0.5;
      for (auto [t, w] : gauss_legendre(n, 0.0, 2 * kPi)) {
        ClassPoint pt{group, {t, 0.0}, Component::identity};
        add(pt, mass * w / (2 * kPi));
      }
      if (group == Group::NU1) add(ClassPoint{group, {0.0, 0.0}, Component::sigma}, 0.5);
      break;
    }
    case Group::SU2:
      for (auto [t, w] : gauss_legendre(n, 0.0, kPi)) {
        ClassPoint pt{group, {t, 0.0}, Component::identity};
        add(pt, w * haar_density(pt));
      }
      break;
    case Group::SU2xSU2:
    case Group::USp4: {
      const auto gl = gauss_legendre(n, 0.0, kPi);
      nodes_.reserve(gl.size() * gl.size());
      for (auto [a, wa] : gl) {
        for (auto [b, wb] : gl) {
          ClassPoint pt{group, {a, b}, Component::identity};
          add(pt, wa * wb * haar_density(pt));
        }
      }
      break;
    }
  }
}

const HaarQuadrature& HaarQuadrature::get(Group group, int n) {
  static std::mutex mutex;
  static std::map<std::pair<Group, int>, std::unique_ptr<HaarQuadrature>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{group, n}];
  if (!slot) slot = std::make_unique<HaarQuadrature>(group, n);
  return *slot;
}

std::vector<std::complex<double>> HaarQuadrature::sample(const Evaluable& f, Exec exec) const {
  std::vector<std::complex<double>> out(nodes_.size());
  for_each_index(nodes_.size(), exec, [&](std::size_t i) { out[i] = f(nodes_[i].point); });
  return out;
}

std::vector<std::complex<double>> HaarQuadrature::sample(const ClassFunction& f, Exec exec) const {
  if (f.group() != group_)
    throw Error(Errc::group_mismatch, "class function on " + to_string(f.group()) + " sampled on " +
                                          to_string(group_));
  const auto cf = f.compile();
  std::vector<std::complex<double>> out(nodes_.size());
  for_each_index(nodes_.size(), exec, [&](std::size_t i) { out[i] = cf.eval(nodes_[i].coords); });
  return out;
}

std::complex<double> HaarQuadrature::integrate(std::span<const std::complex<double>> values) const {
  if (values.size() != nodes_.size()) throw Error(Errc::invalid_argument, "sample size does not match the node set");
  std::vector<double> re(values.size()), im(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    re[i] = nodes_[i].weight * values[i].real();
    im[i] = nodes_[i].weight * values[i].imag();
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

std::complex<double> HaarQuadrature::inner(std::span<const std::complex<double>> a,
                                           std::span<const std::complex<double>> b) const {
  if (a.size() != nodes_.size() || b.size() != nodes_.size())
    throw Error(Errc::invalid_argument, "sample size does not match the node set");
  std::vector<double> re(a.size()), im(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::complex<double> v = a[i] * std::conj(b[i]);
    re[i] = nodes_[i].weight * v.real();
    im[i] = nodes_[i].weight * v.imag();
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

}  // namespace stconv
