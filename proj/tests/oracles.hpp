#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's counting, character or integration code.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

// #E(F_p) by trying every (x, y), plus the point at infinity.
inline std::int64_t ec_count(const std::array<std::int64_t, 5>& a, std::int64_t p) {
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = mod(mod(mod(x * x, p) * x, p) + mod(a[1], p) * mod(x * x, p) + mod(a[3], p) * x + a[4], p);
    for (std::int64_t y = 0; y < p; ++y) {
      const std::int64_t lhs = mod(y * y + mod(a[0], p) * x % p * y + mod(a[2], p) * y, p);
      if (lhs == rhs) ++n;
    }
  }
  return n;
}

inline std::int64_t ec_ap(const std::array<std::int64_t, 5>& a, std::int64_t p) { return p + 1 - ec_count(a, p); }

// F_{p^2} as pairs u + v w with w^2 = n, n a non-square found by Euler's criterion.
struct Fp2 {
  std::int64_t p, n;

  using E = std::pair<std::int64_t, std::int64_t>;

  std::int64_t powmod(std::int64_t b, std::int64_t e) const {
    std::int64_t r = 1;
    b = mod(b, p);
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  E add(E a, E b) const { return {mod(a.first + b.first, p), mod(a.second + b.second, p)}; }
  E mul(E a, E b) const {
    return {mod(a.first * b.first + mod(a.second * b.second, p) * n, p), mod(a.first * b.second + a.second * b.first, p)};
  }
  E pow(E b, std::int64_t e) const {
    E r{1, 0};
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  // 1 + quadratic character of a in F_{p^k} (k = 1 when a is in F_p and q = p)
  int roots_of_square(E a, bool big) const {
    if (a.first == 0 && a.second == 0) return 1;
    const std::int64_t q = big ? p * p : p;
    const E r = pow(a, (q - 1) / 2);
    return (r.first == 1 && r.second == 0) ? 2 : 0;
  }
};

inline Fp2 make_fp2(std::int64_t p) {
  Fp2 F{p, 0};
  for (std::int64_t c = 2; c < p; ++c)
    if (F.powmod(c, (p - 1) / 2) == p - 1) {
      F.n = c;
      break;
    }
  return F;
}

// (#C(F_p), #C(F_{p^2})) for y^2 + h(x) y = f(x), odd p, by counting y for
// every x through the discriminant h^2 + 4f and every point at infinity.
inline std::pair<std::int64_t, std::int64_t> g2_counts(const std::vector<std::int64_t>& f,
                                                       const std::vector<std::int64_t>& h, std::int64_t p) {
  const Fp2 F = make_fp2(p);
  auto eval = [&](const std::vector<std::int64_t>& c, Fp2::E x) {
    Fp2::E acc{0, 0};
    for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), {mod(c[i], p), 0});
    return acc;
  };
  auto count = [&](bool big) {
    std::int64_t n = 0;
    const std::int64_t vmax = big ? p : 1;
    for (std::int64_t u = 0; u < p; ++u)
      for (std::int64_t v = 0; v < vmax; ++v) {
        const Fp2::E x{u, v};
        const Fp2::E hx = eval(h, x), fx = eval(f, x);
        const Fp2::E d = F.add(F.mul(hx, hx), F.mul({4, 0}, fx));
        n += F.roots_of_square(d, big);
      }
    // Y^2 + h3 Y = f6 at infinity (h of degree <= 3, f of degree <= 6)
    const std::int64_t h3 = h.size() > 3 ? h[3] : 0, f6 = f.size() > 6 ? f[6] : 0;
    const Fp2::E d{mod(h3 * h3 + 4 * f6, p), 0};
    n += F.roots_of_square(d, big);
    return n;
  };
  return {count(false), count(true)};
}

// (c1, c2) of 1 - c1 T + c2 T^2 - p c1 T^3 + p^2 T^4 from point counts.
inline std::pair<std::int64_t, std::int64_t> g2_coeffs(const std::vector<std::int64_t>& f,
                                                       const std::vector<std::int64_t>& h, std::int64_t p) {
  const auto [n1, n2] = g2_counts(f, h, p);
  const std::int64_t s1 = p + 1 - n1;
  const std::int64_t s2 = p * p + 1 - n2;
  return {s1, (s1 * s1 - s2) / 2};
}

// Midpoint rule on [a, b] with n cells.
inline double midpoint(const std::function<double(double)>& g, double a, double b, long n) {
  const double h = (b - a) / n;
  long double acc = 0;
  for (long i = 0; i < n; ++i) acc += g(a + (i + 0.5) * h);
  return static_cast<double>(acc * h);
}

// Weyl character formula for USp4 in trigonometric form.
inline double usp4_char_trig(int m, int n, double a, double b) {
  const double num = std::sin((m + 2) * a) * std::sin((n + 1) * b) - std::sin((m + 2) * b) * std::sin((n + 1) * a);
  const double den = std::sin(2 * a) * std::sin(b) - std::sin(2 * b) * std::sin(a);
  return num / den;
}

inline double su2_char_trig(int n, double t) { return std::sin((n + 1) * t) / std::sin(t); }

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Brute 2D midpoint integration of a class function against the USp4 Weyl density.
inline double usp4_integral(const std::function<double(double, double)>& g, int cells) {
  const double pi = std::numbers::pi;
  const double h = pi / cells;
  long double acc = 0, mass = 0;
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      const double a = (i + 0.5) * h, b = (j + 0.5) * h;
      const double d = std::pow(std::cos(a) - std::cos(b), 2) * std::pow(std::sin(a) * std::sin(b), 2);
      acc += g(a, b) * d;
      mass += d;
    }
  return static_cast<double>(acc / mass);
}

// Synthetic statistic series and their dense Riemann sums.

using Values = std::vector<std::pair<std::uint64_t, std::complex<double>>>;

// random increasing norms (with some repeats) and values in [-2, 2]
inline Values synthetic(unsigned seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gap(0, 6);
  std::uniform_real_distribution<double> val(-2, 2);
  Values v;
  std::uint64_t norm = 2 + gap(rng);
  for (int i = 0; i < n; ++i) {
    v.push_back({norm, {val(rng), 0.0}});
    norm += gap(rng);
  }
  return v;
}

// running sum and count at x by a fresh scan
inline std::pair<double, double> scan(const Values& v, double x) {
  double s = 0, c = 0;
  for (const auto& [n, a] : v) {
    if (static_cast<double>(n) > x) break;
    s += a.real();
    c += 1;
  }
  return {s, c};
}

// midpoint sums on a grid of step 1/64 starting at 2; norms are integers so
// every cell sits inside one constant piece
inline double i_norm_riemann(const Values& v, double X) {
  const long cells = std::lround((X - 2) * 64);
  std::size_t k = 0;
  double s = 0, c = 0;
  long double acc = 0;
  for (long i = 0; i < cells; ++i) {
    const double x = 2 + (i + 0.5) / 64;
    while (k < v.size() && static_cast<double>(v[k].first) <= x) s += v[k++].second.real(), c += 1;
    const double d = c > 0 ? s / c : 0.0;
    acc += d * d;
  }
  return static_cast<double>(acc / 64) / std::log(X);
}

inline double bias_riemann(const Values& v, double X) {
  const int sub = 2048;
  const long cells = std::lround((X - 2) * sub);
  std::size_t k = 0;
  double s = 0;
  long double acc = 0;
  for (long i = 0; i < cells; ++i) {
    const double x = 2 + (i + 0.5) / sub;
    while (k < v.size() && static_cast<double>(v[k].first) <= x) s += v[k++].second.real();
    acc += s * std::log(x) / std::sqrt(x) / x;
  }
  return static_cast<double>(acc / sub) / std::log(X);
}

}  // namespace oracle
