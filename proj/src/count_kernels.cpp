#include "stconv/count_kernels.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#if defined(__AVX2__)
#include <immintrin.h>
#endif

#include "stconv/error.hpp"

namespace stconv {

namespace {

constexpr std::int64_t kBad = std::numeric_limits<std::int64_t>::min();

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint32_t s = a + b;
  return std::min(s, s - p);
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t horner(const std::uint32_t* c, int deg, std::uint64_t x, std::uint32_t p) {
  std::uint64_t acc = c[deg];
  for (int i = deg - 1; i >= 0; --i) acc = (acc * x + c[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

// Elements u + v t of F_p[t]/(t^2 - d).
struct Fp2 {
  std::uint64_t u, v;
};

inline Fp2 fp2_mul(Fp2 a, Fp2 b, std::uint64_t d, std::uint64_t p) {
  return {(a.u * b.u % p + d * (a.v * b.v % p)) % p, (a.u * b.v % p + a.v * b.u % p) % p};
}

Fp2 fp2_eval(const std::array<std::uint32_t, 7>& F, Fp2 z, std::uint64_t d, std::uint64_t p) {
  Fp2 acc{F[6], 0};
  for (int i = 5; i >= 0; --i) {
    acc = fp2_mul(acc, z, d, p);
    acc.u = (acc.u + F[i]) % p;
  }
  return acc;
}

std::array<std::uint32_t, 7> sextic_mod(const CurveModel& curve, std::uint32_t p) {
  const auto big = curve.completed_square();
  std::array<std::uint32_t, 7> F{};
  for (int i = 0; i < 7; ++i) F[i] = reduce(big[i], p);
  return F;
}

struct G2Base {
  std::int64_t s1 = 0;       // sum of chi(F(a)) over F_p
  std::int64_t nonzero = 0;  // #{a in F_p : F(a) != 0}
  std::int64_t inf1 = 0;
  std::int64_t inf2 = 0;
};

G2Base g2_base(const std::array<std::uint32_t, 7>& F, const QrTable& qr) {
  const std::uint32_t p = qr.prime();
  G2Base b;
  for (std::uint32_t a = 0; a < p; ++a) {
    const std::uint32_t v = horner(F.data(), 6, a, p);
    b.s1 += qr(v);
    b.nonzero += (v != 0);
  }
  // Points at infinity on the smooth model: two when the leading coefficient
  // of the sextic is a nonzero square, none when it is a non-square and one
  // when the degree drops to 5. Over F_{p^2} every element of F_p is a square.
  b.inf1 = 1 + qr(F[6]);
  b.inf2 = F[6] != 0 ? 2 : 1;
  return b;
}

std::array<std::int64_t, 2> g2_finish(const G2Base& b, std::int64_t s2, std::uint32_t p) {
  const std::int64_t q = p;
  const std::int64_t n1 = q + b.s1 + b.inf1;
  const std::int64_t n2 = q * q + s2 + b.inf2;
  return {q + 1 - n1, q * q + 1 - n2};
}

// Arithmetic on y^2 = x^3 + A x + B over F_p in affine coordinates, p < 2^32.
struct EcPoint {
  std::uint64_t x = 0, y = 0;
  bool inf = true;
};

inline std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powm(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulm(r, b, p);
    b = mulm(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

struct ShortCurve {
  std::uint64_t p, A;

  EcPoint add(const EcPoint& P, const EcPoint& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    std::uint64_t lam;
    if (P.x == Q.x) {
      if ((P.y + Q.y) % p == 0) return {};
      lam = mulm((3 * mulm(P.x, P.x, p) + A) % p, invm(2 * P.y % p, p), p);
    } else {
      lam = mulm((Q.y + p - P.y) % p, invm((Q.x + p - P.x) % p, p), p);
    }
    const std::uint64_t x = (mulm(lam, lam, p) + 2 * p - P.x - Q.x) % p;
    const std::uint64_t y = (mulm(lam, (P.x + p - x) % p, p) + p - P.y) % p;
    return {x, y, false};
  }

  EcPoint mul(EcPoint P, std::uint64_t k) const {
    EcPoint R;
    while (k) {
      if (k & 1) R = add(R, P);
      P = add(P, P);
      k >>= 1;
    }
    return R;
  }
};

// Every m in [lo, hi] with m P = O, by baby steps j P (|j| <= b) and giant
// steps of 2b + 1.
std::vector<std::uint64_t> multiples_killing(const ShortCurve& E, const EcPoint& P, std::uint64_t lo,
                                             std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  std::uint64_t b = 1;
  while (b * b < hi - lo + 1) ++b;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> baby;  // (x, j)
  EcPoint jP = P;
  for (std::uint64_t j = 1; j <= b; ++j) {
    if (jP.inf) {
      // order j: every multiple in range
      for (std::uint64_t m = (lo + j - 1) / j * j; m <= hi; m += j) out.push_back(m);
      return out;
    }
    baby.push_back({jP.x, j});
    jP = E.add(jP, P);
  }
  std::sort(baby.begin(), baby.end());
  const std::uint64_t step = 2 * b + 1;
  const EcPoint J = E.mul(P, step);
  EcPoint G = E.mul(P, lo + b);
  for (std::uint64_t m0 = lo + b; m0 - b <= hi; m0 += step) {
    if (G.inf) {
      out.push_back(m0);
    } else {
      auto it = std::lower_bound(baby.begin(), baby.end(), std::pair{G.x, std::uint64_t{0}});
      for (; it != baby.end() && it->first == G.x; ++it) {
        const EcPoint B = E.mul(P, it->second);
        // G = j P or G = -j P; both when j P has y = 0
        if (B.y == G.y) out.push_back(m0 - it->second);
        if ((B.y + G.y) % E.p == 0) out.push_back(m0 + it->second);
      }
    }
    G = E.add(G, J);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](std::uint64_t m) { return m < lo || m > hi; });
  return out;
}

}  // namespace

void QrTable::rebuild(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::invalid_argument, "residue table needs an odd prime");
  p_ = p;
  chi_.assign(p, -1);
  chi_[0] = 0;
  std::uint32_t sq = 0;
  for (std::uint32_t i = 1; i <= (p - 1) / 2; ++i) {
    sq = addmod(sq, 2 * i - 1, p);
    chi_[sq] = 1;
  }
  nonresidue_ = 2;
  while (chi_[nonresidue_] != -1) ++nonresidue_;
}

std::array<std::uint32_t, 4> ec_cubic_mod(const CurveModel& curve, std::uint32_t p) {
  const auto& a = curve.ainvs();
  const std::int64_t b2 = a[0] * a[0] + 4 * a[1];
  const std::int64_t b4 = 2 * a[3] + a[0] * a[2];
  const std::int64_t b6 = a[2] * a[2] + 4 * a[4];
  return {reduce(b6, p), reduce(2 * b4, p), reduce(b2, p), reduce(4, p)};
}

std::int64_t ec_char_sum_reference(const std::array<std::uint32_t, 4>& g, const QrTable& qr) {
  const std::uint32_t p = qr.prime();
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < p; ++x) sum += qr(horner(g.data(), 3, x, p));
  return sum;
}

std::optional<std::int64_t> ec_trace_bsgs(const CurveModel& curve, std::uint32_t p, int max_points) {
  if (p < kBsgsMinPrime) return std::nullopt;
  // y^2 = x^3 - 27 c4 x - 54 c6 is isomorphic to the curve over F_p for p > 3
  const auto g = ec_cubic_mod(curve, p);
  const std::uint64_t P = p;
  const std::uint64_t b2 = g[2], b4 = mulm(g[1], invm(2, P), P), b6 = g[0];
  const std::uint64_t c4 = (mulm(b2, b2, P) + P - mulm(24, b4, P)) % P;
  const std::uint64_t c6 =
      (P - mulm(mulm(b2, b2, P), b2, P) + mulm(36, mulm(b2, b4, P), P) + P - mulm(216, b6, P)) % P;
  const std::uint64_t A = (P - mulm(27, c4, P)) % P, B = (P - mulm(54, c6, P)) % P;

  std::uint64_t w = 0;
  while ((w + 1) * (w + 1) <= 4 * P) ++w;
  const std::uint64_t lo = P + 1 - w, hi = P + 1 + w;

  // Candidate traces still consistent with every point seen. A point on the
  // twist by d = f(x0) is (d x0, d^2) on y^2 = x^3 + A d^2 x + B d^3, whose
  // group has p + 1 - s a points, s the quadratic character of d.
  std::vector<std::int64_t> cand;
  bool first = true;
  int used = 0;
  for (std::uint64_t x0 = 0; x0 < P && used < max_points; ++x0) {
    const std::uint64_t d = (mulm(mulm(x0, x0, P), x0, P) + mulm(A, x0, P) + B) % P;
    if (d == 0) continue;
    ++used;
    const int s = powm(d, (P - 1) / 2, P) == 1 ? 1 : -1;
    const std::uint64_t d2 = mulm(d, d, P);
    const ShortCurve E{P, mulm(A, d2, P)};
    const EcPoint pt{mulm(d, x0, P), d2, false};
    std::vector<std::int64_t> here;
    for (std::uint64_t m : multiples_killing(E, pt, lo, hi))
      here.push_back(s * (static_cast<std::int64_t>(P) + 1 - static_cast<std::int64_t>(m)));
    std::sort(here.begin(), here.end());
    if (first) {
      cand = std::move(here);
      first = false;
    } else {
      std::vector<std::int64_t> both;
      std::set_intersection(cand.begin(), cand.end(), here.begin(), here.end(), std::back_inserter(both));
      cand = std::move(both);
    }
    if (cand.size() == 1) return cand.front();
    if (cand.empty()) return std::nullopt;
  }
  return std::nullopt;
}

std::int64_t ec_char_sum_fast(const std::array<std::uint32_t, 4>& g, const QrTable& qr) {
  // Walk g(x) by its forward differences (the third one is the constant 24)
  // in K independent chunks so the add chains overlap.
#if defined(__AVX2__)
  constexpr int K = 16;
#else
  constexpr int K = 4;
#endif
  const std::uint32_t p = qr.prime();
  const std::int8_t* chi = qr.data();
  const std::uint32_t len = p / K;
  const std::uint32_t d3 = 24 % p;

  alignas(32) std::uint32_t v[K], d1[K], d2[K];
  for (int k = 0; k < K; ++k) {
    const std::uint64_t x0 = static_cast<std::uint64_t>(k) * len;
    const std::uint32_t g0 = horner(g.data(), 3, x0, p);
    const std::uint32_t g1 = horner(g.data(), 3, x0 + 1, p);
    const std::uint32_t g2 = horner(g.data(), 3, x0 + 2, p);
    v[k] = g0;
    d1[k] = submod(g1, g0, p);
    d2[k] = submod(submod(g2, g1, p), d1[k], p);
  }
  std::int64_t sum = 0;
#if defined(__AVX2__)
  {
    // Differences advance in vector registers; the table lookups stay scalar
    // since hardware gathers are slower than plain loads on common parts.
    const __m256i P = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i D3 = _mm256_set1_epi32(static_cast<int>(d3));
    auto add = [&](__m256i a, __m256i b) {
      const __m256i s = _mm256_add_epi32(a, b);
      return _mm256_min_epu32(s, _mm256_sub_epi32(s, P));
    };
    __m256i va = _mm256_load_si256(reinterpret_cast<const __m256i*>(v));
    __m256i vb = _mm256_load_si256(reinterpret_cast<const __m256i*>(v + 8));
    __m256i d1a = _mm256_load_si256(reinterpret_cast<const __m256i*>(d1));
    __m256i d1b = _mm256_load_si256(reinterpret_cast<const __m256i*>(d1 + 8));
    __m256i d2a = _mm256_load_si256(reinterpret_cast<const __m256i*>(d2));
    __m256i d2b = _mm256_load_si256(reinterpret_cast<const __m256i*>(d2 + 8));
    alignas(32) std::uint32_t idx[16];
    std::int64_t acc0 = 0, acc1 = 0;
    for (std::uint32_t i = 0; i < len; ++i) {
      _mm256_store_si256(reinterpret_cast<__m256i*>(idx), va);
      _mm256_store_si256(reinterpret_cast<__m256i*>(idx + 8), vb);
      va = add(va, d1a);
      vb = add(vb, d1b);
      d1a = add(d1a, d2a);
      d1b = add(d1b, d2b);
      d2a = add(d2a, D3);
      d2b = add(d2b, D3);
      int s0 = 0, s1 = 0;
      for (int k = 0; k < 8; ++k) {
        s0 += chi[idx[k]];
        s1 += chi[idx[k + 8]];
      }
      acc0 += s0;
      acc1 += s1;
    }
    sum = acc0 + acc1;
  }
#else
  std::int64_t acc[K] = {};
  for (std::uint32_t i = 0; i < len; ++i) {
    for (int k = 0; k < K; ++k) {
      acc[k] += chi[v[k]];
      v[k] = addmod(v[k], d1[k], p);
      d1[k] = addmod(d1[k], d2[k], p);
      d2[k] = addmod(d2[k], d3, p);
    }
  }
  for (int k = 0; k < K; ++k) sum += acc[k];
#endif
  for (std::uint32_t x = K * len; x < p; ++x) sum += chi[horner(g.data(), 3, x, p)];
  return sum;
}

std::int64_t ec_trace_small(const CurveModel& curve, std::uint32_t p) {
  const auto& a = curve.ainvs();
  std::int64_t r[5];
  for (int i = 0; i < 5; ++i) r[i] = reduce(a[i], p);
  std::int64_t count = 1;  // point at infinity
  const std::int64_t q = p;
  for (std::int64_t x = 0; x < q; ++x) {
    for (std::int64_t y = 0; y < q; ++y) {
      const std::int64_t lhs = y * y + r[0] * x * y + r[2] * y;
      const std::int64_t rhs = x * x * x + r[1] * x * x + r[3] * x + r[4];
      if ((lhs - rhs) % q == 0) ++count;
    }
  }
  return q + 1 - count;
}

std::array<std::int64_t, 2> g2_power_sums_reference(const CurveModel& curve, const QrTable& qr) {
  const std::uint32_t p = qr.prime();
  const auto F = sextic_mod(curve, p);
  const G2Base base = g2_base(F, qr);
  const std::uint64_t d = qr.nonresidue();
  std::int64_t s2 = 0;
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      const Fp2 w = fp2_eval(F, {a, b}, d, p);
      // w is a square in F_{p^2} iff its norm is a square in F_p
      const std::uint64_t norm = (w.u * w.u % p + (p - d) * (w.v * w.v % p)) % p;
      s2 += qr(static_cast<std::uint32_t>(norm));
    }
  }
  return g2_finish(base, s2, p);
}

std::array<std::int64_t, 2> g2_power_sums_fast(const CurveModel& curve, const QrTable& qr) {
  const std::uint32_t p = qr.prime();
  const auto F = sextic_mod(curve, p);
  const G2Base base = g2_base(F, qr);
  const std::uint64_t d = qr.nonresidue();
  const std::int8_t* chi = qr.data();

  // Norm u^2 - d v^2 split into two lookups.
  std::vector<std::uint32_t> sq(p), nd(p);
  for (std::uint64_t u = 0; u < p; ++u) {
    sq[u] = static_cast<std::uint32_t>(u * u % p);
    nd[u] = static_cast<std::uint32_t>((p - d) * sq[u] % p);
  }

  // Difference table of a -> F(a + bt), seeded from F at a = 0..6.
  auto seed = [&](std::uint64_t b, std::uint32_t* du, std::uint32_t* dv, int stride) {
    for (int k = 0; k < 7; ++k) {
      const Fp2 w = fp2_eval(F, {static_cast<std::uint64_t>(k), b}, d, p);
      du[k * stride] = static_cast<std::uint32_t>(w.u);
      dv[k * stride] = static_cast<std::uint32_t>(w.v);
    }
    for (int j = 1; j < 7; ++j) {
      for (int k = 6; k >= j; --k) {
        du[k * stride] = submod(du[k * stride], du[(k - 1) * stride], p);
        dv[k * stride] = submod(dv[k * stride], dv[(k - 1) * stride], p);
      }
    }
  };

  // F(a + bt) and F(a - bt) are conjugate, so b and -b contribute equally.
  // The row b = 0 is F_p itself, where every nonzero value is a square.
  const std::uint64_t nb = (p - 1) / 2;
  std::uint64_t b = 1;
  std::int64_t rows = 0;
#if defined(__AVX2__)
  // Eight values of b per vector.
  {
    const __m256i P = _mm256_set1_epi32(static_cast<int>(p));
    auto add = [&](__m256i x, __m256i y) {
      const __m256i s = _mm256_add_epi32(x, y);
      return _mm256_min_epu32(s, _mm256_sub_epi32(s, P));
    };
    for (; b + 7 <= nb; b += 8) {
      alignas(32) std::uint32_t U[7][8], V[7][8];
      for (int lane = 0; lane < 8; ++lane) seed(b + lane, &U[0][lane], &V[0][lane], 8);
      __m256i u[7], v[7];
      for (int k = 0; k < 7; ++k) {
        u[k] = _mm256_load_si256(reinterpret_cast<const __m256i*>(U[k]));
        v[k] = _mm256_load_si256(reinterpret_cast<const __m256i*>(V[k]));
      }
      alignas(32) std::uint32_t iu[8], iv[8];
      std::int64_t acc = 0;
      for (std::uint32_t x = 0; x < p; ++x) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(iu), u[0]);
        _mm256_store_si256(reinterpret_cast<__m256i*>(iv), v[0]);
        for (int j = 0; j < 6; ++j) {
          u[j] = add(u[j], u[j + 1]);
          v[j] = add(v[j], v[j + 1]);
        }
        int s8 = 0;
        for (int lane = 0; lane < 8; ++lane) s8 += chi[addmod(sq[iu[lane]], nd[iv[lane]], p)];
        acc += s8;
      }
      rows += acc;
    }
  }
#endif
  for (; b <= nb; ++b) {
    std::uint32_t du[7], dv[7];
    seed(b, du, dv, 1);
    std::int64_t acc = 0;
    for (std::uint32_t a = 0; a < p; ++a) {
      acc += chi[addmod(sq[du[0]], nd[dv[0]], p)];
      for (int j = 0; j < 6; ++j) {
        du[j] = addmod(du[j], du[j + 1], p);
        dv[j] = addmod(dv[j], dv[j + 1], p);
      }
    }
    rows += acc;
  }
  return g2_finish(base, base.nonzero + 2 * rows, p);
}

EulerFactor g2_factor(std::uint32_t p, std::int64_t t1, std::int64_t t2) {
  const std::int64_t e2 = t1 * t1 - t2;
  if (e2 % 2 != 0)
    throw Error(Errc::weil_violation, "odd t1^2 - t2 at p = " + std::to_string(p));
  EulerFactor e{p, 2, t1, e2 / 2};
  check_weil(e);
  return e;
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::vector<EulerFactor>> ec_lpolys(std::span<const CurveModel> curves,
                                                std::uint64_t bound, Exec exec) {
  for (const auto& c : curves)
    if (c.kind() != CurveKind::elliptic) throw Error(Errc::invalid_argument, c.label() + " is not elliptic");
  const auto primes = sieve_primes(bound);
  const std::size_t nc = curves.size();
  const std::size_t np = primes.size();
  std::vector<std::int64_t> traces(nc * np, kBad);

  auto one_prime = [&](std::size_t i, QrTable& qr, bool fast) {
    const std::uint32_t p = primes[i];
    bool built = false;
    for (std::size_t c = 0; c < nc; ++c) {
      if (!good_reduction(curves[c], p)) continue;
      std::int64_t t;
      if (p <= 3) {
        t = ec_trace_small(curves[c], p);
      } else {
        const auto quick = fast ? ec_trace_bsgs(curves[c], p) : std::nullopt;
        if (quick) {
          t = *quick;
        } else {
          if (!built) qr.rebuild(p), built = true;
          const auto g = ec_cubic_mod(curves[c], p);
          t = -(fast ? ec_char_sum_fast(g, qr) : ec_char_sum_reference(g, qr));
        }
      }
      traces[c * np + i] = t;
    }
  };

  if (exec == Exec::serial) {
    QrTable qr;
    for (std::size_t i = 0; i < np; ++i) one_prime(i, qr, false);
  } else {
#pragma omp parallel
    {
      QrTable qr;
#pragma omp for schedule(dynamic, 64)
      for (std::size_t i = 0; i < np; ++i) one_prime(i, qr, true);
    }
  }

  std::vector<std::vector<EulerFactor>> out(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t i = 0; i < np; ++i) {
      const std::int64_t t = traces[c * np + i];
      if (t == kBad) continue;
      EulerFactor e{primes[i], 1, t, 0};
      check_weil(e);
      out[c].push_back(e);
    }
  }
  return out;
}

std::vector<EulerFactor> g2_lpolys(const CurveModel& curve, std::uint64_t bound,
                                   std::uint64_t prime_cap, Exec exec) {
  if (curve.kind() != CurveKind::genus2) throw Error(Errc::invalid_argument, curve.label() + " is not genus 2");
  if (bound > prime_cap) {
    throw Error(Errc::budget_exceeded, "bound " + std::to_string(bound) + " above the genus-2 prime cap " +
                                           std::to_string(prime_cap) + " (raise --g2-cap or ingest data)");
  }
  std::vector<std::uint32_t> primes;
  for (auto p : sieve_primes(bound))
    if (good_reduction(curve, p)) primes.push_back(p);
  const std::size_t np = primes.size();
  std::vector<std::array<std::int64_t, 2>> sums(np);

  if (exec == Exec::serial) {
    QrTable qr;
    for (std::size_t i = 0; i < np; ++i) {
      qr.rebuild(primes[i]);
      sums[i] = g2_power_sums_reference(curve, qr);
    }
  } else {
#pragma omp parallel
    {
      QrTable qr;
#pragma omp for schedule(dynamic, 1)
      for (std::size_t i = 0; i < np; ++i) {
        qr.rebuild(primes[i]);
        sums[i] = g2_power_sums_fast(curve, qr);
      }
    }
  }

  std::vector<EulerFactor> out;
  out.reserve(np);
  for (std::size_t i = 0; i < np; ++i) out.push_back(g2_factor(primes[i], sums[i][0], sums[i][1]));
  return out;
}

std::vector<EulerFactor> lpolys(const CurveModel& curve, std::uint64_t bound, std::uint64_t g2_cap,
                                Exec exec) {
  if (curve.kind() == CurveKind::elliptic) return ec_lpolys(std::span(&curve, 1), bound, exec).front();
  return g2_lpolys(curve, bound, g2_cap, exec);
}

}  // namespace stconv
