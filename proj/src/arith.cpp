#include "stconv/arith.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "stconv/count_kernels.hpp"
#include "stconv/error.hpp"

namespace stconv {

namespace {

constexpr double kClampTol = 1e-9;

// Determinant by fraction-free Gaussian elimination.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Resultant of two polynomials given in descending order.
BigInt resultant(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = a[i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = b[i];
  return bareiss_det(std::move(syl));
}

// Discriminant of a polynomial of exact degree n (coefficients ascending).
BigInt poly_disc(const std::vector<BigInt>& asc) {
  const std::size_t n = asc.size() - 1;
  std::vector<BigInt> desc(asc.rbegin(), asc.rend());
  std::vector<BigInt> deriv;
  for (std::size_t i = 0; i < n; ++i) deriv.push_back(desc[i] * static_cast<long>(n - i));
  BigInt res = resultant(desc, deriv);
  BigInt d = res / desc[0];
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

std::int64_t checked_coeff(const nlohmann::json& v) {
  if (!v.is_number_integer()) throw Error(Errc::parse_error, "curve coefficient is not an integer");
  return v.get<std::int64_t>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

CurveModel CurveModel::elliptic(std::string label, const std::array<std::int64_t, 5>& ainvs) {
  CurveModel c;
  c.label_ = std::move(label);
  c.kind_ = CurveKind::elliptic;
  c.ainvs_ = ainvs;
  const BigInt a1 = ainvs[0], a2 = ainvs[1], a3 = ainvs[2], a4 = ainvs[3], a6 = ainvs[4];
  const BigInt b2 = a1 * a1 + 4 * a2;
  const BigInt b4 = 2 * a4 + a1 * a3;
  const BigInt b6 = a3 * a3 + 4 * a6;
  const BigInt b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  c.disc_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (c.disc_ == 0)
    throw Error(Errc::invalid_argument, "singular Weierstrass model for '" + c.label_ + "'");
  return c;
}

CurveModel CurveModel::genus2(std::string label, std::vector<std::int64_t> f,
                              std::vector<std::int64_t> h) {
  if (f.size() > 7 || h.size() > 4)
    throw Error(Errc::invalid_argument, "genus-2 model needs deg f <= 6 and deg h <= 3");
  f.resize(7, 0);
  h.resize(4, 0);
  CurveModel c;
  c.label_ = std::move(label);
  c.kind_ = CurveKind::genus2;
  c.f_ = std::move(f);
  c.h_ = std::move(h);

  auto big = c.completed_square();
  std::vector<BigInt> F(big.begin(), big.end());
  while (F.size() > 1 && F.back() == 0) F.pop_back();
  const std::size_t deg = F.size() - 1;
  if (deg != 5 && deg != 6)
    throw Error(Errc::invalid_argument, "4f + h^2 must have degree 5 or 6 for '" + c.label_ + "'");
  // Binary sextic discriminant: a degree-5 form picks up the square of its
  // leading coefficient.
  BigInt d6 = poly_disc(F);
  if (deg == 5) d6 *= F[5] * F[5];
  c.disc_ = (d6 % 4096 == 0) ? BigInt(d6 / 4096) : d6;
  if (c.disc_ == 0)
    throw Error(Errc::invalid_argument, "singular genus-2 model for '" + c.label_ + "'");
  return c;
}

std::vector<std::int64_t> CurveModel::completed_square() const {
  std::vector<std::int64_t> F(7, 0);
  if (kind_ != CurveKind::genus2) return F;
  for (int i = 0; i < 7; ++i) F[i] = 4 * f_[i];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i + j < 7) F[i + j] += h_[i] * h_[j];
  return F;
}

std::vector<BigInt> EulerFactor::coefficients() const {
  const BigInt q = norm;
  if (genus == 1) return {1, -BigInt(c1), q};
  return {1, -BigInt(c1), BigInt(c2), -q * c1, q * q};
}

std::array<double, 2> eigen_cosines(std::int64_t c1, std::int64_t c2, std::uint64_t norm) {
  const BigInt D = BigInt(c1) * c1 - 4 * BigInt(c2) + 8 * BigInt(norm);
  if (D < 0) {
    throw Error(Errc::weil_violation, "non-real eigen-angles for norm " + std::to_string(norm) +
                                          " (c1=" + std::to_string(c1) + ", c2=" + std::to_string(c2) + ")");
  }
  const double sq = std::sqrt(static_cast<double>(D));
  const double den = 4.0 * std::sqrt(static_cast<double>(norm));
  std::array<double, 2> z{(static_cast<double>(c1) - sq) / den, (static_cast<double>(c1) + sq) / den};
  for (double& v : z) {
    if (v < -1.0 - kClampTol || v > 1.0 + kClampTol) {
      throw Error(Errc::weil_violation, "eigen-angle cosine outside [-1,1] for norm " +
                                            std::to_string(norm) + " (c1=" + std::to_string(c1) +
                                            ", c2=" + std::to_string(c2) + ")");
    }
    v = std::clamp(v, -1.0, 1.0);
  }
  return z;
}

void check_weil(const EulerFactor& factor) {
  if (factor.norm < 2) throw Error(Errc::invalid_argument, "norm must be at least 2");
  if (factor.genus == 1) {
    if (BigInt(factor.c1) * factor.c1 > 4 * BigInt(factor.norm)) {
      throw Error(Errc::weil_violation, "|c1| = " + std::to_string(std::llabs(factor.c1)) +
                                            " exceeds 2 sqrt(" + std::to_string(factor.norm) + ")");
    }
  } else if (factor.genus == 2) {
    eigen_cosines(factor.c1, factor.c2, factor.norm);
  } else {
    throw Error(Errc::invalid_argument, "genus must be 1 or 2");
  }
}

std::vector<std::uint32_t> sieve_primes(std::uint64_t bound) {
  if (bound < 2) throw Error(Errc::invalid_argument, "prime bound must be at least 2");
  std::vector<std::uint32_t> primes{2};
  // odd-only sieve: index i stands for 2i + 1
  const std::uint64_t half = (bound - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  for (std::uint64_t i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return primes;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  using u128 = unsigned __int128;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(u128(a) * b % n); };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s && witness; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

bool good_reduction(const CurveModel& curve, std::uint64_t p) {
  if (curve.kind() == CurveKind::genus2 && p == 2) return false;
  return curve.discriminant() % p != 0;
}

std::int64_t ec_trace(const CurveModel& curve, std::uint32_t p) {
  if (curve.kind() != CurveKind::elliptic) throw Error(Errc::invalid_argument, "ec_trace needs an elliptic curve");
  if (!good_reduction(curve, p))
    throw Error(Errc::bad_reduction, curve.label() + " has bad reduction at " + std::to_string(p));
  if (p <= 3) return ec_trace_small(curve, p);
  QrTable qr(p);
  return -ec_char_sum_fast(ec_cubic_mod(curve, p), qr);
}

LPolynomial g2_lpoly(const CurveModel& curve, std::uint32_t p, std::uint64_t prime_cap) {
  if (curve.kind() != CurveKind::genus2) throw Error(Errc::invalid_argument, "g2_lpoly needs a genus-2 curve");
  if (p > prime_cap) {
    throw Error(Errc::budget_exceeded, "prime " + std::to_string(p) + " above the genus-2 cap " +
                                           std::to_string(prime_cap));
  }
  if (!good_reduction(curve, p))
    throw Error(Errc::bad_reduction, curve.label() + " has bad reduction at " + std::to_string(p));
  QrTable qr(p);
  auto t = g2_power_sums_fast(curve, qr);
  return g2_factor(p, t[0], t[1]);
}

std::vector<EulerFactor> quadratic_base_change(std::int64_t a_p, std::uint64_t p, bool split) {
  check_weil({p, 1, a_p, 0});
  if (split) return {EulerFactor{p, 1, a_p, 0}, EulerFactor{p, 1, a_p, 0}};
  const std::int64_t q = static_cast<std::int64_t>(p);
  return {EulerFactor{p * p, 1, a_p * a_p - 2 * q, 0}};
}

int legendre(std::int64_t a, std::uint64_t p) {
  // Jacobi symbol algorithm; agrees with the Legendre symbol for prime p.
  std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t n = ((a % m) + m) % m;
  int result = 1;
  while (n != 0) {
    while (n % 2 == 0) {
      n /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(n, m);
    if (n % 4 == 3 && m % 4 == 3) result = -result;
    n %= m;
  }
  return m == 1 ? result : 0;
}

std::vector<EulerFactor> read_lpoly_csv(std::istream& in, std::string_view source) {
  std::vector<EulerFactor> out;
  std::string line;
  std::size_t lineno = 0;
  int genus = 0;
  auto where = [&] { return std::string(source) + ":" + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    auto fields = split_commas(s);
    if (genus == 0) {
      if (fields.size() == 2 && fields[0] == "norm" && fields[1] == "c1") {
        genus = 1;
      } else if (fields.size() == 3 && fields[0] == "norm" && fields[1] == "c1" && fields[2] == "c2") {
        genus = 2;
      } else {
        throw Error(Errc::parse_error, where() + ": expected header 'norm,c1' or 'norm,c1,c2'");
      }
      continue;
    }
    if (fields.size() != static_cast<std::size_t>(genus + 1))
      throw Error(Errc::parse_error, where() + ": expected " + std::to_string(genus + 1) + " fields");
    EulerFactor e;
    e.genus = genus;
    if (!parse_int(fields[0], e.norm) || !parse_int(fields[1], e.c1) ||
        (genus == 2 && !parse_int(fields[2], e.c2))) {
      throw Error(Errc::parse_error, where() + ": malformed integer");
    }
    if (!out.empty() && e.norm < out.back().norm) {
      throw Error(Errc::order_error, where() + ": norm " + std::to_string(e.norm) + " after " +
                                         std::to_string(out.back().norm));
    }
    try {
      check_weil(e);
    } catch (const Error& err) {
      throw Error(err.code(), where() + ": " + err.detail());
    }
    out.push_back(e);
  }
  if (genus == 0) throw Error(Errc::parse_error, std::string(source) + ": missing header");
  return out;
}

std::vector<EulerFactor> ingest_lpoly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  return read_lpoly_csv(in, path);
}

void write_lpoly_csv(std::ostream& out, std::span<const EulerFactor> factors, int genus) {
  out << (genus == 1 ? "norm,c1\n" : "norm,c1,c2\n");
  for (const auto& e : factors) {
    out << e.norm << ',' << e.c1;
    if (genus == 2) out << ',' << e.c2;
    out << '\n';
  }
}

CurveModel parse_curve_json(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("curve JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("label") || !j.contains("kind") || !j.contains("coeffs"))
    throw Error(Errc::parse_error, "curve JSON needs label, kind and coeffs");
  if (!j["label"].is_string() || !j["kind"].is_string() || !j["coeffs"].is_object())
    throw Error(Errc::parse_error, "curve JSON has fields of the wrong type");
  const auto label = j["label"].get<std::string>();
  const auto kind = j["kind"].get<std::string>();
  const auto& co = j["coeffs"];
  auto int_list = [&](const char* key, std::size_t max_len) {
    if (!co.contains(key) || !co[key].is_array())
      throw Error(Errc::parse_error, std::string("curve JSON: coeffs.") + key + " must be an array");
    std::vector<std::int64_t> v;
    for (const auto& x : co[key]) v.push_back(checked_coeff(x));
    if (v.size() > max_len)
      throw Error(Errc::parse_error, std::string("curve JSON: coeffs.") + key + " too long");
    return v;
  };
  if (kind == "ec") {
    auto a = int_list("ainvs", 5);
    if (a.size() != 5) throw Error(Errc::parse_error, "curve JSON: ainvs needs 5 entries");
    return CurveModel::elliptic(label, {a[0], a[1], a[2], a[3], a[4]});
  }
  if (kind == "g2") {
    auto f = int_list("f", 7);
    std::vector<std::int64_t> h;
    if (co.contains("h")) h = int_list("h", 4);
    return CurveModel::genus2(label, std::move(f), std::move(h));
  }
  throw Error(Errc::parse_error, "curve JSON: unknown kind '" + kind + "'");
}

std::vector<CurveModel> read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  std::vector<CurveModel> curves;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    try {
      curves.push_back(parse_curve_json(s));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(lineno) + ": " + e.detail());
    }
  }
  return curves;
}

}  // namespace stconv
