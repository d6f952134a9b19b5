#include "stconv/class_function.hpp"

#include <algorithm>
#include <sstream>

#include "stconv/error.hpp"

namespace stconv {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::invalid_argument, "class function coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::invalid_argument, "class function coefficient overflow");
  return r;
}

}  // namespace

ClassFunction ClassFunction::constant(Group group, std::int64_t c) {
  ClassFunction f(group);
  if (c != 0) f.terms_[{0, 0}] = c;
  if (group == Group::NU1) f.sigma_ = c;
  return f;
}

ClassFunction ClassFunction::monomial(Group group, int i, int j, std::int64_t c) {
  ClassFunction f(group);
  if (f.is_laurent()) {
    j = 0;
  } else if (i < 0 || j < 0) {
    throw Error(Errc::invalid_argument, "negative exponent in a polynomial class function");
  }
  if (ambient_genus(group) == 1) j = 0;
  if (c != 0) f.terms_[{i, j}] = c;
  return f;
}

std::int64_t ClassFunction::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

int ClassFunction::degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, is_laurent() ? std::abs(m[0]) : m[0] + m[1]);
  if (d < 0 && sigma_ != 0) d = 0;
  return d;
}

void ClassFunction::check_group(const ClassFunction& o) const {
  if (o.group_ != group_)
    throw Error(Errc::group_mismatch, "class functions on " + stconv::to_string(group_) + " and " +
                                          stconv::to_string(o.group_));
}

void ClassFunction::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_group(o);
  for (const auto& [m, c] : o.terms_) terms_[m] = checked_add(terms_[m], c);
  sigma_ = checked_add(sigma_, o.sigma_);
  prune();
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) { return *this += -o; }

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  check_group(o);
  Terms out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      const Monomial m{m1[0] + m2[0], m1[1] + m2[1]};
      out[m] = checked_add(out[m], checked_mul(c1, c2));
    }
  }
  terms_ = std::move(out);
  sigma_ = checked_mul(sigma_, o.sigma_);
  prune();
  return *this;
}

ClassFunction& ClassFunction::operator*=(std::int64_t c) {
  for (auto& [m, v] : terms_) v = checked_mul(v, c);
  sigma_ = checked_mul(sigma_, c);
  prune();
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction r = *this;
  r *= -1;
  return r;
}

ClassFunction ClassFunction::pow(int n) const {
  if (n < 0) throw Error(Errc::invalid_argument, "negative power of a class function");
  ClassFunction result = constant(group_, 1);
  ClassFunction base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::complex<double> ClassFunction::Compiled::eval(const ClassCoords& c) const {
  if (group == Group::U1 || group == Group::NU1) {
    if (group == Group::NU1 && c.component == Component::sigma) return sigma;
    std::complex<double> acc = 0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
      const int k = exps[t][0];
      // unit modulus: negative powers are conjugates
      std::complex<double> uk = 1.0;
      std::complex<double> b = k < 0 ? std::conj(c.u) : c.u;
      for (int e = std::abs(k); e > 0; e >>= 1) {
        if (e & 1) uk *= b;
        b *= b;
      }
      acc += coeffs[t] * uk;
    }
    return acc;
  }
  double xp[64], yp[64];
  std::vector<double> xv, yv;
  double* X = xp;
  double* Y = yp;
  if (max_i >= 64 || max_j >= 64) {
    xv.resize(max_i + 1);
    yv.resize(max_j + 1);
    X = xv.data();
    Y = yv.data();
  }
  X[0] = 1;
  for (int i = 1; i <= max_i; ++i) X[i] = X[i - 1] * c.x;
  Y[0] = 1;
  for (int j = 1; j <= max_j; ++j) Y[j] = Y[j - 1] * c.y;
  double acc = 0;
  for (std::size_t t = 0; t < exps.size(); ++t) acc += coeffs[t] * X[exps[t][0]] * Y[exps[t][1]];
  return acc;
}

ClassFunction::Compiled ClassFunction::compile() const {
  Compiled cf;
  cf.group = group_;
  cf.sigma = static_cast<double>(sigma_);
  for (const auto& [m, c] : terms_) {
    cf.exps.push_back(m);
    cf.coeffs.push_back(static_cast<double>(c));
    cf.max_i = std::max(cf.max_i, m[0]);
    cf.max_j = std::max(cf.max_j, m[1]);
    cf.min_i = std::min(cf.min_i, m[0]);
  }
  return cf;
}

std::complex<double> ClassFunction::eval(const ClassCoords& c) const { return compile().eval(c); }

std::complex<double> ClassFunction::eval(const ClassPoint& p) const {
  if (p.group != group_)
    throw Error(Errc::group_mismatch, "class function on " + stconv::to_string(group_) + " evaluated on " +
                                          stconv::to_string(p.group));
  return eval(coords(p));
}

std::int64_t ClassFunction::value_at_identity() const {
  std::int64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t v = c;
    if (!is_laurent()) {
      for (int e = 0; e < m[0] + m[1]; ++e) v = checked_mul(v, 2);
    }
    acc = checked_add(acc, v);
  }
  return acc;
}

ClassFunction ClassFunction::restrict_to(Group sub) const {
  if (sub == group_) return *this;
  if (!embeds(sub, group_))
    throw Error(Errc::group_mismatch, stconv::to_string(sub) + " is not a subgroup of " + stconv::to_string(group_));
  ClassFunction out(sub);
  if (group_ == Group::USp4) {
    out.terms_ = terms_;
    return out;
  }
  // SU2 -> U1 / NU1: x = u + u^{-1}
  const ClassFunction x = monomial(sub, 1) + monomial(sub, -1);
  std::int64_t at_zero = 0;
  for (const auto& [m, c] : terms_) {
    out += x.pow(m[0]) * c;
    if (m[0] == 0) at_zero = c;
  }
  out.sigma_ = sub == Group::NU1 ? at_zero : 0;
  out.prune();
  return out;
}

bool ClassFunction::is_symmetric() const {
  for (const auto& [m, c] : terms_)
    if (coefficient(m[1], m[0]) != c) return false;
  return true;
}

bool ClassFunction::is_selfdual() const {
  if (!is_laurent()) return true;
  for (const auto& [m, c] : terms_)
    if (coefficient(-m[0]) != c) return false;
  return true;
}

std::string ClassFunction::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const auto a = c < 0 ? -c : c;
    const bool unit = m[0] == 0 && m[1] == 0;
    if (a != 1 || unit) os << a;
    if (is_laurent()) {
      if (m[0] != 0) os << "u^" << m[0];
    } else {
      if (m[0] > 0) os << "x" << (m[0] > 1 ? "^" + std::to_string(m[0]) : "");
      if (m[1] > 0) os << "y" << (m[1] > 1 ? "^" + std::to_string(m[1]) : "");
    }
    first = false;
  }
  if (first) os << "0";
  if (group_ == Group::NU1) os << " | sigma: " << sigma_;
  return os.str();
}

ClassFunction chebyshev_s(Group group, int k, bool in_y) {
  if (k < 0) return ClassFunction(group);
  const ClassFunction x = in_y ? ClassFunction::monomial(group, 0, 1) : ClassFunction::monomial(group, 1, 0);
  ClassFunction prev = ClassFunction::constant(group, 1);
  if (k == 0) return prev;
  ClassFunction cur = x;
  for (int i = 2; i <= k; ++i) {
    ClassFunction next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ClassFunction chebyshev_c(Group group, int k, bool in_y) {
  const ClassFunction x = in_y ? ClassFunction::monomial(group, 0, 1) : ClassFunction::monomial(group, 1, 0);
  ClassFunction prev = ClassFunction::constant(group, 2);
  if (k == 0) return prev;
  ClassFunction cur = x;
  for (int i = 2; i <= k; ++i) {
    ClassFunction next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace stconv
