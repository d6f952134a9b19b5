#include "stconv/chars.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <regex>
#include <sstream>

#include "stconv/error.hpp"

namespace stconv {

namespace {

constexpr double kRoundTol = 1e-6;
constexpr double kResidualFail = 1e-4;
constexpr double kZero = 1e-12;

double round_if_close(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= kRoundTol ? r : v;
}

std::complex<double> round_if_close(std::complex<double> c) {
  return {round_if_close(c.real()), round_if_close(c.imag())};
}

// Exact quotient of an antisymmetric polynomial by (x - y).
ClassFunction divide_by_x_minus_y(const ClassFunction& num) {
  const int D = std::max(num.degree(), 0);
  std::map<std::array<int, 2>, std::int64_t> q;
  auto qget = [&](int i, int j) -> std::int64_t {
    if (i < 0 || j < 0) return 0;
    auto it = q.find({i, j});
    return it == q.end() ? 0 : it->second;
  };
  // num = (x - y) q  gives  p_{ij} = q_{i-1,j} - q_{i,j-1}
  for (int j = 0; j <= D; ++j) {
    for (int i = D + 1; i >= 1; --i) {
      const std::int64_t v = num.coefficient(i, j) + qget(i, j - 1);
      if (v != 0) q[{i - 1, j}] = v;
    }
  }
  ClassFunction out(num.group());
  for (const auto& [m, c] : q) out += ClassFunction::monomial(num.group(), m[0], m[1], c);
  const ClassFunction x_minus_y =
      ClassFunction::monomial(num.group(), 1, 0) - ClassFunction::monomial(num.group(), 0, 1);
  if (out * x_minus_y != num) throw Error(Errc::invalid_argument, "numerator is not divisible by x - y");
  return out;
}

ClassFunction build_char_poly(const CharLabel& l) {
  const Group g = l.group;
  switch (g) {
    case Group::U1:
      return ClassFunction::monomial(g, l.i);
    case Group::NU1: {
      if (l.i == 0) {
        ClassFunction f = ClassFunction::constant(g, 1);
        if (l.sign) f.set_sigma_value(-1);
        return f;
      }
      // rho_m vanishes on the sigma component
      return ClassFunction::monomial(g, l.i) + ClassFunction::monomial(g, -l.i);
    }
    case Group::SU2:
      return chebyshev_s(g, l.i);
    case Group::SU2xSU2:
      return chebyshev_s(g, l.i) * chebyshev_s(g, l.j, true);
    case Group::USp4: {
      const ClassFunction num = chebyshev_s(g, l.i + 1) * chebyshev_s(g, l.j, true) -
                                chebyshev_s(g, l.i + 1, true) * chebyshev_s(g, l.j);
      return divide_by_x_minus_y(num);
    }
  }
  return ClassFunction(g);
}

int parse_index(const std::string& s) { return std::stoi(s); }

}  // namespace

CharLabel trivial_label(Group g) { return CharLabel{g, 0, 0, false}; }

bool is_trivial(const CharLabel& l) { return l.i == 0 && l.j == 0 && !l.sign; }

void validate(const CharLabel& l) {
  auto bad = [&] { throw Error(Errc::invalid_argument, "label out of range: " + to_string(l)); };
  switch (l.group) {
    case Group::U1:
      if (l.j != 0 || l.sign) bad();
      break;
    case Group::NU1:
      if (l.i < 0 || l.j != 0 || (l.sign && l.i != 0)) bad();
      break;
    case Group::SU2:
      if (l.i < 0 || l.j != 0 || l.sign) bad();
      break;
    case Group::SU2xSU2:
      if (l.i < 0 || l.j < 0 || l.sign) bad();
      break;
    case Group::USp4:
      if (l.j < 0 || l.i < l.j || l.sign) bad();
      break;
  }
}

CharLabel dual(const CharLabel& l) {
  CharLabel d = l;
  if (l.group == Group::U1) d.i = -l.i;
  return d;
}

std::string to_string(const CharLabel& l) {
  switch (l.group) {
    case Group::U1: return "nu_" + std::to_string(l.i);
    case Group::NU1:
      if (l.i == 0) return l.sign ? "sign" : "triv";
      return "rho_" + std::to_string(l.i);
    case Group::SU2: return "chi_" + std::to_string(l.i);
    case Group::SU2xSU2: return "chi_" + std::to_string(l.i) + "xchi_" + std::to_string(l.j);
    case Group::USp4: return "chi_{" + std::to_string(l.i) + "," + std::to_string(l.j) + "}";
  }
  return "?";
}

CharLabel parse_label(std::string_view text, Group g) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  static const std::regex single(R"(^(chi|nu|rho)_\{?(-?\d+)\}?$)");
  static const std::regex pair(R"(^chi_\{(\d+),(\d+)\}$)");
  static const std::regex product(R"(^chi_\{?(\d+)\}?x(?:chi_)?\{?(\d+)\}?$)");
  std::smatch m;
  CharLabel l{g, 0, 0, false};
  auto fail = [&]() -> CharLabel {
    throw Error(Errc::parse_error, "'" + std::string(text) + "' is not a character label of " + to_string(g));
  };
  if (s == "triv" || s == "sign") {
    if (g != Group::NU1) {
      if (s == "triv") return trivial_label(g);
      fail();
    }
    l.sign = s == "sign";
  } else if (std::regex_match(s, m, pair)) {
    if (g != Group::USp4) fail();
    l.i = parse_index(m[1]);
    l.j = parse_index(m[2]);
  } else if (std::regex_match(s, m, product)) {
    if (g != Group::SU2xSU2) fail();
    l.i = parse_index(m[1]);
    l.j = parse_index(m[2]);
  } else if (std::regex_match(s, m, single)) {
    const std::string kind = m[1];
    l.i = parse_index(m[2]);
    if (kind == "nu" && g != Group::U1) fail();
    if (kind == "rho" && g != Group::NU1) fail();
    if (kind == "chi" && g != Group::SU2) fail();
    if (kind == "rho" && l.i == 0) fail();
  } else {
    fail();
  }
  validate(l);
  return l;
}

const ClassFunction& char_poly(const CharLabel& l) {
  static std::mutex mutex;
  static std::map<CharLabel, std::unique_ptr<ClassFunction>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[l];
  if (!slot) {
    validate(l);
    slot = std::make_unique<ClassFunction>(build_char_poly(l));
  }
  return *slot;
}

std::complex<double> eval_char(const CharLabel& l, const ClassPoint& p) {
  if (l.group != p.group)
    throw Error(Errc::group_mismatch, to_string(l) + " is a character of " + to_string(l.group) + ", not " +
                                          to_string(p.group));
  return char_poly(l).eval(p);
}

int char_degree(const CharLabel& l) {
  if (l.group == Group::NU1) return l.i == 0 ? 1 : 2;
  return static_cast<int>(char_poly(l).value_at_identity());
}

int char_weight(const CharLabel& l) {
  switch (l.group) {
    case Group::U1: return std::abs(l.i);
    case Group::NU1:
    case Group::SU2: return l.i;
    case Group::SU2xSU2:
    case Group::USp4: return l.i + l.j;
  }
  return 0;
}

std::vector<CharLabel> labels_up_to(Group g, int M) {
  std::vector<CharLabel> out;
  switch (g) {
    case Group::U1:
      for (int i = -M; i <= M; ++i) out.push_back({g, i, 0, false});
      break;
    case Group::NU1:
      out.push_back({g, 0, 0, false});
      out.push_back({g, 0, 0, true});
      for (int i = 1; i <= M; ++i) out.push_back({g, i, 0, false});
      break;
    case Group::SU2:
      for (int i = 0; i <= M; ++i) out.push_back({g, i, 0, false});
      break;
    case Group::SU2xSU2:
      for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= M; ++j) out.push_back({g, i, j, false});
      break;
    case Group::USp4:
      for (int i = 0; i <= M; ++i)
        for (int j = 0; j <= i; ++j) out.push_back({g, i, j, false});
      break;
  }
  return out;
}

std::complex<double> VirtualCharacter::coefficient(const CharLabel& l) const {
  auto it = coeffs_.find(l);
  return it == coeffs_.end() ? std::complex<double>{} : it->second;
}

void VirtualCharacter::add(const CharLabel& l, std::complex<double> c) {
  if (l.group != group_)
    throw Error(Errc::group_mismatch, to_string(l) + " added to a character of " + to_string(group_));
  validate(l);
  auto& slot = coeffs_[l];
  slot += c;
  if (std::abs(slot) < kZero) coeffs_.erase(l);
}

bool VirtualCharacter::selfdual(double tol) const {
  for (const auto& [l, c] : coeffs_)
    if (std::abs(c - std::conj(coefficient(dual(l)))) > tol) return false;
  return true;
}

std::complex<double> VirtualCharacter::eval(const ClassPoint& p) const {
  if (p.group != group_)
    throw Error(Errc::group_mismatch, "character of " + to_string(group_) + " evaluated on " + to_string(p.group));
  std::complex<double> acc = 0;
  const ClassCoords c = coords(p);
  for (const auto& [l, coef] : coeffs_) acc += coef * char_poly(l).eval(c);
  return acc;
}

Evaluable VirtualCharacter::evaluable() const {
  auto terms = std::make_shared<std::vector<std::pair<std::complex<double>, ClassFunction::Compiled>>>();
  for (const auto& [l, c] : coeffs_) terms->emplace_back(c, char_poly(l).compile());
  const Group g = group_;
  return [terms, g](const ClassPoint& p) {
    if (p.group != g)
      throw Error(Errc::group_mismatch, "character of " + to_string(g) + " evaluated on " + to_string(p.group));
    const ClassCoords c = coords(p);
    std::complex<double> acc = 0;
    for (const auto& [coef, cf] : *terms) acc += coef * cf.eval(c);
    return acc;
  };
}

ClassFunction VirtualCharacter::to_class_function() const {
  ClassFunction f(group_);
  for (const auto& [l, c] : coeffs_) {
    const double r = std::round(c.real());
    if (std::abs(c.real() - r) > 1e-9 || std::abs(c.imag()) > 1e-9)
      throw Error(Errc::invalid_argument, "coefficient of " + to_string(l) + " is not an integer");
    f += char_poly(l) * static_cast<std::int64_t>(r);
  }
  return f;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  for (const auto& [l, c] : o.coeffs_) add(l, c);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(std::complex<double> c) {
  if (std::abs(c) < kZero) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [l, v] : coeffs_) v *= c;
  return *this;
}

std::string to_string(const VirtualCharacter& v) {
  std::ostringstream os;
  bool first = true;
  // highest labels first reads like the usual decompositions
  for (auto it = v.coeffs().rbegin(); it != v.coeffs().rend(); ++it) {
    const auto& [l, c] = *it;
    if (c.imag() == 0) {
      const double a = std::abs(c.real());
      os << (c.real() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (a != 1) os << a << "*";
    } else {
      if (!first) os << " + ";
      os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)*";
    }
    os << to_string(l);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ClassFunction coefficient_char(Group g, int k) {
  if (k == 1) {
    switch (g) {
      case Group::SU2: return ClassFunction::monomial(g, 1);
      case Group::U1:
      case Group::NU1: return ClassFunction::monomial(g, 1) + ClassFunction::monomial(g, -1);
      case Group::SU2xSU2:
      case Group::USp4: return ClassFunction::monomial(g, 1, 0) + ClassFunction::monomial(g, 0, 1);
    }
  }
  if (k == 2) {
    if (ambient_genus(g) == 1) return ClassFunction::constant(g, 1);
    return ClassFunction::constant(g, 2) + ClassFunction::monomial(g, 1, 1);
  }
  throw Error(Errc::invalid_argument, "a_k is only defined for k = 1, 2");
}

ClassFunction moment_char(Group g, int k, int n) {
  if (n < 0) throw Error(Errc::invalid_argument, "moment order must be nonnegative");
  return coefficient_char(g, k).pow(n);
}

ClassFunction power_sum_char(Group g, int k, int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "power sum index must be positive");
  if (k != 1 && k != 2) throw Error(Errc::invalid_argument, "s_n^k is only defined for k = 1, 2");
  if (k == 2) {
    if (ambient_genus(g) == 1) return ClassFunction::constant(g, 1);
    return ClassFunction::constant(g, 2) + chebyshev_c(g, n) * chebyshev_c(g, n, true);
  }
  switch (g) {
    case Group::SU2: return chebyshev_c(g, n);
    case Group::U1: return ClassFunction::monomial(g, n) + ClassFunction::monomial(g, -n);
    case Group::NU1: {
      ClassFunction f = ClassFunction::monomial(g, n) + ClassFunction::monomial(g, -n);
      // trace of (A_u sigma)^n: sigma again for odd n, then -1 and 1
      f.set_sigma_value(n % 2 == 1 ? 0 : (n % 4 == 2 ? -2 : 2));
      return f;
    }
    case Group::SU2xSU2:
    case Group::USp4: return chebyshev_c(g, n) + chebyshev_c(g, n, true);
  }
  return ClassFunction(g);
}

VirtualCharacter decompose_exact(const ClassFunction& f) {
  const Group g = f.group();
  VirtualCharacter out(g);
  if (g == Group::U1) {
    for (const auto& [m, c] : f.terms()) out.add({g, m[0], 0, false}, static_cast<double>(c));
    return out;
  }
  if (g == Group::NU1) {
    if (!f.is_selfdual())
      throw Error(Errc::invalid_argument, "not a class function of NU1 (u^k and u^-k differ): " + f.to_string());
    for (const auto& [m, c] : f.terms())
      if (m[0] > 0) out.add({g, m[0], 0, false}, static_cast<double>(c));
    const double c0 = static_cast<double>(f.coefficient(0));
    const double v = static_cast<double>(f.sigma_value());
    out.add({g, 0, 0, false}, (c0 + v) / 2);
    out.add({g, 0, 0, true}, (c0 - v) / 2);
    return out;
  }
  if (g == Group::USp4 && !f.is_symmetric())
    throw Error(Errc::invalid_argument, "not a class function of USp4 (not symmetric): " + f.to_string());
  // Peel off leading monomials: maximal total degree, then maximal x power.
  ClassFunction rest = f;
  while (!rest.terms().empty()) {
    ClassFunction::Monomial lead{-1, -1};
    std::int64_t coef = 0;
    for (const auto& [m, c] : rest.terms()) {
      const int d = m[0] + m[1];
      const int best = lead[0] + lead[1];
      if (lead[0] < 0 || d > best || (d == best && m[0] > lead[0])) {
        lead = m;
        coef = c;
      }
    }
    const CharLabel l{g, lead[0], lead[1], false};
    out.add(l, static_cast<double>(coef));
    rest -= char_poly(l) * coef;
  }
  return out;
}

NumericDecomposition decompose_numeric(Group g, const Evaluable& f, int max_index, Exec exec) {
  const auto& Q = HaarQuadrature::get(g);
  const auto fv = Q.sample(f, exec);
  std::vector<std::complex<double>> rest = fv;
  NumericDecomposition out{VirtualCharacter(g), 0.0};
  for (const auto& l : labels_up_to(g, std::max(max_index, 0))) {
    const auto cv = Q.sample(char_poly(l), exec);
    const std::complex<double> c = Q.inner(fv, cv);
    if (std::abs(c) < 1e-9) continue;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= c * cv[i];
    out.character.add(l, round_if_close(c));
  }
  out.residual = Q.inner(rest, rest).real();
  if (out.residual > kResidualFail) {
    std::ostringstream os;
    os << "residual " << out.residual << " on " << to_string(g) << " with labels up to index " << max_index;
    throw Error(Errc::residual_too_large, os.str());
  }
  return out;
}

NumericDecomposition decompose_numeric(const ClassFunction& f, int max_index, Exec exec) {
  if (max_index < 0) max_index = std::max(f.degree(), 0);
  const auto cf = f.compile();
  return decompose_numeric(f.group(), [cf](const ClassPoint& p) { return cf.eval(coords(p)); }, max_index, exec);
}

int fs_index(const CharLabel& l) {
  validate(l);
  switch (l.group) {
    case Group::U1: return l.i == 0 ? 1 : 0;
    case Group::SU2: return l.i % 2 == 0 ? 1 : -1;
    case Group::USp4: return (l.i + l.j) % 2 == 0 ? 1 : -1;
    case Group::NU1:
    case Group::SU2xSU2: break;
  }
  return static_cast<int>(std::lround(fs_index_numeric(l)));
}

double fs_index_numeric(const CharLabel& l) {
  const auto cf = char_poly(l).compile();
  const auto& Q = HaarQuadrature::get(l.group);
  return Q.integrate([&cf](const ClassPoint& p) { return cf.eval(coords(class_power(p, 2))); }).real();
}

std::complex<double> trivial_multiplicity(Group g, const Evaluable& f) {
  return round_if_close(HaarQuadrature::get(g).integrate(f));
}

std::complex<double> trivial_multiplicity(const ClassFunction& f) {
  const auto& Q = HaarQuadrature::get(f.group());
  return round_if_close(Q.integrate(Q.sample(f)));
}

VirtualCharacter tilde(const VirtualCharacter& v) {
  VirtualCharacter out = v;
  out.add(trivial_label(v.group()), -v.coefficient(trivial_label(v.group())));
  return out;
}

ClassFunction tilde(const ClassFunction& f) {
  const std::complex<double> t = trivial_multiplicity(f);
  const double r = std::round(t.real());
  if (std::abs(t.real() - r) > 1e-9 || std::abs(t.imag()) > 1e-9)
    throw Error(Errc::invalid_argument, "trivial multiplicity is not an integer");
  return f - ClassFunction::constant(f.group(), static_cast<std::int64_t>(r));
}

NumericDecomposition restrict_character(const VirtualCharacter& v, Group sub, int max_index) {
  const Group ambient = v.group();
  if (!embeds(sub, ambient))
    throw Error(Errc::group_mismatch, to_string(sub) + " is not a subgroup of " + to_string(ambient));
  if (max_index < 0) {
    max_index = 0;
    for (const auto& [l, c] : v.coeffs()) max_index = std::max(max_index, char_poly(l).degree());
  }
  const Evaluable ev = v.evaluable();
  return decompose_numeric(sub, [ev, ambient](const ClassPoint& p) { return ev(embed(p, ambient)); }, max_index);
}

RCStats rc_stats(const VirtualCharacter& v) {
  RCStats s;
  for (const auto& [l, c] : v.coeffs()) {
    if (std::abs(c) < kZero) continue;
    if (is_trivial(l)) throw Error(Errc::trivial_present, "trivial character has coefficient " + std::to_string(c.real()));
    ++s.R;
    s.C += std::norm(c);
    s.constituents.push_back({l, c, char_degree(l), char_weight(l)});
  }
  return s;
}

}  // namespace stconv
