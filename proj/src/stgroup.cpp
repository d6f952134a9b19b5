#include "stconv/stgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "stconv/error.hpp"

namespace stconv {

namespace {

constexpr double kPi = std::numbers::pi;

double fold(double theta) {
  double t = std::fmod(theta, 2 * kPi);
  if (t < 0) t += 2 * kPi;
  return t > kPi ? 2 * kPi - t : t;
}

double wrap(double theta) {
  double t = std::fmod(theta, 2 * kPi);
  return t < 0 ? t + 2 * kPi : t;
}

double sin2(double t) {
  const double s = std::sin(t);
  return s * s;
}

}  // namespace

std::string to_string(Group g) {
  switch (g) {
    case Group::U1: return "U1";
    case Group::NU1: return "NU1";
    case Group::SU2: return "SU2";
    case Group::SU2xSU2: return "SU2xSU2";
    case Group::USp4: return "USp4";
  }
  return "?";
}

Group parse_group(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "u1") return Group::U1;
  if (s == "nu1") return Group::NU1;
  if (s == "su2" || s == "usp2") return Group::SU2;
  if (s == "su2xsu2" || s == "g33" || s == "g3,3") return Group::SU2xSU2;
  if (s == "usp4") return Group::USp4;
  throw Error(Errc::invalid_argument, "unknown group '" + std::string(name) + "'");
}

int ambient_genus(Group g) { return (g == Group::SU2xSU2 || g == Group::USp4) ? 2 : 1; }

ClassCoords coords(const ClassPoint& point) {
  ClassCoords c;
  c.component = point.component;
  if (point.group == Group::NU1 && point.component == Component::sigma) {
    c.u = {0.0, 1.0};
    return c;
  }
  c.x = 2 * std::cos(point.angles[0]);
  c.y = ambient_genus(point.group) == 2 ? 2 * std::cos(point.angles[1]) : 0.0;
  c.u = std::polar(1.0, point.angles[0]);
  return c;
}

ClassPoint normalize_g1(const EulerFactor& factor, Group group) {
  if (factor.genus != 1 || ambient_genus(group) != 1)
    throw Error(Errc::group_mismatch, "genus-1 factor needs U1, NU1 or SU2, got " + to_string(group));
  check_weil(factor);
  ClassPoint pt;
  pt.group = group;
  if (group == Group::NU1 && factor.c1 == 0) {
    pt.component = Component::sigma;
    return pt;
  }
  const double z = std::clamp(static_cast<double>(factor.c1) / (2 * std::sqrt(static_cast<double>(factor.norm))),
                              -1.0, 1.0);
  pt.angles[0] = std::acos(z);
  return pt;
}

ClassPoint normalize_g2(const EulerFactor& factor, Group group) {
  if (factor.genus != 2 || ambient_genus(group) != 2)
    throw Error(Errc::group_mismatch, "genus-2 factor needs SU2xSU2 or USp4, got " + to_string(group));
  const auto z = eigen_cosines(factor.c1, factor.c2, factor.norm);
  ClassPoint pt;
  pt.group = group;
  // larger cosine gives the smaller angle
  pt.angles = {std::acos(z[1]), std::acos(z[0])};
  return pt;
}

ClassPoint normalize(const EulerFactor& factor, Group group) {
  return factor.genus == 1 ? normalize_g1(factor, group) : normalize_g2(factor, group);
}

std::array<double, 2> normalized_coefficients(const ClassPoint& point) {
  const ClassCoords c = coords(point);
  if (ambient_genus(point.group) == 1) return {c.x, 1.0};
  return {c.x + c.y, 2.0 + c.x * c.y};
}

double haar_density(const ClassPoint& point) {
  const double a = point.angles[0];
  const double b = point.angles[1];
  switch (point.group) {
    case Group::U1: return 1.0 / kPi;
    case Group::NU1: return point.component == Component::sigma ? 0.5 : 1.0 / (2 * kPi);
    case Group::SU2: return (2.0 / kPi) * sin2(a);
    case Group::SU2xSU2: return (4.0 / (kPi * kPi)) * sin2(a) * sin2(b);
    case Group::USp4: {
      const double d = std::cos(a) - std::cos(b);
      return (8.0 / (kPi * kPi)) * d * d * sin2(a) * sin2(b);
    }
  }
  return 0.0;
}

ClassPoint haar_sample(Group group, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ClassPoint pt;
  pt.group = group;
  switch (group) {
    case Group::U1:
      pt.angles[0] = angle(rng);
      break;
    case Group::NU1:
      if (unit(rng) < 0.5) {
        pt.component = Component::sigma;
      } else {
        pt.angles[0] = angle(rng);
      }
      break;
    case Group::SU2:
      do pt.angles[0] = angle(rng);
      while (unit(rng) >= sin2(pt.angles[0]));
      break;
    case Group::SU2xSU2:
      for (double& t : pt.angles) {
        do t = angle(rng);
        while (unit(rng) >= sin2(t));
      }
      break;
    case Group::USp4: {
      // (cos a - cos b)^2 sin^2 a sin^2 b peaks at 16/27
      constexpr double bound = 16.0 / 27.0;
      for (;;) {
        const double a = angle(rng);
        const double b = angle(rng);
        const double d = std::cos(a) - std::cos(b);
        if (unit(rng) * bound < d * d * sin2(a) * sin2(b)) {
          pt.angles = {std::min(a, b), std::max(a, b)};
          break;
        }
      }
      break;
    }
  }
  return pt;
}

std::vector<ClassPoint> haar_samples(Group group, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ClassPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(haar_sample(group, rng));
  return out;
}

ClassPoint class_power(const ClassPoint& point, int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "class_power needs n >= 1");
  ClassPoint out = point;
  switch (point.group) {
    case Group::U1:
      out.angles[0] = wrap(n * point.angles[0]);
      break;
    case Group::NU1:
      if (point.component == Component::identity) {
        out.angles[0] = wrap(n * point.angles[0]);
      } else if (n % 2 == 0) {
        // (A_u sigma)^2 = -1
        out.component = Component::identity;
        out.angles[0] = (n % 4 == 2) ? kPi : 0.0;
      }
      break;
    case Group::SU2:
      out.angles[0] = fold(n * point.angles[0]);
      break;
    case Group::SU2xSU2:
      out.angles = {fold(n * point.angles[0]), fold(n * point.angles[1])};
      break;
    case Group::USp4: {
      const double a = fold(n * point.angles[0]);
      const double b = fold(n * point.angles[1]);
      out.angles = {std::min(a, b), std::max(a, b)};
      break;
    }
  }
  return out;
}

bool embeds(Group sub, Group ambient) {
  if (sub == ambient) return true;
  if (ambient == Group::USp4) return sub == Group::SU2xSU2;
  if (ambient == Group::SU2) return sub == Group::U1 || sub == Group::NU1;
  return false;
}

ClassPoint embed(const ClassPoint& point, Group ambient) {
  if (!embeds(point.group, ambient))
    throw Error(Errc::group_mismatch, to_string(point.group) + " does not embed in " + to_string(ambient));
  if (point.group == ambient) return point;
  ClassPoint out;
  out.group = ambient;
  if (ambient == Group::USp4) {
    out.angles = {std::min(point.angles[0], point.angles[1]), std::max(point.angles[0], point.angles[1])};
  } else if (point.group == Group::NU1 && point.component == Component::sigma) {
    out.angles[0] = kPi / 2;
  } else {
    out.angles[0] = fold(point.angles[0]);
  }
  return out;
}

}  // namespace stconv
