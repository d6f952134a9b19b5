#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stconv/arith.hpp"

namespace stconv {

enum class Group { U1, NU1, SU2, SU2xSU2, USp4 };
enum class Component { identity, sigma };

inline constexpr std::array<Group, 5> all_groups{Group::U1, Group::NU1, Group::SU2, Group::SU2xSU2,
                                                 Group::USp4};

std::string to_string(Group g);
Group parse_group(std::string_view name);
/// 1 for U1, NU1, SU2; 2 for SU2xSU2, USp4.
int ambient_genus(Group g);

/// A conjugacy class given by eigen-angles.
///
/// Genus-1 groups use angles[0] only. U1 and the identity component of NU1
/// accept any representative in [0, 2pi); Frobenius data only fixes cos, so
/// normalization returns the one in [0, pi]. Points of USp4 produced by
/// normalization or sampling are sorted; quadrature nodes need not be.
/// SU2xSU2 keeps (alpha, beta) in factor order.
struct ClassPoint {
  Group group = Group::SU2;
  std::array<double, 2> angles{0.0, 0.0};
  Component component = Component::identity;
};

/// Evaluation coordinates: x = 2cos(alpha), y = 2cos(beta), u = e^{i alpha}.
struct ClassCoords {
  double x = 0;
  double y = 0;
  std::complex<double> u{1.0, 0.0};
  Component component = Component::identity;
};

ClassCoords coords(const ClassPoint& point);

ClassPoint normalize_g1(const EulerFactor& factor, Group group);
ClassPoint normalize_g2(const EulerFactor& factor, Group group);
/// Dispatches on the genus of the factor; GroupMismatch when it does not fit.
ClassPoint normalize(const EulerFactor& factor, Group group);

/// Normalized coefficients (a1, a2) rebuilt from the angles. Genus 1 reports
/// a2 = 1 (the determinant).
std::array<double, 2> normalized_coefficients(const ClassPoint& point);

/// Density of the pushforward of Haar measure in class coordinates (dtheta
/// or dalpha dbeta on [0,pi] / [0,pi]^2). The sigma component of NU1 is an
/// atom and reports its mass 1/2.
double haar_density(const ClassPoint& point);

ClassPoint haar_sample(Group group, std::mt19937_64& rng);
std::vector<ClassPoint> haar_samples(Group group, std::size_t count, std::uint64_t seed);

/// Class of g^n, n >= 1.
ClassPoint class_power(const ClassPoint& point, int n);

/// Image of a subgroup class in the ambient group: SU2xSU2 -> USp4 and
/// U1, NU1 -> SU2. The sigma component of NU1 maps to angle pi/2.
ClassPoint embed(const ClassPoint& point, Group ambient);
bool embeds(Group sub, Group ambient);

}  // namespace stconv
