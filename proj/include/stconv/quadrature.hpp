#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "stconv/class_function.hpp"
#include "stconv/count_kernels.hpp"
#include "stconv/stgroup.hpp"

namespace stconv {

using Evaluable = std::function<std::complex<double>(const ClassPoint&)>;

inline constexpr int default_quadrature_nodes = 512;

/// Gauss-Legendre nodes and weights on [a, b].
std::vector<std::pair<double, double>> gauss_legendre(int n, double a, double b);

/// Pairwise (cascade) summation; the split points depend only on the length,
/// so results are reproducible for a fixed input.
double pairwise_sum(std::span<const double> v);

struct QuadNode {
  ClassPoint point;
  ClassCoords coords;
  double weight = 0;
};

/// Weighted node set integrating class functions against Haar measure.
///
/// SU2 uses n Gauss-Legendre nodes on [0,pi] with the sin^2 density folded
/// into the weights; SU2xSU2 and USp4 use the n x n tensor grid on [0,pi]^2.
/// U1 and the identity component of NU1 are integrated over the full circle
/// [0, 2pi): the half circle only sees cos and would lose orthogonality of
/// nu_m against nu_{-m}. The sigma component of NU1 is a single node of mass 1/2.
class HaarQuadrature {
 public:
  HaarQuadrature(Group group, int nodes = default_quadrature_nodes);

  /// Shared instance per (group, nodes).
  static const HaarQuadrature& get(Group group, int nodes = default_quadrature_nodes);

  Group group() const noexcept { return group_; }
  std::span<const QuadNode> nodes() const noexcept { return nodes_; }

  std::vector<std::complex<double>> sample(const Evaluable& f, Exec exec = Exec::parallel) const;
  std::vector<std::complex<double>> sample(const ClassFunction& f, Exec exec = Exec::parallel) const;

  /// Sum of weight * value.
  std::complex<double> integrate(std::span<const std::complex<double>> values) const;
  /// Integral of a * conj(b).
  std::complex<double> inner(std::span<const std::complex<double>> a,
                             std::span<const std::complex<double>> b) const;

  std::complex<double> integrate(const Evaluable& f, Exec exec = Exec::parallel) const {
    return integrate(sample(f, exec));
  }

 private:
  Group group_;
  std::vector<QuadNode> nodes_;
};

}  // namespace stconv
