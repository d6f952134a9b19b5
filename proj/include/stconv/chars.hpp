#pragma once

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stconv/class_function.hpp"
#include "stconv/quadrature.hpp"
#include "stconv/stgroup.hpp"

namespace stconv {

/// Irreducible character label.
///
///  U1       nu_i            i in Z
///  NU1      rho_i (i >= 1), triv (i = 0), sign (i = 0, sign = true)
///  SU2      chi_i           i >= 0
///  SU2xSU2  chi_i x chi_j   i, j >= 0
///  USp4     chi_{i,j}       i >= j >= 0
struct CharLabel {
  Group group = Group::SU2;
  int i = 0;
  int j = 0;
  bool sign = false;

  friend auto operator<=>(const CharLabel&, const CharLabel&) = default;
};

CharLabel trivial_label(Group g);
bool is_trivial(const CharLabel& l);
/// Throws InvalidArgument when indices are out of range for the group.
void validate(const CharLabel& l);
/// Label of the complex conjugate character.
CharLabel dual(const CharLabel& l);

std::string to_string(const CharLabel& l);
/// Accepts the forms produced by to_string plus chi_{m,n} spacing variants,
/// nu_{-3} and chi_1xchi_2.
CharLabel parse_label(std::string_view text, Group g);

/// Exact polynomial of an irreducible character (cached, thread-safe).
const ClassFunction& char_poly(const CharLabel& l);
std::complex<double> eval_char(const CharLabel& l, const ClassPoint& p);
/// Dimension d_chi.
int char_degree(const CharLabel& l);
/// Weight w_chi: i for SU2 and NU1, |i| for U1, i + j otherwise.
int char_weight(const CharLabel& l);

/// Every label whose indices are bounded by max_index.
std::vector<CharLabel> labels_up_to(Group g, int max_index);

/// Finite complex combination of irreducible characters of one group.
class VirtualCharacter {
 public:
  explicit VirtualCharacter(Group g = Group::SU2) : group_(g) {}

  Group group() const noexcept { return group_; }
  const std::map<CharLabel, std::complex<double>>& coeffs() const noexcept { return coeffs_; }
  std::complex<double> coefficient(const CharLabel& l) const;
  /// Adds c to the coefficient of l; entries that cancel are removed.
  void add(const CharLabel& l, std::complex<double> c);

  bool selfdual(double tol = 1e-12) const;
  std::complex<double> eval(const ClassPoint& p) const;
  Evaluable evaluable() const;
  /// Exact class function; needs integer coefficients.
  ClassFunction to_class_function() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(std::complex<double> c);

  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

 private:
  Group group_;
  std::map<CharLabel, std::complex<double>> coeffs_;
};

std::string to_string(const VirtualCharacter& v);

/// a_k: trace on the k-th exterior power of the standard representation (k = 1, 2).
ClassFunction coefficient_char(Group g, int k);
/// a_k^n.
ClassFunction moment_char(Group g, int k, int n);
/// s_n^k: trace of Lambda^k V evaluated at g^n.
ClassFunction power_sum_char(Group g, int k, int n);

/// Exact decomposition of an integer class function into irreducibles.
VirtualCharacter decompose_exact(const ClassFunction& f);

struct NumericDecomposition {
  VirtualCharacter character;
  /// Quadrature value of ||f - sum c chi||^2 with the unrounded coefficients.
  double residual = 0;
};

/// Coefficients <f, chi> over labels up to max_index, rounded to integers
/// when within 1e-6. Throws ResidualTooLarge when the residual exceeds 1e-4.
NumericDecomposition decompose_numeric(Group g, const Evaluable& f, int max_index,
                                       Exec exec = Exec::parallel);
NumericDecomposition decompose_numeric(const ClassFunction& f, int max_index = -1,
                                       Exec exec = Exec::parallel);

/// Frobenius-Schur index from the closed-form table (+1, 0, -1).
int fs_index(const CharLabel& l);
/// Quadrature of chi(g^2).
double fs_index_numeric(const CharLabel& l);

/// Multiplicity of the trivial character (integral against Haar measure),
/// rounded to an integer when within 1e-6.
std::complex<double> trivial_multiplicity(Group g, const Evaluable& f);
std::complex<double> trivial_multiplicity(const ClassFunction& f);

/// phi minus its trivial part.
VirtualCharacter tilde(const VirtualCharacter& v);
ClassFunction tilde(const ClassFunction& f);

/// Restriction of a character of `ambient` to `sub`, decomposed numerically.
NumericDecomposition restrict_character(const VirtualCharacter& v, Group sub, int max_index = -1);

struct Constituent {
  CharLabel label;
  std::complex<double> coefficient;
  int degree = 0;
  int weight = 0;
};

struct RCStats {
  int R = 0;
  double C = 0;
  std::vector<Constituent> constituents;
};

/// Number of constituents and sum of squared coefficients. Throws
/// TrivialPresent when the trivial character occurs.
RCStats rc_stats(const VirtualCharacter& v);

}  // namespace stconv
