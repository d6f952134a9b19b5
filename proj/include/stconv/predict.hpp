#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stconv/chars.hpp"

namespace stconv {

/// Analytic ranks r_chi at the central point.
using RankProfile = std::map<CharLabel, int>;
/// Positive ordinates of critical-line zeros, ascending.
using ZeroList = std::map<CharLabel, std::vector<double>>;

/// Throws InvalidArgument when r_chi differs from r_{dual chi} or a rank is negative.
void validate(const RankProfile& ranks);
void validate(const ZeroList& zeros);

/// |sum_chi c_chi (2 r_chi + u_chi)|^2 with u_chi the Frobenius-Schur index.
/// Throws MissingRank when a constituent has no rank.
double i1(const VirtualCharacter& v, const RankProfile& ranks);
/// sum_chi sum_gamma 2 |c_chi|^2 / (1/4 + gamma^2). Missing lists count as empty.
double i2(const VirtualCharacter& v, const ZeroList& zeros);

enum class A1CubedCase { noncm_over_q, cm_over_q, noncm_over_k, cm_over_k };
A1CubedCase parse_a1cubed_case(const std::string& name);
/// (4 r_A + 2 r_Sym3 - offset)^2 with offset 3 (no CM), 4 (CM over Q), 0 (CM by K).
double i1_formula_a1cubed(A1CubedCase c, int r_a, int r_sym3);

struct BoundInputs {
  int degree = 1;        // d_chi
  int field_degree = 1;  // [k:Q]
  double conductor = 1;  // N
  int weight = 0;        // w_chi
  std::array<double, 6> K{1, 1, 1, 1, 1, 1};
  double T = 0;
};

/// S_chi = d_chi [k:Q] log(N (w_chi + 3)).
double s_bound(const BoundInputs& in);
/// max over constituents of S_chi.
double s_phi(const VirtualCharacter& v, int field_degree, double conductor);
/// K6 R S^2 C.
double upper_bound(double R, double S, double C, double K6);
/// K4 d_chi [k:Q] log(N (T + 5)(w_chi + 3)).
double zero_count_bound(const BoundInputs& in, double T, double K4);

/// (r_{E_K}, r_{Sym3(E_K)}) for the base change of E to a quadratic field.
/// With CM by K the twist contributes the same ranks; throws
/// CMConstraintViolation when r_sym3 < r there.
std::pair<int, int> rank_base_change(int r_e, int r_twist, int r_sym3_e, int r_sym3_twist, bool cm_by_k);

/// JSON array of {"label": ..., "rank": n}.
RankProfile read_ranks(const std::string& path, Group group);
/// Plain text: one positive ordinate per line; '#' lines and blanks ignored.
std::vector<double> read_zero_file(const std::string& path);
/// JSON object {"label": "file.txt", ...}; paths relative to the index file.
ZeroList read_zeros(const std::string& path, Group group);

}  // namespace stconv
