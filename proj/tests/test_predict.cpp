#include <cmath>
#include <filesystem>
#include <fstream>

#include "stconv/chars.hpp"
#include "stconv/predict.hpp"
#include "support.hpp"

using namespace stconv;

namespace {

CharLabel L(Group g, int i, int j = 0, bool sign = false) { return CharLabel{g, i, j, sign}; }

VirtualCharacter a1(Group g) { return decompose_exact(coefficient_char(g, 1)); }

std::filesystem::path scratch_dir() {
  auto d = std::filesystem::temp_directory_path() / "stconv_test_predict";
  std::filesystem::create_directories(d);
  return d;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("predict") {

TEST_CASE("elliptic curves over Q with phi = a1") {
  const Group G = Group::SU2;
  CHECK(i1(a1(G), {{L(G, 1), 1}}) == 1);  // rank 1
  CHECK(i1(a1(G), {{L(G, 1), 2}}) == 9);  // rank 2
  CHECK(i1(a1(G), {{L(G, 1), 0}}) == 1);
}

TEST_CASE("rank 0 and rank 1 give the same I1") {
  const Group G = Group::SU2;
  CHECK(i1(a1(G), {{L(G, 1), 0}}) == i1(a1(G), {{L(G, 1), 1}}));
}

TEST_CASE("a1^3 without and with CM over Q") {
  // a1^3 = 2 chi_1 + chi_3 on SU2; with r_A = 0 and r_Sym3 = 1
  const Group G = Group::SU2;
  const auto cubed = decompose_exact(moment_char(G, 1, 3));
  CHECK(i1(cubed, {{L(G, 1), 0}, {L(G, 3), 1}}) == 1);
  CHECK(i1_formula_a1cubed(A1CubedCase::noncm_over_q, 0, 1) == 1);
  CHECK(i1_formula_a1cubed(A1CubedCase::cm_over_q, 0, 1) == 4);
  // CM: a1^3 on NU1 is 3 rho_1 + rho_3, both with u = -1, so the constant is -4
  const Group N = Group::NU1;
  const auto nu = decompose_exact(moment_char(N, 1, 3));
  CHECK(i1(nu, {{L(N, 1), 0}, {L(N, 3), 1}}) == 4);
}

TEST_CASE("a1^3 over Q: worked pair (1, 4) holds only with r_Sym3 = 1; displayed CM formula at ranks (0, 0) gives 16") {
  CHECK(i1_formula_a1cubed(A1CubedCase::noncm_over_q, 0, 0) == 9);
  CHECK(i1_formula_a1cubed(A1CubedCase::cm_over_q, 0, 0) == 16);
  CHECK(i1_formula_a1cubed(A1CubedCase::noncm_over_q, 0, 1) == 1);
  CHECK(i1_formula_a1cubed(A1CubedCase::cm_over_q, 0, 1) == 4);
}

TEST_CASE("a1^3 over a quadratic field: displayed formula gives 169 where the worked example states 144") {
  // r = 2, r_Sym3 = 4: (4*2 + 2*4 - 3)^2 = 13^2
  CHECK(i1_formula_a1cubed(A1CubedCase::noncm_over_k, 2, 4) == 169);
  CHECK(i1_formula_a1cubed(A1CubedCase::noncm_over_k, 2, 4) != 144);
}

TEST_CASE("a1^3 with CM by K: the worked value 256 is an I1 value although labelled I2") {
  CHECK(i1_formula_a1cubed(A1CubedCase::cm_over_k, 2, 4) == 256);
  CHECK(i1_formula_a1cubed(A1CubedCase::cm_over_k, 0, 0) == 0);
  CHECK_ERRC(i1_formula_a1cubed(A1CubedCase::cm_over_k, -1, 0), Errc::invalid_argument);
}

TEST_CASE("genus 2 with a1 on USp4") {
  const Group G = Group::USp4;
  const double want[] = {1, 1, 9, 25};
  for (int r = 0; r <= 3; ++r) CHECK(i1(a1(G), {{L(G, 1, 0), r}}) == want[r]);
}

TEST_CASE("SU2 and SU2xSU2 examples") {
  CHECK(i1(VirtualCharacter(Group::SU2) += [] {
    VirtualCharacter v(Group::SU2);
    v.add(L(Group::SU2, 1), 1);
    return v;
  }(), {{L(Group::SU2, 1), 2}}) == 9);
  const Group H = Group::SU2xSU2;
  CHECK(i1(a1(H), {{L(H, 1, 0), 1}, {L(H, 0, 1), 1}}) == 4);
}

TEST_CASE("even-weight characters on USp4") {
  const Group G = Group::USp4;
  const auto one = ClassFunction::constant(G, 1);
  const RankProfile r0{{L(G, 1, 1), 0}, {L(G, 2, 0), 0}};
  CHECK(i1(decompose_exact(coefficient_char(G, 2) - one), r0) == 1);
  CHECK(i1(decompose_exact(moment_char(G, 1, 2) - one), r0) == 4);
  CHECK(i1(decompose_exact(power_sum_char(G, 1, 2) + one), r0) == 0);
}

TEST_CASE("i1 resolves dual labels and reports missing ranks") {
  const Group U = Group::U1;
  VirtualCharacter v(U);
  v.add(L(U, 1), 1);
  v.add(L(U, -1), 1);
  CHECK(i1(v, {{L(U, 1), 1}}) == 16);  // (2 + 2)^2, u = 0 for nu_1
  CHECK_ERRC(i1(v, {{L(U, 3), 1}}), Errc::missing_rank);
  CHECK_ERRC(i1(v, {{L(U, 1), 1}, {L(U, -1), 2}}), Errc::invalid_argument);
  CHECK_ERRC(i1(a1(Group::SU2), {{L(Group::SU2, 1), -1}}), Errc::invalid_argument);
}

TEST_CASE("i2") {
  const Group G = Group::SU2;
  CHECK(i2(a1(G), {}) == 0);
  CHECK(i2(a1(G), {{L(G, 1), {0.5}}}) == doctest::Approx(2 / 0.5));
  const double g1 = 5.0039, g2 = 6.8703;
  CHECK(i2(a1(G), {{L(G, 1), {g1, g2}}}) ==
        doctest::Approx(2 / (0.25 + g1 * g1) + 2 / (0.25 + g2 * g2)));
  VirtualCharacter v(G);
  v.add(L(G, 1), 3);
  CHECK(i2(v, {{L(G, 1), {1.0}}}) == doctest::Approx(9 * 2 / 1.25));
  CHECK_ERRC(i2(v, {{L(G, 1), {2.0, 1.0}}}), Errc::invalid_argument);
  CHECK_ERRC(i2(v, {{L(G, 1), {-1.0}}}), Errc::invalid_argument);
}

TEST_CASE("bounds") {
  BoundInputs in;
  in.degree = 2;
  in.field_degree = 1;
  in.conductor = 37;
  in.weight = 1;
  CHECK(s_bound(in) == doctest::Approx(2 * std::log(37.0 * 4)));
  CHECK(s_phi(a1(Group::SU2), 1, 37) == doctest::Approx(2 * std::log(37.0 * 4)));
  // S_phi is the maximum over constituents
  const auto cubed = decompose_exact(moment_char(Group::SU2, 1, 3));
  CHECK(s_phi(cubed, 1, 37) == doctest::Approx(4 * std::log(37.0 * 6)));
  CHECK(upper_bound(2, 3, 5, 1) == 90);
  CHECK(zero_count_bound(in, 10, 1) == doctest::Approx(2 * std::log(37.0 * 15 * 4)));
  in.conductor = 0;
  CHECK_ERRC(s_bound(in), Errc::invalid_argument);
  CHECK_ERRC(upper_bound(-1, 1, 1, 1), Errc::invalid_argument);
}

TEST_CASE("base change ranks") {
  CHECK(rank_base_change(1, 1, 2, 2, false) == std::pair{2, 4});
  CHECK(rank_base_change(1, 0, 1, 0, false) == std::pair{1, 1});
  CHECK(rank_base_change(1, 1, 2, 2, true) == std::pair{2, 4});
  CHECK_ERRC(rank_base_change(2, 2, 1, 1, true), Errc::cm_constraint_violation);
  CHECK_ERRC(rank_base_change(-1, 0, 0, 0, false), Errc::invalid_argument);
}

TEST_CASE("case names") {
  CHECK(parse_a1cubed_case("noncm-q") == A1CubedCase::noncm_over_q);
  CHECK(parse_a1cubed_case("cm-k") == A1CubedCase::cm_over_k);
  CHECK_ERRC(parse_a1cubed_case("cm"), Errc::invalid_argument);
}

TEST_CASE("rank and zero files") {
  const auto d = scratch_dir();
  write(d / "ranks.json", R"([{"label": "chi_1", "rank": 2}, {"label": "chi_3", "rank": 0}])");
  const auto r = read_ranks((d / "ranks.json").string(), Group::SU2);
  CHECK(r.at(L(Group::SU2, 1)) == 2);
  CHECK(r.at(L(Group::SU2, 3)) == 0);
  write(d / "obj.json", R"({"curve": "x", "ranks": [{"label": "chi_{1,0}", "rank": 1}]})");
  CHECK(read_ranks((d / "obj.json").string(), Group::USp4).at(L(Group::USp4, 1, 0)) == 1);
  write(d / "bad.json", R"([{"label": "chi_1"}])");
  CHECK_ERRC(read_ranks((d / "bad.json").string(), Group::SU2), Errc::parse_error);
  write(d / "neg.json", R"([{"label": "chi_1", "rank": -2}])");
  CHECK_ERRC(read_ranks((d / "neg.json").string(), Group::SU2), Errc::invalid_argument);
  CHECK_ERRC(read_ranks((d / "missing.json").string(), Group::SU2), Errc::invalid_argument);

  write(d / "z1.txt", "# zeros\n5.0039\n\n6.8703\n");
  write(d / "zeros.json", R"({"chi_1": "z1.txt"})");
  const auto z = read_zeros((d / "zeros.json").string(), Group::SU2);
  CHECK(z.at(L(Group::SU2, 1)) == std::vector<double>{5.0039, 6.8703});
  write(d / "z2.txt", "1.0 2.0\n");
  CHECK_ERRC(read_zero_file((d / "z2.txt").string()), Errc::parse_error);
  write(d / "z3.txt", "3.0\n1.0\n");
  write(d / "zeros3.json", R"({"chi_1": "z3.txt"})");
  CHECK_ERRC(read_zeros((d / "zeros3.json").string(), Group::SU2), Errc::invalid_argument);
}

}
