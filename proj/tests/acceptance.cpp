// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Usage: acceptance [--data DIR] [--only N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stconv/arith.hpp"
#include "stconv/chars.hpp"
#include "stconv/count_kernels.hpp"
#include "stconv/error.hpp"
#include "stconv/predict.hpp"
#include "stconv/stats.hpp"

using namespace stconv;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

CharLabel L(Group g, int i, int j = 0, bool sign = false) { return CharLabel{g, i, j, sign}; }

VirtualCharacter vc(Group g, std::initializer_list<std::pair<CharLabel, double>> terms) {
  VirtualCharacter v(g);
  for (const auto& [l, c] : terms) v.add(l, c);
  return v;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1 ------------------------------------------------------------------------

Outcome decomposition_identities() {
  Outcome o;
  struct Case {
    std::string name;
    ClassFunction f;
    VirtualCharacter want;
  };
  const Group G = Group::USp4;
  const auto one = ClassFunction::constant(G, 1);
  std::vector<Case> cases{
      {"s2 on USp4", power_sum_char(G, 1, 2), vc(G, {{L(G, 2, 0), 1}, {L(G, 1, 1), -1}, {L(G, 0, 0), -1}})},
      {"s3 on USp4", power_sum_char(G, 1, 3), vc(G, {{L(G, 3, 0), 1}, {L(G, 2, 1), -1}})},
      {"a2 - 1", coefficient_char(G, 2) - one, vc(G, {{L(G, 1, 1), 1}})},
      {"a1^2 - 1", moment_char(G, 1, 2) - one, vc(G, {{L(G, 2, 0), 1}, {L(G, 1, 1), 1}})},
      {"s2 + 1", power_sum_char(G, 1, 2) + one, vc(G, {{L(G, 2, 0), 1}, {L(G, 1, 1), -1}})},
      {"a1^3 on USp4", moment_char(G, 1, 3), vc(G, {{L(G, 3, 0), 1}, {L(G, 2, 1), 2}, {L(G, 1, 0), 3}})},
      {"a1^3 on NU1", moment_char(Group::NU1, 1, 3),
       vc(Group::NU1, {{L(Group::NU1, 1), 3}, {L(Group::NU1, 3), 1}})},
      {"a1^3 on SU2", moment_char(Group::SU2, 1, 3),
       vc(Group::SU2, {{L(Group::SU2, 3), 1}, {L(Group::SU2, 1), 2}})},
  };
  for (int n = 4; n <= 10; ++n)
    cases.push_back({"s" + std::to_string(n) + " on USp4", power_sum_char(G, 1, n),
                     vc(G, {{L(G, n, 0), 1}, {L(G, n - 1, 1), -1}, {L(G, n - 3, 1), 1}, {L(G, n - 4, 0), -1}})});
  for (int n = 1; n <= 6; ++n) {
    VirtualCharacter w(Group::SU2);
    for (int k = 0; 2 * k <= n; ++k)
      w.add(L(Group::SU2, n - 2 * k), oracle::binom(n, k) - oracle::binom(n, k - 1));
    cases.push_back({"a1^" + std::to_string(n) + " on SU2", moment_char(Group::SU2, 1, n), w});
  }
  for (int n = 1; n <= 6; ++n) {
    VirtualCharacter w(Group::U1);
    for (int j = 0; j <= n; ++j) w.add(L(Group::U1, n - 2 * j), oracle::binom(n, j));
    cases.push_back({"a1^" + std::to_string(n) + " on U1", moment_char(Group::U1, 1, n), w});
  }
  double worst = 0;
  for (const auto& c : cases) {
    if (!(decompose_exact(c.f) == c.want)) o.fail("exact decomposition of " + c.name);
    const auto num = decompose_numeric(c.f);
    worst = std::max(worst, num.residual);
    if (!(num.character == c.want)) o.fail("numeric decomposition of " + c.name);
    if (!(num.residual < 1e-6)) o.fail(fmt("residual %.2e for %s", num.residual, c.name.c_str()));
  }
  // C of the tilde moments on U1: sum over j < n/2 of 2 C(n, j)^2
  for (int n = 1; n <= 6; ++n) {
    double want = 0;
    for (int j = 0; 2 * j < n; ++j) want += 2 * oracle::binom(n, j) * oracle::binom(n, j);
    const double got = rc_stats(tilde(decompose_exact(moment_char(Group::U1, 1, n)))).C;
    if (got != want) o.fail(fmt("C(a1~^%d) on U1 = %g, expected %g", n, got, want));
  }
  if (o.pass) o.detail = fmt("%zu identities, max numeric residual %.1e", cases.size(), worst);
  return o;
}

// 2 ------------------------------------------------------------------------

Outcome orthonormality() {
  Outcome o;
  double worst = 0;
  std::size_t pairs = 0;
  for (Group g : all_groups) {
    const auto& Q = HaarQuadrature::get(g);
    const auto labels = labels_up_to(g, 6);
    std::vector<std::vector<std::complex<double>>> vals;
    for (const auto& l : labels) vals.push_back(Q.sample(char_poly(l)));
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a; b < labels.size(); ++b) {
        const double want = a == b ? 1.0 : 0.0;
        const double err = std::abs(Q.inner(vals[a], vals[b]) - want);
        worst = std::max(worst, err);
        ++pairs;
        if (err > 1e-8) o.fail(to_string(labels[a]) + " vs " + to_string(labels[b]) + " on " + to_string(g));
      }
  }
  if (o.pass) o.detail = fmt("%zu pairs over 5 groups, max error %.1e", pairs, worst);
  return o;
}

// 3 ------------------------------------------------------------------------

Outcome frobenius_schur() {
  Outcome o;
  std::vector<std::pair<CharLabel, int>> table;
  for (int m = -4; m <= 4; ++m) table.push_back({L(Group::U1, m), m == 0 ? 1 : 0});
  for (int n = 0; n <= 6; ++n) table.push_back({L(Group::SU2, n), n % 2 ? -1 : 1});
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= m && m + n <= 6; ++n) table.push_back({L(Group::USp4, m, n), (m + n) % 2 ? -1 : 1});
  // self-consistency for the component and product groups
  table.push_back({L(Group::NU1, 0), 1});
  table.push_back({L(Group::NU1, 0, 0, true), 1});
  for (int m = 1; m <= 6; ++m) table.push_back({L(Group::NU1, m), m % 2 ? -1 : 1});
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) table.push_back({L(Group::SU2xSU2, i, j), (i + j) % 2 ? -1 : 1});
  double worst = 0;
  for (const auto& [l, want] : table) {
    const double v = fs_index_numeric(l);
    worst = std::max(worst, std::abs(v - want));
    if (std::abs(v - want) > 1e-6) o.fail(fmt("%s: numeric %.9f, expected %d", to_string(l).c_str(), v, want));
    if (fs_index(l) != want) o.fail(to_string(l) + ": fs_index disagrees");
  }
  if (o.pass) o.detail = fmt("%zu characters, max deviation %.1e", table.size(), worst);
  return o;
}

// 4 ------------------------------------------------------------------------

Outcome counting(const std::string& data_dir) {
  Outcome o;
  const char* required[] = {"37.a1", "37.b2", "389.a1", "390.a1", "40.a1", "49.a1", "62127.a.62127.1", "277.a.277.1"};
  std::map<std::string, CurveModel> models;
  for (auto& c : read_curve_file(data_dir + "/curves.jsonl")) models.emplace(c.label(), c);
  std::size_t checked = 0, curves = 0;
  for (const char* label : required) {
    auto it = models.find(label);
    if (it == models.end()) {
      o.fail(std::string("no model for ") + label + " in curves.jsonl");
      continue;
    }
    const CurveModel& c = it->second;
    ++curves;
    for (const auto& f : lpolys(c, 200)) {
      ++checked;
      try {
        check_weil(f);
        if (c.genus() == 1) {
          if (f.c1 != oracle::ec_ap(c.ainvs(), f.norm)) o.fail(fmt("%s: a_p mismatch at p=%llu", label, (unsigned long long)f.norm));
          const double cs = f.c1 / (2 * std::sqrt(double(f.norm)));
          if (!(std::abs(cs) <= 1)) o.fail(fmt("%s: angle not real at p=%llu", label, (unsigned long long)f.norm));
        } else {
          const auto [c1, c2] = oracle::g2_coeffs(c.f(), c.h(), f.norm);
          if (f.c1 != c1 || f.c2 != c2) o.fail(fmt("%s: L-polynomial mismatch at p=%llu", label, (unsigned long long)f.norm));
          const auto z = eigen_cosines(f.c1, f.c2, f.norm);
          if (!(z[0] >= -1 && z[1] <= 1)) o.fail(fmt("%s: angles not real at p=%llu", label, (unsigned long long)f.norm));
        }
      } catch (const Error& e) {
        o.fail(std::string(label) + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = fmt("%zu curves, %zu good primes <= 200 against brute force", curves, checked);
  return o;
}

// 5 ------------------------------------------------------------------------

Outcome worked_values() {
  Outcome o;
  auto expect = [&](const char* what, double got, double want) {
    if (got != want) o.fail(fmt("%s: got %g, expected %g", what, got, want));
  };
  const Group S = Group::SU2, U = Group::USp4, H = Group::SU2xSU2;
  const auto a1 = [](Group g) { return decompose_exact(coefficient_char(g, 1)); };
  expect("rank 1, a1", i1(a1(S), {{L(S, 1), 1}}), 1);
  expect("rank 2, a1", i1(a1(S), {{L(S, 1), 2}}), 9);
  expect("rank 0, a1", i1(a1(S), {{L(S, 1), 0}}), 1);
  expect("rank 1, a1 (again)", i1(a1(S), {{L(S, 1), 1}}), 1);
  const auto cubed = decompose_exact(moment_char(S, 1, 3));
  expect("a1^3 non-CM", i1(cubed, {{L(S, 1), 0}, {L(S, 3), 1}}), 1);
  const auto cubed_cm = decompose_exact(moment_char(Group::NU1, 1, 3));
  expect("a1^3 CM", i1(cubed_cm, {{L(Group::NU1, 1), 0}, {L(Group::NU1, 3), 1}}), 4);
  expect("a1^3 non-CM formula", i1_formula_a1cubed(A1CubedCase::noncm_over_q, 0, 1), 1);
  // with both ranks 0 the displayed CM formula gives 16, not the stated 4
  expect("a1^3 CM formula at ranks (0, 0)", i1_formula_a1cubed(A1CubedCase::cm_over_q, 0, 0), 16);
  expect("a1^3 CM formula", i1_formula_a1cubed(A1CubedCase::cm_over_q, 0, 1), 4);
  // quadratic-field example: the displayed formula, not the stated 144
  expect("a1^3 over K, non-CM (formula gives 169, stated 144)",
         i1_formula_a1cubed(A1CubedCase::noncm_over_k, 2, 4), 169);
  expect("a1^3 over K, CM by K (I1 value, stated under I2)", i1_formula_a1cubed(A1CubedCase::cm_over_k, 2, 4), 256);
  const double g2[] = {1, 1, 9, 25};
  for (int r = 0; r <= 3; ++r)
    expect(fmt("genus 2 rank %d", r).c_str(), i1(a1(U), {{L(U, 1, 0), r}}), g2[r]);
  expect("SU2 chi_1 rank 2", i1(vc(S, {{L(S, 1), 1}}), {{L(S, 1), 2}}), 9);
  expect("SU2xSU2 ranks (1,1)", i1(a1(H), {{L(H, 1, 0), 1}, {L(H, 0, 1), 1}}), 4);
  const auto one = ClassFunction::constant(U, 1);
  const RankProfile r0{{L(U, 1, 1), 0}, {L(U, 2, 0), 0}};
  expect("a2 - 1", i1(decompose_exact(coefficient_char(U, 2) - one), r0), 1);
  expect("a1^2 - 1", i1(decompose_exact(moment_char(U, 1, 2) - one), r0), 4);
  expect("s2 + 1", i1(decompose_exact(power_sum_char(U, 1, 2) + one), r0), 0);
  if (o.pass) o.detail = "all worked values exact";
  o.notes.push_back("quadratic-field a1^3 example: displayed formula (4r + 2r_Sym3 - 3)^2 gives 169 at r = 2, "
                    "r_Sym3 = 4; the stated 144 is not reproduced");
  o.notes.push_back("CM-over-Q a1^3 example: the stated pair (1, 4) needs r_A = 0, r_Sym3 = 1; ranks (0, 0) "
                    "give 9 and 16");
  o.notes.push_back("CM-by-K value 256 is computed as I1 though stated under I2");
  return o;
}

// 6 ------------------------------------------------------------------------

Outcome riemann_oracles() {
  Outcome o;
  double worst = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const auto v = oracle::synthetic(1000 + seed, 400);
    const auto s = build_series(v);
    const double X = static_cast<double>(v.back().first) + 10.5;
    const double a = i_norm(s, X), b = oracle::i_norm_riemann(v, X);
    const double c = bias_mean(s, X).real(), d = oracle::bias_riemann(v, X);
    const double ea = std::abs(a - b) / std::abs(b), ec = std::abs(c - d) / std::max(std::abs(d), 1e-300);
    worst = std::max({worst, ea, ec});
    if (ea > 1e-6) o.fail(fmt("seed %u: i_norm %.12g vs %.12g", seed, a, b));
    if (ec > 1e-6) o.fail(fmt("seed %u: bias_mean %.12g vs %.12g", seed, c, d));
  }
  if (o.pass) o.detail = fmt("20 series, max relative error %.1e", worst);
  return o;
}

// 7 ------------------------------------------------------------------------

Outcome desk_scale(const std::string& data_dir) {
  Outcome o;
  const double X = 1e6;
  std::map<std::string, CurveModel> models;
  for (auto& c : read_curve_file(data_dir + "/curves.jsonl")) models.emplace(c.label(), c);
  const char* labels[] = {"37.a1", "37.b2", "389.a1", "390.a1"};
  std::vector<CurveModel> curves;
  for (const char* l : labels) {
    if (!models.count(l)) {
      o.fail(std::string("no model for ") + l);
      return o;
    }
    curves.push_back(models.at(l));
  }
  const auto factors = ec_lpolys(curves, static_cast<std::uint64_t>(X));
  const auto chi1 = char_poly(L(Group::SU2, 1)).compile();
  const Evaluable phi = [&chi1](const ClassPoint& p) { return chi1.eval(coords(p)); };
  std::map<std::string, double> d, I, B;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto s = build_series(to_classes(factors[k], Group::SU2), phi);
    d[labels[k]] = std::abs(delta(s, X));
    I[labels[k]] = i_norm(s, X);
    B[labels[k]] = bias_mean(s, X).real();
  }
  for (const char* l : {"37.a1", "37.b2"})
    if (!(d[l] < 0.05)) o.fail(fmt("|delta| = %.4f for %s", d[l], l));
  if (!(B["37.a1"] < 0)) o.fail(fmt("bias mean of 37.a1 is %.4f, not negative", B["37.a1"]));
  if (!(I["389.a1"] > I["390.a1"])) o.fail(fmt("I(389.a1) = %.3f does not exceed I(390.a1) = %.3f", I["389.a1"], I["390.a1"]));
  const std::string nums = fmt("X=1e6: |delta| 37.a1 %.4f, 37.b2 %.4f; bias 37.a1 %.3f; I 389.a1 %.3f > 390.a1 %.3f", d["37.a1"],
                 d["37.b2"], B["37.a1"], I["389.a1"], I["390.a1"]);
  o.detail = o.pass ? nums : o.detail + "; " + nums;
  o.notes.push_back(fmt("bias means at 1e6: 37.a1 %.3f, 37.b2 %.3f, 389.a1 %.3f, 390.a1 %.3f", B["37.a1"], B["37.b2"],
                        B["389.a1"], B["390.a1"]));
  o.notes.push_back("run to X = 1e6 only; the reference values 4.08 and 7.67 at X = 2^32 are not reproduced");
  return o;
}

// 8 ------------------------------------------------------------------------

Outcome haar_checks() {
  Outcome o;
  struct Moment {
    Group g;
    double m2, m4;
    std::uint64_t seed;
  };
  const Moment table[] = {{Group::U1, 2, 6, 101},      {Group::NU1, 1, 3, 102},   {Group::SU2, 1, 2, 103},
                          {Group::SU2xSU2, 2, 10, 104}, {Group::USp4, 1, 3, 105}};
  const std::size_t N = 400000;
  for (const auto& m : table) {
    double s2 = 0, s4 = 0, s8 = 0;
    for (const auto& p : haar_samples(m.g, N, m.seed)) {
      const double a = normalized_coefficients(p)[0];
      const double a2 = a * a;
      s2 += a2;
      s4 += a2 * a2;
      s8 += a2 * a2 * a2 * a2;
    }
    const double e2 = s2 / N, e4 = s4 / N;
    const double se2 = std::sqrt((e4 - e2 * e2) / N), se4 = std::sqrt((s8 / N - e4 * e4) / N);
    if (std::abs(e2 - m.m2) > 5 * se2) o.fail(fmt("%s: E[a1^2] = %.4f, expected %g", to_string(m.g).c_str(), e2, m.m2));
    if (std::abs(e4 - m.m4) > 5 * se4) o.fail(fmt("%s: E[a1^4] = %.4f, expected %g", to_string(m.g).c_str(), e4, m.m4));
  }
  double worst = 0;
  for (int n = 1; n <= 20; ++n) {
    const auto rc = rc_stats(tilde(decompose_exact(power_sum_char(Group::USp4, 1, n))));
    worst = std::max(worst, rc.C);
    if (rc.C > 4) o.fail(fmt("C(s~_%d) = %g > 4", n, rc.C));
  }
  if (o.pass) o.detail = fmt("moments within 5 s.e. at N=%zu in 5 groups; max C(s~_n), n<=20: %g", N, worst);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = STCONV_DATA_DIR;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--data") && i + 1 < argc)
      data_dir = argv[++i];
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--data DIR] [--only N]\n", argv[0]);
      return 2;
    }
  }

  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"decomposition identities", 60, decomposition_identities},
      {"orthonormality up to index 6", 120, orthonormality},
      {"Frobenius-Schur indices", 60, frobenius_schur},
      {"point counts vs brute force", 120, [&] { return counting(data_dir); }},
      {"worked I1 values", 1, worked_values},
      {"i_norm and bias_mean vs Riemann sums", 30, riemann_oracles},
      {"rank bias at X = 1e6", 600, [&] { return desk_scale(data_dir); }},
      {"Haar Monte-Carlo and C bound", 120, haar_checks},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only && static_cast<int>(k + 1) != only) continue;
    const auto& c = criteria[k];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.fail(fmt("took %.1fs, budget %.0fs", secs, c.budget_s));
    std::printf("[%s] %zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k + 1, c.name, o.detail.c_str(), secs);
    for (const auto& n : o.notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
