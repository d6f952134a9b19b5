// Serial reference kernels against the OpenMP/optimized ones.
//
//   bench_kernels [--ec-bound N] [--g2-bound N] [--repeat K] [--json]

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stconv/arith.hpp"
#include "stconv/chars.hpp"
#include "stconv/count_kernels.hpp"
#include "stconv/stats.hpp"

using namespace stconv;

namespace {

double best_of(int repeat, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stconv kernel benchmark"};
  std::uint64_t ec_bound = 100000, g2_bound = 2000;
  int repeat = 3;
  bool as_json = false;
  app.add_option("--ec-bound", ec_bound, "prime bound for elliptic curves");
  app.add_option("--g2-bound", g2_bound, "prime bound for the genus-2 curve");
  app.add_option("--repeat", repeat, "runs per case (best time kept)")->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "print JSON instead of a table");
  CLI11_PARSE(app, argc, argv);

  const std::vector<CurveModel> ecs{
      CurveModel::elliptic("37.a1", {0, 0, 1, -1, 0}), CurveModel::elliptic("37.b2", {0, 1, 1, -23, -50}),
      CurveModel::elliptic("389.a1", {0, 1, 1, -2, 0}), CurveModel::elliptic("390.a1", {1, 1, 0, -483, -4293})};
  const auto g2 = CurveModel::genus2("277.a.277.1", {0, 0, 0, 0, -1, -1, 0}, {1, 1, 1, 1});

  struct Row {
    std::string name;
    double serial, parallel;
    bool same;
  };
  std::vector<Row> rows;

  {
    std::vector<std::vector<EulerFactor>> a, b;
    const double s = best_of(repeat, [&] { a = ec_lpolys(ecs, ec_bound, Exec::serial); });
    const double p = best_of(repeat, [&] { b = ec_lpolys(ecs, ec_bound, Exec::parallel); });
    rows.push_back({"ec_lpolys x4 to " + std::to_string(ec_bound), s, p, a == b});
  }
  {
    std::vector<EulerFactor> a, b;
    const double s = best_of(repeat, [&] { a = g2_lpolys(g2, g2_bound, default_g2_prime_cap, Exec::serial); });
    const double p = best_of(repeat, [&] { b = g2_lpolys(g2, g2_bound, default_g2_prime_cap, Exec::parallel); });
    rows.push_back({"g2_lpolys to " + std::to_string(g2_bound), s, p, a == b});
  }
  {
    const auto f = power_sum_char(Group::USp4, 1, 8);
    NumericDecomposition a, b;
    const double s = best_of(repeat, [&] { a = decompose_numeric(f, -1, Exec::serial); });
    const double p = best_of(repeat, [&] { b = decompose_numeric(f, -1, Exec::parallel); });
    rows.push_back({"decompose_numeric s8 on USp4", s, p, a.character == b.character});
  }
  {
    const auto pts = haar_samples(Group::USp4, 1000000, 1);
    std::vector<ClassSample> cls;
    cls.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) cls.push_back({i + 2, pts[i]});
    const auto phi = decompose_exact(moment_char(Group::USp4, 1, 3)).evaluable();
    StatSeries a, b;
    const double s = best_of(repeat, [&] { a = build_series(cls, phi, Exec::serial); });
    const double p = best_of(repeat, [&] { b = build_series(cls, phi, Exec::parallel); });
    rows.push_back({"build_series a1^3, 1e6 classes", s, p, a.entries.back().sum == b.entries.back().sum});
  }

  if (as_json) {
    nlohmann::json out{{"threads", worker_threads()}, {"cases", nlohmann::json::array()}};
    for (const auto& r : rows)
      out["cases"].push_back({{"name", r.name}, {"serial_s", r.serial}, {"parallel_s", r.parallel}, {"agree", r.same}});
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("threads: %d\n%-36s %12s %12s %8s %6s\n", worker_threads(), "case", "serial s", "parallel s", "speedup",
                "agree");
    for (const auto& r : rows)
      std::printf("%-36s %12.4f %12.4f %8.2f %6s\n", r.name.c_str(), r.serial, r.parallel, r.serial / r.parallel,
                  r.same ? "yes" : "NO");
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.same;
  return ok ? 0 : 1;
}
