// stconv: Sato-Tate convergence statistics from the command line.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stconv/arith.hpp"
#include "stconv/chars.hpp"
#include "stconv/count_kernels.hpp"
#include "stconv/error.hpp"
#include "stconv/expr.hpp"
#include "stconv/io.hpp"
#include "stconv/predict.hpp"
#include "stconv/stats.hpp"
#include "stconv/stgroup.hpp"
#include "stconv/svg.hpp"

using namespace stconv;
using nlohmann::json;

namespace {

struct Config {
  std::string curve_file;
  std::string label;
  std::uint64_t bound = 100000;
  std::string group;
  std::string character = "a1";
  std::string ranks;
  std::string zeros;
  std::string out;
  std::string svg;
  int checkpoints = 1000;
  bool squared = false;
  std::uint64_t g2_cap = default_g2_prime_cap;
  std::array<double, 6> K{1, 1, 1, 1, 1, 1};
  std::uint64_t seed = 1;
  std::string ingest;
  double X = 0;
  std::size_t count = 10000;
  double conductor = 0;
  int field_degree = 1;
  double T = 0;
  int max_index = -1;
  std::string a1cubed;
  int r_a = 0, r_sym3 = 0;
  std::vector<std::string> inputs;
  bool log_x = false;
  std::string title;
  bool serial = false;
};

Exec exec_of(const Config& c) { return c.serial ? Exec::serial : Exec::parallel; }

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(Errc::invalid_argument, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

CurveModel select_curve(const Config& c) {
  if (c.curve_file.empty()) throw Error(Errc::invalid_argument, "--curve is required");
  auto curves = read_curve_file(c.curve_file);
  if (curves.empty()) throw Error(Errc::invalid_argument, c.curve_file + " holds no curves");
  if (c.label.empty()) {
    if (curves.size() > 1)
      throw Error(Errc::invalid_argument, c.curve_file + " holds several curves; pick one with --label");
    return curves.front();
  }
  for (auto& cv : curves)
    if (cv.label() == c.label) return cv;
  throw Error(Errc::invalid_argument, "no curve labelled '" + c.label + "' in " + c.curve_file);
}

struct Data {
  std::vector<EulerFactor> factors;
  int genus = 1;
  std::string source;
};

Data load_data(const Config& c) {
  Data d;
  if (!c.ingest.empty()) {
    d.factors = ingest_lpoly_file(c.ingest);
    d.genus = d.factors.empty() ? 1 : d.factors.front().genus;
    d.source = c.ingest;
    return d;
  }
  const CurveModel curve = select_curve(c);
  d.factors = lpolys(curve, c.bound, c.g2_cap, exec_of(c));
  d.genus = curve.genus();
  d.source = curve.label();
  return d;
}

Group group_for(const Config& c, int genus) {
  if (!c.group.empty()) {
    const Group g = parse_group(c.group);
    if (ambient_genus(g) != genus)
      throw Error(Errc::group_mismatch, to_string(g) + " does not match genus " + std::to_string(genus) + " data");
    return g;
  }
  return genus == 1 ? Group::SU2 : Group::USp4;
}

Group group_required(const Config& c) {
  if (c.group.empty()) throw Error(Errc::invalid_argument, "--group is required");
  return parse_group(c.group);
}

// Parses --char; the trivial part is removed with a warning.
ClassFunction character_without_trivial(const Config& c, Group g) {
  ClassFunction f = parse_character(c.character, g);
  const auto t = trivial_multiplicity(f);
  if (std::abs(t) > 1e-9) {
    std::cerr << "warning: '" << c.character << "' contains the trivial character with multiplicity " << t.real()
              << " on " << to_string(g) << "; subtracting it\n";
    f = tilde(f);
  }
  return f;
}

StatSeries series_for(const Config& c, Data& d, Group g, const ClassFunction& f) {
  const auto classes = to_classes(d.factors, g);
  const auto cf = f.compile();
  StatSeries s = build_series(classes, [cf](const ClassPoint& p) { return cf.eval(coords(p)); }, exec_of(c));
  s.character = c.character;
  s.curve = d.source;
  return s;
}

json complex_json(std::complex<double> z) {
  if (std::abs(z.imag()) < 1e-12) return z.real();
  return {{"re", z.real()}, {"im", z.imag()}};
}

json coefficient_map(const VirtualCharacter& v) {
  json m = json::object();
  for (const auto& [l, c] : v.coeffs()) m[to_string(l)] = complex_json(c);
  return m;
}

void emit(const Config& c, json j, const RunHeader& h) {
  j["header"] = h.json();
  Output out(c.out);
  out.stream() << j.dump(2) << "\n";
}

int cmd_lpoly(const Config& c, const RunHeader& h) {
  const CurveModel curve = select_curve(c);
  const auto factors = lpolys(curve, c.bound, c.g2_cap, exec_of(c));
  Output out(c.out);
  out.stream() << h.csv_comment() << "\n";
  write_lpoly_csv(out.stream(), factors, curve.genus());
  return 0;
}

int cmd_classes(const Config& c, const RunHeader& h) {
  Data d = load_data(c);
  const Group g = group_for(c, d.genus);
  Output out(c.out);
  auto& os = out.stream();
  os.precision(17);
  os << h.csv_comment() << "\n";
  os << (d.genus == 1 ? "norm,angle1,component" : "norm,angle1,angle2,component") << "\n";
  for (const auto& s : to_classes(d.factors, g)) {
    os << s.norm << "," << s.point.angles[0];
    if (d.genus == 2) os << "," << s.point.angles[1];
    os << "," << (s.point.component == Component::sigma ? "sigma" : "identity") << "\n";
  }
  return 0;
}

int cmd_delta(const Config& c, const RunHeader& h) {
  Data d = load_data(c);
  const Group g = group_for(c, d.genus);
  const ClassFunction f = character_without_trivial(c, g);
  const StatSeries s = series_for(c, d, g, f);
  const auto samples = sample_delta(s, c.checkpoints);
  {
    Output out(c.out);
    write_delta_csv(out.stream(), samples, c.squared, !f.is_selfdual(), h);
  }
  if (!c.svg.empty()) {
    PlotSeries ps{d.source + " " + c.character, {}, {}};
    for (const auto& p : samples) {
      ps.x.push_back(p.x);
      ps.y.push_back(c.squared ? std::norm(p.delta) : p.delta.real());
    }
    std::ofstream svg(c.svg);
    if (!svg) throw Error(Errc::invalid_argument, "cannot write " + c.svg);
    PlotOptions opt;
    opt.title = c.title.empty() ? (c.squared ? "delta(" + c.character + ",x)^2" : "delta(" + c.character + ",x)")
                                : c.title;
    opt.y_label = c.squared ? "delta^2" : "delta";
    opt.log_x = c.log_x;
    write_svg(svg, {ps}, opt);
  }
  return 0;
}

// Shared by ipnorm and bias.
int cmd_scalar(const Config& c, const RunHeader& h, bool bias) {
  Data d = load_data(c);
  const Group g = group_for(c, d.genus);
  const ClassFunction f = character_without_trivial(c, g);
  const StatSeries s = series_for(c, d, g, f);
  if (s.empty()) throw Error(Errc::empty_series, "no good primes up to the bound");
  const double X = c.X > 0 ? c.X : static_cast<double>(s.entries.back().norm);
  json j;
  j["curve"] = d.source;
  j["group"] = to_string(g);
  j["character"] = c.character;
  j["X"] = X;
  j["primes"] = s.entries[std::max<std::ptrdiff_t>(entry_at(s, X), 0)].count;
  if (bias)
    j["value"] = complex_json(bias_mean(s, X));
  else
    j["value"] = i_norm(s, X);
  const VirtualCharacter v = decompose_exact(f);
  j["decomposition"] = coefficient_map(v);
  j["predicted_i1"] = nullptr;
  j["predicted_i2_truncated"] = nullptr;
  if (!c.ranks.empty()) {
    const RankProfile r = read_ranks(c.ranks, g);
    const double p = i1(v, r);
    j["predicted_i1"] = p;
    if (bias) {
      // the bias mean tends to -sum c (2r + u)
      std::complex<double> acc = 0;
      for (const auto& [l, coef] : v.coeffs()) {
        auto it = r.find(l);
        if (it == r.end()) it = r.find(dual(l));
        if (it == r.end()) throw Error(Errc::missing_rank, "no rank given for " + to_string(l));
        acc += coef * static_cast<double>(2 * it->second + fs_index(l));
      }
      j["predicted_bias"] = complex_json(-acc);
    }
  }
  if (!c.zeros.empty()) j["predicted_i2_truncated"] = i2(v, read_zeros(c.zeros, g));
  emit(c, j, h);
  return 0;
}

int cmd_decompose(const Config& c, const RunHeader& h) {
  const Group g = group_required(c);
  const ClassFunction f = parse_character(c.character, g);
  json j;
  j["group"] = to_string(g);
  j["character"] = c.character;
  j["polynomial"] = f.to_string();
  const VirtualCharacter exact = decompose_exact(f);
  j["exact"] = coefficient_map(exact);
  const NumericDecomposition num = decompose_numeric(f, c.max_index, exec_of(c));
  j["numeric"] = coefficient_map(num.character);
  j["residual"] = num.residual;
  j["trivial_multiplicity"] = complex_json(exact.coefficient(trivial_label(g)));
  const RCStats rc = rc_stats(tilde(exact));
  j["tilde"] = {{"R", rc.R}, {"C", rc.C}};
  j["vchar"] = to_json(exact);
  emit(c, j, h);
  return 0;
}

int cmd_fs(const Config& c, const RunHeader& h) {
  const Group g = group_required(c);
  const CharLabel l = parse_label(c.character, g);
  json j;
  j["group"] = to_string(g);
  j["label"] = to_string(l);
  j["fs_index"] = fs_index(l);
  j["fs_numeric"] = fs_index_numeric(l);
  emit(c, j, h);
  return 0;
}

int cmd_predict(const Config& c, const RunHeader& h) {
  json j;
  if (!c.a1cubed.empty()) {
    j["case"] = c.a1cubed;
    j["r_A"] = c.r_a;
    j["r_Sym3"] = c.r_sym3;
    j["i1"] = i1_formula_a1cubed(parse_a1cubed_case(c.a1cubed), c.r_a, c.r_sym3);
    emit(c, j, h);
    return 0;
  }
  const Group g = group_required(c);
  const VirtualCharacter v = decompose_exact(parse_character(c.character, g));
  j["group"] = to_string(g);
  j["character"] = c.character;
  j["decomposition"] = coefficient_map(v);
  if (c.ranks.empty()) throw Error(Errc::missing_rank, "--ranks is required");
  j["i1"] = i1(v, read_ranks(c.ranks, g));
  j["i2_truncated"] = c.zeros.empty() ? json(nullptr) : json(i2(v, read_zeros(c.zeros, g)));
  emit(c, j, h);
  return 0;
}

int cmd_bound(const Config& c, const RunHeader& h) {
  const Group g = group_required(c);
  if (!(c.conductor > 0)) throw Error(Errc::invalid_argument, "--conductor is required");
  const VirtualCharacter v = tilde(decompose_exact(parse_character(c.character, g)));
  const RCStats rc = rc_stats(v);
  const double S = s_phi(v, c.field_degree, c.conductor);
  json j;
  j["group"] = to_string(g);
  j["character"] = c.character;
  j["R"] = rc.R;
  j["C"] = rc.C;
  j["S"] = S;
  j["K"] = c.K;
  j["upper_bound"] = upper_bound(rc.R, S, rc.C, c.K[5]);
  json per = json::array();
  for (const auto& k : rc.constituents) {
    BoundInputs in;
    in.degree = k.degree;
    in.weight = k.weight;
    in.field_degree = c.field_degree;
    in.conductor = c.conductor;
    per.push_back({{"label", to_string(k.label)},
                   {"coefficient", complex_json(k.coefficient)},
                   {"d", k.degree},
                   {"w", k.weight},
                   {"S", s_bound(in)},
                   {"zero_count_bound", zero_count_bound(in, c.T, c.K[3])}});
  }
  j["constituents"] = per;
  j["note"] = "K1..K6 are unspecified absolute constants; values scale with them";
  emit(c, j, h);
  return 0;
}

int cmd_sample(const Config& c, const RunHeader& h) {
  const Group g = group_required(c);
  Output out(c.out);
  auto& os = out.stream();
  os.precision(17);
  os << h.csv_comment() << "\n";
  os << (ambient_genus(g) == 1 ? "angle1,component" : "angle1,angle2,component") << "\n";
  for (const auto& p : haar_samples(g, c.count, c.seed)) {
    os << p.angles[0];
    if (ambient_genus(g) == 2) os << "," << p.angles[1];
    os << "," << (p.component == Component::sigma ? "sigma" : "identity") << "\n";
  }
  return 0;
}

// Two numeric columns per file; the first header line and '#' lines are skipped.
PlotSeries read_xy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  PlotSeries s{std::filesystem::path(path).stem().string(), {}, {}};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double x, y;
    if (!(ls >> x >> y)) throw Error(Errc::parse_error, path + ": malformed row '" + line + "'");
    s.x.push_back(x);
    s.y.push_back(y);
  }
  return s;
}

int cmd_plot(const Config& c, const RunHeader&) {
  if (c.inputs.empty()) throw Error(Errc::invalid_argument, "--in is required");
  std::vector<PlotSeries> series;
  for (const auto& p : c.inputs) series.push_back(read_xy(p));
  PlotOptions opt;
  opt.title = c.title;
  opt.log_x = c.log_x;
  const std::string path = !c.svg.empty() ? c.svg : c.out;
  Output out(path);
  write_svg(out.stream(), series, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sato-Tate convergence statistics for elliptic curves and abelian surfaces"};
  app.set_version_flag("--version", std::string("stconv ") + stconv::version);
  app.require_subcommand(1);
  Config c;

  auto data_opts = [&](CLI::App* s) {
    s->add_option("--curve", c.curve_file, "curve file (JSON lines)");
    s->add_option("--label", c.label, "curve label inside the curve file");
    s->add_option("--bound", c.bound, "count primes up to this bound")->check(CLI::Range(2ull, 1ull << 40));
    s->add_option("--g2-cap", c.g2_cap, "largest prime counted for genus-2 curves");
    s->add_option("--ingest", c.ingest, "read L-polynomials from CSV instead of counting");
    s->add_option("--group", c.group, "Sato-Tate group: U1, NU1, SU2, SU2xSU2, USp4");
    s->add_flag("--serial", c.serial, "use the serial reference kernels");
  };
  auto out_opt = [&](CLI::App* s) { s->add_option("--out", c.out, "output file (default stdout)"); };
  auto char_opt = [&](CLI::App* s) {
    s->add_option("--char", c.character, "character expression, e.g. a1^3, s2+1, chi_{1,1}");
  };
  auto rank_opts = [&](CLI::App* s) {
    s->add_option("--ranks", c.ranks, "JSON ranks file");
    s->add_option("--zeros", c.zeros, "JSON zero index (label -> text file)");
  };

  auto* lpoly = app.add_subcommand("lpoly", "L-polynomials by point counting");
  data_opts(lpoly);
  out_opt(lpoly);

  auto* classes = app.add_subcommand("classes", "normalized conjugacy classes");
  data_opts(classes);
  out_opt(classes);

  auto* del = app.add_subcommand("delta", "delta(phi, x) series as CSV / SVG");
  data_opts(del);
  out_opt(del);
  char_opt(del);
  del->add_option("--svg", c.svg, "also write an SVG plot");
  del->add_option("--checkpoints", c.checkpoints, "log-spaced sample count; 0 for every norm");
  del->add_flag("--squared", c.squared, "write |delta|^2");
  del->add_flag("--log-x", c.log_x, "log-scaled x axis in the SVG");
  del->add_option("--title", c.title, "SVG title");

  auto* ip = app.add_subcommand("ipnorm", "I(phi, X)");
  data_opts(ip);
  out_opt(ip);
  char_opt(ip);
  rank_opts(ip);
  ip->add_option("--X", c.X, "upper limit (default: last norm)");

  auto* bias = app.add_subcommand("bias", "mean of psi(phi, x) against dx/x");
  data_opts(bias);
  out_opt(bias);
  char_opt(bias);
  rank_opts(bias);
  bias->add_option("--X", c.X, "upper limit (default: last norm)");

  auto* dec = app.add_subcommand("decompose", "decompose a character into irreducibles");
  dec->add_option("--group", c.group)->required();
  char_opt(dec);
  out_opt(dec);
  dec->add_option("--max-index", c.max_index, "largest label index for the numeric decomposition");
  dec->add_flag("--serial", c.serial);

  auto* fs = app.add_subcommand("fs", "Frobenius-Schur index of an irreducible character");
  fs->add_option("--group", c.group)->required();
  fs->add_option("--char", c.character, "irreducible label, e.g. chi_1, chi_{2,1}, rho_3")->required();
  out_opt(fs);

  auto* pred = app.add_subcommand("predict", "I1 and I2 from ranks and zeros");
  pred->add_option("--group", c.group);
  char_opt(pred);
  rank_opts(pred);
  out_opt(pred);
  pred->add_option("--a1cubed", c.a1cubed, "closed form for a1^3: noncm-q, cm-q, noncm-k, cm-k");
  pred->add_option("--rA", c.r_a, "analytic rank of A");
  pred->add_option("--rSym3", c.r_sym3, "analytic rank of Sym^3 A");

  auto* bnd = app.add_subcommand("bound", "explicit upper bound K6 R S^2 C");
  bnd->add_option("--group", c.group)->required();
  char_opt(bnd);
  out_opt(bnd);
  bnd->add_option("--conductor", c.conductor, "conductor norm N")->required();
  bnd->add_option("--field-degree", c.field_degree, "[k:Q]");
  bnd->add_option("--T", c.T, "height for the zero count bound");
  for (int i = 0; i < 6; ++i)
    bnd->add_option("--K" + std::to_string(i + 1), c.K[i], "constant K" + std::to_string(i + 1));

  auto* smp = app.add_subcommand("sample", "Haar-random conjugacy classes");
  smp->add_option("--group", c.group)->required();
  smp->add_option("--count", c.count);
  smp->add_option("--seed", c.seed);
  out_opt(smp);

  auto* plot = app.add_subcommand("plot", "SVG line plot of x,y CSV files");
  plot->add_option("--in", c.inputs, "CSV files with x,y columns")->required();
  plot->add_option("--svg", c.svg, "output SVG (or --out)");
  out_opt(plot);
  plot->add_flag("--log-x", c.log_x);
  plot->add_option("--title", c.title);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const RunHeader h = RunHeader::make(sub->get_name() + "\n" + sub->config_to_str(false, false), c.seed);
    const std::string name = sub->get_name();
    if (name == "lpoly") return cmd_lpoly(c, h);
    if (name == "classes") return cmd_classes(c, h);
    if (name == "delta") return cmd_delta(c, h);
    if (name == "ipnorm") return cmd_scalar(c, h, false);
    if (name == "bias") return cmd_scalar(c, h, true);
    if (name == "decompose") return cmd_decompose(c, h);
    if (name == "fs") return cmd_fs(c, h);
    if (name == "predict") return cmd_predict(c, h);
    if (name == "bound") return cmd_bound(c, h);
    if (name == "sample") return cmd_sample(c, h);
    if (name == "plot") return cmd_plot(c, h);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
