#include "stconv/predict.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stconv/error.hpp"

namespace stconv {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  return in;
}

void require_positive(double v, const char* name) {
  if (!(v > 0)) throw Error(Errc::invalid_argument, std::string(name) + " must be positive");
}

}  // namespace

void validate(const RankProfile& ranks) {
  for (const auto& [l, r] : ranks) {
    if (r < 0) throw Error(Errc::invalid_argument, "negative rank for " + to_string(l));
    auto it = ranks.find(dual(l));
    if (it != ranks.end() && it->second != r)
      throw Error(Errc::invalid_argument, "ranks of " + to_string(l) + " and its dual differ");
  }
}

void validate(const ZeroList& zeros) {
  for (const auto& [l, g] : zeros) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(g[i] > 0)) throw Error(Errc::invalid_argument, "nonpositive zero ordinate for " + to_string(l));
      if (i > 0 && g[i] < g[i - 1]) throw Error(Errc::invalid_argument, "zeros of " + to_string(l) + " not ascending");
    }
  }
}

double i1(const VirtualCharacter& v, const RankProfile& ranks) {
  validate(ranks);
  std::complex<double> acc = 0;
  for (const auto& [l, c] : v.coeffs()) {
    auto it = ranks.find(l);
    if (it == ranks.end()) it = ranks.find(dual(l));
    if (it == ranks.end()) throw Error(Errc::missing_rank, "no rank given for " + to_string(l));
    acc += c * static_cast<double>(2 * it->second + fs_index(l));
  }
  return std::norm(acc);
}

double i2(const VirtualCharacter& v, const ZeroList& zeros) {
  validate(zeros);
  double acc = 0;
  for (const auto& [l, c] : v.coeffs()) {
    auto it = zeros.find(l);
    if (it == zeros.end()) continue;
    for (double g : it->second) acc += 2 * std::norm(c) / (0.25 + g * g);
  }
  return acc;
}

A1CubedCase parse_a1cubed_case(const std::string& name) {
  if (name == "noncm-q") return A1CubedCase::noncm_over_q;
  if (name == "cm-q") return A1CubedCase::cm_over_q;
  if (name == "noncm-k") return A1CubedCase::noncm_over_k;
  if (name == "cm-k") return A1CubedCase::cm_over_k;
  throw Error(Errc::invalid_argument, "unknown case '" + name + "' (noncm-q, cm-q, noncm-k, cm-k)");
}

double i1_formula_a1cubed(A1CubedCase c, int r_a, int r_sym3) {
  if (r_a < 0 || r_sym3 < 0) throw Error(Errc::invalid_argument, "ranks must be nonnegative");
  int offset = 3;
  if (c == A1CubedCase::cm_over_q) offset = 4;
  if (c == A1CubedCase::cm_over_k) offset = 0;
  const double v = 4.0 * r_a + 2.0 * r_sym3 - offset;
  return v * v;
}

double s_bound(const BoundInputs& in) {
  require_positive(in.degree, "d_chi");
  require_positive(in.field_degree, "[k:Q]");
  require_positive(in.conductor, "N");
  require_positive(in.weight + 3, "w_chi + 3");
  return in.degree * in.field_degree * std::log(in.conductor * (in.weight + 3));
}

double s_phi(const VirtualCharacter& v, int field_degree, double conductor) {
  double best = 0;
  bool any = false;
  for (const auto& [l, c] : v.coeffs()) {
    BoundInputs in;
    in.degree = char_degree(l);
    in.weight = char_weight(l);
    in.field_degree = field_degree;
    in.conductor = conductor;
    const double s = s_bound(in);
    best = any ? std::max(best, s) : s;
    any = true;
  }
  return best;
}

double upper_bound(double R, double S, double C, double K6) {
  if (R < 0 || C < 0 || !(K6 > 0)) throw Error(Errc::invalid_argument, "bound inputs must be nonnegative");
  return K6 * R * S * S * C;
}

double zero_count_bound(const BoundInputs& in, double T, double K4) {
  if (T < 0) throw Error(Errc::invalid_argument, "T must be nonnegative");
  require_positive(K4, "K4");
  BoundInputs b = in;
  b.conductor = in.conductor * (T + 5);
  return K4 * s_bound(b);
}

std::pair<int, int> rank_base_change(int r_e, int r_twist, int r_sym3_e, int r_sym3_twist, bool cm_by_k) {
  if (r_e < 0 || r_twist < 0 || r_sym3_e < 0 || r_sym3_twist < 0)
    throw Error(Errc::invalid_argument, "ranks must be nonnegative");
  if (!cm_by_k) return {r_e + r_twist, r_sym3_e + r_sym3_twist};
  // with CM by K the curve and its twist are isogenous
  if (r_sym3_e < r_e)
    throw Error(Errc::cm_constraint_violation, "CM by K forces r_Sym3 >= r, got " + std::to_string(r_sym3_e) +
                                                   " < " + std::to_string(r_e));
  return {2 * r_e, 2 * r_sym3_e};
}

RankProfile read_ranks(const std::string& path, Group group) {
  auto in = open_input(path);
  RankProfile out;
  try {
    const auto j = nlohmann::json::parse(in);
    const auto& list = j.is_object() && j.contains("ranks") ? j.at("ranks") : j;
    for (const auto& e : list) {
      const CharLabel l = parse_label(e.at("label").get<std::string>(), group);
      out[l] = e.at("rank").get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
  validate(out);
  return out;
}

std::vector<double> read_zero_file(const std::string& path) {
  auto in = open_input(path);
  std::vector<double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    double g;
    std::string rest;
    if (!(ls >> g) || (ls >> rest))
      throw Error(Errc::parse_error, path + ":" + std::to_string(lineno) + ": expected one number");
    out.push_back(g);
  }
  return out;
}

ZeroList read_zeros(const std::string& path, Group group) {
  auto in = open_input(path);
  ZeroList out;
  const auto dir = std::filesystem::path(path).parent_path();
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& [label, file] : j.items())
      out[parse_label(label, group)] = read_zero_file((dir / file.get<std::string>()).string());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  validate(out);
  return out;
}

}  // namespace stconv
