#include "stconv/io.hpp"

#include <cstdio>
#include <ostream>

#include "stconv/error.hpp"

namespace stconv {

nlohmann::json to_json(const VirtualCharacter& v) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [l, c] : v.coeffs())
    coeffs.push_back({{"label", to_string(l)}, {"re", c.real()}, {"im", c.imag()}});
  return {{"group", to_string(v.group())}, {"coeffs", coeffs}};
}

VirtualCharacter vchar_from_json(const nlohmann::json& j) {
  try {
    const Group g = parse_group(j.at("group").get<std::string>());
    VirtualCharacter v(g);
    for (const auto& e : j.at("coeffs")) {
      const double re = e.at("re").get<double>();
      const double im = e.contains("im") ? e.at("im").get<double>() : 0.0;
      v.add(parse_label(e.at("label").get<std::string>(), g), {re, im});
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("virtual character: ") + e.what());
  }
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

RunHeader RunHeader::make(const std::string& config, std::uint64_t seed) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(config)));
  return {stconv::version, buf, seed, config};
}

nlohmann::json RunHeader::json() const {
  return {{"version", version}, {"config_hash", config_hash}, {"seed", seed}, {"config", config}};
}

std::string RunHeader::csv_comment() const {
  return "# stconv " + version + " config=" + config_hash + " seed=" + std::to_string(seed);
}

std::vector<DeltaSample> sample_delta(const StatSeries& s, int checkpoints) {
  std::vector<DeltaSample> out;
  if (s.empty()) return out;
  if (checkpoints <= 0) {
    out.reserve(s.entries.size());
    for (const auto& e : s.entries)
      out.push_back({static_cast<double>(e.norm), e.sum / static_cast<double>(e.count)});
    return out;
  }
  const double lo = static_cast<double>(s.entries.front().norm);
  const double hi = static_cast<double>(s.entries.back().norm);
  for (double x : log_checkpoints(lo, hi, checkpoints)) out.push_back({x, delta(s, x)});
  return out;
}

void write_delta_csv(std::ostream& out, const std::vector<DeltaSample>& samples, bool squared,
                     bool with_imag, const RunHeader& header) {
  out << header.csv_comment() << "\n";
  out << (squared ? "x,delta_sq" : (with_imag ? "x,delta_re,delta_im" : "x,delta_re")) << "\n";
  out.precision(17);
  for (const auto& s : samples) {
    out << s.x << ",";
    if (squared)
      out << std::norm(s.delta);
    else if (with_imag)
      out << s.delta.real() << "," << s.delta.imag();
    else
      out << s.delta.real();
    out << "\n";
  }
}

}  // namespace stconv
