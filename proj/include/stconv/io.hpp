#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "stconv/chars.hpp"
#include "stconv/stats.hpp"

namespace stconv {

inline constexpr const char* version = "1.0.0";

/// {"group": "USp4", "coeffs": [{"label": "chi_{2,0}", "re": 1, "im": 0}, ...]}
nlohmann::json to_json(const VirtualCharacter& v);
VirtualCharacter vchar_from_json(const nlohmann::json& j);

std::uint64_t fnv1a64(const std::string& text);

/// Version, hash of the canonical configuration text, and seed.
struct RunHeader {
  std::string version;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string config;

  static RunHeader make(const std::string& config, std::uint64_t seed);
  nlohmann::json json() const;
  /// "# stconv <version> config=<hash> seed=<seed>"
  std::string csv_comment() const;
};

/// Point of a delta plot.
struct DeltaSample {
  double x = 0;
  std::complex<double> delta;
};

/// Full resolution (every norm) when checkpoints <= 0, else log-spaced.
std::vector<DeltaSample> sample_delta(const StatSeries& s, int checkpoints);

/// `x,delta_re[,delta_im]` or `x,delta_sq`.
void write_delta_csv(std::ostream& out, const std::vector<DeltaSample>& samples, bool squared,
                     bool with_imag, const RunHeader& header);

}  // namespace stconv
