#ifndef JTCOMP_CONFIG_HPP
#define JTCOMP_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jtcomp/montecarlo.hpp"

namespace jtcomp {

enum class OutputFormat { kCsv, kText };

/// The complete run description: simulation parameters plus output and
/// sweep settings. Keys use dotted sections; power values are watts, with
/// `_dbm`-suffixed alternates converted on assignment.
struct RunConfig {
  SimParams params;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<SweepAxis> axis;
  std::vector<double> sweep_values;

  /// Applies one `key = value` setting; throws std::invalid_argument naming
  /// the key on unknown keys or malformed values.
  void apply(const std::string& key, const std::string& value);

  /// Canonical key/value echo, sufficient to reproduce the run exactly.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

/// Parses a flat key-value config file (`key = value`, `#` comments).
RunConfig load_config(const std::string& path);

double dbm_to_watts(double dbm);

/// One CSV row per (sweep point, scheme); a plain run uses axis "none".
void write_csv(std::ostream& os, const RunConfig& cfg,
               const std::vector<SweepPoint>& points);

void write_text(std::ostream& os, const RunConfig& cfg,
                const std::vector<SweepPoint>& points);

}  // namespace jtcomp

#endif  // JTCOMP_CONFIG_HPP
