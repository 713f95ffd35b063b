#include "jtcomp/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace jtcomp {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key +
                                "': " + value);
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config: bad numeric value for '" + key +
                                "': " + value);
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw std::invalid_argument("config: integer expected for '" + key +
                                "': " + value);
  }
  return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("config: boolean expected for '" + key +
                              "': " + value);
}

Scheme parse_scheme(const std::string& key, const std::string& value) {
  if (value == "drc") return Scheme::kDrc;
  if (value == "bpc") return Scheme::kBpc;
  if (value == "bdc") return Scheme::kBdc;
  throw std::invalid_argument("config: unknown scheme for '" + key +
                              "': " + value);
}

}  // namespace

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void RunConfig::apply(const std::string& key, const std::string& value) {
  using Setter = std::function<void(RunConfig&, const std::string&)>;
  static const std::map<std::string, Setter> setters = {
      {"region.side_length",
       [](RunConfig& c, const std::string& v) {
         c.params.region.side_length = parse_double("region.side_length", v);
       }},
      {"region.metric",
       [](RunConfig& c, const std::string& v) {
         if (v == "torus") {
           c.params.region.metric = Metric::kTorus;
         } else if (v == "plane") {
           c.params.region.metric = Metric::kPlane;
         } else {
           throw std::invalid_argument(
               "config: region.metric must be torus or plane");
         }
       }},
      {"channel.epsilon",
       [](RunConfig& c, const std::string& v) {
         c.params.fractal.epsilon = parse_double("channel.epsilon", v);
       }},
      {"channel.rho_min",
       [](RunConfig& c, const std::string& v) {
         c.params.fractal.rho_min = parse_double("channel.rho_min", v);
       }},
      {"channel.rho_max",
       [](RunConfig& c, const std::string& v) {
         c.params.fractal.rho_max = parse_double("channel.rho_max", v);
       }},
      {"channel.zeta",
       [](RunConfig& c, const std::string& v) {
         c.params.fractal.zeta = parse_double("channel.zeta", v);
       }},
      {"radio.noise_w",
       [](RunConfig& c, const std::string& v) {
         c.params.radio.noise_power = parse_double("radio.noise_w", v);
       }},
      {"radio.noise_dbm",
       [](RunConfig& c, const std::string& v) {
         c.params.radio.noise_power =
             dbm_to_watts(parse_double("radio.noise_dbm", v));
       }},
      {"radio.bandwidth",
       [](RunConfig& c, const std::string& v) {
         c.params.radio.bandwidth = parse_double("radio.bandwidth", v);
       }},
      {"radio.rate_min",
       [](RunConfig& c, const std::string& v) {
         c.params.radio.rate_min = parse_double("radio.rate_min", v);
       }},
      {"radio.tx_power",
       [](RunConfig& c, const std::string& v) {
         c.params.radio.tx_power = parse_double("radio.tx_power", v);
       }},
      {"cluster.prb_capacity",
       [](RunConfig& c, const std::string& v) {
         c.params.cluster.prb_capacity = parse_int("cluster.prb_capacity", v);
       }},
      {"cluster.bpc_threshold_w",
       [](RunConfig& c, const std::string& v) {
         c.params.cluster.bpc_threshold =
             parse_double("cluster.bpc_threshold_w", v);
       }},
      {"cluster.bpc_threshold_dbm",
       [](RunConfig& c, const std::string& v) {
         c.params.cluster.bpc_threshold =
             dbm_to_watts(parse_double("cluster.bpc_threshold_dbm", v));
       }},
      {"cluster.bdc_cluster_size",
       [](RunConfig& c, const std::string& v) {
         c.params.cluster.bdc_cluster_size =
             parse_int("cluster.bdc_cluster_size", v);
       }},
      {"cluster.toa_distance_budget",
       [](RunConfig& c, const std::string& v) {
         c.params.cluster.toa_distance_budget =
             parse_double("cluster.toa_distance_budget", v);
       }},
      {"cluster.enforce_prb_budget_for_baselines",
       [](RunConfig& c, const std::string& v) {
         c.params.cluster.enforce_prb_budget_for_baselines =
             parse_bool("cluster.enforce_prb_budget_for_baselines", v);
       }},
      {"sim.lambda_sbs",
       [](RunConfig& c, const std::string& v) {
         c.params.lambda_sbs = parse_double("sim.lambda_sbs", v);
       }},
      {"sim.lambda_user",
       [](RunConfig& c, const std::string& v) {
         c.params.lambda_user = parse_double("sim.lambda_user", v);
       }},
      {"sim.drops",
       [](RunConfig& c, const std::string& v) {
         c.params.drops = parse_int("sim.drops", v);
       }},
      {"sim.seed",
       [](RunConfig& c, const std::string& v) {
         c.params.master_seed =
             static_cast<std::uint64_t>(std::stoull(v));
       }},
      {"sim.schemes",
       [](RunConfig& c, const std::string& v) {
         std::vector<Scheme> schemes;
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) {
           schemes.push_back(parse_scheme("sim.schemes", trim(item)));
         }
         if (schemes.empty()) {
           throw std::invalid_argument("config: sim.schemes must be non-empty");
         }
         c.params.schemes = std::move(schemes);
       }},
      {"output.format",
       [](RunConfig& c, const std::string& v) {
         if (v == "csv") {
           c.format = OutputFormat::kCsv;
         } else if (v == "text") {
           c.format = OutputFormat::kText;
         } else {
           throw std::invalid_argument(
               "config: output.format must be csv or text");
         }
       }},
  };

  const auto it = setters.find(key);
  if (it == setters.end()) {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  it->second(*this, value);
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::string schemes;
  for (Scheme s : params.schemes) {
    if (!schemes.empty()) schemes += ",";
    schemes += scheme_name(s);
  }
  return {
      {"region.side_length", format_double(params.region.side_length)},
      {"region.metric",
       params.region.metric == Metric::kTorus ? "torus" : "plane"},
      {"channel.epsilon", format_double(params.fractal.epsilon)},
      {"channel.rho_min", format_double(params.fractal.rho_min)},
      {"channel.rho_max", format_double(params.fractal.rho_max)},
      {"channel.zeta", format_double(params.fractal.zeta)},
      {"radio.noise_w", format_double(params.radio.noise_power)},
      {"radio.bandwidth", format_double(params.radio.bandwidth)},
      {"radio.rate_min", format_double(params.radio.rate_min)},
      {"radio.tx_power", format_double(params.radio.tx_power)},
      {"cluster.prb_capacity", std::to_string(params.cluster.prb_capacity)},
      {"cluster.bpc_threshold_w",
       format_double(params.cluster.bpc_threshold)},
      {"cluster.bdc_cluster_size",
       std::to_string(params.cluster.bdc_cluster_size)},
      {"cluster.toa_distance_budget",
       format_double(params.cluster.toa_distance_budget)},
      {"cluster.enforce_prb_budget_for_baselines",
       params.cluster.enforce_prb_budget_for_baselines ? "true" : "false"},
      {"sim.lambda_sbs", format_double(params.lambda_sbs)},
      {"sim.lambda_user", format_double(params.lambda_user)},
      {"sim.drops", std::to_string(params.drops)},
      {"sim.seed", std::to_string(params.master_seed)},
      {"sim.schemes", schemes},
      {"output.format", format == OutputFormat::kCsv ? "csv" : "text"},
  };
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value'");
    }
    cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

namespace {

void write_rows(std::ostream& os, const RunConfig& cfg,
                const std::vector<SweepPoint>& points, bool csv) {
  const std::string axis_name =
      cfg.axis ? sweep_axis_name(*cfg.axis) : "none";
  if (csv) {
    os << "scheme,axis_name,axis_value,mean_rate,rate_ci,backhaul,"
          "backhaul_ci,qos_fraction,unserved_fraction,mean_cluster_size,"
          "prb_utilization,eq11_viol,eq12_viol,eq15_viol,drops,seed\n";
  } else {
    os << "scheme axis value mean_rate backhaul qos unserved cluster_size "
          "prb_util\n";
  }
  for (const SweepPoint& pt : points) {
    for (const SchemeAggregate& sa : pt.result.per_scheme) {
      if (csv) {
        os << scheme_name(sa.scheme) << ',' << axis_name << ','
           << format_double(pt.value) << ',' << format_double(sa.mean_rate.mean)
           << ',' << format_double(sa.mean_rate.ci_half) << ','
           << format_double(sa.backhaul.mean) << ','
           << format_double(sa.backhaul.ci_half) << ','
           << format_double(sa.qos_fraction.mean) << ','
           << format_double(sa.unserved_fraction.mean) << ','
           << format_double(sa.mean_cluster_size.mean) << ','
           << format_double(sa.prb_utilization.mean) << ','
           << format_double(sa.qos_violations.mean) << ','
           << format_double(sa.prb_budget_violations.mean) << ','
           << format_double(sa.toa_violations.mean) << ','
           << pt.result.drops << ',' << cfg.params.master_seed << '\n';
      } else {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "%-4s %-8s %-12g %10.4f %10.4f %7.4f %8.4f %12.4f %8.4f\n",
                      scheme_name(sa.scheme).c_str(), axis_name.c_str(),
                      pt.value, sa.mean_rate.mean, sa.backhaul.mean,
                      sa.qos_fraction.mean, sa.unserved_fraction.mean,
                      sa.mean_cluster_size.mean, sa.prb_utilization.mean);
        os << buf;
      }
    }
  }
}

}  // namespace

void write_csv(std::ostream& os, const RunConfig& cfg,
               const std::vector<SweepPoint>& points) {
  for (const auto& [key, value] : cfg.echo()) {
    os << "# " << key << " = " << value << '\n';
  }
  write_rows(os, cfg, points, /*csv=*/true);
}

void write_text(std::ostream& os, const RunConfig& cfg,
                const std::vector<SweepPoint>& points) {
  for (const auto& [key, value] : cfg.echo()) {
    os << "# " << key << " = " << value << '\n';
  }
  write_rows(os, cfg, points, /*csv=*/false);
}

}  // namespace jtcomp
