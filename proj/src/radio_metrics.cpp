#include "jtcomp/radio_metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jtcomp {

void RadioParams::validate() const {
  if (!(noise_power > 0.0) || !(bandwidth > 0.0) || !(rate_min > 0.0) ||
      !(tx_power > 0.0)) {
    throw std::invalid_argument("RadioParams: all fields must be > 0");
  }
}

double sinr(std::size_t k, std::span<const int> cluster, const Matrix& power,
            double noise_power) {
  if (cluster.empty()) {
    throw std::invalid_argument("sinr: cluster must be non-empty");
  }
  double total = 0.0;
  for (std::size_t m = 0; m < power.cols(); ++m) total += power(k, m);
  double desired = 0.0;
  for (int m : cluster) desired += power(k, static_cast<std::size_t>(m));
  return desired / (total - desired + noise_power);
}

double achievable_rate(double sinr_value, double bandwidth) {
  return bandwidth * std::log2(1.0 + sinr_value);
}

int prb_demand(double rate_min, double rate) {
  if (!(rate > 0.0)) {
    throw std::domain_error("prb_demand: user rate must be > 0");
  }
  int gamma = static_cast<int>(std::ceil(rate_min / rate));
  if (gamma < 1) gamma = 1;
  // Guard the QoS identity gamma * rate >= rate_min against rounding in the
  // quotient.
  if (static_cast<double>(gamma) * rate < rate_min) ++gamma;
  return gamma;
}

std::size_t strongest_sbs(std::size_t k, const Matrix& power) {
  if (power.cols() == 0) {
    throw std::invalid_argument("strongest_sbs: no SBS columns");
  }
  std::size_t best = 0;
  for (std::size_t m = 1; m < power.cols(); ++m) {
    if (power(k, m) > power(k, best)) best = m;
  }
  return best;
}

double sinr_no_coop(std::size_t k, const Matrix& power, double noise_power) {
  const int best = static_cast<int>(strongest_sbs(k, power));
  return sinr(k, std::span<const int>(&best, 1), power, noise_power);
}

double priority(double sinr0, double rate_min) {
  if (sinr0 <= 0.0) return std::numeric_limits<double>::infinity();
  return rate_min / std::log2(1.0 + sinr0);
}

double sbs_backhaul(std::size_t m, const ClusterAssignment& assignment,
                    std::span<const double> rates) {
  double sum = 0.0;
  for (std::size_t k = 0; k < assignment.num_users(); ++k) {
    for (int member : assignment.cluster[k]) {
      if (static_cast<std::size_t>(member) == m) {
        sum += assignment.prb_demand[k] * rates[k];
        break;
      }
    }
  }
  return sum;
}

double network_backhaul(const ClusterAssignment& assignment,
                        std::span<const double> rates, std::size_t num_sbs) {
  if (num_sbs == 0) {
    throw std::invalid_argument("network_backhaul: num_sbs must be >= 1");
  }
  // Exchange the order of summation: each served user contributes
  // N_k^B * gamma_k * R_k to the total.
  double total = 0.0;
  for (std::size_t k = 0; k < assignment.num_users(); ++k) {
    total += static_cast<double>(assignment.cluster[k].size()) *
             assignment.prb_demand[k] * rates[k];
  }
  return total / static_cast<double>(num_sbs);
}

std::vector<double> user_rates(const ClusterAssignment& assignment,
                               const Matrix& power, const RadioParams& rp) {
  std::vector<double> rates(assignment.num_users(), 0.0);
  for (std::size_t k = 0; k < assignment.num_users(); ++k) {
    if (!assignment.served(k)) continue;
    rates[k] = achievable_rate(
        sinr(k, assignment.cluster[k], power, rp.noise_power), rp.bandwidth);
  }
  return rates;
}

}  // namespace jtcomp
