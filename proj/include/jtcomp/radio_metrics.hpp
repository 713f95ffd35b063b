#ifndef JTCOMP_RADIO_METRICS_HPP
#define JTCOMP_RADIO_METRICS_HPP

#include <span>
#include <vector>

#include "jtcomp/matrix.hpp"

namespace jtcomp {

struct RadioParams {
  double noise_power = 3.1622776601683792e-13;  // watts (-95 dBm)
  double bandwidth = 1.0;   // Hz per PRB; 1 keeps rates in bits/s/Hz
  double rate_min = 4.0;    // bits/s/Hz, per-user minimum traffic
  double tx_power = 1.0;    // watts

  void validate() const;
};

/// Cluster matrix C together with the per-user PRB reservations. A user with
/// an empty cluster is unserved and excluded from rate averages.
struct ClusterAssignment {
  std::vector<std::vector<int>> cluster;  // sorted SBS indices per user
  std::vector<int> prb_demand;            // gamma_k; 0 only for unserved users
  std::vector<bool> qos_met;

  std::size_t num_users() const { return cluster.size(); }
  bool served(std::size_t k) const { return !cluster[k].empty(); }
};

/// SINR of user k when served jointly by `cluster`; every SBS outside the
/// cluster interferes.
double sinr(std::size_t k, std::span<const int> cluster, const Matrix& power,
            double noise_power);

/// B * log2(1 + sinr).
double achievable_rate(double sinr_value, double bandwidth);

/// ceil(rate_min / rate), floored at 1. Throws for non-positive rate.
int prb_demand(double rate_min, double rate);

/// Index of the strongest received power for user k; ties go to the lower
/// SBS index.
std::size_t strongest_sbs(std::size_t k, const Matrix& power);

/// SINR with single-SBS association to the strongest power.
double sinr_no_coop(std::size_t k, const Matrix& power, double noise_power);

/// Coordination priority: rate_min / log2(1 + sinr0). Users with worse
/// channels rank higher; sinr0 == 0 ranks first (+inf).
double priority(double sinr0, double rate_min);

/// Backhaul load of SBS m: sum over its users of gamma_k * R_k.
double sbs_backhaul(std::size_t m, const ClusterAssignment& assignment,
                    std::span<const double> rates);

/// Mean SBS backhaul over all M SBSs, idle ones included.
double network_backhaul(const ClusterAssignment& assignment,
                        std::span<const double> rates, std::size_t num_sbs);

/// Per-user achievable rates under the assignment; 0 for unserved users.
std::vector<double> user_rates(const ClusterAssignment& assignment,
                               const Matrix& power, const RadioParams& rp);

}  // namespace jtcomp

#endif  // JTCOMP_RADIO_METRICS_HPP
