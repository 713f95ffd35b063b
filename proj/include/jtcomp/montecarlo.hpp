#ifndef JTCOMP_MONTECARLO_HPP
#define JTCOMP_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jtcomp/clustering.hpp"
#include "jtcomp/scenario.hpp"

namespace jtcomp {

struct SimParams {
  double lambda_sbs = 1e-4;   // per m^2
  double lambda_user = 1e-3;  // per m^2
  Region region;
  FractalParams fractal;
  RadioParams radio;
  SchemeConfig cluster;                          // scheme tag set per run
  std::vector<Scheme> schemes = {Scheme::kDrc, Scheme::kBpc, Scheme::kBdc};
  int drops = 200;
  std::uint64_t master_seed = 1;

  void validate() const;
};

/// Per-scheme metrics of a single drop. Rates average over served users
/// only; unserved users appear in the outage fraction.
struct SchemeMetrics {
  double mean_rate = 0.0;        // bits/s/Hz, served users
  double backhaul = 0.0;         // network backhaul R^b
  double qos_fraction = 0.0;     // users with qos_met, over all users
  double unserved_fraction = 0.0;
  double mean_cluster_size = 0.0;  // served users
  double prb_utilization = 0.0;    // mean over SBSs of used / capacity
  int qos_violations = 0;
  int prb_budget_violations = 0;
  int min_prb_violations = 0;
  int served_violations = 0;
  int toa_violations = 0;
};

struct DropResult {
  std::vector<SchemeMetrics> per_scheme;  // parallel to SimParams::schemes
  int num_users = 0;
  int num_sbs = 0;
  int resamples = 0;  // degenerate (empty) drops redrawn before this one
};

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
  double ci_half = 0.0;  // 95% normal-approximation half-width; 0 when n < 2
  int n = 0;
};

struct SchemeAggregate {
  Scheme scheme;
  Stats mean_rate;
  Stats backhaul;
  Stats qos_fraction;
  Stats unserved_fraction;
  Stats mean_cluster_size;
  Stats prb_utilization;
  Stats qos_violations;
  Stats prb_budget_violations;
  Stats toa_violations;
};

struct AggregateResult {
  std::vector<SchemeAggregate> per_scheme;
  int drops = 0;
  int total_resamples = 0;
};

/// Samples one non-degenerate scenario; empty draws are resampled from the
/// same stream (bounded, counted through *resamples).
Scenario sample_scenario(const SimParams& p, RandomStream& rng,
                         int* resamples);

/// One drop: private stream from (master_seed, drop_index), shared Scenario
/// for every scheme.
DropResult run_drop(const SimParams& p, int drop_index);

/// Aggregates run_drop over [0, drops). The reduction is an ordered pass
/// over drop indices, so the result does not depend on the worker count.
AggregateResult run_experiment(const SimParams& p, int workers = 1);

enum class SweepAxis { kLambdaSbs, kLambdaUser, kRateMin };

std::string sweep_axis_name(SweepAxis axis);

struct SweepPoint {
  double value = 0.0;
  AggregateResult result;
};

std::vector<SweepPoint> sweep(const SimParams& p, SweepAxis axis,
                              const std::vector<double>& values,
                              int workers = 1);

}  // namespace jtcomp

#endif  // JTCOMP_MONTECARLO_HPP
