#include "jtcomp/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace jtcomp {

namespace {

constexpr int kMaxResamples = 10000;

Stats summarize(const std::vector<double>& xs) {
  Stats s;
  s.n = static_cast<int>(xs.size());
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / s.n;
  if (s.n >= 2) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / (s.n - 1));
    s.ci_half = 1.96 * s.stddev / std::sqrt(static_cast<double>(s.n));
  }
  return s;
}

SchemeMetrics measure(const AssignResult& res, const Scenario& scenario,
                      const SchemeConfig& cfg, const RadioParams& rp) {
  const std::size_t num_users = scenario.num_users();
  const std::size_t num_sbs = scenario.num_sbs();
  SchemeMetrics m;

  double rate_sum = 0.0;
  double size_sum = 0.0;
  int served = 0;
  int qos = 0;
  for (std::size_t k = 0; k < num_users; ++k) {
    if (res.assignment.served(k)) {
      ++served;
      rate_sum += res.rates[k];
      size_sum += static_cast<double>(res.assignment.cluster[k].size());
      if (res.assignment.qos_met[k]) ++qos;
    }
  }
  if (served > 0) {
    m.mean_rate = rate_sum / served;
    m.mean_cluster_size = size_sum / served;
  }
  m.qos_fraction = static_cast<double>(qos) / static_cast<double>(num_users);
  m.unserved_fraction =
      static_cast<double>(num_users - served) / static_cast<double>(num_users);
  m.backhaul = network_backhaul(res.assignment, res.rates, num_sbs);

  double used = 0.0;
  for (int r : res.ledger.remaining) {
    used += static_cast<double>(res.ledger.capacity - r);
  }
  m.prb_utilization = used / (static_cast<double>(num_sbs) *
                              static_cast<double>(res.ledger.capacity));

  const ConstraintReport rep =
      check_constraints(res.assignment, scenario, rp, cfg);
  m.qos_violations = rep.qos_violations;
  m.prb_budget_violations = rep.prb_budget_violations;
  m.min_prb_violations = rep.min_prb_violations;
  m.served_violations = rep.served_violations;
  m.toa_violations = rep.toa_violations;
  return m;
}

}  // namespace

void SimParams::validate() const {
  if (drops < 1) throw std::invalid_argument("SimParams: drops must be >= 1");
  if (lambda_sbs < 0.0 || lambda_user < 0.0) {
    throw std::invalid_argument("SimParams: densities must be >= 0");
  }
  if (schemes.empty()) {
    throw std::invalid_argument("SimParams: at least one scheme required");
  }
  fractal.validate();
  radio.validate();
  cluster.validate();
}

Scenario sample_scenario(const SimParams& p, RandomStream& rng,
                         int* resamples) {
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    Scenario sc;
    sc.region = p.region;
    sc.sbs = sample_ppp(p.lambda_sbs, p.region, rng);
    sc.users = sample_ppp(p.lambda_user, p.region, rng);
    if (sc.sbs.empty() || sc.users.empty()) {
      if (resamples != nullptr) ++*resamples;
      continue;
    }
    sc.dist = distance_matrix(sc.users, sc.sbs, sc.region);
    sc.chan = realize_channel(sc.dist, p.fractal, p.radio.tx_power, rng);
    return sc;
  }
  throw std::runtime_error(
      "sample_scenario: could not draw a non-empty scenario (densities too "
      "low?)");
}

DropResult run_drop(const SimParams& p, int drop_index) {
  p.validate();
  RandomStream rng =
      make_drop_stream(p.master_seed, static_cast<std::uint64_t>(drop_index));

  DropResult out;
  const Scenario scenario = sample_scenario(p, rng, &out.resamples);
  out.num_users = static_cast<int>(scenario.num_users());
  out.num_sbs = static_cast<int>(scenario.num_sbs());

  out.per_scheme.reserve(p.schemes.size());
  for (Scheme s : p.schemes) {
    SchemeConfig cfg = p.cluster;
    cfg.scheme = s;
    const AssignResult res = assign_clusters(scenario, cfg, p.radio);
    out.per_scheme.push_back(measure(res, scenario, cfg, p.radio));
  }
  return out;
}

AggregateResult run_experiment(const SimParams& p, int workers) {
  p.validate();
  if (workers < 1) workers = 1;

  std::vector<DropResult> drops(static_cast<std::size_t>(p.drops));
  if (workers == 1) {
    for (int i = 0; i < p.drops; ++i) {
      drops[static_cast<std::size_t>(i)] = run_drop(p, i);
    }
  } else {
    std::atomic<int> next{0};
    auto work = [&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= p.drops) return;
        drops[static_cast<std::size_t>(i)] = run_drop(p, i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  AggregateResult agg;
  agg.drops = p.drops;
  for (const DropResult& d : drops) agg.total_resamples += d.resamples;

  for (std::size_t si = 0; si < p.schemes.size(); ++si) {
    SchemeAggregate sa;
    sa.scheme = p.schemes[si];
    auto collect = [&](auto member) {
      std::vector<double> xs;
      xs.reserve(drops.size());
      for (const DropResult& d : drops) {
        xs.push_back(static_cast<double>(d.per_scheme[si].*member));
      }
      return summarize(xs);
    };
    sa.mean_rate = collect(&SchemeMetrics::mean_rate);
    sa.backhaul = collect(&SchemeMetrics::backhaul);
    sa.qos_fraction = collect(&SchemeMetrics::qos_fraction);
    sa.unserved_fraction = collect(&SchemeMetrics::unserved_fraction);
    sa.mean_cluster_size = collect(&SchemeMetrics::mean_cluster_size);
    sa.prb_utilization = collect(&SchemeMetrics::prb_utilization);
    sa.qos_violations = collect(&SchemeMetrics::qos_violations);
    sa.prb_budget_violations = collect(&SchemeMetrics::prb_budget_violations);
    sa.toa_violations = collect(&SchemeMetrics::toa_violations);
    agg.per_scheme.push_back(sa);
  }
  return agg;
}

std::string sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kLambdaSbs: return "lambda_b";
    case SweepAxis::kLambdaUser: return "lambda_u";
    case SweepAxis::kRateMin: return "r_min";
  }
  return "?";
}

std::vector<SweepPoint> sweep(const SimParams& p, SweepAxis axis,
                              const std::vector<double>& values, int workers) {
  if (values.empty()) {
    throw std::invalid_argument("sweep: value list must be non-empty");
  }
  std::vector<SweepPoint> out;
  out.reserve(values.size());
  for (double v : values) {
    SimParams q = p;
    switch (axis) {
      case SweepAxis::kLambdaSbs: q.lambda_sbs = v; break;
      case SweepAxis::kLambdaUser: q.lambda_user = v; break;
      case SweepAxis::kRateMin: q.radio.rate_min = v; break;
    }
    out.push_back({v, run_experiment(q, workers)});
  }
  return out;
}

}  // namespace jtcomp
