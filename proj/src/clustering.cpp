#include "jtcomp/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jtcomp {

namespace {

// Absolute slack for floating-point comparisons on meters and rates.
constexpr double kDistanceSlack = 1e-9;
constexpr double kQosSlack = 1e-9;

std::vector<double> row_totals(const Matrix& power) {
  std::vector<double> totals(power.rows(), 0.0);
  for (std::size_t k = 0; k < power.rows(); ++k) {
    for (std::size_t m = 0; m < power.cols(); ++m) totals[k] += power(k, m);
  }
  return totals;
}

/// User indices in descending coordination priority; equal priorities keep
/// the lower index first.
std::vector<std::size_t> priority_order(const Scenario& scenario,
                                        const RadioParams& rp) {
  const std::size_t num_users = scenario.num_users();
  std::vector<double> pri(num_users);
  for (std::size_t k = 0; k < num_users; ++k) {
    pri[k] = priority(sinr_no_coop(k, scenario.chan.power, rp.noise_power),
                      rp.rate_min);
  }
  std::vector<std::size_t> order(num_users);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pri[a] != pri[b]) return pri[a] > pri[b];
    return a < b;
  });
  return order;
}

ClusterAssignment empty_assignment(std::size_t num_users) {
  ClusterAssignment a;
  a.cluster.resize(num_users);
  a.prb_demand.assign(num_users, 0);
  a.qos_met.assign(num_users, false);
  return a;
}

using ClusterRule = std::vector<int> (*)(std::size_t, const Scenario&,
                                         const SchemeConfig&);

std::vector<int> bpc_rule(std::size_t k, const Scenario& scenario,
                          const SchemeConfig& cfg) {
  std::vector<int> cluster;
  for (std::size_t m = 0; m < scenario.num_sbs(); ++m) {
    if (scenario.chan.power(k, m) > cfg.bpc_threshold) {
      cluster.push_back(static_cast<int>(m));
    }
  }
  if (cluster.empty()) {
    cluster.push_back(static_cast<int>(strongest_sbs(k, scenario.chan.power)));
  }
  return cluster;
}

std::vector<int> bdc_rule(std::size_t k, const Scenario& scenario,
                          const SchemeConfig& cfg) {
  const std::size_t num_sbs = scenario.num_sbs();
  std::vector<int> idx(num_sbs);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const double da = scenario.dist(k, a);
    const double db = scenario.dist(k, b);
    if (da != db) return da < db;
    return a < b;
  });
  const std::size_t n =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.bdc_cluster_size),
                            num_sbs);
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Shared machinery for BPC/BDC: fixed cluster rule, then optional PRB
/// budget clipping in descending-priority user order.
AssignResult baseline_assign(const Scenario& scenario, const SchemeConfig& cfg,
                             const RadioParams& rp, ClusterRule rule) {
  cfg.validate();
  rp.validate();
  const std::size_t num_users = scenario.num_users();
  const std::size_t num_sbs = scenario.num_sbs();

  AssignResult out;
  out.assignment = empty_assignment(num_users);
  out.rates.assign(num_users, 0.0);
  out.ledger.capacity = cfg.prb_capacity;
  out.ledger.remaining.assign(num_sbs, cfg.prb_capacity);
  if (num_sbs == 0) return out;

  std::vector<std::vector<int>> clusters(num_users);
  std::vector<double> rates(num_users);
  std::vector<int> demand(num_users);
  for (std::size_t k = 0; k < num_users; ++k) {
    clusters[k] = rule(k, scenario, cfg);
    rates[k] = achievable_rate(
        sinr(k, clusters[k], scenario.chan.power, rp.noise_power),
        rp.bandwidth);
    // A rate that underflows to zero cannot satisfy any demand; the user
    // stays unserved instead of dividing by zero below.
    demand[k] = rates[k] > 0.0 ? prb_demand(rp.rate_min, rates[k]) : 0;
  }

  if (cfg.enforce_prb_budget_for_baselines) {
    for (std::size_t k : priority_order(scenario, rp)) {
      int avail = cfg.prb_capacity;
      for (int m : clusters[k]) avail = std::min(avail, out.ledger.remaining[m]);
      const int reserved = std::min(demand[k], avail);
      if (reserved <= 0) continue;  // PRB-exhausted cluster: user unserved
      for (int m : clusters[k]) out.ledger.remaining[m] -= reserved;
      out.assignment.cluster[k] = clusters[k];
      out.assignment.prb_demand[k] = reserved;
      out.assignment.qos_met[k] = reserved * rates[k] >= rp.rate_min - kQosSlack;
      out.rates[k] = rates[k];
    }
  } else {
    for (std::size_t k = 0; k < num_users; ++k) {
      if (demand[k] <= 0) continue;  // rate underflow: user stays unserved
      out.assignment.cluster[k] = clusters[k];
      out.assignment.prb_demand[k] = demand[k];
      out.assignment.qos_met[k] = true;
      out.rates[k] = rates[k];
      // Ledger is reporting-only here; budget overruns show up in the
      // ConstraintReport instead.
      for (int m : clusters[k]) {
        out.ledger.remaining[m] = std::max(0, out.ledger.remaining[m] - demand[k]);
      }
    }
  }
  return out;
}

}  // namespace

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kDrc: return "drc";
    case Scheme::kBpc: return "bpc";
    case Scheme::kBdc: return "bdc";
  }
  return "?";
}

void SchemeConfig::validate() const {
  if (prb_capacity < 1) {
    throw std::invalid_argument("SchemeConfig: prb_capacity must be >= 1");
  }
  if (!(toa_distance_budget > 0.0)) {
    throw std::invalid_argument("SchemeConfig: toa_distance_budget must be > 0");
  }
  if (bdc_cluster_size < 1) {
    throw std::invalid_argument("SchemeConfig: bdc_cluster_size must be >= 1");
  }
}

AssignResult drc_assign(const Scenario& scenario, const SchemeConfig& cfg,
                        const RadioParams& rp) {
  cfg.validate();
  rp.validate();
  const std::size_t num_users = scenario.num_users();
  const std::size_t num_sbs = scenario.num_sbs();
  const Matrix& power = scenario.chan.power;

  AssignResult out;
  out.assignment = empty_assignment(num_users);
  out.rates.assign(num_users, 0.0);
  out.ledger.capacity = cfg.prb_capacity;
  out.ledger.remaining.assign(num_sbs, cfg.prb_capacity);
  if (num_sbs == 0) return out;

  const std::vector<double> totals = row_totals(power);
  std::vector<int>& remaining = out.ledger.remaining;

  for (std::size_t k : priority_order(scenario, rp)) {
    // Anchor: strongest received power among SBSs with at least one free PRB.
    int anchor = -1;
    for (std::size_t m = 0; m < num_sbs; ++m) {
      if (remaining[m] < 1) continue;
      if (anchor < 0 || power(k, m) > power(k, anchor)) {
        anchor = static_cast<int>(m);
      }
    }
    if (anchor < 0) continue;  // network PRB-exhausted: user stays unserved

    // Candidates: free-PRB SBSs within half the ToA distance budget of the
    // anchor, strongest power first. Anchoring at half budget bounds every
    // pairwise difference by the full budget.
    const double anchor_dist = scenario.dist(k, anchor);
    std::vector<int> candidates;
    for (std::size_t m = 0; m < num_sbs; ++m) {
      if (static_cast<int>(m) == anchor || remaining[m] < 1) continue;
      if (std::fabs(scenario.dist(k, m) - anchor_dist) <=
          cfg.toa_distance_budget / 2.0) {
        candidates.push_back(static_cast<int>(m));
      }
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      if (power(k, a) != power(k, b)) return power(k, a) > power(k, b);
      return a < b;
    });

    std::vector<int> cluster{anchor};
    double desired = power(k, anchor);
    double rate = 0.0;
    int gamma = 0;
    auto evaluate = [&] {
      const double s = desired / (totals[k] - desired + rp.noise_power);
      rate = achievable_rate(s, rp.bandwidth);
      // A rate that underflows to zero gets an unfillable demand so growth
      // keeps adding stronger SBSs; if it stays zero the user is unserved.
      gamma = rate > 0.0 ? prb_demand(rp.rate_min, rate) : cfg.prb_capacity + 1;
    };
    auto fits = [&] {
      for (int m : cluster) {
        if (remaining[m] < gamma) return false;
      }
      return true;
    };

    evaluate();
    std::size_t next = 0;
    while (!(fits() && gamma * rate >= rp.rate_min - kQosSlack) &&
           next < candidates.size()) {
      const int cand = candidates[next++];
      if (remaining[cand] < gamma) continue;  // skipped, not added
      cluster.push_back(cand);
      desired += power(k, cand);
      evaluate();
    }

    if (rate <= 0.0) continue;  // rate underflow: user cannot be served

    int reserved;
    if (fits() && gamma * rate >= rp.rate_min - kQosSlack) {
      reserved = gamma;
      out.assignment.qos_met[k] = true;
    } else {
      // No feasible stopping cluster; every member still has >= 1 free PRB
      // (members are only added while unreserved), so keep the grown cluster
      // and reserve what fits.
      int avail = cfg.prb_capacity;
      for (int m : cluster) avail = std::min(avail, remaining[m]);
      reserved = std::min(gamma, avail);
      out.assignment.qos_met[k] = false;
    }
    for (int m : cluster) remaining[m] -= reserved;
    std::sort(cluster.begin(), cluster.end());
    out.assignment.cluster[k] = std::move(cluster);
    out.assignment.prb_demand[k] = reserved;
    out.rates[k] = rate;
  }
  return out;
}

AssignResult bpc_assign(const Scenario& scenario, const SchemeConfig& cfg,
                        const RadioParams& rp) {
  return baseline_assign(scenario, cfg, rp, &bpc_rule);
}

AssignResult bdc_assign(const Scenario& scenario, const SchemeConfig& cfg,
                        const RadioParams& rp) {
  return baseline_assign(scenario, cfg, rp, &bdc_rule);
}

AssignResult assign_clusters(const Scenario& scenario, const SchemeConfig& cfg,
                             const RadioParams& rp) {
  switch (cfg.scheme) {
    case Scheme::kDrc: return drc_assign(scenario, cfg, rp);
    case Scheme::kBpc: return bpc_assign(scenario, cfg, rp);
    case Scheme::kBdc: return bdc_assign(scenario, cfg, rp);
  }
  throw std::logic_error("assign_clusters: unknown scheme");
}

ConstraintReport check_constraints(const ClusterAssignment& assignment,
                                   const Scenario& scenario,
                                   const RadioParams& rp,
                                   const SchemeConfig& cfg) {
  const std::size_t num_users = assignment.num_users();
  const std::size_t num_sbs = scenario.num_sbs();
  const std::vector<double> rates =
      user_rates(assignment, scenario.chan.power, rp);

  ConstraintReport rep;
  rep.qos_ok.assign(num_users, true);
  rep.min_prb_ok.assign(num_users, true);
  rep.served_ok.assign(num_users, true);
  rep.toa_ok.assign(num_users, true);
  rep.prb_budget_ok.assign(num_sbs, true);

  std::vector<int> used(num_sbs, 0);
  std::vector<int> users_on(num_sbs, 0);
  for (std::size_t k = 0; k < num_users; ++k) {
    if (!assignment.served(k)) {
      rep.served_ok[k] = false;
      ++rep.served_violations;
      continue;
    }
    const int gamma = assignment.prb_demand[k];
    if (gamma * rates[k] < rp.rate_min - kQosSlack) {
      rep.qos_ok[k] = false;
      ++rep.qos_violations;
    }
    if (gamma < 1) {
      rep.min_prb_ok[k] = false;
      ++rep.min_prb_violations;
    }
    for (int m : assignment.cluster[k]) {
      used[m] += gamma;
      ++users_on[m];
    }
    // Pairwise ToA bound over every cluster member pair, checked directly
    // rather than through the anchor surrogate.
    const auto& cl = assignment.cluster[k];
    for (std::size_t i = 0; i + 1 < cl.size() && rep.toa_ok[k]; ++i) {
      for (std::size_t j = i + 1; j < cl.size(); ++j) {
        if (std::fabs(scenario.dist(k, cl[i]) - scenario.dist(k, cl[j])) >
            cfg.toa_distance_budget + kDistanceSlack) {
          rep.toa_ok[k] = false;
          ++rep.toa_violations;
          break;
        }
      }
    }
  }
  for (std::size_t m = 0; m < num_sbs; ++m) {
    // The lower bound of the budget constraint applies to SBSs that serve at
    // least one user; an idle SBS has nothing to reserve.
    const bool lower_ok = users_on[m] == 0 || used[m] >= 1;
    if (used[m] > cfg.prb_capacity || !lower_ok) {
      rep.prb_budget_ok[m] = false;
      ++rep.prb_budget_violations;
    }
  }
  return rep;
}

}  // namespace jtcomp
