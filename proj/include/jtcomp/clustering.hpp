#ifndef JTCOMP_CLUSTERING_HPP
#define JTCOMP_CLUSTERING_HPP

#include <string>
#include <vector>

#include "jtcomp/radio_metrics.hpp"
#include "jtcomp/scenario.hpp"

namespace jtcomp {

enum class Scheme { kDrc, kBpc, kBdc };

std::string scheme_name(Scheme s);

/// Per-SBS PRB bookkeeping; reservations are all-or-nothing per
/// (user, cluster).
struct PrbLedger {
  std::vector<int> remaining;
  int capacity = 0;
};

struct SchemeConfig {
  Scheme scheme = Scheme::kDrc;
  int prb_capacity = 25;                      // Omega
  double bpc_threshold = 1e-10;               // watts (-70 dBm)
  int bdc_cluster_size = 3;                   // nearest-SBS count
  double toa_distance_budget = 150.0;         // meters, c * t_cp
  bool enforce_prb_budget_for_baselines = true;

  void validate() const;
};

/// Itemized pass/fail for the five constraints of the backhaul minimization:
/// per-user QoS (gamma * R >= R_min), per-SBS PRB budget, gamma >= 1,
/// service (at least one SBS), and the pairwise distance-difference bound.
struct ConstraintReport {
  std::vector<bool> qos_ok;         // per user, served users only
  std::vector<bool> prb_budget_ok;  // per SBS
  std::vector<bool> min_prb_ok;     // per user, served users only
  std::vector<bool> served_ok;      // per user
  std::vector<bool> toa_ok;         // per user, pairwise within the cluster

  int qos_violations = 0;
  int prb_budget_violations = 0;
  int min_prb_violations = 0;
  int served_violations = 0;
  int toa_violations = 0;

  int total_violations() const {
    return qos_violations + prb_budget_violations + min_prb_violations +
           served_violations + toa_violations;
  }
};

struct AssignResult {
  ClusterAssignment assignment;
  PrbLedger ledger;
  std::vector<double> rates;  // achievable rate per user, 0 when unserved
};

/// Distance-resource-limited clustering: users in descending priority order
/// anchor on the strongest PRB-feasible SBS and greedily add
/// ToA-compatible, PRB-feasible SBSs until the reservation fits the QoS
/// target.
AssignResult drc_assign(const Scenario& scenario, const SchemeConfig& cfg,
                        const RadioParams& rp);

/// Power-threshold baseline: every SBS with received power above the
/// threshold joins the cluster; strongest SBS as fallback.
AssignResult bpc_assign(const Scenario& scenario, const SchemeConfig& cfg,
                        const RadioParams& rp);

/// Nearest-distance baseline: the bdc_cluster_size closest SBSs join.
AssignResult bdc_assign(const Scenario& scenario, const SchemeConfig& cfg,
                        const RadioParams& rp);

/// Dispatch on cfg.scheme.
AssignResult assign_clusters(const Scenario& scenario, const SchemeConfig& cfg,
                             const RadioParams& rp);

ConstraintReport check_constraints(const ClusterAssignment& assignment,
                                   const Scenario& scenario,
                                   const RadioParams& rp,
                                   const SchemeConfig& cfg);

}  // namespace jtcomp

#endif  // JTCOMP_CLUSTERING_HPP
