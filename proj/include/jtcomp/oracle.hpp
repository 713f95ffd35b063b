#ifndef JTCOMP_ORACLE_HPP
#define JTCOMP_ORACLE_HPP

#include <functional>
#include <vector>

#include "jtcomp/clustering.hpp"
#include "jtcomp/scenario.hpp"

namespace jtcomp {

/// A fully explicit hand-set instance small enough to enumerate every
/// cluster matrix: at most 4 users and 6 SBSs.
struct TinyInstance {
  Scenario scenario;

  static constexpr std::size_t kMaxUsers = 4;
  static constexpr std::size_t kMaxSbs = 6;

  /// Builds a plane-metric scenario from explicit positions with hand-set
  /// per-link exponents and fading; distances and powers are derived.
  static TinyInstance make(double side_length, std::vector<Point> users,
                           std::vector<Point> sbs, const Matrix& beta,
                           const Matrix& fading, double tx_power);
};

struct OracleResult {
  bool feasible = false;
  ClusterAssignment best;       // lexicographically smallest minimizer
  double backhaul = 0.0;        // network backhaul of the optimum
};

/// Enumerates every C in {0,1}^(K x M), filters by the five constraints of
/// the minimization (checked inline, independently of check_constraints),
/// and returns the feasible backhaul minimizer.
OracleResult exhaustive_min_backhaul(const TinyInstance& inst,
                                     const RadioParams& rp,
                                     const SchemeConfig& cfg);

/// Builds the assignment a given cluster matrix implies: PRB demands from
/// the cluster rates, qos_met for every served user.
ClusterAssignment assignment_from_masks(const TinyInstance& inst,
                                        const std::vector<unsigned>& row_masks,
                                        const RadioParams& rp);

/// The oracle's own feasibility predicate for one cluster matrix; shares no
/// code path with check_constraints beyond the type definitions.
bool oracle_feasible(const TinyInstance& inst,
                     const std::vector<unsigned>& row_masks,
                     const RadioParams& rp, const SchemeConfig& cfg);

/// Sup-norm distance between the empirical CDF of the samples and `cdf`.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

}  // namespace jtcomp

#endif  // JTCOMP_ORACLE_HPP
