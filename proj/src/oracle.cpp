#include "jtcomp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace jtcomp {

namespace {

constexpr double kQosSlack = 1e-9;
constexpr double kDistanceSlack = 1e-9;

/// Row-major lexicographic key of a cluster-row bitmask: c_k0 is the most
/// significant position.
unsigned lex_key(unsigned mask, std::size_t num_sbs) {
  unsigned key = 0;
  for (std::size_t m = 0; m < num_sbs; ++m) {
    key = (key << 1) | ((mask >> m) & 1u);
  }
  return key;
}

struct RowOption {
  unsigned mask = 0;
  std::vector<int> members;
  double rate = 0.0;
  int gamma = 0;
  double contribution = 0.0;  // N_k^B * gamma * rate
};

}  // namespace

TinyInstance TinyInstance::make(double side_length, std::vector<Point> users,
                                std::vector<Point> sbs, const Matrix& beta,
                                const Matrix& fading, double tx_power) {
  if (users.size() > kMaxUsers || sbs.size() > kMaxSbs) {
    throw std::invalid_argument("TinyInstance: exceeds enumeration bounds");
  }
  TinyInstance inst;
  inst.scenario.region = Region{side_length, Metric::kPlane};
  inst.scenario.users.positions = std::move(users);
  inst.scenario.sbs.positions = std::move(sbs);
  inst.scenario.dist = distance_matrix(inst.scenario.users, inst.scenario.sbs,
                                       inst.scenario.region);
  const std::size_t k_n = inst.scenario.num_users();
  const std::size_t m_n = inst.scenario.num_sbs();
  if (beta.rows() != k_n || beta.cols() != m_n || fading.rows() != k_n ||
      fading.cols() != m_n) {
    throw std::invalid_argument("TinyInstance: matrix shape mismatch");
  }
  inst.scenario.chan.beta = beta;
  inst.scenario.chan.fading = fading;
  inst.scenario.chan.power = Matrix(k_n, m_n);
  for (std::size_t k = 0; k < k_n; ++k) {
    for (std::size_t m = 0; m < m_n; ++m) {
      double r = inst.scenario.dist(k, m);
      if (r <= 0.0) r = 1e-3;
      inst.scenario.chan.power(k, m) =
          tx_power * fading(k, m) * std::pow(r, -beta(k, m));
    }
  }
  return inst;
}

OracleResult exhaustive_min_backhaul(const TinyInstance& inst,
                                     const RadioParams& rp,
                                     const SchemeConfig& cfg) {
  const Scenario& sc = inst.scenario;
  const std::size_t num_users = sc.num_users();
  const std::size_t num_sbs = sc.num_sbs();
  if (num_users > TinyInstance::kMaxUsers || num_sbs > TinyInstance::kMaxSbs) {
    throw std::invalid_argument(
        "exhaustive_min_backhaul: instance too large to enumerate");
  }
  rp.validate();
  cfg.validate();

  std::vector<double> totals(num_users, 0.0);
  for (std::size_t k = 0; k < num_users; ++k) {
    for (std::size_t m = 0; m < num_sbs; ++m) totals[k] += sc.chan.power(k, m);
  }

  // Per-user candidate rows: every non-empty SBS subset that passes the
  // pairwise ToA bound and the QoS identity, ordered lexicographically so
  // the first minimizer found is the lexicographically smallest matrix.
  const unsigned row_count = 1u << num_sbs;
  std::vector<std::vector<RowOption>> options(num_users);
  for (std::size_t k = 0; k < num_users; ++k) {
    for (unsigned mask = 1; mask < row_count; ++mask) {
      RowOption opt;
      opt.mask = mask;
      double desired = 0.0;
      for (std::size_t m = 0; m < num_sbs; ++m) {
        if (mask & (1u << m)) {
          opt.members.push_back(static_cast<int>(m));
          desired += sc.chan.power(k, m);
        }
      }
      bool toa_ok = true;
      for (std::size_t i = 0; i + 1 < opt.members.size() && toa_ok; ++i) {
        for (std::size_t j = i + 1; j < opt.members.size(); ++j) {
          if (std::fabs(sc.dist(k, opt.members[i]) -
                        sc.dist(k, opt.members[j])) >
              cfg.toa_distance_budget + kDistanceSlack) {
            toa_ok = false;
            break;
          }
        }
      }
      if (!toa_ok) continue;
      const double s = desired / (totals[k] - desired + rp.noise_power);
      opt.rate = achievable_rate(s, rp.bandwidth);
      if (!(opt.rate > 0.0)) continue;
      opt.gamma = prb_demand(rp.rate_min, opt.rate);
      if (opt.gamma > cfg.prb_capacity) continue;  // can never fit the budget
      if (opt.gamma * opt.rate < rp.rate_min - kQosSlack) continue;
      opt.contribution =
          static_cast<double>(opt.members.size()) * opt.gamma * opt.rate;
      options[k].push_back(std::move(opt));
    }
    std::sort(options[k].begin(), options[k].end(),
              [&](const RowOption& a, const RowOption& b) {
                return lex_key(a.mask, num_sbs) < lex_key(b.mask, num_sbs);
              });
  }

  OracleResult result;
  double best = std::numeric_limits<double>::infinity();
  std::vector<const RowOption*> chosen(num_users, nullptr);
  std::vector<int> used(num_sbs, 0);

  auto recurse = [&](auto&& self, std::size_t k, double partial) -> void {
    if (k == num_users) {
      const double backhaul = partial / static_cast<double>(num_sbs);
      if (backhaul < best) {
        best = backhaul;
        result.feasible = true;
        result.backhaul = backhaul;
        result.best.cluster.assign(num_users, {});
        result.best.prb_demand.assign(num_users, 0);
        result.best.qos_met.assign(num_users, true);
        for (std::size_t u = 0; u < num_users; ++u) {
          result.best.cluster[u] = chosen[u]->members;
          result.best.prb_demand[u] = chosen[u]->gamma;
        }
      }
      return;
    }
    for (const RowOption& opt : options[k]) {
      bool fits = true;
      for (int m : opt.members) {
        if (used[m] + opt.gamma > cfg.prb_capacity) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (int m : opt.members) used[m] += opt.gamma;
      chosen[k] = &opt;
      self(self, k + 1, partial + opt.contribution);
      for (int m : opt.members) used[m] -= opt.gamma;
    }
  };
  recurse(recurse, 0, 0.0);
  return result;
}

ClusterAssignment assignment_from_masks(const TinyInstance& inst,
                                        const std::vector<unsigned>& row_masks,
                                        const RadioParams& rp) {
  const Scenario& sc = inst.scenario;
  const std::size_t num_users = sc.num_users();
  const std::size_t num_sbs = sc.num_sbs();
  if (row_masks.size() != num_users) {
    throw std::invalid_argument("assignment_from_masks: row count mismatch");
  }
  ClusterAssignment a;
  a.cluster.resize(num_users);
  a.prb_demand.assign(num_users, 0);
  a.qos_met.assign(num_users, false);
  for (std::size_t k = 0; k < num_users; ++k) {
    for (std::size_t m = 0; m < num_sbs; ++m) {
      if (row_masks[k] & (1u << m)) {
        a.cluster[k].push_back(static_cast<int>(m));
      }
    }
    if (a.cluster[k].empty()) continue;
    const double rate = achievable_rate(
        sinr(k, a.cluster[k], sc.chan.power, rp.noise_power), rp.bandwidth);
    a.prb_demand[k] = prb_demand(rp.rate_min, rate);
    a.qos_met[k] = a.prb_demand[k] * rate >= rp.rate_min - kQosSlack;
  }
  return a;
}

bool oracle_feasible(const TinyInstance& inst,
                     const std::vector<unsigned>& row_masks,
                     const RadioParams& rp, const SchemeConfig& cfg) {
  const Scenario& sc = inst.scenario;
  const std::size_t num_users = sc.num_users();
  const std::size_t num_sbs = sc.num_sbs();
  std::vector<int> used(num_sbs, 0);
  for (std::size_t k = 0; k < num_users; ++k) {
    const unsigned mask = row_masks[k];
    if (mask == 0) return false;  // every user must be served
    std::vector<int> members;
    double desired = 0.0;
    double total = 0.0;
    for (std::size_t m = 0; m < num_sbs; ++m) {
      total += sc.chan.power(k, m);
      if (mask & (1u << m)) {
        members.push_back(static_cast<int>(m));
        desired += sc.chan.power(k, m);
      }
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (std::fabs(sc.dist(k, members[i]) - sc.dist(k, members[j])) >
            cfg.toa_distance_budget + kDistanceSlack) {
          return false;
        }
      }
    }
    const double s = desired / (total - desired + rp.noise_power);
    const double rate = rp.bandwidth * std::log2(1.0 + s);
    if (!(rate > 0.0)) return false;
    int gamma = static_cast<int>(std::ceil(rp.rate_min / rate));
    if (gamma < 1) gamma = 1;
    if (gamma * rate < rp.rate_min - kQosSlack) ++gamma;
    if (gamma * rate < rp.rate_min - kQosSlack) return false;
    for (int m : members) used[m] += gamma;
  }
  for (std::size_t m = 0; m < num_sbs; ++m) {
    if (used[m] > cfg.prb_capacity) return false;
  }
  return true;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.size() < 2) {
    throw std::invalid_argument("ks_statistic: need at least 2 samples");
  }
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double lo = f - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - f;
    sup = std::max({sup, lo, hi});
  }
  return sup;
}

}  // namespace jtcomp
