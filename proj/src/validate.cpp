#include "jtcomp/validate.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "jtcomp/montecarlo.hpp"
#include "jtcomp/oracle.hpp"
#include "jtcomp/quadrature.hpp"

namespace jtcomp {

namespace {

std::string describe(const char* fmt, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

/// Inverse-CDF draw, optionally widened past [0, 1] to emulate a broken
/// sampler.
double draw_rmax(RandomStream& rng, const FractalParams& fp,
                 FaultInjection fault) {
  double u = uniform01(rng);
  if (fault == FaultInjection::kWidenBetaSupport) u = u * 1.2 - 0.1;
  return rmax_from_uniform(u, fp);
}

double rmax_cdf(double r, const FractalParams& fp) {
  if (r <= fp.rho_min) return 0.0;
  if (r >= fp.rho_max) return 1.0;
  const double a = std::pow(fp.rho_min, -fp.epsilon);
  const double b = std::pow(fp.rho_max, -fp.epsilon);
  return (a - std::pow(r, -fp.epsilon)) / (a - b);
}

TinyInstance random_tiny_instance(RandomStream& rng, std::size_t num_users,
                                  std::size_t num_sbs) {
  const double side = 600.0;
  std::vector<Point> users(num_users), sbs(num_sbs);
  for (auto& p : users) p = {uniform01(rng) * side, uniform01(rng) * side};
  for (auto& p : sbs) p = {uniform01(rng) * side, uniform01(rng) * side};
  Matrix beta(num_users, num_sbs), fading(num_users, num_sbs);
  for (std::size_t k = 0; k < num_users; ++k) {
    for (std::size_t m = 0; m < num_sbs; ++m) {
      beta(k, m) = 2.0 + 3.0 * uniform01(rng);
      fading(k, m) = exponential1(rng);
    }
  }
  return TinyInstance::make(side, std::move(users), std::move(sbs), beta,
                            fading, 1.0);
}

}  // namespace

std::vector<CheckResult> run_validation(FaultInjection fault,
                                        std::uint64_t seed) {
  std::vector<CheckResult> out;
  const FractalParams fp;
  RandomStream rng = make_drop_stream(seed, 0);

  // --- boundary-radius sampler vs its closed-form CDF -------------------
  {
    const std::size_t n = 100000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = draw_rmax(rng, fp, fault);

    const double ks =
        ks_statistic(samples, [&](double r) { return rmax_cdf(r, fp); });
    out.push_back({"rmax-ks", ks < 0.006,
                   describe("statistic %.5f (limit %.3f)", ks, 0.006)});

    bool in_support = true;
    for (double s : samples) {
      if (s < fp.rho_min - 1e-9 || s > fp.rho_max + 1e-9) in_support = false;
    }
    out.push_back({"rmax-support", in_support,
                   in_support ? "all samples in [rho_min, rho_max]"
                              : "sample outside [rho_min, rho_max]"});
  }

  // --- induced path-loss exponent distribution --------------------------
  {
    const std::size_t n = 1000000;
    const double blo = fp.beta_min();
    const double bhi = fp.beta_max();
    const int bins = 50;
    std::vector<double> counts(bins, 0.0);
    bool in_support = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = draw_rmax(rng, fp, fault);
      double b;
      if (r > 1.0) {
        b = beta_from_rmax(r, fp.zeta);
      } else {
        b = -1.0;  // broken sampler artifact; flag instead of throwing
      }
      if (b < blo - 1e-9 || b > bhi + 1e-9) {
        in_support = false;
        continue;
      }
      int bin = static_cast<int>((b - blo) / (bhi - blo) * bins);
      if (bin == bins) bin = bins - 1;
      counts[bin] += 1.0;
    }
    out.push_back({"beta-support", in_support,
                   in_support ? "all exponents inside the induced support"
                              : "exponent outside the induced support"});

    double max_rel = 0.0;
    int compared = 0;
    const double width = (bhi - blo) / bins;
    for (int i = 0; i < bins; ++i) {
      const double lo = blo + i * width;
      const double expected = adaptive_simpson(
          [&](double b) { return beta_pdf(b, fp); }, lo, lo + width, 1e-10);
      if (expected < 0.01) continue;  // too little mass for a 5% bound
      ++compared;
      const double observed = counts[i] / static_cast<double>(n);
      max_rel = std::max(max_rel, std::fabs(observed - expected) / expected);
    }
    out.push_back({"beta-histogram", compared > 0 && max_rel < 0.05,
                   describe("max relative error %.4f over %.0f bins", max_rel,
                            static_cast<double>(compared))});
  }

  // --- density normalizations -------------------------------------------
  {
    const double ir = adaptive_simpson(
        [&](double r) { return rmax_pdf(r, fp); }, fp.rho_min, fp.rho_max,
        1e-10);
    out.push_back({"rmax-pdf-normalization", std::fabs(ir - 1.0) < 1e-6,
                   describe("integral %.9f (target 1 +- %g)", ir, 1e-6)});
    const double ib = adaptive_simpson(
        [&](double b) { return beta_pdf(b, fp); }, fp.beta_min(),
        fp.beta_max(), 1e-10);
    out.push_back({"beta-pdf-normalization", std::fabs(ib - 1.0) < 1e-6,
                   describe("integral %.9f (target 1 +- %g)", ib, 1e-6)});
  }

  // --- fading moments ----------------------------------------------------
  {
    const std::size_t n = 1000000;
    double sum = 0.0;
    std::size_t above_one = 0;
    bool positive = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double h = sample_fading(rng);
      if (h <= 0.0) positive = false;
      sum += h;
      if (h > 1.0) ++above_one;
    }
    const double mean = sum / static_cast<double>(n);
    const double tail = static_cast<double>(above_one) / static_cast<double>(n);
    const bool ok = positive && mean > 0.996 && mean < 1.004 &&
                    std::fabs(tail - std::exp(-1.0)) < 0.003;
    out.push_back({"fading-moments", ok,
                   describe("mean %.5f, P(h>1) %.5f", mean, tail)});
  }

  // --- exhaustive oracle vs the greedy scheme ----------------------------
  {
    const RadioParams rp;
    SchemeConfig cfg;
    RandomStream trng = make_drop_stream(seed, 1);
    int checked = 0;
    int failures = 0;
    double gap_sum = 0.0;
    int gaps = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t num_users = 1 + trng() % 3;
      const std::size_t num_sbs = 2 + trng() % 4;
      const TinyInstance inst = random_tiny_instance(trng, num_users, num_sbs);
      const AssignResult drc = drc_assign(inst.scenario, cfg, rp);
      bool all_qos = true;
      for (bool q : drc.assignment.qos_met) all_qos = all_qos && q;
      if (!all_qos) continue;
      ++checked;

      const OracleResult opt = exhaustive_min_backhaul(inst, rp, cfg);
      const double drc_backhaul = network_backhaul(
          drc.assignment, drc.rates, inst.scenario.num_sbs());
      std::vector<unsigned> masks(num_users, 0);
      for (std::size_t k = 0; k < num_users; ++k) {
        for (int m : drc.assignment.cluster[k]) masks[k] |= 1u << m;
      }
      const bool feasible = oracle_feasible(inst, masks, rp, cfg);
      const bool no_viol =
          check_constraints(drc.assignment, inst.scenario, rp, cfg)
              .total_violations() == 0;
      if (!opt.feasible || !feasible || !no_viol ||
          drc_backhaul < opt.backhaul - 1e-9) {
        ++failures;
      } else {
        gap_sum += drc_backhaul / opt.backhaul;
        ++gaps;
      }
    }
    const double mean_gap = gaps > 0 ? gap_sum / gaps : 0.0;
    out.push_back({"oracle-gap", checked > 0 && failures == 0,
                   describe("%.0f instances, mean gap ratio %.4f",
                            static_cast<double>(checked), mean_gap)});
  }

  // --- oracle feasibility filter vs the constraint checker ---------------
  {
    const RadioParams rp;
    const SchemeConfig cfg;
    RandomStream trng = make_drop_stream(seed, 2);
    const TinyInstance inst = random_tiny_instance(trng, 2, 4);
    int disagreements = 0;
    for (unsigned c = 0; c < (1u << 8); ++c) {
      const std::vector<unsigned> masks{c & 0xFu, (c >> 4) & 0xFu};
      const ClusterAssignment a = assignment_from_masks(inst, masks, rp);
      const bool via_checker =
          check_constraints(a, inst.scenario, rp, cfg).total_violations() == 0;
      const bool via_oracle = oracle_feasible(inst, masks, rp, cfg);
      if (via_checker != via_oracle) ++disagreements;
    }
    out.push_back({"oracle-filter-agreement", disagreements == 0,
                   describe("%.0f disagreements over %.0f matrices",
                            static_cast<double>(disagreements), 256.0)});
  }

  // --- clustering constraint invariants at default densities -------------
  {
    SimParams p;
    p.drops = 20;
    p.master_seed = seed;
    p.schemes = {Scheme::kDrc};
    SchemeConfig assign_cfg = p.cluster;
    assign_cfg.scheme = Scheme::kDrc;
    if (fault == FaultInjection::kDisableDistanceGate) {
      assign_cfg.toa_distance_budget = 1e18;
    }
    int violations = 0;
    int qos_failures = 0;
    for (int i = 0; i < p.drops; ++i) {
      RandomStream drng = make_drop_stream(p.master_seed, i);
      int resamples = 0;
      const Scenario sc = sample_scenario(p, drng, &resamples);
      const AssignResult res = drc_assign(sc, assign_cfg, p.radio);
      const ConstraintReport rep =
          check_constraints(res.assignment, sc, p.radio, p.cluster);
      violations += rep.prb_budget_violations + rep.min_prb_violations +
                    rep.toa_violations;
      for (std::size_t k = 0; k < res.assignment.num_users(); ++k) {
        if (res.assignment.qos_met[k] && !rep.qos_ok[k]) ++qos_failures;
      }
    }
    out.push_back({"drc-constraints", violations == 0 && qos_failures == 0,
                   describe("%.0f budget/ToA violations, %.0f QoS breaks",
                            static_cast<double>(violations),
                            static_cast<double>(qos_failures))});
  }

  return out;
}

}  // namespace jtcomp
