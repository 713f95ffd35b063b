#ifndef JTCOMP_CHANNEL_HPP
#define JTCOMP_CHANNEL_HPP

#include "jtcomp/matrix.hpp"
#include "jtcomp/random.hpp"

namespace jtcomp {

/// Parameters of the anisotropic (fractal) path-loss model. The coverage
/// boundary radius R_max follows a truncated power law on
/// [rho_min, rho_max]; the per-link exponent is beta = -zeta / lg(R_max)
/// with zeta = lg(P_min / P_T) < 0.
struct FractalParams {
  double epsilon = 1.5;    // fractal parameter, in (1, 2]
  double rho_min = 100.0;  // meters
  double rho_max = 1e5;    // meters
  double zeta = -10.0;     // lg(P_min / P_T)

  double beta_min() const;  // attained at rho_max
  double beta_max() const;  // attained at rho_min

  /// Throws std::invalid_argument if any invariant fails.
  void validate() const;
};

/// One i.i.d. channel draw for every (user, SBS) link.
struct ChannelRealization {
  Matrix beta;    // path-loss exponents
  Matrix fading;  // Rayleigh power gains, unit mean
  Matrix power;   // received powers in watts

  bool operator==(const ChannelRealization&) const = default;
};

/// Deterministic inverse-CDF kernel; u in [0, 1] maps onto
/// [rho_min, rho_max].
double rmax_from_uniform(double u, const FractalParams& fp);

double sample_rmax(RandomStream& rng, const FractalParams& fp);

/// beta = -zeta / log10(rmax); strictly decreasing in rmax.
double beta_from_rmax(double rmax, double zeta);

/// Unit-mean exponential power gain (Rayleigh amplitude).
double sample_fading(RandomStream& rng);

/// Truncated power-law density of the coverage boundary radius.
double rmax_pdf(double r, const FractalParams& fp);

/// Density of the path-loss exponent induced by rmax_pdf under
/// beta = -zeta / lg(r).
double beta_pdf(double beta, const FractalParams& fp);

/// Draws beta and fading i.i.d. per link and forms
/// P_km = P_T * h_km * r_km^(-beta_km). Zero distances are perturbed to
/// 1e-3 m first.
ChannelRealization realize_channel(const Matrix& dist, const FractalParams& fp,
                                   double tx_power, RandomStream& rng);

}  // namespace jtcomp

#endif  // JTCOMP_CHANNEL_HPP
