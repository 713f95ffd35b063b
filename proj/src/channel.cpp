#include "jtcomp/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace jtcomp {

namespace {
constexpr double kMinDistance = 1e-3;  // meters; perturbs co-located links
}

double FractalParams::beta_min() const { return -zeta / std::log10(rho_max); }
double FractalParams::beta_max() const { return -zeta / std::log10(rho_min); }

void FractalParams::validate() const {
  if (!(epsilon > 1.0 && epsilon <= 2.0)) {
    throw std::invalid_argument("FractalParams: epsilon must be in (1, 2]");
  }
  if (!(rho_min > 1.0 && rho_min < rho_max)) {
    throw std::invalid_argument("FractalParams: need 1 < rho_min < rho_max");
  }
  if (!(zeta < 0.0)) {
    throw std::invalid_argument("FractalParams: zeta must be < 0");
  }
}

double rmax_from_uniform(double u, const FractalParams& fp) {
  const double a = std::pow(fp.rho_min, -fp.epsilon);
  const double b = std::pow(fp.rho_max, -fp.epsilon);
  return std::pow(a - u * (a - b), -1.0 / fp.epsilon);
}

double sample_rmax(RandomStream& rng, const FractalParams& fp) {
  fp.validate();
  return rmax_from_uniform(uniform01(rng), fp);
}

double beta_from_rmax(double rmax, double zeta) {
  if (!(rmax > 1.0)) {
    throw std::invalid_argument("beta_from_rmax: rmax must be > 1");
  }
  if (!(zeta < 0.0)) {
    throw std::invalid_argument("beta_from_rmax: zeta must be < 0");
  }
  return -zeta / std::log10(rmax);
}

double sample_fading(RandomStream& rng) { return exponential1(rng); }

double rmax_pdf(double r, const FractalParams& fp) {
  if (r < fp.rho_min || r > fp.rho_max) return 0.0;
  const double a = std::pow(fp.rho_min, -fp.epsilon);
  const double b = std::pow(fp.rho_max, -fp.epsilon);
  return fp.epsilon / (a - b) * std::pow(r, -(fp.epsilon + 1.0));
}

double beta_pdf(double beta, const FractalParams& fp) {
  if (beta < fp.beta_min() || beta > fp.beta_max()) return 0.0;
  const double a = std::pow(fp.rho_min, -fp.epsilon);
  const double b = std::pow(fp.rho_max, -fp.epsilon);
  const double scale = -fp.epsilon * std::log(10.0) / (a - b);
  return scale * std::pow(10.0, fp.zeta / beta * fp.epsilon) * fp.zeta /
         (beta * beta);
}

ChannelRealization realize_channel(const Matrix& dist, const FractalParams& fp,
                                   double tx_power, RandomStream& rng) {
  fp.validate();
  if (!(tx_power > 0.0)) {
    throw std::invalid_argument("realize_channel: tx_power must be > 0");
  }
  const std::size_t rows = dist.rows();
  const std::size_t cols = dist.cols();
  ChannelRealization ch{Matrix(rows, cols), Matrix(rows, cols),
                        Matrix(rows, cols)};
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t m = 0; m < cols; ++m) {
      double r = dist(k, m);
      if (r <= 0.0) r = kMinDistance;
      if (r <= 0.0) {
        throw std::logic_error("realize_channel: non-positive distance");
      }
      const double b = beta_from_rmax(sample_rmax(rng, fp), fp.zeta);
      const double h = sample_fading(rng);
      ch.beta(k, m) = b;
      ch.fading(k, m) = h;
      ch.power(k, m) = tx_power * h * std::pow(r, -b);
    }
  }
  return ch;
}

}  // namespace jtcomp
