#include "jtcomp/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace jtcomp {

PointSet sample_ppp(double intensity, const Region& region, RandomStream& rng) {
  if (!std::isfinite(intensity) || intensity < 0.0) {
    throw std::invalid_argument("sample_ppp: intensity must be finite and >= 0");
  }
  if (region.side_length <= 0.0) {
    throw std::invalid_argument("sample_ppp: region side length must be > 0");
  }
  const double l = region.side_length;
  const double mean = intensity * l * l;

  PointSet out;
  if (mean > 0.0) {
    std::poisson_distribution<int> count(mean);
    const int n = count(rng);
    out.positions.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double x = uniform01(rng) * l;
      const double y = uniform01(rng) * l;
      out.positions.push_back({x, y});
    }
  }
  return out;
}

double distance(const Point& p, const Point& q, const Region& region) {
  double dx = std::fabs(p.x - q.x);
  double dy = std::fabs(p.y - q.y);
  if (region.metric == Metric::kTorus) {
    const double l = region.side_length;
    dx = std::min(dx, l - dx);
    dy = std::min(dy, l - dy);
  }
  return std::hypot(dx, dy);
}

Matrix distance_matrix(const PointSet& users, const PointSet& sbs,
                       const Region& region) {
  Matrix d(users.size(), sbs.size());
  for (std::size_t k = 0; k < users.size(); ++k) {
    for (std::size_t m = 0; m < sbs.size(); ++m) {
      d(k, m) = distance(users.positions[k], sbs.positions[m], region);
    }
  }
  return d;
}

}  // namespace jtcomp
