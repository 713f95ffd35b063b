#ifndef JTCOMP_GEOMETRY_HPP
#define JTCOMP_GEOMETRY_HPP

#include <vector>

#include "jtcomp/matrix.hpp"
#include "jtcomp/random.hpp"

namespace jtcomp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class Metric { kTorus, kPlane };

/// Square deployment region [0, L)^2. The torus metric wraps at the edges so
/// interference sums carry no boundary bias; the plane metric keeps
/// hand-checkable instances Euclidean.
struct Region {
  double side_length = 1000.0;  // meters
  Metric metric = Metric::kTorus;
};

struct PointSet {
  std::vector<Point> positions;

  std::size_t size() const { return positions.size(); }
  bool empty() const { return positions.empty(); }
};

/// Homogeneous PPP on the region: Poisson count with mean intensity * L^2,
/// positions i.i.d. uniform.
PointSet sample_ppp(double intensity, const Region& region, RandomStream& rng);

double distance(const Point& p, const Point& q, const Region& region);

/// Entry (k, m) is the distance from user k to SBS m.
Matrix distance_matrix(const PointSet& users, const PointSet& sbs,
                       const Region& region);

}  // namespace jtcomp

#endif  // JTCOMP_GEOMETRY_HPP
