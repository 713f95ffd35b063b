#ifndef JTCOMP_SCENARIO_HPP
#define JTCOMP_SCENARIO_HPP

#include "jtcomp/channel.hpp"
#include "jtcomp/geometry.hpp"

namespace jtcomp {

/// One sampled network drop. All clustering schemes run against the same
/// Scenario so they are compared under common random numbers.
struct Scenario {
  Region region;
  PointSet users;
  PointSet sbs;
  Matrix dist;              // K x M, meters
  ChannelRealization chan;  // beta / fading / received power, K x M

  std::size_t num_users() const { return users.size(); }
  std::size_t num_sbs() const { return sbs.size(); }
};

}  // namespace jtcomp

#endif  // JTCOMP_SCENARIO_HPP
