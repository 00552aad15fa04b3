#pragma once

#include "flownet/network.hpp"
#include "flownet/score.hpp"

namespace flownet {

/// Relative tolerance under which two path lengths count as equal.
inline constexpr double kPathLengthTolerance = 1e-12;

/// Directed betweenness with edge length 1/w (heavier flows are shorter).
/// c_b(i) sums sigma_se(i)/sigma_se over ordered pairs s != i != e with e
/// reachable from s. `normalized` divides by (n-1)(n-2), n = active nodes.
ScoreVector betweenness(const TimeSlice& s, bool normalized = false);

}  // namespace flownet
