#pragma once

#include <functional>

#include "hv/geometry.hpp"
#include "hv/profile.hpp"

namespace hv {

/// The majorant v(t) = \int_t^inf s f**(s) / K(s)^2 ds built from a
/// maximal profile f**, where K(t) = n sigma_n sinh^{n-1}(F(t)).  The
/// derivative v'(t) = -t f**(t)/K(t)^2 is exact (no differencing).
struct MajorantResult {
  Profile v;
  std::function<double(double)> vprime;
};

MajorantResult majorant_v(const Profile& f_star_star, const SpaceParams& space);

/// T(v) = majorant of the maximal function of v: one step of the
/// extremal-sequence iteration.
Profile apply_T(const Profile& v, const SpaceParams& space);

}  // namespace hv
