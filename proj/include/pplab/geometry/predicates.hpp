#pragma once

// Orientation predicates with a floating-point filter and an exact rational
// fallback.  Vertex counts feed integer-valued statistics, so the sign of an
// orientation test must never depend on rounding: when the computed
// determinant lies inside its forward error bound we re-evaluate with
// arbitrary-precision rationals (doubles are dyadic, so the conversion is
// exact).

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace pplab::geo {

using exact_rational = boost::multiprecision::cpp_rational;

namespace detail {

// Forward error bounds after Shewchuk; slightly enlarged constants are fine
// (they only cause extra exact evaluations).
inline constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
inline constexpr double kOrient2dBound = (3.0 + 16.0 * kEps) * kEps;
inline constexpr double kOrient3dBound = (7.0 + 56.0 * kEps) * kEps;

inline int sign_of(const exact_rational& v) {
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

}  // namespace detail

// Sign of the signed area of triangle (a,b,c): +1 for counter-clockwise,
// -1 for clockwise, 0 for exactly collinear.
inline int orient2d(const double* a, const double* b, const double* c) {
  const double detleft = (a[0] - c[0]) * (b[1] - c[1]);
  const double detright = (a[1] - c[1]) * (b[0] - c[0]);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    detsum = -detleft - detright;
  } else {
    return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
  }

  const double errbound = detail::kOrient2dBound * detsum;
  if (det > errbound || -det > errbound) return det > 0.0 ? 1 : -1;

  const exact_rational ax(a[0]), ay(a[1]), bx(b[0]), by(b[1]), cx(c[0]), cy(c[1]);
  return detail::sign_of((ax - cx) * (by - cy) - (ay - cy) * (bx - cx));
}

// Sign of det[b-a; c-a; d-a]: positive when d lies on the side of plane
// (a,b,c) where the triple (a,b,c) appears counter-clockwise.
inline int orient3d(const double* a, const double* b, const double* c,
                    const double* d) {
  const double adx = a[0] - d[0], ady = a[1] - d[1], adz = a[2] - d[2];
  const double bdx = b[0] - d[0], bdy = b[1] - d[1], bdz = b[2] - d[2];
  const double cdx = c[0] - d[0], cdy = c[1] - d[1], cdz = c[2] - d[2];

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;

  const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) +
                     cdz * (adxbdy - bdxady);

  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * std::abs(adz) +
                           (std::abs(cdxady) + std::abs(adxcdy)) * std::abs(bdz) +
                           (std::abs(adxbdy) + std::abs(bdxady)) * std::abs(cdz);
  const double errbound = detail::kOrient3dBound * permanent;
  if (det > errbound || -det > errbound) return det > 0.0 ? 1 : -1;

  const exact_rational ax(a[0]), ay(a[1]), az(a[2]);
  const exact_rational bx(b[0]), by(b[1]), bz(b[2]);
  const exact_rational cx(c[0]), cy(c[1]), cz(c[2]);
  const exact_rational dx(d[0]), dy(d[1]), dz(d[2]);
  const exact_rational eadx = ax - dx, eady = ay - dy, eadz = az - dz;
  const exact_rational ebdx = bx - dx, ebdy = by - dy, ebdz = bz - dz;
  const exact_rational ecdx = cx - dx, ecdy = cy - dy, ecdz = cz - dz;
  const exact_rational edet = eadz * (ebdx * ecdy - ecdx * ebdy) +
                              ebdz * (ecdx * eady - eadx * ecdy) +
                              ecdz * (eadx * ebdy - ebdx * eady);
  return detail::sign_of(edet);
}

}  // namespace pplab::geo
