// seldkit/geometry.cc

// Copyright 2026  The seldkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "seldkit/geometry.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "seldkit/error.h"

namespace seld {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kRadToDeg = 180.0 / kPi;

// Wrap to [-pi, pi).
double WrapAzimuthRad(double az) {
  az = std::fmod(az + kPi, 2.0 * kPi);
  if (az < 0.0) az += 2.0 * kPi;
  return az - kPi;
}

}  // namespace

Doa Doa::FromDegrees(double azimuth_deg, double elevation_deg) {
  if (!(elevation_deg >= -90.0 && elevation_deg <= 90.0)) {
    ThrowValidation("elevation " + std::to_string(elevation_deg) +
                    " out of range [-90, 90]");
  }
  double el = elevation_deg * kDegToRad;
  double az = WrapAzimuthRad(azimuth_deg * kDegToRad);
  if (std::abs(elevation_deg) == 90.0) az = 0.0;
  return Doa(az, el);
}

Doa Doa::FromCartesian(const Vec3 &v) {
  auto sph = CartToSph(v);
  return FromDegrees(sph[0], sph[1]);
}

double Doa::azimuth_deg() const { return az_rad_ * kRadToDeg; }

double Doa::elevation_deg() const { return el_rad_ * kRadToDeg; }

Vec3 Doa::cartesian() const {
  double ce = std::cos(el_rad_);
  return {std::cos(az_rad_) * ce, std::sin(az_rad_) * ce, std::sin(el_rad_)};
}

Vec3 SphToCart(double azimuth_deg, double elevation_deg) {
  return Doa::FromDegrees(azimuth_deg, elevation_deg).cartesian();
}

std::array<double, 2> CartToSph(const Vec3 &v) {
  double norm = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    ThrowValidation("cannot convert zero or non-finite vector to direction");
  }
  double z = std::clamp(v.z / norm, -1.0, 1.0);
  double el = std::asin(z);
  double horizontal = std::hypot(v.x, v.y);
  // Pole: azimuth is canonically 0.
  double az = horizontal / norm < 1e-12 ? 0.0 : std::atan2(v.y, v.x);
  if (az * kRadToDeg >= 180.0) az = -kPi;
  return {az * kRadToDeg, el * kRadToDeg};
}

double AngularDistanceDeg(const Doa &a, const Doa &b) {
  Vec3 va = a.cartesian();
  Vec3 vb = b.cartesian();
  double dot = va.x * vb.x + va.y * vb.y + va.z * vb.z;
  return std::acos(std::clamp(dot, -1.0, 1.0)) * kRadToDeg;
}

std::array<double, 4> FoaEncodeGains(const Doa &doa) {
  Vec3 v = doa.cartesian();
  return {1.0, v.y, v.z, v.x};  // W, Y, Z, X
}

MicGeometry MicGeometry::Tetrahedral() {
  return MicGeometry{{{{45.0, 35.0, 0.042, 6},
                       {-45.0, -35.0, 0.042, 10},
                       {135.0, -35.0, 0.042, 26},
                       {-135.0, 35.0, 0.042, 22}}}};
}

}  // namespace seld
