// seldkit/geometry.h

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

#ifndef SELDKIT_GEOMETRY_H_
#define SELDKIT_GEOMETRY_H_

#include <array>
#include <cstddef>

namespace seld {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Direction of arrival on the unit sphere. Angles are stored in radians
// internally and exposed in degrees at every interface. Azimuth is
// counterclockwise-positive from the front (+x toward +y), in [-180, 180);
// elevation is positive up, in [-90, 90]. At |elevation| = 90 the azimuth is
// canonicalized to 0 so spherical round trips are deterministic.
class Doa {
 public:
  Doa() = default;

  // Throws kValidation if elevation is outside [-90, 90]. Azimuth is wrapped
  // into [-180, 180).
  static Doa FromDegrees(double azimuth_deg, double elevation_deg);
  static Doa FromCartesian(const Vec3 &v);  // v need not be normalized

  double azimuth_deg() const;
  double elevation_deg() const;
  Vec3 cartesian() const;

 private:
  Doa(double az_rad, double el_rad) : az_rad_(az_rad), el_rad_(el_rad) {}

  double az_rad_ = 0.0;
  double el_rad_ = 0.0;
};

// x = cos(az)cos(el), y = sin(az)cos(el), z = sin(el) (right-handed, azimuth
// counterclockwise from x toward y). Throws kValidation if elevation is
// outside [-90, 90].
Vec3 SphToCart(double azimuth_deg, double elevation_deg);

// Inverse of SphToCart; accepts any nonzero vector. Returns (azimuth,
// elevation) in degrees with the pole canonicalization described above.
std::array<double, 2> CartToSph(const Vec3 &v);

// Great-circle angle in degrees, in [0, 180]. The dot product is clamped to
// [-1, 1] before acos so antipodal/identical pairs are safe.
double AngularDistanceDeg(const Doa &a, const Doa &b);

// First-order ambisonic encoding gains in ACN order (W, Y, Z, X) under SN3D:
// W = 1, Y = sin(az)cos(el), Z = sin(el), X = cos(az)cos(el).
std::array<double, 4> FoaEncodeGains(const Doa &doa);

// The 4-channel tetrahedral subset of the em32: per-channel direction and
// radius plus the source capsule indices.
struct MicGeometry {
  struct Channel {
    double azimuth_deg;
    double elevation_deg;
    double radius_m;
    int source_index;  // capsule index on the 32-channel array
  };
  std::array<Channel, 4> channels;

  // Channels 6, 10, 26, 22 at (45,35), (-45,-35), (135,-35), (-135,35), all
  // at 4.2 cm radius.
  static MicGeometry Tetrahedral();
};

}  // namespace seld

#endif  // SELDKIT_GEOMETRY_H_
