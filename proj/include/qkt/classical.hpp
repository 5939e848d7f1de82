#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qkt {

struct SphericalCoord {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi)
};

/// Unit vector on the sphere, X = sin(theta)cos(phi), Y = sin(theta)sin(phi),
/// Z = cos(theta).
struct ClassicalState {
  double x = 0.0, y = 0.0, z = 1.0;

  double norm() const;
};

ClassicalState to_cartesian(const SphericalCoord& c);
SphericalCoord to_spherical(const ClassicalState& s);

/// One period of the classical kicked-top map:
///   X' = Z cos(kX) + Y sin(kX)
///   Y' = -Z sin(kX) + Y cos(kX)
///   Z' = -X
/// (pi/2 kick about y followed by torsion about z). The map preserves the
/// norm exactly in real arithmetic; the result is renormalized to strip
/// floating-point drift.
ClassicalState classical_step(const ClassicalState& s, double k);

/// Iterates classical_step; returns n_steps+1 points including the seed.
std::vector<SphericalCoord> classical_trajectory(const SphericalCoord& c0,
                                                 double k, int n_steps);

struct PhasePortrait {
  struct Point {
    int traj_id;
    int iter;
    double theta;
    double phi;
  };
  double k = 0.0;
  std::vector<Point> points;
};

/// Seeds grid x grid initial conditions uniform in (cos theta, phi) — cell
/// midpoints, so the poles are never hit exactly — and iterates each seed
/// n_iter steps, collecting every visited point (iterate 0 included).
PhasePortrait generate_portrait(double k, int grid, int n_iter);

/// Reference initial conditions of the k = 3 mixed phase space. A/A' are the
/// period-1 island centers, E/E' the period-two island pair, B a border orbit
/// at the edge of the A island, C a point in the connected chaotic sea.
enum class NamedPoint { A, APrime, B, C, E, EPrime };

SphericalCoord named_point_coord(NamedPoint p);
std::optional<NamedPoint> parse_named_point(std::string_view label);
std::string named_point_label(NamedPoint p);

}  // namespace qkt
