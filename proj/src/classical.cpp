#include "qkt/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qkt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double ClassicalState::norm() const { return std::sqrt(x * x + y * y + z * z); }

ClassicalState to_cartesian(const SphericalCoord& c) {
  return {std::sin(c.theta) * std::cos(c.phi),
          std::sin(c.theta) * std::sin(c.phi), std::cos(c.theta)};
}

SphericalCoord to_spherical(const ClassicalState& s) {
  const double r = s.norm();
  double z = r > 0.0 ? s.z / r : 1.0;
  z = std::clamp(z, -1.0, 1.0);
  double phi = std::atan2(s.y, s.x);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return {std::acos(z), phi};
}

ClassicalState classical_step(const ClassicalState& s, double k) {
  const double c = std::cos(k * s.x);
  const double sn = std::sin(k * s.x);
  ClassicalState next{s.z * c + s.y * sn, -s.z * sn + s.y * c, -s.x};
  const double r = next.norm();
  if (r > 0.0) {
    next.x /= r;
    next.y /= r;
    next.z /= r;
  }
  return next;
}

std::vector<SphericalCoord> classical_trajectory(const SphericalCoord& c0,
                                                 double k, int n_steps) {
  if (n_steps < 0) {
    throw std::invalid_argument("classical_trajectory: n_steps must be >= 0");
  }
  std::vector<SphericalCoord> out;
  out.reserve(n_steps + 1);
  out.push_back(c0);
  ClassicalState s = to_cartesian(c0);
  for (int i = 0; i < n_steps; ++i) {
    s = classical_step(s, k);
    out.push_back(to_spherical(s));
  }
  return out;
}

PhasePortrait generate_portrait(double k, int grid, int n_iter) {
  if (grid < 2) throw std::invalid_argument("generate_portrait: grid >= 2");
  if (n_iter < 1) throw std::invalid_argument("generate_portrait: n_iter >= 1");

  PhasePortrait portrait;
  portrait.k = k;
  portrait.points.reserve(static_cast<std::size_t>(grid) * grid * (n_iter + 1));
  int traj_id = 0;
  for (int a = 0; a < grid; ++a) {
    const double cos_theta = -1.0 + (a + 0.5) * 2.0 / grid;
    for (int b = 0; b < grid; ++b) {
      const double phi = (b + 0.5) * kTwoPi / grid;
      SphericalCoord c{std::acos(cos_theta), phi};
      ClassicalState s = to_cartesian(c);
      portrait.points.push_back({traj_id, 0, c.theta, c.phi});
      for (int it = 1; it <= n_iter; ++it) {
        s = classical_step(s, k);
        const SphericalCoord sc = to_spherical(s);
        portrait.points.push_back({traj_id, it, sc.theta, sc.phi});
      }
      ++traj_id;
    }
  }
  return portrait;
}

SphericalCoord named_point_coord(NamedPoint p) {
  switch (p) {
    case NamedPoint::A:
      return {2.25, 0.63};
    case NamedPoint::APrime:
      return {kPi - 2.25, kPi - 0.63};
    // Border orbit at the edge of the A island; the default (2.25, 1.03)
    // sits on the outermost regular ring before the chaotic sea.
    case NamedPoint::B:
      return {2.25, 1.03};
    case NamedPoint::C:
      return {1.40, 2.20};
    case NamedPoint::E:
      return {2.25, 0.63 + kPi};
    case NamedPoint::EPrime:
      return {kPi - 2.25, kTwoPi - 0.63};
  }
  throw std::logic_error("named_point_coord: unknown point");
}

std::optional<NamedPoint> parse_named_point(std::string_view label) {
  if (label == "A") return NamedPoint::A;
  if (label == "A'" || label == "Ap") return NamedPoint::APrime;
  if (label == "B") return NamedPoint::B;
  if (label == "C") return NamedPoint::C;
  if (label == "E") return NamedPoint::E;
  if (label == "E'" || label == "Ep") return NamedPoint::EPrime;
  return std::nullopt;
}

std::string named_point_label(NamedPoint p) {
  switch (p) {
    case NamedPoint::A:
      return "A";
    case NamedPoint::APrime:
      return "A'";
    case NamedPoint::B:
      return "B";
    case NamedPoint::C:
      return "C";
    case NamedPoint::E:
      return "E";
    case NamedPoint::EPrime:
      return "E'";
  }
  return "?";
}

}  // namespace qkt
