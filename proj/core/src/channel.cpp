#include "fluidcomp/channel.hpp"

#include <cmath>
#include <numbers>

#include "fluidcomp/errors.hpp"

namespace fluidcomp {

CVector steering_vector(const RVector& positions, double angle, double wavelength) {
  const double wavenumber = 2.0 * std::numbers::pi / wavelength * std::cos(angle);
  CVector a(positions.size());
  for (Eigen::Index n = 0; n < positions.size(); ++n) {
    a[n] = std::polar(1.0, wavenumber * positions[n]);
  }
  return a;
}

ChannelMatrix channel_matrix(const Scenario& scenario, const RVector& positions,
                             const SystemConfig& config) {
  if (scenario.gains.size() != scenario.angles.size()) {
    throw ShapeError("scenario gains and angles differ in length");
  }
  if (positions.size() != config.n_antennas) {
    throw ShapeError("position vector length does not match n_antennas");
  }
  CMatrix h(positions.size(), scenario.gains.size());
  for (Eigen::Index k = 0; k < scenario.gains.size(); ++k) {
    h.col(k) = scenario.gains[k] * steering_vector(positions, scenario.angles[k], config.wavelength);
  }
  return ChannelMatrix(std::move(h));
}

}  // namespace fluidcomp
