#ifndef CVQRC_OPTICS_CRYSTAL_HPP
#define CVQRC_OPTICS_CRYSTAL_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <string>

namespace cvqrc::optics {

enum class Axis { x = 0, y = 1, z = 2 };

Axis axis_from_string(const std::string& name);
const char* to_string(Axis axis);

// n^2(lambda) = c[0] + c[1] / (lambda^2 - c[2]) + c[3] / (lambda^2 - c[4]),
// lambda in micrometres.
struct SellmeierCoefficients {
  std::array<double, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
};

// Polarisation axis seen by each of the three interacting fields.
struct AxisMap {
  Axis pump = Axis::z;
  Axis signal = Axis::z;
  Axis idler = Axis::z;
};

struct CrystalSpec {
  std::string name = "unnamed";
  std::array<SellmeierCoefficients, 3> sellmeier{};  // indexed by Axis
  std::array<double, 3> waveguide_offset{0.0, 0.0, 0.0};
  double length_m = 1e-2;
  // Absent means no quasi-phase-matching grating (no 2*pi/Lambda term).
  std::optional<double> poling_period_m;
  AxisMap axes{};

  // Throws ConfigError if length or poling period are not positive.
  void validate() const;
};

// Refractive index along `axis` at `lambda_um` micrometres, including the
// waveguide offset. Throws DomainError on a vanishing denominator or a
// non-positive radicand.
double sellmeier_index(Axis axis, double lambda_um, const CrystalSpec& crystal);

// k = 2*pi*n(lambda)/lambda in rad/m for a wavelength given in metres.
double wavenumber(Axis axis, double lambda_m, const CrystalSpec& crystal);

// Delta k = k_P - k_S - k_I - 2*pi/Lambda (rad/m), with the pump wavelength
// fixed by energy conservation 1/lambda_P = 1/lambda_S + 1/lambda_I.
double phase_mismatch(double signal_m, double idler_m, const CrystalSpec& crystal);

// Poling period that cancels the mismatch at the target wavelengths. The
// crystal's own poling period is ignored. Throws DomainError when
// k_P - k_S - k_I <= 0 (no first-order quasi-phase-matching).
double poling_period_optimal(double signal_m, double idler_m, CrystalSpec crystal);

// Returns `crystal` with a grating that phase-matches the degenerate point
// when it has none and the bare mismatch there is non-zero.
CrystalSpec with_degenerate_poling(CrystalSpec crystal, double degenerate_m);

// Dispersionless crystal with index `index` on every axis and no grating.
CrystalSpec toy_crystal(double index = 2.0, double length_m = 1e-2);

// Reads a crystal description (JSON). Throws ConfigError naming the path
// or the offending key.
CrystalSpec load_crystal(const std::filesystem::path& path);

}  // namespace cvqrc::optics

#endif  // CVQRC_OPTICS_CRYSTAL_HPP
