#include "cvqrc/optics/crystal.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "cvqrc/error.hpp"

namespace cvqrc::optics {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const SellmeierCoefficients& coefficients(Axis axis, const CrystalSpec& crystal) {
  return crystal.sellmeier[static_cast<std::size_t>(axis)];
}

}  // namespace

CrystalSpec parse_crystal(const nlohmann::json& doc, const std::filesystem::path& path);

Axis axis_from_string(const std::string& name) {
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "z") return Axis::z;
  throw ConfigError("unknown crystal axis '" + name + "'", "axes");
}

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

void CrystalSpec::validate() const {
  if (!(length_m > 0.0)) throw ConfigError("crystal length must be positive", "length_m");
  if (poling_period_m && !(*poling_period_m > 0.0)) {
    throw ConfigError("poling period must be positive", "poling_period_m");
  }
}

double sellmeier_index(Axis axis, double lambda_um, const CrystalSpec& crystal) {
  const auto& c = coefficients(axis, crystal).c;
  const double l2 = lambda_um * lambda_um;
  const double d1 = l2 - c[2];
  const double d2 = l2 - c[4];
  if ((c[1] != 0.0 && d1 == 0.0) || (c[3] != 0.0 && d2 == 0.0)) {
    throw DomainError("Sellmeier denominator vanishes at lambda = " +
                      std::to_string(lambda_um) + " um");
  }
  double radicand = c[0];
  if (c[1] != 0.0) radicand += c[1] / d1;
  if (c[3] != 0.0) radicand += c[3] / d2;
  if (!(radicand > 0.0) || !std::isfinite(radicand)) {
    throw DomainError("Sellmeier radicand is not positive at lambda = " +
                      std::to_string(lambda_um) + " um");
  }
  return std::sqrt(radicand) + crystal.waveguide_offset[static_cast<std::size_t>(axis)];
}

double wavenumber(Axis axis, double lambda_m, const CrystalSpec& crystal) {
  return kTwoPi * sellmeier_index(axis, lambda_m * 1e6, crystal) / lambda_m;
}

double phase_mismatch(double signal_m, double idler_m, const CrystalSpec& crystal) {
  if (!(signal_m > 0.0) || !(idler_m > 0.0)) {
    throw DomainError("signal and idler wavelengths must be positive");
  }
  const double pump_m = 1.0 / (1.0 / signal_m + 1.0 / idler_m);
  double dk = wavenumber(crystal.axes.pump, pump_m, crystal) -
              wavenumber(crystal.axes.signal, signal_m, crystal) -
              wavenumber(crystal.axes.idler, idler_m, crystal);
  if (crystal.poling_period_m) dk -= kTwoPi / *crystal.poling_period_m;
  return dk;
}

double poling_period_optimal(double signal_m, double idler_m, CrystalSpec crystal) {
  crystal.poling_period_m.reset();
  const double dk = phase_mismatch(signal_m, idler_m, crystal);
  if (!(dk > 0.0)) {
    throw DomainError("k_P - k_S - k_I is not positive; no first-order quasi-phase-matching");
  }
  return kTwoPi / dk;
}

CrystalSpec with_degenerate_poling(CrystalSpec crystal, double degenerate_m) {
  if (!crystal.poling_period_m &&
      std::abs(phase_mismatch(degenerate_m, degenerate_m, crystal)) > 1e-6) {
    crystal.poling_period_m = poling_period_optimal(degenerate_m, degenerate_m, crystal);
  }
  return crystal;
}

CrystalSpec toy_crystal(double index, double length_m) {
  CrystalSpec crystal;
  crystal.name = "toy";
  for (auto& axis : crystal.sellmeier) axis.c = {index * index, 0.0, 0.0, 0.0, 0.0};
  crystal.length_m = length_m;
  return crystal;
}

CrystalSpec load_crystal(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open crystal file " + path.string(), "crystal");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed crystal file " + path.string() + ": " + e.what(), "crystal");
  }

  try {
    return parse_crystal(doc, path);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad value in crystal file " + path.string() + ": " + e.what(), "crystal");
  }
}

CrystalSpec parse_crystal(const nlohmann::json& doc, const std::filesystem::path& path) {
  CrystalSpec crystal;
  crystal.name = doc.value("name", path.stem().string());
  const auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) {
      throw ConfigError("crystal file " + path.string() + " lacks key '" + key + "'", key);
    }
    return doc.at(key);
  };

  const auto& sellmeier = require("sellmeier");
  for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
    const std::string key = to_string(axis);
    if (!sellmeier.contains(key)) {
      throw ConfigError("crystal file " + path.string() + " lacks sellmeier." + key,
                        "sellmeier." + key);
    }
    const auto values = sellmeier.at(key).get<std::vector<double>>();
    if (values.size() != 5) {
      throw ConfigError("sellmeier." + key + " needs 5 coefficients", "sellmeier." + key);
    }
    std::copy(values.begin(), values.end(),
              crystal.sellmeier[static_cast<std::size_t>(axis)].c.begin());
  }

  crystal.length_m = require("length_m").get<double>();
  if (doc.contains("poling_period_m") && !doc.at("poling_period_m").is_null()) {
    crystal.poling_period_m = doc.at("poling_period_m").get<double>();
  }
  if (doc.contains("waveguide_offset")) {
    const auto& offsets = doc.at("waveguide_offset");
    for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
      crystal.waveguide_offset[static_cast<std::size_t>(axis)] =
          offsets.value(to_string(axis), 0.0);
    }
  }
  if (doc.contains("axes")) {
    const auto& axes = doc.at("axes");
    crystal.axes.pump = axis_from_string(axes.value("pump", "z"));
    crystal.axes.signal = axis_from_string(axes.value("signal", "z"));
    crystal.axes.idler = axis_from_string(axes.value("idler", "z"));
  }
  crystal.validate();
  return crystal;
}

}  // namespace cvqrc::optics
