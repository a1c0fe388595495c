#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fssinv/constants.hpp"
#include "fssinv/geometry.hpp"

namespace fssinv {

using Complex = std::complex<double>;

struct MaterialSpec {
  double eps_r = 4.4;      // real relative permittivity, >= 1
  double tan_delta = 0.02; // loss tangent, >= 0
};

inline constexpr MaterialSpec kFr4{4.4, 0.02};
inline constexpr MaterialSpec kAir{1.0, 0.0};

/// Grounded stack: superstrate / resistive-FSS sheet / spacer / PEC.
/// `spacer_mm` is the geometry's t for geometry-driven solves; the
/// raw-sheet entry point uses it directly.  A sheet resistance of
/// +infinity is the open-sheet sentinel (no FSS layer at all).
struct StackSpec {
  MaterialSpec superstrate = kFr4;
  double superstrate_mm = 0.125;
  MaterialSpec spacer = kFr4;
  double spacer_mm = 0.0;
  double sheet_resistance = 100.0;

  bool has_sheet() const { return std::isfinite(sheet_resistance); }

  static StackSpec open_sheet() {
    StackSpec s;
    s.sheet_resistance = std::numeric_limits<double>::infinity();
    return s;
  }
};

/// Uniform frequency grid in GHz; (f_stop - f_start) / f_step must be
/// integral (1e-9 slack).  The default 1/30/0.05 grid has 581 points.
struct FrequencyGrid {
  double f_start = 1.0;
  double f_stop = 30.0;
  double f_step = 0.05;

  std::size_t point_count() const {
    const double ratio = (f_stop - f_start) / f_step;
    const double rounded = std::round(ratio);
    if (!(f_start > 0.0) || !(f_stop > f_start) || !(f_step > 0.0) ||
        std::abs(ratio - rounded) > 1e-9)
      throw std::invalid_argument("frequency grid must be uniform with f_stop reachable from f_start");
    return static_cast<std::size_t>(rounded) + 1;
  }

  double frequency(std::size_t i) const { return f_start + static_cast<double>(i) * f_step; }
};

/// Reflection magnitude per grid point, stored as 20*log10|Gamma| (dB <= 0).
struct ReflectionCurve {
  FrequencyGrid grid;
  std::vector<double> values_db;
};

// ---------------------------------------------------------------------------
// Sheet impedance of the resistive Jerusalem-cross layer.
//
// Series R-L-C grating model with dynamic corrections:
//   * strip-grating inductance   L0 = (mu0/2pi) * d * ln(1/sin(pi c / 2a))
//   * end-cap gap capacitance    C0 = eps_eff*(2 eps0/pi) * b * ln(1/sin(pi (a-b) / 2a))
//   * grating-onset dispersion   1 + kappa*(1-beta^2)*A(u),  A(u)=1/sqrt(1-u^2)-1,
//     u = f*a/c0 (saturated just below the lobe onset u=1)
//   * dipole-arm dispersion on L: tan(u_d)/u_d with u_d = pi f d sqrt(eps_eff)/c0,
//     saturated smoothly below the half-wave pole so the reactance stays Foster
//     (strictly increasing in f) and curves stay smooth.
// The resistive term is the frequency-independent effective sheet
// resistance R_s (100 ohm default).
// ---------------------------------------------------------------------------

namespace sheet_model {
inline constexpr double kGratingKappaL = 2.0;  // grating-correction weight on L
inline constexpr double kGratingKappaC = 0.75; // grating-correction weight on C
inline constexpr double kDipoleSatU = 1.2;     // dipole argument saturation (< pi/2)
inline constexpr double kGratingMaxU = 0.98;   // clamp below the lobe onset
}  // namespace sheet_model

/// Effective series L (H) and C (F) of the cross sheet at frequency f (GHz).
struct SheetElements {
  double inductance;
  double capacitance;
};

inline SheetElements sheet_elements(const UnitCellGeometry& g,
                                    const MaterialSpec& mat, double f_ghz) {
  if (!(f_ghz > 0.0)) throw std::domain_error("sheet_elements: f must be > 0");
  const double gap = g.a - g.b;  // = 2e
  if (!(gap > 0.0)) throw std::domain_error("sheet_elements: requires b < a");
  if (!(g.c > 0.0) || !(g.c < g.a))
    throw std::domain_error("sheet_elements: requires 0 < c < a");
  if (!(g.d > 0.0) || !(g.d < g.a))
    throw std::domain_error("sheet_elements: requires 0 < d < a");

  const double eps_eff = (mat.eps_r + 1.0) / 2.0;
  const double beta_c = std::sin(kPi * g.c / (2.0 * g.a));
  const double beta_g = std::sin(kPi * gap / (2.0 * g.a));

  const double u = std::min(f_ghz * g.a / kC0MmGhz, sheet_model::kGratingMaxU);
  const double grating = 1.0 / std::sqrt(1.0 - u * u) - 1.0;

  const double ud = kPi * f_ghz * g.d * std::sqrt(eps_eff) / kC0MmGhz;
  const double us = sheet_model::kDipoleSatU * std::tanh(ud / sheet_model::kDipoleSatU);
  const double dipole = us > 1e-9 ? std::tan(us) / us : 1.0;

  const double d_m = g.d * 1e-3;
  const double b_m = g.b * 1e-3;
  const double lncsc_c = std::log(1.0 / beta_c);
  const double lncsc_g = std::log(1.0 / beta_g);

  SheetElements el;
  el.inductance = kMu0 / (2.0 * kPi) * d_m * lncsc_c * dipole *
                  (1.0 + sheet_model::kGratingKappaL * (1.0 - beta_c * beta_c) * grating);
  el.capacitance = eps_eff * (2.0 * kEps0 / kPi) * b_m * lncsc_g *
                   (1.0 + sheet_model::kGratingKappaC * (1.0 - beta_g * beta_g) * grating);
  return el;
}

/// Series sheet impedance Z = R_s + j(wL - 1/(wC)) at f (GHz).
inline Complex sheet_impedance(const UnitCellGeometry& g, const MaterialSpec& mat,
                               double sheet_resistance, double f_ghz) {
  const SheetElements el = sheet_elements(g, mat, f_ghz);
  const double omega = 2.0 * kPi * f_ghz * 1e9;
  const double reactance = omega * el.inductance - 1.0 / (omega * el.capacitance);
  return {sheet_resistance, reactance};
}

// ---------------------------------------------------------------------------
// Transmission-line cascade.
// ---------------------------------------------------------------------------

/// 2x2 ABCD transfer matrix.
struct Abcd {
  Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  Abcd operator*(const Abcd& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
            c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
  }

  static Abcd shunt_admittance(Complex y) { return {{1.0, 0.0}, {0.0, 0.0}, y, {1.0, 0.0}}; }
};

/// ABCD matrix of a dielectric slab of the given thickness (mm) at f (GHz):
/// [cos kl, j Zc sin kl; j sin kl / Zc, cos kl] with complex permittivity
/// eps_r (1 - j tan_delta) and the principal square root (Re >= 0).
inline Abcd layer_abcd(const MaterialSpec& mat, double thickness_mm, double f_ghz) {
  if (thickness_mm < 0.0) throw std::domain_error("layer_abcd: thickness must be >= 0");
  if (!(f_ghz > 0.0)) throw std::domain_error("layer_abcd: f must be > 0");
  if (thickness_mm == 0.0) return {};
  const Complex eps_c = mat.eps_r * Complex{1.0, -mat.tan_delta};
  const Complex root = std::sqrt(eps_c);
  const Complex kl = 2.0 * kPi * f_ghz / kC0MmGhz * root * thickness_mm;
  const Complex zc = kEta0 / root;
  const Complex cos_kl = std::cos(kl);
  const Complex sin_kl = std::sin(kl);
  return {cos_kl, Complex{0.0, 1.0} * zc * sin_kl,
          Complex{0.0, 1.0} * sin_kl / zc, cos_kl};
}

struct ReflectionSample {
  Complex gamma;
  double db;
};

inline constexpr double kDbFloor = -200.0;

namespace detail {

/// Cascade superstrate / optional sheet / spacer over the PEC short and
/// evaluate Gamma at the top interface.  Z_in = B/D because the short forces
/// Z_load = 0.
inline ReflectionSample cascade_reflection(const StackSpec& stack, bool with_sheet,
                                           Complex sheet_z, double f_ghz) {
  Abcd m = layer_abcd(stack.superstrate, stack.superstrate_mm, f_ghz);
  if (with_sheet) m = m * Abcd::shunt_admittance(1.0 / sheet_z);
  m = m * layer_abcd(stack.spacer, stack.spacer_mm, f_ghz);
  const Complex z_in = m.b / m.d;
  const Complex gamma = (z_in - kEta0) / (z_in + kEta0);
  const double mag = std::abs(gamma);
  const double db = std::max(20.0 * std::log10(std::max(mag, 1e-10)), kDbFloor);
  return {gamma, db};
}

}  // namespace detail

/// Reflection from the full geometry-driven stack; the spacer thickness is
/// the geometry's t.
inline ReflectionSample reflection_at(const UnitCellGeometry& g, const StackSpec& stack,
                                      double f_ghz) {
  StackSpec s = stack;
  s.spacer_mm = g.t;
  if (!s.has_sheet()) return detail::cascade_reflection(s, false, {}, f_ghz);
  const Complex z = sheet_impedance(g, s.superstrate, s.sheet_resistance, f_ghz);
  return detail::cascade_reflection(s, true, z, f_ghz);
}

/// Reflection with a caller-supplied sheet impedance (test/analysis path
/// bypassing the geometry-to-impedance mapping).  Uses stack.spacer_mm.
inline ReflectionSample reflection_from_sheet(Complex sheet_z, const StackSpec& stack,
                                              double f_ghz) {
  if (!stack.has_sheet() || std::abs(sheet_z) == std::numeric_limits<double>::infinity())
    return detail::cascade_reflection(stack, false, {}, f_ghz);
  if (sheet_z == Complex{0.0, 0.0})
    throw std::domain_error("reflection_from_sheet: zero sheet impedance is out of model scope");
  return detail::cascade_reflection(stack, true, sheet_z, f_ghz);
}

/// Pointwise reflection over the grid.
inline ReflectionCurve reflection_curve(const UnitCellGeometry& g, const StackSpec& stack,
                                        const FrequencyGrid& grid) {
  const std::size_t n = grid.point_count();
  ReflectionCurve curve;
  curve.grid = grid;
  curve.values_db.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    curve.values_db.push_back(reflection_at(g, stack, grid.frequency(i)).db);
  return curve;
}

}  // namespace fssinv
