#pragma once

namespace fssinv {

// Free-space constants. c0 is kept in mm*GHz so that electrical lengths
// come out dimensionless from thicknesses in mm and frequencies in GHz.
inline constexpr double kC0MmGhz = 299.792458;        // speed of light, mm*GHz
inline constexpr double kEta0 = 376.730313;           // free-space impedance, ohm
inline constexpr double kMu0 = 1.25663706143591730e-6;  // 4*pi*1e-7, H/m
inline constexpr double kEps0 = 8.85418781762038985e-12; // 1/(mu0*c0^2), F/m
inline constexpr double kPi = 3.14159265358979323846;

}  // namespace fssinv
