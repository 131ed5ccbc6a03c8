#pragma once

#include <array>
#include <cmath>
#include <string>

#include "cmapx/error.hpp"

namespace cmapx {

/// Display-referred sRGB, components nominally in [0,1].
struct SrgbColor {
    double r = 0.0, g = 0.0, b = 0.0;

    bool in_gamut(double tol = 0.0) const {
        return r >= -tol && r <= 1.0 + tol && g >= -tol && g <= 1.0 + tol &&
               b >= -tol && b <= 1.0 + tol;
    }
};

/// CIE 1931 tristimulus values on the 0-100 scale (Y of white = 100).
struct XyzColor {
    double x = 0.0, y = 0.0, z = 0.0;
};

/// CAM02-UCS coordinates: J' lightness, (a', b') opponent plane.
struct JabColor {
    double jp = 0.0, ap = 0.0, bp = 0.0;

    double chroma() const { return std::hypot(ap, bp); }
};

/// Euclidean CAM02-UCS color difference (K_L = 1).
inline double delta_e(const JabColor& a, const JabColor& b) {
    const double dj = a.jp - b.jp;
    const double da = a.ap - b.ap;
    const double db = a.bp - b.bp;
    return std::sqrt(dj * dj + da * da + db * db);
}

namespace detail {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

constexpr Vec3 mul(const Mat3& m, const Vec3& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

constexpr Mat3 inverse(const Mat3& m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return {{{(m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det,
              (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det,
              (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det},
             {(m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det,
              (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det,
              (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det},
             {(m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det,
              (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det,
              (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det}}};
}

// sRGB <-> XYZ(D65), classic 7-digit reference matrix, globally rescaled
// so that sRGB white lands on Y = 100 exactly.
inline constexpr Mat3 kRgbToXyzBase = {{{0.4124564, 0.3575761, 0.1804375},
                                        {0.2126729, 0.7151522, 0.0721750},
                                        {0.0193339, 0.1191920, 0.9503041}}};

inline constexpr double kXyzScale =
    100.0 / (kRgbToXyzBase[1][0] + kRgbToXyzBase[1][1] + kRgbToXyzBase[1][2]);

constexpr Mat3 scaled(const Mat3& m, double s) {
    Mat3 out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out[r][c] = m[r][c] * s;
    return out;
}

inline constexpr Mat3 kRgbToXyz = scaled(kRgbToXyzBase, kXyzScale);
inline constexpr Mat3 kXyzToRgb = inverse(kRgbToXyz);

}  // namespace detail

enum class TransferDirection { encode, decode };

/// IEC 61966-2-1 sRGB transfer function for one component.
inline double srgb_transfer(double value, TransferDirection dir) {
    if (!std::isfinite(value)) throw DomainError("srgb_transfer: non-finite component");
    if (dir == TransferDirection::decode) {
        if (value < 0.0 || value > 1.0)
            throw DomainError("srgb_transfer: decode input outside [0,1]: " +
                              std::to_string(value));
        return value <= 0.04045 ? value / 12.92
                                : std::pow((value + 0.055) / 1.055, 2.4);
    }
    if (value <= 0.0) return value * 12.92;
    return value <= 0.0031308 ? value * 12.92
                              : 1.055 * std::pow(value, 1.0 / 2.4) - 0.055;
}

/// Linear-light RGB triple; plain data, no gamut promise.
struct LinearRgb {
    double r = 0.0, g = 0.0, b = 0.0;
};

inline LinearRgb decode(const SrgbColor& c) {
    return {srgb_transfer(c.r, TransferDirection::decode),
            srgb_transfer(c.g, TransferDirection::decode),
            srgb_transfer(c.b, TransferDirection::decode)};
}

inline SrgbColor encode(const LinearRgb& c) {
    return {srgb_transfer(c.r, TransferDirection::encode),
            srgb_transfer(c.g, TransferDirection::encode),
            srgb_transfer(c.b, TransferDirection::encode)};
}

inline XyzColor rgb_to_xyz(const LinearRgb& c) {
    if (!std::isfinite(c.r) || !std::isfinite(c.g) || !std::isfinite(c.b))
        throw DomainError("rgb_to_xyz: non-finite component");
    const auto v = detail::mul(detail::kRgbToXyz, {c.r, c.g, c.b});
    return {v[0], v[1], v[2]};
}

inline LinearRgb xyz_to_rgb(const XyzColor& c) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z))
        throw DomainError("xyz_to_rgb: non-finite component");
    const auto v = detail::mul(detail::kXyzToRgb, {c.x, c.y, c.z});
    return {v[0], v[1], v[2]};
}

inline XyzColor srgb_to_xyz(const SrgbColor& c) { return rgb_to_xyz(decode(c)); }

/// XYZ of sRGB white (1,1,1); X and Z carry the matrix's full precision.
inline XyzColor srgb_white_xyz() { return rgb_to_xyz({1.0, 1.0, 1.0}); }

}  // namespace cmapx
