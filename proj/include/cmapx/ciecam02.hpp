#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cmapx/color.hpp"
#include "cmapx/error.hpp"

namespace cmapx {

enum class Surround { average, dim, dark };

/// CIECAM02 environment. The defaults reproduce the usual colormap-audit
/// regime: D65 white, Y_b = 20, L_A = (64/pi)/5, average surround.
struct ViewingConditions {
    XyzColor white_point = srgb_white_xyz();
    double adapting_luminance = 64.0 / std::numbers::pi / 5.0;  // cd/m^2
    double background_luminance = 20.0;                         // Y_b, white = 100
    Surround surround = Surround::average;
};

inline const ViewingConditions& default_conditions() {
    static const ViewingConditions vc{};
    return vc;
}

/// CIECAM02 + CAM02-UCS with all per-condition terms precomputed.
///
/// Two fixed conventions: the illuminant is fully discounted (D = 1), and
/// the Hunt-Pointer-Estevez rows are normalized to sum exactly 1.  Both are
/// required for the achromatic axis to map to (a', b') = (0, 0): any input
/// proportional to the white point stays achromatic to ~1e-12.
class Cam02 {
public:
    explicit Cam02(const ViewingConditions& vc = default_conditions()) {
        if (!(vc.adapting_luminance > 0.0))
            throw ConfigError("viewing conditions: adapting luminance must be > 0");
        if (!(vc.background_luminance > 0.0) || vc.background_luminance > 100.0)
            throw ConfigError("viewing conditions: background Y_b must be in (0,100]");
        if (std::abs(vc.white_point.y - 100.0) > 1e-6)
            throw ConfigError("viewing conditions: white point Y must equal 100");

        switch (vc.surround) {
            case Surround::average: c_ = 0.69; nc_ = 1.0; break;
            case Surround::dim:     c_ = 0.59; nc_ = 0.9; break;
            case Surround::dark:    c_ = 0.525; nc_ = 0.8; break;
        }

        hpe_ = kHpeBase;
        for (auto& row : hpe_) {
            const double s = row[0] + row[1] + row[2];
            for (auto& x : row) x /= s;
        }
        hpe_inv_ = detail::inverse(hpe_);

        const double la = vc.adapting_luminance;
        const double yw = vc.white_point.y;
        const double k = 1.0 / (5.0 * la + 1.0);
        const double k4 = k * k * k * k;
        fl_ = 0.2 * k4 * 5.0 * la +
              0.1 * (1.0 - k4) * (1.0 - k4) * std::cbrt(5.0 * la);
        n_ = vc.background_luminance / yw;
        z_ = 1.48 + std::sqrt(n_);
        nbb_ = 0.725 * std::pow(1.0 / n_, 0.2);
        chroma_base_ = std::pow(1.64 - std::pow(0.29, n_), 0.73);

        const auto rgb_w =
            detail::mul(kCat02, {vc.white_point.x, vc.white_point.y, vc.white_point.z});
        // Full discounting: the adapted white is the equal-energy axis.
        for (int i = 0; i < 3; ++i) d_rgb_[i] = yw / rgb_w[i];
        detail::Vec3 rgb_wc{rgb_w[0] * d_rgb_[0], rgb_w[1] * d_rgb_[1],
                            rgb_w[2] * d_rgb_[2]};
        const auto rgbp_w = detail::mul(hpe_, detail::mul(kCat02Inv, rgb_wc));
        const double raw = adapt(rgbp_w[0]);
        const double gaw = adapt(rgbp_w[1]);
        const double baw = adapt(rgbp_w[2]);
        aw_ = (2.0 * raw + gaw + 0.05 * baw - 0.305) * nbb_;
    }

    JabColor jab_from_xyz(const XyzColor& xyz) const {
        detail::Vec3 v{xyz.x, xyz.y, xyz.z};
        for (auto& x : v) {
            if (!std::isfinite(x)) throw DomainError("jab_from_xyz: non-finite XYZ");
            if (x < 0.0) {
                if (x < -1e-9)
                    throw DomainError("jab_from_xyz: negative tristimulus value");
                x = 0.0;
            }
        }
        auto rgb = detail::mul(kCat02, v);
        for (int i = 0; i < 3; ++i) rgb[i] *= d_rgb_[i];
        const auto rgbp = detail::mul(hpe_, detail::mul(kCat02Inv, rgb));
        const double ra = adapt(rgbp[0]);
        const double ga = adapt(rgbp[1]);
        const double ba = adapt(rgbp[2]);

        const double a = ra - 12.0 * ga / 11.0 + ba / 11.0;
        const double b = (ra + ga - 2.0 * ba) / 9.0;
        const double h = std::atan2(b, a);
        const double et = 0.25 * (std::cos(h + 2.0) + 3.8);
        const double big_a = std::max(0.0, (2.0 * ra + ga + 0.05 * ba - 0.305) * nbb_);
        const double j = 100.0 * std::pow(big_a / aw_, c_ * z_);
        const double t = (50000.0 / 13.0) * nc_ * nbb_ * et * std::hypot(a, b) /
                         (ra + ga + 1.05 * ba);
        const double chroma = std::pow(t, 0.9) * std::sqrt(j / 100.0) * chroma_base_;
        const double m = chroma * std::pow(fl_, 0.25);

        const double jp = 1.7 * j / (1.0 + 0.007 * j);
        const double mp = std::log1p(0.0228 * m) / 0.0228;
        return {jp, mp * std::cos(h), mp * std::sin(h)};
    }

    XyzColor xyz_from_jab(const JabColor& jab) const {
        if (!std::isfinite(jab.jp) || !std::isfinite(jab.ap) || !std::isfinite(jab.bp))
            throw DomainError("xyz_from_jab: non-finite Jab");
        const double j = jab.jp / (1.7 - 0.007 * jab.jp);
        const double mp = jab.chroma();
        const double m = std::expm1(0.0228 * mp) / 0.0228;
        const double chroma = m / std::pow(fl_, 0.25);
        if (j < 0.0)
            throw GamutError("xyz_from_jab: lightness below model range", jab.jp,
                             jab.ap, jab.bp);
        if (j <= 0.0) {
            if (chroma > 1e-9)
                throw GamutError("xyz_from_jab: chroma at zero lightness", jab.jp,
                                 jab.ap, jab.bp);
            return {0.0, 0.0, 0.0};
        }
        const double big_a = aw_ * std::pow(j / 100.0, 1.0 / (c_ * z_));
        const double p2 = big_a / nbb_ + 0.305;
        const double h = std::atan2(jab.bp, jab.ap);

        double a = 0.0, b = 0.0;
        if (chroma > 0.0) {
            const double t =
                std::pow(chroma / (std::sqrt(j / 100.0) * chroma_base_), 1.0 / 0.9);
            if (t > 0.0) {
                const double et = 0.25 * (std::cos(h + 2.0) + 3.8);
                const double p1 = (50000.0 / 13.0) * nc_ * nbb_ * et / t;
                const double p3 = 21.0 / 20.0;
                const double sh = std::sin(h), ch = std::cos(h);
                if (std::abs(sh) >= std::abs(ch)) {
                    const double p4 = p1 / sh;
                    b = p2 * (2.0 + p3) * (460.0 / 1403.0) /
                        (p4 + (2.0 + p3) * (220.0 / 1403.0) * (ch / sh) -
                         27.0 / 1403.0 + p3 * (6300.0 / 1403.0));
                    a = b * ch / sh;
                } else {
                    const double p5 = p1 / ch;
                    a = p2 * (2.0 + p3) * (460.0 / 1403.0) /
                        (p5 + (2.0 + p3) * (220.0 / 1403.0) -
                         (27.0 / 1403.0 - p3 * (6300.0 / 1403.0)) * (sh / ch));
                    b = a * sh / ch;
                }
            }
        }
        const double ra = (460.0 * p2 + 451.0 * a + 288.0 * b) / 1403.0;
        const double ga = (460.0 * p2 - 891.0 * a - 261.0 * b) / 1403.0;
        const double ba = (460.0 * p2 - 220.0 * a - 6300.0 * b) / 1403.0;
        const detail::Vec3 rgbp{unadapt(ra, jab), unadapt(ga, jab), unadapt(ba, jab)};
        auto rgb = detail::mul(kCat02, detail::mul(hpe_inv_, rgbp));
        for (int i = 0; i < 3; ++i) rgb[i] /= d_rgb_[i];
        const auto xyz = detail::mul(kCat02Inv, rgb);
        return {xyz[0], xyz[1], xyz[2]};
    }

    JabColor jab_from_srgb(const SrgbColor& c) const { return jab_from_xyz(srgb_to_xyz(c)); }

    /// Result of mapping Jab back to sRGB: the clamped color plus how far
    /// the linear components fell outside [0,1] (0 when in gamut).
    struct GamutProbe {
        SrgbColor color;
        double violation = 0.0;
    };

    GamutProbe probe_srgb(const JabColor& jab) const {
        GamutProbe p;
        LinearRgb lin;
        try {
            lin = xyz_to_rgb(xyz_from_jab(jab));
        } catch (const GamutError&) {
            p.violation = std::numeric_limits<double>::infinity();
            return p;
        }
        double viol = 0.0;
        for (double u : {lin.r, lin.g, lin.b})
            viol = std::max({viol, -u, u - 1.0});
        p.violation = viol;
        p.color = encode({std::clamp(lin.r, 0.0, 1.0), std::clamp(lin.g, 0.0, 1.0),
                          std::clamp(lin.b, 0.0, 1.0)});
        return p;
    }

    /// Strict inverse to sRGB; tolerates round-off at the gamut boundary.
    SrgbColor srgb_from_jab(const JabColor& jab, double tol = 1e-9) const {
        const auto p = probe_srgb(jab);
        if (p.violation > tol)
            throw GamutError("color outside sRGB gamut (linear excess " +
                                 std::to_string(p.violation) + ")",
                             jab.jp, jab.ap, jab.bp);
        return p.color;
    }

    double lightness_of_gray(double g) const {
        return jab_from_srgb({g, g, g}).jp;
    }

private:
    static constexpr detail::Mat3 kCat02 = {{{0.7328, 0.4296, -0.1624},
                                             {-0.7036, 1.6975, 0.0061},
                                             {0.0030, 0.0136, 0.9834}}};
    static constexpr detail::Mat3 kCat02Inv = detail::inverse(kCat02);
    static constexpr detail::Mat3 kHpeBase = {{{0.38971, 0.68898, -0.07868},
                                               {-0.22981, 1.18340, 0.04641},
                                               {0.00000, 0.00000, 1.00000}}};

    double adapt(double v) const {
        const double s = v < 0.0 ? -1.0 : 1.0;
        const double t = std::pow(fl_ * std::abs(v) / 100.0, 0.42);
        return s * 400.0 * t / (t + 27.13) + 0.1;
    }

    double unadapt(double va, const JabColor& at) const {
        const double v = va - 0.1;
        const double av = std::abs(v);
        if (av >= 400.0)
            throw GamutError("xyz_from_jab: response outside invertible range",
                             at.jp, at.ap, at.bp);
        const double t = std::pow(27.13 * av / (400.0 - av), 1.0 / 0.42);
        return std::copysign(100.0 / fl_ * t, v);
    }

    detail::Mat3 hpe_{}, hpe_inv_{};
    double c_ = 0, nc_ = 0;
    double fl_ = 0, n_ = 0, z_ = 0, nbb_ = 0, aw_ = 0, chroma_base_ = 0;
    detail::Vec3 d_rgb_{};
};

/// One-shot conversions mirroring the model ops.
inline JabColor xyz_to_jab(const XyzColor& xyz, const ViewingConditions& vc) {
    return Cam02(vc).jab_from_xyz(xyz);
}

inline XyzColor jab_to_xyz(const JabColor& jab, const ViewingConditions& vc) {
    return Cam02(vc).xyz_from_jab(jab);
}

inline JabColor srgb_to_jab(const SrgbColor& c, const ViewingConditions& vc) {
    return Cam02(vc).jab_from_srgb(c);
}

inline SrgbColor jab_to_srgb(const JabColor& jab, const ViewingConditions& vc) {
    return Cam02(vc).srgb_from_jab(jab);
}

}  // namespace cmapx
