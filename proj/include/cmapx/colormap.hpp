#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cmapx/color.hpp"
#include "cmapx/error.hpp"

namespace cmapx {

enum class ColormapKind { sequential, diverging, cyclic, qualitative };

inline std::string to_string(ColormapKind k) {
    switch (k) {
        case ColormapKind::sequential: return "sequential";
        case ColormapKind::diverging: return "diverging";
        case ColormapKind::cyclic: return "cyclic";
        case ColormapKind::qualitative: return "qualitative";
    }
    return "sequential";
}

inline ColormapKind colormap_kind_from_string(const std::string& s) {
    if (s == "sequential") return ColormapKind::sequential;
    if (s == "diverging") return ColormapKind::diverging;
    if (s == "cyclic") return ColormapKind::cyclic;
    if (s == "qualitative") return ColormapKind::qualitative;
    throw ParseError("unknown colormap kind: \"" + s + "\"");
}

/// Named ordered list of sRGB samples; the unit of audit and generation.
struct Colormap {
    std::string name;
    ColormapKind kind = ColormapKind::sequential;
    std::vector<SrgbColor> samples;
    /// Free-form numeric annotations (e.g. maxChromaReduction from the
    /// generator's clip mode).  Not serialized.
    std::map<std::string, double> metadata;

    std::size_t size() const { return samples.size(); }

    void validate() const {
        if (name.empty()) throw DomainError("colormap: name must be nonempty");
        if (samples.size() < 2)
            throw DomainError("colormap \"" + name + "\": needs at least 2 samples");
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            if (!std::isfinite(s.r) || !std::isfinite(s.g) || !std::isfinite(s.b) ||
                !s.in_gamut(1e-9))
                throw DomainError("colormap \"" + name + "\": sample " +
                                  std::to_string(i) + " outside [0,1]");
        }
    }
};

inline Colormap reverse(const Colormap& c) {
    Colormap out = c;
    std::reverse(out.samples.begin(), out.samples.end());
    out.name = c.name + "_r";
    return out;
}

/// Piecewise-linear interpolation in sRGB over the sample grid, t in [0,1].
inline SrgbColor sample_at(const Colormap& c, double t) {
    if (c.samples.empty()) throw DomainError("sample_at: empty colormap");
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("sample_at: t outside [0,1]");
    const double x = t * static_cast<double>(c.samples.size() - 1);
    const std::size_t i = std::min(c.samples.size() - 2, static_cast<std::size_t>(x));
    const double f = x - static_cast<double>(i);
    const auto& a = c.samples[i];
    const auto& b = c.samples[i + 1];
    return {a.r + f * (b.r - a.r), a.g + f * (b.g - a.g), a.b + f * (b.b - a.b)};
}

}  // namespace cmapx
