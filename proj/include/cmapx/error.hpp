#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmapx {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or out-of-domain argument.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid viewing conditions (e.g. adapting luminance <= 0).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A requested color is not representable in sRGB (or the CAM02 model
/// cannot invert it).  Carries the offending J'a'b' point and, when the
/// failure happened along a generator path, the path parameter t.
class GamutError : public Error {
public:
    GamutError(const std::string& msg, double jp, double ap, double bp, double t = -1.0)
        : Error(msg), jp(jp), ap(ap), bp(bp), t(t) {}
    double jp, ap, bp;
    double t;
};

/// Colormap has no perceptual extent (range == 0) or too few samples.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Registry lookup failure.
class NotFoundError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; line is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0) : Error(msg), line(line) {}
    std::size_t line;
};

/// Invalid command-line usage or argument combination.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure, message includes the path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cmapx
