#ifndef SUSYPT_TYPES_HPP
#define SUSYPT_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace susypt {

using Complex = std::complex<double>;

inline constexpr Complex kImag{0.0, 1.0};

// Error hierarchy. Every library failure derives from Error so callers can
// map any of them to a single diagnostic path.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};
struct NotPtError : Error {
    using Error::Error;
};
struct NotBrokenError : Error {
    using Error::Error;
};
struct DivisionError : Error {
    using Error::Error;
};
struct UnboundedError : Error {
    using Error::Error;
};
struct TruncationError : Error {
    using Error::Error;
};
struct FormMismatchError : Error {
    using Error::Error;
};
struct GridTooCoarseError : Error {
    using Error::Error;
};
struct SingularityError : Error {
    using Error::Error;
};
struct NoConvergenceError : Error {
    using Error::Error;
};
struct DimensionCapError : Error {
    using Error::Error;
};
struct NoSignChangeError : Error {
    using Error::Error;
};

}  // namespace susypt

#endif
