#ifndef FRACTIME_COMMON_HPP
#define FRACTIME_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fractime {

using cplx = std::complex<double>;

inline constexpr const char* kVersion = "0.1.0";

// Raised when a set/measure realization is too coarse for the requested scale.
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an experiment configuration violates a precondition of the
// estimate it is supposed to probe (wrong exponent region, missing certificate, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed input documents (missing/ill-typed fields).
struct SchemaError : std::runtime_error {
    SchemaError(const std::string& field, const std::string& what)
        : std::runtime_error("field '" + field + "': " + what), field(field) {}
    std::string field;
};

inline double pow2(double e) { return std::exp2(e); }

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace fractime

#endif
