#pragma once

#include <stdexcept>
#include <string>

namespace qineq {

/// Argument outside the mathematical domain of an operation (p outside
/// [0,1], non-positive shape parameter, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quantity requires a finite mean but the model has mean +inf.
class heavy_tail_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A ratio estimate has a zero denominator (e.g. an estimated median of 0).
class zero_denominator_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Malformed textual input: distribution spec strings, CSV income files.
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical routine failed to reach its tolerance.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw domain_error(what);
}

inline void require_open_unit(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0))
        throw domain_error(std::string(who) + ": probability must lie in (0,1), got " +
                           std::to_string(p));
}

inline void require_closed_unit(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0))
        throw domain_error(std::string(who) + ": probability must lie in [0,1], got " +
                           std::to_string(p));
}

}  // namespace detail
}  // namespace qineq
