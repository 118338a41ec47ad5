#pragma once

#include <cmath>
#include <stdexcept>

// dB <-> linear conversions. Everything inside the library works in linear
// units (watts, meters); dB appears only at the interfaces.

namespace aggsim {

inline double db_to_linear(double x_db) {
    if (!std::isfinite(x_db)) throw std::domain_error("db_to_linear: input must be finite");
    return std::pow(10.0, x_db / 10.0);
}

inline double linear_to_db(double x) {
    if (!(x > 0.0)) throw std::domain_error("linear_to_db: input must be > 0");
    return 10.0 * std::log10(x);
}

inline double dbm_to_watts(double x_dbm) { return db_to_linear(x_dbm - 30.0); }

inline double watts_to_dbm(double x_w) { return linear_to_db(x_w) + 30.0; }

}  // namespace aggsim
