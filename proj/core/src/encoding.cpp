#include "evospike/encoding.hpp"

#include <algorithm>
#include <cmath>

#include "evospike/errors.hpp"

namespace evospike::snn {

double encode_current(double x, const EncoderConfig& cfg) {
    if (!(cfg.in_min < cfg.in_max)) {
        throw ConfigError("encode_current: degenerate input range");
    }
    if (!(cfg.i_max > 0.0)) {
        throw ConfigError("encode_current: i_max must be positive");
    }
    if (std::isnan(x)) {
        throw NumericError("encode_current: non-finite input");
    }
    const double norm = std::clamp((x - cfg.in_min) / (cfg.in_max - cfg.in_min), 0.0, 1.0);
    return cfg.i_max * norm;
}

} // namespace evospike::snn
