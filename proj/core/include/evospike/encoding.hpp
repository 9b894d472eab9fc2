#pragma once

namespace evospike::snn {

/// Linear current coding: maps a physical signal range onto an injected
/// current in [0, i_max]. Out-of-range inputs clamp rather than error so
/// plant excursions never abort an episode.
struct EncoderConfig {
    double in_min = 0.0;
    double in_max = 1.0;
    double i_max = 15.0;
};

double encode_current(double x, const EncoderConfig& cfg);

} // namespace evospike::snn
