#include "evospike/izhikevich.hpp"

#include <cmath>

#include "evospike/errors.hpp"

namespace evospike::snn {

bool neuron_step(NeuronState& state, const IzhikevichParams& params, double i_in, double dt_ms) {
    if (!(dt_ms > 0.0) || dt_ms > 1.0) {
        throw ConfigError("neuron_step: dt must be in (0, 1] ms");
    }
    if (!std::isfinite(state.v) || !std::isfinite(state.u) || !std::isfinite(i_in)) {
        throw NumericError("neuron_step: non-finite membrane state or input current");
    }

    const double v = state.v;
    const double u = state.u;
    const double dv = 0.04 * v * v + 5.0 * v + 140.0 - u + i_in;
    const double du = params.a * (params.b * v - u);

    state.v = v + dt_ms * dv;
    state.u = u + dt_ms * du;
    state.now += dt_ms * 1e-3;

    if (state.v >= params.v_threshold) {
        state.v = params.c;
        state.u += params.d;
        state.spikes.push(state.now);
        return true;
    }
    return false;
}

double window_rate(const NeuronState& state, double window_s) {
    if (!(window_s > 0.0)) throw ConfigError("window_rate: window must be positive");
    return state.spikes.count_in_window(state.now, window_s) / window_s;
}

double decode_activation(const NeuronState& state, const IzhikevichParams& params,
                         double window_s, int k_max) {
    if (!(window_s > 0.0)) throw ConfigError("decode_activation: window must be positive");
    if (k_max < 1) throw ConfigError("decode_activation: k_max must be >= 1");

    const int k = state.spikes.count_in_window(state.now, window_s);
    double frac = (state.v - params.c) / (params.v_threshold - params.c);
    frac = std::clamp(frac, 0.0, 1.0);
    return std::clamp((k + frac) / k_max, 0.0, 1.0);
}

} // namespace evospike::snn
