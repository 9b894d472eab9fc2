#pragma once

#include <array>
#include <cstddef>

namespace evospike::snn {

/// Izhikevich membrane model coefficients. Units follow the model
/// convention: membrane potential in mV, time in ms.
struct IzhikevichParams {
    double a = 0.02;            // recovery timescale (1/ms)
    double b = 0.2;             // recovery sensitivity
    double c = -65.0;           // after-spike reset potential (mV)
    double d = 2.0;             // after-spike recovery increment
    double v_threshold = 30.0;  // spike detection threshold (mV)
};

/// Ring buffer of recent firing times (seconds). Capacity covers the worst
/// case of one spike per 1 ms substep over the 0.1 s rate window.
class SpikeRing {
public:
    static constexpr std::size_t capacity = 128;

    void push(double t) {
        times_[head_] = t;
        head_ = (head_ + 1) % capacity;
        if (count_ < capacity) ++count_;
    }

    void clear() {
        head_ = 0;
        count_ = 0;
    }

    /// Spikes with t_spike in [now - window, now). The old end is closed so a
    /// spike sitting exactly one window in the past is still counted; the new
    /// end is open so adjacent windows never count a spike twice.
    int count_in_window(double now, double window) const {
        int k = 0;
        const double cutoff = now - window;
        for (std::size_t i = 0; i < count_; ++i) {
            const std::size_t idx = (head_ + capacity - 1 - i) % capacity;
            const double t = times_[idx];
            if (t < cutoff) break;  // older entries only get older
            if (t < now) ++k;
        }
        return k;
    }

    std::size_t size() const { return count_; }
    double last() const { return times_[(head_ + capacity - 1) % capacity]; }

private:
    std::array<double, capacity> times_{};
    std::size_t head_ = 0;
    std::size_t count_ = 0;
};

/// Runtime state of one spiking neuron.
struct NeuronState {
    double v = -65.0;        // membrane potential (mV)
    double u = -13.0;        // recovery variable
    double now = 0.0;        // local clock (s)
    double window_rate = 0.0;  // last windowed firing-rate estimate (Hz)
    SpikeRing spikes;

    static NeuronState resting(const IzhikevichParams& p) {
        NeuronState s;
        s.v = p.c;
        s.u = p.b * p.c;
        return s;
    }
};

/// One forward-Euler step of dt_ms milliseconds with injected current i_in.
/// Advances the neuron clock by dt_ms, applies the threshold/reset rule and
/// records the firing time. Returns true when the neuron fired.
/// Throws NumericError on non-finite v/u/i_in.
bool neuron_step(NeuronState& state, const IzhikevichParams& params, double i_in, double dt_ms);

/// Spike count in the trailing window divided by the window length (Hz).
double window_rate(const NeuronState& state, double window_s);

/// Mixed rate/membrane activation in [0, 1]: whole spikes in the trailing
/// window plus the fractional progress of v from reset to threshold, scaled
/// by k_max.
double decode_activation(const NeuronState& state, const IzhikevichParams& params,
                         double window_s, int k_max);

} // namespace evospike::snn
