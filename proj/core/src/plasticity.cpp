#include "evospike/plasticity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evospike/errors.hpp"

namespace evospike::snn {

double stdp_window(double dt_spike_s, const HebbianRule& rule) {
    if (dt_spike_s == 0.0) {
        throw std::domain_error("stdp_window: undefined at dt = 0");
    }
    if (dt_spike_s > 0.0) {
        return rule.a_plus * std::exp(-dt_spike_s / rule.tau_plus);
    }
    return rule.a_minus * std::exp(dt_spike_s / rule.tau_minus);
}

double hebbian_rate(double u_pre, double u_post, const HebbianRule& rule) {
    const double pot = rule.a_plus / (1.0 / rule.tau_plus + u_post);
    const double dep = (rule.k_m * (u_pre - u_post + rule.k_c) + rule.a_minus) /
                       (1.0 / rule.tau_minus + u_post);
    return u_post * (pot + dep);
}

double hebbian_update(double w, double u_pre, double u_post, const HebbianRule& rule,
                      double dt_s) {
    if (!(dt_s > 0.0)) throw ConfigError("hebbian_update: dt must be positive");
    return std::clamp(w + dt_s * hebbian_rate(u_pre, u_post, rule), -1.0, 1.0);
}

std::optional<double> equilibrium_rate(const HebbianRule& rule, double u_pre, double r_max) {
    if (rule.k_m == 0.0) return std::nullopt;

    if (rule.tau_plus == rule.tau_minus && rule.a_minus == -rule.a_plus) {
        const double root = u_pre + rule.k_c;
        if (root > 0.0 && root <= r_max) return root;
        return std::nullopt;
    }

    // General coefficients: scan for a sign change of dw/dt on (0, r_max],
    // then bisect. The leading u_post factor makes 0 a trivial root, so start
    // just above it.
    const int n_samples = 2000;
    const double lo_bound = r_max / n_samples;
    double prev_u = lo_bound;
    double prev_f = hebbian_rate(u_pre, prev_u, rule);
    for (int i = 2; i <= n_samples; ++i) {
        const double u = lo_bound * i;
        const double f = hebbian_rate(u_pre, u, rule);
        if (prev_f == 0.0) return prev_u;
        if ((prev_f < 0.0) != (f < 0.0)) {
            double lo = prev_u;
            double hi = u;
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const double fm = hebbian_rate(u_pre, mid, rule);
                if (fm == 0.0) return mid;
                if ((fm < 0.0) == (prev_f < 0.0)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return 0.5 * (lo + hi);
        }
        prev_u = u;
        prev_f = f;
    }
    return std::nullopt;
}

} // namespace evospike::snn
