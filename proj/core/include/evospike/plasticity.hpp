#pragma once

#include <optional>

namespace evospike::snn {

/// Coefficients of the rate-based Hebbian rule attached to a connection.
/// a_plus/a_minus and the decay constants are fixed during evolution; k_m
/// (magnitude) and k_c (correlation, Hz) are the evolvable pair.
struct HebbianRule {
    double a_plus = 0.1;
    double a_minus = -0.1;
    double tau_plus = 0.02;   // s
    double tau_minus = 0.02;  // s
    double k_m = 0.0;
    double k_c = 0.0;
};

/// Reference STDP learning window. dt_spike = t_post - t_pre (seconds);
/// undefined at exactly zero (throws std::domain_error).
double stdp_window(double dt_spike_s, const HebbianRule& rule);

/// Weight derivative dw/dt (1/s) of the rate-based rule for presynaptic and
/// postsynaptic rates in Hz.
double hebbian_rate(double u_pre, double u_post, const HebbianRule& rule);

/// Forward-Euler weight update over dt seconds, clamped to [-1, 1].
double hebbian_update(double w, double u_pre, double u_post, const HebbianRule& rule, double dt_s);

/// Postsynaptic rate at which dw/dt = 0, if one exists in (0, r_max].
/// Analytic for the symmetric case (tau_plus == tau_minus, a_minus ==
/// -a_plus); bisection on a sign change otherwise.
std::optional<double> equilibrium_rate(const HebbianRule& rule, double u_pre, double r_max = 100.0);

} // namespace evospike::snn
