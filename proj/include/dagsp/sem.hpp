#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dagsp/closure.hpp"
#include "dagsp/rng.hpp"
#include "dagsp/spectral.hpp"

namespace dagsp {

/// Parameters of the sparse-cause signal generator.
struct SemSignalConfig {
    double cause_density = 0.1; // fraction of nodes carrying a cause, (0, 1]
    double cause_lo = 1.0;      // magnitude range of nonzero causes
    double cause_hi = 10.0;
    bool random_sign = false;   // flip cause signs with probability 1/2
    double sigma_c = 0.1;       // spectral noise level
    double sigma_x = 0.1;       // measurement noise level
    std::uint64_t seed = 0;
};

struct SemSample {
    Signal x;         // observed signal
    Spectrum causes;  // ground-truth sparse spectrum (noise excluded)
};

/// Draws a sparse spectrum C and produces X = W (C + N_c) + N_x, the linear
/// structural-equation view of the closure: the noisy causes are the
/// spectrum of the generated signal. The seed splits into independent
/// streams for support, magnitudes, and the two noise vectors, so batch
/// generation parallelizes without changing results.
inline SemSample generate_sem_signal(const ClosureOperator& op, const SemSignalConfig& cfg) {
    if (!(cfg.cause_density > 0.0 && cfg.cause_density <= 1.0))
        fail(errc::invalid_config, "cause_density must be in (0, 1]");
    if (cfg.sigma_c < 0.0 || cfg.sigma_x < 0.0)
        fail(errc::invalid_config, "noise levels must be nonnegative");
    const int n = op.size();
    const int k = static_cast<int>(std::ceil(cfg.cause_density * n));

    Rng support_rng(Rng::derive(cfg.seed, {1}));
    Rng magnitude_rng(Rng::derive(cfg.seed, {2}));
    Rng noise_c_rng(Rng::derive(cfg.seed, {3}));
    Rng noise_x_rng(Rng::derive(cfg.seed, {4}));

    Spectrum causes(n);
    for (int idx : support_rng.sample_without_replacement(n, k)) {
        double magnitude = magnitude_rng.uniform(cfg.cause_lo, cfg.cause_hi);
        if (cfg.random_sign && magnitude_rng.bernoulli(0.5)) magnitude = -magnitude;
        causes[idx] = magnitude;
    }

    std::vector<double> noisy(causes.values);
    if (cfg.sigma_c > 0.0)
        for (double& v : noisy) v += noise_c_rng.normal(0.0, cfg.sigma_c);
    Signal x(op.matrix() * noisy);
    if (cfg.sigma_x > 0.0)
        for (double& v : x.values) v += noise_x_rng.normal(0.0, cfg.sigma_x);
    return {std::move(x), std::move(causes)};
}

/// The DAG whose linear structural equation model X = A'X + N has W as its
/// solution operator: A' = I - W^{-1}. For a (+,*)-closure this recovers the
/// original weight matrix; for any other closure it gives the SEM whose
/// sampling noise is the spectrum. Entries below 1e-12 in magnitude are
/// dropped (inversion residue on exact cancellations).
inline WeightedDag sem_from_closure(const ClosureOperator& op) {
    const int n = op.size();
    const Matrix& f = op.fourier_matrix();
    std::vector<Edge> edges;
    for (int x = 1; x < n; ++x) {
        for (int y = 0; y < x; ++y) {
            const double a = -f(x, y);
            if (std::abs(a) > 1e-12) edges.push_back({y, x, a});
        }
    }
    return WeightedDag(n, std::move(edges));
}

} // namespace dagsp
