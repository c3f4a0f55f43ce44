#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dagsp/closure.hpp"
#include "dagsp/poset.hpp"

namespace dagsp {

/// Value per node, in topological order.
struct Signal {
    std::vector<double> values;

    Signal() = default;
    explicit Signal(std::vector<double> v) : values(std::move(v)) {}
    explicit Signal(int n) : values(n, 0.0) {}
    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
};

/// Spectral coefficients (the per-node causes), in topological order.
/// Related to a paired signal by s = W * c.
struct Spectrum {
    std::vector<double> values;

    Spectrum() = default;
    explicit Spectrum(std::vector<double> v) : values(std::move(v)) {}
    explicit Spectrum(int n) : values(n, 0.0) {}
    int size() const { return static_cast<int>(values.size()); }
    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }
};

namespace detail {
inline void require_size(int have, int want, const char* what) {
    if (have != want) fail(errc::dimension_mismatch, std::string(what) + ": length mismatch");
}
} // namespace detail

/// Moebius (Fourier transform) matrix W^{-1} by unit-triangular inversion.
inline Matrix moebius_matrix(const ClosureOperator& op) { return invert_unit_lower(op.matrix()); }

/// The same matrix built from the defining recursion of the weighted Moebius
/// function, column by column over the partial order:
///   mu(x, x) = 1,   mu(x, y) = - sum over x <= z < y of w(y, z) mu(x, z).
/// Agrees with plain inversion; both paths cross-check each other in tests.
inline Matrix moebius_matrix_recursive(const ClosureOperator& op, const PosetView& poset) {
    const int n = op.size();
    Matrix f(n, n);
    const Matrix& w = op.matrix();
    for (int x = 0; x < n; ++x) {
        f(x, x) = 1.0;
        for (int y : poset.successors(x)) {
            if (y == x) continue;
            double acc = 0.0;
            for (int z = x; z < y; ++z) {
                if (poset.leq(x, z) && poset.leq(z, y) && f(z, x) != 0.0 && w(y, z) != 0.0)
                    acc -= w(y, z) * f(z, x);
            }
            f(y, x) = acc;
        }
    }
    return f;
}

/// Spectrum of a signal: solves W c = s by forward substitution, O(n^2)
/// with sparsity skips; the inverse matrix is never materialized.
inline Spectrum fourier_transform(const ClosureOperator& op, const Signal& s) {
    detail::require_size(s.size(), op.size(), "fourier_transform");
    return Spectrum(solve_unit_lower(op.matrix(), s.values));
}

/// Signal synthesis s = W c.
inline Signal inverse_fourier_transform(const ClosureOperator& op, const Spectrum& c) {
    detail::require_size(c.size(), op.size(), "inverse_fourier_transform");
    return Signal(op.matrix() * c.values);
}

/// Shift by node q: keeps only the causes shared with q. As a matrix,
/// T_q = W D_q W^{-1} with D_q = diag([y <= q]); lower triangular,
/// idempotent, and diagonalized by the columns of W.
inline Matrix shift_matrix(const ClosureOperator& op, const PosetView& poset, int q) {
    const int n = op.size();
    Matrix wq(n, n);
    const Matrix& w = op.matrix();
    for (int y = 0; y < n; ++y) {
        if (!poset.leq(y, q)) continue;
        for (int x = y; x < n; ++x) wq(x, y) = w(x, y);
    }
    return wq * op.fourier_matrix();
}

/// Applies T_q to a signal without materializing the matrix: transform,
/// mask the coefficients outside pred(q), transform back.
inline Signal apply_shift(const ClosureOperator& op, const PosetView& poset, int q,
                          const Signal& s) {
    Spectrum c = fourier_transform(op, s);
    for (int y = 0; y < op.size(); ++y)
        if (!poset.leq(y, q)) c[y] = 0.0;
    return inverse_fourier_transform(op, c);
}

/// A filter is a coefficient per node; as an operator it is sum_q h_q T_q.
struct Filter {
    std::vector<double> h;

    Filter() = default;
    explicit Filter(std::vector<double> coeffs) : h(std::move(coeffs)) {}
    int size() const { return static_cast<int>(h.size()); }
};

/// Frequency response h'_y = sum over q >= y of h_q. Depends only on the
/// partial order, not on the weights.
inline std::vector<double> frequency_response(const PosetView& poset, const Filter& filt) {
    detail::require_size(filt.size(), poset.size(), "frequency_response");
    const int n = poset.size();
    std::vector<double> resp(n, 0.0);
    for (int y = 0; y < n; ++y) {
        double acc = 0.0;
        for (int q : poset.successors(y)) acc += filt.h[q];
        resp[y] = acc;
    }
    return resp;
}

/// Unique filter with a prescribed frequency response: the response map is
/// unit triangular against the reverse topological order, so a backward
/// sweep inverts it exactly (the order-dual Moebius inversion).
inline Filter inverse_frequency_response(const PosetView& poset,
                                         const std::vector<double>& response) {
    detail::require_size(static_cast<int>(response.size()), poset.size(),
                         "inverse_frequency_response");
    const int n = poset.size();
    std::vector<double> h(n, 0.0);
    for (int y = n - 1; y >= 0; --y) {
        double acc = response[y];
        for (int q : poset.successors(y))
            if (q != y) acc -= h[q];
        h[y] = acc;
    }
    return Filter(std::move(h));
}

/// Convolution h * s, evaluated spectrally as W (h' . (W^{-1} s)): two
/// triangular passes and a pointwise product. Equals sum_q h_q T_q s.
inline Signal apply_filter(const ClosureOperator& op, const PosetView& poset, const Filter& filt,
                           const Signal& s) {
    detail::require_size(s.size(), op.size(), "apply_filter");
    detail::require_size(filt.size(), op.size(), "apply_filter");
    Spectrum c = fourier_transform(op, s);
    const std::vector<double> resp = frequency_response(poset, filt);
    for (int y = 0; y < op.size(); ++y) c[y] *= resp[y];
    return inverse_fourier_transform(op, c);
}

/// The filter's matrix sum_q h_q T_q, materialized. H = W diag(h') W^{-1}.
inline Matrix filter_matrix(const ClosureOperator& op, const PosetView& poset,
                            const Filter& filt) {
    const int n = op.size();
    const std::vector<double> resp = frequency_response(poset, filt);
    Matrix scaled(n, n);
    const Matrix& w = op.matrix();
    for (int y = 0; y < n; ++y)
        for (int x = y; x < n; ++x) scaled(x, y) = w(x, y) * resp[y];
    return scaled * op.fourier_matrix();
}

/// Per-shift variation TV_q(s) = ||s - T_q s||_2 for every q, computed from
/// one spectrum: s - T_q s = W (c masked to y not<= q).
inline std::vector<double> total_variation(const ClosureOperator& op, const PosetView& poset,
                                           const Signal& s) {
    detail::require_size(s.size(), op.size(), "total_variation");
    const int n = op.size();
    const Spectrum c = fourier_transform(op, s);
    const Matrix& w = op.matrix();
    std::vector<double> tv(n, 0.0);
    std::vector<double> diff(n);
    for (int q = 0; q < n; ++q) {
        std::fill(diff.begin(), diff.end(), 0.0);
        for (int y = 0; y < n; ++y) {
            if (poset.leq(y, q) || c[y] == 0.0) continue;
            const double cy = c[y];
            for (int x = y; x < n; ++x) diff[x] += w(x, y) * cy;
        }
        tv[q] = norm2(diff);
    }
    return tv;
}

inline double sum_total_variation(const std::vector<double>& tv) {
    return std::accumulate(tv.begin(), tv.end(), 0.0);
}

/// TV vector of the normalized basis vector f^y; evaluates the numeric
/// definition (the closed form says the entries are the indicators
/// [y not<= q]).
inline std::vector<double> basis_total_variation(const ClosureOperator& op,
                                                 const PosetView& poset, int y) {
    std::vector<double> f = op.basis_vector(y);
    const double nrm = norm2(f);
    for (double& v : f) v /= nrm;
    return total_variation(op, poset, Signal(std::move(f)));
}

/// Frequency ordering of the basis. stv[y] = |{q : y not<= q}| counts the
/// shifts a normalized basis vector varies under; sorting by it yields a
/// topological order of the frequencies, and componentwise comparison of
/// the TV vectors reproduces the node partial order.
struct FrequencyOrder {
    std::vector<int> order;          // node positions, ascending sum total variation
    std::vector<int> stv;            // per node position
    std::vector<std::uint8_t> tv_leq; // n*n, [x*n+y] = TV(f^x) <= TV(f^y) componentwise
};

inline FrequencyOrder frequency_order(const PosetView& poset) {
    const int n = poset.size();
    FrequencyOrder fo;
    fo.stv.resize(n);
    for (int y = 0; y < n; ++y) fo.stv[y] = n - poset.successor_count(y);
    fo.order.resize(n);
    std::iota(fo.order.begin(), fo.order.end(), 0);
    std::stable_sort(fo.order.begin(), fo.order.end(),
                     [&](int a, int b) { return fo.stv[a] < fo.stv[b]; });
    fo.tv_leq.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            // TV(f^x)_q = [x not<= q], so TV(f^x) <= TV(f^y) iff succ(y) subset succ(x).
            fo.tv_leq[static_cast<std::size_t>(x) * n + y] = poset.successors_subset(y, x) ? 1 : 0;
    return fo;
}

} // namespace dagsp
