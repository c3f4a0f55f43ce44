#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dagsp/dag.hpp"
#include "dagsp/matrix.hpp"
#include "dagsp/semiring.hpp"

namespace dagsp {

/// Weighted transitive closure over an arbitrary semiring: the generic
/// Floyd-Warshall-style triple loop. Entry (x, y) of the result is the
/// semiring sum over all paths y -> x of the semiring product of edge
/// weights along each path; entries equal to the semiring zero mean
/// "unreachable". Absent input entries are initialized to that zero (e.g.
/// +infinity for shortest paths). O(n^3) worst case with skips over zeros;
/// runs the randomized algebra self-check first.
inline Matrix weighted_transitive_closure(const WeightedDag& dag, const SemiringSpec& s) {
    check_semiring(s);
    const int n = dag.node_count();
    Matrix h(n, n, s.zero);
    for (const Edge& e : dag.edges_by_position()) h(e.dst, e.src) = e.weight;
    std::vector<int> cols;
    cols.reserve(n);
    for (int k = 0; k < n; ++k) {
        // Row k and column k are fixed points of iteration k (h(k,k) stays
        // zero on a DAG), so their sparsity can be collected up front.
        cols.clear();
        const double* rk = h.row(k);
        for (int j = 0; j < k; ++j)
            if (rk[j] != s.zero) cols.push_back(j);
        if (cols.empty()) continue;
        for (int i = k + 1; i < n; ++i) {
            const double hik = h(i, k);
            if (hik == s.zero) continue;
            double* ri = h.row(i);
            for (int j : cols) ri[j] = s.plus(ri[j], s.times(hik, rk[j]));
        }
    }
    return h;
}

/// Closed form of the (+,*) closure: A + A^2 + ... + A^{n-1}, computed as
/// (I - A)^{-1} - I by columnwise forward substitution (A is nilpotent, so
/// the series is finite and the inverse exists).
inline Matrix pollution_closure_closed_form(const WeightedDag& dag) {
    const int n = dag.node_count();
    Matrix ima = Matrix::identity(n);
    for (const Edge& e : dag.edges_by_position()) ima(e.dst, e.src) = -e.weight;
    Matrix inv = invert_unit_lower(ima);
    for (int i = 0; i < n; ++i) inv(i, i) = 0.0;
    return inv;
}

/// The signal-model operator W = I + closure, unit lower triangular in
/// topological indexing. Its columns are the Fourier basis vectors; its
/// inverse (computed lazily) is the Fourier transform matrix.
class ClosureOperator {
public:
    ClosureOperator(Matrix w, std::string semiring)
        : w_(std::move(w)), semiring_(std::move(semiring)) {}

    int size() const { return w_.rows(); }
    const Matrix& matrix() const { return w_; }
    const std::string& semiring() const { return semiring_; }

    double operator()(int x, int y) const { return w_(x, y); }

    /// Column y of W, the basis vector for node y.
    std::vector<double> basis_vector(int y) const {
        std::vector<double> f(size(), 0.0);
        for (int x = y; x < size(); ++x) f[x] = w_(x, y);
        return f;
    }

    /// W^{-1}; entries are the weighted Moebius function. Cached after the
    /// first request; transforms prefer triangular solves and never need it.
    const Matrix& fourier_matrix() const {
        std::call_once(cache_->once, [this] { cache_->inverse = invert_unit_lower(w_); });
        return cache_->inverse;
    }

private:
    struct InverseCache {
        std::once_flag once;
        Matrix inverse;
    };

    Matrix w_;
    std::string semiring_;
    // Shared so the operator stays copyable; copies see the same W anyway.
    std::shared_ptr<InverseCache> cache_ = std::make_shared<InverseCache>();
};

/// Reflexive closure: W = I + closure with unit self-weights, absent entries
/// mapped to real 0. Only meaningful when the semiring one equals real 1
/// (boolean, pollution, influence); shortest-path or capacity closures must
/// be converted to influences first.
inline ClosureOperator reflexive_closure(const Matrix& abar, const SemiringSpec& s) {
    if (s.one != 1.0)
        fail(errc::non_realizable_semiring,
             s.name + ": closure values are not influence-like; convert before the "
                      "reflexive closure");
    const int n = abar.rows();
    Matrix w(n, n);
    for (int i = 0; i < n; ++i) {
        const double* src = abar.row(i);
        double* dst = w.row(i);
        for (int j = 0; j < i; ++j) dst[j] = (src[j] == s.zero) ? 0.0 : src[j];
        dst[i] = 1.0;
    }
    return ClosureOperator(std::move(w), s.name);
}

/// Entrywise conversion of shortest-path lengths d to influences e^{-d};
/// unreachable (+infinity) becomes 0 and a zero-length path becomes 1, which
/// matches the unit reflexive weight.
inline Matrix distance_to_influence(const Matrix& shortest) {
    Matrix out(shortest.rows(), shortest.cols());
    for (int i = 0; i < shortest.rows(); ++i) {
        for (int j = 0; j < shortest.cols(); ++j) {
            const double d = shortest(i, j);
            if (std::isinf(d)) {
                out(i, j) = 0.0;
            } else {
                if (d < 0.0) fail(errc::negative_distance, "negative path length");
                out(i, j) = std::exp(-d);
            }
        }
    }
    return out;
}

/// Experimental conversion of path capacities c to influences e^{-1/c}
/// (capacity 0, i.e. no path, maps to 0). The downstream semantics of mixing
/// a bottleneck closure with multiplicative self-weights are not settled;
/// provided for completeness.
inline Matrix capacity_to_influence(const Matrix& capacities) {
    Matrix out(capacities.rows(), capacities.cols());
    for (int i = 0; i < capacities.rows(); ++i) {
        for (int j = 0; j < capacities.cols(); ++j) {
            const double c = capacities(i, j);
            if (c < 0.0) fail(errc::negative_distance, "negative capacity");
            out(i, j) = (c == 0.0) ? 0.0 : std::exp(-1.0 / c);
        }
    }
    return out;
}

/// One-call construction of the operator W for the influence-like semirings.
inline ClosureOperator make_closure_operator(const WeightedDag& dag, const SemiringSpec& s) {
    return reflexive_closure(weighted_transitive_closure(dag, s), s);
}

} // namespace dagsp
