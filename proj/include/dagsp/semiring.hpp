#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "dagsp/errors.hpp"
#include "dagsp/rng.hpp"

namespace dagsp {

/// A semiring (S, plus, times, zero, one) over doubles. plus combines the
/// weights of alternative paths, times combines consecutive edges along one
/// path; zero is the plus-identity representing "no path" and annihilates
/// times; one is the times-identity. The laws are not assumed: every closure
/// run re-verifies them on random operands (see check_semiring).
struct SemiringSpec {
    std::string name;
    double (*plus)(double, double);
    double (*times)(double, double);
    double zero;
    double one;
    /// Draws a representative operand; used only by the algebra self-check.
    double (*sample)(Rng&);
};

namespace semirings {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Reachability: values in {0,1}, plus = or, times = and.
inline SemiringSpec boolean() {
    return {
        "boolean",
        [](double a, double b) { return (a != 0.0 || b != 0.0) ? 1.0 : 0.0; },
        [](double a, double b) { return (a != 0.0 && b != 0.0) ? 1.0 : 0.0; },
        0.0,
        1.0,
        [](Rng& r) { return r.bernoulli(0.5) ? 1.0 : 0.0; },
    };
}

/// Fractions of a quantity propagating along edges: sum over paths of the
/// product along each path. Works for arbitrary real weights, which is what
/// links this closure to linear structural equation models.
inline SemiringSpec pollution() {
    return {
        "pollution",
        [](double a, double b) { return a + b; },
        [](double a, double b) { return a * b; },
        0.0,
        1.0,
        [](Rng& r) { return r.uniform(-1.0, 1.0); },
    };
}

/// Strongest-path influence: weights in [0,1], max over paths of products.
inline SemiringSpec influence() {
    return {
        "influence",
        [](double a, double b) { return a > b ? a : b; },
        [](double a, double b) { return a * b; },
        0.0,
        1.0,
        [](Rng& r) { return r.uniform(0.0, 1.0); },
    };
}

/// Shortest path length: min over paths of edge-length sums; "no path" is
/// +infinity, so absent entries must be initialized to that.
inline SemiringSpec shortest_path() {
    return {
        "shortest-path",
        [](double a, double b) { return a < b ? a : b; },
        [](double a, double b) { return a + b; },
        kInf,
        0.0,
        [](Rng& r) { return r.bernoulli(0.1) ? kInf : r.uniform(0.0, 10.0); },
    };
}

/// Widest path: max over paths of the bottleneck (min) edge capacity.
inline SemiringSpec max_capacity() {
    return {
        "capacity",
        [](double a, double b) { return a > b ? a : b; },
        [](double a, double b) { return a < b ? a : b; },
        0.0,
        kInf,
        [](Rng& r) { return r.bernoulli(0.1) ? kInf : r.uniform(0.0, 10.0); },
    };
}

inline SemiringSpec by_name(const std::string& name) {
    if (name == "boolean") return boolean();
    if (name == "pollution") return pollution();
    if (name == "influence") return influence();
    if (name == "shortest-path" || name == "shortest_path") return shortest_path();
    if (name == "capacity" || name == "max-capacity") return max_capacity();
    fail(errc::invalid_config, "unknown semiring '" + name + "'");
}

} // namespace semirings

namespace detail {

inline bool semiring_eq(double a, double b, double tol) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace detail

/// Randomized check of the semiring laws: commutativity and associativity of
/// plus, associativity of times, identities, distributivity, and zero
/// annihilation. `trials` operand triples per law, tolerance 1e-9 for real
/// arithmetic. Throws semiring_violation on the first failed law.
inline void check_semiring(const SemiringSpec& s, int trials = 200, std::uint64_t seed = 0x5e311) {
    Rng rng(seed);
    const double tol = 1e-9;
    auto expect = [&](bool ok, const char* law) {
        if (!ok) fail(errc::semiring_violation, s.name + ": semiring law failed: " + law);
    };
    for (int t = 0; t < trials; ++t) {
        const double a = s.sample(rng);
        const double b = s.sample(rng);
        const double c = s.sample(rng);
        expect(detail::semiring_eq(s.plus(a, b), s.plus(b, a), tol), "plus commutativity");
        expect(detail::semiring_eq(s.plus(s.plus(a, b), c), s.plus(a, s.plus(b, c)), tol),
               "plus associativity");
        expect(detail::semiring_eq(s.times(s.times(a, b), c), s.times(a, s.times(b, c)), tol),
               "times associativity");
        expect(detail::semiring_eq(s.plus(a, s.zero), a, tol), "plus identity");
        expect(detail::semiring_eq(s.times(a, s.one), a, tol), "times right identity");
        expect(detail::semiring_eq(s.times(s.one, a), a, tol), "times left identity");
        expect(detail::semiring_eq(s.times(a, s.plus(b, c)), s.plus(s.times(a, b), s.times(a, c)),
                                   tol),
               "left distributivity");
        expect(detail::semiring_eq(s.times(s.plus(b, c), a), s.plus(s.times(b, a), s.times(c, a)),
                                   tol),
               "right distributivity");
        expect(detail::semiring_eq(s.times(a, s.zero), s.zero, tol) &&
                   detail::semiring_eq(s.times(s.zero, a), s.zero, tol),
               "zero annihilation");
    }
}

} // namespace dagsp
