#pragma once

#include <stdexcept>
#include <string>

namespace dagsp {

enum class errc {
    cycle_detected,
    zero_weight,
    duplicate_edge,
    empty_weight_range,
    semiring_violation,
    non_realizable_semiring,
    negative_distance,
    dimension_mismatch,
    degenerate_labels,
    zero_reference,
    parse_error,
    initial_exceeds_population,
    not_symmetric,
    not_converged,
    unknown_label,
    invalid_config,
};

/// All library failures surface as this exception; code() distinguishes them.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace dagsp
