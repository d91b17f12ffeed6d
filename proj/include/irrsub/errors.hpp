#pragma once

#include <stdexcept>
#include <string>

namespace irrsub {

enum class errc {
    loop_edge,
    vertex_out_of_range,
    dead_edge,
    not_regular,
    not_cubic,
    wrong_side,
    wrong_state,
    dimension_mismatch,
    index_out_of_range,
    precondition_violated,
    internal_invariant,
    malformed_record,
    too_small,
    degree_too_small,
    too_large,
    invalid_params,
    retry_exhausted,
    host_mismatch,
    parse_error,
    inconsistent_header,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::loop_edge: return "loop_edge";
        case errc::vertex_out_of_range: return "vertex_out_of_range";
        case errc::dead_edge: return "dead_edge";
        case errc::not_regular: return "not_regular";
        case errc::not_cubic: return "not_cubic";
        case errc::wrong_side: return "wrong_side";
        case errc::wrong_state: return "wrong_state";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::index_out_of_range: return "index_out_of_range";
        case errc::precondition_violated: return "precondition_violated";
        case errc::internal_invariant: return "internal_invariant";
        case errc::malformed_record: return "malformed_record";
        case errc::too_small: return "too_small";
        case errc::degree_too_small: return "degree_too_small";
        case errc::too_large: return "too_large";
        case errc::invalid_params: return "invalid_params";
        case errc::retry_exhausted: return "retry_exhausted";
        case errc::host_mismatch: return "host_mismatch";
        case errc::parse_error: return "parse_error";
        case errc::inconsistent_header: return "inconsistent_header";
    }
    return "unknown";
}

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
    if (!ok) fail(c, what);
}

} // namespace irrsub
