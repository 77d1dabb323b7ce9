#ifndef SPECCOL_ERRORS_HPP
#define SPECCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace speccol {

// Every failure mode the library reports, one code per named condition.
enum class errc {
    loop_edge,
    duplicate_edge,
    isolated_vertex,
    nonpositive_weight,
    vertex_out_of_range,
    duplicate_vertex,
    partition_size_mismatch,
    invalid_class_index,
    empty_class,
    not_symmetric,
    no_convergence,
    size_mismatch,
    index_out_of_range,
    not_a_laplacian_spectrum,
    degenerate_lambda,
    too_large,
    not_proper,
    single_class,
    not_uniform,
    not_linear,
    uncovered_vertex,
    generation_failed,
    parse_error,
};

constexpr const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::loop_edge: return "LoopEdge";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::nonpositive_weight: return "NonpositiveWeight";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::duplicate_vertex: return "DuplicateVertex";
        case errc::partition_size_mismatch: return "PartitionSizeMismatch";
        case errc::invalid_class_index: return "InvalidClassIndex";
        case errc::empty_class: return "EmptyClass";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::no_convergence: return "NoConvergence";
        case errc::size_mismatch: return "SizeMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::not_a_laplacian_spectrum: return "NotALaplacianSpectrum";
        case errc::degenerate_lambda: return "DegenerateLambda";
        case errc::too_large: return "TooLarge";
        case errc::not_proper: return "NotProper";
        case errc::single_class: return "SingleClass";
        case errc::not_uniform: return "NotUniform";
        case errc::not_linear: return "NotLinear";
        case errc::uncovered_vertex: return "UncoveredVertex";
        case errc::generation_failed: return "GenerationFailed";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace speccol

#endif // SPECCOL_ERRORS_HPP
