#ifndef MULTICURVE_ERRORS_HPP
#define MULTICURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multicurve {

// Error categories surfaced by the library. The CLI maps every one of these
// to exit code 2; internal_error signals a broken invariant rather than bad input.
enum class errc {
    non_positive_entry,
    not_primitive,
    nonpositive_lambda,
    negative_exponent,
    syntax_error,
    degenerate_slice,
    degenerate_cone,
    ray_not_in_cone,
    not_on_dividing_line,
    ray_outside_cone,
    whole_plane_orthogonal,
    embedded_condition_violated,
    unit_ideal,
    internal_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Parse failures carry the offset of the offending character in the input text.
class parse_error : public error {
public:
    parse_error(errc code, const std::string& what, std::size_t position)
        : error(code, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace multicurve

#endif
