#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsep {

// Base for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual/JSON input. `line` is 1-based; 0 means "not line-addressable"
// (e.g. an empty graph, or a JSON schema violation).
struct parse_error : error {
    parse_error(std::size_t line_, const std::string& what_)
        : error(line_ ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
    std::size_t line;
};

// A vertex label that is not declared in the graph.
struct unknown_vertex_error : error {
    explicit unknown_vertex_error(const std::string& name_)
        : error("unknown vertex '" + name_ + "'"), name(name_) {}
    std::string name;
};

// Two operands live on different universes (n mismatch).
struct universe_mismatch_error : error {
    using error::error;
};

// A documented precondition does not hold (overlapping B/C/W, bad bounds, ...).
struct precondition_error : error {
    using error::error;
};

// The query is outside the scope of the component asked to answer it
// (e.g. classical d-separation oracle on a cyclic graph).
struct scope_error : error {
    using error::error;
};

// A splitting certificate that is not a splitting of W at all.
struct invalid_certificate_error : error {
    using error::error;
};

} // namespace tsep
