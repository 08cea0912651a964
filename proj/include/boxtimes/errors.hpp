#pragma once

// Error taxonomy shared by the whole library.
//
// Every failure mode maps onto one of a small set of exception classes so the
// CLI can translate failures into exit codes uniformly:
//
//   shape_error      incompatible boundaries / ranks of otherwise valid data
//   range_error      an index outside its documented range
//   size_error       a configured enumeration bound was exceeded
//   reference_error  an identifier that does not resolve in its category
//   parse_error      malformed input text (carries a line number)
//   contract_error   a precondition on *checked* data fails (e.g. evaluating
//                    under an assignment that violates the relations)
//   internal_error   an invariant the library itself guarantees was broken;
//                    always a bug, never a user error

#include <stdexcept>
#include <string>

namespace boxtimes {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct shape_error : error {
    using error::error;
};

struct range_error : error {
    using error::error;
};

struct size_error : error {
    using error::error;
};

struct reference_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line(line) {}
    // File-level problem with no meaningful line (e.g. a missing declaration
    // detected only once the whole file has been read).
    explicit parse_error(const std::string& what) : error(what), line(0) {}
    int line;
};

struct contract_error : error {
    using error::error;
};

struct internal_error : error {
    using error::error;
};

} // namespace boxtimes
