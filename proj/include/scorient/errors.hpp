#ifndef SCORIENT_ERRORS_HPP
#define SCORIENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scorient {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Anything wrong with an input document (graph or orientation text).
class input_error : public error {
public:
    using error::error;
};

// Malformed text: bad token, missing header line, trailing garbage.
class parse_error : public input_error {
public:
    using input_error::input_error;
};

// Structurally invalid graph data: self-loop, duplicate edge.
class validation_error : public input_error {
public:
    using input_error::input_error;
};

// Vertex id outside [0, n).
class range_error : public input_error {
public:
    using input_error::input_error;
};

// Graph admits no strongly connected orientation (disconnected or bridged),
// or an oracle query has no feasible orientation.
class infeasible_error : public error {
public:
    using error::error;
};

// Enumeration size exceeds the configured cap.
class cap_error : public error {
public:
    using error::error;
};

// A caller broke an operation's precondition.
class contract_error : public error {
public:
    using error::error;
};

// Generator spec outside its documented parameter ranges.
class param_error : public input_error {
public:
    using input_error::input_error;
};

} // namespace scorient

#endif
