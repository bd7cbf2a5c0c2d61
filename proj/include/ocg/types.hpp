#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace ocg {

// Vertices are 0-based; the {1,...,n} labelling is only used for display.
using Vertex = int;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    Arc reversed() const { return {head, tail}; }
    bool is_loop() const { return tail == head; }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string to_string(const Arc& a);

// Directing an arc that is already directed or whose reverse is directed.
class RuleViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arguments outside an operation's mathematical domain (n = 0, loops, b < 3, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A guarded floor/comparison could not be resolved at any supported precision.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction that is guaranteed to exist failed; indicates a bug or a
// violated precondition that slipped past the checks.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ocg
