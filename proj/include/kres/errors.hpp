#pragma once

#include <stdexcept>
#include <string>

namespace kres {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by distance computations when the graph is not connected.
// Carries one vertex from each of two different components.
struct DisconnectedError : Error {
    int u;
    int v;
    DisconnectedError(int u_, int v_, const std::string& msg) : Error(msg), u(u_), v(v_) {}
};

// Raised when a brute-force search exceeds its node budget.
struct ScaleGuardError : Error {
    unsigned long long nodes;
    ScaleGuardError(unsigned long long nodes_, const std::string& msg) : Error(msg), nodes(nodes_) {}
};

} // namespace kres
