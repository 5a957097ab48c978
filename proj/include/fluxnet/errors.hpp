#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fluxnet {

// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input data: schema violations, broken network invariants,
// bad generator parameters. Message carries the offending location.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A connected component has no Dirichlet node (fixed or controlled);
// the interior system on it is singular.
class UnanchoredComponentError : public Error {
public:
    UnanchoredComponentError(int component, const std::string& what)
        : Error(what), component_(component) {}
    int component() const noexcept { return component_; }

private:
    int component_;
};

// A symmetric factorization hit a nonpositive pivot. Usually means an
// unanchored component slipped past partitioning.
class NotSpdError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// A flux cap row with zero control influence and negative slack:
// no control vector can satisfy it.
class StructurallyInfeasibleError : public Error {
public:
    StructurallyInfeasibleError(std::vector<int> edges, const std::string& what)
        : Error(what), edges_(std::move(edges)) {}
    const std::vector<int>& edges() const noexcept { return edges_; }

private:
    std::vector<int> edges_;
};

// Vertex enumeration refused an instance above its combinatorial guard.
class GuardExceededError : public Error {
public:
    using Error::Error;
};

// Simplex exceeded its cycling guard. Not reachable with Bland's rule
// unless pivoting is broken; kept as a hard stop.
class CyclingError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace fluxnet
