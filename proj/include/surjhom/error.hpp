#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surjhom {

enum class ErrorKind {
    InvalidInput,   // malformed data, out-of-range vertices, inconsistent maps
    Precondition,   // operation called on an argument outside its domain
    SizeBound,      // refused because a configured size bound would be exceeded
    Internal,       // a claimed structural fact failed to re-verify
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(message),
        _kind(kind)
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

[[noreturn]] inline auto invalid_input(const std::string & what) -> void
{
    throw Error(ErrorKind::InvalidInput, what);
}

[[noreturn]] inline auto precondition_failed(const std::string & what) -> void
{
    throw Error(ErrorKind::Precondition, what);
}

[[noreturn]] inline auto size_bound_exceeded(const std::string & what, std::size_t bound) -> void
{
    throw Error(ErrorKind::SizeBound, what + " (bound " + std::to_string(bound) + ")");
}

/// Process-wide limits. Read through the accessors; values come from
/// SURJHOM_SIZE_BOUND / SURJHOM_SOLVER_BOUND on first use unless set explicitly.
struct Limits {
    /// Largest materialised object (vertices of H^k, self-maps of G, ...).
    std::size_t materialise = 1'000'000;
    /// Largest source digraph a homomorphism search will accept.
    std::size_t solver_vertices = 512;
    /// Largest edge set a self-map digraph may carry.
    std::size_t self_map_edges = 50'000'000;
    /// Largest polymorphism arity searched without an explicit override.
    std::size_t max_arity = 3;
};

auto limits() -> Limits;
auto set_limits(const Limits & l) -> void;

} // namespace surjhom
