#ifndef SIGFIX_COMMON_HPP
#define SIGFIX_COMMON_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sigfix {

/// Vertex ids are 1-based: a graph or network of order n uses ids 1..n.
using Vertex = int;

/// Thrown when an input exceeds a configured size limit (vertex count,
/// in-degree, state space).
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when cycle enumeration would produce more cycles than allowed.
class CycleCapExceeded : public LimitExceeded {
public:
    explicit CycleCapExceeded(std::size_t cap)
        : LimitExceeded("cycle enumeration exceeded cap of " + std::to_string(cap) + " cycles"),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t default_cycle_cap = 1'000'000;

/// A cycle length or code distance that may be infinite. Infinity compares
/// greater than every finite value and prints as "inf".
class Length {
public:
    constexpr Length() = default;
    constexpr Length(std::size_t value) : value_(value) {}

    static constexpr Length infinity() { return Length(inf_); }

    constexpr bool is_infinite() const { return value_ == inf_; }
    constexpr std::size_t value() const {
        if (is_infinite()) throw std::logic_error("Length::value() on infinity");
        return value_;
    }

    constexpr auto operator<=>(const Length&) const = default;

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

private:
    static constexpr std::size_t inf_ = std::numeric_limits<std::size_t>::max();
    std::size_t value_ = 0;
};

}  // namespace sigfix

#endif
