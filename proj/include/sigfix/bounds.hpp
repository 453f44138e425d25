#ifndef SIGFIX_BOUNDS_HPP
#define SIGFIX_BOUNDS_HPP

#include <sigfix/common.hpp>

#include <cstdint>
#include <optional>

namespace sigfix {

/// Largest code length accepted by the closed-form bounds (2^n must fit).
inline constexpr std::size_t max_bound_length = 63;
/// Largest code length accepted by exact_A.
inline constexpr std::size_t max_exact_length = 12;

/// Summary of what is known about A(n, d), the largest binary code of
/// length n with minimum distance d.
struct CodeBound {
    std::size_t n = 0;
    Length d;
    std::uint64_t gilbert_lower = 0;
    std::uint64_t sphere_packing_upper = 0;
    std::optional<std::uint64_t> exact;
};

/// ceil(2^n / sum_{k<d} C(n,k)); 1 when d > n.
std::uint64_t gilbert_lower(std::size_t n, Length d);
/// floor(2^n / sum_{k<=(d-1)/2} C(n,k)); 1 when d > n.
std::uint64_t sphere_packing_upper(std::size_t n, Length d);

/// Exact A(n, d) by branch-and-bound maximum clique search over
/// {0,1}^n. The all-zero word is fixed in the code, and coordinates are
/// permuted so that a minimum-weight codeword is 1^w 0^(n-w).
std::uint64_t exact_A(std::size_t n, Length d);

/// Like exact_A but gives up after `node_budget` search nodes.
std::optional<std::uint64_t> try_exact_A(std::size_t n, Length d, std::uint64_t node_budget);

CodeBound code_bound(std::size_t n, Length d, bool with_exact);

/// Search nodes A_upper spends on an exact value before falling back.
inline constexpr std::uint64_t A_upper_node_budget = 2'000'000;

/// Sound upper bound on A(n, d): exact when it is cheap to settle, the
/// sphere-packing bound otherwise; 1 when d is infinite or exceeds n.
std::uint64_t A_upper(std::size_t n, Length d);

/// min(2^tau_tilde, A_upper(n, g_tilde)).
std::uint64_t fp_bound(std::size_t n, std::size_t tau_tilde, Length g_tilde);

}  // namespace sigfix

#endif
