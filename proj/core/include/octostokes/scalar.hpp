#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <string>
#include <type_traits>

namespace octostokes {

/// Arbitrary-precision signed integer, the default scalar of the exact mode.
/// Expression templates are disabled so the type behaves like a plain value.
using ExactInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Minimal ring interface shared by both scalar realizations.
template <typename S>
concept ScalarRing = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    S(0);
    S(1);
};

enum class ScalarMode { exact, floating };

template <ScalarRing S>
inline constexpr bool is_exact_scalar_v = !std::is_floating_point_v<S>;

template <ScalarRing S>
constexpr ScalarMode scalar_mode_of() {
    return is_exact_scalar_v<S> ? ScalarMode::exact : ScalarMode::floating;
}

inline const char* to_string(ScalarMode mode) {
    return mode == ScalarMode::exact ? "exact" : "float";
}

inline std::string scalar_to_string(const ExactInt& v) { return v.str(); }

/// Shortest decimal representation that parses back to the same double.
inline std::string scalar_to_string(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

} // namespace octostokes
