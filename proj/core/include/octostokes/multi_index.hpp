#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>

namespace octostokes {

/// Lattice point mh identified by its integer steps m = (m_0,...,m_7).
/// Ordered lexicographically; that order is the canonical iteration and
/// summation order everywhere.
struct MultiIndex {
    std::array<std::int32_t, 8> m{};

    auto operator<=>(const MultiIndex&) const = default;

    /// The point m + delta * unit(axis).
    MultiIndex shifted(std::size_t axis, std::int32_t delta) const {
        MultiIndex r = *this;
        r.m[axis] += delta;
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < 8; ++k) os << (k ? "," : "") << m[k];
        os << ')';
        return os.str();
    }
};

} // namespace octostokes
