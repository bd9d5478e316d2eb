#pragma once

#include "octostokes/field.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace octostokes {

/// SplitMix64 step, used to derive per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for trial t of a campaign: splitmix64(seed XOR splitmix64(t + 1)).
/// Trials are independent and reproducible in isolation.
inline std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial) {
    return splitmix64(campaign_seed ^ splitmix64(trial + 1));
}

/// Uniform integer draws on top of the standard-specified mt19937_64 stream.
/// Rejection sampling keeps the draw exactly uniform and the sequence
/// identical across platforms.
class UniformDraw {
public:
    explicit UniformDraw(std::uint64_t seed) : engine_(seed) {}

    std::int32_t in(std::int32_t lo, std::int32_t hi) {
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int32_t>(x % range);
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

/// Visits the box [-radius, radius]^8 in lexicographic order.
template <typename Visit>
void for_each_box_point(std::int32_t radius, Visit&& visit) {
    MultiIndex m;
    m.m.fill(-radius);
    while (true) {
        visit(m);
        std::size_t axis = 8;
        while (axis > 0) {
            --axis;
            if (m.m[axis] < radius) {
                ++m.m[axis];
                break;
            }
            m.m[axis] = -radius;
            if (axis == 0) return;
        }
    }
}

template <ScalarRing S>
Octonion<S> draw_octonion(UniformDraw& draw, std::int32_t coeff_bound, bool real_only) {
    Octonion<S> v;
    const std::size_t components = real_only ? 1 : 8;
    for (std::size_t k = 0; k < components; ++k) {
        v[k] = S(draw.in(-coeff_bound, coeff_bound));
    }
    return v;
}

template <ScalarRing S>
Field<S> random_box_field(std::uint64_t seed, std::int32_t radius, std::int32_t coeff_bound,
                          S h, bool real_only) {
    if (radius < 0 || coeff_bound < 1) {
        throw std::invalid_argument("random field needs radius >= 0 and coeff_bound >= 1");
    }
    UniformDraw draw(seed);
    typename Field<S>::EntryMap entries;
    for_each_box_point(radius, [&](const MultiIndex& m) {
        entries.emplace_hint(entries.end(), m,
                             draw_octonion<S>(draw, coeff_bound, real_only));
    });
    return Field<S>(std::move(h), std::move(entries));
}

} // namespace detail

/// Dense random field on the box [-radius, radius]^8: every box point gets 8
/// independent integer coefficients uniform in [-coeff_bound, coeff_bound].
/// Points are visited in lexicographic order, coefficients drawn in component
/// order, so a seed pins the field bit-exactly on every platform.
template <ScalarRing S>
Field<S> random_field(std::uint64_t seed, std::int32_t radius, std::int32_t coeff_bound, S h) {
    return detail::random_box_field<S>(seed, radius, coeff_bound, std::move(h), false);
}

/// Like random_field but only the real component c_0 is drawn; the imaginary
/// coefficients stay zero. Input generator for the vanishing cases and the
/// summation-by-parts lemma.
template <ScalarRing S>
Field<S> random_real_field(std::uint64_t seed, std::int32_t radius, std::int32_t coeff_bound,
                           S h) {
    return detail::random_box_field<S>(seed, radius, coeff_bound, std::move(h), true);
}

/// Sparse random field: max_points candidate points are drawn uniformly from
/// the box (8 coordinate draws each, then 8 coefficient draws); a repeated
/// point keeps its first value. Support size is therefore at most max_points.
template <ScalarRing S>
Field<S> random_sparse_field(std::uint64_t seed, std::int32_t radius, std::int32_t coeff_bound,
                             S h, std::size_t max_points) {
    if (radius < 0 || coeff_bound < 1) {
        throw std::invalid_argument("random field needs radius >= 0 and coeff_bound >= 1");
    }
    UniformDraw draw(seed);
    typename Field<S>::EntryMap entries;
    for (std::size_t n = 0; n < max_points; ++n) {
        MultiIndex m;
        for (std::size_t axis = 0; axis < 8; ++axis) m.m[axis] = draw.in(-radius, radius);
        const Octonion<S> v = detail::draw_octonion<S>(draw, coeff_bound, false);
        entries.emplace(m, v);
    }
    return Field<S>(std::move(h), std::move(entries));
}

} // namespace octostokes
