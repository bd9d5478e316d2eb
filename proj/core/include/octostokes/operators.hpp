#pragma once

#include "octostokes/field.hpp"

#include <cstddef>

namespace octostokes {

namespace detail {

template <ScalarRing S>
void accumulate(typename Field<S>::EntryMap& acc, const MultiIndex& m, const Octonion<S>& v) {
    auto [it, inserted] = acc.emplace(m, v);
    if (!inserted) it->second += v;
}

template <ScalarRing S>
S inverse_lattice_constant(const Field<S>& f) {
    // Exact mode has h = 1 by invariant, so the integer division is exact.
    return S(1) / f.lattice_constant();
}

template <ScalarRing S>
S measure_factor(const Field<S>& f) {
    S h8(1);
    for (int k = 0; k < 8; ++k) h8 = h8 * f.lattice_constant();
    return h8;
}

} // namespace detail

/// Forward difference along axis j: h^-1 (f(m + e_j h) - f(m)).
/// Support of the result lies in support(f) united with support(f) - e_j.
template <ScalarRing S>
Field<S> forward_diff(const Field<S>& f, std::size_t j) {
    const S inv_h = detail::inverse_lattice_constant(f);
    typename Field<S>::EntryMap acc;
    for (const auto& [m, v] : f.entries()) {
        const Octonion<S> scaled = v * inv_h;
        detail::accumulate(acc, m.shifted(j, -1), scaled);
        detail::accumulate(acc, m, -scaled);
    }
    return Field<S>(f.lattice_constant(), std::move(acc));
}

/// Backward difference along axis j: h^-1 (f(m) - f(m - e_j h)).
template <ScalarRing S>
Field<S> backward_diff(const Field<S>& f, std::size_t j) {
    const S inv_h = detail::inverse_lattice_constant(f);
    typename Field<S>::EntryMap acc;
    for (const auto& [m, v] : f.entries()) {
        const Octonion<S> scaled = v * inv_h;
        detail::accumulate(acc, m, scaled);
        detail::accumulate(acc, m.shifted(j, +1), -scaled);
    }
    return Field<S>(f.lattice_constant(), std::move(acc));
}

namespace detail {

enum class CrSide { left, right };

template <ScalarRing S, CrSide Side>
Field<S> cauchy_riemann(const Field<S>& f, bool forward) {
    typename Field<S>::EntryMap acc;
    for (std::size_t j = 0; j < 8; ++j) {
        const Octonion<S> ej = Octonion<S>::basis(static_cast<BasisIndex>(j));
        const Field<S> d = forward ? forward_diff(f, j) : backward_diff(f, j);
        for (const auto& [m, v] : d.entries()) {
            if constexpr (Side == CrSide::left) {
                accumulate(acc, m, ej * v);
            } else {
                accumulate(acc, m, v * ej);
            }
        }
    }
    return Field<S>(f.lattice_constant(), std::move(acc));
}

} // namespace detail

/// D_h^+ f: pointwise sum over j of e_j (forward difference of f along j).
template <ScalarRing S>
Field<S> cr_forward_left(const Field<S>& f) {
    return detail::cauchy_riemann<S, detail::CrSide::left>(f, true);
}

/// D_h^- f: pointwise sum over j of e_j (backward difference of f along j).
template <ScalarRing S>
Field<S> cr_backward_left(const Field<S>& f) {
    return detail::cauchy_riemann<S, detail::CrSide::left>(f, false);
}

/// g D_h^+: pointwise sum over j of (forward difference of g along j) e_j,
/// the right action appearing on the left-hand side of the Stokes identity.
template <ScalarRing S>
Field<S> cr_forward_right(const Field<S>& g) {
    return detail::cauchy_riemann<S, detail::CrSide::right>(g, true);
}

/// Sum of f(m) h^8 over the support, in lexicographic order.
template <ScalarRing S>
Octonion<S> volume_sum(const Field<S>& f) {
    const S h8 = detail::measure_factor(f);
    Octonion<S> acc;
    for (const auto& [m, v] : f.entries()) acc += v * h8;
    return acc;
}

} // namespace octostokes
