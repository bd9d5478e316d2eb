#pragma once

#include "octostokes/operators.hpp"

#include <array>

namespace octostokes {

/// Both sides of the corrected discrete Stokes identity for one field pair.
/// residual = lhs - correction, componentwise. In exact mode the identity
/// makes the residual the zero octonion for every finitely supported pair.
template <ScalarRing S>
struct StokesResult {
    Octonion<S> lhs;
    Octonion<S> correction;
    Octonion<S> correction_oracle;
    Octonion<S> residual;
    S h;
    bool oracle_match = false;
};

/// Left-hand side: sum over m of [ (g D_h^+) f + g (D_h^- f) ](m) h^8.
/// Whole-octonion products only; shares no code path with the correction
/// evaluators. Outer sum runs over the union of the supports in
/// lexicographic order.
template <ScalarRing S>
Octonion<S> stokes_lhs(const Field<S>& g, const Field<S>& f) {
    require_same_lattice(g, f);
    const S h8 = detail::measure_factor(f);
    const Field<S> gd = cr_forward_right(g);
    const Field<S> df = cr_backward_left(f);

    Octonion<S> acc;
    auto fit = f.entries().begin();
    auto git = g.entries().begin();
    while (fit != f.entries().end() || git != g.entries().end()) {
        const bool take_f = git == g.entries().end() ||
                            (fit != f.entries().end() && fit->first <= git->first);
        const bool take_g = fit == f.entries().end() ||
                            (git != g.entries().end() && git->first <= fit->first);
        Octonion<S> term;
        if (take_f) {
            if (const Octonion<S>* gdm = gd.find(fit->first)) term += *gdm * fit->second;
        }
        if (take_g) {
            if (const Octonion<S>* dfm = df.find(git->first)) term += git->second * *dfm;
        }
        if (take_f) ++fit;
        if (take_g) ++git;
        acc += term * h8;
    }
    return acc;
}

/// Right-hand side of the identity: the associator correction
/// 2 sum over m, (s, i in I_s, j in I_s\{i}, k in {1..7}\I_s) of
/// g_i(m) (backward_j f_k)(m) e_i(e_j e_k) h^8. The scalar factors commute
/// out; e_i(e_j e_k) is resolved once per (i,j,k) through the table.
/// Component arithmetic and table lookups only.
template <ScalarRing S>
Octonion<S> correction_term(const Field<S>& g, const Field<S>& f) {
    require_same_lattice(g, f);
    const S h8 = detail::measure_factor(f);

    std::array<Field<S>, 7> df{
        backward_diff(f, 1), backward_diff(f, 2), backward_diff(f, 3), backward_diff(f, 4),
        backward_diff(f, 5), backward_diff(f, 6), backward_diff(f, 7)};

    Octonion<S> acc;
    for (const auto& [m, gv] : g.entries()) {
        std::array<const Octonion<S>*, 8> dfm{};
        for (std::size_t j = 1; j < 8; ++j) dfm[j] = df[j - 1].find(m);
        for (const auto& e : detail::correction_schedule()) {
            const S& gi = gv[e.i];
            if (gi == S(0) || dfm[e.j] == nullptr) continue;
            const S& dfk = (*dfm[e.j])[e.k];
            if (dfk == S(0)) continue;
            const S term = gi * dfk;
            if (e.sign > 0) {
                acc[e.target] = acc[e.target] + term;
            } else {
                acc[e.target] = acc[e.target] - term;
            }
        }
    }
    return acc * (S(2) * h8);
}

/// Independent oracle for the correction: minus the sum over all ordered
/// anti-associative triples (i,j,k) of g_i(m) (backward_j f_k)(m)
/// [e_i,e_j,e_k] h^8. Uses the classification and the associator only, never
/// the Fano lines, so a sign error in either enumeration cannot hide.
template <ScalarRing S>
Octonion<S> correction_oracle(const Field<S>& g, const Field<S>& f) {
    require_same_lattice(g, f);
    const S h8 = detail::measure_factor(f);

    std::array<Field<S>, 7> df{
        backward_diff(f, 1), backward_diff(f, 2), backward_diff(f, 3), backward_diff(f, 4),
        backward_diff(f, 5), backward_diff(f, 6), backward_diff(f, 7)};

    Octonion<S> acc;
    for (const auto& [m, gv] : g.entries()) {
        std::array<const Octonion<S>*, 8> dfm{};
        for (std::size_t j = 1; j < 8; ++j) dfm[j] = df[j - 1].find(m);
        for (const auto& e : detail::anti_associative_schedule()) {
            const S& gi = gv[e.i];
            if (gi == S(0) || dfm[e.j] == nullptr) continue;
            const S& dfk = (*dfm[e.j])[e.k];
            if (dfk == S(0)) continue;
            const S term = gi * dfk;
            // [e_i,e_j,e_k] = 2 sign e_target on anti-associative triples.
            if (e.sign > 0) {
                acc[e.target] = acc[e.target] + term;
            } else {
                acc[e.target] = acc[e.target] - term;
            }
        }
    }
    return acc * (S(-2) * h8);
}

/// The 512-summand componentwise form of the first left-hand-side term, with
/// left bracketing: sum over m, j, i, k of (forward_j g_i)(m) f_k(m)
/// ((e_i e_j) e_k) h^8. Must match the whole-octonion evaluation exactly.
template <ScalarRing S>
Octonion<S> lhs_component_expansion(const Field<S>& g, const Field<S>& f) {
    require_same_lattice(g, f);
    const S h8 = detail::measure_factor(f);
    const auto& brackets = detail::left_bracket_table();

    std::array<Field<S>, 8> dg{forward_diff(g, 0), forward_diff(g, 1), forward_diff(g, 2),
                               forward_diff(g, 3), forward_diff(g, 4), forward_diff(g, 5),
                               forward_diff(g, 6), forward_diff(g, 7)};

    Octonion<S> acc;
    for (const auto& [m, fv] : f.entries()) {
        for (std::size_t j = 0; j < 8; ++j) {
            const Octonion<S>* dgm = dg[j].find(m);
            if (dgm == nullptr) continue;
            for (std::size_t i = 0; i < 8; ++i) {
                const S& dgi = (*dgm)[i];
                if (dgi == S(0)) continue;
                for (std::size_t k = 0; k < 8; ++k) {
                    const S& fk = fv[k];
                    if (fk == S(0)) continue;
                    const auto& lb = brackets[i][j][k];
                    const S term = dgi * fk;
                    if (lb.sign > 0) {
                        acc[lb.target] = acc[lb.target] + term;
                    } else {
                        acc[lb.target] = acc[lb.target] - term;
                    }
                }
            }
        }
    }
    return acc * h8;
}

/// Evaluates both sides and the oracle. oracle_match records whether the two
/// correction routes agreed; the campaign verdict requires it.
template <ScalarRing S>
StokesResult<S> stokes_residual(const Field<S>& g, const Field<S>& f) {
    StokesResult<S> r;
    r.h = f.lattice_constant();
    r.lhs = stokes_lhs(g, f);
    r.correction = correction_term(g, f);
    r.correction_oracle = correction_oracle(g, f);
    r.residual = r.lhs - r.correction;
    r.oracle_match = r.correction == r.correction_oracle;
    return r;
}

} // namespace octostokes
