#include "octostokes/cayley_table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace octostokes {

namespace {

// Oriented cyclic triples (a,b,c): e_a e_b = e_c, e_b e_c = e_a, e_c e_a = e_b.
// The first four carry the generator identities e4 = e1 e2, e5 = e1 e3,
// e6 = e2 e3, e7 = e4 e3; the last three close the table under the sign rule
// for non-associative triples.
constexpr std::array<std::array<BasisIndex, 3>, 7> kOrientedTriples{{
    {1, 2, 4},
    {1, 3, 5},
    {2, 3, 6},
    {4, 3, 7},
    {6, 1, 7},
    {2, 5, 7},
    {5, 4, 6},
}};

[[noreturn]] void table_fault(const std::string& detail) {
    throw std::logic_error("octostokes: Cayley table certificate failed: " + detail);
}

// (e_i e_j) e_k on pure signed basis units.
SignedBasis left_product(const CayleyTable& t, BasisIndex i, BasisIndex j, BasisIndex k) {
    const SignedBasis ij = t.product(i, j);
    const SignedBasis r = t.product(ij.index, k);
    return {static_cast<std::int8_t>(ij.sign * r.sign), r.index};
}

// e_i (e_j e_k) on pure signed basis units.
SignedBasis right_product(const CayleyTable& t, BasisIndex i, BasisIndex j, BasisIndex k) {
    const SignedBasis jk = t.product(j, k);
    const SignedBasis r = t.product(i, jk.index);
    return {static_cast<std::int8_t>(jk.sign * r.sign), r.index};
}

Associativity classify_on(const CayleyTable& t, BasisIndex i, BasisIndex j, BasisIndex k) {
    if (i == 0 || j == 0 || k == 0 || i == j || j == k || i == k) {
        return Associativity::Associative;
    }
    return t.product(i, j).index == k ? Associativity::Associative
                                      : Associativity::AntiAssociative;
}

Census census_on(const CayleyTable& t) {
    Census c;
    for (BasisIndex i = 0; i < 8; ++i) {
        for (BasisIndex j = 0; j < 8; ++j) {
            for (BasisIndex k = 0; k < 8; ++k) {
                const SignedBasis l = left_product(t, i, j, k);
                const SignedBasis r = right_product(t, i, j, k);
                if (l.index != r.index) {
                    table_fault("basis triple does not close on a single unit");
                }
                if (l.sign == r.sign) {
                    ++c.associative;
                } else {
                    ++c.anti_associative;
                }
            }
        }
    }
    return c;
}

std::uint64_t fnv1a(const CayleyTable& t, const Census& census) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    for (BasisIndex i = 0; i < 8; ++i) {
        for (BasisIndex j = 0; j < 8; ++j) {
            const SignedBasis p = t.product(i, j);
            mix(p.sign > 0 ? 0x2Bu : 0x2Du);
            mix(p.index);
        }
    }
    mix(static_cast<std::uint64_t>(census.associative));
    mix(static_cast<std::uint64_t>(census.anti_associative));
    return h;
}

// Exhaustive consistency certificate. Everything here must hold for the
// hardcoded triples to be a valid closure of the generator identities.
void certify(const CayleyTable& t) {
    // e_0 neutral, e_i^2 = -1, anticommutativity.
    for (BasisIndex j = 0; j < 8; ++j) {
        if (t.product(0, j) != SignedBasis{1, j} || t.product(j, 0) != SignedBasis{1, j}) {
            table_fault("e0 is not neutral");
        }
    }
    for (BasisIndex i = 1; i < 8; ++i) {
        if (t.product(i, i) != SignedBasis{-1, 0}) {
            table_fault("e_i^2 != -1");
        }
        for (BasisIndex j = 1; j < 8; ++j) {
            if (i == j) continue;
            const SignedBasis ij = t.product(i, j);
            const SignedBasis ji = t.product(j, i);
            if (ij.index != ji.index || ij.sign != -ji.sign) {
                table_fault("anticommutativity violated");
            }
            if (ij.index == 0 || ij.index == i || ij.index == j) {
                table_fault("product of distinct imaginary units left their span");
            }
        }
    }

    // Generator identities.
    if (t.product(1, 2) != SignedBasis{1, 4}) table_fault("e1 e2 != e4");
    if (t.product(1, 3) != SignedBasis{1, 5}) table_fault("e1 e3 != e5");
    if (t.product(2, 3) != SignedBasis{1, 6}) table_fault("e2 e3 != e6");
    if (t.product(4, 3) != SignedBasis{1, 7}) table_fault("e4 e3 != e7");

    // Census over all 512 ordered triples, and agreement of the distinctness
    // classification with the sign of the two bracketings.
    const Census census = census_on(t);
    if (census.associative != 344 || census.anti_associative != 168) {
        table_fault("census is not (344, 168)");
    }
    for (BasisIndex i = 0; i < 8; ++i) {
        for (BasisIndex j = 0; j < 8; ++j) {
            for (BasisIndex k = 0; k < 8; ++k) {
                const bool assoc =
                    left_product(t, i, j, k) == right_product(t, i, j, k);
                const bool classified =
                    classify_on(t, i, j, k) == Associativity::Associative;
                if (assoc != classified) {
                    table_fault("classification disagrees with associator vanishing");
                }
            }
        }
    }

    // Alternativity on the basis: triples with a repeated unit associate.
    for (BasisIndex i = 0; i < 8; ++i) {
        for (BasisIndex j = 0; j < 8; ++j) {
            if (left_product(t, i, i, j) != right_product(t, i, i, j) ||
                left_product(t, i, j, j) != right_product(t, i, j, j) ||
                left_product(t, i, j, i) != right_product(t, i, j, i)) {
                table_fault("alternativity violated");
            }
        }
    }
}

} // namespace

CayleyTable build_cayley_table() {
    CayleyTable t;
    std::array<std::array<bool, 8>, 8> filled{};

    auto put = [&](BasisIndex i, BasisIndex j, SignedBasis v) {
        if (filled[i][j]) table_fault("table entry assigned twice");
        t.table_[i][j] = v;
        filled[i][j] = true;
    };

    for (BasisIndex j = 0; j < 8; ++j) put(0, j, {1, j});
    for (BasisIndex i = 1; i < 8; ++i) put(i, 0, {1, i});
    for (BasisIndex i = 1; i < 8; ++i) put(i, i, {-1, 0});
    for (const auto& [a, b, c] : kOrientedTriples) {
        put(a, b, {1, c});
        put(b, c, {1, a});
        put(c, a, {1, b});
        put(b, a, {-1, c});
        put(c, b, {-1, a});
        put(a, c, {-1, b});
    }
    for (BasisIndex i = 0; i < 8; ++i) {
        for (BasisIndex j = 0; j < 8; ++j) {
            if (!filled[i][j]) table_fault("table entry left unassigned");
        }
    }

    certify(t);
    t.certificate_hash_ = fnv1a(t, census_on(t));
    return t;
}

const CayleyTable& CayleyTable::instance() {
    static const CayleyTable table = build_cayley_table();
    return table;
}

SignedBasis basis_product(BasisIndex i, BasisIndex j) {
    return CayleyTable::instance().product(i, j);
}

Associativity classify_basis_triple(BasisIndex i, BasisIndex j, BasisIndex k) {
    return classify_on(CayleyTable::instance(), i, j, k);
}

Census classification_census() {
    return census_on(CayleyTable::instance());
}

const std::array<FanoLine, 7>& enumerate_fano_lines() {
    static const std::array<FanoLine, 7> lines = [] {
        const CayleyTable& t = CayleyTable::instance();
        std::set<FanoLine> found;
        for (BasisIndex i = 1; i < 8; ++i) {
            for (BasisIndex j = 1; j < 8; ++j) {
                if (i == j) continue;
                FanoLine line{i, j, t.product(i, j).index};
                std::sort(line.begin(), line.end());
                found.insert(line);
            }
        }
        if (found.size() != 7) table_fault("expected exactly 7 Fano lines");
        std::array<FanoLine, 7> out{};
        std::copy(found.begin(), found.end(), out.begin());
        return out;
    }();
    return lines;
}

int grouped_pair_count() {
    int count = 0;
    for (const FanoLine& line : enumerate_fano_lines()) {
        for (BasisIndex i : line) {
            for (BasisIndex j : line) {
                if (i != j) ++count;
            }
        }
    }
    return count;
}

namespace detail {

const std::array<CorrectionEntry, 168>& correction_schedule() {
    static const std::array<CorrectionEntry, 168> schedule = [] {
        const CayleyTable& t = CayleyTable::instance();
        std::array<CorrectionEntry, 168> out{};
        std::size_t n = 0;
        for (const FanoLine& line : enumerate_fano_lines()) {
            for (BasisIndex i : line) {
                for (BasisIndex j : line) {
                    if (j == i) continue;
                    for (BasisIndex k = 1; k < 8; ++k) {
                        if (std::find(line.begin(), line.end(), k) != line.end()) continue;
                        const SignedBasis jk = t.product(j, k);
                        const SignedBasis r = t.product(i, jk.index);
                        out[n++] = {i, j, k,
                                    static_cast<std::int8_t>(jk.sign * r.sign), r.index};
                    }
                }
            }
        }
        if (n != 168) table_fault("quadruple-sum schedule does not have 168 terms");
        return out;
    }();
    return schedule;
}

const std::array<AssociatorEntry, 168>& anti_associative_schedule() {
    static const std::array<AssociatorEntry, 168> schedule = [] {
        const CayleyTable& t = CayleyTable::instance();
        std::array<AssociatorEntry, 168> out{};
        std::size_t n = 0;
        for (BasisIndex i = 0; i < 8; ++i) {
            for (BasisIndex j = 0; j < 8; ++j) {
                for (BasisIndex k = 0; k < 8; ++k) {
                    if (classify_on(t, i, j, k) != Associativity::AntiAssociative) continue;
                    const SignedBasis l = left_product(t, i, j, k);
                    const SignedBasis r = right_product(t, i, j, k);
                    if (l.index != r.index || l.sign != -r.sign) {
                        table_fault("anti-associative triple is not sign-flipped");
                    }
                    // [e_i,e_j,e_k] = (e_i e_j)e_k - e_i(e_j e_k) = 2 l.
                    out[n++] = {i, j, k, l.sign, l.index};
                }
            }
        }
        if (n != 168) table_fault("expected 168 anti-associative triples");
        return out;
    }();
    return schedule;
}

const std::array<std::array<std::array<LeftBracketEntry, 8>, 8>, 8>& left_bracket_table() {
    static const auto table = [] {
        const CayleyTable& t = CayleyTable::instance();
        std::array<std::array<std::array<LeftBracketEntry, 8>, 8>, 8> out{};
        for (BasisIndex i = 0; i < 8; ++i) {
            for (BasisIndex j = 0; j < 8; ++j) {
                for (BasisIndex k = 0; k < 8; ++k) {
                    const SignedBasis l = left_product(t, i, j, k);
                    out[i][j][k] = {l.sign, l.index};
                }
            }
        }
        return out;
    }();
    return table;
}

} // namespace detail

} // namespace octostokes
