#pragma once

#include <array>
#include <cstdint>

namespace octostokes {

/// Index of a basis unit e_0..e_7; e_0 is the real unit.
using BasisIndex = std::uint8_t;

/// A signed basis unit, +e_index or -e_index. Products of basis units
/// always reduce to this form.
struct SignedBasis {
    std::int8_t sign;  // +1 or -1
    BasisIndex index;  // 0..7

    friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

enum class Associativity { Associative, AntiAssociative };

/// An unordered triple {i,j,k} of non-real basis indices whose units close
/// under multiplication: e_i e_j = +-e_k. Stored sorted ascending.
using FanoLine = std::array<BasisIndex, 3>;

/// The 8x8 multiplication table of the octonion basis, generated from
/// e4 = e1 e2, e5 = e1 e3, e6 = e2 e3, e7 = e4 e3 together with
/// e_i^2 = -1, anticommutativity, and the sign rule for non-associative
/// triples. Immutable after construction; safe to share across threads.
class CayleyTable {
public:
    SignedBasis product(BasisIndex i, BasisIndex j) const { return table_[i][j]; }

    /// FNV-1a over the table entries plus the census constants. Reports carry
    /// it so a corrupted table cannot silently pass.
    std::uint64_t certificate_hash() const { return certificate_hash_; }

    /// The singleton used by all free functions below. Built and certified on
    /// first use; construction is thread-safe.
    static const CayleyTable& instance();

private:
    friend CayleyTable build_cayley_table();

    std::array<std::array<SignedBasis, 8>, 8> table_{};
    std::uint64_t certificate_hash_ = 0;
};

/// Builds the table and runs the exhaustive consistency certificate
/// (all table invariants, the 344/168 census, alternativity, agreement of
/// classification with associator vanishing). An inconsistency is an
/// implementation bug, never a user error: throws std::logic_error.
CayleyTable build_cayley_table();

/// Product e_i e_j as a signed basis unit. Total on 0..7 x 0..7.
SignedBasis basis_product(BasisIndex i, BasisIndex j);

/// AntiAssociative iff i,j,k are mutually distinct, all non-zero, and
/// e_i e_j != +-e_k; Associative otherwise.
Associativity classify_basis_triple(BasisIndex i, BasisIndex j, BasisIndex k);

struct Census {
    int associative = 0;
    int anti_associative = 0;

    friend bool operator==(const Census&, const Census&) = default;
};

/// Classifies all 8^3 = 512 ordered basis triples. Expected (344, 168).
Census classification_census();

/// The seven Fano lines {i,j,k} with e_i e_j = +-e_k, sorted ascending.
const std::array<FanoLine, 7>& enumerate_fano_lines();

/// Number of ordered pairs (i,j), i != j, lying within a single line,
/// summed over the seven lines. Expected 42.
int grouped_pair_count();

namespace detail {

/// One term of the quadruple-sum schedule over (s, i in I_s, j in I_s\{i},
/// k in {1..7}\I_s), resolved to e_i(e_j e_k) = sign * e_target.
struct CorrectionEntry {
    BasisIndex i, j, k;
    std::int8_t sign;
    BasisIndex target;
};

/// One ordered anti-associative triple (i,j,k), resolved to
/// [e_i,e_j,e_k] = 2 * sign * e_target. Enumerated via classification and
/// the associator only, independent of the Fano-line path.
struct AssociatorEntry {
    BasisIndex i, j, k;
    std::int8_t sign;
    BasisIndex target;
};

/// One of the 512 summands (i,j,k) of the componentwise expansion, resolved
/// with left bracketing: (e_i e_j) e_k = sign * e_target.
struct LeftBracketEntry {
    std::int8_t sign;
    BasisIndex target;
};

/// Ascending (s, i, j, k) order; 168 entries. Built from the Fano lines.
const std::array<CorrectionEntry, 168>& correction_schedule();

/// Ascending (i, j, k) order; 168 entries. Built from classify_basis_triple
/// and direct two-path table evaluation of the associator.
const std::array<AssociatorEntry, 168>& anti_associative_schedule();

/// Indexed [i][j][k]; 512 entries.
const std::array<std::array<std::array<LeftBracketEntry, 8>, 8>, 8>& left_bracket_table();

} // namespace detail

} // namespace octostokes
