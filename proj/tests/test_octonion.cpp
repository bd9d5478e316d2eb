#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octostokes/octonion.hpp"
#include "octostokes/random_field.hpp"

#include <map>
#include <set>
#include <tuple>

using namespace octostokes;

namespace {

using Oct = Octonion<ExactInt>;

Oct e(int k) { return Oct::basis(BasisIndex(k)); }

Oct random_octonion(UniformDraw& draw, int bound) {
    Oct o;
    for (std::size_t k = 0; k < 8; ++k) o[k] = ExactInt(draw.in(-bound, bound));
    return o;
}

} // namespace

TEST_CASE("table carries the generator identities and derived products") {
    CHECK(basis_product(1, 2) == SignedBasis{1, 4});
    CHECK(basis_product(1, 3) == SignedBasis{1, 5});
    CHECK(basis_product(2, 3) == SignedBasis{1, 6});
    CHECK(basis_product(4, 3) == SignedBasis{1, 7});
    CHECK(basis_product(5, 5) == SignedBasis{-1, 0});
    // e1(e2 e3) = -(e1 e2)e3 = -e7 via the sign rule.
    CHECK(basis_product(1, 6) == SignedBasis{-1, 7});
    CHECK(basis_product(0, 5) == SignedBasis{1, 5});
    CHECK(basis_product(2, 1) == SignedBasis{-1, 4});
}

TEST_CASE("table invariants hold exhaustively") {
    for (int j = 0; j < 8; ++j) {
        CHECK(basis_product(0, j) == SignedBasis{1, BasisIndex(j)});
        CHECK(basis_product(j, 0) == SignedBasis{1, BasisIndex(j)});
    }
    for (int i = 1; i < 8; ++i) {
        CHECK(basis_product(i, i) == SignedBasis{-1, 0});
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            const SignedBasis ij = basis_product(i, j);
            const SignedBasis ji = basis_product(j, i);
            CHECK(ij.index == ji.index);
            CHECK(ij.sign == -ji.sign);
        }
    }
}

TEST_CASE("rebuilding the table is deterministic and certified") {
    const CayleyTable rebuilt = build_cayley_table();
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            CHECK(rebuilt.product(i, j) == CayleyTable::instance().product(i, j));
        }
    }
    CHECK(rebuilt.certificate_hash() == CayleyTable::instance().certificate_hash());
    CHECK(rebuilt.certificate_hash() != 0);
}

TEST_CASE("multiply extends the table bilinearly") {
    CHECK(e(1) * e(2) == e(4));

    UniformDraw draw(0xA001);
    for (int n = 0; n < 20; ++n) {
        const Oct x = random_octonion(draw, 50);
        CHECK(x * e(0) == x);
        CHECK(e(0) * x == x);
    }
    CHECK((e(1) + e(2)) * e(3) == e(5) + e(6));
}

TEST_CASE("multiply is bilinear on random exact octonions") {
    UniformDraw draw(0xA002);
    for (int n = 0; n < 50; ++n) {
        const Oct a = random_octonion(draw, 30);
        const Oct b = random_octonion(draw, 30);
        const Oct c = random_octonion(draw, 30);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b + c) == a * b + a * c);
        const ExactInt s(draw.in(-9, 9));
        CHECK((s * a) * b == s * (a * b));
    }
}

TEST_CASE("vector-space operations") {
    CHECK((e(1) + (-e(1))).is_zero());
    CHECK(ExactInt(2) * e(7) == e(7) + e(7));
    CHECK((-Oct::zero()).is_zero());
}

TEST_CASE("norm_sq") {
    CHECK(Oct::zero().norm_sq() == ExactInt(0));
    CHECK(e(3).norm_sq() == ExactInt(1));
    const Oct x = ExactInt(2) * e(2) - ExactInt(2) * e(4);
    CHECK(x.norm_sq() == ExactInt(8));
}

TEST_CASE("associator on basis elements") {
    CHECK(associator(e(1), e(1), e(2)).is_zero());
    CHECK(associator(e(1), e(2), e(4)).is_zero());
    CHECK(associator(e(1), e(2), e(3)) == ExactInt(2) * e(7));
}

TEST_CASE("classification of sample triples") {
    CHECK(classify_basis_triple(1, 2, 4) == Associativity::Associative);
    CHECK(classify_basis_triple(0, 3, 5) == Associativity::Associative);
    CHECK(classify_basis_triple(1, 2, 3) == Associativity::AntiAssociative);
}

TEST_CASE("classification agrees with associator vanishing on all 512 triples") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            for (int k = 0; k < 8; ++k) {
                const bool zero = associator(e(i), e(j), e(k)).is_zero();
                const bool assoc = classify_basis_triple(i, j, k) ==
                                   Associativity::Associative;
                CHECK(zero == assoc);
            }
        }
    }
}

TEST_CASE("alternativity on the basis") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            CHECK(associator(e(i), e(i), e(j)).is_zero());
            CHECK(associator(e(i), e(j), e(j)).is_zero());
            CHECK(associator(e(i), e(j), e(i)).is_zero());
        }
    }
}

TEST_CASE("census totals and restrictions") {
    const Census census = classification_census();
    CHECK(census.associative == 344);
    CHECK(census.anti_associative == 168);
    CHECK(census.associative + census.anti_associative == 512);

    int with_zero_total = 0, with_zero_assoc = 0;
    int distinct_total = 0, distinct_anti = 0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            for (int k = 0; k < 8; ++k) {
                const bool anti = classify_basis_triple(i, j, k) ==
                                  Associativity::AntiAssociative;
                if (i == 0 || j == 0 || k == 0) {
                    ++with_zero_total;
                    if (!anti) ++with_zero_assoc;
                }
                if (i && j && k && i != j && j != k && i != k) {
                    ++distinct_total;
                    if (anti) ++distinct_anti;
                }
            }
        }
    }
    CHECK(with_zero_total == with_zero_assoc);  // real unit always associates
    CHECK(distinct_total == 210);               // 7 * 6 * 5 ordered distinct triples
    CHECK(distinct_anti == 168);
}

TEST_CASE("basis closure: every basis product has a single +-1 coefficient") {
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Oct p = e(i) * e(j);
            int nonzero = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                if (p[k] == ExactInt(0)) continue;
                ++nonzero;
                CHECK((p[k] == ExactInt(1) || p[k] == ExactInt(-1)));
            }
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("the seven Fano lines") {
    const auto& lines = enumerate_fano_lines();
    REQUIRE(lines.size() == 7);
    const std::set<FanoLine> found(lines.begin(), lines.end());
    CHECK(found.count({1, 2, 4}) == 1);
    CHECK(found.count({4, 5, 6}) == 1);
    const std::set<FanoLine> expected{{1, 2, 4}, {1, 3, 5}, {1, 6, 7}, {2, 3, 6},
                                      {2, 5, 7}, {3, 4, 7}, {4, 5, 6}};
    CHECK(found == expected);

    // Fano incidence: every non-real index lies on exactly 3 lines.
    std::map<int, int> incidence;
    for (const FanoLine& line : lines) {
        for (BasisIndex idx : line) ++incidence[idx];
    }
    REQUIRE(incidence.size() == 7);
    for (const auto& [idx, count] : incidence) {
        CHECK(count == 3);
    }
}

TEST_CASE("quadruple-sum ranges enumerate each anti-associative triple once") {
    // Triples reachable as (i in I_s, j in I_s\{i}, k in {1..7}\I_s), with
    // multiplicity, against the classification.
    std::map<std::tuple<int, int, int>, int> reached;
    for (const FanoLine& line : enumerate_fano_lines()) {
        for (BasisIndex i : line) {
            for (BasisIndex j : line) {
                if (i == j) continue;
                for (int k = 1; k < 8; ++k) {
                    if (k == line[0] || k == line[1] || k == line[2]) continue;
                    ++reached[{i, j, k}];
                }
            }
        }
    }
    CHECK(reached.size() == 168);  // 7 lines * 3 * 2 * 4 choices
    int anti_count = 0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            for (int k = 0; k < 8; ++k) {
                const bool anti = classify_basis_triple(i, j, k) ==
                                  Associativity::AntiAssociative;
                const auto it = reached.find({i, j, k});
                if (anti) {
                    ++anti_count;
                    REQUIRE(it != reached.end());
                    CHECK(it->second == 1);  // unique line s per ordered pair (i,j)
                } else {
                    CHECK(it == reached.end());
                }
            }
        }
    }
    CHECK(anti_count == 168);
}

TEST_CASE("grouped pair count over the lines") {
    CHECK(grouped_pair_count() == 42);
}
