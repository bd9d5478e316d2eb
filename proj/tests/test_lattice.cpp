#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octostokes/operators.hpp"
#include "octostokes/random_field.hpp"

#include <set>

using namespace octostokes;

namespace {

using Oct = Octonion<ExactInt>;
using F = Field<ExactInt>;

Oct e(int k) { return Oct::basis(BasisIndex(k)); }

MultiIndex idx(std::initializer_list<std::int32_t> coords) {
    MultiIndex m;
    std::size_t a = 0;
    for (std::int32_t c : coords) m.m[a++] = c;
    return m;
}

MultiIndex unit(std::size_t axis) { return MultiIndex{}.shifted(axis, +1); }

F delta(const Oct& v) { return field_from_entries<ExactInt>(ExactInt(1), {{MultiIndex{}, v}}); }

// Constant c0-field on the box [-r, r]^8.
F constant_box(std::int32_t r, const Oct& v) {
    typename F::EntryMap entries;
    detail::for_each_box_point(r, [&](const MultiIndex& m) { entries.emplace(m, v); });
    return F(ExactInt(1), std::move(entries));
}

// f(m) = m_axis * e0 on the box [-r, r]^8.
F linear_box(std::int32_t r, std::size_t axis) {
    typename F::EntryMap entries;
    detail::for_each_box_point(r, [&](const MultiIndex& m) {
        entries.emplace(m, Oct::basis(0, ExactInt(m.m[axis])));
    });
    return F(ExactInt(1), std::move(entries));
}

bool box_interior(const MultiIndex& m, std::int32_t r) {
    for (std::int32_t c : m.m) {
        if (c <= -r || c >= r) return false;
    }
    return true;
}

} // namespace

TEST_CASE("field construction normalizes and validates") {
    const F one = field_from_entries<ExactInt>(ExactInt(1), {{MultiIndex{}, e(3)}});
    CHECK(one.support_size() == 1);
    CHECK(one.at(MultiIndex{}) == e(3));

    const F empty = field_from_entries<ExactInt>(ExactInt(1), {{MultiIndex{}, Oct::zero()}});
    CHECK(empty.empty());

    const F two = field_from_entries<ExactInt>(
        ExactInt(1), {{MultiIndex{}, e(1)}, {unit(0), -e(1)}});
    CHECK(two.support_size() == 2);

    CHECK_THROWS_AS(field_from_entries<ExactInt>(
                        ExactInt(1), {{MultiIndex{}, e(1)}, {MultiIndex{}, e(2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(F(ExactInt(2)), std::invalid_argument);  // exact mode pins h = 1
    CHECK_THROWS_AS(Field<double>(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(Field<double>(0.0), std::invalid_argument);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(field_from_entries<double>(
                        1.0, {{MultiIndex{}, Octonion<double>::basis(0, nan)}}),
                    std::invalid_argument);
}

TEST_CASE("random fields are deterministic and bounded") {
    const F a = random_field<ExactInt>(1234, 1, 3, ExactInt(1));
    const F b = random_field<ExactInt>(1234, 1, 3, ExactInt(1));
    CHECK(a == b);
    CHECK(a.support_size() <= 6561);  // 3^8 box
    for (const auto& [m, v] : a.entries()) {
        for (std::int32_t c : m.m) {
            CHECK(c >= -1);
            CHECK(c <= 1);
        }
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(v[k] >= ExactInt(-3));
            CHECK(v[k] <= ExactInt(3));
        }
    }
    CHECK(random_field<ExactInt>(99, 1, 3, ExactInt(1)) !=
          random_field<ExactInt>(100, 1, 3, ExactInt(1)));

    const F tiny = random_field<ExactInt>(7, 0, 3, ExactInt(1));
    CHECK(tiny.support_size() <= 1);  // box is the single point 0

    const F sparse = random_sparse_field<ExactInt>(42, 2, 3, ExactInt(1), 2000);
    CHECK(sparse.support_size() <= 2000);
    CHECK(sparse == random_sparse_field<ExactInt>(42, 2, 3, ExactInt(1), 2000));
    for (const auto& [m, v] : sparse.entries()) {
        for (std::int32_t c : m.m) {
            CHECK(c >= -2);
            CHECK(c <= 2);
        }
    }

    const F real = random_real_field<ExactInt>(5, 1, 3, ExactInt(1));
    for (const auto& [m, v] : real.entries()) {
        for (std::size_t k = 1; k < 8; ++k) CHECK(v[k] == ExactInt(0));
    }
}

TEST_CASE("forward difference of a delta field") {
    const F f = delta(e(0));
    for (std::size_t j = 0; j < 8; ++j) {
        const F d = forward_diff(f, j);
        CHECK(d.support_size() == 2);
        CHECK(d.at(MultiIndex{}.shifted(j, -1)) == e(0));
        CHECK(d.at(MultiIndex{}) == -e(0));
    }
}

TEST_CASE("backward difference of a delta field") {
    const F f = delta(e(3));
    for (std::size_t j = 0; j < 8; ++j) {
        const F d = backward_diff(f, j);
        CHECK(d.at(MultiIndex{}) == e(3));
        CHECK(d.at(unit(j)) == -e(3));
    }
}

TEST_CASE("differences of constant and linear fields at interior points") {
    const F c = constant_box(2, e(5));
    const F lin = linear_box(2, 3);
    for (std::size_t j = 0; j < 8; ++j) {
        const F dc = forward_diff(c, j);
        const F dcb = backward_diff(c, j);
        const F dl = forward_diff(lin, j);
        detail::for_each_box_point(2, [&](const MultiIndex& m) {
            if (!box_interior(m, 2)) return;
            CHECK(dc.at(m).is_zero());
            CHECK(dcb.at(m).is_zero());
            CHECK(dl.at(m) == (j == 3 ? e(0) : Oct::zero()));
        });
    }
}

TEST_CASE("forward at m equals backward at m + e_j") {
    const F f = random_field<ExactInt>(77, 1, 3, ExactInt(1));
    for (std::size_t j = 0; j < 8; ++j) {
        const F fwd = forward_diff(f, j);
        const F bwd = backward_diff(f, j);
        for (const auto& [m, v] : fwd.entries()) {
            CHECK(bwd.at(m.shifted(j, +1)) == v);
        }
        CHECK(fwd.support_size() == bwd.support_size());
    }
}

TEST_CASE("support growth bound") {
    const F f = random_field<ExactInt>(31, 1, 3, ExactInt(1));
    std::set<MultiIndex> allowed;
    for (const auto& [m, v] : f.entries()) allowed.insert(m);
    for (std::size_t j = 0; j < 8; ++j) {
        std::set<MultiIndex> fwd_allowed = allowed;
        for (const auto& [m, v] : f.entries()) fwd_allowed.insert(m.shifted(j, -1));
        for (const auto& [m, v] : forward_diff(f, j).entries()) {
            CHECK(fwd_allowed.count(m) == 1);
        }
        std::set<MultiIndex> bwd_allowed = allowed;
        for (const auto& [m, v] : f.entries()) bwd_allowed.insert(m.shifted(j, +1));
        for (const auto& [m, v] : backward_diff(f, j).entries()) {
            CHECK(bwd_allowed.count(m) == 1);
        }
    }
}

TEST_CASE("operators are linear") {
    const F a = random_field<ExactInt>(11, 1, 3, ExactInt(1));
    const F b = random_field<ExactInt>(12, 1, 3, ExactInt(1));

    // a + 2b assembled by hand.
    typename F::EntryMap entries;
    for (const auto& [m, v] : a.entries()) detail::accumulate(entries, m, v);
    for (const auto& [m, v] : b.entries()) detail::accumulate(entries, m, ExactInt(2) * v);
    const F combo(ExactInt(1), std::move(entries));

    for (std::size_t j = 0; j < 4; ++j) {
        const F lhs = forward_diff(combo, j);
        const F da = forward_diff(a, j);
        const F db = forward_diff(b, j);
        typename F::EntryMap expect;
        for (const auto& [m, v] : da.entries()) detail::accumulate(expect, m, v);
        for (const auto& [m, v] : db.entries()) detail::accumulate(expect, m, ExactInt(2) * v);
        CHECK(lhs == F(ExactInt(1), std::move(expect)));
    }

    const F cl = cr_forward_left(combo);
    const F cla = cr_forward_left(a);
    const F clb = cr_forward_left(b);
    typename F::EntryMap expect;
    for (const auto& [m, v] : cla.entries()) detail::accumulate(expect, m, v);
    for (const auto& [m, v] : clb.entries()) detail::accumulate(expect, m, ExactInt(2) * v);
    CHECK(cl == F(ExactInt(1), std::move(expect)));
}

TEST_CASE("Cauchy-Riemann operators on delta and linear fields") {
    const F f0 = delta(e(0));
    Oct sum_all;
    for (int j = 0; j < 8; ++j) sum_all += e(j);
    CHECK(cr_forward_left(f0).at(MultiIndex{}) == -sum_all);
    CHECK(cr_forward_right(f0).at(MultiIndex{}) == -sum_all);

    const F f3 = delta(e(3));
    Oct expected_bwd;
    for (int j = 0; j < 8; ++j) expected_bwd += e(j) * e(3);
    CHECK(cr_backward_left(f3).at(MultiIndex{}) == expected_bwd);

    const F g1 = delta(e(1));
    Oct expected_right;
    for (int j = 0; j < 8; ++j) expected_right += (-e(1)) * e(j);
    CHECK(cr_forward_right(g1).at(MultiIndex{}) == expected_right);

    const F lin2 = linear_box(2, 2);
    const F cl = cr_forward_left(lin2);
    const F lin0 = linear_box(2, 0);
    const F cb = cr_backward_left(lin0);
    detail::for_each_box_point(2, [&](const MultiIndex& m) {
        if (!box_interior(m, 2)) return;
        CHECK(cl.at(m) == e(2));
        CHECK(cb.at(m) == e(0));
    });

    const F c = constant_box(1, e(4) + e(6));
    CHECK(cr_forward_left(c).at(MultiIndex{}).is_zero());
    CHECK(cr_backward_left(c).at(MultiIndex{}).is_zero());
    CHECK(cr_forward_right(c).at(MultiIndex{}).is_zero());
}

TEST_CASE("left and right actions coincide on real-valued fields") {
    const F f = random_real_field<ExactInt>(21, 1, 5, ExactInt(1));
    CHECK(cr_forward_left(f) == cr_forward_right(f));
}

TEST_CASE("volume sum") {
    CHECK(volume_sum(F(ExactInt(1))).is_zero());
    CHECK(volume_sum(delta(e(5))) == e(5));
    const F two = field_from_entries<ExactInt>(
        ExactInt(1), {{MultiIndex{}, e(1)}, {unit(2), -e(1)}});
    CHECK(volume_sum(two).is_zero());

    // Float mode carries the h^8 measure.
    const Field<double> fd = field_from_entries<double>(
        0.5, {{MultiIndex{}, Octonion<double>::basis(2, 3.0)}});
    const Octonion<double> s = volume_sum(fd);
    CHECK(s[2] == doctest::Approx(3.0 * std::pow(0.5, 8)).epsilon(1e-15));
}

TEST_CASE("summation by parts over random scalar fields") {
    for (std::uint64_t n = 0; n < 10; ++n) {
        const F u = random_real_field<ExactInt>(1000 + n, 1, 4, ExactInt(1));
        const F v = random_real_field<ExactInt>(2000 + n, 1, 4, ExactInt(1));
        for (std::size_t j = 0; j < 8; ++j) {
            const F du = forward_diff(u, j);
            const F dv = backward_diff(v, j);
            ExactInt lhs(0), rhs(0);
            for (const auto& [m, val] : du.entries()) lhs += val[0] * v.at(m)[0];
            for (const auto& [m, val] : u.entries()) rhs += val[0] * dv.at(m)[0];
            CHECK(lhs == -rhs);
        }
    }
}

TEST_CASE("lattice constant mismatch is rejected") {
    const Field<double> a = field_from_entries<double>(
        1.0, {{MultiIndex{}, Octonion<double>::basis(1)}});
    const Field<double> b = field_from_entries<double>(
        0.5, {{MultiIndex{}, Octonion<double>::basis(2)}});
    CHECK_THROWS_AS(require_same_lattice(a, b), LatticeMismatchError);
}
