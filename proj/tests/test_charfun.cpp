#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "frobenius/charfun.hpp"
#include "frobenius/models.hpp"

using namespace frob;

namespace {

// Independent oracle: every subgroup is generated by at most n elements, so
// close every n-tuple under addition and keep the element sets of the
// right size.
std::size_t brute_force_count(std::uint32_t p, int n, int k) {
    const std::uint64_t q = checked_pow(p, k);
    std::vector<GroupVector> all;
    GroupVector v(n, 0);
    for (std::uint64_t idx = 0; idx < checked_pow(q, n); ++idx) {
        std::uint64_t r = idx;
        for (int i = 0; i < n; ++i) v[i] = r % q, r /= q;
        all.push_back(v);
    }
    auto add = [&](const GroupVector& a, const GroupVector& b) {
        GroupVector c(n);
        for (int i = 0; i < n; ++i) c[i] = (a[i] + b[i]) % q;
        return c;
    };
    const std::uint64_t order = checked_pow(p, k);
    std::set<std::set<GroupVector>> found;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::set<GroupVector> h{GroupVector(n, 0)};
        bool grew = true;
        while (grew && h.size() <= order) {
            grew = false;
            for (int i = 0; i < n; ++i)
                for (const auto& e : std::set<GroupVector>(h))
                    grew |= h.insert(add(e, all[pick[i]])).second;
        }
        if (h.size() == order) found.insert(h);
        int j = 0;
        while (j < n && ++pick[j] == all.size()) pick[j++] = 0;
        if (j == n) break;
    }
    return found.size();
}

}  // namespace

TEST_SUITE("charfun") {
    TEST_CASE("subgroup counts") {
        CHECK(enum_subgroups(2, 1, 1).count() == 1);
        CHECK(enum_subgroups(2, 2, 1).count() == 3);
        CHECK(enum_subgroups(3, 2, 1).count() == 4);
        CHECK(enum_subgroups(2, 3, 1).count() == 7);
        CHECK(enum_subgroups(2, 2, 2).count() == 7);
        CHECK(enum_subgroups(2, 2, 0).count() == 1);
        CHECK(enum_subgroups(5, 1, 1).count() == 1);
    }

    TEST_CASE("subgroup enumeration errors") {
        CHECK_THROWS_AS(enum_subgroups(4, 2, 1), std::invalid_argument);
        CHECK_THROWS_AS(enum_subgroups(2, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(enum_subgroups(2, 2, -1), std::invalid_argument);
        CHECK_THROWS_AS(enum_subgroups(7, 8, 1), std::invalid_argument);
    }

    TEST_CASE("enumeration agrees with brute force") {
        for (auto [p, n, k] : std::vector<std::tuple<std::uint32_t, int, int>>{
                 {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 2, 1}, {2, 3, 1}, {5, 2, 1}, {3, 1, 2}}) {
            CAPTURE(p);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(enum_subgroups(p, n, k).count() == brute_force_count(p, n, k));
        }
    }

    TEST_CASE("order-p count formula") {
        CHECK(subgroup_count_formula(2, 2) == 3);
        CHECK(subgroup_count_formula(3, 3) == 13);
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            for (int n = 1; n <= 4; ++n) {
                if (checked_pow(p, n) > (1u << 22)) continue;
                const auto c = count_formula_check(p, n);
                CAPTURE(p);
                CAPTURE(n);
                CHECK(c.ok());
                CHECK(c.enumerated % p == 1 % p);
            }
    }

    TEST_CASE("canonical generators are a function of the subgroup") {
        const auto t = enum_subgroups(2, 2, 2);
        for (const auto& rows : t.subgroups) {
            CHECK(canonical_generators(2, 2, 2, rows) == rows);
            // Regenerating from all elements lands on the same rows.
            CHECK(canonical_generators(2, 2, 2, subgroup_elements(2, 2, 2, rows)) == rows);
            CHECK(subgroup_elements(2, 2, 2, rows).size() == 4);
        }
    }

    TEST_CASE("scaled transfer") {
        const auto t = std::make_shared<const SubgroupTable>(enum_subgroups(2, 2, 1));
        CHECK(transfer_scaled(ClassFun<int>(t, 1, {1, 1, 1})) == 4);
        const auto ring = SeriesRing::make({"u1"}, 8, 2, 16);
        const Series e = ring->var(0) + ring->from_int(5);
        CHECK(transfer_scaled(ClassFun<Series>(t, ring->zero(), {e, e, e})) == e * ring->from_int(3));
        const Series v = ring->from_int(11);
        CHECK(transfer_scaled(ClassFun<Series>(t, ring->zero(), {v, ring->zero(), ring->zero()})) == v);
        CHECK_THROWS_AS(ClassFun<int>(t, 0, {1, 1}), std::invalid_argument);
        const auto t2 = std::make_shared<const SubgroupTable>(enum_subgroups(2, 2, 2));
        CHECK_THROWS_AS(ClassFun<int>(t2, 0, std::vector<int>(7, 0)), std::invalid_argument);
    }

    TEST_CASE("class functions of algebra elements") {
        const auto m = height2_model();
        const auto& s = m.splitting;
        REQUIRE(s.roots.size() == 3);
        const auto y = s.ring->from_base(s.first->gen());
        const auto z = s.ring->gen();

        const auto cx = classfun_of_element(m.subgroups, m.sigma_algebra->gen(), s.ring, s.roots);
        CHECK(cx.values()[0] == y);
        CHECK(cx.values()[1] == z);
        CHECK(cx.values()[2] == -y - z);
        CHECK(cx.trivial_value().is_zero());
        CHECK(transfer_scaled(cx).is_zero());

        const auto c1 = classfun_of_element(m.subgroups, m.sigma_algebra->one(), s.ring, s.roots);
        for (const auto& v : c1.values()) CHECK(v == s.ring->one());

        const auto cx2 = classfun_of_element(m.subgroups, m.sigma_algebra->power_of_gen(2), s.ring, s.roots);
        CHECK(transfer_scaled(cx2) == s.ring->from_series(m.base->var(0) * m.base->from_int(2)));

        const std::vector<TowerElt> two(s.roots.begin(), s.roots.begin() + 2);
        CHECK_THROWS_AS(classfun_of_element(m.subgroups, m.sigma_algebra->gen(), s.ring, two),
                        std::invalid_argument);

        // On E[y]/(y f) the trivial class sees y = 0.
        const auto full = classfun_of_full_element(m.subgroups, m.full_algebra->gen() + m.full_algebra->one(),
                                                   s.ring, s.roots);
        CHECK(full.trivial_value() == s.ring->one());
        CHECK(transfer_scaled(full) == s.ring->from_int(4));
    }

    TEST_CASE("transfer of a class function is the trace") {
        const auto m = height2_model();
        const auto& s = m.splitting;
        std::mt19937_64 rng(31);
        for (int t = 0; t < 20; ++t) {
            Elt a = m.sigma_algebra->zero();
            for (std::size_t i = 0; i < 3; ++i)
                a = a + m.sigma_algebra->power_of_gen(i).scaled(random_series(*m.base, rng, 4));
            const auto cf = classfun_of_element(m.subgroups, a, s.ring, s.roots);
            CHECK(transfer_scaled(cf) == s.ring->from_series(alg_trace(a)));
        }
    }
}
