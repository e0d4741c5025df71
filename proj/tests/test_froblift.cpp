#include <doctest.h>

#include <random>

#include "frobenius/froblift.hpp"
#include "frobenius/verify.hpp"

using namespace frob;

namespace {

TowerElt sum_of_adams(const TheoryModel& m, const Series& g) {
    TowerElt acc = m.splitting.ring->zero();
    for (std::size_t i = 0; i < m.splitting.roots.size(); ++i) acc = acc + adams_psi(m, g, i);
    return acc;
}

}  // namespace

TEST_SUITE("froblift") {
    TEST_CASE("sigma_can on the basis") {
        const auto m = height2_model();
        const auto& a = *m.sigma_algebra;
        const auto u1 = m.base->var(0);
        CHECK(sigma_can(m, a.one()) == m.base->from_int(3));
        CHECK(sigma_can(m, a.gen()).is_zero());
        CHECK(sigma_can(m, a.power_of_gen(2)) == u1 * m.base->from_int(2));
        CHECK(sigma_can(m, a.one(), true) == m.base->one());
        // 1/3 mod 2^16 times 2 u1.
        CHECK(sigma_can(m, a.power_of_gen(2), true) * m.base->from_int(3) == u1 * m.base->from_int(2));
    }

    TEST_CASE("Frobenius class checks") {
        for (const auto& m : {height2_model(), height1_model(2), height1_model(3), height1_model(5)}) {
            const auto r = frobenius_class_check(m);
            CAPTURE(m.id);
            CHECK(r.all_pass());
            CHECK(r.checks.size() == 2 + (m.rank() - 1));
        }
        const auto r = frobenius_class_check(height2_model());
        CHECK(r.checks[0].name == "sigma_can(1) = m");
        CHECK(r.checks[2].name == "sigma_can(x) = 0 mod p");
        CHECK(r.checks[3].name == "sigma_can(x^2) = 0 mod p");
    }

    TEST_CASE("Hecke operator values") {
        const auto m = height2_model();
        const auto u1 = m.base->var(0);
        CHECK(hecke_Tp(m, u1) == u1 * u1);
        CHECK(hecke_Tp(m, u1).to_string() == "u1^2 + O(deg 9, 2^16)");
        CHECK(hecke_Tp(m, m.base->from_int(5)) == m.base->from_int(15));
        CHECK(hecke_Tp(m, m.base->zero()).is_zero());
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto h1 = height1_model(p);
            CHECK(hecke_Tp(h1, h1.base->from_int(7)) == h1.base->from_int(7));
        }
    }

    TEST_CASE("Adams operations") {
        const auto m = height2_model();
        const auto& s = m.splitting;
        const auto u1 = m.base->var(0);
        const auto y = s.ring->from_base(s.first->gen());
        const auto u = s.ring->from_series(u1);
        CHECK(adams_psi(m, u1, 0) == u * u + y.scaled(s.first->from_int(3)) - u * y * y);
        CHECK(sum_of_adams(m, u1) == s.ring->from_series(u1 * u1));
        CHECK_THROWS_AS(adams_psi(m, u1, 3), std::out_of_range);
    }

    TEST_CASE("congruence T_p(g) = g^p mod p") {
        const auto r = congruence_check(height2_model(), 200, 1);
        CHECK(r.all_pass());
        REQUIRE(r.checks.size() == 1);
        CHECK(r.checks[0].witness == "200 samples, seed 1");
        for (std::uint32_t p : {2u, 3u, 5u}) CHECK(congruence_check(height1_model(p), 100, 9).all_pass());
    }

    TEST_CASE("theta values") {
        const auto m = height2_model();
        const auto u1 = m.base->var(0);
        const auto t = theta(m, u1);
        CHECK(t.is_zero());
        CHECK(t.prec() == 15);
        CHECK(theta(m, m.base->one()) == m.base->one());
        // theta(c) = (3c - c^2)/2 for a constant c.
        for (std::int64_t c = -5; c <= 5; ++c) CHECK(theta(m, m.base->from_int(c)) == m.base->from_int((3 * c - c * c) / 2));
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto h1 = height1_model(p);
            for (std::int64_t z = -4; z <= 4; ++z) {
                std::int64_t zp = 1;
                for (std::uint32_t i = 0; i < p; ++i) zp *= z;
                CHECK(theta(h1, h1.base->from_int(z)) == h1.base->from_int((z - zp) / static_cast<std::int64_t>(p)));
            }
        }
    }

    TEST_CASE("torsion obstruction") {
        const auto m = height2_model();
        const auto& a = *m.sigma_algebra;
        const auto u1 = m.base->var(0);
        const Elt x = a.gen();
        const auto bad =
            with_power_images(m, {a.from_series(u1) + x.scaled(m.base->from_int(3)) - a.power_of_gen(2).scaled(u1)}, "bad");
        CHECK(hecke_Tp(bad, u1) == u1 * m.base->from_int(3) - u1 * u1 * m.base->from_int(2));
        CHECK_THROWS_AS(theta(bad, u1), TorsionObstruction);
        CHECK_THROWS_WITH(theta(bad, u1), doctest::Contains("torsion obstruction"));
        CHECK_FALSE(congruence_check(bad, 50, 1).all_pass());
    }

    TEST_CASE("index lemma") {
        const auto r = index_lemma(height2_model());
        CHECK(r.valuation == 1);
        CHECK(r.cofactor_unit);
        CHECK((r.determinant == height2_model().base->from_int(2) ||
               r.determinant == height2_model().base->from_int(-2)));
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto h1 = height1_model(p);
            const auto r1 = index_lemma(h1);
            CHECK(r1.valuation == 1);
            CHECK(r1.cofactor_unit);
        }
        const auto r3 = index_lemma(height1_model(3));
        CHECK((r3.determinant == height1_model(3).base->from_int(3) ||
               r3.determinant == height1_model(3).base->from_int(-3)));
    }

    TEST_CASE("Hecke operator is additive") {
        const auto m = height2_model();
        std::mt19937_64 rng(3);
        for (int t = 0; t < 30; ++t) {
            const Series g = random_series(*m.base, rng, 8), h = random_series(*m.base, rng, 8);
            CHECK(hecke_Tp(m, g + h) == hecke_Tp(m, g) + hecke_Tp(m, h));
        }
    }

    TEST_CASE("Hecke operator is the sum of the Adams operations") {
        const auto m = height2_model();
        std::mt19937_64 rng(5);
        for (int t = 0; t < 20; ++t) {
            const Series g = random_series(*m.base, rng, 8);
            CHECK(sum_of_adams(m, g) == m.splitting.ring->from_series(hecke_Tp(m, g)));
        }
    }

    TEST_CASE("T_p(g) = g^p + p theta(g)") {
        const auto m = height2_model();
        std::mt19937_64 rng(8);
        for (int t = 0; t < 30; ++t) {
            const Series g = random_series(*m.base, rng, 8);
            const Series th = theta(m, g);
            CHECK(th.prec() == g.prec() - 1);
            CHECK(g.pow(2) + th * m.base->from_int(2) == hecke_Tp(m, g).with_prec(15));
        }
    }

    TEST_CASE("normalized sigma_can fixes scalars") {
        const auto m = height2_model();
        std::mt19937_64 rng(12);
        for (int t = 0; t < 30; ++t) {
            const Series s = random_series(*m.base, rng, 8);
            CHECK(sigma_can(m, m.sigma_algebra->from_series(s), true) == s);
        }
    }
}
