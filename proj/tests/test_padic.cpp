#include <doctest.h>

#include <random>
#include <tuple>

#include "frobenius/padic.hpp"

using frob::PAdicInt;

namespace {

// Extended Euclid on plain integers; independent of the Newton iteration
// used by PAdicInt::inverse.
std::int64_t euclid_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = a, r = m, old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    REQUIRE(old_r == 1);
    return ((old_s % m) + m) % m;
}

}  // namespace

TEST_SUITE("padics") {
    TEST_CASE("construction reduces modulo p^N") {
        CHECK(PAdicInt(2, 8, 6).residue() == 6);
        CHECK(PAdicInt(2, 8, 6).prec() == 8);
        CHECK(PAdicInt(3, 4, 81 + 5).residue() == 5);
        CHECK(PAdicInt(2, 8, -1).residue() == 255);
        CHECK(PAdicInt(2, 8, INT64_MIN).residue() == 0);
    }

    TEST_CASE("construction errors") {
        CHECK_THROWS_AS(PAdicInt(4, 8, 1), std::invalid_argument);
        CHECK_THROWS_AS(PAdicInt(1, 8, 1), std::invalid_argument);
        CHECK_THROWS_AS(PAdicInt(2, 0, 1), std::invalid_argument);
        CHECK_THROWS_AS(PAdicInt(2, 63, 1), std::invalid_argument);
    }

    TEST_CASE("ring operations") {
        CHECK((PAdicInt(2, 8, 3) + PAdicInt(2, 8, 5)).residue() == 8);
        const PAdicInt x(5, 6, 1234);
        CHECK(x * PAdicInt::one(5, 6) == x);
        CHECK((PAdicInt(3, 2, 5) * PAdicInt(3, 2, 5)).residue() == 7);
        CHECK((-PAdicInt(2, 8, 1)).residue() == 255);
        CHECK((-PAdicInt(2, 8, 0)).residue() == 0);
        CHECK_THROWS_AS(PAdicInt(2, 8, 1) + PAdicInt(3, 8, 1), std::invalid_argument);
        CHECK_THROWS_AS(PAdicInt(2, 8, 1) * PAdicInt(3, 8, 1), std::invalid_argument);
    }

    TEST_CASE("mixed precision truncates to the minimum") {
        const PAdicInt a(2, 8, 200), b(2, 4, 3);
        const auto s = a + b;
        CHECK(s.prec() == 4);
        CHECK(s.residue() == (200 + 3) % 16);
        CHECK((a * b).prec() == 4);
        CHECK(PAdicInt(2, 8, 17) == PAdicInt(2, 4, 1));
    }

    TEST_CASE("inverse") {
        CHECK(PAdicInt(2, 4, 3).inverse().residue() == static_cast<std::uint64_t>(euclid_inverse(3, 16)));
        CHECK(PAdicInt(2, 4, 3).inverse().residue() == 11);
        CHECK(PAdicInt(3, 5, 1).inverse().residue() == 1);
        // Brute force over residues mod 256.
        std::uint64_t brute = 0;
        for (std::uint64_t t = 0; t < 256; ++t)
            if (7 * t % 256 == 1) brute = t;
        CHECK(frob::inv(PAdicInt(2, 8, 7)).residue() == brute);
        CHECK_THROWS_AS(PAdicInt(2, 8, 6).inverse(), std::domain_error);
        CHECK_THROWS_WITH(PAdicInt(3, 4, 9).inverse(), doctest::Contains("valuation 2"));
    }

    TEST_CASE("valuation") {
        CHECK(PAdicInt(2, 8, 12).valuation() == 2);
        CHECK_FALSE(PAdicInt(2, 8, 0).valuation().has_value());
        CHECK(PAdicInt(3, 8, 9).valuation() == 2);
        CHECK(PAdicInt(3, 8, 10).valuation() == 0);
    }

    TEST_CASE("exact division") {
        const auto q = PAdicInt(2, 8, 6).div_exact(1);
        CHECK(q.residue() == 3);
        CHECK(q.prec() == 7);
        const auto z = PAdicInt(2, 8, 0).div_exact(2);
        CHECK(z.is_zero());
        CHECK(z.prec() == 6);
        CHECK_THROWS_AS(PAdicInt(2, 8, 5).div_exact(1), std::domain_error);
        CHECK_THROWS_AS(PAdicInt(2, 2, 0).div_exact(2), std::domain_error);
    }

    TEST_CASE("rendering") {
        CHECK(PAdicInt(2, 16, 5).to_string() == "5 + O(2^16)");
        CHECK(PAdicInt(2, 16, -3).centered() == -3);
    }

    TEST_CASE("ring axioms on random triples") {
        std::mt19937_64 rng(11);
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            const int n = 10;
            for (int trial = 0; trial < 200; ++trial) {
                const PAdicInt a(p, n, static_cast<std::int64_t>(rng() >> 2));
                const PAdicInt b(p, n, static_cast<std::int64_t>(rng() >> 2));
                const PAdicInt c(p, n, static_cast<std::int64_t>(rng() >> 2));
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a - a == PAdicInt::zero(p, n));
            }
        }
    }

    TEST_CASE("division undoes multiplication by p^k") {
        std::mt19937_64 rng(5);
        for (std::uint32_t p : {2u, 3u}) {
            for (int trial = 0; trial < 100; ++trial) {
                const PAdicInt a(p, 12, static_cast<std::int64_t>(rng() >> 2));
                for (int k = 0; k < 4; ++k) {
                    const PAdicInt pk(p, 12, static_cast<std::int64_t>(frob::checked_pow(p, k)));
                    const auto back = (a * pk).div_exact(k);
                    CHECK(back.prec() == 12 - k);
                    CHECK(back == a.with_prec(12 - k));
                }
            }
        }
    }

    TEST_CASE("inverse on every unit, exhaustive") {
        auto sweep = [](std::uint32_t p, int nmax) {
            for (int n = 1; n <= nmax; ++n) {
                const auto m = frob::checked_pow(p, n);
                for (std::uint64_t r = 0; r < m; ++r) {
                    const PAdicInt a(p, n, static_cast<std::int64_t>(r));
                    if (!a.is_unit()) continue;
                    CHECK((a * a.inverse()).residue() == 1 % m);
                }
            }
        };
        sweep(2, 6);
        sweep(3, 4);
    }

    TEST_CASE("Fermat: a^p = a mod p") {
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            for (int n = 1; n <= 3; ++n) {
                const auto m = frob::checked_pow(p, n);
                for (std::uint64_t r = 0; r < m; ++r) {
                    const PAdicInt a(p, n, static_cast<std::int64_t>(r));
                    CHECK(a.pow(p).with_prec(1) == a.with_prec(1));
                }
            }
    }
}
