// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "frobenius/charfun.hpp"
#include "frobenius/froblift.hpp"
#include "frobenius/models.hpp"
#include "frobenius/verify.hpp"

using namespace frob;

namespace {

// Wall-clock limits per criterion, in milliseconds.
constexpr double kLimitFast = 1000;
constexpr double kLimitMedium = 5000;
constexpr double kLimitSlow = 10000;

constexpr std::size_t kRandomTrials = 50;
constexpr std::size_t kCongruenceSamples = 200;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

Outcome subgroup_counts() {
    Outcome o;
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
        const auto count = enum_subgroups(p, n, 1).count();
        const auto tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " count " + std::to_string(count);
        o.require(count == subgroup_count_formula(p, n), tag + " differs from (p^n-1)/(p-1)");
        o.require(count % p == 1, tag + " is not 1 mod p");
    }
    if (o.pass) o.detail = "6 (p, n) pairs match (p^n-1)/(p-1), all = 1 mod p";
    return o;
}

Outcome height2_values() {
    Outcome o;
    const auto m = height2_model(16, 8);
    const auto u1 = m.base->var(0);
    o.require(sigma_can(m, m.sigma_algebra->gen()).is_zero(), "sigma_can(x) != 0");
    const auto t = hecke_Tp(m, u1);
    o.require(t == u1 * u1, "T2(u1) = " + t.to_string());

    // (X - y)(X - z)(X + y + z) over D1.
    const auto& s = m.splitting;
    std::vector<TowerElt> prod{s.ring->one()};
    for (const auto& r : s.roots) prod = poly_mul(prod, std::vector<TowerElt>{-r, s.ring->one()}, s.ring->zero());
    const auto f = m.modulus.lifted(s.ring);
    o.require(prod.size() == f.coeffs().size(), "product has the wrong degree");
    for (std::size_t i = 0; o.pass && i < prod.size(); ++i)
        o.require(prod[i] == f.coeff(i), "coefficient " + std::to_string(i) + " of the product is " + prod[i].to_string());
    if (o.pass) o.detail = "sigma_can(x) = 0, T2(u1) = " + t.to_poly_string() + ", product of linear factors = f";
    return o;
}

Outcome main_congruence() {
    Outcome o;
    const auto m = height2_model();
    std::mt19937_64 rng(kSeed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < kCongruenceSamples; ++i) {
        const auto g = random_series(*m.base, rng, 8);
        if (!(hecke_Tp(m, g) - g.pow(2)).with_prec(1).is_zero()) {
            if (failures++ == 0) o.detail = "g = " + g.to_string();
        }
    }
    o.require(failures == 0, o.detail);
    o.detail = failures == 0 ? std::to_string(kCongruenceSamples) + " samples, 0 failures"
                             : std::to_string(failures) + " failures, first " + o.detail;
    return o;
}

Outcome frobenius_class() {
    Outcome o;
    for (const auto& m : {height1_model(2), height1_model(3), height1_model(5), height2_model()}) {
        const auto r = frobenius_class_check(m);
        for (const auto& c : r.checks) o.require(c.pass, m.id + ": " + c.name + " (" + c.witness + ")");
    }
    if (o.pass) o.detail = "height 1 at p = 2, 3, 5 and height 2";
    return o;
}

Outcome index_lemma_check() {
    Outcome o;
    const auto h1 = height1_model(3);
    const auto r1 = index_lemma(h1);
    o.require(r1.determinant == h1.base->from_int(3) || r1.determinant == h1.base->from_int(-3),
              "height 1 det = " + r1.determinant.to_string());
    o.require(r1.valuation == 1 && r1.cofactor_unit, "height 1 index is not exactly p");
    const auto h2 = height2_model();
    const auto r2 = index_lemma(h2);
    o.require(r2.determinant == h2.base->from_int(2) || r2.determinant == h2.base->from_int(-2),
              "height 2 det = " + r2.determinant.to_string());
    o.require(r2.valuation == 1 && r2.cofactor_unit, "height 2 index is not exactly p");
    if (o.pass) o.detail = "det " + r1.determinant.to_poly_string() + " (height 1, p = 3), " +
                           r2.determinant.to_poly_string() + " (height 2)";
    return o;
}

Outcome oracle_equivalences() {
    Outcome o;
    const auto m = height2_model();
    std::mt19937_64 rng(kSeed + 5);
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto f = random_monic(m.base, rng, 1 + rng() % 6);
        const auto alg = alg_make(f);
        const auto sums = newton_power_sums(f, 8);
        for (std::size_t k = 1; k <= 8; ++k)
            o.require(sums[k - 1] == alg_trace(alg->power_of_gen(k)), "Newton sum p_" + std::to_string(k));
    }
    const auto& s = m.splitting;
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto a = random_element(m.sigma_algebra, rng);
        const auto cf = classfun_of_element(m.subgroups, a, s.ring, s.roots);
        o.require(transfer_scaled(cf) == s.ring->from_series(alg_trace(a)), "splitting sum at " + a.to_string());
    }
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto g = random_series(*m.base, rng, 8);
        TowerElt acc = s.ring->zero();
        for (std::size_t i = 0; i < s.roots.size(); ++i) acc = acc + adams_psi(m, g, i);
        o.require(acc == s.ring->from_series(hecke_Tp(m, g)), "Adams sum at " + g.to_string());
    }
    if (o.pass) o.detail = "Newton, splitting sum and Adams sum agree on 3 x 50 samples";
    return o;
}

Outcome height1_hecke() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto m = height1_model(p);
        for (std::size_t t = 0; t < kRandomTrials; ++t) {
            const auto z = random_series(*m.base, rng, 0);
            const auto tz = hecke_Tp(m, z);
            o.require(tz == z, "p=" + std::to_string(p) + ": T_p(" + z.to_string() + ") = " + tz.to_string());
            o.require((tz - z.pow(p)).with_prec(1).is_zero(), "p=" + std::to_string(p) + ": T_p(z) - z^p not 0 mod p");
        }
    }
    if (o.pass) o.detail = "T_p(z) = z and T_p(z) = z^p mod p for 50 z at each p";
    return o;
}

Outcome theta_contract() {
    Outcome o;
    const auto m = height2_model();
    const auto u1 = m.base->var(0);
    o.require(theta(m, u1).is_zero(), "theta(u1) != 0");
    o.require(theta(m, m.base->one()) == m.base->one(), "theta(1) != 1");
    std::mt19937_64 rng(kSeed + 8);
    const int n = m.base->prec();
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto g = random_series(*m.base, rng, 8);
        const auto th = theta(m, g);
        o.require(th.prec() == n - 1, "theta lost more than one digit");
        o.require(g.pow(2) + th * m.base->from_int(2) == hecke_Tp(m, g).with_prec(n - 1),
                  "reconstruction fails at " + g.to_string());
    }
    const auto& a = *m.sigma_algebra;
    const auto bad = with_power_images(
        m, {a.from_series(u1) + a.gen().scaled(m.base->from_int(3)) - a.power_of_gen(2).scaled(u1)}, "corrupted");
    bool raised = false;
    try {
        (void)theta(bad, u1);
    } catch (const TorsionObstruction&) {
        raised = true;
    }
    o.require(raised, "corrupted model did not raise the torsion obstruction");
    if (o.pass) o.detail = "theta(u1) = 0, theta(1) = 1, 50 reconstructions, obstruction raised";
    return o;
}

Outcome structural() {
    Outcome o;
    const auto m = height2_model();
    o.require(charpoly_check(*m.sigma_algebra), "Cayley-Hamilton on E[x]/(f)");
    o.require(charpoly_check(*m.full_algebra), "Cayley-Hamilton on E[y]/(y f)");
    o.require(charpoly_check(*m.splitting.first), "Cayley-Hamilton on the first splitting stage");
    o.require(charpoly_check(*m.splitting.ring), "Cayley-Hamilton on D1");
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto h = height1_model(p);
        o.require(charpoly_check(*h.sigma_algebra) && charpoly_check(*h.full_algebra) && charpoly_check(*h.cyclic_algebra),
                  "Cayley-Hamilton at height 1, p = " + std::to_string(p));
    }
    std::mt19937_64 rng(kSeed + 9);
    for (std::size_t t = 0; t < kRandomTrials; ++t) {
        const auto g = random_series(*m.base, rng, 4);
        const auto h = random_series(*m.base, rng, 4);
        o.require(power_op(m, g + h) == power_op(m, g) + power_op(m, h), "power_op not additive");
        o.require(power_op(m, g * h) == power_op(m, g) * power_op(m, h), "power_op not multiplicative");
    }
    const auto e = m.base->var(0) + m.base->from_int(5);
    const ClassFun<Series> cf(m.subgroups, m.base->zero(), std::vector<Series>(m.subgroups->count(), e));
    o.require(transfer_scaled(cf) == e * m.base->from_int(static_cast<std::int64_t>(m.subgroups->count())),
              "transfer of the constant class function");
    if (o.pass) o.detail = "Cayley-Hamilton on 13 algebras, 50 homomorphism pairs, transfer = 3e";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria{
        {1, "subgroup counts", kLimitFast, subgroup_counts},
        {2, "height-2 values", kLimitFast, height2_values},
        {3, "congruence T2(g) = g^2 mod 2", kLimitSlow, main_congruence},
        {4, "Frobenius class", kLimitFast, frobenius_class},
        {5, "index lemma", kLimitFast, index_lemma_check},
        {6, "oracle equivalences", kLimitSlow, oracle_equivalences},
        {7, "height-1 Hecke", kLimitFast, height1_hecke},
        {8, "theta contract", kLimitMedium, theta_contract},
        {9, "structural checks", kLimitMedium, structural},
    };
    int failed = 0;
    for (const auto& [id, name, limit, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && ms > limit) {
            o.pass = false;
            o.detail += "; took " + std::to_string(ms) + " ms, limit " + std::to_string(limit) + " ms";
        }
        std::printf("%s criterion %d (%s): %s [%.0f ms]\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                    o.detail.c_str(), ms);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
