#include "frobenius/verify.hpp"

#include <sstream>

namespace frob {

namespace {

std::string count_witness(std::size_t failures, std::size_t total, const std::string& first) {
    if (failures == 0) return std::to_string(total) + "/" + std::to_string(total) + " agree";
    return std::to_string(failures) + "/" + std::to_string(total) + " disagree; first: " + first;
}

std::vector<TheoryModel> all_models(const VerifyConfig& cfg) {
    return {height1_model(2, cfg.prec), height1_model(3, cfg.prec), height1_model(5, cfg.prec),
            height2_model(cfg.prec, cfg.degcap)};
}

TowerElt sum_of(const std::vector<TowerElt>& xs, const Tower& ring) {
    TowerElt acc = ring.zero();
    for (const auto& x : xs) acc += x;
    return acc;
}

}  // namespace

BasePoly random_monic(const std::shared_ptr<const SeriesRing>& ring, std::mt19937_64& rng, std::size_t degree) {
    std::vector<Series> c;
    for (std::size_t i = 0; i < degree; ++i) c.push_back(random_series(*ring, rng, ring->degcap()));
    c.push_back(ring->one());
    return BasePoly(ring, std::move(c));
}

Elt random_element(const std::shared_ptr<const Algebra>& algebra, std::mt19937_64& rng) {
    const SeriesRing& ring = *algebra->base();
    std::vector<Series> c;
    for (std::size_t i = 0; i < algebra->rank(); ++i) c.push_back(random_series(ring, rng, ring.degcap()));
    return algebra->element(std::move(c));
}

std::vector<Check> verify_subgroup_counts() {
    std::vector<Check> out;
    const std::pair<std::uint32_t, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}};
    for (auto [p, n] : cases) {
        const auto c = count_formula_check(p, n);
        std::ostringstream w;
        w << "|Sub_p| = " << c.enumerated << ", (p^n-1)/(p-1) = " << c.formula << ", count mod p = "
          << c.enumerated % p;
        out.push_back({"subgroup count p=" + std::to_string(p) + " n=" + std::to_string(n), c.ok(), w.str(),
                       "order-p subgroups of (Q_p/Z_p)^n"});
    }
    return out;
}

std::vector<Check> verify_height2_values(const VerifyConfig& cfg) {
    const auto model = height2_model(cfg.prec, cfg.degcap);
    const auto& ring = *model.base;
    std::vector<Check> out;

    const Series sx = sigma_can(model, model.sigma_algebra->gen());
    out.push_back({"sigma_can(x) = 0", sx.is_zero(), "sigma_can(x) = " + sx.to_string(), "height-2 example"});

    const Series u1 = ring.var(0);
    const Series t = hecke_Tp(model, u1);
    out.push_back({"T2(u1) = u1^2", t == u1 * u1, "T2(u1) = " + t.to_string(), "height-2 example"});

    auto fac = verify_factorization(model);
    out.insert(out.end(), fac.begin(), fac.end());
    return out;
}

std::vector<Check> verify_factorization(const TheoryModel& model) {
    const Tower& d1 = *model.splitting.ring;
    const auto& roots = model.splitting.roots;
    std::vector<TowerElt> prod{d1.one()};
    std::string factors;
    for (const auto& r : roots) {
        prod = poly_mul(prod, {-r, d1.one()}, d1.zero());
        factors += "(x - (" + r.to_string() + "))";
    }
    const auto f = model.modulus.lifted(model.splitting.ring);
    bool ok = prod.size() == f.coeffs().size();
    for (std::size_t i = 0; ok && i < prod.size(); ++i) ok = prod[i] == f.coeff(i);
    std::vector<Check> out;
    out.push_back({"factorization over D1", ok, factors + " = x^" + std::to_string(model.rank()) + " + ...",
                   "splitting of f over the level-structure ring"});

    // Elementary symmetric functions against f's coefficients.
    const std::size_t m = roots.size();
    std::vector<TowerElt> e(m + 1, d1.zero());
    e[0] = d1.one();
    for (const auto& r : roots)
        for (std::size_t k = m; k >= 1; --k) e[k] = e[k] + e[k - 1] * r;
    bool sym = true;
    for (std::size_t k = 1; k <= m; ++k) {
        // f = sum (-1)^k e_k x^{m-k}
        TowerElt expected = f.coeff(m - k);
        if (k % 2 == 1) expected = -expected;
        sym = sym && e[k] == expected;
    }
    out.push_back({"elementary symmetric functions of the roots", sym, "e_k(roots) = (-1)^k f_{m-k}",
                   "splitting of f over the level-structure ring"});
    return out;
}

std::vector<Check> verify_frobenius_class(const TheoryModel& model) {
    auto report = frobenius_class_check(model);
    for (auto& c : report.checks) c.name = model.id + ": " + c.name;
    return report.checks;
}

std::vector<Check> verify_index_lemma(const TheoryModel& model) {
    const auto r = index_lemma(model);
    std::ostringstream w;
    w << "det = " << r.determinant.to_string() << ", valuation = "
      << (r.valuation ? std::to_string(*r.valuation) : std::string(">= prec"))
      << ", cofactor unit = " << (r.cofactor_unit ? "true" : "false");
    return {{model.id + ": index of E(B Sigma_p) in E x E(B Sigma_p)/I is p",
             r.valuation == std::optional<int>(1) && r.cofactor_unit, w.str(), "determinant = unit * p"}};
}

std::vector<Check> verify_congruence(const TheoryModel& model, std::size_t samples, std::uint64_t seed) {
    auto report = congruence_check(model, samples, seed);
    for (auto& c : report.checks) c.name = model.id + ": " + c.name;
    return report.checks;
}

std::vector<Check> verify_oracles(const VerifyConfig& cfg) {
    std::vector<Check> out;
    std::mt19937_64 rng(cfg.seed);
    const auto model = height2_model(cfg.prec, cfg.degcap);

    {
        std::size_t bad = 0;
        std::string first;
        for (std::size_t s = 0; s < cfg.batch; ++s) {
            const std::size_t deg = 1 + draw_below(rng, 6);
            const auto f = random_monic(model.base, rng, deg);
            const auto alg = alg_make(f);
            const auto sums = newton_power_sums(f, 8);
            for (std::size_t k = 1; k <= 8; ++k)
                if (alg_trace(alg->power_of_gen(k)) != sums[k - 1]) {
                    if (bad++ == 0) first = "degree " + std::to_string(deg) + ", k = " + std::to_string(k);
                    break;
                }
        }
        out.push_back({"Newton power sums = trace(x^k)", bad == 0, count_witness(bad, cfg.batch, first),
                       "trace of multiplication operators"});
    }
    {
        std::size_t bad = 0;
        std::string first;
        const Tower& d1 = *model.splitting.ring;
        for (std::size_t s = 0; s < cfg.batch; ++s) {
            const Elt a = random_element(model.sigma_algebra, rng);
            const auto cf = classfun_of_element(model.subgroups, a, model.splitting.ring, model.splitting.roots);
            if (transfer_scaled(cf) != d1.from_series(alg_trace(a)) && bad++ == 0) first = a.to_string();
        }
        out.push_back({"sum over subgroups of chi_H(a) = trace(a)", bad == 0, count_witness(bad, cfg.batch, first),
                       "sigma_can as a sum of character maps"});
    }
    {
        std::size_t bad = 0;
        std::string first;
        const Tower& d1 = *model.splitting.ring;
        for (std::size_t s = 0; s < cfg.batch; ++s) {
            const Series g = random_series(*model.base, rng, cfg.degcap);
            std::vector<TowerElt> psis;
            for (std::size_t i = 0; i < model.splitting.roots.size(); ++i) psis.push_back(adams_psi(model, g, i));
            if (sum_of(psis, d1) != d1.from_series(hecke_Tp(model, g)) && bad++ == 0) first = g.to_string();
        }
        out.push_back({"sum of Adams operations psi^H(g) = T_p(g)", bad == 0, count_witness(bad, cfg.batch, first),
                       "Hecke operator equals sigma_can composed with the power operation"});
    }
    return out;
}

std::vector<Check> verify_height1_hecke(const VerifyConfig& cfg) {
    std::vector<Check> out;
    std::mt19937_64 rng(cfg.seed);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto model = height1_model(p, cfg.prec);
        std::size_t bad_fix = 0, bad_cong = 0;
        std::string first;
        for (std::size_t s = 0; s < cfg.batch; ++s) {
            const Series z = random_series(*model.base, rng, 0);
            const Series t = hecke_Tp(model, z);
            if (t != z && bad_fix++ == 0) first = z.to_string();
            if (!(t - z.pow(p)).with_prec(1).is_zero()) ++bad_cong;
        }
        out.push_back({model.id + ": T_p(z) = z", bad_fix == 0, count_witness(bad_fix, cfg.batch, first),
                       "height-1 Hecke operator is the Adams operation"});
        out.push_back({model.id + ": T_p(z) = z^p mod p", bad_cong == 0, count_witness(bad_cong, cfg.batch, ""),
                       "T_p on Z_p is a sum of ring maps"});
    }
    return out;
}

std::vector<Check> verify_theta(const VerifyConfig& cfg) {
    std::vector<Check> out;
    const auto model = height2_model(cfg.prec, cfg.degcap);
    const auto& ring = *model.base;
    const Series u1 = ring.var(0);

    const Series tu = theta(model, u1);
    out.push_back({"theta(u1) = 0", tu.is_zero(), "theta(u1) = " + tu.to_string(), "theta operation"});
    const Series t1 = theta(model, ring.one());
    out.push_back({"theta(1) = 1", t1 == ring.one(), "theta(1) = " + t1.to_string(), "theta operation"});

    std::mt19937_64 rng(cfg.seed);
    const PAdicInt p(model.p, cfg.prec, model.p);
    std::size_t bad = 0;
    std::string first;
    for (std::size_t s = 0; s < cfg.batch; ++s) {
        const Series g = random_series(ring, rng, cfg.degcap);
        const Series th = theta(model, g);
        const Series rebuilt = g.pow(model.p) + th * p;
        if ((th.prec() != cfg.prec - 1 || rebuilt != hecke_Tp(model, g)) && bad++ == 0) first = g.to_string();
    }
    out.push_back({"g^p + p theta(g) = T_p(g) at precision N-1", bad == 0, count_witness(bad, cfg.batch, first),
                   "theta operation"});

    // x -> u1 + 3x - u1 x^2 drops the u1^2 term, so T_2(u1) - u1^2 has unit coefficients.
    const Series three = ring.from_int(3);
    const auto corrupted =
        with_power_images(model, {model.sigma_algebra->element({u1, three, -u1})}, "height2-corrupted");
    std::string witness = "no error raised";
    bool raised = false;
    try {
        (void)theta(corrupted, u1);
    } catch (const TorsionObstruction& e) {
        raised = true;
        witness = e.what();
    }
    out.push_back({"theta reports a torsion obstruction on a corrupted model", raised, witness, "theta operation"});
    return out;
}

std::vector<Check> verify_structural(const VerifyConfig& cfg) {
    std::vector<Check> out;
    for (const auto& model : all_models(cfg)) {
        bool ok = charpoly_check(*model.sigma_algebra) && charpoly_check(*model.full_algebra) &&
                  charpoly_check(*model.splitting.first) && charpoly_check(*model.splitting.ring);
        if (model.cyclic_algebra) ok = ok && charpoly_check(*model.cyclic_algebra);
        out.push_back({model.id + ": Cayley-Hamilton on every algebra", ok, ok ? "f(M_x) = 0" : "f(M_x) != 0",
                       "free quotient algebras"});

        const auto& ring = *model.base;
        const Series e = ring.from_int(5);
        const ClassFun<Series> cf(model.subgroups, ring.zero(), std::vector<Series>(model.rank(), e));
        const Series tr = transfer_scaled(cf);
        out.push_back({model.id + ": scaled transfer of e off the trivial class = |Sub_p| e",
                       tr == ring.from_int(5 * static_cast<std::int64_t>(model.rank())),
                       "p! Tr(5) = " + tr.to_string(), "scaled transfer"});
    }

    const auto model = height2_model(cfg.prec, cfg.degcap);
    std::mt19937_64 rng(cfg.seed);
    std::size_t bad = 0;
    std::string first;
    for (std::size_t s = 0; s < cfg.batch; ++s) {
        const int dg = static_cast<int>(draw_below(rng, cfg.degcap / 2 + 1));
        const Series g = random_series(*model.base, rng, dg);
        const Series h = random_series(*model.base, rng, cfg.degcap - dg);
        const bool ok = power_op(model, g * h) == power_op(model, g) * power_op(model, h) &&
                        power_op(model, g + h) == power_op(model, g) + power_op(model, h);
        if (!ok && bad++ == 0) first = "g = " + g.to_string() + ", h = " + h.to_string();
    }
    out.push_back({"power operation is a ring homomorphism", bad == 0, count_witness(bad, cfg.batch, first),
                   "power operation P_p/I"});
    return out;
}

std::vector<Check> verify_all(const VerifyConfig& cfg) {
    std::vector<Check> out;
    auto append = [&out](std::vector<Check> more) { out.insert(out.end(), more.begin(), more.end()); };
    append(verify_subgroup_counts());
    append(verify_height2_values(cfg));
    const auto h2 = height2_model(cfg.prec, cfg.degcap);
    append(verify_congruence(h2, cfg.samples, cfg.seed));
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto h1 = height1_model(p, cfg.prec);
        append(verify_frobenius_class(h1));
        if (p == 3) append(verify_index_lemma(h1));
    }
    append(verify_frobenius_class(h2));
    append(verify_index_lemma(h2));
    append(verify_oracles(cfg));
    append(verify_height1_hecke(cfg));
    append(verify_theta(cfg));
    append(verify_structural(cfg));
    return out;
}

}  // namespace frob
