#include "frobenius/froblift.hpp"

#include <random>

namespace frob {

Series sigma_can(const TheoryModel& model, const Elt& a, bool normalized) {
    Series t = alg_trace(a);
    if (!normalized) return t;
    const PAdicInt m(model.p, model.base->prec(), static_cast<std::int64_t>(model.rank()));
    return t * m.inverse();
}

FrobeniusReport frobenius_class_check(const TheoryModel& model) {
    FrobeniusReport report{model.id, {}};
    const Algebra& sigma = *model.sigma_algebra;
    const std::size_t m = model.rank();

    const Series at_one = sigma_can(model, sigma.one());
    report.checks.push_back({"sigma_can(1) = m", at_one == model.base->from_int(static_cast<std::int64_t>(m)),
                             "sigma_can(1) = " + at_one.to_string(), "scaled transfer of a scalar"});
    report.checks.push_back({"m = 1 mod p", m % model.p == 1 % model.p,
                             "m = " + std::to_string(m) + ", p = " + std::to_string(model.p),
                             "subgroup count is a p-adic unit"});
    for (std::size_t i = 1; i < m; ++i) {
        const Series v = sigma_can(model, sigma.power_of_gen(i));
        const std::string label = sigma.symbol() + (i == 1 ? "" : "^" + std::to_string(i));
        report.checks.push_back({"sigma_can(" + label + ") = 0 mod p", v.with_prec(1).is_zero(),
                                 "sigma_can(" + label + ") = " + v.to_string(),
                                 "sigma_can reduces to the quotient by (y)"});
    }
    return report;
}

Series hecke_Tp(const TheoryModel& model, const Series& g) { return alg_trace(power_op(model, g)); }

TowerElt adams_psi(const TheoryModel& model, const Series& g, std::size_t root_index) {
    const auto& roots = model.splitting.roots;
    if (root_index >= roots.size())
        throw std::out_of_range("root index " + std::to_string(root_index) + " out of range; model has " +
                                std::to_string(roots.size()) + " roots");
    const RingMap<SeriesRing, Tower> chi(model.sigma_algebra, model.splitting.ring, roots[root_index]);
    return chi(power_op(model, g));
}

FrobeniusReport congruence_check(const TheoryModel& model, std::size_t samples, std::uint64_t seed) {
    FrobeniusReport report{model.id, {}};
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::string first_failure;
    for (std::size_t s = 0; s < samples; ++s) {
        const Series g = random_series(*model.base, rng, model.base->degcap());
        const Series lhs = hecke_Tp(model, g).with_prec(1);
        const Series rhs = g.pow(model.p).with_prec(1);
        if (lhs != rhs) {
            if (failures == 0)
                first_failure = "sample " + std::to_string(s) + ": g = " + g.to_string() + ", T_p(g) - g^p = " +
                                (hecke_Tp(model, g) - g.pow(model.p)).to_string();
            ++failures;
        }
    }
    report.checks.push_back({"T_p(g) = g^p mod p", failures == 0,
                             failures == 0 ? std::to_string(samples) + " samples, seed " + std::to_string(seed)
                                           : std::to_string(failures) + " failures; first " + first_failure,
                             "Hecke congruence"});
    return report;
}

Series theta(const TheoryModel& model, const Series& g) {
    const Series diff = hecke_Tp(model, g) - g.pow(model.p);
    try {
        return diff.div_exact(1);
    } catch (const std::domain_error& e) {
        throw TorsionObstruction(std::string("torsion obstruction: ") + e.what());
    }
}

IndexReport index_lemma(const TheoryModel& model) {
    const auto& full = model.full_algebra;
    const auto& sigma = model.sigma_algebra;
    const RingMap<SeriesRing, SeriesRing> restriction(full, model.base, model.base->zero());
    const RingMap<SeriesRing, Algebra> quotient(full, sigma, sigma->gen());
    std::vector<std::vector<Series>> columns;
    for (std::size_t i = 0; i <= model.rank(); ++i) {
        const Elt yi = full->power_of_gen(i);
        std::vector<Series> col{restriction(yi)};
        const auto rest = sigma->flatten(quotient(yi));
        col.insert(col.end(), rest.begin(), rest.end());
        columns.push_back(std::move(col));
    }
    return submodule_index(columns);
}

}  // namespace frob
