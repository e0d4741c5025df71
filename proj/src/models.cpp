#include "frobenius/models.hpp"

#include <stdexcept>

namespace frob {

namespace {

void require_factorization(const BasePoly& f, const Splitting& s) {
    const Tower& d1 = *s.ring;
    // prod (X - r) as coefficients over D1, lowest first.
    std::vector<TowerElt> prod{d1.one()};
    for (const auto& r : s.roots) prod = poly_mul(prod, {-r, d1.one()}, d1.zero());
    const auto lifted = f.lifted(s.ring);
    if (prod.size() != lifted.coeffs().size())
        throw std::runtime_error("splitting produced the wrong number of roots");
    for (std::size_t i = 0; i < prod.size(); ++i)
        if (prod[i] != lifted.coeff(i))
            throw std::runtime_error("factorization residual is nonzero in degree " + std::to_string(i));
}

void compute_power_tables(TheoryModel& model) {
    model.power_tables.clear();
    model.power_converges = true;
    const int limit = 3 * (model.base->prec() + model.base->degcap() + 2);
    for (const auto& image : model.power_images) {
        std::vector<Elt> table{model.sigma_algebra->one()};
        Elt cur = table.back();
        bool vanished = false;
        for (int k = 1; k <= limit; ++k) {
            cur = cur * image;
            if (cur.is_zero()) {
                vanished = true;
                break;
            }
            table.push_back(cur);
        }
        if (!vanished) model.power_converges = false;
        model.power_tables.push_back(std::move(table));
    }
}

void assemble(TheoryModel& model, const std::string& symbol) {
    const auto& ring = model.base;
    model.sigma_algebra = Algebra::make(model.modulus, symbol);

    std::vector<Series> yf{ring->zero()};
    yf.insert(yf.end(), model.modulus.coeffs().begin(), model.modulus.coeffs().end());
    model.full_algebra = Algebra::make(BasePoly(ring, std::move(yf)), "y");

    model.subgroups = std::make_shared<const SubgroupTable>(enum_subgroups(model.p, model.n, 1));
    if (model.subgroups->count() != model.rank())
        throw std::runtime_error("model rank " + std::to_string(model.rank()) + " differs from the subgroup count " +
                                 std::to_string(model.subgroups->count()));

    const Series c = model.modulus.coeff(0);
    if (c.valuation() != std::optional<int>(1) || !c.div_exact(1).is_unit())
        throw std::runtime_error("f(0) = " + c.to_string() + " is not a unit multiple of p");

    model.splitting = split_modulus(model.modulus);

    if (!charpoly_check(*model.sigma_algebra) || !charpoly_check(*model.full_algebra) ||
        !charpoly_check(*model.splitting.first) || !charpoly_check(*model.splitting.ring))
        throw std::runtime_error("Cayley-Hamilton check failed for a model algebra");

    compute_power_tables(model);
}

}  // namespace

Splitting split_modulus(const BasePoly& f) {
    const std::size_t m = f.degree();
    if (m < 1 || m > 3) throw std::invalid_argument("splitting is implemented for degrees 1 to 3");
    Splitting s;
    s.first = Algebra::make(f, "y");
    const Elt y = s.first->gen();
    const auto quotient = poly_divide_linear(f.lifted(s.first), y);
    if (quotient.degree() == 2) {
        s.ring = Tower::make(quotient, "z");
        const TowerElt z = s.ring->gen();
        const auto linear = poly_divide_linear(quotient.lifted(s.ring), z);
        s.roots = {s.ring->from_base(y), z, -linear.coeff(0)};
    } else {
        // Nothing left to adjoin; z - 0 keeps the tower two stages deep.
        s.ring = Tower::make(MonicPoly<Algebra>(s.first, {s.first->zero(), s.first->one()}), "z");
        s.roots = {s.ring->from_base(y)};
        if (quotient.degree() == 1) s.roots.push_back(s.ring->from_base(-quotient.coeff(0)));
    }
    require_factorization(f, s);
    return s;
}

BasePoly p_series_multiplicative(const std::shared_ptr<const SeriesRing>& ring) {
    const std::uint32_t p = ring->prime();
    std::vector<Series> c;
    std::int64_t binom = 1;
    c.push_back(ring->zero());
    for (std::uint32_t i = 1; i <= p; ++i) {
        binom = binom * (p - i + 1) / i;
        c.push_back(ring->from_int(binom));
    }
    return BasePoly(ring, std::move(c));
}

BasePoly p_series_multiplicative(std::uint32_t p, int prec) {
    return p_series_multiplicative(SeriesRing::make({}, 0, p, prec));
}

TheoryModel height1_model(std::uint32_t p, int prec) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("height-1 models are built for p in {2, 3, 5}");
    auto ring = SeriesRing::make({}, 0, p, prec);
    const auto pseries = p_series_multiplicative(ring);

    // Transfer ideal generated by [p](x)/x.
    std::vector<Series> g(pseries.coeffs().begin() + 1, pseries.coeffs().end());
    auto cyclic = Algebra::make(BasePoly(ring, std::move(g)), "x");
    const Elt x = cyclic->gen();
    const Elt one = cyclic->one();

    std::vector<Elt> autos;
    Elt norm = one;
    for (std::uint32_t u = 1; u < p; ++u) {
        Elt image = (one + x).pow(u) - one;
        // Throws unless x -> [u](x) is well defined on the quotient.
        (void)RingMap<SeriesRing, Algebra>(cyclic, cyclic, image);
        norm = norm * image;
        autos.push_back(std::move(image));
    }
    for (std::size_t i = 1; i < norm.vec().size(); ++i)
        if (!norm.coord(i).is_zero())
            throw std::runtime_error("norm class is not a scalar; invariant rank is not 1");
    for (const auto& image : autos)
        if (RingMap<SeriesRing, Algebra>(cyclic, cyclic, image)(norm) != norm)
            throw std::runtime_error("norm class is not fixed by an automorphism");

    const Series c = norm.coord(0);
    TheoryModel model{
        .id = "height1-p" + std::to_string(p),
        .p = p,
        .n = 1,
        .base = ring,
        .modulus = BasePoly(ring, {-c, ring->one()}),
    };
    model.cyclic_algebra = cyclic;
    model.norm_class = norm;
    model.automorphism_images = std::move(autos);
    assemble(model, "y");
    return model;
}

TheoryModel height2_model(int prec, int degcap) {
    auto ring = SeriesRing::make({"u1"}, degcap, 2, prec);
    const Series u1 = ring->var(0);
    TheoryModel model{
        .id = "height2-p2",
        .p = 2,
        .n = 2,
        .base = ring,
        .modulus = BasePoly(ring, {ring->from_int(-2), -u1, ring->zero(), ring->one()}),
    };
    assemble(model, "x");
    model.power_images = {model.sigma_algebra->element({u1 * u1, ring->from_int(3), -u1})};
    compute_power_tables(model);
    return model;
}

TheoryModel with_power_images(TheoryModel model, std::vector<Elt> images, std::string id) {
    if (images.size() != model.base->nvars())
        throw std::invalid_argument("need one power image per base variable");
    model.power_images.clear();
    for (const auto& im : images) model.power_images.push_back(model.sigma_algebra->element(im.vec()));
    model.id = std::move(id);
    compute_power_tables(model);
    return model;
}

Elt power_op(const TheoryModel& model, const Series& g) {
    if (!model.power_converges)
        throw std::domain_error("power operation does not converge: a variable image is not topologically nilpotent");
    if (g.ring().vars() != model.base->vars() || g.ring().prime() != model.p)
        throw std::invalid_argument("element does not belong to the model's coefficient ring");
    const Algebra& sigma = *model.sigma_algebra;
    Elt acc = sigma.zero();
    for (const auto& [exps, c] : g.terms()) {
        Elt term = sigma.from_series(model.base->from_padic(c));
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const auto& table = model.power_tables.at(i);
            if (static_cast<std::size_t>(exps[i]) >= table.size()) {
                term = sigma.zero();
                break;
            }
            term = term * table[exps[i]];
        }
        acc += term;
    }
    return acc;
}

Series modulus_constant(const TheoryModel& model) { return model.modulus.coeff(0); }

}  // namespace frob
