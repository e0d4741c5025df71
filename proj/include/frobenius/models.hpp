#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobenius/charfun.hpp"
#include "frobenius/freealg.hpp"
#include "frobenius/series.hpp"

namespace frob {

using Algebra = QuotAlgebra<SeriesRing>;
using Elt = AlgElt<SeriesRing>;
using Tower = QuotAlgebra<Algebra>;
using TowerElt = AlgElt<Algebra>;
using BasePoly = MonicPoly<SeriesRing>;

/// Two-stage root adjunction E[y]/(f) then [z]/(g) over which f splits.
struct Splitting {
    std::shared_ptr<const Algebra> first;
    std::shared_ptr<const Tower> ring;
    std::vector<TowerElt> roots;
};

/// Split a monic f of degree 1, 2 or 3 by adjoining a root y, dividing out
/// (z - y), and adjoining a root z of the quotient when it is not linear.
/// Throws std::invalid_argument for larger degrees and std::runtime_error
/// if the product of (X - root) fails to reproduce f.
Splitting split_modulus(const BasePoly& f);

/// Coefficient ring E, the ring tower above it, and the power operation on
/// the generators of E. Built by height1_model / height2_model; immutable
/// afterwards.
struct TheoryModel {
    std::string id;
    std::uint32_t p;
    int n;
    std::shared_ptr<const SeriesRing> base;
    BasePoly modulus;                                  // f
    std::shared_ptr<const Algebra> sigma_algebra{};    // E[x]/(f): Sigma_p modulo transfers
    std::shared_ptr<const Algebra> full_algebra{};     // E[y]/(y f(y)): all of Sigma_p
    std::shared_ptr<const SubgroupTable> subgroups{};  // order-p subgroups of (Q_p/Z_p)^n
    Splitting splitting{};

    /// Image of each variable of E under the power operation. Empty at
    /// height 1, where E = Z_p and the operation is the unit map.
    std::vector<Elt> power_images{};
    /// power_tables[i][k] = power_images[i]^k until it vanishes.
    std::vector<std::vector<Elt>> power_tables{};
    bool power_converges = true;

    // Height 1 only: E[x]/([p](x)/x) and the Aut(Z/p)-norm of x in it.
    std::shared_ptr<const Algebra> cyclic_algebra{};
    std::optional<Elt> norm_class{};
    std::vector<Elt> automorphism_images{};  // [u](x) for u = 1 .. p-1

    std::size_t rank() const { return sigma_algebra->rank(); }
};

/// [p](x) = (1+x)^p - 1 over Z_p, as a polynomial of degree p.
BasePoly p_series_multiplicative(std::uint32_t p, int prec = kDefaultPrecision);
BasePoly p_series_multiplicative(const std::shared_ptr<const SeriesRing>& ring);

/// Height-1 model at p in {2, 3, 5}. Throws std::invalid_argument for other
/// primes and std::runtime_error if the norm class is not a scalar.
TheoryModel height1_model(std::uint32_t p, int prec = kDefaultPrecision);

/// Height-2 model at p = 2 with f = x^3 - u1 x - 2 and u1 -> u1^2 + 3x - u1 x^2.
TheoryModel height2_model(int prec = kDefaultPrecision, int degcap = kDefaultDegreeCap);

/// Copy of `model` whose power operation sends the base variables to
/// `images`. Used to probe failure modes.
TheoryModel with_power_images(TheoryModel model, std::vector<Elt> images, std::string id);

/// Ring map E -> sigma_algebra extending the power operation. Inputs are read
/// as the polynomials they store. Throws std::domain_error if the variable
/// images are not topologically nilpotent within 3(N+D+2) powers.
Elt power_op(const TheoryModel& model, const Series& g);

/// f(0) of the model, and its valuation.
Series modulus_constant(const TheoryModel& model);

}  // namespace frob
