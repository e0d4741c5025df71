#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobenius/models.hpp"

namespace frob {

/// One named verification with the value that witnesses it.
struct Check {
    std::string name;
    bool pass;
    std::string witness;
    std::string ref;
};

/// Outcome of a batch of checks against one model. A failing check carries
/// the offending element in its witness.
struct FrobeniusReport {
    std::string model_id;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Raised by theta when T_p(g) - g^p has a coefficient that p does not divide.
class TorsionObstruction : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The canonical Frobenius lift E[x]/(f) -> E: the trace of multiplication
/// by a, which is the sum of a over the subgroups of order p. With
/// `normalized`, divided by the rank so that scalars are fixed.
Series sigma_can(const TheoryModel& model, const Elt& a, bool normalized = false);

/// sigma_can(x^i) = 0 mod p for 0 < i < m, sigma_can(1) = m, m = 1 mod p.
FrobeniusReport frobenius_class_check(const TheoryModel& model);

/// T_p(g) = sigma_can(P(g)) where P is the power operation.
Series hecke_Tp(const TheoryModel& model, const Series& g);

/// The Adams operation for the subgroup labelled by splitting root
/// `root_index`: P(g) evaluated at that root in D1. Throws std::out_of_range
/// for a bad index.
TowerElt adams_psi(const TheoryModel& model, const Series& g, std::size_t root_index);

/// T_p(g) = g^p mod p for `samples` seeded pseudo-random g.
FrobeniusReport congruence_check(const TheoryModel& model, std::size_t samples, std::uint64_t seed);

/// theta(g) = (T_p(g) - g^p) / p, known to one digit less than g.
/// Throws TorsionObstruction naming the first non-divisible coefficient.
Series theta(const TheoryModel& model, const Series& g);

/// Index of E[y]/(y f(y)) inside E x E[y]/(f) on the basis 1, y, ..., y^m.
IndexReport index_lemma(const TheoryModel& model);

}  // namespace frob
