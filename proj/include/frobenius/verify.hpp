#pragma once

#include <cstdint>
#include <vector>

#include "frobenius/froblift.hpp"

namespace frob {

struct VerifyConfig {
    int prec = kDefaultPrecision;
    int degcap = kDefaultDegreeCap;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    /// Size of the secondary randomized batches (oracles, theta, homomorphism).
    std::size_t batch = 50;
};

// Each function runs one family of checks and returns one entry per check.

std::vector<Check> verify_subgroup_counts();
std::vector<Check> verify_height2_values(const VerifyConfig& cfg);
std::vector<Check> verify_factorization(const TheoryModel& model);
std::vector<Check> verify_frobenius_class(const TheoryModel& model);
std::vector<Check> verify_index_lemma(const TheoryModel& model);
std::vector<Check> verify_congruence(const TheoryModel& model, std::size_t samples, std::uint64_t seed);
std::vector<Check> verify_oracles(const VerifyConfig& cfg);
std::vector<Check> verify_height1_hecke(const VerifyConfig& cfg);
std::vector<Check> verify_theta(const VerifyConfig& cfg);
std::vector<Check> verify_structural(const VerifyConfig& cfg);

/// Everything above over the height-1 models at p = 2, 3, 5 and the
/// height-2 model.
std::vector<Check> verify_all(const VerifyConfig& cfg);

/// Random monic polynomial of degree `degree` over `ring`.
BasePoly random_monic(const std::shared_ptr<const SeriesRing>& ring, std::mt19937_64& rng, std::size_t degree);

/// Random element of an algebra over the series ring.
Elt random_element(const std::shared_ptr<const Algebra>& algebra, std::mt19937_64& rng);

}  // namespace frob
