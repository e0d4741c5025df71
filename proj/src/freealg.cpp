#include "frobenius/freealg.hpp"

namespace frob {

IndexReport submodule_index(const std::vector<std::vector<Series>>& vectors) {
    const std::size_t n = vectors.size();
    if (n == 0) throw std::invalid_argument("submodule index of an empty system");
    for (const auto& v : vectors)
        if (v.size() != n)
            throw std::invalid_argument("submodule index needs " + std::to_string(n) + " vectors of length " +
                                        std::to_string(n));
    const SeriesRing& ring = vectors[0][0].ring();
    Matrix<Series> m(n, n, ring.zero());
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = vectors[j][i];
    Series det = determinant(m, ring.zero(), ring.one());
    IndexReport report{det, det.valuation(), false};
    if (report.valuation) report.cofactor_unit = det.div_exact(*report.valuation).is_unit();
    return report;
}

}  // namespace frob
