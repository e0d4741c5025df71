#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "frobenius/freealg.hpp"

namespace frob {

using GroupVector = std::vector<std::uint64_t>;

/// Subgroups of order p^k in the p^k-torsion (Z/p^k)^n of (Q_p/Z_p)^n.
///
/// Each subgroup is stored by its canonical generator rows: for each column
/// c, among the elements vanishing before c, the lexicographically least one
/// whose c-th entry is the smallest power of p that occurs there. The rows
/// are a function of the subgroup alone, so distinct rows mean distinct
/// subgroups.
struct SubgroupTable {
    std::uint32_t p;
    int n;
    int k;
    std::vector<std::vector<GroupVector>> subgroups;

    std::size_t count() const { return subgroups.size(); }
};

/// Exhaustive enumeration by closure. Throws std::invalid_argument for
/// non-prime p, n < 1, k < 0, or an ambient group beyond 2^22 elements.
SubgroupTable enum_subgroups(std::uint32_t p, int n, int k);

/// Elements of the subgroup generated by `gens` inside (Z/p^k)^n.
std::vector<GroupVector> subgroup_elements(std::uint32_t p, int n, int k, const std::vector<GroupVector>& gens);

/// Canonical generator rows of the subgroup generated by `gens`.
std::vector<GroupVector> canonical_generators(std::uint32_t p, int n, int k, const std::vector<GroupVector>& gens);

/// sum_{i<n} p^i, i.e. (p^n - 1)/(p - 1).
std::uint64_t subgroup_count_formula(std::uint32_t p, int n);

struct CountCheck {
    std::uint64_t enumerated;
    std::uint64_t formula;
    bool matches_formula;
    bool congruent_to_one;
    bool ok() const { return matches_formula && congruent_to_one; }
};

CountCheck count_formula_check(std::uint32_t p, int n);

/// Function on conjugacy classes of maps Z_p^n -> Sigma_p. The nontrivial
/// classes are indexed by the order-p subgroups of the table.
template <class T>
class ClassFun {
public:
    ClassFun(std::shared_ptr<const SubgroupTable> table, T trivial_value, std::vector<T> values)
        : table_(std::move(table)), trivial_(std::move(trivial_value)), values_(std::move(values)) {
        if (!table_ || table_->k != 1) throw std::invalid_argument("class functions need an order-p subgroup table");
        if (values_.size() != table_->count())
            throw std::invalid_argument("class function has " + std::to_string(values_.size()) + " values for " +
                                        std::to_string(table_->count()) + " nontrivial classes");
    }

    const SubgroupTable& table() const { return *table_; }
    const T& trivial_value() const { return trivial_; }
    const std::vector<T>& values() const { return values_; }

private:
    std::shared_ptr<const SubgroupTable> table_;
    T trivial_;
    std::vector<T> values_;
};

/// p! times the transfer: the plain sum over all classes.
template <class T>
T transfer_scaled(const ClassFun<T>& f) {
    T acc = f.trivial_value();
    for (const auto& v : f.values()) acc = acc + v;
    return acc;
}

/// Class function of an element of E[x]/(f) whose nontrivial values are its
/// images under x -> root for each root of f in `target`. The trivial class
/// gets zero, so transfer_scaled returns the sum over nontrivial classes.
/// Throws std::invalid_argument when the root count differs from the class
/// count or from deg f, and std::domain_error if a root is not a root.
template <CoefficientRing R, class S>
ClassFun<typename S::Elem> classfun_of_element(std::shared_ptr<const SubgroupTable> table, const AlgElt<R>& a,
                                               const std::shared_ptr<const S>& target,
                                               const std::vector<typename S::Elem>& roots) {
    if (roots.size() != a.parent()->rank())
        throw std::invalid_argument("expected " + std::to_string(a.parent()->rank()) + " roots, got " +
                                    std::to_string(roots.size()));
    std::vector<typename S::Elem> values;
    values.reserve(roots.size());
    for (const auto& r : roots) values.push_back(RingMap<R, S>(a.parent(), target, r)(a));
    return ClassFun<typename S::Elem>(std::move(table), target->zero(), std::move(values));
}

/// Same for an element of E[y]/(y f(y)): the trivial class is evaluation at
/// y = 0 and the nontrivial classes are evaluation at the roots of f.
template <CoefficientRing R, class S>
ClassFun<typename S::Elem> classfun_of_full_element(std::shared_ptr<const SubgroupTable> table, const AlgElt<R>& a,
                                                    const std::shared_ptr<const S>& target,
                                                    const std::vector<typename S::Elem>& roots) {
    if (roots.size() + 1 != a.parent()->rank())
        throw std::invalid_argument("expected " + std::to_string(a.parent()->rank() - 1) + " roots, got " +
                                    std::to_string(roots.size()));
    std::vector<typename S::Elem> values;
    values.reserve(roots.size());
    for (const auto& r : roots) values.push_back(RingMap<R, S>(a.parent(), target, r)(a));
    auto trivial = RingMap<R, S>(a.parent(), target, target->zero())(a);
    return ClassFun<typename S::Elem>(std::move(table), std::move(trivial), std::move(values));
}

}  // namespace frob
