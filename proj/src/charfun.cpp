#include "frobenius/charfun.hpp"

#include <algorithm>
#include <set>

namespace frob {

namespace {

constexpr std::uint64_t kMaxAmbient = std::uint64_t{1} << 22;

struct Ambient {
    std::uint32_t p;
    int n;
    std::uint64_t q;  // p^k
    std::uint64_t size;

    Ambient(std::uint32_t p_, int n_, int k) : p(p_), n(n_) {
        if (!is_prime(p)) throw std::invalid_argument("subgroup enumeration needs a prime, got " + std::to_string(p));
        if (n < 1) throw std::invalid_argument("rank n must be at least 1");
        if (k < 0) throw std::invalid_argument("k must be non-negative");
        q = checked_pow(p, k);
        size = 1;
        for (int i = 0; i < n; ++i) {
            if (size > kMaxAmbient / q) throw std::invalid_argument("ambient group too large to enumerate");
            size *= q;
        }
    }

    std::uint64_t encode(const GroupVector& v) const {
        std::uint64_t idx = 0;
        for (auto c : v) idx = idx * q + c % q;
        return idx;
    }

    GroupVector decode(std::uint64_t idx) const {
        GroupVector v(n);
        for (int i = n; i-- > 0;) {
            v[i] = idx % q;
            idx /= q;
        }
        return v;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        GroupVector x = decode(a), y = decode(b);
        for (int i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % q;
        return encode(x);
    }

    int valuation(std::uint64_t c) const {
        int v = 0;
        for (; c % p == 0; c /= p) ++v;
        return v;
    }
};

std::vector<std::uint64_t> closure(const Ambient& amb, const std::vector<std::uint64_t>& base, std::uint64_t g) {
    std::set<std::uint64_t> out(base.begin(), base.end());
    for (std::uint64_t m = g; m != 0; m = amb.add(m, g))
        for (auto s : base) out.insert(amb.add(s, m));
    return {out.begin(), out.end()};
}

std::vector<GroupVector> canonical_from_elements(const Ambient& amb, const std::vector<std::uint64_t>& elems) {
    std::vector<GroupVector> vecs;
    vecs.reserve(elems.size());
    for (auto e : elems) vecs.push_back(amb.decode(e));
    std::sort(vecs.begin(), vecs.end());
    std::vector<GroupVector> rows;
    for (int c = 0; c < amb.n; ++c) {
        int best_val = -1;
        for (const auto& v : vecs) {
            if (!std::all_of(v.begin(), v.begin() + c, [](auto x) { return x == 0; }) || v[c] == 0) continue;
            const int val = amb.valuation(v[c]);
            if (best_val < 0 || val < best_val) best_val = val;
        }
        if (best_val < 0) continue;
        const std::uint64_t pivot = checked_pow(amb.p, best_val);
        // vecs is sorted, so the first hit is the lexicographic minimum.
        for (const auto& v : vecs)
            if (std::all_of(v.begin(), v.begin() + c, [](auto x) { return x == 0; }) && v[c] == pivot) {
                rows.push_back(v);
                break;
            }
    }
    return rows;
}

std::vector<std::uint64_t> elements_of(const Ambient& amb, const std::vector<GroupVector>& gens) {
    std::vector<std::uint64_t> elems{0};
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != amb.n) throw std::invalid_argument("generator has the wrong length");
        elems = closure(amb, elems, amb.encode(g));
    }
    return elems;
}

}  // namespace

std::vector<GroupVector> subgroup_elements(std::uint32_t p, int n, int k, const std::vector<GroupVector>& gens) {
    const Ambient amb(p, n, k);
    std::vector<GroupVector> out;
    for (auto e : elements_of(amb, gens)) out.push_back(amb.decode(e));
    return out;
}

std::vector<GroupVector> canonical_generators(std::uint32_t p, int n, int k, const std::vector<GroupVector>& gens) {
    const Ambient amb(p, n, k);
    return canonical_from_elements(amb, elements_of(amb, gens));
}

SubgroupTable enum_subgroups(std::uint32_t p, int n, int k) {
    const Ambient amb(p, n, k);
    const std::uint64_t target = amb.q;  // order p^k
    SubgroupTable table{p, n, k, {}};
    if (target == 1) {
        table.subgroups.push_back({});
        return table;
    }
    std::set<std::vector<GroupVector>> seen;
    std::set<std::vector<GroupVector>> found;
    std::vector<std::vector<std::uint64_t>> frontier{{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint64_t>> next;
        for (const auto& s : frontier) {
            for (std::uint64_t g = 1; g < amb.size; ++g) {
                if (std::binary_search(s.begin(), s.end(), g)) continue;
                auto t = closure(amb, s, g);
                if (t.size() > target || target % t.size() != 0) continue;
                auto key = canonical_from_elements(amb, t);
                if (!seen.insert(key).second) continue;
                if (t.size() == target)
                    found.insert(std::move(key));
                else
                    next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    table.subgroups.assign(found.begin(), found.end());
    return table;
}

std::uint64_t subgroup_count_formula(std::uint32_t p, int n) {
    std::uint64_t acc = 0;
    for (int i = 0; i < n; ++i) acc += checked_pow(p, i);
    return acc;
}

CountCheck count_formula_check(std::uint32_t p, int n) {
    const auto table = enum_subgroups(p, n, 1);
    const std::uint64_t formula = subgroup_count_formula(p, n);
    return {table.count(), formula, table.count() == formula, table.count() % p == 1 % p};
}

}  // namespace frob
