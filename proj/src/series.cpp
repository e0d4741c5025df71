#include "frobenius/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace frob {

namespace {

int total_degree(const Series::Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

std::shared_ptr<const SeriesRing> SeriesRing::make(std::vector<std::string> vars, int degcap, std::uint32_t p,
                                                   int prec) {
    if (degcap < 0) throw std::invalid_argument("degree cap must be non-negative");
    // Validates p and prec.
    (void)PAdicInt(p, prec, 0);
    return std::shared_ptr<const SeriesRing>(new SeriesRing(std::move(vars), degcap, p, prec));
}

Series SeriesRing::zero() const { return Series(shared_from_this(), prec_); }

Series SeriesRing::one() const { return from_int(1); }

Series SeriesRing::from_int(std::int64_t v) const { return from_padic(PAdicInt(p_, prec_, v)); }

Series SeriesRing::from_padic(const PAdicInt& c) const {
    if (c.prime() != p_) throw std::invalid_argument("constant has the wrong prime");
    Series::Terms t;
    t.emplace(Series::Exponent(vars_.size(), 0), c);
    return Series(shared_from_this(), std::min(prec_, c.prec()), std::move(t));
}

Series SeriesRing::var(std::size_t i) const {
    if (i >= vars_.size()) throw std::out_of_range("variable index out of range");
    Series::Exponent e(vars_.size(), 0);
    e[i] = 1;
    return monomial(std::move(e), 1);
}

Series SeriesRing::var(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + name);
    return var(static_cast<std::size_t>(it - vars_.begin()));
}

Series SeriesRing::monomial(std::vector<int> exps, std::int64_t coeff) const {
    if (exps.size() != vars_.size()) throw std::invalid_argument("exponent vector has the wrong length");
    Series::Terms t;
    t.emplace(std::move(exps), PAdicInt(p_, prec_, coeff));
    return Series(shared_from_this(), prec_, std::move(t));
}

const Series& SeriesRing::from_series(const Series& s) const { return s; }

std::vector<Series> SeriesRing::flatten(const Series& s) const { return {s}; }

Series SeriesRing::unflatten(const std::vector<Series>& coords, std::size_t offset) const { return coords.at(offset); }

Series::Series(std::shared_ptr<const SeriesRing> ring, int prec, Terms terms)
    : ring_(std::move(ring)), prec_(prec), terms_(std::move(terms)) {
    if (!ring_) throw std::invalid_argument("series needs a ring");
    normalize();
}

void Series::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != ring_->nvars()) throw std::invalid_argument("exponent vector has the wrong length");
        if (it->second.prime() != ring_->prime()) throw std::invalid_argument("coefficient has the wrong prime");
        if (total_degree(it->first) > ring_->degcap()) {
            it = terms_.erase(it);
            continue;
        }
        prec_ = std::min(prec_, it->second.prec());
        ++it;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.with_prec(prec_);
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

void Series::require_compatible(const Series& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
        if (ring_->vars() != o.ring_->vars()) throw std::invalid_argument("series over different variable sets");
        if (ring_->prime() != o.ring_->prime()) throw std::invalid_argument("series over different primes");
        if (ring_->degcap() != o.ring_->degcap()) throw std::invalid_argument("series with different degree caps");
    }
}

PAdicInt Series::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? PAdicInt::zero(ring_->prime(), prec_) : it->second;
}

PAdicInt Series::constant_term() const { return coeff(Exponent(ring_->nvars(), 0)); }

int Series::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Series::is_unit() const { return constant_term().is_unit(); }

std::optional<int> Series::valuation() const {
    std::optional<int> v;
    for (const auto& [e, c] : terms_) {
        auto cv = c.valuation();
        if (cv && (!v || *cv < *v)) v = cv;
    }
    return v;
}

Series Series::operator-() const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, -c);
    return Series(ring_, prec_, std::move(t));
}

Series Series::operator+(const Series& o) const {
    require_compatible(o);
    const int prec = std::min(prec_, o.prec_);
    Terms t = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted) it->second += c;
    }
    return Series(ring_, prec, std::move(t));
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    require_compatible(o);
    const int prec = std::min(prec_, o.prec_);
    const int cap = ring_->degcap();
    Terms t;
    for (const auto& [ea, ca] : terms_) {
        const int da = total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + total_degree(eb) > cap) continue;
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = t.emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    return Series(ring_, prec, std::move(t));
}

Series Series::operator*(const PAdicInt& c) const {
    Terms t;
    for (const auto& [e, a] : terms_) t.emplace(e, a * c);
    return Series(ring_, std::min(prec_, c.prec()), std::move(t));
}

Series Series::pow(unsigned e) const {
    Series result = ring_->one().with_prec(prec_);
    Series base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Series Series::with_prec(int prec) const {
    if (prec >= prec_) return *this;
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace(e, c.with_prec(prec));
    return Series(ring_, prec, std::move(t));
}

Series Series::div_exact(int k) const {
    Terms t;
    for (const auto& [e, c] : terms_) {
        try {
            t.emplace(e, c.div_exact(k));
        } catch (const std::domain_error&) {
            std::ostringstream os;
            const Series mono(ring_, prec_, {{e, PAdicInt::one(ring_->prime(), prec_)}});
            os << "coefficient " << c.to_string() << " of monomial " << mono.to_poly_string()
               << " is not divisible by " << ring_->prime() << "^" << k;
            throw std::domain_error(os.str());
        }
    }
    if (k >= prec_) throw std::domain_error("exact division by p^" + std::to_string(k) + " leaves no known digits");
    return Series(ring_, prec_ - k, std::move(t));
}

Series Series::frobenius_mod_p() const { return with_prec(1).pow(ring_->prime()); }

Series Series::substitute_powers(int k) const {
    Terms t;
    for (const auto& [e, c] : terms_) {
        Exponent scaled(e);
        for (int& x : scaled) x *= k;
        t.emplace(std::move(scaled), c);
    }
    return Series(ring_, prec_, std::move(t));
}

bool Series::operator==(const Series& o) const {
    if (ring_->vars() != o.ring_->vars() || ring_->prime() != o.ring_->prime()) return false;
    const int prec = std::min(prec_, o.prec_);
    const Series a = with_prec(prec), b = o.with_prec(prec);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second.residue() != ib->second.residue()) return false;
    return true;
}

std::string Series::to_poly_string() const {
    // Ascending total degree, then lexicographic.
    std::vector<std::pair<Exponent, PAdicInt>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return total_degree(a.first) < total_degree(b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        std::int64_t v = c.centered();
        const bool neg = v < 0;
        if (neg) v = -v;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << v;
        else if (v == 1)
            os << mono;
        else
            os << v << "*" << mono;
    }
    if (first) os << "0";
    return os.str();
}

std::string Series::to_string() const {
    std::ostringstream os;
    os << to_poly_string() << " + O(";
    if (ring_->nvars() > 0) os << "deg " << ring_->degcap() + 1 << ", ";
    os << ring_->prime() << "^" << prec_ << ")";
    return os.str();
}

Series series_add(const Series& a, const Series& b) { return a + b; }
Series series_mul(const Series& a, const Series& b) { return a * b; }
bool series_is_unit(const Series& a) { return a.is_unit(); }
Series series_frobenius_mod_p(const Series& a) { return a.frobenius_mod_p(); }

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return bound == 0 ? 0 : rng() % bound; }

Series random_series(const SeriesRing& ring, std::mt19937_64& rng, int max_degree) {
    const std::uint64_t modulus = checked_pow(ring.prime(), ring.prec());
    const int cap = std::min(max_degree, ring.degcap());
    Series::Terms t;
    // Enumerate exponent vectors of total degree <= cap.
    Series::Exponent e(ring.nvars(), 0);
    auto emit = [&](const Series::Exponent& ex) {
        t.emplace(ex, PAdicInt(ring.prime(), ring.prec(), static_cast<std::int64_t>(draw_below(rng, modulus))));
    };
    if (ring.nvars() == 0) {
        emit(e);
    } else {
        std::vector<Series::Exponent> all;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i == e.size()) {
                all.push_back(e);
                return;
            }
            for (int k = 0; k <= left; ++k) {
                e[i] = k;
                rec(i + 1, left - k);
            }
            e[i] = 0;
        };
        rec(0, cap);
        for (const auto& ex : all) emit(ex);
    }
    return Series(ring.shared_from_this(), ring.prec(), std::move(t));
}

}  // namespace frob
