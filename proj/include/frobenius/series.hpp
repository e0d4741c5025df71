#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobenius/padic.hpp"

namespace frob {

class Series;

/// Default total-degree truncation for the coefficient ring.
inline constexpr int kDefaultDegreeCap = 8;

/// Descriptor of Z_p[[u_1, ..., u_k]] truncated at total degree `degcap` and
/// p-adic precision `prec`. An empty variable list is Z_p itself.
class SeriesRing : public std::enable_shared_from_this<SeriesRing> {
public:
    using Elem = Series;

    static std::shared_ptr<const SeriesRing> make(std::vector<std::string> vars, int degcap, std::uint32_t p,
                                                  int prec = kDefaultPrecision);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    int degcap() const { return degcap_; }
    std::uint32_t prime() const { return p_; }
    int prec() const { return prec_; }

    Series zero() const;
    Series one() const;
    Series from_int(std::int64_t v) const;
    Series from_padic(const PAdicInt& c) const;
    Series var(std::size_t i) const;
    Series var(const std::string& name) const;
    Series monomial(std::vector<int> exps, std::int64_t coeff) const;

    /// Identity; lets the ring act as the bottom of an algebra tower.
    const Series& from_series(const Series& s) const;
    const SeriesRing& series_ring() const { return *this; }
    std::size_t flat_rank() const { return 1; }
    std::vector<Series> flatten(const Series& s) const;
    Series unflatten(const std::vector<Series>& coords, std::size_t offset = 0) const;

    bool operator==(const SeriesRing& o) const {
        return vars_ == o.vars_ && degcap_ == o.degcap_ && p_ == o.p_ && prec_ == o.prec_;
    }

private:
    SeriesRing(std::vector<std::string> vars, int degcap, std::uint32_t p, int prec)
        : vars_(std::move(vars)), degcap_(degcap), p_(p), prec_(prec) {}

    std::vector<std::string> vars_;
    int degcap_;
    std::uint32_t p_;
    int prec_;
};

/// Element of a truncated power-series ring. Terms past the degree cap are
/// discarded; every stored coefficient is nonzero and reduced to prec().
class Series {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, PAdicInt>;

    Series(std::shared_ptr<const SeriesRing> ring, int prec, Terms terms = {});

    const std::shared_ptr<const SeriesRing>& ring_ptr() const { return ring_; }
    const SeriesRing& ring() const { return *ring_; }
    int prec() const { return prec_; }
    const Terms& terms() const { return terms_; }

    PAdicInt coeff(const Exponent& e) const;
    PAdicInt constant_term() const;
    bool is_zero() const { return terms_.empty(); }
    /// Highest total degree present, or -1 for zero.
    int degree() const;

    /// A power series over Z_p is a unit iff its constant term is.
    bool is_unit() const;
    /// Minimum coefficient valuation; nullopt when the series is zero.
    std::optional<int> valuation() const;

    Series operator-() const;
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(const PAdicInt& c) const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    Series pow(unsigned e) const;
    Series with_prec(int prec) const;
    /// Coefficientwise exact division by p^k. Throws std::domain_error naming
    /// the first coefficient that is not divisible.
    Series div_exact(int k) const;
    /// a^p with coefficients reduced mod p (precision 1).
    Series frobenius_mod_p() const;
    /// u_i -> u_i^k on every variable.
    Series substitute_powers(int k) const;

    /// Coefficientwise equality at the shared precision.
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    /// "1 - 2*u1 + u1^2 + O(deg 9, 2^16)".
    std::string to_string() const;
    /// Polynomial part only, without the error term.
    std::string to_poly_string() const;

private:
    void require_compatible(const Series& o) const;
    void normalize();

    std::shared_ptr<const SeriesRing> ring_;
    int prec_;
    Terms terms_;
};

Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
bool series_is_unit(const Series& a);
Series series_frobenius_mod_p(const Series& a);

inline Series operator*(const PAdicInt& c, const Series& s) { return s * c; }

/// Pseudo-random series of total degree <= max_degree with uniform residues.
/// Uses only raw engine output so the same seed gives the same series on
/// every platform.
Series random_series(const SeriesRing& ring, std::mt19937_64& rng, int max_degree);

/// Uniform-ish integer in [0, bound) from raw engine output.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace frob
