#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace frob {

/// Default number of p-adic digits carried by freshly constructed values.
inline constexpr int kDefaultPrecision = 16;

bool is_prime(std::uint64_t n);

/// p^k as an unsigned 64-bit integer; throws std::overflow_error past 2^62.
std::uint64_t checked_pow(std::uint64_t base, int k);

/// Truncated p-adic integer: a residue modulo p^prec.
///
/// Precision is part of the value. Binary operations on operands of
/// different precision return a result at the smaller precision, so a loss
/// of digits (for instance after an exact division by p) propagates through
/// every later computation instead of being silently restored.
class PAdicInt {
public:
    /// Reduces v modulo p^prec. Throws std::invalid_argument when p is not
    /// prime, prec < 1, or p^prec does not fit the 62-bit working range.
    PAdicInt(std::uint32_t p, int prec, std::int64_t v);

    static PAdicInt zero(std::uint32_t p, int prec) { return {p, prec, 0}; }
    static PAdicInt one(std::uint32_t p, int prec) { return {p, prec, 1}; }

    std::uint32_t prime() const { return p_; }
    int prec() const { return prec_; }
    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; }

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return residue_ % p_ != 0; }

    /// Largest k < prec with p^k | residue; nullopt when the residue is zero,
    /// meaning the valuation is at least prec.
    std::optional<int> valuation() const;

    /// Signed representative in (-p^prec / 2, p^prec / 2].
    std::int64_t centered() const;

    PAdicInt operator-() const;
    PAdicInt operator+(const PAdicInt& o) const;
    PAdicInt operator-(const PAdicInt& o) const;
    PAdicInt operator*(const PAdicInt& o) const;
    PAdicInt& operator+=(const PAdicInt& o) { return *this = *this + o; }
    PAdicInt& operator-=(const PAdicInt& o) { return *this = *this - o; }
    PAdicInt& operator*=(const PAdicInt& o) { return *this = *this * o; }

    PAdicInt pow(std::uint64_t e) const;

    /// Multiplicative inverse. Throws std::domain_error on non-units.
    PAdicInt inverse() const;

    /// a / p^k, known to prec - k digits. Throws std::domain_error when the
    /// residue is not divisible by p^k or k >= prec.
    PAdicInt div_exact(int k) const;

    /// Same value with fewer known digits.
    PAdicInt with_prec(int prec) const;

    /// Equal residues after truncating both sides to the shared precision.
    bool operator==(const PAdicInt& o) const;
    bool operator!=(const PAdicInt& o) const { return !(*this == o); }

    /// "v + O(p^N)".
    std::string to_string() const;

private:
    struct Raw {};
    PAdicInt(Raw, std::uint32_t p, int prec, std::uint64_t modulus, std::uint64_t residue)
        : p_(p), prec_(prec), modulus_(modulus), residue_(residue) {}

    void require_same_prime(const PAdicInt& o) const;

    std::uint32_t p_;
    int prec_;
    std::uint64_t modulus_;
    std::uint64_t residue_;
};

PAdicInt inv(const PAdicInt& a);

inline std::ostream& operator<<(std::ostream& os, const PAdicInt& a) { return os << a.to_string(); }

}  // namespace frob
