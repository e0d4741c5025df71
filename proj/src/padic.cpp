#include "frobenius/padic.hpp"

#include <algorithm>
#include <stdexcept>

namespace frob {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
    if (v >= 0) return static_cast<std::uint64_t>(v) % m;
    // -(v+1) avoids overflow at INT64_MIN.
    std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    std::uint64_t r = mag % m;
    return r == 0 ? 0 : m - r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t base, int k) {
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        if (base != 0 && r > (std::uint64_t{1} << 62) / base)
            throw std::overflow_error("p^N exceeds the 62-bit working range");
        r *= base;
    }
    return r;
}

PAdicInt::PAdicInt(std::uint32_t p, int prec, std::int64_t v) : p_(p), prec_(prec) {
    if (!is_prime(p)) throw std::invalid_argument("p-adic prime " + std::to_string(p) + " is not prime");
    if (prec < 1) throw std::invalid_argument("p-adic precision must be at least 1");
    try {
        modulus_ = checked_pow(p, prec);
    } catch (const std::overflow_error& e) {
        throw std::invalid_argument(e.what());
    }
    residue_ = reduce_signed(v, modulus_);
}

void PAdicInt::require_same_prime(const PAdicInt& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("mismatched primes " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

std::optional<int> PAdicInt::valuation() const {
    if (residue_ == 0) return std::nullopt;
    int k = 0;
    for (std::uint64_t r = residue_; r % p_ == 0; r /= p_) ++k;
    return k;
}

std::int64_t PAdicInt::centered() const {
    if (residue_ > modulus_ / 2) return -static_cast<std::int64_t>(modulus_ - residue_);
    return static_cast<std::int64_t>(residue_);
}

PAdicInt PAdicInt::with_prec(int prec) const {
    if (prec >= prec_) return *this;
    if (prec < 1) throw std::invalid_argument("p-adic precision must be at least 1");
    std::uint64_t m = checked_pow(p_, prec);
    return {Raw{}, p_, prec, m, residue_ % m};
}

PAdicInt PAdicInt::operator-() const {
    return {Raw{}, p_, prec_, modulus_, residue_ == 0 ? 0 : modulus_ - residue_};
}

PAdicInt PAdicInt::operator+(const PAdicInt& o) const {
    require_same_prime(o);
    const PAdicInt a = with_prec(o.prec_), b = o.with_prec(prec_);
    std::uint64_t s = a.residue_ + b.residue_;
    if (s >= a.modulus_) s -= a.modulus_;
    return {Raw{}, p_, a.prec_, a.modulus_, s};
}

PAdicInt PAdicInt::operator-(const PAdicInt& o) const { return *this + (-o); }

PAdicInt PAdicInt::operator*(const PAdicInt& o) const {
    require_same_prime(o);
    const PAdicInt a = with_prec(o.prec_), b = o.with_prec(prec_);
    return {Raw{}, p_, a.prec_, a.modulus_, mulmod(a.residue_, b.residue_, a.modulus_)};
}

PAdicInt PAdicInt::pow(std::uint64_t e) const {
    PAdicInt result{Raw{}, p_, prec_, modulus_, 1 % modulus_};
    PAdicInt base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

PAdicInt PAdicInt::inverse() const {
    if (!is_unit())
        throw std::domain_error("cannot invert " + to_string() + ": valuation " +
                                (valuation() ? std::to_string(*valuation()) : ">= " + std::to_string(prec_)) +
                                " > 0");
    // Newton iteration x <- x(2 - ax) doubles the number of correct digits.
    std::uint64_t x = 1;
    for (std::uint64_t t = 1; t < p_; ++t)
        if (residue_ * t % p_ == 1) {
            x = t;
            break;
        }
    PAdicInt inv{Raw{}, p_, prec_, modulus_, x % modulus_};
    const PAdicInt two{Raw{}, p_, prec_, modulus_, 2 % modulus_};
    for (int known = 1; known < prec_; known *= 2) inv = inv * (two - *this * inv);
    return inv;
}

PAdicInt inv(const PAdicInt& a) { return a.inverse(); }

PAdicInt PAdicInt::div_exact(int k) const {
    if (k < 0) throw std::invalid_argument("negative division exponent");
    if (k == 0) return *this;
    if (k >= prec_)
        throw std::domain_error("dividing by p^" + std::to_string(k) + " leaves no known digits of " + to_string());
    const std::uint64_t pk = checked_pow(p_, k);
    if (residue_ % pk != 0)
        throw std::domain_error(to_string() + " is not divisible by " + std::to_string(p_) + "^" + std::to_string(k));
    const std::uint64_t m = modulus_ / pk;
    return {Raw{}, p_, prec_ - k, m, (residue_ / pk) % m};
}

bool PAdicInt::operator==(const PAdicInt& o) const {
    if (p_ != o.p_) return false;
    const int prec = std::min(prec_, o.prec_);
    return with_prec(prec).residue_ == o.with_prec(prec).residue_;
}

std::string PAdicInt::to_string() const {
    return std::to_string(residue_) + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

}  // namespace frob
