#pragma once

// Finite free algebras R[x]/(f) over a commutative coefficient ring, and
// towers of them. A coefficient ring R is any type exposing
//
//   using Elem;                      element type with + - * == and unary -
//   Elem zero(), one(), from_int(n)
//   Elem from_series(const Series&)  embedding of the bottom series ring
//   const SeriesRing& series_ring()
//   size_t flat_rank()               rank as a free module over the series ring
//   vector<Series> flatten(Elem)     coordinates over the series ring
//   Elem unflatten(coords, offset)
//
// SeriesRing is the bottom of every tower; QuotAlgebra<R> satisfies the same
// interface so algebras can be stacked.

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "frobenius/linalg.hpp"
#include "frobenius/series.hpp"

namespace frob {

template <class R>
concept CoefficientRing = requires(const R& r, const typename R::Elem& a, const Series& s) {
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.from_int(1) } -> std::convertible_to<typename R::Elem>;
    { r.from_series(s) } -> std::convertible_to<typename R::Elem>;
    { r.flat_rank() } -> std::convertible_to<std::size_t>;
    { r.flatten(a) } -> std::convertible_to<std::vector<Series>>;
    { a + a } -> std::convertible_to<typename R::Elem>;
    { a * a } -> std::convertible_to<typename R::Elem>;
    { -a } -> std::convertible_to<typename R::Elem>;
    { a == a } -> std::convertible_to<bool>;
};

template <CoefficientRing R>
class QuotAlgebra;
template <CoefficientRing R>
class AlgElt;

template <class T>
struct is_quot_algebra : std::false_type {};
template <CoefficientRing R>
struct is_quot_algebra<QuotAlgebra<R>> : std::true_type {};

/// Maps an element of ring From into Target, where Target is From itself or
/// an algebra tower built over From.
template <class Target, class From>
typename Target::Elem lift_to(const Target& target, const typename From::Elem& a) {
    if constexpr (std::is_same_v<Target, From>) {
        return a;
    } else if constexpr (is_quot_algebra<Target>::value) {
        return target.from_base(lift_to<typename Target::Base, From>(*target.base(), a));
    } else {
        static_assert(std::is_same_v<Target, From>, "target is not a tower over the source ring");
    }
}

/// Monic polynomial over R, coefficients lowest degree first.
template <CoefficientRing R>
class MonicPoly {
public:
    using Elem = typename R::Elem;

    /// Throws std::invalid_argument if the list is empty or the leading
    /// coefficient is not one.
    MonicPoly(std::shared_ptr<const R> ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (!ring_) throw std::invalid_argument("polynomial needs a coefficient ring");
        if (coeffs_.empty()) throw std::invalid_argument("polynomial has no coefficients");
        if (!(coeffs_.back() == ring_->one())) throw std::invalid_argument("polynomial is not monic");
    }

    const std::shared_ptr<const R>& ring() const { return ring_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    const Elem& coeff(std::size_t i) const { return coeffs_.at(i); }

    /// Horner evaluation at an element of a ring S built over R.
    template <class S>
    typename S::Elem evaluate(const S& target, const typename S::Elem& at) const {
        typename S::Elem acc = target.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + lift_to<S, R>(target, *it);
        return acc;
    }

    /// Same polynomial with coefficients pushed into a ring S built over R.
    template <class S>
    MonicPoly<S> lifted(std::shared_ptr<const S> target) const {
        std::vector<typename S::Elem> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_) c.push_back(lift_to<S, R>(*target, a));
        return MonicPoly<S>(std::move(target), std::move(c));
    }

    bool operator==(const MonicPoly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return false;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!(coeffs_[i] == o.coeffs_[i])) return false;
        return true;
    }

private:
    std::shared_ptr<const R> ring_;
    std::vector<Elem> coeffs_;
};

/// Product of two polynomials given as coefficient lists (lowest first).
template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b, const T& zero) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

/// R[x]/(f), free of rank deg f over R with basis 1, x, ..., x^{m-1}.
template <CoefficientRing R>
class QuotAlgebra : public std::enable_shared_from_this<QuotAlgebra<R>> {
public:
    using Base = R;
    using BaseElem = typename R::Elem;
    using Elem = AlgElt<R>;

    static std::shared_ptr<const QuotAlgebra> make(MonicPoly<R> modulus, std::string symbol = "x") {
        if (modulus.degree() < 1) throw std::invalid_argument("modulus must have degree at least 1");
        return std::shared_ptr<const QuotAlgebra>(new QuotAlgebra(std::move(modulus), std::move(symbol)));
    }

    const std::shared_ptr<const R>& base() const { return modulus_.ring(); }
    const MonicPoly<R>& modulus() const { return modulus_; }
    std::size_t rank() const { return modulus_.degree(); }
    const std::string& symbol() const { return symbol_; }
    const SeriesRing& series_ring() const { return base()->series_ring(); }

    Elem zero() const { return Elem(this->shared_from_this(), std::vector<BaseElem>(rank(), base()->zero())); }
    Elem one() const { return from_base(base()->one()); }
    Elem from_int(std::int64_t v) const { return from_base(base()->from_int(v)); }
    Elem from_series(const Series& s) const { return from_base(base()->from_series(s)); }
    Elem from_base(const BaseElem& c) const {
        std::vector<BaseElem> v(rank(), base()->zero());
        v[0] = c;
        return Elem(this->shared_from_this(), std::move(v));
    }
    /// The class of x.
    Elem gen() const { return power_of_gen(1); }
    Elem power_of_gen(std::size_t k) const {
        std::vector<BaseElem> c(k + 1, base()->zero());
        c[k] = base()->one();
        return reduce(std::move(c));
    }

    /// Class of the polynomial with the given coefficients (any length).
    Elem reduce(std::vector<BaseElem> c) const {
        const std::size_t m = rank();
        const auto& f = modulus_.coeffs();
        for (std::size_t k = c.size(); k-- > m;) {
            const BaseElem top = c[k];
            for (std::size_t i = 0; i < m; ++i) c[k - m + i] = c[k - m + i] - top * f[i];
        }
        c.resize(m, base()->zero());
        return Elem(this->shared_from_this(), std::move(c));
    }

    Elem element(std::vector<BaseElem> coords) const {
        if (coords.size() != rank()) throw std::invalid_argument("coordinate vector has the wrong length");
        return Elem(this->shared_from_this(), std::move(coords));
    }

    Elem multiply(const Elem& a, const Elem& b) const {
        return reduce(poly_mul(a.vec(), b.vec(), base()->zero()));
    }

    /// Column j holds the coordinates of a * x^j.
    Matrix<BaseElem> mult_matrix(const Elem& a) const {
        const std::size_t m = rank();
        Matrix<BaseElem> mat(m, m, base()->zero());
        Elem col = a;
        const Elem x = gen();
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < m; ++i) mat(i, j) = col.coord(i);
            col = col * x;
        }
        return mat;
    }

    /// Trace of multiplication by a over the immediate base.
    BaseElem trace(const Elem& a) const {
        BaseElem acc = base()->zero();
        Elem col = a;
        const Elem x = gen();
        for (std::size_t j = 0; j < rank(); ++j) {
            acc = acc + col.coord(j);
            col = col * x;
        }
        return acc;
    }

    /// Tower flattened over the series ring: coordinates of x^j-blocks in order.
    std::size_t flat_rank() const { return rank() * base()->flat_rank(); }
    std::vector<Series> flatten(const Elem& a) const {
        std::vector<Series> out;
        out.reserve(flat_rank());
        for (const auto& c : a.vec()) {
            auto part = base()->flatten(c);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    Elem unflatten(const std::vector<Series>& coords, std::size_t offset = 0) const {
        const std::size_t step = base()->flat_rank();
        if (coords.size() < offset + flat_rank()) throw std::invalid_argument("too few flat coordinates");
        std::vector<BaseElem> v;
        v.reserve(rank());
        for (std::size_t j = 0; j < rank(); ++j) v.push_back(base()->unflatten(coords, offset + j * step));
        return element(std::move(v));
    }
    Elem flat_basis(std::size_t i) const {
        std::vector<Series> e(flat_rank(), series_ring().zero());
        e.at(i) = series_ring().one();
        return unflatten(e);
    }

    /// Multiplication by a as a matrix over the series ring.
    Matrix<Series> flat_matrix(const Elem& a) const {
        const std::size_t n = flat_rank();
        Matrix<Series> mat(n, n, series_ring().zero());
        for (std::size_t j = 0; j < n; ++j) {
            const auto col = flatten(a * flat_basis(j));
            for (std::size_t i = 0; i < n; ++i) mat(i, j) = col[i];
        }
        return mat;
    }

    Series flat_trace(const Elem& a) const {
        Series acc = series_ring().zero();
        for (std::size_t j = 0; j < flat_rank(); ++j) acc = acc + flatten(a * flat_basis(j))[j];
        return acc;
    }

private:
    QuotAlgebra(MonicPoly<R> modulus, std::string symbol) : modulus_(std::move(modulus)), symbol_(std::move(symbol)) {}

    MonicPoly<R> modulus_;
    std::string symbol_;
};

/// Element of R[x]/(f) as its coordinate vector in 1, x, ..., x^{m-1}.
template <CoefficientRing R>
class AlgElt {
public:
    using BaseElem = typename R::Elem;
    using Parent = QuotAlgebra<R>;

    AlgElt(std::shared_ptr<const Parent> parent, std::vector<BaseElem> vec) : parent_(std::move(parent)), vec_(std::move(vec)) {
        if (!parent_) throw std::invalid_argument("algebra element needs a parent");
        if (vec_.size() != parent_->rank()) throw std::invalid_argument("coordinate vector has the wrong length");
    }

    const std::shared_ptr<const Parent>& parent() const { return parent_; }
    const std::vector<BaseElem>& vec() const { return vec_; }
    const BaseElem& coord(std::size_t i) const { return vec_.at(i); }

    AlgElt operator+(const AlgElt& o) const {
        require_same_parent(o);
        std::vector<BaseElem> v = vec_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + o.vec_[i];
        return AlgElt(parent_, std::move(v));
    }
    AlgElt operator-(const AlgElt& o) const { return *this + (-o); }
    AlgElt operator-() const {
        std::vector<BaseElem> v;
        v.reserve(vec_.size());
        for (const auto& c : vec_) v.push_back(-c);
        return AlgElt(parent_, std::move(v));
    }
    AlgElt operator*(const AlgElt& o) const {
        require_same_parent(o);
        return parent_->multiply(*this, o);
    }
    AlgElt scaled(const BaseElem& c) const {
        std::vector<BaseElem> v;
        v.reserve(vec_.size());
        for (const auto& a : vec_) v.push_back(c * a);
        return AlgElt(parent_, std::move(v));
    }
    AlgElt& operator+=(const AlgElt& o) { return *this = *this + o; }
    AlgElt& operator*=(const AlgElt& o) { return *this = *this * o; }

    AlgElt pow(unsigned e) const {
        AlgElt result = parent_->one();
        AlgElt base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    bool is_zero() const { return *this == parent_->zero(); }

    bool operator==(const AlgElt& o) const {
        if (vec_.size() != o.vec_.size()) return false;
        for (std::size_t i = 0; i < vec_.size(); ++i)
            if (!(vec_[i] == o.vec_[i])) return false;
        return true;
    }
    bool operator!=(const AlgElt& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string out;
        const std::string& sym = parent_->symbol();
        for (std::size_t i = 0; i < vec_.size(); ++i) {
            if (vec_[i] == parent_->base()->zero()) continue;
            const std::string c = poly_string(vec_[i]);
            const std::string mono = i == 0 ? "" : (i == 1 ? sym : sym + "^" + std::to_string(i));
            std::string term;
            if (mono.empty())
                term = c;
            else if (c == "1")
                term = mono;
            else if (c == "-1")
                term = "-" + mono;
            else if (c.find(' ') != std::string::npos)
                term = "(" + c + ")*" + mono;
            else
                term = c + "*" + mono;
            if (out.empty())
                out = term;
            else if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    template <class T>
    static std::string poly_string(const T& c) {
        if constexpr (std::is_same_v<T, Series>)
            return c.to_poly_string();
        else
            return c.to_string();
    }

    void require_same_parent(const AlgElt& o) const {
        if (parent_ != o.parent_ && !(parent_->modulus() == o.parent_->modulus()))
            throw std::invalid_argument("algebra elements have different parents");
    }

    std::shared_ptr<const Parent> parent_;
    std::vector<BaseElem> vec_;
};

// ---- named operations --------------------------------------------------

template <CoefficientRing R>
std::shared_ptr<const QuotAlgebra<R>> alg_make(MonicPoly<R> f, std::string symbol = "x") {
    return QuotAlgebra<R>::make(std::move(f), std::move(symbol));
}

template <CoefficientRing R>
AlgElt<R> alg_mul(const AlgElt<R>& a, const AlgElt<R>& b) {
    return a * b;
}

template <CoefficientRing R>
Matrix<typename R::Elem> mult_matrix(const AlgElt<R>& a) {
    return a.parent()->mult_matrix(a);
}

template <CoefficientRing R>
typename R::Elem alg_trace(const AlgElt<R>& a) {
    return a.parent()->trace(a);
}

/// Power sums p_1 .. p_kmax of the roots of f from Newton's identities.
template <CoefficientRing R>
std::vector<typename R::Elem> newton_power_sums(const MonicPoly<R>& f, std::size_t kmax) {
    if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
    const R& ring = *f.ring();
    const std::size_t m = f.degree();
    const auto& c = f.coeffs();  // f = x^m + c[m-1] x^{m-1} + ... + c[0]
    std::vector<typename R::Elem> p;  // p[k-1] = p_k
    p.reserve(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) {
        // p_k = -(sum_{i=1}^{min(k-1,m)} c[m-i] p_{k-i}) - [k<=m] k c[m-k]
        auto acc = ring.zero();
        for (std::size_t i = 1; i < k && i <= m; ++i) acc = acc + c[m - i] * p[k - i - 1];
        if (k <= m) acc = acc + ring.from_int(static_cast<std::int64_t>(k)) * c[m - k];
        p.push_back(-acc);
    }
    return p;
}

/// Cayley-Hamilton sanity check: f(M_x) == 0.
template <CoefficientRing R>
bool charpoly_check(const QuotAlgebra<R>& a) {
    const auto& base = *a.base();
    const auto mx = a.mult_matrix(a.gen());
    const std::size_t m = a.rank();
    const auto& f = a.modulus().coeffs();
    Matrix<typename R::Elem> acc(m, m, base.zero());
    const auto id = Matrix<typename R::Elem>::identity(m, base.zero(), base.one());
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * mx + id.scaled(*it);
    return acc == Matrix<typename R::Elem>(m, m, base.zero());
}

/// Quotient of f by (z - r), where r is a root of f in the ring of f's
/// coefficients. Throws std::domain_error if f(r) != 0.
template <CoefficientRing R>
MonicPoly<R> poly_divide_linear(const MonicPoly<R>& f, const typename R::Elem& r) {
    const R& ring = *f.ring();
    const auto residual = f.evaluate(ring, r);
    if (!(residual == ring.zero())) throw std::domain_error("not a root: remainder is nonzero");
    const std::size_t m = f.degree();
    std::vector<typename R::Elem> q(m, ring.zero());
    q[m - 1] = f.coeff(m);
    for (std::size_t k = m - 1; k-- > 0;) q[k] = f.coeff(k + 1) + r * q[k + 1];
    return MonicPoly<R>(f.ring(), std::move(q));
}

/// A[z]/(g).
template <CoefficientRing R>
std::shared_ptr<const QuotAlgebra<R>> adjoin_root(const MonicPoly<R>& g, std::string symbol = "z") {
    return QuotAlgebra<R>::make(g, std::move(symbol));
}

/// Algebra map out of R[x]/(f) determined by where x goes.
template <CoefficientRing R, class S>
class RingMap {
public:
    using Source = QuotAlgebra<R>;
    using TargetElem = typename S::Elem;

    /// Throws std::domain_error when f(genimage) != 0 in the target.
    RingMap(std::shared_ptr<const Source> source, std::shared_ptr<const S> target, TargetElem genimage)
        : source_(std::move(source)), target_(std::move(target)), genimage_(std::move(genimage)) {
        const auto residual = source_->modulus().evaluate(*target_, genimage_);
        if (!(residual == target_->zero()))
            throw std::domain_error("generator image is not a root of the source modulus");
    }

    const TargetElem& genimage() const { return genimage_; }
    const std::shared_ptr<const S>& target() const { return target_; }

    TargetElem operator()(const AlgElt<R>& a) const {
        TargetElem acc = target_->zero();
        const auto& v = a.vec();
        for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * genimage_ + lift_to<S, R>(*target_, *it);
        return acc;
    }

private:
    std::shared_ptr<const Source> source_;
    std::shared_ptr<const S> target_;
    TargetElem genimage_;
};

template <CoefficientRing R, class S>
typename S::Elem ringmap_apply(const RingMap<R, S>& phi, const AlgElt<R>& a) {
    return phi(a);
}

/// Determinant of an inclusion of free modules and its p-adic content.
struct IndexReport {
    Series determinant;
    /// p-adic valuation of the content of the determinant; nullopt when the
    /// determinant vanishes at working precision.
    std::optional<int> valuation;
    /// Whether determinant / p^valuation is a unit power series.
    bool cofactor_unit;
};

/// Index of the span of `vectors` (given as coordinate columns in a free
/// module over the series ring). Throws std::invalid_argument unless the
/// system is square.
IndexReport submodule_index(const std::vector<std::vector<Series>>& vectors);

}  // namespace frob
