#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace frob {

/// Dense row-major matrix over a commutative ring element type T.
/// T needs +, -, * and ==; the ring's zero is supplied by the caller since
/// elements of truncated rings cannot be default-constructed meaningfully.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shapes do not compose");
        Matrix r(rows_, o.cols_, zero_like());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                T acc = r(i, j);
                for (std::size_t k = 0; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
                r(i, j) = acc;
            }
        return r;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!(data_[k] == o.data_[k])) return false;
        return true;
    }

    T trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
        T acc = zero_like();
        for (std::size_t i = 0; i < rows_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

private:
    T zero_like() const {
        if (data_.empty()) throw std::logic_error("empty matrix has no element to derive zero from");
        return data_[0] - data_[0];
    }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Characteristic polynomial det(tI - A) by Berkowitz's division-free
/// algorithm. Coefficients lowest degree first; the last entry is one.
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a, const T& zero, const T& one) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    // poly holds coefficients highest degree first while building.
    std::vector<T> poly{one};
    for (std::size_t k = 0; k < n; ++k) {
        // Leading k x k block is A_k; new row/column index k.
        // Toeplitz column: 1, -a_kk, -R C, -R A_k C, ..., -R A_k^{k-1} C.
        std::vector<T> col(k + 2, zero);
        col[0] = one;
        col[1] = zero - a(k, k);
        std::vector<T> v(k, zero);  // A_k^j C
        for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
        for (std::size_t j = 0; j < k; ++j) {
            T rv = zero;
            for (std::size_t i = 0; i < k; ++i) rv = rv + a(k, i) * v[i];
            col[j + 2] = zero - rv;
            std::vector<T> next(k, zero);
            for (std::size_t r = 0; r < k; ++r) {
                T acc = zero;
                for (std::size_t c = 0; c < k; ++c) acc = acc + a(r, c) * v[c];
                next[r] = acc;
            }
            v = std::move(next);
        }
        // Multiply lower-triangular Toeplitz (k+2) x (k+1) by poly.
        std::vector<T> out(k + 2, zero);
        for (std::size_t r = 0; r < k + 2; ++r)
            for (std::size_t c = 0; c <= k && c <= r; ++c) out[r] = out[r] + col[r - c] * poly[c];
        poly = std::move(out);
    }
    return std::vector<T>(poly.rbegin(), poly.rend());
}

template <class T>
T determinant(const Matrix<T>& a, const T& zero, const T& one) {
    const auto cp = berkowitz_charpoly(a, zero, one);
    // cp[0] = det(-A) = (-1)^n det(A).
    return a.rows() % 2 == 0 ? cp[0] : zero - cp[0];
}

/// Division-free determinant by cofactor expansion along the first column.
/// Exponential; used as an independent check on small systems.
template <class T>
T determinant_cofactor(const Matrix<T>& a, const T& zero, const T& one) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return one;
    if (n == 1) return a(0, 0);
    T acc = zero;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<T> minor(n - 1, n - 1, zero);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor(rr, c - 1) = a(r, c);
            ++rr;
        }
        T term = a(i, 0) * determinant_cofactor(minor, zero, one);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace frob
