#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ringdet/errors.hpp"

namespace ringdet {

using cplx = std::complex<double>;

// Dense row-major complex matrix. The universal numeric carrier of the
// pipeline; real-valued data rides along with zero imaginary parts.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("entry count does not match dimensions");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* row(std::size_t i) { return data_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    const std::vector<cplx>& entries() const { return data_; }

    ComplexMatrix conjugate_transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool all_finite() const {
        for (const cplx& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }

    ComplexMatrix& operator*=(cplx s) {
        for (cplx& z : data_) z *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

  private:
    void require_same_shape(const ComplexMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DimensionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline cplx trace(const ComplexMatrix& m) {
    cplx t = 0.0;
    std::size_t n = m.rows() < m.cols() ? m.rows() : m.cols();
    for (std::size_t i = 0; i < n; ++i) t += m(i, i);
    return t;
}

} // namespace ringdet
