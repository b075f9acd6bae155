#pragma once

#include "concord/types.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace concord {

// Dense row-major matrix over an exact coefficient type.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) fail("ragged matrix initializer");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat&) const = default;

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }

    Mat operator-() const {
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) fail("matrix shape mismatch in product");
        Mat m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += x * o(k, j);
            }
        return m;
    }

    Mat scaled(const T& c) const {
        Mat m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) fail("matrix shape mismatch in apply");
        std::vector<T> out(rows_, T());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        for (const auto& x : a_) if (!(x == T())) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline QMat to_rational(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

}  // namespace concord
