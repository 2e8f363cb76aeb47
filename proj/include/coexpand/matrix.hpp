#ifndef COEXPAND_MATRIX_HPP
#define COEXPAND_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace coexpand {

/**
 * Dense matrix over an exact scalar type, row-major, value semantics.
 * Operations never mutate their arguments; they return fresh matrices.
 */
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw FormatError("ragged matrix initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const T& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw IndexError("matrix index out of range");
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw IndexError("matrix product shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (x.size() != cols_) throw IndexError("matrix-vector shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    // Submatrix selected by strictly increasing index sets.
    Matrix submatrix(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k] >= rows_) throw IndexError("row index out of range");
            if (k > 0 && rows[k] <= rows[k - 1])
                throw IndexError("row indices must be strictly increasing");
        }
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (cols[k] >= cols_) throw IndexError("column index out of range");
            if (k > 0 && cols[k] <= cols[k - 1])
                throw IndexError("column indices must be strictly increasing");
        }
        Matrix s(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

// Text format: first line "rows cols", then row-major integers.
inline IntMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    long long rows = -1, cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw FormatError("matrix header must be 'rows cols'");
    IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::string tok;
    for (long long i = 0; i < rows; ++i)
        for (long long j = 0; j < cols; ++j) {
            if (!(in >> tok)) throw FormatError("matrix has too few entries");
            try {
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Integer(tok);
            } catch (const std::runtime_error&) {
                throw FormatError("bad integer '" + tok + "' in matrix");
            }
        }
    if (in >> tok) throw FormatError("matrix has trailing data");
    return m;
}

inline std::string format_matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << m(i, j);
        }
        out << "\n";
    }
    return out.str();
}

} // namespace coexpand

#endif // COEXPAND_MATRIX_HPP
