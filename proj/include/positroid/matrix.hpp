#ifndef POSITROID_MATRIX_HPP
#define POSITROID_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "positroid/mpoly.hpp"
#include "positroid/rat.hpp"

namespace positroid {

struct DegenerateSymbolicPivot : std::runtime_error {
    DegenerateSymbolicPivot() : std::runtime_error("degenerate symbolic pivot") {}
};

// Dense exact matrix.  Entry access is 0-based; the index-set arguments of
// minor() are 1-based to match the combinatorial conventions used everywhere
// else (subsets of [n]).
template <typename K>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, K(0)) {}
    Mat(int r, int c, std::vector<K> data) : rows(r), cols(c), a(std::move(data)) {
        if (a.size() != static_cast<size_t>(r) * c) throw std::invalid_argument("Mat: bad size");
    }

    K& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const K& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("Mat: dimension mismatch");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (!ScalarOps<K>::nonzero(x.at(i, k))) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    // 1-based row/column selections, strictly increasing
    Mat submatrix(const std::vector<int>& rws, const std::vector<int>& cls) const {
        Mat m(static_cast<int>(rws.size()), static_cast<int>(cls.size()));
        for (size_t i = 0; i < rws.size(); ++i)
            for (size_t j = 0; j < cls.size(); ++j) {
                int r = rws[i] - 1, c = cls[j] - 1;
                if (r < 0 || r >= rows || c < 0 || c >= cols)
                    throw std::out_of_range("Mat: index out of range");
                m.at(static_cast<int>(i), static_cast<int>(j)) = at(r, c);
            }
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <typename K>
struct Rref {
    int rank = 0;
    Mat<K> reduced;
    std::vector<int> pivot_columns;  // 1-based
};

// Reduced row-echelon form over a field (Rat or RatFunc).
template <typename K>
Rref<K> rref_rank(Mat<K> m) {
    Rref<K> out;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (ScalarOps<K>::nonzero(m.at(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || !ScalarOps<K>::nonzero(m.at(i, c))) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        out.pivot_columns.push_back(c + 1);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

namespace detail {
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }
inline MPoly exact_div(const MPoly& a, const MPoly& b) { return a.div_exact(b); }
}  // namespace detail

// Fraction-free Bareiss determinant.  For MPoly entries all interior
// divisions are exact in the polynomial ring.
template <typename K>
K det(Mat<K> m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    int n = m.rows;
    if (n == 0) return K(1);
    K prev = K(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (!ScalarOps<K>::nonzero(m.at(k, k))) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (ScalarOps<K>::nonzero(m.at(i, k))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return K(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = detail::exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j),
                                               prev);
        prev = m.at(k, k);
    }
    K d = m.at(n - 1, n - 1);
    return sign < 0 ? K(0) - d : d;
}

// Cofactor-expansion determinant; test oracle for det().
template <typename K>
K det_cofactor(const Mat<K>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    int n = m.rows;
    if (n == 0) return K(1);
    if (n == 1) return m.at(0, 0);
    K total = K(0);
    std::vector<int> rws, cls;
    for (int i = 1; i < n; ++i) rws.push_back(i + 1);
    for (int j = 0; j < n; ++j) {
        if (!ScalarOps<K>::nonzero(m.at(0, j))) continue;
        cls.clear();
        for (int c = 0; c < n; ++c)
            if (c != j) cls.push_back(c + 1);
        K sub = det_cofactor(m.submatrix(rws, cls));
        K term = m.at(0, j) * sub;
        if (j % 2 == 0)
            total = total + term;
        else
            total = total - term;
    }
    return total;
}

// Exact minor on 1-based index sets; throws on repeats / out of range.
template <typename K>
K minor_of(const Mat<K>& m, const std::vector<int>& rws, const std::vector<int>& cls) {
    if (rws.size() != cls.size()) throw std::invalid_argument("minor: |rows| != |cols|");
    for (size_t i = 1; i < rws.size(); ++i)
        if (rws[i] <= rws[i - 1]) throw std::invalid_argument("minor: repeated/unsorted rows");
    for (size_t j = 1; j < cls.size(); ++j)
        if (cls[j] <= cls[j - 1]) throw std::invalid_argument("minor: repeated/unsorted cols");
    return det(m.submatrix(rws, cls));
}

// Solve A x = b (A square, invertible); throws on singular A.
template <typename K>
std::vector<K> solve(const Mat<K>& A, const std::vector<K>& b) {
    if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve: dimension mismatch");
    Mat<K> aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[static_cast<size_t>(i)];
    }
    Rref<K> r = rref_rank(std::move(aug));
    if (r.rank != A.rows) throw std::domain_error("solve: singular system");
    std::vector<K> x(static_cast<size_t>(A.rows), K(0));
    for (int i = 0; i < A.rows; ++i) x[static_cast<size_t>(i)] = r.reduced.at(i, A.cols);
    return x;
}

template <typename K>
Mat<K> inverse(const Mat<K>& A) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
    int n = A.rows;
    Mat<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    Rref<K> r = rref_rank(std::move(aug));
    if (r.rank != n) throw std::domain_error("inverse: singular matrix");
    Mat<K> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

}  // namespace positroid

#endif
