#ifndef FCMONO_LINALG_HPP
#define FCMONO_LINALG_HPP

#include <Eigen/Core>

#include <bit>
#include <stdexcept>
#include <vector>

#include "fcmono/scalars.hpp"

namespace fcmono {

template <class S>
using MatrixOf = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VectorOf = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
MatrixOf<S> identity_matrix(Eigen::Index n) {
    MatrixOf<S> E = MatrixOf<S>::Constant(n, n, S(0L));
    for (Eigen::Index i = 0; i < n; ++i) E(i, i) = S(1L);
    return E;
}

template <class S>
MatrixOf<S> dualize_matrix(const MatrixOf<S>& A) {
    MatrixOf<S> B(A.rows(), A.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) B(i, j) = dualize(A(i, j));
    return B;
}

template <class S>
VectorOf<S> dualize_vector(const VectorOf<S>& v) {
    VectorOf<S> w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = dualize(v(i));
    return w;
}

template <class S>
double matrix_max_magnitude(const MatrixOf<S>& A) {
    double r = 0.0;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) r = std::max(r, magnitude(A(i, j)));
    return r;
}

// Common denominator of a row, used to turn an exact matrix into a
// polynomial one before Bareiss elimination (divided_by keeps it close
// to an lcm without gcd machinery). Numeric scalars need no clearing.
template <class S>
S row_common_denominator(const MatrixOf<S>&, Eigen::Index) {
    return S(1L);
}

inline ExactScalar row_common_denominator(const MatrixOf<ExactScalar>& A, Eigen::Index i) {
    LaurentPoly D(1);
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        const LaurentPoly& d = A(i, j).den();
        if (d.is_one()) continue;
        if (D.divided_by(d)) continue;
        if (d.divided_by(D)) {
            D = d;
            continue;
        }
        D = D * d;
    }
    return ExactScalar(D);
}

template <class S>
S bareiss_determinant(MatrixOf<S> A, double tol);

// Determinant by fraction-free (Bareiss) elimination after clearing the
// denominators of each row; the interior divisions are then exact
// polynomial divisions, which keeps intermediate entries minor-sized.
// Partial pivoting by magnitude.
template <class S>
S determinant(MatrixOf<S> A, double tol = 0.0) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
    // Triangular matrices (structural zeros) need no elimination at all.
    bool upper = true, lower = true;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
            if (i > j && !is_zero(A(i, j), 0.0)) upper = false;
            if (i < j && !is_zero(A(i, j), 0.0)) lower = false;
        }
    if (upper || lower) {
        S det(1L);
        for (Eigen::Index i = 0; i < A.rows(); ++i) det = det * A(i, i);
        return det;
    }
    S row_scale(1L);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        S d = row_common_denominator(A, i);
        if (is_zero(S(d - S(1L)), tol)) continue;
        for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = A(i, j) * d;
        row_scale = row_scale * d;
    }
    if constexpr (std::is_same_v<S, ExactScalar>) {
        // Division-free Laplace expansion over column subsets. Each step
        // multiplies an original entry by a minor, which avoids the
        // minor-times-minor products of fraction-free elimination.
        const int n = int(A.rows());
        std::vector<S> dp(std::size_t(1) << n, S(0L));
        dp[0] = S(1L);
        for (std::size_t mask = 1; mask < dp.size(); ++mask) {
            const int k = std::popcount(mask);
            S acc(0L);
            int pos = 0;
            for (int j = 0; j < n; ++j) {
                if (!(mask >> j & 1)) continue;
                if (!is_zero(A(k - 1, j), 0.0)) {
                    S term = A(k - 1, j) * dp[mask ^ (std::size_t(1) << j)];
                    acc = (pos + k - 1) % 2 ? acc - term : acc + term;
                }
                ++pos;
            }
            dp[mask] = std::move(acc);
        }
        return dp.back() / row_scale;
    } else {
        return bareiss_determinant(std::move(A), tol) / row_scale;
    }
}

template <class S>
S bareiss_determinant(MatrixOf<S> A, double tol) {
    const Eigen::Index n = A.rows();
    if (n != A.cols()) throw std::invalid_argument("determinant: not square");
    S prev(1L);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index piv = -1;
        double best = tol;
        for (Eigen::Index i = k; i < n; ++i) {
            double w = magnitude(A(i, k));
            if (w > best || (piv < 0 && w > tol)) {
                best = w;
                piv = i;
            }
        }
        if (piv < 0) return S(0L);
        if (piv != k) {
            A.row(k).swap(A.row(piv));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
            A(i, k) = S(0L);
        }
        prev = A(k, k);
    }
    S det = A(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

// Gauss-Jordan inverse over the scalar field.
template <class S>
MatrixOf<S> inverse(MatrixOf<S> A, double tol = 0.0) {
    const Eigen::Index n = A.rows();
    if (n != A.cols()) throw std::invalid_argument("inverse: not square");
    MatrixOf<S> B = identity_matrix<S>(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = -1;
        double best = tol;
        for (Eigen::Index i = k; i < n; ++i) {
            double w = magnitude(A(i, k));
            if (w > best || (piv < 0 && w > tol)) {
                best = w;
                piv = i;
            }
        }
        if (piv < 0) throw std::runtime_error("inverse: singular matrix");
        if (piv != k) {
            A.row(k).swap(A.row(piv));
            B.row(k).swap(B.row(piv));
        }
        S inv_piv = scalar_inverse(A(k, k));
        for (Eigen::Index j = 0; j < n; ++j) {
            A(k, j) = A(k, j) * inv_piv;
            B(k, j) = B(k, j) * inv_piv;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == k) continue;
            S f = A(i, k);
            if (is_zero(f, tol)) continue;
            for (Eigen::Index j = 0; j < n; ++j) {
                A(i, j) = A(i, j) - f * A(k, j);
                B(i, j) = B(i, j) - f * B(k, j);
            }
        }
    }
    return B;
}

// Rank by row elimination with magnitude pivoting; tol separates zero
// from nonzero. Works for all three scalar backings.
template <class S>
int matrix_rank(MatrixOf<S> A, double tol) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    int rank = 0;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        double best = tol;
        for (Eigen::Index i = r; i < rows; ++i) {
            double w = magnitude(A(i, c));
            if (w > best || (piv < 0 && w > tol)) {
                best = w;
                piv = i;
            }
        }
        if (piv < 0) continue;
        if (piv != r) A.row(r).swap(A.row(piv));
        S inv_piv = scalar_inverse(A(r, c));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            S f = A(i, c) * inv_piv;
            if (is_zero(f, tol)) continue;
            for (Eigen::Index j = c; j < cols; ++j) A(i, j) = A(i, j) - f * A(r, j);
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace fcmono

#endif
