#ifndef FCMONO_MONODROMY_HPP
#define FCMONO_MONODROMY_HPP

#include <utility>
#include <vector>

#include "fcmono/indexing.hpp"
#include "fcmono/linalg.hpp"

namespace fcmono {

// Tensor product with blocks A*b_ij (the usual Kronecker product with
// the roles of the factors swapped). This ordering makes the k-th
// 2x2 slot act on bit k of the row index, bit 1 least significant.
template <class S>
MatrixOf<S> tensor(const MatrixOf<S>& A, const MatrixOf<S>& B) {
    const Eigen::Index ra = A.rows(), ca = A.cols(), rb = B.rows(), cb = B.cols();
    MatrixOf<S> T(ra * rb, ca * cb);
    for (Eigen::Index ib = 0; ib < rb; ++ib)
        for (Eigen::Index jb = 0; jb < cb; ++jb)
            for (Eigen::Index ia = 0; ia < ra; ++ia)
                for (Eigen::Index ja = 0; ja < ca; ++ja)
                    T(ib * ra + ia, jb * ca + ja) = A(ia, ja) * B(ib, jb);
    return T;
}

template <class F>
typename F::Scalar gamma_product(const F& field, const BinaryIndex& I) {
    typename F::Scalar p(1L);
    for (int k = 1; k <= field.m; ++k)
        if (I.bit(k)) p = p * field.gamma(k);
    return p;
}

template <class F>
typename F::Scalar gamma_product_all(const F& field) {
    return gamma_product(field, BinaryIndex::ones(field.m));
}

// lambda = (-1)^(m-1) alpha^-1 beta^-1 prod gamma_k, the distinguished
// eigenvalue of the circuit matrix around the hypersurface R(x)=0.
template <class F>
typename F::Scalar lambda_eigenvalue(const F& field) {
    using S = typename F::Scalar;
    S l = gamma_product_all(field) / (field.alpha() * field.beta());
    if (field.m % 2 == 0) l = -l;
    return l;
}

template <class F>
MatrixOf<typename F::Scalar> build_Gk(const F& field, int k) {
    using S = typename F::Scalar;
    MatrixOf<S> G = identity_matrix<S>(2);
    G(1, 1) = scalar_inverse(field.gamma(k));
    return G;
}

template <class F>
MatrixOf<typename F::Scalar> build_Qk(const F& field, int k) {
    using S = typename F::Scalar;
    MatrixOf<S> Q(2, 2);
    Q(0, 0) = S(1L) - field.gamma(k);
    Q(0, 1) = S(1L);
    Q(1, 0) = S(0L);
    Q(1, 1) = S(1L);
    return Q;
}

template <class F>
MatrixOf<typename F::Scalar> build_tilde_Gk(const F& field, int k) {
    using S = typename F::Scalar;
    MatrixOf<S> G(2, 2);
    S gi = scalar_inverse(field.gamma(k));
    G(0, 0) = S(1L);
    G(0, 1) = -gi;
    G(1, 0) = S(0L);
    G(1, 1) = gi;
    return G;
}

// E_2 x ... x slot (k-th) x ... x E_2 in the swapped tensor order.
template <class S>
MatrixOf<S> slot_product(int m, int k, const MatrixOf<S>& slot) {
    MatrixOf<S> T = (k == 1) ? slot : identity_matrix<S>(2);
    for (int j = 2; j <= m; ++j) T = tensor(T, j == k ? slot : identity_matrix<S>(2));
    return T;
}

template <class F>
MatrixOf<typename F::Scalar> build_Mk(const F& field, int k) {
    return slot_product(field.m, k, build_Gk(field, k));
}

template <class F>
MatrixOf<typename F::Scalar> build_tilde_Mk(const F& field, int k) {
    return slot_product(field.m, k, build_tilde_Gk(field, k));
}

template <class F>
MatrixOf<typename F::Scalar> build_Pm(const F& field) {
    using S = typename F::Scalar;
    MatrixOf<S> P = build_Qk(field, 1);
    for (int k = 2; k <= field.m; ++k) P = tensor(P, build_Qk(field, k));
    return P;
}

// Block recursion P_m = [[(1-gamma_m) P_{m-1}, P_{m-1}], [0, P_{m-1}]].
template <class F>
MatrixOf<typename F::Scalar> build_Pm_recursive(const F& field) {
    using S = typename F::Scalar;
    MatrixOf<S> P = build_Qk(field, 1);
    for (int k = 2; k <= field.m; ++k) {
        const Eigen::Index n = P.rows();
        MatrixOf<S> Q = MatrixOf<S>::Constant(2 * n, 2 * n, S(0L));
        S c = S(1L) - field.gamma(k);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                Q(i, j) = P(i, j) * c;
                Q(i, n + j) = P(i, j);
                Q(n + i, n + j) = P(i, j);
            }
        P = std::move(Q);
    }
    return P;
}

// Diagonal entry H_{I,I} of the intersection matrix.
template <class F>
typename F::Scalar intersection_entry(const F& field, const BinaryIndex& I) {
    using S = typename F::Scalar;
    S prod(1L);
    for (int k = 1; k <= field.m; ++k) {
        S g = field.gamma(k);
        S num = I.bit(k) ? S(-1L) : g;
        prod = prod * (num / (g - S(1L)));
    }
    S gI = gamma_product(field, I);
    S gall = gamma_product_all(field);
    S al = field.alpha(), be = field.beta();
    return prod * ((al - gI) * (be - gI)) / ((al - gall) * (be - S(1L)));
}

template <class F>
MatrixOf<typename F::Scalar> build_H(const F& field) {
    using S = typename F::Scalar;
    const Eigen::Index n = Eigen::Index(1) << field.m;
    MatrixOf<S> H = MatrixOf<S>::Constant(n, n, S(0L));
    for (const auto& I : all_indices(field.m)) H(I.position(), I.position()) = intersection_entry(field, I);
    return H;
}

// M_0 = E - (beta-1)(alpha-prod gamma)/(alpha beta) * 1.t1.H, with the
// scalar factor folded into H entrywise so the (alpha - prod gamma)
// denominator of H cancels and the build stays valid when lambda = 1.
template <class F>
MatrixOf<typename F::Scalar> build_M0(const F& field) {
    using S = typename F::Scalar;
    const int m = field.m;
    const Eigen::Index n = Eigen::Index(1) << m;
    S al = field.alpha(), be = field.beta();
    MatrixOf<S> M = identity_matrix<S>(n);
    for (const auto& I : all_indices(m)) {
        S prod(1L);
        for (int k = 1; k <= m; ++k) {
            S g = field.gamma(k);
            S num = I.bit(k) ? S(-1L) : g;
            prod = prod * (num / (g - S(1L)));
        }
        S gI = gamma_product(field, I);
        S u = prod * ((al - gI) * (be - gI)) / (al * be);
        for (Eigen::Index j = 0; j < n; ++j) M(j, I.position()) -= u;
    }
    return M;
}

// Entries of the column vector v with N_0 = t(0,...,0,v), tM_0 = E - N_0.
template <class F>
VectorOf<typename F::Scalar> build_v(const F& field) {
    using S = typename F::Scalar;
    const int m = field.m;
    const Eigen::Index n = Eigen::Index(1) << m;
    S al = field.alpha(), be = field.beta();
    S ab = al * be;
    VectorOf<S> v(n);
    for (const auto& I : all_indices(m)) {
        if (I.position() == 0) {
            S e = (al - S(1L)) * (be - S(1L)) * gamma_product_all(field) / ab;
            if (m % 2 == 1) e = -e;
            v(0) = e;
        } else {
            S gI = gamma_product(field, I);
            S inner = I.weight() % 2 == 0 ? ab + gI : ab - gI;
            S tail(1L);
            for (int k = 1; k <= m; ++k)
                if (!I.bit(k)) tail = tail * field.gamma(k);
            S e = inner * tail / ab;
            if ((m + I.weight()) % 2 == 1) e = -e;
            v(I.position()) = e;
        }
    }
    return v;
}

template <class F>
std::pair<MatrixOf<typename F::Scalar>, VectorOf<typename F::Scalar>> build_tilde_M0(
    const F& field) {
    using S = typename F::Scalar;
    const Eigen::Index n = Eigen::Index(1) << field.m;
    VectorOf<S> v = build_v(field);
    MatrixOf<S> M = identity_matrix<S>(n);
    for (Eigen::Index j = 0; j < n; ++j) M(n - 1, j) -= v(j);
    return {std::move(M), std::move(v)};
}

// Closed-form entries of tH; defined even at gamma_k = 1, unlike the
// congruence tP H P^v it agrees with generically.
template <class F>
MatrixOf<typename F::Scalar> build_tilde_H(const F& field) {
    using S = typename F::Scalar;
    const int m = field.m;
    const Eigen::Index n = Eigen::Index(1) << m;
    S al = field.alpha(), be = field.beta();
    S gall = gamma_product_all(field);
    MatrixOf<S> Ht(n, n);
    for (const auto& I : all_indices(m)) {
        for (const auto& Ip : all_indices(m)) {
            BinaryIndex II = meet(I, Ip);
            S entry(1L);
            int sign = 0;
            if (II.position() == 0) {
                for (int k = 1; k <= m; ++k) {
                    S g = field.gamma(k);
                    if (Ip.bit(k)) {
                        entry = entry * g;
                        ++sign;
                    }
                    if (I.bit(k) == 0 && Ip.bit(k) == 0) entry = entry * (S(1L) - g);
                }
                entry = entry * ((al - S(1L)) / (al - gall));
            } else {
                S gII = gamma_product(field, II);
                S inner = II.weight() % 2 == 0 ? al * be + gII : al * be - gII;
                for (int k = 1; k <= m; ++k) {
                    S g = field.gamma(k);
                    if (Ip.bit(k) && !I.bit(k)) {
                        entry = entry * g;
                        ++sign;
                    }
                    if (!I.bit(k) && !Ip.bit(k)) entry = entry * (S(1L) - g);
                }
                entry = entry * (inner / ((al - gall) * (be - S(1L))));
            }
            if (sign % 2 == 1) entry = -entry;
            Ht(I.position(), Ip.position()) = entry;
        }
    }
    return Ht;
}

// Both sides of the summation identity over the lower set of I.
template <class F>
std::pair<typename F::Scalar, typename F::Scalar> sum_identity_check(const F& field,
                                                                     const BinaryIndex& I) {
    using S = typename F::Scalar;
    const int m = field.m;
    S ab = field.alpha() * field.beta();
    S lhs(0L);
    for (const auto& J : lower_set(I)) {
        S t1(1L), t2(1L);
        for (int k = 1; k <= m; ++k) {
            S g = field.gamma(k);
            if (J.bit(k)) {
                t2 = t2 * g * g;
            } else {
                t1 = t1 * g;
                t2 = t2 * g;
            }
        }
        S term = ab * t1 + t2;
        if (J.weight() % 2 == 1) term = -term;
        lhs += term;
    }
    S gI = gamma_product(field, I);
    S rhs = I.weight() % 2 == 0 ? ab + gI : ab - gI;
    for (int k = 1; k <= m; ++k) {
        S g = field.gamma(k);
        rhs = rhs * (I.bit(k) ? g - S(1L) : g);
    }
    return {lhs, rhs};
}

// Column vector of all ones (coordinates of f_0 in the F-basis).
template <class S>
VectorOf<S> ones_vector(int m) {
    return VectorOf<S>::Constant(Eigen::Index(1) << m, S(1L));
}

// e_v = t(0,...,0,1).
template <class S>
VectorOf<S> ev_vector(int m) {
    VectorOf<S> e = VectorOf<S>::Constant(Eigen::Index(1) << m, S(0L));
    e(e.size() - 1) = S(1L);
    return e;
}

// Columns tM_1^{i_1} ... tM_m^{i_m} e_v in position order; invertible
// with determinant prod gamma_k^{-2^{m-1}}.
template <class F>
MatrixOf<typename F::Scalar> build_basis_matrix(const F& field) {
    using S = typename F::Scalar;
    const int m = field.m;
    const Eigen::Index n = Eigen::Index(1) << m;
    std::vector<MatrixOf<S>> tM;
    for (int k = 1; k <= m; ++k) tM.push_back(build_tilde_Mk(field, k));
    MatrixOf<S> B(n, n);
    for (const auto& I : all_indices(m)) {
        VectorOf<S> col = ev_vector<S>(m);
        for (int k = 1; k <= m; ++k)
            if (I.bit(k)) col = tM[k - 1] * col;
        B.col(I.position()) = col;
    }
    return B;
}

// A loop word in the generators rho_0, ..., rho_m with optional inverses,
// listed in traversal order.
struct LoopStep {
    int generator = 0;  // 0..m
    bool inverse = false;
};
using LoopWord = std::vector<LoopStep>;

enum class Basis { plain, tilde };

// Representation matrix of a word: analytic continuation composes as an
// anti-homomorphism, so the word rho_{w1} ... rho_{wn} maps to
// M_{wn} ... M_{w1}.
template <class F>
MatrixOf<typename F::Scalar> word_matrix(const F& field, const LoopWord& word, Basis basis) {
    using S = typename F::Scalar;
    const Eigen::Index n = Eigen::Index(1) << field.m;
    std::vector<MatrixOf<S>> gens;
    if (basis == Basis::plain) {
        gens.push_back(build_M0(field));
        for (int k = 1; k <= field.m; ++k) gens.push_back(build_Mk(field, k));
    } else {
        gens.push_back(build_tilde_M0(field).first);
        for (int k = 1; k <= field.m; ++k) gens.push_back(build_tilde_Mk(field, k));
    }
    MatrixOf<S> W = identity_matrix<S>(n);
    for (const auto& step : word) {
        if (step.generator < 0 || step.generator > field.m)
            throw std::invalid_argument("word_matrix: generator label out of range");
        const MatrixOf<S>& G = gens[step.generator];
        W = (step.inverse ? MatrixOf<S>(inverse(G, field.tol()) * W) : MatrixOf<S>(G * W));
    }
    return W;
}

// Basis of ker t(0,...,0,v) = ker tv, built by pivoting on a nonzero
// entry of v: 2^m - 1 vectors for v != 0, the full coordinate basis
// for v = 0.
template <class S>
std::vector<VectorOf<S>> rank_one_kernel(const VectorOf<S>& v, double tol = 0.0) {
    const Eigen::Index n = v.size();
    Eigen::Index piv = -1;
    double best = tol;
    for (Eigen::Index i = 0; i < n; ++i) {
        double w = magnitude(v(i));
        if (w > best) {
            best = w;
            piv = i;
        }
    }
    std::vector<VectorOf<S>> basis;
    if (piv < 0) {
        for (Eigen::Index i = 0; i < n; ++i) {
            VectorOf<S> e = VectorOf<S>::Constant(n, S(0L));
            e(i) = S(1L);
            basis.push_back(std::move(e));
        }
        return basis;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i == piv) continue;
        VectorOf<S> w = VectorOf<S>::Constant(n, S(0L));
        w(i) = v(piv);
        w(piv) = -v(i);
        basis.push_back(std::move(w));
    }
    return basis;
}

}  // namespace fcmono

#endif
