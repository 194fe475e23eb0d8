#ifndef FCMONO_SERIES_HPP
#define FCMONO_SERIES_HPP

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "fcmono/classify.hpp"
#include "fcmono/indexing.hpp"

namespace fcmono {

struct GammaPole : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PochhammerPole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point in C^m; the base point is (1/(2m^2), ..., 1/(2m^2)).
struct EvaluationPoint {
    std::vector<std::complex<double>> x;

    static EvaluationPoint base_point(int m) {
        EvaluationPoint p;
        p.x.assign(m, std::complex<double>(1.0 / (2.0 * m * m), 0.0));
        return p;
    }
    int m() const { return (int)x.size(); }
};

// sum sqrt|x_k| < 1 (the convergence domain D_C).
bool in_domain(const EvaluationPoint& x);

// prod x_k * R(x), R the product of 1 + sum eps_k sqrt(x_k) over all
// sign patterns; a polynomial in x, so the sqrt branch drops out.
std::complex<double> singular_locus_value(const EvaluationPoint& x);

// Gamma(z) by Lanczos approximation with reflection for Re z < 1/2.
std::complex<double> complex_gamma(std::complex<double> z);

// Truncated F_C coefficient table: coeff[(n_1..n_m)] for sum n_k <= N,
// plus the per-coordinate prefactor exponents i_k(1-c_k) recorded
// exactly when a solution F_I is being represented.
struct TruncatedSeries {
    int m = 0;
    int order = 0;  // total-degree truncation N
    std::map<std::vector<int>, std::complex<double>> coeff;
    std::vector<std::complex<double>> prefactor_exponents;  // per coordinate, may be empty

    std::complex<double> evaluate(const EvaluationPoint& x) const;
    // magnitude of the top total-degree shell, a heuristic tail estimate
    double last_shell_magnitude() const;
};

// Coefficients of F_C(a,b,c;x) up to total degree N. Pochhammer symbols
// are accumulated by ascending products.
TruncatedSeries fc_coefficients(std::complex<double> a, std::complex<double> b,
                                const std::vector<std::complex<double>>& c, int N);

std::complex<double> fc_series(std::complex<double> a, std::complex<double> b,
                               const std::vector<std::complex<double>>& c,
                               const EvaluationPoint& x, int N);

// The truncated series of the local solution F_I without its constant
// Gamma prefactor; prefactor_exponents holds i_k(1-c_k).
TruncatedSeries solution_series(const ParameterPoint& p, const BinaryIndex& I, int N);

// Full local solution value: Gamma prefactor * prod x_k^{i_k(1-c_k)}
// (principal branch) * truncated F_C with shifted parameters.
std::complex<double> solution_FI(const ParameterPoint& p, const BinaryIndex& I,
                                 const EvaluationPoint& x, int N);

// Largest coefficient magnitude, over the m operators
// theta_k(theta_k + c_k - 1) - x_k(theta + a)(theta + b) applied to the
// truncated solution series, among terms of total degree < N.
double pde_residual(const ParameterPoint& p, const BinaryIndex& I, int N);

// Exact-rational coefficient path: the residual is identically zero as
// a rational identity; returns true when every checked coefficient
// vanishes exactly. Requires exact rational parameters.
bool pde_residual_exact_zero(const ParameterPoint& p, const BinaryIndex& I, int N);

}  // namespace fcmono

#endif
