#include "fcmono/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fcmono {

namespace {

// All (n_1..n_m) with sum <= N, graded by total degree.
std::vector<std::vector<int>> multi_indices(int m, int N) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m, 0);
    // count in mixed radix, filter by total degree
    while (true) {
        int total = 0;
        for (int v : cur) total += v;
        if (total <= N) out.push_back(cur);
        int k = 0;
        while (k < m) {
            if (++cur[k] <= N) break;
            cur[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int v : a) sa += v;
        for (int v : b) sb += v;
        return sa < sb;
    });
    return out;
}

constexpr double kGammaPoleTol = 1e-12;

}  // namespace

bool in_domain(const EvaluationPoint& x) {
    double s = 0.0;
    for (const auto& xk : x.x) s += std::sqrt(std::abs(xk));
    return s < 1.0;
}

std::complex<double> singular_locus_value(const EvaluationPoint& x) {
    const int m = x.m();
    std::vector<std::complex<double>> roots;
    for (const auto& xk : x.x) roots.push_back(std::sqrt(xk));
    std::complex<double> R(1.0, 0.0);
    for (int pattern = 0; pattern < (1 << m); ++pattern) {
        std::complex<double> s(1.0, 0.0);
        for (int k = 0; k < m; ++k) s += (pattern >> k) & 1 ? -roots[k] : roots[k];
        R *= s;
    }
    for (const auto& xk : x.x) R *= xk;
    return R;
}

std::complex<double> complex_gamma(std::complex<double> z) {
    // Lanczos, g = 7, 9 terms.
    static const double coef[9] = {
        0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,  12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (std::abs(z.imag()) < kGammaPoleTol) {
        double r = z.real();
        if (r <= 0.5 && std::abs(r - std::round(r)) < kGammaPoleTol)
            throw GammaPole("complex_gamma: pole at nonpositive integer");
    }
    if (z.real() < 0.5) {
        // reflection
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> a(coef[0], 0.0);
    std::complex<double> t = z + 7.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + double(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

std::complex<double> TruncatedSeries::evaluate(const EvaluationPoint& x) const {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [n, cval] : coeff) {
        std::complex<double> t = cval;
        for (int k = 0; k < m; ++k)
            for (int j = 0; j < n[k]; ++j) t *= x.x[k];
        sum += t;
    }
    return sum;
}

double TruncatedSeries::last_shell_magnitude() const {
    double s = 0.0;
    for (const auto& [n, cval] : coeff) {
        int total = 0;
        for (int v : n) total += v;
        if (total == order) s += std::abs(cval);
    }
    return s;
}

TruncatedSeries fc_coefficients(std::complex<double> a, std::complex<double> b,
                                const std::vector<std::complex<double>>& c, int N) {
    const int m = (int)c.size();
    TruncatedSeries T;
    T.m = m;
    T.order = N;
    for (const auto& n : multi_indices(m, N)) {
        int s = 0;
        for (int v : n) s += v;
        if (s == 0) {
            T.coeff[n] = 1.0;
            continue;
        }
        // step down the first nonzero coordinate
        int k = 0;
        while (n[k] == 0) ++k;
        std::vector<int> prev = n;
        --prev[k];
        std::complex<double> denom = (c[k] + double(n[k] - 1)) * double(n[k]);
        if (std::abs(c[k] + double(n[k] - 1)) < kGammaPoleTol)
            throw PochhammerPole("fc_coefficients: c_k hits a nonpositive integer");
        T.coeff[n] = T.coeff.at(prev) * (a + double(s - 1)) * (b + double(s - 1)) / denom;
    }
    return T;
}

std::complex<double> fc_series(std::complex<double> a, std::complex<double> b,
                               const std::vector<std::complex<double>>& c,
                               const EvaluationPoint& x, int N) {
    return fc_coefficients(a, b, c, N).evaluate(x);
}

TruncatedSeries solution_series(const ParameterPoint& p, const BinaryIndex& I, int N) {
    ShiftedParameters s = shifted_parameters(p, I);
    TruncatedSeries T = fc_coefficients(s.a, s.b, s.c, N);
    T.prefactor_exponents.resize(p.m);
    for (int k = 1; k <= p.m; ++k)
        T.prefactor_exponents[k - 1] = I.bit(k) ? 1.0 - p.c[k - 1] : 0.0;
    return T;
}

std::complex<double> solution_FI(const ParameterPoint& p, const BinaryIndex& I,
                                 const EvaluationPoint& x, int N) {
    ShiftedParameters s = shifted_parameters(p, I);
    std::complex<double> pref(1.0, 0.0);
    for (int k = 1; k <= p.m; ++k) {
        std::complex<double> arg = 1.0 - p.c[k - 1];
        if (I.bit(k)) arg = -arg;
        pref *= complex_gamma(arg);
    }
    pref /= complex_gamma(1.0 - s.a) * complex_gamma(1.0 - s.b);
    std::complex<double> power(1.0, 0.0);
    for (int k = 1; k <= p.m; ++k)
        if (I.bit(k)) power *= std::pow(x.x[k - 1], 1.0 - p.c[k - 1]);
    return pref * power * fc_coefficients(s.a, s.b, s.c, N).evaluate(x);
}

double pde_residual(const ParameterPoint& p, const BinaryIndex& I, int N) {
    TruncatedSeries T = solution_series(p, I, N);
    const int m = p.m;
    double residual = 0.0;
    for (int k = 0; k < m; ++k) {
        std::complex<double> mu = T.prefactor_exponents[k];
        for (const auto& [n, cval] : T.coeff) {
            int total = 0;
            for (int v : n) total += v;
            if (total >= N) continue;  // degree-N spillover from the x_k shift is excluded
            std::complex<double> theta_k = double(n[k]) + mu;
            std::complex<double> t1 = theta_k * (theta_k + p.c[k] - 1.0) * cval;
            std::complex<double> r = t1;
            // Backward-error scale: magnitudes of the product inputs before
            // cancellation, so rounding in exactly-cancelling sums (e.g.
            // mu_k + c_k - 1 = 0) is judged against the operand sizes.
            double scale = std::max(
                1.0, std::abs(theta_k) * (std::abs(theta_k) + std::abs(p.c[k] - 1.0)) *
                         std::abs(cval));
            if (n[k] > 0) {
                std::vector<int> prev = n;
                --prev[k];
                std::complex<double> theta(0.0, 0.0);
                double theta_mag = 0.0;
                for (int j = 0; j < m; ++j) {
                    std::complex<double> term = double(prev[j]) + T.prefactor_exponents[j];
                    theta += term;
                    theta_mag += std::abs(term);
                }
                std::complex<double> t2 = (theta + p.a) * (theta + p.b) * T.coeff.at(prev);
                r -= t2;
                scale = std::max(scale, (theta_mag + std::abs(p.a)) *
                                            (theta_mag + std::abs(p.b)) *
                                            std::abs(T.coeff.at(prev)));
            }
            residual = std::max(residual, std::abs(r) / scale);
        }
    }
    return residual;
}

bool pde_residual_exact_zero(const ParameterPoint& p, const BinaryIndex& I, int N) {
    if (!p.exact) throw std::invalid_argument("pde_residual_exact_zero: needs rational parameters");
    const int m = p.m;
    // shifted rational parameters
    ShiftedParameters s = shifted_parameters(p, I);
    std::vector<Rational> mu(m);
    for (int k = 1; k <= m; ++k) mu[k - 1] = I.bit(k) ? Rational(1 - p.c_rat[k - 1]) : Rational(0);

    std::map<std::vector<int>, Rational> coeff;
    for (const auto& n : multi_indices(m, N)) {
        int total = 0;
        for (int v : n) total += v;
        if (total == 0) {
            coeff[n] = 1;
            continue;
        }
        int k = 0;
        while (n[k] == 0) ++k;
        std::vector<int> prev = n;
        --prev[k];
        Rational cd = s.c_rat[k] + (n[k] - 1);
        if (cd == 0) throw PochhammerPole("pde_residual_exact_zero: Pochhammer pole");
        coeff[n] = coeff.at(prev) * (Rational(*s.a_rat) + (total - 1)) *
                   (Rational(*s.b_rat) + (total - 1)) / (cd * n[k]);
    }
    for (int k = 0; k < m; ++k) {
        for (const auto& [n, cval] : coeff) {
            int total = 0;
            for (int v : n) total += v;
            if (total >= N) continue;
            Rational theta_k = mu[k] + n[k];
            Rational r = theta_k * (theta_k + p.c_rat[k] - 1) * cval;
            if (n[k] > 0) {
                std::vector<int> prev = n;
                --prev[k];
                Rational theta(0);
                for (int j = 0; j < m; ++j) theta += mu[j] + prev[j];
                r -= (theta + p.a_rat) * (theta + p.b_rat) * coeff.at(prev);
            }
            if (r != 0) return false;
        }
    }
    return true;
}

}  // namespace fcmono
