#ifndef FCMONO_FIELDS_HPP
#define FCMONO_FIELDS_HPP

#include <complex>
#include <vector>

#include "fcmono/scalars.hpp"

namespace fcmono {

// A field context hands the matrix builders their scalar type and the
// distinguished generators alpha, beta, gamma_k.

struct ExactField {
    using Scalar = ExactScalar;
    int m;

    Scalar alpha() const { return ExactScalar::alpha(); }
    Scalar beta() const { return ExactScalar::beta(); }
    Scalar gamma(int k) const { return ExactScalar::gamma(k); }
    double tol() const { return 0.0; }
};

// Numeric field at a fixed point (alpha0, beta0, gamma0); every scalar
// carries its value at the inverted point alongside, so dualize works.
struct PairedField {
    using Scalar = PairedNumericScalar;
    int m;
    std::vector<std::complex<double>> gen;  // [alpha, beta, gamma_1, ..., gamma_m]
    double tolerance = 1e-9;

    PairedField(int m_, std::vector<std::complex<double>> generators, double tol_ = 1e-9)
        : m(m_), gen(std::move(generators)), tolerance(tol_) {}

    Scalar alpha() const { return {gen[0], 1.0 / gen[0]}; }
    Scalar beta() const { return {gen[1], 1.0 / gen[1]}; }
    Scalar gamma(int k) const { return {gen[1 + k], 1.0 / gen[1 + k]}; }
    double tol() const { return tolerance; }
};

// Plain complex field for classification work that never needs the
// involution.
struct ComplexField {
    using Scalar = std::complex<double>;
    int m;
    std::vector<std::complex<double>> gen;
    double tolerance = 1e-9;

    ComplexField(int m_, std::vector<std::complex<double>> generators, double tol_ = 1e-9)
        : m(m_), gen(std::move(generators)), tolerance(tol_) {}

    Scalar alpha() const { return gen[0]; }
    Scalar beta() const { return gen[1]; }
    Scalar gamma(int k) const { return gen[1 + k]; }
    double tol() const { return tolerance; }
};

}  // namespace fcmono

#endif
