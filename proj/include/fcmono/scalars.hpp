#ifndef FCMONO_SCALARS_HPP
#define FCMONO_SCALARS_HPP

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcmono/laurent.hpp"

namespace fcmono {

struct DenominatorVanishes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Variable layout of the coefficient field C(alpha, beta, gamma_1, ..., gamma_m):
// slot 0 = alpha, slot 1 = beta, slot 2+k-1 = gamma_k.
inline constexpr int kAlphaVar = 0;
inline constexpr int kBetaVar = 1;
inline int gamma_var(int k) { return 1 + k; }

std::vector<std::string> field_var_names(int m);

// Element of C(alpha,beta,gamma) as an unreduced fraction of Laurent
// polynomials. No gcd machinery: equality goes through cross
// multiplication, and fractions are only simplified when one side
// happens to divide the other exactly.
class ExactScalar {
public:
    ExactScalar() : num_(), den_(1) {}
    ExactScalar(long v) : num_(v), den_(1) {}
    ExactScalar(const Rational& v) : num_(v), den_(1) {}
    ExactScalar(LaurentPoly num, LaurentPoly den);
    explicit ExactScalar(LaurentPoly num) : num_(std::move(num)), den_(1) {}

    static ExactScalar alpha() { return ExactScalar(LaurentPoly::monomial(1, kAlphaVar, 1)); }
    static ExactScalar beta() { return ExactScalar(LaurentPoly::monomial(1, kBetaVar, 1)); }
    static ExactScalar gamma(int k) { return ExactScalar(LaurentPoly::monomial(1, gamma_var(k), 1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    // Cross-multiplication equality: a/b == c/d iff ad - cb == 0.
    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // alpha, beta, gamma_k -> their inverses.
    ExactScalar dualized() const { return ExactScalar(num_.dualized(), den_.dualized()); }

    ExactScalar inverse() const;
    ExactScalar pow(int e) const;

    // values = (alpha, beta, gamma_1, ..., gamma_m).
    std::complex<double> evaluate(const std::vector<std::complex<double>>& values,
                                  double eps = 1e-9) const;

    // Canonical "num/den" text form: integer coefficients, content 1,
    // den's lex-first coefficient positive, monomials in lex order.
    std::string to_string() const;
    static ExactScalar from_string(const std::string& s);

private:
    void reduce();
    LaurentPoly num_, den_;
};

inline ExactScalar dualize(const ExactScalar& s) { return s.dualized(); }
inline bool is_zero(const ExactScalar& s, double = 0.0) { return s.is_zero(); }

// Numeric realization of an element of the coefficient field at a fixed
// parameter point: the value at p together with the value at the
// inverted point p^v. The ∨-involution is then just a component swap,
// which is sound because it is a field homomorphism.
struct PairedNumericScalar {
    std::complex<double> value{0.0, 0.0};
    std::complex<double> dual_value{0.0, 0.0};

    PairedNumericScalar() = default;
    PairedNumericScalar(long v) : value(double(v), 0.0), dual_value(double(v), 0.0) {}
    PairedNumericScalar(std::complex<double> v, std::complex<double> d) : value(v), dual_value(d) {}

    PairedNumericScalar operator+(const PairedNumericScalar& o) const {
        return {value + o.value, dual_value + o.dual_value};
    }
    PairedNumericScalar operator-(const PairedNumericScalar& o) const {
        return {value - o.value, dual_value - o.dual_value};
    }
    PairedNumericScalar operator*(const PairedNumericScalar& o) const {
        return {value * o.value, dual_value * o.dual_value};
    }
    PairedNumericScalar operator/(const PairedNumericScalar& o) const {
        return {value / o.value, dual_value / o.dual_value};
    }
    PairedNumericScalar operator-() const { return {-value, -dual_value}; }
    PairedNumericScalar& operator+=(const PairedNumericScalar& o) { return *this = *this + o; }
    PairedNumericScalar& operator-=(const PairedNumericScalar& o) { return *this = *this - o; }
    PairedNumericScalar& operator*=(const PairedNumericScalar& o) { return *this = *this * o; }
    bool operator==(const PairedNumericScalar& o) const {
        return value == o.value && dual_value == o.dual_value;
    }
    PairedNumericScalar inverse() const { return {1.0 / value, 1.0 / dual_value}; }
    PairedNumericScalar pow(int e) const;

    double abs_max() const;
};

inline PairedNumericScalar dualize(const PairedNumericScalar& s) {
    return {s.dual_value, s.value};
}
inline bool is_zero(const PairedNumericScalar& s, double tol = 1e-9) {
    return s.abs_max() < tol;
}

inline bool is_zero(const std::complex<double>& s, double tol = 1e-9) {
    return std::abs(s) < tol;
}

// Magnitude hooks used by the generic linear algebra for pivoting and
// residual reporting. Exact scalars only distinguish zero from nonzero.
inline double magnitude(const ExactScalar& s) { return s.is_zero() ? 0.0 : 1.0; }
inline double magnitude(const PairedNumericScalar& s) { return s.abs_max(); }
inline double magnitude(const std::complex<double>& s) { return std::abs(s); }

inline ExactScalar scalar_inverse(const ExactScalar& s) { return s.inverse(); }
inline PairedNumericScalar scalar_inverse(const PairedNumericScalar& s) { return s.inverse(); }
inline std::complex<double> scalar_inverse(const std::complex<double>& s) { return 1.0 / s; }

}  // namespace fcmono

namespace Eigen {

template <>
struct NumTraits<fcmono::ExactScalar> {
    typedef fcmono::ExactScalar Real;
    typedef fcmono::ExactScalar NonInteger;
    typedef fcmono::ExactScalar Nested;
    typedef fcmono::ExactScalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 200,
        MulCost = 200
    };
    static inline Real epsilon() { return fcmono::ExactScalar(0L); }
    static inline Real dummy_precision() { return fcmono::ExactScalar(0L); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<fcmono::PairedNumericScalar> {
    typedef fcmono::PairedNumericScalar Real;
    typedef fcmono::PairedNumericScalar NonInteger;
    typedef fcmono::PairedNumericScalar Nested;
    typedef fcmono::PairedNumericScalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8
    };
    static inline Real epsilon() { return fcmono::PairedNumericScalar(0L); }
    static inline Real dummy_precision() { return fcmono::PairedNumericScalar(0L); }
    static inline int digits10() { return 15; }
};

}  // namespace Eigen

#endif
