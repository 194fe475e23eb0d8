#ifndef FCMONO_LAURENT_HPP
#define FCMONO_LAURENT_HPP

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fcmono {

using Rational = mpq_class;

// Sparse Laurent polynomial with exact rational coefficients.
// Exponent vectors may have different lengths across terms; missing
// trailing entries are treated as zero, so constants are compatible
// with any number of variables.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;  // lex order on exponent vectors

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    explicit LaurentPoly(long c);

    // c * x_var^e
    static LaurentPoly monomial(const Rational& c, int var, int e);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // x_i -> x_i^{-1} for every variable (exponent negation).
    LaurentPoly dualized() const;

    // Exact quotient this/d, or nullopt when d does not divide this.
    std::optional<LaurentPoly> divided_by(const LaurentPoly& d) const;

    std::complex<double> evaluate(const std::vector<std::complex<double>>& values) const;

    // Multiply all coefficients by r.
    LaurentPoly scaled(const Rational& r) const;

    // lcm of coefficient denominators and gcd of numerators, for content
    // normalization across a num/den pair.
    void coefficient_content(mpz_class& num_gcd, mpz_class& den_lcm) const;

    // Sign of the coefficient of the lex-smallest monomial (0 if zero poly).
    int leading_sign() const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    static Exponents trimmed(Exponents e);
    TermMap terms_;
};

}  // namespace fcmono

#endif
