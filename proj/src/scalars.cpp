#include "fcmono/scalars.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace fcmono {

std::vector<std::string> field_var_names(int m) {
    std::vector<std::string> names = {"a", "b"};
    for (int k = 1; k <= m; ++k) names.push_back("g" + std::to_string(k));
    return names;
}

ExactScalar::ExactScalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DenominatorVanishes("ExactScalar: zero denominator");
    reduce();
}

void ExactScalar::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    if (num_ == den_) {
        num_ = LaurentPoly(1);
        den_ = LaurentPoly(1);
        return;
    }
    // Opportunistic cancellation only; no gcd.
    if (auto q = num_.divided_by(den_)) {
        num_ = *q;
        den_ = LaurentPoly(1);
        return;
    }
    if (auto q = den_.divided_by(num_)) {
        num_ = LaurentPoly(1);
        den_ = *q;
    }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return ExactScalar(num_ + o.num_, den_);
    if (auto q = den_.divided_by(o.den_))  // o.den | den
        return ExactScalar(num_ + o.num_ * *q, den_);
    if (auto q = o.den_.divided_by(den_))
        return ExactScalar(num_ * *q + o.num_, o.den_);
    return ExactScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator-() const {
    ExactScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (is_zero() || o.is_zero()) return ExactScalar();
    // Cancel syntactically identical cross factors before expanding; the
    // polynomial representation is canonical, so equal factors compare fast.
    if (num_ == o.den_) return ExactScalar(o.num_, den_);
    if (o.num_ == den_) return ExactScalar(num_, o.den_);
    return ExactScalar(num_ * o.num_, den_ * o.den_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.is_zero()) throw DenominatorVanishes("ExactScalar: division by zero");
    if (is_zero()) return ExactScalar();
    // Shared components divide out without forming the large cross products.
    if (num_ == o.num_ && den_ == o.den_) return ExactScalar(1L);
    if (den_ == o.den_) return ExactScalar(num_, o.num_);
    if (num_ == o.num_) return ExactScalar(o.den_, den_);
    return ExactScalar(num_ * o.den_, den_ * o.num_);
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw DenominatorVanishes("ExactScalar: inverse of zero");
    return ExactScalar(den_, num_);
}

ExactScalar ExactScalar::pow(int e) const {
    ExactScalar base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    ExactScalar r(1L);
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

std::complex<double> ExactScalar::evaluate(const std::vector<std::complex<double>>& values,
                                           double eps) const {
    std::complex<double> d = den_.evaluate(values);
    if (std::abs(d) < eps) throw DenominatorVanishes("ExactScalar::evaluate: denominator vanishes");
    return num_.evaluate(values) / d;
}

std::string ExactScalar::to_string() const {
    if (num_.is_zero()) return "0/1";
    // Scale so that all coefficients are integers with overall content 1
    // and the denominator's lex-first coefficient is positive.
    mpz_class g(0), l(1);
    num_.coefficient_content(g, l);
    den_.coefficient_content(g, l);
    Rational scale(l, g);
    scale.canonicalize();
    if (den_.leading_sign() < 0) scale = -scale;
    LaurentPoly n = num_.scaled(scale);
    LaurentPoly d = den_.scaled(scale);
    // enough names for any exponent vector present
    std::size_t nv = 0;
    for (const auto& [e, c] : n.terms()) nv = std::max(nv, e.size());
    for (const auto& [e, c] : d.terms()) nv = std::max(nv, e.size());
    std::vector<std::string> names = field_var_names(std::max<int>(0, int(nv) - 2));
    return n.to_string(names) + "/" + d.to_string(names);
}

namespace {

int var_index_from_name(const std::string& name) {
    if (name == "a") return kAlphaVar;
    if (name == "b") return kBetaVar;
    if (name.size() >= 2 && name[0] == 'g') return gamma_var(std::stoi(name.substr(1)));
    throw std::invalid_argument("ExactScalar::from_string: unknown variable " + name);
}

LaurentPoly parse_poly(const std::string& s) {
    LaurentPoly p;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    int sign = 1;
    skip_ws();
    while (i < s.size()) {
        skip_ws();
        if (s[i] == '+') { sign = 1; ++i; skip_ws(); }
        else if (s[i] == '-') { sign = -1; ++i; skip_ws(); }
        // integer coefficient
        std::size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("ExactScalar::from_string: expected coefficient");
        Rational c(mpz_class(s.substr(i, j - i)), 1);
        if (sign < 0) c = -c;
        i = j;
        LaurentPoly::Exponents exps;
        while (i < s.size() && s[i] == '*') {
            ++i;
            std::size_t k = i;
            while (k < s.size() && (std::isalnum((unsigned char)s[k]))) ++k;
            std::string name = s.substr(i, k - i);
            i = k;
            if (i >= s.size() || s[i] != '^')
                throw std::invalid_argument("ExactScalar::from_string: expected ^");
            ++i;
            std::size_t e0 = i;
            if (i < s.size() && s[i] == '-') ++i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            int e = std::stoi(s.substr(e0, i - e0));
            int vi = var_index_from_name(name);
            if ((int)exps.size() <= vi) exps.resize(vi + 1, 0);
            exps[vi] += e;
        }
        p.add_term(exps, c);
        skip_ws();
        sign = 1;
    }
    return p;
}

}  // namespace

ExactScalar ExactScalar::from_string(const std::string& s) {
    auto slash = s.rfind('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("ExactScalar::from_string: missing /");
    return ExactScalar(parse_poly(s.substr(0, slash)), parse_poly(s.substr(slash + 1)));
}

PairedNumericScalar PairedNumericScalar::pow(int e) const {
    PairedNumericScalar base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    PairedNumericScalar r(1L);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

double PairedNumericScalar::abs_max() const {
    return std::max(std::abs(value), std::abs(dual_value));
}

}  // namespace fcmono
