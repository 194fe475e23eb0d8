#include "fcmono/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fcmono {

LaurentPoly::Exponents LaurentPoly::trimmed(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[{}] = Rational(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int var, int e) {
    LaurentPoly p;
    if (c == 0) return p;
    Exponents ex;
    if (e != 0) {
        ex.assign(var + 1, 0);
        ex[var] = e;
    }
    p.terms_[trimmed(ex)] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    Exponents key = trimmed(e);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(std::max(e1.size(), e2.size()), 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            r.add_term(e, Rational(c1 * c2));
        }
    }
    return r;
}

LaurentPoly LaurentPoly::dualized() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents ne(e);
        for (auto& x : ne) x = -x;
        r.terms_[trimmed(ne)] = c;
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& r) const {
    LaurentPoly p;
    if (r == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_[e] = c * r;
    return p;
}

std::optional<LaurentPoly> LaurentPoly::divided_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly();
    // Shift both operands so all exponents are non-negative; then trimmed
    // lex order is a genuine monomial order and leading-term division
    // terminates. The quotient is unshifted at the end.
    std::size_t nv = 0;
    for (const auto& [e, c] : terms_) nv = std::max(nv, e.size());
    for (const auto& [e, c] : d.terms_) nv = std::max(nv, e.size());
    Exponents shift_n(nv, 0), shift_d(nv, 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i) shift_n[i] = std::min(shift_n[i], e[i]);
    for (const auto& [e, c] : d.terms_)
        for (std::size_t i = 0; i < e.size(); ++i) shift_d[i] = std::min(shift_d[i], e[i]);

    auto shifted = [nv](const LaurentPoly& p, const Exponents& s) {
        LaurentPoly r;
        for (const auto& [e, c] : p.terms_) {
            Exponents ne(nv, 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i];
            for (std::size_t i = 0; i < nv; ++i) ne[i] -= s[i];
            r.terms_[trimmed(ne)] = c;
        }
        return r;
    };
    LaurentPoly rem = shifted(*this, shift_n);
    LaurentPoly div = shifted(d, shift_d);

    const auto& dlead = *div.terms_.rbegin();
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exponents qe(nv, 0);
        for (std::size_t i = 0; i < nv; ++i) {
            int re = i < rlead.first.size() ? rlead.first[i] : 0;
            int de = i < dlead.first.size() ? dlead.first[i] : 0;
            qe[i] = re - de;
            if (qe[i] < 0) return std::nullopt;  // leading term not divisible
        }
        Rational qc(rlead.second / dlead.second);
        LaurentPoly qt;
        qt.terms_[trimmed(qe)] = qc;
        quot = quot + qt;
        rem = rem - qt * div;
    }
    // Undo the shifts: this = rem0 * x^shift_n, d = div0 * x^shift_d, so
    // the quotient of the originals is quot * x^(shift_n - shift_d).
    Exponents back(nv, 0);
    bool trivial = true;
    for (std::size_t i = 0; i < nv; ++i) {
        back[i] = shift_n[i] - shift_d[i];
        if (back[i] != 0) trivial = false;
    }
    if (trivial) return quot;
    LaurentPoly shift_mono;
    shift_mono.terms_[trimmed(back)] = Rational(1);
    return quot * shift_mono;
}

std::complex<double> LaurentPoly::evaluate(const std::vector<std::complex<double>>& values) const {
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(c.get_d(), 0.0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= values.size()) throw std::invalid_argument("LaurentPoly::evaluate: missing value");
            std::complex<double> base = values[i];
            int ex = e[i];
            if (ex < 0) {
                base = 1.0 / base;
                ex = -ex;
            }
            std::complex<double> pw(1.0, 0.0);
            for (int j = 0; j < ex; ++j) pw *= base;
            t *= pw;
        }
        sum += t;
    }
    return sum;
}

void LaurentPoly::coefficient_content(mpz_class& num_gcd, mpz_class& den_lcm) const {
    for (const auto& [e, c] : terms_) {
        mpz_class n = c.get_num();
        mpz_class d = c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
}

int LaurentPoly::leading_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.begin()->second);
}

std::string LaurentPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        os << ac.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << (i < var_names.size() ? var_names[i] : "x" + std::to_string(i))
               << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace fcmono
