#include "fcmono/io.hpp"

#include <cstdio>
#include <sstream>

namespace fcmono {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    return "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

std::string scalar_string(const ExactScalar& s) { return s.to_string(); }
std::string scalar_string(const PairedNumericScalar& s) { return format_complex(s.value); }
std::string scalar_string(const std::complex<double>& s) { return format_complex(s); }

MatrixOf<ExactScalar> exact_matrix_from_json(const Json& j) {
    const auto& rows = j.at("entries");
    const Eigen::Index n = (Eigen::Index)rows.size();
    MatrixOf<ExactScalar> M(n, n == 0 ? 0 : (Eigen::Index)rows[0].size());
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index jj = 0; jj < M.cols(); ++jj)
            M(i, jj) = ExactScalar::from_string(rows[i][jj].get<std::string>());
    return M;
}

namespace {

Json failure_to_json(const IrreducibilityFailure& f) {
    Json j;
    j["I"] = f.I.to_string();
    j["which"] = std::string(1, f.which);
    j["value"] = f.value;
    return j;
}

}  // namespace

Json classification_to_json(const ClassificationReport& rep) {
    Json j;
    j["irreducible"] = rep.irreducible;
    Json fails = Json::array();
    for (const auto& f : rep.failures) fails.push_back(failure_to_json(f));
    j["failures"] = std::move(fails);
    j["c_integral"] = rep.c_integral;
    j["lambda_is_one"] = rep.lambda_is_one;
    j["multiple_failures"] = rep.multiple_failures;
    if (rep.invariant_subspace) {
        const auto& d = *rep.invariant_subspace;
        Json s;
        s["basis"] = d.basis == SubspaceDescription::BasisLabel::F ? "F-basis" : "F'-basis";
        s["case"] = d.tag == SubspaceDescription::CaseTag::negative_integer
                        ? "negative-integer"
                        : "non-negative-integer";
        s["dimension"] = d.dimension;
        s["indices"] = d.indices;
        j["invariant_subspace"] = std::move(s);
    } else {
        j["invariant_subspace"] = nullptr;
    }
    return j;
}

std::string classification_table(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "irreducible: " << (rep.irreducible ? "yes" : "no") << "\n";
    for (const auto& f : rep.failures)
        os << "  violation: I=" << f.I.to_string() << " " << f.which << "^I = " << f.value << "\n";
    if (!rep.c_integral.empty()) {
        os << "  integer c_k:";
        for (int k : rep.c_integral) os << " c" << k;
        os << "\n";
    }
    if (rep.lambda_is_one) os << "  lambda = 1\n";
    if (rep.multiple_failures) os << "  multiple violations: no subspace constructed\n";
    if (rep.invariant_subspace) {
        const auto& d = *rep.invariant_subspace;
        os << "  invariant subspace: dim " << d.dimension << " in "
           << (d.basis == SubspaceDescription::BasisLabel::F ? "F-basis" : "F'-basis") << " ("
           << (d.tag == SubspaceDescription::CaseTag::negative_integer ? "negative integer"
                                                                       : "non-negative integer")
           << " case), spanned by positions";
        for (int i : d.indices) os << " " << i;
        os << "\n";
    }
    return os.str();
}

namespace {

const char* status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::exact_pass: return "exact-pass";
        case CheckResult::Status::numeric_pass: return "numeric-pass";
        default: return "fail";
    }
}

}  // namespace

Json verification_to_json(const VerificationReport& rep) {
    Json j;
    j["m"] = rep.m;
    j["backing"] = rep.backing == Backing::exact ? "exact" : "numeric";
    j["seed"] = rep.seed;
    j["all_passed"] = rep.all_passed();
    Json checks = Json::array();
    for (const auto& r : rep.results) {
        Json c;
        c["name"] = r.name;
        c["detail"] = r.detail;
        c["status"] = status_name(r.status);
        c["residual"] = format_double(r.residual);
        if (!r.witness.empty()) c["witness"] = r.witness;
        c["elapsed_seconds"] = format_double(r.elapsed_seconds);
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string verification_table(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& r : rep.results) {
        os << (r.status == CheckResult::Status::fail ? "FAIL " : "pass ") << r.name;
        if (rep.backing == Backing::numeric) os << "  residual=" << format_double(r.residual);
        if (!r.witness.empty()) os << "  [" << r.witness << "]";
        os << "\n";
    }
    os << (rep.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

Rational parse_rational(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        Rational r(s);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational r(s);
        r.canonicalize();
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    mpz_class num(digits, 10);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace fcmono
