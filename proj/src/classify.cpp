#include "fcmono/classify.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>

#include "fcmono/monodromy.hpp"

namespace fcmono {

namespace {

std::complex<double> unit_exp(std::complex<double> z) {
    // exp(2 pi i z)
    const double tau = 2.0 * std::numbers::pi;
    return std::exp(std::complex<double>(-tau * z.imag(), tau * z.real()));
}

bool is_integer_rat(const Rational& r) { return r.get_den() == 1; }

bool is_integer_numeric(std::complex<double> z, double tol) {
    return std::abs(z.imag()) < tol && std::abs(z.real() - std::round(z.real())) < tol;
}

}  // namespace

ParameterPoint ParameterPoint::from_rationals(const Rational& a, const Rational& b,
                                              std::vector<Rational> c) {
    ParameterPoint p;
    p.m = (int)c.size();
    p.exact = true;
    p.a_rat = a;
    p.b_rat = b;
    p.c_rat = std::move(c);
    p.a = a.get_d();
    p.b = b.get_d();
    for (const auto& ck : p.c_rat) p.c.emplace_back(ck.get_d(), 0.0);
    return p;
}

ParameterPoint ParameterPoint::from_complex(std::complex<double> a, std::complex<double> b,
                                            std::vector<std::complex<double>> c) {
    ParameterPoint p;
    p.m = (int)c.size();
    p.a = a;
    p.b = b;
    p.c = std::move(c);
    return p;
}

std::complex<double> ParameterPoint::alpha() const { return unit_exp(a); }
std::complex<double> ParameterPoint::beta() const { return unit_exp(b); }
std::complex<double> ParameterPoint::gamma(int k) const { return unit_exp(c[k - 1]); }

std::complex<double> ParameterPoint::lambda() const {
    std::complex<double> l = 1.0 / (alpha() * beta());
    for (int k = 1; k <= m; ++k) l *= gamma(k);
    return m % 2 == 1 ? l : -l;
}

std::vector<std::complex<double>> ParameterPoint::generator_values() const {
    std::vector<std::complex<double>> v = {alpha(), beta()};
    for (int k = 1; k <= m; ++k) v.push_back(gamma(k));
    return v;
}

ComplexField ParameterPoint::complex_field(double tol) const {
    return ComplexField(m, generator_values(), tol);
}

PairedField ParameterPoint::paired_field(double tol) const {
    return PairedField(m, generator_values(), tol);
}

ShiftedParameters shifted_parameters(const ParameterPoint& p, const BinaryIndex& I) {
    if (I.m() != p.m) throw std::invalid_argument("shifted_parameters: index size mismatch");
    ShiftedParameters s;
    s.a = p.a;
    s.b = p.b;
    s.c = p.c;
    for (int k = 1; k <= p.m; ++k) {
        if (!I.bit(k)) continue;
        std::complex<double> shift = 1.0 - p.c[k - 1];
        s.a += shift;
        s.b += shift;
        s.c[k - 1] = 2.0 - p.c[k - 1];
    }
    if (p.exact) {
        Rational ar = p.a_rat, br = p.b_rat;
        s.c_rat = p.c_rat;
        for (int k = 1; k <= p.m; ++k) {
            if (!I.bit(k)) continue;
            Rational shift = 1 - p.c_rat[k - 1];
            ar += shift;
            br += shift;
            s.c_rat[k - 1] = 2 - p.c_rat[k - 1];
        }
        s.a_rat = ar;
        s.b_rat = br;
    }
    return s;
}

std::vector<IrreducibilityFailure> irreducibility_failures(const ParameterPoint& p, double tol) {
    std::vector<IrreducibilityFailure> out;
    for (const auto& I : all_indices(p.m)) {
        ShiftedParameters s = shifted_parameters(p, I);
        if (p.exact) {
            if (is_integer_rat(*s.a_rat))
                out.push_back({I, 'a', s.a_rat->get_num().get_si()});
            if (is_integer_rat(*s.b_rat))
                out.push_back({I, 'b', s.b_rat->get_num().get_si()});
        } else {
            if (is_integer_numeric(s.a, tol))
                out.push_back({I, 'a', (long)std::llround(s.a.real())});
            if (is_integer_numeric(s.b, tol))
                out.push_back({I, 'b', (long)std::llround(s.b.real())});
        }
    }
    return out;
}

ClassificationReport classify(const ParameterPoint& p, double tol) {
    ClassificationReport rep;
    rep.failures = irreducibility_failures(p, tol);
    rep.irreducible = rep.failures.empty();
    for (int k = 1; k <= p.m; ++k) {
        bool integral = p.exact ? is_integer_rat(p.c_rat[k - 1])
                                : is_integer_numeric(p.c[k - 1], tol);
        if (integral) rep.c_integral.push_back(k);
    }
    rep.lambda_is_one = std::abs(p.lambda() - 1.0) < tol;
    if (rep.irreducible) return rep;
    if (rep.failures.size() > 1) {
        rep.multiple_failures = true;
        return rep;
    }
    if (!rep.c_integral.empty()) return rep;  // integral c_k: subspace construction does not apply
    const auto& f = rep.failures.front();
    SubspaceDescription d;
    const int n = 1 << p.m;
    if (f.value < 0) {
        d.basis = SubspaceDescription::BasisLabel::F;
        d.tag = SubspaceDescription::CaseTag::negative_integer;
        d.dimension = 1;
        d.indices = {f.I.position()};
    } else {
        d.basis = SubspaceDescription::BasisLabel::Fprime;
        d.tag = SubspaceDescription::CaseTag::non_negative_integer;
        d.dimension = n - 1;
        for (int j = 0; j < n; ++j)
            if (j != f.I.position()) d.indices.push_back(j);
    }
    rep.invariant_subspace = d;
    return rep;
}

std::vector<Eigen::MatrixXcd> numeric_generators(const ParameterPoint& p, double tol) {
    ComplexField field = p.complex_field(tol);
    std::vector<Eigen::MatrixXcd> gens;
    gens.push_back(build_M0(field));
    for (int k = 1; k <= p.m; ++k) gens.push_back(build_Mk(field, k));
    return gens;
}

double verify_invariant_subspace(const SubspaceDescription& desc, const ParameterPoint& p,
                                 double tol) {
    std::vector<Eigen::MatrixXcd> gens = numeric_generators(p, tol);
    if (desc.basis == SubspaceDescription::BasisLabel::Fprime) {
        // F' = F.H^{-1} turns M_i into H M_i H^{-1}; for the diagonal
        // generators that is a no-op and M_0 becomes its transpose.
        gens[0] = gens[0].transpose().eval();
    }
    const Eigen::Index n = gens[0].rows();
    std::vector<bool> inside(n, false);
    for (int j : desc.indices) inside[j] = true;
    double residual = 0.0;
    for (const auto& G : gens) {
        for (int j : desc.indices) {
            for (Eigen::Index i = 0; i < n; ++i)
                if (!inside[i]) residual = std::max(residual, std::abs(G(i, j)));
        }
    }
    return residual;
}

int algebra_dimension(const std::vector<Eigen::MatrixXcd>& generators, double tol) {
    if (generators.empty()) throw std::invalid_argument("algebra_dimension: no generators");
    const Eigen::Index n = generators[0].rows();
    const int max_dim = int(n * n);

    std::vector<Eigen::MatrixXcd> mults = generators;
    for (const auto& G : generators) mults.push_back(G.inverse());

    std::vector<Eigen::VectorXcd> ortho;  // orthonormal span basis (vectorized)
    std::vector<Eigen::MatrixXcd> members;

    auto try_add = [&](const Eigen::MatrixXcd& M) -> bool {
        Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(M.data(), n * n);
        double scale = v.norm();
        if (scale == 0.0) return false;
        v /= scale;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : ortho) v -= u.dot(v) * u;
        double r = v.norm();
        if (r > 1e-6) {
            ortho.push_back(v / r);
            members.push_back(M);
            return true;
        }
        if (r >= tol)
            throw RankToleranceAmbiguous("algebra_dimension: residual " + std::to_string(r) +
                                         " inside the tolerance band");
        return false;
    };

    try_add(Eigen::MatrixXcd::Identity(n, n));
    std::size_t frontier = 0;
    while (frontier < members.size() && (int)ortho.size() < max_dim) {
        std::size_t end = members.size();
        for (std::size_t i = frontier; i < end && (int)ortho.size() < max_dim; ++i) {
            for (const auto& G : mults) {
                try_add(G * members[i]);
                if ((int)ortho.size() >= max_dim) break;
            }
        }
        frontier = end;
    }
    return (int)ortho.size();
}

}  // namespace fcmono
