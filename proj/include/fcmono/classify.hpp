#ifndef FCMONO_CLASSIFY_HPP
#define FCMONO_CLASSIFY_HPP

#include <Eigen/Core>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcmono/fields.hpp"
#include "fcmono/indexing.hpp"
#include "fcmono/laurent.hpp"

namespace fcmono {

struct RankToleranceAmbiguous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Concrete parameters (a, b, c_1..c_m) with the derived exponentials.
// Exact rational inputs are the supported path for classification;
// complex inputs fall back to tolerance-based integrality tests.
struct ParameterPoint {
    int m = 0;
    std::complex<double> a, b;
    std::vector<std::complex<double>> c;

    bool exact = false;
    Rational a_rat, b_rat;
    std::vector<Rational> c_rat;

    static ParameterPoint from_rationals(const Rational& a, const Rational& b,
                                         std::vector<Rational> c);
    static ParameterPoint from_complex(std::complex<double> a, std::complex<double> b,
                                       std::vector<std::complex<double>> c);

    std::complex<double> alpha() const;
    std::complex<double> beta() const;
    std::complex<double> gamma(int k) const;  // 1-based
    std::complex<double> lambda() const;

    // [alpha, beta, gamma_1, ..., gamma_m] for the numeric fields.
    std::vector<std::complex<double>> generator_values() const;

    ComplexField complex_field(double tol = 1e-9) const;
    PairedField paired_field(double tol = 1e-9) const;
};

// a^I = a + sum i_k (1 - c_k), likewise b^I; c^I_k = c_k or 2 - c_k.
struct ShiftedParameters {
    std::complex<double> a, b;
    std::vector<std::complex<double>> c;
    std::optional<Rational> a_rat, b_rat;
    std::vector<Rational> c_rat;
};
ShiftedParameters shifted_parameters(const ParameterPoint& p, const BinaryIndex& I);

struct IrreducibilityFailure {
    BinaryIndex I;
    char which = 'a';     // 'a' or 'b'
    long value = 0;       // the integer a^I or b^I
};

std::vector<IrreducibilityFailure> irreducibility_failures(const ParameterPoint& p,
                                                           double tol = 1e-9);

struct SubspaceDescription {
    enum class BasisLabel { F, Fprime };
    enum class CaseTag { negative_integer, non_negative_integer };
    BasisLabel basis = BasisLabel::F;
    CaseTag tag = CaseTag::negative_integer;
    int dimension = 0;
    std::vector<int> indices;  // positions of the spanning solutions
};

struct ClassificationReport {
    bool irreducible = true;
    std::vector<IrreducibilityFailure> failures;
    std::vector<int> c_integral;  // which c_k are integers (1-based)
    bool lambda_is_one = false;
    bool multiple_failures = false;
    std::optional<SubspaceDescription> invariant_subspace;
};

ClassificationReport classify(const ParameterPoint& p, double tol = 1e-9);

// Max residual of mapping the described subspace into itself under all
// generator matrices built numerically at p.
double verify_invariant_subspace(const SubspaceDescription& desc, const ParameterPoint& p,
                                 double tol = 1e-9);

// Dimension of the linear span of all words in the generators and their
// inverses (Burnside closure); n^2 certifies irreducibility.
int algebra_dimension(const std::vector<Eigen::MatrixXcd>& generators, double tol = 1e-9);

// The m+1 circuit matrices at p, plain basis, as complex matrices.
std::vector<Eigen::MatrixXcd> numeric_generators(const ParameterPoint& p, double tol = 1e-9);

}  // namespace fcmono

#endif
