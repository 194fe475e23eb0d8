#ifndef FCMONO_IO_HPP
#define FCMONO_IO_HPP

#include <nlohmann/json.hpp>

#include <complex>
#include <string>

#include "fcmono/classify.hpp"
#include "fcmono/linalg.hpp"
#include "fcmono/verify.hpp"

namespace fcmono {

using Json = nlohmann::ordered_json;

// 17 significant digits so numeric output round-trips losslessly.
std::string format_double(double x);
std::string format_complex(std::complex<double> z);

std::string scalar_string(const ExactScalar& s);
std::string scalar_string(const PairedNumericScalar& s);
std::string scalar_string(const std::complex<double>& s);

template <class S>
Json matrix_to_json(int m, const std::string& basis, const std::string& name,
                    const MatrixOf<S>& M) {
    Json j;
    j["m"] = m;
    j["basis"] = basis;
    j["name"] = name;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index jj = 0; jj < M.cols(); ++jj) row.push_back(scalar_string(M(i, jj)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

MatrixOf<ExactScalar> exact_matrix_from_json(const Json& j);

Json classification_to_json(const ClassificationReport& rep);
std::string classification_table(const ClassificationReport& rep);

Json verification_to_json(const VerificationReport& rep);
std::string verification_table(const VerificationReport& rep);

// "p/q" or decimal.
Rational parse_rational(const std::string& s);

}  // namespace fcmono

#endif
