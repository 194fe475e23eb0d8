#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fcmono/io.hpp"
#include "fcmono/monodromy.hpp"
#include "fcmono/series.hpp"

using namespace fcmono;

namespace {

double default_tolerance() {
    if (const char* env = std::getenv("FC_MONO_TOL")) return std::atof(env);
    return 1e-9;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

ParameterPoint point_from_strings(const std::string& a, const std::string& b,
                                  const std::string& c) {
    std::vector<Rational> cs;
    for (const auto& part : split_commas(c)) cs.push_back(parse_rational(part));
    return ParameterPoint::from_rationals(parse_rational(a), parse_rational(b), cs);
}

template <class F>
MatrixOf<typename F::Scalar> named_matrix(const F& field, const std::string& basis,
                                          const std::string& name) {
    if (name == "H") return basis == "tilde" ? build_tilde_H(field) : build_H(field);
    if (name == "Htilde") return build_tilde_H(field);
    if (name == "Pm") return build_Pm(field);
    if (name == "M0") return basis == "tilde" ? build_tilde_M0(field).first : build_M0(field);
    if (name.size() >= 2 && name[0] == 'M') {
        int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= field.m)
            return basis == "tilde" ? build_tilde_Mk(field, k) : build_Mk(field, k);
    }
    throw CLI::ValidationError("unknown matrix name: " + name);
}

std::vector<std::string> fixture_names(int m) {
    std::vector<std::string> names = {"M0", "H", "Pm"};
    for (int k = 1; k <= m; ++k) names.push_back("M" + std::to_string(k));
    return names;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monodromy matrices, verification, classification and series for the "
                 "Lauricella F_C system"};
    app.require_subcommand(1);

    std::string basis = "plain", backing = "exact", name = "M0", format = "json";
    std::string a_str, b_str, c_str, x_str, out_dir = ".";
    int m = 1, N = 12;
    std::string index_bits;
    std::uint64_t seed = 0;
    double tol = default_tolerance();

    auto* cmd_matrices = app.add_subcommand("matrices", "print a named matrix");
    cmd_matrices->add_option("--m", m, "number of variables")->required();
    cmd_matrices->add_option("--basis", basis)->check(CLI::IsMember({"plain", "tilde"}));
    cmd_matrices->add_option("--backing", backing)->check(CLI::IsMember({"exact", "numeric"}));
    cmd_matrices->add_option("--name", name, "M0, Mk, H, Htilde or Pm");
    cmd_matrices->add_option("--a", a_str, "parameter a (numeric backing)");
    cmd_matrices->add_option("--b", b_str, "parameter b (numeric backing)");
    cmd_matrices->add_option("--c", c_str, "comma-separated c_1..c_m (numeric backing)");
    cmd_matrices->add_option("--tol", tol);

    auto* cmd_verify = app.add_subcommand("verify", "run the identity suite");
    cmd_verify->add_option("--m", m)->required();
    cmd_verify->add_option("--backing", backing)->check(CLI::IsMember({"exact", "numeric"}));
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--tol", tol);
    cmd_verify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_classify = app.add_subcommand("classify", "irreducibility of a parameter tuple");
    cmd_classify->add_option("--m", m);
    cmd_classify->add_option("--a", a_str)->required();
    cmd_classify->add_option("--b", b_str)->required();
    cmd_classify->add_option("--c", c_str)->required();
    cmd_classify->add_option("--tol", tol);
    cmd_classify->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* cmd_series = app.add_subcommand("series", "evaluate F_C or a local solution F_I");
    cmd_series->add_option("--a", a_str)->required();
    cmd_series->add_option("--b", b_str)->required();
    cmd_series->add_option("--c", c_str)->required();
    cmd_series->add_option("--x", x_str, "comma-separated coordinates")->required();
    cmd_series->add_option("--I", index_bits, "bit string i1i2...im selecting F_I");
    cmd_series->add_option("--N", N, "truncation order (total degree)");

    auto* cmd_export = app.add_subcommand("export", "write golden JSON fixtures");
    cmd_export->add_option("--m", m)->required();
    cmd_export->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_matrices->parsed()) {
            if (backing == "exact") {
                ExactField field{m};
                std::cout << matrix_to_json(m, basis, name, named_matrix(field, basis, name)).dump(2)
                          << "\n";
            } else {
                if (a_str.empty() || b_str.empty() || c_str.empty())
                    throw CLI::ValidationError("numeric backing needs --a --b --c");
                ParameterPoint p = point_from_strings(a_str, b_str, c_str);
                if (p.m != m) throw CLI::ValidationError("--c count does not match --m");
                PairedField field = p.paired_field(tol);
                std::cout << matrix_to_json(m, basis, name, named_matrix(field, basis, name)).dump(2)
                          << "\n";
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            SuiteOptions opts;
            opts.tol = tol;
            VerificationReport rep =
                run_suite(m, backing == "exact" ? Backing::exact : Backing::numeric, seed, opts);
            if (format == "json")
                std::cout << verification_to_json(rep).dump(2) << "\n";
            else
                std::cout << verification_table(rep);
            return rep.all_passed() ? 0 : 1;
        }
        if (cmd_classify->parsed()) {
            ParameterPoint p = point_from_strings(a_str, b_str, c_str);
            if (cmd_classify->count("--m") && p.m != m)
                throw CLI::ValidationError("--c count does not match --m");
            ClassificationReport rep = classify(p, tol);
            if (format == "json")
                std::cout << classification_to_json(rep).dump(2) << "\n";
            else
                std::cout << classification_table(rep);
            return 0;
        }
        if (cmd_series->parsed()) {
            ParameterPoint p = point_from_strings(a_str, b_str, c_str);
            EvaluationPoint x;
            for (const auto& part : split_commas(x_str))
                x.x.emplace_back(parse_rational(part).get_d(), 0.0);
            if ((int)x.x.size() != p.m)
                throw CLI::ValidationError("--x count does not match --c count");
            Json j;
            Json pt = Json::array();
            for (const auto& xi : x.x) pt.push_back(format_complex(xi));
            j["point"] = std::move(pt);
            j["in_domain"] = in_domain(x);
            j["truncation_order"] = N;
            if (index_bits.empty()) {
                TruncatedSeries T = fc_coefficients(p.a, p.b, p.c, N);
                j["function"] = "F_C";
                j["value"] = format_complex(T.evaluate(x));
                j["estimated_tail"] = format_double(T.last_shell_magnitude());
            } else {
                std::vector<int> bits;
                for (char ch : index_bits) bits.push_back(ch - '0');
                BinaryIndex I(bits);
                if (I.m() != p.m) throw CLI::ValidationError("--I length does not match m");
                TruncatedSeries T = solution_series(p, I, N);
                j["function"] = "F_I";
                j["I"] = I.to_string();
                j["value"] = format_complex(solution_FI(p, I, x, N));
                j["estimated_tail"] = format_double(T.last_shell_magnitude());
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (cmd_export->parsed()) {
            if (m < 1 || m > 3) throw CLI::ValidationError("export supports exact m <= 3");
            ExactField field{m};
            std::filesystem::create_directories(out_dir);
            for (const std::string& b : {"plain", "tilde"}) {
                auto names = fixture_names(m);
                if (b == "tilde") names.push_back("Htilde");
                for (const auto& nm : names) {
                    if (b == "tilde" && nm == "H") continue;  // tilde form exported as Htilde
                    Json j = matrix_to_json(m, b, nm, named_matrix(field, b, nm));
                    std::ofstream out(std::filesystem::path(out_dir) /
                                      ("m" + std::to_string(m) + "_" + b + "_" + nm + ".json"));
                    out << j.dump(2) << "\n";
                }
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
