#include <doctest.h>

#include <numbers>

#include "fcmono/classify.hpp"
#include "fcmono/monodromy.hpp"

using namespace fcmono;
using Complex = std::complex<double>;

namespace {

ParameterPoint rat_point(long an, long ad, long bn, long bd,
                         std::vector<std::pair<long, long>> cs) {
    std::vector<Rational> c;
    for (auto [n, d] : cs) c.emplace_back(n, d);
    return ParameterPoint::from_rationals(Rational(an, ad), Rational(bn, bd), std::move(c));
}

}  // namespace

TEST_CASE("exponentials of rational parameters land on the unit circle") {
    auto p = rat_point(1, 2, 1, 3, {{1, 4}});
    CHECK(std::abs(p.alpha() - Complex(-1.0, 0.0)) < 1e-14);
    CHECK(std::abs(p.beta() - std::polar(1.0, 2.0 * std::numbers::pi / 3.0)) < 1e-14);
    CHECK(std::abs(p.gamma(1) - Complex(0.0, 1.0)) < 1e-14);
    // lambda = (-1)^(m-1) gamma / (alpha beta) for m = 1
    Complex want = p.gamma(1) / (p.alpha() * p.beta());
    CHECK(std::abs(p.lambda() - want) < 1e-14);
}

TEST_CASE("shifted parameters follow a + sum i_k (1 - c_k)") {
    auto p = rat_point(1, 2, 1, 3, {{1, 5}, {1, 7}});
    auto I = BinaryIndex(std::vector<int>{1, 0});
    auto s = shifted_parameters(p, I);
    CHECK(std::abs(s.a - Complex(0.5 + 4.0 / 5.0, 0.0)) < 1e-14);
    CHECK(std::abs(s.b - Complex(1.0 / 3.0 + 4.0 / 5.0, 0.0)) < 1e-14);
    CHECK(std::abs(s.c[0] - Complex(2.0 - 1.0 / 5.0, 0.0)) < 1e-14);
    CHECK(std::abs(s.c[1] - Complex(1.0 / 7.0, 0.0)) < 1e-14);
    CHECK(*s.a_rat == Rational(13, 10));
    CHECK(s.c_rat[0] == Rational(9, 5));
}

TEST_CASE("irreducibility failures list every integral shift") {
    SUBCASE("no failures") {
        auto p = rat_point(1, 2, 1, 3, {{1, 5}});
        CHECK(irreducibility_failures(p).empty());
    }
    SUBCASE("one negative-integer failure") {
        auto p = rat_point(-1, 1, 1, 3, {{1, 5}});
        auto f = irreducibility_failures(p);
        REQUIRE(f.size() == 1);
        CHECK(f[0].I.position() == 0);
        CHECK(f[0].which == 'a');
        CHECK(f[0].value == -1);
    }
    SUBCASE("shifted failure at I = (1)") {
        // a = 2/5, c = 2/5: a + (1 - c) = 1
        auto p = rat_point(2, 5, 1, 3, {{2, 5}});
        auto f = irreducibility_failures(p);
        REQUIRE(f.size() == 1);
        CHECK(f[0].I.position() == 1);
        CHECK(f[0].value == 1);
    }
    SUBCASE("numeric path agrees with the exact path") {
        auto pe = rat_point(-1, 1, 1, 3, {{1, 5}});
        auto pn = ParameterPoint::from_complex(Complex(-1.0, 0.0), Complex(1.0 / 3.0, 0.0),
                                               {Complex(0.2, 0.0)});
        auto fe = irreducibility_failures(pe);
        auto fn = irreducibility_failures(pn);
        REQUIRE(fe.size() == fn.size());
        CHECK(fe[0].value == fn[0].value);
        CHECK(fe[0].I == fn[0].I);
    }
}

TEST_CASE("classification of the three worked examples") {
    SUBCASE("a = -1: one-dimensional subspace in the F basis") {
        auto rep = classify(rat_point(-1, 1, 1, 3, {{1, 5}}));
        CHECK(!rep.irreducible);
        REQUIRE(rep.invariant_subspace.has_value());
        CHECK(rep.invariant_subspace->basis == SubspaceDescription::BasisLabel::F);
        CHECK(rep.invariant_subspace->dimension == 1);
        CHECK(rep.invariant_subspace->indices == std::vector<int>{0});
    }
    SUBCASE("a = 2: codimension-one subspace in the F' basis") {
        auto rep = classify(rat_point(2, 1, 1, 3, {{1, 5}}));
        CHECK(!rep.irreducible);
        REQUIRE(rep.invariant_subspace.has_value());
        CHECK(rep.invariant_subspace->basis == SubspaceDescription::BasisLabel::Fprime);
        CHECK(rep.invariant_subspace->dimension == 1);
        CHECK(rep.invariant_subspace->indices == std::vector<int>{1});
    }
    SUBCASE("generic point is irreducible") {
        auto rep = classify(rat_point(1, 2, 1, 3, {{1, 5}}));
        CHECK(rep.irreducible);
        CHECK(!rep.invariant_subspace.has_value());
    }
    SUBCASE("two failures are reported without a subspace") {
        auto rep = classify(rat_point(-1, 1, -2, 1, {{1, 5}}));
        CHECK(rep.multiple_failures);
        CHECK(!rep.invariant_subspace.has_value());
        CHECK(rep.failures.size() >= 2);
    }
    SUBCASE("integral c_k suppresses the subspace description") {
        auto rep = classify(rat_point(-1, 1, 1, 3, {{1, 1}}));
        CHECK(!rep.irreducible);
        CHECK(rep.c_integral == std::vector<int>{1});
        CHECK(!rep.invariant_subspace.has_value());
    }
}

TEST_CASE("described subspaces are numerically invariant") {
    for (auto p : {rat_point(-1, 1, 1, 3, {{1, 5}}), rat_point(2, 1, 1, 3, {{1, 5}}),
                   rat_point(-2, 1, 1, 7, {{1, 5}, {1, 3}})}) {
        auto rep = classify(p);
        REQUIRE(rep.invariant_subspace.has_value());
        CHECK(verify_invariant_subspace(*rep.invariant_subspace, p) < 1e-9);
    }
}

TEST_CASE("a coordinate subspace that is not invariant has a large residual") {
    auto p = rat_point(1, 2, 1, 3, {{1, 5}});
    SubspaceDescription d;
    d.basis = SubspaceDescription::BasisLabel::F;
    d.dimension = 1;
    d.indices = {0};
    CHECK(verify_invariant_subspace(d, p) > 1e-3);
}

TEST_CASE("Burnside closure separates irreducible from reducible points") {
    SUBCASE("irreducible m = 1 reaches the full 4-dimensional algebra") {
        auto p = rat_point(1, 2, 1, 3, {{1, 5}});
        CHECK(algebra_dimension(numeric_generators(p)) == 4);
    }
    SUBCASE("irreducible m = 2 reaches dimension 16") {
        auto p = rat_point(1, 2, 1, 3, {{1, 5}, {1, 7}});
        CHECK(algebra_dimension(numeric_generators(p)) == 16);
    }
    SUBCASE("reducible points stay strictly below n^2") {
        CHECK(algebra_dimension(numeric_generators(rat_point(-1, 1, 1, 3, {{1, 5}}))) < 4);
        CHECK(algebra_dimension(numeric_generators(rat_point(2, 1, 1, 3, {{1, 5}}))) < 4);
    }
    SUBCASE("commuting diagonal generators span only the diagonal") {
        auto p = rat_point(1, 2, 1, 3, {{1, 5}, {1, 7}});
        auto gens = numeric_generators(p);
        gens.erase(gens.begin());  // drop M_0, keep the diagonal M_k
        CHECK(algebra_dimension(gens) == 4);
    }
}

TEST_CASE("generator values feed the numeric fields consistently") {
    auto p = rat_point(1, 2, 1, 3, {{1, 5}});
    auto v = p.generator_values();
    REQUIRE(v.size() == 3);
    CHECK(std::abs(v[0] - p.alpha()) < 1e-15);
    CHECK(std::abs(v[2] - p.gamma(1)) < 1e-15);
    auto field = p.paired_field();
    CHECK(std::abs(field.alpha().value - p.alpha()) < 1e-15);
    CHECK(std::abs(field.alpha().dual_value - 1.0 / p.alpha()) < 1e-14);
}
