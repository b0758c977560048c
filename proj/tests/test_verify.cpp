#include <doctest.h>

#include <algorithm>

#include "mtc/center.hpp"
#include "mtc/eseries.hpp"
#include "mtc/fastcyc.hpp"
#include "mtc/verify.hpp"

using namespace mtc;

namespace {

ModularData center_z3(int sign) {
    Group g = make_group({3});
    return center_modular_data(make_ty(g, bicharacter_from_exponents(g, {{1}}), sign));
}

ModularData center_z2z2() {
    Group g = make_group({2, 2});
    return center_modular_data(
        make_ty(g, bicharacter_from_exponents(g, {{1, 0}, {0, 1}}), -1));
}

ModularData eseries_z5(int sign) {
    Group g = make_group({5});
    return e_modular_data(quadratic_from_diag(g, {1}), sign);
}

} // namespace

TEST_CASE("the axiom suite passes on freshly built modular data") {
    for (ModularData md : {center_z3(1), center_z3(-1), center_z2z2(), eseries_z5(1),
                           eseries_z5(-1)}) {
        auto rep = check_axioms(md);
        CHECK(rep.s_symmetric.passed);
        CHECK(rep.unitarity.passed);
        CHECK(rep.verlinde_integral.passed);
        CHECK(rep.balancing.passed);
        CHECK(rep.gauss_product.passed);
        CHECK(rep.charge_modulus.passed);
        CHECK(rep.weak_integrality.passed);
        CHECK(rep.all_passed());
        CHECK(rep.has_charge);
        CHECK(rep.central_charge.abs_squared().is_one());
        CHECK((rep.p_plus * rep.p_minus).equals(rep.global_dim));
        CHECK_FALSE(rep.fusion.empty());
    }
}

TEST_CASE("central charges of the small centers are as published") {
    // Z(TY) is a Drinfeld center, so its charge is trivial
    CHECK(check_axioms(center_z3(1)).central_charge.equals(Cyc::from_int(1)));
    CHECK(check_axioms(center_z3(-1)).central_charge.equals(Cyc::from_int(1)));
    CHECK(check_axioms(center_z2z2()).central_charge.equals(Cyc::from_int(1)));
}

TEST_CASE("a flipped zero entry is rejected") {
    ModularData md = center_z3(1);
    // find a genuine zero (Y-Z block) and flip it to 1
    long zi = -1, zj = -1;
    for (long i = 0; i < md.size() && zi < 0; ++i)
        for (long j = 0; j < md.size() && zi < 0; ++j)
            if (md.S[i][j].is_zero()) {
                zi = i;
                zj = j;
            }
    REQUIRE(zi >= 0);
    md.S[zi][zj] = Cyc::from_int(1);
    auto rep = check_axioms(md);
    CHECK_FALSE(rep.all_passed());
    // symmetry already breaks (the mirror entry stayed zero), and the row
    // products can no longer be unitary
    CHECK_FALSE(rep.s_symmetric.passed);
    CHECK_FALSE(rep.unitarity.passed);
}

TEST_CASE("a symmetric fault still fails unitarity or integrality") {
    ModularData md = center_z3(-1);
    long zi = -1, zj = -1;
    for (long i = 0; i < md.size() && zi < 0; ++i)
        for (long j = 0; j < md.size() && zi < 0; ++j)
            if (md.S[i][j].is_zero()) {
                zi = i;
                zj = j;
            }
    REQUIRE(zi >= 0);
    md.S[zi][zj] = Cyc::from_int(2);
    md.S[zj][zi] = Cyc::from_int(2);
    auto rep = check_axioms(md);
    CHECK(rep.s_symmetric.passed);
    CHECK_FALSE(rep.all_passed());
    CHECK_FALSE(rep.unitarity.passed);
}

TEST_CASE("a twisted theta breaks the balancing regeneration") {
    ModularData md = eseries_z5(1);
    md.theta[2] = md.theta[2] * Cyc::root_of_unity(3, 1);
    auto rep = check_axioms(md);
    CHECK_FALSE(rep.balancing.passed);
}

TEST_CASE("the Verlinde wrapper agrees with the reference evaluation") {
    for (ModularData md : {center_z3(1), eseries_z5(-1)}) {
        auto fast = verlinde(md);
        auto slow = verlinde_tensor_reference(md);
        CHECK(fast == slow);
    }
}

TEST_CASE("zero structure splits each row into zeros and the rest") {
    for (ModularData md : {center_z3(1), eseries_z5(1), center_z2z2()}) {
        for (std::size_t x = 0; x < (std::size_t)md.size(); ++x) {
            auto zs = zero_structure(md, x);
            // T and D are disjoint and together cover every label but the unit
            std::vector<int> where(md.size(), 0);
            for (auto i : zs.t_set) ++where[i];
            for (auto i : zs.d_set) ++where[i];
            for (std::size_t y = 0; y < (std::size_t)md.size(); ++y) {
                if (y == (std::size_t)md.unit)
                    CHECK(where[y] == 0);  // the unit column never vanishes
                else
                    CHECK(where[y] == 1);
            }
            for (auto i : zs.t_set) CHECK(md.S[x][i].is_zero());
            for (auto i : zs.u_set) {
                CHECK(md.S[x][i].abs_squared().equals(md.dims[i] * md.dims[i]));
                CHECK_FALSE(md.S[x][i].is_zero());
            }
        }
    }
}

TEST_CASE("the Big row of the Z/3 center has the published zero profile") {
    ModularData md = center_z3(1);
    auto simples = center_simples(
        make_ty(make_group({3}), bicharacter_from_exponents(make_group({3}), {{1}}), 1));
    long big = -1;
    for (size_t i = 0; i < simples.size(); ++i)
        if (simples[i].kind == CenterSimple::Big) {
            big = (long)i;
            break;
        }
    REQUIRE(big >= 0);
    auto zs = zero_structure(md, (std::size_t)big);
    // row of a sqrt(3)-dimensional object: the three Y columns vanish
    // (dim 3 * 4 = 12) and the six invertible columns have maximal modulus
    CHECK(zs.dim_t == 12);
    CHECK(zs.dim_u >= 6);
    CHECK(3 * zs.dim_t + zs.dim_u > 36);
}

TEST_CASE("the Y row of E(q,+) on Z/3 vanishes exactly on Z0, Z1") {
    Group g = make_group({3});
    ModularData md = e_modular_data(quadratic_from_diag(g, {1}), 1);
    auto simples = e_simples(g);
    REQUIRE(simples[2].kind == ESimple::Y);
    auto zs = zero_structure(md, 2);
    REQUIRE(zs.t_set.size() == 2);
    CHECK(simples[zs.t_set[0]].kind == ESimple::Z);
    CHECK(simples[zs.t_set[1]].kind == ESimple::Z);
    // dim(T) = n + n = 6 with n = 3
    CHECK(zs.dim_t == 6);
}

TEST_CASE("the appendix inequalities hold on generated data") {
    for (ModularData md : {center_z3(1), center_z3(-1), center_z2z2(), eseries_z5(1),
                           eseries_z5(-1)}) {
        auto t61 = theorem_6_1_check(md);
        CHECK(t61.passed);
        CHECK_FALSE(t61.skipped);
        auto p62 = prop_6_2_check(md);
        CHECK(p62.passed);
        CHECK_FALSE(p62.skipped);
    }
}

TEST_CASE("appendix checks report a violation when S is corrupted") {
    // replace a zero row entry so T_x shrinks below d_x^2 - 1 for the Big row
    ModularData md = center_z3(1);
    long big = md.size() - 1;  // last label is a Big one by construction order
    auto zs = zero_structure(md, (std::size_t)big);
    REQUIRE_FALSE(zs.t_set.empty());
    for (auto i : zs.t_set) {
        md.S[big][i] = Cyc::from_rational(Rat(1, 7));
        md.S[i][big] = Cyc::from_rational(Rat(1, 7));
    }
    auto t61 = theorem_6_1_check(md);
    CHECK_FALSE(t61.passed);
    CHECK_FALSE(t61.detail.empty());
}

TEST_CASE("galois products over D rows are rational and at least one") {
    for (ModularData md : {center_z3(1), eseries_z5(1)}) {
        for (std::size_t x = 0; x < (std::size_t)md.size(); ++x) {
            auto g = galois_product_check(md, x);
            CHECK(g.passed);
        }
    }
}

TEST_CASE("the axiom suite skips gracefully on non weakly integral input") {
    // Fibonacci-flavored data is outside this library's generators; fake a
    // tiny non-integral global dimension and watch the skip notices
    ModularData md;
    md.labels = {"1", "t"};
    md.dims = {Cyc::from_int(1), Cyc::from_rational(Rat(3, 2))};
    md.theta = {Cyc::from_int(1), Cyc::from_int(1)};
    md.S = {{Cyc::from_int(1), Cyc::from_rational(Rat(3, 2))},
            {Cyc::from_rational(Rat(3, 2)), Cyc::from_int(-1)}};
    md.unit = 0;
    auto rep = check_axioms(md, false);
    CHECK_FALSE(rep.weak_integrality.passed);
    auto t61 = theorem_6_1_check(md);
    CHECK(t61.skipped);
}
