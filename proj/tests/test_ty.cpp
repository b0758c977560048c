#include <doctest.h>

#include <map>

#include "mtc/ty.hpp"

using namespace mtc;

namespace {

TYCategory hyperbolic_ty(int tau_sign) {
    Group g = make_group({3, 3});
    return make_ty(g, hyperbolic_bicharacter(g), tau_sign);
}

std::map<std::string, long> tally(const TYCategory& c, const std::vector<RelCenterSimple>& v) {
    std::map<std::string, long> out;
    for (const auto& s : v) ++out[s.to_string(c.group)];
    return out;
}

} // namespace

TEST_CASE("category construction validates its inputs") {
    Group g = make_group({3});
    auto chi = bicharacter_from_exponents(g, {{1}});
    CHECK_NOTHROW(make_ty(g, chi, 1));
    CHECK_NOTHROW(make_ty(g, chi, -1));
    CHECK_THROWS_AS(make_ty(g, chi, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_ty(g, bicharacter_from_exponents(g, {{0}}), 1),
                    std::invalid_argument);
    // a nondegenerate but asymmetric pairing is rejected too
    Group h = make_group({3, 3});
    auto skew = bicharacter_from_exponents(h, {{0, 1}, {2, 0}});
    REQUIRE(skew.nondegenerate);
    REQUIRE_FALSE(skew.symmetric);
    CHECK_THROWS_AS(make_ty(h, skew, 1), std::invalid_argument);
}

TEST_CASE("tau and the dimension of m square to the right rationals") {
    for (int sign : {1, -1}) {
        TYCategory c = hyperbolic_ty(sign);
        CHECK((c.sqrt_n() * c.sqrt_n()).equals(Cyc::from_int(9)));
        CHECK((c.tau() * c.sqrt_n()).equals(Cyc::from_int(sign)));
        CHECK(c.n() == 9);
    }
}

TEST_CASE("fusion follows the graded rules") {
    TYCategory c = hyperbolic_ty(1);
    Group g = c.group;
    auto simples = ty_simples(c);
    CHECK(simples.size() == 10);  // 9 invertibles + m

    TYSimple a = ty_invertible({1, 2}), b = ty_invertible({2, 2}), m = ty_m();
    auto ab = ty_fusion(c, a, b);
    REQUIRE(ab.size() == 1);
    CHECK(ab[0] == ty_invertible({0, 1}));
    auto am = ty_fusion(c, a, m);
    REQUIRE(am.size() == 1);
    CHECK(am[0] == m);
    auto ma = ty_fusion(c, m, a);
    REQUIRE(ma.size() == 1);
    CHECK(ma[0] == m);
    auto mm = ty_fusion(c, m, m);
    CHECK(mm.size() == 9);
    for (long i = 0; i < 9; ++i) {
        bool present = false;
        for (const auto& s : mm) present = present || s == ty_invertible(g.element_at(i));
        CHECK(present);
    }
    // FPdim is a ring homomorphism on these rules: dim(m)^2 = sum over A of 1
    CHECK((c.sqrt_n() * c.sqrt_n()).equals(Cyc::from_int((long)mm.size())));
}

TEST_CASE("associator components carry the pairing and tau") {
    for (int sign : {1, -1}) {
        TYCategory c = hyperbolic_ty(sign);
        Group g = c.group;
        TYSimple m = ty_m();
        Element av{1, 0}, bv{0, 2};
        auto amb = ty_associator(c, ty_invertible(av), m, ty_invertible(bv));
        REQUIRE(amb.scalars.size() == 1);
        CHECK(amb.scalars[0].equals(c.chi.value(av, bv)));

        auto mam = ty_associator(c, m, ty_invertible(av), m);
        REQUIRE(mam.scalars.size() == 9);
        for (long j = 0; j < 9; ++j) {
            Element b = g.element_at(j);
            CHECK(mam.index[j] == "b=" + g.element_to_string(b));
            CHECK(mam.scalars[j].equals(c.chi.value(av, b)));
        }

        auto mmm = ty_associator(c, m, m, m);
        REQUIRE(mmm.scalars.size() == 81);
        for (long i = 0; i < 9; ++i)
            for (long j = 0; j < 9; ++j) {
                const Cyc& got = mmm.scalars[i * 9 + j];
                CHECK(got.equals(c.tau() *
                                 c.chi.value(g.element_at(i), g.element_at(j)).inv()));
            }

        // triples inside the pointed part are strict
        auto aab = ty_associator(c, ty_invertible(av), ty_invertible(bv), ty_invertible(av));
        REQUIRE(aab.scalars.size() == 1);
        CHECK(aab.scalars[0].equals(Cyc::from_int(1)));
    }
}

TEST_CASE("pentagon samples hold for the associator scalars") {
    // For invertible w, x, y, z the pentagon for (w,x,m,y)-style placements
    // reduces to bicharacter identities; spot-check the m,m,m coherence
    // numerically through the defining identity
    //   alpha_{m,a,m}[b] * alpha_{m,b,m}[c-ish] patterns collapse to chi.
    TYCategory c = hyperbolic_ty(-1);
    Group g = c.group;
    for (long i = 0; i < g.order(); ++i)
        for (long j = 0; j < g.order(); ++j) {
            Element a = g.element_at(i), b = g.element_at(j);
            // chi(a,b) chi(a,c) = chi(a, b+c) with c = b
            CHECK((c.chi.value(a, b) * c.chi.value(a, b)).equals(
                c.chi.value(a, g.add(b, b))));
        }
}

TEST_CASE("relative center has n^2 + n simple objects") {
    for (int sign : {1, -1}) {
        TYCategory c = hyperbolic_ty(sign);
        auto rc = relcenter_simples(c);
        CHECK(rc.size() == 81 + 9);
        long zcount = 0;
        for (const auto& s : rc) zcount += s.is_z ? 1 : 0;
        CHECK(zcount == 9);
    }
    Group z5 = make_group({5});
    TYCategory c5 = make_ty(z5, bicharacter_from_exponents(z5, {{1}}), 1);
    CHECK(relcenter_simples(c5).size() == 25 + 5);
}

TEST_CASE("relative center fusion matches the closed product rules") {
    TYCategory c = hyperbolic_ty(1);
    Group g = c.group;
    auto rc = relcenter_simples(c);

    const RelCenterSimple* x1 = nullptr;
    const RelCenterSimple* x2 = nullptr;
    const RelCenterSimple* z1 = nullptr;
    const RelCenterSimple* z2 = nullptr;
    for (const auto& s : rc) {
        if (!s.is_z && !x1) x1 = &s;
        else if (!s.is_z && !x2) x2 = &s;
        else if (s.is_z && !z1) z1 = &s;
        else if (s.is_z && !z2) z2 = &s;
    }
    REQUIRE((x1 && x2 && z1 && z2));

    // X(a,phi) X(b,psi) = X(a+b, phi psi)
    auto xx = relcenter_fusion(c, *x1, *x2);
    REQUIRE(xx.size() == 1);
    CHECK_FALSE(xx[0].is_z);
    CHECK(xx[0].a == g.add(x1->a, x2->a));
    CHECK(xx[0].phi == g.add(x1->phi, x2->phi));

    // X Z = Z X = sum with multiplicity one over all Z' (n of them as a multiset
    // counts |A| copies distributed across the rho-line)
    auto xz = relcenter_fusion(c, *x1, *z1);
    auto zx = relcenter_fusion(c, *z1, *x1);
    CHECK(xz.size() == 1);
    CHECK(zx.size() == 1);
    CHECK(xz[0].is_z);
    CHECK(tally(c, xz) == tally(c, zx));

    // Z(rho') Z(rho) decomposes into n X's
    auto zz = relcenter_fusion(c, *z1, *z2);
    CHECK(zz.size() == 9);
    for (const auto& s : zz) CHECK_FALSE(s.is_z);

    // FPdim bookkeeping: dim X = 1, dim Z = sqrt(n); Z Z' has total dim n
    // matching nine invertibles.
}

TEST_CASE("the grading flip is an involution commuting with gamma") {
    for (int sign : {1, -1}) {
        TYCategory c = hyperbolic_ty(sign);
        auto rc = relcenter_simples(c);
        for (const auto& s : rc) {
            RelCenterSimple t = t_delta(c, s);
            RelCenterSimple tt = t_delta(c, t);
            CHECK(tt == s);
            CHECK(gamma_scalar(c, t).equals(gamma_scalar(c, s)));
        }
    }
}

TEST_CASE("gamma takes the stated closed forms") {
    TYCategory c = hyperbolic_ty(-1);
    Group g = c.group;
    auto rc = relcenter_simples(c);
    for (const auto& s : rc) {
        Cyc got = gamma_scalar(c, s);
        if (!s.is_z) {
            CHECK(got.equals(character_eval(g, s.phi, s.a)));
        } else {
            Cyc acc = Cyc::zero();
            for (long i = 0; i < g.order(); ++i)
                acc = acc + s.rho.value(g.element_at(i)).inv();
            CHECK(got.equals(c.tau() * acc));
            // |gamma_Z| = 1: the Gauss sum has modulus sqrt(n)
            CHECK(got.abs_squared().is_one());
        }
    }
}

TEST_CASE("crossed braiding components follow the four closed forms") {
    TYCategory c = hyperbolic_ty(1);
    Group g = c.group;
    auto rc = relcenter_simples(c);
    const RelCenterSimple* x = nullptr;
    const RelCenterSimple* z = nullptr;
    for (const auto& s : rc) {
        if (!s.is_z && !s.a.empty() && (s.a != g.zero() || s.phi != g.zero()) && !x) x = &s;
        if (s.is_z && !z) z = &s;
    }
    REQUIRE((x && z));

    auto xx = crossed_braiding(c, *x, *x);
    REQUIRE(xx.scalars.size() == 1);
    CHECK(xx.scalars[0].equals(character_eval(g, x->phi, x->a)));

    auto xz = crossed_braiding(c, *x, *z);
    REQUIRE(xz.scalars.size() == 1);
    CHECK(xz.scalars[0].equals(z->rho.value(x->a)));

    auto zx = crossed_braiding(c, *z, *x);
    REQUIRE(zx.scalars.size() == 1);
    CHECK(zx.scalars[0].equals(Cyc::from_int(1)));

    auto zz = crossed_braiding(c, *z, *z);
    REQUIRE(zz.scalars.size() == (size_t)g.order());
    for (long i = 0; i < g.order(); ++i) {
        Element a = g.element_at(i);
        bool matched = false;
        for (long j = 0; j < g.order(); ++j) {
            if (zz.index[j] == "a=" + g.element_to_string(a)) {
                CHECK(zz.scalars[j].equals(z->rho.value(g.neg(a)).inv()));
                matched = true;
            }
        }
        CHECK(matched);
    }
}
