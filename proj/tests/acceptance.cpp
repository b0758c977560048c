// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Time limits are enforced in-code where the criterion pins one.

#include "mtc/abelian.hpp"
#include "mtc/center.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/eseries.hpp"
#include "mtc/forms.hpp"
#include "mtc/ty.hpp"
#include "mtc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace mtc;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 = no pinned limit
    bool passed = false;
    double elapsed = 0.0;
    std::vector<std::string> notes;
};

std::vector<Criterion> results;

void run_criterion(int number, const std::string& title, double limit_seconds,
                   const std::function<bool(std::vector<std::string>&)>& body) {
    Criterion c{number, title, limit_seconds};
    const auto t0 = Clock::now();
    try {
        c.passed = body(c.notes);
    } catch (const std::exception& e) {
        c.passed = false;
        c.notes.push_back(std::string("exception: ") + e.what());
    }
    c.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_seconds > 0 && c.elapsed >= limit_seconds) {
        c.passed = false;
        c.notes.push_back("time limit exceeded");
    }
    results.push_back(std::move(c));
}

// --- small helpers ---------------------------------------------------------

Bicharacter identity_chi(const Group& g) {
    std::vector<std::vector<long>> gram(g.rank(), std::vector<long>(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) gram[i][i] = 1;
    return bicharacter_from_exponents(g, gram);
}

void partitions_of(long e, std::vector<std::vector<long>>& out) {
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(e, e);
}

// Every abelian group of order n, one invariant-factor list each.
std::vector<std::vector<long>> abelian_groups_of_order(long n) {
    std::vector<std::pair<long, long>> pe;  // (p, e)
    long m = n;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            long e = 0;
            while (m % p == 0) m /= p, ++e;
            pe.push_back({p, e});
        }
    if (m > 1) pe.push_back({m, 1});

    std::vector<std::vector<long>> lists{{}};
    for (auto [p, e] : pe) {
        std::vector<std::vector<long>> parts;
        partitions_of(e, parts);
        std::vector<std::vector<long>> next;
        for (const auto& base : lists)
            for (const auto& part : parts) {
                auto l = base;
                for (long t : part) {
                    long f = 1;
                    for (long i = 0; i < t; ++i) f *= p;
                    l.push_back(f);
                }
                next.push_back(std::move(l));
            }
        lists = std::move(next);
    }
    return lists;
}

std::vector<std::vector<long>> abelian_groups_up_to(long bound, bool odd_only = false) {
    std::vector<std::vector<long>> out;
    for (long n = 1; n <= bound; ++n) {
        if (odd_only && n % 2 == 0) continue;
        for (auto& l : abelian_groups_of_order(n)) out.push_back(std::move(l));
    }
    return out;
}

std::string factors_name(const std::vector<long>& f) {
    if (f.empty()) return "{1}";
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i)
        s += (i ? "," : "") + std::to_string(f[i]);
    return s + "}";
}

bool subgroup_in_list(const Subgroup& s, const std::vector<Subgroup>& list) {
    for (const auto& t : list)
        if (t.members == s.members) return true;
    return false;
}

bool isotropic(const Bicharacter& chi, const Subgroup& s) {
    for (const auto& x : s.members)
        for (const auto& y : s.members)
            if (!chi.value(x, y).is_one()) return false;
    return true;
}

// closed-form fusion of E(q,±) as a dense tensor
std::vector<std::vector<std::vector<long>>> e_closed_tensor(const Group& g) {
    auto simples = e_simples(g);
    const long k = (long)simples.size();
    auto idx = [&](const ESimple& s) {
        for (long i = 0; i < k; ++i)
            if (simples[i] == s) return i;
        throw std::logic_error("fusion produced an unknown simple");
    };
    std::vector<std::vector<std::vector<long>>> t(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (long x = 0; x < k; ++x)
        for (long y = 0; y < k; ++y)
            for (const auto& s : e_fusion(g, simples[x], simples[y])) ++t[x][y][idx(s)];
    return t;
}

// Modular data accumulated by criteria 1-5 and re-checked by criterion 9.
std::vector<std::pair<std::string, ModularData>> generated_data;

// --- criteria --------------------------------------------------------------

bool criterion_1(std::vector<std::string>& notes) {
    bool ok = true;
    for (const std::string& name : {"5.3a", "5.3b"})
        for (int tau : {+1, -1}) {
            ReproduceReport rep = reproduce_example(name, tau);
            if (!rep.matched || rep.computed.size() != 8) {
                ok = false;
                notes.push_back(name + (tau > 0 ? " tau=+" : " tau=-") + ": mismatch");
            }
            generated_data.push_back({name, rep.computed});
        }
    return ok;
}

bool criterion_2(std::vector<std::string>& notes) {
    bool ok = true;
    for (const std::string& name : {"5.4a", "5.4b", "5.4c", "5.4d"})
        for (int tau : {+1, -1}) {
            ReproduceReport rep = reproduce_example(name, tau);
            const std::string id = name + (tau > 0 ? " tau=+" : " tau=-");
            if (!rep.matched) {
                ok = false;
                notes.push_back(id + ": mismatch");
            }
            if (!rep.y_conjugated) {
                ok = false;
                notes.push_back(id + ": Y-row conjugation caveat not flagged");
            }
            generated_data.push_back({name, rep.computed});
        }
    return ok;
}

bool criterion_3(std::vector<std::string>& notes) {
    const Cyc i4 = Cyc::root_of_unity(4, 1);
    const std::vector<std::pair<std::string, Cyc>> expected = {
        {"5.3a", Cyc::from_int(1)},  {"5.3b", Cyc::from_int(-1)},
        {"5.4a", i4},                {"5.4b", i4 * i4 * i4},
        {"5.4c", Cyc::from_int(-1)}, {"5.4d", Cyc::from_int(1)},
    };
    bool ok = true;
    for (const auto& [name, want] : expected) {
        ECase ec = reproduce_case_params(name);
        QuadraticForm q = quadratic_from_diag(make_group(ec.group_factors), ec.q_diag);
        for (int tau : {+1, -1})
            if (!e_central_charge(q, tau).equals(want)) {
                ok = false;
                notes.push_back(name + ": wrong central charge");
            }
    }
    return ok;
}

bool criterion_4(std::vector<std::string>& notes) {
    std::vector<std::pair<std::string, TYCategory>> cats;
    for (const auto& f : abelian_groups_up_to(9)) {
        Group g = make_group(f);
        for (int tau : {+1, -1})
            cats.push_back({factors_name(f), make_ty(g, identity_chi(g), tau)});
    }
    {
        Group g = make_group({3, 3});
        for (int tau : {+1, -1})
            cats.push_back({"{3,3} hyperbolic", make_ty(g, hyperbolic_bicharacter(g), tau)});
    }

    bool ok = true;
    for (const auto& [name, c] : cats) {
        const long n = c.n();
        ModularData md = center_modular_data(c);
        std::string id = name + (c.tau_sign > 0 ? " tau=+" : " tau=-");
        if ((long)md.size() != 2 * n + n * (n - 1) / 2 + 2 * n) {
            ok = false;
            notes.push_back(id + ": wrong simple count");
            continue;
        }
        VerificationReport rep = check_axioms(md);
        if (!rep.global_dim.equals(Cyc::from_int(4 * n * n))) {
            ok = false;
            notes.push_back(id + ": global dimension is not 4n^2");
        }
        if (!rep.all_passed()) {
            ok = false;
            for (const auto& [label, out] :
                 {std::pair<const char*, const CheckOutcome&>{"S symmetric", rep.s_symmetric},
                  {"unitarity", rep.unitarity},
                  {"Verlinde integrality", rep.verlinde_integral},
                  {"balancing", rep.balancing},
                  {"Gauss product", rep.gauss_product},
                  {"charge modulus", rep.charge_modulus},
                  {"weak integrality", rep.weak_integrality}})
                if (!out.passed) notes.push_back(id + ": " + label + " failed (" + out.detail + ")");
        }
        generated_data.push_back({"center " + id, std::move(md)});
    }
    return ok;
}

bool criterion_5(std::vector<std::string>& notes) {
    bool ok = true;
    for (const auto& f : abelian_groups_up_to(25, /*odd_only=*/true)) {
        Group g = make_group(f);
        QuadraticForm q = quadratic_from_diag(g, std::vector<long>(g.rank(), 1));
        auto closed = e_closed_tensor(g);
        for (int sign : {+1, -1}) {
            ModularData md = e_modular_data(q, sign);
            std::string id = factors_name(f) + (sign > 0 ? " +" : " -");
            if (verlinde(md) != closed) {
                ok = false;
                notes.push_back(id + ": Verlinde fusion differs from the closed rules");
            }
            generated_data.push_back({"eseries " + id, std::move(md)});
        }
    }
    return ok;
}

bool criterion_6(std::vector<std::string>& notes) {
    bool ok = true;
    for (const auto& f : abelian_groups_up_to(12)) {
        Group g = make_group(f);
        TYCategory c = make_ty(g, identity_chi(g), +1);
        if (pointed_nondegenerate(c) != (g.order() % 2 == 1)) {
            ok = false;
            notes.push_back(factors_name(f) + ": parity mismatch");
        }
    }
    return ok;
}

bool criterion_7(std::vector<std::string>& notes) {
    bool ok = true;
    auto expect_gt = [&](const std::string& id, const Bicharacter& chi, bool want) {
        TYCategory c = make_ty(chi.group, chi, +1);
        GTResult r = is_group_theoretical(c);
        if (r.value != want || r.witness.has_value() != want) {
            ok = false;
            notes.push_back(id + ": expected " + (want ? "group-theoretical" : "not"));
            return;
        }
        if (want) {
            const Subgroup& L = *r.witness;
            if (L.order() * L.order() != chi.group.order() || !isotropic(chi, L)) {
                ok = false;
                notes.push_back(id + ": witness is not Lagrangian");
            }
        }
    };

    Group g33 = make_group({3, 3});
    expect_gt("{3,3} hyperbolic", hyperbolic_bicharacter(g33), true);
    expect_gt("{3,3} elliptic", identity_chi(g33), false);
    for (long p : {3, 5, 7}) expect_gt("{" + std::to_string(p) + "}", identity_chi(make_group({p})), false);

    // every 2-group of square order <= 64: constructive witness == some
    // exhaustively found Lagrangian
    for (long n : {4, 16, 64})
        for (const auto& f : abelian_groups_of_order(n)) {
            Group g = make_group(f);
            Bicharacter chi = identity_chi(g);
            expect_gt(factors_name(f), chi, true);
            Subgroup greedy = find_isotropic_2group(chi);
            if (greedy.order() * greedy.order() != n || !isotropic(chi, greedy)) {
                ok = false;
                notes.push_back(factors_name(f) + ": constructive witness is not Lagrangian");
            }
            if (!subgroup_in_list(greedy, lagrangian_subgroups(chi))) {
                ok = false;
                notes.push_back(factors_name(f) + ": constructive witness missing from exhaustive list");
            }
        }

    // swap-containing G on the hyperbolic pairing: no stable Lagrangian
    TYCategory hyp = make_ty(g33, hyperbolic_bicharacter(g33), +1);
    Automorphism id{{Element{1, 0}, Element{0, 1}}};
    Automorphism swap{{Element{0, 1}, Element{1, 0}}};
    if (equivariantization_is_gt(hyp, {id, swap})) {
        ok = false;
        notes.push_back("{3,3} hyperbolic with swap: expected no stable Lagrangian");
    }
    return ok;
}

bool criterion_8(std::vector<std::string>& notes) {
    bool ok = true;
    long forms_checked = 0;

    auto check_q = [&](const std::string& id, const QuadraticForm& q) {
        const long s = gauss_ratio_sign(q);
        ++forms_checked;
        if (s != 1 && s != -1) {
            ok = false;
            notes.push_back(id + ": gauss_ratio_sign returned " + std::to_string(s));
        }
    };

    for (const auto& f : abelian_groups_up_to(25, /*odd_only=*/true)) {
        Group g = make_group(f);
        if (g.rank() == 0) {
            check_q("{1}", quadratic_from_diag(g, {}));
        } else if (g.rank() == 1) {
            const long n = g.factors[0];
            for (long a = 1; a < n; ++a)
                if (std::gcd(a, n) == 1) check_q(factors_name(f), quadratic_from_diag(g, {a}));
        } else {
            const long p = g.factors[0];  // {3,3} and {5,5}
            for (long a = 0; a < p; ++a)
                for (long b = 0; b < p; ++b)
                    for (long d = 0; d < p; ++d) {
                        Bicharacter chi =
                            bicharacter_from_exponents(g, {{a, b}, {b, d}});
                        if (!chi.nondegenerate) continue;
                        check_q(factors_name(f), quadratic_from_bicharacter(chi));
                    }
        }
    }
    if (forms_checked < 200) {
        ok = false;
        notes.push_back("only " + std::to_string(forms_checked) + " forms enumerated");
    }

    // closed forms for the prime-field Gauss sums, p <= 13
    for (long p : {3, 5, 7, 11, 13}) {
        Group g = make_group({p});
        Cyc base = sqrt_positive_integer(p);
        if (p % 4 == 3) base = Cyc::root_of_unity(4, 1) * base;
        for (long a = 1; a < p; ++a) {
            Cyc want = legendre_symbol(a, p) == 1 ? base : -base;
            if (!gauss_sum(quadratic_from_diag(g, {a})).equals(want)) {
                ok = false;
                notes.push_back("p=" + std::to_string(p) + " a=" + std::to_string(a) +
                                ": Gauss sum differs from the closed form");
            }
        }
    }
    return ok;
}

bool criterion_9(std::vector<std::string>& notes) {
    bool ok = true;
    if (generated_data.size() < 50) {
        ok = false;
        notes.push_back("expected the earlier criteria to leave at least 50 data sets");
    }
    for (const auto& [id, md] : generated_data) {
        CheckOutcome t61 = theorem_6_1_check(md);
        CheckOutcome p62 = prop_6_2_check(md);
        if (!t61.passed || t61.skipped) {
            ok = false;
            notes.push_back(id + ": zero-row check failed (" + t61.detail + ")");
        }
        if (!p62.passed || p62.skipped) {
            ok = false;
            notes.push_back(id + ": 3t+u check failed (" + p62.detail + ")");
        }
    }

    // fault injection: flip one structural zero of S to a nonzero value
    Group g = make_group({3});
    ModularData md = center_modular_data(make_ty(g, identity_chi(g), +1));
    bool flipped = false;
    for (std::size_t i = 0; i < md.size() && !flipped; ++i)
        for (std::size_t j = 0; j < md.size() && !flipped; ++j)
            if (md.S[i][j].is_zero()) {
                md.S[i][j] = Cyc::from_int(1);
                flipped = true;
            }
    if (!flipped) {
        ok = false;
        notes.push_back("no zero entry found to corrupt");
    } else if (check_axioms(md).all_passed()) {
        ok = false;
        notes.push_back("corrupted S passed the axiom suite");
    }
    return ok;
}

bool criterion_10(std::vector<std::string>& notes) {
    const int kRounds = 10000;
    std::atomic<long> failures{0};
    std::mutex note_mutex;

#pragma omp parallel for schedule(dynamic, 16)
    for (int it = 0; it < kRounds; ++it) {
        std::mt19937 rng(20240817 + it);
        std::uniform_int_distribution<long> order_pick(1, 120);
        const long m = order_pick(rng);

        auto random_elt = [&]() {
            Cyc v = Cyc::zero();
            std::uniform_int_distribution<long> e(0, m - 1), q(-4, 4);
            const int terms = 1 + (int)(rng() % 3);
            for (int t = 0; t < terms; ++t) {
                long num = q(rng);
                long den = 1 + (long)(rng() % 3);
                v = v + Cyc::from_rational(Rat(num, den)) * Cyc::root_of_unity(m, e(rng));
            }
            return v;
        };

        auto fail = [&](const char* what) {
            failures.fetch_add(1, std::memory_order_relaxed);
            std::lock_guard<std::mutex> lock(note_mutex);
            if (notes.size() < 3)
                notes.push_back(std::string(what) + " at iteration " + std::to_string(it));
        };

        Cyc a = random_elt(), b = random_elt(), d = random_elt();
        if (!((a + b) + d).equals(a + (b + d))) fail("addition associativity");
        if (!(a * (b + d)).equals(a * b + a * d)) fail("distributivity");
        if (!((a * b) * d).equals(a * (b * d))) fail("multiplication associativity");
        if (!(a * b).conjugate().equals(a.conjugate() * b.conjugate())) fail("conjugation");
        if (!a.is_zero() && !(a * a.inv()).equals(Cyc::from_int(1))) fail("inverse");

        const long k = (long)(rng() % m);
        Cyc z = Cyc::root_of_unity(m, k);
        Cyc r = canonical_sqrt_root_of_unity(z);
        if (!(r * r).equals(z)) fail("sqrt round trip");
        auto v = r.to_complex_approx();
        if (!(v.real() > 1e-12 || (std::abs(v.real()) < 1e-12 && v.imag() > 0)))
            fail("sqrt branch");

        if (it % 4 == 0) {
            const long mm = m * (1 + (long)(rng() % 3));
            if (mm <= 120 && !a.embed(mm).descend().equals(a.descend()))
                fail("embed/descend round trip");
        }
    }
    if (failures.load() != 0)
        notes.push_back(std::to_string(failures.load()) + " of " + std::to_string(kRounds) +
                        " rounds failed");
    return failures.load() == 0;
}

} // namespace

int main() {
    run_criterion(1, "golden 5.3 tables, both forms, both signs", 5.0, criterion_1);
    run_criterion(2, "golden 5.4 tables with the Y-row caveat flagged", 5.0, criterion_2);
    run_criterion(3, "pinned central charges for all six cases", 0.0, criterion_3);
    run_criterion(4, "axiom suite on every center with |A| <= 9", 120.0, criterion_4);
    run_criterion(5, "Verlinde fusion equals the closed rules, odd n <= 25", 120.0, criterion_5);
    run_criterion(6, "pointed nondegeneracy tracks |A| parity, |A| <= 12", 0.0, criterion_6);
    run_criterion(7, "Lagrangian criterion with constructive witnesses", 0.0, criterion_7);
    run_criterion(8, "Gauss ratio signs and prime closed forms", 0.0, criterion_8);
    run_criterion(9, "zero-structure theorems and fault injection", 0.0, criterion_9);
    run_criterion(10, "randomized exact-arithmetic kernel properties", 30.0, criterion_10);

    int passed = 0;
    for (const auto& c : results) {
        std::printf("[%2d] %s  %s (%.2fs%s)\n", c.number, c.passed ? "PASS" : "FAIL",
                    c.title.c_str(), c.elapsed,
                    c.limit_seconds > 0
                        ? (", limit " + std::to_string((int)c.limit_seconds) + "s").c_str()
                        : "");
        for (const auto& n : c.notes) std::printf("       - %s\n", n.c_str());
        passed += c.passed ? 1 : 0;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, results.size());
    return passed == (int)results.size() ? 0 : 1;
}
