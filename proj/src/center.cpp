#include "mtc/center.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace mtc {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

std::string CenterSimple::label(const Group& g) const {
    switch (kind) {
        case Inv:
            return "X" + g.element_to_string(a) + (branch == 0 ? "+" : "-");
        case TwoDim:
            return "Y" + g.element_to_string(a) + g.element_to_string(b);
        default:
            return "Z" + std::to_string(rho_index) + (branch == 0 ? "+" : "-");
    }
}

std::vector<CenterSimple> center_simples(const TYCategory& c) {
    const Group& g = c.group;
    long n = g.order();
    long E = g.exponent();
    std::vector<CenterSimple> out;
    out.reserve(2 * n + n * (n - 1) / 2 + 2 * n);

    for (long ai = 0; ai < n; ++ai) {
        Element a = g.element_at(ai);
        Cyc w = Cyc::root_of_unity(E, mod(-c.chi.expo[ai][ai], E));
        auto roots = sqrt_root_of_unity(w);
        for (int br = 0; br < 2; ++br) {
            CenterSimple s;
            s.kind = CenterSimple::Inv;
            s.a = a;
            s.branch = br;
            s.root = br == 0 ? roots.first : roots.second;
            out.push_back(std::move(s));
        }
    }
    for (long ai = 0; ai < n; ++ai)
        for (long bi = ai + 1; bi < n; ++bi) {
            CenterSimple s;
            s.kind = CenterSimple::TwoDim;
            s.a = g.element_at(ai);
            s.b = g.element_at(bi);
            out.push_back(std::move(s));
        }
    auto rhos = solve_rho(c.chi);
    for (long k = 0; k < (long)rhos.size(); ++k) {
        Cyc gamma = c.tau() * gauss_sum(rhos[k], -1);
        auto roots = sqrt_root_of_unity(gamma);
        for (int br = 0; br < 2; ++br) {
            CenterSimple s;
            s.kind = CenterSimple::Big;
            s.rho_index = k;
            s.rho = rhos[k];
            s.branch = br;
            s.root = br == 0 ? roots.first : roots.second;
            out.push_back(std::move(s));
        }
    }

    if (!out[0].root.is_one())
        throw std::logic_error("unit object's half-braiding root is not 1");
    return out;
}

std::vector<Cyc> center_twists(const TYCategory& c,
                               const std::vector<CenterSimple>& simples) {
    const Group& g = c.group;
    long E = g.exponent();
    std::vector<Cyc> theta;
    theta.reserve(simples.size());
    for (const auto& s : simples) {
        switch (s.kind) {
            case CenterSimple::Inv:
                theta.push_back(Cyc::root_of_unity(E, mod(-c.chi.exponent_of(s.a, s.a), E)));
                break;
            case CenterSimple::TwoDim:
                theta.push_back(Cyc::root_of_unity(E, mod(-c.chi.exponent_of(s.a, s.b), E)));
                break;
            default:
                theta.push_back(s.root);
        }
    }
    return theta;
}

std::vector<Cyc> center_dims(const TYCategory& c,
                             const std::vector<CenterSimple>& simples) {
    std::vector<Cyc> dims;
    dims.reserve(simples.size());
    Cyc rn = c.sqrt_n();
    for (const auto& s : simples) {
        switch (s.kind) {
            case CenterSimple::Inv: dims.push_back(Cyc::from_rational(1)); break;
            case CenterSimple::TwoDim: dims.push_back(Cyc::from_rational(2)); break;
            default: dims.push_back(rn);
        }
    }
    return dims;
}

std::vector<std::vector<Cyc>> center_S(const TYCategory& c,
                                       const std::vector<CenterSimple>& simples) {
    const Group& g = c.group;
    long n = g.order();
    long E = g.exponent();
    long N = (long)simples.size();
    Cyc rn = c.sqrt_n();
    Cyc two = Cyc::from_rational(2);

    auto root = [&](long order, long e) { return Cyc::root_of_unity(order, mod(e, order)); };

    std::vector<std::vector<Cyc>> S(N, std::vector<Cyc>(N, Cyc::zero()));
    for (long i = 0; i < N; ++i) {
        const auto& u = simples[i];
        for (long j = i; j < N; ++j) {
            const auto& v = simples[j];
            Cyc entry = Cyc::zero();
            // Case order follows the enumeration: Inv <= TwoDim <= Big.
            if (u.kind == CenterSimple::Inv && v.kind == CenterSimple::Inv) {
                entry = root(E, -2 * c.chi.exponent_of(u.a, v.a));
            } else if (u.kind == CenterSimple::Inv && v.kind == CenterSimple::TwoDim) {
                entry = two * root(E, -c.chi.exponent_of(u.a, g.add(v.a, v.b)));
            } else if (u.kind == CenterSimple::Inv && v.kind == CenterSimple::Big) {
                entry = u.root * rn * v.rho.value(u.a) * c.chi.value(u.a, u.a);
            } else if (u.kind == CenterSimple::TwoDim && v.kind == CenterSimple::TwoDim) {
                entry = two * (root(E, -c.chi.exponent_of(u.a, v.b) -
                                          c.chi.exponent_of(u.b, v.a)) +
                               root(E, -c.chi.exponent_of(u.a, v.a) -
                                          c.chi.exponent_of(u.b, v.b)));
            } else if (u.kind == CenterSimple::TwoDim && v.kind == CenterSimple::Big) {
                entry = Cyc::zero();
            } else {  // Big, Big
                long R1 = u.rho.value_order, R2 = v.rho.value_order;
                long L = std::lcm(std::lcm(R1, R2), E);
                std::vector<long> count(L, 0);
                for (long ai = 0; ai < n; ++ai)
                    count[mod(2 * c.chi.expo[ai][ai] % L * (L / E) +
                                  u.rho.expo[ai] * (L / R1) +
                                  v.rho.expo[ai] * (L / R2),
                              L)]++;
                Cyc sum = Cyc::zero();
                for (long k = 0; k < L; ++k)
                    if (count[k]) sum = sum + root(L, k) * Rat(count[k]);
                entry = (u.root * v.root).inv() * sum;
            }
            S[i][j] = entry;
            if (j != i) S[j][i] = std::move(entry);
        }
    }
    return S;
}

ModularData center_modular_data(const TYCategory& c) {
    auto simples = center_simples(c);
    ModularData md;
    md.unit = 0;
    md.labels.reserve(simples.size());
    for (const auto& s : simples) md.labels.push_back(s.label(c.group));
    md.dims = center_dims(c, simples);
    md.theta = center_twists(c, simples);
    md.S = center_S(c, simples);
    return md;
}

bool pointed_nondegenerate(const TYCategory& c) {
    const Group& g = c.group;
    long n = g.order();
    long E = g.exponent();
    std::set<std::vector<long>> rows;
    for (long ai = 0; ai < n; ++ai) {
        std::vector<long> row(n);
        for (long x = 0; x < n; ++x) row[x] = mod(2 * c.chi.expo[ai][x], E);
        rows.insert(std::move(row));
    }
    bool injective = (long)rows.size() == n;
    if (injective != (n % 2 == 1))
        throw std::logic_error("pointed nondegeneracy disagrees with |A| parity");
    return injective;
}

GTResult is_group_theoretical(const TYCategory& c) {
    GTResult r;
    auto ls = lagrangian_subgroups(c.chi);
    r.value = !ls.empty();
    if (r.value) r.witness = ls.front();
    return r;
}

bool equivariantization_is_gt(const TYCategory& c,
                              const std::vector<Automorphism>& G) {
    const Group& g = c.group;
    for (const auto& aut : G)
        for (size_t i = 0; i < g.rank(); ++i)
            for (size_t j = 0; j < g.rank(); ++j) {
                Element ei(g.rank(), 0), ej(g.rank(), 0);
                ei[i] = 1;
                ej[j] = 1;
                if (c.chi.exponent_of(aut.apply(g, ei), aut.apply(g, ej)) !=
                    c.chi.exponent_of(ei, ej))
                    throw std::invalid_argument("automorphism does not preserve the pairing");
            }
    for (const auto& L : lagrangian_subgroups(c.chi))
        if (is_G_stable(g, L, G)) return true;
    return false;
}

} // namespace mtc
