#include "mtc/ty.hpp"

#include <numeric>
#include <stdexcept>

namespace mtc {

namespace {

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Exponent of character_eval(g, c, x) to base exponent(g).
long character_exponent(const Group& g, const Element& c, const Element& x) {
    long E = g.exponent();
    long e = 0;
    for (size_t i = 0; i < g.rank(); ++i)
        e = mod(e + c[i] * x[i] % E * (E / g.factors[i]), E);
    return e;
}

} // namespace

Cyc TYCategory::sqrt_n() const { return sqrt_positive_integer(group.order()); }

Cyc TYCategory::tau() const {
    Cyc t = sqrt_n().inv();
    return tau_sign < 0 ? -t : t;
}

TYCategory make_ty(const Group& g, const Bicharacter& chi, int tau_sign) {
    if (chi.group.factors != g.factors)
        throw std::invalid_argument("pairing is defined on a different group");
    if (!chi.symmetric || !chi.nondegenerate)
        throw std::invalid_argument("TY data needs a nondegenerate symmetric pairing");
    if (tau_sign != 1 && tau_sign != -1)
        throw std::invalid_argument("tau sign must be +1 or -1");
    TYCategory c;
    c.group = g;
    c.chi = chi;
    c.tau_sign = tau_sign;
    c.ambient_order = std::lcm(std::lcm(8L, 2 * g.exponent()), 4 * g.order());
    return c;
}

TYSimple ty_invertible(const Element& a) { return TYSimple{false, a}; }
TYSimple ty_m() { return TYSimple{true, {}}; }

std::vector<TYSimple> ty_simples(const TYCategory& c) {
    std::vector<TYSimple> out;
    for (long i = 0; i < c.n(); ++i) out.push_back(ty_invertible(c.group.element_at(i)));
    out.push_back(ty_m());
    return out;
}

std::vector<TYSimple> ty_fusion(const TYCategory& c, const TYSimple& s,
                                const TYSimple& t) {
    if (!s.is_m && !t.is_m) return {ty_invertible(c.group.add(s.a, t.a))};
    if (s.is_m && t.is_m) {
        std::vector<TYSimple> out;
        for (long i = 0; i < c.n(); ++i) out.push_back(ty_invertible(c.group.element_at(i)));
        return out;
    }
    return {ty_m()};
}

ScalarComponents ty_associator(const TYCategory& c, const TYSimple& s,
                               const TYSimple& t, const TYSimple& u) {
    const Group& g = c.group;
    ScalarComponents out;
    if (!s.is_m && t.is_m && !u.is_m) {
        out.index.push_back("");
        out.scalars.push_back(c.chi.value(s.a, u.a));
    } else if (s.is_m && !t.is_m && u.is_m) {
        for (long i = 0; i < c.n(); ++i) {
            Element b = g.element_at(i);
            out.index.push_back("b=" + g.element_to_string(b));
            out.scalars.push_back(c.chi.value(t.a, b));
        }
    } else if (s.is_m && t.is_m && u.is_m) {
        Cyc tau = c.tau();
        for (long i = 0; i < c.n(); ++i)
            for (long j = 0; j < c.n(); ++j) {
                Element a = g.element_at(i), b = g.element_at(j);
                out.index.push_back("(a,b)=(" + g.element_to_string(a) + "," +
                                    g.element_to_string(b) + ")");
                out.scalars.push_back(tau * c.chi.value(a, b).inv());
            }
    } else {
        out.index.push_back("");
        out.scalars.push_back(Cyc::from_rational(1));
    }
    return out;
}

bool RelCenterSimple::operator==(const RelCenterSimple& o) const {
    if (is_z != o.is_z) return false;
    if (is_z) return rho == o.rho;
    return a == o.a && phi == o.phi;
}

std::string RelCenterSimple::to_string(const Group& g) const {
    if (!is_z) return "X(" + g.element_to_string(a) + ";" + g.element_to_string(phi) + ")";
    RhoFunction r = rho.normalized();
    std::string s = "Z(order" + std::to_string(r.value_order) + ":";
    for (size_t i = 0; i < r.expo.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.expo[i]);
    }
    return s + ")";
}

std::vector<RelCenterSimple> relcenter_simples(const TYCategory& c) {
    const Group& g = c.group;
    std::vector<RelCenterSimple> out;
    for (long ai = 0; ai < c.n(); ++ai)
        for (long ci = 0; ci < c.n(); ++ci) {
            RelCenterSimple s;
            s.a = g.element_at(ai);
            s.phi = g.element_at(ci);
            out.push_back(std::move(s));
        }
    for (auto& rho : solve_rho(c.chi)) {
        RelCenterSimple s;
        s.is_z = true;
        s.rho = rho.normalized();
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// rho'(x) = rho(x) phi(x) chi(x,a)^{-1}: the X(a,phi)-twist of rho.
RhoFunction twist_rho(const TYCategory& c, const RhoFunction& rho,
                      const Element& a, const Element& phi) {
    const Group& g = c.group;
    long E = g.exponent();
    long L = std::lcm(rho.value_order, E);
    long ai = g.index_of(a);
    RhoFunction out;
    out.group = g;
    out.value_order = L;
    out.expo.assign(g.order(), 0);
    for (long xi = 0; xi < g.order(); ++xi) {
        Element x = g.element_at(xi);
        long e = rho.expo[xi] * (L / rho.value_order);
        e = mod(e + character_exponent(g, phi, x) * (L / E), L);
        e = mod(e - c.chi.expo[xi][ai] * (L / E), L);
        out.expo[xi] = e;
    }
    return out.normalized();
}

} // namespace

std::vector<RelCenterSimple> relcenter_fusion(const TYCategory& c,
                                              const RelCenterSimple& u,
                                              const RelCenterSimple& v) {
    const Group& g = c.group;
    long E = g.exponent();
    std::vector<RelCenterSimple> out;

    if (!u.is_z && !v.is_z) {
        RelCenterSimple s;
        s.a = g.add(u.a, v.a);
        s.phi = g.add(u.phi, v.phi);
        out.push_back(std::move(s));
    } else if (!u.is_z && v.is_z) {
        RelCenterSimple s;
        s.is_z = true;
        s.rho = twist_rho(c, v.rho, u.a, u.phi);
        out.push_back(std::move(s));
    } else if (u.is_z && !v.is_z) {
        RelCenterSimple s;
        s.is_z = true;
        s.rho = twist_rho(c, u.rho, v.a, v.phi);
        out.push_back(std::move(s));
    } else {
        // Z(rho') (x) Z(rho) = sum over a of X(a, psi_a) with
        // psi_a(x) = chi(x,a) rho'(x) rho(-x)^{-1}.
        const RhoFunction& rp = u.rho;
        const RhoFunction& rr = v.rho;
        long L = std::lcm(std::lcm(rp.value_order, rr.value_order), E);
        for (long ai = 0; ai < g.order(); ++ai) {
            Element a = g.element_at(ai);
            Element c_label(g.rank(), 0);
            for (size_t i = 0; i < g.rank(); ++i) {
                Element ei(g.rank(), 0);
                ei[i] = 1;
                long gi = g.index_of(ei);
                long ni = g.index_of(g.neg(ei));
                long t = mod(c.chi.expo[gi][ai] * (L / E) +
                                 rp.expo[gi] * (L / rp.value_order) -
                                 rr.expo[ni] * (L / rr.value_order),
                             L);
                if (t * g.factors[i] % L != 0)
                    throw std::logic_error("Z x Z summand is not a character");
                c_label[i] = t * g.factors[i] / L % g.factors[i];
            }
            RelCenterSimple s;
            s.a = a;
            s.phi = c_label;
            out.push_back(std::move(s));
        }
    }
    return out;
}

RelCenterSimple t_delta(const TYCategory& c, const RelCenterSimple& u) {
    if (u.is_z) return u;
    const Group& g = c.group;
    RelCenterSimple s;
    s.a = g.neg(unhat(c.chi, u.phi));
    s.phi = g.neg(hat(c.chi, u.a));
    return s;
}

Cyc gamma_scalar(const TYCategory& c, const RelCenterSimple& u) {
    if (!u.is_z) {
        long E = c.group.exponent();
        return Cyc::root_of_unity(E, character_exponent(c.group, u.phi, u.a));
    }
    return c.tau() * gauss_sum(u.rho, -1);
}

ScalarComponents crossed_braiding(const TYCategory& c, const RelCenterSimple& u,
                                  const RelCenterSimple& v) {
    const Group& g = c.group;
    ScalarComponents out;
    if (!u.is_z && !v.is_z) {
        out.index.push_back("");
        long E = g.exponent();
        out.scalars.push_back(Cyc::root_of_unity(E, character_exponent(g, v.phi, u.a)));
    } else if (!u.is_z && v.is_z) {
        out.index.push_back("");
        out.scalars.push_back(v.rho.value(u.a));
    } else if (u.is_z && !v.is_z) {
        out.index.push_back("");
        out.scalars.push_back(Cyc::from_rational(1));
    } else {
        for (long ai = 0; ai < g.order(); ++ai) {
            Element a = g.element_at(ai);
            out.index.push_back("a=" + g.element_to_string(a));
            long ni = g.index_of(g.neg(a));
            out.scalars.push_back(
                Cyc::root_of_unity(v.rho.value_order, -v.rho.expo[ni]));
        }
    }
    return out;
}

} // namespace mtc
