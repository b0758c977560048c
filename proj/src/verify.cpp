#include "mtc/verify.hpp"

#include "mtc/fastcyc.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace mtc {

namespace {

std::string coord(const ModularData& md, std::size_t i, std::size_t j) {
    return "(" + md.labels[i] + ", " + md.labels[j] + ")";
}

// d_y^2 for every label, or nullopt on the first non-integer (with a note).
std::optional<std::vector<long>> dims_squared(const ModularData& md, std::string* why) {
    std::vector<long> out(md.size());
    for (std::size_t i = 0; i < md.size(); ++i) {
        auto r = (md.dims[i] * md.dims[i]).is_rational();
        if (!r || r->get_den() != 1 || *r <= 0) {
            if (why) *why = "d^2 is not a positive integer at label " + md.labels[i];
            return std::nullopt;
        }
        out[i] = (long)r->get_num().get_si();
    }
    return out;
}

} // namespace

bool VerificationReport::all_passed() const {
    for (const CheckOutcome* c : {&s_symmetric, &unitarity, &verlinde_integral, &balancing,
                                  &gauss_product, &charge_modulus, &weak_integrality})
        if (!c->passed) return false;
    return true;
}

std::vector<std::vector<std::vector<long>>> verlinde(const ModularData& md, bool parallel) {
    return verlinde_tensor(md, parallel);
}

VerificationReport check_axioms(const ModularData& md, bool with_verlinde, bool parallel) {
    VerificationReport rep;
    const std::size_t k = md.size();

    for (std::size_t i = 0; i < k && rep.s_symmetric.passed; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!md.S[i][j].equals(md.S[j][i])) {
                rep.s_symmetric = {false, false, "S asymmetric at " + coord(md, i, j)};
                break;
            }

    rep.global_dim = md.global_dim();
    {
        std::string why;
        auto dsq = dims_squared(md, &why);
        auto dtot = rep.global_dim.is_rational();
        if (!dsq)
            rep.weak_integrality = {false, false, why};
        else if (!dtot || dtot->get_den() != 1 || *dtot <= 0)
            rep.weak_integrality = {false, false, "global dimension is not a positive integer"};
    }

    {
        auto gram = gram_matrix(md.S, parallel);
        for (std::size_t i = 0; i < k && rep.unitarity.passed; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const Cyc want = (i == j) ? rep.global_dim : Cyc::zero();
                if (!gram[i][j].equals(want)) {
                    rep.unitarity = {false, false,
                                     "S S-dagger differs from (sum d^2) I at " + coord(md, i, j)};
                    break;
                }
            }
    }

    rep.p_plus = Cyc::zero();
    rep.p_minus = Cyc::zero();
    for (std::size_t i = 0; i < k; ++i) {
        const Cyc dd = md.dims[i] * md.dims[i];
        rep.p_plus = rep.p_plus + md.theta[i] * dd;
        rep.p_minus = rep.p_minus + md.theta[i].inv() * dd;
    }
    if (!(rep.p_plus * rep.p_minus).equals(rep.global_dim))
        rep.gauss_product = {false, false, "p+ p- differs from the global dimension"};
    if (!(rep.p_plus * rep.p_plus.conjugate()).equals(rep.global_dim))
        rep.charge_modulus = {false, false, "|p+|^2 differs from the global dimension"};

    if (auto dtot = rep.global_dim.is_rational();
        dtot && dtot->get_den() == 1 && *dtot > 0 && !rep.p_minus.equals(Cyc::zero())) {
        rep.central_charge =
            rep.p_minus * sqrt_positive_integer((long)dtot->get_num().get_si()).inv();
        rep.has_charge = true;
    }

    if (!with_verlinde) {
        rep.verlinde_integral = {true, true, "skipped"};
        rep.balancing = {true, true, "skipped"};
        return rep;
    }

    try {
        rep.fusion = verlinde_tensor(md, parallel);
    } catch (const std::runtime_error& e) {
        rep.verlinde_integral = {false, false, e.what()};
        rep.balancing = {true, true, "skipped: no fusion tensor"};
        return rep;
    }

    // balancing: S_xy = theta_x^-1 theta_y^-1 sum_z N_xyz theta_z d_z
    {
        std::vector<Cyc> u(k, Cyc::zero());
        for (std::size_t z = 0; z < k; ++z) u[z] = md.theta[z] * md.dims[z];
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = x; y < k; ++y) pairs.emplace_back(x, y);
        std::string first_error;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long p = 0; p < (long)pairs.size(); ++p) {
            if (failed.load(std::memory_order_relaxed)) continue;
            const auto [x, y] = pairs[p];
            Cyc rhs = Cyc::zero();
            for (std::size_t z = 0; z < k; ++z) {
                const long nz = rep.fusion[x][y][z];
                if (nz == 0) continue;
                rhs = rhs + Cyc::from_int(nz) * u[z];
            }
            if (!(md.S[x][y] * md.theta[x] * md.theta[y]).equals(rhs)) {
#pragma omp critical
                if (first_error.empty())
                    first_error = "balancing fails at " + coord(md, x, y);
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (!first_error.empty()) rep.balancing = {false, false, first_error};
    }
    return rep;
}

ZeroStructure zero_structure(const ModularData& md, std::size_t x) {
    std::string why;
    auto dsq = dims_squared(md, &why);
    if (!dsq) throw std::invalid_argument("zero_structure: " + why);

    ZeroStructure zs;
    for (std::size_t y = 0; y < md.size(); ++y) {
        const Cyc& s = md.S[x][y];
        if (s.abs_squared().equals(Cyc::from_int((*dsq)[y]))) {
            zs.u_set.push_back(y);
            zs.dim_u += (*dsq)[y];
        }
        if (s.equals(Cyc::zero())) {
            zs.t_set.push_back(y);
            zs.dim_t += (*dsq)[y];
        } else if (y != md.unit) {
            zs.d_set.push_back(y);
            zs.dim_d += (*dsq)[y];
        }
    }
    return zs;
}

CheckOutcome theorem_6_1_check(const ModularData& md) {
    std::string why;
    auto dsq = dims_squared(md, &why);
    if (!dsq) return {true, true, "skipped: " + why};
    for (std::size_t x = 0; x < md.size(); ++x) {
        if ((*dsq)[x] <= 1) continue;
        ZeroStructure zs = zero_structure(md, x);
        if (zs.t_set.empty())
            return {false, false, "row " + md.labels[x] + " has no zero entry"};
        if (zs.dim_t < (*dsq)[x] - 1) {
            std::ostringstream os;
            os << "row " << md.labels[x] << ": dim(T) = " << zs.dim_t << " < d^2 - 1 = "
               << (*dsq)[x] - 1;
            return {false, false, os.str()};
        }
    }
    return {};
}

CheckOutcome prop_6_2_check(const ModularData& md) {
    std::string why;
    auto dsq = dims_squared(md, &why);
    if (!dsq) return {true, true, "skipped: " + why};
    auto dtot = md.global_dim().is_rational();
    if (!dtot || dtot->get_den() != 1)
        return {true, true, "skipped: global dimension is not an integer"};
    const long total = (long)dtot->get_num().get_si();
    for (std::size_t x = 0; x < md.size(); ++x) {
        if ((*dsq)[x] <= 1) continue;
        ZeroStructure zs = zero_structure(md, x);
        if (3 * zs.dim_t + zs.dim_u <= total) {
            std::ostringstream os;
            os << "row " << md.labels[x] << ": 3*" << zs.dim_t << " + " << zs.dim_u
               << " <= " << total;
            return {false, false, os.str()};
        }
    }
    return {};
}

CheckOutcome galois_product_check(const ModularData& md, std::size_t x) {
    std::string why;
    auto dsq = dims_squared(md, &why);
    if (!dsq) return {true, true, "skipped: " + why};
    ZeroStructure zs = zero_structure(md, x);
    Cyc prod = Cyc::from_int(1);
    for (std::size_t y : zs.d_set) {
        const Cyc base = md.S[x][y].abs_squared() * Cyc::from_rational(Rat(1, (*dsq)[y]));
        for (long e = 0; e < (*dsq)[y]; ++e) prod = prod * base;
    }
    auto r = prod.is_rational();
    if (!r)
        return {false, false, "product over D_" + md.labels[x] + " is not rational"};
    if (*r < Rat(999999999, 1000000000)) {
        std::ostringstream os;
        os << "product over D_" << md.labels[x] << " = " << r->get_str() << " < 1";
        return {false, false, os.str()};
    }
    return {};
}

} // namespace mtc
