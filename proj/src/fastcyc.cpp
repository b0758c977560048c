#include "mtc/fastcyc.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mtc {

namespace {

// Phi_m over the integers by the divisor recursion.  Coefficients at the
// orders reachable here are tiny, so long long is comfortable.
std::vector<long long> phi_poly_int(long m, std::map<long, std::vector<long long>>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const auto den = phi_poly_int(d, memo);
        std::vector<long long> quot(num.size() - den.size() + 1, 0);
        for (long i = (long)quot.size() - 1; i >= 0; --i) {
            long long c = num[i + den.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
        }
        num = std::move(quot);
    }
    memo[m] = num;
    return num;
}

struct ReductionTable {
    long m = 1;
    long phi = 1;
    std::vector<std::vector<long long>> pow;  // pow[e] = x^e mod Phi_m, length phi
};

ReductionTable make_reduction_table(long m) {
    std::map<long, std::vector<long long>> memo;
    const auto poly = phi_poly_int(m, memo);
    ReductionTable t;
    t.m = m;
    t.phi = (long)poly.size() - 1;
    t.pow.assign(m, std::vector<long long>(t.phi, 0));
    std::vector<long long> cur(t.phi, 0);
    cur[0] = 1;
    t.pow[0] = cur;
    for (long e = 1; e < m; ++e) {
        // multiply by x: shift, then fold x^phi = -(lower part of Phi) back in
        long long lead = cur[t.phi - 1];
        for (long i = t.phi - 1; i >= 1; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (lead != 0)
            for (long i = 0; i < t.phi; ++i) cur[i] -= lead * poly[i];
        t.pow[e] = cur;
    }
    return t;
}

mpz_class mpz_from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    mpz_class hi((unsigned long)(u >> 64));
    mpz_class lo((unsigned long)(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    if (neg) r = -r;
    return r;
}

// Collapse an exponent-space accumulator (length M, values * scale_den) into a
// field element via the reduction table.
Cyc collapse(const std::vector<long long>& r, const ReductionTable& table,
             const mpz_class& scale_den) {
    std::vector<__int128> acc(table.phi, 0);
    for (long e = 0; e < table.m; ++e) {
        if (r[e] == 0) continue;
        const auto& row = table.pow[e];
        for (long t = 0; t < table.phi; ++t)
            if (row[t] != 0) acc[t] += (__int128)r[e] * row[t];
    }
    std::vector<Rat> coeffs(table.phi);
    for (long t = 0; t < table.phi; ++t)
        coeffs[t] = Rat(mpz_from_i128(acc[t]), scale_den);
    return Cyc::from_coefficients(table.m, std::move(coeffs));
}

// Largest per-entry L1 coefficient norm, used for the int64 overflow guard.
long long max_entry_norm(const SparseCycMatrix& sp) {
    long long best = 0;
    for (const auto& row : sp.entry)
        for (const auto& terms : row) {
            long long n = 0;
            for (const auto& [e, c] : terms) n += std::abs(c);
            best = std::max(best, n);
        }
    return best;
}

} // namespace

SparseCycMatrix sparse_from_matrix(const std::vector<std::vector<Cyc>>& m) {
    SparseCycMatrix sp;
    long M = 1;
    for (const auto& row : m)
        for (const auto& v : row) M = std::lcm(M, v.order());
    sp.order = M;

    std::vector<std::vector<Cyc>> emb(m.size());
    mpz_class den = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        emb[i].reserve(m[i].size());
        for (const auto& v : m[i]) {
            Cyc w = v.embed(M);
            for (const auto& c : w.coeffs())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
            emb[i].push_back(std::move(w));
        }
    }
    if (!den.fits_slong_p())
        throw std::runtime_error("sparse_from_matrix: common denominator out of range");
    sp.scale = den.get_si();

    sp.entry.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        sp.entry[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            const auto& co = emb[i][j].coeffs();
            for (long e = 0; e < (long)co.size(); ++e) {
                if (co[e] == 0) continue;
                mpz_class t = den / co[e].get_den() * co[e].get_num();
                if (!t.fits_slong_p())
                    throw std::runtime_error("sparse_from_matrix: coefficient out of range");
                sp.entry[i][j].emplace_back(e, (long long)t.get_si());
            }
        }
    }
    return sp;
}

std::vector<std::vector<Cyc>> gram_matrix_reference(const std::vector<std::vector<Cyc>>& a) {
    const std::size_t k = a.size();
    std::vector<std::vector<Cyc>> g(k, std::vector<Cyc>(k, Cyc::zero()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Cyc s = Cyc::zero();
            for (std::size_t w = 0; w < a[i].size(); ++w)
                s = s + a[i][w] * a[j][w].conjugate();
            g[i][j] = s;
        }
    return g;
}

std::vector<std::vector<Cyc>> gram_matrix(const std::vector<std::vector<Cyc>>& a, bool parallel) {
    const std::size_t k = a.size();
    if (k == 0) return {};
    SparseCycMatrix sp = sparse_from_matrix(a);
    const long M = sp.order;
    const std::size_t cols = a[0].size();

    // int64 accumulator bound: cols * (max L1 norm)^2 per bucket
    const long long norm = max_entry_norm(sp);
    if (norm > 0 && (__int128)cols * norm * norm >
                        (__int128)std::numeric_limits<long long>::max() / 4)
        return gram_matrix_reference(a);

    const ReductionTable table = make_reduction_table(M);
    const mpz_class scale2 = mpz_class((long)sp.scale) * mpz_class((long)sp.scale);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) pairs.emplace_back(i, j);

    std::vector<std::vector<Cyc>> g(k, std::vector<Cyc>(k, Cyc::zero()));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long p = 0; p < (long)pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        std::vector<long long> r(M, 0);
        for (std::size_t w = 0; w < cols; ++w)
            for (const auto& [e1, c1] : sp.entry[i][w])
                for (const auto& [e2, c2] : sp.entry[j][w])
                    r[(e1 + M - e2) % M] += c1 * c2;
        Cyc val = collapse(r, table, scale2);
        g[i][j] = val;
        if (i != j) g[j][i] = val.conjugate();
    }
    return g;
}

namespace {

struct VerlindeProblem {
    std::size_t k = 0;
    long m = 1;
    SparseCycMatrix s;                                           // scaled S
    std::vector<std::vector<std::pair<long, long long>>> weight; // scaled 1/S[unit][w]
    // N = accumulated * num_extra / denom with denom = D_num * scale_S^3 * scale_W
    mpz_class denom;
    mpz_class num_extra;
};

VerlindeProblem make_problem(const ModularData& md) {
    VerlindeProblem pb;
    pb.k = md.size();

    auto dglob = md.global_dim().is_rational();
    if (!dglob || *dglob <= 0)
        throw std::runtime_error("verlinde: global dimension is not a positive rational");

    std::vector<std::vector<Cyc>> unit_inv(1);
    for (std::size_t w = 0; w < pb.k; ++w) {
        const Cyc& u = md.S[md.unit][w];
        if (u.equals(Cyc::zero()))
            throw std::runtime_error("verlinde: unit row of S vanishes at column " +
                                     std::to_string(w));
        unit_inv[0].push_back(u.inv());
    }

    pb.s = sparse_from_matrix(md.S);
    SparseCycMatrix wm = sparse_from_matrix(unit_inv);
    pb.m = std::lcm(pb.s.order, wm.order);
    if (pb.m != pb.s.order || pb.m != wm.order) {
        // rescale exponents into the common order
        auto lift = [&](SparseCycMatrix& sp) {
            const long f = pb.m / sp.order;
            for (auto& row : sp.entry)
                for (auto& terms : row)
                    for (auto& [e, c] : terms) e *= f;
            sp.order = pb.m;
        };
        lift(pb.s);
        lift(wm);
    }
    pb.weight = std::move(wm.entry[0]);

    Rat d = *dglob;
    mpz_class sc = mpz_class((long)pb.s.scale);
    pb.denom = sc * sc * sc * mpz_class((long)wm.scale) * d.get_num();
    pb.num_extra = d.get_den();
    return pb;
}

} // namespace

std::vector<std::vector<std::vector<long>>> verlinde_tensor(const ModularData& md,
                                                            bool parallel) {
    VerlindeProblem pb = make_problem(md);
    const std::size_t k = pb.k;
    const long M = pb.m;
    const ReductionTable table = make_reduction_table(M);

    std::vector<std::vector<std::vector<long>>> n(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x; y < k; ++y) pairs.emplace_back(x, y);

    std::string first_error;
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long p = 0; p < (long)pairs.size(); ++p) {
        if (failed.load(std::memory_order_relaxed)) continue;
        const auto [x, y] = pairs[p];

        // U_w = S[x][w] * S[y][w] * weight[w], merged in exponent space
        std::vector<std::vector<std::pair<long, long long>>> u(k);
        std::vector<long long> scratch(M, 0);
        for (std::size_t w = 0; w < k; ++w) {
            std::vector<long> touched;
            for (const auto& [e1, c1] : pb.s.entry[x][w])
                for (const auto& [e2, c2] : pb.s.entry[y][w])
                    for (const auto& [e3, c3] : pb.weight[w]) {
                        const long e = (e1 + e2 + e3) % M;
                        if (scratch[e] == 0) touched.push_back(e);
                        scratch[e] += c1 * c2 * c3;
                    }
            for (long e : touched) {
                if (scratch[e] != 0) u[w].emplace_back(e, scratch[e]);
                scratch[e] = 0;
            }
        }

        std::vector<long long> r(M, 0);
        for (std::size_t z = 0; z < k; ++z) {
            std::fill(r.begin(), r.end(), 0);
            for (std::size_t w = 0; w < k; ++w)
                for (const auto& [e1, c1] : u[w])
                    for (const auto& [e2, c2] : pb.s.entry[z][w])
                        r[(e1 + M - e2) % M] += c1 * c2;

            // the sum must reduce to a rational multiple of 1
            std::vector<__int128> acc(table.phi, 0);
            for (long e = 0; e < M; ++e) {
                if (r[e] == 0) continue;
                const auto& row = table.pow[e];
                for (long t = 0; t < table.phi; ++t)
                    if (row[t] != 0) acc[t] += (__int128)r[e] * row[t];
            }
            bool bad = false;
            for (long t = 1; t < table.phi && !bad; ++t)
                if (acc[t] != 0) bad = true;
            mpz_class val = bad ? mpz_class(0) : mpz_from_i128(acc[0]) * pb.num_extra;
            if (bad || val % pb.denom != 0 || val < 0) {
                std::ostringstream os;
                os << "verlinde: N[" << x << "][" << y << "][" << z
                   << "] is not a nonnegative integer";
#pragma omp critical
                if (first_error.empty()) first_error = os.str();
                failed.store(true, std::memory_order_relaxed);
                break;
            }
            mpz_class q = val / pb.denom;
            if (!q.fits_slong_p()) {
#pragma omp critical
                if (first_error.empty()) first_error = "verlinde: coefficient out of range";
                failed.store(true, std::memory_order_relaxed);
                break;
            }
            n[x][y][z] = q.get_si();
            n[y][x][z] = n[x][y][z];
        }
    }
    if (!first_error.empty()) throw std::runtime_error(first_error);
    return n;
}

std::vector<std::vector<std::vector<long>>> verlinde_tensor_reference(const ModularData& md) {
    const std::size_t k = md.size();
    auto dglob = md.global_dim().is_rational();
    if (!dglob || *dglob <= 0)
        throw std::runtime_error("verlinde: global dimension is not a positive rational");
    const Cyc dinv = Cyc::from_rational(Rat(1) / *dglob);

    std::vector<Cyc> unit_inv;
    for (std::size_t w = 0; w < k; ++w) {
        if (md.S[md.unit][w].equals(Cyc::zero()))
            throw std::runtime_error("verlinde: unit row of S vanishes at column " +
                                     std::to_string(w));
        unit_inv.push_back(md.S[md.unit][w].inv());
    }

    std::vector<std::vector<std::vector<long>>> n(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z) {
                Cyc s = Cyc::zero();
                for (std::size_t w = 0; w < k; ++w)
                    s = s + md.S[x][w] * md.S[y][w] * md.S[z][w].conjugate() * unit_inv[w];
                s = s * dinv;
                auto r = s.is_rational();
                if (!r || r->get_den() != 1 || *r < 0)
                    throw std::runtime_error("verlinde: N[" + std::to_string(x) + "][" +
                                             std::to_string(y) + "][" + std::to_string(z) +
                                             "] is not a nonnegative integer");
                n[x][y][z] = (long)r->get_num().get_si();
                n[y][x][z] = n[x][y][z];
            }
    return n;
}

} // namespace mtc
