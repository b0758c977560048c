#include "mtc/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mtc {

long Group::order() const {
    long n = 1;
    for (long f : factors) n *= f;
    return n;
}

long Group::exponent() const { return factors.empty() ? 1 : factors.back(); }

Element Group::reduce(Element x) const {
    if (x.size() != factors.size()) throw std::invalid_argument("element rank mismatch");
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] %= factors[i];
        if (x[i] < 0) x[i] += factors[i];
    }
    return x;
}

Element Group::add(const Element& a, const Element& b) const {
    Element out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return reduce(std::move(out));
}

Element Group::neg(const Element& a) const {
    Element out(a);
    for (auto& v : out) v = -v;
    return reduce(std::move(out));
}

Element Group::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Group::scalar_mul(long k, const Element& a) const {
    Element out(a);
    for (auto& v : out) v *= k;
    return reduce(std::move(out));
}

long Group::order_of(const Element& a) const {
    long ord = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        long o = factors[i] / std::gcd(a[i], factors[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

long Group::index_of(const Element& a) const {
    Element x = reduce(a);
    long idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + x[i];
    return idx;
}

Element Group::element_at(long idx) const {
    Element x(factors.size(), 0);
    for (size_t i = factors.size(); i-- > 0;) {
        x[i] = idx % factors[i];
        idx /= factors[i];
    }
    return x;
}

std::vector<Element> Group::elements() const {
    std::vector<Element> out;
    long n = order();
    out.reserve(n);
    for (long i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

std::string Group::element_to_string(const Element& a) const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

Element Group::element_from_string(const std::string& s) const {
    std::string t = s;
    if (!t.empty() && t.front() == '(') t = t.substr(1);
    if (!t.empty() && t.back() == ')') t.pop_back();
    Element out;
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stol(tok));
    }
    if (out.size() != factors.size()) throw std::invalid_argument("element literal rank mismatch: " + s);
    return reduce(std::move(out));
}

Group make_group(std::vector<long> cyclic_orders) {
    // split into prime powers, then rebuild invariant factors greedily
    std::map<long, std::vector<long>> ppows;  // prime -> exponents (descending later)
    for (long n : cyclic_orders) {
        if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
        long m = n;
        for (long p = 2; p * p <= m; ++p) {
            if (m % p != 0) continue;
            long e = 0;
            while (m % p == 0) { m /= p; ++e; }
            ppows[p].push_back(e);
        }
        if (m > 1) ppows[m].push_back(1);
    }
    size_t k = 0;
    for (auto& [p, es] : ppows) {
        std::sort(es.begin(), es.end(), std::greater<long>());
        k = std::max(k, es.size());
    }
    std::vector<long> inv(k, 1);
    for (auto& [p, es] : ppows) {
        for (size_t i = 0; i < es.size(); ++i) {
            long q = 1;
            for (long j = 0; j < es[i]; ++j) q *= p;
            inv[i] *= q;
        }
    }
    // inv[0] is largest; store ascending so d_1 | d_2 | ... | d_k
    std::reverse(inv.begin(), inv.end());
    Group g;
    g.factors = std::move(inv);
    return g;
}

bool Subgroup::contains(const Element& x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

Subgroup subgroup_generated_by(const Group& g, const std::vector<Element>& gens) {
    std::set<Element> closure;
    closure.insert(g.zero());
    for (const auto& gen : gens) {
        Element cur = g.reduce(gen);
        std::set<Element> next(closure);
        // add all multiples of gen combined with what we have
        long o = g.order_of(cur);
        for (long k = 1; k < o; ++k) {
            Element m = g.scalar_mul(k, cur);
            for (const auto& h : closure) next.insert(g.add(h, m));
        }
        closure = std::move(next);
    }
    Subgroup s;
    s.members.assign(closure.begin(), closure.end());
    s.generators = gens;
    if (s.generators.empty()) s.generators.push_back(g.zero());
    return s;
}

long max_group_order_bound(long fallback) {
    if (const char* env = std::getenv("MTC_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return fallback;
}

std::vector<Subgroup> enumerate_subgroups(const Group& g, long max_order) {
    if (g.order() > max_order)
        throw std::runtime_error(
            "enumerate_subgroups: group order " + std::to_string(g.order()) +
            " exceeds bound " + std::to_string(max_order) +
            " (set MTC_MAX_GROUP_ORDER to raise)");
    // BFS over closures: start from the trivial subgroup, repeatedly extend by
    // one new element.  Deduplicate by member list.
    std::set<std::vector<Element>> seen;
    std::vector<Subgroup> out;
    std::vector<Element> all = g.elements();

    std::vector<Subgroup> frontier;
    Subgroup triv;
    triv.members.push_back(g.zero());
    triv.generators.push_back(g.zero());
    seen.insert(triv.members);
    out.push_back(triv);
    frontier.push_back(triv);

    while (!frontier.empty()) {
        std::vector<Subgroup> next_frontier;
        for (const auto& h : frontier) {
            for (const auto& x : all) {
                if (h.contains(x)) continue;
                std::vector<Element> gens = h.generators;
                gens.push_back(x);
                Subgroup hx = subgroup_generated_by(g, gens);
                if (seen.insert(hx.members).second) {
                    out.push_back(hx);
                    next_frontier.push_back(std::move(hx));
                }
            }
        }
        frontier = std::move(next_frontier);
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Cyc character_eval(const Group& g, const Element& c, const Element& x) {
    Cyc v = Cyc::from_int(1);
    for (size_t i = 0; i < g.factors.size(); ++i) {
        long d = g.factors[i];
        v = v * Cyc::root_of_unity(d, (c[i] * x[i]) % d);
    }
    return v;
}

Element Automorphism::apply(const Group& g, const Element& x) const {
    Element out = g.zero();
    for (size_t i = 0; i < x.size(); ++i)
        out = g.add(out, g.scalar_mul(x[i], gen_images[i]));
    return out;
}

std::vector<Automorphism> all_automorphisms(const Group& g, size_t limit) {
    std::vector<Automorphism> out;
    size_t r = g.rank();
    if (r == 0) {
        out.push_back(Automorphism{});
        return out;
    }
    long n = g.order();
    // candidate tuples of generator images; prune by element order and
    // well-definedness (image order must divide the factor's order)
    double total = 1;
    for (size_t i = 0; i < r; ++i) total *= (double)n;
    if (total > (double)limit)
        throw std::runtime_error("automorphism enumeration too large");

    std::vector<long> idx(r, 0);
    std::vector<Element> all = g.elements();
    while (true) {
        Automorphism a;
        a.gen_images.reserve(r);
        bool ok = true;
        for (size_t i = 0; i < r && ok; ++i) {
            const Element& img = all[idx[i]];
            // phi(e_i) must have order dividing d_i
            long o = g.order_of(img);
            if (g.factors[i] % o != 0) ok = false;
            a.gen_images.push_back(img);
        }
        if (ok) {
            // bijectivity: image subgroup must be everything
            Subgroup im = subgroup_generated_by(g, a.gen_images);
            if (im.order() == n) out.push_back(a);
        }
        size_t pos = 0;
        while (pos < r && ++idx[pos] == n) idx[pos++] = 0;
        if (pos == r) break;
    }
    return out;
}

} // namespace mtc
