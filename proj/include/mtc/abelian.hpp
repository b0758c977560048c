#pragma once

// Finite abelian groups in invariant-factor form, their elements, subgroup
// enumeration, and characters.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtc/cyclotomic.hpp"

namespace mtc {

using Element = std::vector<long>;  // one coordinate per invariant factor

struct Group {
    std::vector<long> factors;  // d_1 | d_2 | ... | d_k, all > 1 (empty = trivial group)

    long order() const;
    long exponent() const;  // last invariant factor (1 for the trivial group)
    size_t rank() const { return factors.size(); }

    Element zero() const { return Element(factors.size(), 0); }
    Element reduce(Element x) const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;
    Element scalar_mul(long k, const Element& a) const;
    long order_of(const Element& a) const;

    // lexicographic-by-coordinate enumeration; index 0 is the zero element
    long index_of(const Element& a) const;
    Element element_at(long idx) const;
    std::vector<Element> elements() const;

    std::string element_to_string(const Element& a) const;
    Element element_from_string(const std::string& s) const;

    bool operator==(const Group& o) const { return factors == o.factors; }
};

// Normalizes an arbitrary list of cyclic orders into invariant factors,
// e.g. {2,3} -> {6}, {4,6} -> {2,12}.  Factors of 1 are dropped.
Group make_group(std::vector<long> cyclic_orders);

struct Subgroup {
    std::vector<Element> members;     // sorted lexicographically; members[0] = 0
    std::vector<Element> generators;  // some generating set

    long order() const { return (long)members.size(); }
    bool contains(const Element& x) const;
};

// All subgroups, deduplicated, ordered by (order, member list).  Throws if
// `max_order` bounds the order of the group itself (exhaustive closure
// enumeration is only reasonable at desk scale); throws if exceeded.
// The MTC_MAX_GROUP_ORDER environment variable, when set, overrides the
// default.
std::vector<Subgroup> enumerate_subgroups(const Group& g, long max_order = 1024);

// Effective desk-scale order bound: `fallback` unless MTC_MAX_GROUP_ORDER
// is set to a positive integer.
long max_group_order_bound(long fallback = 1024);

// Closure of a set of generators.
Subgroup subgroup_generated_by(const Group& g, const std::vector<Element>& gens);

// Characters of A are labelled by elements c of A itself:
//   chi_c(x) = prod_i zeta_{d_i}^{c_i x_i}.
Cyc character_eval(const Group& g, const Element& c, const Element& x);

// An automorphism is stored as the images of the standard generators e_i.
struct Automorphism {
    std::vector<Element> gen_images;
    Element apply(const Group& g, const Element& x) const;
};

// Brute-force enumeration of Aut(A); guarded by `limit` on candidate tuples.
std::vector<Automorphism> all_automorphisms(const Group& g, size_t limit = 2000000);

} // namespace mtc
