#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fusec/common.hpp"

namespace fusec {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct PermutationOrigin {
    int degree = 0;
    std::vector<std::vector<int>> generators;
};

// A finite group as a dense multiplication table on element indices
// 0..order-1, with index 0 the identity.  Immutable after construction.
struct FiniteGroup {
    int order = 1;
    std::vector<int> table;    // table[a*order+b] = a*b
    std::vector<int> inverse;  // inverse[a]*a = 0
    std::vector<std::string> labels;  // empty, or one label per element
    std::string name;                 // optional display name
    std::optional<PermutationOrigin> origin;
    std::uint64_t fingerprint = 0;

    int mul(int a, int b) const { return table[a * order + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int power(int a, long e) const;
    int element_order(int a) const;
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const;
    bool is_p_group(int p) const { return p_part(order, p) == order; }
    std::string label(int a) const;

    // Identity/inverse structure is always verified; associativity is
    // verified exhaustively when full_check is set (untrusted tables).
    static GroupPtr make(std::vector<int> table, std::vector<std::string> labels = {},
                         std::string name = {}, bool full_check = false);
    // Exhaustive associativity check over all triples.
    void validate() const;
};

// Closure of permutation generators acting on {0..degree-1}.  Elements are
// sorted lexicographically (identity first), labels get cycle notation.
GroupPtr from_permutation_generators(int degree, const std::vector<std::vector<int>>& generators,
                                     int max_order = kMaxGroupOrder);

// Explicit table input; runs the full associativity check.
GroupPtr from_cayley(const std::vector<std::vector<int>>& rows,
                     std::vector<std::string> labels = {}, std::string name = {});

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// index (x,y) <-> x*|B|+y in the product
inline int product_index(const GroupPtr& b, int x, int y) { return x * b->order + y; }

// Semidirect product A x| B; action[b] is the automorphism of A induced by b.
GroupPtr semidirect_product(const GroupPtr& a, const GroupPtr& b,
                            const std::vector<std::vector<int>>& action, std::string name = {});

// An element subset of a parent group, closed under product and inverse.
struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;    // sorted ascending, starts with 0
    std::vector<int> generators;  // greedy ascending generating subset

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
    int position_of(int x) const;  // index into elements, -1 if absent
    bool is_abelian() const;
    bool is_subset_of(const Subgroup& other) const;
    bool same_elements(const Subgroup& other) const { return elements == other.elements; }
};

// order, then lexicographic element set; the canonical ordering everywhere
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
// Elements must already form a subgroup ("not a subgroup" otherwise).
Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<int> elements);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens);
std::vector<int> closure_of(const GroupPtr& g, const std::vector<int>& seed);
// Greedy ascending generating subset of a closed element set.
std::vector<int> greedy_generators(const GroupPtr& g, const std::vector<int>& elements);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal(const GroupPtr& g, const Subgroup& n);

// A subgroup rebuilt as a standalone group, with index maps both ways.
struct Materialized {
    GroupPtr grp;
    std::vector<int> to_parent;    // local index -> parent index
    std::vector<int> from_parent;  // parent index -> local index, -1 outside
};
Materialized materialize(const Subgroup& h);

// Quotient G/N with cosets ordered by least representative.
struct QuotientResult {
    GroupPtr grp;
    std::vector<int> coset_of;  // parent element -> coset index
    std::vector<int> rep_of;    // coset index -> least representative
};
QuotientResult quotient(const GroupPtr& g, const Subgroup& n);

// Elementwise map between subgroups of (possibly different) parents;
// images[k] is the image of domain.elements[k] in codomain.parent indices.
struct GroupHom {
    Subgroup domain;
    Subgroup codomain;
    std::vector<int> images;

    int apply(int x) const { return images[domain.position_of(x)]; }
    std::vector<int> image_elements() const;  // sorted
    bool is_multiplicative() const;
    bool is_injective() const;
    bool is_identity_map() const;
};

GroupHom identity_hom(const Subgroup& p);
GroupHom inclusion_hom(const Subgroup& p, const Subgroup& q);  // p <= q required
GroupHom conjugation_hom(const GroupPtr& g, int by, const Subgroup& p);  // c_by on p
GroupHom compose(const GroupHom& second, const GroupHom& first);         // second(first(x))
GroupHom invert_iso(const GroupHom& h);
GroupHom restrict_hom(const GroupHom& h, const Subgroup& smaller_domain);

} // namespace fusec
