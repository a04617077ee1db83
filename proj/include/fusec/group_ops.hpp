#pragma once

#include <optional>

#include "fusec/group.hpp"

namespace fusec {

// All subgroups of g, each exactly once, sorted by order then element set.
std::vector<Subgroup> subgroups(const GroupPtr& g, int bound = kLatticeBound);

Subgroup normalizer(const GroupPtr& g, const Subgroup& p);
Subgroup centralizer(const GroupPtr& g, const Subgroup& p);
Subgroup center(const GroupPtr& g);
// N_G(P,Q) = {g : gPg^-1 <= Q}
std::vector<int> transporter(const GroupPtr& g, const Subgroup& p, const Subgroup& q);

// Lexicographically least Sylow p-subgroup.
Subgroup sylow_p(const GroupPtr& g, int p);

// Extends gens |-> images to a full homomorphism on domain if one exists.
// Returns images aligned to domain.elements, or nullopt on inconsistency.
std::optional<std::vector<int>> extend_hom(const Subgroup& domain, const GroupPtr& target,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& gen_images);

// All automorphisms of p, exhaustive over generator images.
std::vector<GroupHom> automorphisms(const Subgroup& p, int bound = kAutBound);

// Largest normal p-subgroup (intersection of the Sylow p-subgroups).
Subgroup o_p(const GroupPtr& g, int p);
// O^p(K): subgroup generated by the p'-order elements of K.
Subgroup p_residual(const Subgroup& k, int p);
// Fixpoint of K |-> O^p(K); the largest p-perfect subgroup of c.
Subgroup max_p_perfect(const Subgroup& c, int p);
bool is_p_perfect(const Subgroup& k, int p);

// J(S): generated by the abelian subgroups of maximal order.
Subgroup thompson_subgroup(const GroupPtr& s, int bound = kLatticeBound);

Subgroup derived_subgroup(const GroupPtr& g);
// rank of G/[G,G]G^p over GF(p)
int p_rank_of_abelianization(const GroupPtr& g, int p);

std::vector<int> minimal_generators(const GroupPtr& g);

// Brute-force isomorphism test (generator-image backtracking).
bool is_isomorphic(const GroupPtr& a, const GroupPtr& b);

// Group built from a closed set of permutations of {0..w-1}, with
// product = composition (f*g)(x) = f(g(x)).  The identity permutation is
// lexicographically least, so it lands at index 0.
struct MapGroup {
    GroupPtr grp;
    std::vector<std::vector<int>> maps;  // group index -> permutation
    int index_of(const std::vector<int>& m) const;
};
MapGroup group_from_maps(std::vector<std::vector<int>> maps);

} // namespace fusec
