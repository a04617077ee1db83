#pragma once

#include "fusec/group.hpp"

namespace fusec {

GroupPtr cyclic(int n);
GroupPtr dihedral(int order);          // order = 2n, n >= 1
GroupPtr dicyclic(int order);          // order = 4n; dicyclic(8) = Q8
GroupPtr elementary_abelian(int p, int rank);
// A x| C_n where the generator of C_n acts as x -> x^k on C_m (k^n = 1 mod m)
GroupPtr metacyclic(int m, int n, int k);
GroupPtr symmetric3();
GroupPtr alternating4();
GroupPtr symmetric4();
GroupPtr sl23();                       // Q8 x| C3
GroupPtr generalized_dihedral(const GroupPtr& abelian);  // A x| C2 by inversion

struct CatalogEntry {
    std::string name;
    GroupPtr grp;
};

// Every group of the given order (1..24), pairwise non-isomorphic.
std::vector<CatalogEntry> groups_of_order(int n);
// All groups of order <= max_order (the theorem-checking corpus).
std::vector<CatalogEntry> corpus(int max_order = 24);
// Lookup by catalog name ("S4", "D8", "Q8", ...); throws if unknown.
GroupPtr catalog_group(const std::string& name);

} // namespace fusec
