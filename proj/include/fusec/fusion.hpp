#pragma once

#include <string>

#include "fusec/group_ops.hpp"

namespace fusec {

// A morphism P -> Q stored elementwise: images[k] is the image (in S
// coordinates) of the k-th element of the domain subgroup.
using Mor = std::vector<int>;

// A fusion system over a finite p-group S: every subgroup of S is an
// object, and every ordered pair carries its full, deduplicated,
// canonically sorted morphism set.
struct FusionSystem {
    GroupPtr S;
    int p = 2;
    std::vector<Subgroup> objs;                      // all subgroups, canonical order
    std::vector<std::vector<std::vector<Mor>>> hom;  // hom[i][j], sorted
    std::string provenance;

    // set when built from a finite group: S sits inside ambient via s_to_ambient
    GroupPtr ambient;
    std::vector<int> s_to_ambient;

    int obj_count() const { return static_cast<int>(objs.size()); }
    int full_index() const { return obj_count() - 1; }  // S itself (largest)
    int obj_index(const std::vector<int>& elements) const;  // -1 if absent
    int index_of(const Subgroup& h) const;
    const std::vector<Mor>& morphisms(int i, int j) const { return hom[i][j]; }
    long morphism_count() const;

    std::vector<int> mor_image(int i, const Mor& m) const;  // sorted image set
    std::vector<int> iso_class(int i) const;                // F-conjugate object indices
    std::vector<Mor> aut_s(int i) const;                    // conjugations by N_S(P)
    bool mor_present(int i, int j, const Mor& m) const;
};

struct FusionGenerators {
    GroupPtr S;
    int p = 2;
    std::vector<GroupHom> maps;  // injective, between subgroups of S
};

FusionSystem fusion_of_group(const GroupPtr& g, int p, int lattice_bound = kLatticeBound,
                             long budget = kMorphismBudget);
FusionSystem generate_fusion(const FusionGenerators& gens, long budget = kMorphismBudget);

// Exhaustive verification of the fusion-system axioms (conjugation maps
// present, closure under composition/restriction/inversion, iso-inclusion
// factorization).  Throws on violation.
void validate_fusion(const FusionSystem& f);

bool fusion_equal(const FusionSystem& a, const FusionSystem& b);

bool is_fully_normalized(const FusionSystem& f, int i);
bool is_fully_centralized(const FusionSystem& f, int i);
bool is_fully_normalized(const FusionSystem& f, const Subgroup& p);
bool is_fully_centralized(const FusionSystem& f, const Subgroup& p);

struct SaturationReport {
    bool saturated = true;
    std::string axiom;      // violated axiom on failure
    std::string witness;    // offending subgroup / morphism
};
SaturationReport is_saturated(const FusionSystem& f);

bool is_centric(const FusionSystem& f, int i);
std::vector<Subgroup> centric_subgroups(const FusionSystem& f);

// Aut_F(P), Inn(P) inside it, and Out_F(P) = Aut_F(P)/Inn(P).
struct AutomizerData {
    MapGroup aut;          // maps are position permutations of P.elements
    Subgroup inn;          // inner automorphisms inside aut.grp
    QuotientResult out;    // aut.grp / inn
};
AutomizerData automizer(const FusionSystem& f, int i);

bool is_radical(const FusionSystem& f, int i);
std::vector<Subgroup> radical_subgroups(const FusionSystem& f);
bool has_strongly_p_embedded(const GroupPtr& h, int p);
bool is_essential(const FusionSystem& f, int i);  // convention: S itself excluded
std::vector<Subgroup> essential_subgroups(const FusionSystem& f);

bool is_strongly_closed(const FusionSystem& f, const Subgroup& t);

// Z(F): elements of Z(S) fixed by every morphism defined on them.
Subgroup fusion_center(const FusionSystem& f);

FusionSystem normalizer_subsystem(const FusionSystem& f, const Subgroup& q,
                                  long budget = kMorphismBudget);
FusionSystem centralizer_subsystem(const FusionSystem& f, const Subgroup& q,
                                   long budget = kMorphismBudget);

FusionSystem product_fusion(const FusionSystem& f1, const FusionSystem& f2,
                            long budget = kMorphismBudget);

// The inner system F_S(S).
FusionSystem inner_fusion(const GroupPtr& s, int p, long budget = kMorphismBudget);

// True if dropping maps[k] still generates the same system.
bool generator_redundant(const FusionGenerators& gens, std::size_t k, long budget = kMorphismBudget);

} // namespace fusec
