#pragma once

// Brute-force reference computations for the test suite.  Everything here
// recomputes results from first definitions, independent of the library's
// algorithms, so library outputs can be checked against frozen values.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "fusec/group.hpp"

namespace oracle {

// order of the closure of permutation generators, products to fixpoint
inline int perm_closure_order(int degree, std::vector<std::vector<int>> gens) {
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    bool grew = true;
    gens.push_back(id);
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(seen.begin(), seen.end());
        for (const auto& a : cur)
            for (const auto& b : gens) {
                std::vector<int> ab(degree);
                for (int i = 0; i < degree; ++i) ab[i] = b[a[i]];
                if (seen.insert(ab).second) grew = true;
            }
    }
    return static_cast<int>(seen.size());
}

// every subset of the element set that is a subgroup by definition
inline std::vector<std::vector<int>> subgroup_sets_by_subsets(const fusec::GroupPtr& g) {
    int n = g->order;
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        if (!(mask & 1)) continue;  // must contain the identity
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask & (1UL << i)) elems.push_back(i);
        bool closed = true;
        for (int a : elems) {
            if (!(mask & (1UL << g->inv(a)))) closed = false;
            for (int b : elems)
                if (!(mask & (1UL << g->mul(a, b)))) closed = false;
            if (!closed) break;
        }
        if (closed) out.push_back(elems);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// automorphism count over all identity-fixing bijections (small groups only)
inline int automorphism_count_by_bijections(const fusec::GroupPtr& g) {
    int n = g->order;
    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    int count = 0;
    do {
        bool hom = true;
        auto img = [&](int x) { return x == 0 ? 0 : perm[x - 1]; };
        for (int a = 0; a < n && hom; ++a)
            for (int b = 0; b < n; ++b)
                if (img(g->mul(a, b)) != g->mul(img(a), img(b))) {
                    hom = false;
                    break;
                }
        if (hom) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// transporter set from the bare definition
inline std::vector<int> transporter_by_definition(const fusec::GroupPtr& g,
                                                  const std::vector<int>& p,
                                                  const std::vector<int>& q) {
    std::vector<int> out;
    for (int x = 0; x < g->order; ++x) {
        bool ok = true;
        for (int h : p) {
            int c = g->mul(g->mul(x, h), g->inv(x));
            if (!std::binary_search(q.begin(), q.end(), c)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

} // namespace oracle
