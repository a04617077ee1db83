#include "fusec/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fusec {

std::vector<Subgroup> subgroups(const GroupPtr& g, int bound) {
    if (g->order > bound) throw error("lattice too large");
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> todo;
    std::vector<int> triv{0};
    seen.insert(triv);
    todo.push_back(triv);
    while (!todo.empty()) {
        auto h = todo.back();
        todo.pop_back();
        for (int x = 1; x < g->order; ++x) {
            if (std::binary_search(h.begin(), h.end(), x)) continue;
            auto k = h;
            k.push_back(x);
            auto closed = closure_of(g, k);
            if (seen.insert(closed).second) todo.push_back(std::move(closed));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& elems : seen) {
        Subgroup h{g, elems, greedy_generators(g, elems)};
        out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& p) {
    if (p.parent != g) throw error("not a subgroup");
    std::vector<int> elems;
    for (int x = 0; x < g->order; ++x) {
        bool ok = true;
        for (int h : p.elements)
            if (!p.contains(g->conj(x, h))) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(x);
    }
    return subgroup_from_elements(g, std::move(elems));
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& p) {
    if (p.parent != g) throw error("not a subgroup");
    std::vector<int> elems;
    for (int x = 0; x < g->order; ++x) {
        bool ok = true;
        for (int h : p.elements)
            if (g->mul(x, h) != g->mul(h, x)) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(x);
    }
    return subgroup_from_elements(g, std::move(elems));
}

Subgroup center(const GroupPtr& g) { return centralizer(g, full_subgroup(g)); }

std::vector<int> transporter(const GroupPtr& g, const Subgroup& p, const Subgroup& q) {
    if (p.parent != g || q.parent != g) throw error("not a subgroup");
    std::vector<int> out;
    for (int x = 0; x < g->order; ++x) {
        bool ok = true;
        for (int h : p.elements)
            if (!q.contains(g->conj(x, h))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

Subgroup sylow_p(const GroupPtr& g, int p) {
    if (!is_prime(p)) throw input_error("not a prime");
    int target = p_part(g->order, p);
    std::vector<int> cur{0};
    while (static_cast<int>(cur.size()) < target) {
        Subgroup h{g, cur, {}};
        auto n = normalizer(g, h);
        bool grown = false;
        for (int x : n.elements) {
            if (h.contains(x)) continue;
            int q = g->element_order(x);
            if (p_part(q, p) != q) continue;
            cur = closure_of(g, [&] {
                auto s = cur;
                s.push_back(x);
                return s;
            }());
            grown = true;
            break;
        }
        if (!grown) throw error("sylow growth stalled");  // cannot happen in a group
    }
    // deterministic choice: least element set among all conjugates
    std::vector<int> best = cur;
    for (int x = 0; x < g->order; ++x) {
        std::vector<int> conj(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) conj[i] = g->conj(x, cur[i]);
        std::sort(conj.begin(), conj.end());
        if (conj < best) best = conj;
    }
    return subgroup_from_elements(g, std::move(best));
}

std::optional<std::vector<int>> extend_hom(const Subgroup& domain, const GroupPtr& target,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& gen_images) {
    const auto& d = *domain.parent;
    int n = domain.size();
    std::vector<int> img(n, -1);
    img[0] = 0;
    std::vector<int> queue{0};
    std::size_t head = 0;
    while (head < queue.size()) {
        int pos = queue[head++];
        int x = domain.elements[pos];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int xg = d.mul(x, gens[i]);
            int pos2 = domain.position_of(xg);
            if (pos2 < 0) return std::nullopt;  // gens do not stay inside domain
            int y = target->mul(img[pos], gen_images[i]);
            if (img[pos2] < 0) {
                img[pos2] = y;
                queue.push_back(pos2);
            } else if (img[pos2] != y) {
                return std::nullopt;
            }
        }
    }
    for (int v : img)
        if (v < 0) return std::nullopt;  // gens do not generate domain
    return img;
}

std::vector<GroupHom> automorphisms(const Subgroup& p, int bound) {
    if (p.size() > bound) throw error("automorphism search too large");
    const auto& g = *p.parent;
    std::vector<int> gens = p.generators;
    if (gens.empty()) return {identity_hom(p)};

    std::vector<int> orders(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) orders[i] = g.element_order(gens[i]);

    std::vector<GroupHom> out;
    std::vector<int> choice(gens.size(), 0);
    std::vector<int> cand;
    for (int x : p.elements) cand.push_back(x);

    // exhaustive assignment of generator images, order-matched, verified at leaf
    std::vector<std::size_t> idx(gens.size(), 0);
    std::vector<int> images(gens.size());
    std::size_t level = 0;
    while (true) {
        if (idx[level] == cand.size()) {
            if (level == 0) break;
            idx[level] = 0;
            --level;
            ++idx[level];
            continue;
        }
        int c = cand[idx[level]];
        if (g.element_order(c) != orders[level]) {
            ++idx[level];
            continue;
        }
        images[level] = c;
        if (level + 1 < gens.size()) {
            ++level;
            continue;
        }
        auto full = extend_hom(p, p.parent, gens, images);
        if (full) {
            std::vector<int> sorted = *full;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == p.elements) out.push_back(GroupHom{p, p, *full});
        }
        ++idx[level];
    }
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
    return out;
}

Subgroup o_p(const GroupPtr& g, int p) {
    auto s = sylow_p(g, p);
    std::vector<char> keep(g->order, 0);
    for (int x : s.elements) keep[x] = 1;
    for (int x = 0; x < g->order; ++x) {
        std::vector<int> conj(s.elements.size());
        for (std::size_t i = 0; i < s.elements.size(); ++i) conj[i] = g->conj(x, s.elements[i]);
        std::vector<char> in(g->order, 0);
        for (int y : conj) in[y] = 1;
        for (int y = 0; y < g->order; ++y)
            if (keep[y] && !in[y]) keep[y] = 0;
    }
    std::vector<int> elems;
    for (int x = 0; x < g->order; ++x)
        if (keep[x]) elems.push_back(x);
    auto h = subgroup_from_elements(g, std::move(elems));
    if (!is_normal(g, h)) throw error("O_p intersection is not normal");
    return h;
}

Subgroup p_residual(const Subgroup& k, int p) {
    const auto& g = *k.parent;
    std::vector<int> gens;
    for (int x : k.elements)
        if (g.element_order(x) % p != 0) gens.push_back(x);
    auto elems = closure_of(k.parent, gens);
    return subgroup_from_elements(k.parent, std::move(elems));
}

Subgroup max_p_perfect(const Subgroup& c, int p) {
    Subgroup cur = c;
    while (true) {
        auto next = p_residual(cur, p);
        if (next.elements == cur.elements) return cur;
        cur = std::move(next);
    }
}

bool is_p_perfect(const Subgroup& k, int p) {
    return p_residual(k, p).elements == k.elements;
}

Subgroup thompson_subgroup(const GroupPtr& s, int bound) {
    auto subs = subgroups(s, bound);
    std::size_t best = 1;
    for (const auto& h : subs)
        if (h.is_abelian()) best = std::max(best, h.elements.size());
    std::vector<int> gens;
    for (const auto& h : subs)
        if (h.elements.size() == best && h.is_abelian())
            gens.insert(gens.end(), h.elements.begin(), h.elements.end());
    return generated_subgroup(s, gens);
}

Subgroup derived_subgroup(const GroupPtr& g) {
    std::vector<int> gens;
    for (int a = 0; a < g->order; ++a)
        for (int b = 0; b < g->order; ++b)
            gens.push_back(g->mul(g->mul(a, b), g->inv(g->mul(b, a))));
    return generated_subgroup(g, gens);
}

int p_rank_of_abelianization(const GroupPtr& g, int p) {
    std::vector<int> gens;
    for (int a = 0; a < g->order; ++a) {
        for (int b = 0; b < g->order; ++b)
            gens.push_back(g->mul(g->mul(a, b), g->inv(g->mul(b, a))));
        gens.push_back(g->power(a, p));
    }
    auto k = generated_subgroup(g, gens);
    return int_log(g->order / k.size(), p);
}

std::vector<int> minimal_generators(const GroupPtr& g) {
    return full_subgroup(g).generators;
}

bool is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
    if (a->order != b->order) return false;
    std::multiset<int> oa, ob;
    for (int x = 0; x < a->order; ++x) oa.insert(a->element_order(x));
    for (int x = 0; x < b->order; ++x) ob.insert(b->element_order(x));
    if (oa != ob) return false;

    auto pa = full_subgroup(a);
    auto gens = pa.generators;
    if (gens.empty()) return true;
    std::vector<int> orders(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) orders[i] = a->element_order(gens[i]);

    std::vector<std::size_t> idx(gens.size(), 0);
    std::vector<int> images(gens.size());
    std::size_t level = 0;
    while (true) {
        if (idx[level] == static_cast<std::size_t>(b->order)) {
            if (level == 0) return false;
            idx[level] = 0;
            --level;
            ++idx[level];
            continue;
        }
        int c = static_cast<int>(idx[level]);
        if (b->element_order(c) != orders[level]) {
            ++idx[level];
            continue;
        }
        images[level] = c;
        if (level + 1 < gens.size()) {
            ++level;
            continue;
        }
        auto full = extend_hom(pa, b, gens, images);
        if (full) {
            std::vector<int> sorted = *full;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            if (static_cast<int>(sorted.size()) == b->order) return true;
        }
        ++idx[level];
    }
}

int MapGroup::index_of(const std::vector<int>& m) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), m);
    if (it == maps.end() || *it != m) return -1;
    return static_cast<int>(it - maps.begin());
}

MapGroup group_from_maps(std::vector<std::vector<int>> maps) {
    std::sort(maps.begin(), maps.end());
    maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
    // the identity map is lexicographically least, so it sits at index 0
    MapGroup mg;
    mg.maps = std::move(maps);
    int n = static_cast<int>(mg.maps.size());
    if (n == 0 || n > kMaxGroupOrder) throw error("group too large");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[mg.maps[i]] = i;
    std::size_t width = mg.maps[0].size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // product = composition: (f*g)(x) = f(g(x))
            std::vector<int> comp(width);
            for (std::size_t t = 0; t < width; ++t) comp[t] = mg.maps[i][mg.maps[j][t]];
            auto it = index.find(comp);
            if (it == index.end()) throw error("map set is not closed under composition");
            table[i * n + j] = it->second;
        }
    mg.grp = FiniteGroup::make(std::move(table));
    return mg;
}

} // namespace fusec
