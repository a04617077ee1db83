#include "fusec/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fusec {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xFFu;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t table_fingerprint(int order, const std::vector<int>& table) {
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a(h, static_cast<std::uint64_t>(order));
    for (int v : table) h = fnv1a(h, static_cast<std::uint64_t>(v));
    return h;
}

} // namespace

int FiniteGroup::power(int a, long e) const {
    if (e < 0) return power(inv(a), -e);
    int r = 0;
    while (e > 0) {
        r = mul(r, a);
        --e;
    }
    return r;
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::label(int a) const {
    if (!labels.empty()) return labels[a];
    return "g" + std::to_string(a);
}

GroupPtr FiniteGroup::make(std::vector<int> table, std::vector<std::string> labels,
                           std::string name, bool full_check) {
    auto n2 = table.size();
    int order = 0;
    while (static_cast<std::size_t>(order) * order < n2) ++order;
    if (static_cast<std::size_t>(order) * order != n2 || order == 0)
        throw input_error("malformed multiplication table");
    if (order > kMaxGroupOrder) throw error("group too large");
    if (!labels.empty() && static_cast<int>(labels.size()) != order)
        throw input_error("label count does not match order");

    auto g = std::make_shared<FiniteGroup>();
    g->order = order;
    g->table = std::move(table);
    g->labels = std::move(labels);
    g->name = std::move(name);

    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int v = g->table[a * order + b];
            if (v < 0 || v >= order) throw input_error("table entry out of range");
        }
    for (int a = 0; a < order; ++a)
        if (g->mul(0, a) != a || g->mul(a, 0) != a)
            throw input_error("index 0 is not a two-sided identity");

    g->inverse.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g->mul(b, a) == 0) {
                if (g->mul(a, b) != 0) throw input_error("one-sided inverse");
                g->inverse[a] = b;
                break;
            }
        if (g->inverse[a] < 0) throw input_error("element without inverse");
    }
    // rows and columns must be permutations
    for (int a = 0; a < order; ++a) {
        std::vector<char> seen_row(order, 0), seen_col(order, 0);
        for (int b = 0; b < order; ++b) {
            if (seen_row[g->mul(a, b)]++) throw input_error("table row is not a permutation");
            if (seen_col[g->mul(b, a)]++) throw input_error("table column is not a permutation");
        }
    }

    g->fingerprint = table_fingerprint(order, g->table);
    if (full_check) g->validate();
    return g;
}

void FiniteGroup::validate() const {
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int ab = mul(a, b);
            for (int c = 0; c < order; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    throw input_error("product is not associative");
        }
}

namespace {

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
    // apply a first, then b
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

std::string cycle_notation(const std::vector<int>& p) {
    std::ostringstream out;
    std::vector<char> used(p.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (used[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!used[j]) {
            used[j] = 1;
            if (!first) out << ' ';
            out << j;
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out << ')';
    }
    if (!any) return "e";
    return out.str();
}

} // namespace

GroupPtr from_permutation_generators(int degree, const std::vector<std::vector<int>>& generators,
                                     int max_order) {
    if (degree <= 0) throw input_error("invalid permutation");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree) throw input_error("invalid permutation");
        std::vector<char> seen(degree, 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v]) throw input_error("invalid permutation");
            seen[v] = 1;
        }
    }

    std::vector<int> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);

    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> todo{identity};
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (const auto& g : generators) {
            auto prod = perm_compose(cur, g);
            if (seen.insert(prod).second) {
                if (static_cast<int>(seen.size()) > max_order) throw error("group too large");
                todo.push_back(prod);
            }
        }
    }

    // identity is lexicographically least, so it lands at index 0
    std::vector<std::vector<int>> elems(seen.begin(), seen.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

    int order = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            table[a * order + b] = index.at(perm_compose(elems[a], elems[b]));

    std::vector<std::string> labels(order);
    for (int a = 0; a < order; ++a) labels[a] = cycle_notation(elems[a]);

    auto g = FiniteGroup::make(std::move(table), std::move(labels));
    auto mutable_g = std::const_pointer_cast<FiniteGroup>(g);
    mutable_g->origin = PermutationOrigin{degree, generators};
    return g;
}

GroupPtr from_cayley(const std::vector<std::vector<int>>& rows, std::vector<std::string> labels,
                     std::string name) {
    int order = static_cast<int>(rows.size());
    if (order == 0 || order > kMaxGroupOrder) throw error("group too large");
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(order) * order);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != order) throw input_error("malformed multiplication table");
        table.insert(table.end(), r.begin(), r.end());
    }
    return FiniteGroup::make(std::move(table), std::move(labels), std::move(name), true);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    long order = static_cast<long>(a->order) * b->order;
    if (order > kMaxGroupOrder) throw error("group too large");
    int n = static_cast<int>(order);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < b->order; ++y1)
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < b->order; ++y2) {
                    int lhs = x1 * b->order + y1, rhs = x2 * b->order + y2;
                    table[lhs * n + rhs] = a->mul(x1, x2) * b->order + b->mul(y1, y2);
                }
    std::vector<std::string> labels(n);
    for (int x = 0; x < a->order; ++x)
        for (int y = 0; y < b->order; ++y)
            labels[x * b->order + y] = "(" + a->label(x) + "," + b->label(y) + ")";
    std::string name;
    if (!a->name.empty() && !b->name.empty()) name = a->name + "x" + b->name;
    return FiniteGroup::make(std::move(table), std::move(labels), std::move(name));
}

GroupPtr semidirect_product(const GroupPtr& a, const GroupPtr& b,
                            const std::vector<std::vector<int>>& action, std::string name) {
    long order = static_cast<long>(a->order) * b->order;
    if (order > kMaxGroupOrder) throw error("group too large");
    if (static_cast<int>(action.size()) != b->order)
        throw input_error("semidirect action must list one automorphism per element");
    int n = static_cast<int>(order);
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x1 = 0; x1 < a->order; ++x1)
        for (int y1 = 0; y1 < b->order; ++y1)
            for (int x2 = 0; x2 < a->order; ++x2)
                for (int y2 = 0; y2 < b->order; ++y2) {
                    int lhs = x1 * b->order + y1, rhs = x2 * b->order + y2;
                    // (x1,y1)(x2,y2) = (x1 * y1(x2), y1 y2)
                    table[lhs * n + rhs] = a->mul(x1, action[y1][x2]) * b->order + b->mul(y1, y2);
                }
    return FiniteGroup::make(std::move(table), {}, std::move(name));
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

int Subgroup::position_of(int x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x) return -1;
    return static_cast<int>(it - elements.begin());
}

bool Subgroup::is_abelian() const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (!parent->commute(elements[i], elements[j])) return false;
    return true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(),
                         elements.end());
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
}

std::vector<int> closure_of(const GroupPtr& g, const std::vector<int>& seed) {
    std::vector<char> in(g->order, 0);
    std::vector<int> elems{0}, todo{0};
    in[0] = 1;
    for (int x : seed)
        if (!in[x]) {
            if (x < 0 || x >= g->order) throw input_error("element index out of range");
            in[x] = 1;
            elems.push_back(x);
            todo.push_back(x);
        }
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (int p : {g->mul(x, elems[i]), g->mul(elems[i], x)}) {
                if (!in[p]) {
                    in[p] = 1;
                    elems.push_back(p);
                    todo.push_back(p);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> greedy_generators(const GroupPtr& g, const std::vector<int>& elements) {
    std::vector<int> gens;
    std::vector<int> have{0};
    for (int x : elements) {
        if (std::binary_search(have.begin(), have.end(), x)) continue;
        gens.push_back(x);
        have = closure_of(g, gens);
        if (have.size() == elements.size()) break;
    }
    return gens;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}, {}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order);
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{g, all, greedy_generators(g, all)};
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || elements[0] != 0) throw error("not a subgroup");
    if (g->order % static_cast<int>(elements.size()) != 0) throw error("not a subgroup");
    Subgroup h{g, elements, {}};
    for (int x : elements) {
        if (x < 0 || x >= g->order) throw input_error("element index out of range");
        if (!h.contains(g->inv(x))) throw error("not a subgroup");
        for (int y : elements)
            if (!h.contains(g->mul(x, y))) throw error("not a subgroup");
    }
    h.generators = greedy_generators(g, elements);
    return h;
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens) {
    auto elems = closure_of(g, gens);
    Subgroup h{g, std::move(elems), {}};
    h.generators = greedy_generators(g, h.elements);
    return h;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> elems;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(elems));
    Subgroup h{a.parent, std::move(elems), {}};
    h.generators = greedy_generators(a.parent, h.elements);
    return h;
}

bool is_normal(const GroupPtr& g, const Subgroup& n) {
    for (int x = 0; x < g->order; ++x)
        for (int h : n.elements)
            if (!n.contains(g->conj(x, h))) return false;
    return true;
}

Materialized materialize(const Subgroup& h) {
    int n = h.size();
    Materialized m;
    m.to_parent = h.elements;
    m.from_parent.assign(h.parent->order, -1);
    for (int i = 0; i < n; ++i) m.from_parent[h.elements[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = h.parent->mul(h.elements[i], h.elements[j]);
            table[i * n + j] = m.from_parent[p];
        }
    std::vector<std::string> labels;
    if (!h.parent->labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = h.parent->labels[h.elements[i]];
    }
    m.grp = FiniteGroup::make(std::move(table), std::move(labels));
    return m;
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw error("subgroup is not normal");
    QuotientResult q;
    q.coset_of.assign(g->order, -1);
    for (int x = 0; x < g->order; ++x) {
        if (q.coset_of[x] >= 0) continue;
        int rep = x;
        std::vector<int> coset;
        for (int h : n.elements) coset.push_back(g->mul(x, h));
        for (int y : coset) rep = std::min(rep, y);
        int idx = static_cast<int>(q.rep_of.size());
        q.rep_of.push_back(rep);
        for (int y : coset) q.coset_of[y] = idx;
    }
    // reorder cosets by least representative; identity coset first
    std::vector<int> perm(q.rep_of.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return q.rep_of[a] < q.rep_of[b]; });
    std::vector<int> rank(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<int>(i);
    std::vector<int> reps(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) reps[i] = q.rep_of[perm[i]];
    q.rep_of = reps;
    for (int& c : q.coset_of) c = rank[c];

    int m = static_cast<int>(q.rep_of.size());
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a * m + b] = q.coset_of[g->mul(q.rep_of[a], q.rep_of[b])];
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) labels[a] = g->label(q.rep_of[a]) + "N";
    q.grp = FiniteGroup::make(std::move(table), std::move(labels));
    return q;
}

std::vector<int> GroupHom::image_elements() const {
    std::vector<int> im = images;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
}

bool GroupHom::is_multiplicative() const {
    const auto& d = *domain.parent;
    const auto& c = *codomain.parent;
    for (int x : domain.elements)
        for (int y : domain.elements) {
            int xy = d.mul(x, y);
            if (!domain.contains(xy)) return false;
            if (apply(xy) != c.mul(apply(x), apply(y))) return false;
        }
    return true;
}

bool GroupHom::is_injective() const {
    return image_elements().size() == images.size();
}

bool GroupHom::is_identity_map() const {
    return domain.parent == codomain.parent && images == domain.elements;
}

GroupHom identity_hom(const Subgroup& p) { return GroupHom{p, p, p.elements}; }

GroupHom inclusion_hom(const Subgroup& p, const Subgroup& q) {
    if (!p.is_subset_of(q)) throw error("not a subgroup");
    return GroupHom{p, q, p.elements};
}

GroupHom conjugation_hom(const GroupPtr& g, int by, const Subgroup& p) {
    std::vector<int> images(p.elements.size());
    std::vector<int> target(p.elements.size());
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        images[i] = g->conj(by, p.elements[i]);
        target[i] = images[i];
    }
    std::sort(target.begin(), target.end());
    Subgroup q{g, target, greedy_generators(g, target)};
    return GroupHom{p, q, images};
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    std::vector<int> images(first.domain.elements.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = second.apply(first.images[i]);
    return GroupHom{first.domain, second.codomain, images};
}

GroupHom invert_iso(const GroupHom& h) {
    if (h.images.size() != h.codomain.elements.size() || !h.is_injective())
        throw error("homomorphism is not an isomorphism onto its codomain");
    std::vector<int> images(h.codomain.elements.size());
    for (std::size_t i = 0; i < h.images.size(); ++i) {
        int pos = h.codomain.position_of(h.images[i]);
        images[pos] = h.domain.elements[i];
    }
    return GroupHom{h.codomain, h.domain, images};
}

GroupHom restrict_hom(const GroupHom& h, const Subgroup& smaller_domain) {
    std::vector<int> images(smaller_domain.elements.size());
    std::vector<int> target(smaller_domain.elements.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        images[i] = h.apply(smaller_domain.elements[i]);
        target[i] = images[i];
    }
    std::sort(target.begin(), target.end());
    Subgroup q{h.codomain.parent, target, greedy_generators(h.codomain.parent, target)};
    return GroupHom{smaller_domain, q, images};
}

} // namespace fusec
