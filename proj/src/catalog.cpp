#include "fusec/catalog.hpp"

#include <map>

#include "fusec/group_ops.hpp"

namespace fusec {

GroupPtr cyclic(int n) {
    if (n <= 0 || n > kMaxGroupOrder) throw error("group too large");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) labels[a] = a == 0 ? "e" : "a" + std::to_string(a);
    return FiniteGroup::make(std::move(table), std::move(labels), "C" + std::to_string(n));
}

GroupPtr dihedral(int order) {
    if (order % 2 != 0 || order < 2) throw input_error("dihedral order must be even");
    int n = order / 2;
    // i < n: rotation r^i; i >= n: reflection r^(i-n) s
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    auto idx = [&](int rot, int ref) { return ((rot % n + n) % n) + (ref ? n : 0); };
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int ra = a % n, fa = a / n, rb = b % n, fb = b / n;
            int rot = fa ? ra - rb : ra + rb;
            table[a * order + b] = idx(rot, fa ^ fb);
        }
    std::vector<std::string> labels(order);
    for (int a = 0; a < order; ++a) {
        int r = a % n, f = a / n;
        std::string s = r == 0 ? (f ? "s" : "e") : "r" + std::to_string(r) + (f ? "s" : "");
        labels[a] = s;
    }
    return FiniteGroup::make(std::move(table), std::move(labels), "D" + std::to_string(order));
}

GroupPtr dicyclic(int order) {
    if (order % 4 != 0 || order < 8) throw input_error("dicyclic order must be a multiple of 4");
    int n = order / 4, m = 2 * n;
    // i < 2n: a^i; i >= 2n: a^(i-2n) b, with b^2 = a^n, b a b^-1 = a^-1
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    auto idx = [&](int pow, int hasb) { return ((pow % m + m) % m) + (hasb ? m : 0); };
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            int i = x % m, u = x / m, j = y % m, v = y / m;
            int pow, hasb;
            if (!u) {
                pow = i + j;
                hasb = v;
            } else if (!v) {
                pow = i - j;
                hasb = 1;
            } else {
                pow = i - j + n;
                hasb = 0;
            }
            table[x * order + y] = idx(pow, hasb);
        }
    std::vector<std::string> labels(order);
    for (int x = 0; x < order; ++x) {
        int i = x % m, u = x / m;
        std::string s = i == 0 ? (u ? "b" : "e") : "a" + std::to_string(i) + (u ? "b" : "");
        labels[x] = s;
    }
    std::string name = order == 8 ? "Q8" : "Dic" + std::to_string(n);
    return FiniteGroup::make(std::move(table), std::move(labels), std::move(name));
}

GroupPtr elementary_abelian(int p, int rank) {
    GroupPtr g = cyclic(p);
    for (int i = 1; i < rank; ++i) g = direct_product(g, cyclic(p));
    return g;
}

GroupPtr metacyclic(int m, int n, int k) {
    long kn = 1;
    for (int i = 0; i < n; ++i) kn = (kn * k) % m;
    if (kn % m != 1 % m) throw input_error("metacyclic action has wrong order");
    int order = m * n;
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    std::vector<long> kpow(n, 1);
    for (int j = 1; j < n; ++j) kpow[j] = (kpow[j - 1] * k) % m;
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    int i = static_cast<int>((i1 + kpow[j1] * i2) % m);
                    int j = (j1 + j2) % n;
                    table[(i1 * n + j1) * order + (i2 * n + j2)] = i * n + j;
                }
    return FiniteGroup::make(std::move(table), {},
                             "C" + std::to_string(m) + ":C" + std::to_string(n));
}

GroupPtr symmetric3() {
    auto g = from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
    std::const_pointer_cast<FiniteGroup>(g)->name = "S3";
    return g;
}

GroupPtr alternating4() {
    auto g = from_permutation_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    std::const_pointer_cast<FiniteGroup>(g)->name = "A4";
    return g;
}

GroupPtr symmetric4() {
    auto g = from_permutation_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}});
    std::const_pointer_cast<FiniteGroup>(g)->name = "S4";
    return g;
}

GroupPtr sl23() {
    auto q8 = dicyclic(8);
    // order-3 automorphism a -> b -> ab (i -> j -> k)
    auto full = full_subgroup(q8);
    auto theta = extend_hom(full, q8, {1, 4}, {4, 5});
    if (!theta) throw error("quaternion automorphism construction failed");
    std::vector<int> id(8), th = *theta, th2(8);
    for (int i = 0; i < 8; ++i) id[i] = i;
    for (int i = 0; i < 8; ++i) th2[i] = th[th[i]];
    return semidirect_product(q8, cyclic(3), {id, th, th2}, "SL(2,3)");
}

GroupPtr generalized_dihedral(const GroupPtr& abelian) {
    std::vector<int> id(abelian->order), inv(abelian->order);
    for (int i = 0; i < abelian->order; ++i) {
        id[i] = i;
        inv[i] = abelian->inv(i);
    }
    return semidirect_product(abelian, cyclic(2), {id, inv});
}

namespace {

GroupPtr named(GroupPtr g, const std::string& name) {
    std::const_pointer_cast<FiniteGroup>(g)->name = name;
    return g;
}

GroupPtr c2sq_rtimes_c4() {
    // C2^2 x| C4, generator of C4 swapping the two factors
    auto v4 = elementary_abelian(2, 2);
    std::vector<int> id{0, 1, 2, 3}, swap{0, 2, 1, 3};
    return semidirect_product(v4, cyclic(4), {id, swap, id, swap}, "(C2xC2):C4");
}

GroupPtr pauli16() {
    // central product C4 o D8: kill the diagonal central involution
    auto prod = direct_product(cyclic(4), dihedral(8));
    int z = product_index(dihedral(8), 2, 2);  // (a^2, r^2)
    auto n = generated_subgroup(prod, {z});
    return named(quotient(prod, n).grp, "C4oD8");
}

GroupPtr c3_rtimes_d8() {
    // C3 x| D8 with Klein-four kernel <r^2, s>
    auto d8 = dihedral(8);
    std::vector<int> id{0, 1, 2}, inv{0, 2, 1};
    std::vector<std::vector<int>> action(8);
    for (int b = 0; b < 8; ++b) {
        bool trivial = (b == 0 || b == 2 || b == 4 || b == 6);
        action[b] = trivial ? id : inv;
    }
    return semidirect_product(cyclic(3), d8, action, "C3:D8");
}

} // namespace

std::vector<CatalogEntry> groups_of_order(int n) {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& name, GroupPtr g) {
        out.push_back({name, named(std::move(g), name)});
    };
    switch (n) {
        case 1: add("C1", cyclic(1)); break;
        case 2: add("C2", cyclic(2)); break;
        case 3: add("C3", cyclic(3)); break;
        case 4:
            add("C4", cyclic(4));
            add("C2xC2", elementary_abelian(2, 2));
            break;
        case 5: add("C5", cyclic(5)); break;
        case 6:
            add("C6", cyclic(6));
            add("S3", symmetric3());
            break;
        case 7: add("C7", cyclic(7)); break;
        case 8:
            add("C8", cyclic(8));
            add("C4xC2", direct_product(cyclic(4), cyclic(2)));
            add("C2xC2xC2", elementary_abelian(2, 3));
            add("D8", dihedral(8));
            add("Q8", dicyclic(8));
            break;
        case 9:
            add("C9", cyclic(9));
            add("C3xC3", elementary_abelian(3, 2));
            break;
        case 10:
            add("C10", cyclic(10));
            add("D10", dihedral(10));
            break;
        case 11: add("C11", cyclic(11)); break;
        case 12:
            add("C12", cyclic(12));
            add("C6xC2", direct_product(cyclic(6), cyclic(2)));
            add("D12", dihedral(12));
            add("A4", alternating4());
            add("Dic3", dicyclic(12));
            break;
        case 13: add("C13", cyclic(13)); break;
        case 14:
            add("C14", cyclic(14));
            add("D14", dihedral(14));
            break;
        case 15: add("C15", cyclic(15)); break;
        case 16:
            add("C16", cyclic(16));
            add("C4xC4", direct_product(cyclic(4), cyclic(4)));
            add("C8xC2", direct_product(cyclic(8), cyclic(2)));
            add("C4xC2xC2", direct_product(cyclic(4), elementary_abelian(2, 2)));
            add("C2^4", elementary_abelian(2, 4));
            add("D16", dihedral(16));
            add("SD16", metacyclic(8, 2, 3));
            add("M4(2)", metacyclic(8, 2, 5));
            add("Q16", dicyclic(16));
            add("C4:C4", metacyclic(4, 4, 3));
            add("D8xC2", direct_product(dihedral(8), cyclic(2)));
            add("Q8xC2", direct_product(dicyclic(8), cyclic(2)));
            add("(C2xC2):C4", c2sq_rtimes_c4());
            add("C4oD8", pauli16());
            break;
        case 17: add("C17", cyclic(17)); break;
        case 18:
            add("C18", cyclic(18));
            add("C6xC3", direct_product(cyclic(6), cyclic(3)));
            add("D18", dihedral(18));
            add("S3xC3", direct_product(symmetric3(), cyclic(3)));
            add("(C3xC3):C2", generalized_dihedral(elementary_abelian(3, 2)));
            break;
        case 19: add("C19", cyclic(19)); break;
        case 20:
            add("C20", cyclic(20));
            add("C10xC2", direct_product(cyclic(10), cyclic(2)));
            add("D20", dihedral(20));
            add("Dic5", dicyclic(20));
            add("F20", metacyclic(5, 4, 2));
            break;
        case 21:
            add("C21", cyclic(21));
            add("C7:C3", metacyclic(7, 3, 2));
            break;
        case 22:
            add("C22", cyclic(22));
            add("D22", dihedral(22));
            break;
        case 23: add("C23", cyclic(23)); break;
        case 24:
            add("C24", cyclic(24));
            add("C12xC2", direct_product(cyclic(12), cyclic(2)));
            add("C6xC2xC2", direct_product(cyclic(6), elementary_abelian(2, 2)));
            add("C3xD8", direct_product(cyclic(3), dihedral(8)));
            add("C3xQ8", direct_product(cyclic(3), dicyclic(8)));
            add("S4", symmetric4());
            add("C2xA4", direct_product(cyclic(2), alternating4()));
            add("SL(2,3)", sl23());
            add("C3:C8", metacyclic(3, 8, 2));
            add("Dic6", dicyclic(24));
            add("D24", dihedral(24));
            add("C2xDic3", direct_product(cyclic(2), dicyclic(12)));
            add("C4xS3", direct_product(cyclic(4), symmetric3()));
            add("C2xC2xS3", direct_product(elementary_abelian(2, 2), symmetric3()));
            add("C3:D8", c3_rtimes_d8());
            break;
        default:
            throw input_error("catalog covers orders 1..24");
    }
    return out;
}

std::vector<CatalogEntry> corpus(int max_order) {
    std::vector<CatalogEntry> out;
    for (int n = 1; n <= max_order; ++n) {
        auto batch = groups_of_order(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

GroupPtr catalog_group(const std::string& name) {
    static const std::map<std::string, int> alias = {
        {"V4", 4}, {"C3:C4", 12}, {"Q12", 12}, {"Q24", 24},
    };
    for (int n = 1; n <= 24; ++n)
        for (const auto& e : groups_of_order(n))
            if (e.name == name) return e.grp;
    auto it = alias.find(name);
    if (it != alias.end()) {
        if (name == "V4") return named(elementary_abelian(2, 2), "V4");
        if (name == "C3:C4" || name == "Q12") return named(dicyclic(12), name);
        if (name == "Q24") return named(dicyclic(24), name);
    }
    throw input_error("unknown catalog group: " + name);
}

} // namespace fusec
