#include "gck/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "gck/errors.hpp"

namespace gck {

namespace {

constexpr int kClosureCap = 5000;
constexpr int kMaxPermPoints = 12;
constexpr int kMaxSymmetricN = 6;

using Perm = std::vector<int>;

// (p * q)(i) = p[q[i]]: apply q first, then p.
Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
        h ^= (v >> (8 * b)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Quaternion unit multiplication: elements are (sign, axis) with axes
// 0=1, 1=i, 2=j, 3=k; element ids are axis*2 + (sign < 0).
std::vector<int> quaternion_table() {
    // axis_mul[a][b] = {resulting axis, sign}
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    std::vector<int> table(64);
    for (int x = 0; x < 8; ++x) {
        int ax = x / 2, sx = (x % 2) ? -1 : +1;
        for (int y = 0; y < 8; ++y) {
            int ay = y / 2, sy = (y % 2) ? -1 : +1;
            int az = axis[ax][ay];
            int sz = sign[ax][ay] * sx * sy;
            table[static_cast<size_t>(x) * 8 + y] = az * 2 + (sz < 0 ? 1 : 0);
        }
    }
    return table;
}

struct Descriptor {
    std::string text;
    size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw DomainError("malformed-descriptor", why + " in '" + text + "' at position " + std::to_string(pos));
    }
    int integer() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        if (pos - start > 6) fail("integer out of range");
        return std::stoi(text.substr(start, pos - start));
    }
};

GroupPtr parse_descriptor(Descriptor& d);

std::vector<Perm> parse_cycle_generators(Descriptor& d) {
    // perm:[(0,1)(2,3);(0,1,2)]; generators separated by ';', each a product
    // of cycles over 0-based points.
    if (!d.consume('[')) d.fail("expected '['");
    std::vector<std::vector<std::vector<int>>> gen_cycles; // per generator, list of cycles
    gen_cycles.emplace_back();
    int max_point = -1;
    while (!d.consume(']')) {
        if (d.consume(';')) {
            gen_cycles.emplace_back();
            continue;
        }
        if (!d.consume('(')) d.fail("expected '(' or ';' or ']'");
        std::vector<int> cycle;
        while (true) {
            int p = d.integer();
            if (p >= kMaxPermPoints)
                throw DomainError("malformed-descriptor",
                                  "cycle point " + std::to_string(p) + " exceeds the 12-point limit");
            cycle.push_back(p);
            max_point = std::max(max_point, p);
            if (d.consume(')')) break;
            if (!d.consume(',')) d.fail("expected ',' or ')'");
        }
        gen_cycles.back().push_back(std::move(cycle));
    }
    if (max_point < 0) d.fail("no cycles given");

    int n = max_point + 1;
    std::vector<Perm> gens;
    for (const auto& cycles : gen_cycles) {
        Perm p = identity_perm(n);
        for (const auto& cycle : cycles) {
            std::set<int> distinct(cycle.begin(), cycle.end());
            if (distinct.size() != cycle.size())
                throw DomainError("generators-not-permutations", "repeated point within a cycle");
            for (size_t i = 0; i < cycle.size(); ++i)
                p[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        gens.push_back(std::move(p));
    }
    return gens;
}

GroupPtr build_symmetric(int n) {
    if (n < 1 || n > kMaxSymmetricN)
        throw DomainError("malformed-descriptor", "S<n> supports 1 <= n <= 6");
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm t = identity_perm(n);
        std::swap(t[0], t[1]);
        Perm c(n);
        for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
        gens = {t, c};
    } else {
        gens = {identity_perm(1)};
    }
    return FiniteGroup::from_permutations("S" + std::to_string(n), gens);
}

GroupPtr build_cyclic(int n) {
    if (n < 1) throw DomainError("malformed-descriptor", "Z<n> requires n >= 1");
    if (n > kClosureCap)
        throw DomainError("closure-exceeds-limit", "Z" + std::to_string(n) + " exceeds the 5000-element cap");
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return FiniteGroup::from_permutations("Z" + std::to_string(n), {c});
}

GroupPtr build_dihedral(int n) {
    if (n < 1) throw DomainError("malformed-descriptor", "D<n> requires n >= 1");
    if (2 * n > kClosureCap)
        throw DomainError("closure-exceeds-limit", "D" + std::to_string(n) + " exceeds the 5000-element cap");
    std::string name = "D" + std::to_string(n);
    if (n == 1) {
        Perm s = {1, 0};
        return FiniteGroup::from_permutations(name, {s});
    }
    if (n == 2) {
        // Klein four group; not faithful on 2 points, so use two 2-cycles.
        return FiniteGroup::from_permutations(name, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    }
    Perm r(n), s(n);
    for (int i = 0; i < n; ++i) {
        r[i] = (i + 1) % n;
        s[i] = n - 1 - i;
    }
    return FiniteGroup::from_permutations(name, {r, s});
}

GroupPtr build_product(const FiniteGroup& a, const FiniteGroup& b) {
    long long order = static_cast<long long>(a.order()) * b.order();
    if (order > kClosureCap)
        throw DomainError("closure-exceeds-limit",
                          "direct product order " + std::to_string(order) + " exceeds the 5000-element cap");
    int n = static_cast<int>(order), nb = b.order();
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(x) * n + y] =
                a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return FiniteGroup::from_mul_table("prod(" + a.name() + "," + b.name() + ")", n, std::move(table));
}

GroupPtr parse_descriptor(Descriptor& d) {
    if (d.text.compare(d.pos, 5, "prod(") == 0) {
        d.pos += 5;
        GroupPtr a = parse_descriptor(d);
        if (!d.consume(',')) d.fail("expected ','");
        GroupPtr b = parse_descriptor(d);
        if (!d.consume(')')) d.fail("expected ')'");
        return build_product(*a, *b);
    }
    if (d.text.compare(d.pos, 5, "perm:") == 0) {
        d.pos += 5;
        auto gens = parse_cycle_generators(d);
        return FiniteGroup::from_permutations("perm", gens);
    }
    if (d.text.compare(d.pos, 2, "Q8") == 0) {
        d.pos += 2;
        return FiniteGroup::from_mul_table("Q8", 8, quaternion_table());
    }
    char family = d.peek();
    if (family == 'S' || family == 'Z' || family == 'D') {
        ++d.pos;
        int n = d.integer();
        if (family == 'S') return build_symmetric(n);
        if (family == 'Z') return build_cyclic(n);
        return build_dihedral(n);
    }
    d.fail("unknown descriptor");
}

} // namespace

GroupPtr build_group(const std::string& descriptor) {
    Descriptor d{descriptor, 0};
    // strip whitespace up front; descriptors are short
    d.text.erase(std::remove_if(d.text.begin(), d.text.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 d.text.end());
    if (d.text.empty()) throw DomainError("malformed-descriptor", "empty descriptor");
    GroupPtr g = parse_descriptor(d);
    if (d.pos != d.text.size()) d.fail("trailing characters");
    return g;
}

GroupPtr FiniteGroup::from_permutations(const std::string& name,
                                        const std::vector<std::vector<int>>& generators) {
    if (generators.empty())
        throw DomainError("generators-not-permutations", "no generators given");
    size_t npoints = generators.front().size();
    if (npoints == 0)
        throw DomainError("generators-not-permutations", "generators act on an empty point set");
    for (const auto& g : generators) {
        if (g.size() != npoints)
            throw DomainError("generators-not-permutations", "generators act on differing point counts");
        if (!is_permutation(g))
            throw DomainError("generators-not-permutations", "generator image is not a bijection");
    }

    // Breadth-first closure; each level is deduplicated and appended in
    // lexicographic order of the permutation images.
    std::vector<Perm> elems = {identity_perm(static_cast<int>(npoints))};
    std::map<Perm, int> ids = {{elems[0], 0}};
    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::set<Perm> fresh;
        for (int x : frontier)
            for (const auto& g : generators) {
                Perm p = compose(elems[x], g);
                if (!ids.count(p)) fresh.insert(std::move(p));
            }
        frontier.clear();
        for (const auto& p : fresh) {
            int id = static_cast<int>(elems.size());
            if (id >= kClosureCap)
                throw DomainError("closure-exceeds-limit",
                                  "closure of '" + name + "' exceeds the 5000-element cap");
            ids.emplace(p, id);
            elems.push_back(p);
            frontier.push_back(id);
        }
    }

    int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(x) * n + y] = ids.at(compose(elems[x], elems[y]));
    return from_mul_table(name, n, std::move(table), std::move(elems));
}

GroupPtr FiniteGroup::from_mul_table(const std::string& name, int order, std::vector<int> table,
                                     std::vector<std::vector<int>> perm_images) {
    if (order <= 0 || table.size() != static_cast<size_t>(order) * order)
        throw DomainError("malformed-descriptor", "multiplication table has the wrong shape");
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->name_ = name;
    g->order_ = order;
    g->mul_ = std::move(table);
    g->perm_images_ = std::move(perm_images);
    g->finalize();
    return g;
}

void FiniteGroup::finalize() {
    const int n = order_;

    // Identity row/column must be the identity map.
    for (int x = 0; x < n; ++x)
        if (mul(0, x) != x || mul(x, 0) != x)
            throw DomainError("malformed-descriptor", "element 0 is not an identity for the table");

    // Latin square: every row and column is a permutation.
    for (int x = 0; x < n; ++x) {
        std::vector<char> row(n, 0), col(n, 0);
        for (int y = 0; y < n; ++y) {
            int r = mul(x, y), c = mul(y, x);
            if (r < 0 || r >= n || c < 0 || c >= n || row[r] || col[c])
                throw DomainError("malformed-descriptor", "table is not a Latin square");
            row[r] = col[c] = 1;
        }
    }

    inv_.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mul(x, y) == 0) inv_[x] = y;
    for (int x = 0; x < n; ++x)
        if (inv_[x] < 0 || mul(x, inv_[x]) != 0 || mul(inv_[x], x) != 0)
            throw DomainError("malformed-descriptor", "table has an element without a two-sided inverse");

    // Associativity: exhaustive for small orders, sampled above.
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw DomainError("malformed-descriptor", "table is not associative");
    } else {
        std::mt19937_64 rng(0x6163u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int trial = 0; trial < 512; ++trial) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw DomainError("malformed-descriptor", "table is not associative");
        }
    }

    // Conjugacy classes, canonical order.
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> raw;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0) continue;
        std::vector<int> orbit;
        int id = static_cast<int>(raw.size());
        for (int g = 0; g < n; ++g) {
            int y = conjugate(g, x);
            if (cls[y] < 0) {
                cls[y] = id;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        raw.push_back(std::move(orbit));
    }
    std::vector<int> order_idx(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) order_idx[i] = static_cast<int>(i);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        bool ea = raw[a][0] == 0, eb = raw[b][0] == 0;
        if (ea != eb) return ea; // {e} first
        if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
        return raw[a][0] < raw[b][0];
    });
    classes_.classes.resize(raw.size());
    classes_.class_of.assign(n, -1);
    classes_.class_sizes.resize(raw.size());
    for (size_t i = 0; i < order_idx.size(); ++i) {
        classes_.classes[i] = std::move(raw[order_idx[i]]);
        classes_.class_sizes[i] = static_cast<int>(classes_.classes[i].size());
        for (int e : classes_.classes[i]) classes_.class_of[e] = static_cast<int>(i);
    }
    classes_.inverse_class.resize(classes_.count());
    for (int c = 0; c < classes_.count(); ++c)
        classes_.inverse_class[c] = classes_.class_of[inv(classes_.classes[c][0])];

    center_.clear();
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int g = 0; g < n && central; ++g) central = mul(x, g) == mul(g, x);
        if (central) center_.push_back(x);
    }

    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, static_cast<std::uint64_t>(n));
    for (int v : mul_) h = fnv1a(h, static_cast<std::uint64_t>(v));
    ordering_hash_ = h;
}

const ConjugacyClasses& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

std::vector<ElementId> center(const FiniteGroup& g) { return g.center(); }

} // namespace gck
