#include "galcoh/fingrp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "galcoh/error.hpp"

namespace galcoh {

namespace {

std::string triple(int a, int b, int c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup() {
    auto d = std::make_shared<Data>();
    d->table = {0};
    d->inverse = {0};
    d->element_order = {1};
    data_ = std::move(d);
}

FiniteGroup make_group(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) fail(ErrorKind::InvalidInput, "empty table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            fail(ErrorKind::InvalidInput, "table row " + std::to_string(i) + " has length " +
                                              std::to_string(table[i].size()) + ", expected " +
                                              std::to_string(n));
        for (int j = 0; j < n; ++j)
            if (table[i][j] < 0 || table[i][j] >= n)
                fail(ErrorKind::InvalidInput, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                  ") = " + std::to_string(table[i][j]) + " out of range");
    }
    auto d = std::make_shared<FiniteGroup::Data>();
    d->order = n;
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d->table[static_cast<std::size_t>(i) * n + j] = table[i][j];
    auto mul = [&](int a, int b) { return d->table[static_cast<std::size_t>(a) * n + b]; };

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) identity = e;
    }
    if (identity < 0) fail(ErrorKind::NoIdentity, "no element is a two-sided identity");
    d->identity = identity;

    d->inverse.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (mul(x, y) == identity && mul(y, x) == identity) {
                d->inverse[x] = y;
                break;
            }
        if (d->inverse[x] < 0) fail(ErrorKind::NoInverse, "element " + std::to_string(x) + " has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = mul(a, b);
            for (int c = 0; c < n; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    fail(ErrorKind::NonAssociative, "triple " + triple(a, b, c) + " violates associativity");
        }

    d->element_order.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int k = 1;
        for (int p = x; p != identity; p = mul(p, x)) ++k;
        d->element_order[x] = k;
    }

    FiniteGroup g(d);
    // greedy generators need the finished group
    std::vector<int> gens;
    std::vector<int> span{identity};
    for (int x = 0; x < n; ++x) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = generated_subgroup(g, gens);
    }
    d->generators = std::move(gens);
    return g;
}

int FiniteGroup::pow(int a, long long k) const {
    const int ord = element_order(a);
    long long r = k % ord;
    if (r < 0) r += ord;
    int out = identity();
    for (long long i = 0; i < r; ++i) out = mul(out, a);
    return out;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(order(), std::vector<int>(order()));
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < order(); ++b) t[a][b] = mul(a, b);
    return t;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
    return data_ == other.data_ || (data_->order == other.data_->order && data_->table == other.data_->table);
}

// ---- homomorphisms ----

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<int> images) {
    if (static_cast<int>(images.size()) != source.order())
        fail(ErrorKind::InvalidInput, "homomorphism needs " + std::to_string(source.order()) + " images, got " +
                                          std::to_string(images.size()));
    for (int x = 0; x < source.order(); ++x)
        if (!target.valid(images[x]))
            fail(ErrorKind::InvalidInput, "image of " + std::to_string(x) + " out of range");
    for (int a = 0; a < source.order(); ++a)
        for (int b = 0; b < source.order(); ++b)
            if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
                fail(ErrorKind::InvalidInput, "map is not multiplicative at (" + std::to_string(a) + ", " +
                                                  std::to_string(b) + ")");
    return {source, target, std::move(images)};
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    std::vector<int> img(inner.source.order());
    for (int x = 0; x < inner.source.order(); ++x) img[x] = outer.images[inner.images[x]];
    return {inner.source, outer.target, std::move(img)};
}

GroupHom identity_hom(const FiniteGroup& g) {
    std::vector<int> img(g.order());
    std::iota(img.begin(), img.end(), 0);
    return {g, g, std::move(img)};
}

GroupHom trivial_hom(const FiniteGroup& source, const FiniteGroup& target) {
    return {source, target, std::vector<int>(source.order(), target.identity())};
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }

bool GroupHom::is_surjective() const {
    std::vector<char> hit(target.order(), 0);
    for (int y : images) hit[y] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<int> GroupHom::kernel() const {
    std::vector<int> k;
    for (int x = 0; x < source.order(); ++x)
        if (images[x] == target.identity()) k.push_back(x);
    return k;
}

// ---- automorphisms ----

Automorphism::Automorphism(const FiniteGroup& g, std::vector<int> images) : group_(g), images_(std::move(images)) {
    make_hom(g, g, images_);
    std::vector<char> seen(g.order(), 0);
    for (int y : images_) {
        if (seen[y]) fail(ErrorKind::InvalidInput, "automorphism images are not a permutation");
        seen[y] = 1;
    }
}

Automorphism Automorphism::identity(const FiniteGroup& g) {
    std::vector<int> img(g.order());
    std::iota(img.begin(), img.end(), 0);
    return Automorphism(g, std::move(img), true);
}

Automorphism Automorphism::inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<int>(x);
    return Automorphism(group_, std::move(img), true);
}

Automorphism Automorphism::after(const Automorphism& inner) const {
    std::vector<int> img(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) img[x] = images_[inner.images_[x]];
    return Automorphism(group_, std::move(img), true);
}

bool Automorphism::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) return false;
    return true;
}

Automorphism inner_automorphism(const FiniteGroup& g, int element) {
    const int gi = g.inv(element);
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) img[x] = g.mul(g.mul(element, x), gi);
    return Automorphism(g, std::move(img));
}

// ---- subgroups ----

std::vector<int> generated_subgroup(const FiniteGroup& g, std::span<const int> generators) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> queue{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int s : generators) {
            const int y = g.mul(x, s);
            if (!in[y]) {
                in[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool is_subgroup(const FiniteGroup& g, std::span<const int> elements) {
    std::vector<char> in(g.order(), 0);
    for (int x : elements) {
        if (!g.valid(x)) return false;
        in[x] = 1;
    }
    if (!in[g.identity()]) return false;
    for (int a : elements)
        for (int b : elements)
            if (!in[g.mul(a, g.inv(b))]) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, std::span<const int> elements) {
    if (!is_subgroup(g, elements)) return false;
    std::vector<char> in(g.order(), 0);
    for (int x : elements) in[x] = 1;
    for (int x = 0; x < g.order(); ++x)
        for (int n : elements)
            if (!in[g.mul(g.mul(x, n), g.inv(x))]) return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::span<const int> elements) {
    if (!is_subgroup(g, elements)) fail(ErrorKind::InvalidInput, "element set is not a subgroup");
    std::vector<int> elts(elements.begin(), elements.end());
    std::sort(elts.begin(), elts.end());
    elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < elts.size(); ++i) pos[elts[i]] = static_cast<int>(i);
    const std::size_t n = elts.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = pos[g.mul(elts[i], elts[j])];
    FiniteGroup sub = make_group(table);
    return {sub, GroupHom{sub, g, elts}, elts};
}

int Subgroup::index_of(int parent_element) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), parent_element);
    if (it == elements.end() || *it != parent_element) return -1;
    return static_cast<int>(it - elements.begin());
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
        if (central) z.push_back(a);
    }
    return make_subgroup(g, z);
}

Quotient quotient(const FiniteGroup& g, std::span<const int> normal_subgroup) {
    if (!is_subgroup(g, normal_subgroup)) fail(ErrorKind::InvalidInput, "quotient by a non-subgroup");
    if (!is_normal(g, normal_subgroup)) fail(ErrorKind::NotNormal, "subgroup is not normal");
    std::vector<int> coset(g.order(), -1);
    std::vector<int> mins;
    for (int x = 0; x < g.order(); ++x) {
        if (coset[x] >= 0) continue;
        const int idx = static_cast<int>(mins.size());
        mins.push_back(x);
        for (int n : normal_subgroup) coset[g.mul(x, n)] = idx;
    }
    const std::size_t k = mins.size();
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) table[i][j] = coset[g.mul(mins[i], mins[j])];
    FiniteGroup q = make_group(table);
    return {q, GroupHom{g, q, coset}, mins};
}

WordTree word_tree(const FiniteGroup& g, std::span<const int> generators) {
    WordTree t;
    t.parent.assign(g.order(), -2);
    t.generator.assign(g.order(), -1);
    t.parent[g.identity()] = -1;
    t.bfs_order.push_back(g.identity());
    for (std::size_t head = 0; head < t.bfs_order.size(); ++head) {
        const int x = t.bfs_order[head];
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const int y = g.mul(x, generators[i]);
            if (t.parent[y] != -2) continue;
            t.parent[y] = x;
            t.generator[y] = static_cast<int>(i);
            t.bfs_order.push_back(y);
        }
    }
    return t;
}

namespace {

// Depth-first search over generator images; the map is kept consistent on
// the Cayley graph of the subgroup spanned by the generators assigned so far.
class AutSearch {
public:
    AutSearch(const FiniteGroup& g, std::size_t max_candidates)
        : g_(g), gens_(g.generators()), max_candidates_(max_candidates) {}

    std::vector<Automorphism> run() {
        phi_.assign(g_.order(), -1);
        phi_[g_.identity()] = g_.identity();
        used_.assign(g_.order(), 0);
        used_[g_.identity()] = 1;
        images_.clear();
        dfs(0);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void dfs(std::size_t level) {
        if (level == gens_.size()) {
            out_.emplace_back(g_, phi_);
            return;
        }
        const int gen = gens_[level];
        for (int img = 0; img < g_.order(); ++img) {
            if (g_.element_order(img) != g_.element_order(gen)) continue;
            if (used_[img]) continue;  // image must lie outside the span of earlier images
            if (++candidates_ > max_candidates_)
                fail(ErrorKind::SearchBudgetExceeded,
                     "automorphism search exceeded " + std::to_string(max_candidates_) + " candidates");
            std::vector<int> saved_phi = phi_;
            std::vector<char> saved_used = used_;
            images_.push_back(img);
            if (extend(level)) dfs(level + 1);
            images_.pop_back();
            phi_ = std::move(saved_phi);
            used_ = std::move(saved_used);
        }
    }

    bool extend(std::size_t level) {
        std::span<const int> gens(gens_.data(), level + 1);
        std::vector<int> queue{g_.identity()};
        std::vector<char> seen(g_.order(), 0);
        seen[g_.identity()] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const int y = g_.mul(x, gens[i]);
                const int expect = g_.mul(phi_[x], images_[i]);
                if (phi_[y] < 0) {
                    if (used_[expect]) return false;
                    phi_[y] = expect;
                    used_[expect] = 1;
                } else if (phi_[y] != expect) {
                    return false;
                }
                if (!seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
        }
        return true;
    }

    const FiniteGroup& g_;
    const std::vector<int>& gens_;
    std::size_t max_candidates_;
    std::size_t candidates_ = 0;
    std::vector<int> phi_;
    std::vector<char> used_;
    std::vector<int> images_;
    std::vector<Automorphism> out_;
};

}  // namespace

std::vector<Automorphism> automorphism_list(const FiniteGroup& g, int max_order) {
    if (g.order() > max_order)
        fail(ErrorKind::SearchBudgetExceeded, "automorphism search bounded to order " + std::to_string(max_order) +
                                                  ", group has order " + std::to_string(g.order()));
    AutSearch search(g, 2'000'000);
    return search.run();
}

DirectProduct direct_product(const FiniteGroup& left, const FiniteGroup& right) {
    const int a = left.order();
    const int b = right.order();
    std::vector<std::vector<int>> table(a * b, std::vector<int>(a * b));
    for (int x = 0; x < a * b; ++x)
        for (int y = 0; y < a * b; ++y)
            table[x][y] = left.mul(x / b, y / b) * b + right.mul(x % b, y % b);
    return {make_group(table), b};
}

namespace groups {

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return make_group(t);
}

FiniteGroup dihedral(int n) {
    // r^k s^e at index k + n*e
    const int order = 2 * n;
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            const int k = x % n, e = x / n, l = y % n, f = y / n;
            const int r = ((e ? k - l : k + l) % n + n) % n;
            t[x][y] = r + n * ((e + f) % 2);
        }
    return make_group(t);
}

namespace {
std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& perms) {
    const std::size_t n = perms.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> c(perms[a].size());
            for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[a][perms[b][x]];
            t[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
        }
    return make_group(t);
}

bool even(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    return inversions % 2 == 0;
}
}  // namespace

FiniteGroup symmetric(int n) { return permutation_group(permutations(n)); }

FiniteGroup alternating(int n) {
    std::vector<std::vector<int>> evens;
    for (auto& p : permutations(n))
        if (even(p)) evens.push_back(p);
    return permutation_group(evens);
}

FiniteGroup quaternion() {
    // unit u in {1,i,j,k} and sign s; index u + 4s
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            const int u = x % 4, v = y % 4;
            const int s = (x / 4 + y / 4 + sign[u][v]) % 2;
            t[x][y] = unit[u][v] + 4 * s;
        }
    return make_group(t);
}

FiniteGroup dicyclic(int n) {
    // a^k x^e at index k + 2n*e; x^2 = a^n, x a = a^-1 x
    const int m = 2 * n;
    const int order = 4 * n;
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int p = 0; p < order; ++p)
        for (int q = 0; q < order; ++q) {
            const int k = p % m, e = p / m, l = q % m, f = q / m;
            int r, g;
            if (e == 0) {
                r = k + l;
                g = f;
            } else if (f == 0) {
                r = k - l;
                g = 1;
            } else {
                r = k - l + n;
                g = 0;
            }
            t[p][q] = ((r % m + m) % m) + m * g;
        }
    return make_group(t);
}

FiniteGroup klein_four() { return product(cyclic(2), cyclic(2)); }

FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b).group; }

}  // namespace groups

}  // namespace galcoh
