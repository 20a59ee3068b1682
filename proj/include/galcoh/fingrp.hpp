#pragma once

// Finite groups as closed Cayley tables, homomorphisms, automorphisms,
// subgroups and quotients.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace galcoh {

/// Immutable finite group on the elements 0..order-1. Copies share the table.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group

    int order() const { return data_->order; }
    int identity() const { return data_->identity; }
    int mul(int a, int b) const { return data_->table[static_cast<std::size_t>(a) * data_->order + b]; }
    int inv(int a) const { return data_->inverse[a]; }
    int pow(int a, long long k) const;
    int element_order(int a) const { return data_->element_order[a]; }
    bool is_abelian() const;
    bool valid(int a) const { return a >= 0 && a < order(); }

    std::vector<std::vector<int>> table() const;

    /// Greedy generating set: repeatedly the least element outside the span so far.
    const std::vector<int>& generators() const { return data_->generators; }

    bool operator==(const FiniteGroup& other) const;

private:
    struct Data {
        int order = 1;
        int identity = 0;
        std::vector<int> table;
        std::vector<int> inverse;
        std::vector<int> element_order;
        std::vector<int> generators;
    };
    explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;

    friend FiniteGroup make_group(const std::vector<std::vector<int>>& table);
};

/// Validates a Cayley table (identity, inverses, associativity).
FiniteGroup make_group(const std::vector<std::vector<int>>& table);

struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> images;

    int operator()(int x) const { return images[x]; }
    bool is_injective() const;
    bool is_surjective() const;
    std::vector<int> kernel() const;
};

/// Validates that `images` respects multiplication.
GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target, std::vector<int> images);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom identity_hom(const FiniteGroup& g);
GroupHom trivial_hom(const FiniteGroup& source, const FiniteGroup& target);

class Automorphism {
public:
    Automorphism() = default;
    /// Checks bijectivity and multiplicativity.
    Automorphism(const FiniteGroup& g, std::vector<int> images);

    static Automorphism identity(const FiniteGroup& g);

    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }
    const FiniteGroup& group() const { return group_; }

    Automorphism inverse() const;
    /// (this ∘ inner)(x) = this(inner(x))
    Automorphism after(const Automorphism& inner) const;
    bool is_identity() const;
    GroupHom as_hom() const { return {group_, group_, images_}; }

    bool operator==(const Automorphism& o) const { return images_ == o.images_; }
    bool operator<(const Automorphism& o) const { return images_ < o.images_; }

private:
    Automorphism(const FiniteGroup& g, std::vector<int> images, bool /*trusted*/)
        : group_(g), images_(std::move(images)) {}
    FiniteGroup group_;
    std::vector<int> images_;
};

/// x ↦ g·x·g⁻¹
Automorphism inner_automorphism(const FiniteGroup& g, int element);

struct Subgroup {
    FiniteGroup group;         // induced table on sorted elements
    GroupHom inclusion;        // group -> parent
    std::vector<int> elements;  // sorted parent indices; position = index in `group`

    int index_of(int parent_element) const;  // -1 if absent
};

/// Closure of `generators` under multiplication (sorted element list).
std::vector<int> generated_subgroup(const FiniteGroup& g, std::span<const int> generators);
bool is_subgroup(const FiniteGroup& g, std::span<const int> elements);
bool is_normal(const FiniteGroup& g, std::span<const int> elements);
Subgroup make_subgroup(const FiniteGroup& g, std::span<const int> elements);

Subgroup center(const FiniteGroup& g);

struct Quotient {
    FiniteGroup group;
    GroupHom projection;
    std::vector<int> coset_min;  // least parent element of each coset, ascending
};

/// Cosets canonicalized by least element and ordered by it.
Quotient quotient(const FiniteGroup& g, std::span<const int> normal_subgroup);

inline constexpr int kDefaultAutomorphismBound = 64;

/// All automorphisms (identity first, then ascending image vectors).
/// Throws SearchBudgetExceeded when order exceeds `max_order`.
std::vector<Automorphism> automorphism_list(const FiniteGroup& g,
                                            int max_order = kDefaultAutomorphismBound);

/// Each element expressed as parent·generator along a BFS tree from the identity.
struct WordTree {
    std::vector<int> parent;     // -1 at identity
    std::vector<int> generator;  // index into generator list
    std::vector<int> bfs_order;
};
WordTree word_tree(const FiniteGroup& g, std::span<const int> generators);

struct DirectProduct {
    FiniteGroup group;
    // element (a, b) has index a * right.order() + b
    int pair(int a, int b) const { return a * right_order + b; }
    int left_of(int x) const { return x / right_order; }
    int right_of(int x) const { return x % right_order; }
    int right_order = 1;
};
DirectProduct direct_product(const FiniteGroup& left, const FiniteGroup& right);

namespace groups {
FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
FiniteGroup quaternion();     // Q8: 0=1, 1=i, 2=j, 3=k, 4=-1, 5=-i, 6=-j, 7=-k
FiniteGroup dicyclic(int n);  // order 4n
FiniteGroup klein_four();
FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
}  // namespace groups

}  // namespace galcoh
