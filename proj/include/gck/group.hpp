/*
 * group.hpp: finite groups with a reproducible canonical ordering.
 *
 * Groups are built from a string descriptor (S<n>, Z<n>, D<n>, Q8,
 * prod(A,B), perm:[...]) or an explicit multiplication table. The element
 * ordering is fixed once and for all at construction: identity first, then
 * breadth-first closure order with lexicographic tie-breaking on permutation
 * images. Every matrix downstream (kernels, circulants, projections) inherits
 * this ordering, so two builds of the same descriptor are bit-identical.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gck {

using ElementId = int;

// Conjugacy classes in canonical order: {e} first, then ascending class
// size, ties broken by the smallest canonical element id in the class.
struct ConjugacyClasses {
    std::vector<std::vector<ElementId>> classes;
    std::vector<int> class_of;      // element id -> class index
    std::vector<int> class_sizes;
    std::vector<int> inverse_class; // class index -> class of the inverses (an involution)

    int count() const { return static_cast<int>(classes.size()); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
public:
    int order() const { return order_; }
    const std::string& name() const { return name_; }
    ElementId identity() const { return 0; }

    ElementId mul(ElementId a, ElementId b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
    ElementId inv(ElementId a) const { return inv_[a]; }
    ElementId conjugate(ElementId g, ElementId x) const { return mul(mul(g, x), inv(g)); }

    const ConjugacyClasses& classes() const { return classes_; }
    const std::vector<ElementId>& center() const { return center_; }
    bool abelian() const { return static_cast<int>(center_.size()) == order_; }

    // Permutation images for groups built via a permutation closure; empty
    // for table-built groups (Q8, direct products).
    const std::vector<std::vector<int>>& perm_images() const { return perm_images_; }

    // FNV-1a over the multiplication table; identifies the canonical ordering.
    std::uint64_t ordering_hash() const { return ordering_hash_; }

    const std::vector<int>& mul_table() const { return mul_; }

    // Builders. `from_permutations` closes the generators (cap 5000 elements);
    // `from_mul_table` validates the table (exhaustive associativity for
    // order <= 64, Latin-square + sampled triples above).
    static GroupPtr from_permutations(const std::string& name,
                                      const std::vector<std::vector<int>>& generators);
    static GroupPtr from_mul_table(const std::string& name, int order,
                                   std::vector<int> table,
                                   std::vector<std::vector<int>> perm_images = {});

private:
    FiniteGroup() = default;
    void finalize(); // inv table, validation, classes, center, hash

    std::string name_;
    int order_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> perm_images_;
    ConjugacyClasses classes_;
    std::vector<ElementId> center_;
    std::uint64_t ordering_hash_ = 0;
};

// Build a group from a descriptor:
//   S<n> (n <= 6), Z<n>, D<n>, Q8, prod(A,B), perm:[(0,1)(2,3);(0,1,2);...]
// Cycle points are 0-based and must stay below 12; the closure is capped at
// 5000 elements.
// Errors: malformed-descriptor, generators-not-permutations, closure-exceeds-limit.
GroupPtr build_group(const std::string& descriptor);

// Spec-named accessors (the data lives on the group).
const ConjugacyClasses& conjugacy_classes(const FiniteGroup& g);
std::vector<ElementId> center(const FiniteGroup& g);

} // namespace gck
