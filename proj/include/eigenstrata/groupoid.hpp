#pragma once

// Finite groupoids, materialized: explicit object and morphism lists with
// identities, inverses and composition. Covers transformation groupoids
// [X/G] of finite group actions, fiber products A x_C B of groupoid
// functors, isotropy groups, connected components and groupoid cardinality.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

namespace eigenstrata {

using Rational = boost::rational<std::int64_t>;

class FiniteGroup {
public:
    /// Multiplication table, row-major: table[g * order + h] = g h. Checks
    /// closure, a two-sided identity, inverses, and associativity (the last
    /// exhaustively only when order <= kExhaustiveCheckOrder).
    FiniteGroup(std::size_t order, std::vector<int> table, std::vector<std::string> labels = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int m);
    /// All permutations of {0..n-1} in lexicographic order, (g h)(x) = g(h(x)).
    static FiniteGroup symmetric(int n);
    /// Signed permutation matrices of order n under matrix multiplication.
    static FiniteGroup hyperoctahedral(int n);

    std::size_t order() const noexcept { return order_; }
    int identity() const noexcept { return identity_; }
    int multiply(int g, int h) const { return table_[static_cast<std::size_t>(g) * order_ + static_cast<std::size_t>(h)]; }
    int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
    const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }

    /// For symmetric(n): the permutation of element g.
    const std::vector<std::vector<int>>& permutations() const noexcept { return perms_; }

    static constexpr std::size_t kExhaustiveCheckOrder = 200;

private:
    FiniteGroup() = default;
    void finish(bool check_associativity);

    std::size_t order_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> perms_;
    int identity_ = 0;
};

class GroupAction {
public:
    /// act(g, x) for every group element and every x in [0, set_size).
    /// Verifies the identity acts trivially and g.(h.x) = (gh).x.
    GroupAction(std::shared_ptr<const FiniteGroup> group, std::size_t set_size,
                const std::function<int(int, int)>& act, std::vector<std::string> set_labels = {});

    /// symmetric(n) acting on {0..n-1}
    static GroupAction natural(int n);
    /// G acting on m points by the identity
    static GroupAction trivial(std::shared_ptr<const FiniteGroup> group, std::size_t m);
    /// G acting on itself by left multiplication
    static GroupAction regular(std::shared_ptr<const FiniteGroup> group);

    const FiniteGroup& group() const noexcept { return *group_; }
    std::size_t set_size() const noexcept { return set_size_; }
    int act(int g, int x) const { return action_[static_cast<std::size_t>(g) * set_size_ + static_cast<std::size_t>(x)]; }
    const std::vector<std::string>& set_labels() const noexcept { return labels_; }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::size_t set_size_;
    std::vector<int> action_;
    std::vector<std::string> labels_;
};

struct Morphism {
    int source;
    int target;
};

class FiniteGroupoid {
public:
    using Compose = std::function<int(int g, int f)>;  // g after f

    /// Checks identities, inverses and that hom-sets close up; checks
    /// associativity on every composable triple when the groupoid has at
    /// most kExhaustiveCheckMorphisms morphisms.
    FiniteGroupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   std::vector<int> identities, std::vector<int> inverses, Compose compose);

    /// Composition from an explicit table keyed by (g, f).
    static FiniteGroupoid from_table(std::vector<std::string> objects,
                                     std::vector<Morphism> morphisms,
                                     std::vector<int> identities, std::vector<int> inverses,
                                     const std::vector<std::vector<int>>& table);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }
    const std::string& object_label(int obj) const;
    const Morphism& morphism(int m) const { return morphisms_[static_cast<std::size_t>(m)]; }
    int identity(int obj) const;
    int inverse(int m) const { return inverses_[static_cast<std::size_t>(m)]; }
    /// g after f; throws InvalidArgument if target(f) != source(g).
    int compose(int g, int f) const;

    std::span<const int> hom(int from, int to) const;
    std::span<const int> outgoing(int from) const;

    static constexpr std::size_t kExhaustiveCheckMorphisms = 600;

private:
    void check_object(int obj) const;
    void validate() const;

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::vector<int> inverses_;
    Compose compose_;
    std::unordered_map<std::uint64_t, std::vector<int>> hom_;
    std::vector<std::vector<int>> outgoing_;
};

inline constexpr std::size_t kMaxTransformationMorphisms = 1'000'000;

/// Objects X, morphisms (g, x): x -> g.x with id x * |G| + g.
FiniteGroupoid transformation_groupoid(const GroupAction& action);

/// The group G as a groupoid with one object.
FiniteGroupoid one_object_groupoid(std::shared_ptr<const FiniteGroup> group);

/// m objects, identity morphisms only.
FiniteGroupoid discrete_groupoid(std::size_t m);

class GroupoidFunctor {
public:
    /// Verifies sources/targets, identities and composition exhaustively.
    GroupoidFunctor(std::shared_ptr<const FiniteGroupoid> source,
                    std::shared_ptr<const FiniteGroupoid> target, std::vector<int> on_objects,
                    std::vector<int> on_morphisms);

    static GroupoidFunctor identity(std::shared_ptr<const FiniteGroupoid> g);
    /// Sends every object to `object` and every morphism to its identity.
    static GroupoidFunctor constant(std::shared_ptr<const FiniteGroupoid> source,
                                    std::shared_ptr<const FiniteGroupoid> target, int object);

    const FiniteGroupoid& source() const noexcept { return *source_; }
    const std::shared_ptr<const FiniteGroupoid>& source_ptr() const noexcept { return source_; }
    const std::shared_ptr<const FiniteGroupoid>& target_ptr() const noexcept { return target_; }
    const FiniteGroupoid& target() const noexcept { return *target_; }
    int object(int a) const { return on_objects_[static_cast<std::size_t>(a)]; }
    int morphism(int m) const { return on_morphisms_[static_cast<std::size_t>(m)]; }

private:
    std::shared_ptr<const FiniteGroupoid> source_;
    std::shared_ptr<const FiniteGroupoid> target_;
    std::vector<int> on_objects_;
    std::vector<int> on_morphisms_;
};

struct FiberObject {
    int a;    // object of the first factor
    int b;    // object of the second factor
    int phi;  // morphism F(a) -> G(b) of the base
};

struct FiberProduct {
    FiniteGroupoid groupoid;
    std::vector<FiberObject> objects;             // by object id
    std::vector<std::pair<int, int>> components;  // morphism id -> (a, b)
};

/// Objects (A, B, phi: F A -> G B); morphisms (a, b) with
/// phi_1 F(a) = G(b) phi_0. Throws IncompatibleTargets unless both functors
/// land in the same groupoid instance, SizeLimit past
/// kMaxTransformationMorphisms morphisms.
FiberProduct fiber_product(const GroupoidFunctor& f, const GroupoidFunctor& g);

/// Automorphisms of obj; throws UnknownObject.
std::vector<int> isotropy(const FiniteGroupoid& g, int obj);

struct OrbitSummary {
    std::vector<std::vector<int>> components;  // ordered by smallest object
    std::vector<std::size_t> isotropy_orders;  // of each component's first object
    Rational cardinality;                      // sum of 1 / |isotropy|
};

OrbitSummary orbits_and_cardinality(const FiniteGroupoid& g);

}  // namespace eigenstrata
