#pragma once

// Brute-force groupoid constructions shared by the unit and acceptance tests.

#include <cstddef>
#include <memory>
#include <vector>

#include "eigenstrata/groupoid.hpp"

namespace oracle {

using namespace eigenstrata;

// S_n acting on subsets of {0..n-1}, encoded as bitmasks.
inline GroupAction subset_action(int n) {
    auto group = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
    const auto& perms = group->permutations();
    return GroupAction(group, std::size_t{1} << n, [&perms, n](int g, int x) {
        int y = 0;
        for (int i = 0; i < n; ++i)
            if (x & (1 << i)) y |= 1 << perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
        return y;
    });
}

// Projection [X/G] -> BG, (g, x) |-> g.
inline GroupoidFunctor projection(std::shared_ptr<const FiniteGroupoid> quotient,
                           std::shared_ptr<const FiniteGroupoid> base, std::size_t order) {
    std::vector<int> objs(quotient->object_count(), 0);
    std::vector<int> morphs(quotient->morphism_count());
    for (std::size_t m = 0; m < morphs.size(); ++m) morphs[m] = static_cast<int>(m % order);
    return GroupoidFunctor(std::move(quotient), std::move(base), std::move(objs), std::move(morphs));
}

struct Counts {
    std::size_t objects = 0;
    std::size_t morphisms = 0;
};

// Enumerates triples and commuting squares directly from the definitions.
inline Counts brute_force_fiber(const GroupoidFunctor& f, const GroupoidFunctor& g) {
    const FiniteGroupoid& c = f.target();
    struct Obj {
        int a, b, phi;
    };
    std::vector<Obj> objs;
    for (std::size_t a = 0; a < f.source().object_count(); ++a)
        for (std::size_t b = 0; b < g.source().object_count(); ++b)
            for (std::size_t phi = 0; phi < c.morphism_count(); ++phi) {
                const auto& m = c.morphism(static_cast<int>(phi));
                if (m.source == f.object(static_cast<int>(a)) && m.target == g.object(static_cast<int>(b)))
                    objs.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(phi)});
            }
    Counts out{objs.size(), 0};
    for (const auto& o0 : objs)
        for (const auto& o1 : objs)
            for (std::size_t alpha = 0; alpha < f.source().morphism_count(); ++alpha) {
                const auto& ma = f.source().morphism(static_cast<int>(alpha));
                if (ma.source != o0.a || ma.target != o1.a) continue;
                for (std::size_t beta = 0; beta < g.source().morphism_count(); ++beta) {
                    const auto& mb = g.source().morphism(static_cast<int>(beta));
                    if (mb.source != o0.b || mb.target != o1.b) continue;
                    if (c.compose(g.morphism(static_cast<int>(beta)), o0.phi) ==
                        c.compose(o1.phi, f.morphism(static_cast<int>(alpha))))
                        ++out.morphisms;
                }
            }
    return out;
}

}  // namespace oracle
