#include "eigenstrata/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

namespace {

std::uint64_t pair_key(std::size_t a, std::size_t b, std::size_t stride) {
    return static_cast<std::uint64_t>(a) * stride + b;
}

std::string one_line(const std::vector<int>& perm) {
    std::string out;
    for (int x : perm) out += std::to_string(x + 1);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::size_t order, std::vector<int> table,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    finish(order_ <= kExhaustiveCheckOrder);
}

void FiniteGroup::finish(bool check_associativity) {
    if (order_ == 0) throw Error(ErrorCode::InvalidArgument, "group must be nonempty");
    if (table_.size() != order_ * order_) {
        throw Error(ErrorCode::InvalidArgument, "multiplication table has the wrong size");
    }
    const int n = static_cast<int>(order_);
    for (int v : table_)
        if (v < 0 || v >= n) throw Error(ErrorCode::InvalidArgument, "table entry out of range");
    if (labels_.empty()) {
        for (int g = 0; g < n; ++g) labels_.push_back("g" + std::to_string(g));
    }
    if (labels_.size() != order_) throw Error(ErrorCode::InvalidArgument, "wrong label count");

    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = multiply(e, g) == g && multiply(g, e) == g;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw Error(ErrorCode::InvalidArgument, "no identity element");

    inverse_.assign(order_, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (multiply(g, h) == identity_ && multiply(h, g) == identity_) {
                inverse_[static_cast<std::size_t>(g)] = h;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(g)] < 0) {
            throw Error(ErrorCode::InvalidArgument, "element " + labels_[static_cast<std::size_t>(g)] + " has no inverse");
        }
    }
    if (check_associativity) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
                        throw Error(ErrorCode::InvalidArgument, "multiplication is not associative");
                    }
    }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1 || m > 2000) throw Error(ErrorCode::OutOfRange, "cyclic group order must lie in [1, 2000]");
    const auto order = static_cast<std::size_t>(m);
    FiniteGroup g;
    g.order_ = order;
    g.table_.resize(order * order);
    for (int a = 0; a < m; ++a) {
        g.labels_.push_back("r" + std::to_string(a));
        for (int b = 0; b < m; ++b) g.table_[pair_key(static_cast<std::size_t>(a), static_cast<std::size_t>(b), order)] = (a + b) % m;
    }
    g.finish(false);
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 6) throw Error(ErrorCode::OutOfRange, "symmetric group degree must lie in [1, 6]");
    FiniteGroup g;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<int>, int> index;
    do {
        index.emplace(perm, static_cast<int>(g.perms_.size()));
        g.perms_.push_back(perm);
        g.labels_.push_back(one_line(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    g.order_ = g.perms_.size();
    g.table_.resize(g.order_ * g.order_);
    std::vector<int> prod(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < g.order_; ++a)
        for (std::size_t b = 0; b < g.order_; ++b) {
            for (std::size_t x = 0; x < prod.size(); ++x)
                prod[x] = g.perms_[a][static_cast<std::size_t>(g.perms_[b][x])];
            g.table_[pair_key(a, b, g.order_)] = index.at(prod);
        }
    g.finish(false);
    return g;
}

FiniteGroup FiniteGroup::hyperoctahedral(int n) {
    if (n < 1 || n > 4) throw Error(ErrorCode::OutOfRange, "hyperoctahedral degree must lie in [1, 4]");
    const auto un = static_cast<std::size_t>(n);
    // element = (perm, sign mask); row i of the matrix has sign(i) at column perm[i]
    std::vector<std::pair<std::vector<int>, unsigned>> elements;
    std::vector<int> perm(un);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) elements.emplace_back(perm, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::map<std::pair<std::vector<int>, unsigned>, int> index;
    FiniteGroup g;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        index.emplace(elements[k], static_cast<int>(k));
        std::string label;
        for (std::size_t i = 0; i < un; ++i) {
            label += (elements[k].second >> i) & 1u ? '-' : '+';
            label += std::to_string(elements[k].first[i] + 1);
        }
        g.labels_.push_back(label);
    }
    g.order_ = elements.size();
    g.table_.resize(g.order_ * g.order_);
    for (std::size_t a = 0; a < g.order_; ++a)
        for (std::size_t b = 0; b < g.order_; ++b) {
            const auto& [pa, sa] = elements[a];
            const auto& [pb, sb] = elements[b];
            std::pair<std::vector<int>, unsigned> prod{std::vector<int>(un), 0u};
            for (std::size_t i = 0; i < un; ++i) {
                const auto mid = static_cast<std::size_t>(pa[i]);
                prod.first[i] = pb[mid];
                const unsigned sign = ((sa >> i) ^ (sb >> mid)) & 1u;
                prod.second |= sign << i;
            }
            g.table_[pair_key(a, b, g.order_)] = index.at(prod);
        }
    g.finish(false);
    return g;
}

// ---------------------------------------------------------------- GroupAction

GroupAction::GroupAction(std::shared_ptr<const FiniteGroup> group, std::size_t set_size,
                         const std::function<int(int, int)>& act,
                         std::vector<std::string> set_labels)
    : group_(std::move(group)), set_size_(set_size), labels_(std::move(set_labels)) {
    if (!group_) throw Error(ErrorCode::InvalidArgument, "action needs a group");
    const std::size_t order = group_->order();
    if (order * set_size_ > kMaxTransformationMorphisms) {
        throw Error(ErrorCode::SizeLimit, "|G| * |X| exceeds " + std::to_string(kMaxTransformationMorphisms));
    }
    if (labels_.empty()) {
        for (std::size_t x = 0; x < set_size_; ++x) labels_.push_back(std::to_string(x + 1));
    }
    if (labels_.size() != set_size_) throw Error(ErrorCode::InvalidArgument, "wrong set label count");

    action_.resize(order * set_size_);
    const int m = static_cast<int>(set_size_);
    for (int g = 0; g < static_cast<int>(order); ++g)
        for (int x = 0; x < m; ++x) {
            const int y = act(g, x);
            if (y < 0 || y >= m) throw Error(ErrorCode::InvalidArgument, "action leaves the set");
            action_[pair_key(static_cast<std::size_t>(g), static_cast<std::size_t>(x), set_size_)] = y;
        }
    for (int x = 0; x < m; ++x)
        if (this->act(group_->identity(), x) != x) {
            throw Error(ErrorCode::InvalidArgument, "identity does not act trivially");
        }
    // Exhaustive compatibility check below 5e7 triples; above that, h runs
    // over an evenly spaced sample of 64 elements.
    const std::size_t stride =
        order * order * set_size_ <= 50'000'000 ? 1 : std::max<std::size_t>(1, order / 64);
    for (std::size_t h = 0; h < order; h += stride)
        for (std::size_t g = 0; g < order; ++g)
            for (int x = 0; x < m; ++x) {
                const int gh = group_->multiply(static_cast<int>(g), static_cast<int>(h));
                if (this->act(static_cast<int>(g), this->act(static_cast<int>(h), x)) != this->act(gh, x)) {
                    throw Error(ErrorCode::InvalidArgument, "action is not compatible with multiplication");
                }
            }
}

GroupAction GroupAction::natural(int n) {
    auto group = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
    const auto* g = group.get();
    return GroupAction(group, static_cast<std::size_t>(n), [g](int e, int x) {
        return g->permutations()[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)];
    });
}

GroupAction GroupAction::trivial(std::shared_ptr<const FiniteGroup> group, std::size_t m) {
    return GroupAction(std::move(group), m, [](int, int x) { return x; });
}

GroupAction GroupAction::regular(std::shared_ptr<const FiniteGroup> group) {
    const auto* g = group.get();
    const std::size_t order = group->order();
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < order; ++k) labels.push_back(g->label(static_cast<int>(k)));
    return GroupAction(std::move(group), order,
                       [g](int e, int x) { return g->multiply(e, x); }, std::move(labels));
}

// ------------------------------------------------------------- FiniteGroupoid

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identities, std::vector<int> inverses,
                               Compose compose)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      inverses_(std::move(inverses)),
      compose_(std::move(compose)) {
    const std::size_t n = objects_.size();
    if (identities_.size() != n) throw Error(ErrorCode::InvalidArgument, "one identity per object required");
    if (inverses_.size() != morphisms_.size()) throw Error(ErrorCode::InvalidArgument, "one inverse per morphism required");
    outgoing_.resize(n);
    for (std::size_t m = 0; m < morphisms_.size(); ++m) {
        const Morphism& mor = morphisms_[m];
        if (mor.source < 0 || static_cast<std::size_t>(mor.source) >= n || mor.target < 0 ||
            static_cast<std::size_t>(mor.target) >= n) {
            throw Error(ErrorCode::InvalidArgument, "morphism endpoint out of range");
        }
        hom_[pair_key(static_cast<std::size_t>(mor.source), static_cast<std::size_t>(mor.target), n)].push_back(static_cast<int>(m));
        outgoing_[static_cast<std::size_t>(mor.source)].push_back(static_cast<int>(m));
    }
    validate();
}

void FiniteGroupoid::validate() const {
    const int count = static_cast<int>(morphisms_.size());
    auto valid = [&](int m) { return m >= 0 && m < count; };
    for (std::size_t o = 0; o < objects_.size(); ++o) {
        const int id = identities_[o];
        if (!valid(id) || morphisms_[static_cast<std::size_t>(id)].source != static_cast<int>(o) ||
            morphisms_[static_cast<std::size_t>(id)].target != static_cast<int>(o)) {
            throw Error(ErrorCode::InvalidArgument, "identity is not an endomorphism of its object");
        }
    }
    for (int m = 0; m < count; ++m) {
        const Morphism& mor = morphisms_[static_cast<std::size_t>(m)];
        const int inv = inverses_[static_cast<std::size_t>(m)];
        if (!valid(inv) || morphism(inv).source != mor.target || morphism(inv).target != mor.source) {
            throw Error(ErrorCode::InvalidArgument, "inverse has the wrong endpoints");
        }
        if (compose_(identity(mor.target), m) != m || compose_(m, identity(mor.source)) != m) {
            throw Error(ErrorCode::InvalidArgument, "identities are not neutral");
        }
        if (compose_(inv, m) != identity(mor.source) || compose_(m, inv) != identity(mor.target)) {
            throw Error(ErrorCode::InvalidArgument, "inverse is not two-sided");
        }
    }
    if (morphisms_.size() > kExhaustiveCheckMorphisms) return;
    for (int f = 0; f < count; ++f)
        for (int g : outgoing(morphism(f).target)) {
            const int gf = compose_(g, f);
            if (!valid(gf) || morphism(gf).source != morphism(f).source ||
                morphism(gf).target != morphism(g).target) {
                throw Error(ErrorCode::InvalidArgument, "composite has the wrong endpoints");
            }
            for (int h : outgoing(morphism(g).target)) {
                if (compose_(h, gf) != compose_(compose_(h, g), f)) {
                    throw Error(ErrorCode::InvalidArgument, "composition is not associative");
                }
            }
        }
}

FiniteGroupoid FiniteGroupoid::from_table(std::vector<std::string> objects,
                                          std::vector<Morphism> morphisms,
                                          std::vector<int> identities, std::vector<int> inverses,
                                          const std::vector<std::vector<int>>& table) {
    auto shared = std::make_shared<const std::vector<std::vector<int>>>(table);
    const std::size_t count = morphisms.size();
    if (table.size() != count) throw Error(ErrorCode::InvalidArgument, "composition table has the wrong size");
    for (const auto& row : table)
        if (row.size() != count) throw Error(ErrorCode::InvalidArgument, "composition table has the wrong size");
    return FiniteGroupoid(std::move(objects), std::move(morphisms), std::move(identities),
                          std::move(inverses), [shared](int g, int f) {
                              return (*shared)[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
                          });
}

void FiniteGroupoid::check_object(int obj) const {
    if (obj < 0 || static_cast<std::size_t>(obj) >= objects_.size()) {
        throw Error(ErrorCode::UnknownObject, "no object with id " + std::to_string(obj));
    }
}

const std::string& FiniteGroupoid::object_label(int obj) const {
    check_object(obj);
    return objects_[static_cast<std::size_t>(obj)];
}

int FiniteGroupoid::identity(int obj) const {
    check_object(obj);
    return identities_[static_cast<std::size_t>(obj)];
}

int FiniteGroupoid::compose(int g, int f) const {
    if (morphism(f).target != morphism(g).source) {
        throw Error(ErrorCode::InvalidArgument, "morphisms are not composable");
    }
    return compose_(g, f);
}

std::span<const int> FiniteGroupoid::hom(int from, int to) const {
    check_object(from);
    check_object(to);
    const auto it = hom_.find(pair_key(static_cast<std::size_t>(from), static_cast<std::size_t>(to), objects_.size()));
    if (it == hom_.end()) return {};
    return it->second;
}

std::span<const int> FiniteGroupoid::outgoing(int from) const {
    check_object(from);
    return outgoing_[static_cast<std::size_t>(from)];
}

// ------------------------------------------------------------- constructions

FiniteGroupoid transformation_groupoid(const GroupAction& action) {
    const std::size_t order = action.group().order();
    const std::size_t size = action.set_size();
    if (order * size > kMaxTransformationMorphisms) {
        throw Error(ErrorCode::SizeLimit, "|G| * |X| exceeds " + std::to_string(kMaxTransformationMorphisms));
    }
    const FiniteGroup& group = action.group();
    std::vector<Morphism> morphisms(order * size);
    std::vector<int> inverses(order * size);
    std::vector<int> identities(size);
    for (std::size_t x = 0; x < size; ++x) {
        identities[x] = static_cast<int>(x * order) + group.identity();
        for (std::size_t g = 0; g < order; ++g) {
            const int y = action.act(static_cast<int>(g), static_cast<int>(x));
            morphisms[x * order + g] = {static_cast<int>(x), y};
            inverses[x * order + g] = y * static_cast<int>(order) + group.inverse(static_cast<int>(g));
        }
    }
    auto table = std::make_shared<const FiniteGroup>(group);
    const int stride = static_cast<int>(order);
    return FiniteGroupoid(action.set_labels(), std::move(morphisms), std::move(identities),
                          std::move(inverses), [table, stride](int g, int f) {
                              const int x = f / stride;
                              return x * stride + table->multiply(g % stride, f % stride);
                          });
}

FiniteGroupoid one_object_groupoid(std::shared_ptr<const FiniteGroup> group) {
    return transformation_groupoid(GroupAction::trivial(std::move(group), 1));
}

FiniteGroupoid discrete_groupoid(std::size_t m) {
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> ids;
    for (std::size_t k = 0; k < m; ++k) {
        objects.push_back(std::to_string(k + 1));
        morphisms.push_back({static_cast<int>(k), static_cast<int>(k)});
        ids.push_back(static_cast<int>(k));
    }
    std::vector<int> inverses = ids;
    return FiniteGroupoid(std::move(objects), std::move(morphisms), std::move(ids),
                          std::move(inverses), [](int g, int) { return g; });
}

// ------------------------------------------------------------------ functors

GroupoidFunctor::GroupoidFunctor(std::shared_ptr<const FiniteGroupoid> source,
                                 std::shared_ptr<const FiniteGroupoid> target,
                                 std::vector<int> on_objects, std::vector<int> on_morphisms)
    : source_(std::move(source)),
      target_(std::move(target)),
      on_objects_(std::move(on_objects)),
      on_morphisms_(std::move(on_morphisms)) {
    if (!source_ || !target_) throw Error(ErrorCode::InvalidArgument, "functor needs both groupoids");
    const FiniteGroupoid& a = *source_;
    const FiniteGroupoid& c = *target_;
    if (on_objects_.size() != a.object_count() || on_morphisms_.size() != a.morphism_count()) {
        throw Error(ErrorCode::InvalidArgument, "functor maps have the wrong size");
    }
    for (int o : on_objects_)
        if (o < 0 || static_cast<std::size_t>(o) >= c.object_count()) {
            throw Error(ErrorCode::InvalidArgument, "functor sends an object out of range");
        }
    for (std::size_t m = 0; m < on_morphisms_.size(); ++m) {
        const int fm = on_morphisms_[m];
        if (fm < 0 || static_cast<std::size_t>(fm) >= c.morphism_count()) {
            throw Error(ErrorCode::InvalidArgument, "functor sends a morphism out of range");
        }
        const Morphism& src = a.morphism(static_cast<int>(m));
        if (c.morphism(fm).source != object(src.source) || c.morphism(fm).target != object(src.target)) {
            throw Error(ErrorCode::InvalidArgument, "functor does not preserve endpoints");
        }
    }
    for (std::size_t o = 0; o < a.object_count(); ++o)
        if (morphism(a.identity(static_cast<int>(o))) != c.identity(object(static_cast<int>(o)))) {
            throw Error(ErrorCode::InvalidArgument, "functor does not preserve identities");
        }
    for (std::size_t f = 0; f < a.morphism_count(); ++f)
        for (int g : a.outgoing(a.morphism(static_cast<int>(f)).target)) {
            if (morphism(a.compose(g, static_cast<int>(f))) !=
                c.compose(morphism(g), morphism(static_cast<int>(f)))) {
                throw Error(ErrorCode::InvalidArgument, "functor does not preserve composition");
            }
        }
}

GroupoidFunctor GroupoidFunctor::identity(std::shared_ptr<const FiniteGroupoid> g) {
    std::vector<int> objects(g->object_count());
    std::vector<int> morphisms(g->morphism_count());
    std::iota(objects.begin(), objects.end(), 0);
    std::iota(morphisms.begin(), morphisms.end(), 0);
    auto target = g;
    return GroupoidFunctor(std::move(g), std::move(target), std::move(objects), std::move(morphisms));
}

GroupoidFunctor GroupoidFunctor::constant(std::shared_ptr<const FiniteGroupoid> source,
                                          std::shared_ptr<const FiniteGroupoid> target, int object) {
    const int id = target->identity(object);
    std::vector<int> objects(source->object_count(), object);
    std::vector<int> morphisms(source->morphism_count(), id);
    return GroupoidFunctor(std::move(source), std::move(target), std::move(objects), std::move(morphisms));
}

// ------------------------------------------------------------- fiber product

namespace {

struct FiberData {
    std::shared_ptr<const FiniteGroupoid> a;
    std::shared_ptr<const FiniteGroupoid> b;
    std::vector<int> source_object;              // morphism -> source object
    std::vector<std::pair<int, int>> components;  // morphism -> (alpha, beta)
    std::unordered_map<std::uint64_t, int> lookup;
    std::uint64_t key(int obj, int alpha, int beta) const {
        return (static_cast<std::uint64_t>(obj) * a->morphism_count() + static_cast<std::uint64_t>(alpha)) *
                   b->morphism_count() +
               static_cast<std::uint64_t>(beta);
    }
};

}  // namespace

FiberProduct fiber_product(const GroupoidFunctor& f, const GroupoidFunctor& g) {
    if (f.target_ptr().get() != g.target_ptr().get()) {
        throw Error(ErrorCode::IncompatibleTargets, "functors land in different groupoids");
    }
    const FiniteGroupoid& a = f.source();
    const FiniteGroupoid& b = g.source();
    const FiniteGroupoid& c = f.target();

    std::vector<FiberObject> objects;
    std::vector<std::string> labels;
    std::unordered_map<std::uint64_t, int> object_index;
    const std::uint64_t mor_c = c.morphism_count();
    auto object_key = [&](int oa, int ob, int phi) {
        return (static_cast<std::uint64_t>(oa) * b.object_count() + static_cast<std::uint64_t>(ob)) * mor_c +
               static_cast<std::uint64_t>(phi);
    };
    std::size_t morphism_total = 0;
    for (int oa = 0; oa < static_cast<int>(a.object_count()); ++oa)
        for (int ob = 0; ob < static_cast<int>(b.object_count()); ++ob)
            for (int phi : c.hom(f.object(oa), g.object(ob))) {
                object_index.emplace(object_key(oa, ob, phi), static_cast<int>(objects.size()));
                objects.push_back({oa, ob, phi});
                labels.push_back("(" + a.object_label(oa) + "," + b.object_label(ob) + ",m" + std::to_string(phi) + ")");
                morphism_total += a.outgoing(oa).size() * b.outgoing(ob).size();
                if (morphism_total > kMaxTransformationMorphisms) {
                    throw Error(ErrorCode::SizeLimit, "fiber product has more than " +
                                                          std::to_string(kMaxTransformationMorphisms) + " morphisms");
                }
            }

    auto data = std::make_shared<FiberData>();
    data->a = f.source_ptr();
    data->b = g.source_ptr();
    std::vector<Morphism> morphisms;
    morphisms.reserve(morphism_total);
    for (int o = 0; o < static_cast<int>(objects.size()); ++o) {
        const FiberObject& src = objects[static_cast<std::size_t>(o)];
        for (int alpha : a.outgoing(src.a))
            for (int beta : b.outgoing(src.b)) {
                const int phi1 = c.compose(g.morphism(beta), c.compose(src.phi, c.inverse(f.morphism(alpha))));
                const int tgt = object_index.at(object_key(a.morphism(alpha).target, b.morphism(beta).target, phi1));
                data->lookup.emplace(data->key(o, alpha, beta), static_cast<int>(morphisms.size()));
                data->source_object.push_back(o);
                data->components.emplace_back(alpha, beta);
                morphisms.push_back({o, tgt});
            }
    }
    std::vector<int> identities;
    for (int o = 0; o < static_cast<int>(objects.size()); ++o) {
        const FiberObject& obj = objects[static_cast<std::size_t>(o)];
        identities.push_back(data->lookup.at(data->key(o, a.identity(obj.a), b.identity(obj.b))));
    }
    std::vector<int> inverses;
    for (std::size_t m = 0; m < morphisms.size(); ++m) {
        const auto [alpha, beta] = data->components[m];
        inverses.push_back(data->lookup.at(data->key(morphisms[m].target, a.inverse(alpha), b.inverse(beta))));
    }

    std::shared_ptr<const FiberData> frozen = data;
    auto components = data->components;
    FiniteGroupoid groupoid(std::move(labels), std::move(morphisms), std::move(identities),
                            std::move(inverses), [frozen](int second, int first) {
                                const auto [a2, b2] = frozen->components[static_cast<std::size_t>(second)];
                                const auto [a1, b1] = frozen->components[static_cast<std::size_t>(first)];
                                const int obj = frozen->source_object[static_cast<std::size_t>(first)];
                                return frozen->lookup.at(frozen->key(obj, frozen->a->compose(a2, a1),
                                                                     frozen->b->compose(b2, b1)));
                            });
    return {std::move(groupoid), std::move(objects), std::move(components)};
}

// ----------------------------------------------------------- isotropy, orbits

std::vector<int> isotropy(const FiniteGroupoid& g, int obj) {
    if (obj < 0 || static_cast<std::size_t>(obj) >= g.object_count()) {
        throw Error(ErrorCode::UnknownObject, "no object with id " + std::to_string(obj));
    }
    const auto loops = g.hom(obj, obj);
    std::vector<int> out(loops.begin(), loops.end());
    const std::set<int> members(out.begin(), out.end());
    for (int x : out) {
        if (!members.count(g.inverse(x))) throw Error(ErrorCode::InvalidArgument, "isotropy is not closed under inverses");
        for (int y : out)
            if (!members.count(g.compose(x, y))) {
                throw Error(ErrorCode::InvalidArgument, "isotropy is not closed under composition");
            }
    }
    return out;
}

OrbitSummary orbits_and_cardinality(const FiniteGroupoid& g) {
    const std::size_t n = g.object_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t m = 0; m < g.morphism_count(); ++m) {
        const Morphism& mor = g.morphism(static_cast<int>(m));
        const std::size_t r1 = find(static_cast<std::size_t>(mor.source));
        const std::size_t r2 = find(static_cast<std::size_t>(mor.target));
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
    OrbitSummary out;
    out.cardinality = 0;
    std::vector<int> component_of(n, -1);
    for (std::size_t o = 0; o < n; ++o) {
        const std::size_t root = find(o);
        if (component_of[root] < 0) {
            component_of[root] = static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        out.components[static_cast<std::size_t>(component_of[root])].push_back(static_cast<int>(o));
    }
    for (const auto& component : out.components) {
        const std::size_t iso = g.hom(component.front(), component.front()).size();
        out.isotropy_orders.push_back(iso);
        out.cardinality += Rational(1, static_cast<std::int64_t>(iso));
    }
    return out;
}

}  // namespace eigenstrata
