#include "eigenstrata/cli/commands.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "eigenstrata/combinatorics.hpp"
#include "eigenstrata/error.hpp"
#include "eigenstrata/groupoid.hpp"
#include "eigenstrata/polytopes.hpp"
#include "eigenstrata/spectral.hpp"

namespace eigenstrata::cli {

using nlohmann::json;

namespace {

json big(const BigCount& value) {
    if (value <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(value);
    return value.str();
}

std::string show(const json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

json fvector_json(const FVector& f) { return f.counts; }

std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

json enumerate(const std::string& kind, int n, std::optional<int> dim) {
    json table = {{"kind", kind}, {"n", n}};
    if (kind == "partitions") {
        if (dim) throw Error(ErrorCode::InvalidArgument, "partitions take no dimension");
        json rows = json::array();
        for (const Partition& p : partitions_of(n)) {
            const StratumDims d = stratum_dims(p);
            rows.push_back({{"partition", p.to_string()},
                            {"parts", p.parts()},
                            {"length", p.length()},
                            {"codim", arnold_codim(p)},
                            {"codim_raw", arnold_codim_raw(p)},
                            {"orth_isotropy_dim", d.orth_isotropy_dim},
                            {"flag_dim", d.flag_dim},
                            {"relative_dim", d.relative_dim},
                            {"normalizer_order", big(normalizer_order(p))}});
        }
        table["rows"] = std::move(rows);
    } else if (kind == "coxeter") {
        const FVector f = coxeter_fvector(n);
        table["fvector"] = fvector_json(f);
        table["euler_characteristic"] = f.euler_characteristic();
        table["chambers"] = f.counts.back();
        if (dim) {
            json list = json::array();
            for (const auto& face : coxeter_faces(n, *dim)) list.push_back(face.to_string());
            table["faces"] = {{"dim", *dim}, {"list", std::move(list)}};
        }
    } else if (kind == "associahedron") {
        const FVector f = associahedron_fvector(n);
        table["fvector"] = fvector_json(f);
        table["euler_characteristic"] = f.euler_characteristic();
        table["vertices"] = f.counts.front();
        table["catalan"] = catalan(n - 1);
        if (dim) {
            if (*dim < 0 || *dim > n - 2) {
                throw Error(ErrorCode::OutOfRange, "associahedron face dimension must lie in [0, " +
                                                       std::to_string(n - 2) + "]");
            }
            json list = json::array();
            for (const auto& face : associahedron_faces(n, n - 2 - *dim)) {
                const auto gaps = blowdown(face);
                list.push_back({{"brackets", face.to_string()}, {"blowdown", std::vector<int>(gaps.begin(), gaps.end())}});
            }
            table["faces"] = {{"dim", *dim}, {"list", std::move(list)}};
        }
    } else if (kind == "tiling") {
        if (dim) throw Error(ErrorCode::InvalidArgument, "tiling takes no dimension");
        const TilingStats t = tiling_stats(n);
        table["chambers"] = big(t.chambers);
        table["tiles_M"] = big(t.tiles_M);
        table["tiles_OM"] = big(t.tiles_OM);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown enumeration kind '" + kind + "'");
    }
    return table;
}

std::string render_enumeration_text(const json& table) {
    std::ostringstream out;
    const std::string kind = table.at("kind");
    out << kind << " n=" << table.at("n").get<int>() << '\n';
    if (kind == "partitions") {
        const char* header[] = {"partition", "codim", "iso_dim", "flag_dim", "rel_dim", "normalizer"};
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : table.at("rows")) {
            cells.push_back({row.at("partition"), show(row.at("codim")), show(row.at("orth_isotropy_dim")),
                             show(row.at("flag_dim")), show(row.at("relative_dim")), show(row.at("normalizer_order"))});
        }
        std::vector<std::size_t> width(6);
        for (std::size_t c = 0; c < 6; ++c) {
            width[c] = std::string(header[c]).size();
            for (const auto& r : cells) width[c] = std::max(width[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                out << (c ? "  " : "") << r[c] << std::string(width[c] - r[c].size(), ' ');
            }
            out << '\n';
        };
        line({header, header + 6});
        for (const auto& r : cells) line(r);
    } else if (kind == "tiling") {
        out << "chambers  " << show(table.at("chambers")) << '\n'
            << "tiles_M   " << show(table.at("tiles_M")) << '\n'
            << "tiles_OM  " << show(table.at("tiles_OM")) << '\n';
    } else {
        out << "fvector   " << table.at("fvector").dump() << '\n'
            << "euler     " << table.at("euler_characteristic").dump() << '\n';
        if (kind == "coxeter") out << "chambers  " << table.at("chambers").dump() << '\n';
        if (kind == "associahedron") out << "vertices  " << table.at("vertices").dump() << '\n';
        if (table.contains("faces")) {
            out << "faces of dimension " << table["faces"].at("dim").get<int>() << ":\n";
            for (const auto& face : table["faces"].at("list")) {
                if (face.is_string()) {
                    out << "  " << face.get<std::string>() << '\n';
                } else {
                    out << "  " << face.at("brackets").get<std::string>() << "  -> gaps "
                        << face.at("blowdown").dump() << '\n';
                }
            }
        }
    }
    return out.str();
}

namespace {

json summarize(const FiniteGroupoid& g) {
    const OrbitSummary orbits = orbits_and_cardinality(g);
    return {{"objects", g.object_count()},
            {"morphisms", g.morphism_count()},
            {"orbits", orbits.components.size()},
            {"isotropy_orders", orbits.isotropy_orders},
            {"cardinality", rational_string(orbits.cardinality)}};
}

bool orbit_stabilizer_holds(const FiniteGroupoid& g, std::size_t group_order) {
    const OrbitSummary orbits = orbits_and_cardinality(g);
    for (const auto& component : orbits.components)
        for (int obj : component)
            if (component.size() * isotropy(g, obj).size() != group_order) return false;
    return true;
}

}  // namespace

json groupoid_demo(const std::string& scenario, int n, const std::vector<double>& spectrum) {
    json demo = {{"scenario", scenario}};
    if (scenario == "action" || scenario == "chambers") {
        if (n < 1 || n > 5) throw Error(ErrorCode::OutOfRange, "demo degree must lie in [1, 5]");
        auto group = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
        const GroupAction action = scenario == "action" ? GroupAction::natural(n) : GroupAction::regular(group);
        const FiniteGroupoid g = transformation_groupoid(action);
        demo["n"] = n;
        demo["group_order"] = action.group().order();
        demo["set_size"] = action.set_size();
        demo.update(summarize(g));
        demo["orbit_stabilizer"] = orbit_stabilizer_holds(g, action.group().order());
    } else if (scenario == "loop") {
        if (n < 1 || n > 5) throw Error(ErrorCode::OutOfRange, "demo degree must lie in [1, 5]");
        auto group = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
        auto base = std::make_shared<const FiniteGroupoid>(one_object_groupoid(group));
        auto point = std::make_shared<const FiniteGroupoid>(discrete_groupoid(1));
        const FiberProduct fp =
            fiber_product(GroupoidFunctor::constant(point, base, 0), GroupoidFunctor::constant(point, base, 0));
        demo["n"] = n;
        demo["group_order"] = group->order();
        demo.update(summarize(fp.groupoid));
    } else if (scenario == "labelled") {
        const std::size_t m = spectrum.size();
        if (m < 1 || m > 4) throw Error(ErrorCode::OutOfRange, "labelled demo needs 1 to 4 eigenvalues");
        std::vector<double> ascending = spectrum;
        std::sort(ascending.begin(), ascending.end());
        const Clustering clusters = cluster_sorted(ascending, kDefaultRelTol);
        std::vector<int> ids;
        for (std::size_t c = 0; c < clusters.count(); ++c) ids.insert(ids.end(), static_cast<std::size_t>(clusters.sizes[c]), static_cast<int>(c));

        std::vector<std::vector<int>> arrangements;
        std::map<std::vector<int>, int> index;
        std::vector<std::string> labels;
        do {
            index.emplace(ids, static_cast<int>(arrangements.size()));
            arrangements.push_back(ids);
            std::string label = "diag(";
            for (std::size_t k = 0; k < ids.size(); ++k) {
                std::ostringstream v;
                v << clusters.representatives[static_cast<std::size_t>(ids[k])];
                label += (k ? "," : "") + v.str();
            }
            labels.push_back(label + ")");
        } while (std::next_permutation(ids.begin(), ids.end()));

        auto group = std::make_shared<const FiniteGroup>(FiniteGroup::hyperoctahedral(static_cast<int>(m)));
        // Signed permutation matrices act on diagonal matrices by conjugation;
        // the signs cancel, row i picks up entry perm(i).
        std::vector<std::vector<int>> perms;
        {
            std::vector<int> perm(m);
            for (std::size_t k = 0; k < m; ++k) perm[k] = static_cast<int>(k);
            do {
                for (unsigned mask = 0; mask < (1u << m); ++mask) perms.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        const GroupAction action(
            group, arrangements.size(),
            [&](int g, int x) {
                const auto& p = perms[static_cast<std::size_t>(g)];
                const auto& y = arrangements[static_cast<std::size_t>(x)];
                std::vector<int> out(m);
                for (std::size_t i = 0; i < m; ++i) out[i] = y[static_cast<std::size_t>(p[i])];
                return index.at(out);
            },
            labels);
        const FiniteGroupoid g = transformation_groupoid(action);
        const std::size_t iso = isotropy(g, 0).size();
        const Partition partition = clusters.partition();
        demo["spectrum"] = ascending;
        demo["partition"] = partition.to_string();
        demo["group_order"] = group->order();
        demo.update(summarize(g));
        demo["isotropy_of_ascending"] = iso;
        demo["normalizer_order"] = big(normalizer_order(partition));
        demo["census_count"] = diagonalizer_census(ascending).count();
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown demo scenario '" + scenario + "'");
    }
    return demo;
}

std::string render_demo_text(const json& demo) {
    std::ostringstream out;
    for (const auto& [key, value] : demo.items()) {
        out << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ') << show(value) << '\n';
    }
    return out.str();
}

}  // namespace eigenstrata::cli
