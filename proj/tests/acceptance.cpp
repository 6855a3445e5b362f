// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "eigenstrata/cli/batch.hpp"
#include "eigenstrata/cli/io.hpp"
#include "eigenstrata/cli/report.hpp"
#include "eigenstrata/combinatorics.hpp"
#include "eigenstrata/configuration.hpp"
#include "eigenstrata/groupoid.hpp"
#include "eigenstrata/polytopes.hpp"
#include "eigenstrata/spectral.hpp"
#include "groupoid_oracles.hpp"
#include "oracles.hpp"

using namespace eigenstrata;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

using Criterion = std::function<void(Outcome&)>;

void codimension_cross_check(Outcome& o) {
    std::size_t cases = 0;
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) {
            o.require(arnold_codim(p) == arnold_codim_raw(p), "partition " + p.to_string());
            ++cases;
        }
    o.detail << cases << " partitions of n <= 12";
}

void dimension_identity(Outcome& o) {
    for (int n = 1; n <= 50; ++n) o.require(space_dims(n).difference == n, "n = " + std::to_string(n));
    o.detail << "n = 1..50";
}

void coxeter_constants(Outcome& o) {
    const auto f4 = coxeter_fvector(4);
    o.require(f4.counts.back() == 24, "24 chambers for n = 4");
    o.require(f4.counts == std::vector<std::uint64_t>{14, 36, 24}, "f-vector (14, 36, 24)");
    o.require(f4.euler_characteristic() == 2, "alternating sum 2");
    for (int n = 3; n <= 7; ++n)
        o.require(coxeter_fvector(n).euler_characteristic() == 1 + (n % 2 == 0 ? 1 : -1),
                  "alternating sum for n = " + std::to_string(n));
    o.detail << "n = 4: (14, 36, 24), chi = 2; chi = 1 + (-1)^n for n = 3..7";
}

void associahedron_constants(Outcome& o) {
    for (int n = 3; n <= 8; ++n) {
        const auto f = associahedron_fvector(n);
        o.require(f.counts.front() == catalan(n - 1), "vertices of K_" + std::to_string(n));
        o.require(f.counts.front() == oracle::polygon_dissections(n + 1, n - 2), "dissection oracle");
        o.require(f.euler_characteristic() == 1, "alternating sum for n = " + std::to_string(n));
    }
    o.require(associahedron_fvector(9).euler_characteristic() == 1, "alternating sum for n = 9");
    o.require(associahedron_fvector(4).counts == std::vector<std::uint64_t>{5, 5, 1}, "K_4 = (5, 5, 1)");
    o.detail << "vertices = Catalan(n-1) for n = 3..8, K_4 = (5, 5, 1), chi = 1 for n = 3..9";
}

void tiling_constants(Outcome& o) {
    o.require(tiling_stats(4) == TilingStats{24, 12, 24}, "tiling_stats(4)");
    for (int n = 3; n <= 10; ++n)
        o.require(tiling_stats(n).tiles_M == BigCount(oracle::factorial(n) / 2), "n = " + std::to_string(n));
    o.detail << "{24, 12, 24} at n = 4; tiles_M = n!/2 for n = 3..10";
}

void spectral_reconstruction(Outcome& o) {
    std::mt19937_64 rng(6);
    double worst_rec = 0.0, worst_orth = 0.0, worst_root = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        const double scale = trial % 3 == 0 ? 100.0 : 1.0;
        const auto q = oracle::random_symmetric(rng, n, scale);
        const auto e = jacobi_eigen(q);
        const double qf = frobenius_norm(q.dense());
        const double rec = frobenius_norm(e.frame.transposed() * e.x_matrix() * e.frame - q.dense());
        const double orth = frobenius_norm(e.frame * e.frame.transposed() - DenseMatrix::identity(n));
        worst_rec = std::max(worst_rec, rec / (1.0 + qf));
        worst_orth = std::max(worst_orth, orth / static_cast<double>(n));
        o.require(rec <= 1e-10 * (1.0 + qf), "reconstruction, trial " + std::to_string(trial));
        o.require(orth <= 1e-12 * static_cast<double>(n), "orthogonality, trial " + std::to_string(trial));
        if (n <= 4) {
            const auto roots = oracle::eigenvalues_by_charpoly(q);
            o.require(roots.size() == n, "oracle root count");
            for (std::size_t i = 0; i < std::min(n, roots.size()); ++i) {
                worst_root = std::max(worst_root, std::abs(roots[i] - e.diag[i]));
                o.require(std::abs(roots[i] - e.diag[i]) <= 1e-9, "eigenvalue vs oracle");
            }
        }
    }
    o.detail << "1000 matrices; max rec/(1+|Q|) " << worst_rec << ", max orth/n " << worst_orth
             << ", max oracle gap " << worst_root;
}

std::vector<double> spectrum_with_repeats(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> level(0, static_cast<int>(n));
    std::uniform_real_distribution<double> jitter(0.0, 0.9);
    std::vector<double> levels(n + 1);
    for (std::size_t k = 0; k <= n; ++k) levels[k] = static_cast<double>(k) + jitter(rng);
    std::vector<double> s(n);
    for (auto& v : s) v = levels[static_cast<std::size_t>(level(rng))];
    s[0] = -1.0;
    s[n - 1] = static_cast<double>(n) + 1.0;
    std::sort(s.begin(), s.end());
    return s;
}

void invariance_suite(Outcome& o) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> a_dist(0.01, 100.0), b_dist(-50.0, 50.0);
    double worst_rot = 0.0, worst_aff = 0.0, worst_conf = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const auto r = oracle::random_orthogonal(rng, n);
        const auto q = SymmetricMatrix(r * SymmetricMatrix::diagonal(spectrum_with_repeats(rng, n)).dense() * r.transposed());
        const auto base = eigen_configuration(q);
        const auto r2 = oracle::random_orthogonal(rng, n);
        const auto rotated = eigen_configuration(SymmetricMatrix(r2 * q.dense() * r2.transposed()));
        o.require(rotated.partition == base.partition, "partition under conjugation");
        for (std::size_t k = 0; k < base.point.t.size(); ++k) {
            worst_rot = std::max(worst_rot, std::abs(rotated.point.t[k] - base.point.t[k]));
            o.require(std::abs(rotated.point.t[k] - base.point.t[k]) <= 1e-9, "point under conjugation");
        }
        const auto shifted = eigen_configuration(q.affine(a_dist(rng), b_dist(rng)));
        o.require(shifted.partition == base.partition, "partition under aQ+bI");
        for (std::size_t k = 0; k < base.point.t.size(); ++k) {
            worst_aff = std::max(worst_aff, std::abs(shifted.point.t[k] - base.point.t[k]));
            o.require(std::abs(shifted.point.t[k] - base.point.t[k]) <= 1e-12, "point under aQ+bI");
        }

        std::uniform_real_distribution<double> u(-10.0, 10.0);
        std::vector<double> x(n);
        for (auto& v : x) v = u(rng);
        const Configuration c(x);
        const auto nc = normalize(c);
        const auto moved = normalize(c.affine(a_dist(rng), b_dist(rng)));
        o.require(moved.chamber == nc.chamber, "chamber under ax+b");
        for (std::size_t k = 0; k < nc.point.t.size(); ++k) {
            worst_conf = std::max(worst_conf, std::abs(moved.point.t[k] - nc.point.t[k]));
            o.require(std::abs(moved.point.t[k] - nc.point.t[k]) <= 1e-12, "gaps under ax+b");
        }
    }
    o.detail << "300 forms with repeated eigenvalues; max drift: conjugation " << worst_rot << ", aQ+bI "
             << worst_aff << ", configurations " << worst_conf;
}

void round_trip(Outcome& o) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    std::size_t collided = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 9);
        std::vector<double> x(n);
        for (auto& v : x) v = u(rng);
        if (trial % 2 == 0 && n >= 3) {
            // engineered collisions: exact copies and sub-threshold offsets
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            const std::size_t copies = 1 + pick(rng) % (n - 2);
            for (std::size_t k = 0; k < copies; ++k) {
                const std::size_t from = pick(rng), to = pick(rng);
                x[to] = x[from] + (k % 2 ? 1e-13 : 0.0);
            }
        }
        const Configuration c(x);
        std::vector<double> sorted = x;
        std::sort(sorted.begin(), sorted.end());
        if (cluster_sorted(sorted, kDefaultRelTol).count() < 2) continue;
        const auto cell = compactified_cell(c);
        if (!cell.cell.is_chamber()) ++collided;
        const auto eig = eigen_configuration(embed_diagonal(c));
        o.require(eig.partition == cell.multiplicities, "partition, trial " + std::to_string(trial));
        o.require(eig.point.t.size() == cell.point.t.size(), "point length");
        for (std::size_t k = 0; k < std::min(eig.point.t.size(), cell.point.t.size()); ++k) {
            worst = std::max(worst, std::abs(eig.point.t[k] - cell.point.t[k]));
            o.require(std::abs(eig.point.t[k] - cell.point.t[k]) <= 1e-12, "point, trial " + std::to_string(trial));
        }
    }
    o.require(collided >= 100, "enough collided configurations");
    o.detail << "500 configurations, " << collided << " with collisions; max point gap " << worst;
}

void isotropy_oracle(Outcome& o) {
    std::size_t cases = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : partitions_of(n)) {
            std::vector<double> x;
            double level = 0.0;
            for (int part : p.parts()) {
                x.insert(x.end(), static_cast<std::size_t>(part), level);
                level += 1.0;
            }
            const auto census = diagonalizer_census(x);
            o.require(BigCount(census.count()) == normalizer_order(p), "partition " + p.to_string());
            ++cases;
        }
    o.detail << cases << " partitions of n <= 5 searched exhaustively";
}

void groupoid_suite(Outcome& o) {
    std::vector<GroupAction> actions;
    for (int n = 1; n <= 5; ++n) {
        actions.push_back(GroupAction::natural(n));
        actions.push_back(oracle::subset_action(n));
        auto s = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
        actions.push_back(GroupAction::regular(s));
        actions.push_back(GroupAction::trivial(s, 3));
    }
    for (int d = 1; d <= 3; ++d)
        actions.push_back(GroupAction::regular(std::make_shared<const FiniteGroup>(FiniteGroup::hyperoctahedral(d))));
    for (int m : {1, 6, 12, 120}) {
        auto c = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(m));
        actions.push_back(GroupAction(c, 10, [m](int g, int x) { return (x + g * (10 / std::gcd(m, 10))) % 10; }));
    }
    std::size_t checked = 0;
    for (const auto& action : actions) {
        o.require(action.group().order() <= 120, "group order bound");
        const auto g = transformation_groupoid(action);
        const auto summary = orbits_and_cardinality(g);
        for (const auto& orbit : summary.components)
            for (int x : orbit) {
                o.require(orbit.size() * isotropy(g, x).size() == action.group().order(), "orbit-stabilizer");
                ++checked;
            }
        o.require(summary.cardinality == Rational(static_cast<std::int64_t>(action.set_size()),
                                                   static_cast<std::int64_t>(action.group().order())),
                  "cardinality |X|/|G|");
    }

    std::size_t products = 0;
    for (int n = 1; n <= 3; ++n) {
        auto group = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
        auto base = std::make_shared<const FiniteGroupoid>(one_object_groupoid(group));
        std::vector<GroupoidFunctor> functors;
        for (const auto& action : {GroupAction::natural(n), GroupAction::trivial(group, 2), GroupAction::regular(group)})
            functors.push_back(oracle::projection(std::make_shared<const FiniteGroupoid>(transformation_groupoid(action)),
                                                  base, group->order()));
        functors.push_back(GroupoidFunctor::identity(base));
        for (const auto& f : functors)
            for (const auto& h : functors) {
                const auto fp = fiber_product(f, h);
                if (fp.groupoid.morphism_count() > 500) continue;
                const auto expected = oracle::brute_force_fiber(f, h);
                o.require(fp.groupoid.object_count() == expected.objects, "fiber product objects");
                o.require(fp.groupoid.morphism_count() == expected.morphisms, "fiber product morphisms");
                ++products;
            }
    }

    for (int n = 1; n <= 5; ++n) {
        auto group = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(n));
        auto base = std::make_shared<const FiniteGroupoid>(one_object_groupoid(group));
        auto point = std::make_shared<const FiniteGroupoid>(discrete_groupoid(1));
        const auto t = GroupoidFunctor::constant(point, base, 0);
        const auto fp = fiber_product(t, t);
        o.require(fp.groupoid.object_count() == group->order(), "point x_BG point objects");
        bool identities_only = fp.groupoid.morphism_count() == group->order();
        for (std::size_t m = 0; m < fp.groupoid.morphism_count(); ++m) {
            const auto& mor = fp.groupoid.morphism(static_cast<int>(m));
            identities_only = identities_only && fp.groupoid.identity(mor.source) == static_cast<int>(m);
        }
        o.require(identities_only, "point x_BG point has only identities");
    }
    o.detail << actions.size() << " actions, " << checked << " orbit-stabilizer checks, " << products
             << " fiber products vs brute force, pt x_BG pt for S_1..S_5";
}

void cli_contract(Outcome& o) {
    using namespace eigenstrata::cli;
    const std::vector<std::string> seeds{
        "1,2,3\n2,5,6\n3,6,9\n",
        "[[1,2],[2,1]]",
        R"({"matrix": [[0,1,0],[1,0,0],[0,0,1]], "names": ["x","y","z"]})",
        "3\nA 0 1 2\nB 1 0 3\nC 2 3 0\n",
    };
    const std::string alphabet = "0123456789.,-+eE[]{}\":\n \tabnN";
    std::mt19937_64 rng(11);
    std::size_t attempts = 0, parsed = 0, round_trips = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        std::string text = seeds[static_cast<std::size_t>(trial) % seeds.size()];
        for (int e = 1 + static_cast<int>(rng() % 6); e > 0; --e) {
            const std::size_t at = rng() % (text.size() + 1);
            const char c = alphabet[rng() % alphabet.size()];
            switch (rng() % 3) {
                case 0: text.insert(at, 1, c); break;
                case 1: if (at < text.size()) text.erase(at, 1); break;
                default: if (at < text.size()) text[at] = c; break;
            }
        }
        if (trial % 5 == 0) {
            text.clear();
            for (int k = 0; k < 64; ++k) text.push_back(static_cast<char>(rng() % 256));
        }
        for (auto format : {MatrixFormat::Auto, MatrixFormat::Csv, MatrixFormat::Json, MatrixFormat::Phylip}) {
            ++attempts;
            try {
                const auto in = parse_matrix_text(text, format);
                ++parsed;
                const auto report = analyze(in, "fuzz", kDefaultRelTol, true);
                const auto back = report_from_json(nlohmann::json::parse(to_json(report).dump()));
                o.require(back == report, "report round trip");
                ++round_trips;
            } catch (const Error&) {
            } catch (const std::exception& e) {
                o.require(false, std::string("uncaught ") + e.what());
            }
        }
    }

    std::random_device rd;
    const fs::path dir = fs::temp_directory_path() / ("eigenstrata_acceptance_" + std::to_string(rd()));
    fs::create_directories(dir);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 7);
        std::vector<double> spectrum(n);
        for (auto& v : spectrum) v = std::round(u(rng));
        spectrum[0] = -4.0;
        const auto r = oracle::random_orthogonal(rng, n);
        const auto q = r * SymmetricMatrix::diagonal(spectrum).dense() * r.transposed();
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(0.5 * (q(i, j) + q(j, i)));
            rows.push_back(row);
        }
        std::ofstream(dir / ("m" + std::to_string(100 + k) + ".json")) << rows.dump();
    }
    std::ofstream(dir / "scalar.csv") << "2,0\n0,2\n";
    std::ofstream(dir / "ragged.csv") << "1,2\n3\n";
    const auto inputs = collect_inputs({dir.string()});
    bool identical = true;
    for (bool json : {true, false}) {
        BatchOptions serial;
        serial.json = json;
        serial.frame = true;
        const auto a = run_batch(inputs, serial);
        for (unsigned p : {2u, 3u, 8u}) {
            BatchOptions par = serial;
            par.parallel = p;
            identical = identical && run_batch(inputs, par).output == a.output;
        }
        o.require(a.exit_code == 1 && a.errors == 2, "batch exit status");
    }
    o.require(identical, "parallel batch output equals serial");
    fs::remove_all(dir);
    o.detail << attempts << " fuzzed parses (" << parsed << " accepted, " << round_trips
             << " report round trips), batch of " << inputs.size() << " files at 1/2/3/8 threads";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"codimension cross-check", codimension_cross_check},
        {"dimension identity", dimension_identity},
        {"Coxeter complex constants", coxeter_constants},
        {"associahedron constants", associahedron_constants},
        {"tiling constants", tiling_constants},
        {"spectral reconstruction", spectral_reconstruction},
        {"invariance suite", invariance_suite},
        {"configuration round trip", round_trip},
        {"isotropy oracle", isotropy_oracle},
        {"groupoid suite", groupoid_suite},
        {"CLI contract", cli_contract},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(outcome);
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail << "threw: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first << " ("
                  << std::fixed << std::setprecision(2) << secs << "s): " << std::defaultfloat
                  << outcome.detail.str() << '\n';
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
