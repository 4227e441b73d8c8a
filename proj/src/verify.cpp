#include "symroot/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "symroot/cartan.hpp"
#include "symroot/error.hpp"
#include "symroot/extend.hpp"
#include "symroot/graph.hpp"
#include "symroot/grp2.hpp"
#include "symroot/srs.hpp"

namespace symroot {

namespace {

std::string describe(const Graph& g) { return graph_to_json(g).dump(); }

std::string type_string(SpaceType t) { return "(" + std::to_string(t.n) + "," + std::to_string(t.k) + ")"; }

std::vector<std::size_t> all_but(std::size_t n, std::size_t p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != p) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> first_nodes(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
}

bool isomorphic(const Srs& a, const Srs& b) { return srs_isomorphic(a, b).has_value(); }

/// Runs body, turning an Error into a failure of `check`.
void guarded(CheckResult& check, const std::string& context, const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        check.fail(context + ": " + e.what());
    }
}

SuiteReport restriction_suite(const VerifyOptions& o) {
    const std::size_t max_nodes = std::min<std::size_t>(o.max_nodes.value_or(o.quick ? 4 : 5), 6);
    CheckResult trichotomy{"restriction trichotomy over all quotients"};
    CheckResult minimal_cases{"minimal SRS restrict to (n,k-1) or (n-1,k+1)"};
    for (std::size_t n = 1; n <= max_nodes; ++n) {
        for (const auto& g : all_labelled_graphs(n)) {
            guarded(trichotomy, describe(g), [&] {
                for (const auto& cls : enumerate_quotients(g)) {
                    const Srs& f = cls.srs;
                    const SpaceType t = f.type();
                    const bool minimal = is_minimal(f);
                    for (std::size_t p = 0; p < n; ++p) {
                        const SpaceType r = restrict_srs(f, all_but(n, p)).type();
                        ++trichotomy.cases;
                        std::string which;
                        if (r == t) {
                            which = "case 1";
                        } else if (t.k >= 1 && r == SpaceType{t.n, t.k - 1}) {
                            which = "case 2";
                        } else if (t.n >= 1 && r == SpaceType{t.n - 1, t.k + 1}) {
                            which = "case 3";
                        }
                        const std::string where = describe(g) + " type " + type_string(t) + " minus node " +
                                                  std::to_string(p) + " -> " + type_string(r);
                        if (which.empty() || (which == "case 1" && minimal)) {
                            trichotomy.fail(where);
                            continue;
                        }
                        ++trichotomy.tallies[which];
                        if (minimal) {
                            ++minimal_cases.cases;
                            ++minimal_cases.tallies[which];
                            if (which == "case 1") minimal_cases.fail(where);
                        }
                    }
                }
            });
        }
    }
    return {"restriction", {trichotomy, minimal_cases}, 0};
}

SuiteReport extension_suite(const VerifyOptions& o) {
    const std::size_t max_nodes = std::min<std::size_t>(o.max_nodes.value_or(o.quick ? 4 : 5), 6);
    std::mt19937_64 rng(o.seed);
    CheckResult round_trip{"extension restricts back and is minimal"};
    CheckResult transition{"type transition (n,k+1) or (n+1,k-1)"};
    CheckResult unique{"extension isomorphic to minimal SRS of the extended graph"};
    CheckResult witness{"witness replay reproduces the extension"};
    CheckResult counting{"2^(2n) of 2^(2n+k) indicators add a nullvector"};
    CheckResult special{"extraspecial and nullspace routes agree with the general one"};
    CheckResult choices{"random completion choices give isomorphic extensions"};
    CheckResult doubles{"double extension agrees with two single extensions"};

    for (std::size_t n = 0; n <= max_nodes; ++n) {
        for (const auto& g : all_labelled_graphs(n)) {
            const Srs s = minimal_srs(g);
            const SpaceType t = s.type();
            std::uint64_t nullvector = 0;
            guarded(round_trip, describe(g), [&] {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    const auto lambda = BitVec::from_mask(n, mask);
                    const std::string where = describe(g) + " indicator " + lambda.to_string();
                    const auto ext = extend_minimal(s, lambda);
                    const SpaceType e = ext.srs.type();

                    ++round_trip.cases;
                    if (!is_minimal(ext.srs) || !isomorphic(restrict_srs(ext.srs, first_nodes(n)), s)) {
                        round_trip.fail(where);
                    }
                    ++transition.cases;
                    if (e == SpaceType{t.n, t.k + 1}) {
                        ++nullvector;
                        ++transition.tallies["(n,k+1)"];
                        if (ext.witness.case_tag != ExtensionCase::new_nullvector) transition.fail(where);
                    } else if (t.k >= 1 && e == SpaceType{t.n + 1, t.k - 1}) {
                        ++transition.tallies["(n+1,k-1)"];
                        if (ext.witness.case_tag != ExtensionCase::new_hyperbolic) transition.fail(where);
                    } else {
                        transition.fail(where + " gives " + type_string(e));
                    }
                    ++unique.cases;
                    if (!isomorphic(ext.srs, minimal_srs(ext.srs.graph()))) unique.fail(where);
                    ++witness.cases;
                    if (!(replay(s, lambda, ext.witness) == ext.srs)) witness.fail(where);

                    if (t.k == 0) {
                        ++special.cases;
                        if (!isomorphic(extend_extraspecial(s, lambda).srs, ext.srs)) special.fail(where + " extraspecial");
                    }
                    if (g.edge_count() == 0) {
                        ++special.cases;
                        if (!isomorphic(extend_nullspace(s, lambda).srs, ext.srs)) special.fail(where + " nullspace");
                    }
                    if (n <= 4 && t.k > 0) {
                        for (int trial = 0; trial < 10; ++trial) {
                            const auto c = random_completion_choices(s.space(), rng);
                            ++choices.cases;
                            if (!isomorphic(extend_minimal(s, lambda, c).srs, ext.srs)) choices.fail(where);
                        }
                    }
                }
            });
            ++counting.cases;
            if (nullvector != (std::uint64_t{1} << (2 * t.n))) {
                counting.fail(describe(g) + " has " + std::to_string(nullvector) + " nullvector indicators");
            }
        }
    }

    for (std::size_t half = 1; 2 * half <= 8; ++half) {
        const std::size_t len = 2 * half;
        const Srs chain = a_even_chain(half);
        struct Plan {
            const char* target;
            std::vector<std::size_t> p;
            std::vector<std::size_t> q;
        };
        std::vector<Plan> plans = {{"A", {0}, {len - 1}}, {"D", {0}, {0}}};
        if (half == 2 || half == 3) plans.push_back({"E", {0}, {1}});
        for (const auto& plan : plans) {
            const std::string where = std::string(plan.target) + " from A" + std::to_string(len);
            guarded(doubles, where, [&] {
                const auto lp = indicator_from_nodes(len, plan.p);
                const auto lq = indicator_from_nodes(len, plan.q);
                const auto both = double_extend_extraspecial(chain, lp, lq, false);
                const auto first = extend_minimal(chain, lp).srs;
                const auto second = extend_minimal(first, lq.resized(len + 1)).srs;
                ++doubles.cases;
                if (!isomorphic(both.srs, second)) doubles.fail(where);
            });
        }
    }
    return {"extension", {round_trip, transition, unique, witness, counting, special, choices, doubles}, 0};
}

std::size_t expected_root_count(char family, std::size_t r) {
    switch (family) {
        case 'A':
            return r * (r + 1);
        case 'B':
        case 'C':
            return 2 * r * r;
        case 'D':
            return 2 * r * (r - 1);
        case 'E':
            return r == 6 ? 72 : r == 7 ? 126 : 240;
        case 'F':
            return 48;
        default:
            return 12;
    }
}

std::vector<std::pair<char, std::size_t>> weyl_data(std::size_t max_rank) {
    std::vector<std::pair<char, std::size_t>> out;
    for (std::size_t r = 1; r <= max_rank; ++r) {
        out.emplace_back('A', r);
        if (r >= 2) out.emplace_back('B', r);
        if (r >= 3) out.emplace_back('C', r);
        if (r >= 4) out.emplace_back('D', r);
        if (r >= 6 && r <= 8) out.emplace_back('E', r);
        if (r == 4) out.emplace_back('F', 4);
        if (r == 2) out.emplace_back('G', 2);
    }
    return out;
}

SuiteReport weyl_suite(const VerifyOptions& o) {
    const std::size_t max_rank = std::min<std::size_t>(o.max_rank.value_or(o.quick ? 4 : 8), 8);
    CheckResult build{"generators symplectic and intertwining on every root"};
    CheckResult counts{"root counts"};
    CheckResult collapse{"extended decoration identifies r and -r"};
    CheckResult orders{"image group orders (rank <= 4)"};
    for (const auto& [family, rank] : weyl_data(max_rank)) {
        const std::string name = std::string(1, family) + std::to_string(rank);
        guarded(build, name, [&] {
            const WeylRep rep = weyl_rep(cartan_datum(family, rank));
            ++build.cases;
            ++counts.cases;
            if (rep.root_set.roots.size() != expected_root_count(family, rank)) {
                counts.fail(name + " has " + std::to_string(rep.root_set.roots.size()) + " roots");
            }
            for (const auto& [root, image] : rep.extended_deco) {
                Root neg = root;
                for (auto& c : neg) c = -c;
                ++collapse.cases;
                if (!rep.root_set.contains(neg) || !(rep.extended_deco.at(neg) == image)) collapse.fail(name);
            }
            if (rank <= 4) {
                ++orders.cases;
                const auto order = group_order(rep);
                orders.tallies[name] = order;
                if (name == "A2" && order != 6) orders.fail("A2 image has order " + std::to_string(order));
            }
        });
    }
    return {"weyl", {build, counts, collapse, orders}, 0};
}

SuiteReport group_suite(const VerifyOptions& o) {
    const std::size_t max_rank = std::min<std::size_t>(o.max_rank.value_or(o.quick ? 5 : 8), 8);
    std::mt19937_64 rng(o.seed);
    CheckResult axioms{"group axioms (order <= 2^6)"};
    CheckResult commutators{"commutator equals the form"};
    CheckResult lifts{"lifts reconstruct the diagram"};
    CheckResult burnside{"Burnside minimality exactly for minimal SRS when [G,G] = Z2"};
    CheckResult centers{"center equals lifts of the radical"};
    CheckResult signs{"sign agrees with order-4 counts"};

    std::vector<std::pair<char, std::size_t>> diagrams;
    for (std::size_t r = 1; r <= max_rank; ++r) {
        diagrams.emplace_back('A', r);
        if (r >= 4) diagrams.emplace_back('D', r);
        if (r >= 6) diagrams.emplace_back('E', r);
    }
    for (const auto& [family, rank] : diagrams) {
        const std::string name = std::string(1, family) + std::to_string(rank);
        guarded(commutators, name, [&] {
            for (const auto& cls : enumerate_quotients(dynkin_graph(family, rank))) {
                const Srs& s = cls.srs;
                const CocycleGroup grp = make_group(s.space());
                const auto elements = all_elements(grp);
                for (const auto& a : elements) {
                    for (const auto& b : elements) {
                        ++commutators.cases;
                        const GroupElement expect{BitVec(grp.dim()), grp.space().form(a.vec, b.vec)};
                        if (!(commutator(grp, a, b) == expect)) commutators.fail(name + " " + a.vec.to_string());
                        if (grp.dim() <= 5) {
                            for (const auto& c : elements) {
                                ++axioms.cases;
                                if (!(multiply(grp, multiply(grp, a, b), c) == multiply(grp, a, multiply(grp, b, c)))) {
                                    axioms.fail(name + " associativity");
                                }
                            }
                        }
                    }
                    ++axioms.cases;
                    if (!(multiply(grp, a, inverse(grp, a)) == grp.identity()) ||
                        !(multiply(grp, grp.identity(), a) == a)) {
                        axioms.fail(name + " inverse/identity");
                    }
                }
                ++lifts.cases;
                const auto lifted = lift_decoration(s, grp);
                if (!(commutativity_graph(grp, lifted) == s.graph())) lifts.fail(name);
                ++burnside.cases;
                const auto b = burnside_check(grp, lifted);
                if (grp.space().gram().is_zero()) {
                    // Abelian: [G,G] is trivial, G is elementary abelian of rank dim+1.
                    ++burnside.tallies["abelian (no generation expected)"];
                    if (b.generates || b.frattini_rank != grp.dim() + 1) burnside.fail(name + " abelian");
                } else {
                    ++burnside.tallies[is_minimal(s) ? "minimal" : "not minimal"];
                    if (!b.generates || b.minimal != is_minimal(s)) burnside.fail(name + " type " + type_string(s.type()));
                }

                ++centers.cases;
                std::vector<GroupElement> brute;
                for (const auto& a : elements) {
                    bool central = true;
                    for (const auto& c : elements) {
                        if (!(multiply(grp, a, c) == multiply(grp, c, a))) {
                            central = false;
                            break;
                        }
                    }
                    if (central) brute.push_back(a);
                }
                if (brute.size() != center(grp).size()) centers.fail(name + " type " + type_string(s.type()));
            }
        });
    }

    const std::size_t sign_trials = o.quick ? 10 : 50;
    for (std::size_t n = 1; n <= 3; ++n) {
        const SympSpace space = SympSpace::standard({n, 0});
        const CocycleGroup base = make_group(space);
        for (std::size_t trial = 0; trial < sign_trials; ++trial) {
            BitMat beta = base.beta();
            std::uniform_int_distribution<int> coin(0, 1);
            for (std::size_t i = 0; i < 2 * n; ++i) {
                for (std::size_t j = i; j < 2 * n; ++j) {
                    if (coin(rng) == 0) continue;
                    beta.set(i, j, !beta.get(i, j));
                    if (i != j) beta.set(j, i, !beta.get(j, i));
                }
            }
            const CocycleGroup grp(space, beta);
            std::uint64_t order4 = 0;
            for (const auto& a : all_elements(grp)) {
                if (!(multiply(grp, a, a) == grp.identity())) ++order4;
            }
            const bool plus = order4 < (std::uint64_t{1} << (2 * n));
            ++signs.cases;
            const auto sign = extraspecial_sign(grp);
            ++signs.tallies[to_string(sign)];
            if ((sign == ExtraspecialSign::plus) != plus) signs.fail("type (" + std::to_string(n) + ",0) trial " + std::to_string(trial));
        }
    }
    return {"group", {axioms, commutators, lifts, burnside, centers, signs}, 0};
}

SuiteReport coclique_suite(const VerifyOptions& o) {
    const std::size_t max_nodes = std::min<std::size_t>(o.max_nodes.value_or(o.quick ? 6 : 8), 8);
    CheckResult bound{"n <= |G| - gamma on all graphs"};
    CheckResult equality{"equality on empty graphs and ADE diagrams"};
    CheckResult complete{"K_2m has type (m,0), K_2m+1 has type (m,1)"};
    for (std::size_t n = 1; n <= max_nodes; ++n) {
        for (const auto& g : nonisomorphic_graphs(n)) {
            ++bound.cases;
            if (!coclique_bound_check(g).holds) bound.fail(describe(g));
        }
        ++equality.cases;
        const auto e = coclique_bound_check(Graph::empty(n));
        if (e.n != e.bound) equality.fail("empty graph on " + std::to_string(n) + " nodes");
    }
    for (std::size_t r = 1; r <= 8; ++r) {
        std::vector<std::pair<char, std::size_t>> ds = {{'A', r}};
        if (r >= 4) ds.emplace_back('D', r);
        if (r >= 6) ds.emplace_back('E', r);
        for (const auto& [family, rank] : ds) {
            ++equality.cases;
            const auto c = coclique_bound_check(dynkin_graph(family, rank));
            if (c.n != c.bound) equality.fail(std::string(1, family) + std::to_string(rank));
        }
    }
    for (std::size_t n = 1; n <= 12; ++n) {
        ++complete.cases;
        const SpaceType t = minimal_srs(Graph::complete(n)).type();
        if (!(t == SpaceType{n / 2, n % 2})) complete.fail("K" + std::to_string(n) + " has type " + type_string(t));
    }
    return {"coclique", {bound, equality, complete}, 0};
}

}  // namespace

void CheckResult::fail(const std::string& what) {
    if (failures == 0) first_failure = what;
    ++failures;
}

bool SuiteReport::passed() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"restriction", "extension", "weyl", "group", "coclique"};
    return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& s : suite_names()) out.push_back(run_suite(s, options).front());
        return out;
    }
    using Runner = SuiteReport (*)(const VerifyOptions&);
    Runner runner = nullptr;
    if (name == "restriction") runner = restriction_suite;
    if (name == "extension") runner = extension_suite;
    if (name == "weyl") runner = weyl_suite;
    if (name == "group") runner = group_suite;
    if (name == "coclique") runner = coclique_suite;
    if (runner == nullptr) throw Error("unknown verification suite '" + name + "'");
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report = runner(options);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {std::move(report)};
}

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports) {
    nlohmann::json suites = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json cj = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
            if (!c.tallies.empty()) cj["tallies"] = c.tallies;
            if (!c.passed()) cj["first_failure"] = c.first_failure;
            checks.push_back(std::move(cj));
        }
        all = all && r.passed();
        suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}});
    }
    return {{"passed", all}, {"suites", std::move(suites)}};
}

std::string report_to_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream out;
    bool all = true;
    for (const auto& r : reports) {
        out << "suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            out << "  " << (c.passed() ? "ok  " : "FAIL") << "  " << c.name << "  cases=" << c.cases;
            if (!c.passed()) out << " failures=" << c.failures << " first: " << c.first_failure;
            out << "\n";
            for (const auto& [k, v] : c.tallies) out << "        " << k << ": " << v << "\n";
        }
        all = all && r.passed();
    }
    out << (all ? "all suites pass" : "verification FAILED") << "\n";
    return out.str();
}

}  // namespace symroot
