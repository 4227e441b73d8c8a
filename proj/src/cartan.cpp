#include "symroot/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "symroot/error.hpp"
#include "symroot/extend.hpp"

namespace symroot {

namespace {

int mod2(int v) { return ((v % 2) + 2) % 2; }

/// Builds C and d from a symmetric bilinear matrix with (a,a) = 2 d_a.
CartanDatum from_bilinear(std::string name, const std::vector<std::vector<int>>& b) {
    const std::size_t r = b.size();
    std::vector<int> d(r);
    std::vector<std::vector<int>> c(r, std::vector<int>(r));
    for (std::size_t i = 0; i < r; ++i) d[i] = b[i][i] / 2;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (b[i][j] % d[i] != 0) throw Error("Cartan datum: pairing not divisible by symmetrizer");
            c[i][j] = b[i][j] / d[i];
        }
    }
    return make_cartan(std::move(name), std::move(c), std::move(d));
}

std::vector<std::vector<int>> chain_bilinear(const std::vector<int>& d, const std::vector<int>& links) {
    const std::size_t r = d.size();
    std::vector<std::vector<int>> b(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) b[i][i] = 2 * d[i];
    for (std::size_t i = 0; i + 1 < r; ++i) b[i][i + 1] = b[i + 1][i] = links[i];
    return b;
}

BitMat permutation_matrix(const Permutation& perm) {
    BitMat p(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) p.set(perm[i], i);
    return p;
}

/// Swaps x_i and y_i for pair indices in [first_pair, end_pair).
BitMat swap_pairs(std::size_t dim, std::size_t first_pair, std::size_t end_pair) {
    BitMat m = BitMat::identity(dim);
    for (std::size_t i = first_pair; i < end_pair; ++i) {
        m.set(2 * i, 2 * i, false);
        m.set(2 * i + 1, 2 * i + 1, false);
        m.set(2 * i, 2 * i + 1);
        m.set(2 * i + 1, 2 * i);
    }
    return m;
}

Srs swapped(const Srs& s, std::size_t first_pair, std::size_t end_pair) {
    return transport(s, swap_pairs(s.dim(), first_pair, end_pair), s.space());
}

void require_ade(char family, std::size_t rank) {
    const bool ok = (family == 'A' && rank >= 1) || (family == 'D' && rank >= 4) ||
                    (family == 'E' && rank >= 6 && rank <= 8);
    if (!ok) throw Error(std::string("invalid ADE diagram ") + family + std::to_string(rank));
}

using Perm32 = std::vector<std::uint32_t>;

Perm32 compose(const Perm32& a, const Perm32& b) {
    Perm32 out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
    return out;
}

Perm32 inverse_perm(const Perm32& a) {
    Perm32 out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
    return out;
}

bool is_identity(const Perm32& a) {
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] != x) return false;
    }
    return true;
}

}  // namespace

CartanDatum make_cartan(std::string name, std::vector<std::vector<int>> cartan, std::vector<int> d) {
    const std::size_t r = d.size();
    if (cartan.size() != r) throw Error("Cartan datum: matrix and symmetrizer sizes differ");
    for (const auto& row : cartan) {
        if (row.size() != r) throw Error("Cartan datum: matrix is not square");
    }
    if (r > 0 && *std::min_element(d.begin(), d.end()) != 1) throw Error("Cartan datum: smallest symmetrizer must be 1");
    for (std::size_t a = 0; a < r; ++a) {
        if (d[a] <= 0) throw Error("Cartan datum: symmetrizers must be positive");
        if (cartan[a][a] != 2) throw Error("Cartan datum: diagonal entries must be 2");
        for (std::size_t b = 0; b < r; ++b) {
            if (a == b) continue;
            if (cartan[a][b] > 0) throw Error("Cartan datum: off-diagonal entries must be non-positive");
            if ((cartan[a][b] == 0) != (cartan[b][a] == 0)) throw Error("Cartan datum: zero pattern is not symmetric");
            if (d[a] * cartan[a][b] != d[b] * cartan[b][a]) throw Error("Cartan datum: d_a C_ab is not symmetric");
        }
    }
    return {std::move(name), std::move(cartan), std::move(d)};
}

CartanDatum cartan_datum(char family, std::size_t rank) {
    const std::string name = std::string(1, family) + std::to_string(rank);
    switch (family) {
        case 'A':
        case 'D':
        case 'E': {
            require_ade(family, rank);
            const Graph g = dynkin_graph(family, rank);
            std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
            for (std::size_t i = 0; i < rank; ++i) {
                c[i][i] = 2;
                for (std::size_t j = 0; j < rank; ++j) {
                    if (g.has_edge(i, j)) c[i][j] = -1;
                }
            }
            return make_cartan(name, std::move(c), std::vector<int>(rank, 1));
        }
        case 'B': {
            if (rank < 2) throw Error("B_n needs rank >= 2");
            std::vector<int> d(rank, 2);
            d[rank - 1] = 1;
            return from_bilinear(name, chain_bilinear(d, std::vector<int>(rank - 1, -2)));
        }
        case 'C': {
            if (rank < 2) throw Error("C_n needs rank >= 2");
            std::vector<int> d(rank, 1);
            d[rank - 1] = 2;
            std::vector<int> links(rank - 1, -1);
            links[rank - 2] = -2;
            return from_bilinear(name, chain_bilinear(d, links));
        }
        case 'F':
            if (rank != 4) throw Error("F only exists in rank 4");
            return from_bilinear(name, chain_bilinear({2, 2, 1, 1}, {-2, -2, -1}));
        case 'G':
            if (rank != 2) throw Error("G only exists in rank 2");
            return from_bilinear(name, chain_bilinear({1, 3}, {-3}));
        default:
            throw Error(std::string("unknown Cartan family '") + family + "'");
    }
}

Root reflect(const CartanDatum& c, std::size_t a, const Root& b) {
    int coeff = 0;
    for (std::size_t j = 0; j < c.size(); ++j) coeff += c.cartan[a][j] * b[j];
    Root out = b;
    out[a] -= coeff;
    return out;
}

bool RootSet::contains(const Root& r) const { return std::binary_search(roots.begin(), roots.end(), r); }

RootSet roots(const CartanDatum& c, std::size_t cap) {
    std::set<Root> seen;
    std::deque<Root> queue;
    for (std::size_t a = 0; a < c.size(); ++a) {
        Root e(c.size(), 0);
        e[a] = 1;
        if (seen.insert(e).second) queue.push_back(e);
    }
    while (!queue.empty()) {
        Root r = std::move(queue.front());
        queue.pop_front();
        for (std::size_t a = 0; a < c.size(); ++a) {
            Root s = reflect(c, a, r);
            if (seen.insert(s).second) {
                if (seen.size() > cap) throw CapExceeded("roots: more than " + std::to_string(cap) + " roots");
                queue.push_back(std::move(s));
            }
        }
    }
    return {std::vector<Root>(seen.begin(), seen.end())};
}

Graph parity_graph(const CartanDatum& c) {
    Graph g(c.size());
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            if (mod2(c.bilinear(a, b)) == 1) g.add_edge(a, b);
        }
    }
    return g;
}

BitVec extend_to_root(const Srs& minimal, const Root& r) {
    if (r.size() != minimal.node_count()) throw DimensionMismatch("extend_to_root: root has wrong length");
    BitVec v(minimal.dim());
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (mod2(r[j]) == 1) v ^= minimal.deco(j);
    }
    return v;
}

WeylRep weyl_rep(const CartanDatum& c) {
    const std::size_t r = c.size();
    Srs minimal = minimal_srs(parity_graph(c));
    std::vector<BitMat> gens;
    gens.reserve(r);
    for (std::size_t a = 0; a < r; ++a) {
        BitMat m(r, r);
        for (std::size_t b = 0; b < r; ++b) {
            BitVec col = minimal.deco(b);
            if (mod2(c.cartan[a][b]) == 1) col ^= minimal.deco(a);
            for (std::size_t i = 0; i < r; ++i) m.set(i, b, col.get(i));
        }
        if (!(m.transpose() * minimal.space().gram() * m == minimal.space().gram())) {
            throw Error("weyl_rep: generator " + std::to_string(a) + " is not symplectic");
        }
        if (!inverse(m)) throw Error("weyl_rep: generator " + std::to_string(a) + " is singular");
        gens.push_back(std::move(m));
    }
    RootSet rs = roots(c);
    std::map<Root, BitVec> ext;
    for (const auto& root : rs.roots) ext.emplace(root, extend_to_root(minimal, root));
    for (const auto& root : rs.roots) {
        for (std::size_t a = 0; a < r; ++a) {
            const Root img = reflect(c, a, root);
            if (!(ext.at(img) == gens[a] * ext.at(root))) {
                throw Error("weyl_rep: intertwining fails for generator " + std::to_string(a));
            }
        }
    }
    return {c, std::move(minimal), std::move(gens), std::move(rs), std::move(ext)};
}

std::vector<BitVec> weyl_orbit(const WeylRep& rep, const BitVec& v) {
    if (v.dim() != rep.space().dim()) throw DimensionMismatch("weyl_orbit: vector of wrong dimension");
    std::set<BitVec> seen{v};
    std::deque<BitVec> queue{v};
    while (!queue.empty()) {
        BitVec u = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : rep.generators) {
            BitVec w = g * u;
            if (seen.insert(w).second) queue.push_back(std::move(w));
        }
    }
    return {seen.begin(), seen.end()};
}

std::uint64_t group_order(const WeylRep& rep, std::size_t cap) {
    const std::size_t d = rep.space().dim();
    auto key = [](const BitMat& m) {
        std::string k;
        for (const auto& row : m.to_strings()) k += row;
        return k;
    };
    std::unordered_set<std::string> seen;
    std::deque<BitMat> queue;
    BitMat id = BitMat::identity(d);
    seen.insert(key(id));
    queue.push_back(std::move(id));
    while (!queue.empty()) {
        BitMat m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : rep.generators) {
            BitMat next = g * m;
            if (seen.insert(key(next)).second) {
                if (seen.size() > cap) throw CapExceeded("group_order: more than " + std::to_string(cap) + " elements");
                queue.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

std::uint64_t permutation_group_order(std::size_t points, const std::vector<std::vector<std::uint32_t>>& gens) {
    struct Level {
        std::uint32_t base;
        std::vector<Perm32> transversal;  // empty entry = not in orbit
        std::vector<std::uint32_t> orbit;
    };
    std::vector<Perm32> strong;
    for (const auto& g : gens) {
        if (g.size() != points) throw DimensionMismatch("permutation_group_order: generator of wrong degree");
        if (!is_identity(g)) strong.push_back(g);
    }
    std::vector<std::uint32_t> base;
    auto fixes_base_prefix = [&](const Perm32& g, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            if (g[base[i]] != base[i]) return false;
        }
        return true;
    };
    auto first_moved = [](const Perm32& g) {
        for (std::uint32_t x = 0; x < g.size(); ++x) {
            if (g[x] != x) return x;
        }
        return static_cast<std::uint32_t>(0);
    };
    for (const auto& g : strong) {
        if (fixes_base_prefix(g, base.size())) base.push_back(first_moved(g));
    }

    std::vector<Level> levels;
    auto level_gens = [&](std::size_t i) {
        std::vector<const Perm32*> out;
        for (const auto& g : strong) {
            if (fixes_base_prefix(g, i)) out.push_back(&g);
        }
        return out;
    };
    auto build_level = [&](std::size_t i) {
        Level lv{base[i], std::vector<Perm32>(points), {}};
        Perm32 id(points);
        std::iota(id.begin(), id.end(), 0u);
        lv.transversal[base[i]] = id;
        lv.orbit.push_back(base[i]);
        const auto gi = level_gens(i);
        for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
            const std::uint32_t p = lv.orbit[head];
            for (const Perm32* s : gi) {
                const std::uint32_t q = (*s)[p];
                if (lv.transversal[q].empty()) {
                    lv.transversal[q] = compose(*s, lv.transversal[p]);
                    lv.orbit.push_back(q);
                }
            }
        }
        if (levels.size() <= i) levels.resize(i + 1);
        levels[i] = std::move(lv);
    };
    auto strip = [&](Perm32 g, std::size_t from) {
        std::size_t j = from;
        for (; j < base.size(); ++j) {
            const std::uint32_t p = g[base[j]];
            if (levels[j].transversal[p].empty()) break;
            g = compose(inverse_perm(levels[j].transversal[p]), g);
        }
        return std::make_pair(std::move(g), j);
    };

    for (std::size_t i = 0; i < base.size(); ++i) build_level(i);
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base.size()) - 1;
    while (i >= 0) {
        const auto ui = static_cast<std::size_t>(i);
        build_level(ui);
        bool restarted = false;
        const auto gi = level_gens(ui);
        const std::vector<std::uint32_t> orbit = levels[ui].orbit;
        for (std::size_t oi = 0; oi < orbit.size() && !restarted; ++oi) {
            const std::uint32_t p = orbit[oi];
            for (const Perm32* s : gi) {
                const std::uint32_t q = (*s)[p];
                Perm32 schreier = compose(inverse_perm(levels[ui].transversal[q]), compose(*s, levels[ui].transversal[p]));
                auto [h, j] = strip(std::move(schreier), ui + 1);
                if (is_identity(h)) continue;
                if (j == base.size()) {
                    base.push_back(first_moved(h));
                    levels.resize(base.size());
                }
                strong.push_back(std::move(h));
                for (std::size_t l = ui + 1; l <= j; ++l) build_level(l);
                i = static_cast<std::ptrdiff_t>(j);
                restarted = true;
                break;
            }
        }
        if (!restarted) --i;
    }
    std::uint64_t order = 1;
    for (const auto& lv : levels) order *= lv.orbit.size();
    return order;
}

std::uint64_t group_order_schreier_sims(const WeylRep& rep) {
    const std::size_t d = rep.space().dim();
    if (d > 16) throw CapExceeded("group_order_schreier_sims: dimension above 16");
    const std::size_t points = std::size_t{1} << d;
    std::vector<Perm32> gens;
    for (const auto& m : rep.generators) {
        Perm32 p(points);
        for (std::size_t x = 0; x < points; ++x) {
            p[x] = static_cast<std::uint32_t>((m * BitVec::from_mask(d, x)).to_mask());
        }
        gens.push_back(std::move(p));
    }
    return permutation_group_order(points, gens);
}

std::vector<RootFiber> root_fibers(const WeylRep& rep) {
    std::map<BitVec, std::vector<Root>> fibers;
    for (const auto& [root, image] : rep.extended_deco) fibers[image].push_back(root);
    std::vector<RootFiber> out;
    for (auto& [image, rs] : fibers) out.push_back({image, std::move(rs)});
    return out;
}

Srs a_even_chain(std::size_t n) {
    if (n == 0) return empty_srs();
    Srs point = extend_minimal(empty_srs(), BitVec(0)).srs;
    Srs chain = extend_nullspace(point, indicator_from_nodes(1, {0})).srs;
    for (std::size_t m = 1; m < n; ++m) {
        const std::size_t len = 2 * m;
        auto ext = double_extend_extraspecial(chain, indicator_from_nodes(len, {0}),
                                              indicator_from_nodes(len, {len - 1}), false);
        if (ext.p.case_tag != ExtensionCase::new_hyperbolic) throw Error("a_even_chain: unexpected degenerate step");
        Permutation perm(len + 2);
        for (std::size_t i = 0; i < len; ++i) perm[i] = i + 1;
        perm[len] = 0;
        perm[len + 1] = len + 1;
        chain = swapped(relabel(ext.srs, perm), 0, m);
    }
    return chain;
}

Srs ade_srs(char family, std::size_t rank) {
    require_ade(family, rank);
    Srs out = empty_srs();
    if (family == 'A') {
        const std::size_t n = rank / 2;
        if (rank % 2 == 0) {
            out = a_even_chain(n);
        } else {
            const Srs chain = a_even_chain(n);
            Srs ext = n == 0 ? extend_minimal(chain, BitVec(0)).srs
                             : extend_extraspecial(chain, indicator_from_nodes(2 * n, {0})).srs;
            Permutation perm(rank);
            for (std::size_t i = 0; i < 2 * n; ++i) perm[i] = i + 1;
            perm[2 * n] = 0;
            out = relabel(ext, perm);
        }
    } else if (family == 'D') {
        const std::size_t n = (rank - 1) / 2;
        const Srs chain = a_even_chain(n);
        if (rank % 2 == 1) {
            Srs ext = extend_extraspecial(chain, indicator_from_nodes(2 * n, {1})).srs;
            Permutation perm(rank);
            perm[0] = 2 * n - 1;
            for (std::size_t i = 1; i < 2 * n; ++i) perm[i] = i - 1;
            perm[2 * n] = 2 * n;
            out = relabel(ext, perm);
        } else {
            const auto first = indicator_from_nodes(2 * n, {0});
            out = double_extend_extraspecial(chain, first, first, false).srs;
        }
    } else if (rank == 7) {
        out = extend_extraspecial(a_even_chain(3), indicator_from_nodes(6, {2})).srs;
    } else {
        const std::size_t n = rank == 6 ? 2 : 3;
        auto ext = double_extend_extraspecial(a_even_chain(n), indicator_from_nodes(2 * n, {0}),
                                              indicator_from_nodes(2 * n, {1}), false);
        Permutation perm(rank);
        for (std::size_t i = 0; i < 2 * n; ++i) perm[i] = i + 1;
        perm[2 * n] = 0;
        perm[2 * n + 1] = 2 * n + 1;
        out = swapped(relabel(ext.srs, perm), n, n + 1);
    }
    if (!(out.graph() == dynkin_graph(family, rank))) throw Error("ade_srs: constructed graph is not the Dynkin diagram");
    if (!(out.space() == SympSpace::standard(out.type()))) throw Error("ade_srs: space is not in standard coordinates");
    return out;
}

std::string coordinate_label(SpaceType type, std::size_t i) {
    if (i < 2 * type.n) return std::string(i % 2 == 0 ? "x" : "y") + std::to_string(i / 2 + 1);
    if (i < 2 * type.n + type.k) return "z" + std::to_string(i - 2 * type.n + 1);
    throw Error("coordinate_label: index out of range");
}

std::string symbolic(const BitVec& v, SpaceType type) {
    if (v.dim() != 2 * type.n + type.k) throw DimensionMismatch("symbolic: vector does not match the type");
    std::vector<std::string> terms;
    for (std::size_t j = type.k; j-- > 0;) {
        if (v.get(2 * type.n + j)) terms.push_back("z" + std::to_string(j + 1));
    }
    for (std::size_t i = type.n; i-- > 0;) {
        if (v.get(2 * i)) terms.push_back("x" + std::to_string(i + 1));
        if (v.get(2 * i + 1)) terms.push_back("y" + std::to_string(i + 1));
    }
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t t = 1; t < terms.size(); ++t) out += "+" + terms[t];
    return out;
}

std::vector<std::pair<SpaceType, std::size_t>> ade_table(char family, std::size_t rank) {
    require_ade(family, rank);
    std::map<SpaceType, std::size_t> counts;
    for (const auto& cls : enumerate_quotients(dynkin_graph(family, rank))) ++counts[cls.srs.type()];
    std::vector<std::pair<SpaceType, std::size_t>> out(counts.rbegin(), counts.rend());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.k > b.first.k; });
    return out;
}

QuotientActionReport automorphism_action_on_quotients(const Graph& g) {
    QuotientActionReport report;
    report.classes = enumerate_quotients(g);
    std::map<std::vector<BitVec>, std::size_t> index;
    for (std::size_t i = 0; i < report.classes.size(); ++i) index.emplace(report.classes[i].kernel, i);
    for (const auto& perm : automorphisms(g)) {
        const BitMat p = permutation_matrix(perm);
        QuotientAction action{perm, Permutation(report.classes.size())};
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
            std::vector<BitVec> moved;
            for (const auto& u : report.classes[i].kernel) moved.push_back(p * u);
            const auto it = index.find(echelon_basis(moved, g.node_count()));
            if (it == index.end()) throw Error("automorphism_action_on_quotients: image kernel is not a radical subspace");
            action.class_map[i] = it->second;
        }
        report.actions.push_back(std::move(action));
    }
    return report;
}

}  // namespace symroot
