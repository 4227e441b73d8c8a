#include "symroot/srs.hpp"

#include <string>

#include "symroot/error.hpp"

namespace symroot {

namespace {

void require_same_graph(const Srs& a, const Srs& b) {
    if (!(a.graph() == b.graph())) throw Error("symplectic root systems live on different graphs");
}

}  // namespace

Srs::Srs(Graph graph, SympSpace space, std::vector<BitVec> deco)
    : graph_(std::move(graph)), space_(std::move(space)), deco_(std::move(deco)) {
    using Kind = ValidationError::Kind;
    if (deco_.size() != graph_.node_count()) {
        throw ValidationError(Kind::shape, "decoration count " + std::to_string(deco_.size()) +
                                               " does not match node count " + std::to_string(graph_.node_count()));
    }
    for (std::size_t p = 0; p < deco_.size(); ++p) {
        if (deco_[p].dim() != space_.dim()) {
            throw ValidationError(Kind::shape, "decoration of node " + std::to_string(p) + " has wrong dimension", p, p);
        }
    }
    if (rank(deco_) != space_.dim()) {
        throw ValidationError(Kind::span, "decorations do not span the space");
    }
    for (std::size_t p = 0; p < deco_.size(); ++p) {
        for (std::size_t q = p + 1; q < deco_.size(); ++q) {
            const bool pairing = space_.form(deco_[p], deco_[q]);
            if (pairing != graph_.has_edge(p, q)) {
                throw ValidationError(Kind::pairing,
                                      "pairing of nodes " + std::to_string(p) + "," + std::to_string(q) + " is " +
                                          (pairing ? "1 but they are not adjacent" : "0 but they are adjacent"),
                                      p, q);
            }
        }
    }
}

SympMap::SympMap(BitMat matrix, SympSpace src, SympSpace dst)
    : matrix_(std::move(matrix)), src_(std::move(src)), dst_(std::move(dst)) {
    if (matrix_.rows() != dst_.dim() || matrix_.cols() != src_.dim()) throw Error("map matrix has wrong shape");
    if (!(matrix_.transpose() * dst_.gram() * matrix_ == src_.gram())) throw Error("map does not preserve the form");
    for (const auto& v : kernel_basis(matrix_)) {
        if (!(src_.gram() * v).is_zero()) throw Error("map kernel is not contained in the radical");
    }
}

bool SympMap::bijective() const { return src_.dim() == dst_.dim() && rank(matrix_) == src_.dim(); }
bool SympMap::surjective() const { return rank(matrix_) == dst_.dim(); }

Srs validate_srs(const Graph& g, const SympSpace& space, std::vector<BitVec> deco) {
    return Srs(g, space, std::move(deco));
}

Srs minimal_srs(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<BitVec> deco;
    deco.reserve(n);
    for (std::size_t p = 0; p < n; ++p) deco.push_back(BitVec::unit(n, p));
    return Srs(g, SympSpace(g.adjacency()), std::move(deco));
}

bool is_minimal(const Srs& s) { return s.node_count() == s.dim() && rank(s.deco()) == s.dim(); }

Srs restrict_srs(const Srs& s, const std::vector<std::size_t>& nodes) {
    auto sub = induced_subgraph(s.graph(), nodes);
    std::vector<BitVec> picked;
    picked.reserve(nodes.size());
    for (std::size_t v : nodes) picked.push_back(s.deco(v));

    const auto ech = echelon_basis(picked, s.dim());
    std::vector<std::size_t> lead;
    lead.reserve(ech.size());
    for (const auto& b : ech) lead.push_back(*b.first_set());

    std::vector<BitVec> deco;
    deco.reserve(picked.size());
    for (const auto& v : picked) {
        // In a reduced echelon basis the coefficient of b_i is v[lead_i].
        BitVec c(ech.size());
        for (std::size_t i = 0; i < ech.size(); ++i) c.set(i, v.get(lead[i]));
        deco.push_back(std::move(c));
    }
    return Srs(std::move(sub.graph), induced_space(s.space(), ech), std::move(deco));
}

Quotient quotient(const Srs& s, std::span<const BitVec> u_basis) {
    const std::size_t d = s.dim();
    for (const auto& u : u_basis) {
        if (u.dim() != d) throw DimensionMismatch("quotient: kernel vector of wrong dimension");
        if (!(s.space().gram() * u).is_zero()) throw Error("quotient: kernel vector " + u.to_string() + " is not in the radical");
    }
    const auto ech = echelon_basis(u_basis, d);
    std::vector<bool> is_pivot(d, false);
    for (const auto& b : ech) is_pivot[*b.first_set()] = true;
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < d; ++c) {
        if (!is_pivot[c]) keep.push_back(c);
    }

    BitMat q(keep.size(), d);
    for (std::size_t j = 0; j < d; ++j) {
        BitVec r = BitVec::unit(d, j);
        for (const auto& b : ech) {
            if (r.get(*b.first_set())) r ^= b;
        }
        for (std::size_t a = 0; a < keep.size(); ++a) q.set(a, j, r.get(keep[a]));
    }
    BitMat gram(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) gram.set(a, b, s.space().gram().get(keep[a], keep[b]));
    }
    SympSpace target(std::move(gram));
    std::vector<BitVec> deco;
    deco.reserve(s.node_count());
    for (const auto& f : s.deco()) deco.push_back(q * f);
    Srs image(s.graph(), target, std::move(deco));
    return {std::move(image), SympMap(std::move(q), s.space(), std::move(target))};
}

std::vector<QuotientClass> enumerate_quotients(const Graph& g) {
    const Srs minimal = minimal_srs(g);
    const auto& rad = minimal.space().radical();
    if (rad.size() > 12) throw CapExceeded("enumerate_quotients: radical dimension exceeds 12");
    const BitMat rad_mat = BitMat::from_columns(rad, minimal.dim());

    std::vector<QuotientClass> out;
    for (const auto& sub : all_subspaces(rad.size())) {
        std::vector<BitVec> u;
        u.reserve(sub.size());
        for (const auto& coords : sub) u.push_back(rad_mat * coords);
        auto kernel = echelon_basis(u, minimal.dim());
        Srs q = quotient(minimal, kernel).srs;
        out.push_back({std::move(kernel), std::move(q)});
    }
    return out;
}

std::optional<SympMap> srs_isomorphic(const Srs& a, const Srs& b) {
    require_same_graph(a, b);
    if (a.dim() != b.dim()) return std::nullopt;
    const std::size_t d = a.dim();

    // Greedy basis of V_a among the decorations, in node order.
    std::vector<BitVec> ech;
    std::vector<std::size_t> basis_nodes;
    for (std::size_t p = 0; p < a.node_count() && basis_nodes.size() < d; ++p) {
        std::vector<BitVec> trial = ech;
        trial.push_back(a.deco(p));
        auto next = echelon_basis(trial, d);
        if (next.size() > ech.size()) {
            ech = std::move(next);
            basis_nodes.push_back(p);
        }
    }
    std::vector<BitVec> fa;
    std::vector<BitVec> fb;
    for (std::size_t p : basis_nodes) {
        fa.push_back(a.deco(p));
        fb.push_back(b.deco(p));
    }
    const auto fa_inv = inverse(BitMat::from_columns(fa, d));
    if (!fa_inv) throw Error("srs_isomorphic: decorations of the first SRS do not span");
    BitMat phi = BitMat::from_columns(fb, d) * *fa_inv;
    for (std::size_t p = 0; p < a.node_count(); ++p) {
        if (!(phi * a.deco(p) == b.deco(p))) return std::nullopt;
    }
    if (rank(phi) != d) return std::nullopt;
    return SympMap(std::move(phi), a.space(), b.space());
}

SympMap universal_map(const Srs& minimal, const Srs& b) {
    require_same_graph(minimal, b);
    if (!is_minimal(minimal)) throw Error("universal_map: source SRS is not minimal");
    const auto inv = inverse(BitMat::from_columns(minimal.deco(), minimal.dim()));
    BitMat phi = BitMat::from_columns(b.deco(), b.dim()) * *inv;
    SympMap map(std::move(phi), minimal.space(), b.space());
    if (!map.surjective()) throw Error("universal_map: map is not surjective");
    return map;
}

Srs transport(const Srs& s, const BitMat& iso, const SympSpace& dst) {
    SympMap map(iso, s.space(), dst);
    if (!map.bijective()) throw Error("transport: map is not an isomorphism");
    std::vector<BitVec> deco;
    deco.reserve(s.node_count());
    for (const auto& f : s.deco()) deco.push_back(iso * f);
    return Srs(s.graph(), dst, std::move(deco));
}

Srs relabel(const Srs& s, const Permutation& perm) {
    Graph g = permute(s.graph(), perm);
    std::vector<BitVec> deco(s.node_count());
    for (std::size_t i = 0; i < s.node_count(); ++i) deco.at(perm[i]) = s.deco(i);
    return Srs(std::move(g), s.space(), std::move(deco));
}

CocliqueBound coclique_bound_check(const Graph& g) {
    CocliqueBound out;
    out.coclique = max_coclique(g);
    out.gamma = out.coclique.size();
    out.n = rank(g.adjacency()) / 2;
    out.bound = g.node_count() - out.gamma;
    out.holds = out.n <= out.bound;
    return out;
}

nlohmann::json srs_to_json(const Srs& s) {
    nlohmann::json deco = nlohmann::json::object();
    for (std::size_t p = 0; p < s.node_count(); ++p) deco[std::to_string(p)] = s.deco(p).to_string();
    return {
        {"graph", graph_to_json(s.graph())},
        {"dim", s.dim()},
        {"gram", s.space().gram().to_strings()},
        {"type", {s.type().n, s.type().k}},
        {"deco", std::move(deco)},
        {"minimal", is_minimal(s)},
    };
}

Srs srs_from_json(const nlohmann::json& j) {
    try {
        Graph g = graph_from_json(j.at("graph"));
        const auto dim = j.at("dim").get<std::size_t>();
        const auto rows = j.at("gram").get<std::vector<std::string>>();
        if (rows.size() != dim) throw Error("SRS JSON: gram has " + std::to_string(rows.size()) + " rows, expected dim");
        BitMat gram = dim == 0 ? BitMat(0, 0) : BitMat::from_strings(rows);
        if (gram.cols() != dim) throw Error("SRS JSON: gram is not dim x dim");
        std::vector<BitVec> deco;
        const auto& dj = j.at("deco");
        for (std::size_t p = 0; p < g.node_count(); ++p) {
            deco.push_back(BitVec::from_string(dj.at(std::to_string(p)).get<std::string>()));
        }
        if (dj.size() != g.node_count()) throw Error("SRS JSON: deco has entries for unknown nodes");
        Srs s(std::move(g), SympSpace(std::move(gram)), std::move(deco));
        if (j.contains("type")) {
            const auto t = j.at("type").get<std::vector<std::size_t>>();
            if (t.size() != 2 || t[0] != s.type().n || t[1] != s.type().k) throw Error("SRS JSON: recorded type disagrees");
        }
        if (j.contains("minimal") && j.at("minimal").get<bool>() != is_minimal(s)) {
            throw Error("SRS JSON: recorded minimality disagrees");
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed SRS JSON: ") + e.what());
    }
}

}  // namespace symroot
