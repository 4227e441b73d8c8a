#include "symroot/extend.hpp"

#include <string>

#include "symroot/error.hpp"

namespace symroot {

namespace {

void require_minimal(const Srs& s, const char* op) {
    if (!is_minimal(s)) throw Error(std::string(op) + ": SRS is not minimal");
}

void require_indicator(const Srs& s, const NeighborhoodIndicator& lambda, const char* op) {
    if (lambda.dim() != s.node_count()) {
        throw DimensionMismatch(std::string(op) + ": indicator has " + std::to_string(lambda.dim()) +
                                " entries for " + std::to_string(s.node_count()) + " nodes");
    }
}

/// Gram of W plus `extra` appended coordinates; `border[j]` is the column of
/// pairings of W with the j-th new coordinate, `corner` the pairings among them.
BitMat bordered_gram(const BitMat& g, const std::vector<BitVec>& border, const BitMat& corner) {
    const std::size_t d = g.rows();
    const std::size_t extra = border.size();
    BitMat out(d + extra, d + extra);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) out.set(i, j, g.get(i, j));
    }
    for (std::size_t e = 0; e < extra; ++e) {
        for (std::size_t i = 0; i < d; ++i) {
            out.set(i, d + e, border[e].get(i));
            out.set(d + e, i, border[e].get(i));
        }
        for (std::size_t f = 0; f < extra; ++f) out.set(d + e, d + f, corner.get(e, f));
    }
    return out;
}

std::vector<BitVec> padded_deco(const Srs& s, std::size_t dim) {
    std::vector<BitVec> deco;
    deco.reserve(s.node_count() + 2);
    for (const auto& f : s.deco()) deco.push_back(f.resized(dim));
    return deco;
}

BitVec with_tail(const BitVec& w, std::size_t dim, std::size_t set_index) {
    BitVec v = w.resized(dim);
    v.set(set_index);
    return v;
}

/// Builds the extension once w0 and the case are decided.
Extension assemble(const Srs& s, const NeighborhoodIndicator& lambda, ExtensionWitness w) {
    const std::size_t d = s.dim();
    const BitMat& g = s.space().gram();
    std::vector<BitVec> border(1, BitVec(d));
    if (w.case_tag == ExtensionCase::new_hyperbolic) {
        border[0] = w.lifted ^ (g * w.w0);
        if (border[0].is_zero()) throw Error("extension: hyperbolic case with zero pairing column");
        w.x_choice.reset();
        for (const auto& r : s.space().radical()) {
            if (r.dot(border[0])) {
                w.x_choice = r;
                break;
            }
        }
    }
    SympSpace space(bordered_gram(g, border, BitMat(1, 1)));
    w.new_deco = with_tail(w.w0, d + 1, d);
    auto deco = padded_deco(s, d + 1);
    deco.push_back(w.new_deco);
    Graph graph = s.graph().with_node(lambda);
    Srs out(std::move(graph), std::move(space), std::move(deco));
    return {std::move(out), std::move(w)};
}

}  // namespace

NeighborhoodIndicator indicator_from_nodes(std::size_t node_count, const std::vector<std::size_t>& nodes) {
    NeighborhoodIndicator lambda(node_count);
    for (std::size_t q : nodes) {
        if (q >= node_count) throw Error("indicator: node " + std::to_string(q) + " out of range");
        lambda.set(q);
    }
    return lambda;
}

const char* to_string(ExtensionCase c) noexcept {
    return c == ExtensionCase::new_nullvector ? "new_nullvector" : "new_hyperbolic";
}

BitVec lift_indicator(const Srs& s, const NeighborhoodIndicator& lambda) {
    require_minimal(s, "lift_indicator");
    require_indicator(s, lambda, "lift_indicator");
    const BitMat f = BitMat::from_rows(s.deco(), s.dim());
    auto lifted = solve(f, lambda);
    if (!lifted) throw Error("lift_indicator: decorations are not independent");
    return *lifted;
}

Extension extend_extraspecial(const Srs& s, const NeighborhoodIndicator& lambda) {
    require_minimal(s, "extend_extraspecial");
    if (!s.space().nondegenerate()) throw Error("extend_extraspecial: space is not extraspecial");
    ExtensionWitness w;
    w.lifted = lift_indicator(s, lambda);
    auto w0 = solve(s.space().gram(), w.lifted);
    if (!w0) throw Error("extend_extraspecial: Gram matrix is singular");
    w.w0 = *w0;
    w.z0 = BitVec(s.dim());
    w.case_tag = ExtensionCase::new_nullvector;
    return assemble(s, lambda, std::move(w));
}

Extension extend_nullspace(const Srs& s, const NeighborhoodIndicator& lambda) {
    require_minimal(s, "extend_nullspace");
    if (!s.space().gram().is_zero()) throw Error("extend_nullspace: space is not a pure nullspace");
    ExtensionWitness w;
    w.lifted = lift_indicator(s, lambda);
    w.w0 = BitVec(s.dim());
    w.z0 = BitVec(s.dim());
    w.case_tag = w.lifted.is_zero() ? ExtensionCase::new_nullvector : ExtensionCase::new_hyperbolic;
    // The radical basis is e_0..e_{k-1}, so x_choice is the lowest e_i with lifted(e_i) = 1.
    return assemble(s, lambda, std::move(w));
}

Extension extend_minimal(const Srs& s, const NeighborhoodIndicator& lambda,
                         const std::optional<CompletionChoices>& choices) {
    require_minimal(s, "extend_minimal");
    ExtensionWitness w;
    w.lifted = lift_indicator(s, lambda);
    const CompletionChoices c = choices ? *choices : default_completion_choices(s.space());
    const MixedForm mixed = mixed_completion(s.space(), c.proj, c.radform);
    auto wt = solve(mixed.completed(), w.lifted);
    if (!wt) throw Error("extend_minimal: completed form is degenerate");
    w.z0 = mixed.proj() * *wt;
    w.w0 = *wt ^ w.z0;
    w.case_tag = w.z0.is_zero() ? ExtensionCase::new_nullvector : ExtensionCase::new_hyperbolic;
    return assemble(s, lambda, std::move(w));
}

Srs replay(const Srs& s, const NeighborhoodIndicator& lambda, const ExtensionWitness& witness) {
    require_minimal(s, "replay");
    const BitVec lifted = lift_indicator(s, lambda);
    if (!(lifted == witness.lifted)) throw Error("replay: witness was recorded for a different indicator");
    if (witness.w0.dim() != s.dim()) throw DimensionMismatch("replay: w0 has the wrong dimension");
    ExtensionWitness w = witness;
    auto out = assemble(s, lambda, std::move(w));
    if (!(out.witness.new_deco == witness.new_deco)) throw Error("replay: recorded decoration disagrees");
    return std::move(out.srs);
}

DoubleExtension double_extend_extraspecial(const Srs& s, const NeighborhoodIndicator& lambda_p,
                                           const NeighborhoodIndicator& lambda_q, bool pq_edge) {
    require_minimal(s, "double_extend_extraspecial");
    if (!s.space().nondegenerate()) throw Error("double_extend_extraspecial: space is not extraspecial");
    const std::size_t d = s.dim();
    const std::size_t n_nodes = s.node_count();
    const BitMat& g = s.space().gram();

    auto single = [&](const NeighborhoodIndicator& lambda) {
        ExtensionWitness w;
        w.lifted = lift_indicator(s, lambda);
        auto w0 = solve(g, w.lifted);
        if (!w0) throw Error("double_extend_extraspecial: Gram matrix is singular");
        w.w0 = *w0;
        w.z0 = BitVec(d);
        return w;
    };
    ExtensionWitness wp = single(lambda_p);
    ExtensionWitness wq = single(lambda_q);
    const bool pairing = s.space().form(wp.w0, wq.w0);

    BitMat corner(2, 2);
    if (pairing == pq_edge) {
        wp.case_tag = wq.case_tag = ExtensionCase::new_nullvector;
    } else {
        wp.case_tag = wq.case_tag = ExtensionCase::new_hyperbolic;
        corner.set(0, 1);
        corner.set(1, 0);
    }
    SympSpace space(bordered_gram(g, {BitVec(d), BitVec(d)}, corner));
    wp.new_deco = with_tail(wp.w0, d + 2, d);
    wq.new_deco = with_tail(wq.w0, d + 2, d + 1);

    auto deco = padded_deco(s, d + 2);
    deco.push_back(wp.new_deco);
    deco.push_back(wq.new_deco);
    BitVec lq = lambda_q.resized(n_nodes + 1);
    if (pq_edge) lq.set(n_nodes);
    Graph graph = s.graph().with_node(lambda_p).with_node(lq);
    Srs out(std::move(graph), std::move(space), std::move(deco));
    return {std::move(out), std::move(wp), std::move(wq)};
}

Srs empty_srs() { return Srs(Graph(0), SympSpace(BitMat(0, 0)), {}); }

Srs build_by_extension(const Graph& g, const Permutation& order) {
    const std::size_t n = g.node_count();
    if (order.size() != n) throw Error("build_by_extension: order has the wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v]) throw Error("build_by_extension: order is not a permutation");
        seen[v] = true;
    }
    Srs s = empty_srs();
    for (std::size_t i = 0; i < n; ++i) {
        NeighborhoodIndicator lambda(i);
        for (std::size_t j = 0; j < i; ++j) lambda.set(j, g.has_edge(order[i], order[j]));
        s = extend_minimal(s, lambda).srs;
    }
    return relabel(s, order);
}

nlohmann::json witness_to_json(const ExtensionWitness& w) {
    nlohmann::json j = {
        {"case", to_string(w.case_tag)},
        {"lifted", w.lifted.to_string()},
        {"w0", w.w0.to_string()},
        {"z0", w.z0.to_string()},
        {"new_deco", w.new_deco.to_string()},
    };
    j["x_choice"] = w.x_choice ? nlohmann::json(w.x_choice->to_string()) : nlohmann::json(nullptr);
    return j;
}

ExtensionWitness witness_from_json(const nlohmann::json& j) {
    try {
        ExtensionWitness w;
        const auto tag = j.at("case").get<std::string>();
        if (tag == "new_nullvector") {
            w.case_tag = ExtensionCase::new_nullvector;
        } else if (tag == "new_hyperbolic") {
            w.case_tag = ExtensionCase::new_hyperbolic;
        } else {
            throw Error("witness JSON: unknown case '" + tag + "'");
        }
        w.lifted = BitVec::from_string(j.at("lifted").get<std::string>());
        w.w0 = BitVec::from_string(j.at("w0").get<std::string>());
        w.z0 = BitVec::from_string(j.at("z0").get<std::string>());
        w.new_deco = BitVec::from_string(j.at("new_deco").get<std::string>());
        if (j.contains("x_choice") && !j.at("x_choice").is_null()) {
            w.x_choice = BitVec::from_string(j.at("x_choice").get<std::string>());
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed witness JSON: ") + e.what());
    }
}

}  // namespace symroot
