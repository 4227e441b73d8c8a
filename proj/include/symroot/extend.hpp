#pragma once

// One- and two-node extensions of minimal symplectic root systems.

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "symroot/gf2.hpp"
#include "symroot/graph.hpp"
#include "symroot/srs.hpp"
#include "symroot/symplectic.hpp"

namespace symroot {

/// Bit q set iff the new node is adjacent to existing node q.
using NeighborhoodIndicator = BitVec;

NeighborhoodIndicator indicator_from_nodes(std::size_t node_count, const std::vector<std::size_t>& nodes);

enum class ExtensionCase { new_nullvector, new_hyperbolic };

const char* to_string(ExtensionCase c) noexcept;

/// The decision trail of a single extension. All vectors are in the
/// coordinates of the original space W, except new_deco which lives in the
/// extended space (W plus one appended coordinate: z in the nullvector case,
/// y in the hyperbolic case).
struct ExtensionWitness {
    ExtensionCase case_tag = ExtensionCase::new_nullvector;
    BitVec lifted;  ///< coefficients of the linear form extending the indicator
    BitVec w0;
    BitVec z0;
    BitVec new_deco;
    /// An element of the radical of W pairing to 1 with the new y.
    std::optional<BitVec> x_choice;
};

struct Extension {
    Srs srs;
    ExtensionWitness witness;
};

/// Coefficients c with c . f(q) = lambda(q) for every node q. Throws Error
/// unless s is minimal.
BitVec lift_indicator(const Srs& s, const NeighborhoodIndicator& lambda);

/// s minimal of type (n,0); result of type (n,1).
Extension extend_extraspecial(const Srs& s, const NeighborhoodIndicator& lambda);

/// s minimal of type (0,k); result (0,k+1) or (1,k-1).
Extension extend_nullspace(const Srs& s, const NeighborhoodIndicator& lambda);

/// Any minimal s. The completion choices default to default_completion_choices.
/// The new node gets index node_count(s).
Extension extend_minimal(const Srs& s, const NeighborhoodIndicator& lambda,
                         const std::optional<CompletionChoices>& choices = std::nullopt);

/// Rebuilds an extension from its witness; throws Error when the witness is
/// inconsistent with s and lambda.
Srs replay(const Srs& s, const NeighborhoodIndicator& lambda, const ExtensionWitness& witness);

struct DoubleExtension {
    Srs srs;
    ExtensionWitness p;
    ExtensionWitness q;
};

/// Adds p (index N) and q (index N+1) to a minimal extraspecial s. When
/// <w_p,w_q> equals pq_edge the result has type (n,2) with
/// f(p) = w_p + z_p, f(q) = w_q + z_q; otherwise (n+1,0) with
/// f(p) = w_p + x, f(q) = w_q + y.
DoubleExtension double_extend_extraspecial(const Srs& s, const NeighborhoodIndicator& lambda_p,
                                           const NeighborhoodIndicator& lambda_q, bool pq_edge);

/// The zero-dimensional SRS on the empty graph.
Srs empty_srs();

/// Folds extend_minimal along `order` (order[i] is the i-th node added),
/// starting from the empty SRS. Node numbering of g is preserved.
Srs build_by_extension(const Graph& g, const Permutation& order);

nlohmann::json witness_to_json(const ExtensionWitness& w);
ExtensionWitness witness_from_json(const nlohmann::json& j);

}  // namespace symroot
