#pragma once

// Small brute-force references over plain integer bitmasks, kept apart from
// the library's own linear algebra.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;

inline std::size_t rank(std::vector<Mask> rows) {
    std::size_t r = 0;
    for (std::size_t bit = 0; bit < 64; ++bit) {
        const Mask b = Mask{1} << bit;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                               [b](Mask m) { return (m & b) != 0; });
        if (it == rows.end()) continue;
        std::swap(*it, rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & b)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

inline bool parity(Mask m) { return (__builtin_popcountll(m) & 1) != 0; }

/// v^T G w with G given by row masks.
inline bool form(const std::vector<Mask>& gram, Mask v, Mask w) {
    bool acc = false;
    for (std::size_t i = 0; i < gram.size(); ++i)
        if ((v >> i) & 1) acc ^= parity(gram[i] & w);
    return acc;
}

/// (n, k) of an alternating Gram matrix.
inline std::pair<std::size_t, std::size_t> alt_type(const std::vector<Mask>& gram) {
    const std::size_t r = rank(gram);
    return {r / 2, gram.size() - r};
}

/// Adjacency rows of a graph with `n` nodes given by an edge mask over the
/// pairs (i<j) in lexicographic order.
inline std::vector<Mask> graph_from_edge_mask(std::size_t n, Mask edges) {
    std::vector<Mask> adj(n, 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if ((edges >> bit) & 1) {
                adj[i] |= Mask{1} << j;
                adj[j] |= Mask{1} << i;
            }
    return adj;
}

inline bool connected(const std::vector<Mask>& adj) {
    if (adj.empty()) return true;
    Mask seen = 1;
    Mask frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (std::size_t i = 0; i < adj.size(); ++i)
            if ((frontier >> i) & 1) next |= adj[i];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (adj.size() == 64 ? ~Mask{0} : (Mask{1} << adj.size()) - 1);
}

/// Lexicographically least adjacency encoding over all relabelings.
inline std::vector<Mask> canonical_form(const std::vector<Mask>& adj) {
    std::vector<std::size_t> perm(adj.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Mask> best;
    do {
        std::vector<Mask> rows(adj.size(), 0);
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (std::size_t j = 0; j < adj.size(); ++j)
                if ((adj[i] >> j) & 1) rows[perm[i]] |= Mask{1} << perm[j];
        if (best.empty() || rows < best) best = rows;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Maximum independent set size by subset enumeration (n <= 20).
inline std::size_t max_coclique_size(const std::vector<Mask>& adj) {
    std::size_t best = 0;
    const Mask all = Mask{1} << adj.size();
    for (Mask s = 0; s < all; ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < adj.size() && ok; ++i)
            if (((s >> i) & 1) && (adj[i] & s)) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

}  // namespace oracle
