#include "symroot/grp2.hpp"

#include <string>

#include "symroot/error.hpp"

namespace symroot {

namespace {

void require_member(const CocycleGroup& g, const GroupElement& a) {
    if (a.vec.dim() != g.dim()) throw DimensionMismatch("group element does not belong to this group");
}

}  // namespace

CocycleGroup::CocycleGroup(SympSpace space, BitMat beta) : space_(std::move(space)), beta_(std::move(beta)) {
    if (beta_.rows() != space_.dim() || beta_.cols() != space_.dim()) throw Error("cocycle has the wrong shape");
    if (!(beta_ + beta_.transpose() == space_.gram())) throw Error("cocycle does not polarize to the Gram matrix");
}

std::uint64_t CocycleGroup::order() const {
    if (dim() > 62) throw CapExceeded("group order does not fit in 64 bits");
    return std::uint64_t{1} << (dim() + 1);
}

CocycleGroup make_group(const SympSpace& s) {
    const std::size_t d = s.dim();
    const BitMat b = s.basis().as_matrix(d);
    const auto b_inv = inverse(b);
    if (!b_inv) throw Error("make_group: symplectic basis is singular");
    const BitMat local = b.transpose() * s.gram() * b;
    BitMat upper(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) upper.set(i, j, local.get(i, j));
    }
    return CocycleGroup(s, b_inv->transpose() * upper * *b_inv);
}

GroupElement multiply(const CocycleGroup& g, const GroupElement& a, const GroupElement& b) {
    require_member(g, a);
    require_member(g, b);
    return {a.vec ^ b.vec, static_cast<bool>(a.sign ^ b.sign ^ g.beta().form(a.vec, b.vec))};
}

GroupElement inverse(const CocycleGroup& g, const GroupElement& a) {
    require_member(g, a);
    return {a.vec, static_cast<bool>(a.sign ^ g.square_sign(a.vec))};
}

GroupElement commutator(const CocycleGroup& g, const GroupElement& a, const GroupElement& b) {
    return multiply(g, multiply(g, multiply(g, a, b), inverse(g, a)), inverse(g, b));
}

unsigned element_order(const CocycleGroup& g, const GroupElement& a) {
    require_member(g, a);
    if (a.vec.is_zero()) return a.sign ? 2 : 1;
    return g.square_sign(a.vec) ? 4 : 2;
}

std::vector<GroupElement> all_elements(const CocycleGroup& g) {
    if (g.dim() > 20) throw CapExceeded("all_elements: dimension above 20");
    std::vector<GroupElement> out;
    out.reserve(std::size_t{2} << g.dim());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.dim()); ++m) {
        const BitVec v = BitVec::from_mask(g.dim(), m);
        out.push_back({v, false});
        out.push_back({v, true});
    }
    return out;
}

std::vector<GroupElement> center(const CocycleGroup& g) {
    const auto& rad = g.space().radical();
    if (rad.size() > 20) throw CapExceeded("center: radical dimension above 20");
    std::vector<GroupElement> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << rad.size()); ++m) {
        BitVec v(g.dim());
        for (std::size_t i = 0; i < rad.size(); ++i) {
            if ((m >> i) & 1U) v ^= rad[i];
        }
        out.push_back({v, false});
        out.push_back({v, true});
    }
    return out;
}

std::vector<GroupElement> lift_decoration(const Srs& s, const CocycleGroup& g) {
    if (!(s.space() == g.space())) throw Error("lift_decoration: SRS and group live on different spaces");
    std::vector<GroupElement> lifts;
    lifts.reserve(s.node_count());
    for (const auto& f : s.deco()) lifts.push_back({f, false});
    if (!(commutativity_graph(g, lifts) == s.graph())) {
        throw Error("lift_decoration: commutativity graph differs from the SRS graph");
    }
    return lifts;
}

Graph commutativity_graph(const CocycleGroup& g, const std::vector<GroupElement>& elements) {
    Graph out(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            if (!(commutator(g, elements[i], elements[j]) == g.identity())) out.add_edge(i, j);
        }
    }
    return out;
}

BurnsideResult burnside_check(const CocycleGroup& g, const std::vector<GroupElement>& gens) {
    const std::size_t d = g.dim();
    bool frattini_trivial = g.space().gram().is_zero();
    for (std::size_t i = 0; i < d && frattini_trivial; ++i) {
        if (g.beta().get(i, i)) frattini_trivial = false;
    }
    // Frattini = squares and commutators; it is {1} or the central Z2.
    BurnsideResult out;
    std::vector<BitVec> images;
    images.reserve(gens.size());
    for (const auto& a : gens) {
        require_member(g, a);
        if (frattini_trivial) {
            BitVec v = a.vec.resized(d + 1);
            v.set(d, a.sign);
            images.push_back(std::move(v));
        } else {
            images.push_back(a.vec);
        }
    }
    out.frattini_rank = frattini_trivial ? d + 1 : d;
    out.basis_size = rank(images);
    out.generates = out.basis_size == out.frattini_rank;
    out.minimal = out.generates && gens.size() == out.frattini_rank;
    return out;
}

const char* to_string(ExtraspecialSign s) noexcept {
    switch (s) {
        case ExtraspecialSign::plus:
            return "plus";
        case ExtraspecialSign::minus:
            return "minus";
        default:
            return "not_applicable";
    }
}

ExtraspecialSign extraspecial_sign(const CocycleGroup& g) {
    if (!g.space().nondegenerate() || g.dim() == 0) return ExtraspecialSign::not_applicable;
    if (g.dim() > 30) throw CapExceeded("extraspecial_sign: dimension above 30");
    const std::size_t n = g.space().type().n;
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.dim()); ++m) {
        if (g.square_sign(BitVec::from_mask(g.dim(), m))) ++count;
    }
    const std::uint64_t plus_count = (std::uint64_t{1} << (2 * n - 1)) - (std::uint64_t{1} << (n - 1));
    const std::uint64_t minus_count = (std::uint64_t{1} << (2 * n - 1)) + (std::uint64_t{1} << (n - 1));
    if (count == plus_count) return ExtraspecialSign::plus;
    if (count == minus_count) return ExtraspecialSign::minus;
    throw Error("extraspecial_sign: quadratic form has an impossible number of nonsingular vectors");
}

}  // namespace symroot
