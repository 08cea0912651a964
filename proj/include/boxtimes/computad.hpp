#pragma once

// Presentation of the interleaving tensor by generators and relations.
//
//  * string-keyed 2-computads (nodes, edges, generating 2-cells) with
//    well-formedness checks, and the specific computad presenting the
//    tensor of two finite 2-categories;
//  * the seven generating families of 2-cells, realized as interleaved
//    2-cells (both orientations of the icon direction on the d side);
//  * slices: a generator whiskered into a larger 1-cell context, plus the
//    canonical decomposition of any interleaved 2-cell into a chain of
//    slices and the inverse recomposition;
//  * the defining relation instances between slice chains, assignments of
//    the generators into a finite target 2-category, relation checking and
//    evaluation of interleaved cells under a checked assignment;
//  * resort: rewriting a concatenation of two canonical chains into the
//    canonical chain of the composite, one tagged move at a time, exposing
//    each intermediate chain;
//  * free slice terms over an arbitrary computad, with boundary checking
//    and translation back into interleaved cells for the tensor computad.
//
// Slice chains are listed target side first: the last element of the list
// acts first.  Relation-instance layers are the opposite (first applied
// first); each container documents its own convention.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boxtimes/errors.hpp"
#include "boxtimes/fin2cat.hpp"
#include "boxtimes/paths.hpp"
#include "boxtimes/shuffles.hpp"
#include "boxtimes/simplicial.hpp"
#include "boxtimes/tensor.hpp"

namespace boxtimes {

// ---------------------------------------------------------------------------
// Plain 2-computads.

struct Computad {
    struct Edge {
        std::string src, tgt;  // node names
        bool operator==(const Edge&) const = default;
    };
    struct Gen {
        // Parallel edge paths, earliest edge first.
        std::vector<std::string> src, tgt;
        bool operator==(const Gen&) const = default;
    };

    std::vector<std::string> nodes;
    std::map<std::string, Edge> edges;
    std::map<std::string, Gen> gens;

    bool operator==(const Computad&) const = default;

    bool has_node(const std::string& x) const {
        for (const auto& n : nodes)
            if (n == x) return true;
        return false;
    }
    const Edge& edge(const std::string& e) const {
        auto it = edges.find(e);
        if (it == edges.end()) throw reference_error("unknown edge: " + e);
        return it->second;
    }
    const Gen& gen(const std::string& g) const {
        auto it = gens.find(g);
        if (it == gens.end()) throw reference_error("unknown generator: " + g);
        return it->second;
    }
};

namespace detail {

// Walks an edge path from a node; returns the final node, or reports into
// out (prefixed with who) and returns empty on the first problem.
inline std::string walk_edges(const Computad& G, const std::string& start,
                              const std::vector<std::string>& path,
                              const std::string& who,
                              std::vector<Violation>* out) {
    std::string at = start;
    for (const auto& e : path) {
        auto it = G.edges.find(e);
        if (it == G.edges.end()) {
            if (out)
                out->push_back({"computad-generator-edge", {who, e},
                                "generator uses an undeclared edge"});
            return {};
        }
        if (it->second.src != at) {
            if (out)
                out->push_back({"computad-generator-path", {who, e},
                                "edge path does not chain: expected source " +
                                    at + ", edge starts at " + it->second.src});
            return {};
        }
        at = it->second.tgt;
    }
    return at;
}

} // namespace detail

inline std::vector<Violation> validate_computad(const Computad& G) {
    std::vector<Violation> out;
    for (const auto& [e, ec] : G.edges) {
        if (!G.has_node(ec.src))
            out.push_back({"computad-edge-endpoint", {e, ec.src},
                           "edge source is not a declared node"});
        if (!G.has_node(ec.tgt))
            out.push_back({"computad-edge-endpoint", {e, ec.tgt},
                           "edge target is not a declared node"});
    }
    for (const auto& [g, gc] : G.gens) {
        // Both paths must start somewhere; with an empty path the start is
        // pinned by the other side.
        std::string s0, t0;
        if (!gc.src.empty()) s0 = G.edges.count(gc.src.front())
                                      ? G.edges.at(gc.src.front()).src
                                      : std::string{};
        if (!gc.tgt.empty()) t0 = G.edges.count(gc.tgt.front())
                                      ? G.edges.at(gc.tgt.front()).src
                                      : std::string{};
        if (s0.empty() && !gc.src.empty()) {
            out.push_back({"computad-generator-edge", {g, gc.src.front()},
                           "generator uses an undeclared edge"});
            continue;
        }
        if (t0.empty() && !gc.tgt.empty()) {
            out.push_back({"computad-generator-edge", {g, gc.tgt.front()},
                           "generator uses an undeclared edge"});
            continue;
        }
        if (gc.src.empty() && gc.tgt.empty()) continue;  // trivially parallel
        if (s0.empty()) s0 = t0;
        if (t0.empty()) t0 = s0;
        std::string s1 = detail::walk_edges(G, s0, gc.src, g, &out);
        std::string t1 = detail::walk_edges(G, t0, gc.tgt, g, &out);
        if (s1.empty() || t1.empty()) continue;
        if (s0 != t0 || s1 != t1)
            out.push_back({"computad-generator-parallel", {g},
                           "source path runs " + s0 + " -> " + s1 +
                               " but target path runs " + t0 + " -> " + t1});
    }
    return out;
}

// ---------------------------------------------------------------------------
// The seven generating families of the tensor computad.
//
//   CBoxDelta  a C-object alongside a 2-cell of D          (params a=X, b=delta)
//   GammaBoxD  a 2-cell of C alongside a D-object          (params a=gamma, b=P)
//   Id1CD      insert the identity 1-cell of a C-object    (params a=X, b=P)
//   IdC1D      insert the identity 1-cell of a D-object    (params a=X, b=P)
//   CompCcD    merge two adjacent C-steps                  (params a=c, b=c', c=P)
//   CompCdd    merge two adjacent D-steps                  (params a=X, b=d, c=d')
//   SwapCd     move a D-step before an adjacent C-step     (params a=c, b=d)
//
// In the mixed orientation the two D-side structural families point the
// other way: IdC1D removes an identity D-step and CompCdd splits a
// composite D-step.

enum class GenKind { CBoxDelta, GammaBoxD, Id1CD, IdC1D, CompCcD, CompCdd, SwapCd };

struct TensorGenerator {
    GenKind kind = GenKind::SwapCd;
    std::string a, b, c;  // parameters; see the table above
    bool operator==(const TensorGenerator&) const = default;
};

inline std::string gen_key(const TensorGenerator& g) {
    switch (g.kind) {
        case GenKind::CBoxDelta: return "delta(" + g.a + "," + g.b + ")";
        case GenKind::GammaBoxD: return "gamma(" + g.a + "," + g.b + ")";
        case GenKind::Id1CD: return "idC(" + g.a + "," + g.b + ")";
        case GenKind::IdC1D: return "idD(" + g.a + "," + g.b + ")";
        case GenKind::CompCcD: return "compC(" + g.a + "," + g.b + "," + g.c + ")";
        case GenKind::CompCdd: return "compD(" + g.a + "," + g.b + "," + g.c + ")";
        case GenKind::SwapCd: return "swap(" + g.a + "," + g.b + ")";
    }
    throw internal_error("unhandled generator kind");
}

namespace detail {

inline void require_object(const FinTwoCategory& K, const std::string& x,
                           const char* side) {
    if (!K.has_object(x))
        throw reference_error(std::string("unknown ") + side + " object: " + x);
}

// Single-step interleaved 1-cells.
inline TensorOneCell cstep(const FinTwoCategory& C, const std::string& c,
                           const std::string& P) {
    return {Path{C.one(c).src, {c}}, Path{P, {}}, Shuffle(1, 0, "c")};
}
inline TensorOneCell dstep(const FinTwoCategory& D, const std::string& X,
                           const std::string& d) {
    return {Path{X, {}}, Path{D.one(d).src, {d}}, Shuffle(0, 1, "d")};
}

} // namespace detail

// Source boundary of a generator as an interleaved 1-cell.  The mixed flag
// selects the mixed orientation of IdC1D and CompCdd.
inline TensorOneCell gen_source(const FinTwoCategory& C, const FinTwoCategory& D,
                                const TensorGenerator& g, bool mixed = false) {
    switch (g.kind) {
        case GenKind::CBoxDelta:
            detail::require_object(C, g.a, "first-factor");
            return detail::dstep(D, g.a, D.two(g.b).src);
        case GenKind::GammaBoxD:
            detail::require_object(D, g.b, "second-factor");
            return detail::cstep(C, C.two(g.a).src, g.b);
        case GenKind::Id1CD:
            return identity_cell(C, D, g.a, g.b);
        case GenKind::IdC1D:
            if (!mixed) return identity_cell(C, D, g.a, g.b);
            detail::require_object(C, g.a, "first-factor");
            return detail::dstep(D, g.a, D.id1(g.b));
        case GenKind::CompCcD: {
            detail::require_object(D, g.c, "second-factor");
            if (C.one(g.a).tgt != C.one(g.b).src)
                throw shape_error("compC arguments are not composable: " + g.a +
                                  " then " + g.b);
            return {Path{C.one(g.a).src, {g.a, g.b}}, Path{g.c, {}},
                    Shuffle(2, 0, "cc")};
        }
        case GenKind::CompCdd: {
            detail::require_object(C, g.a, "first-factor");
            if (D.one(g.b).tgt != D.one(g.c).src)
                throw shape_error("compD arguments are not composable: " + g.b +
                                  " then " + g.c);
            if (!mixed)
                return {Path{g.a, {}}, Path{D.one(g.b).src, {g.b, g.c}},
                        Shuffle(0, 2, "dd")};
            return detail::dstep(D, g.a, D.comp1(g.c, g.b));
        }
        case GenKind::SwapCd:
            return {Path{C.one(g.a).src, {g.a}}, Path{D.one(g.b).src, {g.b}},
                    Shuffle(1, 1, "cd")};
    }
    throw internal_error("unhandled generator kind");
}

inline TensorOneCell gen_target(const FinTwoCategory& C, const FinTwoCategory& D,
                                const TensorGenerator& g, bool mixed = false) {
    switch (g.kind) {
        case GenKind::CBoxDelta:
            detail::require_object(C, g.a, "first-factor");
            return detail::dstep(D, g.a, D.two(g.b).tgt);
        case GenKind::GammaBoxD:
            detail::require_object(D, g.b, "second-factor");
            return detail::cstep(C, C.two(g.a).tgt, g.b);
        case GenKind::Id1CD:
            detail::require_object(D, g.b, "second-factor");
            return detail::cstep(C, C.id1(g.a), g.b);
        case GenKind::IdC1D:
            if (mixed) return identity_cell(C, D, g.a, g.b);
            detail::require_object(C, g.a, "first-factor");
            return detail::dstep(D, g.a, D.id1(g.b));
        case GenKind::CompCcD:
            gen_source(C, D, g, mixed);  // composability check
            return detail::cstep(C, C.comp1(g.b, g.a), g.c);
        case GenKind::CompCdd:
            gen_source(C, D, g, mixed);  // composability check
            if (!mixed) return detail::dstep(D, g.a, D.comp1(g.c, g.b));
            return {Path{g.a, {}}, Path{D.one(g.b).src, {g.b, g.c}},
                    Shuffle(0, 2, "dd")};
        case GenKind::SwapCd:
            return {Path{C.one(g.a).src, {g.a}}, Path{D.one(g.b).src, {g.b}},
                    Shuffle(1, 1, "dc")};
    }
    throw internal_error("unhandled generator kind");
}

// The generator realized as an interleaved 2-cell.
inline TensorTwoCell elementary(const FinTwoCategory& C, const FinTwoCategory& D,
                                const TensorGenerator& g) {
    TensorTwoCell cell{gen_source(C, D, g), gen_target(C, D, g),
                       IntervalMap::identity(0), IntervalMap::identity(0),
                       {}, {}};
    switch (g.kind) {
        case GenKind::CBoxDelta:
            cell.rho = IntervalMap::identity(1);
            cell.beta = {g.b};
            break;
        case GenKind::GammaBoxD:
            cell.xi = IntervalMap::identity(1);
            cell.alpha = {g.a};
            break;
        case GenKind::Id1CD:
            cell.xi = IntervalMap(1, 0, {0, 0});
            cell.alpha = {C.id2(C.id1(g.a))};
            break;
        case GenKind::IdC1D:
            cell.rho = IntervalMap(1, 0, {0, 0});
            cell.beta = {D.id2(D.id1(g.b))};
            break;
        case GenKind::CompCcD:
            cell.xi = IntervalMap(1, 2, {0, 2});
            cell.alpha = {C.id2(C.comp1(g.b, g.a))};
            break;
        case GenKind::CompCdd:
            cell.rho = IntervalMap(1, 2, {0, 2});
            cell.beta = {D.id2(D.comp1(g.c, g.b))};
            break;
        case GenKind::SwapCd:
            cell.xi = IntervalMap::identity(1);
            cell.rho = IntervalMap::identity(1);
            cell.alpha = {C.id2(g.a)};
            cell.beta = {D.id2(g.b)};
            break;
    }
    check_two(C, D, cell);
    return cell;
}

// The mixed-orientation realization: IdC1D consumes an identity D-step and
// CompCdd splits a composite D-step; the other five keep their shape.
inline MixedTensorTwoCell mixed_elementary(const FinTwoCategory& C,
                                           const FinTwoCategory& D,
                                           const TensorGenerator& g) {
    MixedTensorTwoCell cell{gen_source(C, D, g, true), gen_target(C, D, g, true),
                            IntervalMap::identity(0), IntervalMap::identity(0),
                            {}, {}};
    switch (g.kind) {
        case GenKind::CBoxDelta:
            cell.rho_rev = IntervalMap::identity(1);
            cell.beta = {g.b};
            break;
        case GenKind::GammaBoxD:
            cell.xi = IntervalMap::identity(1);
            cell.alpha = {g.a};
            break;
        case GenKind::Id1CD:
            cell.xi = IntervalMap(1, 0, {0, 0});
            cell.alpha = {C.id2(C.id1(g.a))};
            break;
        case GenKind::IdC1D:
            cell.rho_rev = IntervalMap(1, 0, {0, 0});
            cell.beta = {D.id2(D.id1(g.b))};
            break;
        case GenKind::CompCcD:
            cell.xi = IntervalMap(1, 2, {0, 2});
            cell.alpha = {C.id2(C.comp1(g.b, g.a))};
            break;
        case GenKind::CompCdd:
            cell.rho_rev = IntervalMap(1, 2, {0, 2});
            cell.beta = {D.id2(D.comp1(g.c, g.b))};
            break;
        case GenKind::SwapCd:
            cell.xi = IntervalMap::identity(1);
            cell.rho_rev = IntervalMap::identity(1);
            cell.alpha = {C.id2(g.a)};
            cell.beta = {D.id2(g.b)};
            break;
    }
    check_mixed_two(C, D, cell);
    return cell;
}

// Every generator instance over the two factors, in a fixed deterministic
// order (family by family, parameters in map order).
inline std::vector<TensorGenerator> tensor_generators(const FinTwoCategory& C,
                                                      const FinTwoCategory& D) {
    std::vector<TensorGenerator> out;
    for (const auto& x : C.objects)
        for (const auto& [d2, _] : D.two_cells)
            out.push_back({GenKind::CBoxDelta, x, d2, ""});
    for (const auto& [c2, _] : C.two_cells)
        for (const auto& p : D.objects)
            out.push_back({GenKind::GammaBoxD, c2, p, ""});
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) {
            out.push_back({GenKind::Id1CD, x, p, ""});
            out.push_back({GenKind::IdC1D, x, p, ""});
        }
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& [c2, c2c] : C.one_cells) {
            if (c1c.tgt != c2c.src) continue;
            for (const auto& p : D.objects)
                out.push_back({GenKind::CompCcD, c1, c2, p});
        }
    for (const auto& x : C.objects)
        for (const auto& [d1, d1c] : D.one_cells)
            for (const auto& [d2, d2c] : D.one_cells) {
                if (d1c.tgt != d2c.src) continue;
                out.push_back({GenKind::CompCdd, x, d1, d2});
            }
    for (const auto& [c1, _] : C.one_cells)
        for (const auto& [d1, __] : D.one_cells)
            out.push_back({GenKind::SwapCd, c1, d1, ""});
    return out;
}

// Key conventions for the tensor computad and for assignments.
inline std::string node_key(const std::string& x, const std::string& p) {
    return "(" + x + ";" + p + ")";
}
inline std::string cedge_key(const std::string& c, const std::string& p) {
    return c + "@" + p;
}
inline std::string dedge_key(const std::string& x, const std::string& d) {
    return x + "@" + d;
}

// The edge-key path of an interleaved 1-cell, earliest step first.
inline std::vector<std::string> cell_edge_path(const FinTwoCategory& C,
                                               const FinTwoCategory& D,
                                               const TensorOneCell& f) {
    check_one(C, D, f);
    IntervalMap r = f.shuffle.r(), s = f.shuffle.s();
    std::vector<std::string> out;
    int len = f.shuffle.n + f.shuffle.m;
    for (int t = 1; t <= len; ++t) {
        if (f.shuffle.word[static_cast<std::size_t>(t - 1)] == 'c')
            out.push_back(cedge_key(
                f.cpath.cells[static_cast<std::size_t>(r(t) - 1)],
                object_at(D, f.dpath, s(t))));
        else
            out.push_back(dedge_key(
                object_at(C, f.cpath, r(t)),
                f.dpath.cells[static_cast<std::size_t>(s(t) - 1)]));
    }
    return out;
}

// The computad presenting the tensor of C and D: a node per object pair,
// an edge per (1-cell, object) pair in either order, and the generator
// families above.  Throws if the two edge-key readings collide.
inline Computad tensor_computad(const FinTwoCategory& C, const FinTwoCategory& D) {
    Computad G;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) G.nodes.push_back(node_key(x, p));
    for (const auto& [c1, cc] : C.one_cells)
        for (const auto& p : D.objects)
            G.edges[cedge_key(c1, p)] = {node_key(cc.src, p), node_key(cc.tgt, p)};
    for (const auto& x : C.objects)
        for (const auto& [d1, dc] : D.one_cells) {
            std::string k = dedge_key(x, d1);
            auto [it, fresh] =
                G.edges.emplace(k, Computad::Edge{node_key(x, dc.src),
                                                 node_key(x, dc.tgt)});
            if (!fresh)
                throw shape_error(
                    "ambiguous edge key: " + k +
                    " names both a C-step and a D-step; rename the cells");
        }
    for (const auto& g : tensor_generators(C, D)) {
        Computad::Gen gc{cell_edge_path(C, D, gen_source(C, D, g)),
                         cell_edge_path(C, D, gen_target(C, D, g))};
        auto [it, fresh] = G.gens.emplace(gen_key(g), std::move(gc));
        if (!fresh)
            throw shape_error("ambiguous generator key: " + gen_key(g));
    }
    return G;
}

// ---------------------------------------------------------------------------
// Slices: a generator in a whiskered context.  right is the earlier part of
// the ambient 1-cell, left the later part.

struct Slice {
    TensorOneCell left;
    TensorGenerator gen;
    TensorOneCell right;
    bool operator==(const Slice&) const = default;
};

// The sub-1-cell spanning word positions [from, to).
inline TensorOneCell subcell(const FinTwoCategory& C, const FinTwoCategory& D,
                             const TensorOneCell& f, int from, int to) {
    int len = f.shuffle.n + f.shuffle.m;
    if (from < 0 || to < from || to > len)
        throw range_error("subcell range [" + std::to_string(from) + ", " +
                          std::to_string(to) + ") outside word of length " +
                          std::to_string(len));
    IntervalMap r = f.shuffle.r(), s = f.shuffle.s();
    std::string w = f.shuffle.word.substr(static_cast<std::size_t>(from),
                                          static_cast<std::size_t>(to - from));
    int nc = static_cast<int>(std::count(w.begin(), w.end(), 'c'));
    return {segment(C, f.cpath, r(from), r(to)),
            segment(D, f.dpath, s(from), s(to)),
            Shuffle(nc, to - from - nc, w)};
}

// Cuts a slice out of an ambient 1-cell: the generator's source must sit at
// word position pos.  Returns the slice and the ambient cell after the
// generator fires.
inline std::pair<Slice, TensorOneCell> slice_on(const FinTwoCategory& C,
                                                const FinTwoCategory& D,
                                                const TensorOneCell& cell,
                                                int pos,
                                                const TensorGenerator& g,
                                                bool mixed = false) {
    TensorOneCell gsrc = gen_source(C, D, g, mixed);
    int slen = gsrc.shuffle.n + gsrc.shuffle.m;
    int len = cell.shuffle.n + cell.shuffle.m;
    if (pos < 0 || pos + slen > len)
        throw range_error("slice position " + std::to_string(pos) +
                          " out of range for " + gen_key(g));
    TensorOneCell right = subcell(C, D, cell, 0, pos);
    TensorOneCell mid = subcell(C, D, cell, pos, pos + slen);
    TensorOneCell left = subcell(C, D, cell, pos + slen, len);
    if (!(mid == gsrc))
        throw shape_error("generator " + gen_key(g) +
                          " does not match the cell at position " +
                          std::to_string(pos));
    TensorOneCell after = hcompose_one(
        C, D, right, hcompose_one(C, D, gen_target(C, D, g, mixed), left));
    return {Slice{left, g, right}, after};
}

inline TensorOneCell slice_source(const FinTwoCategory& C,
                                  const FinTwoCategory& D, const Slice& s,
                                  bool mixed = false) {
    return hcompose_one(C, D, s.right,
                        hcompose_one(C, D, gen_source(C, D, s.gen, mixed), s.left));
}

inline TensorOneCell slice_target(const FinTwoCategory& C,
                                  const FinTwoCategory& D, const Slice& s,
                                  bool mixed = false) {
    return hcompose_one(C, D, s.right,
                        hcompose_one(C, D, gen_target(C, D, s.gen, mixed), s.left));
}

inline TensorTwoCell slice_cell(const FinTwoCategory& C, const FinTwoCategory& D,
                                const Slice& s) {
    return whisker_left(C, D, s.left,
                        whisker_right(C, D, elementary(C, D, s.gen), s.right));
}

inline MixedTensorTwoCell mixed_slice_cell(const FinTwoCategory& C,
                                           const FinTwoCategory& D,
                                           const Slice& s) {
    return mixed_whisker_left(
        C, D, s.left,
        mixed_whisker_right(C, D, mixed_elementary(C, D, s.gen), s.right));
}

// Vertical composite of a slice chain (listed target first) on a source.
inline TensorTwoCell compose_slices(const FinTwoCategory& C,
                                    const FinTwoCategory& D,
                                    const TensorOneCell& src,
                                    const std::vector<Slice>& slices) {
    TensorTwoCell acc = id_two(C, D, src);
    for (auto it = slices.rbegin(); it != slices.rend(); ++it)
        acc = vcompose_two(C, D, acc, slice_cell(C, D, *it));
    return acc;
}

inline MixedTensorTwoCell mixed_compose_slices(const FinTwoCategory& C,
                                               const FinTwoCategory& D,
                                               const TensorOneCell& src,
                                               const std::vector<Slice>& slices) {
    MixedTensorTwoCell acc = mixed_id_two(C, D, src);
    for (auto it = slices.rbegin(); it != slices.rend(); ++it)
        acc = mixed_vcompose_two(C, D, acc, mixed_slice_cell(C, D, *it));
    return acc;
}

// ---------------------------------------------------------------------------
// Canonical decomposition.

namespace detail {

inline bool is_identity_two(const FinTwoCategory& K, const std::string& a) {
    return a == K.id2(K.two(a).src);
}

// 1-based word position of the k-th occurrence of letter in word.
inline int letter_pos(const std::string& word, char letter, int k) {
    int seen = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == letter && ++seen == k) return static_cast<int>(i) + 1;
    throw internal_error("letter occurrence not found in word");
}

struct GenAt {
    TensorGenerator gen;
    int pos;
};

// Crossings between two parallel interleaving words, as (c-index, d-index)
// pairs, ordered as they must fire: descending (x - y, x + y).
inline std::vector<std::pair<int, int>> crossing_plan(const Shuffle& from,
                                                      const Shuffle& to) {
    auto ft = shuffle_to_table(from);
    auto tt = shuffle_to_table(to);
    std::vector<std::pair<int, int>> flips;
    for (int y = 1; y <= from.m; ++y)
        for (int x = 1; x <= from.n; ++x) {
            int a = ft[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)];
            int b = tt[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)];
            if (a == 0 && b == 1) flips.push_back({x, y});
            if (a == 1 && b == 0)
                throw internal_error("crossing plan would move a D-step later");
        }
    std::sort(flips.begin(), flips.end(),
              [](const std::pair<int, int>& u, const std::pair<int, int>& v) {
                  int ku = u.first - u.second, kv = v.first - v.second;
                  if (ku != kv) return ku > kv;
                  return u.first + u.second > v.first + v.second;
              });
    return flips;
}

// Emits the swap program realizing the crossing plan on word w (modified in
// place), taking the x-th c from carrs and the y-th d from darrs.
inline void emit_crossings(std::string& w,
                           const std::vector<std::pair<int, int>>& flips,
                           const std::vector<std::string>& carrs,
                           const std::vector<std::string>& darrs,
                           std::vector<GenAt>& prog) {
    for (const auto& [x, y] : flips) {
        int pos = letter_pos(w, 'c', x) - 1;  // 0-based
        if (pos + 1 >= static_cast<int>(w.size()) ||
            w[static_cast<std::size_t>(pos + 1)] != 'd')
            throw internal_error("crossing is not adjacent when scheduled");
        int dcount = static_cast<int>(
            std::count(w.begin(), w.begin() + pos + 2, 'd'));
        if (dcount != y)
            throw internal_error("crossing meets the wrong D-step");
        prog.push_back({TensorGenerator{GenKind::SwapCd,
                                        carrs[static_cast<std::size_t>(x - 1)],
                                        darrs[static_cast<std::size_t>(y - 1)],
                                        ""},
                        pos});
        std::swap(w[static_cast<std::size_t>(pos)],
                  w[static_cast<std::size_t>(pos + 1)]);
    }
}

// Shared materializer: applies prog to src, returns the slices in
// application order.
inline std::vector<Slice> run_program(const FinTwoCategory& C,
                                      const FinTwoCategory& D,
                                      const TensorOneCell& src,
                                      const TensorOneCell& want,
                                      const std::vector<GenAt>& prog,
                                      bool mixed) {
    std::vector<Slice> out;
    TensorOneCell cur = src;
    for (const auto& ga : prog) {
        auto [sl, next] = slice_on(C, D, cur, ga.pos, ga.gen, mixed);
        out.push_back(sl);
        cur = next;
    }
    if (!(cur == want))
        throw internal_error("canonical decomposition missed its target");
    return out;
}

} // namespace detail

// Decomposes an interleaved 2-cell into its canonical slice chain (listed
// target first).  Composing the chain with compose_slices recovers the cell.
inline std::vector<Slice> canonical_decomposition(const FinTwoCategory& C,
                                                  const FinTwoCategory& D,
                                                  const TensorTwoCell& a) {
    check_two(C, D, a);
    const Shuffle& ssh = a.src.shuffle;
    const Shuffle& tsh = a.tgt.shuffle;
    const Path& p = a.src.cpath;
    const Path& q = a.src.dpath;
    int nb = tsh.n, mb = tsh.m;
    IntervalMap rbar = tsh.r(), sbar = tsh.s();

    // Expanded target word: each target step widened to its preimage size.
    std::string ex;
    for (int t = 1; t <= nb + mb; ++t) {
        if (tsh.word[static_cast<std::size_t>(t - 1)] == 'c') {
            int i = rbar(t);
            ex.append(static_cast<std::size_t>(a.xi(i) - a.xi(i - 1)), 'c');
        } else {
            int j = sbar(t);
            ex.append(static_cast<std::size_t>(a.rho(j) - a.rho(j - 1)), 'd');
        }
    }

    std::vector<detail::GenAt> prog;

    // Crossings first: move every D-step that must travel left.
    std::string w = ssh.word;
    detail::emit_crossings(
        w, detail::crossing_plan(ssh, Shuffle(ssh.n, ssh.m, ex)), p.cells,
        q.cells, prog);
    if (w != ex) throw internal_error("crossings did not reach the sorted word");

    // C-side structure: per target C-step, insert a unit or merge the block.
    for (int i = 1; i <= nb; ++i) {
        int wid = a.xi(i) - a.xi(i - 1);
        if (wid == 1) continue;
        int t = detail::letter_pos(tsh.word, 'c', i);
        int pos = (i - 1) + a.rho(sbar(t - 1));
        if (wid == 0) {
            prog.push_back({TensorGenerator{GenKind::Id1CD,
                                            object_at(C, p, a.xi(i)),
                                            object_at(D, q, a.rho(sbar(t - 1))),
                                            ""},
                            pos});
        } else {
            std::string dob = object_at(D, q, a.rho(sbar(t - 1)));
            for (int k = 1; k < wid; ++k) {
                std::string acc = composite1(
                    C, segment(C, p, a.xi(i - 1), a.xi(i - 1) + k));
                prog.push_back({TensorGenerator{
                                    GenKind::CompCcD, acc,
                                    p.cells[static_cast<std::size_t>(
                                        a.xi(i - 1) + k)],
                                    dob},
                                pos});
            }
        }
    }

    // D-side structure.
    for (int j = 1; j <= mb; ++j) {
        int wid = a.rho(j) - a.rho(j - 1);
        if (wid == 1) continue;
        int t = detail::letter_pos(tsh.word, 'd', j);
        int pos = rbar(t - 1) + (j - 1);
        std::string cob = object_at(C, p, a.xi(rbar(t - 1)));
        if (wid == 0) {
            prog.push_back({TensorGenerator{GenKind::IdC1D, cob,
                                            object_at(D, q, a.rho(j)), ""},
                            pos});
        } else {
            for (int k = 1; k < wid; ++k) {
                std::string acc = composite1(
                    D, segment(D, q, a.rho(j - 1), a.rho(j - 1) + k));
                prog.push_back({TensorGenerator{
                                    GenKind::CompCdd, cob, acc,
                                    q.cells[static_cast<std::size_t>(
                                        a.rho(j - 1) + k)]},
                                pos});
            }
        }
    }

    // C-side comparison cells (identity components are left implicit).
    for (int i = 1; i <= nb; ++i) {
        const std::string& comp = a.alpha[static_cast<std::size_t>(i - 1)];
        if (detail::is_identity_two(C, comp)) continue;
        int t = detail::letter_pos(tsh.word, 'c', i);
        prog.push_back({TensorGenerator{GenKind::GammaBoxD, comp,
                                        object_at(D, q, a.rho(sbar(t - 1))), ""},
                        t - 1});
    }

    // D-side comparison cells.
    for (int j = 1; j <= mb; ++j) {
        const std::string& comp = a.beta[static_cast<std::size_t>(j - 1)];
        if (detail::is_identity_two(D, comp)) continue;
        int t = detail::letter_pos(tsh.word, 'd', j);
        prog.push_back({TensorGenerator{GenKind::CBoxDelta,
                                        object_at(C, p, a.xi(rbar(t - 1))), comp,
                                        ""},
                        t - 1});
    }

    std::vector<Slice> applied =
        detail::run_program(C, D, a.src, a.tgt, prog, false);
    return {applied.rbegin(), applied.rend()};
}

// Mixed-orientation canonical decomposition: comparison cells on the d side
// fire first (on source positions), then unit removals / splits, then
// crossings, then the C-side structure and comparison cells.
inline std::vector<Slice> mixed_canonical_decomposition(
    const FinTwoCategory& C, const FinTwoCategory& D,
    const MixedTensorTwoCell& a) {
    check_mixed_two(C, D, a);
    const Shuffle& ssh = a.src.shuffle;
    const Shuffle& tsh = a.tgt.shuffle;
    const Path& p = a.src.cpath;
    const Path& q = a.src.dpath;
    const Path& qb = a.tgt.dpath;
    int m = ssh.m, nb = tsh.n;
    IntervalMap r = ssh.r();
    IntervalMap sbar = tsh.s();

    std::vector<detail::GenAt> prog;

    // D-side comparison cells, at source positions.
    for (int j = 1; j <= m; ++j) {
        const std::string& comp = a.beta[static_cast<std::size_t>(j - 1)];
        if (detail::is_identity_two(D, comp)) continue;
        int t = detail::letter_pos(ssh.word, 'd', j);
        prog.push_back({TensorGenerator{GenKind::CBoxDelta,
                                        object_at(C, p, r(t - 1)), comp, ""},
                        t - 1});
    }

    // D-side structure: remove identity steps, split composite steps.
    for (int j = 1; j <= m; ++j) {
        int wid = a.rho_rev(j) - a.rho_rev(j - 1);
        if (wid == 1) continue;
        int t = detail::letter_pos(ssh.word, 'd', j);
        int pos = r(t - 1) + a.rho_rev(j - 1);
        std::string cob = object_at(C, p, r(t - 1));
        if (wid == 0) {
            prog.push_back({TensorGenerator{GenKind::IdC1D, cob,
                                            object_at(D, qb, a.rho_rev(j)), ""},
                            pos});
        } else {
            for (int k = wid - 1; k >= 1; --k) {
                std::string acc = composite1(
                    D, segment(D, qb, a.rho_rev(j - 1), a.rho_rev(j - 1) + k));
                prog.push_back({TensorGenerator{
                                    GenKind::CompCdd, cob, acc,
                                    qb.cells[static_cast<std::size_t>(
                                        a.rho_rev(j - 1) + k)]},
                                pos});
            }
        }
    }

    // Crossings between the D-expanded source word and the C-expanded
    // target word.
    std::string ws, wt;
    for (int t = 1; t <= ssh.n + ssh.m; ++t) {
        if (ssh.word[static_cast<std::size_t>(t - 1)] == 'c') {
            ws += 'c';
        } else {
            int j = ssh.s()(t);
            ws.append(static_cast<std::size_t>(a.rho_rev(j) - a.rho_rev(j - 1)),
                      'd');
        }
    }
    for (int t = 1; t <= tsh.n + tsh.m; ++t) {
        if (tsh.word[static_cast<std::size_t>(t - 1)] == 'c') {
            int i = tsh.r()(t);
            wt.append(static_cast<std::size_t>(a.xi(i) - a.xi(i - 1)), 'c');
        } else {
            wt += 'd';
        }
    }
    int nws = static_cast<int>(std::count(ws.begin(), ws.end(), 'c'));
    int nwt = static_cast<int>(std::count(wt.begin(), wt.end(), 'c'));
    std::string w = ws;
    detail::emit_crossings(
        w,
        detail::crossing_plan(
            Shuffle(nws, static_cast<int>(ws.size()) - nws, ws),
            Shuffle(nwt, static_cast<int>(wt.size()) - nwt, wt)),
        p.cells, qb.cells, prog);
    if (w != wt) throw internal_error("crossings did not reach the sorted word");

    // C-side structure, against the target word.
    for (int i = 1; i <= nb; ++i) {
        int wid = a.xi(i) - a.xi(i - 1);
        if (wid == 1) continue;
        int t = detail::letter_pos(tsh.word, 'c', i);
        int pos = (i - 1) + sbar(t - 1);
        std::string dob = object_at(D, qb, sbar(t - 1));
        if (wid == 0) {
            prog.push_back({TensorGenerator{GenKind::Id1CD,
                                            object_at(C, p, a.xi(i)), dob, ""},
                            pos});
        } else {
            for (int k = 1; k < wid; ++k) {
                std::string acc = composite1(
                    C, segment(C, p, a.xi(i - 1), a.xi(i - 1) + k));
                prog.push_back({TensorGenerator{
                                    GenKind::CompCcD, acc,
                                    p.cells[static_cast<std::size_t>(
                                        a.xi(i - 1) + k)],
                                    dob},
                                pos});
            }
        }
    }

    // C-side comparison cells.
    for (int i = 1; i <= nb; ++i) {
        const std::string& comp = a.alpha[static_cast<std::size_t>(i - 1)];
        if (detail::is_identity_two(C, comp)) continue;
        int t = detail::letter_pos(tsh.word, 'c', i);
        prog.push_back({TensorGenerator{GenKind::GammaBoxD, comp,
                                        object_at(D, qb, sbar(t - 1)), ""},
                        t - 1});
    }

    std::vector<Slice> applied =
        detail::run_program(C, D, a.src, a.tgt, prog, true);
    return {applied.rbegin(), applied.rend()};
}

// ---------------------------------------------------------------------------
// Relation instances.

// One item of a relation layer: either a generator or an untouched edge.
struct RelItem {
    bool is_gen = false;
    TensorGenerator gen{};
    bool cside = false;    // edge orientation when !is_gen
    std::string a, b;      // edge data: cside ? (c-arrow, D-object)
                           //                  : (C-object, d-arrow)
    bool operator==(const RelItem&) const = default;

    static RelItem g(TensorGenerator gg) {
        RelItem it;
        it.is_gen = true;
        it.gen = std::move(gg);
        return it;
    }
    static RelItem ce(std::string c, std::string p) {
        RelItem it;
        it.cside = true;
        it.a = std::move(c);
        it.b = std::move(p);
        return it;
    }
    static RelItem de(std::string x, std::string d) {
        RelItem it;
        it.a = std::move(x);
        it.b = std::move(d);
        return it;
    }
};

using RelLayer = std::vector<RelItem>;  // items in path order, earliest first

struct RelationInstance {
    std::string family;
    std::string detail;
    std::string at_c, at_p;           // starting objects of the source
    std::vector<RelItem> source;      // source edge path (edges only)
    std::vector<RelLayer> lhs, rhs;   // layers, first applied first; an empty
                                      // layer list is the identity
};

namespace detail {

// Families whose instances are shared between the two orientations: both
// comparison-cell families, their vertical and horizontal functoriality,
// naturality of the swap, and everything purely on the C side.
inline void shared_relation_instances(const FinTwoCategory& C,
                                      const FinTwoCategory& D,
                                      std::vector<RelationInstance>& out) {
    using G = GenKind;
    // Comparison cells preserve identities.
    for (const auto& x : C.objects)
        for (const auto& [d1, d1c] : D.one_cells)
            out.push_back({"id-d",
                           "identity comparison on " + dedge_key(x, d1),
                           x,
                           d1c.src,
                           {RelItem::de(x, d1)},
                           {{RelItem::g({G::CBoxDelta, x, D.id2(d1), ""})}},
                           {}});
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& p : D.objects)
            out.push_back({"id-c",
                           "identity comparison on " + cedge_key(c1, p),
                           c1c.src,
                           p,
                           {RelItem::ce(c1, p)},
                           {{RelItem::g({G::GammaBoxD, C.id2(c1), p, ""})}},
                           {}});
    // Comparison cells preserve vertical composition.
    for (const auto& x : C.objects)
        for (const auto& [u, uc] : D.two_cells)
            for (const auto& [v, vc] : D.two_cells) {
                if (vc.src != uc.tgt) continue;
                out.push_back({"vcomp-d",
                               "vertical " + v + " after " + u + " at " + x,
                               x,
                               D.one(uc.src).src,
                               {RelItem::de(x, uc.src)},
                               {{RelItem::g({G::CBoxDelta, x, u, ""})},
                                {RelItem::g({G::CBoxDelta, x, v, ""})}},
                               {{RelItem::g({G::CBoxDelta, x, D.vcomp(v, u), ""})}}});
            }
    for (const auto& [u, uc] : C.two_cells)
        for (const auto& [v, vc] : C.two_cells) {
            if (vc.src != uc.tgt) continue;
            for (const auto& p : D.objects)
                out.push_back({"vcomp-c",
                               "vertical " + v + " after " + u + " at " + p,
                               C.one(uc.src).src,
                               p,
                               {RelItem::ce(uc.src, p)},
                               {{RelItem::g({G::GammaBoxD, u, p, ""})},
                                {RelItem::g({G::GammaBoxD, v, p, ""})}},
                               {{RelItem::g({G::GammaBoxD, C.vcomp(v, u), p, ""})}}});
        }
    // Naturality of the swap in both comparison cells.
    for (const auto& [u, uc] : C.two_cells)
        for (const auto& [v, vc] : D.two_cells) {
            std::string c0 = uc.src, c1 = uc.tgt;
            std::string d0 = vc.src, d1 = vc.tgt;
            std::string xs = C.one(c0).src, xt = C.one(c0).tgt;
            std::string ps = D.one(d0).src, pt = D.one(d0).tgt;
            out.push_back(
                {"swap-natural",
                 "swap past " + u + " and " + v,
                 xs,
                 ps,
                 {RelItem::ce(c0, ps), RelItem::de(xt, d0)},
                 {{RelItem::g({GenKind::GammaBoxD, u, ps, ""}),
                   RelItem::g({GenKind::CBoxDelta, xt, v, ""})},
                  {RelItem::g({GenKind::SwapCd, c1, d1, ""})}},
                 {{RelItem::g({GenKind::SwapCd, c0, d0, ""})},
                  {RelItem::g({GenKind::CBoxDelta, xs, v, ""}),
                   RelItem::g({GenKind::GammaBoxD, u, pt, ""})}}});
        }
    // C-side unit laws.
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& p : D.objects) {
            out.push_back(
                {"unit-c",
                 "left unit on " + cedge_key(c1, p),
                 c1c.src,
                 p,
                 {RelItem::ce(c1, p)},
                 {{RelItem::g({G::Id1CD, c1c.src, p, ""}), RelItem::ce(c1, p)},
                  {RelItem::g({G::CompCcD, C.id1(c1c.src), c1, p})}},
                 {}});
            out.push_back(
                {"unit-c",
                 "right unit on " + cedge_key(c1, p),
                 c1c.src,
                 p,
                 {RelItem::ce(c1, p)},
                 {{RelItem::ce(c1, p), RelItem::g({G::Id1CD, c1c.tgt, p, ""})},
                  {RelItem::g({G::CompCcD, c1, C.id1(c1c.tgt), p})}},
                 {}});
        }
    // C-side associativity.
    for (const auto& [u, ucell] : C.one_cells)
        for (const auto& [v, vcell] : C.one_cells) {
            if (ucell.tgt != vcell.src) continue;
            for (const auto& [w2, wcell] : C.one_cells) {
                if (vcell.tgt != wcell.src) continue;
                for (const auto& p : D.objects)
                    out.push_back(
                        {"assoc-c",
                         "bracketing " + u + "," + v + "," + w2 + " at " + p,
                         ucell.src,
                         p,
                         {RelItem::ce(u, p), RelItem::ce(v, p),
                          RelItem::ce(w2, p)},
                         {{RelItem::ce(u, p), RelItem::g({G::CompCcD, v, w2, p})},
                          {RelItem::g({G::CompCcD, u, C.comp1(w2, v), p})}},
                         {{RelItem::g({G::CompCcD, u, v, p}), RelItem::ce(w2, p)},
                          {RelItem::g({G::CompCcD, C.comp1(v, u), w2, p})}}});
            }
        }
    // Swapping past an identity C-step, and past a composite C-step.
    for (const auto& x : C.objects)
        for (const auto& [d1, d1c] : D.one_cells)
            out.push_back(
                {"swap-id-c",
                 "swap " + C.id1(x) + " past " + d1,
                 x,
                 d1c.src,
                 {RelItem::de(x, d1)},
                 {{RelItem::g({G::Id1CD, x, d1c.src, ""}), RelItem::de(x, d1)},
                  {RelItem::g({G::SwapCd, C.id1(x), d1, ""})}},
                 {{RelItem::de(x, d1), RelItem::g({G::Id1CD, x, d1c.tgt, ""})}}});
    for (const auto& [u, ucell] : C.one_cells)
        for (const auto& [v, vcell] : C.one_cells) {
            if (ucell.tgt != vcell.src) continue;
            for (const auto& [d1, d1c] : D.one_cells)
                out.push_back(
                    {"swap-comp-c",
                     "swap " + C.comp1(v, u) + " past " + d1,
                     ucell.src,
                     d1c.src,
                     {RelItem::ce(u, d1c.src), RelItem::ce(v, d1c.src),
                      RelItem::de(vcell.tgt, d1)},
                     {{RelItem::g({G::CompCcD, u, v, d1c.src}),
                       RelItem::de(vcell.tgt, d1)},
                      {RelItem::g({G::SwapCd, C.comp1(v, u), d1, ""})}},
                     {{RelItem::ce(u, d1c.src), RelItem::g({G::SwapCd, v, d1, ""})},
                      {RelItem::g({G::SwapCd, u, d1, ""}),
                       RelItem::ce(v, d1c.tgt)},
                      {RelItem::de(ucell.src, d1),
                       RelItem::g({G::CompCcD, u, v, d1c.tgt})}}});
        }
}

} // namespace detail

// All defining relation instances of the tensor computad over C and D.
inline std::vector<RelationInstance> relation_instances(const FinTwoCategory& C,
                                                        const FinTwoCategory& D) {
    using G = GenKind;
    std::vector<RelationInstance> out;
    detail::shared_relation_instances(C, D, out);
    // Comparison cells against the D-side composition structure.
    for (const auto& x : C.objects)
        for (const auto& [u, uc] : D.two_cells)
            for (const auto& [v, vc] : D.two_cells) {
                if (D.one(uc.src).tgt != D.one(vc.src).src) continue;
                std::string d0 = uc.src, d1 = uc.tgt;
                std::string e0 = vc.src, e1 = vc.tgt;
                out.push_back(
                    {"comp-natural-d",
                     "merge past " + u + " and " + v + " at " + x,
                     x,
                     D.one(d0).src,
                     {RelItem::de(x, d0), RelItem::de(x, e0)},
                     {{RelItem::g({G::CBoxDelta, x, u, ""}),
                       RelItem::g({G::CBoxDelta, x, v, ""})},
                      {RelItem::g({G::CompCdd, x, d1, e1})}},
                     {{RelItem::g({G::CompCdd, x, d0, e0})},
                      {RelItem::g({G::CBoxDelta, x, D.hcomp2(v, u), ""})}}});
            }
    for (const auto& [u, uc] : C.two_cells)
        for (const auto& [v, vc] : C.two_cells) {
            if (C.one(uc.src).tgt != C.one(vc.src).src) continue;
            for (const auto& p : D.objects) {
                std::string c0 = uc.src, c1 = uc.tgt;
                std::string e0 = vc.src, e1 = vc.tgt;
                out.push_back(
                    {"comp-natural-c",
                     "merge past " + u + " and " + v + " at " + p,
                     C.one(c0).src,
                     p,
                     {RelItem::ce(c0, p), RelItem::ce(e0, p)},
                     {{RelItem::g({G::GammaBoxD, u, p, ""}),
                       RelItem::g({G::GammaBoxD, v, p, ""})},
                      {RelItem::g({G::CompCcD, c1, e1, p})}},
                     {{RelItem::g({G::CompCcD, c0, e0, p})},
                      {RelItem::g({G::GammaBoxD, C.hcomp2(v, u), p, ""})}}});
            }
        }
    // D-side unit laws.
    for (const auto& x : C.objects)
        for (const auto& [d1, d1c] : D.one_cells) {
            out.push_back(
                {"unit-d",
                 "left unit on " + dedge_key(x, d1),
                 x,
                 d1c.src,
                 {RelItem::de(x, d1)},
                 {{RelItem::g({G::IdC1D, x, d1c.src, ""}), RelItem::de(x, d1)},
                  {RelItem::g({G::CompCdd, x, D.id1(d1c.src), d1})}},
                 {}});
            out.push_back(
                {"unit-d",
                 "right unit on " + dedge_key(x, d1),
                 x,
                 d1c.src,
                 {RelItem::de(x, d1)},
                 {{RelItem::de(x, d1), RelItem::g({G::IdC1D, x, d1c.tgt, ""})},
                  {RelItem::g({G::CompCdd, x, d1, D.id1(d1c.tgt)})}},
                 {}});
        }
    // D-side associativity.
    for (const auto& x : C.objects)
        for (const auto& [u, ucell] : D.one_cells)
            for (const auto& [v, vcell] : D.one_cells) {
                if (ucell.tgt != vcell.src) continue;
                for (const auto& [w2, wcell] : D.one_cells) {
                    if (vcell.tgt != wcell.src) continue;
                    out.push_back(
                        {"assoc-d",
                         "bracketing " + u + "," + v + "," + w2 + " at " + x,
                         x,
                         ucell.src,
                         {RelItem::de(x, u), RelItem::de(x, v),
                          RelItem::de(x, w2)},
                         {{RelItem::de(x, u), RelItem::g({G::CompCdd, x, v, w2})},
                          {RelItem::g({G::CompCdd, x, u, D.comp1(w2, v)})}},
                         {{RelItem::g({G::CompCdd, x, u, v}), RelItem::de(x, w2)},
                          {RelItem::g({G::CompCdd, x, D.comp1(v, u), w2})}}});
                }
            }
    // Swapping past an identity D-step, and past a composite D-step.
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& p : D.objects)
            out.push_back(
                {"swap-id-d",
                 "swap " + c1 + " past " + D.id1(p),
                 c1c.src,
                 p,
                 {RelItem::ce(c1, p)},
                 {{RelItem::ce(c1, p), RelItem::g({G::IdC1D, c1c.tgt, p, ""})},
                  {RelItem::g({G::SwapCd, c1, D.id1(p), ""})}},
                 {{RelItem::g({G::IdC1D, c1c.src, p, ""}), RelItem::ce(c1, p)}}});
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& [u, ucell] : D.one_cells)
            for (const auto& [v, vcell] : D.one_cells) {
                if (ucell.tgt != vcell.src) continue;
                out.push_back(
                    {"swap-comp-d",
                     "swap " + c1 + " past " + D.comp1(v, u),
                     c1c.src,
                     ucell.src,
                     {RelItem::ce(c1, ucell.src), RelItem::de(c1c.tgt, u),
                      RelItem::de(c1c.tgt, v)},
                     {{RelItem::ce(c1, ucell.src),
                       RelItem::g({G::CompCdd, c1c.tgt, u, v})},
                      {RelItem::g({G::SwapCd, c1, D.comp1(v, u), ""})}},
                     {{RelItem::g({G::SwapCd, c1, u, ""}),
                       RelItem::de(c1c.tgt, v)},
                      {RelItem::de(c1c.src, u),
                       RelItem::g({G::SwapCd, c1, v, ""})},
                      {RelItem::g({G::CompCdd, c1c.src, u, v}),
                       RelItem::ce(c1, vcell.tgt)}}});
            }
    return out;
}

// The mixed-orientation relation suite: the shared families verbatim, and
// the D-side structural families rebuilt around the reversed unit and
// composition generators.
inline std::vector<RelationInstance> mixed_relation_instances(
    const FinTwoCategory& C, const FinTwoCategory& D) {
    using G = GenKind;
    std::vector<RelationInstance> out;
    detail::shared_relation_instances(C, D, out);
    // C-side merge naturality is unchanged.
    for (const auto& [u, uc] : C.two_cells)
        for (const auto& [v, vc] : C.two_cells) {
            if (C.one(uc.src).tgt != C.one(vc.src).src) continue;
            for (const auto& p : D.objects) {
                std::string c0 = uc.src, c1 = uc.tgt;
                std::string e0 = vc.src, e1 = vc.tgt;
                out.push_back(
                    {"comp-natural-c",
                     "merge past " + u + " and " + v + " at " + p,
                     C.one(c0).src,
                     p,
                     {RelItem::ce(c0, p), RelItem::ce(e0, p)},
                     {{RelItem::g({G::GammaBoxD, u, p, ""}),
                       RelItem::g({G::GammaBoxD, v, p, ""})},
                      {RelItem::g({G::CompCcD, c1, e1, p})}},
                     {{RelItem::g({G::CompCcD, c0, e0, p})},
                      {RelItem::g({G::GammaBoxD, C.hcomp2(v, u), p, ""})}}});
            }
        }
    // D-side splits against the comparison cells.
    for (const auto& x : C.objects)
        for (const auto& [u, uc] : D.two_cells)
            for (const auto& [v, vc] : D.two_cells) {
                if (D.one(uc.src).tgt != D.one(vc.src).src) continue;
                std::string d0 = uc.src, d1 = uc.tgt;
                std::string e0 = vc.src, e1 = vc.tgt;
                out.push_back(
                    {"comp-natural-d",
                     "split past " + u + " and " + v + " at " + x,
                     x,
                     D.one(d0).src,
                     {RelItem::de(x, D.comp1(e0, d0))},
                     {{RelItem::g({G::CBoxDelta, x, D.hcomp2(v, u), ""})},
                      {RelItem::g({G::CompCdd, x, d1, e1})}},
                     {{RelItem::g({G::CompCdd, x, d0, e0})},
                      {RelItem::g({G::CBoxDelta, x, u, ""}),
                       RelItem::g({G::CBoxDelta, x, v, ""})}}});
            }
    // D-side unit laws around the reversed generators.
    for (const auto& x : C.objects)
        for (const auto& [d1, d1c] : D.one_cells) {
            out.push_back(
                {"unit-d",
                 "left unit on " + dedge_key(x, d1),
                 x,
                 d1c.src,
                 {RelItem::de(x, d1)},
                 {{RelItem::g({G::CompCdd, x, D.id1(d1c.src), d1})},
                  {RelItem::g({G::IdC1D, x, d1c.src, ""}), RelItem::de(x, d1)}},
                 {}});
            out.push_back(
                {"unit-d",
                 "right unit on " + dedge_key(x, d1),
                 x,
                 d1c.src,
                 {RelItem::de(x, d1)},
                 {{RelItem::g({G::CompCdd, x, d1, D.id1(d1c.tgt)})},
                  {RelItem::de(x, d1), RelItem::g({G::IdC1D, x, d1c.tgt, ""})}},
                 {}});
        }
    // D-side associativity of splitting.
    for (const auto& x : C.objects)
        for (const auto& [u, ucell] : D.one_cells)
            for (const auto& [v, vcell] : D.one_cells) {
                if (ucell.tgt != vcell.src) continue;
                for (const auto& [w2, wcell] : D.one_cells) {
                    if (vcell.tgt != wcell.src) continue;
                    out.push_back(
                        {"assoc-d",
                         "bracketing " + u + "," + v + "," + w2 + " at " + x,
                         x,
                         ucell.src,
                         {RelItem::de(x, D.comp1(w2, D.comp1(v, u)))},
                         {{RelItem::g({G::CompCdd, x, D.comp1(v, u), w2})},
                          {RelItem::g({G::CompCdd, x, u, v}),
                           RelItem::de(x, w2)}},
                         {{RelItem::g({G::CompCdd, x, u, D.comp1(w2, v)})},
                          {RelItem::de(x, u),
                           RelItem::g({G::CompCdd, x, v, w2})}}});
                }
            }
    // Swapping against the reversed unit and split.
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& p : D.objects)
            out.push_back(
                {"swap-id-d",
                 "swap " + c1 + " past " + D.id1(p),
                 c1c.src,
                 p,
                 {RelItem::ce(c1, p), RelItem::de(c1c.tgt, D.id1(p))},
                 {{RelItem::g({G::SwapCd, c1, D.id1(p), ""})},
                  {RelItem::g({G::IdC1D, c1c.src, p, ""}), RelItem::ce(c1, p)}},
                 {{RelItem::ce(c1, p), RelItem::g({G::IdC1D, c1c.tgt, p, ""})}}});
    for (const auto& [c1, c1c] : C.one_cells)
        for (const auto& [u, ucell] : D.one_cells)
            for (const auto& [v, vcell] : D.one_cells) {
                if (ucell.tgt != vcell.src) continue;
                out.push_back(
                    {"swap-comp-d",
                     "swap " + c1 + " past " + D.comp1(v, u),
                     c1c.src,
                     ucell.src,
                     {RelItem::ce(c1, ucell.src),
                      RelItem::de(c1c.tgt, D.comp1(v, u))},
                     {{RelItem::g({G::SwapCd, c1, D.comp1(v, u), ""})},
                      {RelItem::g({G::CompCdd, c1c.src, u, v}),
                       RelItem::ce(c1, vcell.tgt)}},
                     {{RelItem::ce(c1, ucell.src),
                       RelItem::g({G::CompCdd, c1c.tgt, u, v})},
                      {RelItem::g({G::SwapCd, c1, u, ""}),
                       RelItem::de(c1c.tgt, v)},
                      {RelItem::de(c1c.src, u),
                       RelItem::g({G::SwapCd, c1, v, ""})}}});
            }
    return out;
}

// ---------------------------------------------------------------------------
// Translating relation instances into interleaved cells (used to verify the
// relations hold in the tensor itself).

namespace detail {

inline TensorOneCell rel_item_edge_cell(const FinTwoCategory& C,
                                        const FinTwoCategory& D,
                                        const RelItem& it) {
    if (it.is_gen) throw internal_error("edge cell requested for a generator");
    return it.cside ? cstep(C, it.a, it.b) : dstep(D, it.a, it.b);
}

} // namespace detail

inline TensorOneCell rel_source_cell(const FinTwoCategory& C,
                                     const FinTwoCategory& D,
                                     const RelationInstance& inst) {
    TensorOneCell acc = identity_cell(C, D, inst.at_c, inst.at_p);
    for (const auto& it : inst.source)
        acc = hcompose_one(C, D, acc, detail::rel_item_edge_cell(C, D, it));
    return acc;
}

inline TensorTwoCell rel_side_cell(const FinTwoCategory& C,
                                   const FinTwoCategory& D,
                                   const RelationInstance& inst,
                                   const std::vector<RelLayer>& side) {
    if (side.empty()) return id_two(C, D, rel_source_cell(C, D, inst));
    TensorTwoCell acc;
    bool first_layer = true;
    for (const auto& layer : side) {
        if (layer.empty()) throw shape_error("empty relation layer");
        TensorTwoCell lacc;
        bool first = true;
        for (const auto& it : layer) {
            TensorTwoCell piece =
                it.is_gen ? elementary(C, D, it.gen)
                          : id_two(C, D, detail::rel_item_edge_cell(C, D, it));
            lacc = first ? piece : hcompose_two(C, D, lacc, piece);
            first = false;
        }
        acc = first_layer ? lacc : vcompose_two(C, D, acc, lacc);
        first_layer = false;
    }
    return acc;
}

inline MixedTensorTwoCell mixed_rel_side_cell(const FinTwoCategory& C,
                                              const FinTwoCategory& D,
                                              const RelationInstance& inst,
                                              const std::vector<RelLayer>& side) {
    if (side.empty()) return mixed_id_two(C, D, rel_source_cell(C, D, inst));
    MixedTensorTwoCell acc;
    bool first_layer = true;
    for (const auto& layer : side) {
        if (layer.empty()) throw shape_error("empty relation layer");
        MixedTensorTwoCell lacc;
        bool first = true;
        for (const auto& it : layer) {
            MixedTensorTwoCell piece =
                it.is_gen
                    ? mixed_elementary(C, D, it.gen)
                    : mixed_id_two(C, D, detail::rel_item_edge_cell(C, D, it));
            lacc = first ? piece : mixed_hcompose_two(C, D, lacc, piece);
            first = false;
        }
        acc = first_layer ? lacc : mixed_vcompose_two(C, D, acc, lacc);
        first_layer = false;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Assignments of the tensor computad into a finite target.

struct GeneratorAssignment {
    FinTwoCategory target;
    std::map<std::string, std::string> node;  // node key  -> object
    std::map<std::string, std::string> edge;  // edge key  -> 1-cell
    std::map<std::string, std::string> gen;   // generator key -> 2-cell
};

namespace detail {

inline const std::string& va_node(const GeneratorAssignment& V,
                                  const std::string& k) {
    auto it = V.node.find(k);
    if (it == V.node.end())
        throw reference_error("assignment missing node " + k);
    return it->second;
}
inline const std::string& va_edge(const GeneratorAssignment& V,
                                  const std::string& k) {
    auto it = V.edge.find(k);
    if (it == V.edge.end())
        throw reference_error("assignment missing edge " + k);
    return it->second;
}
inline const std::string& va_gen(const GeneratorAssignment& V,
                                 const std::string& k) {
    auto it = V.gen.find(k);
    if (it == V.gen.end())
        throw reference_error("assignment missing generator " + k);
    return it->second;
}

} // namespace detail

// Image of an interleaved 1-cell: the target-composite of the edge images,
// later steps composed onto earlier ones.
inline std::string evaluate_one(const FinTwoCategory& C, const FinTwoCategory& D,
                                const GeneratorAssignment& V,
                                const TensorOneCell& f) {
    check_one(C, D, f);
    const FinTwoCategory& E = V.target;
    IntervalMap r = f.shuffle.r(), s = f.shuffle.s();
    std::string acc = E.id1(
        detail::va_node(V, node_key(f.cpath.start, f.dpath.start)));
    int len = f.shuffle.n + f.shuffle.m;
    for (int t = 1; t <= len; ++t) {
        std::string img;
        if (f.shuffle.word[static_cast<std::size_t>(t - 1)] == 'c')
            img = detail::va_edge(
                V, cedge_key(f.cpath.cells[static_cast<std::size_t>(r(t) - 1)],
                             object_at(D, f.dpath, s(t))));
        else
            img = detail::va_edge(
                V, dedge_key(object_at(C, f.cpath, r(t)),
                             f.dpath.cells[static_cast<std::size_t>(s(t) - 1)]));
        acc = E.comp1(img, acc);
    }
    return acc;
}

// Totality and boundary typing of an assignment; does not look at the
// relations.  The mixed flag selects the mixed boundaries of the reversed
// generators.
inline std::vector<Violation> validate_assignment_typing(
    const FinTwoCategory& C, const FinTwoCategory& D,
    const GeneratorAssignment& V, bool mixed = false) {
    std::vector<Violation> out;
    const FinTwoCategory& E = V.target;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) {
            std::string k = node_key(x, p);
            auto it = V.node.find(k);
            if (it == V.node.end())
                out.push_back({"assignment-node", {k}, "no image assigned"});
            else if (!E.has_object(it->second))
                out.push_back({"assignment-node", {k, it->second},
                               "image is not a target object"});
        }
    // Edge keys from both readings; a shared key is irrecoverably ambiguous.
    std::map<std::string, std::pair<std::string, std::string>> expected;
    std::set<std::string> creading;
    for (const auto& [c1, cc] : C.one_cells)
        for (const auto& p : D.objects) {
            expected[cedge_key(c1, p)] = {node_key(cc.src, p),
                                          node_key(cc.tgt, p)};
            creading.insert(cedge_key(c1, p));
        }
    for (const auto& x : C.objects)
        for (const auto& [d1, dc] : D.one_cells) {
            std::string k = dedge_key(x, d1);
            if (creading.count(k)) {
                out.push_back({"assignment-edge-ambiguous", {k},
                               "edge key names both a C-step and a D-step"});
                continue;
            }
            expected[k] = {node_key(x, dc.src), node_key(x, dc.tgt)};
        }
    for (const auto& [k, ends] : expected) {
        auto it = V.edge.find(k);
        if (it == V.edge.end()) {
            out.push_back({"assignment-edge", {k}, "no image assigned"});
            continue;
        }
        if (!E.one_cells.count(it->second)) {
            out.push_back({"assignment-edge", {k, it->second},
                           "image is not a target 1-cell"});
            continue;
        }
        auto s = V.node.find(ends.first);
        auto t = V.node.find(ends.second);
        if (s == V.node.end() || t == V.node.end()) continue;  // flagged above
        if (E.one(it->second).src != s->second ||
            E.one(it->second).tgt != t->second)
            out.push_back({"assignment-edge-boundary", {k, it->second},
                           "image runs " + E.one(it->second).src + " -> " +
                               E.one(it->second).tgt + ", wanted " + s->second +
                               " -> " + t->second});
    }
    for (const auto& g : tensor_generators(C, D)) {
        std::string k = gen_key(g);
        auto it = V.gen.find(k);
        if (it == V.gen.end()) {
            out.push_back({"assignment-gen", {k}, "no image assigned"});
            continue;
        }
        if (!E.two_cells.count(it->second)) {
            out.push_back({"assignment-gen", {k, it->second},
                           "image is not a target 2-cell"});
            continue;
        }
        std::string s1, t1;
        try {
            s1 = evaluate_one(C, D, V, gen_source(C, D, g, mixed));
            t1 = evaluate_one(C, D, V, gen_target(C, D, g, mixed));
        } catch (const reference_error&) {
            continue;  // missing pieces already flagged
        }
        if (E.two(it->second).src != s1 || E.two(it->second).tgt != t1)
            out.push_back({"assignment-gen-boundary", {k, it->second},
                           "image runs " + E.two(it->second).src + " => " +
                               E.two(it->second).tgt + ", wanted " + s1 +
                               " => " + t1});
    }
    return out;
}

namespace detail {

inline std::string eval_rel_item(const GeneratorAssignment& V,
                                 const RelItem& it) {
    const FinTwoCategory& E = V.target;
    if (it.is_gen) return va_gen(V, gen_key(it.gen));
    return E.id2(va_edge(V, it.cside ? cedge_key(it.a, it.b)
                                     : dedge_key(it.a, it.b)));
}

inline std::string eval_rel_side(const GeneratorAssignment& V,
                                 const RelationInstance& inst,
                                 const std::vector<RelLayer>& side) {
    const FinTwoCategory& E = V.target;
    if (side.empty()) {
        std::string acc = E.id1(va_node(V, node_key(inst.at_c, inst.at_p)));
        for (const auto& it : inst.source)
            acc = E.comp1(va_edge(V, it.cside ? cedge_key(it.a, it.b)
                                              : dedge_key(it.a, it.b)),
                          acc);
        return E.id2(acc);
    }
    std::string acc;
    bool first_layer = true;
    for (const auto& layer : side) {
        if (layer.empty()) throw shape_error("empty relation layer");
        std::string lacc;
        bool first = true;
        for (const auto& it : layer) {
            std::string piece = eval_rel_item(V, it);
            lacc = first ? piece : E.hcomp2(piece, lacc);
            first = false;
        }
        acc = first_layer ? lacc : E.vcomp(lacc, acc);
        first_layer = false;
    }
    return acc;
}

inline std::vector<Violation> check_relations_on(
    const GeneratorAssignment& V, const std::vector<RelationInstance>& insts) {
    std::vector<Violation> out;
    for (const auto& inst : insts) {
        try {
            std::string l = eval_rel_side(V, inst, inst.lhs);
            std::string r = eval_rel_side(V, inst, inst.rhs);
            if (l != r)
                out.push_back({inst.family, {l, r}, inst.detail});
        } catch (const reference_error& e) {
            out.push_back({inst.family, {}, inst.detail +
                                                ": evaluation failed: " +
                                                e.what()});
        }
    }
    return out;
}

} // namespace detail

inline std::vector<Violation> check_relations(const FinTwoCategory& C,
                                              const FinTwoCategory& D,
                                              const GeneratorAssignment& V) {
    return detail::check_relations_on(V, relation_instances(C, D));
}

inline std::vector<Violation> mixed_check_relations(const FinTwoCategory& C,
                                                    const FinTwoCategory& D,
                                                    const GeneratorAssignment& V) {
    return detail::check_relations_on(V, mixed_relation_instances(C, D));
}

// An assignment that passed typing and its relation suite; evaluate_two and
// mixed_evaluate_two only accept these.
struct CheckedAssignment {
    GeneratorAssignment data;
    bool mixed = false;
};

inline CheckedAssignment check_assignment(const FinTwoCategory& C,
                                          const FinTwoCategory& D,
                                          const GeneratorAssignment& V,
                                          bool mixed = false) {
    std::vector<Violation> vio = validate_assignment_typing(C, D, V, mixed);
    if (vio.empty())
        vio = mixed ? mixed_check_relations(C, D, V) : check_relations(C, D, V);
    if (!vio.empty())
        throw contract_error("assignment rejected with " +
                             std::to_string(vio.size()) +
                             " violation(s); first: " + vio.front().law + ": " +
                             vio.front().detail);
    return {V, mixed};
}

// Image of a slice chain (listed target first) on a source 1-cell.
inline std::string eval_slices(const FinTwoCategory& C, const FinTwoCategory& D,
                               const GeneratorAssignment& V,
                               const TensorOneCell& src,
                               const std::vector<Slice>& slices) {
    const FinTwoCategory& E = V.target;
    std::string acc = E.id2(evaluate_one(C, D, V, src));
    for (auto it = slices.rbegin(); it != slices.rend(); ++it) {
        std::string body =
            E.rwhisk(detail::va_gen(V, gen_key(it->gen)),
                     evaluate_one(C, D, V, it->right));
        body = E.lwhisk(evaluate_one(C, D, V, it->left), body);
        acc = E.vcomp(body, acc);
    }
    return acc;
}

inline std::string evaluate_two(const FinTwoCategory& C, const FinTwoCategory& D,
                                const CheckedAssignment& V,
                                const TensorTwoCell& a) {
    if (V.mixed)
        throw shape_error(
            "assignment was checked against the mixed relation suite");
    return eval_slices(C, D, V.data, a.src, canonical_decomposition(C, D, a));
}

inline std::string mixed_evaluate_two(const FinTwoCategory& C,
                                      const FinTwoCategory& D,
                                      const CheckedAssignment& V,
                                      const MixedTensorTwoCell& a) {
    if (!V.mixed)
        throw shape_error(
            "assignment was checked against the plain relation suite");
    return eval_slices(C, D, V.data, a.src,
                       mixed_canonical_decomposition(C, D, a));
}

// ---------------------------------------------------------------------------
// Resort: rewriting a valid slice chain into canonical form, one tagged
// move at a time.

struct ResortMove {
    // Rule tag, and the index (from the acting end of the chain: slices
    // [size-1-index] and [size-2-index] formed the rewritten pair).
    std::string rule;
    int index = 0;
};

struct ResortResult {
    std::vector<Slice> slices;                 // canonical chain, target first
    std::vector<ResortMove> moves;
    std::vector<std::vector<Slice>> snapshots; // input, then one per move
};

namespace detail {

inline int gen_phase(GenKind k) {
    switch (k) {
        case GenKind::SwapCd: return 0;
        case GenKind::Id1CD:
        case GenKind::CompCcD: return 1;
        case GenKind::IdC1D:
        case GenKind::CompCdd: return 2;
        case GenKind::GammaBoxD: return 3;
        case GenKind::CBoxDelta: return 4;
    }
    throw internal_error("unhandled generator kind");
}

inline int gen_srclen(GenKind k) {
    switch (k) {
        case GenKind::CBoxDelta:
        case GenKind::GammaBoxD: return 1;
        case GenKind::Id1CD:
        case GenKind::IdC1D: return 0;
        case GenKind::CompCcD:
        case GenKind::CompCdd:
        case GenKind::SwapCd: return 2;
    }
    throw internal_error("unhandled generator kind");
}

inline int gen_tgtlen(GenKind k) {
    return k == GenKind::SwapCd ? 2 : 1;
}

inline int slice_pos(const Slice& s) {
    return s.right.shuffle.n + s.right.shuffle.m;
}

// Crossing coordinates of a swap slice, recovered from its earlier whisker.
inline std::pair<int, int> swap_key(const Slice& s) {
    int x = s.right.shuffle.n + 1, y = s.right.shuffle.m + 1;
    return {x - y, x + y};
}

struct ResortAction {
    bool act = false;
    std::string rule;
    std::vector<GenAt> replacement;  // application order
};

// Append a comparison-cell generator unless its component is an identity
// (identity components are never materialized as slices).
inline void push_delta(const FinTwoCategory& D, std::vector<GenAt>& repl,
                       const std::string& cob, const std::string& delta,
                       int pos) {
    if (!is_identity_two(D, delta))
        repl.push_back({TensorGenerator{GenKind::CBoxDelta, cob, delta, ""}, pos});
}
inline void push_gamma(const FinTwoCategory& C, std::vector<GenAt>& repl,
                       const std::string& gamma, const std::string& dob,
                       int pos) {
    if (!is_identity_two(C, gamma))
        repl.push_back({TensorGenerator{GenKind::GammaBoxD, gamma, dob, ""}, pos});
}

[[noreturn]] inline void stuck(const Slice& s1, const Slice& s2,
                               const char* why) {
    throw internal_error(std::string("resort is stuck on the pair ") +
                         gen_key(s1.gen) + " at " +
                         std::to_string(slice_pos(s1)) + " then " +
                         gen_key(s2.gen) + " at " +
                         std::to_string(slice_pos(s2)) + ": " + why);
}

// Decides what to do with the adjacent pair (s1 fires first, then s2).
inline ResortAction resort_action(const FinTwoCategory& C,
                                  const FinTwoCategory& D, const Slice& s1,
                                  const Slice& s2) {
    using G = GenKind;
    GenKind k1 = s1.gen.kind, k2 = s2.gen.kind;
    int p1 = gen_phase(k1), p2 = gen_phase(k2);
    int pos1 = slice_pos(s1), pos2 = slice_pos(s2);
    int sl1 = gen_srclen(k1), tl1 = gen_tgtlen(k1);
    int sl2 = gen_srclen(k2), tl2 = gen_tgtlen(k2);
    bool overlap = std::max(pos1, pos2) < std::min(pos1 + tl1, pos2 + sl2);

    ResortAction none;
    auto transpose = [&]() {
        ResortAction a;
        a.act = true;
        a.rule = "transpose";
        if (pos2 + sl2 <= pos1)
            a.replacement = {{s2.gen, pos2}, {s1.gen, pos1 + (tl2 - sl2)}};
        else if (pos2 >= pos1 + tl1)
            a.replacement = {{s2.gen, pos2 - (tl1 - sl1)}, {s1.gen, pos1}};
        else
            stuck(s1, s2, "transposition of an overlapping pair");
        return a;
    };

    if (p1 < p2) return none;  // phases already in canonical order

    if (p1 > p2) {
        if (!overlap) return transpose();
        ResortAction a;
        a.act = true;
        if (k1 == G::CBoxDelta && k2 == G::CompCdd) {
            a.rule = "comp-natural-d";
            const std::string& cob = s1.gen.a;
            const std::string& delta = s1.gen.b;
            std::string pre = D.two(delta).src;
            if (pos2 == pos1) {
                a.replacement = {{TensorGenerator{G::CompCdd, cob, pre,
                                                  s2.gen.c},
                                  pos1}};
                push_delta(D, a.replacement, cob,
                           D.hcomp2(D.id2(s2.gen.c), delta), pos1);
            } else if (pos2 == pos1 - 1) {
                a.replacement = {{TensorGenerator{G::CompCdd, cob, s2.gen.b,
                                                  pre},
                                  pos2}};
                push_delta(D, a.replacement, cob,
                           D.hcomp2(delta, D.id2(s2.gen.b)), pos2);
            } else {
                stuck(s1, s2, "unexpected overlap offset");
            }
            return a;
        }
        if (k1 == G::GammaBoxD && k2 == G::CompCcD) {
            a.rule = "comp-natural-c";
            const std::string& gamma = s1.gen.a;
            const std::string& dob = s1.gen.b;
            std::string pre = C.two(gamma).src;
            if (pos2 == pos1) {
                a.replacement = {{TensorGenerator{G::CompCcD, pre, s2.gen.b,
                                                  dob},
                                  pos1}};
                push_gamma(C, a.replacement,
                           C.hcomp2(C.id2(s2.gen.b), gamma), dob, pos1);
            } else if (pos2 == pos1 - 1) {
                a.replacement = {{TensorGenerator{G::CompCcD, s2.gen.a, pre,
                                                  dob},
                                  pos2}};
                push_gamma(C, a.replacement,
                           C.hcomp2(gamma, C.id2(s2.gen.a)), dob, pos2);
            } else {
                stuck(s1, s2, "unexpected overlap offset");
            }
            return a;
        }
        if (k1 == G::CBoxDelta && k2 == G::SwapCd) {
            if (pos2 != pos1 - 1) stuck(s1, s2, "swap reads a D-step first");
            a.rule = "swap-natural";
            const std::string& carr = s2.gen.a;
            a.replacement = {{TensorGenerator{G::SwapCd, carr,
                                              D.two(s1.gen.b).src, ""},
                              pos1 - 1}};
            push_delta(D, a.replacement, C.one(carr).src, s1.gen.b, pos1 - 1);
            return a;
        }
        if (k1 == G::GammaBoxD && k2 == G::SwapCd) {
            if (pos2 != pos1) stuck(s1, s2, "swap reads a C-step second");
            a.rule = "swap-natural";
            const std::string& darr = s2.gen.b;
            a.replacement = {{TensorGenerator{G::SwapCd,
                                              C.two(s1.gen.a).src, darr, ""},
                              pos1}};
            push_gamma(C, a.replacement, s1.gen.a, D.one(darr).tgt, pos1 + 1);
            return a;
        }
        if (k1 == G::IdC1D && k2 == G::SwapCd) {
            if (pos2 != pos1 - 1) stuck(s1, s2, "swap reads a D-step first");
            a.rule = "swap-id-d";
            a.replacement = {{TensorGenerator{G::IdC1D,
                                              C.one(s2.gen.a).src, s1.gen.b,
                                              ""},
                              pos1 - 1}};
            return a;
        }
        if (k1 == G::CompCdd && k2 == G::SwapCd) {
            if (pos2 != pos1 - 1) stuck(s1, s2, "swap reads a D-step first");
            a.rule = "swap-comp-d";
            const std::string& carr = s2.gen.a;
            a.replacement = {
                {TensorGenerator{G::SwapCd, carr, s1.gen.b, ""}, pos1 - 1},
                {TensorGenerator{G::SwapCd, carr, s1.gen.c, ""}, pos1},
                {TensorGenerator{G::CompCdd, C.one(carr).src, s1.gen.b,
                                 s1.gen.c},
                 pos1 - 1}};
            return a;
        }
        if (k1 == G::Id1CD && k2 == G::SwapCd) {
            if (pos2 != pos1) stuck(s1, s2, "swap reads a C-step second");
            a.rule = "swap-id-c";
            a.replacement = {{TensorGenerator{G::Id1CD, s1.gen.a,
                                              D.one(s2.gen.b).tgt, ""},
                              pos1 + 1}};
            return a;
        }
        if (k1 == G::CompCcD && k2 == G::SwapCd) {
            if (pos2 != pos1) stuck(s1, s2, "swap reads a C-step second");
            a.rule = "swap-comp-c";
            const std::string& darr = s2.gen.b;
            a.replacement = {
                {TensorGenerator{G::SwapCd, s1.gen.b, darr, ""}, pos1 + 1},
                {TensorGenerator{G::SwapCd, s1.gen.a, darr, ""}, pos1},
                {TensorGenerator{G::CompCcD, s1.gen.a, s1.gen.b,
                                 D.one(darr).tgt},
                 pos1 + 1}};
            return a;
        }
        stuck(s1, s2, "no rewrite joins these generator kinds");
    }

    // Same phase.
    if (!overlap) {
        if (k1 == G::SwapCd && k2 == G::SwapCd) {
            if (swap_key(s2) > swap_key(s1)) return transpose();
            return none;
        }
        if (pos2 + sl2 <= pos1) return transpose();
        return none;
    }
    ResortAction a;
    a.act = true;
    if (k1 == G::CBoxDelta && k2 == G::CBoxDelta) {
        if (s1.gen.a != s2.gen.a) stuck(s1, s2, "merge across objects");
        std::string merged = D.vcomp(s2.gen.b, s1.gen.b);
        a.rule = is_identity_two(D, merged) ? "id-d" : "vcomp-d";
        push_delta(D, a.replacement, s1.gen.a, merged, pos1);
        return a;
    }
    if (k1 == G::GammaBoxD && k2 == G::GammaBoxD) {
        if (s1.gen.b != s2.gen.b) stuck(s1, s2, "merge across objects");
        std::string merged = C.vcomp(s2.gen.a, s1.gen.a);
        a.rule = is_identity_two(C, merged) ? "id-c" : "vcomp-c";
        push_gamma(C, a.replacement, merged, s1.gen.b, pos1);
        return a;
    }
    if (k1 == G::IdC1D && k2 == G::CompCdd) {
        a.rule = "unit-d";  // the fresh identity step is consumed again
        return a;
    }
    if (k1 == G::Id1CD && k2 == G::CompCcD) {
        a.rule = "unit-c";
        return a;
    }
    if (k1 == G::CompCdd && k2 == G::CompCdd) {
        if (pos2 == pos1) return none;  // left-bracketed, already canonical
        if (pos2 != pos1 - 1) stuck(s1, s2, "unexpected overlap offset");
        a.rule = "assoc-d";
        a.replacement = {
            {TensorGenerator{G::CompCdd, s1.gen.a, s2.gen.b, s1.gen.b},
             pos1 - 1},
            {TensorGenerator{G::CompCdd, s1.gen.a,
                             D.comp1(s1.gen.b, s2.gen.b), s1.gen.c},
             pos1 - 1}};
        return a;
    }
    if (k1 == G::CompCcD && k2 == G::CompCcD) {
        if (pos2 == pos1) return none;
        if (pos2 != pos1 - 1) stuck(s1, s2, "unexpected overlap offset");
        a.rule = "assoc-c";
        a.replacement = {
            {TensorGenerator{G::CompCcD, s2.gen.a, s1.gen.a, s1.gen.c},
             pos1 - 1},
            {TensorGenerator{G::CompCcD, C.comp1(s1.gen.a, s2.gen.a),
                             s1.gen.b, s1.gen.c},
             pos1 - 1}};
        return a;
    }
    if (k1 == G::SwapCd && k2 == G::SwapCd) {
        if (pos2 == pos1) stuck(s1, s2, "swap reread in place");
        return none;  // staircase overlap; keys are already descending
    }
    stuck(s1, s2, "no rewrite joins these generator kinds");
}

} // namespace detail

// Rewrites a valid slice chain (listed target first) into the canonical
// chain of its composite.  Records one tagged move per rewrite and a
// snapshot of the whole chain after each.
inline ResortResult resort(const FinTwoCategory& C, const FinTwoCategory& D,
                           const std::vector<Slice>& chain) {
    ResortResult res;
    std::vector<Slice> work(chain.rbegin(), chain.rend());
    for (std::size_t i = 0; i + 1 < work.size(); ++i)
        if (!(slice_target(C, D, work[i]) == slice_source(C, D, work[i + 1])))
            throw shape_error("slice chain does not compose at step " +
                              std::to_string(i));
    res.snapshots.push_back(chain);
    std::size_t cap = 10000 + work.size() * work.size() * 16;
    std::size_t steps = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i + 1 < work.size(); ++i) {
            detail::ResortAction act =
                detail::resort_action(C, D, work[i], work[i + 1]);
            if (!act.act) continue;
            TensorOneCell cur = slice_source(C, D, work[i]);
            TensorOneCell want = slice_target(C, D, work[i + 1]);
            std::vector<Slice> repl;
            for (const auto& ga : act.replacement) {
                auto [sl, next] = slice_on(C, D, cur, ga.pos, ga.gen);
                repl.push_back(sl);
                cur = next;
            }
            if (!(cur == want))
                throw internal_error("rewrite broke the slice chain: rule " +
                                     act.rule);
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(i),
                       work.begin() + static_cast<std::ptrdiff_t>(i + 2));
            work.insert(work.begin() + static_cast<std::ptrdiff_t>(i),
                        repl.begin(), repl.end());
            res.moves.push_back({act.rule, static_cast<int>(i)});
            res.snapshots.emplace_back(work.rbegin(), work.rend());
            if (++steps > cap)
                throw internal_error(
                    "resort exceeded its step budget; the chain cycles");
            progress = true;
            break;
        }
    }
    res.slices.assign(work.rbegin(), work.rend());
    return res;
}

// ---------------------------------------------------------------------------
// Free slice terms over an arbitrary computad.

struct GeneralSlice {
    std::vector<std::string> left;   // later edges
    std::string gen;
    std::vector<std::string> right;  // earlier edges
    bool operator==(const GeneralSlice&) const = default;
};

struct FreeTerm {
    std::string src_node;              // start node of the source path
    std::vector<std::string> source;   // source edge path
    std::vector<GeneralSlice> slices;  // target first, like slice chains
    bool operator==(const FreeTerm&) const = default;
};

// Checks a free term against its computad and returns the target edge path.
inline std::vector<std::string> term_target(const Computad& G,
                                            const FreeTerm& t) {
    if (!G.has_node(t.src_node))
        throw reference_error("unknown node: " + t.src_node);
    std::string at = t.src_node;
    for (const auto& e : t.source) {
        const Computad::Edge& ec = G.edge(e);
        if (ec.src != at)
            throw shape_error("source path does not chain at edge " + e);
        at = ec.tgt;
    }
    std::vector<std::string> cur = t.source;
    for (auto it = t.slices.rbegin(); it != t.slices.rend(); ++it) {
        const Computad::Gen& gc = G.gen(it->gen);
        std::vector<std::string> expect = it->right;
        expect.insert(expect.end(), gc.src.begin(), gc.src.end());
        expect.insert(expect.end(), it->left.begin(), it->left.end());
        if (expect != cur)
            throw shape_error("slice for " + it->gen +
                              " does not match the current path");
        cur = it->right;
        cur.insert(cur.end(), gc.tgt.begin(), gc.tgt.end());
        cur.insert(cur.end(), it->left.begin(), it->left.end());
    }
    return cur;
}

inline void check_free_term(const Computad& G, const FreeTerm& t) {
    term_target(G, t);
}

inline std::vector<std::string> term_source(const Computad& G,
                                            const FreeTerm& t) {
    check_free_term(G, t);
    return t.source;
}

// Interprets a free term over the tensor computad of C and D as an
// interleaved 2-cell.
inline TensorTwoCell tensor_term_to_cell(const FinTwoCategory& C,
                                         const FinTwoCategory& D,
                                         const FreeTerm& t) {
    check_free_term(tensor_computad(C, D), t);
    std::map<std::string, TensorGenerator> gens;
    for (const auto& g : tensor_generators(C, D)) gens[gen_key(g)] = g;
    std::map<std::string, std::pair<std::string, std::string>> nodes;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) nodes[node_key(x, p)] = {x, p};
    auto nit = nodes.find(t.src_node);
    if (nit == nodes.end())
        throw reference_error("unknown node: " + t.src_node);
    // Resolve the source path: at each node, the edge key determines the
    // direction and the step.
    std::map<std::string, TensorOneCell> steps;
    for (const auto& [c1, cc] : C.one_cells)
        for (const auto& p : D.objects)
            steps[cedge_key(c1, p)] = detail::cstep(C, c1, p);
    for (const auto& x : C.objects)
        for (const auto& [d1, dc] : D.one_cells)
            steps[dedge_key(x, d1)] = detail::dstep(D, x, d1);
    TensorOneCell cur = identity_cell(C, D, nit->second.first,
                                      nit->second.second);
    for (const auto& e : t.source) {
        auto sit = steps.find(e);
        if (sit == steps.end()) throw reference_error("unknown edge: " + e);
        cur = hcompose_one(C, D, cur, sit->second);
    }
    TensorTwoCell acc = id_two(C, D, cur);
    for (auto it = t.slices.rbegin(); it != t.slices.rend(); ++it) {
        auto git = gens.find(it->gen);
        if (git == gens.end())
            throw reference_error("unknown generator: " + it->gen);
        auto [sl, next] = slice_on(C, D, cur, static_cast<int>(it->right.size()),
                                   git->second);
        acc = vcompose_two(C, D, acc, slice_cell(C, D, sl));
        cur = next;
    }
    return acc;
}

} // namespace boxtimes
