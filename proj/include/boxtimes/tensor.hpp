#pragma once

// The shuffle model of the product of two finite 2-categories C and D.
//
// A 1-cell from (X;P) to (Y;Q) is a path in C from X to Y, a path in D
// from P to Q, and a shuffle word interleaving their steps.  A 2-cell
// from f to g carries a valid shuffle morphism (xi, rho) from f's word to
// g's word together with an icon alpha over C (reindexed by xi) and an
// icon beta over D (reindexed by rho).  Both are stored as bare component
// lists; alpha_icon()/beta_icon() reassemble the full icons.
//
// Horizontal composition concatenates paths and words; vertical
// composition and whiskering act componentwise through the shuffle and
// icon layers.  project_L collapses a cell to its pair of composites in
// C x D; embed_R_* sends a pair (c, d) to the two-step cell "d then c"
// and provides the comparison 2-cells making that assignment lax;
// unit_eta compares any 1-cell with the embedded image of its projection.
//
// The mixed variant reverses the direction of the d-side reindexing: a
// MixedTensorTwoCell carries rho_rev from source to target ranks and its
// beta components map each source d-step into a composite of target
// d-steps (an icon in the 2-cell dual of D).

#include <string>
#include <vector>

#include "errors.hpp"
#include "fin2cat.hpp"
#include "paths.hpp"
#include "shuffles.hpp"
#include "simplicial.hpp"

namespace boxtimes {

struct TensorOneCell {
    Path cpath;
    Path dpath;
    Shuffle shuffle;

    bool operator==(const TensorOneCell&) const = default;
};

inline void check_one(const FinTwoCategory& C, const FinTwoCategory& D,
                      const TensorOneCell& f) {
    check_path(C, f.cpath);
    check_path(D, f.dpath);
    if (f.shuffle.n != f.cpath.length() || f.shuffle.m != f.dpath.length())
        throw shape_error("shuffle ranks do not match path lengths");
    f.shuffle.check();
}

inline TensorOneCell identity_cell(const FinTwoCategory& C,
                                   const FinTwoCategory& D,
                                   const std::string& x, const std::string& p) {
    if (!C.has_object(x)) throw reference_error("unknown object: " + x);
    if (!D.has_object(p)) throw reference_error("unknown object: " + p);
    return {Path{x, {}}, Path{p, {}}, Shuffle(0, 0, "")};
}

// f on the earlier leg, g on the later leg.
inline TensorOneCell hcompose_one(const FinTwoCategory& C, const FinTwoCategory& D,
                                  const TensorOneCell& f, const TensorOneCell& g) {
    return {concat(C, f.cpath, g.cpath), concat(D, f.dpath, g.dpath),
            tensor_shuffles(f.shuffle, g.shuffle)};
}

struct TensorTwoCell {
    TensorOneCell src;
    TensorOneCell tgt;
    IntervalMap xi;                  // [tgt.n] -> [src.n]
    IntervalMap rho;                 // [tgt.m] -> [src.m]
    std::vector<std::string> alpha;  // per target c-step
    std::vector<std::string> beta;   // per target d-step

    bool operator==(const TensorTwoCell&) const = default;

    ShuffleMorphism sh_morph() const {
        return {src.shuffle, tgt.shuffle, xi, rho};
    }
    Icon alpha_icon() const { return {src.cpath, tgt.cpath, xi, alpha}; }
    Icon beta_icon() const { return {src.dpath, tgt.dpath, rho, beta}; }
};

inline void check_two(const FinTwoCategory& C, const FinTwoCategory& D,
                      const TensorTwoCell& a) {
    check_one(C, D, a.src);
    check_one(C, D, a.tgt);
    if (!is_valid_morphism(a.src.shuffle, a.tgt.shuffle, a.xi, a.rho))
        throw shape_error("shuffle morphism violates the crossing condition");
    check_icon(C, a.alpha_icon());
    check_icon(D, a.beta_icon());
}

inline TensorTwoCell id_two(const FinTwoCategory& C, const FinTwoCategory& D,
                            const TensorOneCell& f) {
    check_one(C, D, f);
    TensorTwoCell a{f, f, IntervalMap::identity(f.shuffle.n),
                    IntervalMap::identity(f.shuffle.m), {}, {}};
    for (const auto& c : f.cpath.cells) a.alpha.push_back(C.id2(c));
    for (const auto& d : f.dpath.cells) a.beta.push_back(D.id2(d));
    return a;
}

// a then b vertically.
inline TensorTwoCell vcompose_two(const FinTwoCategory& C, const FinTwoCategory& D,
                                  const TensorTwoCell& a, const TensorTwoCell& b) {
    if (!(a.tgt == b.src))
        throw shape_error("2-cells not vertically composable");
    ShuffleMorphism sm = compose_morphisms(a.sh_morph(), b.sh_morph());
    Icon ca = vcompose_icons(C, a.alpha_icon(), b.alpha_icon());
    Icon db = vcompose_icons(D, a.beta_icon(), b.beta_icon());
    return {a.src, b.tgt, sm.xi, sm.rho, ca.components, db.components};
}

// Whisker a with the 1-cell f on the later leg.
inline TensorTwoCell whisker_left(const FinTwoCategory& C, const FinTwoCategory& D,
                                  const TensorOneCell& f, const TensorTwoCell& a) {
    ShuffleMorphism sm =
        tensor_morphisms(a.sh_morph(), ShuffleMorphism::identity(f.shuffle));
    TensorTwoCell out{hcompose_one(C, D, a.src, f), hcompose_one(C, D, a.tgt, f),
                      sm.xi, sm.rho, a.alpha, a.beta};
    for (const auto& c : f.cpath.cells) out.alpha.push_back(C.id2(c));
    for (const auto& d : f.dpath.cells) out.beta.push_back(D.id2(d));
    return out;
}

// Whisker a with the 1-cell f on the earlier leg.
inline TensorTwoCell whisker_right(const FinTwoCategory& C, const FinTwoCategory& D,
                                   const TensorTwoCell& a, const TensorOneCell& f) {
    ShuffleMorphism sm =
        tensor_morphisms(ShuffleMorphism::identity(f.shuffle), a.sh_morph());
    TensorTwoCell out{hcompose_one(C, D, f, a.src), hcompose_one(C, D, f, a.tgt),
                      sm.xi, sm.rho, {}, {}};
    for (const auto& c : f.cpath.cells) out.alpha.push_back(C.id2(c));
    out.alpha.insert(out.alpha.end(), a.alpha.begin(), a.alpha.end());
    for (const auto& d : f.dpath.cells) out.beta.push_back(D.id2(d));
    out.beta.insert(out.beta.end(), a.beta.begin(), a.beta.end());
    return out;
}

// a on the earlier leg, b on the later leg; whisker-then-compose.  The
// other whiskering order must give the same cell (interchange).
inline TensorTwoCell hcompose_two(const FinTwoCategory& C, const FinTwoCategory& D,
                                  const TensorTwoCell& a, const TensorTwoCell& b) {
    TensorTwoCell w1 = whisker_left(C, D, b.src, a);
    TensorTwoCell w2 = whisker_right(C, D, b, a.tgt);
    return vcompose_two(C, D, w1, w2);
}

// Collapse to the product C x D: composite 1-cells, pasted icons.
struct ProductOneCell {
    std::string c;
    std::string d;
    bool operator==(const ProductOneCell&) const = default;
};
struct ProductTwoCell {
    std::string c;
    std::string d;
    bool operator==(const ProductTwoCell&) const = default;
};

inline ProductOneCell project_L1(const FinTwoCategory& C, const FinTwoCategory& D,
                                 const TensorOneCell& f) {
    return {composite1(C, f.cpath), composite1(D, f.dpath)};
}

inline ProductTwoCell project_L2(const FinTwoCategory& C, const FinTwoCategory& D,
                                 const TensorTwoCell& a) {
    return {paste_icon(C, a.alpha_icon()), paste_icon(D, a.beta_icon())};
}

// A pair (c, d) embeds as the two-step cell travelling d first, then c.
inline TensorOneCell embed_R_one(const FinTwoCategory& C, const FinTwoCategory& D,
                                 const std::string& c, const std::string& d) {
    TensorOneCell out{Path{C.one(c).src, {c}}, Path{D.one(d).src, {d}},
                      Shuffle(1, 1, "dc")};
    check_one(C, D, out);
    return out;
}

inline TensorTwoCell embed_R_two(const FinTwoCategory& C, const FinTwoCategory& D,
                                 const std::string& gamma, const std::string& delta) {
    TensorOneCell src = embed_R_one(C, D, C.two(gamma).src, D.two(delta).src);
    TensorOneCell tgt = embed_R_one(C, D, C.two(gamma).tgt, D.two(delta).tgt);
    return {src, tgt, IntervalMap::identity(1), IntervalMap::identity(1),
            {gamma}, {delta}};
}

// Unit comparison: identity cell => image of the identity pair.
inline TensorTwoCell embed_R_unit(const FinTwoCategory& C, const FinTwoCategory& D,
                                  const std::string& x, const std::string& p) {
    TensorOneCell src = identity_cell(C, D, x, p);
    TensorOneCell tgt = embed_R_one(C, D, C.id1(x), D.id1(p));
    return {src, tgt, IntervalMap(1, 0, {0, 0}), IntervalMap(1, 0, {0, 0}),
            {C.id2(C.id1(x))}, {D.id2(D.id1(p))}};
}

// Composition comparison: image of (c, d) then image of (c', d') => image
// of the composite pair.
inline TensorTwoCell embed_R_comp(const FinTwoCategory& C, const FinTwoCategory& D,
                                  const std::string& c, const std::string& d,
                                  const std::string& cp, const std::string& dp) {
    TensorOneCell src = hcompose_one(C, D, embed_R_one(C, D, c, d),
                                     embed_R_one(C, D, cp, dp));
    TensorOneCell tgt = embed_R_one(C, D, C.comp1(cp, c), D.comp1(dp, d));
    return {src, tgt, IntervalMap(1, 2, {0, 2}), IntervalMap(1, 2, {0, 2}),
            {C.id2(C.comp1(cp, c))}, {D.id2(D.comp1(dp, d))}};
}

// Comparison of a 1-cell with the embedded image of its projection: both
// paths collapse onto their composites through identity icon components.
inline TensorTwoCell unit_eta(const FinTwoCategory& C, const FinTwoCategory& D,
                              const TensorOneCell& f) {
    check_one(C, D, f);
    std::string pc = composite1(C, f.cpath);
    std::string qc = composite1(D, f.dpath);
    TensorOneCell tgt{Path{f.cpath.start, {pc}}, Path{f.dpath.start, {qc}},
                      Shuffle(1, 1, "dc")};
    int n = f.shuffle.n, m = f.shuffle.m;
    return {f, tgt, IntervalMap(1, n, {0, n}), IntervalMap(1, m, {0, m}),
            {C.id2(pc)}, {D.id2(qc)}};
}

// ---------------------------------------------------------------------------
// Mixed 2-cells: the d-side reindexing runs from source to target ranks.

struct MixedTensorTwoCell {
    TensorOneCell src;
    TensorOneCell tgt;
    IntervalMap xi;                  // [tgt.n] -> [src.n]
    IntervalMap rho_rev;             // [src.m] -> [tgt.m]
    std::vector<std::string> alpha;  // per target c-step
    std::vector<std::string> beta;   // per SOURCE d-step

    bool operator==(const MixedTensorTwoCell&) const = default;

    MixedShuffleMorphism sh_morph() const {
        return {src.shuffle, tgt.shuffle, xi, rho_rev};
    }
    Icon alpha_icon() const { return {src.cpath, tgt.cpath, xi, alpha}; }
    // The d-side data reads as an icon from tgt.dpath to src.dpath once
    // all 2-cells of D are reversed.
    Icon beta_icon_codual() const {
        return {tgt.dpath, src.dpath, rho_rev, beta};
    }
};

inline void check_mixed_two(const FinTwoCategory& C, const FinTwoCategory& D,
                            const MixedTensorTwoCell& a) {
    check_one(C, D, a.src);
    check_one(C, D, a.tgt);
    if (!is_valid_mixed_morphism(a.src.shuffle, a.tgt.shuffle, a.xi, a.rho_rev))
        throw shape_error("mixed shuffle morphism violates the crossing condition");
    check_icon(C, a.alpha_icon());
    if (a.src.dpath.start != a.tgt.dpath.start ||
        end_object(D, a.src.dpath) != end_object(D, a.tgt.dpath))
        throw shape_error("mixed 2-cell endpoints differ on the d side");
    if (a.rho_rev.dom != a.src.dpath.length() ||
        a.rho_rev.cod != a.tgt.dpath.length())
        throw shape_error("mixed reindexing map has wrong shape");
    if (static_cast<int>(a.beta.size()) != a.src.dpath.length())
        throw shape_error("mixed 2-cell has wrong number of d components");
    for (int j = 1; j <= a.src.dpath.length(); ++j) {
        const auto& cell = D.two(a.beta[static_cast<std::size_t>(j - 1)]);
        std::string want_tgt = composite1(
            D, segment(D, a.tgt.dpath, a.rho_rev(j - 1), a.rho_rev(j)));
        if (cell.src != a.src.dpath.cells[static_cast<std::size_t>(j - 1)] ||
            cell.tgt != want_tgt)
            throw shape_error("mixed d component " + std::to_string(j) +
                              " has boundary " + cell.src + " => " + cell.tgt +
                              ", expected " +
                              a.src.dpath.cells[static_cast<std::size_t>(j - 1)] +
                              " => " + want_tgt);
    }
}

inline MixedTensorTwoCell mixed_id_two(const FinTwoCategory& C,
                                       const FinTwoCategory& D,
                                       const TensorOneCell& f) {
    check_one(C, D, f);
    MixedTensorTwoCell a{f, f, IntervalMap::identity(f.shuffle.n),
                         IntervalMap::identity(f.shuffle.m), {}, {}};
    for (const auto& c : f.cpath.cells) a.alpha.push_back(C.id2(c));
    for (const auto& d : f.dpath.cells) a.beta.push_back(D.id2(d));
    return a;
}

// a then b vertically; the d components chain forward through b's segments.
inline MixedTensorTwoCell mixed_vcompose_two(const FinTwoCategory& C,
                                             const FinTwoCategory& D,
                                             const MixedTensorTwoCell& a,
                                             const MixedTensorTwoCell& b) {
    if (!(a.tgt == b.src))
        throw shape_error("mixed 2-cells not vertically composable");
    MixedShuffleMorphism sm = compose_mixed_morphisms(a.sh_morph(), b.sh_morph());
    Icon ca = vcompose_icons(C, a.alpha_icon(), b.alpha_icon());
    MixedTensorTwoCell out{a.src, b.tgt, sm.xi, sm.rho_rev, ca.components, {}};
    for (int j = 1; j <= a.src.dpath.length(); ++j) {
        int lo = a.rho_rev(j - 1), hi = a.rho_rev(j);
        std::string acc;
        if (lo == hi) {
            acc = D.id2(D.id1(object_at(D, b.tgt.dpath, b.rho_rev(lo))));
        } else {
            acc = b.beta[static_cast<std::size_t>(lo)];
            for (int t = lo + 1; t < hi; ++t)
                acc = D.hcomp2(b.beta[static_cast<std::size_t>(t)], acc);
        }
        out.beta.push_back(
            D.vcomp(acc, a.beta[static_cast<std::size_t>(j - 1)]));
    }
    return out;
}

inline MixedTensorTwoCell mixed_whisker_left(const FinTwoCategory& C,
                                             const FinTwoCategory& D,
                                             const TensorOneCell& f,
                                             const MixedTensorTwoCell& a) {
    MixedShuffleMorphism sm = tensor_mixed_morphisms(
        a.sh_morph(), MixedShuffleMorphism::identity(f.shuffle));
    MixedTensorTwoCell out{hcompose_one(C, D, a.src, f),
                           hcompose_one(C, D, a.tgt, f),
                           sm.xi, sm.rho_rev, a.alpha, a.beta};
    for (const auto& c : f.cpath.cells) out.alpha.push_back(C.id2(c));
    for (const auto& d : f.dpath.cells) out.beta.push_back(D.id2(d));
    return out;
}

inline MixedTensorTwoCell mixed_whisker_right(const FinTwoCategory& C,
                                              const FinTwoCategory& D,
                                              const MixedTensorTwoCell& a,
                                              const TensorOneCell& f) {
    MixedShuffleMorphism sm = tensor_mixed_morphisms(
        MixedShuffleMorphism::identity(f.shuffle), a.sh_morph());
    MixedTensorTwoCell out{hcompose_one(C, D, f, a.src),
                           hcompose_one(C, D, f, a.tgt),
                           sm.xi, sm.rho_rev, {}, {}};
    for (const auto& c : f.cpath.cells) out.alpha.push_back(C.id2(c));
    out.alpha.insert(out.alpha.end(), a.alpha.begin(), a.alpha.end());
    for (const auto& d : f.dpath.cells) out.beta.push_back(D.id2(d));
    out.beta.insert(out.beta.end(), a.beta.begin(), a.beta.end());
    return out;
}

inline MixedTensorTwoCell mixed_hcompose_two(const FinTwoCategory& C,
                                             const FinTwoCategory& D,
                                             const MixedTensorTwoCell& a,
                                             const MixedTensorTwoCell& b) {
    MixedTensorTwoCell w1 = mixed_whisker_left(C, D, b.src, a);
    MixedTensorTwoCell w2 = mixed_whisker_right(C, D, b, a.tgt);
    return mixed_vcompose_two(C, D, w1, w2);
}

} // namespace boxtimes
