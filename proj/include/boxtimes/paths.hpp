#pragma once

// Composable paths of 1-cells in a finite 2-category, icons between paths,
// and evaluation of lax functors along paths.
//
// A path records its start object and its 1-cells in travel order.  An icon
// from path p to path q (same endpoints) is an interval map xi from the
// steps of q to the steps of p together with one 2-cell per q-step: the
// i-th component maps the composite of the p-segment (xi(i-1), xi(i)] to
// the i-th cell of q.  Collapsed segments contribute identity 1-cells.
// Icons compose vertically (refining xi) and horizontally (concatenation).
//
// Lax functor data F: C -> E assigns images to objects and cells plus a
// unit cell eta_X: 1_{FX} => F(1_X) per object and a composition cell
// mu_{f,g}: Fg . Ff => F(g . f) per composable pair (keyed source-cell
// first).  validate_lax_functor checks the usual unit, associativity, and
// naturality axioms.  strictify_eval folds F over a path (so concatenation
// goes to composition on the nose) and strictify_eval2 extends this to
// icons using iterated mu along each segment.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fin2cat.hpp"
#include "simplicial.hpp"

namespace boxtimes {

struct Path {
    std::string start;
    std::vector<std::string> cells;  // earliest first

    int length() const { return static_cast<int>(cells.size()); }
    bool operator==(const Path&) const = default;
};

inline void check_path(const FinTwoCategory& C, const Path& p) {
    if (!C.has_object(p.start))
        throw reference_error("unknown start object: " + p.start);
    std::string at = p.start;
    for (const auto& f : p.cells) {
        if (C.one(f).src != at)
            throw shape_error("path breaks at " + f + ": expected source " + at);
        at = C.one(f).tgt;
    }
}

inline std::string object_at(const FinTwoCategory& C, const Path& p, int i) {
    if (i < 0 || i > p.length())
        throw range_error("path position out of range");
    return i == 0 ? p.start : C.one(p.cells[static_cast<std::size_t>(i - 1)]).tgt;
}

inline std::string end_object(const FinTwoCategory& C, const Path& p) {
    return object_at(C, p, p.length());
}

// Composite 1-cell of the whole path; the empty path gives the identity.
inline std::string composite1(const FinTwoCategory& C, const Path& p) {
    if (p.cells.empty()) return C.id1(p.start);
    std::string acc = p.cells.front();
    for (std::size_t i = 1; i < p.cells.size(); ++i)
        acc = C.comp1(p.cells[i], acc);
    return acc;
}

// The sub-path covering steps i+1 .. j (positions i through j).
inline Path segment(const FinTwoCategory& C, const Path& p, int i, int j) {
    if (i < 0 || j < i || j > p.length())
        throw range_error("path segment out of range");
    Path out{object_at(C, p, i), {}};
    for (int t = i; t < j; ++t)
        out.cells.push_back(p.cells[static_cast<std::size_t>(t)]);
    return out;
}

inline Path concat(const FinTwoCategory& C, const Path& p, const Path& q) {
    if (end_object(C, p) != q.start)
        throw shape_error("paths not concatenable: " + end_object(C, p) +
                          " vs " + q.start);
    Path out = p;
    out.cells.insert(out.cells.end(), q.cells.begin(), q.cells.end());
    return out;
}

struct Icon {
    Path src;
    Path tgt;
    IntervalMap xi;                       // [tgt length] -> [src length]
    std::vector<std::string> components;  // indexed by tgt steps

    bool operator==(const Icon&) const = default;
};

inline void check_icon(const FinTwoCategory& C, const Icon& a) {
    check_path(C, a.src);
    check_path(C, a.tgt);
    if (a.src.start != a.tgt.start)
        throw shape_error("icon endpoints differ at the start");
    if (end_object(C, a.src) != end_object(C, a.tgt))
        throw shape_error("icon endpoints differ at the end");
    if (a.xi.dom != a.tgt.length() || a.xi.cod != a.src.length())
        throw shape_error("icon reindexing map has wrong shape");
    if (static_cast<int>(a.components.size()) != a.tgt.length())
        throw shape_error("icon has wrong number of components");
    for (int i = 1; i <= a.tgt.length(); ++i) {
        const std::string& comp = a.components[static_cast<std::size_t>(i - 1)];
        std::string want_src =
            composite1(C, segment(C, a.src, a.xi(i - 1), a.xi(i)));
        const auto& cell = C.two(comp);
        if (cell.src != want_src || cell.tgt != a.tgt.cells[static_cast<std::size_t>(i - 1)])
            throw shape_error("icon component " + std::to_string(i) +
                              " has boundary " + cell.src + " => " + cell.tgt +
                              ", expected " + want_src + " => " +
                              a.tgt.cells[static_cast<std::size_t>(i - 1)]);
    }
}

inline Icon identity_icon(const FinTwoCategory& C, const Path& p) {
    check_path(C, p);
    Icon a{p, p, IntervalMap::identity(p.length()), {}};
    for (const auto& f : p.cells) a.components.push_back(C.id2(f));
    return a;
}

// a: p -> q, then b: q -> r.
inline Icon vcompose_icons(const FinTwoCategory& C, const Icon& a, const Icon& b) {
    if (!(a.tgt == b.src))
        throw shape_error("icons not vertically composable");
    Icon out{a.src, b.tgt, compose(a.xi, b.xi), {}};
    for (int i = 1; i <= b.tgt.length(); ++i) {
        int lo = b.xi(i - 1), hi = b.xi(i);
        std::string acc;
        if (lo == hi) {
            acc = C.id2(C.id1(object_at(C, a.src, a.xi(lo))));
        } else {
            acc = a.components[static_cast<std::size_t>(lo)];
            for (int j = lo + 1; j < hi; ++j)
                acc = C.hcomp2(a.components[static_cast<std::size_t>(j)], acc);
        }
        out.components.push_back(
            C.vcomp(b.components[static_cast<std::size_t>(i - 1)], acc));
    }
    return out;
}

// a on the earlier leg, b on the later leg.
inline Icon hcompose_icons(const FinTwoCategory& C, const Icon& a, const Icon& b) {
    Icon out{concat(C, a.src, b.src), concat(C, a.tgt, b.tgt),
             path_sum(a.xi, b.xi), a.components};
    out.components.insert(out.components.end(), b.components.begin(),
                          b.components.end());
    return out;
}

// Collapse an icon to a single 2-cell between the path composites by
// composing its components horizontally.
inline std::string paste_icon(const FinTwoCategory& C, const Icon& a) {
    if (a.components.empty()) return C.id2(C.id1(a.src.start));
    std::string acc = a.components.front();
    for (std::size_t i = 1; i < a.components.size(); ++i)
        acc = C.hcomp2(a.components[i], acc);
    return acc;
}

struct LaxFunctorData {
    using Pair = std::pair<std::string, std::string>;
    std::map<std::string, std::string> obj;
    std::map<std::string, std::string> one;
    std::map<std::string, std::string> two;
    // eta[X]: 1_{FX} => F(1_X)
    std::map<std::string, std::string> eta;
    // mu[{f,g}] for f then g: Fg . Ff => F(g . f)
    std::map<Pair, std::string> mu;

    bool operator==(const LaxFunctorData&) const = default;

    const std::string& at_obj(const std::string& x) const {
        auto it = obj.find(x);
        if (it == obj.end()) throw reference_error("no image for object " + x);
        return it->second;
    }
    const std::string& at_one(const std::string& f) const {
        auto it = one.find(f);
        if (it == one.end()) throw reference_error("no image for 1-cell " + f);
        return it->second;
    }
    const std::string& at_two(const std::string& a) const {
        auto it = two.find(a);
        if (it == two.end()) throw reference_error("no image for 2-cell " + a);
        return it->second;
    }
    const std::string& at_eta(const std::string& x) const {
        auto it = eta.find(x);
        if (it == eta.end()) throw reference_error("no unit cell for object " + x);
        return it->second;
    }
    const std::string& at_mu(const std::string& f, const std::string& g) const {
        auto it = mu.find({f, g});
        if (it == mu.end())
            throw reference_error("no composition cell for " + f + " then " + g);
        return it->second;
    }
};

// Strict functors as a degenerate case: identities for eta and mu.
inline LaxFunctorData make_strict_functor(
    const FinTwoCategory& C, const FinTwoCategory& E,
    std::map<std::string, std::string> obj,
    std::map<std::string, std::string> one,
    std::map<std::string, std::string> two) {
    LaxFunctorData F{std::move(obj), std::move(one), std::move(two), {}, {}};
    for (const auto& x : C.objects)
        F.eta[x] = E.id2(E.id1(F.at_obj(x)));
    for (const auto& [g, gc] : C.one_cells)
        for (const auto& [f, fc] : C.one_cells)
            if (gc.src == fc.tgt)
                F.mu[{f, g}] = E.id2(E.comp1(F.at_one(g), F.at_one(f)));
    return F;
}

inline std::vector<Violation> validate_lax_functor(const FinTwoCategory& C,
                                                   const FinTwoCategory& E,
                                                   const LaxFunctorData& F) {
    std::vector<Violation> out;
    auto report = [&](std::string law, std::vector<std::string> wit,
                      std::string detail) {
        out.push_back({std::move(law), std::move(wit), std::move(detail)});
    };

    for (const auto& x : C.objects) {
        if (!F.obj.count(x)) {
            report("functor-object-typing", {x}, "object has no image");
            continue;
        }
        if (!E.has_object(F.obj.at(x)))
            report("functor-object-typing", {x}, "image is not an object of the target");
    }
    for (const auto& [f, fc] : C.one_cells) {
        if (!F.one.count(f)) {
            report("functor-one-typing", {f}, "1-cell has no image");
            continue;
        }
        const std::string& Ff = F.one.at(f);
        if (!E.one_cells.count(Ff)) {
            report("functor-one-typing", {f}, "image is not a 1-cell of the target");
            continue;
        }
        if (F.obj.count(fc.src) && F.obj.count(fc.tgt) &&
            !(E.one(Ff).src == F.obj.at(fc.src) && E.one(Ff).tgt == F.obj.at(fc.tgt)))
            report("functor-one-typing", {f}, "image has the wrong boundary");
    }
    for (const auto& [a, ac] : C.two_cells) {
        if (!F.two.count(a)) {
            report("functor-two-typing", {a}, "2-cell has no image");
            continue;
        }
        const std::string& Fa = F.two.at(a);
        if (!E.two_cells.count(Fa)) {
            report("functor-two-typing", {a}, "image is not a 2-cell of the target");
            continue;
        }
        if (F.one.count(ac.src) && F.one.count(ac.tgt) &&
            !(E.two(Fa).src == F.one.at(ac.src) && E.two(Fa).tgt == F.one.at(ac.tgt)))
            report("functor-two-typing", {a}, "image has the wrong boundary");
    }
    for (const auto& x : C.objects) {
        if (!F.obj.count(x)) continue;
        if (!F.eta.count(x)) {
            report("unit-cell-typing", {x}, "object has no unit cell");
            continue;
        }
        const std::string& u = F.eta.at(x);
        if (!E.two_cells.count(u)) {
            report("unit-cell-typing", {x}, "unit cell is not a 2-cell of the target");
            continue;
        }
        if (F.one.count(C.id1(x)) && E.identity1.count(F.obj.at(x)) &&
            !(E.two(u).src == E.id1(F.obj.at(x)) &&
              E.two(u).tgt == F.one.at(C.id1(x))))
            report("unit-cell-typing", {x}, "unit cell has the wrong boundary");
    }
    for (const auto& [g, gc] : C.one_cells)
        for (const auto& [f, fc] : C.one_cells) {
            if (gc.src != fc.tgt) continue;
            if (!F.mu.count({f, g})) {
                report("composition-cell-typing", {f, g}, "pair has no composition cell");
                continue;
            }
            const std::string& m = F.mu.at({f, g});
            if (!E.two_cells.count(m)) {
                report("composition-cell-typing", {f, g},
                       "composition cell is not a 2-cell of the target");
                continue;
            }
            if (F.one.count(f) && F.one.count(g) && F.one.count(C.comp1(g, f)) &&
                E.comp1_table.count({F.one.at(g), F.one.at(f)}) &&
                !(E.two(m).src == E.comp1(F.one.at(g), F.one.at(f)) &&
                  E.two(m).tgt == F.one.at(C.comp1(g, f))))
                report("composition-cell-typing", {f, g},
                       "composition cell has the wrong boundary");
        }
    if (!out.empty()) return out;  // the laws below assume well-typed data

    for (const auto& [f, i] : C.identity2)
        if (F.at_two(i) != E.id2(F.at_one(f)))
            report("functor-identity-cell", {f, i},
                   "identity 2-cell does not map to an identity");
    for (const auto& [ba, c] : C.vcomp_table) {
        if (C.two(ba.first).src != C.two(ba.second).tgt) continue;
        if (F.at_two(c) != E.vcomp(F.at_two(ba.first), F.at_two(ba.second)))
            report("functor-vertical", {ba.first, ba.second},
                   "vertical composition is not preserved");
    }
    for (const auto& [b, bc] : C.two_cells)
        for (const auto& [a, ac] : C.two_cells) {
            if (C.one(bc.src).src != C.one(ac.src).tgt) continue;
            std::string lhs = E.vcomp(F.at_mu(ac.tgt, bc.tgt),
                                      E.hcomp2(F.at_two(b), F.at_two(a)));
            std::string rhs = E.vcomp(F.at_two(C.hcomp2(b, a)),
                                      F.at_mu(ac.src, bc.src));
            if (lhs != rhs)
                report("composition-naturality", {b, a}, lhs + " vs " + rhs);
        }
    for (const auto& [f, fc] : C.one_cells) {
        const std::string& Ff = F.at_one(f);
        std::string lhs = E.vcomp(F.at_mu(C.id1(fc.src), f),
                                  E.lwhisk(Ff, F.at_eta(fc.src)));
        if (lhs != E.id2(Ff))
            report("unit-law", {f, fc.src}, "left unit law fails: " + lhs);
        std::string rhs = E.vcomp(F.at_mu(f, C.id1(fc.tgt)),
                                  E.rwhisk(F.at_eta(fc.tgt), Ff));
        if (rhs != E.id2(Ff))
            report("unit-law", {f, fc.tgt}, "right unit law fails: " + rhs);
    }
    for (const auto& [h, hc] : C.one_cells)
        for (const auto& [g, gc] : C.one_cells) {
            if (hc.src != gc.tgt) continue;
            for (const auto& [f, fc] : C.one_cells) {
                if (gc.src != fc.tgt) continue;
                std::string lhs = E.vcomp(F.at_mu(C.comp1(g, f), h),
                                          E.lwhisk(F.at_one(h), F.at_mu(f, g)));
                std::string rhs = E.vcomp(F.at_mu(f, C.comp1(h, g)),
                                          E.rwhisk(F.at_mu(g, h), F.at_one(f)));
                if (lhs != rhs)
                    report("composition-associativity", {f, g, h}, lhs + " vs " + rhs);
            }
        }
    return out;
}

// Image of a path under F, composed strictly in E.
inline std::string strictify_eval(const FinTwoCategory& C, const FinTwoCategory& E,
                                  const LaxFunctorData& F, const Path& p) {
    check_path(C, p);
    if (p.cells.empty()) return E.id1(F.at_obj(p.start));
    std::string acc = F.at_one(p.cells.front());
    for (std::size_t i = 1; i < p.cells.size(); ++i)
        acc = E.comp1(F.at_one(p.cells[i]), acc);
    return acc;
}

// Iterated composition cell along a path: a 2-cell from the strict image of
// p to F of p's composite.  Length 0 gives eta, length 1 the identity.
inline std::string mu_chain(const FinTwoCategory& C, const FinTwoCategory& E,
                            const LaxFunctorData& F, const Path& p) {
    check_path(C, p);
    if (p.cells.empty()) return F.at_eta(p.start);
    std::string acc = E.id2(F.at_one(p.cells.front()));
    std::string comp_so_far = p.cells.front();
    for (std::size_t j = 1; j < p.cells.size(); ++j) {
        const std::string& e = p.cells[j];
        acc = E.vcomp(F.at_mu(comp_so_far, e), E.lwhisk(F.at_one(e), acc));
        comp_so_far = C.comp1(e, comp_so_far);
    }
    return acc;
}

// Image of an icon: per target step, chain the source segment down to its
// composite and apply F's 2-cell image, then lay the steps side by side.
inline std::string strictify_eval2(const FinTwoCategory& C, const FinTwoCategory& E,
                                   const LaxFunctorData& F, const Icon& a) {
    check_icon(C, a);
    std::string acc = E.id2(E.id1(F.at_obj(a.src.start)));
    for (int i = 1; i <= a.tgt.length(); ++i) {
        Path seg = segment(C, a.src, a.xi(i - 1), a.xi(i));
        std::string step =
            E.vcomp(F.at_two(a.components[static_cast<std::size_t>(i - 1)]),
                    mu_chain(C, E, F, seg));
        acc = (i == 1) ? step : E.hcomp2(step, acc);
    }
    if (a.tgt.length() == 0) return acc;  // id2 on the identity 1-cell
    return acc;
}

} // namespace boxtimes
