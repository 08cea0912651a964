#pragma once

// Finite strict 2-categories presented by explicit tables.
//
// All data is by name: objects, 1-cells (with source/target objects),
// 2-cells (with source/target 1-cells), identity choices, and total
// operation tables for 1-composition, vertical composition, and the two
// whiskerings.  Horizontal composition of 2-cells is derived from the
// whiskers.  Nothing is assumed: validate() checks referential integrity,
// totality, typing, and every strictness law, returning a list of
// violations (empty means the tables present a strict 2-category).
//
// Conventions:
//   comp1(g, f)   = g after f           (needs src(g) == tgt(f))
//   vcomp(b, a)   = b after a           (needs src2(b) == tgt2(a))
//   lwhisk(f, a)  = post-whisker by f   (a sits at X -> Y, f at Y -> Z)
//   rwhisk(a, f)  = pre-whisker by f    (f at W -> X, a at X -> Y)
//   hcomp2(b, a)  = b beside a, a on the earlier leg of the path
//                 = vcomp(rwhisk(b, tgt1(a)), lwhisk(src1(b), a))

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace boxtimes {

struct FinTwoCategory {
    struct One {
        std::string src, tgt;  // object names
        bool operator==(const One&) const = default;
    };
    struct Two {
        std::string src, tgt;  // 1-cell names (must be parallel)
        bool operator==(const Two&) const = default;
    };
    using Pair = std::pair<std::string, std::string>;

    std::vector<std::string> objects;
    std::map<std::string, One> one_cells;
    std::map<std::string, std::string> identity1;          // object -> 1-cell
    std::map<Pair, std::string> comp1_table;               // (g, f) -> g.f
    std::map<std::string, Two> two_cells;
    std::map<std::string, std::string> identity2;          // 1-cell -> 2-cell
    std::map<Pair, std::string> vcomp_table;               // (b, a) -> b*a
    std::map<Pair, std::string> lwhisk_table;              // (f, a) -> f.a
    std::map<Pair, std::string> rwhisk_table;              // (a, f) -> a.f

    bool operator==(const FinTwoCategory&) const = default;

    bool has_object(const std::string& x) const {
        for (const auto& o : objects)
            if (o == x) return true;
        return false;
    }

    const One& one(const std::string& f) const {
        auto it = one_cells.find(f);
        if (it == one_cells.end()) throw reference_error("unknown 1-cell: " + f);
        return it->second;
    }
    const Two& two(const std::string& a) const {
        auto it = two_cells.find(a);
        if (it == two_cells.end()) throw reference_error("unknown 2-cell: " + a);
        return it->second;
    }
    const std::string& id1(const std::string& x) const {
        auto it = identity1.find(x);
        if (it == identity1.end())
            throw reference_error("no identity 1-cell recorded for object " + x);
        return it->second;
    }
    const std::string& id2(const std::string& f) const {
        auto it = identity2.find(f);
        if (it == identity2.end())
            throw reference_error("no identity 2-cell recorded for 1-cell " + f);
        return it->second;
    }
    const std::string& comp1(const std::string& g, const std::string& f) const {
        auto it = comp1_table.find({g, f});
        if (it == comp1_table.end())
            throw reference_error("1-composition not tabulated: " + g + " . " + f);
        return it->second;
    }
    const std::string& vcomp(const std::string& b, const std::string& a) const {
        auto it = vcomp_table.find({b, a});
        if (it == vcomp_table.end())
            throw reference_error("vertical composition not tabulated: " + b + " * " + a);
        return it->second;
    }
    const std::string& lwhisk(const std::string& f, const std::string& a) const {
        auto it = lwhisk_table.find({f, a});
        if (it == lwhisk_table.end())
            throw reference_error("left whiskering not tabulated: " + f + " . " + a);
        return it->second;
    }
    const std::string& rwhisk(const std::string& a, const std::string& f) const {
        auto it = rwhisk_table.find({a, f});
        if (it == rwhisk_table.end())
            throw reference_error("right whiskering not tabulated: " + a + " . " + f);
        return it->second;
    }
    // Horizontal composite of 2-cells, a on the earlier leg.
    std::string hcomp2(const std::string& b, const std::string& a) const {
        return vcomp(rwhisk(b, two(a).tgt), lwhisk(two(b).src, a));
    }
};

struct Violation {
    std::string law;
    std::vector<std::string> witnesses;
    std::string detail;
};

namespace detail {

struct Checker {
    const FinTwoCategory& E;
    std::vector<Violation>& out;

    void report(std::string law, std::vector<std::string> wit, std::string detail) {
        out.push_back({std::move(law), std::move(wit), std::move(detail)});
    }

    bool composable1(const std::string& g, const std::string& f) const {
        return E.one(g).src == E.one(f).tgt;
    }
    bool composable2(const std::string& b, const std::string& a) const {
        return E.two(b).src == E.two(a).tgt;
    }
    // Is (f, a) a legal left-whiskering pair?
    bool lwhiskable(const std::string& f, const std::string& a) const {
        return E.one(f).src == E.one(E.two(a).src).tgt;
    }
    bool rwhiskable(const std::string& a, const std::string& f) const {
        return E.one(E.two(a).src).src == E.one(f).tgt;
    }

    void references() {
        std::map<std::string, int> seen;
        for (const auto& x : E.objects)
            if (++seen[x] == 2)
                report("reference", {x}, "object listed more than once");
        for (const auto& [f, cell] : E.one_cells) {
            if (!E.has_object(cell.src))
                report("reference", {f}, "source object " + cell.src + " not declared");
            if (!E.has_object(cell.tgt))
                report("reference", {f}, "target object " + cell.tgt + " not declared");
        }
        for (const auto& [a, cell] : E.two_cells) {
            bool ok = true;
            if (!E.one_cells.count(cell.src)) {
                report("reference", {a}, "source 1-cell " + cell.src + " not declared");
                ok = false;
            }
            if (!E.one_cells.count(cell.tgt)) {
                report("reference", {a}, "target 1-cell " + cell.tgt + " not declared");
                ok = false;
            }
            if (ok && !(E.one(cell.src).src == E.one(cell.tgt).src &&
                        E.one(cell.src).tgt == E.one(cell.tgt).tgt))
                report("two-typing", {a}, "boundary 1-cells are not parallel");
        }
        for (const auto& [x, f] : E.identity1) {
            if (!E.has_object(x))
                report("reference", {x}, "identity recorded for unknown object");
            else if (!E.one_cells.count(f))
                report("reference", {x, f}, "identity 1-cell not declared");
            else if (!(E.one(f).src == x && E.one(f).tgt == x))
                report("one-unit", {x, f}, "identity 1-cell is not an endo-cell of its object");
        }
        for (const auto& x : E.objects)
            if (!E.identity1.count(x))
                report("totality", {x}, "object has no identity 1-cell");
        for (const auto& [f, a] : E.identity2) {
            if (!E.one_cells.count(f))
                report("reference", {f}, "identity 2-cell recorded for unknown 1-cell");
            else if (!E.two_cells.count(a))
                report("reference", {f, a}, "identity 2-cell not declared");
            else if (!(E.two(a).src == f && E.two(a).tgt == f))
                report("vertical-unit", {f, a}, "identity 2-cell is not an endo-cell of its 1-cell");
        }
        for (const auto& [f, cell] : E.one_cells) {
            (void)cell;
            if (!E.identity2.count(f))
                report("totality", {f}, "1-cell has no identity 2-cell");
        }
    }

    void tables() {
        // comp1: defined exactly on composable pairs, with the right boundary.
        for (const auto& [gf, h] : E.comp1_table) {
            const auto& [g, f] = gf;
            if (!E.one_cells.count(g) || !E.one_cells.count(f) || !E.one_cells.count(h)) {
                report("reference", {g, f, h}, "1-composition entry uses unknown 1-cells");
                continue;
            }
            if (!composable1(g, f))
                report("totality", {g, f}, "1-composition tabulated for a non-composable pair");
            else if (!(E.one(h).src == E.one(f).src && E.one(h).tgt == E.one(g).tgt))
                report("one-composition-typing", {g, f, h}, "composite has the wrong boundary");
        }
        for (const auto& [g, gc] : E.one_cells)
            for (const auto& [f, fc] : E.one_cells)
                if (gc.src == fc.tgt && !E.comp1_table.count({g, f}))
                    report("totality", {g, f}, "composable 1-cells have no tabulated composite");

        for (const auto& [ba, c] : E.vcomp_table) {
            const auto& [b, a] = ba;
            if (!E.two_cells.count(b) || !E.two_cells.count(a) || !E.two_cells.count(c)) {
                report("reference", {b, a, c}, "vertical composition entry uses unknown 2-cells");
                continue;
            }
            if (!composable2(b, a))
                report("totality", {b, a}, "vertical composition tabulated for a non-composable pair");
            else if (!(E.two(c).src == E.two(a).src && E.two(c).tgt == E.two(b).tgt))
                report("vertical-typing", {b, a, c}, "vertical composite has the wrong boundary");
        }
        for (const auto& [b, bc] : E.two_cells)
            for (const auto& [a, ac] : E.two_cells)
                if (bc.src == ac.tgt && !E.vcomp_table.count({b, a}))
                    report("totality", {b, a}, "composable 2-cells have no tabulated vertical composite");

        for (const auto& [fa, c] : E.lwhisk_table) {
            const auto& [f, a] = fa;
            if (!E.one_cells.count(f) || !E.two_cells.count(a) || !E.two_cells.count(c)) {
                report("reference", {f, a, c}, "left whiskering entry uses unknown cells");
                continue;
            }
            if (!lwhiskable(f, a)) {
                report("totality", {f, a}, "left whiskering tabulated for a non-whiskerable pair");
            } else {
                auto s = E.comp1_table.find({f, E.two(a).src});
                auto t = E.comp1_table.find({f, E.two(a).tgt});
                if (s != E.comp1_table.end() && t != E.comp1_table.end() &&
                    !(E.two(c).src == s->second && E.two(c).tgt == t->second))
                    report("left-whisker-typing", {f, a, c}, "left whisker has the wrong boundary");
            }
        }
        for (const auto& [f, fc] : E.one_cells)
            for (const auto& [a, ac] : E.two_cells)
                if (fc.src == E.one(ac.src).tgt && !E.lwhisk_table.count({f, a}))
                    report("totality", {f, a}, "whiskerable pair has no tabulated left whisker");

        for (const auto& [af, c] : E.rwhisk_table) {
            const auto& [a, f] = af;
            if (!E.one_cells.count(f) || !E.two_cells.count(a) || !E.two_cells.count(c)) {
                report("reference", {a, f, c}, "right whiskering entry uses unknown cells");
                continue;
            }
            if (!rwhiskable(a, f)) {
                report("totality", {a, f}, "right whiskering tabulated for a non-whiskerable pair");
            } else {
                auto s = E.comp1_table.find({E.two(a).src, f});
                auto t = E.comp1_table.find({E.two(a).tgt, f});
                if (s != E.comp1_table.end() && t != E.comp1_table.end() &&
                    !(E.two(c).src == s->second && E.two(c).tgt == t->second))
                    report("right-whisker-typing", {a, f, c}, "right whisker has the wrong boundary");
            }
        }
        for (const auto& [a, ac] : E.two_cells)
            for (const auto& [f, fc] : E.one_cells)
                if (E.one(ac.src).src == fc.tgt && !E.rwhisk_table.count({a, f}))
                    report("totality", {a, f}, "whiskerable pair has no tabulated right whisker");
    }

    void one_dimensional_laws() {
        for (const auto& [x, _] : E.identity1) {
            if (!E.has_object(x) || !E.one_cells.count(E.identity1.at(x))) continue;
            const std::string& e = E.identity1.at(x);
            for (const auto& [f, fc] : E.one_cells) {
                if (fc.src == x && E.comp1_table.count({f, e}) && E.comp1(f, e) != f)
                    report("one-unit", {f, e}, "composing with the identity changes the cell");
                if (fc.tgt == x && E.comp1_table.count({e, f}) && E.comp1(e, f) != f)
                    report("one-unit", {e, f}, "composing with the identity changes the cell");
            }
        }
        for (const auto& [h, hc] : E.one_cells)
            for (const auto& [g, gc] : E.one_cells) {
                if (hc.src != gc.tgt) continue;
                for (const auto& [f, fc] : E.one_cells) {
                    if (gc.src != fc.tgt) continue;
                    if (!E.comp1_table.count({g, f}) || !E.comp1_table.count({h, g})) continue;
                    const std::string& gf = E.comp1(g, f);
                    const std::string& hg = E.comp1(h, g);
                    if (!E.comp1_table.count({h, gf}) || !E.comp1_table.count({hg, f})) continue;
                    if (E.comp1(h, gf) != E.comp1(hg, f))
                        report("one-associativity", {h, g, f},
                               E.comp1(h, gf) + " vs " + E.comp1(hg, f));
                }
            }
    }

    void vertical_laws() {
        for (const auto& [f, i] : E.identity2) {
            if (!E.one_cells.count(f) || !E.two_cells.count(i)) continue;
            for (const auto& [a, ac] : E.two_cells) {
                if (ac.src == f && E.vcomp_table.count({a, i}) && E.vcomp(a, i) != a)
                    report("vertical-unit", {a, i}, "composing with the identity changes the cell");
                if (ac.tgt == f && E.vcomp_table.count({i, a}) && E.vcomp(i, a) != a)
                    report("vertical-unit", {i, a}, "composing with the identity changes the cell");
            }
        }
        for (const auto& [c, cc] : E.two_cells)
            for (const auto& [b, bc] : E.two_cells) {
                if (cc.src != bc.tgt) continue;
                for (const auto& [a, ac] : E.two_cells) {
                    if (bc.src != ac.tgt) continue;
                    if (!E.vcomp_table.count({b, a}) || !E.vcomp_table.count({c, b})) continue;
                    const std::string& ba = E.vcomp(b, a);
                    const std::string& cb = E.vcomp(c, b);
                    if (!E.vcomp_table.count({c, ba}) || !E.vcomp_table.count({cb, a})) continue;
                    if (E.vcomp(c, ba) != E.vcomp(cb, a))
                        report("vertical-associativity", {c, b, a},
                               E.vcomp(c, ba) + " vs " + E.vcomp(cb, a));
                }
            }
    }

    void whisker_laws() {
        // Left whiskering is a functor in the 2-cell and strict in the 1-cell.
        for (const auto& [f, fc] : E.one_cells) {
            for (const auto& [p, pc] : E.one_cells) {
                if (fc.src != pc.tgt || !E.identity2.count(p)) continue;
                const std::string& i = E.id2(p);
                if (E.lwhisk_table.count({f, i}) && E.identity2.count(E.comp1(f, p)) &&
                    E.lwhisk(f, i) != E.id2(E.comp1(f, p)))
                    report("left-whisker-identity-cell", {f, i},
                           "whiskered identity is not the identity of the composite");
            }
            for (const auto& [b, bc] : E.two_cells)
                for (const auto& [a, ac] : E.two_cells) {
                    if (bc.src != ac.tgt) continue;
                    if (!lwhiskable(f, a) || !E.vcomp_table.count({b, a})) continue;
                    const std::string& ba = E.vcomp(b, a);
                    if (E.lwhisk(f, ba) != E.vcomp(E.lwhisk(f, b), E.lwhisk(f, a)))
                        report("left-whisker-vertical", {f, b, a},
                               "whiskering does not distribute over vertical composition");
                }
        }
        for (const auto& [a, ac] : E.two_cells) {
            const std::string& y = E.one(ac.src).tgt;
            if (E.identity1.count(y) && E.lwhisk_table.count({E.id1(y), a}) &&
                E.lwhisk(E.id1(y), a) != a)
                report("left-whisker-unit-arrow", {E.id1(y), a},
                       "whiskering by an identity 1-cell changes the cell");
        }
        for (const auto& [g, gc] : E.one_cells)
            for (const auto& [f, fc] : E.one_cells) {
                if (gc.src != fc.tgt || !E.comp1_table.count({g, f})) continue;
                const std::string& gf = E.comp1(g, f);
                for (const auto& [a, ac] : E.two_cells) {
                    if (!lwhiskable(f, a)) continue;
                    if (E.lwhisk(gf, a) != E.lwhisk(g, E.lwhisk(f, a)))
                        report("left-whisker-composite-arrow", {g, f, a},
                               "whiskering by a composite differs from iterated whiskering");
                }
            }

        // Right whiskering, mirrored.
        for (const auto& [f, fc] : E.one_cells) {
            for (const auto& [p, pc] : E.one_cells) {
                if (pc.src != fc.tgt || !E.identity2.count(p)) continue;
                const std::string& i = E.id2(p);
                if (E.rwhisk_table.count({i, f}) && E.identity2.count(E.comp1(p, f)) &&
                    E.rwhisk(i, f) != E.id2(E.comp1(p, f)))
                    report("right-whisker-identity-cell", {i, f},
                           "whiskered identity is not the identity of the composite");
            }
            for (const auto& [b, bc] : E.two_cells)
                for (const auto& [a, ac] : E.two_cells) {
                    if (bc.src != ac.tgt) continue;
                    if (!rwhiskable(a, f) || !E.vcomp_table.count({b, a})) continue;
                    const std::string& ba = E.vcomp(b, a);
                    if (E.rwhisk(ba, f) != E.vcomp(E.rwhisk(b, f), E.rwhisk(a, f)))
                        report("right-whisker-vertical", {b, a, f},
                               "whiskering does not distribute over vertical composition");
                }
        }
        for (const auto& [a, ac] : E.two_cells) {
            const std::string& x = E.one(ac.src).src;
            if (E.identity1.count(x) && E.rwhisk_table.count({a, E.id1(x)}) &&
                E.rwhisk(a, E.id1(x)) != a)
                report("right-whisker-unit-arrow", {a, E.id1(x)},
                       "whiskering by an identity 1-cell changes the cell");
        }
        for (const auto& [g, gc] : E.one_cells)
            for (const auto& [f, fc] : E.one_cells) {
                if (gc.src != fc.tgt || !E.comp1_table.count({g, f})) continue;
                const std::string& gf = E.comp1(g, f);
                for (const auto& [a, ac] : E.two_cells) {
                    if (!rwhiskable(a, gf)) continue;
                    if (E.rwhisk(a, gf) != E.rwhisk(E.rwhisk(a, g), f))
                        report("right-whisker-composite-arrow", {a, g, f},
                               "whiskering by a composite differs from iterated whiskering");
                }
            }

        // Whiskers on the two sides commute.
        for (const auto& [a, ac] : E.two_cells)
            for (const auto& [f, fc] : E.one_cells) {
                if (!rwhiskable(a, f)) continue;
                for (const auto& [g, gc] : E.one_cells) {
                    if (!lwhiskable(g, a)) continue;
                    if (E.lwhisk(g, E.rwhisk(a, f)) != E.rwhisk(E.lwhisk(g, a), f))
                        report("whisker-associativity", {g, a, f},
                               "left and right whiskering fail to commute");
                }
            }
    }

    void interchange() {
        // Middle-four: for a: f => f' at X -> Y and b: g => g' at Y -> Z, the
        // two ways of composing b beside a agree.
        for (const auto& [b, bc] : E.two_cells)
            for (const auto& [a, ac] : E.two_cells) {
                if (E.one(bc.src).src != E.one(ac.src).tgt) continue;
                const std::string& f = ac.src;
                const std::string& f2 = ac.tgt;
                const std::string& g = bc.src;
                const std::string& g2 = bc.tgt;
                const std::string lhs = E.vcomp(E.rwhisk(b, f2), E.lwhisk(g, a));
                const std::string rhs = E.vcomp(E.lwhisk(g2, a), E.rwhisk(b, f));
                if (lhs != rhs)
                    report("middle-four", {b, a}, lhs + " vs " + rhs);
            }
    }
};

} // namespace detail

// Full law check.  Structural problems (dangling references, missing or
// spurious table entries) are reported first; law checks that would need the
// missing data are skipped rather than crashing, so a single root cause does
// not cascade.
inline std::vector<Violation> validate(const FinTwoCategory& E) {
    std::vector<Violation> out;
    detail::Checker ck{E, out};
    ck.references();
    if (!out.empty()) return out;
    ck.tables();
    bool structural = !out.empty();
    ck.one_dimensional_laws();
    ck.vertical_laws();
    if (structural) return out;  // whisker/interchange laws assume total tables
    ck.whisker_laws();
    ck.interchange();
    return out;
}

inline std::string pair_id(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

inline FinTwoCategory product(const FinTwoCategory& C, const FinTwoCategory& D) {
    FinTwoCategory P;
    for (const auto& x : C.objects)
        for (const auto& y : D.objects) P.objects.push_back(pair_id(x, y));
    for (const auto& [f, fc] : C.one_cells)
        for (const auto& [g, gc] : D.one_cells)
            P.one_cells[pair_id(f, g)] = {pair_id(fc.src, gc.src), pair_id(fc.tgt, gc.tgt)};
    for (const auto& x : C.objects)
        for (const auto& y : D.objects)
            P.identity1[pair_id(x, y)] = pair_id(C.id1(x), D.id1(y));
    for (const auto& [gf, h] : C.comp1_table)
        for (const auto& [gf2, h2] : D.comp1_table)
            P.comp1_table[{pair_id(gf.first, gf2.first), pair_id(gf.second, gf2.second)}] =
                pair_id(h, h2);
    for (const auto& [a, ac] : C.two_cells)
        for (const auto& [b, bc] : D.two_cells)
            P.two_cells[pair_id(a, b)] = {pair_id(ac.src, bc.src), pair_id(ac.tgt, bc.tgt)};
    for (const auto& [f, fc] : C.one_cells)
        for (const auto& [g, gc] : D.one_cells) {
            (void)fc;
            (void)gc;
            P.identity2[pair_id(f, g)] = pair_id(C.id2(f), D.id2(g));
        }
    for (const auto& [ba, c] : C.vcomp_table)
        for (const auto& [ba2, c2] : D.vcomp_table)
            P.vcomp_table[{pair_id(ba.first, ba2.first), pair_id(ba.second, ba2.second)}] =
                pair_id(c, c2);
    for (const auto& [fa, c] : C.lwhisk_table)
        for (const auto& [fa2, c2] : D.lwhisk_table)
            P.lwhisk_table[{pair_id(fa.first, fa2.first), pair_id(fa.second, fa2.second)}] =
                pair_id(c, c2);
    for (const auto& [af, c] : C.rwhisk_table)
        for (const auto& [af2, c2] : D.rwhisk_table)
            P.rwhisk_table[{pair_id(af.first, af2.first), pair_id(af.second, af2.second)}] =
                pair_id(c, c2);
    return P;
}

// Reverse all 1-cells.  2-cells keep their direction; the whiskering sides
// swap.
inline FinTwoCategory op_dual(const FinTwoCategory& C) {
    FinTwoCategory D;
    D.objects = C.objects;
    for (const auto& [f, fc] : C.one_cells) D.one_cells[f] = {fc.tgt, fc.src};
    D.identity1 = C.identity1;
    for (const auto& [gf, h] : C.comp1_table)
        D.comp1_table[{gf.second, gf.first}] = h;
    D.two_cells = C.two_cells;
    D.identity2 = C.identity2;
    D.vcomp_table = C.vcomp_table;
    for (const auto& [fa, c] : C.lwhisk_table)
        D.rwhisk_table[{fa.second, fa.first}] = c;
    for (const auto& [af, c] : C.rwhisk_table)
        D.lwhisk_table[{af.second, af.first}] = c;
    return D;
}

// Reverse all 2-cells.  1-cell data is untouched; vertical composition
// reverses, whiskering keys are unchanged.
inline FinTwoCategory co_dual(const FinTwoCategory& C) {
    FinTwoCategory D;
    D.objects = C.objects;
    D.one_cells = C.one_cells;
    D.identity1 = C.identity1;
    D.comp1_table = C.comp1_table;
    for (const auto& [a, ac] : C.two_cells) D.two_cells[a] = {ac.tgt, ac.src};
    D.identity2 = C.identity2;
    for (const auto& [ba, c] : C.vcomp_table)
        D.vcomp_table[{ba.second, ba.first}] = c;
    D.lwhisk_table = C.lwhisk_table;
    D.rwhisk_table = C.rwhisk_table;
    return D;
}

// Add the reserved identity cells id1_X / id2_f for every object and 1-cell
// that lacks one.  Refuses to reuse an existing cell of the reserved name
// that is not already the recorded identity.
inline void synthesize_identities(FinTwoCategory& E) {
    for (const auto& x : E.objects) {
        if (E.identity1.count(x)) continue;
        std::string name = "id1_" + x;
        if (E.one_cells.count(name))
            throw shape_error("1-cell name " + name +
                              " is reserved for a synthesized identity");
        E.one_cells[name] = {x, x};
        E.identity1[x] = name;
    }
    std::vector<std::string> ones;
    for (const auto& [f, cell] : E.one_cells) {
        (void)cell;
        ones.push_back(f);
    }
    for (const auto& f : ones) {
        if (E.identity2.count(f)) continue;
        std::string name = "id2_" + f;
        if (E.two_cells.count(name))
            throw shape_error("2-cell name " + name +
                              " is reserved for a synthesized identity");
        E.two_cells[name] = {f, f};
        E.identity2[f] = name;
    }
}

// Fill in every table entry whose value is forced by the unit laws:
// composites with identities, whiskerings by identity 1-cells, and
// whiskerings of identity 2-cells (the latter need the underlying 1-cell
// composite, so the fill iterates to a fixpoint).  Existing entries are
// never overwritten; if a declared entry disagrees with the forced value,
// validate() will say so.
inline void complete_identity_structure(FinTwoCategory& E) {
    auto try_set = [](auto& table, const auto& key, const std::string& value) {
        return table.emplace(key, value).second;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [x, e0] : E.identity1) {
            for (const auto& [f, fc] : E.one_cells) {
                if (fc.src == x) changed |= try_set(E.comp1_table, FinTwoCategory::Pair{f, e0}, f);
                if (fc.tgt == x) changed |= try_set(E.comp1_table, FinTwoCategory::Pair{e0, f}, f);
            }
            for (const auto& [a, ac] : E.two_cells) {
                if (E.one(ac.src).tgt == x)
                    changed |= try_set(E.lwhisk_table, FinTwoCategory::Pair{e0, a}, a);
                if (E.one(ac.src).src == x)
                    changed |= try_set(E.rwhisk_table, FinTwoCategory::Pair{a, e0}, a);
            }
        }
        for (const auto& [f, i] : E.identity2) {
            for (const auto& [a, ac] : E.two_cells) {
                if (ac.src == f) changed |= try_set(E.vcomp_table, FinTwoCategory::Pair{a, i}, a);
                if (ac.tgt == f) changed |= try_set(E.vcomp_table, FinTwoCategory::Pair{i, a}, a);
            }
        }
        for (const auto& [p, i] : E.identity2) {
            for (const auto& [f, fc] : E.one_cells) {
                if (fc.src == E.one(p).tgt) {
                    auto gf = E.comp1_table.find({f, p});
                    if (gf != E.comp1_table.end() && E.identity2.count(gf->second))
                        changed |= try_set(E.lwhisk_table, FinTwoCategory::Pair{f, i},
                                           E.identity2.at(gf->second));
                }
                if (fc.tgt == E.one(p).src) {
                    auto pf = E.comp1_table.find({p, f});
                    if (pf != E.comp1_table.end() && E.identity2.count(pf->second))
                        changed |= try_set(E.rwhisk_table, FinTwoCategory::Pair{i, f},
                                           E.identity2.at(pf->second));
                }
            }
        }
    }
}

// One object, 1-cells a0..ak composing by truncated addition, and a unique
// 2-cell ai => aj whenever i <= j.  Thin in dimension 2, so every law holds
// by uniqueness; useful as a small but non-discrete target.
inline FinTwoCategory build_suspended_poset_monoid(int k) {
    if (k < 0) throw range_error("suspension level must be non-negative");
    FinTwoCategory E;
    E.objects = {"*"};
    auto arrow = [](int i) { return "a" + std::to_string(i); };
    auto cell = [&](int i, int j) {
        return i == j ? "id2_a" + std::to_string(i)
                      : "m" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (int i = 0; i <= k; ++i) E.one_cells[arrow(i)] = {"*", "*"};
    E.identity1["*"] = arrow(0);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
            E.comp1_table[{arrow(i), arrow(j)}] = arrow(std::min(i + j, k));
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            E.two_cells[cell(i, j)] = {arrow(i), arrow(j)};
    for (int i = 0; i <= k; ++i) E.identity2[arrow(i)] = cell(i, i);
    for (int i = 0; i <= k; ++i)
        for (int j = i; j <= k; ++j)
            for (int l = j; l <= k; ++l)
                E.vcomp_table[{cell(j, l), cell(i, j)}] = cell(i, l);
    for (int p = 0; p <= k; ++p)
        for (int i = 0; i <= k; ++i)
            for (int j = i; j <= k; ++j) {
                E.lwhisk_table[{arrow(p), cell(i, j)}] =
                    cell(std::min(p + i, k), std::min(p + j, k));
                E.rwhisk_table[{cell(i, j), arrow(p)}] =
                    cell(std::min(i + p, k), std::min(j + p, k));
            }
    return E;
}

} // namespace boxtimes
