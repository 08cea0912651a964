#pragma once
// Doubly-nested lax functor data into a finite strict 2-category, and its
// correspondence with generator assignments for the interleaving tensor.
//
//  * LaxNestObject: for each object of the first factor a lax functor out of
//    the second, for each object of the second a lax functor out of the
//    first, glued by swap cells; validate_object checks every axiom
//    instance.
//  * to_assignment / from_assignment: the data-level bijection with
//    GeneratorAssignment (objects <-> node images, arrows <-> edge images,
//    structure cells <-> generator images).
//  * LaxNestArrow / LaxNestTwoCell: transformation and modification data
//    between such objects, with direct validators.
//  * arrow_cylinder / twocell_cylinder: the finite 2-categories of squares
//    (resp. cylinders) over a target, together with translations that turn
//    the arrow and modification axioms into membership and relation checks
//    for an assignment into the cylinder.
//  * enumerate_assignments / enumerate_laxnest_objects: exhaustive search
//    over all relation-clean assignments at small scale.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boxtimes/computad.hpp"
#include "boxtimes/errors.hpp"
#include "boxtimes/fin2cat.hpp"
#include "boxtimes/paths.hpp"

namespace boxtimes {

inline std::string nest_key(const std::string& a, const std::string& b) {
    return a + "|" + b;
}
inline std::string nest_key(const std::string& a, const std::string& b,
                            const std::string& c) {
    return a + "|" + b + "|" + c;
}

inline const std::string& nest_at(const std::map<std::string, std::string>& m,
                                  const std::string& key, const char* role) {
    auto it = m.find(key);
    if (it == m.end())
        throw reference_error(std::string("no ") + role + " entry for " + key);
    return it->second;
}

// ---------------------------------------------------------------------------
// Objects.

struct LaxNestObject {
    FinTwoCategory target;
    std::map<std::string, std::string> obj;    // (C-object, D-object) -> object
    std::map<std::string, std::string> darr;   // (C-object, D-1-cell) -> 1-cell
    std::map<std::string, std::string> carr;   // (C-1-cell, D-object) -> 1-cell
    std::map<std::string, std::string> d2;     // (C-object, D-2-cell) -> 2-cell
    std::map<std::string, std::string> c2;     // (C-2-cell, D-object) -> 2-cell
    std::map<std::string, std::string> eta_d;  // (C-object, D-object) -> 2-cell
    std::map<std::string, std::string> mu_d;   // (C-object, d, d') -> 2-cell
    std::map<std::string, std::string> eta_c;  // (C-object, D-object) -> 2-cell
    std::map<std::string, std::string> mu_c;   // (c, c', D-object) -> 2-cell
    std::map<std::string, std::string> swap;   // (C-1-cell, D-1-cell) -> 2-cell

    bool operator==(const LaxNestObject&) const = default;
};

// The lax functor out of the second factor held at one object of the first.
inline LaxFunctorData d_side_functor(const FinTwoCategory& D,
                                     const LaxNestObject& B,
                                     const std::string& x) {
    LaxFunctorData F;
    for (const auto& p : D.objects) {
        auto it = B.obj.find(nest_key(x, p));
        if (it != B.obj.end()) F.obj[p] = it->second;
        auto eu = B.eta_d.find(nest_key(x, p));
        if (eu != B.eta_d.end()) F.eta[p] = eu->second;
    }
    for (const auto& [d, dc] : D.one_cells) {
        (void)dc;
        auto it = B.darr.find(nest_key(x, d));
        if (it != B.darr.end()) F.one[d] = it->second;
    }
    for (const auto& [a, ac] : D.two_cells) {
        (void)ac;
        auto it = B.d2.find(nest_key(x, a));
        if (it != B.d2.end()) F.two[a] = it->second;
    }
    for (const auto& [g, gc] : D.one_cells)
        for (const auto& [f, fc] : D.one_cells) {
            if (gc.src != fc.tgt) continue;
            auto it = B.mu_d.find(nest_key(x, f, g));
            if (it != B.mu_d.end()) F.mu[{f, g}] = it->second;
        }
    return F;
}

// The lax functor out of the first factor held at one object of the second.
inline LaxFunctorData c_side_functor(const FinTwoCategory& C,
                                     const LaxNestObject& B,
                                     const std::string& p) {
    LaxFunctorData F;
    for (const auto& x : C.objects) {
        auto it = B.obj.find(nest_key(x, p));
        if (it != B.obj.end()) F.obj[x] = it->second;
        auto eu = B.eta_c.find(nest_key(x, p));
        if (eu != B.eta_c.end()) F.eta[x] = eu->second;
    }
    for (const auto& [c, cc] : C.one_cells) {
        (void)cc;
        auto it = B.carr.find(nest_key(c, p));
        if (it != B.carr.end()) F.one[c] = it->second;
    }
    for (const auto& [a, ac] : C.two_cells) {
        (void)ac;
        auto it = B.c2.find(nest_key(a, p));
        if (it != B.c2.end()) F.two[a] = it->second;
    }
    for (const auto& [g, gc] : C.one_cells)
        for (const auto& [f, fc] : C.one_cells) {
            if (gc.src != fc.tgt) continue;
            auto it = B.mu_c.find(nest_key(f, g, p));
            if (it != B.mu_c.end()) F.mu[{f, g}] = it->second;
        }
    return F;
}

inline std::vector<Violation> validate_object(const FinTwoCategory& C,
                                              const FinTwoCategory& D,
                                              const LaxNestObject& B) {
    std::vector<Violation> out;
    const FinTwoCategory& E = B.target;

    for (const auto& x : C.objects)
        for (auto v : validate_lax_functor(D, E, d_side_functor(D, B, x))) {
            v.law = "d-" + v.law;
            v.witnesses.insert(v.witnesses.begin(), x);
            v.detail = "second-factor data at " + x + ": " + v.detail;
            out.push_back(std::move(v));
        }
    for (const auto& p : D.objects)
        for (auto v : validate_lax_functor(C, E, c_side_functor(C, B, p))) {
            v.law = "c-" + v.law;
            v.witnesses.insert(v.witnesses.begin(), p);
            v.detail = "first-factor data at " + p + ": " + v.detail;
            out.push_back(std::move(v));
        }

    for (const auto& [c, cc] : C.one_cells)
        for (const auto& [d, dc] : D.one_cells) {
            auto it = B.swap.find(nest_key(c, d));
            if (it == B.swap.end()) {
                out.push_back({"swap-cell-typing", {c, d}, "swap cell missing"});
                continue;
            }
            if (!E.two_cells.count(it->second)) {
                out.push_back({"swap-cell-typing",
                               {c, d},
                               "swap cell is not a 2-cell of the target"});
                continue;
            }
            try {
                std::string s1 = E.comp1(
                    nest_at(B.darr, nest_key(cc.tgt, d), "second-factor arrow"),
                    nest_at(B.carr, nest_key(c, dc.src), "first-factor arrow"));
                std::string t1 = E.comp1(
                    nest_at(B.carr, nest_key(c, dc.tgt), "first-factor arrow"),
                    nest_at(B.darr, nest_key(cc.src, d), "second-factor arrow"));
                if (!(E.two(it->second).src == s1 && E.two(it->second).tgt == t1))
                    out.push_back({"swap-cell-typing",
                                   {c, d},
                                   "swap cell has the wrong boundary"});
            } catch (const reference_error& e) {
                out.push_back({"swap-cell-typing",
                               {c, d},
                               std::string("boundary could not be computed: ") +
                                   e.what()});
            }
        }
    if (!out.empty()) return out;  // the axioms below assume well-typed data

    auto OB = [&](const std::string& x, const std::string& p) {
        return nest_at(B.obj, nest_key(x, p), "object image");
    };
    (void)OB;
    auto DA = [&](const std::string& x, const std::string& d) {
        return nest_at(B.darr, nest_key(x, d), "second-factor arrow");
    };
    auto CA = [&](const std::string& c, const std::string& p) {
        return nest_at(B.carr, nest_key(c, p), "first-factor arrow");
    };
    auto D2 = [&](const std::string& x, const std::string& a) {
        return nest_at(B.d2, nest_key(x, a), "second-factor 2-cell");
    };
    auto C2 = [&](const std::string& a, const std::string& p) {
        return nest_at(B.c2, nest_key(a, p), "first-factor 2-cell");
    };
    auto ED = [&](const std::string& x, const std::string& p) {
        return nest_at(B.eta_d, nest_key(x, p), "second-factor unit");
    };
    auto MD = [&](const std::string& x, const std::string& d,
                  const std::string& dp) {
        return nest_at(B.mu_d, nest_key(x, d, dp), "second-factor composition");
    };
    auto EC = [&](const std::string& x, const std::string& p) {
        return nest_at(B.eta_c, nest_key(x, p), "first-factor unit");
    };
    auto MC = [&](const std::string& c, const std::string& cp,
                  const std::string& p) {
        return nest_at(B.mu_c, nest_key(c, cp, p), "first-factor composition");
    };
    auto SW = [&](const std::string& c, const std::string& d) {
        return nest_at(B.swap, nest_key(c, d), "swap");
    };
    auto check_eq = [&](const char* law, std::vector<std::string> wit,
                        auto&& fn) {
        try {
            auto [l, r] = fn();
            if (l != r) out.push_back({law, std::move(wit), l + " vs " + r});
        } catch (const reference_error& e) {
            out.push_back({law, std::move(wit),
                           std::string("evaluation failed: ") + e.what()});
        }
    };
    using SS = std::pair<std::string, std::string>;

    // Swap cells are natural in the second coordinate.
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& [a, ac] : D.two_cells) {
            const std::string& x = cc.src;
            const std::string& y = cc.tgt;
            const std::string& d = ac.src;
            const std::string& db = ac.tgt;
            std::string p = D.one(d).src, q = D.one(d).tgt;
            check_eq("swap-natural-d", {c, a}, [&]() -> SS {
                return {E.vcomp(E.lwhisk(CA(c, q), D2(x, a)), SW(c, d)),
                        E.vcomp(SW(c, db), E.rwhisk(D2(y, a), CA(c, p)))};
            });
        }
    // Swap cells turn the first-factor 2-cell images into modifications.
    for (const auto& [a, ac] : C.two_cells)
        for (const auto& [d, dc] : D.one_cells) {
            const std::string& c = ac.src;
            const std::string& cb = ac.tgt;
            std::string x = C.one(c).src, y = C.one(c).tgt;
            const std::string& p = dc.src;
            const std::string& q = dc.tgt;
            check_eq("swap-modification", {a, d}, [&]() -> SS {
                return {E.vcomp(SW(cb, d), E.lwhisk(DA(y, d), C2(a, p))),
                        E.vcomp(E.rwhisk(C2(a, q), DA(x, d)), SW(c, d))};
            });
        }
    // Swapping past an identity second-factor arrow matches the units.
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& p : D.objects) {
            const std::string& x = cc.src;
            const std::string& y = cc.tgt;
            check_eq("swap-unit-d", {c, p}, [&]() -> SS {
                return {E.vcomp(SW(c, D.id1(p)), E.rwhisk(ED(y, p), CA(c, p))),
                        E.lwhisk(CA(c, p), ED(x, p))};
            });
        }
    // Swapping past a second-factor composite is the staircase of swaps.
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& [d, dc] : D.one_cells)
            for (const auto& [dp, dpc] : D.one_cells) {
                if (dpc.src != dc.tgt) continue;
                const std::string& x = cc.src;
                const std::string& y = cc.tgt;
                const std::string& p = dc.src;
                const std::string& r = dpc.tgt;
                check_eq("swap-comp-d", {c, d, dp}, [&]() -> SS {
                    return {E.vcomp(SW(c, D.comp1(dp, d)),
                                    E.rwhisk(MD(y, d, dp), CA(c, p))),
                            E.vcomp(E.lwhisk(CA(c, r), MD(x, d, dp)),
                                    E.vcomp(E.rwhisk(SW(c, dp), DA(x, d)),
                                            E.lwhisk(DA(y, dp), SW(c, d))))};
                });
            }
    // Swapping an identity first-factor arrow matches the units.
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells) {
            const std::string& p = dc.src;
            const std::string& q = dc.tgt;
            check_eq("swap-unit-c", {x, d}, [&]() -> SS {
                return {E.vcomp(SW(C.id1(x), d), E.lwhisk(DA(x, d), EC(x, p))),
                        E.rwhisk(EC(x, q), DA(x, d))};
            });
        }
    // Swapping a first-factor composite is the staircase of swaps.
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& [cp, cpc] : C.one_cells) {
            if (cpc.src != cc.tgt) continue;
            const std::string& x = cc.src;
            const std::string& z = cpc.tgt;
            for (const auto& [d, dc] : D.one_cells) {
                const std::string& p = dc.src;
                const std::string& q = dc.tgt;
                check_eq("swap-comp-c", {c, cp, d}, [&]() -> SS {
                    return {E.vcomp(SW(C.comp1(cp, c), d),
                                    E.lwhisk(DA(z, d), MC(c, cp, p))),
                            E.vcomp(E.rwhisk(MC(c, cp, q), DA(x, d)),
                                    E.vcomp(E.lwhisk(CA(cp, q), SW(c, d)),
                                            E.rwhisk(SW(cp, d), CA(c, p))))};
                });
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// The data-level bijection with generator assignments.

inline GeneratorAssignment to_assignment(const FinTwoCategory& C,
                                         const FinTwoCategory& D,
                                         const LaxNestObject& B) {
    GeneratorAssignment V;
    V.target = B.target;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects)
            V.node[node_key(x, p)] =
                nest_at(B.obj, nest_key(x, p), "object image");
    for (const auto& [c, cc] : C.one_cells) {
        (void)cc;
        for (const auto& p : D.objects)
            V.edge[cedge_key(c, p)] =
                nest_at(B.carr, nest_key(c, p), "first-factor arrow");
    }
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells) {
            (void)dc;
            V.edge[dedge_key(x, d)] =
                nest_at(B.darr, nest_key(x, d), "second-factor arrow");
        }
    for (const auto& g : tensor_generators(C, D)) {
        std::string img;
        switch (g.kind) {
            case GenKind::CBoxDelta:
                img = nest_at(B.d2, nest_key(g.a, g.b), "second-factor 2-cell");
                break;
            case GenKind::GammaBoxD:
                img = nest_at(B.c2, nest_key(g.a, g.b), "first-factor 2-cell");
                break;
            case GenKind::Id1CD:
                img = nest_at(B.eta_c, nest_key(g.a, g.b), "first-factor unit");
                break;
            case GenKind::IdC1D:
                img = nest_at(B.eta_d, nest_key(g.a, g.b), "second-factor unit");
                break;
            case GenKind::CompCcD:
                img = nest_at(B.mu_c, nest_key(g.a, g.b, g.c),
                              "first-factor composition");
                break;
            case GenKind::CompCdd:
                img = nest_at(B.mu_d, nest_key(g.a, g.b, g.c),
                              "second-factor composition");
                break;
            case GenKind::SwapCd:
                img = nest_at(B.swap, nest_key(g.a, g.b), "swap");
                break;
        }
        V.gen[gen_key(g)] = img;
    }
    return V;
}

inline LaxNestObject from_assignment(const FinTwoCategory& C,
                                     const FinTwoCategory& D,
                                     const GeneratorAssignment& V) {
    LaxNestObject B;
    B.target = V.target;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects)
            B.obj[nest_key(x, p)] = detail::va_node(V, node_key(x, p));
    for (const auto& [c, cc] : C.one_cells) {
        (void)cc;
        for (const auto& p : D.objects)
            B.carr[nest_key(c, p)] = detail::va_edge(V, cedge_key(c, p));
    }
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells) {
            (void)dc;
            B.darr[nest_key(x, d)] = detail::va_edge(V, dedge_key(x, d));
        }
    for (const auto& g : tensor_generators(C, D)) {
        const std::string& img = detail::va_gen(V, gen_key(g));
        switch (g.kind) {
            case GenKind::CBoxDelta: B.d2[nest_key(g.a, g.b)] = img; break;
            case GenKind::GammaBoxD: B.c2[nest_key(g.a, g.b)] = img; break;
            case GenKind::Id1CD: B.eta_c[nest_key(g.a, g.b)] = img; break;
            case GenKind::IdC1D: B.eta_d[nest_key(g.a, g.b)] = img; break;
            case GenKind::CompCcD: B.mu_c[nest_key(g.a, g.b, g.c)] = img; break;
            case GenKind::CompCdd: B.mu_d[nest_key(g.a, g.b, g.c)] = img; break;
            case GenKind::SwapCd: B.swap[nest_key(g.a, g.b)] = img; break;
        }
    }
    return B;
}

// ---------------------------------------------------------------------------
// Arrows and 2-cells between objects.

struct LaxNestArrow {
    std::map<std::string, std::string> comp;  // (C-object, D-object) -> 1-cell
    std::map<std::string, std::string> sigd;  // (C-object, D-1-cell) -> 2-cell
    std::map<std::string, std::string> sigc;  // (C-1-cell, D-object) -> 2-cell

    bool operator==(const LaxNestArrow&) const = default;
};

struct LaxNestTwoCell {
    std::map<std::string, std::string> comp;  // (C-object, D-object) -> 2-cell

    bool operator==(const LaxNestTwoCell&) const = default;
};

inline LaxNestArrow identity_arrow(const FinTwoCategory& C,
                                   const FinTwoCategory& D,
                                   const LaxNestObject& B) {
    const FinTwoCategory& E = B.target;
    LaxNestArrow b;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects)
            b.comp[nest_key(x, p)] =
                E.id1(nest_at(B.obj, nest_key(x, p), "object image"));
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells) {
            (void)dc;
            b.sigd[nest_key(x, d)] =
                E.id2(nest_at(B.darr, nest_key(x, d), "second-factor arrow"));
        }
    for (const auto& [c, cc] : C.one_cells) {
        (void)cc;
        for (const auto& p : D.objects)
            b.sigc[nest_key(c, p)] =
                E.id2(nest_at(B.carr, nest_key(c, p), "first-factor arrow"));
    }
    return b;
}

inline LaxNestTwoCell identity_twocell(const FinTwoCategory& C,
                                       const FinTwoCategory& D,
                                       const FinTwoCategory& E,
                                       const LaxNestArrow& b) {
    LaxNestTwoCell t;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects)
            t.comp[nest_key(x, p)] =
                E.id2(nest_at(b.comp, nest_key(x, p), "arrow component"));
    return t;
}

inline std::vector<Violation> validate_arrow(const FinTwoCategory& C,
                                             const FinTwoCategory& D,
                                             const LaxNestObject& B,
                                             const LaxNestObject& B2,
                                             const LaxNestArrow& b) {
    if (!(B.target == B2.target))
        throw shape_error("arrow endpoints live in different targets");
    const FinTwoCategory& E = B.target;
    std::vector<Violation> out;

    auto CMP = [&](const std::string& x, const std::string& p) {
        return nest_at(b.comp, nest_key(x, p), "arrow component");
    };
    auto SGD = [&](const std::string& x, const std::string& d) {
        return nest_at(b.sigd, nest_key(x, d), "second-factor square");
    };
    auto SGC = [&](const std::string& c, const std::string& p) {
        return nest_at(b.sigc, nest_key(c, p), "first-factor square");
    };
    auto DA = [&](const std::string& x, const std::string& d) {
        return nest_at(B.darr, nest_key(x, d), "second-factor arrow");
    };
    auto DA2 = [&](const std::string& x, const std::string& d) {
        return nest_at(B2.darr, nest_key(x, d), "second-factor arrow");
    };
    auto CA = [&](const std::string& c, const std::string& p) {
        return nest_at(B.carr, nest_key(c, p), "first-factor arrow");
    };
    auto CA2 = [&](const std::string& c, const std::string& p) {
        return nest_at(B2.carr, nest_key(c, p), "first-factor arrow");
    };

    // Component typing.
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) {
            auto it = b.comp.find(nest_key(x, p));
            if (it == b.comp.end()) {
                out.push_back(
                    {"arrow-component-typing", {x, p}, "component missing"});
                continue;
            }
            if (!E.one_cells.count(it->second)) {
                out.push_back({"arrow-component-typing",
                               {x, p},
                               "component is not a 1-cell of the target"});
                continue;
            }
            try {
                if (!(E.one(it->second).src ==
                          nest_at(B.obj, nest_key(x, p), "object image") &&
                      E.one(it->second).tgt ==
                          nest_at(B2.obj, nest_key(x, p), "object image")))
                    out.push_back({"arrow-component-typing",
                                   {x, p},
                                   "component has the wrong boundary"});
            } catch (const reference_error& e) {
                out.push_back({"arrow-component-typing", {x, p}, e.what()});
            }
        }
    auto square_typing = [&](const char* law, const std::string& key,
                             const std::map<std::string, std::string>& m,
                             std::vector<std::string> wit, auto&& src_fn,
                             auto&& tgt_fn) {
        auto it = m.find(key);
        if (it == m.end()) {
            out.push_back({law, std::move(wit), "square cell missing"});
            return;
        }
        if (!E.two_cells.count(it->second)) {
            out.push_back(
                {law, std::move(wit), "square cell is not a 2-cell of the target"});
            return;
        }
        try {
            if (!(E.two(it->second).src == src_fn() &&
                  E.two(it->second).tgt == tgt_fn()))
                out.push_back(
                    {law, std::move(wit), "square cell has the wrong boundary"});
        } catch (const reference_error& e) {
            out.push_back({law, std::move(wit), e.what()});
        }
    };
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells)
            square_typing(
                "arrow-sigd-typing", nest_key(x, d), b.sigd, {x, d},
                [&]() { return E.comp1(DA2(x, d), CMP(x, dc.src)); },
                [&]() { return E.comp1(CMP(x, dc.tgt), DA(x, d)); });
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& p : D.objects)
            square_typing(
                "arrow-sigc-typing", nest_key(c, p), b.sigc, {c, p},
                [&]() { return E.comp1(CA2(c, p), CMP(cc.src, p)); },
                [&]() { return E.comp1(CMP(cc.tgt, p), CA(c, p)); });
    if (!out.empty()) return out;

    auto D2B = [&](const std::string& x, const std::string& a) {
        return nest_at(B.d2, nest_key(x, a), "second-factor 2-cell");
    };
    auto D2B2 = [&](const std::string& x, const std::string& a) {
        return nest_at(B2.d2, nest_key(x, a), "second-factor 2-cell");
    };
    auto C2B = [&](const std::string& a, const std::string& p) {
        return nest_at(B.c2, nest_key(a, p), "first-factor 2-cell");
    };
    auto C2B2 = [&](const std::string& a, const std::string& p) {
        return nest_at(B2.c2, nest_key(a, p), "first-factor 2-cell");
    };
    auto EDB = [&](const std::string& x, const std::string& p) {
        return nest_at(B.eta_d, nest_key(x, p), "second-factor unit");
    };
    auto EDB2 = [&](const std::string& x, const std::string& p) {
        return nest_at(B2.eta_d, nest_key(x, p), "second-factor unit");
    };
    auto MDB = [&](const std::string& x, const std::string& d,
                   const std::string& dp) {
        return nest_at(B.mu_d, nest_key(x, d, dp), "second-factor composition");
    };
    auto MDB2 = [&](const std::string& x, const std::string& d,
                    const std::string& dp) {
        return nest_at(B2.mu_d, nest_key(x, d, dp), "second-factor composition");
    };
    auto ECB = [&](const std::string& x, const std::string& p) {
        return nest_at(B.eta_c, nest_key(x, p), "first-factor unit");
    };
    auto ECB2 = [&](const std::string& x, const std::string& p) {
        return nest_at(B2.eta_c, nest_key(x, p), "first-factor unit");
    };
    auto MCB = [&](const std::string& c, const std::string& cp,
                   const std::string& p) {
        return nest_at(B.mu_c, nest_key(c, cp, p), "first-factor composition");
    };
    auto MCB2 = [&](const std::string& c, const std::string& cp,
                    const std::string& p) {
        return nest_at(B2.mu_c, nest_key(c, cp, p), "first-factor composition");
    };
    auto SWB = [&](const std::string& c, const std::string& d) {
        return nest_at(B.swap, nest_key(c, d), "swap");
    };
    auto SWB2 = [&](const std::string& c, const std::string& d) {
        return nest_at(B2.swap, nest_key(c, d), "swap");
    };
    auto check_eq = [&](const char* law, std::vector<std::string> wit,
                        auto&& fn) {
        try {
            auto [l, r] = fn();
            if (l != r) out.push_back({law, std::move(wit), l + " vs " + r});
        } catch (const reference_error& e) {
            out.push_back({law, std::move(wit),
                           std::string("evaluation failed: ") + e.what()});
        }
    };
    using SS = std::pair<std::string, std::string>;

    for (const auto& x : C.objects) {
        for (const auto& [a, ac] : D.two_cells) {
            const std::string& d = ac.src;
            const std::string& db = ac.tgt;
            std::string p = D.one(d).src, q = D.one(d).tgt;
            check_eq("arrow-natural-d", {x, a}, [&]() -> SS {
                return {E.vcomp(SGD(x, db), E.rwhisk(D2B2(x, a), CMP(x, p))),
                        E.vcomp(E.lwhisk(CMP(x, q), D2B(x, a)), SGD(x, d))};
            });
        }
        for (const auto& p : D.objects)
            check_eq("arrow-unit-d", {x, p}, [&]() -> SS {
                return {E.vcomp(SGD(x, D.id1(p)),
                                E.rwhisk(EDB2(x, p), CMP(x, p))),
                        E.lwhisk(CMP(x, p), EDB(x, p))};
            });
        for (const auto& [d, dc] : D.one_cells)
            for (const auto& [dp, dpc] : D.one_cells) {
                if (dpc.src != dc.tgt) continue;
                const std::string& p = dc.src;
                const std::string& r = dpc.tgt;
                check_eq("arrow-comp-d", {x, d, dp}, [&]() -> SS {
                    return {E.vcomp(SGD(x, D.comp1(dp, d)),
                                    E.rwhisk(MDB2(x, d, dp), CMP(x, p))),
                            E.vcomp(E.lwhisk(CMP(x, r), MDB(x, d, dp)),
                                    E.vcomp(E.rwhisk(SGD(x, dp), DA(x, d)),
                                            E.lwhisk(DA2(x, dp), SGD(x, d))))};
                });
            }
    }
    for (const auto& p : D.objects) {
        for (const auto& [a, ac] : C.two_cells) {
            const std::string& c = ac.src;
            const std::string& cb = ac.tgt;
            std::string x = C.one(c).src, y = C.one(c).tgt;
            check_eq("arrow-natural-c", {p, a}, [&]() -> SS {
                return {E.vcomp(SGC(cb, p), E.rwhisk(C2B2(a, p), CMP(x, p))),
                        E.vcomp(E.lwhisk(CMP(y, p), C2B(a, p)), SGC(c, p))};
            });
        }
        for (const auto& x : C.objects)
            check_eq("arrow-unit-c", {x, p}, [&]() -> SS {
                return {E.vcomp(SGC(C.id1(x), p),
                                E.rwhisk(ECB2(x, p), CMP(x, p))),
                        E.lwhisk(CMP(x, p), ECB(x, p))};
            });
        for (const auto& [c, cc] : C.one_cells)
            for (const auto& [cp, cpc] : C.one_cells) {
                if (cpc.src != cc.tgt) continue;
                const std::string& x = cc.src;
                const std::string& z = cpc.tgt;
                check_eq("arrow-comp-c", {c, cp, p}, [&]() -> SS {
                    return {E.vcomp(SGC(C.comp1(cp, c), p),
                                    E.rwhisk(MCB2(c, cp, p), CMP(x, p))),
                            E.vcomp(E.lwhisk(CMP(z, p), MCB(c, cp, p)),
                                    E.vcomp(E.rwhisk(SGC(cp, p), CA(c, p)),
                                            E.lwhisk(CA2(cp, p), SGC(c, p))))};
                });
            }
    }
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& [d, dc] : D.one_cells) {
            const std::string& x = cc.src;
            const std::string& y = cc.tgt;
            const std::string& p = dc.src;
            const std::string& q = dc.tgt;
            check_eq("arrow-hexagon", {c, d}, [&]() -> SS {
                return {E.vcomp(E.rwhisk(SGC(c, q), DA(x, d)),
                                E.vcomp(E.lwhisk(CA2(c, q), SGD(x, d)),
                                        E.rwhisk(SWB2(c, d), CMP(x, p)))),
                        E.vcomp(E.lwhisk(CMP(y, q), SWB(c, d)),
                                E.vcomp(E.rwhisk(SGD(y, d), CA(c, p)),
                                        E.lwhisk(DA2(y, d), SGC(c, p))))};
            });
        }
    return out;
}

inline std::vector<Violation> validate_twocell(const FinTwoCategory& C,
                                               const FinTwoCategory& D,
                                               const LaxNestObject& B,
                                               const LaxNestObject& B2,
                                               const LaxNestArrow& b,
                                               const LaxNestArrow& bb,
                                               const LaxNestTwoCell& beta) {
    if (!(B.target == B2.target))
        throw shape_error("arrow endpoints live in different targets");
    const FinTwoCategory& E = B.target;
    std::vector<Violation> out;

    auto BT = [&](const std::string& x, const std::string& p) {
        return nest_at(beta.comp, nest_key(x, p), "2-cell component");
    };
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) {
            auto it = beta.comp.find(nest_key(x, p));
            if (it == beta.comp.end()) {
                out.push_back(
                    {"twocell-component-typing", {x, p}, "component missing"});
                continue;
            }
            if (!E.two_cells.count(it->second)) {
                out.push_back({"twocell-component-typing",
                               {x, p},
                               "component is not a 2-cell of the target"});
                continue;
            }
            try {
                if (!(E.two(it->second).src ==
                          nest_at(b.comp, nest_key(x, p), "arrow component") &&
                      E.two(it->second).tgt ==
                          nest_at(bb.comp, nest_key(x, p), "arrow component")))
                    out.push_back({"twocell-component-typing",
                                   {x, p},
                                   "component has the wrong boundary"});
            } catch (const reference_error& e) {
                out.push_back({"twocell-component-typing", {x, p}, e.what()});
            }
        }
    if (!out.empty()) return out;

    auto check_eq = [&](const char* law, std::vector<std::string> wit,
                        auto&& fn) {
        try {
            auto [l, r] = fn();
            if (l != r) out.push_back({law, std::move(wit), l + " vs " + r});
        } catch (const reference_error& e) {
            out.push_back({law, std::move(wit),
                           std::string("evaluation failed: ") + e.what()});
        }
    };
    using SS = std::pair<std::string, std::string>;

    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells) {
            const std::string& p = dc.src;
            const std::string& q = dc.tgt;
            check_eq("twocell-modification-d", {x, d}, [&]() -> SS {
                return {
                    E.vcomp(E.rwhisk(BT(x, q),
                                     nest_at(B.darr, nest_key(x, d),
                                             "second-factor arrow")),
                            nest_at(b.sigd, nest_key(x, d),
                                    "second-factor square")),
                    E.vcomp(nest_at(bb.sigd, nest_key(x, d),
                                    "second-factor square"),
                            E.lwhisk(nest_at(B2.darr, nest_key(x, d),
                                             "second-factor arrow"),
                                     BT(x, p)))};
            });
        }
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& p : D.objects) {
            const std::string& x = cc.src;
            const std::string& y = cc.tgt;
            check_eq("twocell-modification-c", {c, p}, [&]() -> SS {
                return {
                    E.vcomp(E.rwhisk(BT(y, p),
                                     nest_at(B.carr, nest_key(c, p),
                                             "first-factor arrow")),
                            nest_at(b.sigc, nest_key(c, p),
                                    "first-factor square")),
                    E.vcomp(nest_at(bb.sigc, nest_key(c, p),
                                    "first-factor square"),
                            E.lwhisk(nest_at(B2.carr, nest_key(c, p),
                                             "first-factor arrow"),
                                     BT(x, p)))};
            });
        }
    return out;
}

// ---------------------------------------------------------------------------
// Cylinder targets: the finite 2-category of squares over a target, and the
// finite 2-category of cylinders between squares.  Cell names are built from
// the component names, so the base category must not use the delimiters.

inline std::string cylinder_one_name(const std::string& u, const std::string& v,
                                     const std::string& f0,
                                     const std::string& f1,
                                     const std::string& phi) {
    return u + ">" + v + "|" + f0 + "|" + f1 + "|" + phi;
}
inline std::string cylinder_two_name(const std::string& src,
                                     const std::string& tgt,
                                     const std::string& a0,
                                     const std::string& a1) {
    return src + "=>" + tgt + "|" + a0 + "|" + a1;
}
inline std::string square_one_name(const std::string& chi,
                                   const std::string& omega,
                                   const std::string& f0, const std::string& f1,
                                   const std::string& phi,
                                   const std::string& phip) {
    return chi + ">" + omega + "|" + f0 + "|" + f1 + "|" + phi + "|" + phip;
}

namespace detail {

inline void check_cylinder_names(const FinTwoCategory& E) {
    auto bad = [](const std::string& s) {
        return s.find('|') != std::string::npos ||
               s.find('>') != std::string::npos ||
               s.find('=') != std::string::npos;
    };
    for (const auto& x : E.objects)
        if (bad(x))
            throw shape_error("cylinder construction needs delimiter-free names: " + x);
    for (const auto& [f, fc] : E.one_cells) {
        (void)fc;
        if (bad(f))
            throw shape_error("cylinder construction needs delimiter-free names: " + f);
    }
    for (const auto& [a, ac] : E.two_cells) {
        (void)ac;
        if (bad(a))
            throw shape_error("cylinder construction needs delimiter-free names: " + a);
    }
}

}  // namespace detail

inline FinTwoCategory arrow_cylinder(const FinTwoCategory& E) {
    detail::check_cylinder_names(E);
    FinTwoCategory X;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> hom2;
    for (const auto& [a, ac] : E.two_cells) hom2[{ac.src, ac.tgt}].push_back(a);

    struct COne {
        std::string name, u, v, f0, f1, phi;
    };
    std::vector<COne> ones;
    std::map<std::string, std::size_t> oneix;

    for (const auto& [u, uc] : E.one_cells) {
        (void)uc;
        X.objects.push_back(u);
    }
    for (const auto& [u, uc] : E.one_cells)
        for (const auto& [v, vc] : E.one_cells)
            for (const auto& [f0, f0c] : E.one_cells) {
                if (!(f0c.src == uc.src && f0c.tgt == vc.src)) continue;
                for (const auto& [f1, f1c] : E.one_cells) {
                    if (!(f1c.src == uc.tgt && f1c.tgt == vc.tgt)) continue;
                    auto it = hom2.find({E.comp1(f1, u), E.comp1(v, f0)});
                    if (it == hom2.end()) continue;
                    for (const auto& phi : it->second) {
                        COne c{cylinder_one_name(u, v, f0, f1, phi),
                               u, v, f0, f1, phi};
                        oneix[c.name] = ones.size();
                        X.one_cells[c.name] = {u, v};
                        ones.push_back(std::move(c));
                    }
                }
            }
    for (const auto& [u, uc] : E.one_cells) {
        std::string idn = cylinder_one_name(u, u, E.id1(uc.src), E.id1(uc.tgt),
                                            E.id2(u));
        if (!X.one_cells.count(idn))
            throw internal_error("square identity missing: " + idn);
        X.identity1[u] = idn;
    }
    for (const auto& g : ones)
        for (const auto& f : ones) {
            if (g.u != f.v) continue;
            std::string n = cylinder_one_name(
                f.u, g.v, E.comp1(g.f0, f.f0), E.comp1(g.f1, f.f1),
                E.vcomp(E.rwhisk(g.phi, f.f0), E.lwhisk(g.f1, f.phi)));
            if (!X.one_cells.count(n))
                throw internal_error("square composite left the table: " + n);
            X.comp1_table[{g.name, f.name}] = n;
        }

    struct CTwo {
        std::string name, srcn, tgtn, a0, a1;
    };
    std::vector<CTwo> twos;
    for (const auto& F : ones)
        for (const auto& G : ones) {
            if (!(F.u == G.u && F.v == G.v)) continue;
            auto i0 = hom2.find({F.f0, G.f0});
            auto i1 = hom2.find({F.f1, G.f1});
            if (i0 == hom2.end() || i1 == hom2.end()) continue;
            for (const auto& a0 : i0->second)
                for (const auto& a1 : i1->second) {
                    if (E.vcomp(G.phi, E.rwhisk(a1, F.u)) !=
                        E.vcomp(E.lwhisk(F.v, a0), F.phi))
                        continue;
                    CTwo t{cylinder_two_name(F.name, G.name, a0, a1), F.name,
                           G.name, a0, a1};
                    X.two_cells[t.name] = {F.name, G.name};
                    twos.push_back(std::move(t));
                }
        }
    for (const auto& F : ones) {
        std::string idn =
            cylinder_two_name(F.name, F.name, E.id2(F.f0), E.id2(F.f1));
        if (!X.two_cells.count(idn))
            throw internal_error("square identity 2-cell missing: " + idn);
        X.identity2[F.name] = idn;
    }
    for (const auto& bcell : twos)
        for (const auto& acell : twos) {
            if (bcell.srcn != acell.tgtn) continue;
            std::string n =
                cylinder_two_name(acell.srcn, bcell.tgtn,
                                  E.vcomp(bcell.a0, acell.a0),
                                  E.vcomp(bcell.a1, acell.a1));
            if (!X.two_cells.count(n))
                throw internal_error("square vertical composite left the table: " + n);
            X.vcomp_table[{bcell.name, acell.name}] = n;
        }
    for (const auto& g : ones)
        for (const auto& a : twos) {
            const COne& F = ones[oneix.at(a.srcn)];
            const COne& Fp = ones[oneix.at(a.tgtn)];
            if (F.v == g.u) {
                std::string n = cylinder_two_name(
                    X.comp1(g.name, a.srcn), X.comp1(g.name, a.tgtn),
                    E.lwhisk(g.f0, a.a0), E.lwhisk(g.f1, a.a1));
                if (!X.two_cells.count(n))
                    throw internal_error("square whisker left the table: " + n);
                X.lwhisk_table[{g.name, a.name}] = n;
            }
            if (g.v == F.u) {
                std::string n = cylinder_two_name(
                    X.comp1(a.srcn, g.name), X.comp1(a.tgtn, g.name),
                    E.rwhisk(a.a0, g.f0), E.rwhisk(a.a1, g.f1));
                if (!X.two_cells.count(n))
                    throw internal_error("square whisker left the table: " + n);
                X.rwhisk_table[{a.name, g.name}] = n;
            }
            (void)Fp;
        }
    return X;
}

inline FinTwoCategory twocell_cylinder(const FinTwoCategory& E) {
    detail::check_cylinder_names(E);
    FinTwoCategory X;
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> hom2;
    for (const auto& [a, ac] : E.two_cells) hom2[{ac.src, ac.tgt}].push_back(a);

    struct SOne {
        std::string name, chi, omega, f0, f1, phi, phip;
    };
    std::vector<SOne> ones;
    std::map<std::string, std::size_t> oneix;

    for (const auto& [chi, cc] : E.two_cells) {
        (void)cc;
        X.objects.push_back(chi);
    }
    for (const auto& [chi, cc] : E.two_cells) {
        const std::string& u = cc.src;
        const std::string& up = cc.tgt;
        for (const auto& [omega, oc] : E.two_cells) {
            const std::string& v = oc.src;
            const std::string& vp = oc.tgt;
            for (const auto& [f0, f0c] : E.one_cells) {
                if (!(f0c.src == E.one(u).src && f0c.tgt == E.one(v).src))
                    continue;
                for (const auto& [f1, f1c] : E.one_cells) {
                    if (!(f1c.src == E.one(u).tgt && f1c.tgt == E.one(v).tgt))
                        continue;
                    auto ip = hom2.find({E.comp1(f1, u), E.comp1(v, f0)});
                    auto iq = hom2.find({E.comp1(f1, up), E.comp1(vp, f0)});
                    if (ip == hom2.end() || iq == hom2.end()) continue;
                    for (const auto& phi : ip->second)
                        for (const auto& phip : iq->second) {
                            if (E.vcomp(phip, E.lwhisk(f1, chi)) !=
                                E.vcomp(E.rwhisk(omega, f0), phi))
                                continue;
                            SOne s{square_one_name(chi, omega, f0, f1, phi,
                                                   phip),
                                   chi, omega, f0, f1, phi, phip};
                            oneix[s.name] = ones.size();
                            X.one_cells[s.name] = {chi, omega};
                            ones.push_back(std::move(s));
                        }
                }
            }
        }
    }
    for (const auto& [chi, cc] : E.two_cells) {
        std::string idn = square_one_name(
            chi, chi, E.id1(E.one(cc.src).src), E.id1(E.one(cc.src).tgt),
            E.id2(cc.src), E.id2(cc.tgt));
        if (!X.one_cells.count(idn))
            throw internal_error("cylinder identity missing: " + idn);
        X.identity1[chi] = idn;
    }
    for (const auto& g : ones)
        for (const auto& f : ones) {
            if (g.chi != f.omega) continue;
            std::string n = square_one_name(
                f.chi, g.omega, E.comp1(g.f0, f.f0), E.comp1(g.f1, f.f1),
                E.vcomp(E.rwhisk(g.phi, f.f0), E.lwhisk(g.f1, f.phi)),
                E.vcomp(E.rwhisk(g.phip, f.f0), E.lwhisk(g.f1, f.phip)));
            if (!X.one_cells.count(n))
                throw internal_error("cylinder composite left the table: " + n);
            X.comp1_table[{g.name, f.name}] = n;
        }

    struct STwo {
        std::string name, srcn, tgtn, a0, a1;
    };
    std::vector<STwo> twos;
    for (const auto& F : ones)
        for (const auto& G : ones) {
            if (!(F.chi == G.chi && F.omega == G.omega)) continue;
            const std::string& u = E.two(F.chi).src;
            const std::string& up = E.two(F.chi).tgt;
            const std::string& v = E.two(F.omega).src;
            const std::string& vp = E.two(F.omega).tgt;
            auto i0 = hom2.find({F.f0, G.f0});
            auto i1 = hom2.find({F.f1, G.f1});
            if (i0 == hom2.end() || i1 == hom2.end()) continue;
            for (const auto& a0 : i0->second)
                for (const auto& a1 : i1->second) {
                    if (E.vcomp(G.phi, E.rwhisk(a1, u)) !=
                        E.vcomp(E.lwhisk(v, a0), F.phi))
                        continue;
                    if (E.vcomp(G.phip, E.rwhisk(a1, up)) !=
                        E.vcomp(E.lwhisk(vp, a0), F.phip))
                        continue;
                    STwo t{cylinder_two_name(F.name, G.name, a0, a1), F.name,
                           G.name, a0, a1};
                    X.two_cells[t.name] = {F.name, G.name};
                    twos.push_back(std::move(t));
                }
        }
    for (const auto& F : ones) {
        std::string idn =
            cylinder_two_name(F.name, F.name, E.id2(F.f0), E.id2(F.f1));
        if (!X.two_cells.count(idn))
            throw internal_error("cylinder identity 2-cell missing: " + idn);
        X.identity2[F.name] = idn;
    }
    for (const auto& bcell : twos)
        for (const auto& acell : twos) {
            if (bcell.srcn != acell.tgtn) continue;
            std::string n =
                cylinder_two_name(acell.srcn, bcell.tgtn,
                                  E.vcomp(bcell.a0, acell.a0),
                                  E.vcomp(bcell.a1, acell.a1));
            if (!X.two_cells.count(n))
                throw internal_error("cylinder vertical composite left the table: " + n);
            X.vcomp_table[{bcell.name, acell.name}] = n;
        }
    for (const auto& g : ones)
        for (const auto& a : twos) {
            const SOne& F = ones[oneix.at(a.srcn)];
            if (F.omega == g.chi) {
                std::string n = cylinder_two_name(
                    X.comp1(g.name, a.srcn), X.comp1(g.name, a.tgtn),
                    E.lwhisk(g.f0, a.a0), E.lwhisk(g.f1, a.a1));
                if (!X.two_cells.count(n))
                    throw internal_error("cylinder whisker left the table: " + n);
                X.lwhisk_table[{g.name, a.name}] = n;
            }
            if (g.omega == F.chi) {
                std::string n = cylinder_two_name(
                    X.comp1(a.srcn, g.name), X.comp1(a.tgtn, g.name),
                    E.rwhisk(a.a0, g.f0), E.rwhisk(a.a1, g.f1));
                if (!X.two_cells.count(n))
                    throw internal_error("cylinder whisker left the table: " + n);
                X.rwhisk_table[{a.name, g.name}] = n;
            }
        }
    return X;
}

// ---------------------------------------------------------------------------
// Packaging arrows and 2-cells as assignments into the cylinder targets.
// Both translations are total on complete data: when a composite boundary
// cannot even be formed, the generator is mapped to a marker name that the
// assignment validators then reject.

inline GeneratorAssignment arrow_to_cylinder(const FinTwoCategory& C,
                                             const FinTwoCategory& D,
                                             const LaxNestObject& B,
                                             const LaxNestObject& B2,
                                             const LaxNestArrow& b,
                                             const FinTwoCategory& cylinder) {
    if (!(B.target == B2.target))
        throw shape_error("arrow endpoints live in different targets");
    GeneratorAssignment V;
    V.target = cylinder;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects)
            V.node[node_key(x, p)] =
                nest_at(b.comp, nest_key(x, p), "arrow component");
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& p : D.objects)
            V.edge[cedge_key(c, p)] = cylinder_one_name(
                nest_at(b.comp, nest_key(cc.src, p), "arrow component"),
                nest_at(b.comp, nest_key(cc.tgt, p), "arrow component"),
                nest_at(B.carr, nest_key(c, p), "first-factor arrow"),
                nest_at(B2.carr, nest_key(c, p), "first-factor arrow"),
                nest_at(b.sigc, nest_key(c, p), "first-factor square"));
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells)
            V.edge[dedge_key(x, d)] = cylinder_one_name(
                nest_at(b.comp, nest_key(x, dc.src), "arrow component"),
                nest_at(b.comp, nest_key(x, dc.tgt), "arrow component"),
                nest_at(B.darr, nest_key(x, d), "second-factor arrow"),
                nest_at(B2.darr, nest_key(x, d), "second-factor arrow"),
                nest_at(b.sigd, nest_key(x, d), "second-factor square"));
    GeneratorAssignment VA = to_assignment(C, D, B);
    GeneratorAssignment VA2 = to_assignment(C, D, B2);
    for (const auto& g : tensor_generators(C, D)) {
        std::string key = gen_key(g);
        try {
            V.gen[key] = cylinder_two_name(
                evaluate_one(C, D, V, gen_source(C, D, g)),
                evaluate_one(C, D, V, gen_target(C, D, g)), VA.gen.at(key),
                VA2.gen.at(key));
        } catch (const reference_error&) {
            V.gen[key] = "unrepresentable:" + key;
        }
    }
    return V;
}

inline GeneratorAssignment twocell_to_cylinder(
    const FinTwoCategory& C, const FinTwoCategory& D, const LaxNestObject& B,
    const LaxNestObject& B2, const LaxNestArrow& b, const LaxNestArrow& bb,
    const LaxNestTwoCell& beta, const FinTwoCategory& cylinder) {
    if (!(B.target == B2.target))
        throw shape_error("arrow endpoints live in different targets");
    GeneratorAssignment V;
    V.target = cylinder;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects)
            V.node[node_key(x, p)] =
                nest_at(beta.comp, nest_key(x, p), "2-cell component");
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& p : D.objects)
            V.edge[cedge_key(c, p)] = square_one_name(
                nest_at(beta.comp, nest_key(cc.src, p), "2-cell component"),
                nest_at(beta.comp, nest_key(cc.tgt, p), "2-cell component"),
                nest_at(B.carr, nest_key(c, p), "first-factor arrow"),
                nest_at(B2.carr, nest_key(c, p), "first-factor arrow"),
                nest_at(b.sigc, nest_key(c, p), "first-factor square"),
                nest_at(bb.sigc, nest_key(c, p), "first-factor square"));
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells)
            V.edge[dedge_key(x, d)] = square_one_name(
                nest_at(beta.comp, nest_key(x, dc.src), "2-cell component"),
                nest_at(beta.comp, nest_key(x, dc.tgt), "2-cell component"),
                nest_at(B.darr, nest_key(x, d), "second-factor arrow"),
                nest_at(B2.darr, nest_key(x, d), "second-factor arrow"),
                nest_at(b.sigd, nest_key(x, d), "second-factor square"),
                nest_at(bb.sigd, nest_key(x, d), "second-factor square"));
    GeneratorAssignment VA = to_assignment(C, D, B);
    GeneratorAssignment VA2 = to_assignment(C, D, B2);
    for (const auto& g : tensor_generators(C, D)) {
        std::string key = gen_key(g);
        try {
            V.gen[key] = cylinder_two_name(
                evaluate_one(C, D, V, gen_source(C, D, g)),
                evaluate_one(C, D, V, gen_target(C, D, g)), VA.gen.at(key),
                VA2.gen.at(key));
        } catch (const reference_error&) {
            V.gen[key] = "unrepresentable:" + key;
        }
    }
    return V;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of relation-clean assignments at small scale.

inline std::vector<GeneratorAssignment> enumerate_assignments(
    const FinTwoCategory& C, const FinTwoCategory& D, const FinTwoCategory& E,
    std::size_t budget = 1u << 20) {
    std::vector<std::pair<std::string, std::string>> nodes;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) nodes.push_back({x, p});
    struct EdgeSlot {
        std::string key, src, tgt;  // src/tgt are node keys
    };
    std::vector<EdgeSlot> edges;
    for (const auto& [c, cc] : C.one_cells)
        for (const auto& p : D.objects)
            edges.push_back({cedge_key(c, p), node_key(cc.src, p),
                             node_key(cc.tgt, p)});
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells)
            edges.push_back({dedge_key(x, d), node_key(x, dc.src),
                             node_key(x, dc.tgt)});
    auto gens = tensor_generators(C, D);

    std::map<std::pair<std::string, std::string>, std::vector<std::string>>
        hom1, hom2;
    for (const auto& [f, fc] : E.one_cells) hom1[{fc.src, fc.tgt}].push_back(f);
    for (const auto& [a, ac] : E.two_cells) hom2[{ac.src, ac.tgt}].push_back(a);

    std::vector<GeneratorAssignment> out;
    GeneratorAssignment cur;
    cur.target = E;
    std::size_t visited = 0;
    auto tick = [&]() {
        if (++visited > budget)
            throw size_error("assignment enumeration budget exceeded");
    };

    std::function<void(std::size_t)> gen_phase = [&](std::size_t gi) {
        tick();
        if (gi == gens.size()) {
            if (check_relations(C, D, cur).empty()) out.push_back(cur);
            return;
        }
        const TensorGenerator& g = gens[gi];
        std::string s1 = evaluate_one(C, D, cur, gen_source(C, D, g));
        std::string t1 = evaluate_one(C, D, cur, gen_target(C, D, g));
        auto it = hom2.find({s1, t1});
        if (it == hom2.end()) return;
        std::string key = gen_key(g);
        for (const auto& a : it->second) {
            cur.gen[key] = a;
            gen_phase(gi + 1);
        }
        cur.gen.erase(key);
    };
    std::function<void(std::size_t)> edge_phase = [&](std::size_t ei) {
        tick();
        if (ei == edges.size()) {
            gen_phase(0);
            return;
        }
        const EdgeSlot& es = edges[ei];
        auto it = hom1.find({cur.node.at(es.src), cur.node.at(es.tgt)});
        if (it == hom1.end()) return;
        for (const auto& f : it->second) {
            cur.edge[es.key] = f;
            edge_phase(ei + 1);
        }
        cur.edge.erase(es.key);
    };
    std::function<void(std::size_t)> node_phase = [&](std::size_t ni) {
        tick();
        if (ni == nodes.size()) {
            edge_phase(0);
            return;
        }
        std::string key = node_key(nodes[ni].first, nodes[ni].second);
        for (const auto& ob : E.objects) {
            cur.node[key] = ob;
            node_phase(ni + 1);
        }
        cur.node.erase(key);
    };
    node_phase(0);
    return out;
}

inline std::vector<LaxNestObject> enumerate_laxnest_objects(
    const FinTwoCategory& C, const FinTwoCategory& D, const FinTwoCategory& E,
    std::size_t budget = 1u << 20) {
    std::vector<LaxNestObject> out;
    for (const auto& V : enumerate_assignments(C, D, E, budget))
        out.push_back(from_assignment(C, D, V));
    return out;
}

}  // namespace boxtimes
