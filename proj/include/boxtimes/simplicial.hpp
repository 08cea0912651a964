#pragma once

// Finite ordinals and monotone maps.
//
// Two closely related index categories are used throughout:
//
//  * the "ordinal" side: objects <n> = {0 < 1 < ... < n-1} (n elements, n >= 0,
//    <0> empty) with all monotone maps.  Hom-sets are posets under the
//    pointwise order.  Generators: face(n,i): <n> -> <n+1> skips the value i;
//    degeneracy(n,i): <n+1> -> <n> sends both i and i+1 to i.  The monoidal
//    structure is ordinal_sum (block sum).
//
//  * the "interval" side: objects [n] = {0 <= ... <= n} (rank n, n+1 elements)
//    with monotone maps preserving both endpoints.  The monoidal structure is
//    path_sum (gluing the last element of the first block to the first element
//    of the second).  An interval map [n] -> [m] is exactly a division of m
//    into n consecutive segments; decompose() returns the segment lengths.
//
// suspend() realizes the classical contravariant bijection between interval
// maps [n] -> [m] and monotone maps <m> -> <n>: the image of i is the unique j
// with xi(j) <= i < xi(j+1).  left_adjoint / right_adjoint send an interval
// map to its Galois adjoints <m+1> -> <n+1>, i.e. the monotone maps L, R with
// L(xi)(i) <= j  iff  i <= xi(j)   and   xi(j) <= i  iff  j <= R(xi)(i).
//
// Everything is a plain immutable value; equality is equality of value tables.

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"

namespace boxtimes {

// ---------------------------------------------------------------------------
// Monotone maps between finite ordinals <n>.

struct MonotoneMap {
    int dom = 0;              // size of the source ordinal <dom>
    int cod = 0;              // size of the target ordinal <cod>
    std::vector<int> values;  // length dom, non-decreasing, entries in [0,cod)

    MonotoneMap() = default;
    MonotoneMap(int dom_, int cod_, std::vector<int> values_)
        : dom(dom_), cod(cod_), values(std::move(values_)) {
        check();
    }

    static MonotoneMap identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
        return MonotoneMap(n, n, std::move(v));
    }

    int operator()(int i) const {
        if (i < 0 || i >= dom)
            throw range_error("monotone map applied outside its domain");
        return values[static_cast<std::size_t>(i)];
    }

    bool operator==(const MonotoneMap&) const = default;

    void check() const {
        if (dom < 0 || cod < 0)
            throw shape_error("ordinal sizes must be non-negative");
        if (static_cast<int>(values.size()) != dom)
            throw shape_error("monotone map value table has wrong length");
        for (int i = 0; i < dom; ++i) {
            int v = values[static_cast<std::size_t>(i)];
            if (v < 0 || v >= cod)
                throw shape_error("monotone map value out of range");
            if (i > 0 && v < values[static_cast<std::size_t>(i - 1)])
                throw shape_error("monotone map values must be non-decreasing");
        }
    }
};

// face(n,i): <n> -> <n+1>, the unique monotone injection whose image omits i.
inline MonotoneMap face(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw range_error("face index out of range (need 0 <= i <= n)");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = j < i ? j : j + 1;
    return MonotoneMap(n, n + 1, std::move(v));
}

// degeneracy(n,i): <n+1> -> <n>, the surjection sending both i and i+1 to i.
inline MonotoneMap degeneracy(int n, int i) {
    if (n < 1 || i < 0 || i > n - 1)
        throw range_error("degeneracy index out of range (need 0 <= i <= n-1)");
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = j <= i ? j : j - 1;
    return MonotoneMap(n + 1, n, std::move(v));
}

// Pointwise order on a hom-poset: true iff f(i) <= g(i) for all i.
inline bool leq(const MonotoneMap& f, const MonotoneMap& g) {
    if (f.dom != g.dom || f.cod != g.cod)
        throw shape_error("leq compares only parallel monotone maps");
    for (int i = 0; i < f.dom; ++i)
        if (f(i) > g(i)) return false;
    return true;
}

// compose(g, f) = g after f.
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.cod != g.dom)
        throw shape_error("monotone maps not composable");
    std::vector<int> v(static_cast<std::size_t>(f.dom));
    for (int i = 0; i < f.dom; ++i) v[static_cast<std::size_t>(i)] = g(f(i));
    return MonotoneMap(f.dom, g.cod, std::move(v));
}

// Block sum: acts as f on the first dom(f) elements and as g, shifted by
// cod(f), on the rest.  Strictly associative and unital with <0>.
inline MonotoneMap ordinal_sum(const MonotoneMap& f, const MonotoneMap& g) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(f.dom + g.dom));
    for (int i = 0; i < f.dom; ++i) v.push_back(f(i));
    for (int i = 0; i < g.dom; ++i) v.push_back(f.cod + g(i));
    return MonotoneMap(f.dom + g.dom, f.cod + g.cod, std::move(v));
}

// ---------------------------------------------------------------------------
// Endpoint-preserving maps between intervals [n].

struct IntervalMap {
    int dom = 0;              // source rank: [dom] has dom+1 elements
    int cod = 0;              // target rank
    std::vector<int> values;  // length dom+1; values[0] = 0, values[dom] = cod

    IntervalMap() : values{0} {}
    IntervalMap(int dom_, int cod_, std::vector<int> values_)
        : dom(dom_), cod(cod_), values(std::move(values_)) {
        check();
    }

    static IntervalMap identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
        return IntervalMap(n, n, std::move(v));
    }

    // The unique map [1] -> [n]: 0 |-> 0, 1 |-> n (one segment of length n).
    static IntervalMap whole(int n) { return IntervalMap(1, n, {0, n}); }

    int operator()(int i) const {
        if (i < 0 || i > dom)
            throw range_error("interval map applied outside its domain");
        return values[static_cast<std::size_t>(i)];
    }

    bool operator==(const IntervalMap&) const = default;

    void check() const {
        if (dom < 0 || cod < 0)
            throw shape_error("interval ranks must be non-negative");
        if (static_cast<int>(values.size()) != dom + 1)
            throw shape_error("interval map value table has wrong length");
        if (values.front() != 0 || values.back() != cod)
            throw shape_error("interval map must preserve both endpoints");
        for (int i = 0; i < dom; ++i)
            if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(i + 1)])
                throw shape_error("interval map values must be non-decreasing");
    }
};

inline IntervalMap compose(const IntervalMap& g, const IntervalMap& f) {
    if (f.cod != g.dom)
        throw shape_error("interval maps not composable");
    std::vector<int> v(static_cast<std::size_t>(f.dom + 1));
    for (int i = 0; i <= f.dom; ++i) v[static_cast<std::size_t>(i)] = g(f(i));
    return IntervalMap(f.dom, g.cod, std::move(v));
}

// Glued sum: [n]+[n'] = [n+n'], acting as f on the first block and as g,
// shifted by cod(f), on the second.  Unital with the rank-0 identity.
inline IntervalMap path_sum(const IntervalMap& f, const IntervalMap& g) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(f.dom + g.dom + 1));
    for (int i = 0; i <= f.dom; ++i) v.push_back(f(i));
    for (int i = 1; i <= g.dom; ++i) v.push_back(f.cod + g(i));
    return IntervalMap(f.dom + g.dom, f.cod + g.cod, std::move(v));
}

// Segment lengths (xi(1)-xi(0), ..., xi(n)-xi(n-1)); they sum to cod and the
// path_sum of the single-segment maps [1] -> [length_i] reconstructs xi.
inline std::vector<int> decompose(const IntervalMap& xi) {
    std::vector<int> lengths;
    lengths.reserve(static_cast<std::size_t>(xi.dom));
    for (int i = 1; i <= xi.dom; ++i) lengths.push_back(xi(i) - xi(i - 1));
    return lengths;
}

// suspend(xi): <m> -> <n> for xi: [n] -> [m]; i |-> the unique j with
// xi(j) <= i < xi(j+1).  Contravariant: suspend(compose(g,f)) =
// compose(suspend(f), suspend(g)).  Bijective with inverse unsuspend().
inline MonotoneMap suspend(const IntervalMap& xi) {
    std::vector<int> v(static_cast<std::size_t>(xi.cod));
    for (int i = 0; i < xi.cod; ++i) {
        int j = 0;
        while (!(xi(j) <= i && i < xi(j + 1))) {
            ++j;
            if (j >= xi.dom)
                throw internal_error("suspension failed to locate a segment");
        }
        v[static_cast<std::size_t>(i)] = j;
    }
    return MonotoneMap(xi.cod, xi.dom, std::move(v));
}

inline IntervalMap unsuspend(const MonotoneMap& f) {
    // xi: [cod(f)] -> [dom(f)] with xi(j) = least i such that f(i) >= j
    // (and xi(j) = dom(f) when no such i exists).
    std::vector<int> v(static_cast<std::size_t>(f.cod + 1));
    for (int j = 0; j <= f.cod; ++j) {
        int i = 0;
        while (i < f.dom && f(i) < j) ++i;
        v[static_cast<std::size_t>(j)] = i;
    }
    return IntervalMap(f.cod, f.dom, std::move(v));
}

// Galois adjoints of an interval map, as monotone maps <m+1> -> <n+1>.
inline MonotoneMap left_adjoint(const IntervalMap& xi) {
    std::vector<int> v(static_cast<std::size_t>(xi.cod + 1));
    for (int i = 0; i <= xi.cod; ++i) {
        int j = 0;
        while (xi(j) < i) ++j;  // terminates: xi(dom) = cod >= i
        v[static_cast<std::size_t>(i)] = j;
    }
    return MonotoneMap(xi.cod + 1, xi.dom + 1, std::move(v));
}

inline MonotoneMap right_adjoint(const IntervalMap& xi) {
    std::vector<int> v(static_cast<std::size_t>(xi.cod + 1));
    for (int i = 0; i <= xi.cod; ++i) {
        int j = xi.dom;
        while (xi(j) > i) --j;  // terminates: xi(0) = 0 <= i
        v[static_cast<std::size_t>(i)] = j;
    }
    return MonotoneMap(xi.cod + 1, xi.dom + 1, std::move(v));
}

// The comparison cell for the adjoints' (op)lax compatibility with the two
// sums: collapse_z(n,n') = degeneracy(n+n'+1, n): <n+n'+2> -> <n+n'+1>,
// merging the last element of the first block with the first of the second.
inline MonotoneMap collapse_z(int n, int nprime) {
    if (n < 0 || nprime < 0)
        throw range_error("collapse_z arguments must be non-negative");
    return degeneracy(n + nprime + 1, n);
}

// Conversions along <n+1> = [n].  as_monotone forgets endpoint preservation;
// as_interval checks it.
inline MonotoneMap as_monotone(const IntervalMap& xi) {
    return MonotoneMap(xi.dom + 1, xi.cod + 1, xi.values);
}

inline IntervalMap as_interval(const MonotoneMap& f) {
    if (f.dom < 1 || f.cod < 1)
        throw shape_error("as_interval needs non-empty ordinals");
    return IntervalMap(f.dom - 1, f.cod - 1, f.values);
}

// Debug rendering: "(v0,v1,...)".
inline std::string to_string(const std::vector<int>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    out += ")";
    return out;
}

inline std::string to_string(const MonotoneMap& f) {
    return "<" + std::to_string(f.dom) + ">-><" + std::to_string(f.cod) + ">" +
           to_string(f.values);
}

inline std::string to_string(const IntervalMap& f) {
    return "[" + std::to_string(f.dom) + "]->[" + std::to_string(f.cod) + "]" +
           to_string(f.values);
}

} // namespace boxtimes
