#pragma once

// Shuffles of two intervals and their morphisms.
//
// A shuffle of [n] and [m] is stored as a word of length n+m over the letters
// 'c' and 'd' with exactly n c's: the i-th letter says whether the i-th step
// of the interleaved path advances on the C side or on the D side.  The two
// projection maps r: [n+m] -> [n] and s: [n+m] -> [m] (counting progress on
// each side) are derived views, as is the precedence table:
//
//   table[j][i] = 1  iff  D-step j+1 occurs before C-step i+1 in the word
//
// (an m-by-n 0/1 matrix; the all-C-first word gives the zero table).  Word
// and table determine each other.
//
// A morphism of shuffles from (n,m,word) to (n',m',word') consists of
// interval maps xi: [n'] -> [n] and rho: [m'] -> [m] subject to a validity
// condition stating that no C-step is required to move left past a D-step:
// for every element i of [n'+m'],
//
//   min r^{-1}(xi(r'(i)))  <=  max s^{-1}(rho(s'(i)))
//
// with preimages taken in [n+m].  Equivalently (tested, not assumed): the
// composite L(r) . xi . r' is pointwise <= R(s) . rho . s'.  The mixed
// variant reverses rho to rho_rev: [m] -> [m'] and replaces rho by the right
// adjoint of rho_rev in the composite form.

#include <string>
#include <vector>

#include "errors.hpp"
#include "simplicial.hpp"

namespace boxtimes {

struct Shuffle {
    int n = 0;
    int m = 0;
    std::string word;  // length n+m over {'c','d'}, exactly n 'c's

    Shuffle() = default;
    Shuffle(int n_, int m_, std::string word_)
        : n(n_), m(m_), word(std::move(word_)) {
        check();
    }

    static Shuffle from_word(const std::string& w) {
        int n = 0, m = 0;
        for (char ch : w) {
            if (ch == 'c') ++n;
            else if (ch == 'd') ++m;
            else throw shape_error("shuffle words use only the letters c and d");
        }
        return Shuffle(n, m, w);
    }

    // Progress of the C side after the first i steps.
    IntervalMap r() const {
        std::vector<int> v{0};
        int acc = 0;
        for (char ch : word) v.push_back(ch == 'c' ? ++acc : acc);
        return IntervalMap(n + m, n, std::move(v));
    }

    // Progress of the D side after the first i steps.
    IntervalMap s() const {
        std::vector<int> v{0};
        int acc = 0;
        for (char ch : word) v.push_back(ch == 'd' ? ++acc : acc);
        return IntervalMap(n + m, m, std::move(v));
    }

    bool operator==(const Shuffle&) const = default;

    void check() const {
        if (n < 0 || m < 0) throw shape_error("shuffle ranks must be non-negative");
        if (static_cast<int>(word.size()) != n + m)
            throw shape_error("shuffle word has wrong length");
        int c = 0;
        for (char ch : word) {
            if (ch != 'c' && ch != 'd')
                throw shape_error("shuffle words use only the letters c and d");
            if (ch == 'c') ++c;
        }
        if (c != n) throw shape_error("shuffle word has the wrong number of C-steps");
    }
};

// All shuffles of [n] and [m] in lexicographic word order ('c' < 'd'); there
// are binomial(n+m, n) of them.  Guarded by a total-length bound because the
// count grows exponentially.
inline std::vector<Shuffle> enumerate_shuffles(int n, int m, int bound = 20) {
    if (n < 0 || m < 0) throw range_error("shuffle ranks must be non-negative");
    if (n + m > bound)
        throw size_error("shuffle enumeration bound exceeded: n+m = " +
                         std::to_string(n + m) + " > " + std::to_string(bound));
    std::vector<Shuffle> out;
    std::string word;
    auto rec = [&](auto&& self, int c_left, int d_left) -> void {
        if (c_left == 0 && d_left == 0) {
            out.emplace_back(n, m, word);
            return;
        }
        if (c_left > 0) {
            word.push_back('c');
            self(self, c_left - 1, d_left);
            word.pop_back();
        }
        if (d_left > 0) {
            word.push_back('d');
            self(self, c_left, d_left - 1);
            word.pop_back();
        }
    };
    rec(rec, n, m);
    return out;
}

// Precedence table; rows indexed by D-steps, columns by C-steps.
inline std::vector<std::vector<int>> shuffle_to_table(const Shuffle& sh) {
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(sh.m),
        std::vector<int>(static_cast<std::size_t>(sh.n), 0));
    int c_seen = 0, d_seen = 0;
    for (char ch : sh.word) {
        if (ch == 'd') {
            // D-step d_seen+1 occurs now, before every C-step not yet seen.
            for (int i = c_seen; i < sh.n; ++i)
                table[static_cast<std::size_t>(d_seen)][static_cast<std::size_t>(i)] = 1;
            ++d_seen;
        } else {
            ++c_seen;
        }
    }
    return table;
}

inline Shuffle table_to_shuffle(int n, int m,
                                const std::vector<std::vector<int>>& table) {
    if (static_cast<int>(table.size()) != m)
        throw shape_error("precedence table has the wrong number of rows");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != n)
            throw shape_error("precedence table has the wrong number of columns");
    std::string word;
    int c_next = 0, d_next = 0;
    while (c_next < n || d_next < m) {
        // Emit D-step d_next+1 now iff it precedes every remaining C-step.
        bool emit_d = d_next < m;
        if (emit_d && c_next < n &&
            table[static_cast<std::size_t>(d_next)][static_cast<std::size_t>(c_next)] == 0)
            emit_d = false;
        if (emit_d) {
            word.push_back('d');
            ++d_next;
        } else {
            word.push_back('c');
            ++c_next;
        }
    }
    Shuffle sh(n, m, word);
    if (shuffle_to_table(sh) != table)
        throw shape_error("matrix is not the precedence table of any shuffle");
    return sh;
}

namespace detail {

inline int min_preimage(const IntervalMap& f, int value) {
    for (int i = 0; i <= f.dom; ++i)
        if (f(i) == value) return i;
    throw internal_error("projection map misses a value in its range");
}

inline int max_preimage(const IntervalMap& f, int value) {
    for (int i = f.dom; i >= 0; --i)
        if (f(i) == value) return i;
    throw internal_error("projection map misses a value in its range");
}

} // namespace detail

// Validity of (xi, rho): src -> tgt, by the explicit min/max condition.
inline bool is_valid_morphism(const Shuffle& src, const Shuffle& tgt,
                              const IntervalMap& xi, const IntervalMap& rho) {
    if (xi.dom != tgt.n || xi.cod != src.n || rho.dom != tgt.m || rho.cod != src.m)
        throw shape_error("shuffle morphism components have mismatched ranks");
    IntervalMap r = src.r(), s = src.s();
    IntervalMap rbar = tgt.r(), sbar = tgt.s();
    for (int i = 0; i <= tgt.n + tgt.m; ++i) {
        int lo = detail::min_preimage(r, xi(rbar(i)));
        int hi = detail::max_preimage(s, rho(sbar(i)));
        if (lo > hi) return false;
    }
    return true;
}

// Same condition computed through the Galois adjoints of the projections;
// used as an independent cross-check of is_valid_morphism.
inline bool is_valid_morphism_via_adjoints(const Shuffle& src, const Shuffle& tgt,
                                           const IntervalMap& xi,
                                           const IntervalMap& rho) {
    if (xi.dom != tgt.n || xi.cod != src.n || rho.dom != tgt.m || rho.cod != src.m)
        throw shape_error("shuffle morphism components have mismatched ranks");
    MonotoneMap lhs = compose(left_adjoint(src.r()),
                              compose(as_monotone(xi), as_monotone(tgt.r())));
    MonotoneMap rhs = compose(right_adjoint(src.s()),
                              compose(as_monotone(rho), as_monotone(tgt.s())));
    return leq(lhs, rhs);
}

// Mixed validity: rho_rev runs [src.m] -> [tgt.m] and enters through its
// right adjoint.
inline bool is_valid_mixed_morphism(const Shuffle& src, const Shuffle& tgt,
                                    const IntervalMap& xi,
                                    const IntervalMap& rho_rev) {
    if (xi.dom != tgt.n || xi.cod != src.n ||
        rho_rev.dom != src.m || rho_rev.cod != tgt.m)
        throw shape_error("mixed shuffle morphism components have mismatched ranks");
    MonotoneMap lhs = compose(left_adjoint(src.r()),
                              compose(as_monotone(xi), as_monotone(tgt.r())));
    MonotoneMap rhs = compose(right_adjoint(src.s()),
                              compose(right_adjoint(rho_rev), as_monotone(tgt.s())));
    return leq(lhs, rhs);
}

struct ShuffleMorphism {
    Shuffle src;
    Shuffle tgt;
    IntervalMap xi;   // [tgt.n] -> [src.n]
    IntervalMap rho;  // [tgt.m] -> [src.m]

    bool operator==(const ShuffleMorphism&) const = default;

    static ShuffleMorphism identity(const Shuffle& sh) {
        return {sh, sh, IntervalMap::identity(sh.n), IntervalMap::identity(sh.m)};
    }
};

struct MixedShuffleMorphism {
    Shuffle src;
    Shuffle tgt;
    IntervalMap xi;       // [tgt.n] -> [src.n]
    IntervalMap rho_rev;  // [src.m] -> [tgt.m]

    bool operator==(const MixedShuffleMorphism&) const = default;

    static MixedShuffleMorphism identity(const Shuffle& sh) {
        return {sh, sh, IntervalMap::identity(sh.n), IntervalMap::identity(sh.m)};
    }
};

// compose_morphisms(f, g): f then g, i.e. f: a -> b, g: b -> c gives a -> c.
// Componentwise composition; validity is preserved (and re-checked here as
// cheap insurance against convention drift).
inline ShuffleMorphism compose_morphisms(const ShuffleMorphism& f,
                                         const ShuffleMorphism& g) {
    if (!(f.tgt == g.src))
        throw shape_error("shuffle morphisms not composable");
    ShuffleMorphism out{f.src, g.tgt, compose(f.xi, g.xi), compose(f.rho, g.rho)};
    if (!is_valid_morphism(out.src, out.tgt, out.xi, out.rho))
        throw internal_error("composite shuffle morphism failed validity");
    return out;
}

inline MixedShuffleMorphism compose_mixed_morphisms(const MixedShuffleMorphism& f,
                                                    const MixedShuffleMorphism& g) {
    if (!(f.tgt == g.src))
        throw shape_error("mixed shuffle morphisms not composable");
    MixedShuffleMorphism out{f.src, g.tgt, compose(f.xi, g.xi),
                             compose(g.rho_rev, f.rho_rev)};
    if (!is_valid_mixed_morphism(out.src, out.tgt, out.xi, out.rho_rev))
        throw internal_error("composite mixed shuffle morphism failed validity");
    return out;
}

// Tensor product: word concatenation on objects, path_sum on components.
inline Shuffle tensor_shuffles(const Shuffle& a, const Shuffle& b) {
    return Shuffle(a.n + b.n, a.m + b.m, a.word + b.word);
}

inline ShuffleMorphism tensor_morphisms(const ShuffleMorphism& f,
                                        const ShuffleMorphism& g) {
    ShuffleMorphism out{tensor_shuffles(f.src, g.src), tensor_shuffles(f.tgt, g.tgt),
                        path_sum(f.xi, g.xi), path_sum(f.rho, g.rho)};
    if (!is_valid_morphism(out.src, out.tgt, out.xi, out.rho))
        throw internal_error("tensor of shuffle morphisms failed validity");
    return out;
}

inline MixedShuffleMorphism tensor_mixed_morphisms(const MixedShuffleMorphism& f,
                                                   const MixedShuffleMorphism& g) {
    MixedShuffleMorphism out{tensor_shuffles(f.src, g.src),
                             tensor_shuffles(f.tgt, g.tgt),
                             path_sum(f.xi, g.xi), path_sum(f.rho_rev, g.rho_rev)};
    if (!is_valid_mixed_morphism(out.src, out.tgt, out.xi, out.rho_rev))
        throw internal_error("tensor of mixed shuffle morphisms failed validity");
    return out;
}

} // namespace boxtimes
