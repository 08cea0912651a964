#pragma once
// Text formats for the cells and maps that the command-line tools exchange:
//
//  * cell files:       named 1-cells and 2-cells of an interleaving tensor,
//                        cell  NAME = (X;P) WORD [c,...] [d,...]
//                        cell2 NAME = SRC => TGT xi=[...] rho=[...]
//                                     alpha=[...] beta=[...]
//  * assignment files: generator images in a finite target,
//                        node (X;P) -> object
//                        edge KEY -> 1-cell        (KEY as printed, e.g. e@P)
//                        gen KEY -> 2-cell         (KEY as printed)
//  * nested-data files: the object / arrow / 2-cell records of the doubly
//    nested lax structure, one keyed entry per line, e.g.
//                        darr (X;b) -> 1-cell
//                        mud (X;b,f) -> 2-cell
//                        sigc (e;P) -> 2-cell
//
// All formats share the conventions of the category files: UTF-8, `#` starts
// a comment, blank lines are ignored, and errors carry line numbers.
// Bracketed lists must not contain whitespace.  Formatters emit exactly the
// grammar the parsers accept, with deterministic ordering.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxtimes/computad.hpp"
#include "boxtimes/errors.hpp"
#include "boxtimes/fin2cat.hpp"
#include "boxtimes/laxnest.hpp"
#include "boxtimes/shuffles.hpp"
#include "boxtimes/simplicial.hpp"
#include "boxtimes/tensor.hpp"

namespace boxtimes {

// ---------------------------------------------------------------------------
// Formatting.

inline std::string format_name_list(const std::vector<std::string>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i];
    }
    return out + "]";
}

inline std::string format_int_list(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "]";
}

inline std::string format_one_cell(const TensorOneCell& f) {
    std::string word = f.shuffle.word.empty() ? "-" : f.shuffle.word;
    return "(" + f.cpath.start + ";" + f.dpath.start + ") " + word + " " +
           format_name_list(f.cpath.cells) + " " +
           format_name_list(f.dpath.cells);
}

inline std::string format_two_cell(const TensorTwoCell& a) {
    return format_one_cell(a.src) + " => " + format_one_cell(a.tgt) +
           " xi=" + format_int_list(a.xi.values) +
           " rho=" + format_int_list(a.rho.values) +
           " alpha=" + format_name_list(a.alpha) +
           " beta=" + format_name_list(a.beta);
}

inline std::string format_slice(const Slice& s) {
    int pos = s.right.shuffle.n + s.right.shuffle.m;
    return gen_key(s.gen) + " pos=" + std::to_string(pos);
}

inline std::string format_violation(const Violation& v) {
    std::string out = v.law + " [";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        if (i) out += ",";
        out += v.witnesses[i];
    }
    out += "]";
    if (!v.detail.empty()) out += ": " + v.detail;
    return out;
}

inline std::string format_assignment(const GeneratorAssignment& V) {
    std::ostringstream out;
    for (const auto& [k, img] : V.node) out << "node " << k << " -> " << img << "\n";
    for (const auto& [k, img] : V.edge) out << "edge " << k << " -> " << img << "\n";
    for (const auto& [k, img] : V.gen) out << "gen " << k << " -> " << img << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Cell documents.

struct CellDocument {
    std::vector<std::string> one_order;
    std::vector<std::string> two_order;
    std::map<std::string, TensorOneCell> ones;
    std::map<std::string, TensorTwoCell> twos;
};

inline std::string format_cell_document(const CellDocument& doc) {
    std::ostringstream out;
    for (const auto& n : doc.one_order)
        out << "cell " << n << " = " << format_one_cell(doc.ones.at(n)) << "\n";
    auto resolve = [&](const TensorOneCell& f) -> const std::string& {
        for (const auto& n : doc.one_order)
            if (doc.ones.at(n) == f) return n;
        throw shape_error("2-cell endpoint is not among the named 1-cells");
    };
    for (const auto& n : doc.two_order) {
        const TensorTwoCell& a = doc.twos.at(n);
        out << "cell2 " << n << " = " << resolve(a.src) << " => "
            << resolve(a.tgt) << " xi=" << format_int_list(a.xi.values)
            << " rho=" << format_int_list(a.rho.values)
            << " alpha=" << format_name_list(a.alpha)
            << " beta=" << format_name_list(a.beta) << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Shared line scanning.

namespace detail {

class LineParser {
public:
    explicit LineParser(const std::string& text) : in_(text) {}

    // Returns false at end of input; otherwise fills tok with the non-empty
    // whitespace-separated tokens of the next non-blank line.
    bool next(std::vector<std::string>& tok) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            tok.clear();
            std::string t;
            while (ls >> t) tok.push_back(t);
            if (!tok.empty()) return true;
        }
        return false;
    }

    int line() const { return line_; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(line_, msg);
    }

private:
    std::istringstream in_;
    int line_ = 0;
};

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::string> bracket_list(const LineParser& lp,
                                             const std::string& tok) {
    if (tok.size() < 2 || tok.front() != '[' || tok.back() != ']')
        lp.fail("expected a bracketed list, got '" + tok + "'");
    std::string body = tok.substr(1, tok.size() - 2);
    if (body.empty()) return {};
    std::vector<std::string> out = split_on(body, ',');
    for (const auto& x : out)
        if (x.empty()) lp.fail("empty entry in list '" + tok + "'");
    return out;
}

inline std::vector<std::string> keyed_list(const LineParser& lp,
                                           const std::string& tok,
                                           const std::string& key) {
    std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        lp.fail("expected '" + key + "=[...]', got '" + tok + "'");
    return bracket_list(lp, tok.substr(prefix.size()));
}

inline std::vector<int> int_list(const LineParser& lp,
                                 const std::vector<std::string>& xs) {
    std::vector<int> out;
    for (const auto& x : xs) {
        try {
            std::size_t used = 0;
            int v = std::stoi(x, &used);
            if (used != x.size()) throw std::invalid_argument(x);
            out.push_back(v);
        } catch (const std::exception&) {
            lp.fail("expected an integer, got '" + x + "'");
        }
    }
    return out;
}

inline IntervalMap interval_from_values(const LineParser& lp,
                                        const std::vector<int>& vals) {
    if (vals.empty()) lp.fail("an index map needs at least one value");
    try {
        return IntervalMap(static_cast<int>(vals.size()) - 1, vals.back(),
                           vals);
    } catch (const error& e) {
        lp.fail(e.what());
    }
}

// Splits "(A;B)" into its two parts.
inline std::pair<std::string, std::string> paren_pair(const LineParser& lp,
                                                      const std::string& tok) {
    if (tok.size() < 3 || tok.front() != '(' || tok.back() != ')')
        lp.fail("expected '(A;B)', got '" + tok + "'");
    std::vector<std::string> parts =
        split_on(tok.substr(1, tok.size() - 2), ';');
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
        lp.fail("expected '(A;B)', got '" + tok + "'");
    return {parts[0], parts[1]};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing cell documents.

inline CellDocument parse_cells(const std::string& text,
                                const FinTwoCategory& C,
                                const FinTwoCategory& D) {
    CellDocument doc;
    detail::LineParser lp(text);
    std::vector<std::string> tok;
    while (lp.next(tok)) {
        if (tok[0] == "cell") {
            if (tok.size() != 7 || tok[2] != "=")
                lp.fail("expected: cell NAME = (X;P) WORD [c,...] [d,...]");
            const std::string& name = tok[1];
            if (doc.ones.count(name) || doc.twos.count(name))
                lp.fail("name already in use: " + name);
            auto [x, p] = detail::paren_pair(lp, tok[3]);
            std::string word = tok[4] == "-" ? "" : tok[4];
            int n = 0, m = 0;
            for (char ch : word) {
                if (ch == 'c')
                    ++n;
                else if (ch == 'd')
                    ++m;
                else
                    lp.fail("interleaving words use only 'c' and 'd'");
            }
            TensorOneCell f{Path{x, detail::bracket_list(lp, tok[5])},
                            Path{p, detail::bracket_list(lp, tok[6])},
                            Shuffle(n, m, word)};
            try {
                check_one(C, D, f);
            } catch (const error& e) {
                lp.fail(e.what());
            }
            doc.ones[name] = std::move(f);
            doc.one_order.push_back(name);
        } else if (tok[0] == "cell2") {
            if (tok.size() != 10 || tok[2] != "=" || tok[4] != "=>")
                lp.fail(
                    "expected: cell2 NAME = SRC => TGT xi=[...] rho=[...] "
                    "alpha=[...] beta=[...]");
            const std::string& name = tok[1];
            if (doc.ones.count(name) || doc.twos.count(name))
                lp.fail("name already in use: " + name);
            auto src = doc.ones.find(tok[3]);
            auto tgt = doc.ones.find(tok[5]);
            if (src == doc.ones.end()) lp.fail("unknown 1-cell: " + tok[3]);
            if (tgt == doc.ones.end()) lp.fail("unknown 1-cell: " + tok[5]);
            TensorTwoCell a{
                src->second, tgt->second,
                detail::interval_from_values(
                    lp, detail::int_list(lp, detail::keyed_list(lp, tok[6], "xi"))),
                detail::interval_from_values(
                    lp,
                    detail::int_list(lp, detail::keyed_list(lp, tok[7], "rho"))),
                detail::keyed_list(lp, tok[8], "alpha"),
                detail::keyed_list(lp, tok[9], "beta")};
            try {
                check_two(C, D, a);
            } catch (const error& e) {
                lp.fail(e.what());
            }
            doc.twos[name] = std::move(a);
            doc.two_order.push_back(name);
        } else {
            lp.fail("expected 'cell' or 'cell2', got '" + tok[0] + "'");
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Parsing assignments.

inline GeneratorAssignment parse_assignment(const std::string& text,
                                            const FinTwoCategory& C,
                                            const FinTwoCategory& D,
                                            const FinTwoCategory& E) {
    GeneratorAssignment V;
    V.target = E;
    std::map<std::string, TensorGenerator> gens;
    for (const auto& g : tensor_generators(C, D)) gens[gen_key(g)] = g;

    detail::LineParser lp(text);
    std::vector<std::string> tok;
    while (lp.next(tok)) {
        if (tok.size() != 4 || tok[2] != "->")
            lp.fail("expected: node|edge|gen KEY -> IMAGE");
        const std::string& key = tok[1];
        const std::string& img = tok[3];
        if (tok[0] == "node") {
            auto [x, p] = detail::paren_pair(lp, key);
            if (!C.has_object(x)) lp.fail("unknown first-factor object: " + x);
            if (!D.has_object(p)) lp.fail("unknown second-factor object: " + p);
            std::string k = node_key(x, p);
            if (V.node.count(k)) lp.fail("node listed twice: " + key);
            V.node[k] = img;
        } else if (tok[0] == "edge") {
            std::vector<std::string> parts = detail::split_on(key, '@');
            if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
                lp.fail("edge keys look like c@P or X@d, got '" + key + "'");
            bool as_c =
                C.one_cells.count(parts[0]) && D.has_object(parts[1]);
            bool as_d =
                C.has_object(parts[0]) && D.one_cells.count(parts[1]);
            if (as_c && as_d)
                lp.fail("edge key is ambiguous between the factors: " + key);
            if (!as_c && !as_d) lp.fail("unknown edge key: " + key);
            std::string k = as_c ? cedge_key(parts[0], parts[1])
                                 : dedge_key(parts[0], parts[1]);
            if (V.edge.count(k)) lp.fail("edge listed twice: " + key);
            V.edge[k] = img;
        } else if (tok[0] == "gen") {
            if (!gens.count(key)) lp.fail("unknown generator key: " + key);
            if (V.gen.count(key)) lp.fail("generator listed twice: " + key);
            V.gen[key] = img;
        } else {
            lp.fail("expected 'node', 'edge' or 'gen', got '" + tok[0] + "'");
        }
    }
    return V;
}

// ---------------------------------------------------------------------------
// Parsing nested lax data.

inline LaxNestObject parse_laxnest_object(const std::string& text,
                                          const FinTwoCategory& C,
                                          const FinTwoCategory& D,
                                          const FinTwoCategory& E) {
    LaxNestObject B;
    B.target = E;
    detail::LineParser lp(text);
    std::vector<std::string> tok;
    auto want_cobj = [&](const std::string& x) {
        if (!C.has_object(x)) lp.fail("unknown first-factor object: " + x);
    };
    auto want_dobj = [&](const std::string& p) {
        if (!D.has_object(p)) lp.fail("unknown second-factor object: " + p);
    };
    auto want_cone = [&](const std::string& c) {
        if (!C.one_cells.count(c)) lp.fail("unknown first-factor 1-cell: " + c);
    };
    auto want_done = [&](const std::string& d) {
        if (!D.one_cells.count(d))
            lp.fail("unknown second-factor 1-cell: " + d);
    };
    auto store = [&](std::map<std::string, std::string>& m,
                     const std::string& key, const std::string& img) {
        if (m.count(key)) lp.fail("entry listed twice: " + key);
        m[key] = img;
    };
    while (lp.next(tok)) {
        if (tok.size() != 4 || tok[2] != "->")
            lp.fail("expected: KEYWORD (A;B) -> IMAGE");
        const std::string& kw = tok[0];
        auto [l, r] = detail::paren_pair(lp, tok[1]);
        const std::string& img = tok[3];
        if (kw == "obj") {
            want_cobj(l), want_dobj(r);
            store(B.obj, nest_key(l, r), img);
        } else if (kw == "darr") {
            want_cobj(l), want_done(r);
            store(B.darr, nest_key(l, r), img);
        } else if (kw == "carr") {
            want_cone(l), want_dobj(r);
            store(B.carr, nest_key(l, r), img);
        } else if (kw == "d2") {
            want_cobj(l);
            if (!D.two_cells.count(r))
                lp.fail("unknown second-factor 2-cell: " + r);
            store(B.d2, nest_key(l, r), img);
        } else if (kw == "c2") {
            if (!C.two_cells.count(l))
                lp.fail("unknown first-factor 2-cell: " + l);
            want_dobj(r);
            store(B.c2, nest_key(l, r), img);
        } else if (kw == "etad") {
            want_cobj(l), want_dobj(r);
            store(B.eta_d, nest_key(l, r), img);
        } else if (kw == "etac") {
            want_cobj(l), want_dobj(r);
            store(B.eta_c, nest_key(l, r), img);
        } else if (kw == "mud") {
            want_cobj(l);
            std::vector<std::string> ds = detail::split_on(r, ',');
            if (ds.size() != 2) lp.fail("mud keys look like (X;d,d')");
            want_done(ds[0]), want_done(ds[1]);
            if (D.one(ds[0]).tgt != D.one(ds[1]).src)
                lp.fail("second-factor arrows do not compose: " + r);
            store(B.mu_d, nest_key(l, ds[0], ds[1]), img);
        } else if (kw == "muc") {
            std::vector<std::string> cs = detail::split_on(l, ',');
            if (cs.size() != 2) lp.fail("muc keys look like (c,c';P)");
            want_cone(cs[0]), want_cone(cs[1]);
            if (C.one(cs[0]).tgt != C.one(cs[1]).src)
                lp.fail("first-factor arrows do not compose: " + l);
            want_dobj(r);
            store(B.mu_c, nest_key(cs[0], cs[1], r), img);
        } else if (kw == "swap") {
            want_cone(l), want_done(r);
            store(B.swap, nest_key(l, r), img);
        } else {
            lp.fail("unknown keyword: " + kw);
        }
    }
    return B;
}

inline LaxNestArrow parse_laxnest_arrow(const std::string& text,
                                        const FinTwoCategory& C,
                                        const FinTwoCategory& D) {
    LaxNestArrow b;
    detail::LineParser lp(text);
    std::vector<std::string> tok;
    while (lp.next(tok)) {
        if (tok.size() != 4 || tok[2] != "->")
            lp.fail("expected: comp|sigd|sigc (A;B) -> IMAGE");
        auto [l, r] = detail::paren_pair(lp, tok[1]);
        const std::string& img = tok[3];
        std::map<std::string, std::string>* m = nullptr;
        if (tok[0] == "comp") {
            if (!C.has_object(l)) lp.fail("unknown first-factor object: " + l);
            if (!D.has_object(r)) lp.fail("unknown second-factor object: " + r);
            m = &b.comp;
        } else if (tok[0] == "sigd") {
            if (!C.has_object(l)) lp.fail("unknown first-factor object: " + l);
            if (!D.one_cells.count(r))
                lp.fail("unknown second-factor 1-cell: " + r);
            m = &b.sigd;
        } else if (tok[0] == "sigc") {
            if (!C.one_cells.count(l))
                lp.fail("unknown first-factor 1-cell: " + l);
            if (!D.has_object(r)) lp.fail("unknown second-factor object: " + r);
            m = &b.sigc;
        } else {
            lp.fail("unknown keyword: " + tok[0]);
        }
        std::string key = nest_key(l, r);
        if (m->count(key)) lp.fail("entry listed twice: " + tok[1]);
        (*m)[key] = img;
    }
    return b;
}

inline LaxNestTwoCell parse_laxnest_twocell(const std::string& text,
                                            const FinTwoCategory& C,
                                            const FinTwoCategory& D) {
    LaxNestTwoCell t;
    detail::LineParser lp(text);
    std::vector<std::string> tok;
    while (lp.next(tok)) {
        if (tok.size() != 4 || tok[0] != "comp" || tok[2] != "->")
            lp.fail("expected: comp (X;P) -> IMAGE");
        auto [l, r] = detail::paren_pair(lp, tok[1]);
        if (!C.has_object(l)) lp.fail("unknown first-factor object: " + l);
        if (!D.has_object(r)) lp.fail("unknown second-factor object: " + r);
        std::string key = nest_key(l, r);
        if (t.comp.count(key)) lp.fail("entry listed twice: " + tok[1]);
        t.comp[key] = tok[3];
    }
    return t;
}

}  // namespace boxtimes
