#pragma once

// Text format for finite 2-categories (.f2c files).
//
// A file is a sequence of sections, each introduced by a keyword on its own
// line and containing one declaration per line.  '#' starts a comment that
// runs to the end of the line; blank lines are ignored.  Tokens are
// whitespace-separated, so names may use any non-blank characters except
// that they must not collide with the punctuation tokens below.
//
//   OBJECTS      X
//   ARROWS       f : X -> Y
//   ID1          X : f            (f is the identity 1-cell of X)
//   COMP         g . f = h        (h = g after f)
//   TWOCELLS     m : f => g
//   ID2          f : m            (m is the identity 2-cell of f)
//   VCOMP        b * a = c        (c = b after a)
//   LWHISK       f . a = c        (post-whisker the 2-cell a by f)
//   RWHISK       a . f = c        (pre-whisker the 2-cell a by f)
//
// Sections may come in any order (each at most once) but every name must be
// declared before it is used.  The reserved names id1_X and id2_f denote
// identities and spring into existence on first use, so files only need to
// spell out non-identity data: composites with identities, whiskerings by
// identity 1-cells, and whiskerings of identity 2-cells are filled in
// automatically after parsing.  Explicitly declaring a reserved name is
// allowed only if the file also records it as the corresponding identity.
//
// Names are global: an object, a 1-cell, and a 2-cell may not share a name.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fin2cat.hpp"

namespace boxtimes {

namespace detail {

class F2cParser {
public:
    FinTwoCategory run(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::vector<std::string> tok = tokens(raw);
            if (tok.empty()) continue;
            if (tok.size() == 1 && is_section(tok[0])) {
                enter_section(tok[0]);
                continue;
            }
            dispatch(tok);
        }
        try {
            synthesize_identities(E_);
        } catch (const shape_error& e) {
            throw parse_error(std::string(e.what()) +
                              " (reserved names must be recorded in ID1/ID2)");
        }
        complete_identity_structure(E_);
        return std::move(E_);
    }

private:
    enum class Kind { object, one, two };

    FinTwoCategory E_;
    std::map<std::string, Kind> names_;
    std::string section_;
    std::vector<std::string> seen_sections_;
    int line_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(line_, msg);
    }

    static std::vector<std::string> tokens(const std::string& s) {
        std::istringstream in(s);
        std::vector<std::string> out;
        std::string t;
        while (in >> t) out.push_back(t);
        return out;
    }

    static bool is_section(const std::string& t) {
        for (const char* s : {"OBJECTS", "ARROWS", "ID1", "COMP", "TWOCELLS",
                              "ID2", "VCOMP", "LWHISK", "RWHISK"})
            if (t == s) return true;
        return false;
    }

    void enter_section(const std::string& s) {
        for (const auto& prev : seen_sections_)
            if (prev == s) fail("section " + s + " appears twice");
        seen_sections_.push_back(s);
        section_ = s;
    }

    // Lines are parsed positionally, so punctuation-like names are harmless;
    // only a bare section keyword would be ambiguous.
    void declare(const std::string& name, Kind kind) {
        if (is_section(name))
            fail("'" + name + "' cannot be used as a name");
        if (names_.count(name)) fail("name already in use: " + name);
        names_[name] = kind;
    }

    // Resolve a 1-cell reference, materializing a reserved identity name.
    std::string arrow(const std::string& name) {
        auto it = names_.find(name);
        if (it != names_.end()) {
            if (it->second != Kind::one) fail(name + " is not a 1-cell");
            return name;
        }
        if (name.rfind("id1_", 0) == 0) {
            std::string x = name.substr(4);
            auto obj = names_.find(x);
            if (obj != names_.end() && obj->second == Kind::object &&
                !E_.identity1.count(x)) {
                names_[name] = Kind::one;
                E_.one_cells[name] = {x, x};
                E_.identity1[x] = name;
                return name;
            }
        }
        fail("unknown 1-cell: " + name);
    }

    // Resolve a 2-cell reference, materializing a reserved identity name.
    std::string twocell(const std::string& name) {
        auto it = names_.find(name);
        if (it != names_.end()) {
            if (it->second != Kind::two) fail(name + " is not a 2-cell");
            return name;
        }
        if (name.rfind("id2_", 0) == 0) {
            std::string f = arrow(name.substr(4));
            if (!E_.identity2.count(f)) {
                names_[name] = Kind::two;
                E_.two_cells[name] = {f, f};
                E_.identity2[f] = name;
                return name;
            }
        }
        fail("unknown 2-cell: " + name);
    }

    const std::string& object(const std::string& name) const {
        auto it = names_.find(name);
        if (it == names_.end() || it->second != Kind::object)
            throw parse_error(line_, "unknown object: " + name);
        return name;
    }

    void expect(const std::vector<std::string>& tok, std::size_t at,
                const char* lit) const {
        if (tok.size() <= at || tok[at] != lit)
            fail(std::string("expected '") + lit + "'");
    }

    void dispatch(const std::vector<std::string>& tok) {
        if (section_.empty()) fail("declaration before any section header");
        if (section_ == "OBJECTS") {
            if (tok.size() != 1) fail("expected a single object name");
            declare(tok[0], Kind::object);
            E_.objects.push_back(tok[0]);
        } else if (section_ == "ARROWS") {
            if (tok.size() != 5) fail("expected: name : src -> tgt");
            expect(tok, 1, ":");
            expect(tok, 3, "->");
            declare(tok[0], Kind::one);
            E_.one_cells[tok[0]] = {object(tok[2]), object(tok[4])};
        } else if (section_ == "ID1") {
            if (tok.size() != 3) fail("expected: object : arrow");
            expect(tok, 1, ":");
            const std::string& x = object(tok[0]);
            std::string f = arrow(tok[2]);
            const auto& cell = E_.one_cells.at(f);
            if (!(cell.src == x && cell.tgt == x))
                fail(f + " is not an endo-1-cell of " + x);
            auto it = E_.identity1.find(x);
            if (it != E_.identity1.end() && it->second != f)
                fail(x + " already has identity " + it->second);
            E_.identity1[x] = f;
        } else if (section_ == "COMP") {
            if (tok.size() != 5) fail("expected: g . f = h");
            expect(tok, 1, ".");
            expect(tok, 3, "=");
            std::string g = arrow(tok[0]), f = arrow(tok[2]), h = arrow(tok[4]);
            if (E_.one_cells.at(g).src != E_.one_cells.at(f).tgt)
                fail(g + " . " + f + " is not composable");
            if (!E_.comp1_table.emplace(FinTwoCategory::Pair{g, f}, h).second)
                fail("duplicate composite for " + g + " . " + f);
        } else if (section_ == "TWOCELLS") {
            if (tok.size() != 5) fail("expected: name : src => tgt");
            expect(tok, 1, ":");
            expect(tok, 3, "=>");
            std::string f = arrow(tok[2]), g = arrow(tok[4]);
            declare(tok[0], Kind::two);
            E_.two_cells[tok[0]] = {f, g};
        } else if (section_ == "ID2") {
            if (tok.size() != 3) fail("expected: arrow : twocell");
            expect(tok, 1, ":");
            std::string f = arrow(tok[0]);
            std::string m = twocell(tok[2]);
            const auto& cell = E_.two_cells.at(m);
            if (!(cell.src == f && cell.tgt == f))
                fail(m + " is not an endo-2-cell of " + f);
            auto it = E_.identity2.find(f);
            if (it != E_.identity2.end() && it->second != m)
                fail(f + " already has identity " + it->second);
            E_.identity2[f] = m;
        } else if (section_ == "VCOMP") {
            if (tok.size() != 5) fail("expected: b * a = c");
            expect(tok, 1, "*");
            expect(tok, 3, "=");
            std::string b = twocell(tok[0]), a = twocell(tok[2]), c = twocell(tok[4]);
            if (E_.two_cells.at(b).src != E_.two_cells.at(a).tgt)
                fail(b + " * " + a + " is not composable");
            if (!E_.vcomp_table.emplace(FinTwoCategory::Pair{b, a}, c).second)
                fail("duplicate vertical composite for " + b + " * " + a);
        } else if (section_ == "LWHISK") {
            if (tok.size() != 5) fail("expected: f . a = c");
            expect(tok, 1, ".");
            expect(tok, 3, "=");
            std::string f = arrow(tok[0]), a = twocell(tok[2]), c = twocell(tok[4]);
            if (E_.one_cells.at(f).src != E_.one_cells.at(E_.two_cells.at(a).src).tgt)
                fail(f + " . " + a + " is not whiskerable");
            if (!E_.lwhisk_table.emplace(FinTwoCategory::Pair{f, a}, c).second)
                fail("duplicate left whisker for " + f + " . " + a);
        } else if (section_ == "RWHISK") {
            if (tok.size() != 5) fail("expected: a . f = c");
            expect(tok, 1, ".");
            expect(tok, 3, "=");
            std::string a = twocell(tok[0]), f = arrow(tok[2]), c = twocell(tok[4]);
            if (E_.one_cells.at(E_.two_cells.at(a).src).src != E_.one_cells.at(f).tgt)
                fail(a + " . " + f + " is not whiskerable");
            if (!E_.rwhisk_table.emplace(FinTwoCategory::Pair{a, f}, c).second)
                fail("duplicate right whisker for " + a + " . " + f);
        } else {
            throw internal_error("unhandled section " + section_);
        }
    }
};

} // namespace detail

inline FinTwoCategory parse_f2c(const std::string& text) {
    return detail::F2cParser{}.run(text);
}

inline FinTwoCategory parse_f2c_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_f2c(buf.str());
}

// Canonical full listing: every section, every table entry, sorted by the
// map order, objects in declaration order.  parse_f2c(print_f2c(E)) == E for
// any E whose identities are recorded (no synthesis is needed on re-read).
inline std::string print_f2c(const FinTwoCategory& E) {
    std::ostringstream out;
    out << "OBJECTS\n";
    for (const auto& x : E.objects) out << x << "\n";
    out << "ARROWS\n";
    for (const auto& [f, cell] : E.one_cells)
        out << f << " : " << cell.src << " -> " << cell.tgt << "\n";
    out << "ID1\n";
    for (const auto& [x, f] : E.identity1) out << x << " : " << f << "\n";
    out << "COMP\n";
    for (const auto& [gf, h] : E.comp1_table)
        out << gf.first << " . " << gf.second << " = " << h << "\n";
    out << "TWOCELLS\n";
    for (const auto& [a, cell] : E.two_cells)
        out << a << " : " << cell.src << " => " << cell.tgt << "\n";
    out << "ID2\n";
    for (const auto& [f, m] : E.identity2) out << f << " : " << m << "\n";
    out << "VCOMP\n";
    for (const auto& [ba, c] : E.vcomp_table)
        out << ba.first << " * " << ba.second << " = " << c << "\n";
    out << "LWHISK\n";
    for (const auto& [fa, c] : E.lwhisk_table)
        out << fa.first << " . " << fa.second << " = " << c << "\n";
    out << "RWHISK\n";
    for (const auto& [af, c] : E.rwhisk_table)
        out << af.first << " . " << af.second << " = " << c << "\n";
    return out.str();
}

} // namespace boxtimes
