// Command-line workbench for interleaving cells over a pair of finite
// 2-categories: validate presentation files, enumerate shuffle words,
// compose and decompose cells, evaluate generator assignments, and check
// doubly-nested functor data.
//
// Exit codes: 0 on success, 1 when a validator or a contract check fails,
// 2 on parse or usage errors.  Reports go to standard output, violations
// to standard error.

#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boxtimes/cellio.hpp"
#include "boxtimes/computad.hpp"
#include "boxtimes/errors.hpp"
#include "boxtimes/f2c.hpp"
#include "boxtimes/fin2cat.hpp"
#include "boxtimes/laxnest.hpp"
#include "boxtimes/shuffles.hpp"
#include "boxtimes/tensor.hpp"

namespace {

using namespace boxtimes;

// Thrown after a message has already been printed.
struct quiet_exit {
    int code;
};

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    throw quiet_exit{2};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) usage_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs a parser on the contents of `path`, attributing failures to it.
template <class F>
auto parse_step(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const parse_error& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        throw quiet_exit{2};
    }
}

FinTwoCategory load_f2c(const std::string& path, bool no_validate) {
    std::string text = read_file(path);
    FinTwoCategory E =
        parse_step(path, [&] { return parse_f2c(text); });
    if (!no_validate) {
        std::vector<Violation> vio = validate(E);
        if (!vio.empty()) {
            for (const Violation& v : vio)
                std::cerr << path << ": " << format_violation(v) << "\n";
            throw quiet_exit{1};
        }
    }
    return E;
}

CellDocument load_cells(const std::string& path, const FinTwoCategory& C,
                        const FinTwoCategory& D) {
    std::string text = read_file(path);
    return parse_step(path, [&] { return parse_cells(text, C, D); });
}

// Declaration position of the first named 1-cell equal to `cell`.
std::size_t position_of(const CellDocument& doc, const TensorOneCell& cell) {
    for (std::size_t i = 0; i < doc.one_order.size(); ++i)
        if (doc.ones.at(doc.one_order[i]) == cell) return i;
    return doc.one_order.size();
}

int report_violations(const std::vector<Violation>& vio,
                      const std::string& prefix = "") {
    for (const Violation& v : vio)
        std::cerr << prefix << format_violation(v) << "\n";
    return vio.empty() ? 0 : 1;
}

void print_slices(const std::vector<Slice>& slices) {
    for (const Slice& s : slices) std::cout << format_slice(s) << "\n";
}

int cmd_validate(const std::string& file) {
    FinTwoCategory E = load_f2c(file, /*no_validate=*/true);
    std::vector<Violation> vio = validate(E);
    if (report_violations(vio)) return 1;
    std::cout << "ok\n";
    return 0;
}

int cmd_shuffles(int n, int m, bool count) {
    std::vector<Shuffle> all = enumerate_shuffles(n, m);
    if (count) {
        std::cout << all.size() << "\n";
    } else {
        for (const Shuffle& s : all)
            std::cout << (s.word.empty() ? "-" : s.word) << "\n";
    }
    return 0;
}

int cmd_tensor(const std::string& mode, const FinTwoCategory& C,
               const FinTwoCategory& D, const CellDocument& doc) {
    if (mode == "compose") {
        if (doc.one_order.size() != 2 || !doc.two_order.empty())
            usage_error("compose expects a cell file with exactly two 1-cells "
                        "and no 2-cells");
        const TensorOneCell& f = doc.ones.at(doc.one_order[0]);
        const TensorOneCell& g = doc.ones.at(doc.one_order[1]);
        std::cout << format_one_cell(hcompose_one(C, D, f, g)) << "\n";
        return 0;
    }
    if (mode == "vcompose") {
        if (doc.two_order.size() != 2)
            usage_error("vcompose expects a cell file with exactly two "
                        "2-cells");
        const TensorTwoCell& a = doc.twos.at(doc.two_order[0]);
        const TensorTwoCell& b = doc.twos.at(doc.two_order[1]);
        std::cout << format_two_cell(vcompose_two(C, D, a, b)) << "\n";
        return 0;
    }
    // whisker: one 2-cell plus one 1-cell that is not one of its faces.
    if (doc.two_order.size() != 1)
        usage_error("whisker expects a cell file with exactly one 2-cell");
    const TensorTwoCell& a = doc.twos.at(doc.two_order[0]);
    std::vector<std::string> spare;
    for (const std::string& name : doc.one_order) {
        const TensorOneCell& f = doc.ones.at(name);
        if (f == a.src || f == a.tgt) continue;
        spare.push_back(name);
    }
    if (spare.size() != 1)
        usage_error("whisker expects exactly one 1-cell besides the faces of "
                    "the 2-cell");
    const TensorOneCell& f = doc.ones.at(spare[0]);
    std::size_t fpos = position_of(doc, f);
    std::size_t facepos =
        std::min(position_of(doc, a.src), position_of(doc, a.tgt));
    // Declared before the faces: the extra cell sits on the earlier leg.
    TensorTwoCell out = fpos < facepos ? whisker_right(C, D, a, f)
                                       : whisker_left(C, D, f, a);
    std::cout << format_two_cell(out) << "\n";
    return 0;
}

int cmd_decompose(const FinTwoCategory& C, const FinTwoCategory& D,
                  const CellDocument& doc, bool trace) {
    std::vector<Slice> chain;
    if (doc.two_order.size() == 1) {
        chain = canonical_decomposition(C, D, doc.twos.at(doc.two_order[0]));
    } else if (doc.two_order.size() == 2) {
        const TensorTwoCell& a = doc.twos.at(doc.two_order[0]);
        const TensorTwoCell& b = doc.twos.at(doc.two_order[1]);
        vcompose_two(C, D, a, b);  // surface a composability failure first
        chain = canonical_decomposition(C, D, b);
        std::vector<Slice> ca = canonical_decomposition(C, D, a);
        chain.insert(chain.end(), ca.begin(), ca.end());
    } else {
        usage_error("decompose expects a cell file with one 2-cell, or two "
                    "to be composed");
    }
    ResortResult res = resort(C, D, chain);
    if (trace)
        for (const ResortMove& mv : res.moves)
            std::cout << "move " << mv.rule << " " << mv.index << "\n";
    print_slices(res.slices);
    return 0;
}

int cmd_eval(const FinTwoCategory& C, const FinTwoCategory& D,
             const GeneratorAssignment& V, const CellDocument& doc) {
    if (doc.two_order.size() != 1)
        usage_error("eval expects a cell file with exactly one 2-cell");
    std::vector<Violation> vio = validate_assignment_typing(C, D, V);
    if (vio.empty()) vio = check_relations(C, D, V);
    if (report_violations(vio)) return 1;
    CheckedAssignment A = check_assignment(C, D, V);
    std::cout << evaluate_two(C, D, A, doc.twos.at(doc.two_order[0])) << "\n";
    return 0;
}

int cmd_check_assignment(const FinTwoCategory& C, const FinTwoCategory& D,
                         const GeneratorAssignment& V, bool mixed) {
    std::vector<Violation> vio = validate_assignment_typing(C, D, V, mixed);
    if (vio.empty())
        vio = mixed ? mixed_check_relations(C, D, V) : check_relations(C, D, V);
    if (report_violations(vio)) return 1;
    std::cout << "ok\n";
    return 0;
}

int cmd_check_laxnest(const FinTwoCategory& C, const FinTwoCategory& D,
                      const FinTwoCategory& E,
                      const std::vector<std::string>& objfiles,
                      const std::vector<std::string>& arrowfiles,
                      const std::string& twocellfile, bool roundtrip) {
    auto load_obj = [&](const std::string& path) {
        std::string text = read_file(path);
        return parse_step(path,
                          [&] { return parse_laxnest_object(text, C, D, E); });
    };
    auto load_arrow = [&](const std::string& path) {
        std::string text = read_file(path);
        return parse_step(path,
                          [&] { return parse_laxnest_arrow(text, C, D); });
    };
    LaxNestObject B = load_obj(objfiles[0]);
    LaxNestObject B2 = objfiles.size() > 1 ? load_obj(objfiles[1]) : B;

    bool ok = true;
    auto report = [&](const std::string& label,
                      const std::vector<Violation>& vio) {
        std::cout << label << (vio.empty() ? " ok" : " fail") << "\n";
        if (report_violations(vio, label + ": ")) ok = false;
    };
    report("object", validate_object(C, D, B));
    if (objfiles.size() > 1) report("object2", validate_object(C, D, B2));

    std::vector<LaxNestArrow> arrows;
    for (const std::string& path : arrowfiles) arrows.push_back(load_arrow(path));
    if (!arrows.empty())
        report("arrow", validate_arrow(C, D, B, B2, arrows[0]));
    if (arrows.size() > 1)
        report("arrow2", validate_arrow(C, D, B, B2, arrows[1]));

    if (!twocellfile.empty()) {
        if (arrows.empty())
            usage_error("--twocell needs at least one --arrow for its faces");
        std::string text = read_file(twocellfile);
        LaxNestTwoCell beta = parse_step(
            twocellfile, [&] { return parse_laxnest_twocell(text, C, D); });
        const LaxNestArrow& bb = arrows.size() > 1 ? arrows[1] : arrows[0];
        report("twocell", validate_twocell(C, D, B, B2, arrows[0], bb, beta));
    }

    if (roundtrip) {
        bool rt = from_assignment(C, D, to_assignment(C, D, B)) == B;
        if (objfiles.size() > 1)
            rt = rt && from_assignment(C, D, to_assignment(C, D, B2)) == B2;
        std::cout << "roundtrip " << (rt ? "ok" : "fail") << "\n";
        if (!rt) ok = false;
    }
    return ok ? 0 : 1;
}

int cmd_dlaw_enum(const FinTwoCategory& E, std::size_t budget) {
    FinTwoCategory pt;
    pt.objects = {"*"};
    synthesize_identities(pt);
    complete_identity_structure(pt);
    std::vector<GeneratorAssignment> all =
        enumerate_assignments(pt, pt, E, budget);
    std::cout << "count " << all.size() << "\n";
    for (const GeneratorAssignment& V : all)
        std::cout << "\n" << format_assignment(V);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for interleaving cells over finite 2-categories"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file, cfile, dfile, efile, cellsfile, assignfile, mode;
    std::string twocellfile;
    std::vector<std::string> objfiles, arrowfiles;
    int n = 0, m = 0;
    bool count = false, trace = false, mixed = false, roundtrip = false;
    bool no_validate = false;
    std::size_t budget = std::size_t{1} << 20;

    auto* validate_cmd =
        app.add_subcommand("validate", "check a presentation file");
    validate_cmd->add_option("file", file, "presentation file")->required();
    validate_cmd->callback([&] { action = [&] { return cmd_validate(file); }; });

    auto* shuffles_cmd =
        app.add_subcommand("shuffles", "list interleaving words");
    shuffles_cmd->add_option("--n", n, "letters of the first kind")
        ->required()
        ->check(CLI::NonNegativeNumber);
    shuffles_cmd->add_option("--m", m, "letters of the second kind")
        ->required()
        ->check(CLI::NonNegativeNumber);
    shuffles_cmd->add_flag("--count", count, "print only the number of words");
    shuffles_cmd->callback(
        [&] { action = [&] { return cmd_shuffles(n, m, count); }; });

    auto* tensor_cmd =
        app.add_subcommand("tensor", "compose cells read from a cell file");
    tensor_cmd->add_option("mode", mode, "compose, vcompose, or whisker")
        ->required()
        ->check(CLI::IsMember({"compose", "vcompose", "whisker"}));
    tensor_cmd->add_option("cfile", cfile, "first factor")->required();
    tensor_cmd->add_option("dfile", dfile, "second factor")->required();
    tensor_cmd->add_option("--cells", cellsfile, "cell file")->required();
    tensor_cmd->add_flag("--no-validate", no_validate,
                         "skip validating the presentation files");
    tensor_cmd->callback([&] {
        action = [&] {
            FinTwoCategory C = load_f2c(cfile, no_validate);
            FinTwoCategory D = load_f2c(dfile, no_validate);
            return cmd_tensor(mode, C, D, load_cells(cellsfile, C, D));
        };
    });

    auto* decompose_cmd = app.add_subcommand(
        "decompose", "print the canonical slice chain of a 2-cell");
    decompose_cmd->add_option("cfile", cfile, "first factor")->required();
    decompose_cmd->add_option("dfile", dfile, "second factor")->required();
    decompose_cmd->add_option("--cell", cellsfile, "cell file")->required();
    decompose_cmd->add_flag("--trace", trace,
                            "print the rewrite moves before the chain");
    decompose_cmd->add_flag("--no-validate", no_validate,
                            "skip validating the presentation files");
    decompose_cmd->callback([&] {
        action = [&] {
            FinTwoCategory C = load_f2c(cfile, no_validate);
            FinTwoCategory D = load_f2c(dfile, no_validate);
            return cmd_decompose(C, D, load_cells(cellsfile, C, D), trace);
        };
    });

    auto* eval_cmd =
        app.add_subcommand("eval", "evaluate a 2-cell under an assignment");
    eval_cmd->add_option("cfile", cfile, "first factor")->required();
    eval_cmd->add_option("dfile", dfile, "second factor")->required();
    eval_cmd->add_option("efile", efile, "target")->required();
    eval_cmd->add_option("--assign", assignfile, "assignment file")->required();
    eval_cmd->add_option("--cell", cellsfile, "cell file")->required();
    eval_cmd->add_flag("--no-validate", no_validate,
                       "skip validating the presentation files");
    eval_cmd->callback([&] {
        action = [&] {
            FinTwoCategory C = load_f2c(cfile, no_validate);
            FinTwoCategory D = load_f2c(dfile, no_validate);
            FinTwoCategory E = load_f2c(efile, no_validate);
            std::string text = read_file(assignfile);
            GeneratorAssignment V = parse_step(
                assignfile, [&] { return parse_assignment(text, C, D, E); });
            return cmd_eval(C, D, V, load_cells(cellsfile, C, D));
        };
    });

    auto* check_cmd = app.add_subcommand(
        "check-assignment", "type-check an assignment and its relations");
    check_cmd->add_option("cfile", cfile, "first factor")->required();
    check_cmd->add_option("dfile", dfile, "second factor")->required();
    check_cmd->add_option("efile", efile, "target")->required();
    check_cmd->add_option("--assign", assignfile, "assignment file")->required();
    check_cmd->add_flag("--mixed", mixed, "use the mixed orientation");
    check_cmd->add_flag("--no-validate", no_validate,
                        "skip validating the presentation files");
    check_cmd->callback([&] {
        action = [&] {
            FinTwoCategory C = load_f2c(cfile, no_validate);
            FinTwoCategory D = load_f2c(dfile, no_validate);
            FinTwoCategory E = load_f2c(efile, no_validate);
            std::string text = read_file(assignfile);
            GeneratorAssignment V = parse_step(
                assignfile, [&] { return parse_assignment(text, C, D, E); });
            return cmd_check_assignment(C, D, V, mixed);
        };
    });

    auto* nest_cmd = app.add_subcommand(
        "check-laxnest", "validate doubly-nested functor data");
    nest_cmd->add_option("cfile", cfile, "first factor")->required();
    nest_cmd->add_option("dfile", dfile, "second factor")->required();
    nest_cmd->add_option("efile", efile, "target")->required();
    nest_cmd->add_option("--object", objfiles, "object file (repeat for two)")
        ->required()
        ->expected(1, 2);
    nest_cmd->add_option("--arrow", arrowfiles, "arrow file (repeat for two)")
        ->expected(1, 2);
    nest_cmd->add_option("--twocell", twocellfile,
                         "2-cell file, checked between the arrows");
    nest_cmd->add_flag("--roundtrip", roundtrip,
                       "also check the assignment round-trip");
    nest_cmd->add_flag("--no-validate", no_validate,
                       "skip validating the presentation files");
    nest_cmd->callback([&] {
        action = [&] {
            FinTwoCategory C = load_f2c(cfile, no_validate);
            FinTwoCategory D = load_f2c(dfile, no_validate);
            FinTwoCategory E = load_f2c(efile, no_validate);
            return cmd_check_laxnest(C, D, E, objfiles, arrowfiles,
                                     twocellfile, roundtrip);
        };
    });

    auto* dlaw_cmd = app.add_subcommand(
        "dlaw-enum", "enumerate point-to-point assignments into a target");
    dlaw_cmd->add_option("efile", efile, "target")->required();
    dlaw_cmd->add_option("--budget", budget, "search budget");
    dlaw_cmd->add_flag("--no-validate", no_validate,
                       "skip validating the presentation file");
    dlaw_cmd->callback([&] {
        action = [&] {
            return cmd_dlaw_enum(load_f2c(efile, no_validate), budget);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const quiet_exit& q) {
        return q.code;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
