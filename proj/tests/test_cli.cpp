// End-to-end tests for the command-line tool: each command is run as a
// subprocess and its output is compared against the library directly.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "boxtimes/cellio.hpp"
#include "boxtimes/computad.hpp"
#include "boxtimes/f2c.hpp"
#include "boxtimes/fin2cat.hpp"
#include "boxtimes/laxnest.hpp"
#include "boxtimes/shuffles.hpp"
#include "boxtimes/tensor.hpp"
#include "test_util.hpp"

namespace {

using namespace boxtimes;

std::string data(const std::string& name) {
    return std::string(BOXTIMES_DATA_DIR) + "/" + name;
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string errfile = std::string(::testing::TempDir()) + "cli_err_" +
                          std::to_string(++counter) + ".txt";
    std::string cmd = std::string(BOXTIMES_CLI) + " " + args + " 2>" + errfile;
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr) << cmd;
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream ein(errfile);
    std::ostringstream ess;
    ess << ein.rdbuf();
    r.err = ess.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string(::testing::TempDir()) + name;
    std::ofstream out(path);
    out << text;
    return path;
}

const FinTwoCategory& sampc() {
    static FinTwoCategory C = testutil::make_sample_c();
    return C;
}
const FinTwoCategory& sampd() {
    static FinTwoCategory D = testutil::make_sample_d();
    return D;
}
const FinTwoCategory& z2cat() {
    static FinTwoCategory E = testutil::make_z2_gadget();
    return E;
}

TensorOneCell five_step() {
    return {Path{"X", {"e", "e", "a"}}, Path{"P", {"b", "f"}},
            Shuffle(3, 2, "cdccd")};
}

TensorTwoCell merge_cell() {
    TensorOneCell tgt{Path{"X", {"e", "id1_X", "a"}}, Path{"P", {"b"}},
                      Shuffle(3, 1, "cdcc")};
    return {five_step(),
            tgt,
            IntervalMap(3, 3, {0, 1, 1, 3}),
            IntervalMap(1, 2, {0, 2}),
            {"upsilon", "id2_id1_X", "id2_a"},
            {"id2_b"}};
}

const std::string kMergeText =
    "cell f = (X;P) cdccd [e,e,a] [b,f]\n"
    "cell g = (X;P) cdcc [e,id1_X,a] [b]\n"
    "cell2 t = f => g xi=[0,1,1,3] rho=[0,2] "
    "alpha=[upsilon,id2_id1_X,id2_a] beta=[id2_b]\n";

GeneratorAssignment constant_assignment(const FinTwoCategory& C,
                                        const FinTwoCategory& D,
                                        const FinTwoCategory& E,
                                        const std::string& ob) {
    GeneratorAssignment V;
    V.target = E;
    for (const auto& x : C.objects)
        for (const auto& p : D.objects) V.node[node_key(x, p)] = ob;
    for (const auto& [c, cc] : C.one_cells) {
        (void)cc;
        for (const auto& p : D.objects)
            V.edge[cedge_key(c, p)] = E.id1(ob);
    }
    for (const auto& x : C.objects)
        for (const auto& [d, dc] : D.one_cells) {
            (void)dc;
            V.edge[dedge_key(x, d)] = E.id1(ob);
        }
    for (const auto& g : tensor_generators(C, D))
        V.gen[gen_key(g)] = E.id2(E.id1(ob));
    return V;
}

// A valid twisted assignment of the sample pair into the involution.
GeneratorAssignment sample_v2_assignment() {
    GeneratorAssignment V = constant_assignment(sampc(), sampd(), z2cat(), "W");
    V.gen["idC(X,P)"] = "s";
    for (const char* k :
         {"compC(id1_X,id1_X,P)", "compC(id1_X,e,P)", "compC(id1_X,a,P)",
          "compC(e,id1_X,P)", "compC(e,e,P)", "compC(e,a,P)"})
        V.gen[k] = "s";
    V.gen["swap(e,b)"] = "s";
    V.gen["swap(id1_X,b)"] = "s";
    return V;
}

const std::string kNestObjText =
    "obj (*;*) -> X\n"
    "darr (*;id1_*) -> id1_X\n"
    "carr (id1_*;*) -> id1_X\n"
    "d2 (*;id2_id1_*) -> id2_id1_X\n"
    "c2 (id2_id1_*;*) -> id2_id1_X\n"
    "etad (*;*) -> id2_id1_X\n"
    "etac (*;*) -> id2_id1_X\n"
    "mud (*;id1_*,id1_*) -> id2_id1_X\n"
    "muc (id1_*,id1_*;*) -> id2_id1_X\n"
    "swap (id1_*;id1_*) -> id2_id1_X\n";

TEST(ValidateCmd, AcceptsTheShippedPresentations) {
    for (const char* name :
         {"terminal.f2c", "sample_c.f2c", "sample_d.f2c", "e3.f2c",
          "z2.f2c"}) {
        RunResult r = run_cli("validate " + data(name));
        EXPECT_EQ(r.code, 0) << name << "\n" << r.err;
        EXPECT_EQ(r.out, "ok\n") << name;
        EXPECT_EQ(r.err, "") << name;
    }
}

TEST(ValidateCmd, FlagsAnExplicitlyWrongIdentityWhisker) {
    std::string path = write_temp("bad_whisker.f2c",
                                  "OBJECTS\nW\nTWOCELLS\ns : id1_W => id1_W\n"
                                  "VCOMP\ns * s = id2_id1_W\n"
                                  "LWHISK\nid1_W . s = id2_id1_W\n");
    RunResult r = run_cli("validate " + path);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err, "");
}

TEST(ValidateCmd, ParseProblemsExitWithTwo) {
    std::string path = write_temp("bad_comp.f2c",
                                  "OBJECTS\nA\nB\nARROWS\nu : A -> B\n"
                                  "COMP\nu . u = u\n");
    RunResult r = run_cli("validate " + path);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not composable"), std::string::npos) << r.err;
    EXPECT_EQ(run_cli("validate /no/such/file.f2c").code, 2);
}

TEST(ShufflesCmd, CountsAndWords) {
    RunResult r = run_cli("shuffles --n 2 --m 3 --count");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "10\n");

    std::string want;
    for (const Shuffle& s : enumerate_shuffles(1, 2)) want += s.word + "\n";
    RunResult w = run_cli("shuffles --n 1 --m 2");
    EXPECT_EQ(w.code, 0);
    EXPECT_EQ(w.out, want);

    EXPECT_EQ(run_cli("shuffles --n 0 --m 0").out, "-\n");
    EXPECT_EQ(run_cli("shuffles --n 2").code, 2);
}

TEST(TensorCmd, ComposeGluesInDeclarationOrder) {
    std::string cells = write_temp("compose.cells",
                                   "cell u = (X;P) c [e] []\n"
                                   "cell w = (X;P) cd [e] [b]\n");
    RunResult r = run_cli("tensor compose " + data("sample_c.f2c") + " " +
                          data("sample_d.f2c") + " --cells " + cells);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "(X;P) ccd [e,e] [b]\n");

    std::string three = write_temp("three.cells",
                                   "cell u = (X;P) c [e] []\n"
                                   "cell v = (X;P) c [e] []\n"
                                   "cell w = (X;P) c [e] []\n");
    EXPECT_EQ(run_cli("tensor compose " + data("sample_c.f2c") + " " +
                      data("sample_d.f2c") + " --cells " + three)
                  .code,
              2);
}

TEST(TensorCmd, VcomposeAndWhiskerMatchTheLibrary) {
    std::string cells = write_temp(
        "vc.cells", kMergeText +
                        "cell2 i = g => g xi=[0,1,2,3] rho=[0,1] "
                        "alpha=[id2_e,id2_id1_X,id2_a] beta=[id2_b]\n");
    RunResult r = run_cli("tensor vcompose " + data("sample_c.f2c") + " " +
                          data("sample_d.f2c") + " --cells " + cells);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, format_two_cell(merge_cell()) + "\n");

    // The extra 1-cell before the faces goes on the earlier leg...
    std::string early = write_temp("wh_early.cells",
                                   "cell u = (X;P) - [] []\n" + kMergeText);
    RunResult re = run_cli("tensor whisker " + data("sample_c.f2c") + " " +
                           data("sample_d.f2c") + " --cells " + early);
    EXPECT_EQ(re.code, 0) << re.err;
    TensorOneCell u = identity_cell(sampc(), sampd(), "X", "P");
    EXPECT_EQ(re.out,
              format_two_cell(whisker_right(sampc(), sampd(), merge_cell(), u)) +
                  "\n");

    // ...and after the faces on the later leg.
    std::string late = write_temp("wh_late.cells",
                                  kMergeText + "cell v = (Y;Q) - [] []\n");
    RunResult rl = run_cli("tensor whisker " + data("sample_c.f2c") + " " +
                           data("sample_d.f2c") + " --cells " + late);
    EXPECT_EQ(rl.code, 0) << rl.err;
    TensorOneCell v = identity_cell(sampc(), sampd(), "Y", "Q");
    EXPECT_EQ(rl.out,
              format_two_cell(whisker_left(sampc(), sampd(), v, merge_cell())) +
                  "\n");
}

TEST(DecomposeCmd, PrintsTheCanonicalChain) {
    RunResult r = run_cli("decompose " + data("sample_c.f2c") + " " +
                          data("sample_d.f2c") + " --cell " +
                          data("merge.cells"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "gamma(upsilon,P) pos=0\ncompD(X,b,f) pos=1\n"
              "compC(e,a,Q) pos=4\nidC(X,Q) pos=3\n"
              "swap(e,f) pos=2\nswap(a,f) pos=3\n");
    // The canonical chain needs no rewriting, so tracing adds nothing.
    RunResult t = run_cli("decompose " + data("sample_c.f2c") + " " +
                          data("sample_d.f2c") + " --cell " +
                          data("merge.cells") + " --trace");
    EXPECT_EQ(t.out, r.out);
}

TEST(DecomposeCmd, ResortsAGluedPairAndTracesTheMoves) {
    std::string cells = write_temp(
        "pair.cells", kMergeText +
                          "cell2 u = g => g xi=[0,1,2,3] rho=[0,1] "
                          "alpha=[upsilon,id2_id1_X,id2_a] beta=[id2_b]\n");
    TensorTwoCell t = merge_cell();
    TensorTwoCell u{t.tgt,
                    t.tgt,
                    IntervalMap(3, 3, {0, 1, 2, 3}),
                    IntervalMap(1, 1, {0, 1}),
                    {"upsilon", "id2_id1_X", "id2_a"},
                    {"id2_b"}};
    std::vector<Slice> chain = canonical_decomposition(sampc(), sampd(), u);
    std::vector<Slice> ct = canonical_decomposition(sampc(), sampd(), t);
    chain.insert(chain.end(), ct.begin(), ct.end());
    ResortResult res = resort(sampc(), sampd(), chain);
    EXPECT_EQ(res.slices, canonical_decomposition(
                              sampc(), sampd(),
                              vcompose_two(sampc(), sampd(), t, u)));

    std::string plain;
    for (const Slice& s : res.slices) plain += format_slice(s) + "\n";
    std::string traced;
    for (const ResortMove& mv : res.moves)
        traced += "move " + mv.rule + " " + std::to_string(mv.index) + "\n";
    traced += plain;

    std::string base = "decompose " + data("sample_c.f2c") + " " +
                       data("sample_d.f2c") + " --cell " + cells;
    EXPECT_EQ(run_cli(base).out, plain);
    RunResult tr = run_cli(base + " --trace");
    EXPECT_EQ(tr.out, traced);
    EXPECT_FALSE(res.moves.empty());
}

TEST(EvalCmd, AppliesACleanAssignment) {
    GeneratorAssignment V = sample_v2_assignment();
    ASSERT_TRUE(check_relations(sampc(), sampd(), V).empty());
    std::string assign = write_temp("v2.assign", format_assignment(V));
    RunResult r = run_cli("eval " + data("sample_c.f2c") + " " +
                          data("sample_d.f2c") + " " + data("z2.f2c") +
                          " --assign " + assign + " --cell " +
                          data("merge.cells"));
    EXPECT_EQ(r.code, 0) << r.err;
    CheckedAssignment A = check_assignment(sampc(), sampd(), V);
    EXPECT_EQ(r.out,
              evaluate_two(sampc(), sampd(), A, merge_cell()) + "\n");
}

TEST(EvalCmd, RejectsARelationBreakingAssignment) {
    GeneratorAssignment V = constant_assignment(sampc(), sampd(), z2cat(), "W");
    V.gen["idC(X,P)"] = "s";
    ASSERT_FALSE(check_relations(sampc(), sampd(), V).empty());
    std::string assign = write_temp("broken.assign", format_assignment(V));
    RunResult r = run_cli("eval " + data("sample_c.f2c") + " " +
                          data("sample_d.f2c") + " " + data("z2.f2c") +
                          " --assign " + assign + " --cell " +
                          data("merge.cells"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err, "");
}

TEST(CheckAssignmentCmd, AcceptsTheShippedTwistedModel) {
    RunResult r = run_cli("check-assignment " + data("z2.f2c") + " " +
                          data("z2.f2c") + " " + data("z2.f2c") +
                          " --assign " + data("star.assign"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "ok\n");

    // The shipped file and the library agree entry for entry.
    GeneratorAssignment V = parse_assignment(
        [&] {
            std::ifstream in(data("star.assign"));
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }(),
        z2cat(), z2cat(), z2cat());
    EXPECT_TRUE(validate_assignment_typing(z2cat(), z2cat(), V).empty());
    EXPECT_TRUE(check_relations(z2cat(), z2cat(), V).empty());
}

TEST(CheckAssignmentCmd, MixedOrientationChecksTheIdentityModel) {
    GeneratorAssignment V = constant_assignment(z2cat(), z2cat(), z2cat(), "W");
    std::string assign = write_temp("const.assign", format_assignment(V));
    std::string base = "check-assignment " + data("z2.f2c") + " " +
                       data("z2.f2c") + " " + data("z2.f2c") + " --assign " +
                       assign;
    EXPECT_EQ(run_cli(base).out, "ok\n");
    RunResult r = run_cli(base + " --mixed");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "ok\n");
}

TEST(CheckAssignmentCmd, TypingFailuresGoToStderr) {
    GeneratorAssignment V = constant_assignment(z2cat(), z2cat(), z2cat(), "W");
    V.edge[dedge_key("W", "id1_W")] = "s";  // a 2-cell where a 1-cell belongs
    std::string assign = write_temp("badtype.assign", format_assignment(V));
    RunResult r = run_cli("check-assignment " + data("z2.f2c") + " " +
                          data("z2.f2c") + " " + data("z2.f2c") +
                          " --assign " + assign);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "");
    EXPECT_NE(r.err, "");
}

TEST(CheckLaxnestCmd, ValidatesObjectArrowAndTwoCell) {
    std::string obj = write_temp("pt.nest", kNestObjText);
    std::string arr = write_temp("pt.arrow",
                                 "comp (*;*) -> id1_X\n"
                                 "sigd (*;id1_*) -> id2_id1_X\n"
                                 "sigc (id1_*;*) -> id2_id1_X\n");
    std::string two = write_temp("pt.two", "comp (*;*) -> id2_id1_X\n");
    std::string base = "check-laxnest " + data("terminal.f2c") + " " +
                       data("terminal.f2c") + " " + data("sample_c.f2c");
    RunResult r = run_cli(base + " --object " + obj + " --arrow " + arr +
                          " --twocell " + two + " --roundtrip");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "object ok\narrow ok\ntwocell ok\nroundtrip ok\n");

    RunResult r2 = run_cli(base + " --object " + obj + " --object " + obj +
                           " --arrow " + arr);
    EXPECT_EQ(r2.code, 0) << r2.err;
    EXPECT_EQ(r2.out, "object ok\nobject2 ok\narrow ok\n");

    EXPECT_EQ(run_cli(base + " --object " + obj + " --twocell " + two).code,
              2);
}

TEST(CheckLaxnestCmd, NamesTheBrokenAxiomOnStderr) {
    std::string broken = kNestObjText;
    broken.replace(broken.find("swap (id1_*;id1_*) -> id2_id1_X"),
                   std::string("swap (id1_*;id1_*) -> id2_id1_X").size(),
                   "swap (id1_*;id1_*) -> upsilon");
    std::string obj = write_temp("broken.nest", broken);
    RunResult r = run_cli("check-laxnest " + data("terminal.f2c") + " " +
                          data("terminal.f2c") + " " + data("sample_c.f2c") +
                          " --object " + obj);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "object fail\n");
    EXPECT_NE(r.err.find("swap-cell-typing"), std::string::npos) << r.err;
}

TEST(DlawEnumCmd, MatchesTheLibraryEnumeration) {
    FinTwoCategory pt;
    pt.objects = {"*"};
    synthesize_identities(pt);
    complete_identity_structure(pt);

    FinTwoCategory e3 = parse_f2c_file(data("e3.f2c"));
    std::string want = "count 4\n";
    for (const GeneratorAssignment& V : enumerate_assignments(pt, pt, e3))
        want += "\n" + format_assignment(V);
    RunResult r = run_cli("dlaw-enum " + data("e3.f2c"));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, want);

    RunResult t = run_cli("dlaw-enum " + data("terminal.f2c"));
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out.substr(0, 8), "count 1\n");

    RunResult b = run_cli("dlaw-enum " + data("e3.f2c") + " --budget 1");
    EXPECT_EQ(b.code, 1);
    EXPECT_NE(b.err.find("budget"), std::string::npos) << b.err;
}

TEST(ExitCodes, UsageProblems) {
    EXPECT_EQ(run_cli("").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    RunResult h = run_cli("--help");
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out, "");
}

}  // namespace
