#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "ybg/cli.hpp"
#include "ybg/io.hpp"

using namespace ybg;

namespace {

#ifndef YBG_DATA_DIR
#define YBG_DATA_DIR "data"
#endif

std::string data_path(const std::string& name) { return std::string(YBG_DATA_DIR) + "/" + name; }

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "cli_tmp_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("io round trips") {
    for (const Solution& s : {fixtures::ex1(), fixtures::g3(), fixtures::zg2()}) {
        std::istringstream in(format_solution(s));
        const Solution back = parse_solution(in);
        CHECK(back.f == s.f);
        CHECK(back.g == s.g);

        std::istringstream pin(format_presentation(to_presentation(s)));
        const Presentation p = parse_presentation(pin);
        const Solution back2 = from_presentation(p);
        CHECK(back2.f == s.f);
    }
    const IntMatrix m = fixtures::reject4();
    std::istringstream min(format_matrix(m));
    CHECK(parse_matrix(min) == m);

    const Permutation p = parse_permutation_line("2 1 4 3");
    CHECK(p == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
    CHECK(format_permutation(p) == "2 1 4 3");
    CHECK(format_cycles(p) == "(1 2)(3 4)");
    CHECK_THROWS_AS(parse_permutation_line("2 2 3"), parse_error);

    CHECK(format_vec(fixtures::vec_of({1, 2, -4, 0})) == "t1 t2^2 t3^-4");
    CHECK(format_vec(fixtures::vec_of({0, 0})) == "1");
    CHECK(format_word(parse_word("x1 x2^-1 x3^2", 3)) == "x1 x2^-1 x3 x3");
    CHECK(parse_word("x2^-2", 2).size() == 2);
    CHECK(parse_word("", 2).empty());
    CHECK_THROWS_AS(parse_word("x5", 3), parse_error);
    CHECK_THROWS_AS(parse_word("y1", 3), parse_error);
}

TEST_CASE("io errors carry line numbers") {
    std::istringstream bad("n 2\nf 1 1 1\nf 2 1 2\ng 1 1 2\ng 2 1 2\n");
    try {
        parse_solution(bad);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("cli validate") {
    CHECK(run({"validate", data_path("ex1.sol")}).code == 0);
    CHECK(run({"validate", data_path("g3.sol")}).code == 0);

    const std::string bad = write_temp("nonbij.sol", "n 2\nf 1 1 1\nf 2 1 2\ng 1 1 2\ng 2 1 2\n");
    CHECK(run({"validate", bad}).code == 2);

    // involutivity violation: f = id, g = (1 2)
    const std::string inval = write_temp("inval.sol", "n 2\nf 1 1 2\nf 2 1 2\ng 1 2 1\ng 2 2 1\n");
    const RunResult r = run({"validate", inval});
    CHECK(r.code == 1);
    CHECK(r.out.find("involutivity") != std::string::npos);

    CHECK(run({"validate", "no_such_file.sol"}).code == 2);
}

TEST_CASE("cli info") {
    const RunResult r = run({"info", data_path("ex1.sol")});
    CHECK(r.code == 0);
    CHECK(r.out.find("class 2") != std::string::npos);
    CHECK(r.out.find("|Div(Delta)| 16") != std::string::npos);
    CHECK(r.out.find("|W| 16") != std::string::npos);
    CHECK(r.out.find("indecomposable") != std::string::npos);

    const RunResult rg3 = run({"info", data_path("g3.sol")});
    CHECK(rg3.out.find("class 3") != std::string::npos);
    CHECK(rg3.out.find("|W| 27") != std::string::npos);

    const RunResult rt = run({"info", data_path("trivial3.sol")});
    CHECK(rt.out.find("class 1") != std::string::npos);
    CHECK(rt.out.find("|W| 1") != std::string::npos);
    CHECK(rt.out.find("decomposable") != std::string::npos);

    const RunResult rl = run({"info", data_path("g2.sol"), "--dump-lattice", "--oracle"});
    CHECK(rl.code == 0);
    CHECK(rl.out.find("lattice:") != std::string::npos);
    CHECK(rl.out.find("oracle class counts match") != std::string::npos);
    CHECK(rl.out.find("agrees") != std::string::npos);
}

TEST_CASE("cli presentation round trip") {
    const RunResult pres = run({"presentation", data_path("ex1.sol")});
    CHECK(pres.code == 0);
    const std::string path = write_temp("ex1.pres", pres.out);
    const RunResult back = run({"from-presentation", path});
    CHECK(back.code == 0);
    std::ifstream orig(data_path("ex1.sol"));
    std::stringstream orig_ss;
    orig_ss << orig.rdbuf();
    std::istringstream a(back.out), b(orig_ss.str());
    const Solution sa = parse_solution(a), sb = parse_solution(b);
    CHECK(sa.f == sb.f);
    CHECK(sa.g == sb.g);
}

TEST_CASE("cli check-matrix") {
    const RunResult rej = run({"check-matrix", data_path("ex1.sol"), data_path("reject4.mat")});
    CHECK(rej.code == 1);
    CHECK(rej.out.find("rejected") != std::string::npos);
    CHECK(rej.out.find("witness (i=3, j=1): transported t1 t2^2 t3^-4") != std::string::npos);

    const std::string id4 = write_temp("id4.mat", "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    const RunResult acc = run({"check-matrix", data_path("ex1.sol"), id4});
    CHECK(acc.code == 0);
    CHECK(acc.out.find("accepted") != std::string::npos);
    CHECK(acc.out.find("f'_1") != std::string::npos);

    const std::string bad = write_temp("nonuni.mat", "2 0\n0 1\n");
    CHECK(run({"check-matrix", data_path("g2.sol"), bad}).code == 2);
}

TEST_CASE("cli search") {
    const RunResult r = run({"search", data_path("ex1.sol"), "--genperm"});
    CHECK(r.code == 0);
    CHECK(r.out.find("found 4") != std::string::npos);
    CHECK(r.out.find("order 4, abelian") != std::string::npos);

    const RunResult rg3 = run({"search", data_path("g3.sol"), "--bounded", "1"});
    CHECK(rg3.code == 0);
    CHECK(rg3.out.find("found 6") != std::string::npos);
    CHECK(rg3.out.find("order 6, nonabelian") != std::string::npos);

    CHECK(run({"search", data_path("g2.sol")}).code == 2);  // needs a mode

    SUBCASE("deterministic output") {
        const RunResult a = run({"search", data_path("g3.sol"), "--genperm"});
        const RunResult b = run({"search", data_path("g3.sol"), "--genperm"});
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli apply") {
    const RunResult r = run({"apply", data_path("zg2.sol"), data_path("zg2_sigma.mat"), "x1"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1 x2 x2\n");

    const RunResult rej = run({"apply", data_path("ex1.sol"), data_path("reject4.mat"), "x1"});
    CHECK(rej.code == 1);
}

TEST_CASE("cli quotient") {
    const RunResult r = run({"quotient", data_path("ex1.sol")});
    CHECK(r.code == 0);
    CHECK(r.out.find("order 16") != std::string::npos);

    const std::string neg = write_temp("neg4.mat", "-1 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 -1\n");
    const RunResult ra = run({"quotient", data_path("ex1.sol"), "--matrix", neg});
    CHECK(ra.code == 0);
    CHECK(ra.out.find("well-defined") != std::string::npos);
}

TEST_CASE("cli tabular output") {
    const RunResult info = run({"--tabular", "info", data_path("ex1.sol")});
    CHECK(info.code == 0);
    CHECK(info.out.find("class\t2") != std::string::npos);
    CHECK(info.out.find("quotient_order\t16") != std::string::npos);
    CHECK(info.out.find("decomposable\tfalse") != std::string::npos);

    const RunResult rej = run({"--tabular", "check-matrix", data_path("ex1.sol"), data_path("reject4.mat")});
    CHECK(rej.code == 1);
    CHECK(rej.out.find("verdict\trejected") != std::string::npos);
    CHECK(rej.out.find("witness\t3\t1\t1 2 -4 0\t-4 2 1 0") != std::string::npos);

    const RunResult search = run({"--tabular", "search", data_path("g2.sol"), "--genperm"});
    CHECK(search.out.find("found\t4") != std::string::npos);
    CHECK(search.out.find("matrix\t2\t1 0 0 1") != std::string::npos);
    CHECK(search.out.find("abelian\ttrue") != std::string::npos);

    const RunResult again = run({"--tabular", "search", data_path("g2.sol"), "--genperm"});
    CHECK(search.out == again.out);

    const RunResult quot =
        run({"--tabular", "quotient", data_path("ex1.sol"), "--matrix", data_path("reject4.mat")});
    CHECK(quot.code == 1);
    CHECK(quot.out.find("verdict\trejected") != std::string::npos);
}

TEST_CASE("cli equivalent") {
    const RunResult self = run({"equivalent", data_path("g2.sol"), data_path("g2.sol")});
    CHECK(self.code == 0);

    // relabeling of g2 by the swap: same tables here, so use zg2 vs trivial3 for a miss
    const RunResult miss = run({"equivalent", data_path("zg2.sol"), data_path("trivial3.sol")});
    CHECK(miss.code == 1);
    CHECK(miss.out.find("none") != std::string::npos);
}
