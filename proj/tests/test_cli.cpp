#include "cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = hopfgd::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("gfun")
{
    CHECK(run({"gfun", "7", "9"}).out == "g=67 G=5\n");
    CHECK(run({"gfun", "7", "1"}).out == "g=0\n");
    CHECK(run({"gfun", "7", "20"}).out == "g=128\n");
    CHECK(run({"gfun", "6", "2"}).code == 2);
    CHECK(run({"gfun", "7"}).code == 2);
}

TEST_CASE("table matches the golden grid")
{
    const auto r = run({"table", "--e", "7..14", "--k", "1..32"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(std::string(HOPFGD_GOLDEN_DIR) + "/table1.tsv"));
    CHECK(run({"table"}).out == r.out);
    CHECK(run({"table", "--e", "7..x"}).code == 2);
}

TEST_CASE("decompose")
{
    CHECK(run({"decompose", "35"}).out == "3+32\n");
    CHECK(run({"decompose", "34"}).out == "34\n");
    CHECK(run({"decompose", "17"}).code == 2);
}

TEST_CASE("verify")
{
    const auto ok = run({"verify", "table1"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "table1\te=7..14,k=1..32\t240\tPASS\t-\n");
    const auto narrow = run({"verify", "gineq", "--e", "8..9"});
    CHECK(narrow.code == 0);
    CHECK(narrow.out.rfind("gineq\te=8..9\t", 0) == 0);
    const auto fail = run({"verify", "sprop", "--k", "2..40"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("FAIL\t(17,8,9)") != std::string::npos);
    const auto noted = run({"verify", "minus1", "--e", "7..7"});
    CHECK(noted.code == 0);
    CHECK(noted.err.find("(7,8)") != std::string::npos);
    CHECK(run({"verify", "bogus"}).code == 2);
}

TEST_CASE("sections")
{
    const auto r = run({"sections", "--m", "11,6,4,1,0", "--n", "10,8,3,2,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "p=21,16,14,9,7\n" + slurp(std::string(HOPFGD_GOLDEN_DIR) + "/sections_worked_example.txt"));
    const auto small = run({"sections", "--m", "1,0", "--n", "1,0", "--check", "--trials", "20", "--seed", "5"});
    CHECK(small.code == 0);
    CHECK(small.out.find("FAIL") == std::string::npos);
    CHECK(small.out.find("check\tround=1\tstructure=PASS\tindependence=PASS") != std::string::npos);
    const auto worked = run({"sections", "--m", "11,6,4,1,0", "--n", "10,8,3,2,0", "--check", "--trials", "20"});
    CHECK(worked.code == 1);
    CHECK(worked.out.find("check\tround=3\tstructure=PASS\tindependence=FAIL") != std::string::npos);
    CHECK(worked.out == run({"sections", "--m", "11,6,4,1,0", "--n", "10,8,3,2,0", "--check", "--trials", "20"}).out);
    CHECK(run({"sections", "--m", "3,4", "--n", "1,0"}).code == 2);
    CHECK(run({"sections", "--m", "3,x", "--n", "1,0"}).code == 2);
}

TEST_CASE("immerse")
{
    const auto r = run({"immerse", "16383"});
    CHECK(r.code == 0);
    CHECK(r.out.find("best\tlifting\t32747\n") != std::string::npos);
    CHECK(r.out.find("margin\t1\n") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
