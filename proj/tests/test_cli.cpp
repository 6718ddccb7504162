#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mrm/cli.hpp"

using namespace mrm::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "mrm_cli_tests";
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("params reports the derived quantities") {
    CodeSpec spec{2, 2, 2, 2, 5};
    std::ostringstream out, err;
    CHECK(run_params(spec, out, err) == kExitOk);
    std::string s = out.str();
    CHECK(contains(s, "q=4\n"));
    CHECK(contains(s, "n=16\n"));
    CHECK(contains(s, "sigma=3\n"));
    CHECK(contains(s, "k=21\n"));
    CHECK(contains(s, "j=(0,0) d_j=5 I_j=15\n"));
    CHECK(contains(s, "j=(0,1) d_j=1 I_j=3\n"));
    CHECK(contains(s, "j=(1,0) d_j=1 I_j=3\n"));
    CHECK(contains(s, "infoset=21\n"));
}

TEST_CASE("params with the trivial code") {
    CodeSpec spec{2, 1, 1, 1, 1};
    std::ostringstream out, err;
    CHECK(run_params(spec, out, err) == kExitOk);
    CHECK(contains(out.str(), "n=2\n"));
    CHECK(contains(out.str(), "sigma=1\n"));
    CHECK(contains(out.str(), "k=2\n"));
}

TEST_CASE("params rejects bad specs with exit 2") {
    std::ostringstream out, err;
    CHECK(run_params(CodeSpec{2, 1, 1, 1, 2}, out, err) == kExitBadParams);  // d = sq
    CHECK(contains(err.str(), "degree out of range"));

    std::ostringstream out2, err2;
    CHECK(run_params(CodeSpec{6, 1, 1, 1, 0}, out2, err2) == kExitBadParams);  // 6 not prime

    std::ostringstream out3, err3;
    CHECK(run_params(CodeSpec{2, 1, 1, 0, 0}, out3, err3) == kExitBadParams);  // s = 0
}

TEST_CASE("encode, extract round trip through files") {
    auto dir = scratch_dir();
    CodeSpec spec{2, 2, 2, 2, 5};  // k = 21 over GF(4)
    std::string message = "0\n1\n2\n3\n0\n1\n2\n3\n0\n1\n2\n3\n0\n1\n2\n3\n0\n1\n2\n3\n0\n";
    write_file(dir / "msg.txt", message);

    std::ostringstream err;
    CHECK(run_encode(spec, (dir / "msg.txt").string(), (dir / "cw.txt").string(),
                     EncodeMode::Systematic, err) == kExitOk);

    // codeword file: n lines of sigma entries
    std::string cw = read_file(dir / "cw.txt");
    CHECK(std::count(cw.begin(), cw.end(), '\n') == 16);

    CHECK(run_extract(spec, (dir / "cw.txt").string(), (dir / "back.txt").string(), err) ==
          kExitOk);
    CHECK(read_file(dir / "back.txt") == message);

    // fast path writes the identical codeword file
    CHECK(run_encode(spec, (dir / "msg.txt").string(), (dir / "cw_fast.txt").string(),
                     EncodeMode::Fast, err) == kExitOk);
    CHECK(read_file(dir / "cw_fast.txt") == cw);

    // determinism: a second run reproduces the same bytes
    CHECK(run_encode(spec, (dir / "msg.txt").string(), (dir / "cw2.txt").string(),
                     EncodeMode::Systematic, err) == kExitOk);
    CHECK(read_file(dir / "cw2.txt") == cw);
}

TEST_CASE("monomial encoding of the zero message") {
    auto dir = scratch_dir();
    CodeSpec spec{3, 1, 1, 2, 3};  // k = 4
    write_file(dir / "zero.txt", "0\n0\n0\n0\n");
    std::ostringstream err;
    CHECK(run_encode(spec, (dir / "zero.txt").string(), (dir / "zero_cw.txt").string(),
                     EncodeMode::Monomial, err) == kExitOk);
    CHECK(read_file(dir / "zero_cw.txt") == "0 0\n0 0\n0 0\n");
}

TEST_CASE("monomial encoding reads coefficients in graded-lex order") {
    auto dir = scratch_dir();
    CodeSpec spec{2, 1, 1, 2, 2};  // basis 1, X, X^2; k = 3
    write_file(dir / "m.txt", "0\n1\n0\n");  // F = X
    std::ostringstream err;
    CHECK(run_encode(spec, (dir / "m.txt").string(), (dir / "cw.txt").string(),
                     EncodeMode::Monomial, err) == kExitOk);
    // ev^2(X) over GF(2): P=0 -> (0,1); P=1 -> (1,1)
    CHECK(read_file(dir / "cw.txt") == "0 1\n1 1\n");
}

TEST_CASE("encode input validation uses exit 3") {
    auto dir = scratch_dir();
    CodeSpec spec{2, 1, 1, 2, 1};  // k = 2 over GF(2)
    std::ostringstream err;

    write_file(dir / "short.txt", "1\n");
    CHECK(run_encode(spec, (dir / "short.txt").string(), "", EncodeMode::Systematic, err) ==
          kExitBadData);

    write_file(dir / "badval.txt", "1\n2\n");  // 2 is not an element of GF(2)
    CHECK(run_encode(spec, (dir / "badval.txt").string(), "", EncodeMode::Systematic, err) ==
          kExitBadData);

    CHECK(run_encode(spec, (dir / "missing_file.txt").string(), "", EncodeMode::Systematic,
                     err) == kExitBadData);
}

TEST_CASE("extract input validation uses exit 3") {
    auto dir = scratch_dir();
    CodeSpec spec{2, 1, 1, 2, 1};  // n = 2, sigma = 2
    std::ostringstream err;

    write_file(dir / "narrow.txt", "0\n0\n");  // one entry per line
    CHECK(run_extract(spec, (dir / "narrow.txt").string(), "", err) == kExitBadData);

    write_file(dir / "shortcw.txt", "0 0\n");  // one line missing
    CHECK(run_extract(spec, (dir / "shortcw.txt").string(), "", err) == kExitBadData);
}

TEST_CASE("message files accept comments and blank lines") {
    auto dir = scratch_dir();
    CodeSpec spec{2, 1, 1, 2, 1};
    write_file(dir / "commented.txt", "# fixture\n1\n\n0  # trailing note\n");
    std::ostringstream err;
    CHECK(run_encode(spec, (dir / "commented.txt").string(), (dir / "out.txt").string(),
                     EncodeMode::Systematic, err) == kExitOk);
}

TEST_CASE("decompose lists one component per index") {
    auto dir = scratch_dir();
    std::ostringstream err;

    // constant 1 with d < q: a single component at j = 0
    write_file(dir / "one.txt", "1:0\n");
    std::ostringstream unused_err;
    CodeSpec small{2, 1, 1, 1, 1};
    CHECK(run_decompose(small, (dir / "one.txt").string(), (dir / "one_out.txt").string(),
                        unused_err) == kExitOk);
    CHECK(read_file(dir / "one_out.txt") == "j=(0) deg=0 poly=1:0\n");

    // X^q over GF(2) with d = 2: X^2 = (X^2 - X) + X
    CodeSpec spec{2, 1, 1, 2, 2};
    write_file(dir / "xq.txt", "1:2\n");
    CHECK(run_decompose(spec, (dir / "xq.txt").string(), (dir / "xq_out.txt").string(), err) ==
          kExitOk);
    CHECK(read_file(dir / "xq_out.txt") == "j=(0) deg=1 poly=1:1\nj=(1) deg=0 poly=1:0\n");
}

TEST_CASE("decompose rejects over-degree input with exit 3") {
    auto dir = scratch_dir();
    CodeSpec spec{2, 1, 1, 2, 2};
    std::ostringstream err;
    write_file(dir / "big.txt", "1:3\n");  // degree 3 > d = 2
    CHECK(run_decompose(spec, (dir / "big.txt").string(), "", err) == kExitBadData);

    write_file(dir / "garbage.txt", "not a polynomial\n");
    CHECK(run_decompose(spec, (dir / "garbage.txt").string(), "", err) == kExitBadData);
}
