#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "ramlab/cli/run.hpp"
#include "ramlab/errors.hpp"

using namespace ramlab;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("ramlab_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("parse_problem") {
    const auto z = parse_problem("base=\"Z\"\npoly=\"x^2+1\"\nprime=\"5\"");
    CHECK(z.base == Base::Z);
    CHECK(z.poly == "x^2+1");
    CHECK(z.prime == "5");
    CHECK(z.precision == 64);
    CHECK(z.mode == Mode::Identity);

    const auto f = parse_problem("base=\"Fq[t]\" q=3\npoly=\"x^3-t\"\nprime=\"t\"");
    CHECK(f.base == Base::FqT);
    CHECK(f.q == 3);
    CHECK(f.poly == "x^3-t");

    const auto bare = parse_problem("# comment\n  base=Z   precision=32 mode=split\npoly=x^3-2 prime=3\n\n");
    CHECK(bare.precision == 32);
    CHECK(bare.mode == Mode::Split);
    CHECK(bare.prime == "3");

    CHECK_THROWS_AS(parse_problem("poly=\"x^2\\q\" prime=2"), ParseError);
}

TEST_CASE("parse_problem errors") {
    CHECK_THROWS_AS(parse_problem("poly=\"2*x^2+1\"\nprime=\"5\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("poly=\"x^2+1\"\nprime=\"6\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("poly=\"x^2+1\"\nprime=\"-5\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("base=\"Fq[t]\" q=6\npoly=\"x^2-t\"\nprime=\"t\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("base=\"Fq[t]\" q=243\npoly=\"x^2-t\"\nprime=\"t\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("base=\"Fq[t]\" q=5\npoly=\"x^2-t\"\nprime=\"t^2\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("base=\"Fq[t]\"\npoly=\"x^2-t\"\nprime=\"t\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("base=\"Q\"\npoly=\"x^2-1\"\nprime=\"2\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("poly=\"x^2+1\""), ValidationError);
    CHECK_THROWS_AS(parse_problem("poly=\"x^2-2x+1\" prime=3"), NonSquarefreeInput);
    CHECK_THROWS_AS(parse_problem("poly=\"x^2+1\" prime=5 precision=3"), ValidationError);

    try {
        parse_problem("poly=\"x^2+1\"\n  colour=red\nprime=5");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    try {
        parse_problem("prime=5\npoly=\"x^2 + * 1\"");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 6);
    }
    CHECK_THROWS_AS(parse_problem("poly=\"x^2+1"), ParseError);
    CHECK_THROWS_AS(parse_problem("poly=x prime=2 poly=x"), ParseError);
    CHECK_THROWS_AS(parse_problem("poly x^2+1"), ParseError);
    CHECK_THROWS_AS(parse_problem("poly=x precision=6.5 prime=2"), ParseError);
}

TEST_CASE("render round trip") {
    const char* texts[] = {
        "base=\"Z\"\npoly=\"x^2+1\"\nprime=\"5\"",
        "base=\"Fq[t]\" q=9\npoly=\"x^2 - a*t\"\nprime=\"t+1\" precision=40 mode=split",
        "poly=x^3-x^2-2x-8 prime=2",
    };
    for (const char* t : texts) {
        const auto spec = parse_problem(t);
        const std::string once = render(spec);
        CHECK(parse_problem(once) == spec);
        CHECK(render(parse_problem(once)) == once);
    }
}

TEST_CASE("run") {
    const auto o = run(parse_problem("base=\"Z\"\npoly=\"x^2+1\"\nprime=\"5\""));
    CHECK(o.exit_code == kExitOk);
    REQUIRE(o.report);
    CHECK(o.report->lhs == 2);
    CHECK(o.report->rhs == 2);
    CHECK(o.report->degree == 2);
    const std::string text = render_text(o);
    CHECK(text.find("P[1]: e=1 f=1") != std::string::npos);
    CHECK(text.find("P[2]: e=1 f=1") != std::string::npos);
    CHECK(text.find("status: PASS") != std::string::npos);

    const auto json = nlohmann::json::parse(render_json(o));
    CHECK(json["degree"] == 2);
    CHECK(json["lhs"] == 2);
    CHECK(json["rhs"] == 2);
    CHECK(json["radical_dim"] == 0);
    CHECK(json["primes"].size() == 2);
    CHECK(json["primes"][0]["e"] == 1);
    for (const char* v : {"eq11", "classical", "inequality", "e5_c", "e5_d"}) CHECK(json["verdicts"][v] == true);
    CHECK(json["certified"] == true);
    CHECK(json["caveats"].is_array());

    for (unsigned p : {2u, 3u, 5u}) {
        const auto demo = run_text("base=\"Fq[t]\" q=" + std::to_string(p) + "\npoly=\"x^" + std::to_string(p) +
                                   "-t\"\nprime=\"t\"");
        CHECK(demo.exit_code == kExitOk);
    }

    const auto split = run(parse_problem("poly=x^3-x^2-2x-8 prime=2 mode=split"));
    REQUIRE(split.split);
    CHECK(split.split->order_basis == std::vector<std::string>{"1", "θ", "(θ^2 + θ)/2"});
    CHECK(split.split->index == "2");
    CHECK_FALSE(split.split->dedekind_maximal);

    const auto bad = run_text("poly=\"2*x^2+1\"\nprime=5", "bad.problem");
    CHECK(bad.exit_code == kExitInput);
    CHECK(bad.error_kind == "ValidationError");
    CHECK(render_text(bad).find("status: INVALID") != std::string::npos);

    // Determinism: identical reports for identical input and seed.
    const auto again = run(parse_problem("base=\"Z\"\npoly=\"x^2+1\"\nprime=\"5\""));
    CHECK(render_json(again) == render_json(o));
}

TEST_CASE("run_corpus") {
    TempDir empty;
    const auto none = run_corpus(empty.path);
    CHECK(none.outcomes.empty());
    CHECK(none.exit_code() == kExitOk);

    TempDir dir;
    dir.write("b.problem", "poly=x^2+1 prime=2");
    dir.write("a.problem", "poly=x^3-2 prime=5");
    dir.write("c.problem", "poly=x^2+1 prime=4");
    dir.write("d.problem", "base=\"Fq[t]\" q=4\npoly=\"x^2+x+t\"\nprime=\"t+a\"");
    dir.write("notes.txt", "ignored");
    for (unsigned threads : {1u, 4u}) {
        const auto r = run_corpus(dir.path, threads);
        REQUIRE(r.outcomes.size() == 4);
        CHECK(r.outcomes[0].name == "a.problem");
        CHECK(r.outcomes[1].name == "b.problem");
        CHECK(r.outcomes[2].name == "c.problem");
        CHECK(r.outcomes[3].name == "d.problem");
        CHECK(r.passed == 3);
        CHECK(r.failed == 0);
        CHECK(r.errors == 1);
        CHECK(r.passed + r.failed + r.errors == r.outcomes.size());
        CHECK(r.exit_code() == kExitInput);
        CHECK(render_text(r).find("corpus: 4 problems, 3 passed, 0 failed, 1 errors") != std::string::npos);
    }
    CHECK_THROWS_AS(run_corpus(dir.path / "missing"), ValidationError);
}
