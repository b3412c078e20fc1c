#include <doctest.h>

#include <homkit/corpus.hpp>
#include <homkit/json_io.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace homkit;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kCli = HOMKIT_CLI_PATH;

struct Run {
    int exit_code;
    std::string stdout_text;
};

Run run_cli(const std::string& args, const fs::path& dir) {
    fs::path out = dir / "stdout.txt";
    std::string cmd = "cd " + dir.string() + " && " + kCli + " " + args + " > " +
                      out.string() + " 2> " + (dir / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return Run{WEXITSTATUS(rc), text};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("homkit_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("json round trip preserves every structure field") {
    HomHopfAlgebra h = corpus::h4();
    json j = io::hopf_to_json(h);
    HomHopfAlgebra back = io::hopf_from_json(j);
    CHECK(back.mul() == h.mul());
    CHECK(back.comul() == h.comul());
    CHECK(back.unit() == h.unit());
    CHECK(back.counit() == h.counit());
    CHECK(back.alpha() == h.alpha());
    CHECK(back.antipode == h.antipode);
    CHECK(io::canonical_dump(io::hopf_to_json(back)) == io::canonical_dump(j));

    FieldSpec f5 = FieldSpec::prime(5);
    HomAlgebra a5 = corpus::kaa(f5);
    CHECK(io::algebra_from_json(io::algebra_to_json(a5)).mul == a5.mul);
}

TEST_CASE("scalars survive the string round trip over both fields") {
    FieldSpec q = FieldSpec::rationals();
    for (const char* s : {"0", "1", "-1", "1/2", "-3/4", "123456789012345678901/7"}) {
        Scalar v = Scalar::from_string(q, s);
        CHECK(Scalar::from_string(q, v.to_string()) == v);
    }
    FieldSpec f7 = FieldSpec::prime(7);
    for (long long v = 0; v < 7; ++v) {
        Scalar s(f7, v);
        CHECK(Scalar::from_string(f7, s.to_string()) == s);
    }
}

TEST_CASE("verify verb: exit 0 on H4, exit 1 on a corrupted file, exit 2 on junk") {
    TempDir dir;
    CHECK(run_cli("corpus h4 --out h4.json", dir.path).exit_code == 0);
    CHECK(run_cli("verify --kind hopf h4.json", dir.path).exit_code == 0);

    // corrupt one multiplication entry: x·g ↦ −y
    json j = io::load_json((dir.path / "h4.json").string());
    j["mul"][2][1][3] = "-1";
    io::save_json((dir.path / "bad.json").string(), j);
    Run bad = run_cli("verify --kind hopf bad.json", dir.path);
    CHECK(bad.exit_code == 1);
    json rep = json::parse(bad.stdout_text);
    CHECK(rep["report"]["all_pass"] == false);

    std::ofstream(dir.path / "junk.json") << "{not json";
    CHECK(run_cli("verify --kind hopf junk.json", dir.path).exit_code == 2);
    CHECK(run_cli("verify --kind hopf missing.json", dir.path).exit_code == 2);
    CHECK(run_cli("corpus nosuch", dir.path).exit_code == 2);
}

TEST_CASE("construct crossed then report table") {
    TempDir dir;
    run_cli("corpus h4 --out h4.json", dir.path);
    run_cli("corpus kaa --out kaa.json", dir.path);
    run_cli("corpus action_h4 --out act.json", dir.path);
    run_cli("corpus sigma_t --t 1 --out sig.json", dir.path);
    Run built = run_cli(
        "construct crossed --base kaa.json --hopf h4.json --action act.json"
        " --cocycle sig.json --out crossed.json",
        dir.path);
    CHECK(built.exit_code == 0);

    CHECK(run_cli("verify --kind algebra crossed.json", dir.path).exit_code == 0);

    Run table = run_cli("report table crossed.json --format md", dir.path);
    CHECK(table.exit_code == 0);
    CHECK(table.stdout_text.find("| 1#x | -1#x | 1#y | 1/2·1#1 |") != std::string::npos);

    Run csv = run_cli("report table crossed.json --format csv", dir.path);
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_text.find("1#x,-1#x,1#y,1/2·1#1") != std::string::npos);
}

TEST_CASE("corpus crossed_h4 flags the documented discrepancies") {
    TempDir dir;
    run_cli("corpus crossed_h4 --t 1 --out printed.json", dir.path);
    json j = io::load_json((dir.path / "printed.json").string());
    REQUIRE(j.contains("discrepancies"));
    CHECK(j["discrepancies"].size() == 9);

    run_cli("corpus crossed_h4 --t 0 --out printed0.json", dir.path);
    json j0 = io::load_json((dir.path / "printed0.json").string());
    CHECK(j0["discrepancies"].size() == 2);
}

TEST_CASE("check verbs wired to the library suites") {
    TempDir dir;
    run_cli("corpus h4 --out h4.json", dir.path);
    run_cli("corpus kaa --out kaa.json", dir.path);
    run_cli("corpus action_h4 --out act.json", dir.path);
    run_cli("corpus sigma_t --t 1 --out sig.json", dir.path);
    run_cli("corpus sigma_t --t 1 --scalar --out sigs.json", dir.path);

    CHECK(run_cli("check cocycle --base kaa.json --hopf h4.json --action act.json"
                  " --cocycle sig.json",
                  dir.path).exit_code == 0);
    CHECK(run_cli("check lemma25 --base kaa.json --hopf h4.json --action act.json"
                  " --cocycle sig.json",
                  dir.path).exit_code == 0);
    CHECK(run_cli("check lazy --hopf h4.json --cocycle sigs.json", dir.path).exit_code == 0);
    CHECK(run_cli("check lemma46 --hopf h4.json --cocycle sigs.json", dir.path).exit_code == 0);
    CHECK(run_cli("check sigma-antipode --base kaa.json --hopf h4.json --cocycle sig.json",
                  dir.path).exit_code == 0);

    // a failing check exits 1 and reports the witnesses
    json sig = io::load_json((dir.path / "sigs.json").string());
    sig["sigma"][0][1] = "0"; // σ(1,g) := 0 breaks normality
    io::save_json((dir.path / "sigbad.json").string(), sig);
    Run bad = run_cli("check lazy --hopf h4.json --cocycle sigbad.json", dir.path);
    CHECK(bad.exit_code == 1);
}

TEST_CASE("search and cohomology verbs over GF(3)") {
    TempDir dir;
    run_cli("corpus h4 --field gf:3 --out h4.json", dir.path);
    run_cli("corpus sigma_t --t 1 --scalar --field gf:3 --out sig.json", dir.path);

    Run search = run_cli("search lazy --hopf h4.json --cocycle sig.json --field gf:3",
                         dir.path);
    CHECK(search.exit_code == 0);
    json sj = json::parse(search.stdout_text);
    CHECK(sj["exhaustive"] == true);
    CHECK(sj["is_coboundary"] == false);

    // field mismatch is a usage error
    CHECK(run_cli("search lazy --hopf h4.json --cocycle sig.json --field gf:5", dir.path)
              .exit_code == 2);

    Run coh = run_cli("cohomology lazy --hopf h4.json --field gf:3", dir.path);
    CHECK(coh.exit_code == 0);
    json cj = json::parse(coh.stdout_text);
    CHECK(cj["candidates_scanned"] == 81);
    CHECK(cj["representatives"].size() == 3);
    CHECK(cj["group_table"] == json::parse("[[0,1,2],[1,2,0],[2,0,1]]"));
}

TEST_CASE("every verb is byte-deterministic across two runs") {
    TempDir dir;
    run_cli("corpus h4 --out h4.json", dir.path);
    run_cli("corpus kaa --out kaa.json", dir.path);
    run_cli("corpus action_h4 --out act.json", dir.path);
    run_cli("corpus sigma_t --t 2 --out sig.json", dir.path);

    auto twice = [&](const std::string& args) {
        Run a = run_cli(args, dir.path);
        Run b = run_cli(args, dir.path);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.stdout_text == b.stdout_text);
        return a;
    };
    twice("corpus h4");
    twice("corpus crossed_h4 --t 1");
    twice("verify --kind hopf h4.json");
    twice("check cocycle --base kaa.json --hopf h4.json --action act.json --cocycle sig.json");
    twice("report table kaa.json");

    // construct output files are byte-identical as well
    run_cli("construct crossed --base kaa.json --hopf h4.json --action act.json"
            " --cocycle sig.json --out c1.json",
            dir.path);
    run_cli("construct crossed --base kaa.json --hopf h4.json --action act.json"
            " --cocycle sig.json --out c2.json",
            dir.path);
    CHECK(io::read_file((dir.path / "c1.json").string()) ==
          io::read_file((dir.path / "c2.json").string()));
}

TEST_CASE("HOMKIT_THREADS does not change any output byte") {
    TempDir dir;
    run_cli("corpus h4 --field gf:3 --out h4.json", dir.path);
    std::string one, three;
    {
        fs::path out = dir.path / "o1.txt";
        std::string cmd = "cd " + dir.path.string() + " && HOMKIT_THREADS=1 " + kCli +
                          " cohomology lazy --hopf h4.json > " + out.string() + " 2>/dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0);
        std::ifstream in(out);
        one.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }
    {
        fs::path out = dir.path / "o3.txt";
        std::string cmd = "cd " + dir.path.string() + " && HOMKIT_THREADS=3 " + kCli +
                          " cohomology lazy --hopf h4.json > " + out.string() + " 2>/dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0);
        std::ifstream in(out);
        three.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    }
    CHECK(!one.empty());
    CHECK(one == three);
}

TEST_CASE("deform, smash and biproduct construct verbs") {
    TempDir dir;
    run_cli("corpus h4 --out h4.json", dir.path);
    run_cli("corpus kaa --out kaa.json", dir.path);
    run_cli("corpus action_h4 --out act.json", dir.path);
    run_cli("corpus sigma_t --t 1 --scalar --out sigs.json", dir.path);

    CHECK(run_cli("construct deform --hopf h4.json --cocycle sigs.json --out def.json",
                  dir.path).exit_code == 0);
    CHECK(run_cli("verify --kind algebra def.json", dir.path).exit_code == 0);

    CHECK(run_cli("construct smash --base kaa.json --hopf h4.json --action act.json"
                  " --out smash.json",
                  dir.path).exit_code == 0);
    CHECK(run_cli("verify --kind algebra smash.json", dir.path).exit_code == 0);
}
