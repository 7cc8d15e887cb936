// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>
#include <unistd.h>

#include "support/voting_oracle.hpp"
#include "trc/chain/ledger.hpp"
#include "trc/cli/commands.hpp"
#include "trc/core/codec.hpp"

using namespace trc;
namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const fs::path kSource = TRC_SOURCE_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result trc_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "trc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("trc_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const fs::path& p) { return cli::read_file(p); }

// Toy elements are big-endian integers.
std::uint64_t toy_int(const std::string& hex) { return std::stoull(hex, nullptr, 16); }

std::vector<std::string> worked_example_keygen(const std::string& out) {
    return {"keygen", "--n", "4", "--toy-p", "23", "--toy-g", "11", "--sk", "3,4,5,6", "--out", out};
}

std::vector<std::string> worked_example_encrypt(const std::string& manifest, const std::string& out) {
    return {"encrypt", "--message", (kSource / "tests/fixtures/worked_example_message.txt").string(),
            "--manifest", manifest, "--threshold", "3", "--decrypt-time", "1700000000",
            "--k", "22", "--r", "7", "--out", out};
}

}  // namespace

TEST_CASE("keygen reproduces the worked example key set and its golden files") {
    TempDir dir;
    auto r = trc_cli(worked_example_keygen(dir / "keys"));
    REQUIRE(r.code == 0);
    for (const auto* name : {"manifest.json", "key_1.json", "key_2.json", "key_3.json", "key_4.json"})
        CHECK(slurp(dir.path / "keys" / name) == slurp(kSource / "tests/golden/keygen" / name));

    auto manifest = Json::parse(slurp(kSource / "tests/golden/keygen/manifest.json"));
    std::vector<std::uint64_t> pks;
    for (const auto& h : manifest.at("holders")) pks.push_back(toy_int(h.at("pk")));
    CHECK(pks == std::vector<std::uint64_t>{20, 13, 5, 9});
}

TEST_CASE("keygen determinism and single-holder output") {
    TempDir dir;
    REQUIRE(trc_cli({"keygen", "--n", "1", "--seed", "4", "--out", dir / "one"}).code == 0);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path / "one")) ++files;
    CHECK(files == 2);  // key_1.json and manifest.json

    REQUIRE(trc_cli({"keygen", "--n", "3", "--seed", "11", "--out", dir / "a"}).code == 0);
    REQUIRE(trc_cli({"keygen", "--n", "3", "--seed", "11", "--out", dir / "b"}).code == 0);
    REQUIRE(trc_cli({"keygen", "--n", "3", "--seed", "12", "--out", dir / "c"}).code == 0);
    for (const auto* name : {"manifest.json", "key_1.json", "key_3.json"}) {
        CHECK(slurp(dir.path / "a" / name) == slurp(dir.path / "b" / name));
        CHECK(slurp(dir.path / "a" / name) != slurp(dir.path / "c" / name));
    }
    CHECK(trc_cli({"keygen", "--n", "3", "--out", dir / "d"}).code == 2);
    CHECK(trc_cli({"keygen", "--n", "0", "--seed", "1", "--out", dir / "d"}).code == 2);
    CHECK(trc_cli({"keygen", "--n", "2", "--sk", "3,23", "--toy-p", "23", "--toy-g", "11", "--out", dir / "d"}).code == 2);
    CHECK(trc_cli({"keygen", "--n", "2", "--toy-p", "23", "--toy-g", "2", "--seed", "1", "--out", dir / "d"}).code == 2);
}

TEST_CASE("encrypt reproduces the worked example request byte for byte") {
    TempDir dir;
    const auto manifest = (kSource / "tests/golden/keygen/manifest.json").string();
    REQUIRE(trc_cli(worked_example_encrypt(manifest, dir / "req.json")).code == 0);
    CHECK(slurp(dir / "req.json") == slurp(kSource / "tests/golden/encrypt/request.json"));
    REQUIRE(trc_cli(worked_example_encrypt(manifest, dir / "again.json")).code == 0);
    CHECK(slurp(dir / "again.json") == slurp(dir / "req.json"));

    auto req = Json::parse(slurp(kSource / "tests/golden/encrypt/request.json"));
    CHECK(toy_int(req.at("commitment_a")) == 7);
    REQUIRE(req.at("masks").size() == 2);
    CHECK(req.at("masks")[0].at("index") == 3);
    CHECK(toy_int(req.at("masks")[0].at("alpha")) == 24);
    CHECK(req.at("masks")[1].at("index") == 4);
    CHECK(toy_int(req.at("masks")[1].at("alpha")) == 17);
}

TEST_CASE("encrypt with t = n keeps the single mask of holder n") {
    TempDir dir;
    REQUIRE(trc_cli({"keygen", "--n", "3", "--seed", "2", "--out", dir / "k"}).code == 0);
    auto r = trc_cli({"encrypt", "--message", (kSource / "tests/fixtures/worked_example_message.txt").string(), "--manifest",
                      dir / "k/manifest.json", "--threshold", "3", "--decrypt-time", "10", "--seed", "5", "--out",
                      dir / "r.json"});
    REQUIRE(r.code == 0);
    auto req = Json::parse(slurp(dir / "r.json"));
    REQUIRE(req.at("masks").size() == 1);
    CHECK(req.at("masks")[0].at("index") == 3);

    CHECK(trc_cli({"encrypt", "--message", (kSource / "tests/fixtures/worked_example_message.txt").string(), "--manifest",
                   dir / "k/manifest.json", "--threshold", "3", "--decrypt-time", "10", "--out", dir / "x.json"})
              .code == 2);
    CHECK(trc_cli({"encrypt", "--message", (kSource / "tests/fixtures/worked_example_message.txt").string(), "--manifest",
                   dir / "k/manifest.json", "--threshold", "4", "--decrypt-time", "10", "--seed", "1", "--out",
                   dir / "x.json"})
              .code == 2);
}

TEST_CASE("share and decrypt round trip through files") {
    TempDir dir;
    const auto golden = kSource / "tests/golden";
    std::vector<std::uint64_t> values;
    for (int i = 1; i <= 4; ++i) {
        const auto out = dir / ("s" + std::to_string(i) + ".json");
        REQUIRE(trc_cli({"share", "--request", (golden / "encrypt/request.json").string(), "--key",
                         (golden / ("keygen/key_" + std::to_string(i) + ".json")).string(), "--out", out})
                    .code == 0);
        values.push_back(toy_int(Json::parse(slurp(out)).at("value")));
    }
    CHECK(values == std::vector<std::uint64_t>{21, 9, 17, 4});

    auto base = std::vector<std::string>{"decrypt", "--request", (golden / "encrypt/request.json").string(),
                                         "--manifest", (golden / "keygen/manifest.json").string()};
    auto with = [&](std::vector<std::string> shares, const std::string& out) {
        auto args = base;
        for (const auto& s : shares) {
            args.push_back("--share");
            args.push_back(dir / s);
        }
        args.push_back("--out");
        args.push_back(dir / out);
        return trc_cli(args);
    };
    REQUIRE(with({"s1.json", "s2.json", "s3.json"}, "m123").code == 0);
    REQUIRE(with({"s2.json", "s3.json", "s4.json"}, "m234").code == 0);
    const auto message = slurp(kSource / "tests/fixtures/worked_example_message.txt");
    CHECK(slurp(dir / "m123") == message);
    CHECK(slurp(dir / "m234") == message);

    auto few = with({"s1.json", "s2.json"}, "m12");
    CHECK(few.code == 2);
    CHECK(few.err.find("NotEnoughShares") != std::string::npos);
    CHECK(with({"s1.json", "missing.json", "s3.json"}, "mx").code == 3);
}

TEST_CASE("scenario command writes reports for the bundled configs") {
    TempDir dir;
    const auto scenarios = kSource / "scenarios";

    REQUIRE(trc_cli({"scenario", (scenarios / "honest_quorum.json").string(), "--seed", "1", "--out", dir / "a"}).code == 0);
    auto a = Json::parse(slurp(dir / "a/report.json"));
    int paid = 0;
    for (const auto& h : a.at("holders")) paid += h.at("rewards").get<int>() > 0;
    CHECK(paid == 3);
    CHECK(a.at("requests")[0].at("reconstructed") == true);
    CHECK(slurp(dir / "a/deviation.csv").rfind("duration_s,requests,", 0) == 0);

    // The ledger log replays to the reported hash.
    auto replay = trc_cli({"replay", dir / "a/ledger.jsonl"});
    REQUIRE(replay.code == 0);
    CHECK(replay.out == a.at("state_hash").get<std::string>() + "\n");
    CHECK(trc_cli({"replay", dir / "a/ledger.jsonl", "--expect-hash", "00"}).code == 2);

    REQUIRE(trc_cli({"scenario", (scenarios / "early_submitter.json").string(), "--seed", "1", "--out", dir / "b"}).code == 0);
    auto b = Json::parse(slurp(dir / "b/report.json"));
    REQUIRE(b.at("slashes").size() == 1);
    CHECK(b.at("slashes")[0].at("holder") == 4);
    CHECK(b.at("requests")[0].at("reconstructed") == true);

    REQUIRE(trc_cli({"scenario", (scenarios / "sweep.json").string(), "--seed", "1", "--out", dir / "s"}).code == 0);
    auto csv = slurp(dir / "s/scalability.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    for (const auto* n : {"\n3,2,", "\n10,6,", "\n20,11,", "\n30,16,", "\n40,21,"}) CHECK(csv.find(n) != std::string::npos);

    cli::write_file(dir / "bad.json", R"({"holder_count": 2})");
    CHECK(trc_cli({"scenario", dir / "bad.json", "--seed", "1", "--out", dir / "x"}).code == 2);
    cli::write_file(dir / "broken.json", "{");
    CHECK(trc_cli({"scenario", dir / "broken.json", "--seed", "1", "--out", dir / "x"}).code == 2);
    CHECK(trc_cli({"scenario", (scenarios / "honest_quorum.json").string(), "--out", dir / "x"}).code == 2);
}

TEST_CASE("vote command emits the sweep CSV") {
    TempDir dir;
    const auto fixtures = kSource / "tests/fixtures";
    REQUIRE(trc_cli({"vote", (fixtures / "tiny.soi").string(), "--seed", "3", "--out", dir / "tiny.csv"}).code == 0);
    auto csv = slurp(dir / "tiny.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
    CHECK(csv.find("\n100,100,0,0.000000\n") != std::string::npos);

    REQUIRE(trc_cli({"vote", (fixtures / "tiny.soi").string(), "--seed", "3", "--threads", "1", "--out",
                     dir / "tiny1.csv"})
                .code == 0);
    CHECK(slurp(dir / "tiny1.csv") == csv);

    auto missing = trc_cli({"vote", (fixtures / "nope.soi").string(), "--seed", "1", "--out", dir / "x.csv"});
    CHECK(missing.code == 3);
    CHECK(missing.err.find("nope.soi") != std::string::npos);
    CHECK(trc_cli({"vote", (fixtures / "bad_duplicate.soi").string(), "--seed", "1", "--out", dir / "x.csv"}).code == 2);
    CHECK(trc_cli({"vote", (fixtures / "tiny.soi").string(), "--out", dir / "x.csv"}).code == 2);
    CHECK(trc_cli({"vote", (fixtures / "tiny.soi").string(), "--rule", "approval", "--seed", "1", "--out",
                   dir / "x.csv"})
              .code == 2);
}

TEST_CASE("vote --exact on the N=9 fixture matches the brute-force oracle CSV") {
    TempDir dir;
    const auto fixture = kSource / "tests/fixtures/n9.soi";
    const std::pair<const char*, testing::OracleRule> rules[] = {{"plurality", testing::OracleRule::plurality},
                                                                  {"borda_truncated", testing::OracleRule::borda_truncated},
                                                                  {"irv", testing::OracleRule::irv}};
    // The fixture, expanded voter by voter.
    testing::Electorate e{3, {}};
    for (int i = 0; i < 3; ++i) e.voters.push_back({1, 2, 3});
    for (int i = 0; i < 2; ++i) e.voters.push_back({2, 3});
    for (int i = 0; i < 2; ++i) e.voters.push_back({3, 2, 1});
    e.voters.push_back({2, 1});
    e.voters.push_back({3});

    for (const auto& [name, rule] : rules) {
        REQUIRE(trc_cli({"vote", fixture.string(), "--exact", "--rule", name, "--out", dir / "v.csv"}).code == 0);
        std::string expected = "l,iterations,changes,probability\n";
        for (int l = 1; l <= 100; ++l) {
            const std::uint64_t m = (100 - l) * 9 / 100;
            const auto c = testing::oracle_enumerate(e, m, rule);
            char buf[96];
            std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%.6f\n", l, static_cast<unsigned long long>(c.subsets),
                          static_cast<unsigned long long>(c.changes),
                          static_cast<double>(c.changes) / static_cast<double>(c.subsets));
            expected += buf;
        }
        CHECK(slurp(dir / "v.csv") == expected);
    }
}

TEST_CASE("exit codes and usage errors") {
    CHECK(trc_cli({}).code == 2);
    CHECK(trc_cli({"frobnicate"}).code == 2);
    CHECK(trc_cli({"keygen"}).code == 2);
    auto help = trc_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("keygen") != std::string::npos);
    CHECK(trc_cli({"replay", "/nonexistent/ledger.jsonl"}).code == 3);
    CHECK(cli::exit_code_for(Error(Errc::IoError, "x")) == 3);
    CHECK(cli::exit_code_for(Error(Errc::ConfigInvalid, "x")) == 2);
}
