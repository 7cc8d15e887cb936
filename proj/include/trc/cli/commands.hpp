// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trc/common/errors.hpp"
#include "trc/group/group.hpp"
#include "trc/voting/voting.hpp"

namespace trc::cli {

namespace fs = std::filesystem;

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitIo = 3 };

// IoError maps to 3, every other trc::Error to 2.
int exit_code_for(const Error& e) noexcept;

std::string read_file(const fs::path& path);
void write_file(const fs::path& path, std::string_view content);

struct KeygenOptions {
    std::uint32_t n = 0;
    group::GroupConfig group;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> secret_keys;  // decimal, forces sk_1..sk_k
    fs::path out;
};
// Writes key_<i>.json for each holder and manifest.json.
void cmd_keygen(const KeygenOptions& o, std::ostream& log);

struct EncryptOptions {
    fs::path message;
    fs::path manifest;
    std::uint32_t threshold = 0;
    std::int64_t decrypt_time = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> k;  // decimal; drawn from the seed otherwise
    std::optional<std::string> r;
    fs::path out;
};
void cmd_encrypt(const EncryptOptions& o, std::ostream& log);

struct ShareOptions {
    fs::path request;
    fs::path key;
    fs::path out;
};
void cmd_share(const ShareOptions& o, std::ostream& log);

struct DecryptOptions {
    fs::path request;
    fs::path manifest;
    std::vector<fs::path> shares;
    fs::path out;
};
void cmd_decrypt(const DecryptOptions& o, std::ostream& log);

struct ScenarioOptions {
    fs::path config;
    std::uint64_t seed = 0;
    fs::path out;
};
// report.json, deviation.csv, ledger.jsonl; scalability.csv when the
// config carries a "scalability" block.
void cmd_scenario(const ScenarioOptions& o, std::ostream& log);

struct VoteOptions {
    fs::path ballots;
    voting::Rule rule = voting::Rule::plurality;
    std::optional<std::uint64_t> seed;
    std::uint64_t iterations = 100;
    unsigned threads = 0;
    bool exact = false;  // enumerate malicious subsets instead of sampling
    fs::path out;
};
void cmd_vote(const VoteOptions& o, std::ostream& log);

struct ReplayOptions {
    fs::path log;
    std::optional<std::string> expect_hash;
};
// Prints the replayed state hash.
void cmd_replay(const ReplayOptions& o, std::ostream& out);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trc::cli
