// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>

#include "trc/cli/commands.hpp"

namespace trc::cli {

namespace {

struct GroupFlags {
    std::string backend = "toy";
    std::uint64_t p = 1000003;
    std::uint64_t g = 2;
    std::optional<std::uint64_t> order;

    void add(CLI::App& cmd) {
        cmd.add_option("--backend", backend, "toy or curve")->check(CLI::IsMember({"toy", "curve"}));
        cmd.add_option("--toy-p", p, "toy group prime modulus");
        cmd.add_option("--toy-g", g, "toy group generator");
        cmd.add_option("--toy-order", order, "toy generator order (default p-1)");
    }

    group::GroupConfig config() const {
        if (backend == "curve") return group::CurveConfig{};
        return group::ToyConfig{p, g, order};
    }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Timed-release cryptography toolkit", "trc"};
    app.require_subcommand(1);

    GroupFlags keygen_group;
    KeygenOptions keygen;
    auto* kg = app.add_subcommand("keygen", "generate holder key pairs and a public-key manifest");
    kg->add_option("--n", keygen.n, "number of holders")->required();
    kg->add_option("--seed", keygen.seed, "seed for key derivation");
    kg->add_option("--sk", keygen.secret_keys, "force secret keys sk_1.. (decimal, comma separated)")->delimiter(',');
    kg->add_option("--out", keygen.out, "output directory")->required();
    keygen_group.add(*kg);

    EncryptOptions encrypt;
    auto* enc = app.add_subcommand("encrypt", "build a timelock request for a message");
    enc->add_option("--message", encrypt.message, "message file")->required();
    enc->add_option("--manifest", encrypt.manifest, "public-key manifest")->required();
    enc->add_option("--threshold", encrypt.threshold, "shares needed to decrypt")->required();
    enc->add_option("--decrypt-time", encrypt.decrypt_time, "unix seconds")->required();
    enc->add_option("--seed", encrypt.seed, "seed for k and r");
    enc->add_option("--k", encrypt.k, "force the symmetric key (decimal)");
    enc->add_option("--r", encrypt.r, "force the client randomness (decimal)");
    enc->add_option("--out", encrypt.out, "request file")->required();

    ShareOptions share;
    auto* sh = app.add_subcommand("share", "derive a holder's secret share for a request");
    sh->add_option("--request", share.request, "request file")->required();
    sh->add_option("--key", share.key, "holder key file")->required();
    sh->add_option("--out", share.out, "share file")->required();

    DecryptOptions decrypt;
    auto* dec = app.add_subcommand("decrypt", "verify shares, reconstruct the key and decrypt");
    dec->add_option("--request", decrypt.request, "request file")->required();
    dec->add_option("--manifest", decrypt.manifest, "public-key manifest")->required();
    dec->add_option("--share", decrypt.shares, "share files")->required();
    dec->add_option("--out", decrypt.out, "plaintext file")->required();

    ScenarioOptions scenario;
    auto* sc = app.add_subcommand("scenario", "run a simulated scenario");
    sc->add_option("config", scenario.config, "scenario JSON")->required();
    sc->add_option("--seed", scenario.seed, "simulation seed")->required();
    sc->add_option("--out", scenario.out, "output directory")->required();

    VoteOptions vote;
    std::string rule = "plurality";
    auto* vt = app.add_subcommand("vote", "malicious-voting sweep over l = 1..100");
    vt->add_option("ballots", vote.ballots, "ballot file")->required();
    vt->add_option("--rule", rule, "plurality, borda_truncated or irv")
        ->check(CLI::IsMember({"plurality", "borda_truncated", "irv"}));
    vt->add_option("--seed", vote.seed, "sweep seed");
    vt->add_option("--iterations", vote.iterations, "iterations per l");
    vt->add_option("--threads", vote.threads, "worker threads (0 = all cores)");
    vt->add_flag("--exact", vote.exact, "enumerate every malicious subset instead of sampling");
    vt->add_option("--out", vote.out, "CSV file")->required();

    ReplayOptions replay;
    auto* rp = app.add_subcommand("replay", "re-execute a ledger log and print its state hash");
    rp->add_option("log", replay.log, "ledger.jsonl")->required();
    rp->add_option("--expect-hash", replay.expect_hash, "fail unless the replayed hash matches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "trc: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (*kg) {
            keygen.group = keygen_group.config();
            cmd_keygen(keygen, out);
        } else if (*enc) {
            cmd_encrypt(encrypt, out);
        } else if (*sh) {
            cmd_share(share, out);
        } else if (*dec) {
            cmd_decrypt(decrypt, out);
        } else if (*sc) {
            cmd_scenario(scenario, out);
        } else if (*vt) {
            vote.rule = voting::rule_from_string(rule);
            cmd_vote(vote, out);
        } else if (*rp) {
            cmd_replay(replay, out);
        }
    } catch (const Error& e) {
        err << "trc: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "trc: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace trc::cli
