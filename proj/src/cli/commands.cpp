// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include "trc/agents/metrics.hpp"
#include "trc/chain/ledger.hpp"
#include "trc/common/drbg.hpp"
#include "trc/core/codec.hpp"
#include "trc/core/keys.hpp"

namespace trc::cli {

using core::Json;

namespace {

constexpr std::string_view kManifestFormat = "trc-manifest/1";

Json read_json(const fs::path& path) {
    const auto text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(Errc::MalformedEncoding, path.string() + ": " + e.what());
    }
}

void write_json(const fs::path& path, const Json& j) { write_file(path, core::canonical(j) + "\n"); }

void make_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) fail(Errc::IoError, dir.string() + ": " + ec.message());
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* what) {
    if (!seed) fail(Errc::InvalidArgument, std::string(what) + " needs --seed");
    return *seed;
}

struct Manifest {
    group::GroupPtr group;
    std::vector<group::G1Element> pks;
};

Manifest load_manifest(const fs::path& path) {
    const auto j = read_json(path);
    return core::with_json_errors([&] {
        if (j.value("format", "") != kManifestFormat) fail(Errc::MalformedEncoding, path.string() + ": not a manifest");
        Manifest m{group::make_group(core::group_config_from_json(j.at("group"))), {}};
        std::uint32_t expect = 1;
        for (const auto& h : j.at("holders")) {
            if (h.at("index").get<std::uint32_t>() != expect++)
                fail(Errc::MalformedEncoding, path.string() + ": holder indices must run 1..n");
            m.pks.push_back(m.group->deserialize_g1(from_hex(h.at("pk").get<std::string>())));
        }
        return m;
    });
}

group::GroupPtr group_of(const Json& j, const fs::path& path) {
    if (!j.contains("group")) fail(Errc::MalformedEncoding, path.string() + ": missing group");
    return group::make_group(core::group_config_from_json(j.at("group")));
}

group::Scalar scalar_arg(const group::ModRing& ring, const std::string& text, const char* name) {
    group::BigUint v;
    try {
        v = group::parse_big(text);
    } catch (const Error&) {
        fail(Errc::InvalidArgument, std::string(name) + " must be a decimal integer");
    }
    auto s = ring.reduce(v);
    if (s.is_zero() || v >= ring.modulus()) fail(Errc::InvalidArgument, std::string(name) + " must lie in [1, modulus)");
    return s;
}

}  // namespace

int exit_code_for(const Error& e) noexcept { return e.code() == Errc::IoError ? kExitIo : kExitValidation; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::IoError, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) fail(Errc::IoError, "cannot read " + path.string());
    return ss.str();
}

void write_file(const fs::path& path, std::string_view content) {
    if (path.has_parent_path()) make_dir(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(Errc::IoError, "cannot write " + path.string());
}

void cmd_keygen(const KeygenOptions& o, std::ostream& log) {
    if (o.n < 1) fail(Errc::InvalidArgument, "--n must be at least 1");
    if (o.secret_keys.size() > o.n) fail(Errc::InvalidArgument, "more --sk values than holders");
    auto grp = group::make_group(o.group);
    const auto group_json = core::to_json(o.group);

    Json holders = Json::array();
    for (std::uint32_t i = 1; i <= o.n; ++i) {
        core::KeyPair keys;
        if (i <= o.secret_keys.size()) {
            keys = core::keypair_from_secret(*grp, scalar_arg(grp->exponents(), o.secret_keys[i - 1], "--sk"), i);
        } else {
            auto s = mix_seed(require_seed(o.seed, "keygen"), i);
            keys = core::keygen(*grp, s == 0 ? 1 : s, i);
        }
        auto key_json = core::to_json(*grp, keys, true);
        key_json["group"] = group_json;
        write_json(o.out / ("key_" + std::to_string(i) + ".json"), key_json);
        holders.push_back({{"index", i}, {"pk", keys.pk.hex()}, {"proof", core::prove_possession(*grp, keys).hex()}});
    }
    write_json(o.out / "manifest.json",
               Json{{"format", kManifestFormat}, {"group", group_json}, {"holders", std::move(holders)}});
    log << "wrote " << o.n << " key file(s) and manifest.json to " << o.out.string() << "\n";
}

void cmd_encrypt(const EncryptOptions& o, std::ostream& log) {
    const auto m = load_manifest(o.manifest);
    const auto message = read_file(o.message);
    const auto& grp = *m.group;
    std::optional<HashDrbg> drbg;
    if (!o.k || !o.r) drbg.emplace(require_seed(o.seed, "encrypt") | 1, "trc/cli/encrypt");
    const auto k = o.k ? scalar_arg(grp.share_field(), *o.k, "--k") : grp.share_field().random_nonzero(*drbg);
    const auto r = o.r ? scalar_arg(grp.exponents(), *o.r, "--r") : grp.exponents().random_nonzero(*drbg);
    auto req = core::build_request(grp, k, r, as_bytes(message), o.decrypt_time, m.pks, o.threshold);
    write_json(o.out, core::to_json(req));
    log << "request " << req.request_id << " (t=" << req.threshold << ", n=" << req.holders << ") -> " << o.out.string()
        << "\n";
}

void cmd_share(const ShareOptions& o, std::ostream& log) {
    const auto key_json = read_json(o.key);
    const auto grp = group_of(key_json, o.key);
    const auto keys = core::keypair_from_json(*grp, key_json);
    const auto req = core::request_from_json(*grp, read_json(o.request));
    core::validate_request(*grp, req);
    const auto share = core::derive_share(*grp, req, keys);
    write_json(o.out, core::to_json(share));
    log << "share of holder " << share.holder_index << " -> " << o.out.string() << "\n";
}

void cmd_decrypt(const DecryptOptions& o, std::ostream& log) {
    const auto m = load_manifest(o.manifest);
    const auto req = core::request_from_json(*m.group, read_json(o.request));
    core::validate_request(*m.group, req);
    std::vector<core::SecretShare> shares;
    for (const auto& path : o.shares) shares.push_back(core::share_from_json(*m.group, read_json(path)));
    const auto message = core::open_request(*m.group, req, shares, m.pks);
    write_file(o.out, std::string_view(reinterpret_cast<const char*>(message.data()), message.size()));
    log << "recovered " << message.size() << " byte(s) -> " << o.out.string() << "\n";
}

void cmd_scenario(const ScenarioOptions& o, std::ostream& log) {
    const auto j = read_json(o.config);
    const auto cfg = agents::scenario_from_json(j);
    auto run = agents::run_scenario_with_log(cfg, o.seed);
    make_dir(o.out);
    write_file(o.out / "report.json", agents::to_json(run.report).dump(2) + "\n");
    write_file(o.out / "ledger.jsonl", run.ledger_log);

    std::string csv;
    try {
        csv = agents::deviation_csv(agents::measure_deviation(std::span(&run.report, 1)));
    } catch (const Error& e) {
        if (e.code() != Errc::EmptyReport) throw;
        csv = agents::deviation_csv({});  // header only: nothing was revealed
    }
    write_file(o.out / "deviation.csv", csv);

    std::size_t reconstructed = 0;
    for (const auto& r : run.report.requests) reconstructed += r.reconstructed ? 1 : 0;
    log << cfg.name << ": " << run.report.requests.size() << " request(s), " << reconstructed << " reconstructed, "
        << run.report.slashes.size() << " slash(es), " << run.report.disputes.size() << " dispute(s)\n";

    if (j.contains("scalability")) {
        const auto n_list = core::with_json_errors(
            [&] { return j.at("scalability").at("n_list").get<std::vector<std::uint32_t>>(); });
        const auto points = agents::scalability_sweep(cfg, n_list, o.seed);
        write_file(o.out / "scalability.csv", agents::scalability_csv(points));
        log << "scalability: " << points.size() << " point(s)\n";
    }
    log << "outputs in " << o.out.string() << "\n";
}

void cmd_vote(const VoteOptions& o, std::ostream& log) {
    const auto profile = voting::parse_ballot_file(read_file(o.ballots));
    std::vector<voting::SimResult> rows;
    if (o.exact) {
        for (std::uint32_t l = 1; l <= 100; ++l) rows.push_back(voting::exact_probability(profile, l, o.rule));
    } else {
        rows = voting::sweep(profile, o.rule, require_seed(o.seed, "vote"), o.iterations, o.threads);
    }
    write_file(o.out, voting::sweep_csv(rows));
    log << profile.voters() << " voter(s), " << profile.alternatives << " alternative(s), rule "
        << voting::to_string(o.rule) << " -> " << o.out.string() << "\n";
}

void cmd_replay(const ReplayOptions& o, std::ostream& out) {
    const auto ledger = chain::Ledger::replay(read_file(o.log));
    const auto hash = ledger.state_hash();
    if (o.expect_hash && *o.expect_hash != hash)
        fail(Errc::ReplayMismatch, "state hash " + hash + " differs from expected " + *o.expect_hash);
    out << hash << "\n";
}

}  // namespace trc::cli
