// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/chain/ledger.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "trc/common/hash.hpp"
#include "trc/core/keys.hpp"

namespace trc::chain {

std::string_view to_string(HolderStatus s) noexcept {
    switch (s) {
        case HolderStatus::active: return "active";
        case HolderStatus::slashed: return "slashed";
        case HolderStatus::blacklisted: return "blacklisted";
    }
    return "unknown";
}

std::string_view to_string(SubmissionStatus s) noexcept {
    switch (s) {
        case SubmissionStatus::provisional: return "provisional";
        case SubmissionStatus::finalized: return "finalized";
        case SubmissionStatus::rejected: return "rejected";
    }
    return "unknown";
}

std::string_view to_string(RequestStatus s) noexcept {
    switch (s) {
        case RequestStatus::open: return "open";
        case RequestStatus::finalized: return "finalized";
        case RequestStatus::voided: return "voided";
        case RequestStatus::expired: return "expired";
    }
    return "unknown";
}

std::string_view to_string(SubmitOutcome s) noexcept {
    switch (s) {
        case SubmitOutcome::Provisional: return "Provisional";
        case SubmitOutcome::SlashedEarly: return "SlashedEarly";
        case SubmitOutcome::RejectedInactive: return "RejectedInactive";
    }
    return "unknown";
}

std::string_view to_string(DisputeOutcome s) noexcept {
    switch (s) {
        case DisputeOutcome::Upheld: return "Upheld";
        case DisputeOutcome::Dismissed: return "Dismissed";
        case DisputeOutcome::ClientFault: return "ClientFault";
    }
    return "unknown";
}

namespace {

template <class E, std::size_t N>
E enum_from(std::string_view name, const E (&all)[N]) {
    for (E e : all)
        if (to_string(e) == name) return e;
    fail(Errc::MalformedEncoding, "unknown enum value '" + std::string(name) + "'");
}

constexpr RequestStatus kRequestStatuses[] = {RequestStatus::open, RequestStatus::finalized, RequestStatus::voided,
                                              RequestStatus::expired};

}  // namespace

Json to_json(const LedgerParams& p) {
    return Json{{"deposit_min", p.deposit_min},           {"reward_per_share", p.reward_per_share},
                {"dispute_window_s", p.dispute_window_s}, {"max_forward_drift_s", p.max_forward_drift_s},
                {"reveal_timeout_s", p.reveal_timeout_s}, {"genesis_time", p.genesis_time}};
}

LedgerParams ledger_params_from_json(const Json& j) {
    return core::with_json_errors([&] {
        LedgerParams p;
        p.deposit_min = j.value("deposit_min", p.deposit_min);
        p.reward_per_share = j.value("reward_per_share", p.reward_per_share);
        p.dispute_window_s = j.value("dispute_window_s", p.dispute_window_s);
        p.max_forward_drift_s = j.value("max_forward_drift_s", p.max_forward_drift_s);
        p.reveal_timeout_s = j.value("reveal_timeout_s", p.reveal_timeout_s);
        p.genesis_time = j.value("genesis_time", p.genesis_time);
        if (p.deposit_min < 0 || p.reward_per_share < 0 || p.dispute_window_s < 0 || p.max_forward_drift_s < 0 ||
            p.reveal_timeout_s < 0)
            fail(Errc::ConfigInvalid, "ledger parameters must be non-negative");
        return p;
    });
}

Json to_json(const RewardReport& r) {
    Json payouts = Json::array();
    for (auto& [h, a] : r.payouts) payouts.push_back({{"holder", h}, {"amount", a}});
    Json j{{"request_id", r.request_id},
           {"status", to_string(r.status)},
           {"payouts", std::move(payouts)},
           {"unrewarded", r.unrewarded},
           {"refunded", r.refunded},
           {"reveal_time", nullptr},
           {"reveal_reference_time", nullptr}};
    if (r.reveal_time) j["reveal_time"] = *r.reveal_time;
    if (r.reveal_reference_time) j["reveal_reference_time"] = *r.reveal_reference_time;
    return j;
}

RewardReport reward_report_from_json(const Json& j) {
    return core::with_json_errors([&] {
        RewardReport r;
        r.request_id = j.at("request_id").get<std::string>();
        r.status = enum_from(j.at("status").get<std::string>(), kRequestStatuses);
        for (auto& p : j.at("payouts"))
            r.payouts.emplace_back(p.at("holder").get<std::uint32_t>(), p.at("amount").get<std::int64_t>());
        r.unrewarded = j.at("unrewarded").get<std::vector<std::uint32_t>>();
        r.refunded = j.at("refunded").get<std::int64_t>();
        if (!j.at("reveal_time").is_null()) r.reveal_time = j.at("reveal_time").get<std::int64_t>();
        if (!j.at("reveal_reference_time").is_null())
            r.reveal_reference_time = j.at("reveal_reference_time").get<std::int64_t>();
        return r;
    });
}

Ledger::Ledger(GroupPtr group, LedgerParams params) : group_(std::move(group)), params_(params) {
    blocks_.push_back(Block{0, params_.genesis_time, 0, params_.genesis_time});
}

Receipt Ledger::apply(const Transaction& tx) {
    Receipt r;
    r.seq = log_.size();
    try {
        r.result = std::visit([this](const auto& t) { return dispatch(t); }, tx);
    } catch (const Error& e) {
        r.ok = false;
        r.error = e.code();
        r.detail = e.what();
    }
    log_.emplace_back(tx, r);
    return r;
}

namespace {

Receipt checked(Receipt r) {
    if (!r.ok) throw Error(r.error, r.detail.substr(r.detail.find(": ") + 2));
    return r;
}

}  // namespace

std::uint32_t Ledger::register_holder(const group::G1Element& pk, std::int64_t deposit, const group::G2Element& proof) {
    return checked(apply(RegisterHolder{pk, deposit, proof})).result.at("index").get<std::uint32_t>();
}

BlockResult Ledger::advance_block(std::uint32_t proposer, std::int64_t claimed, std::int64_t reference_now) {
    auto j = checked(apply(AdvanceBlock{proposer, claimed, reference_now})).result;
    return BlockResult{j.at("accepted").get<bool>(), j.at("reason").get<std::string>()};
}

std::string Ledger::post_request(const core::TimelockRequest& request, std::int64_t fee) {
    return checked(apply(PostRequest{request, fee})).result.at("request_id").get<std::string>();
}

SubmitOutcome Ledger::submit_share(std::uint32_t holder, const std::string& request_id,
                                   const core::SecretShare& share) {
    auto name = checked(apply(SubmitShare{holder, request_id, share})).result.at("outcome").get<std::string>();
    return enum_from(name, {SubmitOutcome::Provisional, SubmitOutcome::SlashedEarly, SubmitOutcome::RejectedInactive});
}

DisputeOutcome Ledger::raise_dispute(std::uint32_t challenger, std::uint64_t submission_id) {
    auto name = checked(apply(RaiseDispute{challenger, submission_id})).result.at("outcome").get<std::string>();
    return enum_from(name, {DisputeOutcome::Upheld, DisputeOutcome::Dismissed, DisputeOutcome::ClientFault});
}

RewardReport Ledger::finalize_request(const std::string& request_id) {
    return reward_report_from_json(checked(apply(FinalizeRequest{request_id})).result);
}

const RequestRecord* Ledger::find_request(const std::string& id) const {
    auto it = requests_.find(id);
    return it == requests_.end() ? nullptr : &it->second;
}

const HolderRecord* Ledger::find_holder(std::uint32_t index) const {
    if (index < 1 || index > holders_.size()) return nullptr;
    return &holders_[index - 1];
}

HolderRecord& Ledger::holder_mut(std::uint32_t index) { return holders_.at(index - 1); }

std::vector<const ShareSubmission*> Ledger::submissions_for(const std::string& request_id) const {
    std::vector<const ShareSubmission*> out;
    if (auto it = by_request_.find(request_id); it != by_request_.end())
        for (auto id : it->second) out.push_back(&submissions_[id]);
    return out;
}

std::vector<group::G1Element> Ledger::holder_pks(std::uint32_t n) const {
    std::vector<group::G1Element> pks;
    for (std::uint32_t i = 0; i < n && i < holders_.size(); ++i) pks.push_back(holders_[i].pk);
    return pks;
}

void Ledger::pay(std::uint32_t holder, std::int64_t amount) {
    holder_mut(holder).rewards_earned += amount;
    accounts_.paid += amount;
}

void Ledger::forfeit(HolderRecord& h, HolderStatus status, std::uint32_t bounty_to, std::int64_t bounty) {
    bounty = std::min(bounty, h.deposit);
    accounts_.deposits -= h.deposit;
    accounts_.burned += h.deposit - bounty;
    h.deposit = 0;
    h.status = status;
    if (bounty > 0) pay(bounty_to, bounty);
}

Json Ledger::dispatch(const RegisterHolder& tx) {
    if (tx.deposit < params_.deposit_min)
        fail(Errc::InsufficientDeposit,
             "deposit " + std::to_string(tx.deposit) + " below minimum " + std::to_string(params_.deposit_min));
    for (const auto& h : holders_)
        if (h.pk == tx.pk) fail(Errc::DuplicateKey, "public key already registered as holder " + std::to_string(h.index));
    if (!core::verify_possession(*group_, tx.pk, tx.possession_proof))
        fail(Errc::BadPossessionProof, "possession proof does not verify");

    auto index = static_cast<std::uint32_t>(holders_.size() + 1);
    holders_.push_back(HolderRecord{index, tx.pk, tx.deposit, HolderStatus::active, 0});
    accounts_.inflow += tx.deposit;
    accounts_.deposits += tx.deposit;
    return Json{{"index", index}};
}

Json Ledger::dispatch(const AdvanceBlock& tx) {
    auto reject = [](std::string reason) { return Json{{"accepted", false}, {"reason", std::move(reason)}}; };
    if (tx.proposer != 0) {
        const auto* h = find_holder(tx.proposer);
        if (h == nullptr) return reject("unknown proposer");
        if (h->status != HolderStatus::active) return reject("inactive proposer");
    }
    if (tx.claimed_timestamp <= head().timestamp) return reject("timestamp not after previous block");
    if (tx.claimed_timestamp > tx.reference_now + params_.max_forward_drift_s) return reject("beyond drift bound");

    blocks_.push_back(Block{blocks_.size(), tx.claimed_timestamp, tx.proposer, tx.reference_now});
    return Json{{"accepted", true},
                {"reason", ""},
                {"height", head().height},
                {"timestamp", head().timestamp}};
}

Json Ledger::dispatch(const PostRequest& tx) {
    const auto& req = tx.request;
    core::validate_request(*group_, req);
    if (req.holders > holders_.size())
        fail(Errc::MalformedRequest, "request names " + std::to_string(req.holders) + " holders, only " +
                                         std::to_string(holders_.size()) + " registered");
    if (requests_.contains(req.request_id)) fail(Errc::MalformedRequest, "request already posted");
    const std::int64_t needed = static_cast<std::int64_t>(req.threshold) * params_.reward_per_share;
    if (tx.fee < needed)
        fail(Errc::InsufficientFee, "fee " + std::to_string(tx.fee) + " below " + std::to_string(needed));

    requests_.emplace(req.request_id, RequestRecord{req, tx.fee, head().timestamp, RequestStatus::open});
    accounts_.inflow += tx.fee;
    accounts_.escrow += tx.fee;
    return Json{{"request_id", req.request_id}};
}

Json Ledger::dispatch(const SubmitShare& tx) {
    auto it = requests_.find(tx.request_id);
    if (it == requests_.end()) fail(Errc::UnknownRequest, "no request " + tx.request_id);
    const auto& rec = it->second;
    if (rec.status != RequestStatus::open) fail(Errc::RequestClosed, "request is " + std::string(to_string(rec.status)));
    if (find_holder(tx.holder_index) == nullptr) fail(Errc::UnknownHolder, "no holder " + std::to_string(tx.holder_index));
    if (tx.share.holder_index != tx.holder_index) fail(Errc::InvalidArgument, "share is labelled for another holder");
    if (tx.holder_index > rec.request.holders)
        fail(Errc::IndexOutOfRange, "holder " + std::to_string(tx.holder_index) + " is not part of the request");

    auto& holder = holder_mut(tx.holder_index);
    if (holder.status != HolderStatus::active)
        return Json{{"outcome", to_string(SubmitOutcome::RejectedInactive)}};
    for (const auto* s : submissions_for(tx.request_id))
        if (s->holder_index == tx.holder_index && s->status != SubmissionStatus::rejected)
            fail(Errc::DuplicateSubmission, "holder already submitted");

    ShareSubmission sub{submissions_.size(),   tx.request_id, tx.holder_index, tx.share, head().timestamp,
                        head().height,         SubmissionStatus::provisional,
                        head().timestamp + params_.dispute_window_s};
    SubmitOutcome outcome = SubmitOutcome::Provisional;
    if (head().timestamp < rec.request.decrypt_time) {
        forfeit(holder, HolderStatus::slashed, 0, 0);
        sub.status = SubmissionStatus::rejected;
        outcome = SubmitOutcome::SlashedEarly;
    }
    by_request_[sub.request_id].push_back(sub.id);
    submissions_.push_back(std::move(sub));
    return Json{{"outcome", to_string(outcome)}, {"submission_id", submissions_.back().id}};
}

Json Ledger::dispatch(const RaiseDispute& tx) {
    if (tx.submission_id >= submissions_.size())
        fail(Errc::UnknownSubmission, "no submission " + std::to_string(tx.submission_id));
    auto& sub = submissions_[tx.submission_id];
    if (sub.status != SubmissionStatus::provisional || head().timestamp >= sub.dispute_deadline)
        fail(Errc::NotProvisional, "submission is no longer disputable");
    const auto* challenger = find_holder(tx.challenger);
    if (challenger == nullptr) fail(Errc::UnknownHolder, "no holder " + std::to_string(tx.challenger));
    if (challenger->status != HolderStatus::active) fail(Errc::InactiveHolder, "challenger is not active");
    auto& rec = requests_.at(sub.request_id);
    if (rec.status != RequestStatus::open) fail(Errc::RequestClosed, "request is " + std::string(to_string(rec.status)));

    auto verdict = core::verify_share(*group_, sub.share, holder_mut(sub.holder_index).pk, rec.request);
    switch (verdict) {
        case core::ShareVerdict::Valid:
            return Json{{"outcome", to_string(DisputeOutcome::Dismissed)}, {"bounty", 0}};
        case core::ShareVerdict::InvalidShare: {
            auto& submitter = holder_mut(sub.holder_index);
            const auto bounty = std::min(submitter.deposit, params_.reward_per_share);
            forfeit(submitter, HolderStatus::blacklisted, tx.challenger, bounty);
            sub.status = SubmissionStatus::rejected;
            return Json{{"outcome", to_string(DisputeOutcome::Upheld)}, {"bounty", bounty}};
        }
        case core::ShareVerdict::DishonestClient: break;
    }

    // The client is at fault: void the request and split its escrow among
    // holders that already revealed.
    std::vector<ShareSubmission*> revealed;
    for (auto id : by_request_[sub.request_id])
        if (submissions_[id].status != SubmissionStatus::rejected) revealed.push_back(&submissions_[id]);
    const std::int64_t each = rec.escrow / static_cast<std::int64_t>(revealed.size());
    for (auto* s : revealed) {
        pay(s->holder_index, each);
        s->status = SubmissionStatus::finalized;
    }
    const std::int64_t refund = rec.escrow - each * static_cast<std::int64_t>(revealed.size());
    accounts_.escrow -= rec.escrow;
    accounts_.refunded += refund;
    rec.escrow = 0;
    rec.status = RequestStatus::voided;
    return Json{{"outcome", to_string(DisputeOutcome::ClientFault)}, {"bounty", 0}, {"refunded", refund}};
}

Json Ledger::dispatch(const FinalizeRequest& tx) {
    auto it = requests_.find(tx.request_id);
    if (it == requests_.end()) fail(Errc::UnknownRequest, "no request " + tx.request_id);
    auto& rec = it->second;
    if (rec.status != RequestStatus::open) fail(Errc::RequestClosed, "request is " + std::string(to_string(rec.status)));

    std::vector<ShareSubmission*> live;
    for (auto id : by_request_[tx.request_id])
        if (submissions_[id].status != SubmissionStatus::rejected) live.push_back(&submissions_[id]);
    const auto now = head().timestamp;
    const std::size_t t = rec.request.threshold;
    auto settled = [now](const ShareSubmission* s) { return now >= s->dispute_deadline; };

    RewardReport report;
    report.request_id = tx.request_id;
    std::size_t rewarded = 0;
    if (live.size() >= t && std::all_of(live.begin(), live.begin() + static_cast<std::ptrdiff_t>(t), settled)) {
        rewarded = t;
        report.status = RequestStatus::finalized;
        report.reveal_time = live[t - 1]->block_time;
        report.reveal_reference_time = blocks_.at(live[t - 1]->block_height).reference_time;
    } else if (now >= rec.request.decrypt_time + params_.reveal_timeout_s && std::all_of(live.begin(), live.end(), settled)) {
        rewarded = live.size();
        report.status = RequestStatus::expired;
    } else {
        fail(Errc::NotReady, std::to_string(live.size()) + " of " + std::to_string(t) + " shares settled");
    }

    for (std::size_t i = 0; i < live.size(); ++i) {
        live[i]->status = SubmissionStatus::finalized;
        if (i < rewarded) {
            pay(live[i]->holder_index, params_.reward_per_share);
            report.payouts.emplace_back(live[i]->holder_index, params_.reward_per_share);
        } else {
            report.unrewarded.push_back(live[i]->holder_index);
        }
    }
    const std::int64_t spent = static_cast<std::int64_t>(rewarded) * params_.reward_per_share;
    report.refunded = rec.escrow - spent;
    accounts_.escrow -= rec.escrow;
    accounts_.refunded += report.refunded;
    rec.escrow = 0;
    rec.status = report.status;
    return to_json(report);
}

Json Ledger::state_json() const {
    Json holders = Json::array();
    for (const auto& h : holders_)
        holders.push_back({{"index", h.index},
                           {"pk", h.pk.hex()},
                           {"deposit", h.deposit},
                           {"status", to_string(h.status)},
                           {"rewards_earned", h.rewards_earned}});
    Json requests = Json::object();
    for (const auto& [id, r] : requests_)
        requests[id] = {{"request", core::to_json(r.request)},
                        {"escrow", r.escrow},
                        {"posted_at", r.posted_at},
                        {"status", to_string(r.status)}};
    Json subs = Json::array();
    for (const auto& s : submissions_)
        subs.push_back({{"id", s.id},
                        {"request_id", s.request_id},
                        {"holder_index", s.holder_index},
                        {"share", core::to_json(s.share)},
                        {"block_time", s.block_time},
                        {"block_height", s.block_height},
                        {"status", to_string(s.status)},
                        {"dispute_deadline", s.dispute_deadline}});
    Json blocks = Json::array();
    for (const auto& b : blocks_)
        blocks.push_back({b.height, b.timestamp, b.proposer, b.reference_time});
    return Json{{"params", to_json(params_)},
                {"holders", std::move(holders)},
                {"requests", std::move(requests)},
                {"submissions", std::move(subs)},
                {"blocks", std::move(blocks)},
                {"accounts",
                 {{"inflow", accounts_.inflow},
                  {"deposits", accounts_.deposits},
                  {"escrow", accounts_.escrow},
                  {"paid", accounts_.paid},
                  {"refunded", accounts_.refunded},
                  {"burned", accounts_.burned}}}};
}

std::string Ledger::state_hash() const { return to_hex(sha256(as_bytes(core::canonical(state_json())))); }

std::string Ledger::export_log() const {
    std::string out = core::canonical(Json{{"format", "trc-ledger-log/1"},
                                           {"group", core::to_json(group_->config())},
                                           {"params", to_json(params_)}});
    out += '\n';
    for (const auto& [tx, receipt] : log_) {
        out += core::canonical(Json{{"tx", to_json(tx)}, {"receipt", to_json(receipt)}});
        out += '\n';
    }
    out += core::canonical(Json{{"end", {{"transactions", log_.size()}, {"state_hash", state_hash()}}}});
    out += '\n';
    return out;
}

Ledger Ledger::replay(std::string_view jsonl) {
    std::istringstream in{std::string(jsonl)};
    std::string line;
    if (!std::getline(in, line)) fail(Errc::MalformedEncoding, "empty transaction log");
    auto parse = [](const std::string& text) {
        return core::with_json_errors([&] { return Json::parse(text); });
    };
    auto header = parse(line);
    if (header.value("format", "") != "trc-ledger-log/1") fail(Errc::MalformedEncoding, "unknown log format");
    Ledger ledger(group::make_group(core::group_config_from_json(header.at("group"))),
                  ledger_params_from_json(header.at("params")));
    std::optional<Json> end;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (end) fail(Errc::MalformedEncoding, "entries after the end of the log");
        auto entry = parse(line);
        if (entry.contains("end")) {
            end = entry.at("end");
            continue;
        }
        auto tx = transaction_from_json(ledger.group(), core::with_json_errors([&] { return entry.at("tx"); }));
        auto expected = receipt_from_json(core::with_json_errors([&] { return entry.at("receipt"); }));
        auto got = ledger.apply(tx);
        if (!(got == expected))
            fail(Errc::ReplayMismatch, "receipt " + std::to_string(expected.seq) + " differs on replay");
    }
    if (!end) fail(Errc::MalformedEncoding, "log has no end record");
    const auto [count, hash] = core::with_json_errors([&] {
        return std::pair{end->at("transactions").get<std::size_t>(), end->at("state_hash").get<std::string>()};
    });
    if (count != ledger.log_.size() || hash != ledger.state_hash())
        fail(Errc::ReplayMismatch, "final state differs on replay");
    return ledger;
}

}  // namespace trc::chain
