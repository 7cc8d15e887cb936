// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/agents/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <tuple>

#include "trc/common/drbg.hpp"

namespace trc::agents {

using chain::Transaction;

std::vector<Transaction> adversary_step(const HolderAgent& agent, const chain::Ledger& view,
                                        const core::TimelockRequest& request, double local_time) {
    if (agent.behavior == Behavior::honest || agent.behavior == Behavior::framing_client)
        fail(Errc::InvalidArgument, "adversary_step needs an adversarial holder behavior");
    const auto* rec = view.find_request(request.request_id);
    if (rec == nullptr || rec->status != chain::RequestStatus::open) return {};
    const auto* self = view.find_holder(agent.keys.index);
    if (self == nullptr || self->status != chain::HolderStatus::active) return {};
    if (agent.keys.index > request.holders) return {};
    for (const auto* s : view.submissions_for(request.request_id))
        if (s->holder_index == agent.keys.index) return {};

    const auto& grp = view.group();
    const double decrypt = static_cast<double>(request.decrypt_time);
    switch (agent.behavior) {
        case Behavior::early_submitter:
            if (local_time < decrypt - agent.lead_s) return {};
            return {chain::SubmitShare{agent.keys.index, request.request_id,
                                       core::derive_share(grp, request, agent.keys)}};
        case Behavior::wrong_share: {
            if (view.head().timestamp < request.decrypt_time || local_time < decrypt) return {};
            auto share = core::derive_share(grp, request, agent.keys);
            share.value = grp.mul(share.value, grp.g1());
            return {chain::SubmitShare{agent.keys.index, request.request_id, share}};
        }
        default: return {};
    }
}

core::TimelockRequest framing_request(const group::Group& group, const group::Scalar& k, const group::Scalar& r,
                                      ByteView message, std::int64_t decrypt_time,
                                      std::span<const group::G1Element> holder_pks, std::uint32_t threshold) {
    auto req = core::build_request(group, k, r, message, decrypt_time, holder_pks, threshold);
    const auto& ex = group.exponents();
    auto r2 = ex.add(r, ex.from_u64(1));
    if (r2.is_zero()) r2 = ex.from_u64(1);
    req.commitment_b = group.pow(group.g2(), r2);
    req.request_id = core::compute_request_id(req);
    return req;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class EventKind { Post, Slot, TxArrive, Observe, Wake, VerifyDone };

struct Event {
    double time = 0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::Slot;
    std::uint32_t agent = 0;  // holder index, 0 for the client
    std::size_t plan = 0;
    std::uint64_t ref = 0;  // height, submission id or slot generation
    std::shared_ptr<const Transaction> tx;
};

struct Later {
    bool operator()(const Event& a, const Event& b) const {
        return std::tie(a.time, a.seq) > std::tie(b.time, b.seq);
    }
};

class Latency {
public:
    Latency(LatencyModel model, std::uint64_t seed) : model_(model), rng_(seed) {}

    double sample() {
        if (model_.mean_s <= 0) return 0;
        switch (model_.kind) {
            case LatencyKind::constant: return model_.mean_s;
            case LatencyKind::exponential: return std::exponential_distribution<double>(1.0 / model_.mean_s)(rng_);
            case LatencyKind::lognormal: {
                if (model_.jitter_s <= 0) return model_.mean_s;
                const double ratio = model_.jitter_s / model_.mean_s;
                const double sigma2 = std::log1p(ratio * ratio);
                return std::lognormal_distribution<double>(std::log(model_.mean_s) - sigma2 / 2, std::sqrt(sigma2))(rng_);
            }
        }
        return model_.mean_s;
    }

private:
    LatencyModel model_;
    std::mt19937_64 rng_;
};

struct HolderView {
    bool sent = false;
    bool wake_pending = false;
    std::set<std::uint64_t> queued;
    std::set<std::uint64_t> disputed;
    std::vector<core::SecretShare> valid;
    std::uint64_t verifications = 0;
    bool reconstructed = false;
};

struct HolderState {
    AgentConfig config;
    HolderAgent agent;
    double offset = 0;
    Latency latency;
    double busy_until = 0;
    std::vector<HolderView> views;  // one per planned request
    std::uint64_t verifications = 0;
    std::uint64_t verifications_to_reconstruct = 0;
    std::uint32_t reconstructions = 0;
};

struct Plan {
    std::int64_t post_time = 0;
    std::int64_t duration = 0;
    Bytes message;
    core::TimelockRequest request;
    bool posted = false;
    bool finalize_pending = false;
    RequestOutcome outcome;
};

std::uint64_t nonzero(std::uint64_t s) { return s == 0 ? 1 : s; }

class Engine {
public:
    Engine(const ScenarioConfig& config, std::uint64_t seed)
        : cfg_(config),
          seed_(seed),
          grp_(group::make_group(config.group)),
          ledger_(grp_, config.ledger),
          client_latency_(config.client.latency.value_or(config.default_latency), mix_seed(seed, 3)),
          proposer_rng_(mix_seed(seed, 2)),
          drbg_(nonzero(mix_seed(seed, 4)), "trc/agents/client") {
        validate(cfg_);
        std::mt19937_64 setup(mix_seed(seed, 1));
        std::uniform_real_distribution<double> ntp(-cfg_.ntp_bound_s, cfg_.ntp_bound_s);

        for (std::uint32_t i = 0; i < cfg_.proposers.count; ++i) proposer_offsets_.push_back(ntp(setup));

        const auto t = static_cast<std::int64_t>(cfg_.threshold);
        fee_ = cfg_.fee.value_or(t * cfg_.ledger.reward_per_share);
        std::size_t idx = 0;
        for (auto d : cfg_.requests.durations_s) {
            for (std::uint32_t j = 0; j < cfg_.requests.per_duration; ++j, ++idx) {
                Plan p;
                p.post_time = cfg_.ledger.genesis_time + cfg_.requests.start_offset_s +
                              static_cast<std::int64_t>(idx) * cfg_.requests.spacing_s;
                p.duration = d;
                p.message = drbg_.next_bytes(cfg_.requests.message_bytes);
                plans_.push_back(std::move(p));
            }
        }

        for (std::uint32_t i = 1; i <= cfg_.n(); ++i) {
            const auto& hc = cfg_.holders[i - 1];
            auto keys = core::keygen(*grp_, nonzero(mix_seed(seed, 1000 + i)), i);
            double offset = hc.clock_offset_s ? *hc.clock_offset_s : ntp(setup);
            holders_.push_back(HolderState{hc, HolderAgent{keys, hc.behavior, hc.lead_s}, offset,
                                           Latency(hc.latency.value_or(cfg_.default_latency), mix_seed(seed, 100 + i)),
                                           0, std::vector<HolderView>(plans_.size()), 0, 0, 0});
            auto receipt = ledger_.apply(
                chain::RegisterHolder{keys.pk, cfg_.deposit, core::prove_possession(*grp_, keys)});
            if (!receipt.ok) fail(Errc::ConfigInvalid, "holder registration failed: " + receipt.detail);
        }

        for (std::size_t i = 0; i < plans_.size(); ++i)
            push(Event{static_cast<double>(plans_[i].post_time), 0, EventKind::Post, 0, i, 0, nullptr});
        horizon_ = static_cast<double>(plans_.back().post_time + *std::max_element(cfg_.requests.durations_s.begin(),
                                                                                  cfg_.requests.durations_s.end()) +
                                       cfg_.ledger.reveal_timeout_s + 2 * cfg_.ledger.dispute_window_s + 600);
    }

    ScenarioRun run() {
        while (!queue_.empty()) {
            Event ev = queue_.top();
            queue_.pop();
            if (ev.time > horizon_) break;
            now_ = ev.time;
            switch (ev.kind) {
                case EventKind::Post: on_post(ev); break;
                case EventKind::Slot: on_slot(ev); break;
                case EventKind::TxArrive: on_tx(ev); break;
                case EventKind::Observe: on_observe(ev); break;
                case EventKind::Wake: on_wake(ev); break;
                case EventKind::VerifyDone: on_verify_done(ev); break;
            }
        }
        return ScenarioRun{finish(), ledger_.export_log()};
    }

private:
    void push(Event ev) {
        ev.seq = seq_++;
        queue_.push(std::move(ev));
    }

    double local(const HolderState& h, double t) const { return t + h.offset; }
    const HolderState& holder(std::uint32_t i) const { return holders_.at(i - 1); }
    HolderState& holder(std::uint32_t i) { return holders_.at(i - 1); }

    double grid_ceil(double x) const {
        const double g = static_cast<double>(cfg_.ledger.genesis_time);
        return g + std::ceil((x - g) / cfg_.block_interval_s - 1e-9) * cfg_.block_interval_s;
    }

    void schedule_slot(double at) {
        at = grid_ceil(std::max(at, last_slot_ + cfg_.block_interval_s));
        if (at >= slot_at_) return;
        slot_at_ = at;
        push(Event{at, 0, EventKind::Slot, 0, 0, ++slot_gen_, nullptr});
    }

    void send(std::uint32_t agent, Transaction tx) {
        const double delay = agent == 0 ? client_latency_.sample() : holder(agent).latency.sample();
        push(Event{now_ + delay, 0, EventKind::TxArrive, agent, 0, 0, std::make_shared<const Transaction>(std::move(tx))});
    }

    // ---- block production

    void on_tx(const Event& ev) {
        mempool_.push_back(*ev.tx);
        schedule_slot(now_);
    }

    void on_slot(const Event& ev) {
        if (ev.ref != slot_gen_) return;
        slot_at_ = kInf;
        last_slot_ = now_;

        const auto p = static_cast<std::uint32_t>(proposer_rng_() % cfg_.proposers.count);
        const bool adversarial = p < cfg_.proposers.adversarial;
        const auto reference = static_cast<std::int64_t>(std::floor(now_));
        std::int64_t claimed = adversarial ? reference + cfg_.ledger.max_forward_drift_s
                                           : static_cast<std::int64_t>(std::floor(now_ + proposer_offsets_[p]));
        claimed = std::max(claimed, ledger_.head().timestamp + 1);

        auto receipt = ledger_.apply(chain::AdvanceBlock{0, claimed, reference});
        check_conservation();
        if (!receipt.result.at("accepted").get<bool>()) {
            ++rejected_blocks_;
        } else {
            ++blocks_;
            auto pending = std::move(mempool_);
            mempool_.clear();
            for (const auto& tx : pending) {
                auto r = ledger_.apply(tx);
                check_conservation();
                record(tx, r);
            }
            const auto height = ledger_.head().height;
            const double seen = now_ + cfg_.observe_latency_s;
            push(Event{seen, 0, EventKind::Observe, 0, 0, height, nullptr});
            for (std::uint32_t i = 1; i <= cfg_.n(); ++i) push(Event{seen, 0, EventKind::Observe, i, 0, height, nullptr});
        }
        plan_next_slot();
    }

    // Blocks are produced only while something waits on chain time.
    void plan_next_slot() {
        if (!mempool_.empty()) {
            schedule_slot(now_);
            return;
        }
        const auto head = ledger_.head().timestamp;
        double target = kInf;
        auto want = [&](std::int64_t chain_time) {
            if (head < chain_time)
                target = std::min(target, static_cast<double>(chain_time - cfg_.ledger.max_forward_drift_s - 1));
        };
        for (const auto& plan : plans_) {
            if (!plan.posted) continue;
            const auto* rec = ledger_.find_request(plan.request.request_id);
            if (rec == nullptr || rec->status != chain::RequestStatus::open) continue;
            want(rec->request.decrypt_time);
            want(rec->request.decrypt_time + cfg_.ledger.reveal_timeout_s);
            for (const auto* s : ledger_.submissions_for(plan.request.request_id))
                if (s->status == chain::SubmissionStatus::provisional) want(s->dispute_deadline);
        }
        if (target < kInf) schedule_slot(target);
    }

    void check_conservation() { conserved_ = conserved_ && ledger_.accounts().balanced(); }

    // ---- client

    void on_post(const Event& ev) {
        auto& plan = plans_[ev.plan];
        const auto decrypt = plan.post_time + plan.duration;
        const auto k = grp_->share_field().random_nonzero(drbg_);
        const auto r = grp_->exponents().random_nonzero(drbg_);
        auto pks = ledger_.holder_pks(cfg_.n());
        plan.request = cfg_.client.behavior == Behavior::framing_client
                           ? framing_request(*grp_, k, r, plan.message, decrypt, pks, cfg_.threshold)
                           : core::build_request(*grp_, k, r, plan.message, decrypt, pks, cfg_.threshold);
        plan.posted = true;
        plan.outcome.request_id = plan.request.request_id;
        plan.outcome.duration_s = plan.duration;
        plan.outcome.posted_time = plan.post_time;
        plan.outcome.requested_time = decrypt;
        by_id_[plan.request.request_id] = ev.plan;
        send(0, chain::PostRequest{plan.request, fee_});

        for (std::uint32_t i = 1; i <= cfg_.n(); ++i) {
            auto& h = holder(i);
            if (h.config.behavior != Behavior::early_submitter) continue;
            const double at = static_cast<double>(decrypt) - h.config.lead_s - h.offset;
            push(Event{std::max(at, now_), 0, EventKind::Wake, i, ev.plan, 0, nullptr});
        }
    }

    bool ready(const chain::RequestRecord& rec) const {
        const auto head = ledger_.head().timestamp;
        std::vector<const chain::ShareSubmission*> live;
        for (const auto* s : ledger_.submissions_for(rec.request.request_id))
            if (s->status != chain::SubmissionStatus::rejected) live.push_back(s);
        auto settled = [head](const chain::ShareSubmission* s) { return head >= s->dispute_deadline; };
        const std::size_t t = rec.request.threshold;
        if (live.size() >= t && std::all_of(live.begin(), live.begin() + static_cast<std::ptrdiff_t>(t), settled))
            return true;
        return head >= rec.request.decrypt_time + cfg_.ledger.reveal_timeout_s &&
               std::all_of(live.begin(), live.end(), settled);
    }

    void keeper() {
        for (auto& plan : plans_) {
            if (!plan.posted || plan.finalize_pending) continue;
            const auto* rec = ledger_.find_request(plan.request.request_id);
            if (rec == nullptr || rec->status != chain::RequestStatus::open || !ready(*rec)) continue;
            plan.finalize_pending = true;
            send(0, chain::FinalizeRequest{plan.request.request_id});
        }
    }

    // ---- holders

    void on_observe(const Event& ev) {
        if (ev.agent == 0) {
            keeper();
            return;
        }
        auto& h = holder(ev.agent);
        const auto& block = ledger_.blocks().at(ev.ref);
        for (std::size_t i = 0; i < plans_.size(); ++i) {
            const auto& plan = plans_[i];
            if (!plan.posted) continue;
            const auto* rec = ledger_.find_request(plan.request.request_id);
            if (rec == nullptr || rec->status != chain::RequestStatus::open || ev.agent > rec->request.holders) continue;
            auto& view = h.views[i];

            if (h.config.behavior == Behavior::honest || h.config.behavior == Behavior::wrong_share) {
                if (!view.sent && block.timestamp >= rec->request.decrypt_time) {
                    if (local(h, now_) >= static_cast<double>(rec->request.decrypt_time)) {
                        submit(ev.agent, i);
                    } else if (!view.wake_pending) {
                        view.wake_pending = true;
                        push(Event{static_cast<double>(rec->request.decrypt_time) - h.offset, 0, EventKind::Wake,
                                   ev.agent, i, 0, nullptr});
                    }
                }
            }
            if (h.config.behavior != Behavior::honest) continue;

            for (const auto* s : ledger_.submissions_for(plan.request.request_id)) {
                if (s->block_height > ev.ref || s->status == chain::SubmissionStatus::rejected) continue;
                if (!view.queued.insert(s->id).second) continue;
                const double start = std::max(now_, h.busy_until);
                h.busy_until = start + cfg_.verify_cost_s;
                push(Event{h.busy_until, 0, EventKind::VerifyDone, ev.agent, i, s->id, nullptr});
            }
        }
    }

    void on_wake(const Event& ev) {
        auto& h = holder(ev.agent);
        auto& view = h.views[ev.plan];
        view.wake_pending = false;
        const auto& plan = plans_[ev.plan];
        if (h.config.behavior == Behavior::early_submitter && ledger_.find_request(plan.request.request_id) == nullptr) {
            // Not on chain yet; look again one block later.
            push(Event{now_ + cfg_.block_interval_s, 0, EventKind::Wake, ev.agent, ev.plan, 0, nullptr});
            return;
        }
        submit(ev.agent, ev.plan);
    }

    void submit(std::uint32_t i, std::size_t plan_index) {
        auto& h = holder(i);
        auto& view = h.views[plan_index];
        if (view.sent) return;
        const auto& req = plans_[plan_index].request;
        std::vector<Transaction> txs;
        if (h.config.behavior == Behavior::honest) {
            const auto* rec = ledger_.find_request(req.request_id);
            const auto* self = ledger_.find_holder(i);
            if (rec && rec->status == chain::RequestStatus::open && self->status == chain::HolderStatus::active &&
                ledger_.head().timestamp >= req.decrypt_time)
                txs.push_back(chain::SubmitShare{i, req.request_id, core::derive_share(*grp_, req, h.agent.keys)});
        } else if (h.config.behavior != Behavior::silent) {
            txs = adversary_step(h.agent, ledger_, req, local(h, now_));
        }
        for (auto& tx : txs) {
            view.sent = true;
            send(i, std::move(tx));
        }
    }

    void on_verify_done(const Event& ev) {
        auto& h = holder(ev.agent);
        auto& view = h.views[ev.plan];
        auto& plan = plans_[ev.plan];
        const auto& sub = ledger_.submissions().at(ev.ref);
        const auto& pk = ledger_.holders().at(sub.holder_index - 1).pk;
        const auto verdict = core::verify_share(*grp_, sub.share, pk, plan.request);
        ++h.verifications;
        ++view.verifications;

        if (verdict == core::ShareVerdict::Valid) {
            view.valid.push_back(sub.share);
            if (!view.reconstructed && view.valid.size() == cfg_.threshold) {
                view.reconstructed = true;
                ++h.reconstructions;
                h.verifications_to_reconstruct += view.verifications;
                bool ok = false;
                try {
                    ok = core::open_request(*grp_, plan.request, view.valid, ledger_.holder_pks(plan.request.holders)) ==
                         plan.message;
                } catch (const Error&) {
                    ok = false;
                }
                if (ok) {
                    plan.outcome.reconstructed = true;
                    if (!plan.outcome.decrypt_time_s || now_ < *plan.outcome.decrypt_time_s)
                        plan.outcome.decrypt_time_s = now_;
                }
            }
            return;
        }
        const auto* rec = ledger_.find_request(plan.request.request_id);
        const auto& current = ledger_.submissions().at(ev.ref);
        if (rec && rec->status == chain::RequestStatus::open &&
            current.status == chain::SubmissionStatus::provisional &&
            ledger_.head().timestamp < current.dispute_deadline && view.disputed.insert(ev.ref).second &&
            ledger_.find_holder(ev.agent)->status == chain::HolderStatus::active)
            send(ev.agent, chain::RaiseDispute{ev.agent, ev.ref});
    }

    // ---- bookkeeping

    void record(const Transaction& tx, const chain::Receipt& r) {
        if (!r.ok) {
            ++failed_;
            if (const auto* fin = std::get_if<chain::FinalizeRequest>(&tx))
                if (auto it = by_id_.find(fin->request_id); it != by_id_.end()) plans_[it->second].finalize_pending = false;
            return;
        }
        const auto head = ledger_.head().timestamp;
        if (const auto* sub = std::get_if<chain::SubmitShare>(&tx)) {
            if (r.result.at("outcome") == to_string(chain::SubmitOutcome::SlashedEarly))
                slashes_.push_back(SlashEvent{sub->holder_index, sub->request_id, head, "early"});
        } else if (const auto* d = std::get_if<chain::RaiseDispute>(&tx)) {
            const auto& s = ledger_.submissions().at(d->submission_id);
            auto name = r.result.at("outcome").get<std::string>();
            DisputeEvent e{d->challenger, d->submission_id, s.holder_index, chain::DisputeOutcome::Dismissed};
            if (name == to_string(chain::DisputeOutcome::Upheld)) {
                e.outcome = chain::DisputeOutcome::Upheld;
                slashes_.push_back(SlashEvent{s.holder_index, s.request_id, head, "invalid_share"});
            } else if (name == to_string(chain::DisputeOutcome::ClientFault)) {
                e.outcome = chain::DisputeOutcome::ClientFault;
            }
            disputes_.push_back(e);
        } else if (const auto* fin = std::get_if<chain::FinalizeRequest>(&tx)) {
            auto report = chain::reward_report_from_json(r.result);
            auto& out = plans_[by_id_.at(fin->request_id)].outcome;
            out.reveal_time = report.reveal_time;
            out.reveal_reference_time = report.reveal_reference_time;
        }
    }

    ScenarioReport finish() {
        ScenarioReport rep;
        rep.name = cfg_.name;
        rep.seed = seed_;
        rep.n = cfg_.n();
        rep.threshold = cfg_.threshold;
        for (auto& plan : plans_) {
            if (!plan.posted) continue;
            auto out = plan.outcome;
            if (const auto* rec = ledger_.find_request(plan.request.request_id)) out.status = rec->status;
            if (out.reveal_time) out.deviation_s = static_cast<double>(*out.reveal_time - out.requested_time);
            rep.requests.push_back(std::move(out));
        }
        rep.slashes = slashes_;
        rep.disputes = disputes_;
        for (std::uint32_t i = 1; i <= cfg_.n(); ++i) {
            const auto& h = holder(i);
            const auto& rec = ledger_.holders().at(i - 1);
            rep.holders.push_back(HolderSummary{i, h.config.behavior, rec.status, rec.rewards_earned, h.offset,
                                                h.verifications, h.verifications_to_reconstruct, h.reconstructions});
        }
        rep.blocks = blocks_;
        rep.rejected_blocks = rejected_blocks_;
        rep.failed_transactions = failed_;
        rep.conserved = conserved_;
        rep.state_hash = ledger_.state_hash();
        return rep;
    }

    ScenarioConfig cfg_;
    std::uint64_t seed_;
    group::GroupPtr grp_;
    chain::Ledger ledger_;
    Latency client_latency_;
    std::mt19937_64 proposer_rng_;
    HashDrbg drbg_;
    std::vector<double> proposer_offsets_;
    std::vector<HolderState> holders_;
    std::vector<Plan> plans_;
    std::map<std::string, std::size_t> by_id_;
    std::int64_t fee_ = 0;

    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::uint64_t seq_ = 0;
    double now_ = 0;
    double horizon_ = kInf;
    double slot_at_ = kInf;
    double last_slot_ = -kInf;
    std::uint64_t slot_gen_ = 0;
    std::vector<Transaction> mempool_;

    std::vector<SlashEvent> slashes_;
    std::vector<DisputeEvent> disputes_;
    std::uint64_t blocks_ = 0;
    std::uint64_t rejected_blocks_ = 0;
    std::uint64_t failed_ = 0;
    bool conserved_ = true;
};

Json to_json(const RequestOutcome& o) {
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    return Json{{"request_id", o.request_id},
                {"duration_s", o.duration_s},
                {"posted_time", o.posted_time},
                {"requested_time", o.requested_time},
                {"reveal_time", opt(o.reveal_time)},
                {"reveal_reference_time", opt(o.reveal_reference_time)},
                {"deviation_s", opt(o.deviation_s)},
                {"decrypt_time_s", opt(o.decrypt_time_s)},
                {"reconstructed", o.reconstructed},
                {"status", chain::to_string(o.status)}};
}

}  // namespace

Json to_json(const ScenarioReport& r) {
    Json requests = Json::array();
    for (const auto& o : r.requests) requests.push_back(to_json(o));
    Json slashes = Json::array();
    for (const auto& s : r.slashes)
        slashes.push_back({{"holder", s.holder}, {"request_id", s.request_id}, {"block_time", s.block_time},
                           {"reason", s.reason}});
    Json disputes = Json::array();
    for (const auto& d : r.disputes)
        disputes.push_back({{"challenger", d.challenger}, {"submission_id", d.submission_id}, {"accused", d.accused},
                            {"outcome", chain::to_string(d.outcome)}});
    Json holders = Json::array();
    for (const auto& h : r.holders)
        holders.push_back({{"index", h.index}, {"behavior", to_string(h.behavior)},
                           {"status", chain::to_string(h.status)}, {"rewards", h.rewards},
                           {"clock_offset_s", h.clock_offset_s}, {"verifications", h.verifications},
                           {"verifications_to_reconstruct", h.verifications_to_reconstruct},
                           {"reconstructions", h.reconstructions}});
    return Json{{"name", r.name},
                {"seed", r.seed},
                {"n", r.n},
                {"threshold", r.threshold},
                {"requests", std::move(requests)},
                {"slashes", std::move(slashes)},
                {"disputes", std::move(disputes)},
                {"holders", std::move(holders)},
                {"blocks", r.blocks},
                {"rejected_blocks", r.rejected_blocks},
                {"failed_transactions", r.failed_transactions},
                {"conserved", r.conserved},
                {"state_hash", r.state_hash}};
}

ScenarioRun run_scenario_with_log(const ScenarioConfig& config, std::uint64_t seed) {
    return Engine(config, seed).run();
}

ScenarioReport run_scenario(const ScenarioConfig& config, std::uint64_t seed) {
    return run_scenario_with_log(config, seed).report;
}

}  // namespace trc::agents
