// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trc/chain/transactions.hpp"
#include "trc/group/group.hpp"

namespace trc::chain {

using group::GroupPtr;

enum class HolderStatus { active, slashed, blacklisted };
enum class SubmissionStatus { provisional, finalized, rejected };
enum class RequestStatus { open, finalized, voided, expired };
enum class SubmitOutcome { Provisional, SlashedEarly, RejectedInactive };
enum class DisputeOutcome { Upheld, Dismissed, ClientFault };

std::string_view to_string(HolderStatus s) noexcept;
std::string_view to_string(SubmissionStatus s) noexcept;
std::string_view to_string(RequestStatus s) noexcept;
std::string_view to_string(SubmitOutcome s) noexcept;
std::string_view to_string(DisputeOutcome s) noexcept;

struct LedgerParams {
    std::int64_t deposit_min = 100;
    std::int64_t reward_per_share = 10;
    std::int64_t dispute_window_s = 3600;
    std::int64_t max_forward_drift_s = 15;
    // Past decrypt_time + reveal_timeout_s a request with fewer than t
    // shares may be finalized as expired.
    std::int64_t reveal_timeout_s = 86400;
    std::int64_t genesis_time = 0;

    friend bool operator==(const LedgerParams&, const LedgerParams&) = default;
};

Json to_json(const LedgerParams& p);
LedgerParams ledger_params_from_json(const Json& j);

struct HolderRecord {
    std::uint32_t index = 0;
    group::G1Element pk;
    std::int64_t deposit = 0;
    HolderStatus status = HolderStatus::active;
    std::int64_t rewards_earned = 0;
};

struct ShareSubmission {
    std::uint64_t id = 0;
    std::string request_id;
    std::uint32_t holder_index = 0;
    core::SecretShare share;
    std::int64_t block_time = 0;
    std::uint64_t block_height = 0;
    SubmissionStatus status = SubmissionStatus::provisional;
    std::int64_t dispute_deadline = 0;
};

struct RequestRecord {
    core::TimelockRequest request;
    std::int64_t escrow = 0;
    std::int64_t posted_at = 0;
    RequestStatus status = RequestStatus::open;
};

struct Block {
    std::uint64_t height = 0;
    std::int64_t timestamp = 0;
    std::uint32_t proposer = 0;
    std::int64_t reference_time = 0;
};

struct BlockResult {
    bool accepted = false;
    std::string reason;
};

struct RewardReport {
    std::string request_id;
    RequestStatus status = RequestStatus::open;
    std::vector<std::pair<std::uint32_t, std::int64_t>> payouts;  // holder, amount
    std::vector<std::uint32_t> unrewarded;
    std::int64_t refunded = 0;
    std::optional<std::int64_t> reveal_time;            // block clock
    std::optional<std::int64_t> reveal_reference_time;  // true time of that block
};

Json to_json(const RewardReport& r);
RewardReport reward_report_from_json(const Json& j);

// Token flows. Every amount that enters through a deposit or a fee is, at
// any moment, in exactly one of the five sinks below.
struct Accounts {
    std::int64_t inflow = 0;
    std::int64_t deposits = 0;
    std::int64_t escrow = 0;
    std::int64_t paid = 0;
    std::int64_t refunded = 0;
    std::int64_t burned = 0;

    bool balanced() const { return deposits + escrow + paid + refunded + burned == inflow; }
};

class Ledger {
public:
    Ledger(GroupPtr group, LedgerParams params);

    // Applies and logs one transaction. Domain errors become failed receipts
    // and leave the state unchanged.
    Receipt apply(const Transaction& tx);

    // Typed wrappers over apply; they rethrow a failed receipt as trc::Error.
    std::uint32_t register_holder(const group::G1Element& pk, std::int64_t deposit, const group::G2Element& proof);
    BlockResult advance_block(std::uint32_t proposer, std::int64_t claimed, std::int64_t reference_now);
    std::string post_request(const core::TimelockRequest& request, std::int64_t fee);
    SubmitOutcome submit_share(std::uint32_t holder, const std::string& request_id, const core::SecretShare& share);
    DisputeOutcome raise_dispute(std::uint32_t challenger, std::uint64_t submission_id);
    RewardReport finalize_request(const std::string& request_id);

    const group::Group& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const LedgerParams& params() const { return params_; }
    const std::vector<HolderRecord>& holders() const { return holders_; }
    const std::map<std::string, RequestRecord>& requests() const { return requests_; }
    const std::vector<ShareSubmission>& submissions() const { return submissions_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<std::pair<Transaction, Receipt>>& log() const { return log_; }
    const Accounts& accounts() const { return accounts_; }

    const Block& head() const { return blocks_.back(); }
    const RequestRecord* find_request(const std::string& id) const;
    const HolderRecord* find_holder(std::uint32_t index) const;
    std::vector<const ShareSubmission*> submissions_for(const std::string& request_id) const;
    std::vector<group::G1Element> holder_pks(std::uint32_t n) const;

    Json state_json() const;
    std::string state_hash() const;

    // JSON lines: a header with group and params, then one line per
    // transaction with its receipt.
    std::string export_log() const;
    // Re-executes every transaction and checks each receipt against the
    // recorded one. Throws ReplayMismatch on divergence.
    static Ledger replay(std::string_view jsonl);

private:
    Json dispatch(const RegisterHolder& tx);
    Json dispatch(const AdvanceBlock& tx);
    Json dispatch(const PostRequest& tx);
    Json dispatch(const SubmitShare& tx);
    Json dispatch(const RaiseDispute& tx);
    Json dispatch(const FinalizeRequest& tx);

    HolderRecord& holder_mut(std::uint32_t index);
    void forfeit(HolderRecord& h, HolderStatus status, std::uint32_t bounty_to, std::int64_t bounty);
    void pay(std::uint32_t holder, std::int64_t amount);

    GroupPtr group_;
    LedgerParams params_;
    std::vector<HolderRecord> holders_;
    std::map<std::string, RequestRecord> requests_;
    std::vector<ShareSubmission> submissions_;
    std::map<std::string, std::vector<std::uint64_t>> by_request_;  // submission ids in order
    std::vector<Block> blocks_;
    std::vector<std::pair<Transaction, Receipt>> log_;
    Accounts accounts_;
};

}  // namespace trc::chain
