// Copyright 2026 The trc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "trc/chain/transactions.hpp"

namespace trc::chain {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};

}  // namespace

std::string_view kind(const Transaction& tx) {
    return std::visit(overloaded{
                          [](const RegisterHolder&) { return "register_holder"; },
                          [](const AdvanceBlock&) { return "advance_block"; },
                          [](const PostRequest&) { return "post_request"; },
                          [](const SubmitShare&) { return "submit_share"; },
                          [](const RaiseDispute&) { return "raise_dispute"; },
                          [](const FinalizeRequest&) { return "finalize_request"; },
                      },
                      tx);
}

Json to_json(const Transaction& tx) {
    Json body = std::visit(overloaded{
                               [](const RegisterHolder& t) {
                                   return Json{{"pk", t.pk.hex()},
                                               {"deposit", t.deposit},
                                               {"possession_proof", t.possession_proof.hex()}};
                               },
                               [](const AdvanceBlock& t) {
                                   return Json{{"proposer", t.proposer},
                                               {"claimed_timestamp", t.claimed_timestamp},
                                               {"reference_now", t.reference_now}};
                               },
                               [](const PostRequest& t) {
                                   return Json{{"request", core::to_json(t.request)}, {"fee", t.fee}};
                               },
                               [](const SubmitShare& t) {
                                   return Json{{"holder_index", t.holder_index},
                                               {"request_id", t.request_id},
                                               {"share", core::to_json(t.share)}};
                               },
                               [](const RaiseDispute& t) {
                                   return Json{{"challenger", t.challenger}, {"submission_id", t.submission_id}};
                               },
                               [](const FinalizeRequest& t) { return Json{{"request_id", t.request_id}}; },
                           },
                           tx);
    body["type"] = kind(tx);
    return body;
}

Transaction transaction_from_json(const group::Group& group, const Json& j) {
    return core::with_json_errors([&]() -> Transaction {
        auto type = j.at("type").get<std::string>();
        auto hex = [&](const char* key) { return from_hex(j.at(key).get<std::string>()); };
        if (type == "register_holder")
            return RegisterHolder{group.deserialize_g1(hex("pk")), j.at("deposit").get<std::int64_t>(),
                                  group.deserialize_g2(hex("possession_proof"))};
        if (type == "advance_block")
            return AdvanceBlock{j.at("proposer").get<std::uint32_t>(), j.at("claimed_timestamp").get<std::int64_t>(),
                                j.at("reference_now").get<std::int64_t>()};
        if (type == "post_request")
            return PostRequest{core::request_from_json(group, j.at("request")), j.at("fee").get<std::int64_t>()};
        if (type == "submit_share")
            return SubmitShare{j.at("holder_index").get<std::uint32_t>(), j.at("request_id").get<std::string>(),
                               core::share_from_json(group, j.at("share"))};
        if (type == "raise_dispute")
            return RaiseDispute{j.at("challenger").get<std::uint32_t>(), j.at("submission_id").get<std::uint64_t>()};
        if (type == "finalize_request") return FinalizeRequest{j.at("request_id").get<std::string>()};
        fail(Errc::MalformedEncoding, "unknown transaction type '" + type + "'");
    });
}

Json to_json(const Receipt& r) {
    Json j{{"seq", r.seq}, {"ok", r.ok}, {"result", r.result}};
    if (!r.ok) {
        j["error"] = to_string(r.error);
        j["detail"] = r.detail;
    }
    return j;
}

Receipt receipt_from_json(const Json& j) {
    return core::with_json_errors([&] {
        Receipt r;
        r.seq = j.at("seq").get<std::uint64_t>();
        r.ok = j.at("ok").get<bool>();
        r.result = j.at("result");
        if (!r.ok) {
            auto code = errc_from_string(j.at("error").get<std::string>());
            if (!code) fail(Errc::MalformedEncoding, "unknown error code in receipt");
            r.error = *code;
            r.detail = j.at("detail").get<std::string>();
        }
        return r;
    });
}

}  // namespace trc::chain
