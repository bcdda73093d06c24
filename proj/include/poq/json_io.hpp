// JSON wire formats. A poset is carried by its covers, not its full order
// matrix:  {"n": int, "labels": [str...], "covers": [[i,j]...]}
// A partition is  {"blocks": [[i...]...]}.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "poq/partition.hpp"
#include "poq/poset.hpp"

namespace poq {

using Json = nlohmann::ordered_json;

inline Json poset_to_json(const Poset& p) {
    Json j;
    j["n"] = p.n;
    j["labels"] = p.labels;
    Json cov = Json::array();
    for (auto [a, b] : covers(p)) cov.push_back(Json::array({a, b}));
    j["covers"] = std::move(cov);
    return j;
}

inline Poset poset_from_json(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        fail(ErrorKind::BadIndex, "poset JSON: field \"n\" missing or not an integer");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> cov;
    if (j.contains("covers")) {
        if (!j["covers"].is_array())
            fail(ErrorKind::BadIndex, "poset JSON: field \"covers\" must be an array");
        for (const auto& e : j["covers"]) {
            if (!e.is_array() || e.size() != 2)
                fail(ErrorKind::BadIndex, "poset JSON: each cover must be a pair [i,j]");
            cov.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
        if (!j["labels"].is_array())
            fail(ErrorKind::BadIndex, "poset JSON: field \"labels\" must be an array");
        for (const auto& s : j["labels"]) labels.push_back(s.get<std::string>());
    }
    return from_covers(n, cov, std::move(labels));
}

inline Json partition_to_json(const Partition& t) {
    Json j;
    Json blocks = Json::array();
    for (const auto& b : t.blocks) blocks.push_back(b);
    j["blocks"] = std::move(blocks);
    return j;
}

inline Partition partition_from_json(const Json& j, int n) {
    if (!j.contains("blocks") || !j["blocks"].is_array())
        fail(ErrorKind::BadIndex, "partition JSON: field \"blocks\" missing or not an array");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j["blocks"]) {
        if (!b.is_array()) fail(ErrorKind::BadIndex, "partition JSON: each block must be an array");
        blocks.push_back(b.get<std::vector<int>>());
    }
    return partition_from_blocks(n, blocks);
}

}  // namespace poq
