#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treecycle/census.hpp"
#include "treecycle/perm.hpp"
#include "treecycle/poset.hpp"
#include "treecycle/realisation.hpp"
#include "treecycle/traversal.hpp"
#include "treecycle/tree.hpp"

namespace treecycle {

using Json = nlohmann::ordered_json;

// BigInt serialised as a number when it fits in 64 bits, else as a decimal
// string.
inline Json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json tree_to_json(const LabelledTree& t) {
    Json j;
    j["n"] = t.n();
    j["edges"] = Json::array();
    for (const auto& [a, b] : t.edges()) j["edges"].push_back({a, b});
    return j;
}

inline LabelledTree tree_from_json(const Json& j) {
    try {
        if (j.contains("prufer")) {
            PruferCode code;
            code.n = j.at("n").get<int>();
            code.seq = j.at("prufer").get<std::vector<int>>();
            return prufer_decode(code);
        }
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        return LabelledTree(n, std::move(edges));
    } catch (const Json::exception& ex) {
        throw InputParseError(std::string("tree json: ") + ex.what());
    }
}

inline Json prufer_to_json(const PruferCode& code) {
    Json j;
    j["n"] = code.n;
    j["prufer"] = code.seq;
    return j;
}

inline Json perm_to_json(const Perm& p) {
    Json j;
    j["n"] = p.n();
    j["passive"] = p.passive();
    return j;
}

inline Perm perm_from_json(const Json& j) {
    try {
        auto passive = j.at("passive").get<std::vector<int>>();
        if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(passive.size()))
            throw InputParseError("perm json: n does not match passive length");
        return Perm(std::move(passive));
    } catch (const Json::exception& ex) {
        throw InputParseError(std::string("perm json: ") + ex.what());
    }
}

inline Json cycle_to_json(const CycleForm& c) {
    Json j;
    j["n"] = c.n;
    j["cycles"] = c.cycles;
    return j;
}

inline CycleForm cycle_from_json(const Json& j) {
    try {
        CycleForm c;
        c.n = j.at("n").get<int>();
        c.cycles = j.at("cycles").get<std::vector<std::vector<int>>>();
        from_cycle(c);  // validate
        return c;
    } catch (const Json::exception& ex) {
        throw InputParseError(std::string("cycle json: ") + ex.what());
    }
}

inline Json traversal_to_json(const Traversal& tr) {
    Json steps = Json::array();
    for (const auto& step : tr.steps) {
        Json one = Json::array();
        for (const auto& [a, b] : step) one.push_back({a, b});
        steps.push_back(one);
    }
    return steps;
}

inline Json poset_to_json(const Poset& p) {
    Json j;
    j["ground"] = p.ground();
    j["covers"] = Json::array();
    for (const auto& [x, y] : p.covers()) j["covers"].push_back({x, y});
    return j;
}

inline Poset poset_from_json(const Json& j) {
    try {
        auto ground = j.at("ground").get<std::vector<int>>();
        std::vector<std::pair<int, int>> rel;
        for (const auto& c : j.at("covers"))
            rel.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
        return Poset(std::move(ground), rel);
    } catch (const Json::exception& ex) {
        throw InputParseError(std::string("poset json: ") + ex.what());
    }
}

inline Json sign_vector_to_json(const SignVector& v) {
    Json j;
    j["signs"] = v.signs;
    return j;
}

inline SignVector sign_vector_from_json(const Json& j) {
    try {
        SignVector v;
        v.signs = j.at("signs").get<std::vector<int>>();
        for (int s : v.signs)
            if (s != 1 && s != -1) throw InputParseError("sign json: entries must be +-1");
        return v;
    } catch (const Json::exception& ex) {
        throw InputParseError(std::string("sign json: ") + ex.what());
    }
}

inline Json census_to_json(const CycleCensus& census, std::optional<int> diameter = {}) {
    Json j;
    j["tree"] = tree_to_json(census.tree);
    j["profile"] = Json::array();
    for (const auto& [mult, cnt] : census.profile()) j["profile"].push_back({mult, cnt});
    j["num_cycles"] = static_cast<long long>(census.counts.size());
    if (diameter) j["diameter"] = *diameter;
    return j;
}

inline std::string profile_to_csv(const FrequencyProfile& profile) {
    std::string out = "multiplicity,num_cycles\n";
    for (const auto& [mult, cnt] : profile)
        out += std::to_string(mult) + "," + std::to_string(cnt) + "\n";
    return out;
}

inline Json diagram_to_json(const ChordDiagram& d) {
    Json j;
    j["cycle"] = d.boundary;
    j["chords"] = Json::array();
    for (const auto& [p, q] : d.chords) j["chords"].push_back({p, q});
    j["crossing_free"] = is_crossing_free(d);
    return j;
}

}  // namespace treecycle
