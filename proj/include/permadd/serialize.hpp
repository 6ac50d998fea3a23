// Copyright 2026 The permadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "permadd/error.hpp"
#include "permadd/ideal.hpp"
#include "permadd/network.hpp"
#include "permadd/spectral.hpp"

namespace permadd {

using json = nlohmann::ordered_json;

namespace detail {

template <typename T>
T field_of(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string(where) + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument(std::string(where) + ": bad value for \"" + key + "\"");
    }
}

}  // namespace detail

/// 64-bit FNV-1a of a string, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json network_to_json(const Network& net) {
    json j;
    j["nodes"] = net.nodes();
    j["edges"] = json::array();
    for (const auto& e : net.edges()) j["edges"].push_back({{"id", e.id}, {"tail", net.nodes()[e.tail]}, {"head", net.nodes()[e.head]}});
    j["messages"] = json::array();
    for (const auto& m : net.messages()) j["messages"].push_back({{"id", m.id}, {"source", net.nodes()[m.source]}});
    j["demands"] = json::array();
    for (const auto& d : net.demands()) j["demands"].push_back({{"sink", net.nodes()[d.sink]}, {"message", net.messages()[d.message].id}});
    return j;
}

inline Network network_from_json(const json& j) {
    Network net;
    for (const auto& v : detail::field_of<std::vector<std::string>>(j, "nodes", "network")) net.add_node(v);
    for (const auto& e : detail::field_of<json>(j, "edges", "network"))
        net.add_edge(detail::field_of<std::string>(e, "id", "edge"), detail::field_of<std::string>(e, "tail", "edge"),
                     detail::field_of<std::string>(e, "head", "edge"));
    for (const auto& m : detail::field_of<json>(j, "messages", "network"))
        net.add_message(detail::field_of<std::string>(m, "id", "message"), detail::field_of<std::string>(m, "source", "message"));
    if (j.contains("demands"))
        for (const auto& d : j.at("demands"))
            net.add_demand(detail::field_of<std::string>(d, "sink", "demand"), detail::field_of<std::string>(d, "message", "demand"));
    net.topological_order();
    return net;
}

inline json context_to_json(const ModuleContext& ctx) {
    if (ctx.is_scalar()) return {{"type", "scalar"}, {"p", ctx.field().characteristic()}, {"m", ctx.field().degree()}};
    const GroupCode& m = ctx.code();
    json j{{"type", "group_code"}, {"group", m.group().spec()}, {"q", m.field().size()}};
    if (m.support())
        j["support"] = *m.support();
    else
        j["generators"] = [&] {
            json g = json::array();
            for (const auto& b : m.basis()) g.push_back(b.coefficients().values());
            return g;
        }();
    j["truncate"] = ctx.truncated();
    return j;
}

inline ModuleContext context_from_json(const json& j) {
    const auto type = detail::field_of<std::string>(j, "type", "context");
    if (type == "scalar")
        return ModuleContext::scalar(Field::make(detail::field_of<std::uint32_t>(j, "p", "context"), detail::field_of<std::uint32_t>(j, "m", "context")));
    if (type != "group_code") throw InvalidArgument("context: unknown type " + type);
    const Group g = Group::parse(detail::field_of<std::string>(j, "group", "context"));
    const auto q = detail::field_of<std::uint64_t>(j, "q", "context");
    const bool truncate = j.value("truncate", false);
    if (j.contains("support")) {
        auto d = decompose(g, q);
        return ModuleContext::group_code(std::make_shared<const GroupCode>(ideal_from_T(d, detail::field_of<std::vector<std::size_t>>(j, "support", "context"))), truncate);
    }
    const Field f = Field::of_order(q);
    std::vector<AlgebraElement> gens;
    for (const auto& row : detail::field_of<std::vector<std::vector<Elem>>>(j, "generators", "context"))
        gens.emplace_back(g, FqVector::from_values(f, row));
    return ModuleContext::group_code(std::make_shared<const GroupCode>(ideal_from_generators(g, f, gens)), truncate);
}

inline json code_to_json(const Network& net, const NetworkCode& code) {
    json j;
    j["context"] = context_to_json(code.context());
    j["encoding"] = json::array();
    j["decoding"] = json::array();
    const auto& edges = net.edges();
    for (const auto& [key, k] : code.coefficients()) {
        if (key.kind == CoeffKind::Encoding)
            j["encoding"].push_back({{"in_edge", edges.at(key.in_edge).id}, {"out_edge", edges.at(key.target).id}, {"coeff", k.values()}});
        else
            j["decoding"].push_back({{"sink", net.nodes()[edges.at(key.in_edge).head]},
                                     {"in_edge", edges.at(key.in_edge).id},
                                     {"message", net.messages().at(key.target).id},
                                     {"coeff", k.values()}});
    }
    return j;
}

inline NetworkCode code_from_json(const Network& net, const json& j) {
    NetworkCode code(context_from_json(detail::field_of<json>(j, "context", "code")));
    const Field& f = code.context().field();
    auto coeff = [&](const json& c) {
        const auto vals = detail::field_of<std::vector<Elem>>(c, "coeff", "coefficient");
        for (auto v : vals)
            if (!f.contains(v)) throw InvalidArgument("coefficient entry outside " + f.describe());
        return FqVector::from_values(f, vals);
    };
    if (j.contains("encoding"))
        for (const auto& c : j.at("encoding"))
            code.set_encoding(net.edge(detail::field_of<std::string>(c, "in_edge", "encoding")), net.edge(detail::field_of<std::string>(c, "out_edge", "encoding")),
                              coeff(c));
    if (j.contains("decoding"))
        for (const auto& c : j.at("decoding")) {
            const std::size_t d = net.edge(detail::field_of<std::string>(c, "in_edge", "decoding"));
            if (c.contains("sink") && net.node(c.at("sink").get<std::string>()) != net.edges()[d].head)
                throw InvalidArgument("decoding: edge " + net.edges()[d].id + " does not enter sink " + c.at("sink").get<std::string>());
            code.set_decoding(d, net.message(detail::field_of<std::string>(c, "message", "decoding")), coeff(c));
        }
    code.check_against(net);
    return code;
}

inline json trace_to_json(const Network& net, const ExecutionTrace& tr) {
    json j;
    j["edges"] = json::object();
    for (std::size_t e = 0; e < tr.edges.size(); ++e) j["edges"][net.edges()[e].id] = tr.edges[e].to_hex();
    j["decoded"] = json::array();
    for (const auto& [key, v] : tr.decoded)
        j["decoded"].push_back({{"sink", net.nodes()[key.first]}, {"message", net.messages()[key.second].id}, {"value", v.to_hex()}});
    return j;
}

}  // namespace permadd
