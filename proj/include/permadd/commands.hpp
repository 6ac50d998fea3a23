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
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permadd/ideal.hpp"
#include "permadd/multicast.hpp"
#include "permadd/network.hpp"
#include "permadd/serialize.hpp"
#include "permadd/spectral.hpp"

namespace permadd {

/// {command, inputs, digest, result}; digest is FNV-1a of the compact inputs.
inline json make_report(const std::string& command, const json& inputs, json result) {
    json r;
    r["command"] = command;
    r["inputs"] = inputs;
    r["digest"] = fnv1a_hex(inputs.dump());
    r["result"] = std::move(result);
    return r;
}

inline std::vector<std::size_t> parse_support(const std::string& s) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw InvalidArgument("bad support entry: " + tok);
            out.push_back(v);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline json cmd_decompose(const std::string& group, std::uint64_t q) {
    auto d = decompose(Group::parse(group), q);
    json comps = json::array();
    for (std::size_t k = 1; k <= d->size(); ++k) {
        const auto& c = d->component(k);
        comps.push_back({{"index", k},
                         {"representative", c.cls.representative},
                         {"representative_tuple", c.representative},
                         {"members", c.cls.members},
                         {"exponent", c.exponent},
                         {"size", c.field_size}});
    }
    json result{{"group", d->group().spec()},
                {"order", d->group().order()},
                {"q", q},
                {"splitting_field", d->splitting_field().describe()},
                {"count", d->size()},
                {"sizes", d->component_sizes()},
                {"components", comps}};
    return make_report("algebra decompose", {{"group", group}, {"q", q}}, std::move(result));
}

inline json cmd_analyze(const std::string& group, std::uint64_t q, const std::vector<std::size_t>& support) {
    auto d = decompose(Group::parse(group), q);
    const GroupCode m = ideal_from_T(d, support);
    auto rows = [](const LinearCode& c) {
        json a = json::array();
        for (const auto& b : c.basis()) a.push_back(b.to_hex());
        return a;
    };
    const std::size_t radius = m.degree_bound();
    json reps = json::array();
    for (auto k : *m.support()) reps.push_back({{"index", k}, {"representative", d->component(k).cls.representative}, {"size", d->component(k).field_size}});
    json result{{"length", m.length()},
                {"dim", m.dimension()},
                {"rate", m.rate().str()},
                {"support", *m.support()},
                {"components", reps},
                {"annihilator_dim", m.annihilator_code().dimension()},
                {"covering_radius", radius},
                {"degree", radius},
                {"even_weight", q == 2 ? json(m.is_even_weight()) : json(nullptr)},
                {"basis", rows(m.code())},
                {"annihilator_basis", rows(m.annihilator_code())}};
    return make_report("code analyze", {{"group", group}, {"q", q}, {"support", support}}, std::move(result));
}

inline json cmd_table1() {
    json rows = json::array();
    auto ideal_row = [&](const std::string& name, std::uint32_t n, const std::vector<std::size_t>& t) {
        auto d = decompose(Group::make({n}), 2);
        const GroupCode m = ideal_from_T(d, t);
        std::uint64_t sinks = UINT64_MAX;
        for (auto k : t) sinks = std::min(sinks, d->component(k).field_size);
        rows.push_back({{"code", name}, {"n", n}, {"support", t}, {"degree", m.degree_bound()}, {"rate", m.rate().str()}, {"sinks", sinks}});
    };
    auto bound_row = [&](std::uint32_t n) {
        const std::uint64_t l0 = mult_order(2, n), phi = euler_totient(n), k1 = k_delta(n, 1);
        rows.push_back({{"code", "shift_bound"},
                        {"n", n},
                        {"degree", 1},
                        {"rate", std::to_string(phi) + "/" + std::to_string(n)},
                        {"k_delta", k1},
                        {"sinks", k1 * l0 / phi - 1}});
    };
    ideal_row("M1", 15, {2, 3, 4});
    ideal_row("M2", 15, {2, 3});
    ideal_row("M3", 15, {2});
    bound_row(15);
    ideal_row("odd_n_all", 7, {2, 3});
    ideal_row("simplex", 7, {2});
    bound_row(7);
    return make_report("table1", json::object(), {{"rows", rows}});
}

inline json cmd_solve(const json& network, const std::string& group, std::uint64_t q, const std::vector<std::size_t>& support, bool truncate) {
    const Network net = network_from_json(network);
    auto d = decompose(Group::parse(group), q);
    auto m = std::make_shared<const GroupCode>(ideal_from_T(d, support));
    if (m->support()->empty()) throw InvalidArgument("solve: support must be nonempty");
    const auto pq = detail::prime_power(q);
    std::map<std::size_t, ScalarSolution> sols;
    std::map<std::uint32_t, std::size_t> by_degree;
    for (auto k : *m->support()) {
        const std::uint32_t deg = d->subfield_degree(k);
        if (auto it = by_degree.find(deg); it != by_degree.end()) {
            sols.emplace(k, sols.at(it->second));
            continue;
        }
        sols.emplace(k, jaggi_sanders(net, Field::make(static_cast<std::uint32_t>(pq->first), deg)));
        by_degree[deg] = k;
    }
    const NetworkCode code = lift_scalar_to_ideal(sols, m, truncate);
    const bool ok = verify_solution(net, code).ok;
    json result{{"verified", ok},
                {"rate", network_rate(code).str()},
                {"degree", code_degree(code)},
                {"degree_bound", m->degree_bound()},
                {"code", code_to_json(net, code)}};
    json inputs{{"network", network}, {"group", group}, {"q", q}, {"support", support}, {"truncate", truncate}};
    return make_report("solve", inputs, std::move(result));
}

inline json cmd_verify(const json& network, const json& code_json) {
    const Network net = network_from_json(network);
    const NetworkCode code = code_from_json(net, code_json);
    const Verification v = verify_solution(net, code);
    json result{{"verified", v.ok}};
    if (!code.context().is_scalar()) {
        result["rate"] = network_rate(code).str();
        result["degree"] = code_degree(code);
    }
    if (!v.ok)
        result["counterexample"] = {{"message", net.messages()[v.message].id},
                                    {"basis_index", v.basis_index},
                                    {"basis_vector", v.basis_vector.values()},
                                    {"sink", net.nodes()[v.sink]},
                                    {"demanded", net.messages()[v.demanded].id}};
    return make_report("verify", {{"network", network}, {"code", code_json}}, std::move(result));
}

/// Messages given as {id: coefficient list} or drawn from the module with seed.
inline json cmd_run(const json& network, const json& code_json, const std::optional<json>& messages, std::optional<std::uint64_t> seed) {
    const Network net = network_from_json(network);
    const NetworkCode code = code_from_json(net, code_json);
    const ModuleContext& ctx = code.context();
    std::vector<FqVector> msgs(net.messages().size(), ctx.zero_element());
    json inputs{{"network", network}, {"code", code_json}};
    if (messages) {
        inputs["messages"] = *messages;
        for (auto it = messages->begin(); it != messages->end(); ++it) {
            std::vector<Elem> vals;
            try {
                vals = it.value().get<std::vector<Elem>>();
            } catch (const nlohmann::json::exception&) {
                throw InvalidArgument("run: message " + it.key() + " must be a coefficient list");
            }
            for (auto v : vals)
                if (!ctx.field().contains(v)) throw InvalidArgument("run: message entry outside " + ctx.field().describe());
            if (vals.size() != ctx.element_length()) throw InvalidArgument("run: message " + it.key() + " has the wrong length");
            msgs[net.message(it.key())] = FqVector::from_values(ctx.field(), vals);
        }
    } else if (seed) {
        inputs["seed"] = *seed;
        std::mt19937_64 rng(*seed);
        const auto basis = ctx.message_basis();
        std::uniform_int_distribution<Elem> pick(0, ctx.field().size() - 1);
        for (auto& m : msgs)
            for (const auto& b : basis) m.add_scaled(b, pick(rng));
    }
    const ExecutionTrace tr = execute(net, code, msgs);
    json result = trace_to_json(net, tr);
    json sent = json::object();
    for (std::size_t i = 0; i < msgs.size(); ++i) sent[net.messages()[i].id] = msgs[i].to_hex();
    result["messages"] = sent;
    bool ok = true;
    for (const auto& [key, v] : tr.decoded) ok = ok && v == msgs[key.second];
    result["recovered"] = ok;
    return make_report("run", inputs, std::move(result));
}

inline json cmd_gen_butterfly() { return network_to_json(build_butterfly()); }
inline json cmd_gen_combination(std::size_t big_n, std::size_t h) { return network_to_json(build_combination(big_n, h)); }

}  // namespace permadd
