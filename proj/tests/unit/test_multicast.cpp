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

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace permadd;

namespace {

const Field kF2 = Field::make(2, 1);

std::vector<std::size_t> message_sources(const Network& net) {
    std::vector<std::size_t> s;
    for (const auto& m : net.messages()) s.push_back(m.source);
    return s;
}

void expect_disjoint_paths(const Network& net, const std::vector<Path>& paths, std::size_t sink) {
    std::set<std::size_t> used;
    for (const auto& p : paths) {
        ASSERT_FALSE(p.empty());
        EXPECT_EQ(net.edges()[p.back()].head, sink);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_EQ(net.edges()[p[i]].head, net.edges()[p[i + 1]].tail);
        for (auto e : p) EXPECT_TRUE(used.insert(e).second);
    }
}

std::size_t max_weight(const NetworkCode& c, CoeffKind kind) {
    std::size_t w = 0;
    for (const auto& [k, v] : c.coefficients())
        if (k.kind == kind) w = std::max(w, v.weight());
    return w;
}

std::size_t min_weight(const NetworkCode& c, CoeffKind kind) {
    std::size_t w = SIZE_MAX;
    for (const auto& [k, v] : c.coefficients())
        if (k.kind == kind) w = std::min(w, v.weight());
    return w;
}

}  // namespace

TEST(Generators, Butterfly) {
    const Network net = build_butterfly();
    EXPECT_EQ(net.sinks().size(), 2u);
    EXPECT_EQ(net.messages().size(), 2u);
    for (auto t : net.sinks()) EXPECT_EQ(edge_disjoint_paths(net, message_sources(net), t, 2).size(), 2u);
}

TEST(Generators, Combination) {
    EXPECT_EQ(build_combination(4, 2).sinks().size(), 6u);
    const Network c64 = build_combination(6, 4);
    EXPECT_EQ(c64.sinks().size(), 15u);
    for (auto t : c64.sinks()) EXPECT_EQ(edge_disjoint_paths(c64, message_sources(c64), t, 4).size(), 4u);
    EXPECT_THROW(build_combination(3, 4), InvalidArgument);
    EXPECT_THROW(build_combination(3, 0), InvalidArgument);
}

TEST(EdgeDisjointPaths, Butterfly) {
    const Network net = build_butterfly();
    for (const char* t : {"t1", "t2"}) {
        const auto paths = edge_disjoint_paths(net, message_sources(net), net.node(t), 2);
        expect_disjoint_paths(net, paths, net.node(t));
    }
    EXPECT_THROW(edge_disjoint_paths(net, message_sources(net), net.node("t1"), 3), InvalidArgument);
}

TEST(EdgeDisjointPaths, SinglePath) {
    Network net;
    for (const char* v : {"a", "b", "c"}) net.add_node(v);
    net.add_edge("ab", "a", "b");
    net.add_edge("bc", "b", "c");
    const auto paths = edge_disjoint_paths(net, net.node("a"), net.node("c"), 1);
    ASSERT_EQ(paths.size(), 1u);
    EXPECT_EQ(paths[0], (Path{0, 1}));
}

TEST(EdgeDisjointPaths, ParallelEdgesFromOneSource) {
    Network net;
    net.add_node("s");
    net.add_node("t");
    net.add_edge("e1", "s", "t");
    net.add_edge("e2", "s", "t");
    EXPECT_EQ(edge_disjoint_paths(net, net.node("s"), net.node("t"), 2).size(), 2u);
}

TEST(JaggiSanders, ButterflyOverGF2) {
    const Network net = build_butterfly();
    const ScalarSolution sol = jaggi_sanders(net, kF2);
    EXPECT_TRUE(verify_solution(net, sol.code).ok);
    // the bottleneck must carry m1 + m2
    const auto tr = execute(net, sol.code, {FqVector::from_values(kF2, {1}), FqVector::from_values(kF2, {1})});
    EXPECT_EQ(tr.edges[net.edge("c-d")].get(0), 0u);
    EXPECT_EQ(sol.allowed, (std::vector<Elem>{1}));
}

TEST(JaggiSanders, RestrictedSetReportsOutcome) {
    const Network net = build_butterfly();
    const ScalarSolution sol = jaggi_sanders(net, kF2, std::vector<Elem>{1});
    EXPECT_TRUE(verify_solution(net, sol.code).ok);
    EXPECT_THROW(jaggi_sanders(net, kF2, std::vector<Elem>{0}), InvalidArgument);
}

TEST(JaggiSanders, CombinationNetworks) {
    const Network c42 = build_combination(4, 2);
    EXPECT_TRUE(verify_solution(c42, jaggi_sanders(c42, Field::make(2, 3)).code).ok);
    EXPECT_TRUE(verify_solution(c42, jaggi_sanders(c42, Field::make(2, 4)).code).ok);
    EXPECT_THROW(jaggi_sanders(c42, Field::make(2, 2)), InvalidArgument);
    const Network c64 = build_combination(6, 4);
    EXPECT_TRUE(verify_solution(c64, jaggi_sanders(c64, Field::make(2, 4)).code).ok);
}

TEST(JaggiSanders, Deterministic) {
    const Network net = build_combination(4, 2);
    EXPECT_EQ(jaggi_sanders(net, Field::make(2, 4)).code, jaggi_sanders(net, Field::make(2, 4)).code);
}

TEST(JaggiSanders, EveryAdjacentPairHasNonzeroCoefficient) {
    const Network net = build_combination(5, 3);
    const ScalarSolution sol = jaggi_sanders(net, Field::make(2, 4));
    for (std::size_t d = 0; d < net.edges().size(); ++d)
        for (auto e : net.out_edges(net.edges()[d].head)) EXPECT_NE(sol.code.get(encoding_key(d, e)).get(0), 0u);
}

TEST(JaggiSanders, RejectsNonMulticastDemands) {
    Network net = build_butterfly();
    net.add_node("t3");
    net.add_edge("d-t3", "d", "t3");
    net.add_demand("t3", "m1");
    EXPECT_THROW(jaggi_sanders(net, Field::make(2, 2)), InvalidArgument);
}

TEST(Lift, ButterflyIntoM3) {
    auto d = decompose(Group::parse("C15"), 2);
    auto m3 = std::make_shared<const GroupCode>(ideal_from_T(d, {2}));
    const Network net = build_butterfly();
    const NetworkCode code = lift_scalar_to_ideal(jaggi_sanders(net, kF2), m3);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_LE(code_degree(code), 1u);
}

TEST(Lift, CombinationIntoM1) {
    auto d = decompose(Group::parse("C15"), 2);
    auto m1 = std::make_shared<const GroupCode>(ideal_from_T(d, {2, 3, 4}));
    const Network net = build_combination(4, 2);
    const NetworkCode code = lift_scalar_to_ideal(jaggi_sanders(net, Field::make(2, 4)), m1);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_LE(code_degree(code), 6u);
    EXPECT_EQ(network_rate(code).str(), "12/15");
}

TEST(Lift, PerComponentSolutions) {
    auto d = decompose(Group::parse("C15"), 2);
    auto m = std::make_shared<const GroupCode>(ideal_from_T(d, {2, 5}));
    const Network net = build_combination(3, 2);
    std::map<std::size_t, ScalarSolution> sols;
    sols.emplace(2, jaggi_sanders(net, Field::make(2, 4)));
    sols.emplace(5, jaggi_sanders(net, Field::make(2, 2)));
    const NetworkCode code = lift_scalar_to_ideal(sols, m);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_LE(code_degree(code), m->degree_bound());
    std::map<std::size_t, ScalarSolution> wrong;
    wrong.emplace(5, jaggi_sanders(net, Field::make(2, 4)));
    EXPECT_THROW(lift_scalar_to_ideal(wrong, m), ContextMismatch);
}

TEST(Lift, ZeroSolutionLiftsToZero) {
    auto d = decompose(Group::parse("C15"), 2);
    auto m = std::make_shared<const GroupCode>(ideal_from_T(d, {2}));
    const ScalarSolution zero{NetworkCode(ModuleContext::scalar(kF2)), kF2, {1}};
    EXPECT_TRUE(lift_scalar_to_ideal(zero, m).coefficients().empty());
}

TEST(Lift, OddLengthDegreeBound) {
    for (std::uint32_t n : {7u, 15u}) {
        auto d = decompose(Group::make({n}), 2);
        std::vector<std::size_t> t;
        for (std::size_t k = 2; k <= d->size(); ++k) t.push_back(k);
        auto m = std::make_shared<const GroupCode>(ideal_from_T(d, t));
        const Network net = build_butterfly();
        const NetworkCode code = lift_scalar_to_ideal(jaggi_sanders(net, kF2), m);
        EXPECT_TRUE(verify_solution(net, code).ok);
        EXPECT_LE(code_degree(code), (n - 1) / 2);
    }
}

TEST(RotateAndAdd, ButterflyN5) {
    const Network net = build_butterfly();
    const NetworkCode code = rotate_and_add(net, 5);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_EQ(min_weight(code, CoeffKind::Encoding), 1u);
    EXPECT_EQ(max_weight(code, CoeffKind::Encoding), 1u);
    EXPECT_LE(max_weight(code, CoeffKind::Decoding), 2u);
    EXPECT_EQ(network_rate(code).str(), "4/5");
}

TEST(RotateAndAdd, Preconditions) {
    EXPECT_THROW(rotate_and_add(build_combination(4, 2), 5), InvalidArgument);
    EXPECT_THROW(rotate_and_add(build_butterfly(), 7), InvalidArgument);
    EXPECT_THROW(rotate_and_add(build_butterfly(), 9), InvalidArgument);
}

TEST(RotateAndAdd, SinglePathN3) {
    Network net;
    for (const char* v : {"s", "r", "t"}) net.add_node(v);
    net.add_edge("sr", "s", "r");
    net.add_edge("rt", "r", "t");
    net.add_message("m", "s");
    net.add_demand("t", "m");
    const NetworkCode code = rotate_and_add(net, 3);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_EQ(max_weight(code, CoeffKind::Encoding), 1u);
}

TEST(RotateAndAdd, CombinationN11) {
    const Network net = build_combination(4, 2);
    const NetworkCode code = rotate_and_add(net, 11);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_EQ(max_weight(code, CoeffKind::Encoding), 1u);
    EXPECT_LE(max_weight(code, CoeffKind::Decoding), 5u);
}

TEST(GroupAlgebraEquivalence, ButterflyOverF2C7) {
    const Network net = build_butterfly();
    const ScalarSolution sol = jaggi_sanders(net, kF2);
    const NetworkCode lifted = embed_scalar_code(sol.code, Group::parse("C7"));
    EXPECT_TRUE(verify_solution(net, lifted).ok);
    EXPECT_EQ(network_rate(lifted).str(), "7/7");
    EXPECT_TRUE(verify_solution(net, augment_code(lifted)).ok);
    // a non-solution stays a non-solution under both maps
    NetworkCode broken = sol.code;
    broken.set_encoding(net.edge("s2-c"), net.edge("c-d"), FqVector::from_values(kF2, {0}));
    EXPECT_FALSE(verify_solution(net, embed_scalar_code(broken, Group::parse("C7"))).ok);
}

TEST(GeneralQ, TernaryC5) {
    auto d = decompose(Group::parse("C5"), 3);
    auto m = std::make_shared<const GroupCode>(ideal_from_T(d, {2}));
    EXPECT_EQ(m->degree_bound(), 3u);
    const Network net = build_combination(4, 2);
    const NetworkCode code = lift_scalar_to_ideal(jaggi_sanders(net, Field::make(3, 2)), m);
    EXPECT_TRUE(verify_solution(net, code).ok);
    EXPECT_LE(code_degree(code), 3u);
    EXPECT_EQ(network_rate(code).str(), "4/5");
}
