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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "permadd/error.hpp"
#include "permadd/ideal.hpp"
#include "permadd/linalg.hpp"
#include "permadd/network.hpp"
#include "permadd/spectral.hpp"

namespace permadd {

using Path = std::vector<std::size_t>;

/// h edge-disjoint paths (edge indices) from any of the given sources to
/// sink by unit-capacity max-flow. Each source starts at most one path.
inline std::vector<Path> edge_disjoint_paths(const Network& net, const std::vector<std::size_t>& sources, std::size_t sink, std::size_t h) {
    struct Arc {
        std::size_t to;
        int cap;
        std::size_t rev;
        std::optional<std::size_t> edge;
    };
    const std::size_t n = net.nodes().size();
    const std::size_t super = n;
    std::vector<std::vector<Arc>> g(n + 1);
    auto add_arc = [&](std::size_t a, std::size_t b, std::optional<std::size_t> e) {
        g[a].push_back({b, 1, g[b].size(), e});
        g[b].push_back({a, 0, g[a].size() - 1, std::nullopt});
    };
    for (auto s : sources) add_arc(super, s, std::nullopt);
    for (std::size_t e = 0; e < net.edges().size(); ++e) add_arc(net.edges()[e].tail, net.edges()[e].head, e);

    std::size_t flow = 0;
    while (flow < h) {
        std::vector<std::pair<std::size_t, std::size_t>> via(n + 1, {SIZE_MAX, 0});
        std::deque<std::size_t> queue{super};
        via[super] = {super, 0};
        while (!queue.empty() && via[sink].first == SIZE_MAX) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < g[u].size(); ++i) {
                const Arc& a = g[u][i];
                if (a.cap > 0 && via[a.to].first == SIZE_MAX) {
                    via[a.to] = {u, i};
                    queue.push_back(a.to);
                }
            }
        }
        if (via[sink].first == SIZE_MAX) break;
        for (std::size_t v = sink; v != super;) {
            auto [u, i] = via[v];
            g[u][i].cap -= 1;
            g[v][g[u][i].rev].cap += 1;
            v = u;
        }
        ++flow;
    }
    if (flow < h)
        throw InvalidArgument("insufficient min-cut to " + net.nodes()[sink] + ": " + std::to_string(flow) + " < " + std::to_string(h));

    // forward arcs carry flow exactly when their capacity dropped to 0
    std::vector<Path> paths;
    for (auto& first : g[super]) {
        if (first.cap != 0 || paths.size() == h) continue;
        first.cap = 1;
        Path p;
        std::size_t u = first.to;
        while (u != sink) {
            bool moved = false;
            for (auto& a : g[u])
                if (a.edge && a.cap == 0) {
                    a.cap = 1;
                    p.push_back(*a.edge);
                    u = a.to;
                    moved = true;
                    break;
                }
            if (!moved) throw InternalError("flow decomposition failed");
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

inline std::vector<Path> edge_disjoint_paths(const Network& net, std::size_t source, std::size_t sink, std::size_t h) {
    // one super-source arc per requested path
    std::vector<std::size_t> sources(h, source);
    return edge_disjoint_paths(net, sources, sink, h);
}

/// Sinks of a multicast network: every sink demands every message, and the
/// min-cut from the message sources to each sink is at least h.
inline std::vector<std::size_t> multicast_sinks(const Network& net) {
    const std::size_t h = net.messages().size();
    detail::require(h >= 1, "multicast: network has no messages");
    auto sinks = net.sinks();
    detail::require(!sinks.empty(), "multicast: network has no demands");
    for (auto t : sinks)
        for (std::size_t i = 0; i < h; ++i)
            if (!net.demands(t, i)) throw InvalidArgument("multicast: sink " + net.nodes()[t] + " does not demand every message");
    return sinks;
}

struct ScalarSolution {
    NetworkCode code;
    Field field;
    std::vector<Elem> allowed;
};

/// Deterministic Jaggi-Sanders construction over f. Edges are processed in
/// topological order; for each edge the predecessor coefficients run through
/// allowed^p in lexicographic order and the first choice keeping every
/// affected sink frontier full rank wins. Other in-edges get allowed[0].
/// Without an explicit set every nonzero element of f is allowed, and the
/// field must have at least as many elements as there are sinks. With an
/// explicit set the outcome is decided by the search and the final check.
inline ScalarSolution jaggi_sanders(const Network& net, const Field& f, std::optional<std::vector<Elem>> allowed_set = std::nullopt) {
    const auto sinks = multicast_sinks(net);
    const std::size_t h = net.messages().size();
    std::vector<Elem> allowed;
    if (allowed_set) {
        allowed = *allowed_set;
        detail::require(!allowed.empty(), "jaggi_sanders: allowed set is empty");
    } else {
        if (f.size() < sinks.size())
            throw InvalidArgument("jaggi_sanders: " + std::to_string(sinks.size()) + " sinks exceed field size " + std::to_string(f.size()));
        for (Elem x = 1; x < f.size(); ++x) allowed.push_back(x);
    }
    for (auto a : allowed)
        if (a == 0 || !f.contains(a)) throw InvalidArgument("jaggi_sanders: allowed coefficients must be nonzero field elements");

    const auto& edges = net.edges();
    std::vector<std::size_t> sources;
    for (const auto& m : net.messages()) sources.push_back(m.source);

    std::vector<FqVector> global(edges.size(), FqVector(f, h));
    std::vector<bool> done(edges.size(), false);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (auto m = net.message_at(edges[e].tail)) {
            global[e] = FqVector::unit(f, h, *m);
            done[e] = true;
        }

    // uses[e] = (sink slot, path slot, predecessor edge)
    struct Use {
        std::size_t sink, path, pred;
    };
    std::vector<std::vector<Use>> uses(edges.size());
    std::vector<std::vector<std::size_t>> frontier(sinks.size());
    for (std::size_t t = 0; t < sinks.size(); ++t) {
        const auto paths = edge_disjoint_paths(net, sources, sinks[t], h);
        for (std::size_t j = 0; j < paths.size(); ++j) {
            frontier[t].push_back(paths[j].front());
            for (std::size_t i = 1; i < paths[j].size(); ++i) uses[paths[j][i]].push_back({t, j, paths[j][i - 1]});
        }
    }

    auto full_rank = [&](std::size_t t, std::size_t j, const FqVector& v) {
        std::vector<FqVector> rows;
        for (std::size_t r = 0; r < h; ++r) rows.push_back(r == j ? v : global[frontier[t][r]]);
        return rank(Matrix::from_rows(f, h, rows)) == h;
    };

    NetworkCode code(ModuleContext::scalar(f));
    auto scalar = [&](Elem x) { return FqVector::from_values(f, {x}); };
    for (auto e : net.edge_order()) {
        if (done[e]) continue;
        const auto& in = net.in_edges(edges[e].tail);
        std::vector<std::size_t> preds;
        for (const auto& u : uses[e])
            if (std::find(preds.begin(), preds.end(), u.pred) == preds.end()) preds.push_back(u.pred);
        std::sort(preds.begin(), preds.end());
        std::uint64_t tuples = 1;
        for (std::size_t i = 0; i < preds.size(); ++i) {
            tuples *= allowed.size();
            if (tuples > (std::uint64_t{1} << 24)) throw GuardExceeded("jaggi_sanders: coefficient search space exceeds 2^24");
        }
        std::map<std::size_t, Elem> coeff;
        for (auto d : in) coeff[d] = allowed[0];
        std::vector<std::size_t> digit(preds.size(), 0);
        bool found = false;
        for (std::uint64_t step = 0; step < tuples; ++step) {
            for (std::size_t i = 0; i < preds.size(); ++i) coeff[preds[i]] = allowed[digit[i]];
            FqVector g(f, h);
            for (auto d : in) g.add_scaled(global[d], coeff[d]);
            bool ok = true;
            for (const auto& u : uses[e])
                if (!full_rank(u.sink, u.path, g)) {
                    ok = false;
                    break;
                }
            if (ok) {
                global[e] = g;
                found = true;
                break;
            }
            for (std::size_t i = preds.size(); i-- > 0;) {
                if (++digit[i] < allowed.size()) break;
                digit[i] = 0;
            }
        }
        if (!found) throw ConstructionFailure("jaggi_sanders: no admissible coefficients for edge " + edges[e].id);
        for (auto d : in) code.set_encoding(d, e, scalar(coeff[d]));
        for (const auto& u : uses[e]) frontier[u.sink][u.path] = e;
        done[e] = true;
    }

    for (std::size_t t = 0; t < sinks.size(); ++t) {
        std::vector<FqVector> rows;
        for (auto e : frontier[t]) rows.push_back(global[e]);
        const Matrix inv = inverse(Matrix::from_rows(f, h, rows));
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j) code.set_decoding(frontier[t][j], i, scalar(inv(i, j)));
    }
    if (!verify_solution(net, code).ok) throw ConstructionFailure("jaggi_sanders: constructed code does not verify");
    return {std::move(code), f, std::move(allowed)};
}

/// Lift scalar solutions (keyed by component index) into a code over M: each
/// coefficient is Phi^{-1} of the spectrum carrying the scalar coefficient in
/// every component of T(M) and zero elsewhere, then degree-reduced. A
/// component without its own solution reuses the first supplied solution
/// whose field embeds into that component.
inline NetworkCode lift_scalar_to_ideal(const std::map<std::size_t, ScalarSolution>& solutions, std::shared_ptr<const GroupCode> m, bool truncate = false) {
    if (!m || !m->support()) throw InvalidArgument("lift_scalar_to_ideal: ideal needs spectral support");
    detail::require(!solutions.empty(), "lift_scalar_to_ideal: no scalar solutions given");
    const Decomposition& d = *m->decomposition();
    const Field& split = d.splitting_field();
    auto embeds = [&](const Field& f, std::size_t k) {
        return f.characteristic() == split.characteristic() && d.subfield_degree(k) % f.degree() == 0;
    };
    std::map<std::size_t, const ScalarSolution*> chosen;
    for (auto k : *m->support()) {
        auto it = solutions.find(k);
        if (it != solutions.end()) {
            if (!embeds(it->second.field, k))
                throw ContextMismatch("lift_scalar_to_ideal: " + it->second.field.describe() + " does not embed into component " + std::to_string(k));
            chosen[k] = &it->second;
            continue;
        }
        for (const auto& [_, s] : solutions)
            if (embeds(s.field, k)) {
                chosen[k] = &s;
                break;
            }
        if (!chosen.count(k)) throw InvalidArgument("lift_scalar_to_ideal: missing solution for component " + std::to_string(k));
    }
    std::map<std::size_t, FieldEmbedding> emb;
    std::vector<CoeffKey> keys;
    for (const auto& [k, s] : chosen) {
        emb.emplace(k, FieldEmbedding(s->field, split));
        for (const auto& [key, _] : s->code.coefficients())
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    NetworkCode out(ModuleContext::group_code(m, truncate));
    for (const auto& key : keys) {
        Spectrum s(d.size(), 0);
        for (const auto& [k, sol] : chosen) s[k - 1] = emb.at(k)(sol->code.get(key).get(0));
        out.set(key, d.inverse_transform(s).coefficients());
    }
    return reduce_code_degree(out);
}

inline NetworkCode lift_scalar_to_ideal(const ScalarSolution& sol, std::shared_ptr<const GroupCode> m, bool truncate = false) {
    if (!m || !m->support() || m->support()->empty()) throw InvalidArgument("lift_scalar_to_ideal: ideal needs a nonempty spectral support");
    const std::size_t k = m->support()->front();
    return lift_scalar_to_ideal(std::map<std::size_t, ScalarSolution>{{k, sol}}, std::move(m), truncate);
}

/// Rotate-and-add code over the ideal with support {2} of GF(2)[C_n]: every
/// encoding coefficient is a single rotation y^i.
inline NetworkCode rotate_and_add(const Network& net, std::uint64_t n) {
    if (!detail::is_prime(n) || n < 3) throw InvalidArgument("rotate_and_add: n must be an odd prime");
    if (mult_order(2, n) != n - 1) throw InvalidArgument("rotate_and_add: 2 must be primitive modulo n");
    const auto sinks = multicast_sinks(net);
    if (sinks.size() > n) throw InvalidArgument("rotate_and_add: more sinks than n");
    auto d = decompose(Group::make({static_cast<std::uint32_t>(n)}), 2);
    auto m = std::make_shared<const GroupCode>(ideal_from_T(d, {2}));
    const auto& chi = d->component(2).character;
    std::vector<Elem> allowed(chi.begin(), chi.begin() + static_cast<std::ptrdiff_t>(n));
    const ScalarSolution sol = jaggi_sanders(net, d->splitting_field(), allowed);
    NetworkCode out(ModuleContext::group_code(m));
    const Field& base = d->base_field();
    for (const auto& [key, c] : sol.code.coefficients()) {
        if (key.kind == CoeffKind::Encoding) {
            const auto i = static_cast<std::size_t>(std::find(allowed.begin(), allowed.end(), c.get(0)) - allowed.begin());
            if (i == allowed.size()) throw InternalError("rotate_and_add: coefficient outside the rotation set");
            out.set(key, AlgebraElement::monomial(d->group(), base, i).coefficients());
        } else {
            Spectrum s(d->size(), 0);
            s[1] = c.get(0);
            out.set(key, m->degree_reduce(d->inverse_transform(s)).coefficients());
        }
    }
    if (!verify_solution(net, out).ok) throw ConstructionFailure("rotate_and_add: lifted code does not verify");
    return out;
}

/// Scalar code over GF(q) read in GF(q)[G] through a -> a * e.
inline NetworkCode embed_scalar_code(const NetworkCode& scalar, const Group& g) {
    const ModuleContext& ctx = scalar.context();
    if (!ctx.is_scalar()) throw InvalidArgument("embed_scalar_code: expects a scalar code");
    if (ctx.field().degree() != 1) throw InvalidArgument("embed_scalar_code: expects a prime field");
    auto d = decompose(g, ctx.field().size());
    std::vector<std::size_t> all;
    for (std::size_t k = 1; k <= d->size(); ++k) all.push_back(k);
    auto m = std::make_shared<const GroupCode>(ideal_from_T(d, all));
    NetworkCode out(ModuleContext::group_code(m));
    for (const auto& [key, c] : scalar.coefficients()) out.set(key, AlgebraElement::monomial(g, ctx.field(), 0, c.get(0)).coefficients());
    return out;
}

/// Group-algebra code mapped to GF(q) by the augmentation sum_g a_g g -> sum_g a_g.
inline NetworkCode augment_code(const NetworkCode& code) {
    const ModuleContext& ctx = code.context();
    if (ctx.is_scalar()) throw InvalidArgument("augment_code: expects a group-code context");
    NetworkCode out(ModuleContext::scalar(ctx.field()));
    for (const auto& [key, k] : code.coefficients()) out.set(key, FqVector::from_values(ctx.field(), {k.coordinate_sum()}));
    return out;
}

/// Two-source butterfly: s1 and s2 each source one message; c-d is the
/// shared bottleneck; t1 and t2 demand both messages.
inline Network build_butterfly() {
    Network net;
    for (const char* v : {"s1", "s2", "c", "d", "t1", "t2"}) net.add_node(v);
    net.add_edge("s1-t1", "s1", "t1");
    net.add_edge("s1-c", "s1", "c");
    net.add_edge("s2-c", "s2", "c");
    net.add_edge("s2-t2", "s2", "t2");
    net.add_edge("c-d", "c", "d");
    net.add_edge("d-t1", "d", "t1");
    net.add_edge("d-t2", "d", "t2");
    net.add_message("m1", "s1");
    net.add_message("m2", "s2");
    for (const char* t : {"t1", "t2"})
        for (const char* m : {"m1", "m2"}) net.add_demand(t, m);
    return net;
}

/// Combination network C(N, h): message nodes z1..zh feed hub s, s feeds
/// relays r1..rN, and every h-subset of relays feeds one sink.
inline Network build_combination(std::size_t big_n, std::size_t h) {
    if (h < 1 || h > big_n) throw InvalidArgument("build_combination: need 1 <= h <= N");
    if (big_n > 20) throw GuardExceeded("build_combination: N above 20");
    Network net;
    net.add_node("s");
    for (std::size_t i = 1; i <= h; ++i) {
        const std::string z = "z" + std::to_string(i);
        net.add_node(z);
        net.add_edge(z + "-s", z, "s");
        net.add_message("m" + std::to_string(i), z);
    }
    for (std::size_t j = 1; j <= big_n; ++j) {
        const std::string r = "r" + std::to_string(j);
        net.add_node(r);
        net.add_edge("s-" + r, "s", r);
    }
    std::vector<std::size_t> pick(h);
    for (std::size_t i = 0; i < h; ++i) pick[i] = i + 1;
    while (true) {
        std::string t = "t";
        for (auto p : pick) t += "_" + std::to_string(p);
        net.add_node(t);
        for (auto p : pick) net.add_edge("r" + std::to_string(p) + "-" + t, "r" + std::to_string(p), t);
        for (std::size_t i = 1; i <= h; ++i) net.add_demand(t, "m" + std::to_string(i));
        std::size_t i = h;
        while (i > 0 && pick[i - 1] == big_n - h + i) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t k = i; k < h; ++k) pick[k] = pick[k - 1] + 1;
    }
    return net;
}

}  // namespace permadd
