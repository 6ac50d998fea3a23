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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permadd/algebra.hpp"
#include "permadd/error.hpp"
#include "permadd/ideal.hpp"

namespace permadd {

struct Edge {
    std::string id;
    std::size_t tail;
    std::size_t head;
};

struct Message {
    std::string id;
    std::size_t source;
};

struct Demand {
    std::size_t sink;
    std::size_t message;
};

/// Directed acyclic multigraph with messages bound to source nodes and
/// per-(sink, message) demands. Ids are strings; everything else is indexed.
class Network {
 public:
    std::size_t add_node(const std::string& id) {
        if (node_index_.count(id)) throw InvalidArgument("duplicate node id: " + id);
        node_index_[id] = nodes_.size();
        nodes_.push_back(id);
        in_.emplace_back();
        out_.emplace_back();
        return nodes_.size() - 1;
    }

    std::size_t add_edge(const std::string& id, const std::string& tail, const std::string& head) {
        if (edge_index_.count(id)) throw InvalidArgument("duplicate edge id: " + id);
        const std::size_t t = node(tail), h = node(head);
        edge_index_[id] = edges_.size();
        edges_.push_back({id, t, h});
        out_[t].push_back(edges_.size() - 1);
        in_[h].push_back(edges_.size() - 1);
        return edges_.size() - 1;
    }

    std::size_t add_message(const std::string& id, const std::string& source) {
        if (message_index_.count(id)) throw InvalidArgument("duplicate message id: " + id);
        const std::size_t s = node(source);
        for (const auto& m : messages_)
            if (m.source == s) throw InvalidArgument("node " + source + " already sources message " + m.id);
        message_index_[id] = messages_.size();
        messages_.push_back({id, s});
        return messages_.size() - 1;
    }

    void add_demand(const std::string& sink, const std::string& message) {
        auto it = message_index_.find(message);
        if (it == message_index_.end()) throw InvalidArgument("demand references unknown message: " + message);
        demands_.push_back({node(sink), it->second});
    }

    std::size_t node(const std::string& id) const {
        auto it = node_index_.find(id);
        if (it == node_index_.end()) throw InvalidArgument("unknown node: " + id);
        return it->second;
    }
    std::size_t edge(const std::string& id) const {
        auto it = edge_index_.find(id);
        if (it == edge_index_.end()) throw InvalidArgument("unknown edge: " + id);
        return it->second;
    }
    std::size_t message(const std::string& id) const {
        auto it = message_index_.find(id);
        if (it == message_index_.end()) throw InvalidArgument("unknown message: " + id);
        return it->second;
    }

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Message>& messages() const { return messages_; }
    const std::vector<Demand>& demands() const { return demands_; }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }

    /// Message sourced at v, if any.
    std::optional<std::size_t> message_at(std::size_t v) const {
        for (std::size_t i = 0; i < messages_.size(); ++i)
            if (messages_[i].source == v) return i;
        return std::nullopt;
    }

    bool demands(std::size_t sink, std::size_t msg) const {
        for (const auto& d : demands_)
            if (d.sink == sink && d.message == msg) return true;
        return false;
    }

    /// Distinct demanding sinks in order of first appearance.
    std::vector<std::size_t> sinks() const {
        std::vector<std::size_t> out;
        for (const auto& d : demands_)
            if (std::find(out.begin(), out.end(), d.sink) == out.end()) out.push_back(d.sink);
        return out;
    }

    /// Node order (Kahn, smallest index first); fails on cycles and on
    /// sources with incoming edges.
    std::vector<std::size_t> topological_order() const {
        for (const auto& m : messages_)
            if (!in_[m.source].empty()) throw InvalidArgument("source node " + nodes_[m.source] + " has incoming edges");
        std::vector<std::size_t> indeg(nodes_.size());
        for (const auto& e : edges_) ++indeg[e.head];
        std::vector<std::size_t> ready, order;
        for (std::size_t v = nodes_.size(); v-- > 0;)
            if (indeg[v] == 0) ready.push_back(v);
        while (!ready.empty()) {
            std::sort(ready.begin(), ready.end(), std::greater<>());
            const std::size_t v = ready.back();
            ready.pop_back();
            order.push_back(v);
            for (auto e : out_[v])
                if (--indeg[edges_[e].head] == 0) ready.push_back(edges_[e].head);
        }
        if (order.size() != nodes_.size()) throw InvalidArgument("network contains a cycle");
        return order;
    }

    /// Edges ordered by the topological position of their tails.
    std::vector<std::size_t> edge_order() const {
        std::vector<std::size_t> out;
        for (auto v : topological_order())
            for (auto e : out_[v]) out.push_back(e);
        return out;
    }

 private:
    std::vector<std::string> nodes_;
    std::vector<Edge> edges_;
    std::vector<Message> messages_;
    std::vector<Demand> demands_;
    std::vector<std::vector<std::size_t>> in_, out_;
    std::unordered_map<std::string, std::size_t> node_index_, edge_index_, message_index_;
};

inline std::vector<std::size_t> network_validate(const Network& net) { return net.topological_order(); }

/// Where messages, symbols and coefficients live: either the scalar field
/// GF(Q) (all length-1 vectors) or a group code M inside GF(q)[G].
class ModuleContext {
 public:
    static ModuleContext scalar(const Field& f) {
        ModuleContext c;
        c.field_ = f;
        return c;
    }

    static ModuleContext group_code(std::shared_ptr<const GroupCode> m, bool truncate = false) {
        if (!m) throw InvalidArgument("group_code context: missing code");
        if (truncate && !m->annihilator_code().contains(AlgebraElement::all_ones(m->group(), m->field()).coefficients()))
            throw InvalidArgument("bit truncation needs an ideal whose elements have coordinate sum zero");
        ModuleContext c;
        c.field_ = m->field();
        c.code_ = std::move(m);
        c.truncate_ = truncate;
        return c;
    }

    bool is_scalar() const { return !code_; }
    bool truncated() const { return truncate_; }
    const Field& field() const { return field_; }
    const GroupCode& code() const {
        if (!code_) throw InvalidArgument("scalar context has no group code");
        return *code_;
    }
    const std::shared_ptr<const GroupCode>& code_ptr() const { return code_; }

    std::size_t coefficient_length() const { return code_ ? code_->length() : 1; }
    std::size_t element_length() const { return coefficient_length(); }
    std::size_t symbol_length() const { return code_ ? code_->length() - (truncate_ ? 1 : 0) : 1; }

    /// Basis of the message space over the field of this context.
    std::vector<FqVector> message_basis() const {
        if (code_) return code_->code().basis();
        return {FqVector::unit(field_, 1, 0)};
    }

    bool in_module(const FqVector& v) const {
        if (v.size() != element_length() || !(v.field() == field_)) return false;
        return code_ ? code_->contains(v) : true;
    }

    FqVector zero_element() const { return FqVector(field_, element_length()); }
    FqVector zero_coefficient() const { return FqVector(field_, coefficient_length()); }

    /// k * x for a module element x.
    FqVector act(const FqVector& k, const FqVector& x) const {
        if (code_) return apply(AlgebraElement(code_->group(), k), x);
        return x.scaled(k.get(0));
    }

    FqVector to_symbol(const FqVector& x) const { return truncate_ ? bit_truncate(x) : x; }
    FqVector from_symbol(const FqVector& s) const { return truncate_ ? bit_expand(s) : s; }

    std::size_t coefficient_weight(const FqVector& k) const { return k.weight(); }

 private:
    Field field_ = Field::make(2, 1);
    std::shared_ptr<const GroupCode> code_;
    bool truncate_ = false;
};

enum class CoeffKind { Encoding, Decoding };

/// Encoding (in_edge, out_edge) or decoding (in_edge, message).
struct CoeffKey {
    CoeffKind kind;
    std::size_t in_edge;
    std::size_t target;

    friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

inline CoeffKey encoding_key(std::size_t d, std::size_t e) { return {CoeffKind::Encoding, d, e}; }
inline CoeffKey decoding_key(std::size_t d, std::size_t msg) { return {CoeffKind::Decoding, d, msg}; }

/// Coding coefficients over a module context. Absent coefficients are zero.
class NetworkCode {
 public:
    explicit NetworkCode(ModuleContext ctx) : ctx_(std::move(ctx)) {}

    const ModuleContext& context() const { return ctx_; }
    const std::map<CoeffKey, FqVector>& coefficients() const { return coeffs_; }

    void set(const CoeffKey& key, FqVector k) {
        if (k.size() != ctx_.coefficient_length() || !(k.field() == ctx_.field())) throw ContextMismatch("coefficient does not match the code context");
        coeffs_.insert_or_assign(key, std::move(k));
    }
    void set_encoding(std::size_t d, std::size_t e, FqVector k) { set(encoding_key(d, e), std::move(k)); }
    void set_decoding(std::size_t d, std::size_t msg, FqVector k) { set(decoding_key(d, msg), std::move(k)); }

    FqVector get(const CoeffKey& key) const {
        auto it = coeffs_.find(key);
        return it == coeffs_.end() ? ctx_.zero_coefficient() : it->second;
    }

    /// Every coefficient sits on an adjacent pair (encoding) or on a sink
    /// in-edge for a message that sink demands (decoding).
    void check_against(const Network& net) const {
        const auto& edges = net.edges();
        for (const auto& [key, _] : coeffs_) {
            if (key.in_edge >= edges.size()) throw InvalidArgument("coefficient references unknown edge");
            const std::size_t v = edges[key.in_edge].head;
            if (key.kind == CoeffKind::Encoding) {
                if (key.target >= edges.size() || edges[key.target].tail != v)
                    throw InvalidArgument("encoding coefficient on non-adjacent edges " + edges[key.in_edge].id);
            } else if (key.target >= net.messages().size() || !net.demands(v, key.target)) {
                throw InvalidArgument("decoding coefficient at " + net.nodes()[v] + " for a message it does not demand");
            }
        }
    }

    friend bool operator==(const NetworkCode& a, const NetworkCode& b) {
        if (a.ctx_.is_scalar() != b.ctx_.is_scalar() || !(a.ctx_.field() == b.ctx_.field())) return false;
        std::map<CoeffKey, FqVector> x, y;
        for (const auto& [k, v] : a.coeffs_)
            if (!v.is_zero()) x.insert_or_assign(k, v);
        for (const auto& [k, v] : b.coeffs_)
            if (!v.is_zero()) y.insert_or_assign(k, v);
        return x == y;
    }

 private:
    ModuleContext ctx_;
    std::map<CoeffKey, FqVector> coeffs_;
};

struct ExecutionTrace {
    /// Symbol on each edge, by edge index.
    std::vector<FqVector> edges;
    /// Decoded value per (sink, message) demand.
    std::map<std::pair<std::size_t, std::size_t>, FqVector> decoded;

    friend bool operator==(const ExecutionTrace&, const ExecutionTrace&) = default;
};

inline ExecutionTrace execute(const Network& net, const NetworkCode& code, const std::vector<FqVector>& messages) {
    const ModuleContext& ctx = code.context();
    if (messages.size() != net.messages().size()) throw InvalidArgument("execute: expected one value per message");
    for (std::size_t i = 0; i < messages.size(); ++i)
        if (!ctx.in_module(messages[i])) throw InvalidArgument("execute: message " + net.messages()[i].id + " is outside the module");
    code.check_against(net);
    const auto& edges = net.edges();
    ExecutionTrace tr;
    tr.edges.assign(edges.size(), FqVector(ctx.field(), ctx.symbol_length()));
    std::vector<FqVector> value(edges.size(), ctx.zero_element());
    for (auto e : net.edge_order()) {
        const std::size_t v = edges[e].tail;
        if (auto m = net.message_at(v)) {
            value[e] = messages[*m];
        } else {
            FqVector acc = ctx.zero_element();
            for (auto d : net.in_edges(v)) {
                const FqVector k = code.get(encoding_key(d, e));
                if (!k.is_zero()) acc += ctx.act(k, value[d]);
            }
            value[e] = std::move(acc);
        }
        tr.edges[e] = ctx.to_symbol(value[e]);
        value[e] = ctx.from_symbol(tr.edges[e]);
    }
    for (const auto& dm : net.demands()) {
        FqVector acc = ctx.zero_element();
        for (auto d : net.in_edges(dm.sink)) {
            const FqVector k = code.get(decoding_key(d, dm.message));
            if (!k.is_zero()) acc += ctx.act(k, value[d]);
        }
        tr.decoded.insert_or_assign({dm.sink, dm.message}, std::move(acc));
    }
    return tr;
}

struct Verification {
    bool ok = true;
    /// On failure: the message whose basis vector broke a demand, the basis
    /// vector itself and the failing (sink, demanded message).
    std::size_t message = 0;
    std::size_t basis_index = 0;
    FqVector basis_vector;
    std::size_t sink = 0;
    std::size_t demanded = 0;
};

/// Exact recovery for every basis vector of every message (enough by linearity).
inline Verification verify_solution(const Network& net, const NetworkCode& code) {
    const ModuleContext& ctx = code.context();
    const auto basis = ctx.message_basis();
    std::vector<FqVector> msgs(net.messages().size(), ctx.zero_element());
    for (std::size_t i = 0; i < msgs.size(); ++i) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            msgs[i] = basis[b];
            const ExecutionTrace tr = execute(net, code, msgs);
            for (const auto& [key, val] : tr.decoded) {
                if (val == msgs[key.second]) continue;
                Verification v;
                v.ok = false;
                v.message = i;
                v.basis_index = b;
                v.basis_vector = basis[b];
                v.sink = key.first;
                v.demanded = key.second;
                return v;
            }
        }
        msgs[i] = ctx.zero_element();
    }
    return {};
}

/// Largest coefficient weight; undefined for scalar contexts.
inline std::size_t code_degree(const NetworkCode& code) {
    if (code.context().is_scalar()) throw InvalidArgument("code_degree is undefined for scalar contexts");
    std::size_t d = 0;
    for (const auto& [_, k] : code.coefficients()) d = std::max(d, k.weight());
    return d;
}

inline NetworkCode perturb_with_annihilator(const NetworkCode& code, const std::map<CoeffKey, AlgebraElement>& picks) {
    const GroupCode& m = code.context().code();
    NetworkCode out = code;
    for (const auto& [key, a] : picks) {
        if (!m.annihilates(a)) throw InvalidArgument("perturbation is not in the annihilator");
        out.set(key, code.get(key) + a.coefficients());
    }
    return out;
}

inline NetworkCode reduce_code_degree(const NetworkCode& code) {
    const GroupCode& m = code.context().code();
    NetworkCode out(code.context());
    for (const auto& [key, k] : code.coefficients()) out.set(key, m.degree_reduce(AlgebraElement(m.group(), k)).coefficients());
    return out;
}

inline Rational network_rate(const NetworkCode& code) {
    const ModuleContext& ctx = code.context();
    if (ctx.is_scalar()) return {1, 1};
    return {ctx.code().dimension(), ctx.symbol_length()};
}

}  // namespace permadd
