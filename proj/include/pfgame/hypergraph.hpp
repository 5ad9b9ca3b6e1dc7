#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pfgame/node_set.hpp"

namespace pfgame {

/// Hyperarc with a single-node head; the head never belongs to the tail.
struct Hyperarc {
    NodeSet tail;
    std::size_t head = 0;

    friend bool operator==(const Hyperarc&, const Hyperarc&) = default;
};

class Hypergraph {
public:
    explicit Hypergraph(std::size_t n, std::vector<Hyperarc> arcs = {});

    std::size_t size() const { return n_; }
    const std::vector<Hyperarc>& arcs() const { return arcs_; }

    /// Keeps, for every head, only the inclusion-minimal tails.
    Hypergraph minimal() const;

    /// Arcs sorted by (head, tail in enumeration order).
    Hypergraph sorted() const;

    /// True when every tail is a singleton.
    bool is_digraph() const;

private:
    std::size_t n_;
    std::vector<Hyperarc> arcs_;
};

struct Digraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;

    Hypergraph as_hypergraph() const;  // self-loops are dropped
    static Digraph from_hypergraph(const Hypergraph& h);
};

/// Lazy hypergraph: fires(J, i) answers whether (J, {i}) is a hyperarc.
/// Answers must be monotone in J.
struct HeadOracle {
    std::size_t n = 0;
    std::function<bool(NodeSet, std::size_t)> fires;

    /// Oracle whose yes-pairs are the (J, i) with some arc tail ⊆ J and head i.
    static HeadOracle of(const Hypergraph& h);
};

/// Smallest invariant superset of start (forward chaining).
NodeSet reach(const Hypergraph& h, NodeSet start);

/// Oracle-backed closure: each round re-tests only non-members against the
/// grown set; at most n^2 oracle calls. When oracle_calls is given, the
/// number of calls is added to it.
NodeSet reach(const HeadOracle& oracle, NodeSet start, std::uint64_t* oracle_calls = nullptr);

bool is_invariant(const Hypergraph& h, NodeSet set);
bool is_invariant(const HeadOracle& oracle, NodeSet set, std::uint64_t* oracle_calls = nullptr);

/// Strongly connected components (Tarjan), each sorted, listed in reverse
/// topological order of the condensation.
std::vector<NodeSet> strongly_connected_components(const Digraph& g);

/// SCCs without outgoing arcs, sorted by smallest member.
std::vector<NodeSet> final_classes(const Digraph& g);

struct DotOptions {
    bool minimal = false;
    std::string name = "H";
};

/// GraphViz rendering with 1-based node labels. Hyperarcs with two or more
/// tail nodes go through an auxiliary point node.
std::string to_dot(const Hypergraph& h, const DotOptions& opts = {});
std::string to_dot(const Digraph& g, const DotOptions& opts = {});

/// {"n": n, "hyperarcs": [{"tail": [...], "head": h}]} with 1-based labels.
std::string to_json(const Hypergraph& h);

}  // namespace pfgame
