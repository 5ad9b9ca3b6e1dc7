#include "pfgame/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pfgame {

Hypergraph::Hypergraph(std::size_t n, std::vector<Hyperarc> arcs) : n_(n), arcs_(std::move(arcs)) {
    NodeSet::check_size(n);
    const NodeSet all = NodeSet::full(n);
    for (const auto& a : arcs_) {
        if (a.tail.empty()) throw std::invalid_argument("hyperarc tail must be nonempty");
        if (!a.tail.subset_of(all) || a.head >= n) throw std::invalid_argument("hyperarc node out of range");
        if (a.tail.contains(a.head)) throw std::invalid_argument("hyperarc head must not belong to its tail");
    }
}

Hypergraph Hypergraph::minimal() const {
    std::vector<Hyperarc> keep;
    for (const auto& a : arcs_) {
        bool dominated = std::any_of(arcs_.begin(), arcs_.end(), [&](const Hyperarc& b) {
            return b.head == a.head && b.tail != a.tail && b.tail.subset_of(a.tail);
        });
        bool duplicate = std::find(keep.begin(), keep.end(), a) != keep.end();
        if (!dominated && !duplicate) keep.push_back(a);
    }
    return Hypergraph(n_, std::move(keep)).sorted();
}

Hypergraph Hypergraph::sorted() const {
    auto arcs = arcs_;
    std::sort(arcs.begin(), arcs.end(), [](const Hyperarc& a, const Hyperarc& b) {
        if (a.head != b.head) return a.head < b.head;
        return enumeration_less(a.tail, b.tail);
    });
    return Hypergraph(n_, std::move(arcs));
}

bool Hypergraph::is_digraph() const {
    return std::all_of(arcs_.begin(), arcs_.end(), [](const Hyperarc& a) { return a.tail.size() == 1; });
}

Hypergraph Digraph::as_hypergraph() const {
    std::vector<Hyperarc> arcs;
    for (auto [i, j] : this->arcs)
        if (i != j) arcs.push_back({NodeSet::single(i), j});
    return Hypergraph(n, std::move(arcs));
}

Digraph Digraph::from_hypergraph(const Hypergraph& h) {
    if (!h.is_digraph()) throw std::invalid_argument("hypergraph has a tail with more than one node");
    Digraph g{h.size(), {}};
    for (const auto& a : h.arcs()) g.arcs.emplace_back(a.tail.front(), a.head);
    return g;
}

HeadOracle HeadOracle::of(const Hypergraph& h) {
    return {h.size(), [h](NodeSet tail, std::size_t head) {
                return std::any_of(h.arcs().begin(), h.arcs().end(), [&](const Hyperarc& a) {
                    return a.head == head && !tail.contains(head) && a.tail.subset_of(tail);
                });
            }};
}

NodeSet reach(const Hypergraph& h, NodeSet start) {
    if (start.empty()) throw std::invalid_argument("reach: start set must be nonempty");
    if (!start.subset_of(NodeSet::full(h.size()))) throw std::invalid_argument("reach: start set out of range");
    const auto& arcs = h.arcs();
    std::vector<std::vector<std::size_t>> watching(h.size());
    std::vector<std::size_t> missing(arcs.size());
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        missing[a] = arcs[a].tail.size();
        for (auto v : arcs[a].tail.members()) watching[v].push_back(a);
    }
    NodeSet reached = start;
    std::deque<std::size_t> queue;
    for (auto v : start.members()) queue.push_back(v);
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto a : watching[v]) {
            if (--missing[a] != 0) continue;
            auto head = arcs[a].head;
            if (!reached.contains(head)) {
                reached.insert(head);
                queue.push_back(head);
            }
        }
    }
    return reached;
}

NodeSet reach(const HeadOracle& oracle, NodeSet start, std::uint64_t* oracle_calls) {
    if (start.empty()) throw std::invalid_argument("reach: start set must be nonempty");
    const NodeSet all = NodeSet::full(oracle.n);
    if (!start.subset_of(all)) throw std::invalid_argument("reach: start set out of range");
    NodeSet current = start;
    std::uint64_t calls = 0;
    while (true) {
        NodeSet grown = current;
        for (auto i : current.complement(oracle.n).members()) {
            ++calls;
            if (oracle.fires(current, i)) grown.insert(i);
        }
        if (grown == current) break;
        current = grown;
    }
    if (oracle_calls) *oracle_calls += calls;
    return current;
}

bool is_invariant(const Hypergraph& h, NodeSet set) { return reach(h, set) == set; }

bool is_invariant(const HeadOracle& oracle, NodeSet set, std::uint64_t* oracle_calls) {
    // a single round decides invariance
    if (set.empty()) throw std::invalid_argument("is_invariant: set must be nonempty");
    std::uint64_t calls = 0;
    bool invariant = true;
    for (auto i : set.complement(oracle.n).members()) {
        ++calls;
        if (oracle.fires(set, i)) {
            invariant = false;
            break;
        }
    }
    if (oracle_calls) *oracle_calls += calls;
    return invariant;
}

std::vector<NodeSet> strongly_connected_components(const Digraph& g) {
    const std::size_t n = g.n;
    std::vector<std::vector<std::size_t>> succ(n);
    for (auto [i, j] : g.arcs) {
        if (i >= n || j >= n) throw std::invalid_argument("digraph arc out of range");
        succ[i].push_back(j);
    }
    for (auto& s : succ) std::sort(s.begin(), s.end());

    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<NodeSet> sccs;
    std::size_t counter = 0;

    // iterative Tarjan: frames hold (vertex, next successor position)
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < succ[v].size()) {
                auto w = succ[v][pos++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] == index[done]) {
                NodeSet comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.insert(w);
                } while (w != done);
                sccs.push_back(comp);
            }
        }
    }
    return sccs;
}

std::vector<NodeSet> final_classes(const Digraph& g) {
    auto sccs = strongly_connected_components(g);
    std::vector<NodeSet> finals;
    for (auto c : sccs) {
        bool closed = std::none_of(g.arcs.begin(), g.arcs.end(),
                                   [&](auto arc) { return c.contains(arc.first) && !c.contains(arc.second); });
        if (closed) finals.push_back(c);
    }
    std::sort(finals.begin(), finals.end(), [](NodeSet a, NodeSet b) { return a.front() < b.front(); });
    return finals;
}

std::string to_dot(const Hypergraph& h, const DotOptions& opts) {
    const Hypergraph g = opts.minimal ? h.minimal() : h.sorted();
    std::ostringstream os;
    os << "digraph " << opts.name << " {\n";
    if (g.size() > 0) {
        os << "  node [shape=circle];\n";
        for (std::size_t i = 0; i < g.size(); ++i) os << "  " << i + 1 << ";\n";
    }
    std::size_t aux = 0;
    for (const auto& a : g.arcs()) {
        if (a.tail.size() == 1) {
            os << "  " << a.tail.front() + 1 << " -> " << a.head + 1 << ";\n";
            continue;
        }
        const std::string hub = "h" + std::to_string(aux++);
        os << "  " << hub << " [shape=point];\n";
        for (auto t : a.tail.labels()) os << "  " << t << " -> " << hub << " [arrowhead=none];\n";
        os << "  " << hub << " -> " << a.head + 1 << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const Digraph& g, const DotOptions& opts) {
    std::ostringstream os;
    os << "digraph " << opts.name << " {\n";
    if (g.n > 0) {
        os << "  node [shape=circle];\n";
        for (std::size_t i = 0; i < g.n; ++i) os << "  " << i + 1 << ";\n";
    }
    auto arcs = g.arcs;
    std::sort(arcs.begin(), arcs.end());
    for (auto [i, j] : arcs) os << "  " << i + 1 << " -> " << j + 1 << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const Hypergraph& h) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : h.arcs()) arcs.push_back({{"tail", a.tail.labels()}, {"head", a.head + 1}});
    return nlohmann::json{{"n", h.size()}, {"hyperarcs", arcs}}.dump();
}

}  // namespace pfgame
