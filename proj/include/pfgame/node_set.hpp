#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfgame {

/// Largest node count representable by NodeSet.
inline constexpr std::size_t kMaxNodes = 64;

/// Subset of [0, n) stored as a fixed-width bitmask. Indices are 0-based.
class NodeSet {
public:
    constexpr NodeSet() = default;
    constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
    NodeSet(std::initializer_list<std::size_t> members) {
        for (auto m : members) insert(m);
    }

    static NodeSet full(std::size_t n) {
        check_size(n);
        return NodeSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static NodeSet single(std::size_t i) { return NodeSet(bit(i)); }
    static NodeSet from_vector(const std::vector<std::size_t>& v) {
        NodeSet s;
        for (auto i : v) s.insert(i);
        return s;
    }

    static void check_size(std::size_t n) {
        if (n > kMaxNodes)
            throw std::length_error("node sets support at most 64 nodes, got " + std::to_string(n));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U); }

    void insert(std::size_t i) { bits_ |= bit(i); }
    void erase(std::size_t i) { bits_ &= ~bit(i); }

    NodeSet complement(std::size_t n) const { return NodeSet(full(n).bits_ & ~bits_); }
    constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest member; the set must be nonempty.
    std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    /// Members shifted to 1-based labels, for human-facing output.
    std::vector<std::size_t> labels() const {
        auto out = members();
        for (auto& m : out) ++m;
        return out;
    }

    friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
    friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
    friend constexpr bool operator==(NodeSet a, NodeSet b) = default;

    /// Orders sets by popcount first, then lexicographically on sorted members.
    friend bool enumeration_less(NodeSet a, NodeSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        auto x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            auto lx = std::countr_zero(x), ly = std::countr_zero(y);
            if (lx != ly) return lx < ly;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    }

private:
    static std::uint64_t bit(std::size_t i) {
        if (i >= 64) throw std::out_of_range("node index out of range: " + std::to_string(i));
        return std::uint64_t{1} << i;
    }

    std::uint64_t bits_ = 0;
};

/// "{1,2,3}" with 1-based labels.
std::string to_string(NodeSet s);

/// Calls fn(S) for every subset of [0, n) of size k, in lexicographic order of
/// sorted members. fn returns false to stop; the return value reports whether
/// the enumeration ran to completion.
template <class Fn>
bool for_each_subset_of_size(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        NodeSet s;
        for (auto i : idx) s.insert(i);
        if (!fn(s)) return false;
        // advance to next combination
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + (pos - 1)) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Nonempty subsets of [0, n) in (popcount, lexicographic) order; proper
/// subsets only unless include_full.
template <class Fn>
bool for_each_subset(std::size_t n, bool include_full, Fn&& fn) {
    const std::size_t top = include_full ? n : (n == 0 ? 0 : n - 1);
    for (std::size_t k = 1; k <= top; ++k)
        if (!for_each_subset_of_size(n, k, fn)) return false;
    return true;
}

}  // namespace pfgame
