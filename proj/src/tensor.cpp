#include "pfgame/tensor.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pfgame/parse.hpp"

namespace pfgame {

namespace {

void check_rows(std::size_t order, std::size_t dim, const std::vector<std::vector<std::size_t>>& idx) {
    if (order < 2) throw std::invalid_argument("tensor order must be at least 2");
    if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
    NodeSet::check_size(dim);
    std::set<std::vector<std::size_t>> seen;
    std::vector<bool> has_row(dim, false);
    for (const auto& ix : idx) {
        if (ix.size() != order) throw std::invalid_argument("tensor entry has wrong number of indices");
        for (auto i : ix)
            if (i >= dim) throw std::invalid_argument("tensor index out of range");
        if (!seen.insert(ix).second) throw std::invalid_argument("duplicate tensor entry");
        has_row[ix[0]] = true;
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (!has_row[i])
            throw std::invalid_argument("row " + std::to_string(i + 1) +
                                        " has no positive entry; its coordinate would be identically zero");
}

}  // namespace

void Tensor::validate() const {
    std::vector<std::vector<std::size_t>> idx;
    for (const auto& e : entries) {
        if (!(e.value > 0.0) || !std::isfinite(e.value))
            throw std::invalid_argument("tensor entries must be positive and finite");
        idx.push_back(e.index);
    }
    check_rows(order, dim, idx);
}

TensorPattern TensorPattern::of(const Tensor& t) {
    TensorPattern p{t.order, t.dim, {}};
    for (const auto& e : t.entries) p.entries.push_back(e.index);
    return p;
}

void TensorPattern::validate() const { check_rows(order, dim, entries); }

Tensor parse_tensor(std::string_view text) {
    Tensor t;
    bool have_header = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;

        auto as_size = [&](const std::string& s, const char* what) {
            std::size_t v = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || p != s.data() + s.size())
                throw ParseError(std::string("expected ") + what + ", got '" + s + "'", line_no, 1);
            return v;
        };

        if (!have_header) {
            if (tok.size() != 3 || tok[0] != "tensor") throw ParseError("expected header 'tensor d n'", line_no, 1);
            t.order = as_size(tok[1], "tensor order");
            t.dim = as_size(tok[2], "tensor dimension");
            if (t.order < 2) throw ParseError("tensor order must be at least 2", line_no, 1);
            if (t.dim == 0 || t.dim > kMaxNodes) throw ParseError("tensor dimension must be in 1..64", line_no, 1);
            have_header = true;
            continue;
        }
        if (tok.size() != t.order + 1)
            throw ParseError("expected " + std::to_string(t.order) + " indices and a value", line_no, 1);
        TensorEntry e;
        for (std::size_t k = 0; k < t.order; ++k) {
            auto i = as_size(tok[k], "index");
            if (i == 0 || i > t.dim)
                throw ParseError("index " + tok[k] + " outside 1.." + std::to_string(t.dim), line_no, 1);
            e.index.push_back(i - 1);
        }
        const auto& vs = tok.back();
        auto [p, ec] = std::from_chars(vs.data(), vs.data() + vs.size(), e.value);
        if (ec != std::errc() || p != vs.data() + vs.size()) throw ParseError("malformed value '" + vs + "'", line_no, 1);
        if (!(e.value > 0.0)) throw ParseError("tensor values must be positive (omit zero entries)", line_no, 1);
        t.entries.push_back(std::move(e));
    }
    if (!have_header) throw ParseError("missing header 'tensor d n'", 0, 0);
    try {
        t.validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what(), 0, 0);
    }
    return t;
}

std::vector<double> apply_tensor(const Tensor& t, std::span<const double> x) {
    if (x.size() != t.dim) throw std::invalid_argument("apply_tensor: vector length does not match dimension");
    std::vector<double> out(t.dim, 0.0);
    for (const auto& e : t.entries) {
        double term = e.value;
        for (std::size_t k = 1; k < e.index.size(); ++k) term *= x[e.index[k]];
        out[e.index[0]] += term;
    }
    return out;
}

Operator tensor_to_operator(const Tensor& t) {
    t.validate();
    const double degree = static_cast<double>(t.order - 1);
    std::vector<std::vector<const TensorEntry*>> rows(t.dim);
    for (const auto& e : t.entries) rows[e.index[0]].push_back(&e);

    std::vector<Expr> coords;
    for (std::size_t i = 0; i < t.dim; ++i) {
        double total = 0.0;
        for (auto* e : rows[i]) total += e->value;
        std::vector<std::pair<double, Expr>> terms;
        for (auto* e : rows[i]) {
            // (x_{i2} + ... + x_{id}) / (d-1), merging repeated indices
            std::map<std::size_t, double> w;
            for (std::size_t k = 1; k < e->index.size(); ++k) w[e->index[k]] += 1.0 / degree;
            Expr monomial;
            if (w.size() == 1) {
                monomial = var(w.begin()->first);
            } else {
                std::vector<std::pair<double, Expr>> parts;
                for (auto [j, wj] : w) parts.emplace_back(wj, var(j));
                monomial = avg(std::move(parts));
            }
            terms.emplace_back(e->value / total, std::move(monomial));
        }
        // weights e->value / total may miss 1 by rounding; renormalize through the builder's tolerance
        double sum = 0.0;
        for (auto& [w, _] : terms) sum += w;
        for (auto& [w, _] : terms) w /= sum;
        Expr body = mean(degree, std::move(terms));
        coords.push_back(shift(std::log(total) / degree, std::move(body)));
    }
    return Operator(t.dim, std::move(coords)).with_convexity(Convexity::Convex);
}

}  // namespace pfgame
