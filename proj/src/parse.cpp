#include "pfgame/parse.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <vector>

namespace pfgame {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? msg
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                         msg),
      line_(line), column_(column), detail_(msg) {}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t n, std::size_t line, std::size_t col0)
        : text_(text), n_(n), line_(line), col0_(col0) {}

    Expr parse_all() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, line_, col0_ + at + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        const std::size_t end = pos_ + w.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    std::optional<double> try_real() {
        skip_ws();
        std::size_t p = pos_;
        if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
        const std::size_t digits_start = p;
        while (p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '.')) ++p;
        if (p == digits_start) return std::nullopt;
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                p = q;
                while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
            }
        }
        std::size_t start = pos_;
        if (text_[start] == '+') ++start;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + p, v);
        if (ec != std::errc() || ptr != text_.data() + p) fail("malformed number");
        pos_ = p;
        return v;
    }

    double real() {
        auto v = try_real();
        if (!v) fail("expected a number");
        return *v;
    }

    double order_param() {
        skip_ws();
        if (accept_word("+inf") || accept_word("inf")) return std::numeric_limits<double>::infinity();
        if (accept_word("-inf")) return -std::numeric_limits<double>::infinity();
        return real();
    }

    template <class Build>
    Expr build(std::size_t at, Build&& b) {
        try {
            return b();
        } catch (const ExprError& e) {
            fail_at(e.what(), at);
        }
    }

    std::vector<Expr> list() {
        std::vector<Expr> out{parse_expr()};
        while (peek(',')) {
            ++pos_;
            out.push_back(parse_expr());
        }
        return out;
    }

    std::vector<std::pair<double, Expr>> wlist() {
        std::vector<std::pair<double, Expr>> out;
        do {
            if (!out.empty()) ++pos_;
            double w = real();
            expect(':');
            out.emplace_back(w, parse_expr());
        } while (peek(','));
        return out;
    }

    Expr parse_expr() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of expression");

        if (text_[pos_] == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            std::size_t idx = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), idx);
            if (ec != std::errc()) fail("malformed variable index");
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            if (idx == 0 || idx > n_)
                fail_at("variable x" + std::to_string(idx) + " outside 1.." + std::to_string(n_), at);
            return var(idx - 1);
        }
        for (auto [word, is_min] : {std::pair{"min", true}, std::pair{"max", false}}) {
            if (accept_word(word)) {
                expect('(');
                auto cs = list();
                expect(')');
                return build(at, [&] { return is_min ? min_of(std::move(cs)) : max_of(std::move(cs)); });
            }
        }
        if (accept_word("avg")) {
            expect('(');
            auto terms = wlist();
            expect(')');
            return build(at, [&] { return avg(std::move(terms)); });
        }
        if (accept_word("mean")) {
            expect('(');
            double r = order_param();
            expect(';');
            auto terms = wlist();
            expect(')');
            return build(at, [&] { return mean(r, std::move(terms)); });
        }
        for (auto [word, is_sup] : {std::pair{"supmix", true}, std::pair{"infmix", false}}) {
            if (accept_word(word)) {
                expect('(');
                Expr a = parse_expr();
                expect(',');
                Expr b = parse_expr();
                expect(')');
                return is_sup ? supmix(std::move(a), std::move(b)) : infmix(std::move(a), std::move(b));
            }
        }
        if (text_[pos_] == '(') {
            ++pos_;
            Expr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (auto c = try_real()) {
            expect('+');
            Expr child = parse_expr();
            return build(at, [&] { return shift(*c, std::move(child)); });
        }
        fail("expected an expression");
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t line_;
    std::size_t col0_;
    std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::size_t skip_spaces(std::string_view s, std::size_t p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    return p;
}

}  // namespace

Expr parse_expr(std::string_view text, std::size_t n) { return ExprParser(text, n, 1, 0).parse_all(); }

Operator parse_operator(std::string_view text) {
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Expr> coords;
    std::vector<std::size_t> defined_on;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = strip_comment(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        start = end + 1;
        if (blank(line)) {
            if (end == text.size()) break;
            continue;
        }

        std::size_t p = skip_spaces(line, 0);
        if (!have_header) {
            constexpr std::string_view kw = "operator";
            if (line.substr(p, kw.size()) != kw) throw ParseError("expected header 'operator n=<int>'", line_no, p + 1);
            p = skip_spaces(line, p + kw.size());
            if (line.substr(p, 2) != "n=") throw ParseError("expected 'n=<int>'", line_no, p + 1);
            p += 2;
            auto [ptr, ec] = std::from_chars(line.data() + p, line.data() + line.size(), n);
            if (ec != std::errc() || n == 0) throw ParseError("dimension must be a positive integer", line_no, p + 1);
            if (n > kMaxNodes) throw ParseError("dimension exceeds 64", line_no, p + 1);
            p = skip_spaces(line, static_cast<std::size_t>(ptr - line.data()));
            if (p != line.size()) throw ParseError("unexpected trailing input", line_no, p + 1);
            have_header = true;
            coords.assign(n, Expr{});
            defined_on.assign(n, 0);
            continue;
        }

        if (p >= line.size() || line[p] != 'T') throw ParseError("expected 'T<i> := <expr>'", line_no, p + 1);
        ++p;
        std::size_t idx = 0;
        auto [ptr, ec] = std::from_chars(line.data() + p, line.data() + line.size(), idx);
        if (ec != std::errc()) throw ParseError("expected coordinate index after 'T'", line_no, p + 1);
        if (idx == 0 || idx > n)
            throw ParseError("coordinate T" + std::to_string(idx) + " outside 1.." + std::to_string(n), line_no, p + 1);
        p = skip_spaces(line, static_cast<std::size_t>(ptr - line.data()));
        if (line.substr(p, 2) != ":=") throw ParseError("expected ':='", line_no, p + 1);
        p += 2;
        if (defined_on[idx - 1] != 0)
            throw ParseError("coordinate T" + std::to_string(idx) + " already defined on line " +
                                 std::to_string(defined_on[idx - 1]),
                             line_no, 1);
        coords[idx - 1] = ExprParser(line.substr(p), n, line_no, p).parse_all();
        defined_on[idx - 1] = line_no;
    }

    if (!have_header) throw ParseError("missing header 'operator n=<int>'", 0, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (!coords[i])
            throw ParseError("dimension mismatch: coordinate T" + std::to_string(i + 1) + " is not defined", 0, 0);
    return Operator(n, std::move(coords));
}

}  // namespace pfgame
