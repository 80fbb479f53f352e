#include "core/io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "core/errors.hpp"

namespace oidrd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Whitespace-separated integers of one line; nullopt on a non-integer token.
std::optional<std::vector<long long>> line_numbers(std::string_view line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j) return std::nullopt;
        out.push_back(value);
        i = j;
    }
    return out;
}

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : s_(text) {}

    FamilySpec parse_all() {
        FamilySpec spec = graph();
        skip_space();
        if (pos_ != s_.size()) error("unexpected trailing text");
        return spec;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::parse, "generator string '" + std::string(s_) + "': " + what + " at offset " +
                                   std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) error(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    bool at_integer() {
        skip_space();
        return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-');
    }

    int integer() {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
        if (ec != std::errc{}) error("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return value;
    }

    FamilySpec graph() {
        const std::string name = word();
        if (name.empty()) error("expected a family name");
        auto tag = family_from_name(name);
        if (!tag) error("unknown family '" + name + "'");
        FamilySpec spec;
        spec.tag = *tag;
        if (*tag == Family::corona || *tag == Family::gadget) {
            expect('(');
            spec.children.push_back(graph());
            if (*tag == Family::corona) {
                expect(',');
                spec.children.push_back(graph());
            }
            expect(')');
            return spec;
        }
        expect(':');
        skip_space();
        if (!at_integer()) {
            spec.subcase = word();
            if (spec.subcase.empty()) error("expected a subcase or an integer");
            if (!peek(',')) return spec;
            ++pos_;
        }
        spec.params.push_back(integer());
        // a ',' followed by a non-integer belongs to an enclosing corona(...)
        while (peek(',')) {
            const std::size_t save = pos_;
            ++pos_;
            if (!at_integer()) {
                pos_ = save;
                break;
            }
            spec.params.push_back(integer());
        }
        return spec;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
    int line_no = 0;
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    long long declared = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        auto nums = line_numbers(line);
        const std::string where = "line " + std::to_string(line_no);
        if (!nums || nums->size() != 2)
            fail(ErrorKind::parse, where + ": expected two integers, found '" + std::string(line) + "'");
        if (!header) {
            header = std::make_pair((*nums)[0], (*nums)[1]);
            if (header->first < 0 || header->second < 0)
                fail(ErrorKind::parse, where + ": vertex and edge counts must be nonnegative");
            declared = header->second;
        } else {
            const long long n = header->first;
            const long long u = (*nums)[0], v = (*nums)[1];
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail(ErrorKind::parse, where + ": vertex out of range 0.." + std::to_string(n - 1));
            if (u == v) fail(ErrorKind::parse, where + ": self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        if (end == text.size()) break;
    }
    if (!header) fail(ErrorKind::parse, "missing 'n m' header line");
    if (static_cast<long long>(edges.size()) != declared)
        fail(ErrorKind::parse, "expected " + std::to_string(declared) + " edges, found " +
                                   std::to_string(edges.size()));
    return Graph(static_cast<int>(header->first), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text).parse_all(); }

std::string to_text(const FamilySpec& spec) {
    std::string out(family_name(spec.tag));
    if (!spec.children.empty()) {
        out += '(';
        for (std::size_t i = 0; i < spec.children.size(); ++i) {
            if (i) out += ',';
            out += to_text(spec.children[i]);
        }
        return out + ')';
    }
    out += ':';
    bool first = true;
    if (!spec.subcase.empty()) {
        out += spec.subcase;
        first = false;
    }
    for (int p : spec.params) {
        if (!first) out += ',';
        out += std::to_string(p);
        first = false;
    }
    return out;
}

Graph parse_graph(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) fail(ErrorKind::parse, "empty graph description");
    if (std::isdigit(static_cast<unsigned char>(t.front()))) return parse_edge_list(t);
    return family(parse_family_spec(t));
}

}  // namespace oidrd
