#include <cctype>
#include <sstream>

#include "palette/graph.hpp"

namespace palette {

namespace {

constexpr int kBias = 63;
constexpr char kHeaderPrefix[] = ">>graph6<<";

std::string strip_trailing(const std::string& s) {
    std::size_t end = s.size();
    while (end > 0 && (s[end - 1] == '\n' || s[end - 1] == '\r' || s[end - 1] == ' ')) --end;
    return s.substr(0, end);
}

int sextet_at(const std::string& s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("truncated graph6 payload", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", pos);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = strip_trailing(text);
    std::size_t pos = 0;
    if (s.rfind(kHeaderPrefix, 0) == 0) pos = sizeof(kHeaderPrefix) - 1;
    if (pos >= s.size()) throw ParseError("empty graph6 string", pos);

    long long n;
    if (static_cast<unsigned char>(s[pos]) != 126) {
        n = sextet_at(s, pos);
        ++pos;
    } else {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw ParseError("graph6 vertex counts >= 2^18 not supported", pos);
        n = 0;
        for (int i = 0; i < 3; ++i) {
            n = (n << 6) | sextet_at(s, pos);
            ++pos;
        }
    }
    if (n >= (1 << 16)) throw ParseError("graph6 vertex count >= 2^16 not supported", pos);

    std::vector<std::pair<int, int>> edges;
    int bits_left = 0;
    int current = 0;
    std::size_t current_pos = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current_pos = pos;
                current = sextet_at(s, pos);
                ++pos;
                bits_left = 6;
            }
            if (current & (1 << (bits_left - 1))) edges.push_back({i, j});
            --bits_left;
        }
    }
    // Remaining bits in the last group must be zero padding.
    if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
        throw ParseError("nonzero padding bits in graph6 payload", current_pos);
    if (pos != s.size()) throw ParseError("trailing characters after graph6 payload", pos);
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    if (g.n >= (1 << 16)) throw InputError("graph6 vertex count >= 2^16 not supported");
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((g.n & 63) + kBias));
    }
    std::vector<std::vector<bool>> adj_mat(static_cast<std::size_t>(g.n),
                                           std::vector<bool>(static_cast<std::size_t>(g.n), false));
    for (auto [u, v] : g.edges) {
        adj_mat[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj_mat[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj_mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    struct Line {
        std::size_t number;
        long long a, b;
    };
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string trimmed = raw;
        std::size_t first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        std::istringstream ls(trimmed);
        long long a, b;
        std::string extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw ParseError("expected two non-negative integers", line_no);
        if (a < 0 || b < 0) throw ParseError("negative vertex id", line_no);
        lines.push_back({line_no, a, b});
    }

    // First line is treated as an "n m" header when m matches the number of
    // remaining lines and no later endpoint exceeds n-1.
    std::size_t start = 0;
    long long declared_n = -1;
    if (!lines.empty() && lines[0].b >= 1 &&
        lines[0].b == static_cast<long long>(lines.size()) - 1) {
        bool fits = true;
        for (std::size_t i = 1; i < lines.size(); ++i)
            if (lines[i].a >= lines[0].a || lines[i].b >= lines[0].a) fits = false;
        if (fits) {
            declared_n = lines[0].a;
            start = 1;
        }
    }

    long long n = declared_n;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = start; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.a == ln.b) throw ParseError("self-loop", ln.number);
        if (ln.a >= (1 << 16) || ln.b >= (1 << 16))
            throw ParseError("vertex id >= 2^16 not supported", ln.number);
        n = std::max({n, ln.a + 1, ln.b + 1});
        edges.push_back({static_cast<int>(ln.a), static_cast<int>(ln.b)});
    }
    if (n < 0) n = 0;
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const InputError& e) {
        // Recover the offending line for duplicate-edge reports.
        std::vector<std::pair<int, int>> seen;
        for (std::size_t i = start; i < lines.size(); ++i) {
            int a = static_cast<int>(lines[i].a), b = static_cast<int>(lines[i].b);
            if (a > b) std::swap(a, b);
            for (auto& p : seen)
                if (p.first == a && p.second == b) throw ParseError("duplicate edge", lines[i].number);
            seen.push_back({a, b});
        }
        throw ParseError(e.what(), 0);
    }
}

}  // namespace palette
