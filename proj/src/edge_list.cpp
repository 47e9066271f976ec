#include "distcent/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "distcent/error.hpp"

namespace distcent {

Node NodeLabelMap::intern(std::string_view label) {
    std::string key(label);
    if (auto it = index_.find(key); it != index_.end()) {
        return it->second;
    }
    const auto idx = static_cast<Node>(labels_.size());
    labels_.push_back(key);
    index_.emplace(std::move(key), idx);
    return idx;
}

std::optional<Node> NodeLabelMap::find(std::string_view label) const {
    if (auto it = index_.find(std::string(label)); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
    double w = 0.0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, w);
    if (ec != std::errc{} || ptr != end || !std::isfinite(w)) {
        throw ParseError(line_no, "malformed weight '" + std::string(tok) + "'");
    }
    if (!(w > 0.0)) {
        throw ParseError(line_no, "non-positive weight " + std::string(tok));
    }
    return w;
}

}  // namespace

LabeledGraph read_edge_list(std::istream& in, bool weighted) {
    LabeledGraph out;
    std::vector<Graph::Edge> edges;
    std::set<std::pair<Node, Node>> seen;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw ParseError(line_no, "expected 'u v' or 'u v w', got " + std::to_string(tokens.size()) + " fields");
        }
        if (weighted && tokens.size() != 3) {
            throw ParseError(line_no, "missing weight column in weighted edge list");
        }
        double w = 1.0;
        if (tokens.size() == 3) {
            const double parsed = parse_weight(tokens[2], line_no);
            if (weighted) w = parsed;
        }
        if (tokens[0] == tokens[1]) {
            throw ParseError(line_no, "self-loop on '" + std::string(tokens[0]) + "'");
        }
        const Node u = out.labels.intern(tokens[0]);
        const Node v = out.labels.intern(tokens[1]);
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            throw ParseError(line_no, "duplicate edge '" + std::string(tokens[0]) + "' - '" +
                                          std::string(tokens[1]) + "'");
        }
        edges.push_back({u, v, w});
    }
    if (in.bad()) {
        throw Error("read error after line " + std::to_string(line_no));
    }
    out.graph = Graph::from_edges(out.labels.size(), edges);
    return out;
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelMap& labels) {
    char buf[64];
    for (const auto& e : g.edges()) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.weight);
        out << labels.label(e.u) << ' ' << labels.label(e.v) << ' ' << std::string_view(buf, ptr - buf) << '\n';
    }
}

}  // namespace distcent
