#include "fixig/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace fixig::io {

ParseError::ParseError(int line_number, const std::string& what)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
      line(line_number) {}

namespace {

struct Token {
    long long value;
    int line;
};

// Whitespace-separated integers with '#'-to-end-of-line comments.
std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        while (ls >> word) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(word, &used);
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected integer, got '" + word + "'");
            }
            if (used != word.size())
                throw ParseError(line_no, "expected integer, got '" + word + "'");
            out.push_back({v, line_no});
        }
    }
    return out;
}

} // namespace

Graph parse_graph(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.size() < 2) throw ParseError(1, "expected header 'n m'");
    long long n = tokens[0].value, m = tokens[1].value;
    if (n < 0 || n > kMaxVertices)
        throw ParseError(tokens[0].line, "vertex count out of range");
    if (m < 0) throw ParseError(tokens[1].line, "negative edge count");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m) {
        int at = tokens.empty() ? 1 : tokens.back().line;
        throw ParseError(at, "expected " + std::to_string(2 * m) + " edge endpoints, got " +
                                 std::to_string(tokens.size() - 2));
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        const Token& a = tokens[2 + 2 * i];
        const Token& b = tokens[3 + 2 * i];
        if (a.value < 0 || a.value >= n || b.value < 0 || b.value >= n)
            throw ParseError(a.line, "edge endpoint out of range");
        if (a.value == b.value) throw ParseError(a.line, "loop edge");
        edges.emplace_back(static_cast<int>(a.value), static_cast<int>(b.value));
    }
    return Graph::make(static_cast<int>(n), edges);
}

Graph read_graph(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

VertexFunction parse_function(const std::string& text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw ParseError(1, "empty vertex function");
    std::vector<int> images;
    images.reserve(tokens.size());
    for (const Token& t : tokens) {
        if (t.value < 0 || t.value >= static_cast<long long>(tokens.size()))
            throw ParseError(t.line, "image id out of range 0.." +
                                         std::to_string(tokens.size() - 1));
        images.push_back(static_cast<int>(t.value));
    }
    return VertexFunction::make(std::move(images));
}

std::string write_function(const VertexFunction& g) {
    std::ostringstream out;
    for (int i = 0; i < g.n; ++i) {
        if (i) out << ' ';
        out << g.images[i];
    }
    out << '\n';
    return out.str();
}

nlohmann::json graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

nlohmann::json function_json(const VertexFunction& g) {
    return {{"n", g.n}, {"images", g.images}};
}

nlohmann::json fixing_json(const FixingResult& r) {
    return {{"fix", r.fix},
            {"witness", r.witness},
            {"aut_order", r.aut_order},
            {"lower_bound", r.lower_bound_used}};
}

nlohmann::json resolving_json(const ResolvingResult& r) {
    return {{"beta", r.beta}, {"witness", r.witness}};
}

nlohmann::json group_json(const PermGroup& g, bool with_elements) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Perm& p : g.generators()) {
        std::vector<int> img(p.images().begin(), p.images().end());
        gens.push_back(img);
    }
    nlohmann::json out = {{"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
    if (with_elements) {
        nlohmann::json elems = nlohmann::json::array();
        for (std::uint64_t i = 0; i < g.order(); ++i) {
            auto e = g.element(i);
            elems.push_back(std::vector<int>(e.begin(), e.end()));
        }
        out["elements"] = elems;
    }
    return out;
}

} // namespace fixig::io
