#include "gcx/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gcx {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.a < 1 || e.a > n_ || e.b < 1 || e.b > n_)
            throw std::invalid_argument("edge label out of range 1..n");
        if (e.a == e.b) throw std::invalid_argument("tadpole edge");
        for (std::size_t j = 0; j < i; ++j)
            if (same_edge(edges_[j], e)) throw std::invalid_argument("duplicate edge");
    }
}

int Graph::valency(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex label out of range");
    int d = 0;
    for (const Edge& e : edges_)
        if (e.a == v || e.b == v) ++d;
    return d;
}

int Graph::min_valency() const {
    std::vector<int> deg(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++deg[e.a];
        ++deg[e.b];
    }
    int m = deg[1];
    for (int v = 2; v <= n_; ++v) m = std::min(m, deg[v]);
    return m;
}

bool Graph::connected() const {
    if (n_ == 1) return true;
    std::vector<std::vector<int>> adj(n_ + 1);
    for (const Edge& e : edges_) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(n_ + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

bool operator==(const Graph& x, const Graph& y) {
    if (x.vertex_count() != y.vertex_count()) return false;
    if (x.edge_count() != y.edge_count()) return false;
    for (int i = 0; i < x.edge_count(); ++i)
        if (!same_edge(x.edges()[i], y.edges()[i])) return false;
    return true;
}

bool GraphLess::operator()(const Graph& x, const Graph& y) const {
    if (x.vertex_count() != y.vertex_count()) return x.vertex_count() < y.vertex_count();
    if (x.edge_count() != y.edge_count()) return x.edge_count() < y.edge_count();
    for (int i = 0; i < x.edge_count(); ++i) {
        const Edge &e = x.edges()[i], &f = y.edges()[i];
        if (e.lo() != f.lo()) return e.lo() < f.lo();
        if (e.hi() != f.hi()) return e.hi() < f.hi();
    }
    return false;
}

Graph wheel(int k) {
    if (k < 3) throw std::invalid_argument("wheel needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.push_back({i, i == k ? 1 : i + 1});
    for (int i = 1; i <= k; ++i) edges.push_back({i, k + 1});
    return Graph(k + 1, std::move(edges));
}

namespace {

bool parse_label(const std::string& s, int& out) {
    if (s.empty() || s.size() > 6) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    out = std::stoi(s);
    return true;
}

}  // namespace

std::pair<Rational, Graph> parse_term(const std::string& line) {
    auto semi = line.find(';');
    if (semi == std::string::npos) throw ParseError("term line has no ';' separator");
    std::string coeff_part = line.substr(0, semi);
    std::string edge_part = line.substr(semi + 1);

    std::istringstream cs(coeff_part);
    std::string coeff_tok, extra;
    if (!(cs >> coeff_tok)) throw ParseError("missing coefficient");
    if (cs >> extra) throw ParseError("unexpected token '" + extra + "' before ';'");
    Rational coeff = parse_rational(coeff_tok);

    std::vector<Edge> edges;
    int n = 0;
    std::istringstream es(edge_part);
    std::string tok;
    while (es >> tok) {
        if (tok[0] == 'v') {
            int k;
            if (!parse_label(tok.substr(1), k) || k < 1)
                throw ParseError("malformed vertex-count token '" + tok + "'");
            n = std::max(n, k);
            continue;
        }
        int i, j;
        if (auto dash = tok.find('-'); dash != std::string::npos) {
            if (!parse_label(tok.substr(0, dash), i) || !parse_label(tok.substr(dash + 1), j))
                throw ParseError("malformed edge token '" + tok + "'");
        } else if (tok.size() == 2 && std::isdigit(static_cast<unsigned char>(tok[0])) &&
                   std::isdigit(static_cast<unsigned char>(tok[1]))) {
            i = tok[0] - '0';
            j = tok[1] - '0';
        } else {
            throw ParseError("malformed edge token '" + tok + "'");
        }
        if (i == 0 || j == 0) throw ParseError("vertex label 0 in token '" + tok + "'");
        if (i == j) throw ParseError("tadpole in token '" + tok + "'");
        for (const Edge& e : edges)
            if (same_edge(e, {i, j})) throw ParseError("duplicate edge token '" + tok + "'");
        edges.push_back({i, j});
        n = std::max({n, i, j});
    }
    if (n == 0) throw ParseError("term has no edges and no v<k> token");
    return {coeff, Graph(n, std::move(edges))};
}

std::string serialize_edge_field(const Graph& g) {
    std::string out;
    int max_label = 0;
    for (const Edge& e : g.edges()) {
        if (!out.empty()) out += ' ';
        if (e.a <= 9 && e.b <= 9)
            out += std::to_string(e.a) + std::to_string(e.b);
        else
            out += std::to_string(e.a) + "-" + std::to_string(e.b);
        max_label = std::max(max_label, e.hi());
    }
    if (g.vertex_count() > max_label) {
        if (!out.empty()) out += ' ';
        out += "v" + std::to_string(g.vertex_count());
    }
    return out;
}

std::string serialize_term(const Rational& coeff, const Graph& g) {
    return to_string(coeff) + " ; " + serialize_edge_field(g);
}

std::vector<std::pair<Rational, Graph>> parse_sum_text(const std::string& text) {
    std::vector<std::pair<Rational, Graph>> terms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        terms.push_back(parse_term(line));
    }
    return terms;
}

}  // namespace gcx
