#include "gcx/algebra.hpp"

#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace gcx {

namespace {

// Runs fn(0..count-1) on up to `threads` workers; results must be written to
// per-index slots by the caller.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int k = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(k);
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

const Graph& edge_graph() {
    static const Graph e(2, {{1, 2}});
    return e;
}

const Graph& dot_graph() {
    static const Graph d(1, {});
    return d;
}

Rational GraphSum::coefficient_of(const Graph& raw) const {
    CanonicalResult cr = canonicalize(raw);
    if (cr.zero) return 0;
    auto it = terms_.find(cr.graph);
    if (it == terms_.end()) return 0;
    return it->second * cr.sign;
}

std::vector<Term> insert(const Graph& g1, const Graph& g2) {
    if (!g1.connected() || !g2.connected())
        throw std::invalid_argument("insertion requires connected graphs");
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<Term> out;
    for (int v = 1; v <= n2; ++v) {
        // Labels: g2's vertices < v unchanged, g1's block at v..v+n1-1,
        // g2's vertices > v shifted up by n1-1.
        auto host = [&](int w) { return w < v ? w : w + n1 - 1; };
        std::vector<int> incident;
        for (int k = 0; k < g2.edge_count(); ++k) {
            const Edge& e = g2.edges()[k];
            if (e.a == v || e.b == v) incident.push_back(k);
        }
        const int deg = static_cast<int>(incident.size());
        std::vector<int> attach(deg, 1);  // current map: incident edge -> g1 vertex
        while (true) {
            std::vector<Edge> edges;
            edges.reserve(g1.edge_count() + g2.edge_count());
            for (const Edge& e : g1.edges()) edges.push_back({e.a + v - 1, e.b + v - 1});
            int slot = 0;
            for (int k = 0; k < g2.edge_count(); ++k) {
                const Edge& e = g2.edges()[k];
                if (e.a == v || e.b == v) {
                    int target = attach[slot++] + v - 1;
                    edges.push_back({e.a == v ? target : host(e.a), e.b == v ? target : host(e.b)});
                } else {
                    edges.push_back({host(e.a), host(e.b)});
                }
            }
            out.push_back({Rational(1), Graph(n1 + n2 - 1, std::move(edges))});
            int d = 0;
            while (d < deg && attach[d] == n1) attach[d++] = 1;
            if (d == deg) break;
            ++attach[d];
        }
    }
    return out;
}

std::vector<Term> bracket(const Graph& g1, const Graph& g2) {
    std::vector<Term> out = insert(g1, g2);
    // -(-1)^(#E1 * #E2)
    Rational s = (g1.edge_count() * g2.edge_count()) % 2 == 0 ? -1 : 1;
    for (Term& t : insert(g2, g1)) out.push_back({s * t.coeff, std::move(t.graph)});
    return out;
}

GraphSum reduce(const std::vector<Term>& terms) {
    GraphSum out;
    for (const Term& t : terms) {
        CanonicalResult cr = canonicalize(t.graph);
        if (cr.zero) continue;
        Rational contribution = t.coeff * cr.sign;
        auto [it, inserted] = out.terms_.try_emplace(std::move(cr.graph), contribution);
        if (!inserted) it->second += contribution;
    }
    for (auto it = out.terms_.begin(); it != out.terms_.end();)
        it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
    return out;
}

GraphSum add(const GraphSum& s1, const GraphSum& s2) {
    GraphSum out = s1;
    for (const auto& [g, c] : s2.terms()) {
        auto [it, inserted] = out.terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

GraphSum scale(const Rational& c, const GraphSum& s) {
    GraphSum out;
    if (c == 0) return out;
    for (const auto& [g, v] : s.terms()) out.terms_.emplace(g, c * v);
    return out;
}

GraphSum differential(const GraphSum& s, int threads) {
    std::vector<const std::pair<const Graph, Rational>*> items;
    items.reserve(s.size());
    for (const auto& kv : s.terms()) items.push_back(&kv);
    std::vector<GraphSum> parts(items.size());
    parallel_for(items.size(), threads, [&](std::size_t i) {
        parts[i] = scale(items[i]->second, reduce(bracket(edge_graph(), items[i]->first)));
    });
    GraphSum out;
    for (const GraphSum& p : parts) out = add(out, p);
    return out;
}

GraphSum bracket_sum(const GraphSum& s1, const GraphSum& s2, int threads) {
    std::vector<std::pair<const std::pair<const Graph, Rational>*,
                          const std::pair<const Graph, Rational>*>>
        pairs;
    for (const auto& kv1 : s1.terms())
        for (const auto& kv2 : s2.terms()) pairs.push_back({&kv1, &kv2});
    std::vector<GraphSum> parts(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) {
        const auto& [p1, p2] = pairs[i];
        parts[i] = scale(p1->second * p2->second, reduce(bracket(p1->first, p2->first)));
    });
    GraphSum out;
    for (const GraphSum& p : parts) out = add(out, p);
    return out;
}

GraphSum sum_from_raw(const std::vector<std::pair<Rational, Graph>>& raw) {
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (const auto& [c, g] : raw)
        if (c != 0) terms.push_back({c, g});
    return reduce(terms);
}

std::string serialize_sum(const GraphSum& s) {
    if (s.empty()) return "# empty sum\n";
    std::string out;
    for (const auto& [g, c] : s.terms()) {
        out += serialize_term(c, g);
        out += '\n';
    }
    return out;
}

}  // namespace gcx
