#include "qpa/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "qpa/errors.hpp"

namespace qpa {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges_1based)
    : n_(n) {
    if (n == 0) throw InputError("graph needs at least one vertex");
    for (auto [i, j] : edges_1based) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw InputError("edge endpoint out of range: (" + std::to_string(i) + "," +
                             std::to_string(j) + ") with n=" + std::to_string(n));
        if (i == j) throw InputError("self-loop rejected at vertex " + std::to_string(i));
        std::size_t a = i - 1, b = j - 1;
        if (a > b) std::swap(a, b);
        edge_set_.emplace(a, b);
    }
    edges_.assign(edge_set_.begin(), edge_set_.end());
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return edge_set_.count({i, j}) > 0;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::non_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

Graph Graph::with_edge_removed(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || !adjacent(i - 1, j - 1))
        throw InputError("cannot remove non-existent edge (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    std::vector<std::pair<std::size_t, std::size_t>> kept;
    for (auto [a, b] : edges_)
        if (!(a == std::min(i, j) - 1 && b == std::max(i, j) - 1)) kept.emplace_back(a + 1, b + 1);
    Graph g(n_, kept);
    g.desc_ = desc_ + "-e(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return g;
}

Graph family(GraphFamily kind, std::size_t n) {
    using P = std::pair<std::size_t, std::size_t>;
    std::vector<P> e;
    std::string name;
    switch (kind) {
        case GraphFamily::Path:
            if (n < 1) throw InputError("path requires n >= 1");
            for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, i + 1);
            name = "path:";
            break;
        case GraphFamily::Cycle:
            if (n < 3) throw InputError("cycle requires n >= 3");
            for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(1, n);
            name = "cycle:";
            break;
        case GraphFamily::Wheel:
            if (n < 4) throw InputError("wheel requires n >= 4");
            for (std::size_t i = 1; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(1, n - 1);
            for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, n);
            name = "wheel:";
            break;
        case GraphFamily::Star:
            if (n < 1) throw InputError("star requires n >= 1");
            for (std::size_t i = 1; i < n; ++i) e.emplace_back(i, n);
            name = "star:";
            break;
        case GraphFamily::Complete:
            if (n < 1) throw InputError("complete requires n >= 1");
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) e.emplace_back(i, j);
            name = "complete:";
            break;
        case GraphFamily::Empty:
            if (n < 1) throw InputError("empty requires n >= 1");
            name = "empty:";
            break;
    }
    Graph g(n, e);
    g.set_description(name + std::to_string(n));
    return g;
}

Graph family(const std::string& kind, std::size_t n) {
    if (kind == "path") return family(GraphFamily::Path, n);
    if (kind == "cycle") return family(GraphFamily::Cycle, n);
    if (kind == "wheel") return family(GraphFamily::Wheel, n);
    if (kind == "star") return family(GraphFamily::Star, n);
    if (kind == "complete") return family(GraphFamily::Complete, n);
    if (kind == "empty") return family(GraphFamily::Empty, n);
    throw InputError("unknown graph family '" + kind + "'");
}

Graph complement(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (auto [i, j] : g.non_edges()) e.emplace_back(i + 1, j + 1);
    Graph c(g.vertex_count(), e);
    c.set_description("~" + g.description());
    return c;
}

Graph strong_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t a = 0; a < ng; ++a)
        for (std::size_t x = 0; x < nh; ++x)
            for (std::size_t b = a; b < ng; ++b)
                for (std::size_t y = 0; y < nh; ++y) {
                    const std::size_t u = a * nh + x, v = b * nh + y;
                    if (v <= u) continue;
                    const bool gok = (a == b) || g.adjacent(a, b);
                    const bool hok = (x == y) || h.adjacent(x, y);
                    if (gok && hok) e.emplace_back(u + 1, v + 1);
                }
    Graph p(ng * nh, e);
    p.set_description(g.description() + "x" + h.description());
    return p;
}

namespace {

// Branch and bound over bitmask candidate sets; the bound is a greedy
// coloring of the candidates (clique size in P cannot exceed its chromatic
// number).
struct CliqueSearch {
    std::size_t n;
    std::vector<std::uint32_t> adj;
    std::size_t best = 0;
    std::uint32_t best_set = 0;
    std::uint32_t current = 0;

    std::size_t color_bound(std::uint32_t p) const {
        std::size_t colors = 0;
        while (p) {
            std::uint32_t uncolored = p;
            ++colors;
            while (uncolored) {
                const int v = std::countr_zero(uncolored);
                uncolored &= ~(std::uint32_t{1} << v);
                uncolored &= ~adj[v];
                p &= ~(std::uint32_t{1} << v);
            }
        }
        return colors;
    }

    void expand(std::uint32_t p, std::size_t size) {
        if (p == 0) {
            if (size > best) {
                best = size;
                best_set = current;
            }
            return;
        }
        if (size + color_bound(p) <= best) return;
        while (p) {
            if (size + std::size_t(std::popcount(p)) <= best) return;
            const int v = std::countr_zero(p);
            p &= ~(std::uint32_t{1} << v);
            current |= std::uint32_t{1} << v;
            expand(p & adj[v], size + 1);
            current &= ~(std::uint32_t{1} << v);
        }
    }
};

CliqueSearch run_clique_search(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 30)
        throw CapabilityError("clique search supports at most 30 vertices, got " +
                              std::to_string(n));
    CliqueSearch s;
    s.n = n;
    s.adj.assign(n, 0);
    for (auto [i, j] : g.edges()) {
        s.adj[i] |= std::uint32_t{1} << j;
        s.adj[j] |= std::uint32_t{1} << i;
    }
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    s.expand(all, 0);
    return s;
}

} // namespace

std::size_t clique_number(const Graph& g) { return run_clique_search(g).best; }

std::vector<std::size_t> maximum_clique(const Graph& g) {
    const CliqueSearch s = run_clique_search(g);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (s.best_set & (std::uint32_t{1} << v)) out.push_back(v);
    return out;
}

std::size_t independence_number(const Graph& g) { return clique_number(complement(g)); }

Graph read_edge_list(std::istream& in) {
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) throw InputError("edge list: expected header 'n m'");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t i = 0, j = 0;
        if (!(in >> i >> j)) throw InputError("edge list: truncated at edge " + std::to_string(k));
        e.emplace_back(i, j);
    }
    return Graph(n, e);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [i, j] : g.edges()) out << (i + 1) << " " << (j + 1) << "\n";
}

namespace {

Graph parse_term(const std::string& term) {
    if (!term.empty() && term[0] == '~') return complement(parse_term(term.substr(1)));
    const auto colon = term.find(':');
    if (colon != std::string::npos) {
        const std::string kind = term.substr(0, colon);
        const std::string num = term.substr(colon + 1);
        try {
            const long n = std::stol(num);
            if (n < 1) throw InputError("family size must be positive: " + term);
            return family(kind, static_cast<std::size_t>(n));
        } catch (const std::invalid_argument&) {
            throw InputError("bad family size in '" + term + "'");
        }
    }
    std::ifstream f(term);
    if (!f) throw InputError("graph spec '" + term + "' is neither family:size nor a readable file");
    Graph g = read_edge_list(f);
    g.set_description(std::filesystem::path(term).filename().string());
    return g;
}

} // namespace

Graph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw InputError("empty graph spec");
    // 'x' splits strong-product factors unless the spec names an existing file.
    if (std::filesystem::exists(spec)) return parse_term(spec);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    Graph acc = parse_term(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) acc = strong_product(acc, parse_term(parts[k]));
    return acc;
}

} // namespace qpa
