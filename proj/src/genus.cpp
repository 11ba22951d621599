#include "torus/genus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "rotation_search.hpp"
#include "torus/canonical.hpp"
#include "torus/errors.hpp"

namespace torus {

RotationEmbedding trace_faces(const Graph& g, const RotationSystem& rotation) {
    const int n = g.order();
    if (static_cast<int>(rotation.order.size()) != n) throw InputError("rotation must list every vertex");
    // slot[v][u]: position of u in the rotation at v.
    std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) {
        const auto& around = rotation.order[v];
        if (static_cast<int>(around.size()) != g.degree(v))
            throw InputError("rotation at vertex " + std::to_string(v) + " has the wrong length");
        for (std::size_t i = 0; i < around.size(); ++i) {
            int u = around[i];
            if (u < 0 || u >= n || !g.has_edge(u, v) || slot[v][u] >= 0)
                throw InputError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
            slot[v][u] = static_cast<int>(i);
        }
    }
    RotationEmbedding out{g, rotation, {}, 0};
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (used[u][v]) continue;
            std::vector<int> face;
            int a = u, b = v;
            while (!used[a][b]) {
                used[a][b] = 1;
                face.push_back(a);
                const auto& around = rotation.order[b];
                int c = around[(slot[b][a] + 1) % around.size()];
                a = b;
                b = c;
            }
            if (a != u || b != v) throw PreconditionError("face walk did not close");
            out.faces.push_back(std::move(face));
        }
    int nontrivial = 0, covered = 0;
    for (const auto& comp : connected_components(g))
        if (comp.size() > 1) {
            ++nontrivial;
            covered += static_cast<int>(comp.size());
        }
    const int twice = 2 * nontrivial - covered + g.size() - static_cast<int>(out.faces.size());
    if (twice < 0 || twice % 2 != 0) throw PreconditionError("Euler formula violated by traced faces");
    out.genus = twice / 2;
    return out;
}

std::uint64_t rotation_space_size(const Graph& g) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (int v = 0; v < g.order(); ++v)
        for (int k = 2; k < g.degree(v); ++k) {
            if (total > cap / k) return cap;
            total *= k;
        }
    return total;
}

int min_genus(const Graph& g, const OracleOptions& options) {
    return options.parallel ? parallel::min_genus(g, options.budget) : serial::min_genus(g, options.budget);
}

std::optional<RotationSystem> find_embedding(const Graph& g, int genus, const OracleOptions& options) {
    RotationSystem result;
    result.order.resize(g.order());
    std::uint64_t nodes = 0;
    int spent = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        Subgraph sub = induced_subgraph(g, comp);
        for (int k = detail::euler_genus_lower_bound(sub.graph);; ++k) {
            if (spent + k > genus) return std::nullopt;
            detail::RotationSearch s(sub.graph);
            if (detail::search_at_least(s, s.faces_for_genus(k), {options.budget, &nodes})) {
                RotationSystem local = s.rotation();
                for (int v = 0; v < sub.graph.order(); ++v)
                    for (int w : local.order[v]) result.order[sub.host[v]].push_back(sub.host[w]);
                spent += k;
                break;
            }
        }
    }
    return result;
}

std::uint64_t count_rotations_of_genus(const Graph& g, int genus, const OracleOptions& options) {
    return options.parallel ? parallel::count_rotations_of_genus(g, genus, options.budget)
                            : serial::count_rotations_of_genus(g, genus, options.budget);
}

std::vector<RotationSystem> rotations_of_genus(const Graph& g, int genus, const OracleOptions& options) {
    std::vector<RotationSystem> out;
    std::uint64_t nodes = 0;
    detail::RotationSearch s(g);
    detail::search_exact(s, s.faces_for_genus(genus), {options.budget, &nodes}, &out);
    return out;
}

namespace {

// Each cyclic list rotated to start at its smallest entry.
std::vector<std::vector<int>> rotation_key(const RotationSystem& r) {
    std::vector<std::vector<int>> key = r.order;
    for (auto& around : key)
        if (!around.empty()) std::rotate(around.begin(), std::min_element(around.begin(), around.end()), around.end());
    return key;
}

RotationSystem apply_symmetry(const RotationSystem& r, const std::vector<int>& perm, bool reverse) {
    RotationSystem out;
    out.order.resize(r.order.size());
    for (std::size_t v = 0; v < r.order.size(); ++v) {
        auto& around = out.order[perm[v]];
        for (int w : r.order[v]) around.push_back(perm[w]);
        if (reverse) std::reverse(around.begin(), around.end());
    }
    return out;
}

}  // namespace

std::size_t count_torus_embeddings(const Graph& g, const OracleOptions& options) {
    const auto rotations = rotations_of_genus(g, 1, options);
    const auto group = automorphisms(g);
    std::set<std::vector<std::vector<int>>> seen;
    std::size_t classes = 0;
    for (const auto& r : rotations) {
        if (seen.count(rotation_key(r))) continue;
        ++classes;
        for (const auto& perm : group)
            for (bool reverse : {false, true}) seen.insert(rotation_key(apply_symmetry(r, perm, reverse)));
    }
    return classes;
}

std::optional<RotationSystem> random_embedding_search(const Graph& g, int target_genus, std::uint64_t seed,
                                                      std::uint64_t iterations) {
    if (g.size() == 0) return RotationSystem{std::vector<std::vector<int>>(g.order())};
    std::mt19937_64 rng(seed);
    RotationSystem current;
    current.order.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        current.order[v] = g.neighbors(v);
        std::shuffle(current.order[v].begin(), current.order[v].end(), rng);
    }
    std::vector<int> movable;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) movable.push_back(v);
    int genus = trace_faces(g, current).genus;
    if (genus <= target_genus) return current;
    if (movable.empty()) return std::nullopt;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double temperature = 1.0;
    for (std::uint64_t it = 0; it < iterations; ++it) {
        // Move one neighbour to another position in one rotation.
        int v = movable[rng() % movable.size()];
        auto& around = current.order[v];
        const auto saved = around;
        std::size_t from = rng() % around.size(), to = rng() % (around.size() - 1);
        int w = around[from];
        around.erase(around.begin() + static_cast<long>(from));
        around.insert(around.begin() + static_cast<long>(to), w);
        int candidate = trace_faces(g, current).genus;
        if (candidate <= genus || unit(rng) < std::exp((genus - candidate) / temperature)) {
            genus = candidate;
            if (genus <= target_genus) return current;
        } else {
            around = saved;
        }
        temperature = std::max(0.05, temperature * 0.99995);
    }
    return std::nullopt;
}

std::string format_rotation(const RotationSystem& r) {
    std::ostringstream out;
    for (std::size_t v = 0; v < r.order.size(); ++v) {
        out << v << ':';
        for (int w : r.order[v]) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

RotationSystem parse_rotation(const std::string& text) {
    RotationSystem r;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InputError("rotation line without ':': " + line);
        int v;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw InputError("bad vertex in rotation line: " + line);
        }
        if (v != static_cast<int>(r.order.size())) throw InputError("rotation lines must list vertices 0, 1, 2, ... in order");
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> around;
        std::string tok;
        while (rest >> tok) {
            try {
                std::size_t used = 0;
                around.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw InputError("");
            } catch (const std::exception&) {
                throw InputError("bad neighbour '" + tok + "' in rotation line");
            }
        }
        r.order.push_back(std::move(around));
    }
    return r;
}

}  // namespace torus
