#include <omp.h>

#include <atomic>
#include <exception>

#include "rotation_search.hpp"
#include "torus/errors.hpp"
#include "torus/genus.hpp"

namespace torus {

namespace {

using detail::RotationSearch;
using detail::SearchLimits;

std::vector<Graph> nontrivial_components(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& comp : connected_components(g))
        if (comp.size() > 1) out.push_back(induced_subgraph(g, comp).graph);
    return out;
}

// Breadth-first expansion to a frontier of independent subtrees, pruned by `keep`.
template <class Keep>
std::vector<RotationSearch> frontier(const RotationSearch& root, std::size_t want, std::uint64_t budget,
                                     std::uint64_t& nodes, Keep keep) {
    std::vector<RotationSearch> level{root};
    std::vector<RotationSearch::Choice> cs;
    while (level.size() < want) {
        std::vector<RotationSearch> next;
        bool grew = false;
        for (auto& s : level) {
            if (s.done()) {
                next.push_back(std::move(s));
                continue;
            }
            grew = true;
            s.choices(cs);
            for (const auto& c : cs) {
                if (++nodes > budget) throw BudgetExceeded("genus oracle exceeded its search budget");
                RotationSearch child = s;
                child.apply(c);
                if (keep(child)) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
        if (!grew || level.empty()) break;
    }
    return level;
}

std::size_t frontier_width() { return static_cast<std::size_t>(64 * omp_get_max_threads()); }

bool parallel_at_least(const RotationSearch& root, int target, std::uint64_t budget) {
    std::uint64_t used = 0;
    auto keep = [&](const RotationSearch& s) { return s.faces() + s.remaining_cycle_edges() >= target; };
    if (!keep(root)) return false;
    auto tasks = frontier(root, frontier_width(), budget, used, keep);
    std::atomic<std::uint64_t> spent{used};
    std::atomic<bool> found{false};
    std::exception_ptr error;
    const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        std::uint64_t local = 0;
        const std::uint64_t before = spent.load();
        SearchLimits limits{before >= budget ? 0 : budget - before, &local, &found};
        try {
            if (detail::search_at_least(tasks[i], target, limits)) found = true;
        } catch (const detail::SearchCancelled&) {
        } catch (...) {
#pragma omp critical(genus_error)
            if (!error) error = std::current_exception();
            found = true;
        }
        spent += local;
    }
    if (error) std::rethrow_exception(error);
    return found.load();
}

std::uint64_t parallel_exact(const RotationSearch& root, int target, std::uint64_t budget) {
    std::uint64_t used = 0;
    auto keep = [&](const RotationSearch& s) {
        const int rem = s.remaining_cycle_edges();
        return s.faces() + rem >= target && s.faces() - rem <= target;
    };
    if (!keep(root)) return 0;
    auto tasks = frontier(root, frontier_width(), budget, used, keep);
    std::atomic<std::uint64_t> spent{used};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::uint64_t total = 0;
    const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (long i = 0; i < count; ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        std::uint64_t local = 0;
        const std::uint64_t before = spent.load();
        SearchLimits limits{before >= budget ? 0 : budget - before, &local, &failed};
        try {
            total += detail::search_exact(tasks[i], target, limits);
        } catch (const detail::SearchCancelled&) {
        } catch (...) {
#pragma omp critical(genus_error)
            if (!error) error = std::current_exception();
            failed = true;
        }
        spent += local;
    }
    if (error) std::rethrow_exception(error);
    return total;
}

}  // namespace

namespace serial {

int min_genus(const Graph& g, std::uint64_t budget) {
    std::uint64_t nodes = 0;
    int total = 0;
    for (const Graph& c : nontrivial_components(g)) {
        for (int genus = detail::euler_genus_lower_bound(c);; ++genus) {
            RotationSearch s(c);
            if (detail::search_at_least(s, s.faces_for_genus(genus), {budget, &nodes})) {
                total += genus;
                break;
            }
        }
    }
    return total;
}

std::uint64_t count_rotations_of_genus(const Graph& g, int genus, std::uint64_t budget) {
    std::uint64_t nodes = 0;
    RotationSearch s(g);
    return detail::search_exact(s, s.faces_for_genus(genus), {budget, &nodes});
}

}  // namespace serial

namespace parallel {

int min_genus(const Graph& g, std::uint64_t budget) {
    int total = 0;
    for (const Graph& c : nontrivial_components(g)) {
        for (int genus = detail::euler_genus_lower_bound(c);; ++genus) {
            RotationSearch s(c);
            if (parallel_at_least(s, s.faces_for_genus(genus), budget)) {
                total += genus;
                break;
            }
        }
    }
    return total;
}

std::uint64_t count_rotations_of_genus(const Graph& g, int genus, std::uint64_t budget) {
    RotationSearch s(g);
    return parallel_exact(s, s.faces_for_genus(genus), budget);
}

}  // namespace parallel

}  // namespace torus
