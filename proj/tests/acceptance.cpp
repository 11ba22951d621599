// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "torus/canonical.hpp"
#include "torus/enumerate.hpp"
#include "torus/genus.hpp"
#include "torus/minor.hpp"
#include "torus/obstructions.hpp"
#include "torus/structure.hpp"
#include "torus/toroidality.hpp"

using namespace torus;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) {
        o.pass = false;
        o.detail += " (over the " + std::to_string(static_cast<int>(limit_seconds)) + " s limit)";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d. %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome minimality() {
    std::vector<std::string> passed;
    for (const auto& r : catalog())
        if (verify_minor_obstruction(r.graph).passed) passed.push_back(r.name);
    std::string list;
    for (const auto& n : passed) list += (list.empty() ? "" : ",") + n;
    return {passed == std::vector<std::string>{"G1", "G2", "G3", "G4"}, "minor verifier passes for {" + list + "}"};
}

Outcome topological() {
    int pass = 0, contraction_fail = 0;
    for (const auto& r : catalog()) {
        auto rep = verify_topological_obstruction(r.graph);
        pass += rep.passed;
        contraction_fail += !rep.contraction_clause;
    }
    std::ostringstream s;
    s << pass << "/11 pass, " << contraction_fail << " fail the contraction clause";
    return {pass == 11 && contraction_fail == 7, s.str()};
}

Outcome regeneration() {
    std::vector<Graph> seeds;
    for (const char* n : {"G1", "G2", "G3", "G4"}) seeds.push_back(builtin(n));
    auto found = enumerate_splits(seeds);
    std::set<std::string> got, want;
    for (const auto& g : found) got.insert(canonical_form(g));
    for (const auto& r : catalog()) want.insert(canonical_form(r.graph));
    std::ostringstream s;
    s << found.size() << " classes, catalog match " << (got == want ? "yes" : "no");
    return {found.size() == 11 && got == want, s.str()};
}

Outcome oracle_agreement() {
    std::size_t compared = 0, disagree = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (!is_connected(g) || !is_k33_free(g)) continue;
            ++compared;
            if (decide_toroidal(g).toroidal() != (min_genus(g) <= 1)) ++disagree;
        }
    std::size_t minor_checked = 0, minor_disagree = 0;
    const Graph k33 = complete_bipartite(3, 3);
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : all_graphs(n)) {
            ++minor_checked;
            if (is_k33_free(g) == has_minor(g, k33)) ++minor_disagree;
        }
    std::ostringstream s;
    s << "genus oracle: " << compared - disagree << "/" << compared << " agree; K3,3 minor: "
      << minor_checked - minor_disagree << "/" << minor_checked << " agree";
    return {disagree == 0 && minor_disagree == 0, s.str()};
}

Outcome k5_embeddings() {
    auto c = count_torus_embeddings(complete_graph(5));
    return {c == 6, "count_torus_embeddings(K5) = " + std::to_string(c)};
}

Outcome k7() {
    RotationSystem r;
    for (int i = 0; i < 7; ++i)
        r.order.push_back({(i + 1) % 7, (i + 3) % 7, (i + 2) % 7, (i + 6) % 7, (i + 4) % 7, (i + 5) % 7});
    auto emb = trace_faces(complete_graph(7), r);
    bool triangles = true;
    for (const auto& f : emb.faces) triangles = triangles && f.size() == 3;
    auto v = decide_toroidal(complete_graph(7));
    std::ostringstream s;
    s << emb.faces.size() << " faces, " << (triangles ? "all triangles" : "not all triangles") << ", genus " << emb.genus
      << "; verdict " << status_name(v.status);
    bool witness_ok = v.witness && v.witness->pattern == Pattern::K33 && validate_witness(complete_graph(7), *v.witness);
    return {emb.faces.size() == 14 && triangles && emb.genus == 1 && v.status == ToroidalStatus::NotInClass && witness_ok,
            s.str()};
}

Outcome minor_equivalence() {
    std::vector<Graph> obstructions;
    for (const char* n : {"G1", "G2", "G3", "G4"}) obstructions.push_back(builtin(n));
    std::vector<Graph> corpus;
    for (const auto& r : catalog()) corpus.push_back(r.graph);
    std::set<std::string> seen;
    std::size_t random_count = 0;
    for (std::uint64_t seed = 1; random_count < 200; ++seed) {
        Graph g = corpus::random_k33_free(seed, 12);
        if (!is_k33_free(g) || !seen.insert(canonical_form(g)).second) continue;
        corpus.push_back(std::move(g));
        ++random_count;
    }
    std::size_t disagree = 0, nontoroidal = 0;
    std::map<std::string, int> tags;
    for (const Graph& g : corpus) {
        auto v = decide_toroidal(g);
        ++tags[case_name(v.tag)];
        bool has = false;
        for (const Graph& o : obstructions)
            if (!has && o.order() <= g.order() && o.size() <= g.size()) has = has_minor(g, o);
        nontoroidal += !v.toroidal();
        if (v.toroidal() == has) ++disagree;
    }
    std::ostringstream s;
    s << corpus.size() - disagree << "/" << corpus.size() << " agree (" << nontoroidal << " non-toroidal;";
    for (const auto& [k, c] : tags) s << ' ' << k << '=' << c;
    s << ')';
    return {disagree == 0, s.str()};
}

}  // namespace

int main() {
    run(1, "obstruction minimality", 60, minimality);
    run(2, "topological obstruction list", 120, topological);
    run(3, "split regeneration", 600, regeneration);
    run(4, "oracle agreement", 4 * 3600, oracle_agreement);
    run(5, "K5 torus embeddings", 1, k5_embeddings);
    run(6, "K7 rotation and class gating", 1, k7);
    run(7, "minor equivalence on catalog and random sums", 1800, minor_equivalence);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
