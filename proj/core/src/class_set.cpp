#include "seidel/class_set.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "seidel/charpoly.hpp"
#include "seidel/seidel_matrix.hpp"

namespace seidel {

Int class_count_upper_bound(int n, unsigned e) {
    if (n < 1 || e < 1) throw std::invalid_argument("class_count_upper_bound: bad arguments");
    const bool odd = (n % 2 != 0);
    if (odd && e <= 2) return 1;
    unsigned long exp = 0;
    if (e >= 4) exp = static_cast<unsigned long>(e - 2) * (e - 3) / 2;
    if (odd) exp += 1;
    return Int(1) << exp;
}

ResiduePoly seidel_class_of(const Graph& g, unsigned e) {
    SeidelMatrix s(g);
    return char_poly_mod2e(seidel_flat_u64(s), g.order(), e);
}

namespace {

// Deterministic candidate generator: a structured family first, then
// seeded pseudorandom graphs.
Graph candidate_graph(int n, std::uint64_t seed, std::uint64_t index) {
    if (index == 0) return Graph::empty_graph(n);
    if (index == 1) return Graph::complete(n);
    std::uint64_t i = index - 2;
    // Single growing clique K_j with the other vertices isolated.
    if (i < static_cast<std::uint64_t>(n - 1)) {
        Graph g(n);
        int j = static_cast<int>(i) + 2;
        for (int u = 0; u < j; ++u)
            for (int v = u + 1; v < j; ++v) g.set_edge(u, v, true);
        return g;
    }
    i -= n - 1;
    // Edge prefixes of a path, a star and a cycle.
    if (i < static_cast<std::uint64_t>(3 * n)) {
        Graph g(n);
        int kind = static_cast<int>(i) / n, len = static_cast<int>(i) % n;
        for (int t = 0; t < len; ++t) {
            if (kind == 0 && t + 1 < n) g.set_edge(t, t + 1, true);
            if (kind == 1 && t + 1 < n) g.set_edge(0, t + 1, true);
            if (kind == 2 && n >= 3) g.set_edge(t, (t + 1) % n, true);
        }
        return g;
    }
    i -= 3 * n;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.set_edge(u, v, true);
    return g;
}

struct Hit {
    ResiduePoly cls;
    Graph witness;
    std::uint64_t index;
};

void finalize(ClassSet& cs, std::map<std::vector<std::uint64_t>, Hit>& found) {
    cs.classes.clear();
    cs.witnesses.clear();
    for (auto& [key, hit] : found) {
        cs.classes.push_back(hit.cls);
        cs.witnesses.push_back(hit.witness);
    }
}

}  // namespace

ClassSet discover_classes(int n, unsigned e, std::uint64_t seed, std::uint64_t budget, int jobs) {
    if (budget == 0) throw std::invalid_argument("discover_classes: budget must be positive");
    if (jobs < 1) jobs = 1;
    ClassSet cs;
    cs.n = n;
    cs.e = e;
    cs.bound = class_count_upper_bound(n, e);
    cs.seed = seed;
    cs.budget = budget;

    std::map<std::vector<std::uint64_t>, Hit> found;
    const std::uint64_t chunk = 32;
    std::uint64_t next = 0;
    while (next < budget && Int(static_cast<long>(found.size())) < cs.bound) {
        // One wave of `jobs` chunks; waves complete atomically so the
        // result is independent of scheduling.
        std::vector<std::future<std::vector<Hit>>> futs;
        std::uint64_t wave_end = std::min(budget, next + chunk * static_cast<std::uint64_t>(jobs));
        for (std::uint64_t base = next; base < wave_end; base += chunk) {
            std::uint64_t hi = std::min(wave_end, base + chunk);
            futs.push_back(std::async(std::launch::async, [=]() {
                std::vector<Hit> hits;
                for (std::uint64_t i = base; i < hi; ++i) {
                    Graph g = candidate_graph(n, seed, i);
                    hits.push_back(Hit{seidel_class_of(g, e), g, i});
                }
                return hits;
            }));
        }
        for (auto& f : futs) {
            for (Hit& h : f.get()) {
                auto it = found.find(h.cls.residues);
                if (it == found.end() || h.index < it->second.index)
                    found[h.cls.residues] = std::move(h);
            }
        }
        next = wave_end;
    }
    cs.budget_used = next;
    finalize(cs, found);
    if (Int(static_cast<long>(cs.classes.size())) == cs.bound) {
        cs.complete = true;
        cs.complete_reason = "cap-reached";
    }
    return cs;
}

ClassSet exhaustive_classes(int n, unsigned e) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("exhaustive_classes: practical only for n <= 8");
    ClassSet cs;
    cs.n = n;
    cs.e = e;
    cs.bound = class_count_upper_bound(n, e);
    std::map<std::vector<std::uint64_t>, Hit> found;
    // Switching-class representatives: vertex 0 isolated, all graphs on the
    // remaining n-1 vertices.
    const int m = n - 1;
    const std::uint64_t total = std::uint64_t(1) << (m * (m - 1) / 2);
    for (std::uint64_t code = 0; code < total; ++code) {
        Graph g(n);
        int bit = 0;
        for (int u = 1; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if ((code >> bit) & 1u) g.set_edge(u, v, true);
                ++bit;
            }
        ResiduePoly cls = seidel_class_of(g, e);
        auto it = found.find(cls.residues);
        if (it == found.end()) found[cls.residues] = Hit{cls, g, code};
    }
    cs.budget = cs.budget_used = total;
    finalize(cs, found);
    cs.complete = true;
    cs.complete_reason = "exhaustive";
    return cs;
}

bool class_membership(const IntPoly& p, const ClassSet& cs) {
    if (!cs.complete)
        throw std::invalid_argument("class_membership: exclusion against an incomplete set");
    if (p.degree() != cs.n)
        throw std::invalid_argument("class_membership: degree does not match the class order");
    ResiduePoly r = mod_reduce(p, cs.e);
    return std::binary_search(cs.classes.begin(), cs.classes.end(), r);
}

void save_class_set(const ClassSet& cs, const std::string& path) {
    nlohmann::json j;
    j["format"] = 1;
    j["n"] = cs.n;
    j["e"] = cs.e;
    j["bound"] = cs.bound.get_str();
    j["complete"] = cs.complete;
    j["complete_reason"] = cs.complete_reason;
    j["seed"] = cs.seed;
    j["budget"] = cs.budget;
    j["budget_used"] = cs.budget_used;
    nlohmann::json classes = nlohmann::json::array();
    for (const ResiduePoly& c : cs.classes) classes.push_back(c.residues);
    j["classes"] = classes;
    nlohmann::json wits = nlohmann::json::array();
    for (const Graph& g : cs.witnesses) wits.push_back(g.adjacency_bits());
    j["witnesses"] = wits;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_class_set: cannot write " + path);
    out << j.dump(2) << "\n";
}

ClassSet load_class_set(const std::string& path, bool verify) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_class_set: cannot open " + path);
    nlohmann::json j;
    in >> j;
    ClassSet cs;
    cs.n = j.at("n").get<int>();
    cs.e = j.at("e").get<unsigned>();
    cs.bound = Int(j.at("bound").get<std::string>());
    cs.complete = j.at("complete").get<bool>();
    cs.complete_reason = j.value("complete_reason", "");
    cs.seed = j.at("seed").get<std::uint64_t>();
    cs.budget = j.at("budget").get<std::uint64_t>();
    cs.budget_used = j.value("budget_used", std::uint64_t(0));
    for (const auto& c : j.at("classes")) {
        ResiduePoly r;
        r.e = cs.e;
        r.residues = c.get<std::vector<std::uint64_t>>();
        cs.classes.push_back(std::move(r));
    }
    for (const auto& w : j.at("witnesses"))
        cs.witnesses.push_back(Graph::from_adjacency_bits(cs.n, w.get<std::string>()));
    if (cs.classes.size() != cs.witnesses.size())
        throw std::runtime_error("load_class_set: class/witness length mismatch");
    if (!std::is_sorted(cs.classes.begin(), cs.classes.end()))
        throw std::runtime_error("load_class_set: classes not in canonical order");
    if (verify) {
        for (size_t i = 0; i < cs.classes.size(); ++i) {
            if (!(seidel_class_of(cs.witnesses[i], cs.e) == cs.classes[i]))
                throw std::runtime_error("load_class_set: witness verification failed (tampered cache?)");
        }
    }
    return cs;
}

}  // namespace seidel
