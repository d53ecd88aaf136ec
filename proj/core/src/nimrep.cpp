#include "vade/nimrep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

namespace vade {

namespace {

// Perron-Frobenius pair by power iteration on N1 + I (the shift keeps the
// iteration from oscillating on bipartite graphs).
std::pair<std::vector<double>, double> perron(const IntMat& a) {
    const int n = (int)a.size();
    std::vector<double> v(n, 1.0 / std::sqrt((double)n)), w(n);
    for (int iter = 0; iter < 20000; ++iter) {
        for (int i = 0; i < n; ++i) {
            double acc = v[i];
            for (int j = 0; j < n; ++j) acc += (double)a[i][j] * v[j];
            w[i] = acc;
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            w[i] /= norm;
            delta = std::max(delta, std::abs(w[i] - v[i]));
        }
        v.swap(w);
        if (delta < 1e-15) break;
    }
    double rayleigh = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rayleigh += v[i] * (double)a[i][j] * v[j];
    return {v, rayleigh};
}

int thread_cap() {
    if (const char* env = std::getenv("VERLINDE_ADE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return (int)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

}  // namespace

int coxeter_number(DiagramType type, int rank) {
    switch (type) {
        case DiagramType::A: return rank + 1;
        case DiagramType::D: return 2 * rank - 2;
        case DiagramType::T: return 2 * rank + 1;
        case DiagramType::E6: return 12;
        case DiagramType::E7: return 18;
        case DiagramType::E8: return 30;
    }
    throw std::logic_error("coxeter_number: bad type");
}

std::string diagram_name(DiagramType type, int rank) {
    switch (type) {
        case DiagramType::A: return "A_" + std::to_string(rank);
        case DiagramType::D: return "D_" + std::to_string(rank);
        case DiagramType::T: return "T_" + std::to_string(rank);
        case DiagramType::E6: return "E6";
        case DiagramType::E7: return "E7";
        case DiagramType::E8: return "E8";
    }
    throw std::logic_error("diagram_name: bad type");
}

IntMat adet_adjacency(DiagramType type, int rank) {
    auto path = [](int n) {
        IntMat a = zero_mat(n, n);
        for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = 1;
        return a;
    };
    auto link = [](IntMat& a, int i, int j) { a[i][j] = a[j][i] = 1; };

    switch (type) {
        case DiagramType::A: {
            if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
            return path(rank);
        }
        case DiagramType::T: {
            if (rank < 1) throw std::invalid_argument("T_n needs n >= 1");
            IntMat a = path(rank);
            a[rank - 1][rank - 1] = 1;
            return a;
        }
        case DiagramType::D: {
            if (rank < 4) throw std::invalid_argument("D_n needs n >= 4");
            IntMat a = zero_mat(rank, rank);
            for (int i = 0; i < rank - 3; ++i) link(a, i, i + 1);
            link(a, rank - 3, rank - 2);
            link(a, rank - 3, rank - 1);
            return a;
        }
        case DiagramType::E6: {
            if (rank != 6) throw std::invalid_argument("E6 has rank 6");
            // legs (2, 1, 2) around the trivalent vertex 2, BFS from vertex 0
            IntMat a = zero_mat(6, 6);
            link(a, 0, 1);
            link(a, 1, 2);
            link(a, 2, 3);  // short leg end
            link(a, 2, 4);
            link(a, 4, 5);
            return a;
        }
        case DiagramType::E7: {
            if (rank != 7) throw std::invalid_argument("E7 has rank 7");
            // legs (3, 1, 2) around the trivalent vertex 3
            IntMat a = zero_mat(7, 7);
            link(a, 0, 1);
            link(a, 1, 2);
            link(a, 2, 3);
            link(a, 3, 4);  // short leg end
            link(a, 3, 5);
            link(a, 5, 6);
            return a;
        }
        case DiagramType::E8: {
            if (rank != 8) throw std::invalid_argument("E8 has rank 8");
            // legs (4, 1, 2) around the trivalent vertex 4
            IntMat a = zero_mat(8, 8);
            link(a, 0, 1);
            link(a, 1, 2);
            link(a, 2, 3);
            link(a, 3, 4);
            link(a, 4, 5);  // short leg end
            link(a, 4, 6);
            link(a, 6, 7);
            return a;
        }
    }
    throw std::logic_error("adet_adjacency: bad type");
}

std::vector<IntMat> chebyshev_sequence(const IntMat& n1, int up_to) {
    const int n = (int)n1.size();
    std::vector<IntMat> seq;
    seq.reserve(up_to + 1);
    seq.push_back(identity_mat(n));
    if (up_to >= 1) seq.push_back(n1);
    for (int i = 2; i <= up_to; ++i)
        seq.push_back(mat_sub(mat_mul(n1, seq[i - 1]), seq[i - 2]));
    return seq;
}

IntMat chebyshev_action(const FusionModule& m, int n) {
    if (n < 0 || n > m.level + 1)
        throw std::out_of_range("chebyshev_action: need 0 <= n <= level+1");
    return chebyshev_sequence(m.n1, n).back();
}

const char* ModuleVerdict::reason_name() const {
    switch (reason) {
        case Fail::none: return "none";
        case Fail::asymmetry: return "asymmetry";
        case Fail::negativity: return "negativity";
        case Fail::disconnected: return "disconnected";
        case Fail::relation: return "relation";
        case Fail::positivity: return "positivity";
    }
    return "?";
}

ModuleVerdict is_fusion_module(int level, const IntMat& n1) {
    if (level < 0) throw std::invalid_argument("is_fusion_module: level must be >= 0");
    const size_t n = n1.size();
    if (n == 0) throw std::invalid_argument("is_fusion_module: empty matrix");
    for (const auto& row : n1)
        if (row.size() != n) throw std::invalid_argument("is_fusion_module: matrix not square");

    using Fail = ModuleVerdict::Fail;
    if (!mat_is_symmetric(n1)) return {false, Fail::asymmetry};
    if (!mat_is_nonnegative(n1)) return {false, Fail::negativity};
    if (!adjacency_is_connected(n1)) return {false, Fail::disconnected};

    IntMat prev = identity_mat((int)n);
    IntMat cur = n1;
    for (int i = 1; i <= level; ++i) {
        if (!mat_is_nonnegative(cur)) return {false, Fail::positivity};
        IntMat next = mat_sub(mat_mul(n1, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    // cur = S_{level+1}(N1)
    if (!mat_is_zero(cur)) return {false, Fail::relation};
    return {true, Fail::none};
}

FusionModule make_module(DiagramType type, int rank, int level) {
    if (coxeter_number(type, rank) != level + 2)
        throw std::invalid_argument(diagram_name(type, rank) +
                                    " has Coxeter number != " + std::to_string(level + 2));
    FusionModule m;
    m.level = level;
    m.type = type;
    m.rank = rank;
    m.n1 = adet_adjacency(type, rank);
    const ModuleVerdict v = is_fusion_module(level, m.n1);
    if (!v.ok)
        throw std::logic_error("make_module: " + diagram_name(type, rank) +
                               " failed certification: " + v.reason_name());
    auto [vec, val] = perron(m.n1);
    m.pf_dim = std::move(vec);
    m.pf_value = val;
    return m;
}

std::vector<FusionModule> classify_modules(int level) {
    if (level < 0) throw std::invalid_argument("classify_modules: level must be >= 0");
    std::vector<FusionModule> out;
    out.push_back(make_module(DiagramType::A, level + 1, level));
    if (level % 2 == 0 && level >= 4)
        out.push_back(make_module(DiagramType::D, (level + 4) / 2, level));
    if (level % 2 == 1)
        out.push_back(make_module(DiagramType::T, (level + 1) / 2, level));
    if (level == 10) out.push_back(make_module(DiagramType::E6, 6, level));
    if (level == 16) out.push_back(make_module(DiagramType::E7, 7, level));
    if (level == 28) out.push_back(make_module(DiagramType::E8, 8, level));
    return out;
}

IntMat canonical_form(const IntMat& n1) {
    const int n = (int)n1.size();
    if (n > 10) throw std::invalid_argument("canonical_form: rank too large");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int64_t> best, cur;
    cur.reserve((size_t)n * n);
    do {
        // state: 0 = equal to best so far, -1 = strictly smaller, 1 = larger
        int state = best.empty() ? -1 : 0;
        cur.clear();
        for (int i = 0; i < n && state <= 0; ++i)
            for (int j = 0; j < n; ++j) {
                const int64_t v = n1[perm[i]][perm[j]];
                cur.push_back(v);
                if (state == 0) {
                    const int64_t b = best[cur.size() - 1];
                    if (v < b) state = -1;
                    else if (v > b) { state = 1; break; }
                }
            }
        if (state == -1) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));

    IntMat out = zero_mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = best[(size_t)i * n + j];
    return out;
}

std::optional<std::pair<DiagramType, int>> recognize_adet(const IntMat& n1) {
    const int n = (int)n1.size();
    const IntMat canon = canonical_form(n1);
    std::vector<std::pair<DiagramType, int>> candidates;
    candidates.push_back({DiagramType::A, n});
    candidates.push_back({DiagramType::T, n});
    if (n >= 4) candidates.push_back({DiagramType::D, n});
    if (n == 6) candidates.push_back({DiagramType::E6, 6});
    if (n == 7) candidates.push_back({DiagramType::E7, 7});
    if (n == 8) candidates.push_back({DiagramType::E8, 8});
    for (const auto& [type, rank] : candidates)
        if (canonical_form(adet_adjacency(type, rank)) == canon) return {{type, rank}};
    return std::nullopt;
}

namespace {

// Growth enumeration of connected graphs on exactly `rank` vertices: each
// new vertex attaches to at least one earlier vertex. Prefixes are induced
// subgraphs, so the Perron-Frobenius bound prunes soundly.
struct Search {
    int level;
    int rank;
    int max_entry;
    double pf_bound;
    std::set<IntMat>* found;
    IntMat a;

    void run() {
        a = zero_mat(rank, rank);
        grow(0);
    }

    bool prefix_ok(int upto) {
        // (N^2)_{ii} <= 3 is forced by the spectral radius being < 2
        for (int i = 0; i <= upto; ++i) {
            int64_t sq = 0;
            for (int j = 0; j <= upto; ++j) sq += a[i][j] * a[i][j];
            if (sq > 3) return false;
        }
        IntMat sub(upto + 1, std::vector<int64_t>(upto + 1));
        for (int i = 0; i <= upto; ++i)
            for (int j = 0; j <= upto; ++j) sub[i][j] = a[i][j];
        return perron(sub).second <= pf_bound;
    }

    void grow(int v) {
        if (v == rank) {
            if (is_fusion_module(level, a).ok) found->insert(canonical_form(a));
            return;
        }
        const int base = max_entry + 1;
        int64_t combos = 1;
        for (int i = 0; i < v; ++i) combos *= base;
        for (int loop = 0; loop <= max_entry; ++loop) {
            a[v][v] = loop;
            for (int64_t code = 0; code < combos; ++code) {
                int64_t rest = code;
                bool any = false;
                for (int i = 0; i < v; ++i) {
                    const int64_t w = rest % base;
                    rest /= base;
                    a[v][i] = a[i][v] = w;
                    if (w) any = true;
                }
                if (v > 0 && !any) continue;  // must attach to an earlier vertex
                if (prefix_ok(v)) grow(v + 1);
            }
        }
        a[v][v] = 0;
        for (int i = 0; i < v; ++i) a[v][i] = a[i][v] = 0;
    }
};

}  // namespace

std::vector<FusionModule> exhaustive_search(int level, int max_rank, int max_entry) {
    if (level < 0 || level > 6)
        throw ResourceLimitError("exhaustive_search: level must be in 0..6");
    if (max_rank < 1 || max_rank > level + 2)
        throw ResourceLimitError("exhaustive_search: rank bound exceeded (max " +
                                 std::to_string(level + 2) + ")");
    if (max_entry < 1 || max_entry > 2)
        throw std::invalid_argument("exhaustive_search: max_entry must be 1 or 2");

    const double pf_bound = 2.0 * std::cos(std::numbers::pi / (level + 2)) + 1e-7;
    std::vector<std::set<IntMat>> per_rank(max_rank);

    std::atomic<int> next_rank{1};
    auto worker = [&] {
        for (;;) {
            const int r = next_rank.fetch_add(1);
            if (r > max_rank) return;
            Search s{level, r, max_entry, pf_bound, &per_rank[r - 1], {}};
            s.run();
        }
    };
    const int threads = std::min(thread_cap(), max_rank);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<FusionModule> out;
    for (const auto& bucket : per_rank)
        for (const auto& canon : bucket) {
            const auto rec = recognize_adet(canon);
            if (!rec)
                throw std::logic_error("exhaustive_search: survivor outside the ADET family");
            FusionModule m;
            m.level = level;
            m.type = rec->first;
            m.rank = rec->second;
            m.n1 = canon;
            auto [vec, val] = perron(m.n1);
            m.pf_dim = std::move(vec);
            m.pf_value = val;
            out.push_back(std::move(m));
        }
    return out;
}

std::string dot_string(const FusionModule& m, int unit_vertex) {
    std::string out = "graph " + m.name() + " {\n  node [shape=circle];\n";
    for (int v = 0; v < m.rank; ++v) {
        out += "  " + std::to_string(v);
        if (v == unit_vertex) out += " [peripheries=2]";
        out += ";\n";
    }
    for (int i = 0; i < m.rank; ++i) {
        for (int64_t c = 0; c < m.n1[i][i]; ++c)
            out += "  " + std::to_string(i) + " -- " + std::to_string(i) + ";\n";
        for (int j = i + 1; j < m.rank; ++j)
            for (int64_t c = 0; c < m.n1[i][j]; ++c)
                out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string json_string(const FusionModule& m) {
    nlohmann::json j;
    j["k"] = m.level;
    j["type"] = m.name();
    j["N1"] = m.n1;
    return j.dump();
}

}  // namespace vade
