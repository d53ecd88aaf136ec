#include "vade/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace vade {

namespace {

int offdiag_degree(const IntMat& a, int v) {
    int d = 0;
    for (size_t j = 0; j < a.size(); ++j)
        if ((int)j != v && a[v][j] != 0) ++d;
    return d;
}

bool has_loop(const IntMat& a, int v) { return a[v][v] != 0; }

// Number of edges from an end vertex to the first branch point (vertex of
// degree != 2 or carrying a loop).
int leg_length(const IntMat& a, int end) {
    int prev = -1, cur = end, len = 0;
    for (;;) {
        int next = -1;
        for (size_t j = 0; j < a.size(); ++j)
            if ((int)j != cur && (int)j != prev && a[cur][j] != 0) {
                next = (int)j;
                break;
            }
        if (next < 0) return len;
        ++len;
        if (offdiag_degree(a, next) != 2 || has_loop(a, next)) return len;
        prev = cur;
        cur = next;
    }
}

int64_t mod_floor(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::vector<int> unit_vertices(const FusionModule& m) {
    if (m.rank == 1) return {0};  // degenerate diagram: the only vertex carries A
    std::vector<int> ends;
    for (int v = 0; v < m.rank; ++v)
        if (offdiag_degree(m.n1, v) == 1 && !has_loop(m.n1, v)) ends.push_back(v);
    if (ends.empty()) throw std::logic_error("unit_vertices: graph has no end vertex");
    int longest = 0;
    std::vector<int> lens(ends.size());
    for (size_t i = 0; i < ends.size(); ++i) {
        lens[i] = leg_length(m.n1, ends[i]);
        longest = std::max(longest, lens[i]);
    }
    std::vector<int> out;
    for (size_t i = 0; i < ends.size(); ++i)
        if (lens[i] == longest) out.push_back(ends[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int64_t> branching_of_a(const FusionModule& m, int unit) {
    const auto units = unit_vertices(m);
    if (std::find(units.begin(), units.end(), unit) == units.end())
        throw std::invalid_argument("branching_of_a: not a unit vertex");
    const auto seq = chebyshev_sequence(m.n1, m.level);
    std::vector<int64_t> out(m.level + 1);
    for (int i = 0; i <= m.level; ++i) out[i] = seq[i][unit][unit];
    return out;
}

bool twist_obstruction(const AlgebraCandidate& c) {
    const Cyclotomic unity = Cyclotomic::one(4 * (int64_t)(c.level + 2));
    for (int n = 0; n <= c.level; ++n)
        if (c.multiplicities[n] > 0 && !(twist(n, c.level) == unity)) return false;
    return true;
}

Cyclotomic commutativity_sign(int a, int two_b, int level) {
    if (level < 0 || a < 0 || a > level || two_b < 0 || two_b > level)
        throw std::invalid_argument("commutativity_sign: labels out of range");
    if (two_b % 2 != 0)
        throw std::invalid_argument("commutativity_sign: 2b must be even");
    const int64_t l = level + 2;
    const int64_t b = two_b / 2;
    // (-1)^{a-b} = zeta^{2l(a-b)}, theta_a^{-1} = zeta^{-a(a+2)},
    // q^{b(b+1)} = zeta^{2b(b+1)}
    const int64_t e = mod_floor(2 * l * ((int64_t)a - b) - (int64_t)a * (a + 2) + 2 * b * (b + 1), 4 * l);
    return Cyclotomic::root(4 * l, e);
}

AlgebraCandidate analyze(const FusionModule& m) {
    AlgebraCandidate c;
    c.level = m.level;
    c.source = m;
    const auto units = unit_vertices(m);
    c.unit_vertex = units.front();  // lexicographically smallest canonical choice
    c.multiplicities = branching_of_a(m, c.unit_vertex);

    const int64_t l = m.level + 2;
    Cyclotomic dim = Cyclotomic::zero(4 * l);
    for (int n = 0; n <= m.level; ++n)
        if (c.multiplicities[n] != 0) dim += qint(n + 1, l) * c.multiplicities[n];
    c.dim_a = dim;
    c.twist_ok = twist_obstruction(c);

    switch (m.type) {
        case DiagramType::A:
            break;  // A = V_0, always an algebra
        case DiagramType::D: {
            const bool commutative =
                commutativity_sign(m.level, 0, m.level).is_one();
            c.commutativity_ok = commutative;
            if (!commutative) c.excluded_reason = kRejectDOdd;
            break;
        }
        case DiagramType::T:
            c.excluded_reason = kRejectT;
            break;
        case DiagramType::E7:
            c.commutativity_ok = commutativity_sign(8, 16, 16).is_one();  // false
            c.excluded_reason = kRejectE7;
            break;
        case DiagramType::E6:
        case DiagramType::E8:
            c.note = kAcceptConformalEmbedding;
            break;
    }
    return c;
}

std::string json_string(const AlgebraCandidate& c) {
    nlohmann::json j;
    j["k"] = c.level;
    j["diagram"] = c.source.name();
    j["A"] = c.multiplicities;
    j["dim_A"] = c.dim_a.embed().real();
    j["accepted"] = c.accepted();
    j["reason"] = c.excluded_reason.value_or(c.note);
    return j.dump();
}

}  // namespace vade
