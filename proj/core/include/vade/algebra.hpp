#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vade/cyclotomic.hpp"
#include "vade/nimrep.hpp"

namespace vade {

// Documented rejection reasons reported by analyze().
inline constexpr const char* kRejectDOdd =
    "commutativity fails: (-1)^k theta_k^{-1} = i^k != 1 (k % 4 != 0)";
inline constexpr const char* kRejectT =
    "D-type uniqueness: K(A) would be D_n, not T_n";
inline constexpr const char* kRejectE7 =
    "V8 (x) V8 -> V16 component cannot be symmetric";
inline constexpr const char* kAcceptConformalEmbedding =
    "existence via conformal embedding";

/// Candidate algebra object attached to a fusion module: the class of A in
/// the Verlinde ring (branching at the unit vertex) plus the computable
/// obstruction verdicts.
struct AlgebraCandidate {
    int level = 0;
    FusionModule source;
    int unit_vertex = 0;
    std::vector<int64_t> multiplicities;  // <V_n, A> for n = 0..k
    Cyclotomic dim_a = Cyclotomic::one(8);
    bool twist_ok = false;
    std::optional<bool> commutativity_ok;  // engaged for D (and the E7 exclusion)
    std::optional<std::string> excluded_reason;
    std::string note;  // e.g. existence-by-conformal-embedding for E6/E8

    bool accepted() const { return !excluded_reason.has_value(); }
};

/// End vertices of the maximal-length legs (candidates for the vertex
/// carrying A). A loop vertex is not an end; a rank-1 diagram has its only
/// vertex as the unit. Throws std::logic_error if a rank >= 2 diagram has
/// no end vertex (impossible for ADET).
std::vector<int> unit_vertices(const FusionModule& m);

/// Multiplicity vector of A over V_0..V_k: entry i is the (unit, unit)
/// diagonal entry of S_i(N1).
std::vector<int64_t> branching_of_a(const FusionModule& m, int unit);

/// True iff theta_n = 1 exactly for every constituent of A.
bool twist_obstruction(const AlgebraCandidate& c);

/// (-1)^{a-b} theta_a^{-1} q^{b(b+1)} with b = two_b/2, as an exact root of
/// unity in Z[zeta_{4(k+2)}]; the braiding eigenvalue on the V_{2b}
/// component of a symmetric map V_a (x) V_a -> V_{2b}.
Cyclotomic commutativity_sign(int a, int two_b, int level);

/// Fills branching, dim A and the verdicts: A accepted; D accepted iff
/// 4 | k; T rejected (D-type uniqueness); E7 rejected (asymmetric V8 (x) V8
/// -> V16 component); E6/E8 accepted with the conformal-embedding note.
AlgebraCandidate analyze(const FusionModule& m);

/// {"k":, "diagram":, "A":[...], "dim_A":, "accepted":, "reason":}
std::string json_string(const AlgebraCandidate& c);

}  // namespace vade
