#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vade/intmat.hpp"

namespace vade {

enum class DiagramType { A, D, T, E6, E7, E8 };

/// Coxeter number: h(A_n) = n+1, h(D_n) = 2n-2, h(T_n) = 2n+1,
/// h(E6) = 12, h(E7) = 18, h(E8) = 30.
int coxeter_number(DiagramType type, int rank);

/// Adjacency matrix of the ADET diagram, vertices in BFS order from the
/// canonical unit-candidate end vertex (longest-leg end; ties broken by
/// degree then id). T_n carries its loop on the last vertex.
IntMat adet_adjacency(DiagramType type, int rank);

std::string diagram_name(DiagramType type, int rank);

/// A module over the level-k Verlinde ring with non-negative integer
/// structure, certified by is_fusion_module. Immutable once built.
struct FusionModule {
    int level = 0;
    DiagramType type = DiagramType::A;
    int rank = 0;
    IntMat n1;                   // adjacency = action matrix of V_1
    std::vector<double> pf_dim;  // Perron-Frobenius eigenvector, |.|_2 = 1
    double pf_value = 0.0;       // its eigenvalue, 2cos(pi/(k+2)) when certified

    std::string name() const { return diagram_name(type, rank); }
};

/// S_0 = I, S_1 = N1, S_{n+1} = N1*S_n - S_{n-1}, for n = 0..up_to.
std::vector<IntMat> chebyshev_sequence(const IntMat& n1, int up_to);

/// Action matrix S_n(N1) of [V_n] on the module, 0 <= n <= level+1.
IntMat chebyshev_action(const FusionModule& m, int n);

struct ModuleVerdict {
    enum class Fail { none, asymmetry, negativity, disconnected, relation, positivity };
    bool ok = false;
    Fail reason = Fail::none;

    const char* reason_name() const;
};

/// Checks the defining conditions of a fusion module at the given level:
/// N1 symmetric, non-negative, connected, S_n(N1) >= 0 entrywise for
/// n <= level, and S_{level+1}(N1) = 0 -- the last two in exact integer
/// arithmetic.
ModuleVerdict is_fusion_module(int level, const IntMat& n1);

/// Certified diagram module; throws std::invalid_argument when the Coxeter
/// number of the diagram does not equal level+2.
FusionModule make_module(DiagramType type, int rank, int level);

/// All ADET diagrams with Coxeter number level+2, each certified:
/// A_{k+1} always; D_{(k+4)/2} for even k >= 4; T_{(k+1)/2} for odd k;
/// E6 at k=10, E7 at k=16, E8 at k=28.
std::vector<FusionModule> classify_modules(int level);

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Independent completeness oracle: enumerates symmetric matrices with
/// entries in {0..max_entry} (off-diagonal and diagonal) over all ranks
/// <= max_rank up to graph isomorphism, filters through is_fusion_module
/// and returns the survivors with canonicalized adjacency. Search workers
/// may run in parallel (capped by VERLINDE_ADE_THREADS); results are merged
/// deterministically via sorted canonical forms.
///
/// Throws ResourceLimitError when level > 6 or max_rank > level+2.
std::vector<FusionModule> exhaustive_search(int level, int max_rank, int max_entry = 1);

/// Lexicographically smallest adjacency matrix over all vertex
/// relabelings. Rank <= 10.
IntMat canonical_form(const IntMat& n1);

/// Identifies the ADET diagram isomorphic to n1, if any.
std::optional<std::pair<DiagramType, int>> recognize_adet(const IntMat& n1);

/// DOT export; the unit vertex (when >= 0) is drawn with peripheries=2.
std::string dot_string(const FusionModule& m, int unit_vertex = -1);

/// {"k":, "type":, "N1":[[...]]}
std::string json_string(const FusionModule& m);

}  // namespace vade
