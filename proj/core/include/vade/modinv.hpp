#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vade/fusion.hpp"
#include "vade/repcat.hpp"

namespace vade {

/// Modular invariant Z = b0 * b0^T built from the branching columns of the
/// Rep0 simples, with the SL2(Z)-commutation verdicts.
struct InvariantMatrix {
    int level = 0;
    DiagramType type = DiagramType::A;
    int rank = 0;
    IntMat z;
    bool commutes_s = false;
    bool commutes_t = false;
    int64_t z00 = 0;
};

InvariantMatrix invariant(const RepData& r);

/// True iff the column space of b0 is invariant under both s and t
/// (orthogonal-projection residual below 1e-8).
bool check_subspace_invariance(const RepData& r);

/// Modular data induced on Rep0 A, solved from s * b0 = b0 * s_A when b0
/// has full column rank; t_A = diag(theta_pi)/zeta. When b0 is
/// rank-deficient (D-type: the X+- columns coincide) the result is marked
/// not computable instead of being patched.
struct InducedModularData {
    bool computable = false;
    std::string reason;  // set when not computable
    CplxMat s_a;
    CplxMat t_a;
    bool sl2_ok = false;  // (s_A t_A)^3 = s_A^2 and s_A^4 = id within 1e-9
};

InducedModularData induced_modular_data(const RepData& r);

/// Verifies D(Rep0 A) = D(C)/dim A and zeta(Rep0 A) = zeta(C) within 1e-9,
/// the latter through the Gauss-sum ratio p+_A / D_A = zeta^3 (same branch
/// as the ambient category).
bool rank_zeta_check(const RepData& r);

/// e.g. "|x0+x4|^2+2|x2|^2"
std::string character_polynomial(const RepData& r);

std::string tsv_string(const InvariantMatrix& z);

std::string json_string(const InvariantMatrix& z);

}  // namespace vade
