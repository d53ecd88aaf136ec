#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vade/algebra.hpp"
#include "vade/intmat.hpp"

namespace vade {

/// Fusion-level model of Rep A for an accepted algebra: simple objects
/// (diagram vertices), their branching to V_0..V_k, the generator fusion
/// matrix (2 - Cartan), Rep0 membership and A-dimensions.
struct RepData {
    AlgebraCandidate algebra;
    std::vector<std::string> simple_names;  // V_i for type A, else X_i / X+ / X-
    IntMat branching;                       // (k+1) x |Pi|, b[i][pi] = <V_i, G(X_pi)>
    IntMat gen_fusion;                      // action of F(V_1) = source N1
    std::vector<bool> rep0;                 // constant-twist columns
    std::vector<double> dims_a;             // dim_A(X_pi) = dim_C(X_pi)/dim_C(A)

    int level() const { return algebra.level; }
    DiagramType type() const { return algebra.source.type; }
    int rank() const { return algebra.source.rank; }
    int unit_vertex() const { return algebra.unit_vertex; }
};

RepData rep_data(const AlgebraCandidate& c);

/// Recomputes the Rep0 mask: pi is in Pi0 iff all constituents of G(X_pi)
/// share one twist value (exact comparison).
std::vector<bool> rep0_membership(const RepData& r);

/// Complete fusion ring of Rep A for the D-type algebra at level k = 4m:
/// basis X_0..X_{2m-1}, X+, X- (vertex order of D_{2m+2}); products among
/// the X_i by F-linearity, products with X+- by the k mod 8 dichotomy.
struct DEvenFusion {
    int level = 0;
    int m = 1;  // k = 4m
    std::vector<std::string> labels;
    /// table[a][b][c] = multiplicity of basis element c in X_a (x) X_b
    std::vector<std::vector<std::vector<int64_t>>> table;

    int plus_index() const { return 2 * m; }
    int minus_index() const { return 2 * m + 1; }
    /// The unique c with X_0 appearing in X_a (x) X_c.
    int dual_of(int a) const;
};

/// Throws std::invalid_argument unless level is a positive multiple of 4.
DEvenFusion deven_fusion(int level);

/// Checks dim_A(F(V_i)) = [i+1] and multiplicativity of dim_A over the full
/// fusion table, both within 1e-9. The table is available for types A
/// (Verlinde ring itself) and D (deven_fusion); other types throw
/// std::logic_error.
bool dim_check(const RepData& r);

/// TSV rows: row label, column label, product decomposition.
std::string tsv_string(const DEvenFusion& f);

std::string json_string(const RepData& r);

}  // namespace vade
