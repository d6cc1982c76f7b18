#ifndef QNBC_FAMILIES_HPP
#define QNBC_FAMILIES_HPP

#include <optional>

#include "qnbc/checker.hpp"
#include "qnbc/graph.hpp"

namespace qnbc::families {

/// What a constructor asserts about its coloring (or, for NotQnbc, about
/// the graph: no quasi balanced coloring exists at all).
enum class FamilyClaim {
    NotQnbc,
    Qnbc,
    PositiveQnbc,
    NegativeQnbc,
    UniformQnbcRed,
    UniformQnbcBlue,
};

const char* claim_name(FamilyClaim claim);

/// True when the classification certifies the claim. NotQnbc always returns
/// false: a nonexistence claim needs the solver, not a single coloring.
bool claim_holds(const Classification& cls, FamilyClaim claim);

struct FamilyResult {
    Graph graph;
    std::optional<Coloring> coloring;
    FamilyClaim claim = FamilyClaim::NotQnbc;
};

/// K_n. Even n: half red, half blue (negative). Odd n: no coloring.
FamilyResult complete(int n);

/// K_{m,n}. Needs an odd part; each odd part splits (t-1)/2 red, (t+1)/2
/// blue, each even part splits evenly (uniform, dominant blue).
FamilyResult complete_bipartite(int m, int n);

/// P_n, n >= 2. Always quasi balanced; uniform exactly when n != 1 (mod 4).
FamilyResult path(int n);

/// GP(n,d): outer cycle v_0..v_{n-1}, spokes v_i u_i, inner edges
/// u_i u_{i+d mod n}; 1 <= d <= (n-1)/2. Outer red, inner blue (positive).
FamilyResult generalized_petersen(int n, int d);

/// B_{m,n}: two adjacent centers with m and n pendants. Centers red,
/// pendant groups split as in complete_bipartite (uniform, dominant red).
FamilyResult bistar(int m, int n);

}  // namespace qnbc::families

#endif
