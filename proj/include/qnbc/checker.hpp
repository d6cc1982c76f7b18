#ifndef QNBC_CHECKER_HPP
#define QNBC_CHECKER_HPP

#include <optional>

#include "qnbc/graph.hpp"

namespace qnbc {

enum class Kind { Invalid, Nbc, Qnbc };

const char* kind_name(Kind k);

/// Verdict for a (graph, coloring) pair. The variant flags are meaningful
/// only when kind == Qnbc.
struct Classification {
    Kind kind = Kind::Invalid;
    bool positive = false;                  // every odd-degree vertex favors its own color
    bool negative = false;                  // every odd-degree vertex favors the opposite color
    std::optional<Color> uniform_dominant;  // the one color all odd-degree vertices favor, if any
};

/// #red neighbors - #blue neighbors at v; always has the parity of deg(v).
int imbalance(const Graph& g, const Coloring& c, int v);

/// Per-vertex imbalances for the whole graph.
std::vector<int> imbalances(const Graph& g, const Coloring& c);

Classification classify(const Graph& g, const Coloring& c);

/// Partition and edge counts behind the mod-4 congruence facts. Only defined
/// for quasi neighborhood balanced pairs.
struct CountingSummary {
    int opposite_majority_count = 0;  // odd-degree vertices whose surplus color differs from their own
    int own_majority_count = 0;       // odd-degree vertices whose surplus color matches their own
    int cross_edge_count = 0;         // edges joining a red and a blue endpoint
    int odd_degree_count = 0;
    int twice_edge_count_mod4 = 0;
};

// The quantities satisfy
//   4 * cross_edge_count == 2 * edge_count + opposite_majority_count - own_majority_count.
// The flipped-sign variant fails already on a single edge colored R,B.
CountingSummary counting_summary(const Graph& g, const Coloring& c);

struct CongruenceReport {
    int twice_edges_mod4 = 0;
    int odd_degree_count = 0;
    int odd_degree_mod4 = 0;
    int neg_odd_degree_mod4 = 0;
    bool positive_coloring = false;
    bool negative_coloring = false;
    bool positive_consistent = true;  // 2|E| == -k (mod 4) whenever the coloring is positive
    bool negative_consistent = true;  // 2|E| ==  k (mod 4) whenever the coloring is negative
    bool variants_coincide = false;   // k and -k agree mod 4 because k is even
};

CongruenceReport check_congruence(const Graph& g, const Coloring& c);

}  // namespace qnbc

#endif
