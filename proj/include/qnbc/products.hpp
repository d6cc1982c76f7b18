#ifndef QNBC_PRODUCTS_HPP
#define QNBC_PRODUCTS_HPP

#include <optional>

#include "qnbc/graph.hpp"

namespace qnbc {

enum class ProductKind { Lexicographic, Direct, Cartesian, Strong, Join };

const char* product_kind_name(ProductKind kind);

/// Pair-vertex encoding shared by the four vertex-pair products:
/// (u, v) <-> u * |V(H)| + v. H-layers are the rows (fixed u), G-layers the
/// columns (fixed v). The join instead concatenates: G first, then H.
struct ProductVertex {
    int g = 0;
    int h = 0;

    static ProductVertex from_index(int index, int h_count) {
        return {index / h_count, index % h_count};
    }
    int to_index(int h_count) const { return g * h_count + h; }
};

/// Adjacency rules:
///  - lexicographic: uu' in E(G), or u = u' and vv' in E(H)
///  - direct:        uu' in E(G) and vv' in E(H)
///  - cartesian:     u = u' and vv' in E(H), or v = v' and uu' in E(G)
///  - strong:        edge-disjoint union of cartesian and direct
///  - join:          E(G) + E(H) + all edges between the two vertex sets
Graph product_graph(ProductKind kind, const Graph& g, const Graph& h);

// Every lift re-classifies its inputs and rejects hypothesis violations with
// std::invalid_argument: the constructions below are only certified under
// the stated preconditions.

/// Lexicographic lift. Without g_coloring: h_coloring must be quasi balanced
/// with equal red/blue counts, and every H-layer is colored by it. With
/// g_coloring: g_coloring must be neighborhood balanced and h_coloring quasi
/// balanced; red layers get h_coloring, blue layers its complement.
Coloring lift_lexicographic(const Graph& g, const std::optional<Coloring>& g_coloring,
                            const Graph& h, const Coloring& h_coloring);

/// Direct-product lift: g_coloring quasi balanced, h_coloring neighborhood
/// balanced or quasi balanced. G-layer G_v gets g_coloring when v is red
/// under h_coloring, its complement when blue. Result is neighborhood
/// balanced when h_coloring is, quasi balanced when h_coloring is.
Coloring lift_direct(const Graph& g, const Coloring& g_coloring,
                     const Graph& h, const Coloring& h_coloring);

/// Cartesian lift, same layer rule: g_coloring quasi balanced (positivity or
/// negativity carries over), h_coloring neighborhood balanced.
Coloring lift_cartesian(const Graph& g, const Coloring& g_coloring,
                        const Graph& h, const Coloring& h_coloring);

/// Strong-product lift, same layer rule and the cartesian hypotheses.
Coloring lift_strong(const Graph& g, const Coloring& g_coloring,
                     const Graph& h, const Coloring& h_coloring);

/// Join-theorem selector. Balanced: both quasi balanced with equal internal
/// red/blue counts. NbcPlusOne: g neighborhood balanced with one extra red,
/// h neighborhood balanced and balanced (result is uniform, dominant red).
/// QnbcPlusOne: g quasi balanced with one extra red, h neighborhood balanced
/// and balanced. Positive/Negative/Uniform add the variant hypotheses on top
/// of Balanced; Uniform requires matching dominant colors.
enum class JoinMode { Balanced, NbcPlusOne, QnbcPlusOne, Positive, Negative, Uniform };

const char* join_mode_name(JoinMode mode);

/// Join lift: the two colorings concatenated (G first), gated by `mode`.
Coloring lift_join(const Graph& g, const Coloring& g_coloring,
                   const Graph& h, const Coloring& h_coloring, JoinMode mode);

}  // namespace qnbc

#endif
