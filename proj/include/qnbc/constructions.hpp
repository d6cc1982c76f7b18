#ifndef QNBC_CONSTRUCTIONS_HPP
#define QNBC_CONSTRUCTIONS_HPP

#include <optional>
#include <utility>

#include "qnbc/graph.hpp"

namespace qnbc {

/// Host graph on 3n vertices containing the input as an induced subgraph,
/// together with a quasi balanced coloring of the host. Layer p occupies
/// indices [p*n, (p+1)*n); the embedding maps v onto its layer-0 copy.
struct EmbedResult {
    Graph host;
    Coloring host_coloring;
    VertexMap embedding;
};

/// Three stacked copies of the vertex set: layers 0 and 1 each carry a copy
/// of the input edges, layer 0 connects to layer 1 across every input edge
/// (both orientations), and layer 2 is a pendant matched to layer 1. Layer 0
/// is red, layers 1 and 2 blue; the host is always quasi balanced, whatever
/// the input looks like.
EmbedResult heredity_embed(const Graph& g);

/// True iff `map` certifies g as an induced subgraph of `host`: u,v adjacent
/// in g exactly when their images are adjacent in host. Throws when the map
/// is not injective or leaves the host's vertex range.
bool verify_induced(const Graph& g, const Graph& host, const VertexMap& map);

/// A neighborhood balanced instance turned quasi balanced: one new red
/// vertex attached to both endpoints of a red-blue edge.
struct GadgetResult {
    Graph graph;
    Coloring coloring;
    int added_vertex = -1;
    std::pair<int, int> anchor_edge{-1, -1};
};

/// Requires classify(g, c) to be neighborhood balanced and g to have at
/// least one edge. `edge`, when given, must be a red-blue edge of g;
/// otherwise the lexicographically least red-blue edge is used. Exactly the
/// two anchor endpoints end up with odd degree, each favoring red.
GadgetResult nbc_to_qnbc_gadget(const Graph& g, const Coloring& c,
                                std::optional<std::pair<int, int>> edge = std::nullopt);

/// Deletes the added vertex and re-checks that the restored pair is
/// neighborhood balanced; throws if the gadget was tampered with.
std::pair<Graph, Coloring> gadget_inverse(const GadgetResult& gr);

}  // namespace qnbc

#endif
