#ifndef QNBC_GRAPH_HPP
#define QNBC_GRAPH_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qnbc {

// Raised when graph or coloring text does not match the documented format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Color : unsigned char { Red = 0, Blue = 1 };

inline Color complement(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

/// Total assignment vertex -> color, indexed by vertex.
using Coloring = std::vector<Color>;

Coloring complement_coloring(const Coloring& c);
int count_color(const Coloring& c, Color color);

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Edges are kept normalized (u < v), deduplicated and sorted; adjacency
/// lists are sorted and consistent with the edge set.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    int odd_degree_count() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Graph files are DIMACS-style edge lists: a header "p edge <n> <m>", one
// "e <u> <v>" line per edge with 1-indexed endpoints, and comment lines
// starting with "c". Duplicate edge lines collapse into one edge; self-loops
// are rejected; <m> must equal the number of distinct edges.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void serialize_graph(const Graph& g, std::ostream& out);
std::string serialize_graph(const Graph& g);

// Coloring files are a single line of 'R'/'B' characters; character i gives
// the color of vertex i (1-indexed). Trailing whitespace is ignored.
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(const std::string& text);
void serialize_coloring(const Coloring& c, std::ostream& out);
std::string serialize_coloring(const Coloring& c);

/// Injective vertex map certifying an induced-subgraph embedding:
/// target[v] is the image of source vertex v.
struct VertexMap {
    std::vector<int> target;
};

}  // namespace qnbc

#endif
