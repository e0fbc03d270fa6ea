#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesplit/splitting.hpp"

namespace treesplit {

// Vertex of the coset tree: an A- or B-coset (amalgam) or an A-coset (HNN,
// orbit tag always A). Equality is semantic, via the coset test.
struct TreeVertex {
  Factor orbit = Factor::A;
  Word rep;
};

// Edge = coset of the edge group.
struct TreeEdge {
  Word rep;
};

std::pair<TreeVertex, TreeVertex> endpoints(const Splitting& s,
                                            const TreeEdge& e);

TreeVertex act(const Splitting& s, const Word& g, const TreeVertex& v);
TreeEdge act(const Splitting& s, const Word& g, const TreeEdge& e);

bool vertex_equal(const Splitting& s, const TreeVertex& u, const TreeVertex& v);
bool edge_equal(const Splitting& s, const TreeEdge& e, const TreeEdge& f);

struct Geodesic {
  int distance = 0;
  std::vector<TreeVertex> path;  // from u to v inclusive
};

// Geodesic from the reduced syllable form of rep_u^-1 rep_v. Must agree with
// breadth-first search inside any ball containing both endpoints.
Geodesic distance_geodesic(const Splitting& s, const TreeVertex& u,
                           const TreeVertex& v);

// Finite window onto the tree. parent[i] is the index of the BFS parent
// (-1 for the center); edge i connects vertices[i] and vertices[parent[i]].
struct TreeBall {
  TreeVertex center;
  int radius = 0;
  int transversal_bound = 0;
  std::vector<TreeVertex> vertices;
  std::vector<int> parent;
  std::vector<TreeEdge> parent_edge;
  std::vector<int> depth;
  std::vector<bool> truncated;  // per-vertex: neighbor enumeration was cut

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

TreeBall expand_ball(const Splitting& s, const TreeVertex& center, int radius,
                     int transversal_bound);

// Index of a vertex of the ball semantically equal to v, if present.
std::optional<std::size_t> find_vertex(const Splitting& s, const TreeBall& ball,
                                       const TreeVertex& v);

// BFS distances from vertex index `from` inside the ball (tree metric
// restricted to the ball).
std::vector<int> bfs_distances(const TreeBall& ball, std::size_t from);

struct DotOptions {
  bool barycentric = false;
};

// Deterministic DOT text for the ball.
std::string export_dot(const Splitting& s, const TreeBall& ball,
                       const DotOptions& options = {});

}  // namespace treesplit
