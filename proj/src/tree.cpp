#include "treesplit/tree.hpp"

#include <deque>

namespace treesplit {

std::pair<TreeVertex, TreeVertex> endpoints(const Splitting& s,
                                            const TreeEdge& e) {
  if (s.is_hnn()) {
    Word other = free_reduce(e.rep * Word::generator(s.hnn_data().stable, -1));
    return {TreeVertex{Factor::A, e.rep}, TreeVertex{Factor::A, other}};
  }
  return {TreeVertex{Factor::A, e.rep}, TreeVertex{Factor::B, e.rep}};
}

TreeVertex act(const Splitting& s, const Word& g, const TreeVertex& v) {
  s.whole_alphabet().require_word(g);
  return TreeVertex{v.orbit, free_reduce(g * v.rep)};
}

TreeEdge act(const Splitting& s, const Word& g, const TreeEdge& e) {
  s.whole_alphabet().require_word(g);
  return TreeEdge{free_reduce(g * e.rep)};
}

bool vertex_equal(const Splitting& s, const TreeVertex& u,
                  const TreeVertex& v) {
  if (!s.is_hnn() && u.orbit != v.orbit) return false;
  Word diff = free_reduce(u.rep.inverse() * v.rep);
  if (s.is_hnn()) return s.in_base_vertex_group(diff);
  return s.in_factor(diff, u.orbit);
}

bool edge_equal(const Splitting& s, const TreeEdge& e, const TreeEdge& f) {
  return s.edge_membership(free_reduce(e.rep.inverse() * f.rep)).is_member();
}

Geodesic distance_geodesic(const Splitting& s, const TreeVertex& u,
                           const TreeVertex& v) {
  Geodesic geo;
  geo.path.push_back(u);
  Word w = free_reduce(u.rep.inverse() * v.rep);
  SyllableForm form = s.reduce(w);

  if (s.is_hnn()) {
    GenId t = s.hnn_data().stable;
    Word prefix = u.rep;
    for (std::size_t i = 0; i + 1 < form.pieces.size(); ++i) {
      prefix = free_reduce(prefix * form.pieces[i].w *
                           Word::generator(t, form.t_exps[i]));
      geo.path.push_back(TreeVertex{Factor::A, prefix});
    }
    geo.distance = static_cast<int>(form.t_exps.size());
    return geo;
  }

  std::vector<SyllableForm::Piece> sylls = form.pieces;
  // the target coset absorbs a trailing syllable of its own factor
  if (!sylls.empty() && sylls.back().factor == v.orbit) sylls.pop_back();

  Factor cur = u.orbit;
  Word prefix = u.rep;
  auto flip = [](Factor f) { return f == Factor::A ? Factor::B : Factor::A; };
  for (const auto& syl : sylls) {
    if (syl.factor != cur) {
      // cross the base edge of the current coset first
      cur = flip(cur);
      geo.path.push_back(TreeVertex{cur, prefix});
    }
    prefix = free_reduce(prefix * syl.w);
    cur = flip(cur);
    geo.path.push_back(TreeVertex{cur, prefix});
  }
  if (cur != v.orbit) {
    cur = flip(cur);
    geo.path.push_back(TreeVertex{cur, prefix});
  }
  geo.distance = static_cast<int>(geo.path.size()) - 1;
  return geo;
}

namespace {

struct NeighborSet {
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  bool complete = true;
};

NeighborSet neighbors(const Splitting& s, const TreeVertex& v,
                      int transversal_bound) {
  NeighborSet out;
  if (s.is_hnn()) {
    GenId t = s.hnn_data().stable;
    bool c0 = false, c1 = false;
    auto t0 = s.coset_transversal(Factor::A, s.edge_image(Factor::A),
                                  transversal_bound, &c0);
    auto t1 = s.coset_transversal(Factor::A, s.edge_image_conjugated(),
                                  transversal_bound, &c1);
    for (const Word& a : t0) {
      out.edges.push_back(TreeEdge{free_reduce(v.rep * a)});
      out.vertices.push_back(
          TreeVertex{Factor::A, free_reduce(v.rep * a * Word::generator(t, -1))});
    }
    for (const Word& a : t1) {
      out.edges.push_back(TreeEdge{free_reduce(v.rep * a * Word::generator(t))});
      out.vertices.push_back(
          TreeVertex{Factor::A, free_reduce(v.rep * a * Word::generator(t))});
    }
    out.complete = c0 && c1;
    return out;
  }
  Factor other = v.orbit == Factor::A ? Factor::B : Factor::A;
  bool c = false;
  auto reps = s.coset_transversal(v.orbit, s.edge_image(v.orbit),
                                  transversal_bound, &c);
  for (const Word& a : reps) {
    Word rep = free_reduce(v.rep * a);
    out.edges.push_back(TreeEdge{rep});
    out.vertices.push_back(TreeVertex{other, rep});
  }
  out.complete = c;
  return out;
}

}  // namespace

TreeBall expand_ball(const Splitting& s, const TreeVertex& center, int radius,
                     int transversal_bound) {
  TreeBall ball;
  ball.center = center;
  ball.radius = radius;
  ball.transversal_bound = transversal_bound;
  ball.vertices.push_back(center);
  ball.parent.push_back(-1);
  ball.parent_edge.push_back(TreeEdge{});
  ball.depth.push_back(0);
  ball.truncated.push_back(false);

  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    if (ball.depth[idx] >= radius) {
      ball.truncated[idx] = true;  // unexpanded frontier
      continue;
    }
    TreeVertex v = ball.vertices[idx];
    NeighborSet ns = neighbors(s, v, transversal_bound);
    if (!ns.complete) ball.truncated[idx] = true;
    int parent = ball.parent[idx];
    for (std::size_t i = 0; i < ns.vertices.size(); ++i) {
      if (parent >= 0 &&
          vertex_equal(s, ns.vertices[i],
                       ball.vertices[static_cast<std::size_t>(parent)])) {
        continue;
      }
      // the tree has no other repeats; the transversal already deduplicated
      // sibling cosets
      ball.vertices.push_back(ns.vertices[i]);
      ball.parent.push_back(static_cast<int>(idx));
      ball.parent_edge.push_back(ns.edges[i]);
      ball.depth.push_back(ball.depth[idx] + 1);
      ball.truncated.push_back(false);
      frontier.push_back(ball.vertices.size() - 1);
    }
  }
  return ball;
}

std::optional<std::size_t> find_vertex(const Splitting& s, const TreeBall& ball,
                                       const TreeVertex& v) {
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (vertex_equal(s, ball.vertices[i], v)) return i;
  }
  return std::nullopt;
}

std::vector<int> bfs_distances(const TreeBall& ball, std::size_t from) {
  std::vector<std::vector<std::size_t>> adj(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball.parent[i] >= 0) {
      auto p = static_cast<std::size_t>(ball.parent[i]);
      adj[i].push_back(p);
      adj[p].push_back(i);
    }
  }
  std::vector<int> dist(ball.size(), -1);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t nb : adj[cur]) {
      if (dist[nb] < 0) {
        dist[nb] = dist[cur] + 1;
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

std::string export_dot(const Splitting& s, const TreeBall& ball,
                       const DotOptions& options) {
  std::string out = "graph ball {\n";
  auto label = [&](const TreeVertex& v) {
    std::string orbit = s.is_hnn() ? "V" : (v.orbit == Factor::A ? "VA" : "VB");
    return orbit + " | " + format_word(s.normal_form_word(v.rep));
  };
  for (std::size_t i = 0; i < ball.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + label(ball.vertices[i]) +
           "\"];\n";
  }
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (ball.parent[i] < 0) continue;
    std::string a = "n" + std::to_string(ball.parent[i]);
    std::string b = "n" + std::to_string(i);
    if (options.barycentric) {
      std::string mid = "m" + std::to_string(i);
      out += "  " + mid + " [shape=point, label=\"\"];\n";
      out += "  " + a + " -- " + mid + ";\n";
      out += "  " + mid + " -- " + b + ";\n";
    } else {
      out += "  " + a + " -- " + b + " [label=\"" +
             format_word(s.normal_form_word(ball.parent_edge[i].rep)) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace treesplit
