#pragma once

// Named graphs and random instances for sweeps and tests.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "raagrep/graph.hpp"

namespace raagrep {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);      // n >= 3
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

/// Triangles a1 a2 a3 and b1 b2 b3 joined by a_i - b_i.
Graph prism_graph();

/// n + 1 triangles t0, t1, ..., tn, each joined to the next by a matching
/// t_k[i] - t_{k+1}[i]. stacked_prism(1) is the prism.
Graph stacked_prism(std::size_t n);

/// Vertices a, b, c, d with the triangle b c d and the pendant edge b - a.
Graph graph_l();

/// All trees on n vertices up to isomorphism, each with vertices v0..v{n-1}.
/// Deduplicated by the AHU canonical string rooted at the center.
std::vector<Graph> enumerate_trees(std::size_t n);

/// Canonical string of an unrooted tree; equal iff the trees are isomorphic.
std::string tree_canonical_form(const Graph& tree);

Graph random_tree(std::size_t n, std::mt19937_64& rng);
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// A homomorphism into `target` from a random graph on `source_vertices`
/// vertices: a random vertex map, then each pair whose images are adjacent
/// becomes a source edge with probability p. Never collapses an edge.
GraphHom random_hom(const Graph& target, std::size_t source_vertices, double p, std::mt19937_64& rng);

}  // namespace raagrep
