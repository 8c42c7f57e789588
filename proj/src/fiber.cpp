#include "raagrep/fiber.hpp"

#include <algorithm>

#include "raagrep/sweep.hpp"

namespace raagrep {

FiberClass FiberClass::components(std::uint64_t n) {
  if (n == 0) return empty();
  if (n == 1) return connected();
  return {FiberVerdict::ComponentCount, n};
}

std::optional<std::uint64_t> FiberClass::component_count() const {
  switch (verdict) {
    case FiberVerdict::Empty: return 0;
    case FiberVerdict::NonemptyConnected: return 1;
    case FiberVerdict::ComponentCount: return count;
    case FiberVerdict::Unknown: return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(const FiberClass& f) {
  switch (f.verdict) {
    case FiberVerdict::Empty: return "Empty";
    case FiberVerdict::NonemptyConnected: return "NonemptyConnected";
    case FiberVerdict::ComponentCount: return "ComponentCount(" + std::to_string(f.count) + ")";
    case FiberVerdict::Unknown: return "Unknown";
  }
  return "?";
}

FiberClass combine_disjoint(const FiberClass& a, const FiberClass& b) {
  if (a.verdict == FiberVerdict::Empty || b.verdict == FiberVerdict::Empty) return FiberClass::empty();
  const auto ca = a.component_count(), cb = b.component_count();
  if (!ca || !cb) return FiberClass::unknown();
  return FiberClass::components(*ca * *cb);
}

std::string step_name(const ReductionStep& s) {
  struct Namer {
    std::string operator()(const step::VertexDeletion&) const { return "VertexDeletion"; }
    std::string operator()(const step::EdgeContraction&) const { return "EdgeContraction"; }
    std::string operator()(const step::EmptyByEdgeContraction2&) const { return "EmptyByEdgeContraction2"; }
    std::string operator()(const step::ConnectedByDegeneracyOrdering&) const {
      return "ConnectedByDegeneracyOrdering";
    }
    std::string operator()(const step::EmptyByK4Core&) const { return "EmptyByK4Core"; }
    std::string operator()(const step::Residual&) const { return "Residual"; }
  };
  return std::visit(Namer{}, s);
}

namespace {

bool all_marked(const MarkedGraph& m, std::size_t v, Sign s, std::optional<std::size_t> except = {}) {
  for (std::size_t e : m.graph.incident_edges(v)) {
    if (e != except && m.mark(e) != s) return false;
  }
  return true;
}

bool has_minus_edge(const MarkedGraph& m, std::size_t v) { return !all_marked(m, v, Sign::plus); }

MarkedGraph apply_deletion(const MarkedGraph& m, std::size_t v) {
  SubgraphResult sub = vertex_delete(m.graph, v);
  EdgeMarking marking = pullback_marking(sub.inclusion, m.marking);
  return {std::move(sub.graph), std::move(marking)};
}

MarkedGraph apply_contraction(const MarkedGraph& m, std::size_t e, EdgeMarking reduced) {
  return {edge_contract(m.graph, e).graph, std::move(reduced)};
}

}  // namespace

ReductionResult reduce(const MarkedGraph& input) {
  ReductionResult r{input, {}, false};
  MarkedGraph& cur = r.residual;
  for (;;) {
    bool acted = false;
    for (std::size_t v = 0; v < cur.graph.vertex_count() && !acted; ++v) {
      if (!all_marked(cur, v, Sign::plus)) continue;
      std::string name = cur.graph.name(v);
      cur = apply_deletion(cur, v);
      r.trace.push_back({step::VertexDeletion{std::move(name)}, cur});
      acted = true;
    }
    if (acted) continue;

    for (std::size_t e = 0; e < cur.graph.edge_count() && !acted; ++e) {
      if (cur.mark(e) != Sign::plus) continue;
      const Edge ed = cur.graph.edge(e);
      const bool leaf = cur.graph.degree(ed.v) == 1 || cur.graph.degree(ed.w) == 1;
      const bool both_minus = has_minus_edge(cur, ed.v) && has_minus_edge(cur, ed.w);
      const auto obstacle = e_reduction_obstacle(cur, e);
      if ((leaf || both_minus) && !obstacle) {
        step::EdgeContraction s{cur.graph.name(ed.v), cur.graph.name(ed.w)};
        cur = apply_contraction(cur, e, *e_reduction(cur, e));
        r.trace.push_back({std::move(s), cur});
        acted = true;
      } else if (obstacle && both_minus) {
        r.trace.push_back(
            {step::EmptyByEdgeContraction2{cur.graph.name(ed.v), cur.graph.name(ed.w), cur.graph.name(*obstacle)},
             cur});
        r.empty = true;
        return r;
      }
    }
    if (!acted) break;
  }
  return r;
}

bool replay_trace(const MarkedGraph& input, const ReductionTrace& trace) {
  MarkedGraph cur = input;
  for (const TraceEntry& entry : trace) {
    if (const auto* del = std::get_if<step::VertexDeletion>(&entry.step)) {
      const auto v = cur.graph.find_vertex(del->vertex);
      if (!v || !all_marked(cur, *v, Sign::plus)) return false;
      cur = apply_deletion(cur, *v);
    } else if (const auto* con = std::get_if<step::EdgeContraction>(&entry.step)) {
      const auto v = cur.graph.find_vertex(con->v), w = cur.graph.find_vertex(con->w);
      if (!v || !w) return false;
      const auto e = cur.graph.edge_index(*v, *w);
      if (!e || cur.mark(*e) != Sign::plus) return false;
      auto reduced = e_reduction(cur, *e);
      if (!reduced) return false;
      cur = apply_contraction(cur, *e, std::move(*reduced));
    }
    if (!(cur == entry.after)) return false;
  }
  return true;
}

Classification classify_fiber(const MarkedGraph& m) {
  ReductionResult red = reduce(m);
  Classification out{FiberClass::connected(), std::move(red.trace)};
  if (red.empty) {
    out.fiber = FiberClass::empty();
    return out;
  }
  const MarkedGraph& res = red.residual;
  const Graph& g = res.graph;

  std::vector<bool> minus_edges(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) minus_edges[e] = res.mark(e) == Sign::minus;
  if (auto clique = find_k4(g, minus_edges)) {
    step::EmptyByK4Core s;
    for (std::size_t t = 0; t < 4; ++t) s.clique[t] = g.name((*clique)[t]);
    out.trace.push_back({std::move(s), res});
    out.fiber = FiberClass::empty();
    return out;
  }

  for (const auto& comp : connected_components(g)) {
    const SubgraphResult sub = induced_subgraph(g, comp);
    const bool all_minus = std::all_of(sub.graph.edges().begin(), sub.graph.edges().end(), [&](const Edge& e) {
      return res.mark(*g.edge_index(comp[e.v], comp[e.w])) == Sign::minus;
    });
    std::vector<std::string> names;
    if (auto order = all_minus ? degeneracy_ordering(sub.graph) : std::nullopt) {
      for (std::size_t v : *order) names.push_back(sub.graph.name(v));
      out.trace.push_back({step::ConnectedByDegeneracyOrdering{std::move(names)}, res});
    } else {
      names = sub.graph.names();
      out.trace.push_back({step::Residual{std::move(names)}, res});
      out.fiber = FiberClass::unknown();
    }
  }
  return out;
}

std::optional<std::uint64_t> count_components(const Graph& k, const CountOptions& opts) {
  if (classify_shape(k).all_trees_or_cycles) return std::uint64_t{1} << k.edge_count();
  SweepOptions sweep{opts.jobs, opts.allow_large, false};
  const auto rows = opts.jobs > 0 ? sweep_markings_parallel(k, sweep) : sweep_markings_serial(k, sweep);
  std::uint64_t total = 0;
  for (const auto& row : rows) {
    const auto c = row.fiber.component_count();
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

SurjectivityResult obstruction_surjective(const Graph& k) {
  const ShapeReport shape = classify_shape(k);
  if (shape.all_trees_or_cycles) return {Surjectivity::Yes, std::nullopt};
  for (const auto& comp : shape.components) {
    if (comp.is_cycle || !comp.has_3cycle) continue;
    const auto tri = *find_triangle(k, comp.vertices);
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t b = tri[t], c = tri[(t + 1) % 3], d = tri[(t + 2) % 3];
      for (std::size_t a : k.neighbors(b)) {
        if (a == c || a == d) continue;
        EdgeMarking w = constant_marking(k, Sign::plus);
        w[*k.edge_index(d, c)] = Sign::minus;
        w[*k.edge_index(b, a)] = Sign::minus;
        return {Surjectivity::No, std::move(w)};
      }
    }
  }
  return {Surjectivity::Unknown, std::nullopt};
}

}  // namespace raagrep
