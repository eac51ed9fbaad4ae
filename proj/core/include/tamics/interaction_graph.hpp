#pragma once

#include <string>
#include <vector>

#include "tamics/social_network.hpp"

namespace tamics {

struct Arc {
  int to = 0;
  double p = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Uncertain directed graph: every stored arc has p in (0, 1]. Out- and
// in-adjacency are kept consistent and sorted by neighbor id. Also used for
// the supergraph (p(e) = f(max-topic weight)), marked by an empty topic().
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(int n) : out_(n), in_(n) {}

  int vertex_space() const { return static_cast<int>(out_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Arc>& out(int v) const { return out_[v]; }
  const std::vector<Arc>& in(int v) const { return in_[v]; }

  // True iff v is an endpoint of some stored edge.
  bool present(int v) const { return !out_[v].empty() || !in_[v].empty(); }
  std::vector<int> present_vertices() const;
  int present_count() const;

  bool is_supergraph() const { return topic_.empty(); }
  const TopicVector& topic() const { return topic_; }

  // Insertion helper for builders; callers must not add duplicates.
  void add_edge(int src, int dst, double p);
  void set_topic(TopicVector q) { topic_ = std::move(q); }
  void finalize();  // sorts adjacency by neighbor id

  // Canonical serialization used by determinism checks.
  std::string serialize() const;

 private:
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::size_t edge_count_ = 0;
  TopicVector topic_;
};

// Keeps edge e iff p = f(<w(e), q>) > 0; probabilities clamped into [0,1].
InteractionGraph extract_interaction_graph(const SocialNetwork& net,
                                           const TopicVector& q,
                                           Normalization f);

// p(e) = f(max_i w_i(e)); dominates every query's interaction graph.
InteractionGraph build_supergraph(const SocialNetwork& net, Normalization f);

}  // namespace tamics
