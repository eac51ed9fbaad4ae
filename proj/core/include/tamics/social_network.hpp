#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamics {

// Query/topic vector over z topics. Query vectors must lie on the simplex
// (components in [0,1], sum 1 within 1e-9); index vectors only need to be
// nonnegative and nonzero.
using TopicVector = std::vector<double>;

constexpr double kSimplexTol = 1e-9;

bool is_query_vector(const TopicVector& q);
void require_query_vector(const TopicVector& q, int z);

// Monotone map from a nonnegative dot product to an edge probability.
//   clamp(x)       = min(x, 1)
//   exponential(x) = 1 - exp(-x)
enum class Normalization : std::uint8_t { Clamp = 0, Exponential = 1 };

double normalize_weight(Normalization f, double x);
const char* normalization_name(Normalization f);
std::optional<Normalization> normalization_from_name(const std::string& name);

struct WeightedEdge {
  int src = 0;
  int dst = 0;
  std::vector<double> weights;  // exactly z nonnegative entries
};

// Directed social graph with a z-dimensional nonnegative weight vector per
// edge. No self-loops, no duplicate (src, dst) pairs. Immutable once built.
struct SocialNetwork {
  int vertex_count = 0;
  int topic_count = 1;
  std::vector<WeightedEdge> edges;                       // file order
  std::vector<std::vector<double>> vertex_topics;        // empty unless provided

  bool has_vertex_topics() const { return !vertex_topics.empty(); }
  std::size_t edge_count() const { return edges.size(); }
};

// Validates invariants; throws ValidationError naming the first offender.
void validate_network(const SocialNetwork& net);

// Text format: header "n m z", then m lines "src dst w1 .. wz", then an
// optional block starting with "#vertex-topics" followed by n lines
// "v w1 .. wz". Parse errors carry 1-based line numbers.
SocialNetwork load_social_network(const std::string& path);
SocialNetwork parse_social_network(const std::string& text, const std::string& origin);
void save_social_network(const SocialNetwork& net, const std::string& path);

}  // namespace tamics
