#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "cliquebounds/graph.hpp"
#include "cliquebounds/weight.hpp"

namespace cliquebounds {

/// How to choose among vertices that tie for the maximum degree.
///
/// The default picks the lowest id. A seeded policy picks uniformly among the
/// tied vertices with its own mt19937_64 stream; copies advance independently.
class TieBreak {
 public:
  static TieBreak lowest_id() { return TieBreak(); }
  static TieBreak seeded(std::uint64_t seed) { return TieBreak(seed); }

  bool randomized() const noexcept { return rng_.has_value(); }

  /// `tied` must be nonempty and sorted.
  Vertex pick(const std::vector<Vertex>& tied);

 private:
  TieBreak() = default;
  explicit TieBreak(std::uint64_t seed) : rng_(std::mt19937_64(seed)) {}

  std::optional<std::mt19937_64> rng_;
};

enum class SequenceKind {
  alpha,  // ranks candidates by degree inside G[N(v_1..v_{i-1})]
  beta,   // ranks candidates by degree in G
};

std::string_view to_string(SequenceKind kind);

/// One greedy step: the set the vertex was drawn from, the vertex, and the
/// degree that made it a maximum (induced degree for α, global for β).
struct SequenceStep {
  VertexSet candidates;
  Vertex chosen = 0;
  std::size_t selection_degree = 0;
};

/// An α- or β-sequence v_1..v_r together with its construction trace.
///
/// Instances are only produced by the builders below or by from_vertices,
/// which checks the kind's selection rule, so every value is a valid
/// (possibly non-maximal) sequence of its kind and a clique of g.
class VertexSequence {
 public:
  /// Validates `vertices` against the selection rule of `kind` and rebuilds
  /// the trace. Throws PreconditionError("not an α-prefix") or
  /// ("not a β-prefix") when a step picks a vertex that is not a maximum.
  static VertexSequence from_vertices(const Graph& g, SequenceKind kind,
                                      const std::vector<Vertex>& vertices);

  /// Zero-length sequence whose first extension picks v_1.
  static VertexSequence begin(const Graph& g, SequenceKind kind);

  SequenceKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<SequenceStep>& trace() const noexcept { return steps_; }
  std::vector<Vertex> vertices() const;
  VertexSet as_set() const;

  /// N(v_1..v_{r-1}); absent when r = 1.
  std::optional<VertexSet> terminal() const;
  /// N(v_1..v_r); empty exactly when the sequence cannot be extended.
  const VertexSet& open_candidates() const noexcept { return next_candidates_; }
  bool is_maximal() const noexcept { return next_candidates_.empty(); }

  /// Appends one greedy step. Returns false when no candidate is left.
  bool extend(const Graph& g, TieBreak& policy);

 private:
  VertexSequence(SequenceKind kind, VertexSet first_candidates)
      : kind_(kind), next_candidates_(std::move(first_candidates)) {}

  SequenceKind kind_;
  std::vector<SequenceStep> steps_;
  VertexSet next_candidates_;
};

/// Maximal α-sequence. Throws on the empty graph.
VertexSequence build_alpha_sequence(const Graph& g, TieBreak tie_break = TieBreak::lowest_id());

/// Maximal β-sequence. Throws on the empty graph.
VertexSequence build_beta_sequence(const Graph& g, TieBreak tie_break = TieBreak::lowest_id());

struct DeltaExtension {
  VertexSequence sequence;
  // True when r >= 2 and N(v_1..v_{r-1}) is a δ-set. False only when the
  // maximal sequence has length 1.
  bool delta_terminal = false;
};

/// Shortest greedy extension of an α-prefix whose terminal is a δ-set. The
/// prefix itself is returned when it already qualifies.
DeltaExtension extend_to_delta_terminal(const Graph& g, const VertexSequence& prefix,
                                        TieBreak tie_break = TieBreak::lowest_id());

enum class Justification { theorem_1, theorem_2, theorem_3, corollary, clique_only };

std::string_view to_string(Justification j);

struct DegreeSum {
  std::size_t sum = 0;    // d(v_1) + ... + d(v_r)
  std::size_t limit = 0;  // (r - 1) n
  bool holds() const noexcept { return sum <= limit; }
};

/// A verified lower bound r <= ω(G).
///
/// Only the certify_* functions construct these, and they check every side
/// condition of the claimed justification first, including r >= W(G) for
/// anything stronger than CLIQUE_ONLY. A failed check throws
/// InvariantViolation.
class BoundCertificate {
 public:
  std::size_t r() const noexcept { return sequence_.size(); }
  Justification justification() const noexcept { return justification_; }
  /// Every justification whose hypotheses hold, primary one first.
  const std::vector<Justification>& applicable() const noexcept { return applicable_; }
  const VertexSequence& sequence() const noexcept { return sequence_; }
  const std::optional<VertexSet>& delta_terminal() const noexcept { return delta_terminal_; }
  const std::optional<DegreeSum>& degree_sum() const noexcept { return degree_sum_; }
  /// Maximality witness for the corollary: N(v_1..v_r) is empty.
  bool maximal() const noexcept { return sequence_.is_maximal(); }
  const Weight& wei_value() const noexcept { return wei_value_; }

 private:
  BoundCertificate(const Graph& g, VertexSequence sequence, std::vector<Justification> applicable,
                   std::optional<VertexSet> delta_terminal, std::optional<DegreeSum> degree_sum);

  friend std::optional<BoundCertificate> certify_alpha_sequence(const Graph&,
                                                                const VertexSequence&);
  friend std::optional<BoundCertificate> certify_beta_sequence(const Graph&,
                                                               const VertexSequence&);
  friend BoundCertificate clique_only_certificate(const Graph&, const VertexSequence&);

  VertexSequence sequence_;
  Justification justification_;
  std::vector<Justification> applicable_;
  std::optional<VertexSet> delta_terminal_;
  std::optional<DegreeSum> degree_sum_;
  Weight wei_value_;
};

/// THEOREM_1 certificate for an α-sequence with r >= 2 and a δ-set
/// terminal; nullopt when those hypotheses fail.
std::optional<BoundCertificate> certify_alpha_sequence(const Graph& g, const VertexSequence& seq);

/// Strongest of THEOREM_2 (degree-sum condition) and THEOREM_3 (r >= 2 and
/// δ-set terminal) for a β-sequence; nullopt when neither holds. COROLLARY is
/// listed among the applicable justifications when the sequence is maximal.
std::optional<BoundCertificate> certify_beta_sequence(const Graph& g, const VertexSequence& seq);

/// r = |seq| <= ω(G) with no claim about W(G).
BoundCertificate clique_only_certificate(const Graph& g, const VertexSequence& seq);

/// Certificate from the maximal α-sequence, whose terminal is independent and
/// hence a δ-set. CLIQUE_ONLY when that sequence has length 1.
BoundCertificate certify_alpha_bound(const Graph& g, TieBreak tie_break = TieBreak::lowest_id());

/// Certificate from the maximal β-sequence. CLIQUE_ONLY when it has length 1.
BoundCertificate certify_beta_bound(const Graph& g, TieBreak tie_break = TieBreak::lowest_id());

}  // namespace cliquebounds
