#include "cliquebounds/sequences.hpp"

#include <algorithm>
#include <string>

#include "cliquebounds/bounds.hpp"
#include "cliquebounds/error.hpp"

namespace cliquebounds {
namespace {

// Degree used to rank v among the candidates: inside G[candidates] for α,
// in G for β.
std::size_t ranking_degree(const Graph& g, SequenceKind kind, const VertexSet& candidates,
                           Vertex v) {
  if (kind == SequenceKind::beta) return g.degree(v);
  return (g.neighbors(v) & candidates).size();
}

struct Maxima {
  std::vector<Vertex> tied;
  std::size_t degree = 0;
};

Maxima maxima(const Graph& g, SequenceKind kind, const VertexSet& candidates) {
  Maxima m;
  candidates.for_each([&](Vertex v) {
    const std::size_t d = ranking_degree(g, kind, candidates, v);
    if (m.tied.empty() || d > m.degree) {
      m.tied.assign(1, v);
      m.degree = d;
    } else if (d == m.degree) {
      m.tied.push_back(v);
    }
  });
  return m;
}

std::size_t sequence_degree_sum(const Graph& g, const VertexSequence& seq) {
  std::size_t sum = 0;
  for (const auto& step : seq.trace()) sum += g.degree(step.chosen);
  return sum;
}

}  // namespace

Vertex TieBreak::pick(const std::vector<Vertex>& tied) {
  if (tied.empty()) throw PreconditionError("no candidates to break a tie between");
  if (!rng_) return tied.front();
  return tied[(*rng_)() % tied.size()];
}

std::string_view to_string(SequenceKind kind) {
  return kind == SequenceKind::alpha ? "alpha" : "beta";
}

std::string_view to_string(Justification j) {
  switch (j) {
    case Justification::theorem_1: return "THEOREM_1";
    case Justification::theorem_2: return "THEOREM_2";
    case Justification::theorem_3: return "THEOREM_3";
    case Justification::corollary: return "COROLLARY";
    case Justification::clique_only: return "CLIQUE_ONLY";
  }
  return "UNKNOWN";
}

VertexSequence VertexSequence::begin(const Graph& g, SequenceKind kind) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  return VertexSequence(kind, g.all_vertices());
}

VertexSequence VertexSequence::from_vertices(const Graph& g, SequenceKind kind,
                                             const std::vector<Vertex>& vertices) {
  const std::string error =
      kind == SequenceKind::alpha ? "not an α-prefix" : "not a β-prefix";
  VertexSequence seq = begin(g, kind);
  for (Vertex v : vertices) {
    if (!seq.next_candidates_.contains(v)) throw PreconditionError(error);
    const Maxima m = maxima(g, kind, seq.next_candidates_);
    if (ranking_degree(g, kind, seq.next_candidates_, v) != m.degree)
      throw PreconditionError(error);
    VertexSet remaining = seq.next_candidates_ & g.neighbors(v);
    seq.steps_.push_back({std::move(seq.next_candidates_), v, m.degree});
    seq.next_candidates_ = std::move(remaining);
  }
  return seq;
}

std::vector<Vertex> VertexSequence::vertices() const {
  std::vector<Vertex> out;
  out.reserve(steps_.size());
  for (const auto& step : steps_) out.push_back(step.chosen);
  return out;
}

VertexSet VertexSequence::as_set() const {
  VertexSet s(next_candidates_.universe());
  for (const auto& step : steps_) s.insert(step.chosen);
  return s;
}

std::optional<VertexSet> VertexSequence::terminal() const {
  if (steps_.size() < 2) return std::nullopt;
  // The last step drew v_r from N(v_1..v_{r-1}).
  return steps_.back().candidates;
}

bool VertexSequence::extend(const Graph& g, TieBreak& policy) {
  if (next_candidates_.universe() != g.order())
    throw PreconditionError("sequence extended with a different graph");
  if (next_candidates_.empty()) return false;
  const Maxima m = maxima(g, kind_, next_candidates_);
  const Vertex v = policy.pick(m.tied);
  VertexSet remaining = next_candidates_ & g.neighbors(v);
  steps_.push_back({std::move(next_candidates_), v, m.degree});
  next_candidates_ = std::move(remaining);
  return true;
}

namespace {

VertexSequence build_maximal(const Graph& g, SequenceKind kind, TieBreak& policy) {
  VertexSequence seq = VertexSequence::begin(g, kind);
  while (seq.extend(g, policy)) {
  }
  return seq;
}

}  // namespace

VertexSequence build_alpha_sequence(const Graph& g, TieBreak tie_break) {
  return build_maximal(g, SequenceKind::alpha, tie_break);
}

VertexSequence build_beta_sequence(const Graph& g, TieBreak tie_break) {
  return build_maximal(g, SequenceKind::beta, tie_break);
}

DeltaExtension extend_to_delta_terminal(const Graph& g, const VertexSequence& prefix,
                                        TieBreak tie_break) {
  if (prefix.kind() != SequenceKind::alpha) throw PreconditionError("not an α-prefix");
  // Re-derive against g so a prefix built for another graph is rejected.
  VertexSequence seq = VertexSequence::from_vertices(g, SequenceKind::alpha, prefix.vertices());
  if (seq.size() == 0) seq.extend(g, tie_break);
  while (true) {
    if (auto t = seq.terminal(); t && is_delta_set(g, *t)) return {std::move(seq), true};
    if (!seq.extend(g, tie_break)) return {std::move(seq), false};
  }
}

BoundCertificate::BoundCertificate(const Graph& g, VertexSequence sequence,
                                   std::vector<Justification> applicable,
                                   std::optional<VertexSet> delta_terminal,
                                   std::optional<DegreeSum> degree_sum)
    : sequence_(std::move(sequence)),
      justification_(applicable.front()),
      applicable_(std::move(applicable)),
      delta_terminal_(std::move(delta_terminal)),
      degree_sum_(degree_sum),
      wei_value_(wei_bound(g)) {
  const auto fail = [&](const std::string& what) {
    throw InvariantViolation(std::string(to_string(justification_)) + " certificate: " + what);
  };
  if (r() == 0) fail("empty sequence");
  // Throws if the sequence does not follow its selection rule in g.
  const VertexSequence rebuilt =
      VertexSequence::from_vertices(g, sequence_.kind(), sequence_.vertices());
  if (!is_clique(g, rebuilt.as_set())) fail("sequence is not a clique");

  for (Justification j : applicable_) {
    switch (j) {
      case Justification::theorem_1:
      case Justification::theorem_3:
        if ((j == Justification::theorem_1) != (sequence_.kind() == SequenceKind::alpha))
          fail("wrong sequence kind");
        if (r() < 2 || !delta_terminal_ || delta_terminal_ != rebuilt.terminal() ||
            !is_delta_set(g, *delta_terminal_))
          fail("terminal is not a δ-set");
        break;
      case Justification::theorem_2:
        if (sequence_.kind() != SequenceKind::beta) fail("wrong sequence kind");
        if (!degree_sum_ || degree_sum_->sum != sequence_degree_sum(g, rebuilt) ||
            degree_sum_->limit != (r() - 1) * g.order() || !degree_sum_->holds())
          fail("degree-sum condition does not hold");
        break;
      case Justification::corollary:
        if (sequence_.kind() != SequenceKind::beta || !rebuilt.is_maximal())
          fail("sequence is not maximal");
        break;
      case Justification::clique_only:
        break;
    }
  }
  if (justification_ != Justification::clique_only &&
      Weight(static_cast<std::int64_t>(r())) < wei_value_) {
    fail("r = " + std::to_string(r()) + " is below W(G) = " + wei_value_.str());
  }
}

std::optional<BoundCertificate> certify_alpha_sequence(const Graph& g, const VertexSequence& seq) {
  if (seq.kind() != SequenceKind::alpha) throw PreconditionError("not an α-prefix");
  auto terminal = seq.terminal();
  if (!terminal || !is_delta_set(g, *terminal)) return std::nullopt;
  return BoundCertificate(g, seq, {Justification::theorem_1}, std::move(terminal), std::nullopt);
}

std::optional<BoundCertificate> certify_beta_sequence(const Graph& g, const VertexSequence& seq) {
  if (seq.kind() != SequenceKind::beta) throw PreconditionError("not a β-prefix");
  if (seq.size() == 0) return std::nullopt;
  const DegreeSum ds{sequence_degree_sum(g, seq), (seq.size() - 1) * g.order()};
  auto terminal = seq.terminal();
  const bool delta = terminal && is_delta_set(g, *terminal);

  std::vector<Justification> applicable;
  if (ds.holds()) applicable.push_back(Justification::theorem_2);
  if (delta) applicable.push_back(Justification::theorem_3);
  if (seq.is_maximal()) applicable.push_back(Justification::corollary);
  if (applicable.empty()) return std::nullopt;
  return BoundCertificate(g, seq, std::move(applicable), delta ? std::move(terminal) : std::nullopt,
                          ds.holds() ? std::optional<DegreeSum>(ds) : std::nullopt);
}

BoundCertificate clique_only_certificate(const Graph& g, const VertexSequence& seq) {
  return BoundCertificate(g, seq, {Justification::clique_only}, std::nullopt, std::nullopt);
}

BoundCertificate certify_alpha_bound(const Graph& g, TieBreak tie_break) {
  VertexSequence seq = build_alpha_sequence(g, std::move(tie_break));
  if (seq.size() < 2) return clique_only_certificate(g, seq);
  auto cert = certify_alpha_sequence(g, seq);
  // A maximal α-sequence has an independent terminal.
  if (!cert) throw InvariantViolation("maximal α-sequence without a δ-set terminal");
  return *std::move(cert);
}

BoundCertificate certify_beta_bound(const Graph& g, TieBreak tie_break) {
  VertexSequence seq = build_beta_sequence(g, std::move(tie_break));
  if (seq.size() < 2) return clique_only_certificate(g, seq);
  auto cert = certify_beta_sequence(g, seq);
  if (!cert) throw InvariantViolation("maximal β-sequence with no applicable theorem");
  return *std::move(cert);
}

}  // namespace cliquebounds
