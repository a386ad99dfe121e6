#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smcnets/prenet.hpp"
#include "smcnets/term.hpp"
#include "smcnets/theory.hpp"

namespace smcnets {

/// Every correct net obtained by retargeting one edge that leaves a unit
/// port. The input must be correct.
std::vector<Net> rewire_moves(const Net& n);

/// Nets reachable from a start net by rewiring, one representative per
/// support-isomorphism class, keyed by support_canonical_key.
struct RewiringOrbit {
  std::map<std::string, Net> members;

  bool contains(const Net& n) const;
  /// Least key of the orbit; equal for exactly the rewiring-equivalent nets.
  const std::string& min_key() const { return members.begin()->first; }
};

RewiringOrbit explore_rewiring(const Net& start);

/// (#target-side ports)^(#unit edges) times the number of label-preserving
/// support bijections; an upper bound on any rewiring orbit.
std::uint64_t rewiring_orbit_bound(const Net& n);

/// Equality of correct nets modulo rewiring and support isomorphism.
/// Throws TypeError when the arities differ or a net is not correct.
bool nets_equal(const Net& f, const Net& g);

/// One application of a named equation at a subterm position.
struct RewriteStep {
  std::string equation;
  bool left_to_right;
  std::vector<std::size_t> position;  // child indices from the root
  Term result;
};

std::string to_string(const RewriteStep& step);

struct SearchResult {
  enum class Verdict { Equal, NotFoundWithinBound };

  Verdict verdict;
  /// When Equal: rewrite steps from the first term, each producing the next
  /// term; the last result is net-equal to the second term.
  std::vector<RewriteStep> trace;
  std::size_t terms_explored = 0;

  bool equal() const { return verdict == Verdict::Equal; }
};

/// All single-step rewrites of `t` by an equation of `th`, either direction,
/// at any subterm position whose subterm is syntactically an equation side.
std::vector<RewriteStep> rewrites(const Term& t, const Theory& th);

/// Bidirectional breadth-first search for a chain of at most `depth`
/// equation applications connecting t1 and t2, where terms meet when their
/// nets are equal. Equal verdicts are sound; a miss is not a disproof.
SearchResult theory_equal_bounded(const Term& t1, const Term& t2, const Theory& th, std::size_t depth);

}  // namespace smcnets
