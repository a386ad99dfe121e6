#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "smcnets/prenet.hpp"
#include "smcnets/term.hpp"
#include "smcnets/theory.hpp"

namespace kit {

using Rng = std::mt19937_64;
using smcnets::Formula;
using smcnets::Net;
using smcnets::Signature;
using smcnets::Term;
using smcnets::Theory;

std::string theory_path(const std::string& name);
Theory fixture(const std::string& name);

// ---- generators ----

/// Node count at most max_size, leaves drawn from `sorts` and, when
/// allowed, the unit.
Formula random_formula(Rng& rng, std::size_t max_size, const std::vector<std::string>& sorts = {"x", "y"},
                       bool allow_unit = true);

/// One random morphism out of `from`: a structural map, a generator whose
/// source matches, or either of these under a tensor or hom context.
/// Codomains larger than `cap` nodes are avoided when possible.
Term random_step(Rng& rng, const Formula& from, const Signature& sig, int context_depth, std::size_t cap);

/// Composite of `steps` random steps starting at `from`.
Term random_chain(Rng& rng, const Formula& from, const Signature& sig, int steps, std::size_t cap);

/// Well-typed term of depth at most `depth`.
Term random_term(Rng& rng, const Signature& sig, int depth);

/// A correct net with domain `from`, built by translating a random chain.
Net random_net_from(Rng& rng, const Formula& from, const Signature& sig, int steps, std::size_t cap);

/// An arbitrary prenet: random formulas, a random sort bijection, and each
/// unit source sent to a random target-side port. Usually incorrect.
Net random_prenet(Rng& rng, std::size_t max_size);

// ---- oracles ----

std::size_t oracle_par_count(const Net& n);

/// Every switching built from scratch and checked with |E| = |V| - 1 plus
/// a breadth-first connectivity sweep.
bool oracle_is_correct(const Net& n);

/// Composition by transitive closure over the glued port graph.
Net oracle_compose(const Net& f, const Net& g);

/// Tries every support bijection.
bool oracle_support_iso(const Net& f, const Net& g);

/// Unit-edge assignments reachable from `n` by single correct retargets,
/// enumerated over all assignments.
std::vector<Net> oracle_rewiring_component(const Net& n);

bool oracle_nets_equal(const Net& f, const Net& g);

std::size_t unit_edge_count(const Net& n);

}  // namespace kit
