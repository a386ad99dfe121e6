#pragma once

#include <string>

#include "smcnets/prenet.hpp"
#include "smcnets/signature.hpp"
#include "smcnets/term.hpp"

namespace smcnets {

/// The net [op] : a -> b with support [op]: the domain is wired into the
/// antecedent copy of a inside ty(op) = a -o b, the consequent copy of b
/// into the codomain.
Net generator_net(const std::string& op, const Signature& sig);

/// Net of a structural constant (assoc, unitors, sym, eval, coeval and their
/// inverses). Empty support, leaves wired by the evident correspondence.
/// The domain unit dropped by lunit/runit is attached to the first
/// target-side port, codomain first then domain, that keeps the net correct.
Net structural_net(const Term& constant);

/// Structural recursion: generators, constants and identities map to their
/// nets, composition to gluing, tensor to tensor, and f -o g to
/// curry(g . eval . (id * f)).
Net translate(const Term& t, const Signature& sig);

}  // namespace smcnets
