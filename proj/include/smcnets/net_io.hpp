#pragma once

#include <string>
#include <string_view>

#include "smcnets/correctness.hpp"
#include "smcnets/prenet.hpp"
#include "smcnets/signature.hpp"

namespace smcnets {

/// Canonical JSON, one line:
///   {"dom": F, "cod": F, "support": [op...],
///    "edges": [[{"region": "dom"|"cod"|{"sup": i}, "path": "LR"}, {...}]...]}
/// Edges are sorted by source port (domain, codomain, support by index,
/// then path).
std::string net_to_json(const Net& n);

/// Inverse of net_to_json. Support typings come from `sig`; without a
/// signature every identifier is read as a sort and the support must be
/// empty. Throws ParseError on malformed JSON, TypeError on ill-formed nets.
Net net_from_json(std::string_view text, const Signature* sig);

/// Formula trees as clusters, linking edges solid for sorts and dotted for
/// units.
std::string net_to_dot(const Net& n);

/// An undirected switching graph; the edges of `cycle`, if given, in red.
std::string switching_to_dot(const SwitchGraph& g, const std::vector<std::size_t>* cycle = nullptr);

}  // namespace smcnets
