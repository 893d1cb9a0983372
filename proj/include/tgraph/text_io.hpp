#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tgraph/temporal_graph.hpp"

namespace tgraph {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

// Text format: a line `n <count>`, then one `u v t` line per appearance.
// Blank lines and lines starting with '#' are ignored on input.

void write_graph(std::ostream& out, const TemporalGraph& g);

/// Appearances of the same pair are merged into one multi-labelled edge.
/// Without an explicit window, the window is [min(0, min label),
/// max(1, max label)]. Throws ParseError on malformed input.
TemporalGraph read_graph(std::istream& in,
                         std::optional<Window> window = std::nullopt);

/// `u v t` lines; an `n <count>` line is accepted and ignored.
std::vector<Appearance> read_appearances(std::istream& in);
void write_appearances(std::ostream& out, std::size_t n,
                       const std::vector<Appearance>& appearances);

}  // namespace tgraph
