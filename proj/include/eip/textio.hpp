#pragma once

#include <iosfwd>
#include <string>

#include "eip/hypergraph.hpp"
#include "eip/interval_system.hpp"
#include "eip/limit.hpp"

namespace eip {

/// Text format `n:a-b,a-b,...` (trivial system: `n:`). Parsers round-trip
/// with emitters byte-exactly.
std::string format_system(const IntervalSystem& sys);
IntervalSystem parse_system(const std::string& text);

/// Text format `n:{1,3},{1,2,3}`.
std::string format_hypergraph(const IntervalHypergraph& h);
IntervalHypergraph parse_hypergraph(const std::string& text);

/// Shortest decimal that round-trips the double exactly.
std::string format_double(double x);

/// Serialization: header `limitset v1 n_points=<N>`, then one `x y` per line.
void write_limitset(std::ostream& out, const LimitSet& k);
LimitSet read_limitset(std::istream& in);

/// SVG of the triangle, the diagonal and the stored points.
std::string render_limitset_svg(const LimitSet& k, double marker_radius = 4.0);

} // namespace eip
