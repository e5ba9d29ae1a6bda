#ifndef STSURF_IO_HPP
#define STSURF_IO_HPP

#include "stsurf/origami.hpp"

#include <string>

namespace stsurf {

// Record format: { "n": int, "h": [int...], "v": [int...] }, zero-indexed
// image sequences.
std::string to_json_record(const Origami& o);
Origami from_json_record(const std::string& text);

// Cycles variant: r=(1,2,3) u=(1,3)(2), one-indexed.
std::string to_cycles_record(const Origami& o);
Origami from_cycles_record(const std::string& text);

// Auto-detect two-row / json / cycles input.
Origami read_origami(const std::string& text);

} // namespace stsurf

#endif
