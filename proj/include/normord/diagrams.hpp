#pragma once

#include "normord/contractions.hpp"
#include "normord/word.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace normord {

struct DiagramGeometry {
  int pitch = 40;        // horizontal distance between vertices
  int arc_scale = 10;    // apex height per unit of |q - p|
  int radius = 6;
};

struct DiagramSpec {
  Word word;
  Matching matching;
  std::size_t modes = 1;
  /// Zero-based mode -> SVG colour. Missing modes fall back to default_colour.
  std::map<std::uint32_t, std::string> palette;
  DiagramGeometry geometry;
  /// Monochrome output with one marker shape per mode instead of colours.
  bool shape_encoding = false;
};

/// #000000, #c02020, then a fixed eight-colour cycle.
std::string default_colour(std::uint32_t mode);

/// Spec with the default palette for every mode of the word.
DiagramSpec make_diagram(const Word& word, const Matching& matching, std::size_t modes);

/// Throws std::invalid_argument when the palette misses a used mode or the
/// matching is not a set of disjoint (annihilator, later creator) pairs.
void validate(const DiagramSpec& spec);

/// SVG 1.1 document: vertices on a baseline, numbered from 1 beneath,
/// annihilators hollow and creators filled, arcs above the baseline.
std::string render_svg(const DiagramSpec& spec);

/// Plain ASCII: arc rows above a row of grammar tokens.
std::string render_ascii(const DiagramSpec& spec);

}  // namespace normord
