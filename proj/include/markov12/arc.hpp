#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "markov12/laurent.hpp"

namespace markov12 {

// Direction of travel around the orbifold point while crossing its pending arc:
// clockwise leaves through the side that follows the entry side counterclockwise.
enum class Passage { Clockwise, Counterclockwise };

struct Crossing {
  int label = 0;  // 1..3
  Passage passage = Passage::Clockwise;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// An arc from the puncture to itself, recorded by the pending arcs it crosses in
// order. An empty crossing list denotes the initial arc l_{initial_label}.
struct ArcDescriptor {
  std::vector<Crossing> crossings;
  int initial_label = 0;

  static ArcDescriptor initial(int label);
  bool is_initial() const { return crossings.empty(); }

  friend bool operator==(const ArcDescriptor&, const ArcDescriptor&) = default;
};

// Accepts "arc 3ccw 2cw 3cw", "3ccw 2cw 3cw", "arc l2" or "l2". Syntax only.
ArcDescriptor parse_arc(std::string_view text);
std::string format_arc(const ArcDescriptor& arc);

// Same curve traversed backwards: word reversed, every passage flipped.
ArcDescriptor reversed(const ArcDescriptor& arc);

// Throws InvalidArc unless the word is realized by a simple arc with minimal
// crossings: labels in range, no label repeated back to back, and the lift to
// the Farey tessellation meets none of its deck translates.
void validate_arc(const ArcDescriptor& arc);
bool is_valid_arc(const ArcDescriptor& arc);

// Product of x_label over crossings (x_label itself for an initial arc is not
// a crossing, so the initial arcs give 1).
Monomial cross_monomial(const ArcDescriptor& arc);

}  // namespace markov12
