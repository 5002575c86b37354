#pragma once

#include <array>
#include <optional>
#include <vector>

#include "markov12/arc.hpp"
#include "markov12/integer.hpp"

// The orbifold with one puncture and three order-3 points, lifted to the
// hyperbolic plane. Lifts of the puncture are the Farey cusps Q ∪ {∞}; the
// Farey triangles alternate between central triangles (lifts of the triangle
// bounded by l1, l2, l3) and monogon triangles (three lifts of l_i around one
// orbifold point). The root central triangle is (0, 1, ∞) with sides
// (0,1) = l1, (1,∞) = l2, (∞,0) = l3.
namespace markov12::farey {

// p/q in lowest terms with q >= 0; ∞ is 1/0.
struct Cusp {
  Integer p, q;

  Cusp() : p(1), q(0) {}
  Cusp(Integer num, Integer den);
  static Cusp infinity() { return Cusp(); }
  static Cusp integer(const Integer& n) { return Cusp(n, 1); }
  bool is_infinity() const { return q == 0; }

  friend bool operator==(const Cusp&, const Cusp&) = default;
};

// Cyclic order on the boundary circle: increasing rationals, ∞ last.
bool cusp_less(const Cusp& a, const Cusp& b);
// v lies on the closed boundary arc running counterclockwise from a to b.
bool on_closed_arc(const Cusp& v, const Cusp& a, const Cusp& b);
// Chords (a,b) and (c,d) cross in the interior.
bool chords_cross(const Cusp& a, const Cusp& b, const Cusp& c, const Cusp& d);

// Element of PSL(2,Z) acting by Möbius transformations; determinant 1.
struct Mobius {
  Integer a = 1, b = 0, c = 0, d = 1;

  Cusp operator()(const Cusp& z) const;
  Mobius operator*(const Mobius& o) const;
  Mobius inverse() const { return Mobius{d, -b, -c, a}; }

  friend bool operator==(const Mobius& x, const Mobius& y) {
    return (x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d) ||
           (x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d);
  }
};

// Vertices in counterclockwise (cyclic increasing) order; side i joins
// vertices i and i+1.
using Triangle = std::array<Cusp, 3>;
Triangle ccw(const Cusp& x, const Cusp& y, const Cusp& z);
// The Farey neighbour of edge (a,b) other than `opposite`.
Cusp third_vertex(const Cusp& a, const Cusp& b, const Cusp& opposite);
// Index of side {a,b} in t; throws InternalInconsistency if absent.
int side_index(const Triangle& t, const Cusp& a, const Cusp& b);
// Orientation-preserving map sending (0, 1, ∞) to (u0, u1, u2).
Mobius map_from_root(const Cusp& u0, const Cusp& u1, const Cusp& u2);

struct LabeledTriangle {
  Triangle vertices;
  bool central = true;
  // Central: label of side 0 (side i carries first_label + i, cyclically).
  // Monogon: the monogon's label, carried by all three sides.
  int first_label = 1;

  int side_label(int side) const;
};

LabeledTriangle root_triangle();
// Labels of an arbitrary Farey triangle, found by walking from the root.
LabeledTriangle label_triangle(const Cusp& x, const Cusp& y, const Cusp& z);

struct Lift {
  Cusp start, end;
  std::vector<LabeledTriangle> centrals;  // central triangles met, in order
};
// Lifts a crossing word starting in the root triangle. Throws InvalidArc on a
// label out of range or a label repeated back to back.
Lift lift_arc(const ArcDescriptor& arc);
// No deck translate of the lifted geodesic crosses it.
bool is_simple(const Lift& lift);

// Crossing word of the geodesic from cusp v to cusp w. When (v, w) is an edge
// of the tessellation the result is that initial arc.
ArcDescriptor crossing_word(const Cusp& v, const Cusp& w);

// A triangulation of the orbifold by three loops at the puncture, stored as a
// lifted hexagon: segment i runs from vertex v_i to v_{i+1} = rho_i(v_i), where
// rho_i is the rotation about the orbifold point enclosed by loop i.
class Triangulation {
 public:
  static Triangulation initial();
  // Replaces the loop labelled k by the other loop completing the triangulation.
  Triangulation flip(int k) const;
  ArcDescriptor arc(int k) const;

 private:
  struct Segment {
    Cusp vertex;
    Mobius rotation;
    int label;
  };
  std::array<Segment, 3> segments_;
};

}  // namespace markov12::farey
