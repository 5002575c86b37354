#include "markov12/farey.hpp"

#include <algorithm>

#include "markov12/errors.hpp"

namespace markov12::farey {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

// Central triangle crossed into through side {a,b} of a monogon labelled `label`.
LabeledTriangle central_across(const Cusp& a, const Cusp& b, const Cusp& opposite, int label) {
  LabeledTriangle t{ccw(a, b, third_vertex(a, b, opposite)), true, 1};
  const int j = side_index(t.vertices, a, b);
  t.first_label = mod3(label - 1 - j) + 1;
  return t;
}

LabeledTriangle cross_side(const LabeledTriangle& t, int side) {
  const Cusp& a = t.vertices[static_cast<std::size_t>(side)];
  const Cusp& b = t.vertices[static_cast<std::size_t>((side + 1) % 3)];
  const Cusp& o = t.vertices[static_cast<std::size_t>((side + 2) % 3)];
  if (t.central) return LabeledTriangle{ccw(a, b, third_vertex(a, b, o)), false, t.side_label(side)};
  return central_across(a, b, o, t.first_label);
}

// Vertices reordered so that side 0 carries label 1.
Triangle normalized(const LabeledTriangle& t) {
  const int k = mod3(1 - t.first_label);
  return {t.vertices[static_cast<std::size_t>(k)], t.vertices[static_cast<std::size_t>((k + 1) % 3)],
          t.vertices[static_cast<std::size_t>((k + 2) % 3)]};
}

Mobius rotation_of(const Triangle& t) {
  const Mobius h = map_from_root(t[0], t[1], t[2]);
  const Mobius root_rotation{0, 1, -1, 1};  // 0 -> 1 -> ∞ -> 0
  return h * root_rotation * h.inverse();
}

// Rotation about the orbifold point inside monogon triangle t taking `from` to `to`.
Mobius rotation_taking(const Cusp& from, const Cusp& to, const Triangle& t) {
  const Mobius r = rotation_of(t);
  if (r(from) == to) return r;
  const Mobius r2 = r * r;
  if (r2(from) == to) return r2;
  throw InternalInconsistency("no rotation of the monogon triangle takes the given vertex to the target");
}

}  // namespace

Cusp::Cusp(Integer num, Integer den) : p(std::move(num)), q(std::move(den)) {
  if (q == 0) {
    if (p == 0) throw InternalInconsistency("0/0 is not a cusp");
    p = 1;
    return;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const Integer g = gcd(p, q);
  if (g != 1) {
    p /= g;
    q /= g;
  }
}

bool cusp_less(const Cusp& a, const Cusp& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return a.p * b.q < b.p * a.q;
}

bool on_closed_arc(const Cusp& v, const Cusp& a, const Cusp& b) {
  const bool v_ge_a = !cusp_less(v, a);
  const bool v_le_b = !cusp_less(b, v);
  if (!cusp_less(b, a)) return v_ge_a && v_le_b;
  return v_ge_a || v_le_b;
}

bool chords_cross(const Cusp& a, const Cusp& b, const Cusp& c, const Cusp& d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d) return false;
  return on_closed_arc(c, a, b) != on_closed_arc(d, a, b);
}

Cusp Mobius::operator()(const Cusp& z) const { return Cusp(a * z.p + b * z.q, c * z.p + d * z.q); }

Mobius Mobius::operator*(const Mobius& o) const {
  return Mobius{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Triangle ccw(const Cusp& x, const Cusp& y, const Cusp& z) {
  Triangle t{x, y, z};
  std::sort(t.begin(), t.end(), cusp_less);
  return t;
}

Cusp third_vertex(const Cusp& a, const Cusp& b, const Cusp& opposite) {
  Cusp sum(a.p + b.p, a.q + b.q);
  if (!(sum == opposite)) return sum;
  return Cusp(a.p - b.p, a.q - b.q);
}

int side_index(const Triangle& t, const Cusp& a, const Cusp& b) {
  for (int k = 0; k < 3; ++k) {
    const Cusp& x = t[static_cast<std::size_t>(k)];
    const Cusp& y = t[static_cast<std::size_t>((k + 1) % 3)];
    if ((x == a && y == b) || (x == b && y == a)) return k;
  }
  throw InternalInconsistency("edge is not a side of the triangle");
}

Mobius map_from_root(const Cusp& u0, const Cusp& u1, const Cusp& u2) {
  Mobius h{u2.p, u0.p, u2.q, u0.q};
  const Integer det = h.a * h.d - h.b * h.c;
  if (det == -1) {
    h.b = -h.b;
    h.d = -h.d;
  } else if (det != 1) {
    throw InternalInconsistency("vertices are not a Farey triangle");
  }
  if (!(h(Cusp::integer(1)) == u1)) throw InternalInconsistency("vertices are not in counterclockwise order");
  return h;
}

int LabeledTriangle::side_label(int side) const {
  return central ? mod3(first_label - 1 + side) + 1 : first_label;
}

LabeledTriangle root_triangle() {
  return LabeledTriangle{{Cusp::integer(0), Cusp::integer(1), Cusp::infinity()}, true, 1};
}

LabeledTriangle label_triangle(const Cusp& x, const Cusp& y, const Cusp& z) {
  const Triangle target = ccw(x, y, z);
  LabeledTriangle cur = root_triangle();
  while (cur.vertices != target) {
    int side = -1;
    for (int k = 0; k < 3 && side < 0; ++k) {
      const Cusp& a = cur.vertices[static_cast<std::size_t>(k)];
      const Cusp& b = cur.vertices[static_cast<std::size_t>((k + 1) % 3)];
      if (std::all_of(target.begin(), target.end(), [&](const Cusp& v) { return on_closed_arc(v, a, b); })) {
        side = k;
      }
    }
    if (side < 0) throw InternalInconsistency("target is not a Farey triangle");
    cur = cross_side(cur, side);
  }
  return cur;
}

Lift lift_arc(const ArcDescriptor& arc) {
  LabeledTriangle cur = root_triangle();
  Lift lift;
  lift.centrals.push_back(cur);
  if (arc.is_initial()) {
    if (arc.initial_label < 1 || arc.initial_label > 3) throw InvalidArc("initial arc label out of range");
    const int side = arc.initial_label - 1;
    lift.start = cur.vertices[static_cast<std::size_t>(side)];
    lift.end = cur.vertices[static_cast<std::size_t>((side + 1) % 3)];
    return lift;
  }
  for (std::size_t j = 0; j < arc.crossings.size(); ++j) {
    const Crossing& x = arc.crossings[j];
    if (x.label < 1 || x.label > 3) throw InvalidArc("crossing label out of range");
    if (j > 0 && arc.crossings[j - 1].label == x.label) {
      throw InvalidArc("label " + std::to_string(x.label) + " crossed twice in a row");
    }
    const int exit_central = mod3(x.label - cur.first_label);
    if (j == 0) lift.start = cur.vertices[static_cast<std::size_t>((exit_central + 2) % 3)];
    const LabeledTriangle monogon = cross_side(cur, exit_central);
    const int entry = side_index(monogon.vertices, cur.vertices[static_cast<std::size_t>(exit_central)],
                                 cur.vertices[static_cast<std::size_t>((exit_central + 1) % 3)]);
    const int exit = (entry + (x.passage == Passage::Clockwise ? 1 : 2)) % 3;
    cur = cross_side(monogon, exit);
    lift.centrals.push_back(cur);
    if (j + 1 == arc.crossings.size()) {
      const Cusp& a = monogon.vertices[static_cast<std::size_t>(exit)];
      const Cusp& b = monogon.vertices[static_cast<std::size_t>((exit + 1) % 3)];
      lift.end = cur.vertices[static_cast<std::size_t>((side_index(cur.vertices, a, b) + 2) % 3)];
    }
  }
  return lift;
}

bool is_simple(const Lift& lift) {
  std::vector<Mobius> frames;
  frames.reserve(lift.centrals.size());
  for (const auto& c : lift.centrals) {
    const Triangle t = normalized(c);
    frames.push_back(map_from_root(t[0], t[1], t[2]));
  }
  // A translate crossing the lift shares a central triangle with it, so it is
  // the deck transformation carrying one central triangle of the lift onto another.
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const Mobius back = frames[i].inverse();
    for (std::size_t j = 0; j < frames.size(); ++j) {
      if (i == j) continue;
      const Mobius g = frames[j] * back;
      if (chords_cross(lift.start, lift.end, g(lift.start), g(lift.end))) return false;
    }
  }
  return true;
}

ArcDescriptor crossing_word(const Cusp& v, const Cusp& w) {
  if (v == w) throw InvalidArc("geodesic endpoints coincide");
  // g sends v to ∞; the geodesic becomes the vertical line above g(w).
  Mobius g;
  if (!v.is_infinity()) {
    Integer d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.p.get_mpz_t(), v.q.get_mpz_t());
    g = Mobius{v.p, -t, v.q, s}.inverse();
  }
  const Mobius back = g.inverse();
  const Cusp target = g(w);

  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), target.p.get_mpz_t(), target.q.get_mpz_t());
  const Cusp lo = Cusp::integer(n), hi = Cusp::integer(n + 1), top = Cusp::infinity();
  const LabeledTriangle original = label_triangle(back(lo), back(hi), back(top));

  if (target.q == 1) {
    const int side = side_index(original.vertices, v, w);
    return ArcDescriptor::initial(original.side_label(side));
  }

  // Same triangle in the g-frame; g preserves orientation so only the starting
  // index of the counterclockwise order can change.
  LabeledTriangle cur{ccw(lo, hi, top), original.central, original.first_label};
  if (cur.central) {
    const auto it = std::find(cur.vertices.begin(), cur.vertices.end(), g(original.vertices[0]));
    const int j = static_cast<int>(it - cur.vertices.begin());
    cur.first_label = mod3(original.first_label - 1 - j) + 1;
  } else {
    throw InvalidArc("geodesic starts inside a monogon triangle");
  }

  ArcDescriptor arc;
  Cusp a = lo, b = hi;
  int entry = -1;
  while (true) {
    const int exit = side_index(cur.vertices, a, b);
    if (!cur.central) {
      arc.crossings.push_back(
          {cur.first_label, exit == (entry + 1) % 3 ? Passage::Clockwise : Passage::Counterclockwise});
    }
    const Cusp m = third_vertex(a, b, cur.vertices[static_cast<std::size_t>((exit + 2) % 3)]);
    cur = cross_side(cur, exit);
    entry = side_index(cur.vertices, a, b);
    if (m == target) break;
    bool found = false;
    for (int k = 0; k < 3 && !found; ++k) {
      if (k == entry) continue;
      const Cusp& x = cur.vertices[static_cast<std::size_t>(k)];
      const Cusp& y = cur.vertices[static_cast<std::size_t>((k + 1) % 3)];
      if (on_closed_arc(target, x, y)) {
        a = x;
        b = y;
        found = true;
      }
    }
    if (!found) throw InternalInconsistency("geodesic walk lost its target");
  }
  if (!cur.central) throw InvalidArc("geodesic ends inside a monogon triangle");
  return arc;
}

Triangulation Triangulation::initial() {
  const LabeledTriangle root = root_triangle();
  Triangulation t;
  for (int i = 0; i < 3; ++i) {
    const Cusp& a = root.vertices[static_cast<std::size_t>(i)];
    const Cusp& b = root.vertices[static_cast<std::size_t>((i + 1) % 3)];
    const Cusp& o = root.vertices[static_cast<std::size_t>((i + 2) % 3)];
    const Triangle monogon = ccw(a, b, third_vertex(a, b, o));
    t.segments_[static_cast<std::size_t>(i)] = Segment{a, rotation_taking(a, b, monogon), root.side_label(i)};
  }
  return t;
}

Triangulation Triangulation::flip(int k) const {
  std::size_t i = 0;
  while (i < 3 && segments_[i].label != k) ++i;
  if (i == 3) throw IndexOutOfRange("no loop labelled " + std::to_string(k));
  // Rotate the hexagon so the flipped loop is the middle segment.
  const std::size_t shift = (i + 2) % 3;
  const Segment& s0 = segments_[shift];
  const Segment& s1 = segments_[(shift + 1) % 3];
  const Segment& s2 = segments_[(shift + 2) % 3];
  const Mobius r1_inv = s1.rotation.inverse();
  Triangulation out;
  out.segments_[0] = s0;
  out.segments_[1] = Segment{s1.vertex, r1_inv * s2.rotation * s1.rotation, s2.label};
  out.segments_[2] = Segment{r1_inv(s0.vertex), s1.rotation, s1.label};
  return out;
}

ArcDescriptor Triangulation::arc(int k) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (segments_[i].label != k) continue;
    const Cusp& from = segments_[i].vertex;
    const Cusp& to = segments_[(i + 1) % 3].vertex;
    if (!(segments_[i].rotation(from) == to)) throw InternalInconsistency("hexagon segment is not closed by its rotation");
    return crossing_word(from, to);
  }
  throw IndexOutOfRange("no loop labelled " + std::to_string(k));
}

}  // namespace markov12::farey
