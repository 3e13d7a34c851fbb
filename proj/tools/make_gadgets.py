#!/usr/bin/env python3
"""Writes the reducible-configuration gadgets to tests/gadgets/*.rot.

Each gadget is a straight-line drawing: rotations come from the angles of
the edges at each vertex (clockwise), so the embedding is planar whenever
no two edges cross, which shapely checks. C0 is a large outer triangle
joined to the configuration through a connector vertex.
"""

import math
import sys
from pathlib import Path

from shapely.geometry import LineString, Point

OUT = Path(__file__).resolve().parent.parent / "tests" / "gadgets"


class Drawing:
    def __init__(self, name, lemma):
        self.name = name
        self.lemma = lemma
        self.pos = []
        self.labels = []
        self.edges = set()
        self.roles = {}

    def vertex(self, x, y, label=None):
        self.pos.append((float(x), float(y)))
        self.labels.append(label)
        if label:
            self.roles[label] = len(self.pos) - 1
        return len(self.pos) - 1

    def edge(self, a, b):
        assert a != b
        self.edges.add((min(a, b), max(a, b)))

    def toward(self, host, angle, r):
        x, y = self.pos[host]
        t = math.radians(angle)
        return x + r * math.cos(t), y + r * math.sin(t)

    def leaf(self, host, angle, r=0.45):
        leaf = self.vertex(*self.toward(host, angle, r))
        self.edge(host, leaf)
        return leaf

    def special(self, host, angle, r=0.8, s=0.45):
        """A pendant (3,3,3)-face: x adjacent to host, y and z with a leaf each."""
        x = self.vertex(*self.toward(host, angle, r))
        y = self.vertex(*self.toward(x, angle + 40, s))
        z = self.vertex(*self.toward(x, angle - 40, s))
        for a, b in ((host, x), (x, y), (y, z), (z, x)):
            self.edge(a, b)
        self.leaf(y, angle + 25, 0.3)
        self.leaf(z, angle - 25, 0.3)
        return x

    def outer_triangle(self, target=None, via=None):
        """C0 = A, B, C around everything; A - q - target when given."""
        a = self.vertex(0, -60, "A")
        b = self.vertex(60, 45, "B")
        c = self.vertex(-60, 45, "C")
        for p, q in ((a, b), (b, c), (c, a)):
            self.edge(p, q)
        if target is not None:
            q = self.vertex(*via, "q")
            self.edge(a, q)
            self.edge(q, target)
        return a

    # -- checks and output ------------------------------------------------

    def check_crossings(self):
        segs = [(e, LineString([self.pos[e[0]], self.pos[e[1]]])) for e in sorted(self.edges)]
        for i, (e, s) in enumerate(segs):
            for f, t in segs[i + 1:]:
                shared = set(e) & set(f)
                inter = s.intersection(t)
                if inter.is_empty:
                    continue
                if shared and inter.geom_type == "Point" and any(
                    Point(self.pos[v]).distance(inter) < 1e-9 for v in shared
                ):
                    continue
                raise SystemExit(f"{self.name}: edges {e} and {f} cross")
        for v, p in enumerate(self.pos):
            for e, s in segs:
                if v not in e and s.distance(Point(p)) < 1e-6:
                    raise SystemExit(f"{self.name}: vertex {v} lies on edge {e}")

    def rotation(self):
        n = len(self.pos)
        nbrs = [[] for _ in range(n)]
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)

        def angle(v, w):
            (x0, y0), (x1, y1) = self.pos[v], self.pos[w]
            return math.atan2(y1 - y0, x1 - x0)

        # clockwise: decreasing angle
        return [sorted(nbrs[v], key=lambda w: -angle(v, w)) for v in range(n)]

    def outer_dart(self, rot):
        ring = self.ring if hasattr(self, "ring") else (self.roles["A"], self.roles["B"], self.roles["C"])
        darts = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
        for u, v in darts + [(b, a) for a, b in darts]:
            walk = [u]
            x, y = u, v
            while True:
                r = rot[y]
                w = r[(r.index(x) + 1) % len(r)]
                x, y = y, w
                if (x, y) == (u, v):
                    break
                walk.append(x)
            if sorted(walk) == sorted(ring):
                return u, v
        raise SystemExit(f"{self.name}: C0 does not bound a face")

    def write(self, out=None):
        out = out or OUT
        self.check_crossings()
        rot = self.rotation()
        u, v = self.outer_dart(rot)
        lines = [f"# {self.lemma}"]
        if self.roles:
            lines.append("# " + " ".join(f"{k}={i + 1}" for k, i in sorted(self.roles.items(), key=lambda kv: kv[1])))
        lines.append(f"n {len(rot)} outer {u + 1} {v + 1}")
        for i, r in enumerate(rot):
            lines.append(f"{i + 1}: " + " ".join(str(w + 1) for w in r))
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{self.name}.rot").write_text("\n".join(lines) + "\n")


def gadget_l3_6():
    d = Drawing("l3_6", "L3.6")
    u = d.vertex(0, 1, "u")
    v = d.vertex(1, 0, "v")
    w = d.vertex(0, -1, "w")
    x = d.vertex(-1, 0, "x")
    for a, b in ((u, v), (v, w), (w, x), (x, u)):
        d.edge(a, b)
    t1 = d.vertex(-0.4, 1.8)
    t2 = d.vertex(0.4, 1.8)
    for a, b in ((u, t1), (t1, t2), (t2, u)):
        d.edge(a, b)
    d.leaf(w, 270)
    d.outer_triangle(x, (-3, -2))
    return d


def gadget_l3_7_1():
    d = Drawing("l3_7_1", "L3.7.1")
    a = d.outer_triangle()
    ax, ay = d.pos[a]
    v = d.vertex(ax - 0.5, ay + 2, "v")
    w = d.vertex(ax, ay + 4, "w")
    x = d.vertex(ax + 0.5, ay + 2, "x")
    for p, q in ((a, v), (v, w), (w, x), (x, a)):
        d.edge(p, q)
    d.leaf(w, 90)
    d.vertex(ax - 0.7, ay + 3)
    d.edge(v, len(d.pos) - 1)
    return d


def gadget_l3_7_2():
    d = Drawing("l3_7_2", "L3.7.2")
    u = d.vertex(0, 1, "u")
    v = d.vertex(1, 0, "v")
    w = d.vertex(0, -1, "w")
    x = d.vertex(-1, 0, "x")
    for a, b in ((u, v), (v, w), (w, x), (x, u)):
        d.edge(a, b)
    d.leaf(u, 60)
    d.leaf(u, 120)
    d.leaf(w, 240)
    d.leaf(w, 300)
    d.leaf(v, 0)
    d.outer_triangle(x, (-3, -1))
    return d


def gadget_l3_8():
    d = Drawing("l3_8", "L3.8")
    v = d.vertex(0, 0, "v")
    a = d.vertex(0, -1, "a")
    b = d.vertex(0.9, 0.5, "b")
    c = d.vertex(-0.9, 0.5, "c")
    for y in (a, b, c):
        d.edge(v, y)
    d.leaf(a, 0)
    d.leaf(b, 0)
    d.leaf(b, 70)
    d.leaf(c, 110)
    d.leaf(c, 180)
    d.outer_triangle(a, (0, -3))
    return d


def triangle_uvw(d, wy=1.0):
    u = d.vertex(-0.6, 0, "u")
    v = d.vertex(0.6, 0, "v")
    w = d.vertex(0, wy, "w")
    for a, b in ((u, v), (v, w), (w, u)):
        d.edge(a, b)
    return u, v, w


def gadget_l3_9():
    d = Drawing("l3_9", "L3.9")
    u, v, w = triangle_uvw(d)
    up = d.vertex(-1.4, -0.5, "u'")
    d.edge(u, up)
    d.leaf(up, 150)
    d.leaf(up, 230)
    vp = d.vertex(1.4, -0.5, "v'")
    d.edge(v, vp)
    for angle in (45, 90, 135):
        d.leaf(w, angle)
    d.outer_triangle(vp, (1.4, -3))
    return d


def gadget_l3_10_335():
    d = Drawing("l3_10_335", "L3.10")
    u, v, w = triangle_uvw(d)
    d.leaf(u, 210)
    vp = d.vertex(1.4, -0.5, "v'")
    d.edge(v, vp)
    for angle in (45, 90, 135):
        d.leaf(w, angle)
    d.outer_triangle(vp, (1.4, -3))
    return d


def gadget_l3_10_344():
    d = Drawing("l3_10_344", "L3.10")
    u = d.vertex(0, -0.6, "u")
    v = d.vertex(-0.6, 0.4, "v")
    w = d.vertex(0.6, 0.4, "w")
    for a, b in ((u, v), (v, w), (w, u)):
        d.edge(a, b)
    d.leaf(u, 270, 0.8)
    v1 = d.vertex(-1.4, 0.2, "v1")
    d.edge(v, v1)
    d.leaf(v, 120)
    d.leaf(w, 60)
    d.leaf(w, 0)
    d.outer_triangle(v1, (-2.5, -0.5))
    return d


def gadget_l3_10_355():
    d = Drawing("l3_10_355", "L3.10")
    u = d.vertex(0, -0.6, "u")
    v = d.vertex(-0.8, 0.5, "v")
    w = d.vertex(0.8, 0.5, "w")
    for a, b in ((u, v), (v, w), (w, u)):
        d.edge(a, b)
    d.leaf(u, 270, 0.8)
    for angle in (95, 160, 225):
        d.special(v, angle)
    for angle in (85, 20, -45):
        d.special(w, angle)
    # connector reaches the leaf of a pendant 3-vertex below-left
    target = min(range(len(d.pos)), key=lambda i: (d.pos[i][1], d.pos[i][0]) if i not in (u,) else (99, 99))
    d.outer_triangle(target, (d.pos[target][0], -4))
    return d


def gadget_l3_11():
    d = Drawing("l3_11", "L3.11")
    v = d.vertex(0, 0, "v")
    v3 = d.vertex(-0.8, 0.6, "v3")
    v4 = d.vertex(-0.8, -0.6, "v4")
    v1 = d.vertex(0.7, 0.7, "v1")
    w = d.vertex(1.4, 0, "w")
    v2 = d.vertex(0.7, -0.7, "v2")
    for a, b in ((v, v3), (v3, v4), (v4, v), (v, v1), (v1, w), (w, v2), (v2, v)):
        d.edge(a, b)
    d.leaf(v3, 135)
    for angle in (180, 225, 270):
        d.leaf(v4, angle)
    for angle in (-45, 0, 45):
        d.leaf(w, angle)
    d.leaf(v1, 90)
    low = d.leaf(v2, 270)
    d.outer_triangle(low, (0.7, -3))
    return d


def gadget_l3_12_1():
    d = Drawing("l3_12_1", "L3.12.1")
    v = d.vertex(0, 0, "v")
    v4 = d.vertex(-0.5, -0.9, "v4")
    v0 = d.vertex(0.5, -0.9, "v0")
    for a, b in ((v, v4), (v4, v0), (v0, v)):
        d.edge(a, b)
    v4p = d.vertex(-0.8, -1.7, "v4'")
    d.edge(v4, v4p)
    d.leaf(v4p, 190)
    d.leaf(v4p, 260)
    for angle in (20, 90, 160):
        d.special(v, angle)
    d.outer_triangle(v0, (0.9, -3.5))
    return d


def gadget_l3_12_2():
    d = Drawing("l3_12_2", "L3.12.2")
    v = d.vertex(0, 0, "v")
    for angle in (0, 75, 150, 215):
        d.special(v, angle)
    d.outer_triangle(v, (0.4, -1.4))
    return d


def gadget_l3_12_3():
    d = Drawing("l3_12_3", "L3.12.3")
    v = d.vertex(0, 0, "v")
    spokes = []
    rim = []
    for i in range(5):
        t = 90 + 72 * i
        spokes.append(d.vertex(math.cos(math.radians(t)), math.sin(math.radians(t)), f"v{i}"))
    for i in range(5):
        t = 90 + 72 * i + 36
        rim.append(d.vertex(1.6 * math.cos(math.radians(t)), 1.6 * math.sin(math.radians(t)), f"u{i}"))
    for i in range(5):
        d.edge(v, spokes[i])
        d.edge(spokes[i], rim[i])
        d.edge(rim[i], spokes[(i + 1) % 5])
    for i in (0, 2):
        t = 90 + 72 * i
        d.leaf(spokes[i], t + 12, 0.6)
        d.leaf(spokes[i], t - 12, 0.6)
        d.leaf(rim[i], t + 36 + 15, 0.5)
        d.leaf(rim[i], t + 36 - 15, 0.5)
    x, y = d.pos[spokes[3]]
    d.outer_triangle(spokes[3], (x + 0.6, y - 2.5))
    return d


def l3_13_core(d):
    w = d.vertex(0, 0, "w")
    u = d.vertex(-0.5, -0.9, "u")
    v = d.vertex(0.5, -0.9, "v")
    for a, b in ((u, v), (v, w), (w, u)):
        d.edge(a, b)
    up = d.vertex(-0.8, -1.7, "u'")
    vp = d.vertex(0.8, -1.7, "v'")
    d.edge(u, up)
    d.edge(v, vp)
    return w, up, vp


def gadget_l3_13_c1():
    d = Drawing("l3_13_c1", "L3.13")
    w, up, vp = l3_13_core(d)
    d.leaf(up, 190)
    d.leaf(up, 260)
    for angle in (0, 300, 340):
        d.leaf(vp, angle)
    for angle in (0, 60, 120, 180):
        d.special(w, angle)
    d.outer_triangle(vp, (0.8, -4))
    return d


def gadget_l3_13_c2():
    d = Drawing("l3_13_c2", "L3.13")
    w, up, vp = l3_13_core(d)
    d.leaf(up, 200)
    d.leaf(up, 260)
    d.leaf(vp, 280)
    d.leaf(vp, 340)
    for angle in (10, 90, 150):
        d.special(w, angle)
    d.outer_triangle(w, (-2.6, -1.2))
    return d


def golden_337():
    """A (3,3,7)-face: u, v of degree 3 and w with five leaves."""
    d = Drawing("golden_337", "charge golden")
    u, v, w = triangle_uvw(d)
    for angle in (20, 55, 90, 125, 160):
        d.leaf(w, angle)
    d.leaf(u, 210)
    vp = d.vertex(1.4, -0.5, "v'")
    d.edge(v, vp)
    d.outer_triangle(vp, (1.4, -3))
    return d


def seven_ring(d, r=3.0):
    ring = []
    for i in range(7):
        t = math.radians(90 - 360 * i / 7)
        ring.append(d.vertex(r * math.cos(t), r * math.sin(t), f"c{i}"))
    for i in range(7):
        d.edge(ring[i], ring[(i + 1) % 7])
    d.ring = tuple(ring)
    return ring


def golden_c7():
    """C0 a 7-cycle of 2-vertices."""
    d = Drawing("golden_c7", "charge golden")
    seven_ring(d)
    return d


def golden_f4pp():
    """A 4-face sharing the edge c0 c1 with a 7-cycle C0."""
    d = Drawing("golden_f4pp", "charge golden")
    ring = seven_ring(d)
    (x0, y0), (x1, y1) = d.pos[ring[0]], d.pos[ring[1]]
    x = d.vertex(0.6 * x0, 0.6 * y0, "x")
    y = d.vertex(0.6 * x1, 0.6 * y1, "y")
    d.edge(ring[0], x)
    d.edge(x, y)
    d.edge(y, ring[1])
    return d


GOLDENS = [golden_337, golden_c7, golden_f4pp]

GADGETS = [
    gadget_l3_6,
    gadget_l3_7_1,
    gadget_l3_7_2,
    gadget_l3_8,
    gadget_l3_9,
    gadget_l3_10_335,
    gadget_l3_10_344,
    gadget_l3_10_355,
    gadget_l3_11,
    gadget_l3_12_1,
    gadget_l3_12_2,
    gadget_l3_12_3,
    gadget_l3_13_c1,
    gadget_l3_13_c2,
]


def main():
    for make in GADGETS:
        d = make()
        d.write()
        print(f"{d.name}: {len(d.pos)} vertices, {len(d.edges)} edges", file=sys.stderr)
    for make in GOLDENS:
        d = make()
        d.write(OUT.parent / "fixtures")
        print(f"{d.name}: {len(d.pos)} vertices", file=sys.stderr)


if __name__ == "__main__":
    main()
