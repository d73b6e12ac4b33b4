#!/usr/bin/env python3
"""Writes geodesic icosahedral spheres (frequency 1..5) as 1-byte planar_code.

The embedding comes from 3-D geometry alone: scipy's convex hull gives the
edges and each rotation is the counter-clockwise angular order of the
neighbours seen from outside the sphere. None of the C++ code is involved,
which makes the output a fixture from an independent producer.

usage: make_geodesic_fixture.py OUT.pc
"""
import sys

import numpy as np
from scipy.spatial import ConvexHull


def icosahedron():
    p = (1 + 5 ** 0.5) / 2
    verts = []
    for a in (-1, 1):
        for b in (-p, p):
            verts += [(0, a, b), (a, b, 0), (b, 0, a)]
    v = np.array(verts, dtype=float)
    return v / np.linalg.norm(v, axis=1)[:, None]


def geodesic_points(freq):
    base = icosahedron()
    hull = ConvexHull(base)
    pts = {}
    for tri in hull.simplices:
        a, b, c = base[tri]
        for i in range(freq + 1):
            for j in range(freq + 1 - i):
                k = freq - i - j
                q = (i * a + j * b + k * c) / freq
                q = q / np.linalg.norm(q)
                pts[tuple(np.round(q, 9))] = q
    keys = sorted(pts)
    return np.array([pts[k] for k in keys])


def rotations(points):
    hull = ConvexHull(points)
    nbrs = [set() for _ in points]
    for tri in hull.simplices:
        for x in tri:
            for y in tri:
                if x != y:
                    nbrs[x].add(int(y))
    rot = []
    for v, ns in enumerate(nbrs):
        n = points[v]
        e1 = np.cross(n, [0.3, 0.5, 0.8])
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(n, e1)

        def angle(u):
            d = points[u] - n
            return np.arctan2(d @ e2, d @ e1)

        rot.append(sorted(ns, key=angle))
    return rot


def encode(rot):
    out = bytearray([len(rot)])
    for row in rot:
        out += bytes(u + 1 for u in row) + b"\0"
    return bytes(out)


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    data = bytearray(b">>planar_code<<")
    for freq in range(1, 6):
        rot = rotations(geodesic_points(freq))
        assert len(rot) == 10 * freq * freq + 2
        data += encode(rot)
    with open(sys.argv[1], "wb") as f:
        f.write(data)


if __name__ == "__main__":
    main()
