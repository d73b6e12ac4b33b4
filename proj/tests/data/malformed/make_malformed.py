#!/usr/bin/env python3
"""Builds the malformed-input fixtures and expected.tsv.

Each row of expected.tsv: file, graph (1-based, 0 = before any graph), byte
offset, and a substring the diagnostic must contain. Offsets are computed here
from the byte layout, independently of the C++ parser.
"""
import os

HEADER = b">>planar_code<<"
ICO = [[1, 5, 4, 3, 2], [0, 2, 6, 10, 5], [0, 3, 7, 6, 1], [0, 4, 8, 7, 2],
       [0, 5, 9, 8, 3], [0, 1, 10, 9, 4], [1, 2, 7, 11, 10], [2, 3, 8, 11, 6],
       [3, 4, 9, 11, 7], [4, 5, 10, 11, 8], [1, 6, 11, 9, 5], [6, 7, 8, 9, 10]]


def pc(rot):
    out = bytearray([len(rot)])
    for row in rot:
        out += bytes(u + 1 for u in row) + b"\0"
    return bytes(out)


def list_start(rot, v, base):
    """Offset of vertex v's neighbor list when the graph's n byte is at base."""
    return base + 1 + sum(len(r) + 1 for r in rot[:v])


def text(rot):
    return f"{len(rot)}\n" + "".join(f"{i + 1}: {' '.join(str(u + 1) for u in r)}\n" for i, r in enumerate(rot))


def line_start(lines, k):
    return sum(len(l) + 1 for l in lines[:k])


rows = []


def emit(name, data, graph, offset, reason):
    with open(name, "wb") as f:
        f.write(data if isinstance(data, bytes) else data.encode())
    rows.append(f"{name}\t{graph}\t{offset}\t{reason}")


H = len(HEADER)
ico = pc(ICO)

emit("bad_header.pc", b">>planar_cod<<" + ico, 0, 0, "unrecognized header")
emit("zero_vertices.pc", HEADER + b"\0", 1, H, "vertex count 0")
emit("truncated_after_count.pc", HEADER + b"\x0c", 1, H + 1, "truncated")
cut = list_start(ICO, 4, H) + 3
emit("truncated_mid_list.pc", (HEADER + ico)[:cut], 1, cut, "truncated stream inside the neighbor list of vertex 5")

rot = [r[:] for r in ICO]
rot[2][1] = 12  # 1-based 13 in a 12-vertex graph
emit("neighbor_out_of_range.pc", HEADER + pc(rot), 1, list_start(ICO, 2, H) + 1, "neighbor index 13 out of range")

rot = [r[:] for r in ICO]
rot[0][2] = 0
emit("loop.pc", HEADER + pc(rot), 1, list_start(rot, 0, H), "loop")

rot = [r[:] for r in ICO]
rot[3][1] = rot[3][0]
emit("duplicate_neighbor.pc", HEADER + pc(rot), 1, list_start(rot, 3, H), "duplicate neighbor")

rot = [r[:] for r in ICO]
del rot[6][2]  # vertex 7 drops 8; vertex 8 still lists 7
emit("asymmetric.pc", HEADER + pc(rot), 1, list_start(rot, 7, H), "asymmetric adjacency")

tri = [[1, 2], [2, 0], [0, 1]]
two = tri + [[4, 5], [5, 3], [3, 4]]
emit("disconnected.pc", HEADER + pc(two), 1, list_start(two, 3, H), "disconnected")

k5 = [[u for u in range(5) if u != v] for v in range(5)]
emit("k5_genus.pc", HEADER + pc(k5), 1, H, "genus is not 0")

rot = [r[:] for r in ICO]
rot[0][0], rot[0][1] = rot[0][1], rot[0][0]
emit("twisted_rotation.pc", HEADER + pc(rot), 1, H, "genus is not 0")

rot = [r[:] for r in ICO]
rot[9][4] = 14
second = pc(rot)
emit("second_graph_bad.pc", HEADER + ico + second, 2, H + len(ico) + list_start(rot, 9, 0) + 4,
     "neighbor index 15 out of range")
emit("trailing_partial_graph.pc", HEADER + ico + b"\x05\x02\x03", 2, H + len(ico) + 3, "truncated")

# Text format.
lines = text(ICO).splitlines()
emit("bad_count.txt", "twelve\n" + "\n".join(lines[1:]) + "\n", 1, 0, "single positive vertex count")
emit("zero_count.txt", "0\n", 1, 0, "single positive vertex count")
swapped = lines[:]
swapped[2], swapped[3] = swapped[3], swapped[2]
emit("label_mismatch.txt", "\n".join(swapped) + "\n", 1, line_start(swapped, 2), "expected vertex label 2")
emit("truncated.txt", "\n".join(lines[:6]) + "\n", 1, line_start(lines, 6), "truncated: expected line for vertex 6")
bad = lines[:]
bad[4] = bad[4] + " x"
emit("bad_token.txt", "\n".join(bad) + "\n", 1, line_start(bad, 4), "malformed neighbor token (vertex 4)")
bad = lines[:]
bad[5] = "5: 1 6 10 9 40"
emit("text_out_of_range.txt", "\n".join(bad) + "\n", 1, line_start(bad, 5), "neighbor index 40 out of range")
bad = lines[:]
bad[1] = "1 2 6 5 4 3"
emit("missing_colon.txt", "\n".join(bad) + "\n", 1, line_start(bad, 1), "expected 'i: neighbors'")
emit("trailing_content.txt", "\n".join(lines) + "\n\nextra\n", 1, line_start(lines, len(lines)) + 1,
     "trailing content")
rot = [r[:] for r in ICO]
rot[1].remove(6)
tl = text(rot).splitlines()
emit("text_asymmetric.txt", "\n".join(tl) + "\n", 1, line_start(tl, 7), "asymmetric adjacency")

with open("expected.tsv", "w") as f:
    f.write("# file\tgraph\tbyte\treason\n")
    f.write("\n".join(rows) + "\n")
print(len(rows), "fixtures")
