"""Deterministic text and image encodings of emanation tables.

Every writer returns ``str`` (or ``bytes`` for binary PGM) with LF line
endings; nothing depends on dictionary or thread ordering.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .boxkites import Context, EdgeSign
from .emanation import EmanationTable, fill_stats, label_order

PGM_BLANK, PGM_BLUE, PGM_RED = 0, 128, 255


def _bits(k: int, width: int) -> str:
    return format(k, f"0{width}b")


def to_ascii(et: EmanationTable, bits: bool = False) -> str:
    """Grid with labels across the top and down the left; blue cells dashed."""
    width = max(len(str(max(et.labels))) + 2, 4)
    lines = [" " * width + "".join(f"{L:>{width}}" for L in et.labels)]
    for i, r in enumerate(et.labels):
        cells = "".join(f"{str(et.cell(i, j) or ''):>{width}}" for j in range(et.size))
        lines.append((f"{r:>{width}}" + cells).rstrip())
    if bits:
        w = et.ctx.N - 1
        lines.append("")
        lines.extend(f"{L:>{width}} = {_bits(L, w)}" for L in et.labels)
    return "\n".join(lines) + "\n"


CSV_HEADER = ["row_label", "col_label", "P", "edge_sign"]


def to_csv(et: EmanationTable, bits: bool = False) -> str:
    """One line per filled cell, in row then column position order."""
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    header = CSV_HEADER + (["row_bits", "col_bits", "P_bits"] if bits else [])
    out.writerow(header)
    w = et.ctx.N - 1
    for _, _, r, c, cell in et.filled_cells():
        row = [r, c, cell.P, cell.sign.symbol]
        if bits:
            row += [_bits(r, w), _bits(c, w), _bits(cell.P, w)]
        out.writerow(row)
    return buf.getvalue()


def pgm_pixels(et: EmanationTable) -> np.ndarray:
    px = np.full(et.marks.shape, PGM_BLANK, dtype=np.uint8)
    px[et.marks == EdgeSign.BLUE] = PGM_BLUE
    px[et.marks == EdgeSign.RED] = PGM_RED
    return px


def to_pgm(et: EmanationTable, binary: bool = False, scale: int = 1) -> str | bytes:
    """Grayscale image, one pixel (or ``scale`` x ``scale`` block) per cell.

    0 is blank, 128 a blue (dashed) cell, 255 a red (unmarked) cell.
    ``binary`` selects P5, otherwise P2 text is returned.
    """
    px = pgm_pixels(et)
    if scale > 1:
        px = np.kron(px, np.ones((scale, scale), dtype=np.uint8))
    h, w = px.shape
    if binary:
        return f"P5\n{w} {h}\n255\n".encode("ascii") + px.tobytes()
    body = "\n".join(" ".join(str(v) for v in row) for row in px)
    return f"P2\n{w} {h}\n255\n{body}\n"


def read_pgm(data: str | bytes) -> np.ndarray:
    """Parse P2 or P5 output of :func:`to_pgm` back into a pixel array."""
    if isinstance(data, str):
        data = data.encode("ascii")
    magic, dims, maxval, rest = data.split(b"\n", 3)
    w, h = map(int, dims.split())
    if magic == b"P5":
        return np.frombuffer(rest[: w * h], dtype=np.uint8).reshape(h, w)
    if magic == b"P2":
        return np.array(rest.split(), dtype=np.uint8).reshape(h, w)
    raise ValueError(f"not a PGM stream: {magic!r}")


def to_dict(et: EmanationTable, bits: bool = False) -> dict:
    stats = fill_stats(et)
    doc = {
        "N": et.ctx.N,
        "S": et.ctx.S,
        "G": et.ctx.G,
        "X": et.ctx.X,
        "labels": list(et.labels),
        "cells": [[r, c, cell.P, cell.sign.symbol] for _, _, r, c, cell in et.filled_cells()],
        "stats": {"filled": stats.filled, "boxkites": stats.boxkites, "full": stats.full},
    }
    if bits:
        w = et.ctx.N - 1
        doc["labels_bits"] = [_bits(L, w) for L in et.labels]
    return doc


def to_json(et: EmanationTable, bits: bool = False) -> str:
    return json.dumps(to_dict(et, bits)) + "\n"


def from_json(text: str) -> EmanationTable:
    """Rebuild a table written by :func:`to_json`.

    Raises ``ValueError`` if the labels or any cell content are inconsistent
    with the stated ``(N, S)``.
    """
    doc = json.loads(text)
    ctx = Context(doc["N"], doc["S"])
    labels = tuple(doc["labels"])
    if labels != label_order(ctx):
        raise ValueError("label order does not match (N, S)")
    pos = {L: i for i, L in enumerate(labels)}
    marks = np.zeros((len(labels), len(labels)), dtype=np.int8)
    for r, c, P, sign in doc["cells"]:
        if P != r ^ c:
            raise ValueError(f"cell ({r},{c}) holds {P}, expected {r ^ c}")
        marks[pos[r], pos[c]] = EdgeSign.BLUE if sign == "+" else EdgeSign.RED
    return EmanationTable(ctx, labels, marks)
