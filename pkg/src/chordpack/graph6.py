"""graph6 encoding and decoding.

The format packs the upper triangle of the adjacency matrix column by
column (``x(0,1), x(0,2), x(1,2), x(0,3), ...``) into 6-bit groups, each
written as ``chr(63 + group)``.  The order is prefixed as one byte for
``n <= 62``, as ``~`` plus three bytes for ``n <= 258047`` and as ``~~``
plus six bytes beyond that.  Encodings produced here always use the
shortest header and zero padding, so equal graphs give equal strings.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import TextIO

from .errors import MalformedGraph6
from .graph import Graph

__all__ = ["parse_graph6", "serialize_graph6", "read_graph6", "write_graph6"]

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def _decode_order(data: str) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    vals = [ord(c) - 63 for c in data[:8]]
    if not vals:
        raise MalformedGraph6("empty graph6 string")
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise MalformedGraph6("truncated 8-byte order header")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        return n, 8
    if len(vals) < 4:
        raise MalformedGraph6("truncated 4-byte order header")
    return vals[1] << 12 | vals[2] << 6 | vals[3], 4


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (trailing newline and optional header allowed).

    >>> parse_graph6("C~").edge_count
    6
    """
    data = line.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"invalid graph6 character {ch!r}")
    n, head = _decode_order(data)
    body = data[head:]
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) != nchars:
        raise MalformedGraph6(
            f"order {n} needs {nchars} data bytes, found {len(body)}"
        )
    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    pad = nchars * 6 - nbits
    if value & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    value >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(rows))


def serialize_graph6(g: Graph) -> str:
    """Canonical graph6 text for ``g`` (no header, no newline).

    >>> from chordpack.graph import complete
    >>> serialize_graph6(complete(4))
    'C~'
    """
    n = g.n
    nbits = n * (n - 1) // 2
    value = 0
    rows = g.rows
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            value = value << 1 | (col >> i & 1)
    nchars = (nbits + 5) // 6
    value <<= nchars * 6 - nbits
    out = [_encode_order(n)]
    for c in range(nchars - 1, -1, -1):
        out.append(chr(63 + (value >> (6 * c) & 63)))
    return "".join(out)


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from a line stream, skipping blank lines."""
    for line in stream:
        if line.strip():
            yield parse_graph6(line)


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(serialize_graph6(g) + "\n")
