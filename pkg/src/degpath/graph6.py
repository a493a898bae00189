"""graph6 encoding and decoding.

Bits of the upper triangle are taken column by column, ``(0,1), (0,2),
(1,2), (0,3), ...``, packed big-endian into 6-bit groups and offset by 63.
"""

from __future__ import annotations

from typing import Union

from .errors import MalformedGraph6Error, SizeError
from .graph import MAX_VERTICES, Graph

_BIAS = 63


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + _BIAS])
    if n <= 258047:
        return bytes([126] + [(n >> s & 0x3F) + _BIAS for s in (12, 6, 0)])
    return bytes([126, 126] + [(n >> s & 0x3F) + _BIAS for s in (30, 24, 18, 12, 6, 0)])


def graph6_encode(g: Graph) -> bytes:
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        _BIAS + (b0 << 5 | b1 << 4 | b2 << 3 | b3 << 2 | b4 << 1 | b5)
        for b0, b1, b2, b3, b4, b5 in zip(*[iter(bits)] * 6)
    )
    return _size_prefix(g.n) + body


def _read_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, offset of first payload byte)``."""
    if not data:
        raise MalformedGraph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - _BIAS, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6Error("truncated 8-byte size prefix")
        chunks, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise MalformedGraph6Error("truncated 4-byte size prefix")
        chunks, offset = data[1:4], 4
    n = 0
    for c in chunks:
        if not 63 <= c <= 126:
            raise MalformedGraph6Error(f"bad size byte {c!r}")
        n = n << 6 | (c - _BIAS)
    return n, offset


def graph6_decode(data: Union[bytes, str]) -> Graph:
    """Parse one graph6 string; a single trailing newline is tolerated."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise MalformedGraph6Error("graph6 must be ASCII") from exc
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    n, offset = _read_size(data)
    if n < 0:
        raise MalformedGraph6Error("bad size prefix")
    if n > MAX_VERTICES:
        raise SizeError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")
    if n == 0:
        raise MalformedGraph6Error("graphs need at least one vertex")
    payload = data[offset:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(payload) != expected:
        raise MalformedGraph6Error(f"payload has {len(payload)} bytes, expected {expected}")
    value = 0
    for c in payload:
        if not 63 <= c <= 126:
            raise MalformedGraph6Error(f"byte {c!r} outside the graph6 range")
        value = value << 6 | (c - _BIAS)
    pad = expected * 6 - nbits
    if value & ((1 << pad) - 1):
        raise MalformedGraph6Error("non-zero padding bits")
    value >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))
