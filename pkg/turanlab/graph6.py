"""
graph6 codec
Bit-exact with the format written by nauty's geng: size byte(s) n+63 followed
by the upper adjacency triangle, column by column, in 6-bit big-endian chunks
"""

from turanlab.config import MAX_VERTICES
from turanlab.errors import MalformedGraph6, TooLarge
from turanlab.graph import Graph

HEADER = ">>graph6<<"


def _decode_size(data: bytes):
    """Return (n, offset of the first adjacency byte)"""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 8-byte size field")
        n = 0
        for byte in data[2:8]:
            n = (n << 6) | (byte - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedGraph6("truncated 4-byte size field")
    n = 0
    for byte in data[1:4]:
        n = (n << 6) | (byte - 63)
    return n, 4


def graph_from_graph6(text: str) -> Graph:
    """
    Decode one graph6 record

    Args:
        text (str): graph6 record, optionally prefixed by >>graph6<<

    Returns:
        Graph: The encoded graph
    """
    if text is None:
        raise MalformedGraph6("empty input")
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise MalformedGraph6("empty input")
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError:
        raise MalformedGraph6("non-ASCII character")
    if any(byte < 63 or byte > 126 for byte in data):
        raise MalformedGraph6("character outside the graph6 range 63..126")

    n, offset = _decode_size(data)
    if n > MAX_VERTICES:
        raise TooLarge(f"graph6 record has {n} vertices, limit is {MAX_VERTICES}")

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6
    body = data[offset:]
    if len(body) != expected:
        raise MalformedGraph6(f"expected {expected} adjacency bytes for n={n}, got {len(body)}")

    bits = 0
    for byte in body:
        bits = (bits << 6) | (byte - 63)
    padding = expected * 6 - bit_count
    if bits & ((1 << padding) - 1):
        raise MalformedGraph6("nonzero padding bits")
    bits >>= padding

    rows = [0] * n
    position = bit_count - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph._trusted(rows)


def graph_to_graph6(g: Graph) -> str:
    """Encode g as a header-free graph6 record with minimal padding"""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126)] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]

    bit_count = n * (n - 1) // 2
    bits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            bits = (bits << 1) | (row >> i & 1)
    padding = (-bit_count) % 6
    bits <<= padding
    chunks = (bit_count + padding) // 6
    for index in range(chunks - 1, -1, -1):
        out.append(chr(((bits >> (6 * index)) & 63) + 63))
    return "".join(out)
