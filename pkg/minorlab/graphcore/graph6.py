"""
graph6 codec (short form only).

Byte 0 is 63+n; the upper triangle is read column by column,
(0,1),(0,2),(1,2),(0,3),..., packed big-endian into 6-bit groups offset by 63.
"""

from pathlib import Path
from typing import Iterable, Iterator, Tuple, Union

from minorlab.core.constants import GRAPH6_MAX_ORDER
from minorlab.core.errors import GraphFormatError, GraphSizeError

from .graph import Graph

HEADER = ">>graph6<<"
_OFFSET = 63


def graph6_decode(text: Union[str, bytes]) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text (Union[str, bytes]): The encoded graph, optionally with header or newline.

    Returns:
        Graph: The decoded graph.

    Raises:
        GraphFormatError: On malformed input.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise GraphFormatError("graph6 must be ASCII", repr(text)) from e
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise GraphFormatError("empty graph6 line", text)

    codes = [ord(c) - _OFFSET for c in line]
    for c, code in zip(line, codes):
        if not 0 <= code <= 63:
            raise GraphFormatError(f"byte {c!r} outside graph6 range 63..126", text)

    n = codes[0]
    if n == 63:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", text)

    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    data = codes[1:]
    if len(data) != expected:
        raise GraphFormatError(
            f"graph6 length mismatch: n={n} needs {expected} data bytes, got {len(data)}", text
        )

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1

    padding = expected * 6 - pair_count
    if padding and data[-1] & ((1 << padding) - 1):
        raise GraphFormatError("nonzero graph6 padding bits", text)

    return Graph(n, tuple(rows))


def graph6_encode(g: Graph) -> str:
    """
    Encode a graph as a graph6 line (without newline).

    Args:
        g (Graph): Graph with at most 62 vertices.

    Returns:
        str: graph6 text.

    Raises:
        GraphSizeError: If n > 62.
    """
    if g.n > GRAPH6_MAX_ORDER:
        raise GraphSizeError("graph6_encode", g.n, GRAPH6_MAX_ORDER)

    out = [chr(g.n + _OFFSET)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((g.adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + _OFFSET))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + _OFFSET))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Tuple[int, str]]:
    """
    Number the data lines of a graph6 stream.

    Blank lines and '#' comment lines are skipped; sequence numbers count
    data lines from 0.

    Args:
        lines (Iterable[str]): Raw lines.

    Yields:
        Tuple[int, str]: (sequence number, stripped line).
    """
    seq = 0
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield seq, line
        seq += 1


def read_graph6_file(path: Union[str, Path]) -> Iterator[Tuple[int, str]]:
    """
    Stream numbered graph6 lines from a file.

    Args:
        path (Union[str, Path]): File path.

    Yields:
        Tuple[int, str]: (sequence number, line).
    """
    with open(path, "r", encoding="ascii", errors="replace") as f:
        yield from iter_graph6_lines(f)
