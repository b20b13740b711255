import random

import pytest
from hypothesis import given, settings, strategies as st

from curvlab.formats import (
    FormatError,
    iter_graph6_file,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from curvlab.generators import complete_graph, cycle_graph, petersen
from curvlab.graph import from_edge_list
from conftest import random_graph


def reference_decode(line: str):
    """Independent bit-level graph6 decoder used as an oracle.

    Decodes the size prefix and the column-major upper-triangle bit vector
    with explicit integer arithmetic, sharing no code with the package.
    """
    vals = [ord(c) - 63 for c in line.strip()]
    assert all(0 <= v <= 63 for v in vals)
    if vals[0] != 63:
        n, vals = vals[0], vals[1:]
    elif vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        vals = vals[4:]
    else:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        vals = vals[8:]
    bitstring = "".join(format(v, "06b") for v in vals)
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if bitstring[k] == "1":
                edges.append((row, col))
            k += 1
    return n, edges


def test_k4_is_c_tilde():
    g = parse_graph6("C~")
    assert g.n == 4 and g.m == 6
    assert write_graph6(complete_graph(4)) == "C~"


def test_c4_is_cl():
    g = parse_graph6("Cl")
    assert g == from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert write_graph6(g) == "Cl"


def test_single_vertex_and_empty():
    assert parse_graph6("@").n == 1
    assert parse_graph6("?").n == 0
    assert write_graph6(from_edge_list(0, [])) == "?"
    assert write_graph6(from_edge_list(1, [])) == "@"


def test_header_ignored():
    assert parse_graph6(">>graph6<<C~") == complete_graph(4)


def test_petersen_roundtrip():
    p = petersen()
    assert parse_graph6(write_graph6(p)) == p


def test_reference_decoder_agrees():
    rng = random.Random(17)
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        line = write_graph6(g)
        n, edges = reference_decode(line)
        assert n == g.n
        assert from_edge_list(n, edges) == g


@settings(max_examples=200)
@given(st.integers(0, 15), st.integers(0, 2**105 - 1))
def test_roundtrip_random(n, mask):
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges = [p for i, p in enumerate(pairs) if (mask >> i) & 1]
    g = from_edge_list(n, edges)
    line = write_graph6(g)
    assert parse_graph6(line) == g
    assert write_graph6(parse_graph6(line)) == line


def test_large_n_prefix_roundtrip():
    g = from_edge_list(100, [(0, 99)])
    assert parse_graph6(write_graph6(g)) == g


def test_sparse6_documented_example():
    # ":Fa@x^" encodes 7 vertices with edges 0-1, 0-2, 1-2, 5-6
    g = parse_graph6(":Fa@x^")
    assert g.n == 7
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (5, 6)]


def test_malformed_inputs():
    with pytest.raises(FormatError):
        parse_graph6("")
    with pytest.raises(FormatError):
        parse_graph6("C")  # truncated payload
    with pytest.raises(FormatError):
        parse_graph6("C" + chr(30))  # non-printable byte
    with pytest.raises(FormatError):
        parse_graph6("D?A")  # nonzero padding bits for n=5


def test_trailing_bits_checked():
    # K2 is "A_" (bits 10 0000); flipping a padding bit must fail
    assert parse_graph6("A_").m == 1
    with pytest.raises(FormatError):
        parse_graph6("A`")


def test_file_iteration_reports_line_numbers():
    lines = ["C~", "Cl", "", "notvalid###"]
    with pytest.raises(FormatError) as err:
        iter_graph6_file(lines)
    assert "line 4" in str(err.value)
    good = iter_graph6_file(["C~", "", "Cl"])
    assert [lineno for lineno, _ in good] == [1, 3]


def test_edge_list_roundtrip():
    g = petersen()
    text = write_edge_list(g)
    assert parse_edge_list(text) == g
    assert text.splitlines()[0] == "10 15"


def test_edge_list_malformed():
    with pytest.raises(FormatError):
        parse_edge_list("3")
    with pytest.raises(FormatError):
        parse_edge_list("3 2\n0 1")
    with pytest.raises(FormatError):
        parse_edge_list("3 one\n0 1")


def test_write_cap():
    with pytest.raises(FormatError):
        write_graph6(cycle_graph(10), max_vertices=5)
