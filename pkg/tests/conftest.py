"""Shared helpers: seeded sample batteries and a chain validity checker."""

from __future__ import annotations

from substochastic import Chain, ChainKind, Matrix, middle_entries, sample_member, sample_vertex

STRATEGIES = ("convex", "clamp")


def member_battery(max_dim=3, ks=(1, 2, 3), seeds=range(4), strategies=STRATEGIES):
    """Deterministic list of (matrix, k) polytope members for property tests."""
    battery = []
    for m in range(1, max_dim + 1):
        for n in range(1, max_dim + 1):
            for k in ks:
                for strategy in strategies:
                    for seed in seeds:
                        battery.append((sample_member(m, n, k, seed, strategy), k))
    return battery


def vertex_battery(max_dim=3, ks=(1, 2, 3), seeds=range(4)):
    battery = []
    for m in range(1, max_dim + 1):
        for n in range(1, max_dim + 1):
            for k in ks:
                for seed in seeds:
                    battery.append((sample_vertex(m, n, k, seed), k))
    return battery


def _link(a, b):
    """The line shared by two consecutive chain cells: ('row', i) or ('col', j)."""
    (r1, c1), (r2, c2) = a, b
    if r1 == r2 and c1 != c2:
        return ("row", r1)
    if c1 == c2 and r1 != r2:
        return ("col", c1)
    raise AssertionError(f"cells {a} and {b} do not share exactly one line")


def assert_valid_chain(chain: Chain, matrix: Matrix, k: int) -> None:
    """Check every structural invariant a chain must satisfy for its matrix."""
    cells = chain.cells
    middles = set(middle_entries(matrix, k))
    assert len(set(cells)) == len(cells), "chain cells must be distinct"
    assert set(cells) <= middles, "chain cells must all be middle entries"
    links = [_link(a, b) for a, b in zip(cells, cells[1:])]
    for left, right in zip(links, links[1:]):
        assert left[0] != right[0], "links must alternate between rows and columns"

    def on_line(axis, cell):
        if axis == "row":
            return {mid for mid in middles if mid[0] == cell[0]}
        return {mid for mid in middles if mid[1] == cell[1]}

    if chain.kind is ChainKind.LOOP:
        assert len(cells) >= 4 and len(cells) % 2 == 0
        closing = _link(cells[-1], cells[0])
        assert closing[0] != links[0][0], "loop closure must continue the alternation"
        assert closing[0] != links[-1][0], "loop closure must continue the alternation"
    else:
        if len(cells) == 1:
            assert on_line("row", cells[0]) == {cells[0]}
            assert on_line("col", cells[0]) == {cells[0]}
        else:
            start_axis = "col" if links[0][0] == "row" else "row"
            end_axis = "col" if links[-1][0] == "row" else "row"
            assert on_line(start_axis, cells[0]) == {cells[0]}, "start line must hold one middle entry"
            assert on_line(end_axis, cells[-1]) == {cells[-1]}, "end line must hold one middle entry"
