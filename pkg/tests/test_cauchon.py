import json
from itertools import product

import pytest

from qcgl.cauchon import (CauchonDiagram, count, count_by_black,
                          enumerate_diagrams, height_one_diagrams, is_valid)


def brute_force(m, n):
    cells = [(r, c) for r in range(1, m + 1) for c in range(1, n + 1)]
    out = set()
    for bits in product((False, True), repeat=len(cells)):
        black = frozenset(cell for cell, bit in zip(cells, bits) if bit)
        if is_valid(m, n, black):
            out.add(black)
    return out


def test_validity_examples():
    assert is_valid(2, 2, set())
    assert not is_valid(2, 2, {(2, 2)})
    assert is_valid(2, 2, {(1, 2), (2, 2)})
    assert is_valid(2, 2, {(2, 1), (2, 2)})
    assert is_valid(1, 3, {(1, 2)})
    with pytest.raises(ValueError):
        is_valid(2, 2, {(3, 1)})


def test_counts():
    assert count(1, 1) == 2
    assert count(2, 2) == 14
    # oracle detail: exactly the two colourings with (2,2) black and both
    # neighbours white are invalid
    invalid = [black for black in
               (frozenset(s) for s in [{(2, 2)}, {(1, 1), (2, 2)}])
               if not is_valid(2, 2, black)]
    assert len(invalid) == 2
    assert count_by_black(2, 2).get(1) == 3


@pytest.mark.parametrize("shape", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_enumeration_agrees_with_brute_force(shape):
    m, n = shape
    enumerated = [d.black for d in enumerate_diagrams(m, n)]
    assert len(enumerated) == len(set(enumerated))
    assert set(enumerated) == brute_force(m, n)


def test_count_transpose_symmetry_empirically():
    # not asserted as a theorem anywhere; observed at desk sizes
    for m, n in [(2, 3), (2, 4), (3, 4)]:
        assert count(m, n) == count(n, m)


def test_height_one_diagrams():
    d22 = height_one_diagrams(2, 2)
    assert [sorted(d.black) for d in d22] == [[(1, 1)], [(1, 2)], [(2, 1)]]
    assert len(height_one_diagrams(1, 5)) == 5
    assert len(height_one_diagrams(3, 3)) == 5
    for m, n in [(2, 2), (2, 3), (3, 3)]:
        listed = {frozenset(d.black) for d in height_one_diagrams(m, n)}
        for d in listed:
            assert is_valid(m, n, d) and len(d) == 1
        singles = {b for b in brute_force(m, n) if len(b) == 1}
        assert listed == singles


def test_histogram_totals():
    hist = count_by_black(2, 3)
    assert sum(hist.values()) == count(2, 3)
    assert hist[0] == 1
    assert hist[1] == 4
    assert max(hist) == 6


def test_validate_and_formats():
    d = CauchonDiagram.validate(2, 2, {(1, 2), (2, 2)})
    assert str(d) == ".#\n.#"
    assert CauchonDiagram.from_text(str(d)) == d
    assert json.loads(json.dumps(d.to_cells())) == [[1, 2], [2, 2]]
    with pytest.raises(ValueError):
        CauchonDiagram.validate(2, 2, {(2, 2)})
    with pytest.raises(ValueError):
        CauchonDiagram.from_text(".#\n#?")


def test_size_limit():
    with pytest.raises(ValueError):
        count(5, 5)
    with pytest.raises(ValueError):
        count(0, 3)
