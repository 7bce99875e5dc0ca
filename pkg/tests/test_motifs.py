import io
import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from thyme.motifs import (
    MOTIF_TABLE,
    N_STATIC,
    PAIR_O1,
    PAIR_O2,
    PAIR_O3,
    SINGLE,
    TRIPLE,
    canonical_code,
    classify_static,
    classify_temporal,
    is_connected_pattern,
    region_bits,
    region_pattern,
    write_motif_table,
)


def realize(code):
    """Concrete node-sets with one private node in every non-empty region."""
    members = {0: set(), 1: set(), 2: set()}
    owners = {1: (0,), 2: (1,), 3: (2,), 4: (0, 1), 5: (1, 2), 6: (2, 0), 7: (0, 1, 2)}
    for r in range(1, 8):
        if code >> (r - 1) & 1:
            for pos in owners[r]:
                members[pos].add(r)
    return [frozenset(members[p]) for p in range(3)]


def oracle_connected(a, b, c):
    return sum(bool(x & y) for x, y in ((a, b), (b, c), (c, a))) >= 2


def oracle_table():
    """Rebuild the id layout from concrete sets rather than bit arithmetic."""
    kept = []
    for code in range(128):
        a, b, c = realize(code)
        if a and b and c and oracle_connected(a, b, c):
            kept.append((code, a, b, c))
    triple = sorted(code for code, a, b, c in kept if len({a, b, c}) == 3)
    single = [code for code, a, b, c in kept if a == b == c]
    pairs = {}
    for code, a, b, c in kept:
        if len({a, b, c}) != 2:
            continue
        order = PAIR_O1 if a == b else PAIR_O2 if b == c else PAIR_O3
        dup, other = (a, c) if a == b else (b, a) if b == c else (a, b)
        if other < dup:
            structure = "dup-contains-other"
        elif dup < other:
            structure = "other-contains-dup"
        else:
            structure = "proper-overlap"
        pairs.setdefault(structure, {})[order] = code
    structs = sorted(pairs, key=lambda s: pairs[s][PAIR_O1])
    ordered = [pairs[s][o] for s in structs for o in (PAIR_O1, PAIR_O2, PAIR_O3)]
    return triple + ordered + single


def test_table_matches_set_oracle():
    assert [e.code for e in MOTIF_TABLE.entries] == oracle_table()


def test_table_cardinalities():
    assert len(MOTIF_TABLE) == 96
    assert len(MOTIF_TABLE.ids_of(TRIPLE)) == 86
    assert len(MOTIF_TABLE.ids_of(SINGLE)) == 1
    assert sorted(MOTIF_TABLE.ids_of(PAIR_O1)) == [87, 90, 93]
    assert sorted(MOTIF_TABLE.ids_of(PAIR_O2)) == [88, 91, 94]
    assert sorted(MOTIF_TABLE.ids_of(PAIR_O3)) == [89, 92, 95]
    assert len(set(MOTIF_TABLE.static_orbits.values())) == N_STATIC == 26


def test_frozen_pair_layout():
    codes = {e.motif_id: e.code for e in MOTIF_TABLE.entries if e.motif_id > 86}
    assert codes == {87: 68, 88: 65, 89: 66, 90: 72, 91: 80, 92: 96, 93: 76, 94: 81, 95: 98, 96: 64}


def test_orbit_count_burnside():
    # identity fixes all 86, each transposition fixes 20, each 3-cycle fixes 5
    from thyme.motifs import _REGION_MAPS, permute_code

    triples = [e.code for e in MOTIF_TABLE.entries if e.duplication_class == TRIPLE]
    fixed = sum(sum(permute_code(c, m) == c for c in triples) for m in _REGION_MAPS)
    assert fixed == 86 + 3 * 20 + 2 * 5
    assert fixed // 6 == 26


@pytest.mark.parametrize(
    "sets, code, bits",
    [
        (({1, 2}, {2, 3}, {3, 4}), 29, "1011100"),
        (({1, 2}, {2, 3}, {1, 2}), 98, "0100011"),
        (({1}, {1}, {1}), 64, "0000001"),
    ],
)
def test_region_pattern_examples(sets, code, bits):
    assert region_pattern(*sets) == code
    assert region_bits(code) == bits


def test_region_pattern_rejects_empty():
    with pytest.raises(ValueError):
        region_pattern(set(), {1}, {2})


def test_connectivity_examples():
    assert is_connected_pattern(64)
    assert not is_connected_pattern(15)
    assert is_connected_pattern(29)


def test_classify_temporal():
    assert classify_temporal({1}, {1}, {1}) == 96
    assert classify_temporal({1, 2}, {2, 3}, {1, 2}) == 95
    assert MOTIF_TABLE.entry(95).pair_structure == "proper-overlap"
    assert classify_temporal({1, 2}, {2, 3}, {4, 5}) is None


def test_classify_static():
    assert classify_static({1, 2}, {2, 3}, {3, 4}) == classify_static({3, 4}, {2, 3}, {1, 2})
    assert classify_static({1, 2}, {2, 3}, {4, 5}) is None
    with pytest.raises(ValueError):
        classify_static({1}, {1}, {2})


def test_id_lookup_agrees_with_dict():
    lut = MOTIF_TABLE.id_lookup
    assert not lut.flags.writeable
    for code in range(128):
        assert lut[code] == MOTIF_TABLE.pattern_to_id.get(code, 0)


def test_write_motif_table_rows():
    buf = io.StringIO()
    write_motif_table(buf)
    rows = buf.getvalue().strip().split("\n")
    assert len(rows) == 97
    assert rows[0].startswith("motif_id,pattern_code")
    assert rows[96].split(",")[:2] == ["96", "64"]


node_sets = st.frozensets(st.integers(0, 7), min_size=1, max_size=6)


@given(node_sets, node_sets, node_sets)
def test_region_pattern_matches_set_algebra(a, b, c):
    regions = [a - b - c, b - c - a, c - a - b, (a & b) - c, (b & c) - a, (c & a) - b, a & b & c]
    expect = sum(1 << r for r, part in enumerate(regions) if part)
    assert region_pattern(a, b, c) == expect
    assert is_connected_pattern(expect) == oracle_connected(a, b, c)


@given(node_sets, node_sets, node_sets)
def test_static_class_invariant_under_permutation(a, b, c):
    if len({a, b, c}) < 3:
        return
    classes = {classify_static(*p) for p in itertools.permutations((a, b, c))}
    assert len(classes) == 1


@given(st.integers(0, 127))
def test_canonical_code_is_orbit_minimum(code):
    a, b, c = realize(code)
    if not (a and b and c):
        return
    orbit = {region_pattern(*p) for p in itertools.permutations((a, b, c))}
    assert canonical_code(code) == min(orbit)
