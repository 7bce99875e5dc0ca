"""Seven-region encoding of hyperedge triples and the 96-entry motif table.

A triple of node-sets ``(a, b, c)`` is described by the emptiness of the
seven Venn regions, in this order::

    1: a - b - c     2: b - c - a     3: c - a - b
    4: a & b - c     5: b & c - a     6: c & a - b
    7: a & b & c

Region ``r`` maps to bit ``r - 1`` of the pattern code.
"""
from __future__ import annotations

import csv
import itertools
from dataclasses import dataclass, field

import numpy as np

N_MOTIFS = 96
N_STATIC = 26
N_TRIPLE = 86

TRIPLE = "triple"
SINGLE = "single"
PAIR_O1 = "pair-O1"
PAIR_O2 = "pair-O2"
PAIR_O3 = "pair-O3"

DUP_CONTAINS_OTHER = "dup-contains-other"
OTHER_CONTAINS_DUP = "other-contains-dup"
PROPER_OVERLAP = "proper-overlap"
NOT_APPLICABLE = "n/a"

# regions that must be empty for each pair of positions to hold the same set
_EQ_IJ = (1, 2, 5, 6)
_EQ_JK = (2, 3, 4, 6)
_EQ_IK = (1, 3, 4, 5)


def _bit(code: int, region: int) -> bool:
    return bool(code >> (region - 1) & 1)


def code_from_sizes(sa, sb, sc, ab, bc, ca, abc) -> int:
    """Pattern code from set sizes and intersection sizes (inclusion-exclusion)."""
    regions = (
        sa - ab - ca + abc,
        sb - ab - bc + abc,
        sc - bc - ca + abc,
        ab - abc,
        bc - abc,
        ca - abc,
        abc,
    )
    code = 0
    for r, size in enumerate(regions):
        if size > 0:
            code |= 1 << r
    return code


def region_pattern(ei, ej, ek) -> int:
    """Return the 7-bit region code of the ordered triple ``(ei, ej, ek)``."""
    if not ei or not ej or not ek:
        raise ValueError("region_pattern needs three non-empty node-sets")
    ei, ej, ek = frozenset(ei), frozenset(ej), frozenset(ek)
    ij = ei & ej
    return code_from_sizes(
        len(ei), len(ej), len(ek), len(ij), len(ej & ek), len(ek & ei), len(ij & ek)
    )


def region_bits(code: int) -> str:
    """Render a code as seven 0/1 characters, region 1 first."""
    return "".join("1" if _bit(code, r) else "0" for r in range(1, 8))


def is_connected_pattern(code: int) -> bool:
    ij = _bit(code, 4) or _bit(code, 7)
    jk = _bit(code, 5) or _bit(code, 7)
    ki = _bit(code, 6) or _bit(code, 7)
    return ij + jk + ki >= 2


def _all_empty(code, regions):
    return not any(_bit(code, r) for r in regions)


def duplication_class(code: int) -> str:
    """Which positions of a connected pattern carry the same node-set."""
    ij = _all_empty(code, _EQ_IJ)
    jk = _all_empty(code, _EQ_JK)
    ik = _all_empty(code, _EQ_IK)
    n_equal = ij + jk + ik
    if n_equal == 0:
        return TRIPLE
    if n_equal == 3:
        return SINGLE
    if n_equal != 1:
        raise ValueError(f"inconsistent duplication in pattern {code}")
    if ij:
        return PAIR_O1
    if jk:
        return PAIR_O2
    return PAIR_O3


# (duplicated-only region, other-only region) for each pair ordering
_PAIR_REGIONS = {PAIR_O1: (4, 3), PAIR_O2: (5, 1), PAIR_O3: (6, 2)}


def pair_structure(code: int) -> str:
    cls = duplication_class(code)
    if cls not in _PAIR_REGIONS:
        return NOT_APPLICABLE
    dup_only, other_only = _PAIR_REGIONS[cls]
    if _bit(code, dup_only) and _bit(code, other_only):
        return PROPER_OVERLAP
    if _bit(code, dup_only):
        return DUP_CONTAINS_OTHER
    return OTHER_CONTAINS_DUP


# Region permutations induced by relabelling the positions (i, j, k).
# Position p holds singleton region p + 1; the pair region of {p, q}:
_PAIR_REGION = {frozenset((0, 1)): 4, frozenset((1, 2)): 5, frozenset((2, 0)): 6}


def _region_maps():
    maps = []
    for perm in itertools.permutations(range(3)):
        # perm[p] is the new position of the set previously at position p
        m = {7: 7}
        for p in range(3):
            m[p + 1] = perm[p] + 1
        for pair, region in _PAIR_REGION.items():
            p, q = tuple(pair)
            m[region] = _PAIR_REGION[frozenset((perm[p], perm[q]))]
        maps.append(m)
    return maps


_REGION_MAPS = _region_maps()


def permute_code(code: int, region_map: dict) -> int:
    out = 0
    for r in range(1, 8):
        if _bit(code, r):
            out |= 1 << (region_map[r] - 1)
    return out


def canonical_code(code: int) -> int:
    """Smallest code reachable by reordering the three positions."""
    return min(permute_code(code, m) for m in _REGION_MAPS)


@dataclass(frozen=True)
class MotifEntry:
    motif_id: int
    code: int
    duplication_class: str
    pair_structure: str
    static_class: int | None

    @property
    def bits(self) -> str:
        return region_bits(self.code)


@dataclass(frozen=True)
class MotifTable:
    entries: tuple
    pattern_to_id: dict
    static_orbits: dict
    # numpy lookup: code -> motif id, 0 for disconnected codes
    id_lookup: np.ndarray = field(repr=False, compare=False)

    def __len__(self):
        return len(self.entries)

    def entry(self, motif_id: int) -> MotifEntry:
        return self.entries[motif_id - 1]

    def ids_of(self, duplication_class: str) -> list:
        return [e.motif_id for e in self.entries if e.duplication_class == duplication_class]


_PAIR_CLASSES = (PAIR_O1, PAIR_O2, PAIR_O3)


def build_motif_table() -> MotifTable:
    connected = [c for c in range(128) if is_connected_pattern(c)]
    triples = sorted(c for c in connected if duplication_class(c) == TRIPLE)
    singles = [c for c in connected if duplication_class(c) == SINGLE]
    pairs = [c for c in connected if duplication_class(c) in _PAIR_CLASSES]

    by_structure = {}
    for c in pairs:
        by_structure.setdefault(pair_structure(c), {})[duplication_class(c)] = c
    structures = sorted(by_structure, key=lambda s: by_structure[s][PAIR_O1])
    ordered_pairs = [by_structure[s][o] for s in structures for o in _PAIR_CLASSES]

    orbit_reps = sorted({canonical_code(c) for c in triples})
    static_class_of_rep = {rep: n + 1 for n, rep in enumerate(orbit_reps)}
    static_orbits = {c: static_class_of_rep[canonical_code(c)] for c in triples}

    entries = []
    for code in triples + ordered_pairs + singles:
        entries.append(
            MotifEntry(
                motif_id=len(entries) + 1,
                code=code,
                duplication_class=duplication_class(code),
                pair_structure=pair_structure(code),
                static_class=static_orbits.get(code),
            )
        )
    lookup = np.zeros(128, dtype=np.int32)
    for e in entries:
        lookup[e.code] = e.motif_id
    lookup.setflags(write=False)
    return MotifTable(
        entries=tuple(entries),
        pattern_to_id={e.code: e.motif_id for e in entries},
        static_orbits=static_orbits,
        id_lookup=lookup,
    )


MOTIF_TABLE = build_motif_table()


def classify_temporal(ei, ej, ek):
    """Motif id (1..96) of hyperedges arriving in the order ``ei, ej, ek``.

    Returns ``None`` when the three node-sets are not connected.
    """
    return MOTIF_TABLE.pattern_to_id.get(region_pattern(ei, ej, ek))


def classify_static(ea, eb, ec):
    """Static h-motif class (1..26) of three distinct node-sets, or ``None``."""
    ea, eb, ec = frozenset(ea), frozenset(eb), frozenset(ec)
    if ea == eb or eb == ec or ea == ec:
        raise ValueError("static hyperedges must be pairwise distinct")
    code = region_pattern(ea, eb, ec)
    if not is_connected_pattern(code):
        return None
    return MOTIF_TABLE.static_orbits[code]


def write_motif_table(path_or_file, table: MotifTable = MOTIF_TABLE):
    own = isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__")
    fh = open(path_or_file, "w", newline="") if own else path_or_file
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(
            ["motif_id", "pattern_code", "region_bits", "duplication_class",
             "pair_structure", "static_class_or_empty"]
        )
        for e in table.entries:
            w.writerow(
                [e.motif_id, e.code, e.bits, e.duplication_class, e.pair_structure,
                 "" if e.static_class is None else e.static_class]
            )
    finally:
        if own:
            fh.close()
