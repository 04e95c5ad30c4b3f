"""Raising a ternary permutation from dimension n to dimension n + 2.

Each source word reappears four times in the output, tagged with one of
four periodic two-bit suffixes; three fixed splice words stitch the four
blocks together.  The exact placement is materialized as an explicit
layout table so its index arithmetic can be tested on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .sequences import TernarySequence, verify
from .words import Word, concat, zero


class ModifierKind(Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"


#: Splice suffixes, keyed by the block boundary they close: the output word
#: is the zero word of the source dimension followed by this suffix.
SPLICE_FIRST = Word(0b10, 2)
SPLICE_SECOND = Word(0b11, 2)
SPLICE_THIRD = Word(0b01, 2)


def modifier(kind: ModifierKind, i: int) -> Word:
    """The two-bit tag a source word carries at index i, periodic with period 4.

    Families:
      A: 00 when i = 1 (mod 4), else 01
      B: 10 when i is odd, else 00
      C: 00 when i = 3 (mod 4), else 11
      D: 01 when i = 1 (mod 4), 11 when i = 3 (mod 4), 10 when i is even
    """
    if i < 1:
        raise ValueError(f"modifier index must be positive, got {i}")
    r = i % 4
    if kind is ModifierKind.A:
        bits = 0b00 if r == 1 else 0b01
    elif kind is ModifierKind.B:
        bits = 0b10 if i % 2 == 1 else 0b00
    elif kind is ModifierKind.C:
        bits = 0b00 if r == 3 else 0b11
    else:
        bits = {1: 0b01, 3: 0b11}.get(r, 0b10)
    return Word(bits, 2)


@dataclass(frozen=True)
class LiftLayoutEntry:
    """One output position: either a tagged source word or a splice.

    Exactly one of the two source forms is set: (v_index, kind) for a
    tagged copy of the source word at 1-based v_index, or splice for one
    of the three fixed suffixes.
    """

    target_index: int
    v_index: Optional[int] = None
    kind: Optional[ModifierKind] = None
    splice: Optional[Word] = None

    def __post_init__(self) -> None:
        tagged = self.v_index is not None and self.kind is not None
        if tagged == (self.splice is not None):
            raise ValueError("entry must be either a tagged source word or a splice")

    @property
    def is_splice(self) -> bool:
        return self.splice is not None


def lift_layout(k: int) -> list[LiftLayoutEntry]:
    """Placement table for lifting a k-term sequence, k = 2**n - 1 with n >= 3.

    The 4k + 3 output positions are, in order:

      1 .. k        source k, k-1, ..., 1     tagged A
      k+1           splice 10
      k+2 .. 2k-1   source 1, 2, ..., k-2     tagged B
      2k, 2k+1      source k, then k-1        tagged B
      2k+2          splice 11
      2k+3, 2k+4    source k-1, then k        tagged C
      2k+5 .. 3k    source k-2, ..., 3        tagged C
      3k+1, 3k+2    source 1, then 2          tagged C
      3k+3          splice 01
      3k+4, 3k+5    source 2, then 1          tagged D
      3k+6 .. 4k+3  source 3, 4, ..., k       tagged D

    Together the entries hit every (source index, tag family) pair exactly
    once plus the three splices.  At k = 3 positions 2k+4 and 3k+1 would
    collide, hence the k >= 7 floor.
    """
    if k < 7 or (k & (k + 1)) != 0:
        raise ValueError(f"k must be 2**n - 1 for some n >= 3, got {k}")
    entries: list[LiftLayoutEntry] = []
    add = entries.append
    for t in range(1, k + 1):
        add(LiftLayoutEntry(t, v_index=k - t + 1, kind=ModifierKind.A))
    add(LiftLayoutEntry(k + 1, splice=SPLICE_FIRST))
    for t in range(k + 2, 2 * k):
        add(LiftLayoutEntry(t, v_index=t - k - 1, kind=ModifierKind.B))
    add(LiftLayoutEntry(2 * k, v_index=k, kind=ModifierKind.B))
    add(LiftLayoutEntry(2 * k + 1, v_index=k - 1, kind=ModifierKind.B))
    add(LiftLayoutEntry(2 * k + 2, splice=SPLICE_SECOND))
    add(LiftLayoutEntry(2 * k + 3, v_index=k - 1, kind=ModifierKind.C))
    add(LiftLayoutEntry(2 * k + 4, v_index=k, kind=ModifierKind.C))
    for t in range(2 * k + 5, 3 * k + 1):
        add(LiftLayoutEntry(t, v_index=3 * k + 3 - t, kind=ModifierKind.C))
    add(LiftLayoutEntry(3 * k + 1, v_index=1, kind=ModifierKind.C))
    add(LiftLayoutEntry(3 * k + 2, v_index=2, kind=ModifierKind.C))
    add(LiftLayoutEntry(3 * k + 3, splice=SPLICE_THIRD))
    add(LiftLayoutEntry(3 * k + 4, v_index=2, kind=ModifierKind.D))
    add(LiftLayoutEntry(3 * k + 5, v_index=1, kind=ModifierKind.D))
    for t in range(3 * k + 6, 4 * k + 4):
        add(LiftLayoutEntry(t, v_index=t - 3 * k - 3, kind=ModifierKind.D))
    return entries


def check_modifier_properties(k: int) -> bool:
    """Confirm the two facts the lift leans on, up to index k.

    First, the four tags at any index are pairwise distinct (so the four
    copies of a source word stay distinct).  Second, over every window
    (i-1, i, i+1) centred on an even i, each tag family XORs to zero (so
    tagged triples inherit the ternary condition from the source).
    """
    if k < 3:
        raise ValueError(f"property check needs k >= 3, got {k}")
    kinds = tuple(ModifierKind)
    for i in range(1, k + 1):
        if len({modifier(kd, i).bits for kd in kinds}) != 4:
            return False
    for i in range(2, k, 2):
        for kd in kinds:
            if modifier(kd, i - 1).bits ^ modifier(kd, i).bits ^ modifier(kd, i + 1).bits:
                return False
    return True


def lift(seq: TernarySequence) -> TernarySequence:
    """Turn a verified ternary permutation of dimension n into one of n + 2.

    Every output word is a source word (or the zero word, for splices)
    with a two-bit suffix appended, placed per lift_layout.  The output is
    re-verified before it is returned.
    """
    if seq.dim < 3:
        raise ValueError(f"lifting needs dimension >= 3, got {seq.dim}")
    report = verify(seq)
    if not report.valid:
        raise ValueError(f"input is not a ternary permutation: {report.failure}")
    k = (1 << seq.dim) - 1
    z = zero(seq.dim)
    out: list[Word] = []
    for entry in lift_layout(k):
        if entry.splice is not None:
            out.append(concat(z, entry.splice))
        else:
            out.append(concat(seq.words[entry.v_index - 1], modifier(entry.kind, entry.v_index)))
    result = TernarySequence(seq.dim + 2, tuple(out))
    report = verify(result)
    if not report.valid:  # layout or modifier regression; cannot happen otherwise
        raise RuntimeError(f"lifted sequence failed verification: {report.failure}")
    return result
