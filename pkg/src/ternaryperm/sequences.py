"""Ordered word sequences and the checks that certify them as ternary.

A ternary permutation of dimension n lists every nonzero n-bit word exactly
once, and at every even position the word XORs with its two neighbours to
zero.  Positions are 1-based in reports and messages, 0-based in storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .words import Word

#: Failure kinds, in the order verify() checks them.
FAILURE_KINDS = ("length", "zero-word", "duplicate", "triple-sum")


@dataclass(frozen=True)
class VerificationFailure:
    kind: str
    index: int
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at i={self.index}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verify(): valid, or the first violation found."""

    valid: bool
    failure: Optional[VerificationFailure] = None

    def __post_init__(self) -> None:
        if self.valid == (self.failure is not None):
            raise ValueError("a report is valid exactly when it carries no failure")


@dataclass(frozen=True)
class TernarySequence:
    """An ordered run of words claimed to be a ternary permutation.

    Holding a TernarySequence certifies nothing; run verify() for that.
    Construction only pins the coherent bits: dimension at least 2 and
    every word of that dimension.
    """

    dim: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError(f"sequences are defined for dimension >= 2, got {self.dim}")
        object.__setattr__(self, "words", tuple(self.words))
        for pos, w in enumerate(self.words, start=1):
            if w.dim != self.dim:
                raise ValueError(
                    f"word at position {pos} has dimension {w.dim}, expected {self.dim}"
                )

    @classmethod
    def from_decimals(cls, dim: int, values: Iterable[int]) -> "TernarySequence":
        return cls(dim, tuple(Word(v, dim) for v in values))

    @property
    def decimals(self) -> tuple[int, ...]:
        return tuple(w.bits for w in self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)


def verify(seq: TernarySequence) -> VerificationReport:
    """Check the three ternary conditions, reporting the first violation.

    Check order is fixed: length, then zero/duplicate words scanning
    positions upward, then the XOR of each even-centred triple.  A full
    pass means the words are a permutation of the nonzero vectors with
    every even-position triple summing to zero.
    """
    expected = (1 << seq.dim) - 1
    actual = len(seq.words)
    if actual != expected:
        return VerificationReport(
            False,
            VerificationFailure(
                "length",
                min(actual, expected) + 1,
                f"expected {expected} words for n={seq.dim}, got {actual}",
            ),
        )
    seen: dict[int, int] = {}
    for pos, w in enumerate(seq.words, start=1):
        if w.is_zero:
            return VerificationReport(
                False,
                VerificationFailure("zero-word", pos, f"word at position {pos} is zero"),
            )
        if w.bits in seen:
            return VerificationReport(
                False,
                VerificationFailure(
                    "duplicate",
                    pos,
                    f"word {w.bits} at position {pos} already appeared at position {seen[w.bits]}",
                ),
            )
        seen[w.bits] = pos
    # expected is odd, so this covers the even indices 2 .. expected - 1
    for i in range(2, expected, 2):
        x = seq.words[i - 2].bits ^ seq.words[i - 1].bits ^ seq.words[i].bits
        if x:
            return VerificationReport(
                False,
                VerificationFailure(
                    "triple-sum",
                    i,
                    f"v{i - 1} XOR v{i} XOR v{i + 1} = {x}, expected 0",
                ),
            )
    return VerificationReport(True)
