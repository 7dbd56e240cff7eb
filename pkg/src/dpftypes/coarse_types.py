"""The (U, P, A, R) invariants and the coarse type tables for p = 3, 5, 7."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InadmissiblePair, InternalInconsistency, InvalidPrime
from .radicand import SUPPORTED_PRIMES


@dataclass(frozen=True)
class CohomologyInvariants:
    U: int
    P: int
    A: int
    R: int

    def __post_init__(self):
        if self.P != self.U + 1 or self.U + 1 != self.A + self.R:
            raise InternalInconsistency(f"inconsistent invariants {self}")

    @classmethod
    def from_units_and_factors(cls, U: int, A: int) -> "CohomologyInvariants":
        return cls(U=U, P=U + 1, A=A, R=U + 1 - A)


@dataclass(frozen=True)
class CoarseType:
    p: int
    label: str
    u: int
    a: int
    fine_marker: bool

    @property
    def r(self) -> int:
        return self.u + 1 - self.a


# Transcribed type diagrams: (label, U, A, filled marker).
_LATTICES = {
    7: (
        ("α", 3, 1, True), ("β", 3, 2, True), ("γ", 3, 3, True), ("δ", 3, 4, False),
        ("ε", 2, 1, True), ("ζ", 2, 2, True), ("η", 2, 3, False),
        ("ϑ", 1, 1, True), ("ι", 1, 2, False),
        ("κ", 0, 1, False),
    ),
    5: (
        ("α", 2, 1, True), ("β", 2, 2, True), ("γ", 2, 3, False),
        ("δ", 1, 1, True), ("ε", 1, 2, False),
        ("ζ", 1, 1, True), ("η", 1, 2, False),
        ("ϑ", 0, 1, False),
    ),
    # all three printed as open circles, kept verbatim
    3: (("α", 1, 1, False), ("β", 1, 2, False), ("γ", 0, 1, False)),
}

# Cells whose two labels are told apart only by a zeta_5 norm test.
SPLIT_PAIRS = {5: (("δ", "ζ"), ("ε", "η"))}

# Companion diagrams for dihedral fields of degree 2p, kept for comparison.
DIHEDRAL_ANALOGUE = {
    5: (("α", 1, 0, True), ("β", 1, 1, True), ("γ", 1, 2, False), ("δ", 0, 0, True), ("ε", 0, 1, False)),
    3: (("α", 0, 0, True), ("β", 0, 1, False)),
}


def type_lattice(p: int) -> list[CoarseType]:
    if p not in SUPPORTED_PRIMES:
        raise InvalidPrime(p)
    return [CoarseType(p, lab, u, a, mark) for lab, u, a, mark in _LATTICES[p]]


def types_for(p: int, u: int, a: int) -> list[CoarseType]:
    """All lattice entries at the cell (U, A); two entries mean an unresolved pair."""
    return [t for t in type_lattice(p) if (t.u, t.a) == (u, a)]


def type_label(p: int, u: int, a: int) -> str:
    labels = [t.label for t in types_for(p, u, a)]
    if not labels:
        raise InadmissiblePair(f"(U, A) = ({u}, {a}) is not a type for p = {p}")
    return "/".join(labels)
