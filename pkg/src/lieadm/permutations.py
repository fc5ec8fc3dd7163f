"""Permutations of small degree and the subgroups of S3.

Conventions, fixed package-wide:

* A permutation is stored by its images in one-line form: ``images[i-1]``
  is sigma(i), positions numbered 1..n.  The string "(231)" therefore
  denotes the map 1->2, 2->3, 3->1.
* ``compose(p, q)`` applies q first: (p*q)(i) = p(q(i)).
* ``act_on_tuple(p, t)`` puts item sigma^{-1}(i) of the input at position i
  of the output.  With composition as above this action is covariant:
  act(p*q, t) = act(p, act(q, t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations as iter_permutations
from typing import Iterable, TypeVar

from .errors import InputError, PreconditionError

T = TypeVar("T")

MAX_DEGREE = 8


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0 or n > MAX_DEGREE:
            raise PreconditionError(f"degree must be in 1..{MAX_DEGREE}")
        if sorted(self.images) != list(range(1, n + 1)):
            raise PreconditionError(f"not a bijection on 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.degree:
            raise PreconditionError(f"position {i} out of range 1..{self.degree}")
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if self.degree != other.degree:
            raise PreconditionError("degree mismatch in composition")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(self.images[i - 1] == i for i in range(1, self.degree + 1))


def signature(p: Permutation) -> int:
    """Parity of the permutation: +1 even, -1 odd (counting inversions)."""
    inv = 0
    imgs = p.images
    for a in range(len(imgs)):
        for b in range(a + 1, len(imgs)):
            if imgs[a] > imgs[b]:
                inv += 1
    return -1 if inv % 2 else 1


def act_on_tuple(p: Permutation, t: tuple[T, ...]) -> tuple[T, ...]:
    """Place item sigma^{-1}(i) at position i; covariant under compose."""
    if len(t) != p.degree:
        raise InputError(f"tuple length {len(t)} != permutation degree {p.degree}")
    inv = p.inverse()
    return tuple(t[inv(i) - 1] for i in range(1, p.degree + 1))


class SubgroupId(Enum):
    """The six subgroups of S3, in the standard enumeration."""

    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    G6 = "G6"


@dataclass(frozen=True)
class GroupElementSet:
    elements: tuple[Permutation, ...]
    label: str

    def __post_init__(self) -> None:
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise PreconditionError(f"duplicate elements in {self.label}")
        degree = self.elements[0].degree
        ident = Permutation.identity(degree)
        if ident not in elems:
            raise PreconditionError(f"{self.label} does not contain the identity")
        for p in elems:
            if p.inverse() not in elems:
                raise PreconditionError(f"{self.label} not closed under inverse")
            for q in elems:
                if p.compose(q) not in elems:
                    raise PreconditionError(f"{self.label} not closed under composition")

    def __iter__(self) -> Iterable[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


_ID3 = Permutation((1, 2, 3))
_T12 = Permutation((2, 1, 3))
_T23 = Permutation((1, 3, 2))
_T13 = Permutation((3, 2, 1))
_C231 = Permutation((2, 3, 1))
_C312 = Permutation((3, 1, 2))

_SUBGROUPS: dict[SubgroupId, tuple[Permutation, ...]] = {
    SubgroupId.G1: (_ID3,),
    SubgroupId.G2: (_ID3, _T12),
    SubgroupId.G3: (_ID3, _T23),
    SubgroupId.G4: (_ID3, _T13),
    SubgroupId.G5: (_ID3, _C231, _C312),
    SubgroupId.G6: (_ID3, _T12, _T23, _T13, _C231, _C312),
}


def subgroup_elements(g: SubgroupId) -> GroupElementSet:
    return GroupElementSet(_SUBGROUPS[g], g.value)


def enumerate_group(kind: str, n: int) -> GroupElementSet:
    """All of S_n (kind "S") or A_n (kind "A"); n capped at 8."""
    if kind not in ("S", "A"):
        raise InputError(f"kind must be 'S' or 'A', got {kind!r}")
    if not 1 <= n <= MAX_DEGREE:
        raise InputError(f"n must be in 1..{MAX_DEGREE}")
    perms = tuple(Permutation(images) for images in iter_permutations(range(1, n + 1)))
    if kind == "A":
        perms = tuple(p for p in perms if signature(p) == 1)
    return GroupElementSet(perms, f"{kind}{n}")
