"""Core value types for finitely semisimple dagger categories.

Objects are multiplicity functions over a finite set of simple labels;
morphisms are one complex block matrix per simple label.  The dagger is the
blockwise conjugate transpose.  Composition follows the reverse-order
convention: ``compose(f, g)`` applies ``f`` first, then ``g``.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import numpy as np

__all__ = [
    "ShapeMismatchError", "NotAScalarError",
    "Tol", "DEFAULT_TOL", "Obj", "Mor", "ApproxResult",
    "compose", "dagger", "direct_sum", "approx_eq", "is_unitary",
    "scalar_of", "identity", "zero_mor", "mor_from_blocks", "add", "sub",
    "scale", "residual", "mor_inverse", "norm",
]

SimpleLabel = str


class ShapeMismatchError(ValueError):
    """Sources/targets or block shapes do not line up."""


class NotAScalarError(ValueError):
    """Endomorphism of a non-one-dimensional object used as a scalar."""


@dataclass(frozen=True)
class Tol:
    """Numeric acceptance thresholds for residual checks.

    ``abs_eps`` is the absolute Frobenius-norm threshold, ``rel_eps`` a
    relative threshold against the operand norms.
    """

    abs_eps: float = 1e-9
    rel_eps: float = 1e-12

    def __post_init__(self):
        if not self.abs_eps > 0:
            raise ValueError("abs_eps must be positive")
        if self.rel_eps < 0:
            raise ValueError("rel_eps must be non-negative")

    def threshold(self, scale: float = 0.0) -> float:
        return self.abs_eps + self.rel_eps * scale


DEFAULT_TOL = Tol()


@dataclass(frozen=True)
class Obj:
    """An object of a semisimple category: multiplicities over simple labels.

    Only labels with positive multiplicity are stored.
    """

    mult: tuple = ()  # sorted tuple of (label, positive int)

    @staticmethod
    def from_dict(d: Mapping[SimpleLabel, int]) -> "Obj":
        items = tuple(sorted((s, int(k)) for s, k in d.items() if k))
        for _, k in items:
            if k < 0:
                raise ValueError("multiplicities must be non-negative")
        return Obj(items)

    @staticmethod
    def of(label: SimpleLabel, k: int = 1) -> "Obj":
        return Obj.from_dict({label: k})

    def __call__(self, label: SimpleLabel) -> int:
        for s, k in self.mult:
            if s == label:
                return k
        return 0

    @property
    def support(self) -> tuple:
        return tuple(s for s, _ in self.mult)

    @property
    def total_dim(self) -> int:
        return sum(k for _, k in self.mult)

    def __add__(self, other: "Obj") -> "Obj":
        d = dict(self.mult)
        for s, k in other.mult:
            d[s] = d.get(s, 0) + k
        return Obj.from_dict(d)

    def as_dict(self) -> dict:
        return dict(self.mult)


@dataclass(frozen=True)
class Mor:
    """A morphism ``src -> dst``: one ``dst(s) x src(s)`` block per label.

    Absent blocks are zero.  Blocks are read-only numpy arrays.
    """

    src: Obj
    dst: Obj
    blocks: tuple = ()  # sorted tuple of (label, ndarray)

    def block(self, label: SimpleLabel) -> np.ndarray:
        for s, b in self.blocks:
            if s == label:
                return b
        return np.zeros((self.dst(label), self.src(label)), dtype=complex)

    def block_labels(self) -> tuple:
        return tuple(s for s, _ in self.blocks)


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=complex)
    a.setflags(write=False)
    return a


def mor_from_blocks(src: Obj, dst: Obj, blocks: Mapping[SimpleLabel, np.ndarray]) -> Mor:
    """Build a morphism, validating block shapes and dropping zero blocks."""
    out = []
    for s, b in blocks.items():
        b = np.asarray(b, dtype=complex)
        want = (dst(s), src(s))
        if b.shape != want:
            raise ShapeMismatchError(
                f"block {s!r} has shape {b.shape}, expected {want}")
        if b.size and np.any(b):
            out.append((s, _freeze(b)))
    return Mor(src, dst, tuple(sorted(out, key=lambda p: p[0])))


def identity(a: Obj) -> Mor:
    return mor_from_blocks(a, a, {s: np.eye(k) for s, k in a.mult})


def zero_mor(a: Obj, b: Obj) -> Mor:
    return Mor(a, b, ())


def compose(f: Mor, g: Mor) -> Mor:
    """First ``f``, then ``g`` (the reverse-order convention ``f . g``)."""
    if f.dst != g.src:
        raise ShapeMismatchError(
            f"cannot compose: intermediate objects differ ({f.dst} vs {g.src})")
    labels = set(f.block_labels()) & set(g.block_labels())
    blocks = {s: g.block(s) @ f.block(s) for s in labels}
    return mor_from_blocks(f.src, g.dst, blocks)


def dagger(f: Mor) -> Mor:
    """Blockwise conjugate transpose."""
    return Mor(f.dst, f.src,
               tuple((s, _freeze(b.conj().T)) for s, b in f.blocks))


def direct_sum(f: Mor, g: Mor) -> Mor:
    """Block-diagonal concatenation; first operand's rows/columns come first."""
    src = f.src + g.src
    dst = f.dst + g.dst
    blocks = {}
    for s in set(f.block_labels()) | set(g.block_labels()):
        bf, bg = f.block(s), g.block(s)
        b = np.zeros((dst(s), src(s)), dtype=complex)
        b[:bf.shape[0], :bf.shape[1]] = bf
        b[bf.shape[0]:, bf.shape[1]:] = bg
        blocks[s] = b
    return mor_from_blocks(src, dst, blocks)


class ApproxResult(NamedTuple):
    ok: bool
    residual: float


def norm(f: Mor) -> float:
    return max((float(np.linalg.norm(b)) for _, b in f.blocks), default=0.0)


def residual(f: Mor, g: Mor) -> float:
    """Max over labels of the Frobenius distance between blocks."""
    if f.src != g.src or f.dst != g.dst:
        raise ShapeMismatchError("residual of morphisms with different types")
    labels = set(f.block_labels()) | set(g.block_labels())
    return max((float(np.linalg.norm(f.block(s) - g.block(s))) for s in labels),
               default=0.0)


def approx_eq(f: Mor, g: Mor, tol: Tol = DEFAULT_TOL) -> ApproxResult:
    r = residual(f, g)
    return ApproxResult(r <= tol.threshold(max(norm(f), norm(g))), r)


def is_unitary(f: Mor, tol: Tol = DEFAULT_TOL) -> ApproxResult:
    """Is ``f = f^{-dagger}``?  Requires equal multiplicities on both sides."""
    if f.src != f.dst:
        if dict(f.src.mult) != dict(f.dst.mult):
            raise ShapeMismatchError("unitarity needs equal multiplicities per label")
    r = 0.0
    for s in set(f.src.support) | set(f.dst.support):
        b = f.block(s)
        n = b.shape[0]
        r = max(r,
                float(np.linalg.norm(b.conj().T @ b - np.eye(n))),
                float(np.linalg.norm(b @ b.conj().T - np.eye(n))))
    return ApproxResult(r <= tol.threshold(1.0), r)


def scalar_of(f: Mor) -> complex:
    """The single entry of an endomorphism of a one-dimensional object."""
    if f.src != f.dst or f.src.total_dim != 1:
        raise NotAScalarError("scalar_of needs an endomorphism of a 1-dim object")
    (s, k), = f.src.mult
    return complex(f.block(s)[0, 0])


def add(f: Mor, g: Mor) -> Mor:
    if f.src != g.src or f.dst != g.dst:
        raise ShapeMismatchError("adding morphisms of different types")
    labels = set(f.block_labels()) | set(g.block_labels())
    return mor_from_blocks(f.src, f.dst, {s: f.block(s) + g.block(s) for s in labels})


def sub(f: Mor, g: Mor) -> Mor:
    return add(f, scale(-1.0, g))


def scale(c: complex, f: Mor) -> Mor:
    return Mor(f.src, f.dst, tuple((s, _freeze(c * b)) for s, b in f.blocks))


def mor_inverse(f: Mor) -> Mor:
    """Blockwise inverse; blocks must be square and nonsingular."""
    if dict(f.src.mult) != dict(f.dst.mult):
        raise ShapeMismatchError("inverse needs equal multiplicities per label")
    blocks = {}
    for s in f.src.support:
        blocks[s] = np.linalg.inv(f.block(s))
    return mor_from_blocks(f.dst, f.src, blocks)
