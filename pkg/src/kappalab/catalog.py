"""Built-in, load-time-validated example data.

Catalog F/R values are stored as closed-form expressions (golden ratio,
roots of unity, 1/sqrt(2)) evaluated once per load, so residuals stay at
machine-epsilon scale.  Broken fixtures live under the ``broken:`` prefix
and are expected to fail exactly their intended check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fusion import FusionData, FusionDataError
from .modulecat import ModuleData, regular_module
from .monoidal import CentralStructure, regular_central

__all__ = ["CatalogEntry", "UnknownNameError", "builtin", "list_builtins"]


class UnknownNameError(KeyError):
    """No catalog entry under the requested name."""


@dataclass
class CatalogEntry:
    name: str
    kind: str  # fusion | module | central
    payload: object
    provenance: str = ""


# -- fusion categories -----------------------------------------------------

def _trivial() -> FusionData:
    return FusionData(
        simples=("1",), unit="1", dual={"1": "1"},
        N={("1", "1", "1"): 1}, F={}, evcoef={"1": 1.0},
        R={("1", "1", "1"): np.eye(1)}, name="trivial")


def _pointed(n: int, p: int = 0, q: int | None = None, name: str = "") -> FusionData:
    """Z/n with 3-cocycle exponent p and (optional) braiding exponent q.

    F(a,b,c) = exp(2 pi i p a floor((b+c)/n) / n); R(a,b) = exp(i pi q ab / n).
    Admissibility of (n, p, q) is certified by the pentagon/hexagon sweep
    at load time.
    """
    simples = tuple(str(k) for k in range(n))
    N = {(str(a), str(b), str((a + b) % n)): 1
         for a in range(n) for b in range(n)}
    F = {}
    for a, b, c in itertools.product(range(n), repeat=3):
        d = (a + b + c) % n
        w = np.exp(2j * np.pi * p * a * ((b + c) // n) / n)
        F[(str(a), str(b), str(c), str(d))] = np.array([[w]])
    R = None
    if q is not None:
        R = {(str(a), str(b), str((a + b) % n)):
             np.array([[np.exp(1j * np.pi * q * a * b / n)]])
             for a in range(n) for b in range(n)}
    return FusionData(
        simples=simples, unit="0",
        dual={str(k): str((-k) % n) for k in range(n)},
        N=N, F=F, evcoef={s: 1.0 for s in simples}, R=R,
        name=name or f"zn:{n},{p}" + ("" if q is None else f",{q}"))


def _fibonacci() -> FusionData:
    phi = (1 + np.sqrt(5)) / 2
    F_golden = np.array([[1 / phi, 1 / np.sqrt(phi)],
                         [1 / np.sqrt(phi), -1 / phi]])
    return FusionData(
        simples=("1", "tau"), unit="1", dual={"1": "1", "tau": "tau"},
        N={("1", "1", "1"): 1, ("1", "tau", "tau"): 1, ("tau", "1", "tau"): 1,
           ("tau", "tau", "1"): 1, ("tau", "tau", "tau"): 1},
        F={("tau", "tau", "tau", "tau"): F_golden,
           ("tau", "tau", "tau", "1"): np.eye(1)},
        evcoef={"1": 1.0, "tau": np.sqrt(phi)},
        R={("tau", "tau", "1"): np.array([[np.exp(-4j * np.pi / 5)]]),
           ("tau", "tau", "tau"): np.array([[np.exp(3j * np.pi / 5)]])},
        name="fibonacci")


def _ising() -> FusionData:
    simples = ("1", "psi", "sigma")
    pairs = {("1", "1"): ["1"], ("1", "psi"): ["psi"], ("psi", "1"): ["psi"],
             ("1", "sigma"): ["sigma"], ("sigma", "1"): ["sigma"],
             ("psi", "psi"): ["1"], ("psi", "sigma"): ["sigma"],
             ("sigma", "psi"): ["sigma"], ("sigma", "sigma"): ["1", "psi"]}
    N = {(a, b, c): 1 for (a, b), cs in pairs.items() for c in cs}
    F = {}
    for a, b, c in itertools.product(("psi", "sigma"), repeat=3):
        for d in simples:
            rows = [(e, 0, 0) for e in simples
                    if N.get((a, b, e), 0) and N.get((e, c, d), 0)]
            if not rows:
                continue
            if (a, b, c) == ("sigma", "sigma", "sigma"):
                F[(a, b, c, d)] = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
            elif (a, b, c, d) in (("psi", "sigma", "psi", "sigma"),
                                  ("sigma", "psi", "sigma", "psi")):
                F[(a, b, c, d)] = -np.eye(1)
            else:
                F[(a, b, c, d)] = np.eye(len(rows))
    R = {("sigma", "sigma", "1"): np.array([[np.exp(-1j * np.pi / 8)]]),
         ("sigma", "sigma", "psi"): np.array([[np.exp(3j * np.pi / 8)]]),
         ("sigma", "psi", "sigma"): np.array([[-1j]]),
         ("psi", "sigma", "sigma"): np.array([[-1j]]),
         ("psi", "psi", "1"): np.array([[-1.0]])}
    return FusionData(
        simples=simples, unit="1", dual={s: s for s in simples},
        N=N, F=F,
        evcoef={"1": 1.0, "psi": 1.0, "sigma": 2 ** 0.25},
        R=R, name="ising")


def _vec_over_z2() -> ModuleData:
    base = _pointed(2, 0, 0, name="z2")
    ma = {}
    for u, v in itertools.product(("0", "1"), repeat=2):
        sign = -1.0 if u == v == "1" else 1.0
        ma[("pt", u, v, "pt")] = np.array([[sign]])
    return ModuleData(
        base=base, msimples=("pt",),
        Ntilde={("pt", u, "pt"): 1 for u in ("0", "1")},
        MA=ma, unitor={"pt": 1.0}, name="vec-over-z2")


# -- broken fixtures (negative controls) ------------------------------------

def _rot(theta: float) -> np.ndarray:
    return np.array([[np.cos(theta), -np.sin(theta)],
                     [np.sin(theta), np.cos(theta)]])


def _broken_fibonacci_f() -> FusionData:
    fd = _fibonacci()
    # unitary twist of one F-matrix: F-unitarity survives, pentagon breaks
    fd.F[("tau", "tau", "tau", "tau")] = \
        fd.F[("tau", "tau", "tau", "tau")] @ _rot(3e-2)
    return FusionData(fd.simples, fd.unit, fd.dual, fd.N, fd.F, fd.evcoef,
                      fd.R, name="broken:fibonacci-F")


def _broken_fibonacci_r() -> FusionData:
    fd = _fibonacci()
    fd.R[("tau", "tau", "tau")] = \
        fd.R[("tau", "tau", "tau")] * np.exp(3e-2j)
    return FusionData(fd.simples, fd.unit, fd.dual, fd.N, fd.F, fd.evcoef,
                      fd.R, name="broken:fibonacci-R")


def _broken_ising_evcoef() -> FusionData:
    fd = _ising()
    ev = dict(fd.evcoef)
    ev["sigma"] *= 1.1
    return FusionData(fd.simples, fd.unit, fd.dual, fd.N, fd.F, ev,
                      fd.R, name="broken:ising-evcoef")


def _broken_vec_unitor() -> ModuleData:
    md = _vec_over_z2()
    return ModuleData(base=md.base, msimples=md.msimples, Ntilde=md.Ntilde,
                      MA=md.MA, unitor={"pt": 2.0},
                      name="broken:vec-over-z2-unitor")


def _broken_central_semion() -> CentralStructure:
    from .semicat import identity
    c = regular_central(_pointed(2, 1, 1, name="semion"))
    e = dict(c.e)
    # identity crossing instead of the semion phase: hexagon broken
    e[("1", "1")] = identity(c.base.tensor_obj("1", "1"))
    return CentralStructure(host=c.host, base=c.base, obj_map=c.obj_map,
                            mu=c.mu, e=e, name="broken:central-semion")


_FUSION = {
    "trivial": _trivial,
    "z2": lambda: _pointed(2, 0, 0, name="z2"),
    "z2-cocycle": lambda: _pointed(2, 1, None, name="z2-cocycle"),
    "z3": lambda: _pointed(3, 0, 2, name="z3"),
    "semion": lambda: _pointed(2, 1, 1, name="semion"),
    "fibonacci": _fibonacci,
    "ising": _ising,
}

_MODULES = {
    "vec-over-z2": _vec_over_z2,
}

_BROKEN = {
    "broken:fibonacci-F": ("fusion", _broken_fibonacci_f),
    "broken:fibonacci-R": ("fusion", _broken_fibonacci_r),
    "broken:ising-evcoef": ("fusion", _broken_ising_evcoef),
    "broken:vec-over-z2-unitor": ("module", _broken_vec_unitor),
    "broken:central-semion": ("central", _broken_central_semion),
}

_CENTRAL_NAMES = ("trivial", "z3", "semion", "fibonacci", "ising")


def _fusion_by_name(name: str) -> FusionData:
    if name in _FUSION:
        return _FUSION[name]()
    if name.startswith("zn:"):
        parts = name[3:].split(",")
        try:
            n = int(parts[0])
            p = int(parts[1]) if len(parts) > 1 else 0
            q = int(parts[2]) if len(parts) > 2 else None
        except (ValueError, IndexError):
            raise UnknownNameError(
                f"cannot parse parametric pointed name {name!r}; "
                f"expected zn:N[,p[,q]]")
        if n < 1:
            raise UnknownNameError(f"zn order must be positive in {name!r}")
        return _pointed(n, p, q)
    raise UnknownNameError(
        f"unknown fusion category {name!r}; available: "
        + ", ".join(sorted(_FUSION)) + ", zn:N[,p[,q]]")


def builtin(name: str) -> CatalogEntry:
    """Look up a built-in entry; unknown names raise with the available list."""
    if name in _BROKEN:
        kind, fn = _BROKEN[name]
        return CatalogEntry(name, kind, fn(),
                            provenance="negative control; must fail its check")
    if name in _MODULES:
        return CatalogEntry(name, "module", _MODULES[name](),
                            provenance="module pentagon validated at load")
    if name.startswith("regular:"):
        base = _fusion_by_name(name[len("regular:"):])
        return CatalogEntry(name, "module", regular_module(base),
                            provenance="regular module: Ntilde = N, MA = F")
    if name.startswith("central:"):
        base = _fusion_by_name(name[len("central:"):])
        return CatalogEntry(name, "central", regular_central(base),
                            provenance="regular central structure: e from R")
    try:
        fd = _fusion_by_name(name)
    except UnknownNameError:
        raise UnknownNameError(
            f"unknown catalog name {name!r}; available: " + ", ".join(
                n for n, _ in list_builtins()))
    return CatalogEntry(name, "fusion", fd,
                        provenance="pentagon/hexagon validated at load")


def list_builtins():
    """Stable (name, kind) listing of the shipped entries."""
    out = [(n, "fusion") for n in _FUSION]
    out += [(f"regular:{n}", "module") for n in _FUSION]
    out += [(n, "module") for n in _MODULES]
    out += [(f"central:{n}", "central") for n in _CENTRAL_NAMES]
    out += [(n, kind) for n, (kind, _) in _BROKEN.items()]
    return out
