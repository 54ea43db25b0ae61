"""Dagger right module categories over a fusion category.

A module is specified by action multiplicities Ntilde, module-associator
symbols MA (same index shape as F, with module labels in the outer slots)
and a unitor coefficient per module simple.  The module associator is
stored in the orientation ``m < u < v -> m < (u v)``; the oplax orientation
is its dagger.  ``verify_module`` runs pentagon/triangle/unitarity/dagger
checks as residuals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fusion import FusionData
from .report import Suite, Report
from .semicat import (
    DEFAULT_TOL, Mor, Obj, Tol, compose, dagger, identity, is_unitary,
    mor_from_blocks, residual,
)
from .util import rng_for

__all__ = ["ModuleData", "ModuleDataError", "RightModule", "SymbolModule",
           "regular_module", "verify_module", "random_module_mor",
           "random_base_mor"]


class ModuleDataError(ValueError):
    """Structural invariant of the module data is violated."""


def _as_obj(x) -> Obj:
    return Obj.of(x) if isinstance(x, str) else x


@dataclass
class ModuleData:
    """Symbol-level data of a dagger right module category."""

    base: FusionData
    msimples: tuple
    Ntilde: dict   # (m, u, n) -> non-negative int
    MA: dict       # (m, u, v, n) -> matrix, rows (k,mu,nu), cols (w,lam,kap)
    unitor: dict   # m -> complex coefficient of rho_m: m < 1 -> m
    name: str = ""


class RightModule:
    """Materialized right action of a fusion category on a module category.

    Subclasses provide ``nt`` (action multiplicities) and ``ma_matrix``
    (module-associator symbols); everything else — channel bases, the
    action on objects/morphisms, associator/unitor assembly — is shared.
    """

    base: FusionData
    msimples: tuple
    name: str = ""

    def __init__(self):
        self._chan = {}
        self._chanidx = {}
        self._assoc = {}

    def nt(self, m: str, u: str, n: str) -> int:
        raise NotImplementedError

    def ma_matrix(self, m: str, u: str, v: str, n: str) -> np.ndarray:
        raise NotImplementedError

    def unitor_coeff(self, m: str) -> complex:
        raise NotImplementedError

    def ma_rows(self, m, u, v, n):
        return [(k, mu, nu) for k in self.msimples
                for mu in range(self.nt(m, u, k))
                for nu in range(self.nt(k, v, n))]

    def ma_cols(self, m, u, v, n):
        return [(w, lam, kap) for w in self.base.simples
                for lam in range(self.base.n(u, v, w))
                for kap in range(self.nt(m, w, n))]

    # -- channel bases -----------------------------------------------------

    def channels(self, x: Obj, u: Obj, n: str):
        key = (x.mult, u.mult, n)
        if key not in self._chan:
            ch = [((r, i), (s, j), mu)
                  for r in self.msimples for i in range(x(r))
                  for s in self.base.simples for j in range(u(s))
                  for mu in range(self.nt(r, s, n))]
            self._chan[key] = ch
            self._chanidx[key] = {c: k for k, c in enumerate(ch)}
        return self._chan[key]

    def channel_index(self, x: Obj, u: Obj, n: str):
        self.channels(x, u, n)
        return self._chanidx[(x.mult, u.mult, n)]

    # -- the action --------------------------------------------------------

    def act_obj(self, x, u) -> Obj:
        x, u = _as_obj(x), _as_obj(u)
        return Obj.from_dict(
            {n: len(self.channels(x, u, n)) for n in self.msimples})

    def act_mor(self, f: Mor, g: Mor) -> Mor:
        """f < g for a module morphism f and a base morphism g."""
        src = self.act_obj(f.src, g.src)
        dst = self.act_obj(f.dst, g.dst)
        blocks = {}
        for n in self.msimples:
            sch = self.channels(f.src, g.src, n)
            dch = self.channels(f.dst, g.dst, n)
            if not sch or not dch:
                continue
            didx = self.channel_index(f.dst, g.dst, n)
            m = np.zeros((len(dch), len(sch)), dtype=complex)
            for col, ((r, i), (s, j), mu) in enumerate(sch):
                fb, gb = f.block(r), g.block(s)
                for ii in range(f.dst(r)):
                    if fb[ii, i] == 0:
                        continue
                    for jj in range(g.dst(s)):
                        v = fb[ii, i] * gb[jj, j]
                        if v != 0:
                            m[didx[((r, ii), (s, jj), mu)], col] = v
            if m.any():
                blocks[n] = m
        return mor_from_blocks(src, dst, blocks)

    def module_associator(self, x, u, v) -> Mor:
        """alpha^M_{x,u,v}: (x < u) < v -> x < (u v)."""
        x, u, v = _as_obj(x), _as_obj(u), _as_obj(v)
        key = (x.mult, u.mult, v.mult)
        if key in self._assoc:
            return self._assoc[key]
        xu = self.act_obj(x, u)
        uv = self.base.tensor_obj(u, v)
        src = self.act_obj(xu, v)
        dst = self.act_obj(x, uv)
        blocks = {}
        for n in self.msimples:
            sch = self.channels(xu, v, n)
            if not sch:
                continue
            dch = self.channels(x, uv, n)
            didx = self.channel_index(x, uv, n)
            m = np.zeros((len(dch), len(sch)), dtype=complex)
            for col, ((k, p), (t, j), nu) in enumerate(sch):
                (r, i), (s, j2), mu = self.channels(x, u, k)[p]
                mat = self.ma_matrix(r, s, t, n)
                rows = self.ma_rows(r, s, t, n)
                cols = self.ma_cols(r, s, t, n)
                rr = rows.index((k, mu, nu))
                for cpos, (w, lam, kap) in enumerate(cols):
                    val = mat[rr, cpos]
                    if val == 0:
                        continue
                    q = self.base.channel_index(u, v, w)[((s, j2), (t, j), lam)]
                    m[didx[((r, i), (w, q), kap)], col] = val
            if m.any():
                blocks[n] = m
        out = mor_from_blocks(src, dst, blocks)
        self._assoc[key] = out
        return out

    def module_unitor(self, x) -> Mor:
        """rho_x: x < 1 -> x (blockwise unitor coefficients)."""
        x = _as_obj(x)
        src = self.act_obj(x, self.base.unit_obj())
        return mor_from_blocks(
            src, x, {n: self.unitor_coeff(n) * np.eye(x(n))
                     for n, _ in x.mult})


class SymbolModule(RightModule):
    """Right module driven by :class:`ModuleData` symbols."""

    def __init__(self, data: ModuleData):
        super().__init__()
        self.data = data
        self.base = data.base
        self.msimples = tuple(data.msimples)
        self.name = data.name
        self._ma_cache = {}
        self._validate()

    def nt(self, m, u, n):
        return self.data.Ntilde.get((m, u, n), 0)

    def unitor_coeff(self, m):
        return complex(self.data.unitor[m])

    def ma_matrix(self, m, u, v, n):
        key = (m, u, v, n)
        if key in self._ma_cache:
            return self._ma_cache[key]
        unit = self.base.unit
        got = self.data.MA.get(key)
        if got is not None:
            mat = np.asarray(got, dtype=complex)
        elif u == unit:
            mat = self.unitor_coeff(m) * np.eye(self.nt(m, v, n))
        elif v == unit:
            mat = self.unitor_coeff(n) * np.eye(self.nt(m, u, n))
        else:
            raise ModuleDataError(f"missing MA entry at {key}")
        want = (len(self.ma_rows(m, u, v, n)), len(self.ma_cols(m, u, v, n)))
        if mat.shape != want:
            raise ModuleDataError(
                f"MA matrix at {key} has shape {mat.shape}, expected {want}")
        self._ma_cache[key] = mat
        return mat

    def _validate(self):
        base, unit = self.base, self.base.unit
        for (m, u, n), k in self.data.Ntilde.items():
            if k < 0:
                raise ModuleDataError(f"negative Ntilde at ({m},{u},{n})")
            if m not in self.msimples or n not in self.msimples \
                    or u not in base.simples:
                raise ModuleDataError(f"unknown label in Ntilde key ({m},{u},{n})")
        for m, n in itertools.product(self.msimples, repeat=2):
            want = 1 if m == n else 0
            if self.nt(m, unit, n) != want:
                raise ModuleDataError(
                    f"Ntilde_({m},unit)^{n} must be {want}")
        for m in self.msimples:
            if m not in self.data.unitor or self.data.unitor[m] == 0:
                raise ModuleDataError(f"unitor missing or zero for {m!r}")
        for m, n in itertools.product(self.msimples, repeat=2):
            for u, v in itertools.product(base.simples, repeat=2):
                lhs = sum(self.nt(m, u, k) * self.nt(k, v, n)
                          for k in self.msimples)
                rhs = sum(base.n(u, v, w) * self.nt(m, w, n)
                          for w in base.simples)
                if lhs != rhs:
                    raise ModuleDataError(
                        f"module multiplicity associativity fails at "
                        f"({m},{u},{v},{n})")
                if lhs and u != unit and v != unit \
                        and (m, u, v, n) not in self.data.MA:
                    raise ModuleDataError(f"missing MA entry at ({m},{u},{v},{n})")


def regular_module(base: FusionData) -> ModuleData:
    """The fusion category acting on itself: Ntilde = N, MA = F, unitor = 1."""
    return ModuleData(
        base=base, msimples=base.simples,
        Ntilde=dict(base.N),
        MA={k: np.asarray(v) for k, v in base.F.items()},
        unitor={s: 1.0 for s in base.simples},
        name=f"regular:{base.name}")


def as_module(m) -> RightModule:
    return SymbolModule(m) if isinstance(m, ModuleData) else m


def random_module_mor(mod: RightModule, rng, x: Obj, y: Obj) -> Mor:
    return mor_from_blocks(x, y, {
        n: rng.normal(size=(y(n), x(n))) + 1j * rng.normal(size=(y(n), x(n)))
        for n in set(x.support) & set(y.support)})


def random_base_mor(fd: FusionData, rng, u: Obj, v: Obj) -> Mor:
    return mor_from_blocks(u, v, {
        s: rng.normal(size=(v(s), u(s))) + 1j * rng.normal(size=(v(s), u(s)))
        for s in set(u.support) & set(v.support)})


def verify_module(m, tol: Tol = DEFAULT_TOL, seed: int = 11) -> Report:
    """Pentagon, triangle, associator/unitor unitarity, dagger functoriality."""
    mod = as_module(m)
    base = mod.base
    suite = Suite(f"module:{mod.name}", tol)
    rng = rng_for(seed)
    msp = [Obj.of(s) for s in mod.msimples]
    bsp = [Obj.of(s) for s in base.simples]

    for x in msp:
        for u, v, w in itertools.product(bsp, repeat=3):
            lhs = compose(
                compose(mod.act_mor(mod.module_associator(x, u, v), identity(w)),
                        mod.module_associator(x, base.tensor_obj(u, v), w)),
                mod.act_mor(identity(x), base.associator(u, v, w)))
            rhs = compose(mod.module_associator(mod.act_obj(x, u), v, w),
                          mod.module_associator(x, u, base.tensor_obj(v, w)))
            suite.observe_mors("module-pentagon", lhs, rhs,
                               f"({x.support[0]},{u.support[0]},"
                               f"{v.support[0]},{w.support[0]})")

    for x in msp:
        for v in bsp:
            lhs = mod.module_associator(x, base.unit_obj(), v)
            rhs = mod.act_mor(mod.module_unitor(x), identity(v))
            suite.observe_mors("module-triangle", lhs, rhs,
                               f"({x.support[0]},unit,{v.support[0]})")
            lhs2 = mod.module_associator(x, v, base.unit_obj())
            rhs2 = mod.module_unitor(mod.act_obj(x, v))
            suite.observe_mors("module-triangle", lhs2, rhs2,
                               f"({x.support[0]},{v.support[0]},unit)")

    for x in msp:
        for u, v in itertools.product(bsp, repeat=2):
            suite.observe("module-assoc-unitary",
                          is_unitary(mod.module_associator(x, u, v), tol).residual,
                          f"({x.support[0]},{u.support[0]},{v.support[0]})")
        suite.observe("module-unitor-unitary",
                      is_unitary(mod.module_unitor(x), tol).residual,
                      f"({x.support[0]},)")

    for _ in range(4):
        x = msp[rng.integers(len(msp))]
        y = msp[rng.integers(len(msp))]
        u = bsp[rng.integers(len(bsp))]
        v = bsp[rng.integers(len(bsp))]
        f = random_module_mor(mod, rng, x, y)
        g = random_base_mor(base, rng, u, v)
        suite.observe_mors("action-dagger-functor",
                           mod.act_mor(dagger(f), dagger(g)),
                           dagger(mod.act_mor(f, g)), "(random)")
        # exchange relation: (f<id) (id<g) = (id<g) (f<id)
        suite.observe_mors(
            "action-exchange",
            compose(mod.act_mor(f, identity(u)), mod.act_mor(identity(y), g)),
            compose(mod.act_mor(identity(x), g), mod.act_mor(f, identity(v))),
            "(random)")
        # naturality of the associator
        w = bsp[rng.integers(len(bsp))]
        h = random_base_mor(base, rng, v, w)
        lhs = compose(mod.module_associator(x, u, v),
                      mod.act_mor(f, base.tensor_mor(g, h)))
        rhs = compose(mod.act_mor(mod.act_mor(f, g), h),
                      mod.module_associator(y, v, w))
        suite.observe_mors("module-assoc-natural", lhs, rhs, "(random)")

    return suite.finish()
