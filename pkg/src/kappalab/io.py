"""Structured-text (JSON, UTF-8) data files for all data kinds.

Formats carry a ``kind`` discriminator: ``fusion``, ``module``, ``central``
or ``functor``.  Multiplicity indices are 0-based; complex numbers are
``[re, im]`` pairs.  Loading fails with a diagnostic naming the first
violated invariant; exports are byte-stable across runs.
"""

from __future__ import annotations

import itertools
import json

import numpy as np

from .fusion import FusionData, FusionDataError
from .modulecat import ModuleData, ModuleDataError, SymbolModule, as_module
from .monoidal import CentralStructure, CentralDataError, CentralModule
from .roundtrip import DaggerModuleFunctorData
from .semicat import Mor, Obj, mor_from_blocks

__all__ = ["LoadError", "load_file", "load_data", "dump_data", "save_file",
           "fusion_to_dict", "module_to_dict", "central_to_dict",
           "functor_to_dict", "resolve_source"]


class LoadError(ValueError):
    """A data file could not be parsed or violates an invariant."""


def _cx(pair) -> complex:
    if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
        raise LoadError(f"expected [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def _pair(z: complex) -> list:
    return [float(np.real(z)), float(np.imag(z))]


# -- fusion ------------------------------------------------------------------

def fusion_from_dict(d: dict) -> FusionData:
    try:
        simples = tuple(d["simples"])
        unit = d["unit"]
        dual = dict(d["dual"])
        name = d.get("name", "")
    except KeyError as exc:
        raise LoadError(f"fusion data missing field {exc}")
    N = {}
    for row in d.get("N", []):
        a, b, c, n = row
        N[(a, b, c)] = int(n)

    def nmult(a, b, c):
        return N.get((a, b, c), 0)

    fmats = {}
    for row in d.get("F", []):
        if len(row) != 12:
            raise LoadError(f"F entry must have 12 fields, got {row!r}")
        a, b, c, dd, ee, ff, al, be, mu, nu, re, im = row
        key = (a, b, c, dd)
        rows = [(x, m, n) for x in simples
                for m in range(nmult(a, b, x)) for n in range(nmult(x, c, dd))]
        cols = [(x, m, n) for x in simples
                for m in range(nmult(b, c, x)) for n in range(nmult(a, x, dd))]
        if key not in fmats:
            fmats[key] = np.zeros((len(rows), len(cols)), dtype=complex)
        try:
            r = rows.index((ee, int(al), int(be)))
            cc = cols.index((ff, int(mu), int(nu)))
        except ValueError:
            raise LoadError(f"inadmissible F index {row!r}")
        fmats[key][r, cc] = complex(float(re), float(im))
    evcoef = {s: _cx(v) for s, v in d.get("evcoef", {}).items()}
    R = None
    if "R" in d and d["R"] is not None:
        R = {}
        for row in d["R"]:
            if len(row) != 7:
                raise LoadError(f"R entry must have 7 fields, got {row!r}")
            a, b, c, mu, nu, re, im = row
            key = (a, b, c)
            if key not in R:
                R[key] = np.zeros((nmult(b, a, c), nmult(a, b, c)),
                                  dtype=complex)
            try:
                R[key][int(nu), int(mu)] = complex(float(re), float(im))
            except IndexError:
                raise LoadError(f"inadmissible R index {row!r}")
    try:
        return FusionData(simples=simples, unit=unit, dual=dual, N=N,
                          F=fmats, evcoef=evcoef, R=R, name=name)
    except FusionDataError as exc:
        raise LoadError(f"invalid fusion data: {exc}")


def fusion_to_dict(fd: FusionData) -> dict:
    n_rows = [[a, b, c, int(k)] for (a, b, c), k in sorted(fd.N.items()) if k]
    f_rows = []
    for key in sorted(fd.F):
        a, b, c, dd = key
        rows = fd._f_rows(a, b, c, dd)
        cols = fd._f_cols(a, b, c, dd)
        mat = np.asarray(fd.F[key])
        for (ee, al, be), (ff, mu, nu) in itertools.product(rows, cols):
            v = mat[rows.index((ee, al, be)), cols.index((ff, mu, nu))]
            if v != 0:
                f_rows.append([a, b, c, dd, ee, ff, al, be, mu, nu,
                               float(np.real(v)), float(np.imag(v))])
    out = {
        "kind": "fusion",
        "name": fd.name,
        "simples": list(fd.simples),
        "unit": fd.unit,
        "dual": {s: fd.dual[s] for s in fd.simples},
        "N": n_rows,
        "F": f_rows,
        "evcoef": {s: _pair(fd.evcoef[s]) for s in fd.simples},
    }
    if fd.R is not None:
        r_rows = []
        for key in sorted(fd.R):
            a, b, c = key
            mat = np.asarray(fd.R[key])
            for nu in range(mat.shape[0]):
                for mu in range(mat.shape[1]):
                    if mat[nu, mu] != 0:
                        r_rows.append([a, b, c, mu, nu,
                                       float(np.real(mat[nu, mu])),
                                       float(np.imag(mat[nu, mu]))])
        out["R"] = r_rows
    return out


# -- module ------------------------------------------------------------------

def _resolve_base(spec, loader):
    if isinstance(spec, str):
        return loader(spec)
    if isinstance(spec, dict):
        return fusion_from_dict(spec)
    raise LoadError(f"base must be a name or inline fusion data, got {spec!r}")


def module_from_dict(d: dict, base_loader) -> ModuleData:
    try:
        base = _resolve_base(d["base"], base_loader)
        msimples = tuple(d["msimples"])
    except KeyError as exc:
        raise LoadError(f"module data missing field {exc}")
    nt = {}
    for row in d.get("Ntilde", []):
        m, u, n, k = row
        nt[(m, u, n)] = int(k)

    def ntf(m, u, n):
        return nt.get((m, u, n), 0)

    mats = {}
    for row in d.get("MA", []):
        if len(row) != 12:
            raise LoadError(f"MA entry must have 12 fields, got {row!r}")
        m, u, v, n, kk, w, al, be, mu, nu, re, im = row
        key = (m, u, v, n)
        rows = [(x, i, j) for x in msimples
                for i in range(ntf(m, u, x)) for j in range(ntf(x, v, n))]
        cols = [(x, i, j) for x in base.simples
                for i in range(base.n(u, v, x)) for j in range(ntf(m, x, n))]
        if key not in mats:
            mats[key] = np.zeros((len(rows), len(cols)), dtype=complex)
        try:
            r = rows.index((kk, int(al), int(be)))
            cc = cols.index((w, int(mu), int(nu)))
        except ValueError:
            raise LoadError(f"inadmissible MA index {row!r}")
        mats[key][r, cc] = complex(float(re), float(im))
    unitor = {m: _cx(v) for m, v in d.get("unitor", {}).items()}
    data = ModuleData(base=base, msimples=msimples, Ntilde=nt, MA=mats,
                      unitor=unitor, name=d.get("name", ""))
    try:
        SymbolModule(data)  # structural validation
    except ModuleDataError as exc:
        raise LoadError(f"invalid module data: {exc}")
    return data


def module_to_dict(md: ModuleData, inline_base: bool = True) -> dict:
    mod = SymbolModule(md)
    base = md.base
    nt_rows = [[m, u, n, int(k)] for (m, u, n), k in sorted(md.Ntilde.items())
               if k]
    ma_rows = []
    for key in sorted(md.MA):
        m, u, v, n = key
        rows = mod.ma_rows(m, u, v, n)
        cols = mod.ma_cols(m, u, v, n)
        mat = np.asarray(md.MA[key])
        for rp, (kk, al, be) in enumerate(rows):
            for cp, (w, mu, nu) in enumerate(cols):
                if mat[rp, cp] != 0:
                    ma_rows.append([m, u, v, n, kk, w, al, be, mu, nu,
                                    float(np.real(mat[rp, cp])),
                                    float(np.imag(mat[rp, cp]))])
    return {
        "kind": "module",
        "name": md.name,
        "base": fusion_to_dict(base) if inline_base else base.name,
        "msimples": list(md.msimples),
        "Ntilde": nt_rows,
        "MA": ma_rows,
        "unitor": {m: _pair(md.unitor[m]) for m in md.msimples},
    }


# -- central -----------------------------------------------------------------

def central_from_dict(d: dict, base_loader) -> CentralStructure:
    try:
        base = _resolve_base(d["base"], base_loader)
        host = _resolve_base(d["host"], base_loader)
        obj_map_raw = d["obj_map"]
    except KeyError as exc:
        raise LoadError(f"central data missing field {exc}")
    obj_map = {u: Obj.from_dict({n: int(k) for n, k in spec.items()})
               for u, spec in obj_map_raw.items()}

    def read_blocks(rows, src_of, dst_of):
        mors = {}
        ents = {}
        for row in rows:
            if len(row) != 7:
                raise LoadError(f"block entry must have 7 fields, got {row!r}")
            a, v, n, r, c, re, im = row
            ents.setdefault((a, v), {}).setdefault(n, []).append(
                (int(r), int(c), complex(float(re), float(im))))
        for key, per_label in ents.items():
            src, dst = src_of(*key), dst_of(*key)
            blocks = {}
            for n, triples in per_label.items():
                b = np.zeros((dst(n), src(n)), dtype=complex)
                for r, c, v in triples:
                    try:
                        b[r, c] = v
                    except IndexError:
                        raise LoadError(
                            f"block index out of range at {key}, label {n}")
                blocks[n] = b
            mors[key] = mor_from_blocks(src, dst, blocks)
        return mors

    mu = read_blocks(
        d.get("mu", []),
        lambda u, v: host.tensor_obj(obj_map[u], obj_map[v]),
        lambda u, v: _f_obj_of(host, base, obj_map, base.tensor_obj(
            Obj.of(u), Obj.of(v))))
    e = read_blocks(
        d.get("e", []),
        lambda a, v: host.tensor_obj(Obj.of(a), obj_map[v]),
        lambda a, v: host.tensor_obj(obj_map[v], Obj.of(a)))
    cs = CentralStructure(host=host, base=base, obj_map=obj_map, mu=mu, e=e,
                          name=d.get("name", ""))
    try:
        CentralModule(cs)  # structural validation
    except CentralDataError as exc:
        raise LoadError(f"invalid central data: {exc}")
    return cs


def _f_obj_of(host, base, obj_map, u: Obj) -> Obj:
    d = {}
    for s in base.simples:
        for _ in range(u(s)):
            for t, k in obj_map[s].mult:
                d[t] = d.get(t, 0) + k
    return Obj.from_dict(d)


def central_to_dict(cs: CentralStructure, inline_base: bool = True) -> dict:
    def write_blocks(mors):
        rows = []
        for key in sorted(mors):
            m = mors[key]
            for label, b in m.blocks:
                for r in range(b.shape[0]):
                    for c in range(b.shape[1]):
                        if b[r, c] != 0:
                            rows.append([key[0], key[1], label, r, c,
                                         float(np.real(b[r, c])),
                                         float(np.imag(b[r, c]))])
        return rows

    return {
        "kind": "central",
        "name": cs.name,
        "base": fusion_to_dict(cs.base) if inline_base else cs.base.name,
        "host": fusion_to_dict(cs.host) if inline_base else cs.host.name,
        "obj_map": {u: dict(o.mult) for u, o in sorted(cs.obj_map.items())},
        "mu": write_blocks(cs.mu),
        "e": write_blocks(cs.e),
    }


# -- functor -----------------------------------------------------------------

def functor_from_dict(d: dict, base_loader):
    """Returns (DaggerModuleFunctorData, source ModuleData, target ModuleData)."""
    def resolve_module(spec):
        if isinstance(spec, str):
            payload = base_loader(spec)
            if not isinstance(payload, ModuleData):
                raise LoadError(f"{spec!r} is not a module source")
            return payload
        return module_from_dict(spec, base_loader)

    try:
        src = resolve_module(d["source"])
        tgt = resolve_module(d["target"])
        obj_map = dict(d["obj_map"])
    except KeyError as exc:
        raise LoadError(f"functor data missing field {exc}")
    src_mod, tgt_mod = SymbolModule(src), SymbolModule(tgt)
    ents = {}
    for row in d.get("modulator", []):
        if len(row) != 7:
            raise LoadError(f"modulator entry must have 7 fields, got {row!r}")
        m, u, n, r, c, re, im = row
        ents.setdefault((m, u), {}).setdefault(n, []).append(
            (int(r), int(c), complex(float(re), float(im))))
    modulator = {}
    for (m, u), per_label in ents.items():
        fm = obj_map[m]
        srco = tgt_mod.act_obj(Obj.of(fm), Obj.of(u))
        mu_src = src_mod.act_obj(Obj.of(m), Obj.of(u))
        dsto = Obj.from_dict(
            _image_mult_of(obj_map, src_mod.msimples, mu_src))
        blocks = {}
        for n, triples in per_label.items():
            b = np.zeros((dsto(n), srco(n)), dtype=complex)
            for r, c, v in triples:
                try:
                    b[r, c] = v
                except IndexError:
                    raise LoadError(
                        f"modulator index out of range at ({m},{u}), label {n}")
            blocks[n] = b
        modulator[(m, u)] = mor_from_blocks(srco, dsto, blocks)
    data = DaggerModuleFunctorData(obj_map=obj_map, modulator=modulator,
                                   name=d.get("name", ""))
    return data, src, tgt


def _image_mult_of(obj_map, msimples, x: Obj) -> dict:
    d = {}
    for k in msimples:
        if x(k):
            fk = obj_map[k]
            d[fk] = d.get(fk, 0) + x(k)
    return d


def functor_to_dict(data: DaggerModuleFunctorData, source: ModuleData,
                    target: ModuleData) -> dict:
    rows = []
    for key in sorted(data.modulator):
        m, u = key
        mor = data.modulator[key]
        for label, b in mor.blocks:
            for r in range(b.shape[0]):
                for c in range(b.shape[1]):
                    if b[r, c] != 0:
                        rows.append([m, u, label, r, c,
                                     float(np.real(b[r, c])),
                                     float(np.imag(b[r, c]))])
    return {
        "kind": "functor",
        "name": data.name,
        "source": module_to_dict(source),
        "target": module_to_dict(target),
        "obj_map": dict(sorted(data.obj_map.items())),
        "modulator": rows,
    }


# -- entry points --------------------------------------------------------------

def load_data(d: dict, base_loader=None):
    """Dispatch a parsed document on its ``kind``."""
    if base_loader is None:
        from .catalog import builtin
        base_loader = lambda name: builtin(name).payload
    kind = d.get("kind")
    if kind == "fusion":
        return fusion_from_dict(d)
    if kind == "module":
        return module_from_dict(d, base_loader)
    if kind == "central":
        return central_from_dict(d, base_loader)
    if kind == "functor":
        return functor_from_dict(d, base_loader)
    raise LoadError(f"unknown or missing data kind {kind!r}")


def dump_data(payload) -> dict:
    if isinstance(payload, FusionData):
        return fusion_to_dict(payload)
    if isinstance(payload, ModuleData):
        return module_to_dict(payload)
    if isinstance(payload, CentralStructure):
        return central_to_dict(payload)
    raise TypeError(f"cannot serialize {type(payload).__name__}")


def save_file(path: str, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dump_data(payload), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise LoadError(f"{path} is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise LoadError(f"{path}: top level must be an object")
    return load_data(doc)


def resolve_source(src: str, expect_kind: str):
    """Resolve ``builtin:<name>`` or a file path to a payload of a kind."""
    from .catalog import builtin, UnknownNameError
    if src.startswith("builtin:"):
        try:
            entry = builtin(src[len("builtin:"):])
        except UnknownNameError as exc:
            raise LoadError(str(exc))
        payload, kind = entry.payload, entry.kind
    else:
        payload = load_file(src)
        kind = {FusionData: "fusion", ModuleData: "module",
                CentralStructure: "central"}.get(type(payload), "functor")
    if kind != expect_kind:
        raise LoadError(
            f"{src!r} holds {kind} data, but this command needs {expect_kind}")
    return payload
