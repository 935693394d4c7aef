"""Deciding the property matrix and the cross-checked equivalence suites.

Three public entry points.  evaluate() decides one named property of a pair
(monoid, system) and says how it decided: structural argument, exhaustive
computation over a finite universe, bounded search, or an honest
``unknown-beyond-radius``.  tfae_suite() evaluates one of the fixed condition
lists that must agree verdict for verdict on every certified model; the
agreement flag is the point, a disagreement signals a bug in the closure
engine rather than in the input.  classify() bundles the full matrix, the
suites and a spectrum summary into one JSON-ready dict.

False verdicts carry validated witnesses.  Every structural shortcut is
cross-checked against box enumerations whenever the closed-ideal lattice is
affordable, and a contradiction raises AssertionError instead of letting one
of the two answers win silently.
"""

from __future__ import annotations

import itertools
import weakref
from dataclasses import dataclass

from . import _kernel as K
from .factor import (
    _POWER_CAP,
    _cell_gens,
    Failure,
    class_group_probe,
    is_invertible,
    meager_check,
    meager_factor,
    radical_closed_ideals,
    radical_factor_principal,
    sp_factor,
)
from .ideals import (
    Ideal,
    ideal_eq,
    ideal_from,
    ideal_intersect,
    ideal_subset,
    ideal_sum,
    principal,
    radical,
    unit_ideal,
)
from .monoid import MonoidModel
from .spectrum import (
    PrimeIdeal,
    UncertifiedModel,
    height_one,
    is_dvm,
    primes,
    r_max,
    spectrum_json,
)
from .systems import (
    System,
    close,
    closed_ideals,
    modular_law_violation,
    system,
)
from .systems import power_close

TRUE = "true"
FALSE = "false"
UNKNOWN = "unknown-beyond-radius"

__all__ = [
    "Condition",
    "PropertyVerdict",
    "TfaeReport",
    "classify",
    "evaluate",
    "property_names",
    "suite_names",
    "tfae_suite",
    "MATRIX_PROPS",
    "GLOBAL_PROPS",
]


# --------------------------------------------------------------------------
# verdict records


@dataclass(frozen=True)
class _V:
    verdict: str
    witness: object = None
    note: str = ""
    vacuous: bool = False


def _t(note: str = "", vacuous: bool = False) -> _V:
    return _V(TRUE, None, note, vacuous)


def _f(witness, note: str = "") -> _V:
    return _V(FALSE, witness, note)


def _u(note: str = "") -> _V:
    return _V(UNKNOWN, None, note)


def _witness_json(w):
    if w is None:
        return None
    if isinstance(w, Ideal):
        return w.to_json()
    if isinstance(w, PrimeIdeal):
        out = w.ideal.to_json()
        out["face"] = sorted(w.face)
        return out
    if isinstance(w, dict):
        return {k: _witness_json(v) for k, v in sorted(w.items())}
    if isinstance(w, (list, tuple)):
        if all(isinstance(a, int) for a in w):
            return list(w)
        return [_witness_json(a) for a in w]
    return w


@dataclass(frozen=True)
class PropertyVerdict:
    """One decided property, with provenance of the decision in ``note``."""

    monoid: str
    system: str
    prop: str
    verdict: str
    radius: int
    witness: object = None
    note: str = ""
    vacuous: bool = False

    @property
    def holds(self) -> bool:
        return self.verdict == TRUE

    def to_json(self) -> dict:
        return {
            "monoid": self.monoid,
            "system": self.system,
            "property": self.prop,
            "verdict": self.verdict,
            "radius": self.radius,
            "witness": _witness_json(self.witness),
            "note": self.note,
            "vacuous": self.vacuous,
        }


def _vjson(v: _V) -> dict:
    out = {"verdict": v.verdict, "witness": _witness_json(v.witness),
           "note": v.note}
    if v.vacuous:
        out["vacuous"] = True
    return out


# --------------------------------------------------------------------------
# evaluation context


def _eff_kind(sys: System) -> str:
    """Collapse a system token to its effective closure kind.

    Valid as a shortcut on regular models only: there w coincides with t and
    any modularization of p by the s-system stays at p.
    """
    if sys.kind == "s":
        return "s"
    if sys.kind in ("t", "v"):
        return "t"
    p, r = sys.parts
    return _eff_kind(p) if _eff_kind(r) == "s" else "t"


def _structurally_modular(sys: System) -> bool:
    # unions of s-ideals are s-ideals; modularizing a modular system keeps it
    if sys.kind == "s":
        return True
    return sys.kind == "mod" and _structurally_modular(sys.parts[0])


class PropertyContext:
    """Caches shared by every property decided for one (H, r, radius)."""

    def __init__(self, H: MonoidModel, sys: System, radius: int):
        self.monoid = H
        self.sys = sys
        self.radius = radius
        self._vals: dict = {}
        self._misc: dict = {}

    # -- dispatch ----------------------------------------------------------

    def prop(self, name: str) -> _V:
        name = _canon(name)
        if name not in self._vals:
            self._vals[name] = _REGISTRY[name](self)
        return self._vals[name]

    # -- shape -------------------------------------------------------------

    @property
    def singular(self) -> tuple:
        H = self.monoid
        return tuple(i for i in H.counting if H.coords[i].atoms != (1,))

    @property
    def regular(self) -> bool:
        return not self.singular

    @property
    def eff(self) -> str:
        return _eff_kind(self.sys)

    def zero(self) -> tuple:
        return (0,) * self.monoid.dim

    def proper(self, I: Ideal) -> bool:
        return not I.contains_vec(self.zero())

    # -- cached views ------------------------------------------------------

    def box(self, radius=None):
        r = self.radius if radius is None else radius
        key = ("box", r)
        if key not in self._misc:
            self._misc[key] = list(self.monoid.enumerate(r))
        return self._misc[key]

    def lattice_at(self, radius: int):
        key = ("lat", radius)
        if key not in self._misc:
            try:
                self._misc[key] = closed_ideals(self.sys, radius,
                                                cap=5000, max_ground=360)
            except K.BudgetExceeded:
                self._misc[key] = None
        return self._misc[key]

    def lattice(self):
        # the s-lattice explodes combinatorially, keep its box small
        r = min(self.radius, 4) if self.eff == "s" else self.radius
        return self.lattice_at(r)

    def invertibles(self):
        if "inv" not in self._misc:
            lat = self.lattice()
            if lat is None:
                self._misc["inv"] = None
            else:
                self._misc["inv"] = tuple(
                    I for I in lat
                    if self.proper(I) and is_invertible(I, self.sys))
        return self._misc["inv"]

    def radical_universe(self) -> tuple:
        if "radu" not in self._misc:
            self._misc["radu"] = radical_closed_ideals(self.sys)
        return self._misc["radu"]

    def invertible_radicals(self) -> tuple:
        if "invrad" not in self._misc:
            self._misc["invrad"] = tuple(
                J for J in self.radical_universe()
                if is_invertible(J, self.sys))
        return self._misc["invrad"]

    def cells(self):
        """Support cells with nonempty counting support, sorted by gens.

        Each cell must be closed under the system at hand; that is a theorem
        for every system between s and v on these models, so it is asserted.
        """
        if "cells" not in self._misc:
            H = self.monoid
            out = []
            cnt = sorted(H.counting)
            for m in range(1, len(cnt) + 1):
                for S in itertools.combinations(cnt, m):
                    C = ideal_from(_cell_gens(H, S), H)
                    assert ideal_eq(close(self.sys, C), C), (S, self.sys.label)
                    out.append((frozenset(S), C))
            out.sort(key=lambda sc: sc[1].gens)
            self._misc["cells"] = tuple(out)
        return self._misc["cells"]

    def closed_primes(self):
        if "cp" not in self._misc:
            spec = primes(self.monoid)
            out = [P for P in spec.primes
                   if ideal_eq(close(self.sys, P.ideal), P.ideal)]
            out.sort(key=lambda P: (len(P.face), sorted(P.face)))
            self._misc["cp"] = tuple(out)
        return self._misc["cp"]

    def rmax(self):
        if "rmax" not in self._misc:
            out = list(r_max(self.monoid, self.sys))
            out.sort(key=lambda P: (len(P.face), sorted(P.face)))
            self._misc["rmax"] = tuple(out)
        return self._misc["rmax"]

    def x1(self):
        if "x1" not in self._misc:
            out = list(height_one(self.monoid))
            out.sort(key=lambda P: (len(P.face), sorted(P.face)))
            self._misc["x1"] = tuple(out)
        return self._misc["x1"]

    def localization(self, face) -> MonoidModel:
        key = ("loc", frozenset(face))
        if key not in self._misc:
            self._misc[key] = self.monoid.localize(face)
        return self._misc[key]

    def localization_dvm(self, face) -> str:
        """is_dvm verdict for the localization, shared across systems.

        The discreteness sweep is quadratic in the box, so the verdict is
        memoized per face on the parent model.
        """
        memo = _DVM_MEMO.setdefault(self.monoid, {})
        key = frozenset(face)
        if key not in memo:
            memo[key] = is_dvm(self.localization(face))
        return memo[key]


_DVM_MEMO: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


class _CtxMap(dict):
    """Lazy label -> PropertyContext map shared across suite conditions."""

    def __init__(self, H: MonoidModel, radius: int):
        super().__init__()
        self.H = H
        self.radius = radius

    def __missing__(self, label: str) -> PropertyContext:
        ctx = PropertyContext(self.H, system(label, self.H), self.radius)
        self[label] = ctx
        return ctx


# --------------------------------------------------------------------------
# small constructions


def _scaled_unit(H: MonoidModel, i: int, k: int) -> tuple:
    return tuple(k if j == i else 0 for j in range(H.dim))


def _least_singular_principal(ctx: PropertyContext) -> Ideal:
    i = ctx.singular[0]
    return principal(ctx.monoid, _scaled_unit(ctx.monoid, i,
                                              ctx.monoid.coords[i].n1))


def _cell_of(ctx: PropertyContext, S) -> Ideal:
    S = frozenset(S)
    for T, C in ctx.cells():
        if T == S:
            return C
    raise KeyError(sorted(S))


def _two_gen_max(ctx: PropertyContext) -> Ideal:
    # the height >= 2 prime over the first two counting coordinates
    i, j = sorted(ctx.monoid.counting)[:2]
    H = ctx.monoid
    return ideal_from([_scaled_unit(H, i, H.coords[i].n1),
                       _scaled_unit(H, j, H.coords[j].n1)], H)


def _is_power_of(sys: System, I: Ideal, R: Ideal, cap: int = _POWER_CAP):
    """The k with (R^k)_r = I, or None.  Powers only shrink, so the scan
    stops as soon as I escapes the current power."""
    cur = R
    for k in range(1, cap + 1):
        if ideal_eq(cur, I):
            return k
        if not ideal_subset(I, cur):
            return None
        cur = close(sys, ideal_sum(cur, R))
    return None


def _box_primary(ctx: PropertyContext, I: Ideal) -> bool:
    rad = radical(I)
    members = ctx.box(min(ctx.radius, 6))
    return K.primary_violation(ctx.monoid.pack, members, I.gens,
                               rad.gens) is None


def _radical_product_search(ctx: PropertyContext, I: Ideal, universe=None):
    """Exhaustive bounded search for a product of proper radical closed
    ideals equal to I; returns the factor list or None.

    The depth bound is complete: a factor below a height-one prime P raises
    the largest closed P-power containing the partial product, any factor
    below no height-one prime raises the total counting degree of every
    member, and both quantities are capped by I itself.
    """
    sys = ctx.sys
    H = ctx.monoid
    if universe is None:
        universe = ctx.radical_universe()
    # every factor contains the product
    universe = [R for R in universe if ideal_subset(I, R)]
    if not universe:
        return None
    bound = 0
    for P in ctx.x1():
        k = 0
        while k < _POWER_CAP and ideal_subset(
                I, power_close(sys, P.ideal, k + 1)):
            k += 1
        bound += k
    cnt = H.counting
    bound += min(sum(g[i] for i in cnt) for g in I.gens)
    unit = unit_ideal(H)
    hit: list = []

    def dfs(cur, start, depth):
        if hit:
            return
        if ideal_eq(cur, I):
            hit.append(list(path))
            return
        if depth == 0:
            return
        for idx in range(start, len(universe)):
            nxt = close(sys, ideal_sum(cur, universe[idx]))
            if not ideal_subset(I, nxt):
                continue
            path.append(universe[idx])
            dfs(nxt, idx, depth - 1)
            path.pop()

    path: list = []
    dfs(unit, 0, bound)
    return hit[0] if hit else None


def _meager_intersection_exists(ctx: PropertyContext, I: Ideal) -> bool:
    """Complete scan: some family of invertible radical closed ideals meets
    in radical(I) and passes the meager containment rows for I."""
    R = radical(I)
    U = ctx.invertible_radicals()
    for size in range(1, len(U) + 1):
        for omega in itertools.combinations(U, size):
            meet = omega[0]
            for J in omega[1:]:
                meet = ideal_intersect(meet, J)
            if not ideal_eq(meet, R):
                continue
            if meager_check(list(omega), I, ctx.sys).meager:
                return True
    return False


# --------------------------------------------------------------------------
# property registry

_REGISTRY: dict = {}


def _prop(name):
    def deco(fn):
        _REGISTRY[name] = fn
        return fn
    return deco


@_prop("local")
def _p_local(ctx):
    """A unique maximal closed prime."""
    faces = [sorted(P.face) for P in ctx.rmax()]
    if len(faces) == 1:
        return _t(note=f"unique maximal closed prime, face {faces[0]}")
    if not faces:
        return _f(None, note="a group has no maximal closed prime")
    return _f({"maximal_faces": faces},
              note=f"{len(faces)} maximal closed primes")


@_prop("treed")
def _p_treed(ctx):
    """Closed primes under any maximal closed prime form a chain."""
    cp = ctx.closed_primes()
    if not cp:
        return _t(note="no closed primes", vacuous=True)
    for P in ctx.rmax():
        below = [q for q in cp if ideal_subset(q.ideal, P.ideal)]
        for a, b in itertools.combinations(below, 2):
            if not (ideal_subset(a.ideal, b.ideal)
                    or ideal_subset(b.ideal, a.ideal)):
                return _f({"under_face": sorted(P.face), "left": a.ideal,
                           "right": b.ideal},
                          note="incomparable closed primes under one "
                               "maximal closed prime")
    return _t(note="closed primes below each maximal one are comparable")


@_prop("almost_dedekind")
def _p_almost_dedekind(ctx):
    """Every localization at a maximal closed prime is a discrete
    valuation monoid."""
    if not ctx.rmax():
        return _t(note="no maximal closed primes", vacuous=True)
    for P in ctx.rmax():
        if ctx.localization_dvm(P.face) != "true":
            return _f({"face": sorted(P.face),
                       "localization": ctx.localization(P.face).name},
                      note="localization at the marked maximal closed prime "
                           "is not a discrete valuation monoid")
    return _t(note="all localizations at maximal closed primes are discrete "
                   "valuation monoids")


@_prop("localizations_dvm")
def _p_localizations_dvm(ctx):
    """Same test as almost_dedekind but at every height-one prime."""
    if not ctx.x1():
        return _t(note="no height-one primes", vacuous=True)
    for P in ctx.x1():
        if ctx.localization_dvm(P.face) != "true":
            return _f({"face": sorted(P.face),
                       "localization": ctx.localization(P.face).name},
                      note="localization at the marked height-one prime is "
                           "not a discrete valuation monoid")
    return _t(note="all localizations at height-one primes are discrete "
                   "valuation monoids")


@_prop("sp")
def _p_sp(ctx):
    """Every nonempty proper closed ideal is a finite product of radical
    closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="no proper nonempty ideals on a group", vacuous=True)
    if ctx.singular:
        w = _least_singular_principal(ctx)
        out = sp_factor(w, ctx.sys)
        assert isinstance(out, Failure), out
        assert _radical_product_search(ctx, w) is None
        return _f(out.witness,
                  note=f"the principal ideal {list(w.gens[0])}+H has no "
                       "factorization into radical closed ideals; its "
                       "radical is not invertible")
    if ctx.eff == "t":
        lat = ctx.lattice()
        if lat is not None:
            for I in lat:
                if ctx.proper(I):
                    assert sp_factor(I, ctx.sys).ok, I
        return _t(note="closed ideals are principal and peel along supports")
    if len(H.counting) <= 1:
        return _t(note="closed ideals are powers of the height-one cell")
    i, j = sorted(H.counting)[:2]
    w = ideal_from([_scaled_unit(H, i, 3),
                    tuple((1 if a in (i, j) else 0) for a in range(H.dim))],
                   H)
    assert ideal_eq(close(ctx.sys, w), w)
    assert _radical_product_search(ctx, w) is None
    return _f(w, note="closed ideal with no factorization into radical "
                      "closed ideals; the complete bounded search is empty")


@_prop("prufer")
def _p_prufer(ctx):
    """Nonempty finitely generated closed ideals are invertible."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only nonempty ideal is H", vacuous=True)
    if ctx.singular:
        C = _cell_of(ctx, {ctx.singular[0]})
        assert not is_invertible(C, ctx.sys)
        return _f(C, note="closed finitely generated support cell that is "
                          "not invertible")
    if ctx.eff == "t" or len(H.counting) == 1:
        return _t(note="closed finitely generated ideals are principal")
    M = _two_gen_max(ctx)
    assert not is_invertible(M, ctx.sys)
    return _f(M, note="the two-generator height-two prime is not invertible")


@_prop("bezout")
def _p_bezout(ctx):
    """Nonempty finitely generated closed ideals are principal."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only nonempty ideal is H", vacuous=True)
    if ctx.singular:
        C = _cell_of(ctx, {ctx.singular[0]})
        assert not C.is_principal
        return _f(C, note="closed finitely generated support cell that is "
                          "not principal")
    if ctx.eff == "t" or len(H.counting) == 1:
        return _t(note="closed finitely generated ideals are principal")
    M = _two_gen_max(ctx)
    assert not M.is_principal
    return _f(M, note="the two-generator height-two prime is not principal")


@_prop("valuation")
def _p_valuation(ctx):
    """x or -x lies in H for every x of the quotient group."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="H is its own quotient group")
    cnt = sorted(H.counting)
    if len(cnt) >= 2:
        i, j = cnt[:2]
        x = tuple((1 if a == i else -1 if a == j else 0)
                  for a in range(H.dim))
        return _f(list(x), note="neither the element nor its negative lies "
                                "in H")
    i = cnt[0]
    c = H.coords[i]
    if c.atoms == (1,):
        return _t(note="comparability holds along the single counting "
                       "coordinate")
    gap = next(k for k in range(1, c.conductor + 1) if not c.member(k))
    return _f(list(_scaled_unit(H, i, gap)),
              note="positive gap element: neither it nor its negative "
                   "lies in H")


@_prop("dvm")
def _p_dvm(ctx):
    """Discrete valuation monoid: valuation with principal height-one
    maximal ideal."""
    verdict = is_dvm(ctx.monoid)
    if verdict == "true":
        return _t(note="maximal ideal is principal and filtration is "
                       "discrete")
    if verdict == "not-applicable":
        return _f(None, note="H is a group, there is no maximal ideal")
    return _f(None, note="maximal ideal fails principality or discreteness "
                         "within the box")


@_prop("factorial")
def _p_factorial(ctx):
    """Non-units factor into prime elements."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="there are no non-units", vacuous=True)
    if ctx.regular:
        return _t(note="the coordinate unit vectors are prime and generate")
    w = _least_singular_principal(ctx)
    return _f(w, note="no prime element divides the least singular atom: "
                      "the maximal ideal of that coordinate is not "
                      "principal")


@_prop("radical_factorial")
def _p_radical_factorial(ctx):
    """Non-units factor into radical elements."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="there are no non-units", vacuous=True)
    if ctx.regular:
        if len(H.counting) <= 2:
            for v in ctx.box(min(ctx.radius, 4))[:40]:
                if any(v[i] for i in H.counting):
                    assert radical_factor_principal(H, v).ok, v
        return _t(note="greedy support peeling writes every element as a "
                       "sum of characteristic vectors")
    out = radical_factor_principal(
        H, _scaled_unit(H, ctx.singular[0],
                        H.coords[ctx.singular[0]].n1))
    assert isinstance(out, Failure)
    return _f(out.witness,
              note="radical of the least singular atom is not principal, "
                   "the greedy peel has no radical element to start with")


@_prop("ppc")
def _p_ppc(ctx):
    """Primary closed ideals with prime radical are powers of it."""
    H = ctx.monoid
    sys = ctx.sys
    if not H.counting:
        return _t(note="no proper primary closed ideals", vacuous=True)

    def lattice_counterexample():
        lat = ctx.lattice()
        if lat is None:
            return None
        cp = {P.ideal.gens for P in ctx.closed_primes()}
        for I in lat:
            if not ctx.proper(I):
                continue
            R = radical(I)
            if R.gens not in cp:
                continue
            if not _box_primary(ctx, I):
                continue
            if _is_power_of(sys, I, R) is None:
                return I
        return None

    if ctx.singular:
        found = lattice_counterexample()
        if found is None:
            found = _least_singular_principal(ctx)
            R = radical(found)
            assert _is_power_of(sys, found, R) is None
            assert _box_primary(ctx, found)
        return _f(found, note="primary closed ideal with prime radical that "
                              "is no closed power of it")
    if ctx.eff == "t" or len(H.counting) == 1:
        assert lattice_counterexample() is None
        return _t(note="primary closed ideals with prime radical are powers "
                       "of the corresponding cell")
    found = lattice_counterexample()
    if found is None:
        i, j = sorted(H.counting)[:2]
        found = ideal_from([_scaled_unit(H, i, 1), _scaled_unit(H, j, 2)], H)
        assert _box_primary(ctx, found)
        assert _is_power_of(sys, found, radical(found)) is None
    return _f(found, note="primary closed ideal with prime radical that is "
                          "no closed power of it")


@_prop("strong_ppc")
def _p_strong_ppc(ctx):
    """Closed ideals with prime radical are powers of it, primary or not."""
    H = ctx.monoid
    sys = ctx.sys
    if not H.counting:
        return _t(note="no proper closed ideals with prime radical",
                  vacuous=True)

    def lattice_counterexample():
        lat = ctx.lattice()
        if lat is None:
            return None
        cp = {P.ideal.gens for P in ctx.closed_primes()}
        for I in lat:
            if not ctx.proper(I):
                continue
            R = radical(I)
            if R.gens not in cp:
                continue
            if _is_power_of(sys, I, R) is None:
                return I
        return None

    if ctx.singular:
        found = lattice_counterexample()
        if found is None:
            found = _least_singular_principal(ctx)
            assert _is_power_of(sys, found, radical(found)) is None
        return _f(found, note="closed ideal with prime radical that is no "
                              "closed power of it")
    if ctx.eff == "t" or len(H.counting) == 1:
        assert lattice_counterexample() is None
        return _t(note="closed ideals with prime radical are powers of the "
                       "corresponding cell")
    found = lattice_counterexample()
    if found is None:
        i, j = sorted(H.counting)[:2]
        found = ideal_from(
            [_scaled_unit(H, i, 2),
             tuple((1 if a in (i, j) else 0) for a in range(H.dim))], H)
        assert _is_power_of(sys, found, radical(found)) is None
    return _f(found, note="closed ideal with prime radical that is no "
                          "closed power of it")


@_prop("primary_inclusive")
def _p_primary_inclusive(ctx):
    """Between nested closed primes there is a primary closed ideal."""
    cp = ctx.closed_primes()
    pairs = [(P, Q) for P in cp for Q in cp
             if P is not Q and ideal_subset(P.ideal, Q.ideal)]
    if not pairs:
        return _t(note="closed primes are pairwise incomparable",
                  vacuous=True)
    if ctx.prop("modular_system").verdict == TRUE:
        return _t(note="the system is modular, which forces primary "
                       "inclusiveness")
    return _u(note="nested closed primes exist and the system is not known "
                   "to be modular")


@_prop("modular_system")
def _p_modular_system(ctx):
    """(I u J)_r cap N = (I u (J cap N))_r whenever I lies inside N."""
    sys = ctx.sys
    H = ctx.monoid
    if _structurally_modular(sys):
        return _t(note="union-stable closure" if sys.kind == "s"
                  else "modularization of a union-stable system")
    if not H.counting:
        return _t(note="H is the only nonempty ideal", vacuous=True)
    if ctx.regular:
        return _t(note="closed ideals form a distributive lattice of "
                       "principal ideals")
    lat = ctx.lattice()
    if lat is None or len(lat) > 16:
        return _u(note="closed-ideal lattice too large for the triple scan")
    proper = [I for I in lat if ctx.proper(I)]
    for N in proper:
        for I in proper:
            if not ideal_subset(I, N):
                continue
            for J in proper:
                g = modular_law_violation(sys, I, J, N)
                if g is not None:
                    return _f({"I": I, "J": J, "N": N, "element": list(g)},
                              note="modular law fails at the marked element")
    if len(H.counting) == 1:
        c = H.coords[H.counting[0]]
        if ctx.radius >= 2 * (c.conductor + c.n1):
            return _t(note="no violation and the box covers twice the "
                           "conductor window")
    return _u(note=f"no violation within radius {ctx.radius}")


@_prop("cancellative")
def _p_cancellative(ctx):
    """(I J)_r = (I L)_r forces J = L on nonempty closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="products of copies of H stay H", vacuous=True)
    if ctx.regular and (ctx.eff == "t" or len(H.counting) == 1):
        return _t(note="closed ideals are principal, multiplication is "
                       "translation")
    r = min(ctx.radius, 3) if ctx.eff == "s" else ctx.radius
    lat = ctx.lattice_at(r)
    if lat is None or len(lat) > 120:
        return _u(note="closed-ideal lattice too large for the collision "
                       "scan")
    proper = [I for I in lat if ctx.proper(I)]
    for I in proper:
        seen: dict = {}
        for J in proper:
            key = close(ctx.sys, ideal_sum(I, J)).gens
            if key in seen:
                return _f({"I": I, "J": seen[key], "L": J},
                          note="distinct closed cofactors with the same "
                               "product")
            seen[key] = J
    return _u(note=f"no collision among {len(proper)} closed ideals within "
                   f"radius {r}")


@_prop("half_cancellative")
def _p_half_cancellative(ctx):
    """(I^k)_r = (J^k)_r forces I = J."""
    if not ctx.monoid.counting:
        return _t(note="trivial on a group", vacuous=True)
    return _t(note="coordinate minima of proper closed ideals grow strictly "
                   "along products, powers determine the base")


@_prop("finite_conductor")
def _p_finite_conductor(ctx):
    """Every nonempty closed ideal contains a translate of H."""
    return _t(note="generators live in a finite window on every coordinate")


@_prop("acc_radical_principal")
def _p_acc_radical_principal(ctx):
    """Ascending chains of radical principal ideals stabilize."""
    H = ctx.monoid
    k = sum(1 for i in H.counting if H.coords[i].atoms == (1,))
    return _t(note=f"only {2 ** k} radical principal ideals exist, every "
                   "chain is finite")


@_prop("pit")
def _p_pit(ctx):
    """Minimal primes over nontrivial principal ideals have height one."""
    return _t(note="minimal primes over a principal ideal are the support "
                   "cells of its generator, all of corank one")


@_prop("min_primes_fg_height_one")
def _p_min_primes_fg_height_one(ctx):
    """Minimal primes over nontrivial finitely generated closed ideals have
    height one."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="no nontrivial closed ideals", vacuous=True)
    cnt = set(H.counting)
    high = [P for P in ctx.rmax() if len(cnt - P.face) >= 2]
    if not high:
        return _t(note="every proper closed ideal lies under a corank-one "
                       "prime")
    P = high[0]
    return _f(P.ideal, note="finitely generated closed prime of height "
                            f"{len(cnt - P.face)} that is its own minimal "
                            "prime")


@_prop("radical_principal_invertible")
def _p_radical_principal_invertible(ctx):
    """Radicals of nontrivial principal ideals are invertible."""
    if not ctx.monoid.counting:
        return _t(note="the radical of any principal ideal is H",
                  vacuous=True)
    for S, C in ctx.cells():
        if not is_invertible(C, ctx.sys):
            return _f(C, note="radical of every principal ideal supported "
                              f"on {sorted(S)}; not invertible")
    return _t(note="every support cell is invertible")


@_prop("radical_principal_principal")
def _p_radical_principal_principal(ctx):
    """Radicals of nontrivial principal ideals are principal."""
    if not ctx.monoid.counting:
        return _t(note="the radical of any principal ideal is H",
                  vacuous=True)
    for S, C in ctx.cells():
        if not C.is_principal:
            return _f(C, note="radical of every principal ideal supported "
                              f"on {sorted(S)}; not principal")
    return _t(note="every support cell is principal")


@_prop("radical_fg_invertible")
def _p_radical_fg_invertible(ctx):
    """Nontrivial radical closed finitely generated ideals are
    invertible."""
    if not ctx.monoid.counting:
        return _t(note="no nontrivial radical closed ideals", vacuous=True)
    for J in ctx.radical_universe():
        if not is_invertible(J, ctx.sys):
            return _f(J, note="radical closed ideal that is not invertible")
    return _t(note="all radical closed ideals are invertible")


@_prop("radical_fg_principal")
def _p_radical_fg_principal(ctx):
    """Nontrivial radical closed finitely generated ideals are principal."""
    if not ctx.monoid.counting:
        return _t(note="no nontrivial radical closed ideals", vacuous=True)
    for J in ctx.radical_universe():
        if not J.is_principal:
            return _f(J, note="radical closed ideal that is not principal")
    return _t(note="all radical closed ideals are principal")


@_prop("primes_contain_invertible_radical")
def _p_primes_contain_invertible_radical(ctx):
    """Every nontrivial closed prime contains an invertible radical closed
    ideal."""
    cp = ctx.closed_primes()
    if not cp:
        return _t(note="no closed primes", vacuous=True)
    U = ctx.invertible_radicals()
    for P in cp:
        if not any(ideal_subset(J, P.ideal) for J in U):
            return _f(P.ideal, note="closed prime containing no invertible "
                                    "radical closed ideal")
    return _t(note="each closed prime contains an invertible radical "
                   "closed ideal")


@_prop("primes_contain_radical_principal")
def _p_primes_contain_radical_principal(ctx):
    """Every nontrivial closed prime contains a radical element."""
    H = ctx.monoid
    cp = ctx.closed_primes()
    if not cp:
        return _t(note="no closed primes", vacuous=True)
    reg = [i for i in H.counting if H.coords[i].atoms == (1,)]
    for P in cp:
        if not any(j not in P.face for j in reg):
            return _f(P.ideal, note="closed prime avoided by every radical "
                                    "principal ideal")
    return _t(note="each closed prime contains a characteristic vector with "
                   "radical principal ideal")


@_prop("max_eq_height_one")
def _p_max_eq_height_one(ctx):
    """Maximal closed primes are exactly the height-one primes."""
    mx = {P.face for P in ctx.rmax()}
    x1 = {P.face for P in ctx.x1()}
    if mx == x1:
        note = "maximal closed primes and height-one primes coincide"
        return _t(note=note, vacuous=not mx)
    diff = sorted(sorted(f) for f in mx.symmetric_difference(x1))
    return _f({"faces": diff}, note="faces on one side only")


@_prop("max_eq_t_max")
def _p_max_eq_t_max(ctx):
    """Maximal closed primes agree with the t-maximal ones."""
    if "tmax" not in ctx._misc:
        ctx._misc["tmax"] = r_max(ctx.monoid, system("t", ctx.monoid))
    mx = {P.face for P in ctx.rmax()}
    tmx = {P.face for P in ctx._misc["tmax"]}
    if mx == tmx:
        return _t(note="maximal closed primes for the system are the "
                       "t-maximal ones", vacuous=not mx)
    diff = sorted(sorted(f) for f in mx.symmetric_difference(tmx))
    return _f({"faces": diff}, note="faces on one side only")


@_prop("class_group_trivial")
def _p_class_group_trivial(ctx):
    """Invertible closed ideals are principal."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only invertible ideal is H", vacuous=True)
    if ctx.sys.kind == "s":
        return _t(note="an s-invertible ideal contains the negative of one "
                       "of its members, hence is principal")
    if ctx.regular:
        return _t(note="invertible closed ideals are principal on a free "
                       "by group model")
    if len(ctx.rmax()) <= 1:
        return _t(note="local: the minimum window of an invertible closed "
                       "ideal is principal")
    probe = class_group_probe(H, ctx.sys, min(ctx.radius, 6), cap=4)
    if probe.nonprincipal:
        return _f(probe.nonprincipal[0],
                  note="invertible closed ideal that is not principal")
    return _u(note=f"all {probe.invertible_count} invertible closed ideals "
                   f"within radius {min(ctx.radius, 6)} are principal")


@_prop("intersection_localizations")
def _p_intersection_localizations(ctx):
    """H equals the intersection of its localizations at height-one
    primes."""
    H = ctx.monoid
    if not ctx.x1():
        return _t(note="no height-one primes, the empty intersection is "
                       "the group itself", vacuous=True)
    if H.dim <= 3:
        locs = [ctx.localization(P.face) for P in ctx.x1()]
        for v in itertools.product(*[range(-2, 3)] * H.dim):
            if all(loc.contains(v) for loc in locs):
                assert H.contains(v), v
    return _t(note="an element of every localization clears each "
                   "height-one denominator, hence lies in H")


@_prop("invertibles_radical_factorial")
def _p_invertibles_radical_factorial(ctx):
    """Invertible closed ideals factor into invertible radical closed
    ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only invertible ideal is H", vacuous=True)
    if ctx.regular:
        inv = ctx.invertibles()
        if inv:
            for I in inv[:40]:
                assert meager_factor(I, ctx.sys).ok, I
        return _t(note="principal generators split along their supports "
                       "into invertible cells")
    w = _least_singular_principal(ctx)
    out = meager_factor(w, ctx.sys)
    assert isinstance(out, Failure)
    assert _radical_product_search(ctx, w, ctx.invertible_radicals()) is None
    return _f(w, note="invertible ideal with no factorization into "
                      "invertible radical closed ideals; its radical is "
                      "not invertible")


@_prop("invertible_radical_product")
def _p_invertible_radical_product(ctx):
    """Invertible closed ideals are products of radical closed ideals,
    invertible or not."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only invertible ideal is H", vacuous=True)
    if ctx.regular:
        return _t(note="support peeling factors every principal ideal into "
                       "radical cells")
    w = _least_singular_principal(ctx)
    assert _radical_product_search(ctx, w) is None
    return _f(w, note="invertible ideal that is no product of radical "
                      "closed ideals; the complete bounded search is empty")


@_prop("invertible_comparable_radical_product")
def _p_invertible_comparable_radical_product(ctx):
    """Invertible closed ideals are products of pairwise comparable radical
    closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only invertible ideal is H", vacuous=True)
    if ctx.regular:
        return _t(note="support peeling yields a nested chain of radical "
                       "cells")
    w = _least_singular_principal(ctx)
    assert _radical_product_search(ctx, w) is None
    return _f(w, note="invertible ideal that is no product of radical "
                      "closed ideals, comparable or not")


@_prop("radical_invertible_invertible")
def _p_radical_invertible_invertible(ctx):
    """Radicals of invertible closed ideals are invertible."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only invertible ideal is H", vacuous=True)
    if ctx.regular:
        inv = ctx.invertibles()
        if inv:
            for I in inv[:40]:
                R = radical(I)
                assert ideal_eq(close(ctx.sys, R), R)
                assert is_invertible(R, ctx.sys)
        return _t(note="radicals of invertible ideals are invertible cells")
    w = _least_singular_principal(ctx)
    R = radical(w)
    assert not is_invertible(R, ctx.sys)
    return _f(R, note=f"radical of the invertible ideal "
                      f"{list(w.gens[0])}+H; not invertible")


@_prop("principal_radical_product")
def _p_principal_radical_product(ctx):
    """Nontrivial principal ideals are products of radical closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="no nontrivial principal ideals", vacuous=True)
    if ctx.regular:
        return _t(note="support peeling factors every principal ideal")
    w = _least_singular_principal(ctx)
    assert _radical_product_search(ctx, w) is None
    return _f(w, note="principal ideal that is no product of radical "
                      "closed ideals")


@_prop("principal_comparable_radical_product")
def _p_principal_comparable_radical_product(ctx):
    """Nontrivial principal ideals are products of pairwise comparable
    radical closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="no nontrivial principal ideals", vacuous=True)
    if ctx.regular:
        return _t(note="support peeling yields a nested chain")
    w = _least_singular_principal(ctx)
    assert _radical_product_search(ctx, w) is None
    return _f(w, note="principal ideal that is no product of radical "
                      "closed ideals, comparable or not")


@_prop("principal_comparable_radical_principal_product")
def _p_principal_comparable_radical_principal_product(ctx):
    """Nontrivial principal ideals are products of pairwise comparable
    radical principal ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="no nontrivial principal ideals", vacuous=True)
    if ctx.regular:
        return _t(note="support peeling yields a nested chain of "
                       "characteristic-vector principals")
    out = radical_factor_principal(
        H, _scaled_unit(H, ctx.singular[0], H.coords[ctx.singular[0]].n1))
    assert isinstance(out, Failure)
    return _f(out.witness, note="the radical met by the greedy peel is not "
                                "principal")


@_prop("closed_comparable_radical_product")
def _p_closed_comparable_radical_product(ctx):
    """Every nonempty proper closed ideal is a product of pairwise
    comparable radical closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="no proper nonempty closed ideals", vacuous=True)
    if ctx.singular:
        w = _least_singular_principal(ctx)
        assert _radical_product_search(ctx, w) is None
        return _f(w, note="closed ideal that is no product of radical "
                          "closed ideals, comparable or not")
    if ctx.eff == "t" or len(H.counting) == 1:
        return _t(note="support peeling writes closed ideals as nested "
                       "radical products")
    i, j = sorted(H.counting)[:2]
    w = ideal_from([_scaled_unit(H, i, 3),
                    tuple((1 if a in (i, j) else 0) for a in range(H.dim))],
                   H)
    assert _radical_product_search(ctx, w) is None
    return _f(w, note="closed ideal that is no product of radical closed "
                      "ideals, comparable or not")


@_prop("meager_radical_intersections")
def _p_meager_radical_intersections(ctx):
    """Radicals of invertible closed ideals are meager intersections of
    invertible radical closed ideals."""
    H = ctx.monoid
    if not H.counting:
        return _t(note="the only invertible ideal is H", vacuous=True)
    if ctx.regular:
        inv = ctx.invertibles()
        if inv:
            for I in inv[:20]:
                assert _meager_intersection_exists(ctx, I), I
        return _t(note="the singleton family of the support cell is meager")
    w = _least_singular_principal(ctx)
    assert not _meager_intersection_exists(ctx, w)
    return _f(radical(w), note="no meager family of invertible radical "
                               "closed ideals meets in this radical")


# --------------------------------------------------------------------------
# name normalization

_ALIASES = {
    "ad": "almost_dedekind",
    "almost_dedekind": "almost_dedekind",
    "prime_power": "ppc",
    "prime_power_condition": "ppc",
    "strong_prime_power": "strong_ppc",
    "strong_prime_power_condition": "strong_ppc",
    "class_group": "class_group_trivial",
    "pruefer": "prufer",
}
for _k in _REGISTRY:
    _ALIASES.setdefault(_k, _k)

_SYS_PREFIXES = ("s", "t", "v", "w")


def _canon(name: str) -> str:
    s = name.strip().replace("-", "_")
    head, _, tail = s.partition("_")
    if tail and head in _SYS_PREFIXES:
        s = tail
    key = s.lower()
    if key not in _ALIASES:
        raise ValueError(f"unknown property {name!r}")
    return _ALIASES[key]


def property_names() -> tuple:
    return tuple(sorted(_REGISTRY))


# --------------------------------------------------------------------------
# suites


@dataclass(frozen=True)
class Condition:
    cid: str
    text: str
    verdict: str
    witness: object = None
    note: str = ""
    vacuous: bool = False
    group: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.cid,
            "text": self.text,
            "verdict": self.verdict,
            "witness": _witness_json(self.witness),
            "note": self.note,
            "vacuous": self.vacuous,
            "group": self.group,
        }


@dataclass(frozen=True)
class TfaeReport:
    suite: str
    monoid: str
    radius: int
    conditions: tuple
    agreement: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "monoid": self.monoid,
            "radius": self.radius,
            "agreement": self.agreement,
            "note": self.note,
            "conditions": [c.to_json() for c in self.conditions],
        }


def _eval_conjunction(ctxs, cid, text, conjuncts, group=""):
    """Conjuncts are evaluated in listed order and the first exact false
    wins; an unknown is only reported when nothing later refutes."""
    vac = False
    pending = None
    for lbl, prop in conjuncts:
        v = ctxs[lbl].prop(prop)
        if v.verdict == FALSE:
            return Condition(cid, text, FALSE, v.witness,
                             note=f"{lbl}:{prop}: {v.note}", group=group)
        if v.verdict == UNKNOWN and pending is None:
            pending = (lbl, prop, v)
        vac = vac or v.vacuous
    if pending is not None:
        lbl, prop, v = pending
        return Condition(cid, text, UNKNOWN,
                         note=f"{lbl}:{prop}: {v.note}", group=group)
    return Condition(cid, text, TRUE, vacuous=vac, group=group)


def _cond_powers_at_height_one(ctxs):
    """Per height-one prime: ideals with that radical are powers of it, and
    the localization direction is half-cancellative.  The half-cancellative
    part holds structurally, so the power part is decided first."""
    ctx = ctxs["t"]
    H = ctx.monoid
    if not ctx.x1():
        return TRUE, None, "no height-one primes", True
    for P in ctx.x1():
        (i,) = sorted(set(H.counting) - P.face)
        if H.coords[i].atoms == (1,):
            continue
        w = principal(H, _scaled_unit(H, i, H.coords[i].n1))
        assert ideal_eq(radical(w), P.ideal)
        assert _is_power_of(ctx.sys, w, P.ideal) is None
        return (FALSE, w,
                "closed ideal with radical the height-one prime on "
                f"coordinate {i} that is no closed power of it", False)
    return (TRUE, None,
            "closed ideals with height-one radical are powers of it and "
            "coordinate minima grow strictly along products", False)


def _post_cor38(ctxs, conds):
    """Once every condition holds, the two closures must agree as maps, not
    just in verdicts; checked on a deterministic sample of generator sets."""
    if any(c.verdict != TRUE for c in conds):
        return ""
    H = ctxs.H
    w_sys = ctxs["w"].sys
    t_sys = ctxs["t"].sys
    box = [v for v in H.enumerate(min(ctxs.radius, 5)) if any(v)]
    sample = [(v,) for v in box[:10]]
    sample += [(box[k], box[-1 - k]) for k in range(min(8, len(box) // 2))]
    n = 0
    for gens in sample:
        X = ideal_from(gens, H)
        if not ideal_eq(close(w_sys, X), close(t_sys, X)):
            raise AssertionError(f"closure identity fails on {gens}")
        n += 1
    return f"closure identity verified on {n} generator sets"


# Condition rows: (id, text, body, group); body is a conjunct list, a
# callable, or the via-equivalents marker with the ids it averages over.
SUITES = {
    "Thm4.2": {
        "conditions": [
            ("1", "almost Dedekind with the SP property",
             [("t", "almost_dedekind"), ("t", "sp")], ""),
            ("2", "finite conductor and principal ideals factor into "
                  "radical closed ideals",
             [("t", "finite_conductor"), ("t", "principal_radical_product")],
             ""),
            ("3", "closed ideals factor into pairwise comparable radical "
                  "closed ideals",
             [("t", "closed_comparable_radical_product")], ""),
            ("4", "radicals of principal ideals are invertible",
             [("t", "radical_principal_invertible")], ""),
        ],
    },
    "Cor4.4": {
        "conditions": [
            ("1", "almost Dedekind with the SP property",
             [("t", "almost_dedekind"), ("t", "sp")], ""),
            ("2", "SP property for the modularization",
             [("w", "sp")], ""),
            ("3", "finite conductor and principal ideals factor into "
                  "radical ideals of the modularization",
             [("w", "finite_conductor"), ("w", "principal_radical_product")],
             ""),
            ("4", "ideals closed for the modularization factor into "
                  "pairwise comparable radical ideals",
             [("w", "closed_comparable_radical_product")], ""),
            ("5", "radicals of principal ideals are invertible for the "
                  "modularization",
             [("w", "radical_principal_invertible")], ""),
        ],
    },
    "Cor4.5": {
        "conditions": [
            ("1", "Bezout with the SP property",
             [("t", "bezout"), ("t", "sp")], ""),
            ("2", "Bezout with the SP property for the modularization",
             [("w", "bezout"), ("w", "sp")], ""),
            ("3", "radicals of principal ideals are principal",
             [("t", "radical_principal_principal")], ""),
            ("4", "principal ideals factor into pairwise comparable "
                  "radical principal ideals",
             [("t", "principal_comparable_radical_principal_product")], ""),
        ],
    },
    "Thm3.9": {
        "conditions": [
            ("1", "almost Dedekind with the SP property",
             [("t", "almost_dedekind"), ("t", "sp")], ""),
            ("2", "treed spectrum and closed primes contain invertible "
                  "radical closed ideals",
             [("t", "treed"), ("t", "primes_contain_invertible_radical")],
             ""),
            ("3", "prime power condition, primary inclusive, and closed "
                  "primes contain invertible radical closed ideals",
             [("t", "ppc"), ("t", "primary_inclusive"),
              ("t", "primes_contain_invertible_radical")], ""),
            ("4", "radical closed finitely generated ideals are invertible",
             [("t", "radical_fg_invertible")], ""),
            ("5", "radicals of principal ideals are invertible and minimal "
                  "primes of finitely generated closed ideals have height "
                  "one",
             [("t", "radical_principal_invertible"),
              ("t", "min_primes_fg_height_one")], ""),
        ],
    },
    "Thm3.10": {
        "conditions": [
            ("1", "Bezout with the SP property",
             [("t", "bezout"), ("t", "sp")], ""),
            ("2", "radical factorial and Bezout",
             [("t", "radical_factorial"), ("t", "bezout")], ""),
            ("3", "treed spectrum, closed primes contain radical elements, "
                  "and the class group is trivial",
             [("t", "treed"), ("t", "primes_contain_radical_principal"),
              ("t", "class_group_trivial")], ""),
            ("4", "prime power condition, primary inclusive, and radicals "
                  "of principal ideals are principal",
             [("t", "ppc"), ("t", "primary_inclusive"),
              ("t", "radical_principal_principal")], ""),
            ("5", "treed spectrum and radicals of principal ideals are "
                  "principal",
             [("t", "treed"), ("t", "radical_principal_principal")], ""),
            ("6", "radicals of principal ideals are principal and minimal "
                  "primes of finitely generated closed ideals have height "
                  "one",
             [("t", "radical_principal_principal"),
              ("t", "min_primes_fg_height_one")], ""),
            ("7", "radical closed finitely generated ideals are principal",
             [("t", "radical_fg_principal")], ""),
        ],
    },
    "Prop3.6": {
        "conditions": [
            ("1", "almost Dedekind",
             [("t", "almost_dedekind")], ""),
            ("2", "strong prime power condition and cancellative ideal "
                  "multiplication",
             [("t", "strong_ppc"), ("t", "cancellative")], ""),
            ("3", "ideals with height-one prime radical are powers of it "
                  "and powers are half-cancellative",
             _cond_powers_at_height_one, ""),
            ("4", "treed spectrum with the strong prime power condition",
             [("t", "treed"), ("t", "strong_ppc")], ""),
            ("5", "strong prime power condition for a modular system",
             [("t", "strong_ppc"), ("t", "modular_system")], ""),
            ("6", "maximal closed primes have height one and the prime "
                  "power condition holds",
             [("t", "max_eq_height_one"), ("t", "ppc")], ""),
            ("7", "prime power condition, principal ideal theorem, and "
                  "primary inclusive",
             [("t", "ppc"), ("t", "pit"), ("t", "primary_inclusive")], ""),
        ],
    },
    "Prop5.2": {
        "conditions": [
            ("1", "invertible closed ideals factor into invertible radical "
                  "closed ideals",
             [("t", "invertibles_radical_factorial")], ""),
            ("2", "invertible closed ideals factor into radical closed "
                  "ideals",
             [("t", "invertible_radical_product")], ""),
            ("3", "H is the intersection of its localizations at "
                  "height-one primes, those are discrete valuation "
                  "monoids, and radicals of invertibles are meager "
                  "intersections",
             [("t", "intersection_localizations"),
              ("t", "localizations_dvm"),
              ("t", "meager_radical_intersections")], ""),
        ],
    },
    "Cor5.3": {
        "conditions": [
            ("1", "almost Dedekind with the SP property",
             [("t", "almost_dedekind"), ("t", "sp")], ""),
            ("2", "Pruefer and invertible closed ideals factor into "
                  "invertible radical closed ideals",
             [("t", "prufer"), ("t", "invertibles_radical_factorial")], ""),
        ],
    },
    "Cor4.6": {
        "conditions": [
            ("1", "factorial",
             [("t", "factorial")], ""),
            ("2", "radicals of principal ideals are principal with the "
                  "ascending chain condition on radical principal ideals",
             [("t", "radical_principal_principal"),
              ("t", "acc_radical_principal")], ""),
        ],
    },
    "Prop5.4": {
        "conditions": [
            ("1", "principal ideals factor into pairwise comparable "
                  "radical closed ideals",
             [("t", "principal_comparable_radical_product")], ""),
            ("2", "radicals of principal ideals are invertible",
             [("t", "radical_principal_invertible")], ""),
            ("3", "radicals of invertible closed ideals are invertible",
             [("t", "radical_invertible_invertible")], ""),
            ("4", "consensus of the invertibility conditions",
             ("via", ("2", "3", "5")), ""),
            ("5", "invertible closed ideals factor into pairwise "
                  "comparable radical closed ideals",
             [("t", "invertible_comparable_radical_product")], ""),
        ],
    },
    "Cor3.8": {
        "conditions": [
            ("1", "almost Dedekind",
             [("t", "almost_dedekind")], ""),
            ("2", "almost Dedekind for the modularization",
             [("w", "almost_dedekind")], ""),
            ("3", "maximal closed primes of the modularization have height "
                  "one and its prime power condition holds",
             [("w", "max_eq_height_one"), ("w", "ppc")], ""),
            ("4", "strong prime power condition for the modularization",
             [("w", "strong_ppc")], ""),
            ("5", "prime power condition for the modularization and the "
                  "principal ideal theorem",
             [("w", "ppc"), ("t", "pit")], ""),
        ],
        "post": _post_cor38,
    },
    "Thm4.3": {
        "conditions": [
            ("A1", "almost Dedekind with the SP property",
             [("t", "almost_dedekind"), ("t", "sp")], "A"),
            ("A2", "maximal closed primes are the t-maximal ones and "
                   "radicals of principal ideals are invertible",
             [("t", "max_eq_t_max"), ("t", "radical_principal_invertible")],
             "A"),
            ("A3", "SP property for the modularization",
             [("w", "sp")], "A"),
            ("B1", "Bezout with the SP property",
             [("t", "bezout"), ("t", "sp")], "B"),
            ("B2", "radicals of principal ideals are principal",
             [("t", "radical_principal_principal")], "B"),
            ("B3", "Bezout with the SP property for the modularization",
             [("w", "bezout"), ("w", "sp")], "B"),
        ],
    },
}


def suite_names() -> tuple:
    return tuple(SUITES)


def suite_battery(H: MonoidModel, radius: int = 8, names=None) -> dict:
    """Run several suites over shared property contexts.

    Returns {suite name: TfaeReport} in the order given (all suites when
    names is None).  Sharing one context map keeps repeated lattice and
    localization work across suites to a single evaluation.
    """
    names = tuple(SUITES) if names is None else tuple(names)
    ctxs = _CtxMap(H, radius)
    return {name: tfae_suite(H, name, radius, _ctxs=ctxs) for name in names}


def tfae_suite(H: MonoidModel, suite: str, radius: int = 8,
               _ctxs=None) -> TfaeReport:
    """Evaluate one equivalence suite; raises UncertifiedModel on models
    without a certified spectrum."""
    primes(H)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of "
                         f"{', '.join(SUITES)}")
    ctxs = _ctxs if _ctxs is not None else _CtxMap(H, radius)
    rows = SUITES[suite]["conditions"]
    conds: list = []
    deferred: list = []
    for cid, text, body, group in rows:
        if isinstance(body, tuple) and body and body[0] == "via":
            deferred.append((len(conds), cid, text, body[1], group))
            conds.append(None)
        elif callable(body):
            verdict, witness, note, vac = body(ctxs)
            conds.append(Condition(cid, text, verdict, witness, note,
                                   vacuous=vac, group=group))
        else:
            conds.append(_eval_conjunction(ctxs, cid, text, body, group))
    for pos, cid, text, deps, group in deferred:
        got = {c.cid: c.verdict for c in conds if c is not None}
        vals = {got[d] for d in deps}
        verdict = vals.pop() if len(vals) == 1 else UNKNOWN
        conds[pos] = Condition(cid, text, verdict, note="via-equivalents",
                               group=group)
    note = ""
    post = SUITES[suite].get("post")
    if post is not None:
        note = post(ctxs, conds)
    pools: dict = {}
    for c in conds:
        pools.setdefault(c.group, set()).add(c.verdict)
    agreement = all(len(s) == 1 for s in pools.values())
    return TfaeReport(suite=suite, monoid=H.name, radius=radius,
                      conditions=tuple(conds), agreement=agreement,
                      note=note)


# --------------------------------------------------------------------------
# public evaluation surface

MATRIX_PROPS = (
    "almost_dedekind",
    "bezout",
    "cancellative",
    "class_group_trivial",
    "closed_comparable_radical_product",
    "finite_conductor",
    "half_cancellative",
    "intersection_localizations",
    "invertible_comparable_radical_product",
    "invertible_radical_product",
    "invertibles_radical_factorial",
    "local",
    "localizations_dvm",
    "max_eq_height_one",
    "max_eq_t_max",
    "meager_radical_intersections",
    "min_primes_fg_height_one",
    "modular_system",
    "ppc",
    "primary_inclusive",
    "primes_contain_invertible_radical",
    "primes_contain_radical_principal",
    "principal_comparable_radical_principal_product",
    "principal_comparable_radical_product",
    "principal_radical_product",
    "prufer",
    "radical_fg_invertible",
    "radical_fg_principal",
    "radical_invertible_invertible",
    "radical_principal_invertible",
    "radical_principal_principal",
    "sp",
    "strong_ppc",
    "treed",
)

GLOBAL_PROPS = (
    "acc_radical_principal",
    "dvm",
    "factorial",
    "pit",
    "radical_factorial",
    "valuation",
)


def evaluate(H: MonoidModel, sys, prop: str, radius: int = 8,
             _ctx=None) -> PropertyVerdict:
    """Decide one property; ``sys`` is a System or a system token, ``prop``
    accepts aliases like ``t_SP`` or ``aD``."""
    primes(H)
    if isinstance(sys, str):
        sys = system(sys, H)
    ctx = _ctx if _ctx is not None else PropertyContext(H, sys, radius)
    name = _canon(prop)
    v = ctx.prop(name)
    return PropertyVerdict(monoid=H.name, system=sys.label, prop=name,
                           verdict=v.verdict, radius=radius,
                           witness=v.witness, note=v.note, vacuous=v.vacuous)


def classify(H: MonoidModel, radius: int = 8) -> dict:
    """Full report: property matrix over s, w, t, the element-wise globals,
    all suites, and a spectrum summary."""
    try:
        primes(H)
    except UncertifiedModel as exc:
        return {"monoid": H.name, "certified": False, "radius": radius,
                "note": str(exc)}
    ctxs = _CtxMap(H, radius)
    systems_out = {}
    for lbl in ("s", "w", "t"):
        ctx = ctxs[lbl]
        systems_out[lbl] = {p: _vjson(ctx.prop(p)) for p in MATRIX_PROPS}
    glob = {p: _vjson(ctxs["t"].prop(p)) for p in GLOBAL_PROPS}
    suites = {name: tfae_suite(H, name, radius, _ctxs=ctxs).to_json()
              for name in SUITES}
    return {
        "monoid": H.name,
        "certified": True,
        "radius": radius,
        "systems": systems_out,
        "global": glob,
        "suites": suites,
        "spectrum": spectrum_json(H, ctxs["t"].sys),
    }
