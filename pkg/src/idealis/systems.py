"""The finitary ideal systems s, t (= finitary v), w, and generic
modularizations mod(p, r), together with the axiom and comparison checkers.

A ``System`` is bound to its monoid.  Closure of a finitely generated ideal:

    s          -- the generated module itself
    t (and v)  -- double inverse of the generator set; on finitely generated
                  input the two coincide, and only such input ever arises
    mod(p, r)  -- intersection of the localizations of the p-closure at the
                  r-maximal ideals; w is mod(s, t)

Maximal closed primes are computed structurally from the face lattice, so a
modularization never needs more than the face data of its right operand.
"""

import random
import weakref
from dataclasses import dataclass, field

from . import _kernel as K
from .ideals import (Ideal, ideal_eq, ideal_from, ideal_intersect,
                     ideal_subset, ideal_union, shift, unit_ideal)
from .monoid import MonoidModel


@dataclass(frozen=True, eq=False)
class System:
    monoid: MonoidModel
    kind: str                     # "s" | "t" | "v" | "mod"
    parts: tuple = ()             # (p, r) when kind == "mod"
    label: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def __repr__(self):
        return f"System({self.label}, {self.monoid.name})"

    @property
    def key(self):
        if self.kind == "mod":
            return ("mod", self.parts[0].key, self.parts[1].key)
        return (self.kind,)


_by_monoid = weakref.WeakKeyDictionary()


def _registry(H: MonoidModel) -> dict:
    reg = _by_monoid.get(H)
    if reg is None:
        reg = {}
        _by_monoid[H] = reg
    return reg


def _split_args(body: str):
    depth = 0
    for pos, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:pos], body[pos + 1:]
    raise ValueError(f"expected two comma-separated systems in {body!r}")


def system(token: str, H: MonoidModel) -> System:
    """Resolve a system selector: s | t | v | w | w_p:<p> | mod(<p>,<r>)."""
    token = token.strip()
    reg = _registry(H)
    got = reg.get(token)
    if got is not None:
        return got
    if token in ("s", "t", "v"):
        sys = System(H, token, (), token)
    elif token == "w":
        sys = System(H, "mod", (system("s", H), system("t", H)), "w")
    elif token.startswith("w_p:"):
        p = system(token[4:], H)
        sys = System(H, "mod", (p, system("t", H)), token)
        _check_leq_pre(sys)
    elif token.startswith("mod(") and token.endswith(")"):
        left, right = _split_args(token[4:-1])
        sys = System(H, "mod", (system(left, H), system(right, H)), token)
        _check_leq_pre(sys)
    else:
        raise ValueError(f"unknown ideal system {token!r}")
    reg[token] = sys
    return sys


def modularization(p: System, r: System) -> System:
    """The derived system mod(p, r); w is modularization(s, t)."""
    if p.monoid is not r.monoid:
        raise ValueError("operands bound to different monoids")
    if p.kind == "s" and r.kind == "t":
        return system("w", p.monoid)
    return system(f"mod({p.label},{r.label})", p.monoid)


def _check_leq_pre(sys: System):
    p, r = sys.parts
    rep = leq_check(p, r, samples=16, radius=4, seed=7)
    if not rep.ok:
        raise ValueError(
            f"{p.label} <= {r.label} fails on sample {rep.failures[0]}")


def _prime_gens(H: MonoidModel, face: frozenset) -> tuple:
    pack = H.pack
    gens = []
    for i in H.counting:
        if i in face:
            continue
        for a in pack[5][i]:
            v = [0] * H.dim
            v[i] = a
            gens.append(tuple(v))
    return K.reduce_gens(pack, tuple(gens))


def proper_faces(H: MonoidModel):
    """All faces of nonempty primes: subsets of the counting coordinates
    that omit at least one of them, ordered deterministically."""
    counting = H.counting
    out = []
    for bits in range(1 << len(counting)):
        face = frozenset(counting[j] for j in range(len(counting))
                         if bits >> j & 1)
        if len(face) < len(counting):
            out.append(face)
    out.sort(key=lambda f: (len(f), tuple(sorted(f))))
    return out


def r_max_faces(H: MonoidModel, sys: System) -> tuple:
    """Faces of the maximal sys-closed primes."""
    got = sys._cache.get("r_max_faces")
    if got is not None:
        return got
    closed = []
    for face in proper_faces(H):
        P = Ideal(H, _prime_gens(H, face))
        if close(sys, P).gens == P.gens:
            closed.append(face)
    maximal = tuple(f for f in closed
                    if not any(g < f for g in closed))
    sys._cache["r_max_faces"] = maximal
    return maximal


def close(sys: System, X: Ideal) -> Ideal:
    """sys-closure of a finitely generated ideal, as a canonical Ideal."""
    if X.monoid is not sys.monoid:
        raise ValueError("ideal bound to a different monoid")
    if sys.kind == "s":
        return X
    if X.is_empty:
        return X
    got = sys._cache.get(X.gens)
    if got is not None:
        return Ideal(sys.monoid, got)
    H = sys.monoid
    if sys.kind in ("t", "v"):
        gens = K.v_close_gens(H.pack, X.gens)
    else:
        p, r = sys.parts
        gens = K.modular_close_gens(
            H.pack, close(p, X).gens, r_max_faces(H, r))
    sys._cache[X.gens] = gens
    return Ideal(H, gens)


def modular_close(p: System, r: System, X: Ideal) -> Ideal:
    return close(modularization(p, r), X)


def power_close(sys: System, I: Ideal, k: int) -> Ideal:
    """The sys-closed k-th power (I^k)_sys; k = 0 gives H."""
    if k == 0:
        return unit_ideal(sys.monoid)
    out = I
    for _ in range(k - 1):
        out = close(sys, Ideal(sys.monoid,
                               K.sum_gens(sys.monoid.pack, out.gens, I.gens)))
    return close(sys, out)


def dropped_generator_close(sys: System):
    """A deliberately broken closure (drops the lex-last generator).

    Exists to validate axioms_check: the result is not extensive, so the
    checker must fail it with an extension witness.
    """
    def broken(X: Ideal) -> Ideal:
        Y = close(sys, X)
        return Ideal(Y.monoid, Y.gens[:-1])
    return broken


@dataclass
class CheckReport:
    """Outcome of a sampled property check; failures carry witnesses."""

    what: str
    monoid: str
    samples: int
    radius: int
    seed: int
    counts: dict
    failures: list
    strict_witness: object = None

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def strict(self) -> bool:
        return self.strict_witness is not None

    def to_json(self):
        return {
            "what": self.what, "monoid": self.monoid,
            "samples": self.samples, "radius": self.radius, "seed": self.seed,
            "counts": dict(sorted(self.counts.items())),
            "failures": self.failures,
            "ok": self.ok, "strict": self.strict,
            "strict_witness": self.strict_witness,
        }


def _sample_gens(rng, members, box, k):
    """k generators, drawn from H for integral samples or from the whole
    box for fractional ones."""
    pool = members if rng.random() < 0.5 else box
    return tuple(rng.choice(pool) for _ in range(k))


def _box_vectors(H: MonoidModel, radius: int):
    from itertools import product as iproduct
    ranges = []
    for i, c in enumerate(H.coords):
        lo = -radius if c.kind == "group" else -(radius // 2)
        ranges.append(range(lo, radius + 1))
    return [v for v in iproduct(*ranges)]


def _axioms_check_fn(close_fn, H, label, samples, radius, seed):
    rng = random.Random(seed)
    members = H.enumerate(radius)
    box = _box_vectors(H, radius)
    counts = {"A": 0, "B": 0, "C": 0, "D": 0}
    failures = []

    def fail(axiom, **kw):
        failures.append({"axiom": axiom, "system": label, **kw})

    for _ in range(samples):
        gens = _sample_gens(rng, members, box, rng.randint(1, 4))
        X = ideal_from(gens, H)
        Xr = close_fn(X)
        # (A) extension: X + H inside the closure.
        counts["A"] += 1
        for g in gens:
            if not Xr.contains_vec(g):
                fail("A", witness=list(g), gens=[list(v) for v in gens])
                break
        else:
            h = rng.choice(members)
            g = rng.choice(gens)
            probe = tuple(a + b for a, b in zip(g, h))
            if not Xr.contains_vec(probe):
                fail("A", witness=list(probe), gens=[list(v) for v in gens])
        # (B) monotone closure, via idempotence plus monotonicity.
        counts["B"] += 1
        if close_fn(Xr).gens != Xr.gens:
            fail("B", kind="idempotence", gens=[list(v) for v in gens])
        extra = _sample_gens(rng, members, box, rng.randint(1, 2))
        Y = ideal_from(gens + extra, H)
        if not ideal_subset(Xr, close_fn(Y)):
            fail("B", kind="monotonicity", gens=[list(v) for v in gens],
                 extra=[list(v) for v in extra])
        # (C) translation equivariance.
        counts["C"] += 1
        c = rng.choice(members)
        lhs = close_fn(shift(X, c))
        rhs = shift(Xr, c)
        if lhs.gens != rhs.gens:
            fail("C", shift=list(c), gens=[list(v) for v in gens])
        if failures:
            break
    # (D) holds by construction: closures only ever see finite generator
    # sets.  Recorded, not tested.
    counts["D"] = samples
    return CheckReport(f"axioms[{label}]", H.name, samples, radius, seed,
                       counts, failures)


def axioms_check(sys: System, samples: int, radius: int, seed: int = 0) -> CheckReport:
    """Sampled verification of the closure axioms for a bound system."""
    return _axioms_check_fn(lambda X: close(sys, X), sys.monoid, sys.label,
                            samples, radius, seed)


def leq_check(p: System, r: System, samples: int, radius: int = 6,
              seed: int = 0) -> CheckReport:
    """Sampled check that p-closure is contained in r-closure, recording a
    strictness witness when some sample separates them."""
    if p.monoid is not r.monoid:
        raise ValueError("systems bound to different monoids")
    H = p.monoid
    rng = random.Random(seed)
    members = H.enumerate(radius)
    box = _box_vectors(H, radius)
    counts = {"leq": 0}
    failures = []
    strict_witness = None
    for _ in range(samples):
        gens = _sample_gens(rng, members, box, rng.randint(1, 4))
        X = ideal_from(gens, H)
        Xp, Xr = close(p, X), close(r, X)
        counts["leq"] += 1
        if not ideal_subset(Xp, Xr):
            bad = next(g for g in Xp.gens if not Xr.contains_vec(g))
            failures.append({"gens": [list(v) for v in gens],
                             "witness": list(bad)})
        elif strict_witness is None and not ideal_eq(Xp, Xr):
            extra = next(g for g in Xr.gens if not Xp.contains_vec(g))
            strict_witness = {"gens": [list(v) for v in gens],
                              "element": list(extra)}
    return CheckReport(f"leq[{p.label},{r.label}]", H.name, samples, radius,
                       seed, counts, failures, strict_witness)


def modular_law_violation(sys: System, I: Ideal, J: Ideal, N: Ideal):
    """Witness element breaking (I u J)_r cap N into (I u (J cap N))_r, or
    None.  Requires I inside N."""
    lhs = ideal_intersect(close(sys, ideal_union(I, J)), N)
    rhs = close(sys, ideal_union(I, ideal_intersect(J, N)))
    for g in lhs.gens:
        if not rhs.contains_vec(g):
            return g
    return None


_LATTICE_TOO_BIG = object()


def closed_ideals(sys: System, radius: int, cap: int = 20000,
                  max_ground: int = 400) -> tuple:
    """Every sys-closed ideal whose canonical generators lie in the radius
    box, H included, the empty ideal excluded; sorted by generators.

    Enumeration is Ganter's next-closure over the box ground set with the
    operator E -> members(close(sys, E)) meet box; an ideal generated inside
    the box is recovered from its box trace, so the family is exhaustive.
    Closed sets whose ideal needs a generator outside the box are dropped.
    Raises BudgetExceeded past cap ideals or max_ground box vectors; the
    verdict machinery falls back to structural arguments then.
    """
    key = ("lattice", radius)
    got = sys._cache.get(key)
    if got is _LATTICE_TOO_BIG:
        raise K.BudgetExceeded(f"{sys.label}-lattice at radius {radius}")
    if got is not None:
        return got
    H = sys.monoid
    ground = list(H.enumerate(radius))
    n = len(ground)
    if n > max_ground:
        sys._cache[key] = _LATTICE_TOO_BIG
        raise K.BudgetExceeded(
            f"{sys.label}-lattice ground set has {n} > {max_ground} vectors")
    pack = H.pack
    box = set(ground)

    def trace(idx):
        gens = tuple(ground[i] for i in sorted(idx))
        I = close(sys, ideal_from(gens, H))
        bits = frozenset(
            j for j, v in enumerate(ground)
            if K.divisible_any(pack, v, I.gens))
        return bits, I

    out = []
    A, ideal_A = trace(frozenset())
    while True:
        if not ideal_A.is_empty and all(g in box for g in ideal_A.gens):
            out.append(ideal_A)
            if len(out) > cap:
                sys._cache[key] = _LATTICE_TOO_BIG
                raise K.BudgetExceeded(
                    f"{sys.label}-lattice at radius {radius} exceeds {cap}")
        nxt = None
        for i in range(n - 1, -1, -1):
            if i in A:
                continue
            B, ideal_B = trace(frozenset(j for j in A if j < i) | {i})
            if all(b in A for b in B if b < i):
                nxt = (B, ideal_B)
                break
        if nxt is None:
            break
        A, ideal_A = nxt
    result = tuple(sorted(out, key=lambda I: I.gens))
    sys._cache[key] = result
    return result
