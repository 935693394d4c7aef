"""Factorization in the invertible-ideal monoid.

Invertibility and divisibility tests, radical factorization of principal
ideals (greedy peel by the radical's generator), SP factorization of closed
ideals (peel by the radical's inverse), meager-set factorization with a
strictly decreasing prime-power measure, support witnesses, and a bounded
class-group probe.

Everything here returns either a FactorChain (with reassembly re-checked at
construction time) or a Failure carrying the offending ideal, so callers can
cross-reference counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from .ideals import (
    Ideal,
    ideal_eq,
    ideal_from,
    ideal_intersect,
    ideal_subset,
    ideal_sum,
    inverse,
    principal,
    radical,
    unit_ideal,
)
from .monoid import MonoidModel
from .spectrum import height_one
from .systems import System, close, power_close

_POWER_CAP = 64


class PreconditionFailed(ValueError):
    """An operation's hypothesis does not hold for the given input."""

    def __init__(self, message: str, witness: Ideal | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Failure:
    """A factorization that cannot be completed, with the ideal that blocks it.

    reason is one of NonPrincipalRadical, BoundExceeded, RadicalNotInvertible,
    NoMeagerSet.
    """

    reason: str
    witness: Ideal | None = None

    @property
    def ok(self) -> bool:
        return False

    def to_json(self):
        out = {"failure": self.reason}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


@dataclass(frozen=True)
class FactorChain:
    system: System
    target: Ideal
    factors: tuple[Ideal, ...]
    comparable: bool

    @property
    def ok(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.factors)

    def to_json(self):
        return {
            "system": self.system.label,
            "target": self.target.to_json(),
            "factors": [f.to_json() for f in self.factors],
            "comparable": self.comparable,
        }


def _chain(sys: System, target: Ideal, factors, require_comparable: bool) -> FactorChain:
    factors = tuple(factors)
    for f in factors:
        if not ideal_eq(radical(f), f):
            raise AssertionError(f"non-radical factor {f!r} in chain")
    comparable = all(
        ideal_subset(factors[i], factors[i + 1]) for i in range(len(factors) - 1)
    )
    if require_comparable and not comparable:
        raise AssertionError("factor chain is not comparable")
    if factors:
        product = close(sys, reduce(ideal_sum, factors))
    else:
        product = unit_ideal(sys.monoid)
    if not ideal_eq(product, target):
        raise AssertionError(
            f"chain does not reassemble: product {product.gens} != target {target.gens}"
        )
    return FactorChain(sys, target, factors, comparable)


def _require_closed(I: Ideal, sys: System, what: str) -> None:
    if I.monoid is not sys.monoid:
        raise ValueError(f"{what}: ideal and system live on different monoids")
    if not ideal_eq(close(sys, I), I):
        raise ValueError(f"{what}: ideal {I.gens} is not closed under {sys.label}")


def is_invertible(I: Ideal, sys: System) -> bool:
    """Whether close(sys, I + I^-1) is the unit ideal.

    I must be a nonempty sys-closed ideal.
    """
    if I.is_empty:
        raise ValueError("is_invertible: empty ideal")
    _require_closed(I, sys, "is_invertible")
    key = ("invertible", I.gens)
    hit = sys._cache.get(key)
    if hit is None:
        hit = ideal_eq(close(sys, ideal_sum(I, inverse(I))), unit_ideal(sys.monoid))
        sys._cache[key] = hit
    return hit


def cofactor(I: Ideal, J: Ideal, sys: System) -> Ideal:
    """The ideal B with close(sys, B + I) = J, valid when I divides J.

    This is close(sys, J + I^-1); tests play it against divides_in_invertibles.
    """
    return close(sys, ideal_sum(J, inverse(I)))


def divides_in_invertibles(I: Ideal, J: Ideal, sys: System) -> bool:
    """Divisibility of J by I inside the monoid of invertible closed ideals.

    Divisibility there is plain containment J subseteq I; both arguments must
    be invertible.
    """
    if not is_invertible(I, sys) or not is_invertible(J, sys):
        raise ValueError("divides_in_invertibles: non-invertible input")
    return ideal_subset(J, I)


def is_radical_in_invertibles(I: Ideal, sys: System) -> bool:
    """Radicality of an invertible ideal, as an element of the ideal monoid.

    Coincides with radical(I) = I; the element-wise divisor characterization
    is exercised separately by the tests.
    """
    if not is_invertible(I, sys):
        raise ValueError("is_radical_in_invertibles: non-invertible input")
    return ideal_eq(radical(I), I)


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _is_unit(H: MonoidModel, x) -> bool:
    return all(x[i] == 0 for i in H.counting)


def radical_factor_principal(H: MonoidModel, x) -> FactorChain | Failure:
    """Factor x + H into radical principal ideals, greedily.

    Each step takes the generator z of the (principal) radical of the current
    remainder and divides it out.  The iteration count is bounded by the least
    k with k*z_1 in x + H; hitting the bound flags an implementation bug.
    """
    x = tuple(int(c) for c in x)
    if not H.contains(x):
        raise ValueError(f"radical_factor_principal: {x} is not in {H.name}")
    target = principal(H, x)
    rem = x
    factors: list[Ideal] = []
    bound = None
    while not _is_unit(H, rem):
        rad = radical(principal(H, rem))
        if not rad.is_principal:
            return Failure("NonPrincipalRadical", witness=rad)
        z = rad.gens[0]
        factors.append(rad)
        rem = _vec_sub(rem, z)
        if bound is None:
            for k in range(1, _POWER_CAP + 1):
                if H.contains(_vec_sub(tuple(k * c for c in z), x)):
                    bound = k
                    break
            else:
                raise AssertionError("no power of the first radical generator reenters x + H")
        elif len(factors) > bound:
            return Failure("BoundExceeded", witness=principal(H, rem))
    from .systems import system

    return _chain(system("s", H), target, factors, require_comparable=True)


def sp_factor(I: Ideal, sys: System) -> FactorChain | Failure:
    """Factor a closed ideal into a comparable chain of radical closed ideals.

    Peels the radical off the front: the cofactor of R = radical(cur) is
    close(sys, cur + R^-1).  Fails when some radical along the way is not an
    invertible ideal of the system (including not being closed at all).
    """
    if I.is_empty:
        raise ValueError("sp_factor: empty ideal")
    _require_closed(I, sys, "sp_factor")
    unit = unit_ideal(sys.monoid)
    cur = I
    factors: list[Ideal] = []
    for _ in range(_POWER_CAP * 4):
        if ideal_eq(cur, unit):
            return _chain(sys, I, factors, require_comparable=True)
        rad = radical(cur)
        if not ideal_eq(close(sys, rad), rad):
            return Failure("RadicalNotInvertible", witness=rad)
        if not is_invertible(rad, sys):
            return Failure("RadicalNotInvertible", witness=rad)
        factors.append(rad)
        nxt = close(sys, ideal_sum(cur, inverse(rad)))
        if ideal_eq(nxt, cur):
            raise AssertionError("sp_factor cofactor did not advance")
        cur = nxt
    raise AssertionError("sp_factor did not terminate")


@dataclass(frozen=True)
class MeagerVerdict:
    """Per-prime bookkeeping for the meager-set condition.

    rows hold (face, k_P, contained): k_P members of the candidate set lie
    inside the height-one prime with that face, and the target must sit inside
    the k_P-th closed power of the prime.
    """

    meager: bool
    rows: tuple[tuple[tuple[int, ...], int, bool], ...]

    def __bool__(self) -> bool:
        return self.meager


def meager_check(members, I: Ideal, sys: System) -> MeagerVerdict:
    members = tuple(members)
    for J in members:
        _require_closed(J, sys, "meager_check")
    _require_closed(I, sys, "meager_check")
    rows = []
    ok = True
    for P in height_one(sys.monoid):
        k = sum(1 for J in members if ideal_subset(J, P.ideal))
        contained = k == 0 or ideal_subset(I, power_close(sys, P.ideal, k))
        rows.append((tuple(sorted(P.face)), k, contained))
        ok = ok and contained
    return MeagerVerdict(ok, tuple(rows))


def radical_closed_ideals(sys: System) -> tuple[Ideal, ...]:
    """All proper radical sys-closed ideals of the monoid, sorted by generators.

    Radical ideals are unions of support cells, hence indexed by antichains of
    nonempty subsets of the counting coordinates; the whole family is finite
    and independent of any radius.
    """
    key = "radical_closed"
    hit = sys._cache.get(key)
    if hit is not None:
        return hit
    H = sys.monoid
    supports = [frozenset(c) for c in _nonempty_subsets(H.counting)]
    antichains = [
        fam
        for fam in _subsets(supports)
        if fam and not any(a < b for a in fam for b in fam)
    ]
    out = []
    for fam in antichains:
        gens = []
        for S in fam:
            gens.extend(_cell_gens(H, S))
        J = ideal_from(gens, H)
        if not ideal_eq(radical(J), J):
            continue
        if ideal_eq(close(sys, J), J):
            out.append(J)
    out.sort(key=lambda J: J.gens)
    result = tuple(out)
    sys._cache[key] = result
    return result


def _nonempty_subsets(items):
    items = list(items)
    for r in range(1, len(items) + 1):
        yield from combinations(items, r)


def _subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from (set(c) for c in combinations(items, r))


def _cell_gens(H: MonoidModel, S):
    """Generators of {x : supp(x) contains S}: products of atoms over S."""
    gens = [(0,) * H.dim]
    for i in S:
        gens = [
            g[:i] + (a,) + g[i + 1 :] for g in gens for a in H.coords[i].atoms
        ]
    return gens


def _measure(I: Ideal, sys: System) -> int:
    """max k with I inside the k-th closed power of some height-one prime."""
    best = 0
    for P in height_one(sys.monoid):
        k = 0
        while k < _POWER_CAP and ideal_subset(I, power_close(sys, P.ideal, k + 1)):
            k += 1
        best = max(best, k)
    return best


def meager_factor(I: Ideal, sys: System) -> FactorChain | Failure:
    """Factor an invertible ideal by repeatedly peeling a meager set.

    At each step the radical of the current ideal must be an intersection of
    invertible radical closed ideals forming a meager set for it; the peel
    strictly decreases the prime-power measure, which is asserted.
    """
    if not is_invertible(I, sys):
        raise ValueError("meager_factor: input must be invertible")
    universe = [
        J
        for J in radical_closed_ideals(sys)
        if is_invertible(J, sys)
    ]
    unit = unit_ideal(sys.monoid)
    cur = I
    factors: list[Ideal] = []
    m_prev = _measure(cur, sys)
    while not ideal_eq(cur, unit):
        rad = radical(cur)
        omega = None
        for size in range(1, min(3, len(universe)) + 1):
            for combo in combinations(universe, size):
                meet = reduce(ideal_intersect, combo)
                if ideal_eq(meet, rad) and meager_check(combo, cur, sys).meager:
                    omega = combo
                    break
            if omega is not None:
                break
        if omega is None:
            return Failure("NoMeagerSet", witness=rad)
        for J in omega:
            factors.append(J)
            cur = close(sys, ideal_sum(cur, inverse(J)))
        m_now = _measure(cur, sys)
        if m_now >= m_prev:
            raise AssertionError("meager peel did not decrease the measure")
        m_prev = m_now
    return _chain(sys, I, factors, require_comparable=False)


def _radical_gen(H: MonoidModel, x) -> tuple[int, ...]:
    rad = radical(principal(H, x))
    if not rad.is_principal:
        raise PreconditionFailed(
            f"radical of {x} + H is not principal", witness=rad
        )
    return rad.gens[0]


def support_witness(I: Ideal):
    """A single element lying in exactly the height-one primes containing I.

    Requires radicals of principal ideals to be principal, which on these
    models means every counting coordinate has a single atom; that is checked
    up front.  The witness is folded pairwise over the generators: with
    a = gen(rad(x+y+H)), b = gen(rad(x+H)), c = gen(rad(y+H)) and
    d = gen(rad((a-b)+H) meet rad((a-c)+H)), the pair's witness is a - d.
    """
    H = I.monoid
    for i in H.counting:
        if len(H.coords[i].atoms) != 1:
            raise PreconditionFailed(
                f"coordinate {i} has a non-principal prime cell",
                witness=ideal_from(_cell_gens(H, (i,)), H),
            )
    if I.is_empty:
        raise ValueError("support_witness: empty ideal")

    def pair(x, y):
        a = _radical_gen(H, tuple(p + q for p, q in zip(x, y)))
        b = _radical_gen(H, x)
        c = _radical_gen(H, y)
        meet = ideal_intersect(
            radical(principal(H, _vec_sub(a, b))),
            radical(principal(H, _vec_sub(a, c))),
        )
        if not meet.is_principal:
            raise PreconditionFailed(
                "intersection of radicals is not principal", witness=meet
            )
        return _vec_sub(a, meet.gens[0])

    gens = I.gens
    wit = gens[0]
    for y in gens[1:]:
        wit = pair(wit, y)
    wit = _radical_gen(H, wit) if not _is_unit(H, wit) else (0,) * H.dim

    over_ideal = {P.face for P in height_one(H) if P.contains(I)}
    over_wit = {P.face for P in height_one(H) if P.ideal.contains_vec(wit)}
    if over_ideal != over_wit:
        raise AssertionError(
            f"support witness {wit} has primes {sorted(map(sorted, over_wit))}, "
            f"ideal has {sorted(map(sorted, over_ideal))}"
        )
    return wit


@dataclass(frozen=True)
class ClassGroupProbe:
    """Evidence about the class group gathered from a box enumeration.

    trivial means no non-principal invertible ideal was found within the
    radius; torsion lists non-principal invertibles whose k-th closed power
    is principal for some k up to the cap.
    """

    monoid: str
    system: str
    radius: int
    invertible_count: int
    principal_count: int
    nonprincipal: tuple[Ideal, ...]
    torsion: tuple[tuple[Ideal, int], ...]
    cap: int

    @property
    def trivial(self) -> bool:
        return not self.nonprincipal

    def to_json(self):
        return {
            "monoid": self.monoid,
            "system": self.system,
            "radius": self.radius,
            "invertible_count": self.invertible_count,
            "principal_count": self.principal_count,
            "trivial_within_radius": self.trivial,
            "nonprincipal": [J.to_json() for J in self.nonprincipal],
            "torsion": [
                {"ideal": J.to_json(), "k": k} for J, k in self.torsion
            ],
            "torsion_cap": self.cap,
        }


def class_group_probe(H: MonoidModel, sys: System, radius: int, cap: int = 4) -> ClassGroupProbe:
    """Enumerate closed invertible ideals in the box; report (non)principality
    and bounded torsion.  The class group itself is never materialized."""
    from .systems import closed_ideals

    invertible = []
    for I in closed_ideals(sys, radius):
        if I.is_empty:
            continue
        if is_invertible(I, sys):
            invertible.append(I)
    nonprincipal = tuple(I for I in invertible if not I.is_principal)
    torsion = []
    for J in nonprincipal:
        for k in range(2, cap + 1):
            if power_close(sys, J, k).is_principal:
                torsion.append((J, k))
                break
    return ClassGroupProbe(
        monoid=H.name,
        system=sys.label,
        radius=radius,
        invertible_count=len(invertible),
        principal_count=len(invertible) - len(nonprincipal),
        nonprincipal=nonprincipal,
        torsion=tuple(torsion),
        cap=cap,
    )
