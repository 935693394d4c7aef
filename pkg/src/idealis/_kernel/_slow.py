"""Pure-Python reference kernel.

Every routine here operates on a *pack*, the flat description of a finite
product of one-dimensional coordinate monoids:

    pack = (kinds, conds, frobs, n1s, tables, atoms)

    kinds  -- 0 for a counting coordinate (numerical or free), 1 for a group
    conds  -- conductor: least c with [c, oo) contained in the coordinate
              monoid (0 for free and group coordinates)
    frobs  -- Frobenius number, -1 when the coordinate is free or a group
    n1s    -- least nonzero member of a counting coordinate, 1 for groups
    tables -- per-coordinate bytes of length conds[i]; tables[i][x] is 1
              iff x is a member below the conductor
    atoms  -- per-coordinate tuple of irreducible members, () for groups

Generator lists are tuples of int tuples.  Canonical generator lists are
antichains under componentwise divisibility, sorted lexicographically, with
group coordinates already normalised to zero by the caller; ``reduce_gens``
relies on that normalisation (divisibility then forces lexicographic order,
so a single backward check suffices).

The compiled kernel in ``_fast.pyx`` mirrors this module function for
function and must stay behaviourally identical; ``tests/test_kernel_parity``
pins that down.
"""

from itertools import product

IMPL = "slow"


class BudgetExceeded(Exception):
    """Raised when a closure would enumerate more choice functions than allowed."""


def member1(pack, i, x):
    """Is ``x`` a member of the i-th coordinate monoid?"""
    if pack[0][i]:
        return True
    if x < 0:
        return False
    if x >= pack[1][i]:
        return True
    return pack[4][i][x] == 1


def contains(pack, v):
    """Is the vector ``v`` a member of the product monoid?"""
    for i, x in enumerate(v):
        if not member1(pack, i, x):
            return False
    return True


def divides(pack, a, b):
    """Does ``a`` divide ``b``, i.e. is ``b - a`` a member?"""
    for i in range(len(a)):
        if not member1(pack, i, b[i] - a[i]):
            return False
    return True


def divisible_any(pack, v, gens):
    """Is ``v`` in the module generated by ``gens``?"""
    for g in gens:
        if divides(pack, g, v):
            return True
    return False


def reduce_gens(pack, gens):
    """Canonicalise a generator list: dedupe, drop dominated, sort lex.

    Assumes group coordinates are zeroed in every generator, so a kept
    generator can never be dominated by a later candidate.
    """
    out = []
    for g in sorted(set(gens)):
        if not divisible_any(pack, g, out):
            out.append(g)
    return tuple(out)


def module_gens_1d(pack, i, shifts):
    """Generators over the i-th coordinate of {z : z + s is a member for all s}.

    ``shifts`` must be nonempty.  For a group coordinate the module is the
    whole group, generated by 0.  Otherwise the least member m lies in
    [-min(shifts), conds[i] - min(shifts)] and every generator lies in
    [m, m + frobs[i]]: past the Frobenius window each candidate is m plus a
    member, hence redundant.
    """
    if pack[0][i]:
        return (0,)
    lo = -min(shifts)
    z = lo
    while True:
        for s in shifts:
            if not member1(pack, i, z + s):
                break
        else:
            break
        z += 1
    out = [z]
    f = pack[2][i]
    for c in range(z + 1, z + f + 1):
        ok = True
        for s in shifts:
            if not member1(pack, i, c + s):
                ok = False
                break
        if not ok:
            continue
        red = False
        for g in out:
            if member1(pack, i, c - g):
                red = True
                break
        if not red:
            out.append(c)
    return tuple(out)


def inverse_gens(pack, gens):
    """Generators of {z : z + a is a member for every a in gens}.

    Empty input means the empty ideal; its inverse is not finitely
    generated as a module and the caller must special-case it.
    """
    if not gens:
        raise ValueError("inverse of the empty module")
    d = len(pack[0])
    cols = [module_gens_1d(pack, i, tuple(a[i] for a in gens)) for i in range(d)]
    return reduce_gens(pack, product(*cols))


def v_close_gens(pack, gens):
    """Divisorial closure: inverse of the inverse.  Empty stays empty."""
    if not gens:
        return ()
    return inverse_gens(pack, inverse_gens(pack, gens))


def sum_gens(pack, a_gens, b_gens):
    """Generators of the sum module {a + b}."""
    return reduce_gens(pack, tuple(
        tuple(x + y for x, y in zip(a, b)) for a in a_gens for b in b_gens))


def intersect_gens(pack, a_gens, b_gens):
    """Generators of the intersection of two finitely generated modules.

    Pairwise: (a + H) cap (b + H) has, in each coordinate, the module of z
    with z - a_i and z - b_i both members.
    """
    if not a_gens or not b_gens:
        return ()
    d = len(pack[0])
    acc = []
    for a in a_gens:
        for b in b_gens:
            cols = [module_gens_1d(pack, i, (-a[i], -b[i])) for i in range(d)]
            acc.extend(product(*cols))
    return reduce_gens(pack, acc)


def radical_gens(pack, gens):
    """Radical of an integral ideal via the support criterion.

    x lies in the radical iff x strictly exceeds zero on the counting
    support of some generator; the radical is the union of the support
    cells of the minimal supports, each generated by a cartesian product
    of atoms.
    """
    if not gens:
        return ()
    d = len(pack[0])
    supps = set()
    for a in gens:
        supps.add(frozenset(i for i in range(d) if pack[0][i] == 0 and a[i] > 0))
    mins = [s for s in supps if not any(t < s for t in supps)]
    acc = []
    for s in mins:
        cols = [pack[5][i] if i in s else (0,) for i in range(d)]
        acc.extend(product(*cols))
    return reduce_gens(pack, acc)


def box_members(pack, lo, hi):
    """Members of the monoid inside the coordinate box, in lex order."""
    cols = []
    for i in range(len(pack[0])):
        if pack[0][i]:
            cols.append(tuple(range(lo[i], hi[i] + 1)))
        else:
            cols.append(tuple(
                x for x in range(max(lo[i], 0), hi[i] + 1) if member1(pack, i, x)))
    return [v for v in product(*cols)]


def modular_close_gens(pack, gens, faces, budget=0):
    """Intersection of the face-localised copies of the module.

    ``faces`` lists, for each maximal ideal of the target system, the set of
    counting coordinates inverted in the localisation (group coordinates are
    implicitly inverted everywhere).  An element z lies in the closure iff
    for every face there is a generator a with z - a a member on every
    coordinate outside the face; running over choice functions phi of
    generators per face turns this into a finite intersection of shifted
    coordinate modules.

    ``budget`` > 0 caps the number of choice functions.
    """
    if not gens:
        return ()
    d = len(pack[0])
    if not faces:
        return (tuple([0] * d),)
    n = len(gens)
    k = len(faces)
    if budget > 0 and n ** k > budget:
        raise BudgetExceeded(f"{n}^{k} choice functions")
    acc = []
    for phi in product(range(n), repeat=k):
        cols = []
        for i in range(d):
            if pack[0][i]:
                cols.append((0,))
                continue
            shifts = tuple(-gens[phi[j]][i] for j in range(k) if i not in faces[j])
            if not shifts:
                raise ValueError(f"coordinate {i} inverted in every face")
            cols.append(module_gens_1d(pack, i, shifts))
        acc.extend(product(*cols))
    return reduce_gens(pack, acc)


def primary_violation(pack, members, gens_i, gens_rad):
    """First (x, y) in lex scan with x + y in I, y outside rad, x outside I.

    With gens_rad equal to gens_i this is a primality violation finder.
    Returns None when the box holds no counterexample.
    """
    for x in members:
        if divisible_any(pack, x, gens_i):
            continue
        for y in members:
            if divisible_any(pack, y, gens_rad):
                continue
            s = tuple(a + b for a, b in zip(x, y))
            if divisible_any(pack, s, gens_i):
                return (x, y)
    return None
