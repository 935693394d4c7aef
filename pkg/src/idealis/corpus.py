"""Built-in corpus: named desk models plus an exhaustively generated family.

The family is every numerical semigroup with Frobenius number at most 15,
enumerated from candidate gap sets (the Frobenius number itself plus any
subset of [1, f-1] whose complement is closed under addition).  Entry order
is deterministic: named members first, then the family by Frobenius number
and lexicographic gap set.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .monoid import (MonoidModel, free_monoid, group_monoid, numerical_monoid,
                     product, to_text)

FAMILIES = ("named", "frobenius15")

MAX_FROBENIUS = 15


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    family: str
    model: MonoidModel
    note: str = ""


def _named() -> list:
    entries = []

    def add(model, note=""):
        entries.append(CorpusEntry(model.name, "named", model, note))

    add(free_monoid("n1", 1), "factorial")
    add(free_monoid("n2", 2), "factorial")
    add(free_monoid("n3", 3), "factorial")
    add(numerical_monoid("gap23", (2, 3)))
    add(numerical_monoid("n345", (3, 4, 5)))
    add(numerical_monoid("n25", (2, 5)))
    add(numerical_monoid("n357", (3, 5, 7)))
    add(product("g23xn", numerical_monoid("a", (2, 3)), free_monoid("b", 1)))
    add(product("g23x25", numerical_monoid("a", (2, 3)),
                numerical_monoid("b", (2, 5))))
    add(product("g23xz", numerical_monoid("a", (2, 3)), group_monoid("b", 1)))
    add(product("nxz", free_monoid("a", 1), group_monoid("b", 1)))
    add(group_monoid("z1", 1), "group")
    add(group_monoid("z2", 2), "group")
    add(MonoidModel("affine1", affine_gens=[(2, 0), (1, 1), (0, 2)]),
        "experimental, uncertified")
    return entries


def gap_sets(f: int):
    """All gap sets of numerical semigroups with Frobenius number exactly f.

    A candidate is {f} plus a subset of [1, f-1]; it qualifies iff the
    complement is closed under addition, which only sums up to f can break.
    """
    smalls = range(1, f)
    for bits in range(1 << (f - 1)):
        gaps = {f}
        gaps.update(x for i, x in enumerate(smalls) if bits >> i & 1)
        member = [x not in gaps for x in range(f + 1)]
        ok = True
        for a in range(1, f // 2 + 1):
            if not member[a]:
                continue
            if any(member[b] and not member[a + b]
                   for b in range(a, f + 1 - a)):
                ok = False
                break
        if ok:
            yield tuple(sorted(gaps))


def _gens_from_gaps(f: int, gaps: tuple) -> tuple:
    gapset = set(gaps)
    top = 2 * f + 2
    members = [x for x in range(1, top + 1) if x > f or x not in gapset]
    inside = set(members)
    return tuple(x for x in members
                 if not any(0 < y < x and x - y in inside for y in members))


def _frobenius_family() -> list:
    entries = []
    for f in range(1, MAX_FROBENIUS + 1):
        for idx, gaps in enumerate(sorted(gap_sets(f))):
            name = f"num_f{f}_{idx:03d}"
            gens = _gens_from_gaps(f, gaps)
            entries.append(CorpusEntry(name, "frobenius15",
                                       numerical_monoid(name, gens),
                                       f"gaps {' '.join(map(str, gaps))}"))
    return entries


def members(family: str | None = None) -> list:
    """Corpus entries, named members first; filter by family name if given."""
    if family is not None and family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    out = []
    if family in (None, "named"):
        out.extend(_named())
    if family in (None, "frobenius15"):
        out.extend(_frobenius_family())
    return out


def build(dest: Path, family: str | None = None) -> list:
    """Write one .spec file per entry into dest; returns the paths written."""
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in members(family):
        path = dest / f"{entry.name}.spec"
        path.write_text(to_text(entry.model))
        paths.append(path)
    return paths
