"""Permutation groups acting on the parameter matrices c.

For zeta(3) the matrix has sixteen entries c_jk (row-major), for zeta(2) ten
entries: c00 first, then the 3x3 block.  A permutation is a tuple ``p`` of
positions and acts by ``(c . p)[i] = c[p[i]]``.  Words are read left to right:
the first letter is applied first.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .directions import Direction32, Direction33
from .exactnum import PRIMES, lcm_upto, legendre
from .forms import ConditionError, LinearForm, ParamSet32, ParamSet33, linear_form_z2, linear_form_z3

Perm = tuple[int, ...]


def _idx3(j: int, k: int) -> int:
    return 4 * (j - 1) + (k - 1)


def _idx2(j: int, k: int) -> int:
    return 0 if (j, k) == (0, 0) else 1 + 3 * (j - 1) + (k - 1)


LABELS = {
    "z3": [(j, k) for j in range(1, 5) for k in range(1, 5)],
    "z2": [(0, 0)] + [(j, k) for j in range(1, 4) for k in range(1, 4)],
}

# positions entering the factorial product Pi(c)
PI_POSITIONS = {
    "z3": [_idx3(*jk) for jk in [(2, 1), (3, 1), (4, 1), (1, 2), (3, 2), (4, 2), (3, 3), (4, 4)]],
    "z2": [_idx2(*jk) for jk in [(0, 0), (2, 1), (3, 1), (2, 2), (3, 3)]],
}


@dataclass(frozen=True)
class CMatrix:
    kind: str
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) != len(LABELS[self.kind]):
            raise ValueError(f"{self.kind} matrix needs {len(LABELS[self.kind])} entries")

    def __getitem__(self, jk: tuple[int, int]) -> int:
        idx = _idx3(*jk) if self.kind == "z3" else _idx2(*jk)
        return self.entries[idx]

    @property
    def admissible(self) -> bool:
        return all(x > 0 for x in self.entries)

    def act(self, p: Perm) -> "CMatrix":
        return CMatrix(self.kind, tuple(self.entries[i] for i in p))

    def scaled(self, n: int) -> "CMatrix":
        return CMatrix(self.kind, tuple(n * x for x in self.entries))

    def rows(self) -> list[tuple[int, ...]]:
        e = self.entries
        if self.kind == "z3":
            return [e[4 * i : 4 * i + 4] for i in range(4)]
        return [(e[0],)] + [e[1 + 3 * i : 4 + 3 * i] for i in range(3)]

    def pi_entries(self) -> list[int]:
        return [self.entries[i] for i in PI_POSITIONS[self.kind]]

    def pi(self) -> int:
        return math.prod(math.factorial(x) for x in self.pi_entries())

    def m_values(self) -> tuple[int, int, int, int]:
        return direction_from_c(self).m_values()

    def __str__(self):
        return " / ".join(" ".join(map(str, r)) for r in self.rows())


# --- c-matrices from parameters and back -----------------------------------


def _entry(a: int, b: int, lower: bool) -> int:
    """a - b for the first columns, b - a - 1 otherwise."""
    return a - b if a >= b else b - a - 1


def c_from_ab(p) -> CMatrix:
    """Matrix of a parameter set (shifted differences) or a direction."""
    if isinstance(p, ParamSet33):
        return CMatrix("z3", tuple(x - y if x >= y else y - x - 1 for x in p.a for y in p.b))
    if isinstance(p, ParamSet32):
        c00 = sum(p.b) - sum(p.a) - 2
        return CMatrix("z2", (c00,) + tuple(x - y if x >= y else y - x - 1 for x in p.a for y in p.b))
    if isinstance(p, Direction33):
        return CMatrix("z3", tuple(abs(x - y) for x in p.alpha for y in p.beta))
    if isinstance(p, Direction32):
        c00 = sum(p.beta) - sum(p.alpha)
        return CMatrix("z2", (c00,) + tuple(abs(x - y) for x in p.alpha for y in p.beta))
    raise TypeError(f"cannot build a c-matrix from {type(p).__name__}")


c_from_direction = c_from_ab


def _check_consistent(vals, what):
    if len(set(vals)) != 1:
        raise ConditionError("inconsistent matrix", f"{what} differs between rows")
    return vals[0]


def direction_from_c(c: CMatrix):
    """Direction (alpha in row order, beta in column order) with beta1 = 0."""
    r = c.rows()
    if c.kind == "z3":
        alpha = [row[0] for row in r]
        b2 = _check_consistent([al - row[1] for al, row in zip(alpha, r)], "beta2")
        b3 = _check_consistent([al + row[2] for al, row in zip(alpha, r)], "beta3")
        b4 = _check_consistent([al + row[3] for al, row in zip(alpha, r)], "beta4")
        return Direction33(tuple(alpha), (0, b2, b3, b4))
    rows = r[1:]
    alpha = [row[0] for row in rows]
    b2 = _check_consistent([al + row[1] for al, row in zip(alpha, rows)], "beta2")
    b3 = _check_consistent([al + row[2] for al, row in zip(alpha, rows)], "beta3")
    d = Direction32(tuple(alpha), (0, b2, b3))
    if sum(d.beta) - sum(d.alpha) != r[0][0]:
        raise ConditionError("inconsistent matrix", "c00 does not match the other entries")
    return d


def ab_from_c(c: CMatrix):
    """Parameter set with b1 = 1 whose shifted-difference matrix is c."""
    r = c.rows()
    if c.kind == "z3":
        a = [row[0] + 1 for row in r]
        b2 = _check_consistent([x - row[1] for x, row in zip(a, r)], "b2")
        b3 = _check_consistent([x + row[2] + 1 for x, row in zip(a, r)], "b3")
        b4 = _check_consistent([x + row[3] + 1 for x, row in zip(a, r)], "b4")
        return ParamSet33(tuple(a), (1, b2, b3, b4))
    rows = r[1:]
    a = [row[0] + 1 for row in rows]
    b2 = _check_consistent([x + row[1] + 1 for x, row in zip(a, rows)], "b2")
    b3 = _check_consistent([x + row[2] + 1 for x, row in zip(a, rows)], "b3")
    p = ParamSet32(tuple(a), (1, b2, b3))
    if sum(p.b) - sum(p.a) - 2 != r[0][0]:
        raise ConditionError("inconsistent matrix", "c00 does not match the other entries")
    return p


# --- permutations and groups -----------------------------------------------


def compose(p: Perm, q: Perm) -> Perm:
    """p followed by q."""
    return tuple(p[i] for i in q)


def identity(size: int) -> Perm:
    return tuple(range(size))


def transposition_product(size: int, pairs: Sequence[tuple[int, int]]) -> Perm:
    p = list(range(size))
    for i, j in pairs:
        p[i], p[j] = p[j], p[i]
    return tuple(p)


def _row_swap3(j: int, k: int) -> list[tuple[int, int]]:
    return [(_idx3(j, m), _idx3(k, m)) for m in range(1, 5)]


def _col_swap3(j: int, k: int) -> list[tuple[int, int]]:
    return [(_idx3(m, j), _idx3(m, k)) for m in range(1, 5)]


def _row_swap2(j: int, k: int) -> list[tuple[int, int]]:
    return [(_idx2(j, m), _idx2(k, m)) for m in range(1, 4)]


def _col_swap2(j: int, k: int) -> list[tuple[int, int]]:
    return [(_idx2(m, j), _idx2(m, k)) for m in range(1, 4)]


def generators(kind: str) -> dict[str, Perm]:
    if kind == "z3":
        h = [(_idx3(1, 1), _idx3(3, 3)), (_idx3(1, 3), _idx3(3, 1)), (_idx3(2, 2), _idx3(4, 4)), (_idx3(2, 4), _idx3(4, 2))]
        return {
            "a1": transposition_product(16, _row_swap3(1, 4)),
            "a2": transposition_product(16, _row_swap3(2, 4)),
            "a3": transposition_product(16, _row_swap3(3, 4)),
            "b": transposition_product(16, _col_swap3(3, 4)),
            "h": transposition_product(16, h),
        }
    if kind == "z2":
        h = [(_idx2(0, 0), _idx2(2, 2)), (_idx2(1, 1), _idx2(3, 3)), (_idx2(1, 3), _idx2(3, 1))]
        return {
            "a1": transposition_product(10, _row_swap2(1, 3)),
            "a2": transposition_product(10, _row_swap2(2, 3)),
            "b": transposition_product(10, _col_swap2(2, 3)),
            "h": transposition_product(10, h),
        }
    raise ValueError(f"unknown group kind {kind!r}")


def word_to_perm(kind: str, word: Sequence[str]) -> Perm:
    gens = generators(kind)
    p = identity(len(LABELS[kind]))
    for g in word:
        p = compose(p, gens[g])
    return p


def parse_word(text: str) -> tuple[str, ...]:
    """'a1a2a3h' -> ('a1', 'a2', 'a3', 'h'); 'id' -> ()."""
    text = text.replace(" ", "")
    if text in ("", "id"):
        return ()
    out, i = [], 0
    while i < len(text):
        if text[i] == "a":
            out.append(text[i : i + 2])
            i += 2
        else:
            out.append(text[i])
            i += 1
    return tuple(out)


@dataclass
class Group:
    kind: str
    words: dict[Perm, tuple[str, ...]]  # shortest, then lexicographically first

    @property
    def order(self) -> int:
        return len(self.words)

    @property
    def elements(self) -> list[Perm]:
        return list(self.words)

    def word(self, p: Perm) -> tuple[str, ...]:
        return self.words[p]


def closure(kind: str, gens: dict[str, Perm]) -> Group:
    """Breadth-first closure; the first word found for an element is the
    shortest one and, among those, the lexicographically smallest."""
    size = len(LABELS[kind])
    start = identity(size)
    words = {start: ()}
    frontier = deque([start])
    names = sorted(gens)
    while frontier:
        p = frontier.popleft()
        for name in names:
            q = compose(p, gens[name])
            if q not in words:
                words[q] = words[p] + (name,)
                frontier.append(q)
    return Group(kind, words)


@lru_cache(maxsize=None)
def enumerate_group(kind: str) -> Group:
    return closure(kind, generators(kind))


def subgroup_perms(kind: str, name: str) -> set[Perm]:
    """Named subgroups: G1 (parameter-trivial) and G0 (acts trivially on H)."""
    if kind == "z3":
        rows = [transposition_product(16, _row_swap3(j, k)) for j, k in [(1, 2), (2, 3), (3, 4)]]
        b12 = transposition_product(16, _col_swap3(1, 2))
        b34 = transposition_product(16, _col_swap3(3, 4))
        if name == "G1":
            gens = rows + [b12, b34]
        elif name == "G0":
            gens = [compose(rows[0], b12), compose(rows[2], b34)]
        else:
            raise ValueError(name)
    else:
        a23 = transposition_product(10, _row_swap2(2, 3))
        b23 = transposition_product(10, _col_swap2(2, 3))
        if name == "G1":
            gens = [transposition_product(10, _row_swap2(1, 2)), a23, b23]
        elif name == "G0":
            gens = [compose(a23, b23)]
        else:
            raise ValueError(name)
    return set(closure(kind, {f"g{i}": g for i, g in enumerate(gens)}).words)


def left_coset_reps(kind: str, sub: set[Perm], within: set[Perm] | None = None) -> list[tuple[str, ...]]:
    """Representative words of the cosets q*H (q first, then H).

    Each coset is represented by its element with the shortest word, ties
    broken lexicographically; the list is sorted the same way.
    """
    G = enumerate_group(kind)
    pool = within if within is not None else set(G.words)
    seen: set[Perm] = set()
    reps = []
    for p in sorted(pool, key=lambda x: (len(G.words[x]), G.words[x])):
        if p in seen:
            continue
        coset = {compose(p, h) for h in sub}
        seen |= coset
        reps.append(G.words[p])
    return reps


# the 20 representatives as printed in the original table
PRINTED_COSET_WORDS = [
    "id", "a1a2a3h", "a1h", "a2a1h", "h", "ha1a2a3h", "a2a3h", "a3h", "ha3bh", "a1a2ha1a2bh",
    "a2ha3a2bh", "bh", "a2a3bh", "a3bh", "a1a2a3bh", "a1bh", "a2a1bh", "a2ha1a2bh", "a3ha1bh", "ha1bh",
]


@lru_cache(maxsize=None)
def coset_reps_z3() -> tuple[tuple[str, ...], ...]:
    """Shortest words for the 20 cosets q*G1 of the zeta(3) group."""
    return tuple(left_coset_reps("z3", subgroup_perms("z3", "G1")))


@lru_cache(maxsize=None)
def _m_reps(kind: str, mode: str) -> tuple[tuple[str, ...], ...]:
    G0 = subgroup_perms(kind, "G0")
    within = subgroup_perms(kind, "G1") if mode == "hata" else None
    return tuple(left_coset_reps(kind, G0, within))


# --- orbits ------------------------------------------------------------------


@dataclass
class Orbit:
    base: CMatrix
    elements: list[CMatrix]  # distinct images over the cosets of G0
    coset_words: list[tuple[str, ...]]
    collections: list  # normalized directions, one per coset of G1 (M0)
    mode: str = "full"

    def characteristics(self) -> list[tuple[int, int, int, int]]:
        return [c.m_values() for c in self.elements]


@lru_cache(maxsize=None)
def _rep_perms(kind: str, mode: str) -> tuple[tuple[tuple[str, ...], ...], tuple[Perm, ...]]:
    words = _m_reps(kind, mode)
    return words, tuple(word_to_perm(kind, w) for w in words)


@lru_cache(maxsize=None)
def _collection_perms(kind: str, mode: str) -> tuple[Perm, ...]:
    if mode == "hata":
        return (identity(len(LABELS[kind])),)
    if kind == "z3":
        words = coset_reps_z3()
    else:
        words = tuple(left_coset_reps(kind, subgroup_perms(kind, "G1")))
    return tuple(word_to_perm(kind, w) for w in words)


def orbit_M(c: CMatrix, mode: str = "full") -> Orbit:
    """The sets M (images mod G0) and M0 (normalized images mod G1).

    ``mode='hata'`` restricts the group to the parameter-trivial part G1.
    """
    words, perms = _rep_perms(c.kind, mode)
    images = dict.fromkeys(c.act(p) for p in perms)
    collections = []
    for p in _collection_perms(c.kind, mode):
        d = direction_from_c(c.act(p)).normalized()
        if d not in collections:
            collections.append(d)
    return Orbit(c, list(images), list(words), collections, mode)


# --- arithmetic exponents ----------------------------------------------------


def nu_p(c: CMatrix, n: int, p: int, orbit: Orbit | None = None) -> int:
    """max over c' in M of ord_p(Pi(cn) / Pi(c'n)), by Legendre's formula."""
    orbit = orbit or orbit_M(c)
    base = sum(legendre(n * x, p) for x in c.pi_entries())
    return max(base - sum(legendre(n * x, p) for x in cp.pi_entries()) for cp in orbit.elements)


def phi_n(c: CMatrix, n: int, orbit: Orbit | None = None) -> int:
    """Product of p^nu_p over primes sqrt(m0 n) < p <= m3 n."""
    orbit = orbit or orbit_M(c)
    m0, _, _, m3 = c.m_values()
    out = 1
    for p in PRIMES.between(math.sqrt(m0 * n), m3 * n):
        out *= p ** nu_p(c, n, p, orbit)
    return out


def form_of(c: CMatrix) -> LinearForm:
    """H(c) = G(a, b) for the parameters encoded by c."""
    p = ab_from_c(c)
    return linear_form_z3(p) if c.kind == "z3" else linear_form_z2(p)


def check_stability(c: CMatrix, n: int = 1, words=None) -> bool:
    """H(c'n)/Pi(c'n) = H(cn)/Pi(cn) for every c' in M (or the given words)."""
    cn = c.scaled(n)
    ref = form_of(cn).scaled(Fraction(1, cn.pi()))
    if words is None:
        images = orbit_M(c).elements
    else:
        images = [c.act(word_to_perm(c.kind, w)) for w in words]
    for cp in images:
        cpn = cp.scaled(n)
        if form_of(cpn).scaled(Fraction(1, cpn.pi())) != ref:
            return False
    return True


def check_reduced_denominators(c: CMatrix, n: int, orbit: Orbit | None = None) -> bool:
    """D^2_{m1 n} D_{m2 n} Phi_n^-1 H(cn) in 2Z zeta(3) + Z (or Z zeta(2) + Z)."""
    orbit = orbit or orbit_M(c)
    _, m1, m2, _ = c.m_values()
    form = form_of(c.scaled(n))
    D1 = lcm_upto(m1 * n)
    D2 = lcm_upto(m2 * n)
    mult = Fraction(D1 * D1 * D2 if c.kind == "z3" else D1 * D2, phi_n(c, n, orbit))
    if c.kind == "z3":
        return (form[3] / 2 * mult).denominator == 1 and (form[0] * mult).denominator == 1
    return form.is_integral(mult)


check_lemma10 = check_reduced_denominators
