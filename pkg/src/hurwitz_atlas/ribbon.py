"""Ribbon graphs as dart permutations, their coverings, and Wick gluing counts.

Edge ``i`` carries the darts ``i`` and ``-i``.  A graph is given by its face
permutation ``phi`` (cycles of darts read around each face); the edge
involution is ``alpha(x) = -x`` and the vertex (star) permutation is
``sigma = alpha o phi``.

Coverings of degree ``d`` live on dart copies ``(x, a)`` with sheet
``a`` in ``0..d-1``.  Copies are flattened dart-major, sheet-minor, with the
darts in the order ``1, -1, 2, -2, ..., n, -n``:

    index(x, a) = (2 (|x| - 1) + [x < 0]) * d + a
"""

from __future__ import annotations

import itertools
import math
import os
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .core import (
    Partition,
    ResourceLimitError,
    cycles,
    is_permutation,
    representative,
    z_of,
)

DEFAULT_BUDGET = int(float(os.environ.get("HZ_BUDGET", "1e8")))


class ConventionError(AssertionError):
    """An internal invariant of the covering construction failed."""


def dart_order(n: int) -> list[int]:
    return [x for i in range(1, n + 1) for x in (i, -i)]


def dart_index(x: int) -> int:
    return 2 * (abs(x) - 1) + (x < 0)


def _cycles_of(perm: dict, order: Sequence[int]) -> tuple:
    seen, out = set(), []
    for start in order:
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return tuple(out)


def parse_faces(text: str) -> list[tuple]:
    """``"(1,2,-1,-2)"`` or ``"(1) (-1)"`` -> list of signed-label cycles."""
    stripped = text.strip()
    found = re.findall(r"\(([^()]*)\)", stripped)
    if not found or re.sub(r"\(([^()]*)\)", "", stripped).strip():
        raise ValueError(f"cannot parse face cycles {text!r}")
    out = []
    for body in found:
        try:
            out.append(tuple(int(tok) for tok in body.split(",")))
        except ValueError:
            raise ValueError(f"cannot parse face cycle ({body})") from None
    return out


def format_cycles(cycs: Iterable[Sequence[int]]) -> str:
    return " ".join("(" + ",".join(map(str, c)) + ")" for c in cycs)


@dataclass(frozen=True)
class RibbonGraph:
    n: int
    faces: tuple

    def __post_init__(self):
        faces = tuple(tuple(int(x) for x in f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        labels = [x for f in faces for x in f]
        expected = set(dart_order(self.n))
        if any(not f for f in faces):
            raise ValueError("empty face cycle")
        if len(labels) != len(set(labels)) or set(labels) != expected:
            missing = sorted(expected - set(labels))
            dup = sorted(x for x, c in Counter(labels).items() if c > 1)
            extra = sorted(set(labels) - expected)
            raise ValueError(f"face cycles must partition the darts: missing {missing}, duplicated {dup}, unknown {extra}")

    @cached_property
    def phi(self) -> dict:
        out = {}
        for f in self.faces:
            for a, b in zip(f, f[1:] + f[:1]):
                out[a] = b
        return out

    @cached_property
    def alpha(self) -> dict:
        return {x: -x for x in dart_order(self.n)}

    @cached_property
    def sigma(self) -> dict:
        return {x: self.alpha[self.phi[x]] for x in dart_order(self.n)}

    @cached_property
    def stars(self) -> tuple:
        """Vertex cycles, each starting at its first dart in dart order."""
        return _cycles_of(self.sigma, dart_order(self.n))

    @property
    def V(self) -> int:
        return len(self.stars)

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def euler_char(self) -> int:
        return self.V - self.n + self.F

    def is_connected(self) -> bool:
        darts = dart_order(self.n)
        seen, todo = {darts[0]}, [darts[0]]
        while todo:
            x = todo.pop()
            for y in (self.phi[x], -x):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(darts)

    def map_identity_holds(self) -> bool:
        """alpha o phi = sigma, checked against the cycles actually stored."""
        from_stars = {}
        for s in self.stars:
            for a, b in zip(s, s[1:] + s[:1]):
                from_stars[a] = b
        return all(self.alpha[self.phi[x]] == from_stars[x] for x in dart_order(self.n))

    def face_cycles_text(self) -> str:
        return format_cycles(self.faces)


def from_faces(n: int, face_cycles: Sequence[Sequence[int]]) -> RibbonGraph:
    return RibbonGraph(n, tuple(tuple(f) for f in face_cycles))


def from_face_text(text: str) -> RibbonGraph:
    faces = parse_faces(text)
    n = max((abs(x) for f in faces for x in f), default=0)
    return from_faces(n, faces)


def all_face_systems(n: int, connected: bool = True) -> Iterator[RibbonGraph]:
    """Every face permutation on the 2n darts (optionally only connected maps)."""
    darts = dart_order(n)
    for images in itertools.permutations(darts):
        perm = dict(zip(darts, images))
        g = RibbonGraph(n, _cycles_of(perm, darts))
        if not connected or g.is_connected():
            yield g


# -- words and the T involutions -------------------------------------------


def canonical_word(word: Sequence[int]) -> tuple:
    """Rotation of a cyclic word starting at its earliest label in dart order."""
    word = tuple(word)
    if not word:
        return word
    k = min(range(len(word)), key=lambda j: dart_index(word[j]))
    return word[k:] + word[:k]


def canonical_system(words: Iterable[Sequence[int]]) -> tuple:
    return tuple(sorted((canonical_word(w) for w in words), key=lambda w: dart_index(w[0])))


def _rotate_to(word: tuple, label: int) -> tuple:
    k = word.index(label)
    return word[k:] + word[:k]


def t_involution(words: Sequence[Sequence[int]], i: int) -> list[tuple]:
    """Cut or join at edge ``i``.

    If ``i`` and ``-i`` share a word ``C_i X C_-i Y`` it splits into ``C_i X``
    and ``C_-i Y``; if they sit in two words ``C_i X`` and ``C_-i Y`` those are
    joined into ``C_i X C_-i Y``.
    """
    words = [tuple(w) for w in words]
    i = abs(i)
    flat = [x for w in words for x in w]
    if flat.count(i) != 1 or flat.count(-i) != 1:
        raise ValueError(f"labels {i} and {-i} must each occur exactly once")
    wi = next(k for k, w in enumerate(words) if i in w)
    wj = next(k for k, w in enumerate(words) if -i in w)
    rest = [w for k, w in enumerate(words) if k not in (wi, wj)]
    if wi == wj:
        w = _rotate_to(words[wi], i)
        cut = w.index(-i)
        return rest + [w[:cut], w[cut:]]
    return rest + [_rotate_to(words[wi], i) + _rotate_to(words[wj], -i)]


def apply_all_t(words: Sequence[Sequence[int]], n: int, order: Optional[Sequence[int]] = None) -> list[tuple]:
    for i in order if order is not None else range(1, n + 1):
        words = t_involution(words, i)
    return list(words)


@dataclass(frozen=True)
class DualWords:
    face_words: tuple
    star_words: tuple


def dual_words(g: RibbonGraph) -> DualWords:
    """Face and star words of ``g``; both directions of the T transform are checked."""
    faces = canonical_system(g.faces)
    stars = canonical_system(g.stars)
    if canonical_system(apply_all_t(faces, g.n)) != stars:
        raise ConventionError(f"T-product of faces {faces} does not give stars {stars}")
    if canonical_system(apply_all_t(stars, g.n)) != faces:
        raise ConventionError(f"T-product of stars {stars} does not give faces {faces}")
    return DualWords(faces, stars)


# -- coverings ---------------------------------------------------------------


@dataclass(frozen=True)
class CoveringAssignment:
    graph: RibbonGraph
    degree: int
    perms: tuple  # one permutation of 0..d-1 per edge

    def __post_init__(self):
        perms = tuple(tuple(p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        if len(perms) != self.graph.n:
            raise ValueError(f"need {self.graph.n} edge permutations, got {len(perms)}")
        for p in perms:
            if len(p) != self.degree or not is_permutation(p):
                raise ValueError(f"{p} is not a permutation of {self.degree} sheets")


def copy_index(x: int, a: int, d: int) -> int:
    return dart_index(x) * d + a


def gluing_permutation(c: CoveringAssignment) -> tuple:
    """The gluing involution: copy (i, a) is paired with copy (-i, w_i(a))."""
    d = c.degree
    img = [0] * (2 * c.graph.n * d)
    for i, w in enumerate(c.perms, start=1):
        for a in range(d):
            p, q = copy_index(i, a, d), copy_index(-i, w[a], d)
            img[p], img[q] = q, p
    return tuple(img)


def lifted_faces(g: RibbonGraph, d: int, face_profiles: Optional[Sequence[Sequence[int]]] = None) -> tuple:
    """Face permutation on dart copies.

    Without profiles every face lifts to d parallel copies.  With a profile
    per face, closing the face moves sheets by a fixed permutation of that
    cycle type, so the copies of face ``i`` form cycles of lengths
    ``k_i * part``.
    """
    if face_profiles is not None and len(face_profiles) != g.F:
        raise ValueError(f"need {g.F} face profiles, got {len(face_profiles)}")
    img = [0] * (2 * g.n * d)
    for fi, f in enumerate(g.faces):
        if face_profiles is None:
            shift = tuple(range(d))
        else:
            prof = Partition(face_profiles[fi])
            if prof.weight != d:
                raise ValueError(f"face profile {prof} does not have weight {d}")
            shift = representative(prof)
        for j, x in enumerate(f):
            last = j == len(f) - 1
            y = f[0] if last else f[j + 1]
            for a in range(d):
                img[copy_index(x, a, d)] = copy_index(y, shift[a] if last else a, d)
    return tuple(img)


def covering_permutation(c: CoveringAssignment, face_profiles=None) -> tuple:
    """gluing o lifted faces: the face product acts first."""
    w = gluing_permutation(c)
    f = lifted_faces(c.graph, c.degree, face_profiles)
    return tuple(w[f[x]] for x in range(len(f)))


def _profiles_from(g: RibbonGraph, d: int, perm: Sequence[int]) -> tuple:
    star_of = {}
    for k, s in enumerate(g.stars):
        for x in s:
            star_of[dart_index(x)] = k
    parts = [[] for _ in g.stars]
    for cyc in cycles(perm):
        darts = {star_of[p // d] for p in cyc}
        if len(darts) != 1:
            raise ConventionError(f"covering cycle {cyc} spreads over several stars")
        (k,) = darts
        valence = len(g.stars[k])
        if len(cyc) % valence:
            raise ConventionError(f"cycle length {len(cyc)} not divisible by valence {valence}")
        parts[k].append(len(cyc) // valence)
    return tuple(Partition(p) for p in parts)


def covering_profiles(c: CoveringAssignment, face_profiles=None) -> tuple:
    """Ramification profile over each star, stars in the graph's star order."""
    return _profiles_from(c.graph, c.degree, covering_permutation(c, face_profiles))


def covering_euler_char(c: CoveringAssignment, face_profiles=None) -> int:
    """V - E + F of the covering graph, read from cycle counts."""
    w = gluing_permutation(c)
    f = lifted_faces(c.graph, c.degree, face_profiles)
    s = tuple(w[f[x]] for x in range(len(f)))
    edges = sum(1 for cyc in cycles(w) if len(cyc) == 2)
    return len(cycles(s)) - edges + len(cycles(f))


def _check_budget(g: RibbonGraph, d: int, budget: Optional[int]):
    budget = DEFAULT_BUDGET if budget is None else budget
    need = math.factorial(d) ** g.n
    if need > budget:
        raise ResourceLimitError(f"Wick enumeration needs {need} tuples, budget is {budget}")


def iter_assignments(g: RibbonGraph, d: int, budget: Optional[int] = None) -> Iterator[CoveringAssignment]:
    _check_budget(g, d, budget)
    group = list(itertools.permutations(range(d)))
    for perms in itertools.product(group, repeat=g.n):
        yield CoveringAssignment(g, d, perms)


def wick_counts(g: RibbonGraph, d: int, face_profiles=None, budget: Optional[int] = None) -> Counter:
    """Number of edge-permutation tuples giving each tuple of star profiles."""
    return Counter(covering_profiles(c, face_profiles) for c in iter_assignments(g, d, budget))


def _match(counts: Counter, g: RibbonGraph, star_profiles) -> int:
    star_profiles = tuple(Partition(p) for p in star_profiles)
    if len(star_profiles) != g.V:
        raise ValueError(f"graph has {g.V} stars, got {len(star_profiles)} profiles")
    return counts.get(star_profiles, 0)


def wick_hurwitz(g: RibbonGraph, d: int, star_profiles, budget: Optional[int] = None) -> Fraction:
    """Matching tuple count divided by (d!)^F (one d! per face)."""
    counts = wick_counts(g, d, budget=budget)
    return Fraction(_match(counts, g, star_profiles), math.factorial(d) ** g.F)


def wick_hurwitz_with_face_profiles(
    g: RibbonGraph, d: int, face_profiles, star_profiles, budget: Optional[int] = None
) -> Fraction:
    """Matching count with prescribed face monodromy, divided by prod z of the face profiles."""
    counts = wick_counts(g, d, face_profiles, budget)
    norm = math.prod(z_of(p) for p in face_profiles)
    return Fraction(_match(counts, g, star_profiles), norm)
