"""Finite Coxeter groups of types A, B, D and I2(m) with combinatorial services.

Each group is realized concretely (one-line permutations for A, signed
permutations for B and D, rotation/reflection pairs for I2) and enumerated
eagerly at construction.  On top of the realization the system precomputes,
per element: length, left/right multiplication tables by generators,
descent sets, the inverse, and the ShortLex canonical reduced word (greedy
smallest left descent).  Canonical element order is (length, word) and is
the order used for every matrix and listing in the package.

Generators are named 1..rank.  Conventions:

* A(n): W = S_{n+1} acting on {1..n+1}; generator i swaps i, i+1.
* B(n): signed permutations; generator 1 flips the sign in position 1,
  generator j >= 2 swaps positions j-1, j; m(1,2) = 4.
* D(n): even-signed permutations; generator 1 maps (a, b, ...) to
  (-b, -a, ...), generator j >= 2 as in B; m(1,2) = 2, m(1,3) = 3.
* I2(m): dihedral of order 2m; elements are (length, first-letter) pairs.

Bruhat order is computed by the standard lifting recursion and memoized.
Groups are capped at desk scale (A5/B4/D4/I2(24)) unless allow_large=True.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Element = tuple
Word = tuple[int, ...]


class UnsupportedGroupError(ValueError):
    """Raised for group strings outside the supported types or size bounds."""


# ---------------------------------------------------------------------------
# realizations
# ---------------------------------------------------------------------------


class _TypeA:
    """S_{n+1} as one-line tuples of 1..n+1."""

    def __init__(self, n: int):
        self.rank = n
        self.order_formula = _factorial(n + 1)

    def identity(self) -> Element:
        return tuple(range(1, self.rank + 2))

    def gen(self, i: int) -> Element:
        e = list(self.identity())
        e[i - 1], e[i] = e[i], e[i - 1]
        return tuple(e)

    def multiply(self, a: Element, b: Element) -> Element:
        return tuple(a[v - 1] for v in b)

    def inverse(self, a: Element) -> Element:
        out = [0] * len(a)
        for pos, v in enumerate(a, 1):
            out[v - 1] = pos
        return tuple(out)

    def length(self, w: Element) -> int:
        return _inversions(w)


class _TypeB:
    """Signed permutations as one-line tuples with entries ±1..±n."""

    def __init__(self, n: int):
        self.rank = n
        self.order_formula = 2**n * _factorial(n)

    def identity(self) -> Element:
        return tuple(range(1, self.rank + 1))

    def gen(self, i: int) -> Element:
        e = list(self.identity())
        if i == 1:
            e[0] = -1
        else:
            e[i - 2], e[i - 1] = e[i - 1], e[i - 2]
        return tuple(e)

    def multiply(self, a: Element, b: Element) -> Element:
        return tuple(a[v - 1] if v > 0 else -a[-v - 1] for v in b)

    def inverse(self, a: Element) -> Element:
        out = [0] * len(a)
        for pos, v in enumerate(a, 1):
            if v > 0:
                out[v - 1] = pos
            else:
                out[-v - 1] = -pos
        return tuple(out)

    def length(self, w: Element) -> int:
        return _inversions(w) + sum(-v for v in w if v < 0)


class _TypeD:
    """Even-signed permutations."""

    def __init__(self, n: int):
        self.rank = n
        self.order_formula = 2 ** (n - 1) * _factorial(n)

    def identity(self) -> Element:
        return tuple(range(1, self.rank + 1))

    def gen(self, i: int) -> Element:
        e = list(self.identity())
        if i == 1:
            e[0], e[1] = -2, -1
        else:
            e[i - 2], e[i - 1] = e[i - 1], e[i - 2]
        return tuple(e)

    multiply = _TypeB.multiply
    inverse = _TypeB.inverse

    def length(self, w: Element) -> int:
        return _inversions(w) + sum(-v - 1 for v in w if v < 0)


class _TypeI2:
    """Dihedral group of order 2m; element = (length, first letter of the
    unique reduced word), with the longest element stored as (m, 1).

    Multiplication goes through the rotation/reflection form: writing
    r = s1*s2, every element is r^a or r^a*s1, and r^b*s1 = s1*r^-b.
    """

    def __init__(self, m: int):
        self.rank = 2
        self.m = m
        self.order_formula = 2 * m

    def identity(self) -> Element:
        return (0, 0)

    def gen(self, i: int) -> Element:
        return (1, i)

    def _to_rot(self, w: Element) -> tuple[int, int]:
        ln, first = w
        if first == 0:
            return (0, 0)
        if first == 1:
            return (ln // 2 % self.m, ln % 2)
        if ln % 2 == 0:
            return (-(ln // 2) % self.m, 0)
        return (-((ln + 1) // 2) % self.m, 1)

    def _from_rot(self, a: int, refl: int) -> Element:
        m = self.m
        a %= m
        if refl == 0:
            if a == 0:
                return (0, 0)
            l1, l2 = 2 * a, 2 * (m - a)
        else:
            l1, l2 = 2 * a + 1, 2 * (m - a) - 1
        if l1 <= l2:
            return (l1, 1)
        return (l2, 2)

    def multiply(self, a: Element, b: Element) -> Element:
        ra, fa = self._to_rot(a)
        rb, fb = self._to_rot(b)
        if fa == 0:
            return self._from_rot(ra + rb, fb)
        return self._from_rot(ra - rb, 1 - fb)

    def inverse(self, a: Element) -> Element:
        ra, fa = self._to_rot(a)
        return a if fa else self._from_rot(-ra, 0)

    def length(self, w: Element) -> int:
        return w[0]


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _inversions(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


# ---------------------------------------------------------------------------
# the system
# ---------------------------------------------------------------------------

# hard lower bounds guard degenerate/reducible cases; upper bounds keep
# eager enumeration at desk scale and can be lifted with allow_large
_BOUNDS = {"A": (1, 5), "B": (2, 4), "D": (3, 4), "I2": (3, 24)}


class CoxeterSystem:
    """A finite Coxeter group with eager enumeration and cached combinatorics."""

    def __init__(self, family: str, param: int, *, allow_large: bool = False):
        if family not in _BOUNDS:
            raise UnsupportedGroupError(f"unsupported family {family!r}")
        lo, hi = _BOUNDS[family]
        if param < lo:
            raise UnsupportedGroupError(f"{family}({param}) is below the supported range (min {lo})")
        if param > hi and not allow_large:
            raise UnsupportedGroupError(
                f"{family}({param}) exceeds the desk-scale bound {family}({hi}); pass allow_large=True to override"
            )
        self.family = family
        self.param = param
        real = {"A": _TypeA, "B": _TypeB, "D": _TypeD, "I2": _TypeI2}[family](param)
        self._real = real
        self.rank = real.rank
        self.generators = tuple(range(1, self.rank + 1))
        self._build()
        self._bruhat: dict[tuple[Element, Element], bool] = {}
        self._subgroup_cache: dict[frozenset, tuple[Element, ...]] = {}
        self._reps_cache: dict[tuple[frozenset, str], tuple[Element, ...]] = {}

    # -- construction --------------------------------------------------

    def _build(self):
        real = self._real
        ident = real.identity()
        gens = {i: real.gen(i) for i in self.generators}

        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens.values():
                    v = real.multiply(w, g)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        if len(seen) != real.order_formula:
            raise RuntimeError(f"enumeration produced {len(seen)} elements, expected {real.order_formula}")

        length = {w: real.length(w) for w in seen}
        right = {w: tuple(real.multiply(w, gens[i]) for i in self.generators) for w in seen}
        left = {w: tuple(real.multiply(gens[i], w) for i in self.generators) for w in seen}

        word: dict[Element, Word] = {ident: ()}
        for w in sorted(seen, key=length.get):
            if w == ident:
                continue
            for i in self.generators:
                sw = left[w][i - 1]
                if length[sw] < length[w]:
                    word[w] = (i,) + word[sw]
                    break

        order = sorted(seen, key=lambda w: (length[w], word[w]))
        self._elements = tuple(order)
        self._index = {w: k for k, w in enumerate(order)}
        self._length = length
        self._word = word
        self._right = right
        self._left = left
        self._rdesc = {
            w: frozenset(i for i in self.generators if length[right[w][i - 1]] < length[w]) for w in seen
        }
        self._ldesc = {
            w: frozenset(i for i in self.generators if length[left[w][i - 1]] < length[w]) for w in seen
        }
        self._inverse = {w: real.inverse(w) for w in seen}
        self.identity = ident

    # -- basic queries ---------------------------------------------------

    @property
    def type_string(self) -> str:
        if self.family == "I2":
            return f"I2({self.param})"
        return f"{self.family}{self.param}"

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.type_string}, order {self.order})"

    @property
    def order(self) -> int:
        return len(self._elements)

    def elements(self) -> tuple[Element, ...]:
        """All elements in canonical (length, ShortLex word) order."""
        return self._elements

    def longest_element(self) -> Element:
        return self._elements[-1]

    def coxeter_matrix(self) -> tuple[tuple[int, ...], ...]:
        """m(s,t) read off from the realization (order of the product st)."""
        out = []
        for i in self.generators:
            row = []
            for j in self.generators:
                st = self.multiply(self.generator(i), self.generator(j))
                m, x = 1, st
                while x != self.identity:
                    x = self.multiply(x, st)
                    m += 1
                row.append(m)
            out.append(tuple(row))
        return tuple(out)

    def generator(self, i: int) -> Element:
        return self._real.gen(i)

    def index(self, w: Element) -> int:
        return self._index[w]

    def length(self, w: Element) -> int:
        return self._length[w]

    def word(self, w: Element) -> Word:
        """The ShortLex canonical reduced word of w."""
        return self._word[w]

    def sort_key(self, w: Element):
        return (self._length[w], self._word[w])

    def multiply(self, a: Element, b: Element) -> Element:
        return self._real.multiply(a, b)

    def inverse(self, w: Element) -> Element:
        return self._inverse[w]

    def apply_right(self, w: Element, i: int) -> Element:
        """w * s_i."""
        return self._right[w][i - 1]

    def apply_left(self, i: int, w: Element) -> Element:
        """s_i * w."""
        return self._left[w][i - 1]

    def right_descents(self, w: Element) -> frozenset[int]:
        return self._rdesc[w]

    def left_descents(self, w: Element) -> frozenset[int]:
        return self._ldesc[w]

    def element_from_word(self, word: Iterable[int]) -> Element:
        """Product of generators; raises with the offending 1-based position."""
        w = self.identity
        for pos, g in enumerate(word, 1):
            if not isinstance(g, int) or not 1 <= g <= self.rank:
                raise ValueError(f"invalid generator index {g!r} at position {pos} (rank {self.rank})")
            w = self._right[w][g - 1]
        return w

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, u: Element, w: Element) -> bool:
        """u <= w in Bruhat order, by the lifting recursion (memoized)."""
        if u == w:
            return True
        lu, lw = self._length[u], self._length[w]
        if lu >= lw:
            return False
        if lu == 0:
            return True
        key = (u, w)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        s = min(self._ldesc[w])
        sw = self._left[w][s - 1]
        su = self._left[u][s - 1]
        if self._length[su] < lu:
            res = self.bruhat_leq(su, sw)
        else:
            res = self.bruhat_leq(u, sw)
        self._bruhat[key] = res
        return res

    def bruhat_interval(self, w: Element) -> list[Element]:
        """[identity, w] in canonical order."""
        return [x for x in self._elements if self.bruhat_leq(x, w)]

    # -- parabolic machinery -------------------------------------------------

    def subset(self, J: Iterable[int]) -> frozenset[int]:
        J = frozenset(J)
        bad = J - set(self.generators)
        if bad:
            raise ValueError(f"generator indices {sorted(bad)} outside 1..{self.rank}")
        return J

    def in_parabolic(self, w: Element, J: frozenset[int]) -> bool:
        # the letters of any reduced word of w are an invariant of w
        return set(self._word[w]) <= J

    def subgroup_elements(self, J: Iterable[int]) -> tuple[Element, ...]:
        """W_J in canonical order."""
        J = self.subset(J)
        got = self._subgroup_cache.get(J)
        if got is None:
            got = tuple(w for w in self._elements if set(self._word[w]) <= J)
            self._subgroup_cache[J] = got
        return got

    def min_coset_reps(self, J: Iterable[int], side: str = "left") -> tuple[Element, ...]:
        """Minimal coset representatives, canonical order.

        side="left": W^J, representatives of the left cosets uW_J (no right
        descent in J).  side="right": ^JW (no left descent in J).
        """
        J = self.subset(J)
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        key = (J, side)
        got = self._reps_cache.get(key)
        if got is None:
            desc = self._rdesc if side == "left" else self._ldesc
            got = tuple(w for w in self._elements if not (desc[w] & J))
            self._reps_cache[key] = got
        return got

    def parabolic_factorize_left(self, w: Element, J: Iterable[int]) -> tuple[Element, Element]:
        """The unique (u, v) with w = u*v, u in W^J, v in W_J, lengths adding."""
        J = self.subset(J)
        u, v = w, self.identity
        while True:
            ds = self._rdesc[u] & J
            if not ds:
                return u, v
            s = min(ds)
            u = self._right[u][s - 1]
            v = self._left[v][s - 1]

    def parabolic_factorize_right(self, w: Element, J: Iterable[int]) -> tuple[Element, Element]:
        """The unique (v, u) with w = v*u, v in W_J, u in ^JW, lengths adding."""
        J = self.subset(J)
        v, u = self.identity, w
        while True:
            ds = self._ldesc[u] & J
            if not ds:
                return v, u
            s = min(ds)
            u = self._left[u][s - 1]
            v = self._right[v][s - 1]


@dataclass(frozen=True)
class ParabolicData:
    """W_J together with both families of minimal coset representatives."""

    J: frozenset[int]
    elements_WJ: tuple[Element, ...]
    left_reps: tuple[Element, ...]
    right_reps: tuple[Element, ...]


def parabolic_data(system: CoxeterSystem, J: Iterable[int]) -> ParabolicData:
    J = system.subset(J)
    return ParabolicData(
        J=J,
        elements_WJ=system.subgroup_elements(J),
        left_reps=system.min_coset_reps(J, "left"),
        right_reps=system.min_coset_reps(J, "right"),
    )


# ---------------------------------------------------------------------------
# parsing / formatting
# ---------------------------------------------------------------------------

_GROUP_RE = re.compile(r"^(A|B|D)(\d+)$|^I2\((\d+)\)$")


def coxeter_system(group: str, *, allow_large: bool = False) -> CoxeterSystem:
    """Build a system from a type string: "A3", "B4", "D4", "I2(7)"."""
    m = _GROUP_RE.match(group.strip())
    if not m:
        raise UnsupportedGroupError(
            f"cannot parse group {group!r}; expected A<n>, B<n>, D<n> or I2(<m>)"
        )
    if m.group(3) is not None:
        return CoxeterSystem("I2", int(m.group(3)), allow_large=allow_large)
    return CoxeterSystem(m.group(1), int(m.group(2)), allow_large=allow_large)


def format_word(word: Iterable[int]) -> str:
    """Comma-joined generator indices; the identity is the empty string."""
    return ",".join(str(g) for g in word)


def parse_word(text: str) -> list[int]:
    """Inverse of format_word; "e" (or "") denotes the identity."""
    text = text.strip()
    if text in ("", "e"):
        return []
    out = []
    for pos, part in enumerate(text.split(","), 1):
        try:
            out.append(int(part.strip()))
        except ValueError:
            raise ValueError(f"invalid word {text!r}: token {part.strip()!r} at position {pos}") from None
    return out
