"""Kazhdan-Lusztig bases, mu-coefficients, and rational smoothness.

The KL basis element C_w is the unique bar-self-dual element of the form
C_w = sum_x h_{x,w}(q) T_x with h_{w,w} = 1, h_{x,w} = 0 unless x <= w, and
h_{x,w} in qZ[q] for x < w.  Two independent computations are provided:

* KLCache — the production path.  Columns are built bottom-up along the
  canonical reduced word by the product-and-correct recursion

      C_w = C_{ws} C_s - sum_{z < ws, zs < z} mu(z, ws) C_z

  (s the last letter of the ShortLex word of w) and memoized per column.

* KLOracle — a deliberately separate recursion that peels a left descent
  off the second index:

      h_{y,x} = h_{sy,sx} + q^c h_{y,sx} - sum_{y <= z < sx, sz < z} mu(z,sx) h_{y,z}

  with c = -1 if sy < y and c = +1 otherwise.  It never touches a KLCache,
  so agreement of the two paths is a genuine cross-check.

Also here: the Bruhat-interval element sum_{y <= w} q^{l(w)-l(y)} T_y, which
coincides with C_w exactly for rationally smooth w (in type A: for the
permutations avoiding the patterns 3412 and 4231), and the pattern test.
"""

from __future__ import annotations

import gzip
import json
import threading
from itertools import combinations
from typing import Iterable, Mapping

from .coxeter import CoxeterSystem, Element, UnsupportedGroupError, format_word, parse_word
from .hecke import HeckeElement, _add, _times_gen_right, _wrap
from .laurent import LaurentPoly, ONE, Q, QINV, ZERO

_CACHE_FORMAT = 1


class KLCache:
    """Per-system store of KL columns h_{.,w}, filled on demand.

    Lookups may run concurrently; a column is computed under a lock and
    inserted atomically (recomputation is idempotent, so the lock is only
    about consistency of the dict).
    """

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._columns: dict[Element, dict[Element, LaurentPoly]] = {}
        self._lock = threading.Lock()

    # -- core recursion ----------------------------------------------------

    def kl_column(self, w: Element) -> Mapping[Element, LaurentPoly]:
        """The map x -> h_{x,w}; absent keys are zero.  Treat as read-only."""
        col = self._columns.get(w)
        if col is None:
            # compute outside the lock: concurrent recomputation is
            # idempotent, only the insertion needs to be atomic
            col = self._compute_column(w)
            with self._lock:
                col = self._columns.setdefault(w, col)
        return col

    def _compute_column(self, w: Element) -> dict[Element, LaurentPoly]:
        sys = self.system
        if w == sys.identity:
            return {w: ONE}
        s = sys.word(w)[-1]
        v = sys.apply_right(w, s)
        colv = self.kl_column(v)

        # C_v * C_s = C_v * T_s + q * C_v
        out: dict[Element, LaurentPoly] = dict(_times_gen_right(sys, colv, s))
        for x, c in colv.items():
            _add(out, x, c * Q)

        # corrections: - mu(z, v) C_z over z < v with zs < z
        for z, h in colv.items():
            if z == v:
                continue
            m = h.coeff(1)
            if m == 0 or s not in sys.right_descents(z):
                continue
            for x, cz in self.kl_column(z).items():
                _add(out, x, cz * (-m))

        if out.get(w) != ONE:
            raise RuntimeError(f"KL recursion lost unitriangularity at {sys.word(w)}")
        return out

    # -- public accessors ------------------------------------------------

    def kl_element(self, w: Element) -> HeckeElement:
        """C_w as a Hecke element."""
        return _wrap(self.system, dict(self.kl_column(w)))

    def kl_poly(self, x: Element, w: Element) -> LaurentPoly:
        """h_{x,w}; the zero polynomial iff x is not <= w."""
        return self.kl_column(w).get(x, ZERO)

    def mu(self, z: Element, w: Element) -> int:
        """Coefficient of q^1 in h_{z,w}."""
        return self.kl_poly(z, w).coeff(1)

    def fill(self, threads: int = 1):
        """Compute every column, optionally spreading columns over threads."""
        elements = self.system.elements()
        if threads <= 1:
            for w in elements:
                self.kl_column(w)
            return
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(self.kl_column, elements))

    # -- persistence -------------------------------------------------------

    def save(self, path):
        """Dump all cached columns as gzipped JSON keyed by canonical words."""
        sys = self.system
        obj = {
            "format": _CACHE_FORMAT,
            "group": sys.type_string,
            "columns": {
                format_word(sys.word(w)): {
                    format_word(sys.word(x)): p.to_json_obj() for x, p in sorted(
                        col.items(), key=lambda xc: sys.sort_key(xc[0])
                    )
                }
                for w, col in sorted(self._columns.items(), key=lambda wc: sys.sort_key(wc[0]))
            },
        }
        with gzip.open(path, "wt", encoding="utf-8") as fh:
            json.dump(obj, fh)

    @classmethod
    def load(cls, path, system: CoxeterSystem) -> "KLCache":
        with gzip.open(path, "rt", encoding="utf-8") as fh:
            obj = json.load(fh)
        if obj.get("format") != _CACHE_FORMAT:
            raise ValueError(f"unsupported cache format {obj.get('format')!r}")
        if obj.get("group") != system.type_string:
            raise ValueError(f"cache is for group {obj.get('group')!r}, not {system.type_string}")
        cache = cls(system)
        for wtext, col in obj["columns"].items():
            w = system.element_from_word(parse_word(wtext))
            cache._columns[w] = {
                system.element_from_word(parse_word(xtext)): LaurentPoly.from_json_obj(p)
                for xtext, p in col.items()
            }
        return cache


class KLOracle:
    """Independent KL polynomials via the left-descent recursion (see module
    docstring); shares nothing with KLCache beyond the group itself."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self._memo: dict[tuple[Element, Element], LaurentPoly] = {}

    def kl_poly(self, y: Element, x: Element) -> LaurentPoly:
        sys = self.system
        if y == x:
            return ONE
        if not sys.bruhat_leq(y, x):
            return ZERO
        key = (y, x)
        got = self._memo.get(key)
        if got is not None:
            return got
        s = min(sys.left_descents(x))
        sx = sys.apply_left(s, x)
        sy = sys.apply_left(s, y)
        qc = QINV if sys.length(sy) < sys.length(y) else Q
        val = self.kl_poly(sy, sx) + qc * self.kl_poly(y, sx)
        for z in sys.elements():
            if z == sx or s not in sys.left_descents(z):
                continue
            if not (sys.bruhat_leq(y, z) and sys.bruhat_leq(z, sx)):
                continue
            m = self.mu(z, sx)
            if m:
                val = val - m * self.kl_poly(y, z)
        self._memo[key] = val
        return val

    def mu(self, z: Element, x: Element) -> int:
        return self.kl_poly(z, x).coeff(1)


# ---------------------------------------------------------------------------
# Bruhat-interval elements and smoothness
# ---------------------------------------------------------------------------


def bruhat_interval_element(system: CoxeterSystem, w: Element) -> HeckeElement:
    """sum over y <= w of q^(l(w)-l(y)) T_y.

    Equals C_w exactly when w is rationally smooth — always in dihedral
    groups, and in type A iff w avoids 3412 and 4231.
    """
    lw = system.length(w)
    terms = {
        y: LaurentPoly.q_power(lw - system.length(y))
        for y in system.elements()
        if system.bruhat_leq(y, w)
    }
    return _wrap(system, terms)


def _contains_pattern(line: Iterable[int], pattern: tuple[int, ...]) -> bool:
    line = tuple(line)
    k = len(pattern)
    want = _ranks(pattern)
    return any(_ranks(sub) == want for sub in combinations(line, k))


def _ranks(vals) -> tuple[int, ...]:
    order = sorted(vals)
    return tuple(order.index(v) + 1 for v in vals)


def is_rationally_smooth(system: CoxeterSystem, w: Element) -> bool:
    """Type-A rational smoothness: one-line notation avoids 3412 and 4231."""
    if system.family != "A":
        raise UnsupportedGroupError("rational smoothness test is implemented for type A only")
    return not (_contains_pattern(w, (3, 4, 1, 2)) or _contains_pattern(w, (4, 2, 3, 1)))
