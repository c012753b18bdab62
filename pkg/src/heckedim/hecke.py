"""Hecke algebra over Z[v, v^-1]: standard and Kazhdan-Lusztig bases,
KL polynomials, structure constants, the standard pairing, Bott-Samelson
decompositions, and the numerical clasp-existence criterion.

Normalization: b_s = h_s + v h_e, so h_x b_s = h_{xs} + v h_x when xs > x
and h_{xs} + v^-1 h_x when xs < x.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .coxeter import CoxeterSystem, Element, Word
from .errors import InvalidDecomposition, NotSelfDual
from .exactnum import GRADED_TWO, LaurentPoly, V, V_INV

Coeffs = dict[Element, LaurentPoly]


def _clean(d: Coeffs) -> Coeffs:
    return {w: p for w, p in d.items() if p}


@dataclass(frozen=True)
class HeckeElt:
    """Hecke algebra element tagged with the basis its coefficients refer to."""

    basis: str  # "standard" | "kl"
    coeffs: tuple[tuple[Element, LaurentPoly], ...]

    @classmethod
    def make(cls, basis: str, coeffs: Mapping[Element, LaurentPoly]) -> HeckeElt:
        if basis not in ("standard", "kl"):
            raise ValueError(f"unknown basis {basis!r}")
        items = tuple(sorted(_clean(dict(coeffs)).items(), key=lambda kv: kv[0].sort_key))
        return cls(basis, items)

    def as_dict(self) -> Coeffs:
        return dict(self.coeffs)

    def __str__(self) -> str:
        sym = "h" if self.basis == "standard" else "b"
        if not self.coeffs:
            return "0"
        return " + ".join(f"({p})*{sym}[{w}]" for w, p in self.coeffs)


class HeckeAlgebra:
    """Hecke algebra of a Coxeter system with a memoized KL table."""

    def __init__(self, system: CoxeterSystem) -> None:
        self.system = system
        self._kl: dict[Element, Coeffs] = {system.identity: {system.identity: LaurentPoly.one()}}
        self._mu: dict[Element, tuple[tuple[Element, int], ...]] = {}

    # -- standard basis ------------------------------------------------------

    def unit(self) -> Coeffs:
        return {self.system.identity: LaurentPoly.one()}

    def mult_std_by_bs(self, h: Coeffs, i: int) -> Coeffs:
        """Right multiplication of a standard-basis element by b_i."""
        out: dict[Element, LaurentPoly] = {}
        for x, p in h.items():
            xi = x.times_gen(i)
            out[xi] = out.get(xi, LaurentPoly.zero()) + p
            shift = V if xi.length > x.length else V_INV
            out[x] = out.get(x, LaurentPoly.zero()) + p * shift
        return _clean(out)

    def mult_std_by_bs_left(self, h: Coeffs, i: int) -> Coeffs:
        out: dict[Element, LaurentPoly] = {}
        for x, p in h.items():
            ix = x.gen_times(i)
            out[ix] = out.get(ix, LaurentPoly.zero()) + p
            shift = V if ix.length > x.length else V_INV
            out[x] = out.get(x, LaurentPoly.zero()) + p * shift
        return _clean(out)

    # -- KL basis ------------------------------------------------------------

    def kl_basis(self, w: Element) -> Coeffs:
        """b_w in the standard basis; memoizes every p_{w,y} along the way."""
        found = self._kl.get(w)
        if found is not None:
            return found
        stack = [w]
        while stack:
            top = stack[-1]
            if top in self._kl:
                stack.pop()
                continue
            i = top.word[-1]
            prefix = top.times_gen(i)
            if prefix not in self._kl:
                stack.append(prefix)
                continue
            pending = [
                y
                for y, _ in self.mu_targets(prefix)
                if y.times_gen(i).length < y.length and y not in self._kl
            ]
            if pending:
                stack.extend(pending)
                continue
            b = self.mult_std_by_bs(self._kl[prefix], i)
            for y, m in self.mu_targets(prefix):
                if y.times_gen(i).length < y.length:
                    for u, q in self._kl[y].items():
                        b[u] = b.get(u, LaurentPoly.zero()) - m * q
            self._kl[top] = _clean(b)
            stack.pop()
        return self._kl[w]

    def p(self, w: Element, y: Element) -> LaurentPoly:
        """KL polynomial p_{w,y}; zero unless y <= w."""
        return self.kl_basis(w).get(y, LaurentPoly.zero())

    def mu(self, w: Element, y: Element) -> int:
        """Coefficient of v in p_{w,y} (zero unless y < w)."""
        if y is w:
            return 0
        return self.p(w, y).coeff(1)

    def mu_targets(self, w: Element) -> tuple[tuple[Element, int], ...]:
        """All (y, mu(w,y)) with nonzero mu, sorted for determinism."""
        found = self._mu.get(w)
        if found is None:
            b = self.kl_basis(w)
            found = tuple(
                (y, p.coeff(1))
                for y, p in sorted(b.items(), key=lambda kv: kv[0].sort_key)
                if y is not w and p.coeff(1) != 0
            )
            self._mu[w] = found
        return found

    def bs_summands(self, x: Element, i: int) -> list[tuple[Element, int]]:
        """Decomposition of B_x B_i when xi > x: the top xi plus the
        lower (y, mu) with y i < y."""
        xi = x.times_gen(i)
        if xi.length < x.length:
            raise ValueError("bs_summands expects xi > x")
        out = [(xi, 1)]
        for y, m in self.mu_targets(x):
            if y.times_gen(i).length < y.length:
                out.append((y, m))
        return out

    # -- KL-basis multiplication ----------------------------------------------

    def mult_kl_by_bs(self, kd: Coeffs, i: int) -> Coeffs:
        """Right multiplication by b_i of an element written in the KL basis."""
        out: dict[Element, LaurentPoly] = {}

        def add(w: Element, p: LaurentPoly) -> None:
            out[w] = out.get(w, LaurentPoly.zero()) + p

        for w, p in kd.items():
            wi = w.times_gen(i)
            if wi.length > w.length:
                add(wi, p)
                for y, m in self.mu_targets(w):
                    if y.times_gen(i).length < y.length:
                        add(y, m * p)
            else:
                add(w, GRADED_TWO * p)
        return _clean(out)

    def mult_kl(self, kd: Coeffs, y: Element) -> Coeffs:
        """Right multiplication by b_y of an element written in the KL basis."""
        memo: dict[Element, Coeffs] = {}

        def rec(z: Element) -> Coeffs:
            if z.is_identity:
                return kd
            got = memo.get(z)
            if got is not None:
                return got
            i = z.word[-1]
            prefix = z.times_gen(i)
            acc = dict(self.mult_kl_by_bs(rec(prefix), i))
            for u, m in self.mu_targets(prefix):
                if u.times_gen(i).length < u.length:
                    for w, p in rec(u).items():
                        acc[w] = acc.get(w, LaurentPoly.zero()) - m * p
            acc = _clean(acc)
            memo[z] = acc
            return acc

        return rec(y)

    def kl_product(self, x: Element, y: Element) -> Coeffs:
        """Structure constants: b_x b_y = sum_w m^w_{x,y} b_w."""
        return self.mult_kl({x: LaurentPoly.one()}, y)

    def bott_samelson_decompose(self, word: Sequence[int]) -> Coeffs:
        """Graded multiplicities of b_{i1} ... b_{ik} in the KL basis."""
        kd = {self.system.identity: LaurentPoly.one()}
        for i in word:
            kd = self.mult_kl_by_bs(kd, int(i))
        return kd

    # -- basis conversion -------------------------------------------------------

    def kl_expand(self, h: Coeffs) -> Coeffs:
        """Rewrite a standard-basis element in the KL basis (exact, triangular)."""
        work = dict(h)
        out: Coeffs = {}
        while work:
            w = max(work, key=lambda e: e.sort_key)
            m = work.pop(w)
            out[w] = m
            for y, q in self.kl_basis(w).items():
                if y is w:
                    continue
                r = work.get(y, LaurentPoly.zero()) - m * q
                if r:
                    work[y] = r
                else:
                    work.pop(y, None)
        return _clean(out)

    def std_from_kl(self, kd: Coeffs) -> Coeffs:
        out: dict[Element, LaurentPoly] = {}
        for w, m in kd.items():
            for y, q in self.kl_basis(w).items():
                out[y] = out.get(y, LaurentPoly.zero()) + m * q
        return _clean(out)

    def to_std(self, elt: HeckeElt) -> Coeffs:
        return elt.as_dict() if elt.basis == "standard" else self.std_from_kl(elt.as_dict())

    def to_kl(self, elt: HeckeElt) -> Coeffs:
        return elt.as_dict() if elt.basis == "kl" else self.kl_expand(elt.as_dict())

    # -- pairing ------------------------------------------------------------------

    def is_self_dual(self, elt: HeckeElt) -> bool:
        return all(p.is_bar_invariant() for p in self.to_kl(elt).values())

    def standard_pairing(
        self,
        left: HeckeElt,
        right: HeckeElt,
        element_filter: Callable[[Element], bool] | None = None,
    ) -> LaurentPoly:
        """Sum of q_y r_y over the standard coefficients of two self-dual
        elements; with a filter this computes ideal-restricted graded ranks."""
        for elt in (left, right):
            if not self.is_self_dual(elt):
                raise NotSelfDual(f"{elt} is not bar-invariant")
        ql, qr = self.to_std(left), self.to_std(right)
        total = LaurentPoly.zero()
        for y, q in ql.items():
            r = qr.get(y)
            if r is not None and (element_filter is None or element_filter(y)):
                total = total + q * r
        return total

    # -- clasp criterion -------------------------------------------------------------

    def clasp_exists(
        self, w: Element, decomposition: Iterable[tuple[Element, int]]
    ) -> bool:
        """Numerical criterion for existence of the clasp idempotent on a
        w-object whose lower summands are the given (element, shift) multiset."""
        shifts_by_y: dict[Element, Counter] = {}
        for y, k in decomposition:
            if not (y.length < w.length and y.bruhat_leq(w)):
                raise InvalidDecomposition(f"summand {y} is not strictly below {w}")
            shifts_by_y.setdefault(y, Counter())[k] += 1
        for y, ctr in shifts_by_y.items():
            if any(ctr[k] != ctr[-k] for k in ctr):
                raise InvalidDecomposition(f"shifts of {y} are not symmetric: {dict(ctr)}")
        bw = self.kl_basis(w)
        for y, ctr in shifts_by_y.items():
            shifts = sorted({abs(k) for k in ctr})
            for x, p_yx in self.kl_basis(y).items():
                t_len = p_yx.minexp() + bw[x].minexp()
                matching = [a for a in shifts if a % 2 == t_len % 2]
                if matching and t_len - max(matching) <= 0:
                    return False
        return True

    def bott_samelson_clasp_exists(self, word: Sequence[int]) -> bool:
        """Clasp criterion for the Bott-Samelson object of the given word."""
        kd = self.bott_samelson_decompose(word)
        top = max(kd, key=lambda e: e.sort_key)
        if any(e.length == top.length and e is not top for e in kd):
            raise InvalidDecomposition("object has no single top summand")
        if kd[top] != LaurentPoly.one():
            raise InvalidDecomposition("top summand occurs with a shift or multiplicity")
        decomposition = [
            (y, e) for y, c in kd.items() if y is not top for e, m in c.c.items() for _ in range(m)
        ]
        return self.clasp_exists(top, decomposition)


# ---------------------------------------------------------------------------
# Disk cache for KL tables


CACHE_MAGIC = "#heckedim-klcache v1"


def word_csv(word: Word) -> str:
    return ",".join(str(i) for i in word)


def save_kl_cache(hecke: HeckeAlgebra, group_hash: str, path) -> int:
    """Write every fully computed b_w to a cache file; returns record count."""
    records = []
    for w in sorted(hecke._kl, key=lambda e: e.sort_key):
        for y, p in sorted(hecke._kl[w].items(), key=lambda kv: kv[0].sort_key):
            records.append(
                f"{group_hash}\t{word_csv(w.word)}\t{word_csv(y.word)}\t{json.dumps(p.pairs())}"
            )
    body = "\n".join(records)
    digest = hashlib.sha256(body.encode()).hexdigest()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(f"{CACHE_MAGIC} {digest}\n{body}\n" if body else f"{CACHE_MAGIC} {digest}\n")
    return len(records)


def load_kl_cache(hecke: HeckeAlgebra, group_hash: str, path) -> int:
    """Load cached b_w records; silently recomputes on any corruption.

    Returns the number of elements whose KL data was restored.
    """
    try:
        text = path.read_text()
    except OSError:
        return 0
    lines = text.splitlines()
    if not lines or not lines[0].startswith(CACHE_MAGIC):
        return 0
    digest = lines[0][len(CACHE_MAGIC) :].strip()
    body = "\n".join(lines[1:])
    if hashlib.sha256(body.encode()).hexdigest() != digest:
        return 0
    table: dict[Element, Coeffs] = {}
    try:
        for line in lines[1:]:
            if not line:
                continue
            ghash, w_csv, y_csv, pairs_json = line.split("\t")
            if ghash != group_hash:
                return 0
            w = hecke.system.element_from_word(
                int(t) for t in w_csv.split(",") if t
            )
            y = hecke.system.element_from_word(
                int(t) for t in y_csv.split(",") if t
            )
            poly = LaurentPoly.from_pairs((int(e), int(c)) for e, c in json.loads(pairs_json))
            table.setdefault(w, {})[y] = poly
    except (ValueError, KeyError, json.JSONDecodeError):
        return 0
    hecke._kl.update(table)
    return len(table)
