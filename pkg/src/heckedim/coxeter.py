"""Coxeter systems, balanced realizations, and canonical group elements.

Element identity always goes through the standard geometric representation
(faithful for every Coxeter group), regardless of which realization is used
for polynomial computations.  Generators are 1-based throughout the public
API, matching the usual shorthand where the word (1,2,1) means s1 s2 s1.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRange,
    InfiniteParabolic,
    GroupTooLarge,
    NotADescent,
    UnsupportedRealization,
    WordNotReduced,
)
from .exactnum import RATIONALS, FieldSpec, Scalar

Word = tuple[int, ...]

_FINITE_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("H", 2): 10,
    ("H", 3): 120,
    ("H", 4): 14400,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class CoxeterMatrix:
    """Symmetric matrix of braid orders m(s,t), with named presets."""

    def __init__(self, entries: Sequence[Sequence[int]]) -> None:
        n = len(entries)
        m = tuple(tuple(int(x) for x in row) for row in entries)
        for i in range(n):
            if len(m[i]) != n:
                raise ValueError("Coxeter matrix must be square")
            if m[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(n):
                if i != j and (m[i][j] != m[j][i] or m[i][j] < 2):
                    raise ValueError("off-diagonal entries must be symmetric and >= 2")
        self.n = n
        self.m = m

    @classmethod
    def from_type(cls, name: str) -> CoxeterMatrix:
        """Preset by name: A3, B2, D4, F4, G2, H2, H3, H4, I2:7 or I2(7)."""
        name = name.strip().upper().replace("(", ":").rstrip(")")
        if name.startswith("I2"):
            m = int(name.split(":", 1)[1])
            return cls._dihedral(m)
        letter, rank = name[0], int(name[1:])
        builder = {
            "A": cls._type_a,
            "B": cls._type_b,
            "C": cls._type_b,
            "D": cls._type_d,
            "E": cls._type_e,
            "F": cls._type_f,
            "G": cls._type_g,
            "H": cls._type_h,
        }.get(letter)
        if builder is None:
            raise ValueError(f"unknown Coxeter type {name!r}")
        return builder(rank)

    @classmethod
    def _chain(cls, n: int) -> list[list[int]]:
        m = [[2] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 1
        for i in range(n - 1):
            m[i][i + 1] = m[i + 1][i] = 3
        return m

    @classmethod
    def _type_a(cls, n: int) -> CoxeterMatrix:
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return cls(cls._chain(n))

    @classmethod
    def _type_b(cls, n: int) -> CoxeterMatrix:
        if n < 2:
            raise ValueError("B_n needs n >= 2")
        m = cls._chain(n)
        m[n - 2][n - 1] = m[n - 1][n - 2] = 4
        return cls(m)

    @classmethod
    def _type_d(cls, n: int) -> CoxeterMatrix:
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        m = cls._chain(n - 1)
        for row in m:
            row.append(2)
        m.append([2] * n)
        m[n - 1][n - 1] = 1
        m[n - 3][n - 1] = m[n - 1][n - 3] = 3
        return cls(m)

    @classmethod
    def _type_e(cls, n: int) -> CoxeterMatrix:
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
        m = cls._chain(n - 1)
        for row in m:
            row.append(2)
        m.append([2] * n)
        m[n - 1][n - 1] = 1
        m[2][n - 1] = m[n - 1][2] = 3  # branch node attached to the third chain node
        return cls(m)

    @classmethod
    def _type_f(cls, n: int) -> CoxeterMatrix:
        if n != 4:
            raise ValueError("only F4 exists")
        m = cls._chain(4)
        m[1][2] = m[2][1] = 4
        return cls(m)

    @classmethod
    def _type_g(cls, n: int) -> CoxeterMatrix:
        if n != 2:
            raise ValueError("only G2 exists")
        return cls._dihedral(6)

    @classmethod
    def _type_h(cls, n: int) -> CoxeterMatrix:
        if n == 2:
            return cls._dihedral(5)
        if n in (3, 4):
            m = cls._chain(n)
            m[0][1] = m[1][0] = 5
            return cls(m)
        raise ValueError("H_n needs n in {2,3,4}")

    @classmethod
    def _dihedral(cls, m: int) -> CoxeterMatrix:
        return cls([[1, m], [m, 1]])

    # -- classification ----------------------------------------------------

    def submatrix(self, gens: Sequence[int]) -> CoxeterMatrix:
        """Parabolic sub-Coxeter matrix on the given 1-based generators."""
        idx = [g - 1 for g in gens]
        return CoxeterMatrix([[self.m[i][j] for j in idx] for i in idx])

    def _components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = [start]
            seen.add(start)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.n):
                    if j not in seen and self.m[i][j] >= 3:
                        seen.add(j)
                        comp.append(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def _component_order(self, comp: list[int]) -> int | None:
        """Group order of one connected component, or None if infinite."""
        k = len(comp)
        if k == 1:
            return 2
        if k == 2:
            m = self.m[comp[0]][comp[1]]
            return 2 * m
        deg = {i: sum(1 for j in comp if j != i and self.m[i][j] >= 3) for i in comp}
        branch = [i for i in comp if deg[i] >= 3]
        labels = sorted(
            self.m[i][j] for a, i in enumerate(comp) for j in comp[a + 1 :] if self.m[i][j] >= 3
        )
        if not branch:
            # A path; locate any label > 3 along it.
            ends = [i for i in comp if deg[i] == 1]
            if len(ends) != 2:
                return None
            path = [ends[0]]
            while len(path) < k:
                nxt = [
                    j
                    for j in comp
                    if j not in path and self.m[path[-1]][j] >= 3
                ]
                if not nxt:
                    return None
                path.append(nxt[0])
            edge_labels = [self.m[path[t]][path[t + 1]] for t in range(k - 1)]
            big = [(t, lab) for t, lab in enumerate(edge_labels) if lab > 3]
            if not big:
                return _factorial(k + 1)  # type A
            if len(big) > 1:
                return None
            t, lab = big[0]
            at_end = t == 0 or t == k - 2
            if lab == 4:
                if at_end:
                    return (2**k) * _factorial(k)  # type B
                if k == 4 and t == 1:
                    return _FINITE_ORDERS[("F", 4)]
                return None
            if lab == 5 and at_end and k in (3, 4):
                return _FINITE_ORDERS[("H", k)]
            return None
        if len(branch) > 1 or deg[branch[0]] > 3 or any(lab != 3 for lab in labels):
            return None
        # Single trivalent branch point, simply laced: type D or E.
        b = branch[0]
        arms = []
        for j in comp:
            if j != b and self.m[b][j] >= 3:
                arm = 1
                prev, cur = b, j
                while True:
                    nxt = [x for x in comp if x not in (prev, cur) and self.m[cur][x] >= 3]
                    if not nxt:
                        break
                    prev, cur = cur, nxt[0]
                    arm += 1
                arms.append(arm)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return (2 ** (k - 1)) * _factorial(k)  # type D
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return _FINITE_ORDERS[("E", k)]
        return None

    def group_order(self) -> int | None:
        """|W| if finite, else None."""
        out = 1
        for comp in self._components():
            o = self._component_order(comp)
            if o is None:
                return None
            out *= o
        return out

    @property
    def is_finite(self) -> bool:
        return self.group_order() is not None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoxeterMatrix) and self.m == other.m

    def __hash__(self) -> int:
        return hash(self.m)

    def __repr__(self) -> str:
        return f"CoxeterMatrix(n={self.n})"


# ---------------------------------------------------------------------------
# Realizations


_STANDARD_SQRT = {4: 2, 5: 5, 6: 3}


def _standard_entry(m: int, field: FieldSpec) -> Scalar:
    """-2 cos(pi/m) for m in 2..6, exactly."""
    if m == 2:
        return Scalar.of(0, 0, field)
    if m == 3:
        return Scalar.of(-1, 0, field)
    if m == 4:
        return Scalar.of(0, -1, field)  # -sqrt(2)
    if m == 5:
        return Scalar.of(Fraction(-1, 2), Fraction(-1, 2), field)  # -(1+sqrt5)/2
    if m == 6:
        return Scalar.of(0, -1, field)  # -sqrt(3)
    raise UnsupportedRealization(
        f"-2cos(pi/{m}) does not live in a quadratic field; braid orders up to 6 only"
    )


class Realization:
    """A balanced Cartan matrix for a Coxeter system over an exact field."""

    def __init__(
        self,
        matrix: CoxeterMatrix,
        cartan: Sequence[Sequence[Scalar]],
        preset: str = "custom",
    ) -> None:
        self.matrix = matrix
        self.n = matrix.n
        self.cartan = tuple(tuple(row) for row in cartan)
        self.preset = preset
        fields = {s.field for row in self.cartan for s in row if not s.field.is_rational}
        if len(fields) > 1:
            raise UnsupportedRealization(
                "Cartan entries mix incompatible irrationalities; "
                "one square root per realization is supported"
            )
        self.field = fields.pop() if fields else RATIONALS
        self._validate()

    @classmethod
    def standard(cls, matrix: CoxeterMatrix) -> Realization:
        roots = {
            _STANDARD_SQRT[m]
            for row in matrix.m
            for m in row
            if m in _STANDARD_SQRT
        }
        for row in matrix.m:
            for m in row:
                if m > 6:
                    raise UnsupportedRealization(
                        f"standard realization for m={m} needs a non-quadratic cosine"
                    )
        if len(roots) > 1:
            raise UnsupportedRealization(
                f"standard realization would need sqrt of each of {sorted(roots)}; "
                "one square root per realization is supported"
            )
        field = FieldSpec(roots.pop()) if roots else RATIONALS
        n = matrix.n
        cartan = [
            [
                Scalar.of(2, 0, field) if i == j else _standard_entry(matrix.m[i][j], field)
                for j in range(n)
            ]
            for i in range(n)
        ]
        return cls(matrix, cartan, preset="standard")

    @classmethod
    def crystallographic(cls, matrix: CoxeterMatrix) -> Realization:
        """Integer Cartan matrix; exists for braid orders in {2,3,4,6}.

        Asymmetric edges are oriented so that a_ij for i < j takes the
        longer-root value: m=4 gives (-1,-2) and m=6 gives (-3,-1).
        """
        n = matrix.n
        cartan = [[Scalar.rational(2 if i == j else 0) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                m = matrix.m[i][j]
                if m == 2:
                    continue
                if m == 3:
                    cartan[i][j] = cartan[j][i] = Scalar.rational(-1)
                elif m == 4:
                    cartan[i][j] = Scalar.rational(-1)
                    cartan[j][i] = Scalar.rational(-2)
                elif m == 6:
                    cartan[i][j] = Scalar.rational(-3)
                    cartan[j][i] = Scalar.rational(-1)
                else:
                    raise UnsupportedRealization(
                        f"no crystallographic realization for braid order {m}"
                    )
        return cls(matrix, cartan, preset="crystallographic")

    def a(self, i: int, j: int) -> Scalar:
        """Cartan entry a_ij = alpha_i^vee(alpha_j); 1-based."""
        return self.cartan[i - 1][j - 1]

    def _validate(self) -> None:
        n = self.n
        m = self.matrix.m
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise UnsupportedRealization("diagonal Cartan entries must equal 2")
        for i in range(n):
            for j in range(i + 1, n):
                aij, aji = self.cartan[i][j], self.cartan[j][i]
                mij = m[i][j]
                ok = True
                if mij == 2:
                    ok = aij.is_zero and aji.is_zero
                elif mij == 3:
                    ok = aij == -1 and aji == -1
                elif mij == 4:
                    ok = aij * aji == 2
                elif mij == 5:
                    ok = (
                        aij * (aij * aji - 2) == -1
                        and aji * (aij * aji - 2) == -1
                        and aij != 1
                    )
                elif mij == 6:
                    ok = aij * aji == 3
                else:
                    raise UnsupportedRealization(
                        f"balanced validation beyond braid order 6 unsupported (m={mij})"
                    )
                if not ok:
                    raise UnsupportedRealization(
                        f"Cartan entries a[{i+1}][{j+1}]={aij}, a[{j+1}][{i+1}]={aji} "
                        f"violate the balanced condition for m={mij}"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                if not _braid_holds(self.cartan, i, j, m[i][j]):
                    raise UnsupportedRealization(
                        f"reflection action violates the braid relation on ({i+1},{j+1})"
                    )

    def serialize(self) -> dict:
        return {
            "preset": self.preset,
            "field": "Q" if self.field.is_rational else f"Q({self.field.sqrt_str()})",
            "cartan": [[str(s) for s in row] for row in self.cartan],
        }

    def group_hash(self) -> str:
        blob = repr((self.matrix.m, self.serialize())).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Exact matrix helpers for the reflection representation


def _refl_matrix(cartan, i: int, field: FieldSpec):
    """Matrix of s_i on V in the simple-root basis: s_i(a_j) = a_j - a_ij a_i."""
    n = len(cartan)
    rows = []
    for k in range(n):
        row = []
        for j in range(n):
            val = Scalar.of(1 if k == j else 0, 0, field)
            if k == i:
                val = val - cartan[i][j]
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_mul(x, y, n: int):
    out = []
    for r in range(n):
        xr = x[r]
        row = []
        for c in range(n):
            acc = xr[0] * y[0][c]
            for k in range(1, n):
                acc = acc + xr[k] * y[k][c]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _mat_identity(n: int, field: FieldSpec):
    return tuple(
        tuple(Scalar.of(1 if i == j else 0, 0, field) for j in range(n)) for i in range(n)
    )


def _braid_holds(cartan, i: int, j: int, m: int) -> bool:
    n = len(cartan)
    field = RATIONALS
    for row in cartan:
        for s in row:
            if not s.field.is_rational:
                field = s.field
    si = _refl_matrix(cartan, i, field)
    sj = _refl_matrix(cartan, j, field)
    prod = _mat_mul(si, sj, n)
    acc = _mat_identity(n, field)
    for _ in range(m):
        acc = _mat_mul(acc, prod, n)
    return acc == _mat_identity(n, field)


def _mul_right_gen(mat, cartan_row, i: int, n: int):
    """M -> M . S_i via column operations: col_j -= a_ij * col_i."""
    cols = list(zip(*mat))
    coli = cols[i]
    new_cols = []
    for j in range(n):
        aij = cartan_row[i][j]
        if aij.is_zero:
            new_cols.append(cols[j])
        else:
            new_cols.append(tuple(cols[j][k] - aij * coli[k] for k in range(n)))
    return tuple(zip(*new_cols))


def _mul_left_gen(mat, cartan_row, i: int, n: int):
    """M -> S_i . M: row_i -= sum_k a_ik row_k (with a_ii = 2)."""
    rowi = mat[i]
    new_row = list(rowi)
    for k in range(n):
        aik = cartan_row[i][k]
        if not aik.is_zero:
            rk = mat[k]
            new_row = [new_row[c] - aik * rk[c] for c in range(n)]
    return tuple(tuple(new_row) if r == i else mat[r] for r in range(n))


def _mat_key(mat) -> tuple:
    return tuple(tuple(s.key() for s in row) for row in mat)


# ---------------------------------------------------------------------------
# Elements


class Element:
    """A group element, canonically identified by its reflection matrix.

    Instances are interned per CoxeterSystem: equal elements are identical
    objects, so equality and hashing are pointer-fast.
    """

    __slots__ = (
        "system",
        "mat",
        "inv_mat",
        "length",
        "word",
        "_rdesc",
        "_ldesc",
        "_rmul",
        "_lmul",
        "_inverse",
    )

    def __init__(self, system: CoxeterSystem, mat, inv_mat, length: int, word: Word) -> None:
        self.system = system
        self.mat = mat
        self.inv_mat = inv_mat
        self.length = length
        self.word = word
        self._rdesc: frozenset[int] | None = None
        self._ldesc: frozenset[int] | None = None
        self._rmul: dict[int, Element] = {}
        self._lmul: dict[int, Element] = {}
        self._inverse: Element | None = None

    # -- descent sets --------------------------------------------------------

    @staticmethod
    def _column_negative(mat, i: int) -> bool:
        # Columns are roots: all entries share a sign, so the first nonzero decides.
        for row in mat:
            s = row[i].sign()
            if s:
                return s < 0
        raise AssertionError("zero column in a reflection matrix")

    @property
    def right_descents(self) -> frozenset[int]:
        if self._rdesc is None:
            n = self.system.n
            self._rdesc = frozenset(
                i + 1 for i in range(n) if self._column_negative(self.mat, i)
            )
        return self._rdesc

    @property
    def left_descents(self) -> frozenset[int]:
        if self._ldesc is None:
            n = self.system.n
            self._ldesc = frozenset(
                i + 1 for i in range(n) if self._column_negative(self.inv_mat, i)
            )
        return self._ldesc

    def descents(self, side: str) -> frozenset[int]:
        if side == "right":
            return self.right_descents
        if side == "left":
            return self.left_descents
        raise ValueError("side must be 'left' or 'right'")

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    # -- multiplication --------------------------------------------------------

    def times_gen(self, i: int) -> Element:
        """Right product w * s_i."""
        cached = self._rmul.get(i)
        if cached is None:
            sys = self.system
            sys._check_gen(i)
            mat = _mul_right_gen(self.mat, sys._std_cartan, i - 1, sys.n)
            inv = _mul_left_gen(self.inv_mat, sys._std_cartan, i - 1, sys.n)
            cached = sys._intern(mat, inv)
            self._rmul[i] = cached
            cached._rmul[i] = self
        return cached

    def gen_times(self, i: int) -> Element:
        """Left product s_i * w."""
        cached = self._lmul.get(i)
        if cached is None:
            sys = self.system
            sys._check_gen(i)
            mat = _mul_left_gen(self.mat, sys._std_cartan, i - 1, sys.n)
            inv = _mul_right_gen(self.inv_mat, sys._std_cartan, i - 1, sys.n)
            cached = sys._intern(mat, inv)
            self._lmul[i] = cached
            cached._lmul[i] = self
        return cached

    def __mul__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        if other.length <= self.length:
            out = self
            for i in other.word:
                out = out.times_gen(i)
            return out
        out = other
        for i in reversed(self.word):
            out = out.gen_times(i)
        return out

    def inverse(self) -> Element:
        if self._inverse is None:
            self._inverse = self.system._intern(self.inv_mat, self.mat)
            self._inverse._inverse = self
        return self._inverse

    # -- order ------------------------------------------------------------------

    def bruhat_leq(self, w: Element) -> bool:
        """Bruhat order via the lifting recursion."""
        x = self
        while True:
            if x.length > w.length:
                return False
            if x is w or x.length == 0:
                return True
            s = min(w.left_descents)
            w = w.gen_times(s)
            sx = x.gen_times(s)
            if sx.length < x.length:
                x = sx

    @property
    def sort_key(self) -> tuple:
        return (self.length, self.word)

    def __repr__(self) -> str:
        label = "".join(str(i) for i in self.word) if self.word else "e"
        return f"<{label}>"

    def __str__(self) -> str:
        return "".join(str(i) for i in self.word) if self.word else "e"


class CoxeterSystem:
    """A Coxeter group with interned canonical elements.

    The group table grows on demand under right/left multiplication,
    starting from the identity.
    """

    def __init__(self, matrix: CoxeterMatrix) -> None:
        self.matrix = matrix
        self.n = matrix.n
        self.standard_realization = Realization.standard(matrix)
        self._std_cartan = self.standard_realization.cartan
        self._field = self.standard_realization.field
        self._registry: dict[tuple, Element] = {}
        ident = _mat_identity(self.n, self._field)
        self.identity = Element(self, ident, ident, 0, ())
        self._registry[_mat_key(ident)] = self.identity
        self._all: list[Element] | None = None

    @classmethod
    def from_type(cls, name: str) -> CoxeterSystem:
        return cls(CoxeterMatrix.from_type(name))

    def _check_gen(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"generator {i} out of range 1..{self.n}")

    def _intern(self, mat, inv_mat) -> Element:
        key = _mat_key(mat)
        found = self._registry.get(key)
        if found is not None:
            return found
        word, length = self._canonical_word(mat, inv_mat)
        el = Element(self, mat, inv_mat, length, word)
        self._registry[key] = el
        return el

    def _canonical_word(self, mat, inv_mat) -> tuple[Word, int]:
        """ShortLex reduced word by greedily stripping the smallest left descent."""
        n = self.n
        word: list[int] = []
        cur, cur_inv = mat, inv_mat
        while True:
            desc = None
            for i in range(n):
                if Element._column_negative(cur_inv, i):
                    desc = i
                    break
            if desc is None:
                break
            word.append(desc + 1)
            cur = _mul_left_gen(cur, self._std_cartan, desc, n)
            cur_inv = _mul_right_gen(cur_inv, self._std_cartan, desc, n)
        return tuple(word), len(word)

    # -- public construction -----------------------------------------------

    def simple(self, i: int) -> Element:
        self._check_gen(i)
        return self.identity.times_gen(i)

    def element_from_word(self, word: Iterable[int]) -> Element:
        out = self.identity
        for i in word:
            self._check_gen(int(i))
            out = out.times_gen(int(i))
        return out

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.element_from_word(word).length == len(word)

    # -- group-level data ----------------------------------------------------

    def group_order(self) -> int | None:
        return self.matrix.group_order()

    def all_elements(self, bound: int = 14400) -> list[Element]:
        """BFS enumeration of a finite group, sorted by (length, word)."""
        if self._all is not None:
            return self._all
        order = self.group_order()
        if order is None:
            raise GroupTooLarge("cannot enumerate an infinite Coxeter group")
        if order > bound:
            raise GroupTooLarge(
                f"group order {order} exceeds the configured bound {bound}"
            )
        frontier = [self.identity]
        seen = {self.identity}
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.n + 1):
                    u = w.times_gen(i)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        out = sorted(seen, key=lambda e: e.sort_key)
        if len(out) != order:
            raise AssertionError("enumeration does not match the classified group order")
        self._all = out
        return out

    def longest_element(self) -> Element:
        if not self.matrix.is_finite:
            raise InfiniteParabolic("infinite group has no longest element")
        w = self.identity
        while True:
            free = [i for i in range(1, self.n + 1) if i not in w.right_descents]
            if not free:
                return w
            w = w.times_gen(free[0])


# ---------------------------------------------------------------------------
# Word-level operations


def deletion_composition(w: Element, i: int, word: Sequence[int]) -> tuple[Element, int, Element]:
    """Locate the letter of a reduced word for w deleted by right-multiplying s_i.

    Returns (x1, j, x2) with w = x1 * s_j * x2 length-additively,
    w s_i = x1 x2 and x2 s_i = s_j x2.
    """
    sys = w.system
    word = tuple(int(x) for x in word)
    if sys.element_from_word(word) is not w or len(word) != w.length:
        raise WordNotReduced(f"{word} is not a reduced expression for {w}")
    if i not in w.right_descents:
        raise NotADescent(f"{i} is not a right descent of {w}")
    suffix = sys.identity
    for t in range(len(word) - 1, -1, -1):
        j = word[t]
        if suffix.times_gen(i) is suffix.gen_times(j):
            x1 = sys.element_from_word(word[:t])
            return x1, j, suffix
        suffix = suffix.gen_times(j)
    raise AssertionError("exchange condition failed on a reduced word")


def dihedral_coset_decompose(x: Element, i: int, j: int) -> tuple[Element, Word]:
    """Write x = v * x' with x' in the dihedral subgroup on {i, j} and
    l(x) = l(v) + l(x'), v having no right descent in {i, j}.

    The second component is returned as the reduced word of x'.
    """
    if i == j:
        raise ValueError("need two distinct generators")
    v = x
    stripped: list[int] = []
    while True:
        cand = [s for s in (i, j) if s in v.right_descents]
        if not cand:
            break
        s = min(cand)
        v = v.times_gen(s)
        stripped.append(s)
    return v, tuple(reversed(stripped))


def parabolic_longest(sys: CoxeterSystem, gens: Iterable[int]) -> Element:
    """Longest element of the standard parabolic subgroup on the given generators."""
    gens = sorted(set(int(g) for g in gens))
    for g in gens:
        sys._check_gen(g)
    if gens and sys.matrix.submatrix(gens).group_order() is None:
        raise InfiniteParabolic(f"parabolic subgroup on {gens} is infinite")
    w = sys.identity
    while True:
        free = [g for g in gens if g not in w.right_descents]
        if not free:
            return w
        w = w.times_gen(free[0])
