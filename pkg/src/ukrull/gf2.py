"""Linear algebra over GF(2) with vectors packed into Python ints.

A vector is an int whose bit ``i`` is the coordinate on basis element ``i``.
A linear map is a list of ints: entry ``j`` is the image of basis vector ``j``.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence


def apply(images: Sequence[int], v: int) -> int:
    """Image of ``v`` under the map whose columns are ``images``."""
    out = 0
    while v:
        low = v & -v
        out ^= images[low.bit_length() - 1]
        v ^= low
    return out


def compose(outer: Sequence[int], inner: Sequence[int]) -> List[int]:
    return [apply(outer, v) for v in inner]


def bits(v: int) -> List[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def popcount(v: int) -> int:
    return bin(v).count("1")


class Echelon:
    """Incrementally built row-echelon basis of a subspace.

    Rows are keyed by their highest set bit. Each row remembers which of the
    inserted vectors it is a combination of, so membership tests can also
    return coordinates.
    """

    __slots__ = ("rows", "combos", "count")

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict = {}
        self.combos: dict = {}
        self.count = 0
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def _reduce(self, v: int, combo: int):
        rows = self.rows
        while v:
            h = v.bit_length() - 1
            row = rows.get(h)
            if row is None:
                return v, combo, h
            v ^= row
            combo ^= self.combos[h]
        return 0, combo, -1

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        combo = 1 << self.count
        self.count += 1
        v, combo, h = self._reduce(v, combo)
        if v:
            self.rows[h] = v
            self.combos[h] = combo
            return True
        return False

    def contains(self, v: int) -> bool:
        return self._reduce(v, 0)[0] == 0

    def coords(self, v: int) -> int:
        """Combination of inserted vectors summing to ``v``.

        Raises ValueError when ``v`` is outside the span.
        """
        r, combo, _ = self._reduce(v, 0)
        if r:
            raise ValueError("vector not in span")
        return combo

    def normal_form(self, v: int) -> int:
        """Canonical representative of ``v`` modulo the span (no pivot bits)."""
        rows = self.rows
        out = 0
        while v:
            h = v.bit_length() - 1
            row = rows.get(h)
            if row is None:
                out |= 1 << h
                v ^= 1 << h
            else:
                v ^= row
        return out

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[int]:
        return [self.rows[h] for h in sorted(self.rows)]


def rank(vectors: Iterable[int]) -> int:
    return len(Echelon(vectors))


def span_equal(a: Iterable[int], b: Iterable[int]) -> bool:
    ea, eb = Echelon(a), Echelon(b)
    return len(ea) == len(eb) and all(eb.contains(v) for v in ea.basis())


def kernel(images: Sequence[int]) -> List[int]:
    """Basis of the kernel of the map with column images ``images``."""
    rows: dict = {}
    out = []
    for j, img in enumerate(images):
        v, combo = img, 1 << j
        while v:
            h = v.bit_length() - 1
            row = rows.get(h)
            if row is None:
                rows[h] = (v, combo)
                break
            v ^= row[0]
            combo ^= row[1]
        if not v:
            out.append(combo)
    return out


def image(images: Sequence[int]) -> List[int]:
    return Echelon(images).basis()


class Subspace:
    """A subspace of GF(2)^n with a fixed basis and a complement.

    ``basis`` is the list of spanning vectors as given (assumed independent
    after construction; dependent inputs are dropped). ``coords`` expresses a
    member in that basis. The quotient GF(2)^n / subspace is identified with
    the span of the non-pivot coordinates; ``quotient_coords`` gives the
    coordinates of a vector's class there.
    """

    def __init__(self, n: int, vectors: Iterable[int] = ()):
        self.n = n
        ech = Echelon()
        basis = []
        for v in vectors:
            if ech.add(v):
                basis.append(v)
        # rebuild so that combos index into the independent basis
        self._ech = Echelon(basis)
        self.basis = basis
        pivots = set(self._ech.rows)
        self.complement = [i for i in range(n) if i not in pivots]
        self._qindex = {b: i for i, b in enumerate(self.complement)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.n - len(self.basis)

    def contains(self, v: int) -> bool:
        return self._ech.contains(v)

    def coords(self, v: int) -> int:
        return self._ech.coords(v)

    def quotient_coords(self, v: int) -> int:
        r = self._ech.normal_form(v)
        out = 0
        for b in bits(r):
            out |= 1 << self._qindex[b]
        return out

    def lift(self, q: int) -> int:
        """Representative in GF(2)^n of a quotient class."""
        out = 0
        for i in bits(q):
            out |= 1 << self.complement[i]
        return out

    def __contains__(self, v: int) -> bool:
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.dim == other.dim and self.issubset(other)

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def full_space(n: int) -> Subspace:
    return Subspace(n, [1 << i for i in range(n)])


def solve(images: Sequence[int], target: int):
    """Some ``v`` with apply(images, v) == target, or None."""
    ech = Echelon(images)
    try:
        return ech.coords(target)
    except ValueError:
        return None


def transpose(images: Sequence[int], n_rows: int) -> List[int]:
    """Column images of the transposed map (target dimension ``n_rows``)."""
    out = [0] * n_rows
    for j, col in enumerate(images):
        for i in bits(col):
            out[i] |= 1 << j
    return out


def kron(a: Sequence[int], a_rows: int, b: Sequence[int], b_rows: int) -> List[int]:
    """Tensor product of maps; basis index ``i * dim_b + j`` on both sides."""
    out = []
    for ca in a:
        ia = bits(ca)
        for cb in b:
            v = 0
            for i in ia:
                v |= cb << (i * b_rows)
            out.append(v)
    return out
