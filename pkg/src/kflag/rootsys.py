"""Root systems and finite Weyl groups built from a Cartan matrix.

The Cartan matrix is the only input.  Convention: ``entries[i][j]`` is
the Cartan number of the i-th simple root against the j-th, i.e.
``2(b_i, b_j) / (b_j, b_j)`` for simple roots ``b_i, b_j``.  Each simple
reflection acts on the root lattice (in the simple-root basis) by an
integer matrix, and the whole group is generated by closure under right
multiplication.  Elements are identified with indices ``0 .. size-1``
in a canonical order: by length, then by lexicographically smallest
reduced word.  Index 0 is the identity.

Reduced words are tuples of 1-based generator indices throughout.
"""

import re
from dataclasses import dataclass

DEFAULT_GROUP_CAP = 200_000


class NonCartanError(ValueError):
    """The matrix violates the structural Cartan-matrix conditions."""


class NotFiniteTypeError(ValueError):
    """The matrix is Cartan-shaped but generates an infinite group."""


class GroupTooLargeError(RuntimeError):
    """Group generation exceeded the configured element cap."""


class IndexOutOfRangeError(ValueError):
    """A word contains a generator index outside ``1..rank``."""


@dataclass(frozen=True)
class CartanMatrix:
    """Validated generalized Cartan matrix of finite rank."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def pairing(self, i: int, j: int) -> int:
        """Cartan number of simple root ``i`` against ``j`` (1-based)."""
        return self.entries[i - 1][j - 1]

    @classmethod
    def from_rows(cls, rows) -> "CartanMatrix":
        """Structural validation only; see :func:`validate_cartan` for the
        full finite-type check."""
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise NonCartanError("matrix is not square")
        for i in range(n):
            if entries[i][i] != 2:
                raise NonCartanError(f"diagonal entry ({i + 1},{i + 1}) is not 2")
            for j in range(n):
                if i == j:
                    continue
                e = entries[i][j]
                if e > 0:
                    raise NonCartanError(f"positive off-diagonal entry at ({i + 1},{j + 1})")
                if e < -3:
                    raise NonCartanError(f"entry {e} at ({i + 1},{j + 1}) below -3")
                if (e == 0) != (entries[j][i] == 0):
                    raise NonCartanError(
                        f"zero-pattern asymmetry at ({i + 1},{j + 1})"
                    )
        return cls(entries)

    @classmethod
    def named(cls, name: str) -> "CartanMatrix":
        """Built-in finite-type matrices: ``A1..``, ``B2..``, ``C2..``,
        ``D2..``, ``E6/E7/E8``, ``F4``, ``G2``."""
        return cls.from_rows(_named_rows(name))

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def _named_rows(name: str) -> list[list[int]]:
    m = re.fullmatch(r"([A-Ga-g])\s*(\d+)", name.strip())
    if not m:
        raise NonCartanError(f"unrecognized Cartan type {name!r}")
    family, n = m.group(1).upper(), int(m.group(2))
    if n < 1:
        raise NonCartanError(f"rank must be positive in {name!r}")

    def from_edges(n, edges):
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in edges:
            rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
        return rows

    chain = [(i, i + 1) for i in range(1, n)]
    if family == "A":
        return from_edges(n, chain)
    if family == "B":
        rows = from_edges(n, chain)
        if n >= 2:
            rows[n - 2][n - 1] = -2
        return rows
    if family == "C":
        rows = from_edges(n, chain)
        if n >= 2:
            rows[n - 1][n - 2] = -2
        return rows
    if family == "D":
        if n < 2:
            raise NonCartanError("type D needs rank >= 2")
        edges = [(i, i + 1) for i in range(1, n - 1)]
        if n >= 3:
            edges.append((n - 2, n))
        return from_edges(n, edges)
    if family == "E":
        if n not in (6, 7, 8):
            raise NonCartanError("type E exists for ranks 6, 7, 8")
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        if n >= 7:
            edges.append((6, 7))
        if n == 8:
            edges.append((7, 8))
        return from_edges(n, edges)
    if family == "F":
        if n != 4:
            raise NonCartanError("type F exists for rank 4")
        rows = from_edges(4, [(1, 2), (2, 3), (3, 4)])
        rows[1][2] = -2
        return rows
    if family == "G":
        if n != 2:
            raise NonCartanError("type G exists for rank 2")
        return [[2, -1], [-3, 2]]
    raise NonCartanError(f"unrecognized Cartan type {name!r}")


def validate_cartan(rows, *, cap: int = DEFAULT_GROUP_CAP) -> CartanMatrix:
    """Full validation: structure plus finite type.

    Finite type is checked by bounded group generation; exceeding the
    cap raises :class:`NotFiniteTypeError`.
    """
    cartan = CartanMatrix.from_rows(rows)
    try:
        WeylGroup(cartan, cap=cap)
    except GroupTooLargeError as exc:
        raise NotFiniteTypeError(
            f"group generation exceeded {cap} elements; not finite type "
            f"(or raise the cap)"
        ) from exc
    return cartan


@dataclass(frozen=True)
class WeylElement:
    """One group element: canonical index, cached length, canonical
    (lexicographically minimal) reduced word, and the integer matrix of
    its action on the root lattice in the simple-root basis."""

    index: int
    length: int
    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ParabolicDatum:
    """Minimal-length representatives of the left cosets of the standard
    parabolic subgroup generated by ``subset``."""

    subset: frozenset[int]
    reps: tuple[int, ...]
    subgroup_size: int


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


class WeylGroup:
    """Finite Weyl group generated from a Cartan matrix.

    Generation is a single construction phase; afterwards every table is
    immutable and queries are pure.
    """

    def __init__(self, cartan: CartanMatrix, *, cap: int = DEFAULT_GROUP_CAP):
        if not isinstance(cartan, CartanMatrix):
            cartan = CartanMatrix.from_rows(cartan)
        self.cartan = cartan
        self.rank = cartan.rank
        self._generate(cap)
        self._bruhat = None
        self._positive_roots = None
        self._reduced_words: dict[int, tuple[tuple[int, ...], ...]] = {}

    # -- construction --------------------------------------------------

    def _generator_matrix(self, i: int):
        # reflection r_i sends a_j to a_j - pairing(j, i) * a_i
        n = self.rank
        rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
        for j in range(n):
            rows[i - 1][j] -= self.cartan.pairing(j + 1, i)
        return tuple(tuple(r) for r in rows)

    def _generate(self, cap: int):
        n = self.rank
        gens = [self._generator_matrix(i) for i in range(1, n + 1)]
        identity = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
        index = {identity: 0}
        mats = [identity]
        lengths = [0]
        right: list[list[int | None]] = [[None] * n]
        frontier = [0]
        while frontier:
            next_frontier = []
            for w in frontier:
                for g in range(n):
                    if right[w][g] is not None:
                        continue
                    m = _mat_mul(mats[w], gens[g])
                    idx = index.get(m)
                    if idx is None:
                        idx = len(mats)
                        if idx >= cap:
                            raise GroupTooLargeError(
                                f"more than {cap} elements generated"
                            )
                        index[m] = idx
                        mats.append(m)
                        lengths.append(lengths[w] + 1)
                        right.append([None] * n)
                        next_frontier.append(idx)
                    right[w][g] = idx
                    right[idx][g] = w
            frontier = next_frontier

        size = len(mats)
        # left multiplication table via matrix lookup
        left = [[index[_mat_mul(gens[g], mats[w])] for g in range(n)] for w in range(size)]
        # canonical lexmin reduced words, by increasing length
        words: list[tuple[int, ...] | None] = [None] * size
        words[0] = ()
        order = sorted(range(size), key=lambda w: lengths[w])
        for w in order:
            if w == 0:
                continue
            for g in range(n):
                u = left[w][g]
                if lengths[u] < lengths[w]:
                    words[w] = (g + 1,) + words[u]
                    break

        # canonical order: (length, lexmin word); remap all tables
        perm = sorted(range(size), key=lambda w: (lengths[w], words[w]))
        inv_perm = [0] * size
        for new, old in enumerate(perm):
            inv_perm[old] = new
        self.size = size
        self._matrices = [mats[old] for old in perm]
        self._lengths = [lengths[old] for old in perm]
        self._words = [words[old] for old in perm]
        self._right = [[inv_perm[right[old][g]] for g in range(n)] for old in perm]
        self._left = [[inv_perm[left[old][g]] for g in range(n)] for old in perm]
        self._index = {m: i for i, m in enumerate(self._matrices)}
        self._inverse = self._build_inverses()
        self.elements = [
            WeylElement(i, self._lengths[i], self._words[i], self._matrices[i])
            for i in range(size)
        ]

    def _build_inverses(self):
        inv = [0] * self.size
        for w in range(self.size):
            u = 0
            for letter in reversed(self._words[w]):
                u = self._right[u][letter - 1]
            inv[w] = u
        return inv

    # -- basic queries --------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def length(self, w: int) -> int:
        return self._lengths[w]

    def word(self, w: int) -> tuple[int, ...]:
        """Canonical (lexicographically minimal) reduced word."""
        return self._words[w]

    def action_matrix(self, w: int) -> tuple[tuple[int, ...], ...]:
        return self._matrices[w]

    def simple(self, i: int) -> int:
        """Element index of the i-th simple reflection (1-based)."""
        self._check_letter(i)
        return self._right[0][i - 1]

    def right(self, w: int, i: int) -> int:
        """``w * r_i``."""
        return self._right[w][i - 1]

    def left(self, i: int, w: int) -> int:
        """``r_i * w``."""
        return self._left[w][i - 1]

    def inverse(self, w: int) -> int:
        return self._inverse[w]

    def product(self, u: int, w: int) -> int:
        for letter in self._words[w]:
            u = self._right[u][letter - 1]
        return u

    def _check_letter(self, i: int):
        if not 1 <= i <= self.rank:
            raise IndexOutOfRangeError(f"generator index {i} outside 1..{self.rank}")

    def element(self, word) -> int:
        """Evaluate a word (any sequence of generator indices)."""
        w = 0
        for letter in word:
            self._check_letter(letter)
            w = self._right[w][letter - 1]
        return w

    def has_right_descent(self, w: int, i: int) -> bool:
        return self._lengths[self._right[w][i - 1]] < self._lengths[w]

    def longest(self) -> int:
        return max(range(self.size), key=lambda w: self._lengths[w])

    @property
    def cache_key(self):
        return self.cartan.entries

    # -- reduced words ----------------------------------------------------

    def reduced_words(self, w: int) -> tuple[tuple[int, ...], ...]:
        """All reduced decompositions of ``w``, sorted."""
        cached = self._reduced_words.get(w)
        if cached is not None:
            return cached
        if w == 0:
            result: tuple[tuple[int, ...], ...] = ((),)
        else:
            acc = []
            for i in range(1, self.rank + 1):
                u = self._right[w][i - 1]
                if self._lengths[u] < self._lengths[w]:
                    acc.extend(prefix + (i,) for prefix in self.reduced_words(u))
            result = tuple(sorted(acc))
        self._reduced_words[w] = result
        return result

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, u: int, w: int) -> bool:
        """Subword order, via the standard lifting recursion."""
        lu, lw = self._lengths[u], self._lengths[w]
        while True:
            if u == w or u == 0:
                return True
            if lu > lw or lw == 0:
                return False
            i = self._words[w][0]
            w = self._left[w][i - 1]
            lw -= 1
            u2 = self._left[u][i - 1]
            if self._lengths[u2] < lu:
                u = u2
                lu -= 1

    def bruhat_matrix(self) -> list[list[bool]]:
        """Full relation table; ``m[u][w]`` is ``u <= w``.  Cached."""
        if self._bruhat is None:
            self._bruhat = [
                [self.bruhat_leq(u, w) for w in range(self.size)]
                for u in range(self.size)
            ]
        return self._bruhat

    # -- roots and lengths ---------------------------------------------------

    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots as coordinate vectors in the simple-root basis."""
        if self._positive_roots is None:
            n = self.rank
            simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
            seen = set(simple)
            frontier = list(simple)
            while frontier:
                nxt = []
                for root in frontier:
                    for g in range(n):
                        m = self._matrices[self.simple(g + 1)]
                        image = tuple(
                            sum(m[r][c] * root[c] for c in range(n)) for r in range(n)
                        )
                        if image not in seen:
                            seen.add(image)
                            nxt.append(image)
                frontier = nxt
            self._positive_roots = tuple(
                sorted(r for r in seen if all(x >= 0 for x in r))
            )
        return self._positive_roots

    def inversion_length(self, w: int) -> int:
        """Number of positive roots sent to negative roots by ``w``."""
        m = self._matrices[w]
        n = self.rank
        count = 0
        for root in self.positive_roots():
            image = tuple(sum(m[r][c] * root[c] for c in range(n)) for r in range(n))
            if any(x < 0 for x in image):
                count += 1
        return count

    # -- parabolic quotients -----------------------------------------------

    def minimal_coset_reps(self, subset) -> ParabolicDatum:
        """Minimal-length representatives of the cosets ``w W'`` where
        ``W'`` is generated by the simple reflections in ``subset``."""
        subset = frozenset(subset)
        for i in subset:
            self._check_letter(i)
        reps = tuple(
            w
            for w in range(self.size)
            if not any(self.has_right_descent(w, i) for i in subset)
        )
        sub = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for w in frontier:
                for i in subset:
                    u = self._right[w][i - 1]
                    if u not in sub:
                        sub.add(u)
                        nxt.append(u)
            frontier = nxt
        return ParabolicDatum(subset=subset, reps=reps, subgroup_size=len(sub))


@dataclass(frozen=True)
class WordCartanMatrix:
    """Strictly upper triangular integer matrix attached to a word of
    simple roots: entry (i, j) with i < j is the Cartan number of the
    j-th letter against the i-th."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows) -> "WordCartanMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        m = len(entries)
        for i, row in enumerate(entries):
            if len(row) != m:
                raise ValueError("matrix is not square")
            for j in range(i + 1):
                if row[j] != 0:
                    raise ValueError(
                        f"entry ({i + 1},{j + 1}) nonzero below or on the diagonal"
                    )
        return cls(entries)

    def negate(self) -> "WordCartanMatrix":
        return WordCartanMatrix(tuple(tuple(-x for x in row) for row in self.entries))


def word_cartan_matrix(word, cartan: CartanMatrix) -> WordCartanMatrix:
    """Matrix of a simple-root sequence (reducedness not required)."""
    word = tuple(word)
    for letter in word:
        if not 1 <= letter <= cartan.rank:
            raise IndexOutOfRangeError(
                f"generator index {letter} outside 1..{cartan.rank}"
            )
    m = len(word)
    rows = [
        [cartan.pairing(word[j], word[i]) if i < j else 0 for j in range(m)]
        for i in range(m)
    ]
    return WordCartanMatrix(tuple(tuple(r) for r in rows))
