"""Structure constants for the two K-theory bases.

Fix a group ``W`` and a basis (``"demazure"`` or ``"grothendieck"``).
The constant attached to ``(u, v, w)`` is the coefficient of the w-th
basis element in the product of the u-th and v-th ones.  Both are
computed by a recursion over a reduced word of ``w``: an elimination
operator applied to the product of the two image polynomials of the
word gives the top coefficient, and previously computed constants at
shorter elements are subtracted off.

Demazure case, with ``m = l(w)`` and image polynomials ``P``::

    (-1)^l(w) C(u,v,w) = (-1)^(l(u)+l(v)) delta_a(A_w, [P(u) P(v)]_(m))
                         - sum over derived x, l(u)+l(v) <= l(x) < l(w),
                           of (-1)^l(x) C(u,v,x)

where "derived x" means the whole word derives ``x``.  Grothendieck
case, with image polynomials ``B`` and ``b(x)`` the coefficient of the
full square-free monomial in ``B(x)``::

    (-1)^l(w) K(u,v,w) = delta_a(A_w, [B(u) B(v)]_(m))
                         - sum over x < w, l(x) >= l(u)+l(v),
                           of b(x) K(u,v,x)

Both recursions are triangular in length, so tables are filled in
canonical element order.  The computed value does not depend on the
chosen reduced word of ``w``; production tables use the canonical word
and the verification suite exercises all words.
"""

from dataclasses import dataclass, field

from .delta import QSequences, build_q_sequences, delta_a
from .derived import demazure_image, grothendieck_image
from .polyring import Polynomial
from .rootsys import GroupTooLargeError, WeylGroup, word_cartan_matrix

DEMAZURE = "demazure"
GROTHENDIECK = "grothendieck"
BASES = (DEMAZURE, GROTHENDIECK)

DEFAULT_TABLE_CAP = 500


class MissingLowerConstantError(KeyError):
    """A required shorter-element constant was not supplied."""


class BasisMismatchError(ValueError):
    """An operation was applied to a table of the wrong basis."""


def _check_basis(basis: str):
    if basis not in BASES:
        raise BasisMismatchError(f"unknown basis {basis!r}; expected one of {BASES}")


class _WordContext:
    """Per-word data shared by every ``(u, v)`` pair: word matrix, its
    elimination sequences, and the image polynomials."""

    def __init__(self, group: WeylGroup, word: tuple[int, ...]):
        self.word = word
        self.size = len(word)
        self.matrix = word_cartan_matrix(word, group.cartan)
        # only degrees <= size survive the cascade's truncations
        self.seqs = build_q_sequences(self.matrix, degree_bound=self.size)
        self.demazure = demazure_image(group, word)
        top = (1,) * self.size
        # coefficient of the full square-free monomial in P(x): 1 exactly
        # when the whole word derives x
        self.derived_full = [p.coefficient(top) == 1 for p in self.demazure]
        self._grothendieck: list[Polynomial] | None = None
        self._top_coeff: list[int] | None = None
        self._group = group

    @property
    def grothendieck(self) -> list[Polynomial]:
        if self._grothendieck is None:
            self._grothendieck = grothendieck_image(self._group, self.word)
        return self._grothendieck

    def top_coefficient(self, x: int) -> int:
        """Coefficient of the full monomial in ``B(x)``."""
        if self._top_coeff is None:
            top = (1,) * self.size
            lengths = self._group._lengths
            sign = [(-1) ** lengths[u] for u in range(self._group.size)]
            leq = self._group.bruhat_matrix()
            self._top_coeff = [
                sum(
                    sign[u]
                    for u in range(self._group.size)
                    if leq[x2][u] and self.derived_full[u]
                )
                for x2 in range(self._group.size)
            ]
        return self._top_coeff[x]


_context_cache: dict[tuple, _WordContext] = {}


def _context(group: WeylGroup, word) -> _WordContext:
    word = tuple(word)
    key = (group.cache_key, word)
    ctx = _context_cache.get(key)
    if ctx is None:
        ctx = _WordContext(group, word)
        _context_cache[key] = ctx
    return ctx


def _delta_of_product(ctx: _WordContext, f: Polynomial, g: Polynomial) -> int:
    if not f or not g:
        return 0
    product = (f * g).truncate(ctx.size)
    if not product:
        return 0
    return delta_a(ctx.matrix, product, ctx.seqs)


def demazure_constant(group: WeylGroup, u: int, v: int, w: int, word, lower) -> int:
    """One Demazure constant from a reduced word of ``w``.

    ``lower`` maps shorter elements to already-known constants for the
    same ``(u, v)``; it must cover every ``x`` in the correction range.
    """
    ctx = _context(group, tuple(word))
    lengths = group._lengths
    lu, lv, lw = lengths[u], lengths[v], lengths[w]
    images = ctx.demazure
    total = (-1) ** (lu + lv) * _delta_of_product(ctx, images[u], images[v])
    for x in range(group.size):
        lx = lengths[x]
        if lu + lv <= lx < lw and ctx.derived_full[x]:
            try:
                cx = lower[x]
            except KeyError:
                raise MissingLowerConstantError(
                    f"constant for element {x} (length {lx}) not supplied"
                ) from None
            total -= (-1) ** lx * cx
    return (-1) ** lw * total


def grothendieck_constant(group: WeylGroup, u: int, v: int, w: int, word, lower) -> int:
    """One Grothendieck constant from a reduced word of ``w``."""
    ctx = _context(group, tuple(word))
    lengths = group._lengths
    lu, lv, lw = lengths[u], lengths[v], lengths[w]
    images = ctx.grothendieck
    total = _delta_of_product(ctx, images[u], images[v])
    leq = group.bruhat_matrix()
    for x in range(group.size):
        if x != w and leq[x][w] and lengths[x] >= lu + lv:
            weight = ctx.top_coefficient(x)
            if weight:
                try:
                    kx = lower[x]
                except KeyError:
                    raise MissingLowerConstantError(
                        f"constant for element {x} (length {lengths[x]}) not supplied"
                    ) from None
                total -= weight * kx
    return (-1) ** lw * total


_CONSTANT_FN = {DEMAZURE: demazure_constant, GROTHENDIECK: grothendieck_constant}


def expand_product(group: WeylGroup, basis: str, u: int, v: int) -> dict[int, int]:
    """Expand the product of the u-th and v-th basis elements.

    Returns the nonzero coefficients, keyed by element index.  Elements
    are visited in canonical order (increasing length) with the
    canonical reduced word of each; the Grothendieck unit is
    short-circuited.
    """
    _check_basis(basis)
    if basis == GROTHENDIECK and (u == 0 or v == 0):
        return {v if u == 0 else u: 1}
    fn = _CONSTANT_FN[basis]
    lengths = group._lengths
    floor = lengths[u] + lengths[v]
    table: dict[int, int] = {}
    for w in range(group.size):
        if lengths[w] < floor:
            table[w] = 0
            continue
        table[w] = fn(group, u, v, w, group.word(w), table)
    return {w: c for w, c in table.items() if c}


@dataclass
class ConstantTable:
    """All structure constants of one basis over one group.

    ``entries`` holds the nonzero constants keyed by ``(u, v, w)``
    element-index triples; everything absent is zero.
    """

    basis: str
    group: WeylGroup
    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)

    def get(self, u: int, v: int, w: int) -> int:
        return self.entries.get((u, v, w), 0)

    def row(self, u: int, v: int) -> dict[int, int]:
        """Expansion of one product: ``w -> coefficient``, nonzero only."""
        return {
            w: c for (u2, v2, w), c in self.entries.items() if (u2, v2) == (u, v)
        }


def full_table(
    group: WeylGroup, basis: str, *, max_group_size: int = DEFAULT_TABLE_CAP
) -> ConstantTable:
    """Every constant of the basis, through the raw recursions.

    No shortcut is taken for the unit or for commutativity, so algebra
    axioms checked against this table are real checks.  Refuses groups
    larger than ``max_group_size``.
    """
    _check_basis(basis)
    if group.size > max_group_size:
        raise GroupTooLargeError(
            f"group has {group.size} elements, table cap is {max_group_size}"
        )
    fn = _CONSTANT_FN[basis]
    lengths = group._lengths
    entries: dict[tuple[int, int, int], int] = {}
    for u in range(group.size):
        for v in range(group.size):
            floor = lengths[u] + lengths[v]
            row: dict[int, int] = {}
            for w in range(group.size):
                if lengths[w] < floor:
                    row[w] = 0
                    continue
                row[w] = fn(group, u, v, w, group.word(w), row)
            for w, c in row.items():
                if c:
                    entries[(u, v, w)] = c
    return ConstantTable(basis=basis, group=group, entries=entries)


def parabolic_constants(table: ConstantTable, parabolic) -> ConstantTable:
    """Restrict a Grothendieck table to the minimal coset representatives.

    The restricted table is the multiplication table of the flag variety
    for the corresponding parabolic: the constants are literally equal.
    """
    if table.basis != GROTHENDIECK:
        raise BasisMismatchError(
            "parabolic restriction is stated for the Grothendieck basis only"
        )
    reps = set(parabolic.reps)
    entries = {
        (u, v, w): c
        for (u, v, w), c in table.entries.items()
        if u in reps and v in reps and w in reps
    }
    return ConstantTable(basis=table.basis, group=table.group, entries=entries)
