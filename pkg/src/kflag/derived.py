"""Derived sequences and image polynomials.

Fix a sequence ``word`` of simple roots (repetitions allowed).  A group
element ``w`` *derives from* the sequence when the right-to-left greedy
descent walk through the letters, starting at ``w`` and taking every
length-decreasing step, ends at the identity.  The greedy subsequence
is then automatically a reduced word of ``w`` read left to right.
Every sequence derives the identity, and a sequence shorter than
``l(w)`` never derives ``w``.

For each ``w`` the *image polynomial* ``P(w)`` is the indicator sum of
the subsets ``L`` of letter positions whose subsequence derives ``w``:
``P(w) = sum y_L``.  These are computed for all ``w`` at once by a
dynamic program over prefixes of the word; the per-subset enumeration
is kept independently in :mod:`kflag.oracles` as a cross-check.

The second family ``B(w) = sum_{u >= w} (-1)^l(u) P(u)`` (Bruhat order)
plays the same role for the Grothendieck basis, and the two bases are
related by the unitriangular transition matrices built here.
"""

from .polyring import Polynomial
from .rootsys import WeylGroup


def is_derived(group: WeylGroup, word, w: int) -> bool:
    """Greedy right-to-left descent test described above."""
    lengths = group._lengths
    cur = w
    for letter in reversed(tuple(word)):
        nxt = group.right(cur, letter)
        if lengths[nxt] < lengths[cur]:
            cur = nxt
    return cur == 0


def demazure_image(group: WeylGroup, word) -> list[Polynomial]:
    """Image polynomials ``P(w)`` for every ``w``, indexed by element.

    DP over prefixes: with ``P_k`` the table for the first ``k``
    letters, appending letter ``b`` gives
    ``P_{k+1}(x) = P_k(x) + y_{k+1} * P_k(x r_b)`` when ``r_b`` is a
    right descent of ``x``, and ``P_{k+1}(x) = P_k(x) * (1 + y_{k+1})``
    otherwise.
    """
    word = tuple(word)
    m = len(word)
    lengths = group._lengths
    table = [Polynomial.zero(m) for _ in range(group.size)]
    table[0] = Polynomial.one(m)
    for k, letter in enumerate(word, start=1):
        yk = Polynomial.variable(k, m)
        new = []
        for x in range(group.size):
            moved = group.right(x, letter)
            src = moved if lengths[moved] < lengths[x] else x
            new.append(table[x] + yk * table[src])
        table = new
    return table


def grothendieck_image(group: WeylGroup, word) -> list[Polynomial]:
    """Image polynomials ``B(w) = sum_{u >= w} (-1)^l(u) P(u)``."""
    plain = demazure_image(group, word)
    leq = group.bruhat_matrix()
    lengths = group._lengths
    m = len(tuple(word))
    out = []
    for w in range(group.size):
        acc = Polynomial.zero(m)
        row = leq[w]
        for u in range(group.size):
            if row[u] and plain[u]:
                acc = acc - plain[u] if lengths[u] % 2 else acc + plain[u]
        out.append(acc)
    return out


def basis_transition(group: WeylGroup) -> tuple[list[list[int]], list[list[int]]]:
    """Transition matrices between the two bases.

    Returns ``(omega_from_a, a_from_omega)``: row ``w`` of the first
    expresses the w-th Grothendieck class as the sum of the classes
    ``a_u`` over ``u >= w``; row ``w`` of the second inverts that with
    the alternating sign ``(-1)^(l(u) - l(w))``.  The matrices are
    mutually inverse.
    """
    leq = group.bruhat_matrix()
    lengths = group._lengths
    size = group.size
    omega_from_a = [[1 if leq[w][u] else 0 for u in range(size)] for w in range(size)]
    a_from_omega = [
        [
            ((-1) ** (lengths[u] - lengths[w]) if leq[w][u] else 0)
            for u in range(size)
        ]
        for w in range(size)
    ]
    return omega_from_a, a_from_omega
