"""Brute-force oracles, used only for verification.

Each function here re-derives something the production code computes by
a smarter route, using the most literal method available: subset
enumeration instead of the prefix DP, exhaustive term rewriting instead
of the elimination cascade, subword scanning instead of the Bruhat
lifting recursion, and the classical transposition description of the
cohomology product in type A.  Deliberately exponential; inputs are
size-capped.  No code is shared with the production paths beyond the
polynomial ring and the group multiplication tables.
"""

from itertools import combinations

from .delta import build_q_sequences
from .polyring import Polynomial
from .rootsys import WeylGroup, WordCartanMatrix

MAX_NAIVE_WORD = 15


class WordTooLongError(ValueError):
    """Subset enumeration refused: 2^m would be too large."""


class NotTypeAError(ValueError):
    """The group is not symmetric-group-shaped."""


def naive_derived_poly(group: WeylGroup, word, w: int) -> Polynomial:
    """Indicator sum over all subsets whose subsequence derives ``w``.

    The greedy descent test is restated inline so this path shares
    nothing with :func:`kflag.derived.is_derived`.
    """
    word = tuple(word)
    m = len(word)
    if m > MAX_NAIVE_WORD:
        raise WordTooLongError(f"word of length {m} exceeds {MAX_NAIVE_WORD}")
    lengths = group._lengths
    right = group._right
    terms = {}
    for mask in range(1 << m):
        cur = w
        for pos in range(m - 1, -1, -1):
            if mask >> pos & 1:
                nxt = right[cur][word[pos] - 1]
                if lengths[nxt] < lengths[cur]:
                    cur = nxt
        if cur == 0:
            exps = tuple(mask >> pos & 1 for pos in range(m))
            terms[exps] = 1
    return Polynomial(m, terms)


def normal_form_coefficient(f: Polynomial, matrix: WordCartanMatrix) -> int:
    """Coefficient of ``y1*...*ym`` in the square-free normal form.

    Rewrites one offending term at a time with ``yk^e ->
    (qbar_k - 1)^(e-1) * yk``, highest variable first, until the whole
    polynomial is square-free.  Terminates because each relation only
    introduces variables below ``k``.
    """
    m = matrix.size
    if f.num_vars != m:
        f = f.restrict(m)
    qbar = [p.extend(m) for p in build_q_sequences(matrix).qbar]
    work = f
    while True:
        target = None
        for exps in work.terms:
            for k in range(m - 1, -1, -1):
                if exps[k] >= 2:
                    if target is None or k > target[1]:
                        target = (exps, k)
                    break
        if target is None:
            break
        exps, k = target
        coeff = work.terms[exps]
        rest = exps[:k] + (1,) + exps[k + 1 :]
        replacement = (qbar[k] - 1) ** (exps[k] - 1) * Polynomial.monomial(rest, coeff)
        work = work - Polynomial.monomial(exps, coeff) + replacement
    return work.coefficient((1,) * m)


def bruhat_subword_oracle(group: WeylGroup, u: int, w: int) -> bool:
    """Subword scan on one fixed reduced word of ``w``.

    True when some subset of positions of size ``l(u)`` multiplies out
    to ``u``; a subword of that size is automatically reduced.
    """
    word = group.word(w)
    k = group.length(u)
    if k > len(word):
        return False
    right = group._right
    for positions in combinations(range(len(word)), k):
        cur = 0
        for p in positions:
            cur = right[cur][word[p] - 1]
        if cur == u:
            return True
    return False


def permutation_model(group: WeylGroup) -> list[tuple[int, ...]]:
    """One-line permutations for a type-A group, generator ``i`` acting
    as the adjacent transposition of ``i`` and ``i + 1``.

    The bridge is validated on the spot: it must be injective and must
    match lengths with inversion counts, which pins the group as the
    full symmetric group on ``rank + 1`` letters.
    """
    n = group.rank + 1
    perms = []
    for w in range(group.size):
        p = list(range(1, n + 1))
        for letter in group.word(w):
            p[letter - 1], p[letter] = p[letter], p[letter - 1]
        perms.append(tuple(p))
    if len(set(perms)) != group.size or group.size != _factorial(n):
        raise NotTypeAError(f"group of size {group.size} is not A{n - 1}")
    for w, p in enumerate(perms):
        if group.length(w) != _inversions(p):
            raise NotTypeAError("length does not match inversion count")
    return perms


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _inversions(p) -> int:
    return sum(
        1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j]
    )


def monk_product(perm: tuple[int, ...], k: int) -> dict[tuple[int, ...], int]:
    """Classical cohomology product with the k-th codimension-one class.

    Returns the permutations ``perm * t_ab`` with ``a <= k < b`` whose
    length goes up by exactly one, each with coefficient 1.
    """
    n = len(perm)
    if not 1 <= k < n:
        raise ValueError(f"index {k} outside 1..{n - 1}")
    base = _inversions(perm)
    out = {}
    for a in range(1, k + 1):
        for b in range(k + 1, n + 1):
            q = list(perm)
            q[a - 1], q[b - 1] = q[b - 1], q[a - 1]
            q = tuple(q)
            if _inversions(q) == base + 1:
                out[q] = 1
    return out
