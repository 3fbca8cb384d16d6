"""Elimination operators on graded polynomial rings.

A strictly upper triangular integer matrix ``A`` of size ``m`` presents
a ring ``Z[y1..ym] / (yk^2 = (qbar_k - 1) yk)`` whose additive basis is
the square-free monomials.  This module builds the two polynomial
sequences ``q_k`` / ``qbar_k`` from ``A`` and evaluates the composite
elimination operator ``delta_a``: starting from a polynomial of degree
at most ``m``, one variable is eliminated per step, and the final
integer is the coefficient of ``y1*...*ym`` in the square-free normal
form of the input (see :func:`kflag.oracles.normal_form_coefficient`
for the brute-force counterpart).

The single elimination step maps ``f = h0 + h1*yk + ... + hk*yk^k`` to
``[h1 + h2*(qbar_k - 1) + ... + hk*(qbar_k - 1)^(k-1)]`` truncated to
degree ``k - 1``.

Sequences are built exactly, with no intermediate truncation: the
oracle equivalence requires the exact ``qbar_k``.
"""

from dataclasses import dataclass

from .polyring import Polynomial, VarCountMismatchError
from .rootsys import WordCartanMatrix


class DegreeTooHighError(ValueError):
    """Input degree exceeds the level of the elimination step."""


class NotHomogeneousError(ValueError):
    """The triangular operator needs a homogeneous top-degree input."""


@dataclass(frozen=True)
class QSequences:
    """The sequences attached to a strictly upper triangular matrix.

    ``q[k]`` and ``qbar[k]`` (0-based ``k``) are the polynomials of
    level ``k + 1``; both live in the first ``k`` variables, have
    constant term 1, and ``q[0] = qbar[0] = 1``.
    """

    q: tuple[Polynomial, ...]
    qbar: tuple[Polynomial, ...]


def build_q_sequences(
    matrix: WordCartanMatrix, degree_bound: int | None = None
) -> QSequences:
    """Build both sequences inductively, level 1 through ``size``.

    At level ``k`` the column entries ``a[i][k]`` contribute the factor
    ``(y_i + 1)`` for a positive entry and ``(1 - q_i * y_i)`` for a
    negative one, to the power ``|a[i][k]|``; the conjugate sequence
    swaps the two factor kinds.

    By default everything is exact.  With ``degree_bound = n`` every
    intermediate product is truncated to degree ``n``, which leaves all
    terms of degree <= ``n`` exact (degrees only add under the product)
    and keeps the elimination cascade cheap for matrices whose exact
    sequences would be enormous.
    """
    m = matrix.size

    def cap(p: Polynomial) -> Polynomial:
        return p if degree_bound is None else p.truncate(degree_bound)

    q: list[Polynomial] = []
    qbar: list[Polynomial] = []
    for k in range(m):
        nv = k  # level k+1 lives in variables y1..yk
        qk = Polynomial.one(nv)
        qbk = Polynomial.one(nv)
        for i in range(k):
            a = matrix.entries[i][k]
            if a == 0:
                continue
            yi = Polynomial.variable(i + 1, nv)
            plain = yi + 1
            conjugated = cap(1 - q[i].extend(nv) * yi)
            for _ in range(abs(a)):
                if a > 0:
                    qk = cap(qk * plain)
                    qbk = cap(qbk * conjugated)
                else:
                    qk = cap(qk * conjugated)
                    qbk = cap(qbk * plain)
        q.append(qk)
        qbar.append(qbk)
    return QSequences(q=tuple(q), qbar=tuple(qbar))


def eliminate(f: Polynomial, k: int, qbar_k: Polynomial) -> Polynomial:
    """One elimination step: kill ``yk``, dropping from level ``k`` to
    ``k - 1``.

    ``f`` must live in the first ``k`` variables with degree at most
    ``k``; ``qbar_k`` in the first ``k - 1``.  The constant coefficient
    ``h0`` is discarded; each higher coefficient ``h_i`` is weighted by
    ``(qbar_k - 1)^(i-1)`` and the sum is truncated to degree ``k - 1``.
    """
    if f.num_vars != k:
        raise VarCountMismatchError(f"expected a polynomial in {k} variables")
    if qbar_k.num_vars != k - 1:
        raise VarCountMismatchError(f"expected qbar at level {k} in {k - 1} variables")
    if f.degree() > k:
        raise DegreeTooHighError(f"degree {f.degree()} input at level {k}")
    coeffs = f.coefficients_in(k)
    result = Polynomial.zero(k - 1)
    weight = Polynomial.one(k - 1)
    # truncating the weights at degree k-1 is lossless: a factor term of
    # degree > k-1 can never contribute to a product term of degree <= k-1
    g = (qbar_k - 1).truncate(k - 1)
    for i, h in enumerate(coeffs):
        if i == 0:
            continue
        if i > 1:
            weight = (weight * g).truncate(k - 1)
        if h:
            result = result + (h.restrict(k - 1) * weight).truncate(k - 1)
    return result.truncate(k - 1)


def delta_a(matrix: WordCartanMatrix, f: Polynomial, seqs: QSequences | None = None) -> int:
    """Full elimination cascade down to an integer.

    The input is truncated to degree ``size`` on entry, which makes the
    operator total without changing any value on its intended domain.
    """
    m = matrix.size
    if f.num_vars != m:
        raise VarCountMismatchError(
            f"polynomial has {f.num_vars} variables, matrix has size {m}"
        )
    if seqs is None:
        seqs = build_q_sequences(matrix)
    g = f.truncate(m)
    for k in range(m, 0, -1):
        g = eliminate(g, k, seqs.qbar[k - 1])
    return g.constant_term()


def triangular_t(matrix: WordCartanMatrix, f: Polynomial) -> int:
    """Triangular operator on homogeneous top-degree polynomials.

    Agrees with the elimination cascade for the negated matrix; this is
    the specialization used for ordinary-cohomology products.
    """
    if not f.is_homogeneous():
        raise NotHomogeneousError("input is not homogeneous")
    if f and f.degree() != matrix.size:
        raise NotHomogeneousError(
            f"homogeneous degree {f.degree()} differs from matrix size {matrix.size}"
        )
    return delta_a(matrix.negate(), f)
