"""Exact sparse multivariate polynomial arithmetic over the integers.

Polynomials are immutable values.  Each one is defined over a fixed set
of variables ``y1 .. ym`` (``m = num_vars``); the terms are stored as a
mapping from exponent vectors of length ``m`` to nonzero integer
coefficients.  Grading is by total degree with ``|yi| = 1``.
Coefficients are Python ints, so arithmetic is exact at any size.

Mixing polynomials with different variable counts is an error rather
than an implicit extension: the elimination cascade in :mod:`kflag.delta`
shrinks the variable count by one per step, and a silent extension
would hide index bugs there.  Use :meth:`Polynomial.extend` and
:meth:`Polynomial.restrict` to move between variable counts explicitly.
"""

from typing import Iterable, Iterator, Mapping


class VarCountMismatchError(ValueError):
    """Two polynomials over different variable counts were combined."""


class PolynomialParseError(ValueError):
    """A string does not parse as a polynomial."""


def _term_key(exps: tuple[int, ...]):
    # graded lexicographic, largest first
    return (-sum(exps), tuple(-e for e in exps))


class Polynomial:
    """Sparse polynomial in ``num_vars`` variables with int coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping | Iterable = ()):
        if num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise VarCountMismatchError(
                    f"exponent vector {exps} has length {len(exps)}, expected {num_vars}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                c = clean.get(exps, 0) + coeff
                if c:
                    clean[exps] = c
                else:
                    del clean[exps]
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, value: int, num_vars: int) -> "Polynomial":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def one(cls, num_vars: int) -> "Polynomial":
        return cls.constant(1, num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "Polynomial":
        """The variable ``y<index>``, 1-based."""
        if not 1 <= index <= num_vars:
            raise VarCountMismatchError(f"variable y{index} out of range 1..{num_vars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(num_vars))
        return cls(num_vars, {exps: 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.num_vars, 0)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Terms in canonical (graded lexicographic, descending) order."""
        for exps in sorted(self.terms, key=_term_key):
            yield exps, self.terms[exps]

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------

    def _promote(self, other):
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise VarCountMismatchError(
                    f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables"
                )
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.num_vars)
        return None

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            c = terms.get(exps, 0) + coeff
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return Polynomial(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                c = terms.get(exps, 0) + ca * cb
                if c:
                    terms[exps] = c
                else:
                    del terms[exps]
        return Polynomial(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.num_vars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == Polynomial.constant(other, self.num_vars).terms
        if isinstance(other, Polynomial):
            return self.num_vars == other.num_vars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    # -- grading and expansion ----------------------------------------

    def truncate(self, n: int) -> "Polynomial":
        """Drop every term of total degree > ``n``.  Additive in ``self``."""
        return Polynomial(
            self.num_vars, {e: c for e, c in self.terms.items() if sum(e) <= n}
        )

    def coefficients_in(self, k: int) -> list["Polynomial"]:
        """Expand in powers of ``yk``: returns ``(h0, h1, ..., hd)``.

        ``self == sum(h[i] * yk**i)`` and every ``h[i]`` is free of ``yk``.
        """
        if not 1 <= k <= self.num_vars:
            raise VarCountMismatchError(f"variable y{k} out of range 1..{self.num_vars}")
        top = max((e[k - 1] for e in self.terms), default=0)
        buckets: list[dict] = [{} for _ in range(top + 1)]
        for exps, coeff in self.terms.items():
            i = exps[k - 1]
            stripped = exps[: k - 1] + (0,) + exps[k:]
            buckets[i][stripped] = buckets[i].get(stripped, 0) + coeff
        return [Polynomial(self.num_vars, b) for b in buckets]

    def restrict(self, num_vars: int) -> "Polynomial":
        """Reinterpret over the first ``num_vars`` variables.

        Errors if any term actually uses a dropped variable.
        """
        if num_vars > self.num_vars:
            return self.extend(num_vars)
        terms = {}
        for exps, coeff in self.terms.items():
            if any(exps[num_vars:]):
                raise VarCountMismatchError(
                    f"term {exps} uses a variable above y{num_vars}"
                )
            terms[exps[:num_vars]] = coeff
        return Polynomial(num_vars, terms)

    def extend(self, num_vars: int) -> "Polynomial":
        """Reinterpret over a larger variable set (new variables unused)."""
        if num_vars < self.num_vars:
            return self.restrict(num_vars)
        pad = (0,) * (num_vars - self.num_vars)
        return Polynomial(num_vars, {e + pad: c for e, c in self.terms.items()})

    def evaluate(self, values: Iterable[int]) -> int:
        values = tuple(values)
        if len(values) != self.num_vars:
            raise VarCountMismatchError(
                f"expected {self.num_vars} values, got {len(values)}"
            )
        total = 0
        for exps, coeff in self.terms.items():
            prod = coeff
            for v, e in zip(values, exps):
                if e:
                    prod *= v**e
            total += prod
        return total

    # -- text form ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.items():
            mono = "*".join(
                f"y{i + 1}" if e == 1 else f"y{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {str(self)!r})"

    @classmethod
    def parse(cls, text: str, num_vars: int) -> "Polynomial":
        """Parse the canonical text form, e.g. ``"y1*y2^2 - 3*y3 + 1"``.

        Accepts ``+ - * ^``, integer literals, variables ``y<k>`` and
        parentheses.
        """
        tokens = _tokenize(text)
        poly, pos = _parse_sum(tokens, 0, num_vars)
        if pos != len(tokens):
            raise PolynomialParseError(f"trailing input at token {tokens[pos]!r}")
        return poly


def _tokenize(text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch == "y":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolynomialParseError(f"bare 'y' at position {i}")
            tokens.append(text[i:j])
            i = j
        else:
            raise PolynomialParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


def _parse_sum(tokens, pos, num_vars):
    sign = 1
    if pos < len(tokens) and tokens[pos] in "+-":
        sign = -1 if tokens[pos] == "-" else 1
        pos += 1
    poly, pos = _parse_product(tokens, pos, num_vars)
    poly = sign * poly
    while pos < len(tokens) and tokens[pos] in "+-":
        sign = -1 if tokens[pos] == "-" else 1
        term, pos = _parse_product(tokens, pos + 1, num_vars)
        poly = poly + sign * term
    return poly, pos


def _parse_product(tokens, pos, num_vars):
    poly, pos = _parse_power(tokens, pos, num_vars)
    while pos < len(tokens) and tokens[pos] == "*":
        factor, pos = _parse_power(tokens, pos + 1, num_vars)
        poly = poly * factor
    return poly, pos


def _parse_power(tokens, pos, num_vars):
    base, pos = _parse_atom(tokens, pos, num_vars)
    if pos < len(tokens) and tokens[pos] == "^":
        pos += 1
        if pos >= len(tokens) or not tokens[pos].isdigit():
            raise PolynomialParseError("expected integer exponent after '^'")
        base = base ** int(tokens[pos])
        pos += 1
    return base, pos


def _parse_atom(tokens, pos, num_vars):
    if pos >= len(tokens):
        raise PolynomialParseError("unexpected end of input")
    tok = tokens[pos]
    if tok == "(":
        poly, pos = _parse_sum(tokens, pos + 1, num_vars)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise PolynomialParseError("missing ')'")
        return poly, pos + 1
    if tok == "-":
        poly, pos = _parse_power(tokens, pos + 1, num_vars)
        return -poly, pos
    if tok.isdigit():
        return Polynomial.constant(int(tok), num_vars), pos + 1
    if tok.startswith("y"):
        index = int(tok[1:])
        if not 1 <= index <= num_vars:
            raise PolynomialParseError(
                f"variable {tok} out of range for {num_vars} variables"
            )
        return Polynomial.variable(index, num_vars), pos + 1
    raise PolynomialParseError(f"unexpected token {tok!r}")
