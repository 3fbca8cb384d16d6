"""Cross-checks tying the production paths to the brute-force oracles.

Every check returns a :class:`CheckResult`; nothing raises on a
mathematical failure, so the CLI can report all outcomes.  The checks
are pure and deterministic given the ``rng`` they are handed.
"""

import random
from dataclasses import dataclass

from . import oracles
from .constants import (
    DEMAZURE,
    GROTHENDIECK,
    ConstantTable,
    demazure_constant,
    expand_product,
    full_table,
    grothendieck_constant,
)
from .delta import delta_a
from .derived import basis_transition, demazure_image
from .polyring import Polynomial
from .rootsys import WeylGroup, WordCartanMatrix, word_cartan_matrix


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def __str__(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def _result(name: str, failures: list[str], checked: str) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ""
        return CheckResult(name, False, f"{shown}{more}")
    return CheckResult(name, True, checked)


# -- oracle equivalences -------------------------------------------------


def check_image_oracle(
    group: WeylGroup, *, words: int = 12, max_len: int = 9, rng=None
) -> CheckResult:
    """Prefix DP against per-subset enumeration, on random words."""
    rng = rng or random.Random(0)
    failures = []
    for _ in range(words):
        word = tuple(
            rng.randint(1, group.rank) for _ in range(rng.randint(0, max_len))
        )
        dp = demazure_image(group, word)
        for w in range(group.size):
            naive = oracles.naive_derived_poly(group, word, w)
            if dp[w] != naive:
                failures.append(f"word {word}, element {w}")
    return _result(
        "image-dp-vs-naive", failures, f"{words} words, {group.size} elements each"
    )


def _random_polynomial(rng, num_vars: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, 5)):
        exps = [0] * num_vars
        for _ in range(rng.randint(0, min(3, num_vars))):
            exps[rng.randrange(num_vars)] += rng.randint(1, 2)
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + rng.randint(-5, 5)
    return Polynomial(num_vars, terms)


def _random_upper_triangular(rng, size: int) -> WordCartanMatrix:
    # larger entries only at small sizes, to keep the relation
    # polynomials from exploding in the naive rewriter
    bound = {1: 3, 2: 3, 3: 3, 4: 2, 5: 1, 6: 1}.get(size, 1)
    rows = [
        [rng.randint(-bound, bound) if i < j else 0 for j in range(size)]
        for i in range(size)
    ]
    return WordCartanMatrix.from_rows(rows)


def _word_size_cap(group: WeylGroup) -> int:
    # the naive rewriter needs exact relation polynomials, whose size is
    # driven by the most negative Cartan entry
    worst = min(min(row) for row in group.cartan.entries)
    return 3 if worst <= -3 else 4


def check_delta_oracle(
    *, trials: int = 200, max_size: int = 6, rng=None, groups: list[WeylGroup] = ()
) -> CheckResult:
    """Elimination cascade against naive square-free rewriting."""
    rng = rng or random.Random(0)
    failures = []
    for trial in range(trials):
        size = trial % max_size + 1
        if groups and trial % 5 == 0:
            g = groups[trial // 5 % len(groups)]
            length = min(size, _word_size_cap(g))
            word = tuple(rng.randint(1, g.rank) for _ in range(length))
            matrix = word_cartan_matrix(word, g.cartan)
            size = length
        else:
            matrix = _random_upper_triangular(rng, size)
        f = _random_polynomial(rng, size)
        fast = delta_a(matrix, f)
        slow = oracles.normal_form_coefficient(f, matrix)
        if fast != slow:
            failures.append(f"matrix {matrix.entries}, poly {f}")
    return _result("delta-vs-normal-form", failures, f"{trials} random inputs")


def check_bruhat_oracle(group: WeylGroup) -> CheckResult:
    """Lifting-recursion order against exhaustive subword scanning."""
    failures = []
    for u in range(group.size):
        for w in range(group.size):
            if group.bruhat_leq(u, w) != oracles.bruhat_subword_oracle(group, u, w):
                failures.append(f"pair ({u}, {w})")
    return _result("bruhat-vs-subword", failures, f"{group.size}^2 pairs")


# -- recursion properties ------------------------------------------------

_CONSTANT_FN = {DEMAZURE: demazure_constant, GROTHENDIECK: grothendieck_constant}


def check_word_independence(
    group: WeylGroup, basis: str, table: ConstantTable | None = None
) -> CheckResult:
    """Every reduced word of every element gives the same constants."""
    if table is None:
        table = full_table(group, basis)
    fn = _CONSTANT_FN[basis]
    lengths = [group.length(w) for w in range(group.size)]
    rows: dict[tuple[int, int], dict[int, int]] = {}
    failures = []
    words_checked = 0
    for w in range(group.size):
        all_words = group.reduced_words(w)
        words_checked += len(all_words)
        for word in all_words:
            for u in range(group.size):
                for v in range(group.size):
                    if lengths[u] + lengths[v] > lengths[w]:
                        continue
                    row = rows.get((u, v))
                    if row is None:
                        row = {x: table.get(u, v, x) for x in range(group.size)}
                        rows[(u, v)] = row
                    value = fn(group, u, v, w, word, row)
                    if value != table.get(u, v, w):
                        failures.append(f"(u,v,w)=({u},{v},{w}) word {word}")
    return _result(
        f"word-independence-{table.basis}", failures, f"{words_checked} reduced words"
    )


# -- algebra axioms ------------------------------------------------------


def _rows_by_pair(table: ConstantTable) -> dict[tuple[int, int], dict[int, int]]:
    rows: dict[tuple[int, int], dict[int, int]] = {}
    for (u, v, w), c in table.entries.items():
        rows.setdefault((u, v), {})[w] = c
    return rows


def check_commutativity(table: ConstantTable) -> CheckResult:
    size = table.group.size
    failures = []
    for u in range(size):
        for v in range(u, size):
            for w in range(size):
                if table.get(u, v, w) != table.get(v, u, w):
                    failures.append(f"({u},{v},{w})")
    return _result(
        f"commutativity-{table.basis}", failures, f"all {size}^3 triples"
    )


def check_associativity(table: ConstantTable) -> CheckResult:
    size = table.group.size
    rows = _rows_by_pair(table)
    empty: dict[int, int] = {}
    failures = []
    for u in range(size):
        for v in range(size):
            uv = rows.get((u, v), empty)
            for t in range(size):
                lhs: dict[int, int] = {}
                for x, c in uv.items():
                    for w, c2 in rows.get((x, t), empty).items():
                        lhs[w] = lhs.get(w, 0) + c * c2
                rhs: dict[int, int] = {}
                for y, c in rows.get((v, t), empty).items():
                    for w, c2 in rows.get((u, y), empty).items():
                        rhs[w] = rhs.get(w, 0) + c * c2
                if {k: val for k, val in lhs.items() if val} != {
                    k: val for k, val in rhs.items() if val
                }:
                    failures.append(f"({u},{v},{t})")
    return _result(
        f"associativity-{table.basis}", failures, f"all {size}^3 products"
    )


def check_unit_law(table: ConstantTable) -> CheckResult:
    if table.basis != GROTHENDIECK:
        return CheckResult("unit-law", False, "needs a Grothendieck table")
    size = table.group.size
    failures = []
    for v in range(size):
        for w in range(size):
            expected = 1 if v == w else 0
            if table.get(0, v, w) != expected:
                failures.append(f"(e,{v},{w}) = {table.get(0, v, w)}")
    return _result("unit-law", failures, f"{size}^2 products with the unit")


def check_demazure_vanishing(table: ConstantTable, *, raw: bool = True) -> CheckResult:
    """No constant below the length floor; optionally re-derive the zeros
    from the raw recursion rather than trusting the table builder."""
    if table.basis != DEMAZURE:
        return CheckResult("demazure-vanishing", False, "needs a Demazure table")
    group = table.group
    lengths = [group.length(w) for w in range(group.size)]
    failures = [
        f"({u},{v},{w}) = {c}"
        for (u, v, w), c in table.entries.items()
        if lengths[w] < lengths[u] + lengths[v]
    ]
    checked = 0
    if raw:
        for u in range(group.size):
            for v in range(group.size):
                for w in range(group.size):
                    if lengths[w] >= lengths[u] + lengths[v]:
                        continue
                    checked += 1
                    if demazure_constant(group, u, v, w, group.word(w), {}) != 0:
                        failures.append(f"raw ({u},{v},{w}) nonzero")
    return _result(
        "demazure-vanishing", failures, f"{checked} short triples re-derived"
    )


def check_brion_signs(table: ConstantTable) -> CheckResult:
    if table.basis != GROTHENDIECK:
        return CheckResult("brion-signs", False, "needs a Grothendieck table")
    group = table.group
    lengths = [group.length(w) for w in range(group.size)]
    failures = [
        f"({u},{v},{w}) = {c}"
        for (u, v, w), c in table.entries.items()
        if (-1) ** (lengths[w] - lengths[u] - lengths[v]) * c < 0
    ]
    return _result(
        "brion-signs", failures, f"{len(table.entries)} nonzero constants"
    )


def check_monk_rule(group: WeylGroup) -> CheckResult:
    """Top-degree Demazure constants against one simple reflection versus
    the classical transposition description (type A only)."""
    perms = oracles.permutation_model(group)
    by_perm = {p: w for w, p in enumerate(perms)}
    failures = []
    pairs = 0
    for u in range(group.size):
        for k in range(1, group.rank + 1):
            pairs += 1
            expansion = expand_product(group, DEMAZURE, u, group.simple(k))
            actual = {
                w: c
                for w, c in expansion.items()
                if group.length(w) == group.length(u) + 1
            }
            expected = {
                by_perm[q]: c for q, c in oracles.monk_product(perms[u], k).items()
            }
            if actual != expected:
                failures.append(f"u={u}, k={k}")
    return _result("monk-agreement", failures, f"{pairs} products")


def check_basis_transition(
    group: WeylGroup,
    ctable: ConstantTable | None = None,
    ktable: ConstantTable | None = None,
) -> CheckResult:
    """The two transition matrices invert each other, and conjugating the
    Demazure table by them reproduces the Grothendieck table."""
    if ctable is None:
        ctable = full_table(group, DEMAZURE)
    if ktable is None:
        ktable = full_table(group, GROTHENDIECK)
    size = group.size
    omega_from_a, a_from_omega = basis_transition(group)
    failures = []
    for i in range(size):
        for j in range(size):
            dot = sum(omega_from_a[i][k] * a_from_omega[k][j] for k in range(size))
            if dot != (1 if i == j else 0):
                failures.append(f"transition product at ({i},{j})")
    crows = _rows_by_pair(ctable)
    empty: dict[int, int] = {}
    for u in range(size):
        ups = [x for x in range(size) if omega_from_a[u][x]]
        for v in range(size):
            vps = [x for x in range(size) if omega_from_a[v][x]]
            acc: dict[int, int] = {}
            for u2 in ups:
                for v2 in vps:
                    for x, c in crows.get((u2, v2), empty).items():
                        acc[x] = acc.get(x, 0) + c
            for z in range(size):
                value = sum(c * a_from_omega[x][z] for x, c in acc.items())
                if value != ktable.get(u, v, z):
                    failures.append(f"conjugated ({u},{v},{z})")
    return _result("basis-transition", failures, f"{size}^2 products conjugated")


def check_parabolic_closure(ktable: ConstantTable, subset) -> CheckResult:
    """Products of minimal-coset-representative classes stay supported on
    the representatives, and restriction just slices the full table."""
    from .constants import parabolic_constants

    group = ktable.group
    datum = group.minimal_coset_reps(subset)
    reps = set(datum.reps)
    failures = []
    for (u, v, w), c in ktable.entries.items():
        if u in reps and v in reps and w not in reps and c:
            failures.append(f"({u},{v},{w}) escapes the quotient")
    restricted = parabolic_constants(ktable, datum)
    for (u, v, w), c in restricted.entries.items():
        if ktable.get(u, v, w) != c:
            failures.append(f"restricted ({u},{v},{w}) disagrees")
    expected_count = sum(
        1
        for (u, v, w) in ktable.entries
        if u in reps and v in reps and w in reps
    )
    if len(restricted.entries) != expected_count:
        failures.append("restricted table has the wrong support")
    return _result(
        "parabolic-closure",
        failures,
        f"{len(datum.reps)} representatives, subgroup order {datum.subgroup_size}",
    )


# -- suite driver --------------------------------------------------------

SUITES = (
    "images",
    "delta",
    "bruhat",
    "words",
    "axioms",
    "brion",
    "monk",
    "transition",
    "parabolic",
)


def run_suite(group: WeylGroup, suite: str = "all", *, rng=None) -> list[CheckResult]:
    """Run the named suite (or ``"all"``) against one group."""
    rng = rng or random.Random(20_240_703)
    wanted = SUITES if suite == "all" else tuple(suite.split(","))
    unknown = [s for s in wanted if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite name(s): {', '.join(unknown)}")
    results: list[CheckResult] = []
    tables: dict[str, ConstantTable] = {}

    def table(basis: str) -> ConstantTable:
        if basis not in tables:
            tables[basis] = full_table(group, basis)
        return tables[basis]

    for name in wanted:
        if name == "images":
            results.append(check_image_oracle(group, words=12, max_len=9, rng=rng))
        elif name == "delta":
            results.append(check_delta_oracle(trials=120, rng=rng, groups=[group]))
        elif name == "bruhat":
            results.append(check_bruhat_oracle(group))
        elif name == "words":
            results.append(check_word_independence(group, DEMAZURE, table(DEMAZURE)))
            results.append(
                check_word_independence(group, GROTHENDIECK, table(GROTHENDIECK))
            )
        elif name == "axioms":
            results.append(check_commutativity(table(DEMAZURE)))
            results.append(check_commutativity(table(GROTHENDIECK)))
            results.append(check_associativity(table(DEMAZURE)))
            results.append(check_associativity(table(GROTHENDIECK)))
            results.append(check_unit_law(table(GROTHENDIECK)))
            results.append(
                check_demazure_vanishing(table(DEMAZURE), raw=group.size <= 12)
            )
        elif name == "brion":
            results.append(check_brion_signs(table(GROTHENDIECK)))
        elif name == "monk":
            try:
                results.append(check_monk_rule(group))
            except oracles.NotTypeAError:
                results.append(
                    CheckResult("monk-agreement", True, "skipped: not type A")
                )
        elif name == "transition":
            results.append(
                check_basis_transition(group, table(DEMAZURE), table(GROTHENDIECK))
            )
        elif name == "parabolic":
            subset = {1} if group.rank else set()
            results.append(check_parabolic_closure(table(GROTHENDIECK), subset))
    return results
