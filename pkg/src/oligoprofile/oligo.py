"""Expression grammar for infinite permutation groups with polynomial profile.

An expression combines five infinite atoms (all with one orbit of
n-subsets for every n), finite groups, two wreath shapes with an
infinite side, and direct products. Each expression yields an exact
rational profile series, a block structure, the degrees of a free
generating family, a positivity check of the series numerator, and the
degree and constant of polynomial growth.

Expression language:

    expr  := atom | "Prod(" expr { "," expr } ")" | "Wr(" inner ")"
    inner := "SymInf" "," fin   |   fin "," "SymInf"
    atom  := "SymInf" | "AutQ" | "RevQ" | "AutQZ" | "RevQZ" | fin
    fin   := "Fin(" degree ";" generator { ";" generator } ")"
           | "Id(" degree ")" | "Sym(" degree ")" | "Cyc(" degree ")"

Whitespace-insensitive; generators use cycle or image notation.
Products do not nest (a nested product denotes nothing new).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExpressionParseError
from .perm import (
    FinitePermGroup,
    Permutation,
    cyclic_group,
    format_cycles,
    identity_group,
    parse_permutation,
    subset_orbits,
    symmetric_group,
)
from .polya import cycle_index, molien_series, subset_count_polynomial
from .series import (
    ProfileSeries,
    asymptotics,
    multiply,
    normalize_to_denominator,
    series_from_polynomial,
    series_one_over,
)

PROFILE_ONE_NAMES = ("SymInf", "AutQ", "RevQ", "AutQZ", "RevQZ")
FIN_KEYWORDS = ("Fin", "Id", "Sym", "Cyc")
MAX_DEGREE = 1000


@dataclass(frozen=True)
class ProfileOneAtom:
    """One of the five infinite groups with exactly one orbit per size."""

    name: str

    def __post_init__(self):
        if self.name not in PROFILE_ONE_NAMES:
            raise ValueError(f"unknown atom {self.name!r}")


@dataclass(frozen=True)
class FiniteAtom:
    """A finite permutation group: a finite stable part of the domain."""

    group: FinitePermGroup


@dataclass(frozen=True)
class InfiniteBlocks:
    """Finitely many infinite blocks permuted by a finite group.

    Written Wr(SymInf, top): one infinite block per point of top's
    domain, each fully symmetric, with top permuting the blocks.
    """

    top: FinitePermGroup


@dataclass(frozen=True)
class FiniteBlocks:
    """Infinitely many finite blocks, each a copy of a base group.

    Written Wr(base, SymInf): the base acts independently inside every
    block and the blocks are freely permuted.
    """

    base: FinitePermGroup


@dataclass(frozen=True)
class DirectProduct:
    """Direct product of component groups on disjoint domains."""

    children: tuple

    def __post_init__(self):
        if not self.children:
            raise ValueError("a product needs at least one factor")
        if any(isinstance(c, DirectProduct) for c in self.children):
            raise ValueError("products do not nest")


GroupExpr = ProfileOneAtom | FiniteAtom | InfiniteBlocks | FiniteBlocks | DirectProduct


@dataclass(frozen=True)
class CanonicalBlockStructure:
    """Shape of the domain decomposition an expression denotes.

    finite_block_orbits lists (block_size, generator degree multiset)
    per orbit of finite blocks; infinite_block_counts has one entry per
    component contributing infinite blocks; kernel_size totals the
    points of the finite stable part.
    """

    finite_block_orbits: tuple[tuple[int, tuple[int, ...]], ...]
    infinite_block_counts: tuple[int, ...]
    kernel_size: int

    def __post_init__(self):
        if any(size < 1 for size, _ in self.finite_block_orbits):
            raise ValueError("block sizes must be at least 1")
        if any(k < 1 for k in self.infinite_block_counts):
            raise ValueError("infinite block counts must be at least 1")
        if self.kernel_size < 0:
            raise ValueError("kernel size must be non-negative")


def orbit_degree_census(group: FinitePermGroup) -> tuple[int, ...]:
    """Sizes of non-empty subsets, one entry per orbit, ascending."""
    return tuple(
        n for n in range(1, group.degree + 1) for _ in subset_orbits(group, n)
    )


def profile_series(e: GroupExpr) -> ProfileSeries:
    """Exact generating series of the number of orbits of n-subsets."""
    if isinstance(e, ProfileOneAtom):
        return series_one_over([1])
    if isinstance(e, FiniteAtom):
        return series_from_polynomial(subset_count_polynomial(cycle_index(e.group)))
    if isinstance(e, InfiniteBlocks):
        return molien_series(e.top)
    if isinstance(e, FiniteBlocks):
        return series_one_over(orbit_degree_census(e.base))
    if isinstance(e, DirectProduct):
        out = profile_series(e.children[0])
        for child in e.children[1:]:
            out = multiply(out, profile_series(child))
        return out
    raise TypeError(f"not a group expression: {e!r}")


def canonical_block_structure(e: GroupExpr) -> CanonicalBlockStructure:
    """Finite-block orbits, infinite block counts, kernel size."""
    if isinstance(e, ProfileOneAtom):
        return CanonicalBlockStructure((), (1,), 0)
    if isinstance(e, FiniteAtom):
        return CanonicalBlockStructure((), (), e.group.degree)
    if isinstance(e, InfiniteBlocks):
        return CanonicalBlockStructure((), (e.top.degree,), 0)
    if isinstance(e, FiniteBlocks):
        orbit = (e.base.degree, orbit_degree_census(e.base))
        return CanonicalBlockStructure((orbit,), (), 0)
    if isinstance(e, DirectProduct):
        finite: list = []
        counts: list = []
        kernel = 0
        for child in e.children:
            s = canonical_block_structure(child)
            finite.extend(s.finite_block_orbits)
            counts.extend(s.infinite_block_counts)
            kernel += s.kernel_size
        return CanonicalBlockStructure(tuple(finite), tuple(counts), kernel)
    raise TypeError(f"not a group expression: {e!r}")


def generator_degrees(e: GroupExpr) -> tuple[int, ...]:
    """Degrees of a free generating family, as a sorted multiset.

    A component with k infinite blocks contributes 1..k; each orbit of
    finite blocks contributes its subset-orbit census; the kernel
    contributes nothing.
    """
    structure = canonical_block_structure(e)
    degrees: list[int] = []
    for k in structure.infinite_block_counts:
        degrees.extend(range(1, k + 1))
    for _, census in structure.finite_block_orbits:
        degrees.extend(census)
    return tuple(sorted(degrees))


def verify_positivity(e: GroupExpr) -> tuple[tuple[int, ...], bool]:
    """Numerator over the prescribed denominator, and its non-negativity."""
    normalized = normalize_to_denominator(profile_series(e), generator_degrees(e))
    numerator = normalized.numerator
    return numerator, all(c >= 0 for c in numerator)


def growth(e: GroupExpr) -> tuple[int, Fraction]:
    """Degree k and constant a of the profile's polynomial growth a*n^k."""
    return asymptotics(profile_series(e))


EXPR_KEYWORDS = PROFILE_ONE_NAMES + FIN_KEYWORDS + ("Prod", "Wr")
INNER_KEYWORDS = PROFILE_ONE_NAMES + FIN_KEYWORDS + ("Wr",)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _found_here(self) -> str:
        if self.pos >= len(self.text):
            return "end of input"
        return repr(self.text[self.pos])

    def _fail(self, offset, expected, found):
        raise ExpressionParseError(offset, expected, found)

    def _expect(self, ch: str):
        self._skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self._fail(self.pos, [f"'{ch}'"], self._found_here())
        self.pos += 1

    def _ident(self, expected) -> tuple[str, int]:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            self._fail(start, list(expected), self._found_here())
        return self.text[start : self.pos], start

    def _integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self._fail(start, ["an integer"], self._found_here())
        return int(self.text[start : self.pos])

    def _degree(self) -> int:
        self._skip_ws()
        at = self.pos
        value = self._integer()
        if not 1 <= value <= MAX_DEGREE:
            self._fail(at, [f"a degree between 1 and {MAX_DEGREE}"], str(value))
        return value

    def _generator(self, degree: int) -> Permutation:
        self._skip_ws()
        start = self.pos
        text = self.text
        if self.pos < len(text) and text[self.pos] == "[":
            end = text.find("]", self.pos)
            if end < 0:
                self._fail(start, ["']'"], "end of input")
            self.pos = end + 1
        elif self.pos < len(text) and text[self.pos] == "(":
            while True:
                end = text.find(")", self.pos)
                if end < 0:
                    self._fail(start, ["')'"], "end of input")
                self.pos = end + 1
                mark = self.pos
                self._skip_ws()
                if self.pos >= len(text) or text[self.pos] != "(":
                    self.pos = mark
                    break
        else:
            self._fail(self.pos, ["'(' starting a cycle", "'[' starting an image list"],
                       self._found_here())
        try:
            return parse_permutation(text[start : self.pos], degree)
        except ValueError as exc:
            self._fail(start, [f"a valid permutation ({exc})"], None)

    def _fin_tail(self, keyword: str) -> FinitePermGroup:
        self._expect("(")
        degree = self._degree()
        if keyword == "Id":
            self._expect(")")
            return identity_group(degree)
        if keyword == "Sym":
            self._expect(")")
            return symmetric_group(degree)
        if keyword == "Cyc":
            self._expect(")")
            return cyclic_group(degree)
        self._expect(";")
        generators = [self._generator(degree)]
        while True:
            self._skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == ";":
                self.pos += 1
                generators.append(self._generator(degree))
            else:
                break
        self._expect(")")
        return FinitePermGroup(degree, tuple(generators))

    def _wreath(self) -> GroupExpr:
        self._expect("(")
        inner_expected = ("SymInf",) + FIN_KEYWORDS
        ident, at = self._ident(inner_expected)
        if ident == "SymInf":
            self._expect(",")
            fin_kw, fin_at = self._ident(FIN_KEYWORDS)
            if fin_kw not in FIN_KEYWORDS:
                self._fail(fin_at, list(FIN_KEYWORDS), fin_kw)
            group = self._fin_tail(fin_kw)
            self._expect(")")
            return InfiniteBlocks(group)
        if ident in FIN_KEYWORDS:
            group = self._fin_tail(ident)
            self._expect(",")
            other, other_at = self._ident(("SymInf",))
            if other != "SymInf":
                self._fail(other_at, ["SymInf"], other)
            self._expect(")")
            return FiniteBlocks(group)
        self._fail(at, list(inner_expected), ident)

    def _expr(self, allow_prod: bool) -> GroupExpr:
        keywords = EXPR_KEYWORDS if allow_prod else INNER_KEYWORDS
        ident, at = self._ident(keywords)
        if ident in PROFILE_ONE_NAMES:
            return ProfileOneAtom(ident)
        if ident in FIN_KEYWORDS:
            return FiniteAtom(self._fin_tail(ident))
        if ident == "Wr":
            return self._wreath()
        if ident == "Prod":
            if not allow_prod:
                self._fail(
                    at,
                    ["an atom or wreath expression (products do not nest)"],
                    "Prod",
                )
            self._expect("(")
            children = [self._expr(allow_prod=False)]
            while True:
                self._skip_ws()
                if self.pos < len(self.text) and self.text[self.pos] == ",":
                    self.pos += 1
                    children.append(self._expr(allow_prod=False))
                else:
                    break
            self._expect(")")
            return DirectProduct(tuple(children))
        self._fail(at, list(keywords), ident)

    def parse(self) -> GroupExpr:
        e = self._expr(allow_prod=True)
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail(self.pos, ["end of input"], self._found_here())
        return e


def parse_expression(text: str) -> GroupExpr:
    """Parse the expression language; errors carry byte offsets."""
    return _Parser(text).parse()


def _format_fin(group: FinitePermGroup) -> str:
    degree = group.degree
    if group == identity_group(degree):
        return f"Id({degree})"
    if group == symmetric_group(degree):
        return f"Sym({degree})"
    if group == cyclic_group(degree):
        return f"Cyc({degree})"
    gens = "; ".join(format_cycles(g) for g in group.generators)
    return f"Fin({degree}; {gens})"


def format_expression(e: GroupExpr) -> str:
    """Canonical text form; parse_expression inverts it."""
    if isinstance(e, ProfileOneAtom):
        return e.name
    if isinstance(e, FiniteAtom):
        return _format_fin(e.group)
    if isinstance(e, InfiniteBlocks):
        return f"Wr(SymInf, {_format_fin(e.top)})"
    if isinstance(e, FiniteBlocks):
        return f"Wr({_format_fin(e.base)}, SymInf)"
    if isinstance(e, DirectProduct):
        return "Prod(" + ", ".join(format_expression(c) for c in e.children) + ")"
    raise TypeError(f"not a group expression: {e!r}")
