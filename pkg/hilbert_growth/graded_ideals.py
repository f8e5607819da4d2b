"""Homogeneous ideals as per-degree linear algebra.

A :class:`GradedSpan` stores every degree component [J]_d through its
annihilator, the space of functionals on [S]_d vanishing on [J]_d. Its
dimension is the Hilbert function of S/J, so quotient dimensions never need
the (much larger) ideal basis, which is produced on demand by
:meth:`GradedSpan.component`.

The ideal generated by the components of degree <= n is extended one degree
at a time by contraction: a functional on [S]_{d+1} annihilates
[S]_1 [J]_d exactly when every contraction x_i -| phi annihilates [J]_d.
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import gcd
from typing import (
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from pydantic import BaseModel, Field

from hilbert_growth.binomial_calculus import (
    HilbertPolynomial,
    HVector,
    binomial,
    hilbert_polynomial_from_expansion,
    is_o_sequence,
    macaulay_bound,
)
from hilbert_growth.errors import (
    HilbertGrowthFormatError,
    HilbertGrowthValueError,
    HilbertGrowthWindowError,
    HypothesisError,
)
from hilbert_growth.exact_algebra import (
    Exponent,
    Form,
    IntRow,
    NullspaceTracker,
    clear_denominators,
    divides,
    echelon_form,
    integer_kernel,
    integer_rank,
    monomial_index,
    monomial_product,
    monomials,
)
from hilbert_growth.utils import (
    DEFAULT_FIT_CONFIRMATIONS,
    logger,
    parse_rational,
    rational_str,
)

MAX_INCLUSION_EXCLUSION_GENERATORS = 20


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by exponent vectors, kept minimal and sorted."""

    num_vars: int
    generators: Tuple[Exponent, ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise HilbertGrowthValueError(
                f"num_vars must be positive, got {self.num_vars}"
            )
        gens = set()
        for g in self.generators:
            g = tuple(int(e) for e in g)
            if len(g) != self.num_vars or any(e < 0 for e in g):
                raise HilbertGrowthValueError(
                    f"generator {g} does not fit {self.num_vars} variables"
                )
            gens.add(g)
        minimal = [
            g for g in gens if not any(h != g and divides(h, g) for h in gens)
        ]
        minimal.sort(key=lambda g: (sum(g), tuple(-e for e in g)))
        object.__setattr__(self, "generators", tuple(minimal))

    def contains(self, exponent: Sequence[int]) -> bool:
        return any(divides(g, exponent) for g in self.generators)

    def degrees(self) -> List[int]:
        return [sum(g) for g in self.generators]

    def standard_monomials(self, degree: int) -> List[Exponent]:
        return [m for m in monomials(self.num_vars, degree) if not self.contains(m)]

    def to_forms(self) -> List[Form]:
        return [Form.monomial(g) for g in self.generators]

    def hilbert_function(self, degree: int) -> int:
        return monomial_hilbert_function(self, degree)

    def __str__(self) -> str:
        if not self.generators:
            return "<>"
        return "<" + ", ".join(str(Form.monomial(g)) for g in self.generators) + ">"


class GradedSpan:
    """Degree components of a homogeneous ideal over a contiguous window.

    Parameters
    ----------
    num_vars : int
        Number of variables r of S = K[x_1, ..., x_r].
    duals : Mapping[int, Sequence[Sequence[int]]]
        For each degree of the window, integer functionals (over the monomials
        of that degree, graded-lex descending) spanning the annihilator of the
        ideal component.
    """

    def __init__(self, num_vars: int, duals: Mapping[int, Sequence[Sequence[int]]]):
        if num_vars < 1:
            raise HilbertGrowthValueError(f"num_vars must be positive, got {num_vars}")
        if not duals:
            raise HilbertGrowthWindowError("a graded span needs at least one degree")
        degrees = sorted(duals)
        if degrees != list(range(degrees[0], degrees[-1] + 1)) or degrees[0] < 0:
            raise HilbertGrowthWindowError(f"degrees {degrees} are not a window")
        self.num_vars = num_vars
        self._rows: Dict[int, Tuple[IntRow, ...]] = {}
        self._pivots: Dict[int, Tuple[int, ...]] = {}
        for d in degrees:
            size = len(monomials(num_vars, d))
            for row in duals[d]:
                if len(row) != size:
                    raise HilbertGrowthValueError(
                        f"functional of length {len(row)} in degree {d}, expected {size}"
                    )
            rows, pivots = echelon_form(duals[d], size)
            self._rows[d] = tuple(rows)
            self._pivots[d] = tuple(pivots)

    @classmethod
    def zero_ideal(cls, num_vars: int, window: Tuple[int, int]) -> "GradedSpan":
        d_min, d_max = _check_window(window)
        duals = {}
        for d in range(d_min, d_max + 1):
            size = len(monomials(num_vars, d))
            duals[d] = [[int(i == j) for j in range(size)] for i in range(size)]
        return cls(num_vars, duals)

    @property
    def window(self) -> Tuple[int, int]:
        return min(self._rows), max(self._rows)

    @property
    def d_min(self) -> int:
        return self.window[0]

    @property
    def d_max(self) -> int:
        return self.window[1]

    def covers(self, *degrees: int) -> bool:
        return all(d in self._rows for d in degrees)

    def _require(self, *degrees: int):
        for d in degrees:
            if d not in self._rows:
                raise HilbertGrowthWindowError(
                    f"degree {d} is outside the window {self.window}"
                )

    def dual_rows(self, degree: int) -> Tuple[IntRow, ...]:
        self._require(degree)
        return self._rows[degree]

    def pivots(self, degree: int) -> Tuple[int, ...]:
        self._require(degree)
        return self._pivots[degree]

    def hilbert_function(self, degree: int) -> int:
        self._require(degree)
        return len(self._rows[degree])

    def hilbert_values(self) -> HVector:
        """Hilbert function on the window, degrees below the window read as 0."""

        return HVector(
            values=[
                len(self._rows[d]) if d in self._rows else 0
                for d in range(self.d_max + 1)
            ]
        )

    def component_dimension(self, degree: int) -> int:
        return len(monomials(self.num_vars, degree)) - self.hilbert_function(degree)

    def component(self, degree: int) -> List[Form]:
        """A basis of [J]_degree."""

        self._require(degree)
        size = len(monomials(self.num_vars, degree))
        return [
            Form.from_vector(self.num_vars, degree, v)
            for v in integer_kernel(self._rows[degree], size)
        ]

    def standard_monomials(self, degree: int) -> List[Exponent]:
        """Monomials whose classes form the basis of [S/J]_degree (lex-first)."""

        basis = monomials(self.num_vars, degree)
        return [basis[p] for p in self.pivots(degree)]

    def functional_values(self, form: Form) -> List[Fraction]:
        self._require(form.degree)
        index = monomial_index(self.num_vars, form.degree)
        positions = [(index[e], c) for e, c in form.terms]
        return [
            sum((row[i] * c for i, c in positions), Fraction(0))
            for row in self._rows[form.degree]
        ]

    def contains(self, form: Form) -> bool:
        return not any(self.functional_values(form))

    def coordinates(self, form: Form) -> List[Fraction]:
        """Coordinates of the class of ``form`` in the standard-monomial basis."""

        values = self.functional_values(form)
        return [
            value / row[p]
            for value, row, p in zip(
                values, self._rows[form.degree], self._pivots[form.degree]
            )
        ]

    def restrict(self, window: Tuple[int, int]) -> "GradedSpan":
        d_min, d_max = _check_window(window)
        self._require(d_min, d_max)
        return GradedSpan(
            self.num_vars, {d: self._rows[d] for d in range(d_min, d_max + 1)}
        )

    def truncate(self, n: int, top: Optional[int] = None) -> "GradedSpan":
        """The span of the ideal generated by the components of degree <= n, up to ``top``."""

        self._require(n)
        top = self.d_max if top is None else top
        duals = {d: self._rows[d] for d in range(self.d_min, min(n, top) + 1)}
        rows = list(self._rows[n])
        for d in range(n, top):
            rows = contract(self.num_vars, d, rows)
            duals[d + 1] = rows
        return GradedSpan(self.num_vars, duals)

    def __repr__(self) -> str:
        return (
            f"GradedSpan(num_vars={self.num_vars}, window={self.window}, "
            f"hilbert_function={self.hilbert_values().values[self.d_min:]})"
        )


def _check_window(window: Tuple[int, int]) -> Tuple[int, int]:
    d_min, d_max = window
    if d_min < 0 or d_max < d_min:
        raise HilbertGrowthWindowError(f"invalid degree window {window}")
    return d_min, d_max


def contract(
    num_vars: int,
    degree: int,
    rows: Sequence[Sequence[int]],
    generators: Sequence[Form] = (),
) -> List[IntRow]:
    """Annihilator in degree+1 of [S]_1 [J]_degree plus the given generators.

    ``rows`` spans the annihilator of [J]_degree.
    """

    size = len(monomials(num_vars, degree))
    echelon, pivots = echelon_form(rows, size)
    if not echelon:
        return []
    basis = monomials(num_vars, degree)
    common = 1
    for row, p in zip(echelon, pivots):
        common = common * abs(row[p]) // gcd(common, abs(row[p]))
    scaled = [[x * (common // row[p]) for x in row] for row, p in zip(echelon, pivots)]

    columns: List[List[Tuple[int, int]]] = [[] for _ in range(size)]
    for b, row in enumerate(scaled):
        for u, x in enumerate(row):
            if x:
                columns[u].append((b, x))

    unknowns: Dict[Exponent, int] = {}
    for p in pivots:
        for i in range(num_vars):
            m = list(basis[p])
            m[i] += 1
            unknowns.setdefault(tuple(m), len(unknowns))

    index = monomial_index(num_vars, degree)
    pivot_monomials = [basis[p] for p in pivots]

    def _expansion(m: Exponent, i: int) -> Dict[int, int]:
        u = list(m)
        u[i] -= 1
        entry: Dict[int, int] = {}
        for b, x in columns[index[tuple(u)]]:
            t = list(pivot_monomials[b])
            t[i] += 1
            key = unknowns[tuple(t)]
            entry[key] = entry.get(key, 0) + x
        return entry

    upper = monomials(num_vars, degree + 1)
    tracker = NullspaceTracker(len(unknowns))
    leading: List[Dict[int, int]] = []
    for m in upper:
        divisors = [i for i in range(num_vars) if m[i]]
        first = _expansion(m, divisors[0])
        leading.append(first)
        for j in divisors[1:]:
            other = _expansion(m, j)
            constraint = dict(first)
            for key, x in other.items():
                constraint[key] = constraint.get(key, 0) - x
            tracker.add_constraint(constraint)

    upper_index = monomial_index(num_vars, degree + 1)
    for g in generators:
        if g.num_vars != num_vars or g.degree != degree + 1:
            raise HilbertGrowthValueError(
                f"generator {g} is not a form of degree {degree + 1} in {num_vars} variables"
            )
        coefficients = clear_denominators([c for _, c in g.terms])
        constraint: Dict[int, int] = {}
        for (e, _), c in zip(g.terms, coefficients):
            for key, x in leading[upper_index[e]].items():
                constraint[key] = constraint.get(key, 0) + c * x
        tracker.add_constraint(constraint)

    result = []
    for vector in tracker.basis:
        result.append(
            [sum(x * vector[key] for key, x in entry.items()) for entry in leading]
        )
    return echelon_form(result, len(upper))[0]


def _is_monomial(form: Form) -> bool:
    return len(form.terms) == 1


def span_from_monomial_ideal(
    ideal: MonomialIdeal, window: Tuple[int, int]
) -> GradedSpan:
    d_min, d_max = _check_window(window)
    duals = {}
    for d in range(d_min, d_max + 1):
        basis = monomials(ideal.num_vars, d)
        duals[d] = [
            [int(i == j) for j in range(len(basis))]
            for i, m in enumerate(basis)
            if not ideal.contains(m)
        ]
    return GradedSpan(ideal.num_vars, duals)


def span_from_generators(
    generators: Sequence[Form],
    window: Tuple[int, int],
    num_vars: Optional[int] = None,
    log_level=logging.DEBUG,
) -> GradedSpan:
    """Components of the ideal generated by ``generators`` on the window.

    An empty generator list gives the zero ideal (``num_vars`` is then
    required).
    """

    d_min, d_max = _check_window(window)
    generators = [g for g in generators if not g.is_zero()]
    if num_vars is None:
        if not generators:
            raise HilbertGrowthValueError("num_vars is required without generators")
        num_vars = generators[0].num_vars
    for g in generators:
        if g.num_vars != num_vars:
            raise HilbertGrowthValueError(
                f"generator {g} has {g.num_vars} variables, expected {num_vars}"
            )
    if all(_is_monomial(g) for g in generators):
        ideal = MonomialIdeal(num_vars, tuple(g.leading_monomial for g in generators))
        return span_from_monomial_ideal(ideal, window)

    by_degree: Dict[int, List[Form]] = {}
    for g in generators:
        by_degree.setdefault(g.degree, []).append(g)
    rows: List[IntRow] = [] if by_degree.get(0) else [[1]]
    duals = {}
    if d_min == 0:
        duals[0] = rows
    for d in range(0, d_max):
        rows = contract(num_vars, d, rows, by_degree.get(d + 1, ()))
        logger.log(log_level, "Degree %s: quotient dimension %s", d + 1, len(rows))
        if d + 1 >= d_min:
            duals[d + 1] = rows
    return GradedSpan(num_vars, duals)


def hilbert_function(span: GradedSpan, d: int) -> int:
    return span.hilbert_function(d)


def monomial_hilbert_function(ideal: MonomialIdeal, d: int) -> int:
    """dim [S/I]_d by inclusion-exclusion over the generators.

    Subsets whose lcm exceeds degree d contribute nothing and neither do their
    supersets, so the recursion prunes them. Beyond
    MAX_INCLUSION_EXCLUSION_GENERATORS generators the standard monomials are
    counted directly.
    """

    r = ideal.num_vars
    if d < 0:
        return 0
    gens = ideal.generators
    if len(gens) > MAX_INCLUSION_EXCLUSION_GENERATORS:
        return len(ideal.standard_monomials(d))

    def _count(start: int, lcm: Exponent, sign: int) -> int:
        total = 0
        for j in range(start, len(gens)):
            joined = tuple(max(a, b) for a, b in zip(lcm, gens[j]))
            degree = sum(joined)
            if degree > d:
                continue
            total += -sign * binomial(d - degree + r - 1, r - 1)
            total += _count(j + 1, joined, -sign)
        return total

    return binomial(d + r - 1, r - 1) + _count(0, (0,) * r, 1)


def _ascending_lex(num_vars: int, degree: int) -> Iterator[Exponent]:
    # lazily, lex-smallest first: x_r^d, x_{r-1} x_r^{d-1}, ...
    if num_vars == 1:
        yield (degree,)
        return
    for first in range(0, degree + 1):
        for rest in _ascending_lex(num_vars - 1, degree - first):
            yield (first,) + rest


def lex_segment_growth(k: int, n: int, r: int) -> int:
    """dim [S/L]_{n+1} for the ideal L spanned in degree n by all but the k lex-last monomials.

    Only monomials x_i * s with s standard can have every division standard,
    so the count runs over those candidates.
    """

    if k < 0 or k > binomial(n + r - 1, r - 1):
        raise HilbertGrowthValueError(f"{k} monomials do not fit degree {n} in {r} variables")
    standard = set(islice(_ascending_lex(r, n), k))
    candidates = set()
    for s in standard:
        for i in range(r):
            m = list(s)
            m[i] += 1
            candidates.add(tuple(m))
    count = 0
    for m in candidates:
        ok = True
        for j in range(r):
            if m[j]:
                u = list(m)
                u[j] -= 1
                if tuple(u) not in standard:
                    ok = False
                    break
        if ok:
            count += 1
    return count


def lex_segment_ideal(h: Union[HVector, Sequence[int]], r: int) -> MonomialIdeal:
    """The lex-segment ideal with Hilbert function h in degrees 0 .. len(h)-1.

    Past the last degree of h the ideal has no new generators, so its Hilbert
    function there is the growth its generators force rather than 0. Append
    a 0 to h to close the quotient in degree len(h).
    """

    values = list(h.values if isinstance(h, HVector) else h)
    valid, index = is_o_sequence(values)
    if not valid:
        raise HilbertGrowthValueError(f"{values} is not an O-sequence (fails at {index})")
    if len(values) > 1 and values[1] > r:
        raise HilbertGrowthValueError(f"h[1] = {values[1]} exceeds {r} variables")
    if not any(values):
        return MonomialIdeal(r, ((0,) * r,))
    generators = []
    previous_standard = {(0,) * r}
    for d in range(1, len(values)):
        basis = monomials(r, d)
        if values[d] > len(basis):
            raise HilbertGrowthValueError(f"h[{d}] = {values[d]} exceeds dim S_{d}")
        cut = len(basis) - values[d]
        standard = set(basis[cut:])
        for m in basis[:cut]:
            divisions = []
            for j in range(r):
                if m[j]:
                    u = list(m)
                    u[j] -= 1
                    divisions.append(tuple(u))
            if all(u in previous_standard for u in divisions):
                generators.append(m)
        previous_standard = standard
    return MonomialIdeal(r, tuple(generators))


def _multiple_rows(span: GradedSpan, forms: Sequence[Form], degree: int) -> List[IntRow]:
    """Functionals u -> phi(u f) on [S]_degree, phi annihilating [J]_{degree + deg f}."""

    basis = monomials(span.num_vars, degree)
    rows = []
    for f in forms:
        top = degree + f.degree
        index = monomial_index(span.num_vars, top)
        coefficients = clear_denominators([c for _, c in f.terms])
        shifts = [(e, c) for (e, _), c in zip(f.terms, coefficients)]
        positions = [
            [(index[monomial_product(u, e)], c) for e, c in shifts] for u in basis
        ]
        for phi in span.dual_rows(top):
            rows.append([sum(phi[i] * c for i, c in pos) for pos in positions])
    return rows


def colon_by_forms(span: GradedSpan, forms: Sequence[Form], d: int) -> List[Form]:
    """A basis of {g in [S]_d : g f in J for every f in forms}."""

    if not forms:
        raise HilbertGrowthValueError("colon_by_forms needs at least one form")
    for f in forms:
        if not span.covers(d + f.degree):
            raise HilbertGrowthWindowError(
                f"degree {d + f.degree} is outside the window {span.window}"
            )
    size = len(monomials(span.num_vars, d))
    rows = _multiple_rows(span, forms, d)
    return [Form.from_vector(span.num_vars, d, v) for v in integer_kernel(rows, size)]


def colon_span(
    span: GradedSpan, forms: Sequence[Form], window: Tuple[int, int]
) -> GradedSpan:
    """(J : forms) on the window, as a span."""

    d_min, d_max = _check_window(window)
    if not forms:
        raise HilbertGrowthValueError("colon_span needs at least one form")
    for f in forms:
        span._require(d_min + f.degree, d_max + f.degree)
    return GradedSpan(
        span.num_vars,
        {d: _multiple_rows(span, forms, d) for d in range(d_min, d_max + 1)},
    )


def restriction_dimension(span: GradedSpan, form: Form, d: int) -> int:
    """dim [S/(J, form)]_d."""

    span._require(d)
    h = span.hilbert_function(d)
    if d < form.degree or h == 0:
        return h
    lower = monomials(span.num_vars, d - form.degree)
    index = monomial_index(span.num_vars, d)
    coefficients = clear_denominators([c for _, c in form.terms])
    shifts = [(e, c) for (e, _), c in zip(form.terms, coefficients)]
    rows = []
    for u in lower:
        positions = [(index[monomial_product(u, e)], c) for e, c in shifts]
        rows.append(
            [sum(phi[i] * c for i, c in positions) for phi in span.dual_rows(d)]
        )
    return h - integer_rank(rows, h)


def min_generator_count(span: GradedSpan, d: int) -> int:
    """Number of minimal generators in degree d."""

    span._require(d - 1, d)
    expected = len(contract(span.num_vars, d - 1, span.dual_rows(d - 1)))
    return expected - span.hilbert_function(d)


def minimal_generators(span: GradedSpan) -> List[Form]:
    """Minimal generators above the lowest degree of the window, plus a basis there."""

    generators = list(span.component(span.d_min))
    for d in range(span.d_min + 1, span.d_max + 1):
        size = len(monomials(span.num_vars, d))
        expected = contract(span.num_vars, d - 1, span.dual_rows(d - 1))
        if len(expected) == span.hilbert_function(d):
            continue
        rows, _ = echelon_form(integer_kernel(expected, size), size)
        current = len(rows)
        for v in integer_kernel(span.dual_rows(d), size):
            candidate, _ = echelon_form(rows + [v], size)
            if len(candidate) > current:
                rows, current = candidate, len(candidate)
                generators.append(Form.from_vector(span.num_vars, d, v))
    return generators


def socle_dimension(span: GradedSpan, d: int) -> int:
    """dim of {f in [S/J]_d : x_i f in J for all i}."""

    span._require(d, d + 1)
    h = span.hilbert_function(d)
    if h == 0:
        return 0
    basis = monomials(span.num_vars, d)
    index = monomial_index(span.num_vars, d + 1)
    rows = []
    for phi in span.dual_rows(d + 1):
        for i in range(span.num_vars):
            row = []
            for u in basis:
                m = list(u)
                m[i] += 1
                row.append(phi[index[tuple(m)]])
            rows.append(row)
    return h - integer_rank(rows, len(basis))


def regularity_cutoff(n: int, r: int) -> int:
    """Degree by which a basepoint-free degree-n system in r variables fills [S].

    Such a system contains a regular sequence of r forms of degree n whose
    complete intersection has socle degree r(n-1).
    """

    return r * (n - 1) + 1


def truncation_values(span: GradedSpan, n: int) -> Iterator[Tuple[int, List[IntRow]]]:
    """Annihilators of the ideal generated in degrees <= n, from degree n on (unbounded)."""

    rows = list(span.dual_rows(n))
    d = n
    while True:
        yield d, rows
        rows = contract(span.num_vars, d, rows)
        d += 1


def _persists(previous: Tuple[int, int], current: int) -> bool:
    degree, value = previous
    return value > 0 and degree >= 1 and current == macaulay_bound(value, degree)


def hilbert_polynomial_fit(
    values: Sequence[Tuple[int, int]],
    confirmations: int = DEFAULT_FIT_CONFIRMATIONS,
) -> Optional[HilbertPolynomial]:
    """Fit a polynomial to consecutive (degree, value) pairs by finite differences.

    Declares degree e when the last ``confirmations`` entries of the (e+1)-st
    difference sequence vanish, for the smallest such e. Returns ``None`` when
    no difference sequence stabilizes.
    """

    values = list(values)
    if len(values) < confirmations + 1:
        raise HilbertGrowthValueError(
            f"at least {confirmations + 1} values are needed, got {len(values)}"
        )
    degrees = [d for d, _ in values]
    if degrees != list(range(degrees[0], degrees[0] + len(degrees))):
        raise HilbertGrowthValueError(f"degrees {degrees} are not consecutive")
    sequence = [v for _, v in values]
    for e in range(len(values)):
        sequence = [b - a for a, b in zip(sequence, sequence[1:])]
        if len(sequence) < confirmations:
            return None
        if all(x == 0 for x in sequence[-confirmations:]):
            return HilbertPolynomial.interpolate(values[-(e + 1):])
    return None


class BaseLocusStatus(str, enum.Enum):
    empty = "empty"
    zero_dimensional = "zero_dimensional"
    positive_dimensional = "positive_dimensional"
    undetermined = "undetermined"


class BaseLocusProfile(BaseModel):
    """Base locus of [J]_n read off the Hilbert polynomial of S/<J_{<=n}>."""

    n: int = Field(description="The truncation degree")
    status: BaseLocusStatus = Field(description="Shape of the base locus")
    dimension: Optional[int] = Field(
        None, description="Projective dimension of the base locus"
    )
    degree: Optional[int] = Field(None, description="Degree of the base locus")
    hilbert_polynomial: Optional[List[Union[int, str]]] = Field(
        None, description="Coefficients of the Hilbert polynomial, constant term first"
    )
    hilbert_polynomial_text: Optional[str] = Field(
        None, description="The Hilbert polynomial in the variable t"
    )
    values: List[Tuple[int, int]] = Field(
        default=[], description="Measured (degree, quotient dimension) pairs"
    )
    certified: bool = Field(
        False,
        description="True when Gotzmann persistence certifies the polynomial",
    )

    def polynomial(self) -> Optional[HilbertPolynomial]:
        if self.hilbert_polynomial is None:
            return None
        return HilbertPolynomial(
            tuple(Fraction(str(c)) for c in self.hilbert_polynomial)
        )


def _profile_from_polynomial(
    n: int, polynomial: HilbertPolynomial, values, certified: bool
) -> BaseLocusProfile:
    common = dict(
        n=n,
        hilbert_polynomial=polynomial.to_json(),
        hilbert_polynomial_text=str(polynomial),
        values=values,
        certified=certified,
    )
    if polynomial.degree < 0:
        return BaseLocusProfile(status=BaseLocusStatus.empty, **common)
    multiplicity = polynomial.multiplicity
    if multiplicity.denominator != 1 or multiplicity <= 0:
        return BaseLocusProfile(status=BaseLocusStatus.undetermined, **common)
    status = (
        BaseLocusStatus.zero_dimensional
        if polynomial.degree == 0
        else BaseLocusStatus.positive_dimensional
    )
    return BaseLocusProfile(
        status=status,
        dimension=polynomial.degree,
        degree=int(multiplicity),
        **common,
    )


def base_locus_profile(
    span: GradedSpan,
    n: int,
    extension: Optional[int] = None,
    confirmations: int = DEFAULT_FIT_CONFIRMATIONS,
    log_level=logging.DEBUG,
) -> BaseLocusProfile:
    """Profile the base locus of [J]_n.

    The ideal generated by the components of degree <= n is extended degree
    by degree up to n + extension (default n + r + 5). The walk stops as soon
    as the quotient vanishes, Gotzmann persistence certifies the polynomial,
    or the finite-difference fit is confirmed.
    """

    if extension is None:
        extension = span.num_vars + 5
    values: List[Tuple[int, int]] = []
    for d, rows in truncation_values(span, n):
        h = len(rows)
        values.append((d, h))
        logger.log(log_level, "Truncation at %s: h(%s) = %s", n, d, h)
        if h == 0:
            return _profile_from_polynomial(n, HilbertPolynomial(), values, True)
        if len(values) >= 2 and _persists(values[-2], h):
            degree, value = values[-2]
            polynomial = hilbert_polynomial_from_expansion(value, degree)
            return _profile_from_polynomial(n, polynomial, values, True)
        if len(values) > confirmations + 1:
            fitted = hilbert_polynomial_fit(values[1:], confirmations)
            if fitted is not None:
                return _profile_from_polynomial(n, fitted, values, False)
        if d >= n + extension:
            break
    return BaseLocusProfile(n=n, status=BaseLocusStatus.undetermined, values=values)


def basepoint_free_check(
    span: GradedSpan, n: int, r: Optional[int] = None, log_level=logging.DEBUG
) -> bool:
    """True iff S/<J_{<=n}> vanishes by the regularity cutoff r(n-1)+1."""

    r = span.num_vars if r is None else r
    if n < 1:
        raise HilbertGrowthValueError(f"basepoint_free_check needs n >= 1, got {n}")
    cutoff = regularity_cutoff(n, r)
    previous = None
    for d, rows in truncation_values(span, n):
        h = len(rows)
        if h == 0:
            logger.log(log_level, "Quotient vanishes in degree %s", d)
            return True
        if previous is not None and _persists(previous, h):
            logger.log(log_level, "Hilbert function persists from degree %s", d - 1)
            return False
        if d >= cutoff:
            return False
        previous = (d, h)
    return False


def prop61_tail_check(span: GradedSpan, n: int, log_level=logging.DEBUG) -> bool:
    """Decreasing-by-one tail for an ideal in two variables.

    Verifies that [J]_n is basepoint free, that h(n+1) = h(n) - 1 and that J
    has no minimal generators above n inside the window, raising
    :class:`HypothesisError` naming the first one that fails. Then returns
    whether h(j+1) = max(h(j) - 1, 0) for all j >= n.
    """

    if span.num_vars != 2:
        raise HilbertGrowthValueError(
            f"the tail check is for two variables, got {span.num_vars}"
        )
    span._require(n, n + 1)
    if not basepoint_free_check(span, n):
        raise HypothesisError("basepoint_free", f"[J]_{n} has a base locus")
    h_n, h_next = span.hilbert_function(n), span.hilbert_function(n + 1)
    if h_next != h_n - 1 and not (h_n == 0 and h_next == 0):
        raise HypothesisError(
            "almost_maximal_drop", f"h({n}) = {h_n} but h({n + 1}) = {h_next}"
        )
    for d in range(n + 1, span.d_max + 1):
        count = min_generator_count(span, d)
        if count:
            raise HypothesisError(
                "no_late_generators", f"{count} minimal generator(s) in degree {d}"
            )
    tail = []
    for d, rows in truncation_values(span, n):
        tail.append(len(rows))
        if not rows:
            break
    logger.log(log_level, "Tail from degree %s: %s", n, tail)
    return all(b == max(a - 1, 0) for a, b in zip(tail, tail[1:]))


def _data_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        yield number, line


def _parse_ints(line: str, number: int) -> List[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise HilbertGrowthFormatError(f"expected integers, got {line!r}", line=number)


def read_monomial_ideal(text: str) -> MonomialIdeal:
    """Parse the monomial ideal format: ``vars r`` then one exponent vector per line."""

    num_vars = None
    generators = []
    for number, line in _data_lines(text):
        if not line:
            continue
        if num_vars is None:
            tokens = line.split()
            if len(tokens) != 2 or tokens[0] != "vars":
                raise HilbertGrowthFormatError("expected header 'vars r'", line=number)
            num_vars = _parse_ints(tokens[1], number)[0]
            if num_vars < 1:
                raise HilbertGrowthFormatError("vars must be positive", line=number)
            continue
        exponent = _parse_ints(line, number)
        if len(exponent) != num_vars or any(e < 0 for e in exponent):
            raise HilbertGrowthFormatError(
                f"expected {num_vars} non-negative exponents", line=number
            )
        generators.append(tuple(exponent))
    if num_vars is None:
        raise HilbertGrowthFormatError("missing header 'vars r'")
    return MonomialIdeal(num_vars, tuple(generators))


def write_monomial_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"vars {ideal.num_vars}"]
    lines += [" ".join(str(e) for e in g) for g in ideal.generators]
    return "\n".join(lines) + "\n"


def read_forms(text: str) -> Tuple[int, List[Form]]:
    """Parse the form list format.

    Header ``vars r deg d`` (d bounds the degrees of the listed forms), then
    terms ``p/q e1 ... er``, one per line, with a blank line between forms.
    Returns the number of variables and the forms.
    """

    num_vars = max_degree = None
    forms: List[Form] = []
    current: List[Tuple[Exponent, Fraction]] = []
    start = None

    def _flush():
        nonlocal current
        if current:
            degrees = {sum(e) for e, _ in current}
            if len(degrees) != 1:
                raise HilbertGrowthFormatError("terms of different degrees", line=start)
            degree = degrees.pop()
            if degree > max_degree:
                raise HilbertGrowthFormatError(
                    f"form of degree {degree} exceeds deg {max_degree}", line=start
                )
            forms.append(Form(num_vars, degree, tuple(current)))
        current = []

    for number, line in _data_lines(text):
        if num_vars is None:
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 4 or tokens[0] != "vars" or tokens[2] != "deg":
                raise HilbertGrowthFormatError(
                    "expected header 'vars r deg d'", line=number
                )
            num_vars = _parse_ints(tokens[1], number)[0]
            max_degree = _parse_ints(tokens[3], number)[0]
            if num_vars < 1 or max_degree < 0:
                raise HilbertGrowthFormatError("invalid header values", line=number)
            continue
        if not line:
            _flush()
            continue
        tokens = line.split()
        try:
            coefficient = parse_rational(tokens[0])
        except ValueError as e:
            raise HilbertGrowthFormatError(str(e), line=number)
        exponent = _parse_ints(" ".join(tokens[1:]), number)
        if len(exponent) != num_vars or any(e < 0 for e in exponent):
            raise HilbertGrowthFormatError(
                f"expected {num_vars} non-negative exponents", line=number
            )
        if not current:
            start = number
        current.append((tuple(exponent), coefficient))
    if num_vars is None:
        raise HilbertGrowthFormatError("missing header 'vars r deg d'")
    _flush()
    return num_vars, forms


def write_forms(forms: Sequence[Form], num_vars: Optional[int] = None) -> str:
    num_vars = forms[0].num_vars if forms else num_vars
    if num_vars is None:
        raise HilbertGrowthValueError("num_vars is required for an empty form list")
    max_degree = max((f.degree for f in forms), default=0)
    blocks = []
    for f in forms:
        blocks.append(
            "\n".join(
                f"{rational_str(c)} " + " ".join(str(x) for x in e) for e, c in f.terms
            )
        )
    return f"vars {num_vars} deg {max_degree}\n" + "\n\n".join(blocks) + "\n"


def is_form_list(text: str) -> bool:
    for _, line in _data_lines(text):
        if line:
            return "deg" in line.split()
    return False

