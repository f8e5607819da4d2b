"""Macaulay representations and the integer bounds built on them."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from hilbert_growth.errors import HilbertGrowthValueError
from hilbert_growth.utils import pydantic_validator, rational_str


def binomial(m: int, q: int) -> int:
    """C(m, q), zero when m < q or q < 0."""

    if q < 0 or m < q:
        return 0
    return comb(m, q)


class BinomialExpansion(BaseModel):
    """The i-binomial (Macaulay) expansion k = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j)."""

    degree: int = Field(description="The degree i of the expansion")
    terms: List[Tuple[int, int]] = Field(
        description="(top, bottom) pairs with strictly decreasing tops and bottoms"
    )

    @pydantic_validator("terms")
    def check_terms(cls, v):
        for (top, bottom), (next_top, next_bottom) in zip(v, v[1:]):
            if next_top >= top or next_bottom != bottom - 1:
                raise ValueError("tops and bottoms must strictly decrease")
        for top, bottom in v:
            if bottom < 1 or top < bottom:
                raise ValueError(f"invalid term C({top},{bottom})")
        return v

    @property
    def value(self) -> int:
        return sum(binomial(top, bottom) for top, bottom in self.terms)

    @property
    def tops(self) -> List[int]:
        return [top for top, _ in self.terms]

    def __str__(self) -> str:
        return " + ".join(f"C({top},{bottom})" for top, bottom in self.terms)


class HVector(BaseModel):
    """A Hilbert function or h-vector indexed from degree 0; missing degrees read as 0."""

    values: List[int] = Field(description="Values in degrees 0, 1, 2, ...")

    @pydantic_validator("values")
    def check_values(cls, v):
        if any(x < 0 for x in v):
            raise ValueError("h-vector entries must be non-negative")
        return v

    def __getitem__(self, degree: int) -> int:
        if degree < 0:
            return 0
        return self.values[degree] if degree < len(self.values) else 0

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if isinstance(other, HVector):
            return self.trimmed().values == other.trimmed().values
        if isinstance(other, (list, tuple)):
            return self.trimmed().values == HVector(values=list(other)).trimmed().values
        return NotImplemented

    def trimmed(self) -> "HVector":
        values = list(self.values)
        while values and values[-1] == 0:
            values.pop()
        return HVector(values=values)

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def last_nonzero_degree(self) -> int:
        return len(self.trimmed().values) - 1

    def first_difference(self) -> "HVector":
        return HVector(
            values=[self[d] - self[d - 1] for d in range(len(self.values))]
        )

    def running_sum(self) -> "HVector":
        total, values = 0, []
        for x in self.values:
            total += x
            values.append(total)
        return HVector(values=values)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.trimmed().values) + ")"


def _check_positive(k: int, i: int):
    if k <= 0 or i <= 0:
        raise HilbertGrowthValueError(
            f"Macaulay expansions need k >= 1 and i >= 1, got k={k}, i={i}"
        )


def _largest_top(k: int, i: int) -> int:
    # largest m >= i with C(m, i) <= k
    high = i + 1
    while binomial(high, i) <= k:
        high = 2 * high
    low = i
    while high - low > 1:
        middle = (low + high) // 2
        if binomial(middle, i) <= k:
            low = middle
        else:
            high = middle
    return low


def macaulay_expand(k: int, i: int) -> BinomialExpansion:
    """Greedy i-binomial expansion of k."""

    _check_positive(k, i)
    terms = []
    remaining, bottom = k, i
    while remaining > 0 and bottom >= 1:
        top = _largest_top(remaining, bottom)
        terms.append((top, bottom))
        remaining -= binomial(top, bottom)
        bottom -= 1
    return BinomialExpansion(degree=i, terms=terms)


def shift(expansion: BinomialExpansion, a: int, b: int) -> int:
    """Sum of C(top + b, bottom + a) over the terms of the expansion."""

    return sum(binomial(top + b, bottom + a) for top, bottom in expansion.terms)


def macaulay_bound(k: int, i: int) -> int:
    """k^<i>: the largest legal Hilbert function value in degree i+1."""

    return shift(macaulay_expand(k, i), 1, 1)


def green_bound(k: int, i: int) -> int:
    """k_<i>: the largest value in degree i after restriction to a general hyperplane."""

    return shift(macaulay_expand(k, i), 0, -1)


def mg_dimension(k: int, n: int) -> int:
    return macaulay_expand(k, n).terms[0][0] - n


def gotzmann_values(k: int, n: int, d_max: int) -> List[int]:
    """Hilbert function values in degrees n..n+d_max under persistent maximal growth."""

    if d_max < 0:
        raise HilbertGrowthValueError(f"d_max must be non-negative, got {d_max}")
    expansion = macaulay_expand(k, n)
    return [shift(expansion, d, d) for d in range(d_max + 1)]


def curve_degree_bound(k: int, n: int) -> int:
    """Number of C(a+1, a) terms in the n-binomial expansion of k."""

    return sum(1 for top, bottom in macaulay_expand(k, n).terms if top - bottom == 1)


def trailing_unit_terms(k: int, n: int) -> int:
    """Number of C(a, a) terms in the n-binomial expansion of k."""

    return sum(1 for top, bottom in macaulay_expand(k, n).terms if top == bottom)


@dataclass(frozen=True)
class HilbertPolynomial:
    """A polynomial in t with exact coefficients, lowest degree first."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coefficients = [Fraction(c) for c in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def interpolate(cls, points: Sequence[Tuple[int, int]]) -> "HilbertPolynomial":
        """The polynomial of degree < len(points) through the given (t, value) pairs."""

        result = [Fraction(0)] * len(points)
        for i, (ti, vi) in enumerate(points):
            basis = [Fraction(1)]
            denominator = Fraction(1)
            for j, (tj, _) in enumerate(points):
                if j == i:
                    continue
                basis = [Fraction(0)] + basis
                for p in range(len(basis) - 1):
                    basis[p] -= tj * basis[p + 1]
                denominator *= ti - tj
            for p, c in enumerate(basis):
                result[p] += vi * c / denominator
        return cls(tuple(result))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    @property
    def multiplicity(self) -> Fraction:
        """Leading coefficient times degree factorial: the degree of the scheme."""

        if not self.coefficients:
            return Fraction(0)
        return self.leading_coefficient * factorial(self.degree)

    def __call__(self, t: int) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * t + c
        return value

    def to_json(self) -> List:
        return [rational_str(c) for c in self.coefficients]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        pieces = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            variable = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
            if variable and magnitude == 1:
                body = variable
            else:
                body = f"{rational_str(magnitude)}{variable}"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f"{sign}{body}"
        return text


def hilbert_polynomial_from_expansion(k: int, n: int) -> HilbertPolynomial:
    """Gotzmann persistence polynomial: sum over terms of C(t + top - n, top - bottom)."""

    expansion = macaulay_expand(k, n)
    size = max(top - bottom for top, bottom in expansion.terms) + 2
    samples = [(n + d, shift(expansion, d, d)) for d in range(size)]
    return HilbertPolynomial.interpolate(samples)


def is_o_sequence(h: Sequence[int]) -> Tuple[bool, Optional[int]]:
    """Macaulay's characterization, returning (valid, index of the first failure)."""

    values = list(h.values if isinstance(h, HVector) else h)
    if not any(values):
        return True, None
    if values[0] != 1:
        return False, 0
    for t in range(1, len(values) - 1):
        current, following = values[t], values[t + 1]
        if current == 0:
            if following != 0:
                return False, t + 1
            continue
        if following > macaulay_bound(current, t):
            return False, t + 1
    return True, None


def growth_gap(h: Sequence[int], n: int) -> int:
    """macaulay_bound(h[n], n) - h[n+1]: 0 for maximal growth, 1 for almost maximal."""

    values = list(h.values if isinstance(h, HVector) else h)
    if n < 1 or n >= len(values) or values[n] < 1:
        raise HilbertGrowthValueError(f"growth_gap needs h[{n}] >= 1")
    if n + 1 >= len(values):
        raise HilbertGrowthValueError(f"growth_gap needs a value in degree {n + 1}")
    return macaulay_bound(values[n], n) - values[n + 1]
