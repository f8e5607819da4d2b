"""Exact rational linear algebra and homogeneous polynomial arithmetic.

Every quantity is an ``int`` or a ``fractions.Fraction``; nothing is ever
rounded. Matrices are eliminated on integer rows with cleared denominators:
Bareiss elimination for ranks, primitive-row Gauss-Jordan for echelon forms
and kernels.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from hilbert_growth.errors import HilbertGrowthValueError
from hilbert_growth.utils import (
    DEFAULT_COEFFICIENT_BOUND,
    DEFAULT_DENOMINATOR_BOUND,
    rational_str,
)

Rational = Fraction
Exponent = Tuple[int, ...]
Number = Union[int, Fraction]
IntRow = List[int]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else a or b


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> Tuple[Exponent, ...]:
    """All exponent vectors of the given degree, graded-lex descending (x1^d first)."""

    if num_vars < 1:
        raise HilbertGrowthValueError(f"num_vars must be positive, got {num_vars}")
    if degree < 0:
        return ()
    if num_vars == 1:
        return ((degree,),)
    result = []
    for first in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


@lru_cache(maxsize=None)
def monomial_index(num_vars: int, degree: int) -> Dict[Exponent, int]:
    return {m: i for i, m in enumerate(monomials(num_vars, degree))}


def monomial_product(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def evaluate_monomial(m: Exponent, point: Sequence[Number]) -> Number:
    value: Number = 1
    for e, c in zip(m, point):
        if e:
            value *= c**e
    return value


@dataclass(frozen=True)
class Form:
    """A homogeneous polynomial with rational coefficients.

    ``terms`` holds ``(exponent, coefficient)`` pairs sorted graded-lex
    descending; zero coefficients are never stored.
    """

    num_vars: int
    degree: int
    terms: Tuple[Tuple[Exponent, Fraction], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise HilbertGrowthValueError(
                f"num_vars must be positive, got {self.num_vars}"
            )
        if self.degree < 0:
            raise HilbertGrowthValueError(
                f"degree must be non-negative, got {self.degree}"
            )
        merged: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in self.terms:
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != self.num_vars or any(e < 0 for e in exponent):
                raise HilbertGrowthValueError(
                    f"exponent {exponent} does not fit {self.num_vars} variables"
                )
            if sum(exponent) != self.degree:
                raise HilbertGrowthValueError(
                    f"exponent {exponent} does not have degree {self.degree}"
                )
            merged[exponent] = merged.get(exponent, Fraction(0)) + Fraction(
                coefficient
            )
        normalized = tuple(
            (e, c) for e, c in sorted(merged.items(), reverse=True) if c != 0
        )
        object.__setattr__(self, "terms", normalized)

    @classmethod
    def from_dict(
        cls, num_vars: int, degree: int, coefficients: Mapping[Exponent, Number]
    ) -> "Form":
        return cls(num_vars, degree, tuple(coefficients.items()))

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> "Form":
        return cls(num_vars, degree)

    @classmethod
    def constant(cls, value: Number, num_vars: int) -> "Form":
        return cls(num_vars, 0, (((0,) * num_vars, Fraction(value)),))

    @classmethod
    def monomial(
        cls, exponent: Sequence[int], coefficient: Number = 1
    ) -> "Form":
        exponent = tuple(exponent)
        return cls(len(exponent), sum(exponent), ((exponent, Fraction(coefficient)),))

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "Form":
        """The variable x_{index+1} (0-based index)."""

        exponent = [0] * num_vars
        exponent[index] = 1
        return cls.monomial(exponent)

    @classmethod
    def linear(cls, coefficients: Sequence[Number]) -> "Form":
        num_vars = len(coefficients)
        terms = []
        for i, c in enumerate(coefficients):
            exponent = [0] * num_vars
            exponent[i] = 1
            terms.append((tuple(exponent), Fraction(c)))
        return cls(num_vars, 1, tuple(terms))

    @classmethod
    def from_vector(
        cls, num_vars: int, degree: int, vector: Sequence[Number]
    ) -> "Form":
        basis = monomials(num_vars, degree)
        if len(vector) != len(basis):
            raise HilbertGrowthValueError(
                f"vector of length {len(vector)} does not match {len(basis)} monomials"
            )
        return cls(num_vars, degree, tuple(zip(basis, map(Fraction, vector))))

    @property
    def coefficients(self) -> Dict[Exponent, Fraction]:
        return dict(self.terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.coefficients.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_monomial(self) -> Exponent:
        if not self.terms:
            raise HilbertGrowthValueError("The zero form has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        return self.terms[0][1]

    def to_vector(self) -> List[Fraction]:
        index = monomial_index(self.num_vars, self.degree)
        vector = [Fraction(0)] * len(index)
        for exponent, coefficient in self.terms:
            vector[index[exponent]] = coefficient
        return vector

    def linear_coefficients(self) -> List[Fraction]:
        if self.degree != 1:
            raise HilbertGrowthValueError("Only linear forms have a coefficient vector")
        return self.to_vector()

    def scale(self, value: Number) -> "Form":
        value = Fraction(value)
        return Form(
            self.num_vars, self.degree, tuple((e, c * value) for e, c in self.terms)
        )

    def monic(self) -> "Form":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading_coefficient)

    def _check_compatible(self, other: "Form"):
        if self.num_vars != other.num_vars:
            raise HilbertGrowthValueError(
                f"forms in {self.num_vars} and {other.num_vars} variables are incompatible"
            )

    def __add__(self, other: "Form") -> "Form":
        self._check_compatible(other)
        if self.degree != other.degree:
            raise HilbertGrowthValueError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        return Form(self.num_vars, self.degree, self.terms + other.terms)

    def __neg__(self) -> "Form":
        return self.scale(-1)

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, other: "Form") -> "Form":
        return multiply_forms(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = (
            ["x", "y", "z"]
            if self.num_vars <= 3
            else [f"x{i + 1}" for i in range(self.num_vars)]
        )
        pieces = []
        for exponent, coefficient in self.terms:
            factors = []
            for name, e in zip(names, exponent):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            monomial = "*".join(factors)
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if monomial and magnitude == 1:
                body = monomial
            elif monomial:
                body = f"{rational_str(magnitude)}*{monomial}"
            else:
                body = str(rational_str(magnitude))
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def multiply_forms(f: Form, g: Form) -> Form:
    f._check_compatible(g)
    product: Dict[Exponent, Fraction] = {}
    for ef, cf in f.terms:
        for eg, cg in g.terms:
            e = monomial_product(ef, eg)
            product[e] = product.get(e, Fraction(0)) + cf * cg
    return Form.from_dict(f.num_vars, f.degree + g.degree, product)


def evaluate(f: Form, point: Sequence[Number]) -> Fraction:
    if len(point) != f.num_vars:
        raise HilbertGrowthValueError(
            f"point has {len(point)} coordinates, form has {f.num_vars} variables"
        )
    return Fraction(
        sum(c * evaluate_monomial(e, point) for e, c in f.terms)
    )


def exact_quotient(f: Form, g: Form) -> Form:
    """f / g, raising when g does not divide f."""

    f._check_compatible(g)
    if g.is_zero():
        raise HilbertGrowthValueError("division by the zero form")
    if f.is_zero():
        return Form.zero(f.num_vars, max(f.degree - g.degree, 0))
    if f.degree < g.degree:
        raise HilbertGrowthValueError(f"{g} does not divide {f}")
    remainder = f.coefficients
    quotient: Dict[Exponent, Fraction] = {}
    lead, lead_coefficient = g.terms[0]
    while remainder:
        top = max(remainder)
        if not divides(lead, top):
            raise HilbertGrowthValueError(f"{g} does not divide {f}")
        e = tuple(a - b for a, b in zip(top, lead))
        c = remainder[top] / lead_coefficient
        quotient[e] = c
        for eg, cg in g.terms:
            m = monomial_product(e, eg)
            value = remainder.get(m, Fraction(0)) - c * cg
            if value:
                remainder[m] = value
            else:
                remainder.pop(m, None)
    return Form.from_dict(f.num_vars, f.degree - g.degree, quotient)


# Univariate polynomials over Q: ascending coefficient lists, no trailing zeros.
Poly = List[Fraction]


def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim(
        [
            (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
            for i in range(n)
        ]
    )


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    product = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                product[i + j] += x * y
    return _trim(product)


def _poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    remainder = list(a)
    quotient = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(remainder) >= len(b) and remainder:
        shift = len(remainder) - len(b)
        c = remainder[-1] / b[-1]
        quotient[shift] = c
        for i, y in enumerate(b):
            remainder[shift + i] -= c * y
        _trim(remainder)
    return _trim(quotient), remainder


def _poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


# Bivariate polynomials: lists indexed by the power of the main variable,
# each entry a univariate polynomial in the second variable.
BiPoly = List[Poly]


def _bi_trim(p: BiPoly) -> BiPoly:
    while p and not p[-1]:
        p.pop()
    return p


def _bi_content(p: BiPoly) -> Poly:
    return reduce(_poly_gcd, (c for c in p if c), [])


def _bi_divide_content(p: BiPoly, content: Poly) -> BiPoly:
    return [_poly_divmod(c, content)[0] if c else [] for c in p]


def _bi_primitive(p: BiPoly) -> BiPoly:
    p = _bi_trim(p)
    if not p:
        return p
    return _bi_divide_content(p, _bi_content(p))


def _bi_pseudo_remainder(a: BiPoly, b: BiPoly) -> BiPoly:
    remainder = [list(c) for c in a]
    lead = b[-1]
    while len(remainder) >= len(b) and remainder:
        shift = len(remainder) - len(b)
        top = remainder[-1]
        remainder = [_poly_mul(c, lead) for c in remainder]
        for i, c in enumerate(b):
            remainder[shift + i] = _poly_sub(remainder[shift + i], _poly_mul(top, c))
        _bi_trim(remainder)
    return remainder


def _bi_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    a, b = _bi_trim(a), _bi_trim(b)
    if not a:
        return b
    if not b:
        return a
    content = _poly_gcd(_bi_content(a), _bi_content(b))
    a, b = _bi_primitive(a), _bi_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _bi_primitive(_bi_pseudo_remainder(a, b))
    return [_poly_mul(c, content) for c in a]


def _dehomogenize(f: Form) -> BiPoly:
    # x1 is the main variable, x2 (when present) the coefficient variable
    result: BiPoly = []
    for exponent, coefficient in f.terms:
        main = exponent[0] if f.num_vars > 1 else 0
        second = exponent[1] if f.num_vars > 2 else 0
        while len(result) <= main:
            result.append([])
        poly = result[main]
        while len(poly) <= second:
            poly.append(Fraction(0))
        poly[second] += coefficient
    return _bi_trim([_trim(c) for c in result])


def _rehomogenize(p: BiPoly, num_vars: int) -> Form:
    degree = max(
        (i + j for i, c in enumerate(p) for j, x in enumerate(c) if x), default=0
    )
    terms = []
    for i, c in enumerate(p):
        for j, x in enumerate(c):
            if not x:
                continue
            exponent = [0] * num_vars
            if num_vars == 1:
                exponent[0] = degree
            elif num_vars == 2:
                exponent[0], exponent[1] = i, degree - i
            else:
                exponent[0], exponent[1], exponent[2] = i, j, degree - i - j
            terms.append((tuple(exponent), x))
    return Form(num_vars, degree, tuple(terms))


def form_gcd(forms: Sequence[Form]) -> Form:
    """Greatest common divisor of forms in at most three variables.

    The last variable is split off as a power and the rest is dehomogenized,
    so the Euclidean algorithm only ever runs over Q[x2][x1]. The result is
    monic with respect to the graded-lex leading monomial.
    """

    forms = list(forms)
    if not forms:
        raise HilbertGrowthValueError("form_gcd needs at least one form")
    num_vars = forms[0].num_vars
    for f in forms:
        forms[0]._check_compatible(f)
        if f.is_zero():
            raise HilbertGrowthValueError("form_gcd is undefined on the zero form")
    if num_vars > 3:
        raise HilbertGrowthValueError(
            f"form_gcd supports at most 3 variables, got {num_vars}"
        )

    last = num_vars - 1
    common_power = min(min(e[last] for e, _ in f.terms) for f in forms)
    result: Optional[BiPoly] = None
    for f in forms:
        power = min(e[last] for e, _ in f.terms)
        shifted = Form(
            num_vars,
            f.degree - power,
            tuple(
                (e[:last] + (e[last] - power,), c) for e, c in f.terms
            ),
        )
        reduced = _dehomogenize(shifted) if num_vars > 1 else [[Fraction(1)]]
        result = reduced if result is None else _bi_gcd(result, reduced)

    core = _rehomogenize(result or [[Fraction(1)]], num_vars)
    power = [0] * num_vars
    power[last] = common_power
    return multiply_forms(core, Form.monomial(power)).monic()


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        entries = tuple(Fraction(x) for x in self.entries)
        if not entries and self.rows * self.cols:
            entries = (Fraction(0),) * (self.rows * self.cols)
        if len(entries) != self.rows * self.cols:
            raise HilbertGrowthValueError(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Number]], cols: Optional[int] = None
    ) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise HilbertGrowthValueError("rows have different lengths")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls.from_rows(
            [[int(i == j) for j in range(size)] for i in range(size)], size
        )

    def row(self, i: int) -> List[Fraction]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> List[List[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def apply(self, vector: Sequence[Number]) -> List[Fraction]:
        if len(vector) != self.cols:
            raise HilbertGrowthValueError("vector length does not match the matrix")
        return [
            sum((a * b for a, b in zip(self.row(i), vector)), Fraction(0))
            for i in range(self.rows)
        ]

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise HilbertGrowthValueError("matrix shapes differ")
        return RationalMatrix(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def scale(self, value: Number) -> "RationalMatrix":
        return RationalMatrix(
            self.rows, self.cols, tuple(a * value for a in self.entries)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)


def clear_denominators(row: Sequence[Number]) -> IntRow:
    denominator = 1
    for x in row:
        denominator = _lcm(denominator, Fraction(x).denominator)
    return [int(Fraction(x) * denominator) for x in row]


def primitive(row: Sequence[int]) -> IntRow:
    """Divide an integer row by its content; the first nonzero entry is positive."""

    content = 0
    for x in row:
        content = gcd(content, x)
        if content == 1:
            break
    if content == 0:
        return list(row)
    leading = next(x for x in row if x)
    if leading < 0:
        content = -content
    return [x // content for x in row]


def _bareiss_rank(rows: List[IntRow], cols: int) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    previous = 1
    for col in range(cols):
        if rank == len(rows):
            break
        candidates = [i for i in range(rank, len(rows)) if rows[i][col]]
        if not candidates:
            continue
        pivot_row = min(candidates, key=lambda i: abs(rows[i][col]).bit_length())
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            factor = rows[i][col]
            rows[i] = [
                (pivot * a - factor * b) // previous
                for a, b in zip(rows[i], rows[rank])
            ]
        previous = pivot
        rank += 1
    return rank


def rank(matrix: RationalMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""

    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return _bareiss_rank(
        [clear_denominators(r) for r in matrix.to_rows()], matrix.cols
    )


def integer_rank(rows: Sequence[Sequence[int]], cols: int) -> int:
    return _bareiss_rank([list(r) for r in rows], cols)


def echelon_form(
    rows: Iterable[Sequence[int]], cols: int
) -> Tuple[List[IntRow], List[int]]:
    """Reduced echelon form of integer rows with primitive rows.

    Returns the nonzero rows and their pivot columns in increasing order; every
    pivot column is zero in all other rows.
    """

    pending = [primitive(list(r)) for r in rows if any(r)]
    basis: List[IntRow] = []
    pivots: List[int] = []
    for col in range(cols):
        candidates = [i for i, r in enumerate(pending) if r[col]]
        if not candidates:
            continue
        chosen = min(candidates, key=lambda i: abs(pending[i][col]))
        pivot_row = pending.pop(chosen)
        pivot = pivot_row[col]

        def _eliminate(r: IntRow) -> IntRow:
            factor = r[col]
            if not factor:
                return r
            g = gcd(pivot, factor)
            return primitive(
                [(pivot // g) * a - (factor // g) * b for a, b in zip(r, pivot_row)]
            )

        pending = [r for r in (_eliminate(r) for r in pending) if any(r)]
        basis = [_eliminate(r) for r in basis]
        basis.append(pivot_row)
        pivots.append(col)
        if not pending:
            break
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def integer_kernel(rows: Sequence[Sequence[int]], cols: int) -> List[IntRow]:
    """Primitive integer basis of the right null space."""

    echelon, pivots = echelon_form(rows, cols)
    pivot_set = set(pivots)
    common = 1
    for r, p in zip(echelon, pivots):
        common = _lcm(common, abs(r[p]))
    kernel = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [0] * cols
        vector[free] = common
        for r, p in zip(echelon, pivots):
            vector[p] = -r[free] * (common // r[p])
        kernel.append(primitive(vector))
    return kernel


def kernel_basis(matrix: RationalMatrix) -> List[List[Fraction]]:
    if matrix.cols == 0:
        return []
    rows = [clear_denominators(r) for r in matrix.to_rows()]
    return [[Fraction(x) for x in v] for v in integer_kernel(rows, matrix.cols)]


class NullspaceTracker:
    """Kernel of a growing list of linear constraints.

    Starts from the identity basis of ``size`` unknowns; each constraint that
    is not yet implied removes exactly one basis vector.
    """

    def __init__(self, size: int):
        self.size = size
        self.basis: List[IntRow] = [
            [int(i == j) for j in range(size)] for i in range(size)
        ]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def add_constraint(self, constraint: Union[Sequence[int], Mapping[int, int]]):
        if isinstance(constraint, Mapping):
            items = [(i, c) for i, c in constraint.items() if c]
        else:
            items = [(i, c) for i, c in enumerate(constraint) if c]
        if not items or not self.basis:
            return
        values = [sum(c * v[i] for i, c in items) for v in self.basis]
        nonzero = [j for j, x in enumerate(values) if x]
        if not nonzero:
            return
        chosen = min(nonzero, key=lambda j: abs(values[j]))
        pivot_vector, pivot_value = self.basis[chosen], values[chosen]
        updated = []
        for j, v in enumerate(self.basis):
            if j == chosen:
                continue
            if values[j]:
                g = gcd(pivot_value, values[j])
                v = primitive(
                    [
                        (pivot_value // g) * a - (values[j] // g) * b
                        for a, b in zip(v, pivot_vector)
                    ]
                )
            updated.append(v)
        self.basis = updated


def random_rational(
    rng: random.Random,
    bound: int = DEFAULT_COEFFICIENT_BOUND,
    denominator_bound: int = DEFAULT_DENOMINATOR_BOUND,
    nonzero: bool = False,
) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, denominator_bound))
        if value or not nonzero:
            return value


def random_linear_form(
    num_vars: int, rng: random.Random, nonzero_coefficients: bool = True, **kwargs
) -> Form:
    return Form.linear(
        [random_rational(rng, nonzero=nonzero_coefficients, **kwargs) for _ in range(num_vars)]
    )


def _reduced_linear_rows(forms: Sequence[Form], num_vars: int) -> List[IntRow]:
    rows = []
    for f in forms:
        if f.num_vars != num_vars or f.degree != 1:
            raise HilbertGrowthValueError(
                f"defining forms must be linear forms in {num_vars} variables"
            )
        rows.append(clear_denominators(f.to_vector()))
    return echelon_form(rows, num_vars)[0]


@dataclass(frozen=True)
class LinearSubspace:
    """A linear subspace of P^ambient_dim cut out by linear forms.

    The defining forms are kept in reduced echelon form, so two subspaces are
    equal exactly when their ``defining_forms`` are.
    """

    ambient_dim: int
    defining_forms: Tuple[Form, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise HilbertGrowthValueError(
                f"ambient_dim must be positive, got {self.ambient_dim}"
            )
        rows = _reduced_linear_rows(self.defining_forms, self.ambient_dim + 1)
        object.__setattr__(
            self, "defining_forms", tuple(Form.linear(r) for r in rows)
        )

    @classmethod
    def through_points(
        cls, ambient_dim: int, points: Sequence[Sequence[Number]]
    ) -> "LinearSubspace":
        """The smallest subspace containing the given points."""

        rows = [clear_denominators(p) for p in points]
        forms = [Form.linear(v) for v in integer_kernel(rows, ambient_dim + 1)]
        return cls(ambient_dim, tuple(forms))

    @classmethod
    def coordinate(cls, ambient_dim: int, zero_coordinates: Iterable[int]) -> "LinearSubspace":
        """Subspace where the given (0-based) coordinates vanish."""

        return cls(
            ambient_dim,
            tuple(Form.variable(i, ambient_dim + 1) for i in zero_coordinates),
        )

    @property
    def projective_dimension(self) -> int:
        return self.ambient_dim - len(self.defining_forms)

    def contains_point(self, point: Sequence[Number]) -> bool:
        return all(evaluate(f, point) == 0 for f in self.defining_forms)

    def meet(self, other: "LinearSubspace") -> "LinearSubspace":
        """Intersection of the two subspaces."""

        self._check_compatible(other)
        return LinearSubspace(
            self.ambient_dim, self.defining_forms + other.defining_forms
        )

    def join(self, other: "LinearSubspace") -> "LinearSubspace":
        """Projective span of the two subspaces.

        Its forms are the intersection of the two form spaces, read off the
        kernel of the stacked coefficient columns.
        """

        self._check_compatible(other)
        size = self.ambient_dim + 1
        mine = [clear_denominators(f.to_vector()) for f in self.defining_forms]
        theirs = [clear_denominators(f.to_vector()) for f in other.defining_forms]
        if not mine or not theirs:
            return LinearSubspace(self.ambient_dim)
        columns = mine + [[-x for x in v] for v in theirs]
        system = [[c[i] for c in columns] for i in range(size)]
        forms = []
        for combination in integer_kernel(system, len(columns)):
            vector = [
                sum(a * v[i] for a, v in zip(combination, mine)) for i in range(size)
            ]
            if any(vector):
                forms.append(Form.linear(vector))
        return LinearSubspace(self.ambient_dim, tuple(forms))

    def same_as(self, other: "LinearSubspace") -> bool:
        return (
            self.ambient_dim == other.ambient_dim
            and self.defining_forms == other.defining_forms
        )

    def _check_compatible(self, other: "LinearSubspace"):
        if self.ambient_dim != other.ambient_dim:
            raise HilbertGrowthValueError(
                f"subspaces of P^{self.ambient_dim} and P^{other.ambient_dim} are incompatible"
            )

    def __str__(self) -> str:
        if not self.defining_forms:
            return f"P^{self.ambient_dim}"
        return "V(" + ", ".join(str(f) for f in self.defining_forms) + ")"
