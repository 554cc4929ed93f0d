"""
Exact sparse polynomials in L, D, R over the integers, and square matrices over them
"""

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .errors import CapExceededError

Exponent = Tuple[int, int, int]

VARIABLES = ("L", "D", "R")
DEFAULT_PERMANENT_CAP = 14


@dataclass(frozen=True)
class Poly:
    """Polynomial stored as (exponent, coefficient) pairs in ascending lexicographic order"""

    terms: Tuple[Tuple[Exponent, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[Exponent, int]) -> "Poly":
        return cls(tuple(sorted((e, c) for e, c in mapping.items() if c != 0)))

    @classmethod
    def constant(cls, value: int) -> "Poly":
        return cls.from_mapping({(0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> "Poly":
        exponent = tuple(int(v == name) for v in VARIABLES)
        if sum(exponent) != 1:
            raise ValueError(f"Unknown variable {name}")
        return cls((((exponent[0], exponent[1], exponent[2]), 1),))

    @classmethod
    def monomial(cls, exponent: Exponent, coefficient: int = 1) -> "Poly":
        return cls.from_mapping({exponent: coefficient})

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self.terms)

    def coefficient(self, exponent: Exponent) -> int:
        return self.as_dict().get(tuple(exponent), 0)

    def monomials(self) -> List[Exponent]:
        return [e for e, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        if isinstance(other, int):
            other = Poly.constant(other)
        result = self.as_dict()
        for e, c in other.terms:
            result[e] = result.get(e, 0) + c
        return Poly.from_mapping(result)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            return Poly.from_mapping({e: c * other for e, c in self.terms})
        result: Dict[Exponent, int] = {}
        for (e1, c1) in self.terms:
            for (e2, c2) in other.terms:
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                result[e] = result.get(e, 0) + c1 * c2
        return Poly.from_mapping(result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Poly":
        result = Poly.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def exact_div(self, divisor: int) -> "Poly":
        """Divide every coefficient by an integer, refusing remainders"""
        for e, c in self.terms:
            if c % divisor:
                raise ArithmeticError(f"Coefficient {c} of {e} is not divisible by {divisor}")
        return Poly(tuple((e, c // divisor) for e, c in self.terms))

    def substitute(self, **values: int) -> "Poly":
        """Evaluate some of the variables at integers"""
        result: Dict[Exponent, int] = {}
        for e, c in self.terms:
            exponent = list(e)
            for k, name in enumerate(VARIABLES):
                if name in values:
                    c *= values[name] ** exponent[k]
                    exponent[k] = 0
            key = (exponent[0], exponent[1], exponent[2])
            result[key] = result.get(key, 0) + c
        return Poly.from_mapping(result)

    def total_degrees(self) -> List[int]:
        return sorted({sum(e) for e in self.monomials()})

    def to_json(self) -> List[dict]:
        return [{"l": e[0], "d": e[1], "r": e[2], "coeff": c} for e, c in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Poly":
        mapping: Dict[Exponent, int] = {}
        for term in data:
            e = (int(term["l"]), int(term["d"]), int(term["r"]))
            mapping[e] = mapping.get(e, 0) + int(term["coeff"])
        return cls.from_mapping(mapping)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, (e, c) in enumerate(self.terms):
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(VARIABLES, e)
                if power
            ]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude)] + factors)
            if k == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(pieces)


ZERO = Poly()
ONE = Poly.constant(1)
L = Poly.variable("L")
D = Poly.variable("D")
R = Poly.variable("R")


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def negate(p: Poly) -> Poly:
    return -p


def scale(p: Poly, k: int) -> Poly:
    return p * k


def eval_ones(p: Poly) -> int:
    return sum(c for _, c in p.terms)


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix with Poly entries"""

    entries: Tuple[Tuple[Poly, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("PolyMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def order(self) -> int:
        return len(self.entries)

    def map(self, fn: Callable[[Poly], Poly]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(fn(p) for p in row) for row in self.entries))

    def determinant(self) -> Poly:
        return _expand(self, signed=True)

    def permanent(self, cap: int = DEFAULT_PERMANENT_CAP) -> Poly:
        if self.order > cap:
            raise CapExceededError("permanent", self.order, cap)
        return _expand(self, signed=False)

    def to_json(self) -> List[List[List[dict]]]:
        return [[p.to_json() for p in row] for row in self.entries]


def _expand(matrix: PolyMatrix, signed: bool) -> Poly:
    """Row-by-row Laplace expansion memoized on the set of used columns"""
    n = matrix.order
    if n == 0:
        return ONE
    rows = [[(j, p) for j, p in enumerate(row) if p] for row in matrix.entries]

    # Columns no row at or after k can use must already be taken before row k
    last_row = [-1] * n
    for k, row in enumerate(rows):
        for j, _ in row:
            last_row[j] = k
    if min(last_row) < 0:
        return ZERO
    closed = [0] * (n + 1)
    for k in range(n + 1):
        closed[k] = sum(1 << j for j in range(n) if last_row[j] < k)

    memo: Dict[int, Poly] = {}

    def minor(k: int, used: int) -> Poly:
        if k == n:
            return ONE
        if closed[k] & ~used:
            return ZERO
        if used in memo:
            return memo[used]
        total: Dict[Exponent, int] = {}
        for j, entry in rows[k]:
            bit = 1 << j
            if used & bit:
                continue
            sub = minor(k + 1, used | bit)
            if not sub:
                continue
            negative = signed and bin(~used & (bit - 1)).count("1") % 2 == 1
            for e, c in (entry * sub).terms:
                total[e] = total.get(e, 0) + (-c if negative else c)
        result = Poly.from_mapping(total)
        memo[used] = result
        return result

    return minor(0, 0)


def determinant(m: PolyMatrix) -> Poly:
    return m.determinant()


def permanent(m: PolyMatrix, cap: int = DEFAULT_PERMANENT_CAP) -> Poly:
    return m.permanent(cap)
