"""Exact sparse multivariate polynomial arithmetic over the integers.

Variables are indexed by nonnegative integers: x_0, x_1, x_2, ...  A monomial
is a sorted tuple of (variable, exponent) pairs with strictly positive
exponents, and a polynomial maps monomials to nonzero integer coefficients.
Coefficients are plain Python ints, so every computation is exact and an
identity holds iff the difference has no terms at all.

Ring endomorphisms substitute a polynomial image for each variable (variables
without an image are fixed).  They are the workhorse for all symmetry
arguments downstream: permutations of vertices, the doubling maps, the
class-sum maps, and orbit-representative substitutions are all instances.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence, Union

Monomial = tuple[tuple[int, int], ...]

ONE: Monomial = ()


class MissingVariableError(KeyError):
    """Evaluation point does not bind a variable present in the polynomial."""

    def __init__(self, index: int) -> None:
        super().__init__(index)
        self.index = index

    def __str__(self) -> str:
        return f"no value bound for variable x_{self.index}"


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def monomial_key(mono: Monomial) -> tuple[int, Monomial]:
    """Graded lexicographic key; fixes the canonical term order."""
    return (monomial_degree(mono), mono)


def monomial_text(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(f"x_{v}" if e == 1 else f"x_{v}^{e}" for v, e in mono)


def _dict_mul(a: dict[Monomial, int], b: dict[Monomial, int]) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = monomial_mul(ma, mb)
            out[m] = out.get(m, 0) + ca * cb
    return out


class SparsePoly:
    """Immutable-by-convention sparse polynomial with exact int coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None) -> None:
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coef in terms.items():
                if not isinstance(coef, int):
                    raise TypeError(f"coefficient for {monomial_text(mono)} is not an int: {coef!r}")
                if coef == 0:
                    continue
                for v, e in mono:
                    if v < 0 or e <= 0:
                        raise ValueError(f"bad monomial {mono!r}: indices must be >= 0, exponents > 0")
                clean[mono] = coef
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "SparsePoly":
        return cls({ONE: c})

    @classmethod
    def variable(cls, index: int) -> "SparsePoly":
        if index < 0:
            raise ValueError(f"variable index must be >= 0, got {index}")
        return cls({((index, 1),): 1})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Union["SparsePoly", int]) -> "SparsePoly":
        other = _coerce(other)
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, 0) + coef
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Union["SparsePoly", int]) -> "SparsePoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "SparsePoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["SparsePoly", int]) -> "SparsePoly":
        if isinstance(other, int):
            if other == 0:
                return SparsePoly()
            return SparsePoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return SparsePoly(_dict_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {exponent!r}")
        result = SparsePoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == SparsePoly.constant(other).terms
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {monomial_degree(m) for m in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def variables(self) -> set[int]:
        out: set[int] = set()
        for mono in self.terms:
            out.update(v for v, _ in mono)
        return out

    def monomials(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in the canonical (graded lexicographic) order."""
        for mono in sorted(self.terms, key=monomial_key):
            yield mono, self.terms[mono]

    def single_variable(self) -> int | None:
        """Index v if the polynomial is exactly x_v, else None."""
        if len(self.terms) != 1:
            return None
        (mono, coef), = self.terms.items()
        if coef == 1 and len(mono) == 1 and mono[0][1] == 1:
            return mono[0][0]
        return None

    # -- calculus and evaluation --------------------------------------------

    def derivative(self, index: int) -> "SparsePoly":
        out: dict[Monomial, int] = {}
        for mono, coef in self.terms.items():
            for pos, (v, e) in enumerate(mono):
                if v != index:
                    continue
                if e == 1:
                    new = mono[:pos] + mono[pos + 1:]
                else:
                    new = mono[:pos] + ((v, e - 1),) + mono[pos + 1:]
                out[new] = out.get(new, 0) + coef * e
                break
        return SparsePoly(out)

    def _lookup(self, values, index: int):
        if isinstance(values, Mapping):
            try:
                return values[index]
            except KeyError:
                raise MissingVariableError(index) from None
        try:
            return values[index]
        except IndexError:
            raise MissingVariableError(index) from None

    def evaluate(self, values: Union[Mapping[int, float], Sequence[float]]) -> float:
        """Float evaluation; `values` is a dense sequence or a mapping by index."""
        total = 0.0
        for mono, coef in self.terms.items():
            term = float(coef)
            for v, e in mono:
                term *= float(self._lookup(values, v)) ** e
            total += term
        return total

    def evaluate_exact(self, values: Union[Mapping[int, object], Sequence[object]]) -> Fraction:
        """Exact evaluation at rational points (ints, Fractions, or floats taken exactly)."""
        total = Fraction(0)
        for mono, coef in self.terms.items():
            term = Fraction(coef)
            for v, e in mono:
                term *= Fraction(self._lookup(values, v)) ** e
            total += term
        return total

    def substitute(self, endo: "Endomorphism") -> "SparsePoly":
        """Apply a ring endomorphism: replace each variable by its image."""
        acc: dict[Monomial, int] = {}
        images = endo.images
        for mono, coef in self.terms.items():
            # fast path: every variable in the term maps to a bare variable
            exps: dict[int, int] | None = {}
            for v, e in mono:
                img = images.get(v)
                if img is None:
                    target = v
                else:
                    target = img.single_variable()
                    if target is None:
                        exps = None
                        break
                exps[target] = exps.get(target, 0) + e
            if exps is not None:
                key = tuple(sorted(exps.items()))
                acc[key] = acc.get(key, 0) + coef
                continue
            prod: dict[Monomial, int] = {ONE: coef}
            for v, e in mono:
                img = images.get(v)
                factor = img.terms if img is not None else {((v, 1),): 1}
                for _ in range(e):
                    prod = _dict_mul(prod, factor)
            for m, c in prod.items():
                acc[m] = acc.get(m, 0) + c
        return SparsePoly(acc)

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms in graded-lex order, `coef*x_i^e*x_j`."""
        if not self.terms:
            return "0"
        parts = []
        for mono, coef in self.monomials():
            if mono:
                parts.append(f"{coef}*{monomial_text(mono)}")
            else:
                parts.append(str(coef))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        text = self.to_text()
        if len(text) > 120:
            text = text[:117] + "..."
        return f"SparsePoly({text})"

    def __len__(self) -> int:
        return len(self.terms)


def _coerce(value: Union[SparsePoly, int]) -> SparsePoly:
    if isinstance(value, SparsePoly):
        return value
    if isinstance(value, int):
        return SparsePoly.constant(value)
    raise TypeError(f"cannot coerce {value!r} to SparsePoly")


class Endomorphism:
    """Ring endomorphism determined by variable images; unmapped variables are fixed.

    Composition is sequential application: (f.compose(g))(p) substitutes g
    first, then f, matching (f o g) on variables.
    """

    __slots__ = ("images", "name")

    def __init__(self, images: Mapping[int, SparsePoly], name: str = "") -> None:
        self.images: dict[int, SparsePoly] = {}
        for v, img in images.items():
            if v < 0:
                raise ValueError(f"variable index must be >= 0, got {v}")
            if not isinstance(img, SparsePoly):
                raise TypeError(f"image of x_{v} is not a SparsePoly: {img!r}")
            if img.single_variable() == v:
                continue  # identity images are implicit
            self.images[v] = img
        self.name = name

    @classmethod
    def identity(cls) -> "Endomorphism":
        return cls({}, name="id")

    def image(self, index: int) -> SparsePoly:
        img = self.images.get(index)
        return img if img is not None else SparsePoly.variable(index)

    def __call__(self, poly: SparsePoly) -> SparsePoly:
        return poly.substitute(self)

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """Return self o other (apply `other` first)."""
        images: dict[int, SparsePoly] = {}
        for v, img in other.images.items():
            images[v] = img.substitute(self)
        for v, img in self.images.items():
            images.setdefault(v, img)
        label = f"({self.name} o {other.name})" if self.name or other.name else ""
        return Endomorphism(images, name=label)

    def __repr__(self) -> str:
        label = self.name or f"{len(self.images)} images"
        return f"Endomorphism<{label}>"


def x(index: int) -> SparsePoly:
    """Shorthand constructor for the variable x_index."""
    return SparsePoly.variable(index)
