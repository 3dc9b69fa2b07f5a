"""Exact scalar arithmetic over Q(t_1, ..., t_m).

Scalars are rational functions in the presentation's parameters with rational
coefficients. They are kept fully reduced (gcd cancelled, denominator with
positive leading coefficient) so equality, zero tests and hashing are exact
and canonical. The heavy lifting is done by sympy's sparse polynomial fields;
this module pins the canonical text form and the arithmetic contract.
"""

from __future__ import annotations

from sympy import QQ
from sympy.polys.fields import field as _sympy_field

from .errors import DivisionByZero

_FIELD_CACHE: dict[tuple[str, ...], "ScalarField"] = {}


def scalar_field(params) -> "ScalarField":
    """The field Q(params) with the given parameter order. Cached, so equal
    parameter tuples share one backend field and their scalars compare."""
    params = tuple(params)
    got = _FIELD_CACHE.get(params)
    if got is None:
        got = ScalarField(params)
        _FIELD_CACHE[params] = got
    return got


class ScalarField:
    """Rational function field with a fixed, ordered parameter tuple."""

    def __init__(self, params: tuple[str, ...]):
        self.params = params
        made = _sympy_field(", ".join(params) if params else [], QQ)
        self._F = made[0]
        gens = made[1:]
        self._param_elems = {name: Scalar(self, g) for name, g in zip(params, gens)}
        self.zero = Scalar(self, self._F.zero)
        self.one = Scalar(self, self._F.one)

    def from_int(self, k: int) -> "Scalar":
        return Scalar(self, self._F.ground_new(QQ(k)))

    def param(self, name: str) -> "Scalar":
        """The parameter as a scalar; KeyError if the name is not declared."""
        return self._param_elems[name]

    def has_param(self, name: str) -> bool:
        return name in self._param_elems

    def __repr__(self):
        return f"ScalarField({', '.join(self.params) or 'Q'})"


def _rat_text(c) -> str:
    num, den = c.numerator, c.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def _poly_terms(poly):
    """Term list [(monom, coeff)] in descending lex order of the monomial,
    fixed here rather than inherited from the backend's iteration order."""
    return sorted(poly.terms(), key=lambda t: t[0], reverse=True)


def _poly_text(poly, names) -> str:
    terms = _poly_terms(poly)
    if not terms:
        return "0"
    pieces = []
    for monom, coeff in terms:
        neg = coeff < 0
        c = -coeff if neg else coeff
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        if not factors or c != 1:
            factors.insert(0, _rat_text(c))
        body = "*".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


def _is_plain_atom(poly, names) -> bool:
    """True when the poly prints as a single power-or-integer atom, safe to
    use as a denominator without parentheses."""
    terms = poly.terms()
    if len(terms) != 1:
        return False
    monom, coeff = terms[0]
    nvars = sum(1 for e in monom if e != 0)
    if coeff < 0:
        return False
    if nvars == 0:
        return coeff.denominator == 1
    return nvars == 1 and coeff == 1


class Scalar:
    """One element of a ScalarField. Immutable, hashable, canonically reduced."""

    __slots__ = ("field", "fe")

    def __init__(self, field: ScalarField, fe):
        self.field = field
        self.fe = fe

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError("scalars from different parameter fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Scalar(self.field, self.fe + o.fe)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Scalar(self.field, self.fe - o.fe)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Scalar(self.field, o.fe - self.fe)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else Scalar(self.field, self.fe * o.fe)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.fe:
            raise DivisionByZero(f"division of {self} by zero scalar")
        return Scalar(self.field, self.fe / o.fe)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Scalar(self.field, -self.fe)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0 and not self.fe:
            raise DivisionByZero("zero scalar raised to a negative power")
        return Scalar(self.field, self.fe ** k)

    def inv(self) -> "Scalar":
        if not self.fe:
            raise DivisionByZero("inverse of zero scalar")
        return Scalar(self.field, self.fe ** (-1))

    @property
    def is_zero(self) -> bool:
        return not self.fe

    def is_unit(self) -> bool:
        return bool(self.fe)

    def __bool__(self):
        return bool(self.fe)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.fe == other.fe
        if isinstance(other, int):
            return self.fe == other
        return NotImplemented

    def __hash__(self):
        return hash(self.fe)

    def leading_sign(self) -> int:
        """Sign of the numerator's first coefficient in canonical term order
        (+1 for zero). Used by element printers to pull a minus sign out."""
        terms = _poly_terms(self.fe.numer)
        if not terms:
            return 1
        return -1 if terms[0][1] < 0 else 1

    @property
    def is_sum(self) -> bool:
        """True when the printed form has a top-level + or -, i.e. it needs
        parentheses before being used as a multiplicative factor."""
        return self.fe.denom == 1 and len(self.fe.numer.terms()) > 1

    def as_int(self):
        """The scalar as a Python int when it is one, else None."""
        fe = self.fe
        if fe.denom != 1:
            return None
        terms = fe.numer.terms()
        if not terms:
            return 0
        if len(terms) != 1 or any(e != 0 for e in terms[0][0]):
            return None
        c = terms[0][1]
        return int(c.numerator) if c.denominator == 1 else None

    def __str__(self):
        names = self.field.params
        num, den = self.fe.numer, self.fe.denom
        num_text = _poly_text(num, names)
        if den == 1:
            return num_text
        if len(num.terms()) > 1:
            num_text = f"({num_text})"
        den_text = _poly_text(den, names)
        if not _is_plain_atom(den, names):
            den_text = f"({den_text})"
        return f"{num_text}/{den_text}"

    def __repr__(self):
        return f"Scalar({self})"
