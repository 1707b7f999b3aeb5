"""Exact sparse Laurent polynomial arithmetic.

Two small value types live here:

* :class:`LaurentPoly2` -- integer Laurent polynomials in the two variables
  ``z`` and ``a``, the value domain of the HOMFLY polynomial.
* :class:`LaurentPoly1` -- integer Laurent polynomials in a single variable
  ``s``, used for Alexander polynomials with ``s`` standing for ``x^(1/2)``.

Both are immutable values backed by sparse exponent->coefficient maps with no
stored zero coefficients.  Coefficients are plain Python integers, so the
arithmetic is exact at any size.

The canonical printed order of a two-variable polynomial is by ``a``-degree
descending, then ``z``-degree descending, e.g. ``a^2*z^-2 - 2*z^-2 + a^-2*z^-2``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping


class ZeroPolynomialError(ValueError):
    """Raised when degree extremes of the zero polynomial are requested."""


class SubstitutionError(ValueError):
    """Raised when the Alexander substitution does not divide out exactly.

    This happens exactly when the input was not the HOMFLY polynomial of an
    actual link, since residual ``z^-1`` content must cancel at ``a = 1``.
    """


def _format_terms(terms, var_names):
    if not terms:
        return "0"
    pieces = []
    for exps, coeff in terms:
        factors = []
        for name, k in zip(var_names, exps):
            if k == 0:
                continue
            factors.append(name if k == 1 else f"{name}^{k}")
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)


_TERM_SPLIT = re.compile(r"(?<!\^)(?=[+-])")  # do not split inside exponents
_FACTOR = re.compile(r"^([a-z])(?:\^(-?\d+))?$")


def _parse_terms(text, var_names):
    """Inverse of :func:`_format_terms`; returns a dict of exponent tuples."""
    text = text.strip()
    if text == "0" or not text:
        return {}
    acc: dict[tuple, int] = {}
    for chunk in _TERM_SPLIT.split(text.replace(" ", "")):
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        coeff = sign
        exps = [0] * len(var_names)
        for factor in chunk.split("*"):
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if m is None or m.group(1) not in var_names:
                raise ValueError(f"unparseable factor {factor!r}")
            idx = var_names.index(m.group(1))
            exps[idx] += 1 if m.group(2) is None else int(m.group(2))
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + coeff
    return {k: v for k, v in acc.items() if v != 0}


class LaurentPoly2:
    """An exact Laurent polynomial in ``z`` and ``a`` with integer coefficients.

    Internally a map from ``(z_degree, a_degree)`` pairs to nonzero integers.
    Instances are immutable and hashable; all operations return new values.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for (dz, da), c in terms.items():
                if c:
                    clean[(int(dz), int(da))] = int(c)
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, coeff: int, dz: int = 0, da: int = 0) -> "LaurentPoly2":
        return cls({(dz, da): coeff})

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly2":
        """Parse the canonical text form, e.g. ``a^-2*z^2 + 2*a^-2 - a^-4``."""
        raw = _parse_terms(text, ("z", "a"))
        return cls(raw)

    @classmethod
    def from_json_terms(cls, items: Iterable[Mapping[str, int]]) -> "LaurentPoly2":
        return cls({(t["z"], t["a"]): t["c"] for t in items})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = acc
        return out

    def __neg__(self) -> "LaurentPoly2":
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for (z1, a1), c1 in self._terms.items():
            for (z2, a2), c2 in other._terms.items():
                k = (z1 + z2, a1 + a2)
                v = acc.get(k, 0) + c1 * c2
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = acc
        return out

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale_monomial(self, dz: int = 0, da: int = 0, coeff: int = 1) -> "LaurentPoly2":
        """Multiply by ``coeff * z^dz * a^da`` in one pass."""
        if coeff == 0:
            return LaurentPoly2.zero()
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {(z + dz, a + da): c * coeff for (z, a), c in self._terms.items()}
        return out

    def mirrored(self) -> "LaurentPoly2":
        """Substitute ``z -> -z`` and ``a -> a^-1`` (mirror-image identity)."""
        out = LaurentPoly2.__new__(LaurentPoly2)
        out._terms = {
            (dz, -da): (-c if dz % 2 else c) for (dz, da), c in self._terms.items()
        }
        return out

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly2) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Terms in canonical order: a-degree descending, then z-degree descending."""
        return iter(sorted(self._terms.items(), key=lambda t: (-t[0][1], -t[0][0])))

    def coefficient(self, dz: int, da: int) -> int:
        return self._terms.get((dz, da), 0)

    def a_degrees(self) -> tuple[int, int, int]:
        """Return ``(E, e, span)``: max/min degree of ``a`` and their difference."""
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree extremes")
        degs = [da for (_, da) in self._terms]
        E, e = max(degs), min(degs)
        return E, e, E - e

    def z_degrees(self) -> tuple[int, int, int]:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no degree extremes")
        degs = [dz for (dz, _) in self._terms]
        m, lo = max(degs), min(degs)
        return m, lo, m - lo

    # -- conversions -------------------------------------------------------

    def to_text(self) -> str:
        return _format_terms(
            [((da, dz), c) for (dz, da), c in self.terms()], ("a", "z")
        )

    def to_json_terms(self) -> list[dict[str, int]]:
        return [{"a": da, "z": dz, "c": c} for (dz, da), c in self.terms()]

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.to_text()})"

    def substitute_alexander(self) -> "LaurentPoly1":
        """Evaluate at ``a = 1``, ``z = s - s^-1`` exactly.

        Negative powers of ``z`` are cleared first: the polynomial is
        multiplied through by ``z^m`` for the largest ``m`` with a ``z^-m``
        term, the substitution is expanded, and the result is divided exactly
        by ``(s - s^-1)^m``.  A nonzero remainder raises
        :class:`SubstitutionError`, which certifies the input was not a
        HOMFLY value.
        """
        if not self._terms:
            return LaurentPoly1.zero()
        m = max(0, -min(dz for (dz, _) in self._terms))
        base = LaurentPoly1({1: 1, -1: -1})  # s - s^-1
        powers = [LaurentPoly1.one()]
        top = max(dz for (dz, _) in self._terms) + m
        for _ in range(top):
            powers.append(powers[-1] * base)
        acc = LaurentPoly1.zero()
        for (dz, _), c in self._terms.items():
            acc = acc + powers[dz + m].scale(c)
        for _ in range(m):
            acc = acc.divide_exact(base)
        return acc


class LaurentPoly1:
    """An exact Laurent polynomial in one variable ``s`` over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[int(k)] = int(c)
        self._terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly1":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly1":
        return cls({0: 1})

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly1":
        raw = _parse_terms(text, ("s",))
        return cls({k[0]: v for k, v in raw.items()})

    def __add__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        out = LaurentPoly1.__new__(LaurentPoly1)
        out._terms = acc
        return out

    def __neg__(self) -> "LaurentPoly1":
        out = LaurentPoly1.__new__(LaurentPoly1)
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        acc: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                v = acc.get(k, 0) + c1 * c2
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        out = LaurentPoly1.__new__(LaurentPoly1)
        out._terms = acc
        return out

    def scale(self, coeff: int, shift: int = 0) -> "LaurentPoly1":
        if coeff == 0:
            return LaurentPoly1.zero()
        out = LaurentPoly1.__new__(LaurentPoly1)
        out._terms = {k + shift: c * coeff for k, c in self._terms.items()}
        return out

    def divide_exact(self, divisor: "LaurentPoly1") -> "LaurentPoly1":
        """Exact division; raises :class:`SubstitutionError` on a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly1.zero()
        # Shift both to ordinary polynomials and long-divide coefficient lists.
        s_lo = min(self._terms)
        s_hi = max(self._terms)
        d_lo = min(divisor._terms)
        d_hi = max(divisor._terms)
        num = [0] * (s_hi - s_lo + 1)
        for k, c in self._terms.items():
            num[k - s_lo] = c
        den = [0] * (d_hi - d_lo + 1)
        for k, c in divisor._terms.items():
            den[k - d_lo] = c
        if len(num) < len(den):
            raise SubstitutionError("inexact division: quotient would not be polynomial")
        lead = den[-1]
        quot = [0] * (len(num) - len(den) + 1)
        rem = list(num)
        for i in range(len(quot) - 1, -1, -1):
            head = rem[i + len(den) - 1]
            if head % lead:
                raise SubstitutionError("inexact division: leading coefficient mismatch")
            q = head // lead
            quot[i] = q
            if q:
                for j, d in enumerate(den):
                    rem[i + j] -= q * d
        if any(rem):
            raise SubstitutionError("inexact division: nonzero remainder")
        shift = s_lo - d_lo
        return LaurentPoly1({i + shift: c for i, c in enumerate(quot) if c})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly1) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def terms(self) -> Iterator[tuple[int, int]]:
        """Terms as ``(exponent, coefficient)`` with exponents descending."""
        return iter(sorted(self._terms.items(), key=lambda t: -t[0]))

    def leading(self) -> tuple[int, int]:
        """``(exponent, coefficient)`` of the highest power of ``s``."""
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        k = max(self._terms)
        return k, self._terms[k]

    def to_text(self) -> str:
        return _format_terms([((k,), c) for k, c in self.terms()], ("s",))

    def to_json_terms(self) -> list[dict[str, int]]:
        return [{"s": k, "c": c} for k, c in self.terms()]

    def __repr__(self) -> str:
        return f"LaurentPoly1({self.to_text()})"
