"""Exact sparse Laurent polynomial arithmetic.

Polynomials live in Z[x_1^{±1}, ..., x_m^{±1}] for a fixed ambient variable
count m.  Terms are stored sparsely as a map from integer exponent vectors
(tuples of length m) to nonzero arbitrary-precision integer coefficients; the
zero polynomial has an empty term map.  Everything here is exact integer
arithmetic; floating point is never touched.

Instances are treated as immutable values: no public operation mutates an
existing polynomial, and equality/hashing go through a canonical sorted term
key, so polynomials can live in sets and dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence

Exponent = tuple  # tuple[int, ...], one entry per ambient variable


class DimensionMismatchError(ValueError):
    """Operands live in ambient rings with different variable counts."""


class InexactDivisionError(ArithmeticError):
    """Division left a nonzero remainder.

    The remainder is carried as a witness.  When this fires while mutating a
    seed it means a supposed exchange relation did not divide exactly, which
    is a fatal inconsistency; callers must not swallow it.
    """

    def __init__(self, message: str, remainder: "LaurentPoly") -> None:
        super().__init__(message)
        self.remainder = remainder


class LaurentPoly:
    """A sparse Laurent polynomial with exact integer coefficients."""

    __slots__ = ("num_vars", "terms", "_key")

    def __init__(self, num_vars: int, terms: Optional[Mapping[Exponent, int]] = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clean: dict = {}
        if terms:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in pairs:
                exp = tuple(exp)
                if len(exp) != num_vars:
                    raise DimensionMismatchError(
                        f"exponent {exp!r} has length {len(exp)}, expected {num_vars}"
                    )
                coeff = int(coeff)
                if coeff:
                    clean[exp] = clean.get(exp, 0) + coeff
                    if not clean[exp]:
                        del clean[exp]
        self.num_vars = num_vars
        self.terms = clean
        self._key = None

    # ---- constructors ----

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPoly":
        return cls(num_vars)

    @classmethod
    def const(cls, num_vars: int, value: int) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "LaurentPoly":
        """The single variable x_{index} (0-based index)."""
        if not 0 <= index < num_vars:
            raise IndexError(f"variable index {index} out of range for {num_vars} vars")
        exp = [0] * num_vars
        exp[index] = 1
        return cls(num_vars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, num_vars: int, exponents: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(num_vars, {tuple(exponents): coeff})

    # ---- canonical form / equality ----

    def key(self) -> tuple:
        """Canonical hashable form: (num_vars, sorted term items)."""
        if self._key is None:
            self._key = (self.num_vars, tuple(sorted(self.terms.items())))
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __bool__(self) -> bool:
        return bool(self.terms)

    # ---- ring operations ----

    def _check_dims(self, other: "LaurentPoly") -> None:
        if self.num_vars != other.num_vars:
            raise DimensionMismatchError(
                f"cannot combine polynomials in {self.num_vars} and {other.num_vars} variables"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_dims(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            acc = out.get(exp, 0) + coeff
            if acc:
                out[exp] = acc
            else:
                out.pop(exp, None)
        return LaurentPoly(self.num_vars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_dims(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                acc = out.get(exp, 0) + c1 * c2
                if acc:
                    out[exp] = acc
                else:
                    del out[exp]
        return LaurentPoly(self.num_vars, out)

    def scale(self, factor: int) -> "LaurentPoly":
        if not factor:
            return LaurentPoly.zero(self.num_vars)
        return LaurentPoly(self.num_vars, {e: c * factor for e, c in self.terms.items()})

    def shift(self, offsets: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial x^offsets (exact, always invertible)."""
        if len(offsets) != self.num_vars:
            raise DimensionMismatchError("offset length must equal num_vars")
        off = tuple(offsets)
        return LaurentPoly(
            self.num_vars,
            {tuple(a + b for a, b in zip(e, off)): c for e, c in self.terms.items()},
        )

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self.terms) == 1:
                ((e, c),) = self.terms.items()
                if c in (1, -1):
                    coeff = c if exponent % 2 else 1
                    return LaurentPoly.monomial(
                        self.num_vars, tuple(x * exponent for x in e), coeff
                    )
            raise ValueError("negative powers only defined for unit monomials")
        result = LaurentPoly.const(self.num_vars, 1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            if k > 1:
                base = base * base
            k >>= 1
        return result

    def div_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division in the Laurent ring.

        Returns q with q * divisor == self, or raises InexactDivisionError
        carrying the nonzero remainder reached.  Uses long division by lex
        leading terms after shifting both operands into the polynomial range;
        lex on nonnegative exponents is a well-order, so this terminates.
        """
        self._check_dims(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        m = self.num_vars
        if not self:
            return LaurentPoly.zero(m)
        smin = self.min_degrees()
        dmin = divisor.min_degrees()
        rem = {tuple(a - b for a, b in zip(e, smin)): c for e, c in self.terms.items()}
        q_terms = {tuple(a - b for a, b in zip(e, dmin)): c for e, c in divisor.terms.items()}
        q_lead = max(q_terms)
        q_lc = q_terms[q_lead]
        quotient: dict = {}
        while rem:
            lead = max(rem)
            texp = tuple(a - b for a, b in zip(lead, q_lead))
            coeff, sub_rem = divmod(rem[lead], q_lc)
            if sub_rem or any(e < 0 for e in texp):
                witness = LaurentPoly(
                    m, {tuple(a + b for a, b in zip(e, smin)): c for e, c in rem.items()}
                )
                raise InexactDivisionError("division is not exact", witness)
            quotient[texp] = coeff
            for e, c in q_terms.items():
                ne = tuple(a + b for a, b in zip(texp, e))
                acc = rem.get(ne, 0) - coeff * c
                if acc:
                    rem[ne] = acc
                else:
                    rem.pop(ne, None)
        offset = tuple(a - b for a, b in zip(smin, dmin))
        return LaurentPoly(
            m, {tuple(a + b for a, b in zip(e, offset)): c for e, c in quotient.items()}
        )

    # ---- support queries ----

    def min_degrees(self, indices: Optional[Iterable[int]] = None) -> tuple:
        """Per-variable minimum exponent over the support; errors on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree data")
        idx = range(self.num_vars) if indices is None else list(indices)
        return tuple(min(e[j] for e in self.terms) for j in idx)

    def max_degrees(self, indices: Optional[Iterable[int]] = None) -> tuple:
        """Per-variable maximum exponent over the support; errors on zero."""
        if not self.terms:
            raise ValueError("the zero polynomial has no degree data")
        idx = range(self.num_vars) if indices is None else list(indices)
        return tuple(max(e[j] for e in self.terms) for j in idx)

    def substitute_ones(self, indices: Iterable[int]) -> "LaurentPoly":
        """Set the given variables to 1, merging coefficients.

        The result lives in the remaining variables (ambient dimension
        shrinks by len(indices)); their relative order is preserved.
        """
        drop = set(indices)
        for j in drop:
            if not 0 <= j < self.num_vars:
                raise IndexError(f"variable index {j} out of range")
        keep = [j for j in range(self.num_vars) if j not in drop]
        out: dict = {}
        for e, c in self.terms.items():
            ne = tuple(e[j] for j in keep)
            acc = out.get(ne, 0) + c
            if acc:
                out[ne] = acc
            else:
                del out[ne]
        return LaurentPoly(len(keep), out)

    def coefficients(self) -> Iterator[int]:
        return iter(self.terms.values())

    # ---- display ----

    def __repr__(self) -> str:
        return f"LaurentPoly({self.num_vars}, {dict(sorted(self.terms.items()))!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for j, p in enumerate(e):
                if p == 1:
                    factors.append(f"x{j + 1}")
                elif p:
                    factors.append(f"x{j + 1}^{p}")
            body = "*".join(factors)
            if not body:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


@dataclass(frozen=True)
class DenominatorForm:
    """A Laurent polynomial split as numerator * prod x_j^{-d_j}.

    The numerator has nonnegative exponents everywhere and, in each of the
    first n variables, some term with exponent 0 (so it is not divisible by
    any of them).  d_vector has one entry per exchangeable variable.
    """

    numerator: LaurentPoly
    d_vector: tuple


class LogConcavityResult(NamedTuple):
    ok: bool
    axis: Optional[int]  # 0-based axis of the first violated inequality
    point: Optional[tuple]  # lattice point where it fails

    def __bool__(self) -> bool:  # pragma: no cover - convenience only
        return self.ok


def normalize_denominator(p: LaurentPoly, n: int) -> DenominatorForm:
    """Factor p as numerator * prod_{j<n} x_j^{-d_j}.

    Only the first n variables participate; all remaining variables must
    already appear with nonnegative exponents.  Errors on the zero
    polynomial.
    """
    if not p:
        raise ValueError("cannot normalize the zero polynomial")
    if not 0 <= n <= p.num_vars:
        raise ValueError(f"n={n} out of range for {p.num_vars} variables")
    mins = p.min_degrees()
    for j in range(n, p.num_vars):
        if mins[j] < 0:
            raise ValueError(
                f"variable {j} is outside the exchangeable range but has exponent {mins[j]}"
            )
    d = tuple(-mins[j] for j in range(n))
    offsets = list(d) + [0] * (p.num_vars - n)
    return DenominatorForm(p.shift(offsets), d)


def is_log_concave(p: LaurentPoly) -> LogConcavityResult:
    """Axis-aligned log-concavity over the support's bounding box.

    Requires a nonzero polynomial with nonnegative coefficients.  For every
    axis j and every lattice point i of the bounding box, checks
    a_i^2 >= a_{i - e_j} * a_{i + e_j}, with absent coefficients read as 0.
    Returns the first violated (axis, point) in a deterministic scan order:
    axes ascending, then lines sorted by their remaining coordinates, then
    positions ascending.
    """
    if not p:
        raise ValueError("log-concavity is undefined for the zero polynomial")
    for e, c in p.terms.items():
        if c < 0:
            raise ValueError(f"negative coefficient {c} at {e}")
    m = p.num_vars
    for axis in range(m):
        lines: dict = {}
        for e, c in p.terms.items():
            rest = e[:axis] + e[axis + 1 :]
            lines.setdefault(rest, {})[e[axis]] = c
        for rest in sorted(lines):
            vals = lines[rest]
            lo, hi = min(vals), max(vals)
            for i in range(lo, hi + 1):
                mid = vals.get(i, 0)
                left = vals.get(i - 1, 0)
                right = vals.get(i + 1, 0)
                if mid * mid < left * right:
                    point = rest[:axis] + (i,) + rest[axis:]
                    return LogConcavityResult(False, axis, point)
    return LogConcavityResult(True, None, None)


def poly_to_json(p: LaurentPoly) -> dict:
    """Canonical JSON form: terms sorted lexicographically by exponent."""
    return {
        "num_vars": p.num_vars,
        "terms": [
            {"exp": list(e), "coeff": str(c)} for e, c in sorted(p.terms.items())
        ],
    }


def poly_from_json(obj: Mapping) -> LaurentPoly:
    terms = {tuple(t["exp"]): int(t["coeff"]) for t in obj["terms"]}
    return LaurentPoly(int(obj["num_vars"]), terms)
