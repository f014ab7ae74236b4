"""Densities and the known bounds on phi(h, n) and psi(h, n), in exact arithmetic.

Bounds that only hold for large h (or large n) are flagged ``asymptotic``;
bounds containing an unspecified o(1) term or constant are reported as
text only and carry no numeric value.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb, factorial
from typing import Sequence

from .linalg import Lattice
from .shapes import PointSet

# lattice packing density of the n-simplex (exact for n <= 3)
PACKING_DENSITY = {1: Fraction(1), 2: Fraction(2, 3), 3: Fraction(18, 49)}
# lattice covering density of the n-simplex (exact for n <= 2)
COVERING_DENSITY = {1: Fraction(1), 2: Fraction(3, 2)}


def density(points: PointSet | Sequence, lattice: Lattice) -> Fraction:
    return Fraction(len(points), lattice.det)


def discrete_density_ratio(kind: str, h: int, n: int, extremal_value: int) -> Fraction:
    """C(h+n, n) / value: the packing (or covering) density of the discrete simplex."""
    if kind not in ("packing", "covering"):
        raise ValueError(f"kind must be 'packing' or 'covering', got {kind!r}")
    return Fraction(comb(h + n, n), extremal_value)


def phi_exact(h: int, n: int) -> int | None:
    """Closed forms known for n <= 2, otherwise None."""
    if n == 1:
        return h + 1
    if n == 2:
        if h % 2 == 0:
            r = h // 2
            return 3 * r * r + 3 * r + 1
        r = (h + 1) // 2
        return 3 * r * r
    return None


def _kt_coefficient(n: int) -> Fraction:
    return Fraction(factorial(2 * n), 2**n * factorial(n) ** 3)


@dataclass
class Bound:
    key: str
    quantity: str  # what is bounded, e.g. "phi(h,n)" or "lim phi(h,n)/h^n"
    relation: str  # ">", ">=", "<=", "<", "=", "in"
    value: Fraction | tuple | None
    formula: str
    applicable: bool = True
    asymptotic: bool = False

    @property
    def integer(self) -> int | None:
        """Ceiling of a scalar bound, for comparison with group orders."""
        if (isinstance(self.value, Fraction) and not self.asymptotic
                and self.quantity.startswith(("phi(", "psi("))):
            return ceil(self.value)
        return None

    def to_json(self) -> dict:
        v = self.value
        if isinstance(v, tuple):
            v = [None if x is None else str(x) for x in v]
        elif v is not None:
            v = str(v)
        return {"key": self.key, "quantity": self.quantity, "relation": self.relation,
                "value": v, "integer": self.integer, "formula": self.formula,
                "applicable": self.applicable, "asymptotic": self.asymptotic}


@dataclass
class BoundsTable:
    h: int
    n: int
    entries: list[Bound] = field(default_factory=list)

    def __getitem__(self, key: str) -> Bound:
        for b in self.entries:
            if b.key == key:
                return b
        raise KeyError(key)

    def __contains__(self, key):
        return any(b.key == key for b in self.entries)

    def add(self, *args, **kw):
        self.entries.append(Bound(*args, **kw))

    def phi_interval(self) -> tuple[int, int]:
        """Best finite integer interval for phi(h, n) among applicable, non-asymptotic bounds."""
        lo, hi = 1, None
        for b in self.entries:
            if b.quantity != "phi(h,n)" or not b.applicable or b.asymptotic:
                continue
            if not isinstance(b.value, Fraction):
                continue
            if b.relation == ">":
                lo = max(lo, int(b.value // 1) + 1)
            elif b.relation == ">=":
                lo = max(lo, ceil(b.value))
            elif b.relation == "<=":
                hi = int(b.value // 1) if hi is None else min(hi, int(b.value // 1))
        return lo, hi

    def consistent(self) -> bool:
        lo, hi = self.phi_interval()
        return hi is None or lo <= hi

    def to_json(self) -> dict:
        return {"h": self.h, "n": self.n, "entries": [b.to_json() for b in self.entries]}

    def format_table(self) -> str:
        lines = [f"bounds for h={self.h}, n={self.n}"]
        for b in self.entries:
            v = b.to_json()["value"]
            if isinstance(v, list):
                v = "[" + ", ".join("?" if x is None else x for x in v) + "]"
            flags = []
            if b.asymptotic:
                flags.append("asymptotic")
            if not b.applicable:
                flags.append("not applicable")
            integer = "" if b.integer is None else f" (integer {b.integer})"
            lines.append(f"  {b.key:<24} {b.quantity} {b.relation} {v if v is not None else '-'}"
                         f"{integer}  [{b.formula}]" + (f"  {', '.join(flags)}" if flags else ""))
        return "\n".join(lines)


def bounds_report(h: int, n: int) -> BoundsTable:
    if h < 1 or n < 1:
        raise ValueError("h and n must be >= 1")
    t = BoundsTable(h, n)
    kt = _kt_coefficient(n)
    nf = factorial(n)
    c2n = factorial(2 * n)
    hc, hf = -(-h // 2), h // 2

    # ---- phi(h, n) at this h
    t.add("pigeonhole", "phi(h,n)", ">=", Fraction(comb(h + n, n)), "C(h+n,n)")
    t.add("classical_lower", "phi(h,n)", ">", kt * (h - 2 * n + 2) ** n,
          "(2n)!/(2^n (n!)^3) (h-2n+2)^n, for 0 <= 2n-2 <= h",
          applicable=0 <= 2 * n - 2 <= h)
    t.add("classical_upper", "phi(h,n)", "<=", Fraction((h + 1) ** n), "(h+1)^n")
    t.add("hfixed_lower", "phi(h,n)", ">",
          Fraction(max(n + 1 - hc, 0) ** h, factorial(hc) * factorial(hf)),
          "(n+1-ceil(h/2))^h / (ceil(h/2)! floor(h/2)!), for 1 <= h/2 <= n+1",
          applicable=2 <= h <= 2 * n + 2)
    t.add("simplex_lower", "phi(h,n)", ">", kt * h**n,
          "(2n)!/(2^n (n!)^3) h^n, every h >= 1")
    if n in PACKING_DENSITY:
        t.add("packing_lower", "phi(h,n)", ">=", Fraction(h**n) / (nf * PACKING_DENSITY[n]),
              "h^n / (n! delta_L(simplex)), every h >= 1")
        t.add("packing_upper", "phi(h,n)/(1+eps)", "<", Fraction(h**n) / (nf * PACKING_DENSITY[n]),
              "(1+eps) h^n / (n! delta_L(simplex)), h >= h_0(n,eps)", asymptotic=True)
    t.add("simplex_upper", "phi(h,n)/(1+eps)", "<", Fraction(c2n, 2 * nf**3) * h**n,
          "(1+eps) (2n)!/(2 (n!)^3) h^n, h >= h_0(n,eps)", asymptotic=True)
    exact = phi_exact(h, n)
    if exact is not None:
        t.add("exact", "phi(h,n)", "=", Fraction(exact),
              "h+1" if n == 1 else ("3r^2+3r+1, h=2r" if h % 2 == 0 else "3r^2, h=2r-1"))

    # ---- limits in h
    t.add("limit_classical", "lim phi(h,n)/h^n", "in", (kt, Fraction(1)),
          "[(2n)!/(2^n (n!)^3), 1]", asymptotic=True)
    if n in PACKING_DENSITY:
        t.add("limit", "lim phi(h,n)/h^n", "=", 1 / (nf * PACKING_DENSITY[n]),
              "1 / (n! delta_L(simplex))", asymptotic=True)
    else:
        t.add("limit", "lim phi(h,n)/h^n", "in", (kt, Fraction(c2n, 2 * nf**3)),
              "((2n)!/(2^n (n!)^3), (2n)!/(2 (n!)^3)]", asymptotic=True)
    t.add("limit_large_n", "lim phi(h,n)/h^n", "<=", None,
          "(2n)! / ((log 2 + o(1)) n (n!)^3) as n -> infinity; o(1) unspecified",
          asymptotic=True)
    t.add("liminf_hfixed", "liminf_n phi(h,n)/n^h", "in",
          (Fraction(1, factorial(hc) * factorial(hf)), Fraction(1)),
          "[1/(ceil(h/2)! floor(h/2)!), 1]", asymptotic=True)

    # ---- simplex densities
    if n in PACKING_DENSITY:
        t.add("delta_simplex", "delta_L(simplex)", "=", PACKING_DENSITY[n], "known exactly")
    else:
        t.add("delta_simplex", "delta_L(simplex)", "in",
              (Fraction(2 * nf**2, c2n), Fraction(2**n * nf**2, c2n)),
              "[2 (n!)^2/(2n)!, 2^n (n!)^2/(2n)!)")
    t.add("delta_simplex_large_n", "delta_L(simplex)", ">=", None,
          "(log 2 + o(1)) n (n!)^2 / (2n)! as n -> infinity; o(1) unspecified", asymptotic=True)
    if n in COVERING_DENSITY:
        t.add("theta_simplex", "theta_L(simplex)", "=", COVERING_DENSITY[n], "known exactly")
    else:
        t.add("theta_simplex", "theta_L(simplex)", "in",
              (1 + Fraction(1, 2 ** (3 * n + 7)), None),
              "[1 + 2^-(3n+7), n^(log2 log2 n + c)]; c unspecified")

    # ---- psi(h, n)
    t.add("psi_pigeonhole", "psi(h,n)", "<=", Fraction(comb(h + n, n)), "C(h+n,n)")
    theta = COVERING_DENSITY.get(n, 1 + Fraction(1, 2 ** (3 * n + 7)))
    t.add("psi_covering_upper", "psi(h,n)", "<=", Fraction((h + n) ** n) / (nf * theta),
          "(h+n)^n / (n! theta_L(simplex))" + ("" if n in COVERING_DENSITY
                                               else " with the lower bound on theta_L"))
    if n in COVERING_DENSITY:
        t.add("psi_limit", "lim psi(h,n)/h^n", "=", 1 / (nf * COVERING_DENSITY[n]),
              "1 / (n! theta_L(simplex))", asymptotic=True)
    return t
