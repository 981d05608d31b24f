"""Symbolic addresses: eventually periodic letter sequences and where they land.

A sequence "PREFIX|CYCLE" over {A, B, C, M} names a nested chain of
subdivision cells inside a reference Euclidean triangle; the chain
shrinks to a single point whose barycentric coordinates are exact
rationals.  Exact rational equality of those points is the ground truth
for two sequences being addresses of the same point; the six-tail-form
pattern matcher is validated against it, never the other way around.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

ALPHABET = "ABCM"

# Barycentric affine maps of the four cells, in vector form x -> s*x + t.
# Corner cells: x -> (x + e_L)/2; medial cell: x -> (1 - x)/2.
_VERTEX = {
    "A": (Fraction(1), Fraction(0), Fraction(0)),
    "B": (Fraction(0), Fraction(1), Fraction(0)),
    "C": (Fraction(0), Fraction(0), Fraction(1)),
}

# Diameter of the reference 2-simplex in the ambient Euclidean metric.
REFERENCE_DIAMETER = math.sqrt(2.0)


class Bary(tuple):
    """Exact barycentric coordinates (u, v, w), u + v + w = 1."""

    def __new__(cls, u, v, w):
        u, v, w = Fraction(u), Fraction(v), Fraction(w)
        if u + v + w != 1:
            raise ValueError("barycentric coordinates must sum to 1")
        return super().__new__(cls, (u, v, w))

    @property
    def u(self):
        return self[0]

    @property
    def v(self):
        return self[1]

    @property
    def w(self):
        return self[2]

    def as_floats(self) -> tuple[float, float, float]:
        return float(self[0]), float(self[1]), float(self[2])

    def fraction_strings(self) -> tuple[str, str, str]:
        return tuple(f"{x.numerator}/{x.denominator}" for x in self)


def letter_map(letter: str):
    """The exact affine self-map of the reference triangle for one letter."""
    if letter == "M":
        def f(p: Bary) -> Bary:
            return Bary((1 - p[0]) / 2, (1 - p[1]) / 2, (1 - p[2]) / 2)
        return f
    if letter not in _VERTEX:
        raise ValueError(f"unknown letter {letter!r}")
    e = _VERTEX[letter]

    def f(p: Bary) -> Bary:
        return Bary((p[0] + e[0]) / 2, (p[1] + e[1]) / 2, (p[2] + e[2]) / 2)
    return f


def _primitive_cycle(cycle: str) -> str:
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle == cycle[:d] * (n // d):
            return cycle[:d]
    return cycle


@dataclass(frozen=True)
class SymbolSequence:
    """Eventually periodic infinite word: finite prefix, repeating cycle.

    Canonical form has a primitive cycle and no trailing prefix letter
    equal to the cycle's last letter (such letters rotate into the cycle).
    """

    prefix: str
    cycle: str

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        for ch in self.prefix + self.cycle:
            if ch not in ALPHABET:
                raise ValueError(f"bad letter {ch!r}; alphabet is {ALPHABET}")

    @classmethod
    def parse(cls, text: str) -> "SymbolSequence":
        """Parse "PREFIX|CYCLE" and canonicalize."""
        if text.count("|") != 1:
            raise ValueError(f"sequence text {text!r} must contain exactly one '|'")
        prefix, cycle = text.split("|")
        return cls(prefix, cycle).canonical()

    def canonical(self) -> "SymbolSequence":
        cycle = _primitive_cycle(self.cycle)
        prefix = self.prefix
        while prefix and prefix[-1] == cycle[-1]:
            prefix = prefix[:-1]
            cycle = cycle[-1] + cycle[:-1]
        if prefix == self.prefix and cycle == self.cycle:
            return self
        return SymbolSequence(prefix, cycle)

    def text(self) -> str:
        return f"{self.prefix}|{self.cycle}"

    def __getitem__(self, n: int) -> str:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def __iter__(self):
        yield from self.prefix
        while True:
            yield from self.cycle

    def constant_from(self, k: int, letter: str) -> bool:
        """True if every position >= k holds `letter` (exact check)."""
        if any(ch != letter for ch in self.cycle):
            return False
        return all(ch == letter for ch in self.prefix[k:])


def _as_seq(s) -> SymbolSequence:
    if isinstance(s, SymbolSequence):
        return s.canonical()
    return SymbolSequence.parse(s)


def classify(s) -> str:
    """"rational" if exactly one of A, B, C occurs in the cycle, else "irrational".

    Occurrences of M never count, so an all-M cycle is irrational.
    """
    s = _as_seq(s)
    distinct = set(s.cycle) & set("ABC")
    return "rational" if len(distinct) == 1 else "irrational"


def address_approx(s, depth: int) -> tuple[tuple[float, float, float], float]:
    """Centroid pushed through the first `depth` maps, with an error bound.

    The maps halve distances, so the point is within 2^-depth times the
    reference diameter of the true address.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    s = _as_seq(s)
    p = Bary(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    letters = [s[i] for i in range(depth)]
    for letter in reversed(letters):
        p = letter_map(letter)(p)
    return p.as_floats(), REFERENCE_DIAMETER * 2.0 ** (-depth)


def address_exact(s) -> Bary:
    """Exact rational address of an eventually periodic sequence.

    The cycle's composed affine map contracts by 2^-|cycle|, so it has a
    unique rational fixed point; the prefix maps then carry it to the
    address.
    """
    s = _as_seq(s)
    # compose the cycle: F = f_c1 o f_c2 o ... o f_ck, tracked as x -> s*x + t
    scale = Fraction(1)
    shift = (Fraction(0), Fraction(0), Fraction(0))
    for letter in s.cycle:
        # extend on the right: F' = F o f_letter
        if letter == "M":
            # f_M: x -> -x/2 + 1/2
            scale_l, shift_l = Fraction(-1, 2), (Fraction(1, 2),) * 3
        else:
            e = _VERTEX[letter]
            scale_l, shift_l = Fraction(1, 2), tuple(x / 2 for x in e)
        shift = tuple(scale * b + t for b, t in zip(shift_l, shift))
        scale = scale * scale_l
    q = Bary(*(t / (1 - scale) for t in shift))
    for letter in reversed(s.prefix):
        q = letter_map(letter)(q)
    return q


def equivalent(s, t) -> bool:
    """True when the two sequences address the same point (exact arithmetic)."""
    return address_exact(s) == address_exact(t)


@dataclass(frozen=True)
class Prop31Match:
    """Witness that two sequences fit a pair of the six known tail forms."""

    prefix: str            # shared leading block tau
    sigma: tuple[str, str, str]   # images of (A, B, C)
    zeta: str              # word over indeterminates "x", "y"
    m: int
    form_s: int            # 1..6
    form_t: int

    def to_json_dict(self) -> dict:
        return {
            "prefix": self.prefix,
            "sigma": {"A": self.sigma[0], "B": self.sigma[1], "C": self.sigma[2]},
            "zeta": self.zeta,
            "m": self.m,
            "forms": [self.form_s, self.form_t],
        }


def _parse_tail_forms(seq: SymbolSequence, n: int, sigma: dict, m_cap: int):
    """All (form, m, zeta) readings of seq from position n under sigma.

    Forms 1-3 open with sigma(A) and spell zeta with x -> sigma(B),
    y -> sigma(C); forms 4-6 open with M and use the swapped spelling.
    Every form ends with a switch letter and a constant tail:
    forms 1/4 switch M into sigma(A)^inf, forms 2/5 switch sigma(B) into
    sigma(C)^inf, forms 3/6 switch sigma(C) into sigma(B)^inf.
    """
    sA, sB, sC = sigma["A"], sigma["B"], sigma["C"]
    first = seq[n]
    groups = []
    if first == sA:
        groups.append(((1, 2, 3), {sB: "x", sC: "y"}))
    if first == "M":
        groups.append(((4, 5, 6), {sC: "x", sB: "y"}))
    out = []
    for forms, spell in groups:
        zeta = ""
        for m in range(0, m_cap + 1):
            switch = seq[n + 1 + m]
            tail_at = n + 2 + m
            if switch == "M" and seq.constant_from(tail_at, sA):
                out.append((forms[0], m, zeta))
            if switch == sB and seq.constant_from(tail_at, sC):
                out.append((forms[1], m, zeta))
            if switch == sC and seq.constant_from(tail_at, sB):
                out.append((forms[2], m, zeta))
            nxt = seq[n + 1 + m]
            if nxt not in spell:
                break
            zeta += spell[nxt]
    return out


def match_prop31(s, t, horizon: int = 64):
    """Search for a six-form witness that s and t address the same point.

    Returns a Prop31Match or None.  Only soundness is promised: a witness
    implies exact address equality, but equal addresses may have no
    witness (edge-midpoint and midline-interior pairs fall outside the
    six forms).
    """
    s, t = _as_seq(s), _as_seq(t)
    if s == t:
        return None
    # all six forms end in a constant tail, so both cycles must be one letter
    if len(s.cycle) != 1 or len(t.cycle) != 1:
        return None
    # common prefix of the infinite words is finite and short for canonical forms
    max_common = min(horizon, max(len(s.prefix), len(t.prefix)))
    common = 0
    while common <= max_common and s[common] == t[common]:
        common += 1
    m_cap_base = max(len(s.prefix), len(t.prefix)) + 2
    for n in range(0, min(common, horizon) + 1):
        m_cap = min(horizon, m_cap_base)
        for pa, pb, pc in permutations("ABC"):
            sigma = {"A": pa, "B": pb, "C": pc}
            ps = _parse_tail_forms(s, n, sigma, m_cap)
            if not ps:
                continue
            pt = _parse_tail_forms(t, n, sigma, m_cap)
            for form_s, m_s, zeta_s in ps:
                for form_t, m_t, zeta_t in pt:
                    if form_s != form_t and m_s == m_t and zeta_s == zeta_t:
                        tau = "".join(s[i] for i in range(n))
                        return Prop31Match(tau, (pa, pb, pc),
                                           zeta_s, m_s, form_s, form_t)
    return None
