"""Named graph families: constructors and closed-form alliance polynomials.

The constructors and the formulas share no code, so comparing
``family_polynomial(spec)`` with an enumeration of ``family_graph(spec)`` is a
genuine cross-check.

Formulas use the convention that ``C(z, y) = 0`` whenever ``y`` is not an
integer; exponents such as ``n/2`` are carried as :class:`~fractions.Fraction`
so the even and odd cases collapse into one expression.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graph import Graph, build_graph
from .polynomial import AlliancePolynomial, ZERO

KINDS = (
    "empty",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "double_star",
    "complete_minus_matching",
)
_ARITY = {k: 1 for k in ("empty", "path", "cycle", "complete", "star")}
_ARITY.update(complete_bipartite=2, double_star=2, complete_minus_matching=2)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise ValueError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        if len(self.params) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}")
        p = self.params
        ok = {
            "empty": lambda: p[0] >= 1,
            "path": lambda: p[0] >= 2,
            "cycle": lambda: p[0] >= 3,
            "complete": lambda: p[0] >= 1,
            "complete_bipartite": lambda: p[0] >= 1 and p[1] >= 1,
            "star": lambda: p[0] >= 2,
            "double_star": lambda: p[0] >= 3 and p[1] >= 3,
            "complete_minus_matching": lambda: p[0] >= 3 and 0 <= p[1] <= p[0] // 2,
        }[self.kind]()
        if not ok:
            raise ValueError(f"parameters {p} out of range for {self.kind}")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """``"path:4"``, ``"complete_bipartite:3,5"``..."""
        kind, sep, rest = text.strip().partition(":")
        if not sep or not rest:
            raise ValueError(f"family spec {text!r} must look like 'kind:p1[,p2]'")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ValueError(f"non-integer parameter in {text!r}") from None
        return cls(kind.strip(), params)

    @property
    def order(self) -> int:
        """Number of vertices."""
        if self.kind in ("complete_bipartite", "double_star"):
            return self.params[0] + self.params[1]
        return self.params[0]

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


# -- constructors ------------------------------------------------------------


def family_graph(spec: FamilySpec) -> Graph:
    p = spec.params
    kind = spec.kind
    if kind == "empty":
        return build_graph(p[0], [])
    if kind == "path":
        return build_graph(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if kind == "cycle":
        return build_graph(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if kind == "complete":
        n = p[0]
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        a, b = p
        return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "star":
        # centre is vertex 0
        return build_graph(p[0], [(0, i) for i in range(1, p[0])])
    if kind == "double_star":
        r, t = p
        # centres 0 and r; leaves 1..r-1 and r+1..r+t-1
        edges = [(0, i) for i in range(1, r)] + [(r, r + j) for j in range(1, t)] + [(0, r)]
        return build_graph(r + t, edges)
    if kind == "complete_minus_matching":
        n, r = p
        removed = {(2 * i, 2 * i + 1) for i in range(r)}
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in removed])
    raise AssertionError(kind)


def matching_edges(n: int, r: int) -> list[tuple[int, int]]:
    """The ``r`` pairwise disjoint edges removed by ``complete_minus_matching``."""
    if not 0 <= r <= n // 2:
        raise ValueError(f"a matching in K_{n} has at most {n // 2} edges")
    return [(2 * i, 2 * i + 1) for i in range(r)]


# -- closed forms --------------------------------------------------------------


def binom(z: int, y: Fraction | int) -> int:
    """``C(z, y)``, zero when ``y`` is not an integer or out of range."""
    y = Fraction(y)
    if y.denominator != 1 or not 0 <= y <= z:
        return 0
    return comb(z, int(y))


def _term(coeff: int, power: Fraction | int) -> dict[int, int]:
    """Signed monomial as a sparse dict; a zero coefficient drops the term."""
    if coeff == 0:
        return {}
    power = Fraction(power)
    if power.denominator != 1:
        raise ValueError(f"nonzero coefficient on fractional power {power}")
    return {int(power): coeff}


def _add(*parts: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in parts:
        for k, c in part.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _neg(p: dict[int, int]) -> dict[int, int]:
    return {k: -c for k, c in p.items()}


def _mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: c for k, c in out.items() if c}


def _shift(p: dict[int, int], by: int) -> dict[int, int]:
    return {k + by: c for k, c in p.items()}


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def _path(n: int) -> dict[int, int]:
    return {i: n + 1 - i for i in range(2, n + 1)}


def _cycle(n: int) -> dict[int, int]:
    return _add({i: n for i in range(2, n)}, {n: 1})


def _complete(n: int) -> dict[int, int]:
    return {k: comb(n, k) for k in range(_ceil_half(n + 1), n + 1)}


def _complete_bipartite(n: int, m: int) -> dict[int, int]:
    left = _add(_complete(n), _term(binom(n, Fraction(n, 2)), Fraction(n, 2)))
    right = _add(_complete(m), _term(binom(m, Fraction(m, 2)), Fraction(m, 2)))
    return _mul(left, right)


def _star(n: int) -> dict[int, int]:
    base = _shift(_complete(n - 1), 1)
    if n % 2 == 0:
        return base
    return _add(base, _term(comb(n - 1, (n - 1) // 2), (n + 1) // 2))


def double_star_terms(r: int, t: int, *, printed: bool = False) -> dict[int, int]:
    """Signed coefficients of the double-star formula.

    With ``printed=True`` the subtracted terms use the exponent ``(r-1)/2`` as
    it is commonly printed; this gives negative coefficients for odd ``r`` or
    ``t``. The default uses ``(r+1)/2``, which is what the case analysis
    (centre in, other centre out) actually removes from ``a(S_r; x)``.
    """
    if r < 3 or t < 3:
        raise ValueError("double star needs r, t >= 3")

    def correction(k: int) -> dict[int, int]:
        power = Fraction(k - 1, 2) if printed else Fraction(k + 1, 2)
        return _neg(_term(binom(k - 1, Fraction(k - 1, 2)), power))

    def both_centres(k: int) -> dict[int, int]:
        return _add(_term(binom(k - 1, Fraction(k, 2) - 1), Fraction(k, 2)), _star(k))

    return _add(
        _star(r),
        _star(t),
        correction(r),
        correction(t),
        _mul(both_centres(r), both_centres(t)),
    )


def _as_poly(terms: dict[int, int]) -> AlliancePolynomial:
    if any(c < 0 for c in terms.values()):
        raise ValueError(f"formula produced a negative coefficient: {terms}")
    return AlliancePolynomial.from_mapping(terms) if terms else ZERO


def family_polynomial(spec: FamilySpec) -> AlliancePolynomial:
    """Closed-form ``a(G; x)`` for the family instance."""
    p = spec.params
    kind = spec.kind
    if kind == "empty":
        return AlliancePolynomial.monomial(p[0], 1)
    if kind == "path":
        return _as_poly(_path(p[0]))
    if kind == "cycle":
        return _as_poly(_cycle(p[0]))
    if kind == "complete":
        return _as_poly(_complete(p[0]))
    if kind == "complete_bipartite":
        return _as_poly(_complete_bipartite(*p))
    if kind == "star":
        return _as_poly(_star(p[0]))
    if kind == "double_star":
        return _as_poly(double_star_terms(*p))
    if kind == "complete_minus_matching":
        n, r = p
        if n % 2 or r > n // 2 - 1:
            raise ValueError(
                f"no closed form for K_{n} minus {r} independent edges (needs n even and r <= n/2 - 1)"
            )
        return _as_poly(_complete(n))
    raise AssertionError(kind)


def instances(kind: str, max_order: int) -> list[FamilySpec]:
    """Every valid instance of ``kind`` with at most ``max_order`` vertices, sorted by parameters."""
    out = []
    if kind in ("empty", "path", "cycle", "complete", "star"):
        for n in range(1, max_order + 1):
            try:
                out.append(FamilySpec(kind, (n,)))
            except ValueError:
                pass
    elif kind == "complete_bipartite":
        out = [FamilySpec(kind, (a, b)) for a in range(1, max_order) for b in range(1, max_order + 1 - a)]
    elif kind == "double_star":
        out = [FamilySpec(kind, (r, t)) for r in range(3, max_order) for t in range(3, max_order + 1 - r)]
    elif kind == "complete_minus_matching":
        out = [FamilySpec(kind, (n, r)) for n in range(3, max_order + 1) for r in range(n // 2 + 1)]
    else:
        raise ValueError(f"unknown family {kind!r}")
    return out


def has_closed_form(spec: FamilySpec) -> bool:
    if spec.kind != "complete_minus_matching":
        return True
    n, r = spec.params
    return n % 2 == 0 and r <= n // 2 - 1
