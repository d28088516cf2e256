"""The curve x^q + x + p(y)^2 = 0 over F_{q^2} (q = 3^t) and its places.

A place is the point at infinity or an affine point (a, b) over an
extension of F_{q^2}, carrying the invariant beta = p(b)^2 = -(a^q + a),
its degree (length of the q^2-Frobenius orbit) and a classification:

    Infinity | BetaZero | BetaOne | RationalGeneral(i)
             | NonRationalGeneric(i, K) | NonRationalSpecial(i, K)

where i and K are the P-order and R-order of beta, and Special means
K <= m - 2 (m = q/3).  Rational places are exactly those with beta in
{0, 1, infinity} or beta^((q-1)/2) = -1.

Local expansions live above the degree-3 cover u^q + u = v^(q+1); the
lift of an affine place with beta != 0 is a pair (A, B) with b = B^3 - B
and A = -a - B^2, one of three choices differing by B -> B +- 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .f3linalg import LinearSolver
from .fields import FieldElement, FieldTower, make_tower, mult_order, trace_p
from .polyfamilies import p_order, r_order

INFINITY = "infinity"
BETA_ZERO = "beta_zero"
BETA_ONE = "beta_one"
RATIONAL_GENERAL = "rational_general"
NONRATIONAL_GENERIC = "nonrational_generic"
NONRATIONAL_SPECIAL = "nonrational_special"


@dataclass(frozen=True)
class PlaceClass:
    kind: str
    i: int | None = None
    K: int | None = None

    def __str__(self):
        if self.i is None:
            return self.kind
        if self.K is None:
            return f"{self.kind}(i={self.i})"
        return f"{self.kind}(i={self.i},K={self.K})"


@dataclass(frozen=True)
class Place:
    kind: str                      # "affine" or "infinity"
    a: FieldElement | None
    b: FieldElement | None
    beta: FieldElement | None      # None marks the pole of beta at infinity
    degree: int
    place_class: PlaceClass

    def is_infinity(self) -> bool:
        return self.kind == "infinity"

    def __repr__(self):
        if self.is_infinity():
            return "Place(infinity)"
        return (f"Place(a={list(self.a.coeffs)}, b={list(self.b.coeffs)}, "
                f"deg={self.degree}, {self.place_class})")


@dataclass(frozen=True)
class HermitianLift:
    """One of the three points (A, B) of the cover above an affine place."""
    place: Place
    A: FieldElement
    B: FieldElement
    pb: FieldElement   # B^q - B = p(b), the local parameter scale
    which: int         # 0, 1, 2: B = B0 + which

    @property
    def level(self):
        return self.B.level


class Curve:
    """Context object: q = 3^t, the tower, and all place-level operations."""

    def __init__(self, t: int, tower: FieldTower | None = None,
                 max_degree: int = 128):
        if t < 2:
            raise ValueError("t must be >= 2 (t = 1 gives an elliptic curve "
                             "with infinite automorphism group)")
        self.t = t
        self.q = 3 ** t
        self.m = self.q // 3
        self.genus = self.q * (self.q - 1) // 6
        self.tower = tower if tower is not None else make_tower(t, max_degree=max_degree)
        self.base = self.tower.level(2 * t)     # F_{q^2}
        self._beta_class_cache: dict[tuple[int, int], PlaceClass] = {}
        self._solver_cache: dict[tuple[str, int], LinearSolver] = {}
        self._infinity = Place("infinity", None, None, None, 1,
                               PlaceClass(INFINITY))

    # -- basic maps -----------------------------------------------------------

    def p_map(self, x: FieldElement) -> FieldElement:
        """p(x) = x + x^3 + ... + x^(q/3)."""
        return trace_p(x, self.t)

    def frob_q(self, x: FieldElement) -> FieldElement:
        return x.pow3(self.t)

    def frob_q2(self, x: FieldElement) -> FieldElement:
        return x.pow3(2 * self.t)

    def on_curve(self, a: FieldElement, b: FieldElement) -> bool:
        pb = self.p_map(b)
        return (self.frob_q(a) + a + pb * pb).is_zero()

    def beta_of(self, a: FieldElement, b: FieldElement) -> FieldElement:
        pb = self.p_map(b)
        beta = pb * pb
        assert beta == -(self.frob_q(a) + a)
        return beta

    # -- linear solvers over the tower ----------------------------------------

    def _linear_solver(self, name: str, n: int) -> LinearSolver:
        """Solver for one of the additive maps, on the degree-n level."""
        key = (name, n)
        if key in self._solver_cache:
            return self._solver_cache[key]
        lvl = self.tower.level(n)
        cols = []
        for j in range(n):
            bj = lvl.basis_element(j)
            if name == "artin_schreier":      # a -> a^q + a
                img = self.frob_q(bj) + bj
            elif name == "trace_p":           # b -> p(b)
                img = self.p_map(bj)
            elif name == "cube_minus":        # B -> B^3 - B
                img = bj.cube() - bj
            else:
                raise ValueError(name)
            cols.append(list(img.coeffs))
        rows = [[cols[j][i] for j in range(n)] for i in range(n)]
        solver = LinearSolver(rows)
        self._solver_cache[key] = solver
        return solver

    def solve_artin_schreier(self, c: FieldElement) -> FieldElement | None:
        """One a with a^q + a = c at c's level, or None."""
        sol = self._linear_solver("artin_schreier", c.level.n).solve(list(c.coeffs))
        return c.level.element(sol) if sol is not None else None

    def solve_trace_p(self, c: FieldElement) -> FieldElement | None:
        """One b with p(b) = c at c's level, or None."""
        sol = self._linear_solver("trace_p", c.level.n).solve(list(c.coeffs))
        return c.level.element(sol) if sol is not None else None

    def kernel_artin_schreier(self, n: int) -> list[FieldElement]:
        lvl = self.tower.level(n)
        return [lvl.element(v) for v in
                self._linear_solver("artin_schreier", n).kernel_basis()]

    def kernel_trace_p(self, n: int) -> list[FieldElement]:
        lvl = self.tower.level(n)
        return [lvl.element(v) for v in
                self._linear_solver("trace_p", n).kernel_basis()]

    # -- places ---------------------------------------------------------------

    def infinity(self) -> Place:
        return self._infinity

    def place_from_coords(self, a: FieldElement, b: FieldElement) -> Place:
        if a.level is not b.level:
            n = max(a.level.n, b.level.n)
            a, b = self.tower.embed(a, n), self.tower.embed(b, n)
        if not self.on_curve(a, b):
            raise ValueError("coordinates do not satisfy the curve equation")
        a, b = self._canonical_rep(a, b)
        beta = self.beta_of(a, b)
        degree = self._orbit_length(a, b)
        cls = self.classify_beta(beta, degree)
        return Place("affine", a, b, beta, degree, cls)

    def _orbit_length(self, a: FieldElement, b: FieldElement) -> int:
        x, y, d = self.frob_q2(a), self.frob_q2(b), 1
        while (x, y) != (a, b):
            x, y, d = self.frob_q2(x), self.frob_q2(y), d + 1
            assert d <= a.level.n
        return d

    def _canonical_rep(self, a, b):
        """Smallest Frobenius-orbit representative, so conjugate coordinate
        pairs construct equal Place objects (they are one place)."""
        best = (a, b)
        x, y = self.frob_q2(a), self.frob_q2(b)
        while (x, y) != (a, b):
            if (y.coeffs, x.coeffs) < (best[1].coeffs, best[0].coeffs):
                best = (x, y)
            x, y = self.frob_q2(x), self.frob_q2(y)
        return best

    def classify_beta(self, beta: FieldElement, degree: int) -> PlaceClass:
        key = (id(beta.level), beta.pk)
        cls = self._beta_class_cache.get(key)
        if cls is None:
            cls = self._classify_beta_uncached(beta)
            self._beta_class_cache[key] = cls
        # rationality of the place must agree with the beta criterion
        assert (degree == 1) == (cls.kind in
                                 (BETA_ZERO, BETA_ONE, RATIONAL_GENERAL)), \
            "beta rationality criterion disagrees with coordinate degree"
        return cls

    def _classify_beta_uncached(self, beta: FieldElement) -> PlaceClass:
        if beta.is_zero():
            return PlaceClass(BETA_ZERO)
        if beta == 1:
            return PlaceClass(BETA_ONE)
        i = p_order(beta)
        K = r_order(beta, i)
        if beta ** ((self.q - 1) // 2) == -beta.level.one():
            assert (self.q + 1) % (i + 1) == 0, \
                "rational place P-order must satisfy (i+1) | (q+1)"
            return PlaceClass(RATIONAL_GENERAL, i)
        if K <= self.m - 2:
            return PlaceClass(NONRATIONAL_SPECIAL, i, K)
        return PlaceClass(NONRATIONAL_GENERIC, i, K)

    def enumerate_rational(self) -> list[Place]:
        """All degree-one places: P_infinity plus every (a,b) in F_{q^2}^2
        on the curve.  Count must equal q^2 + 1 + 2q*genus by maximality."""
        places = [self.infinity()]
        lvl = self.base
        buckets: dict[int, list[FieldElement]] = {}
        for a in lvl.iter_elements():
            key = (self.frob_q(a) + a).pk
            buckets.setdefault(key, []).append(a)
        for b in lvl.iter_elements():
            pb = self.p_map(b)
            beta = pb * pb
            cls = None
            for a in buckets.get((-beta).pk, ()):
                if cls is None:
                    cls = self.classify_beta(beta, 1)
                places.append(Place("affine", a, b, beta, 1, cls))
        return places

    # -- Hermitian lift --------------------------------------------------------

    def hermitian_lift(self, place: Place, which: int = 0) -> HermitianLift:
        if place.is_infinity():
            raise ValueError("no affine lift at the place at infinity")
        if place.beta.is_zero():
            raise ValueError("lift requires beta != 0 (p(b) must not vanish)")
        if which not in (0, 1, 2):
            raise ValueError("which must be 0, 1 or 2")
        a, b = place.a, place.b
        n = b.level.n
        sol = self._linear_solver("cube_minus", n).solve(list(b.coeffs))
        if sol is None:
            N = 3 * n
            a = self.tower.embed(a, N)
            b = self.tower.embed(b, N)
            sol = self._linear_solver("cube_minus", N).solve(list(b.coeffs))
            assert sol is not None, "cube cover must split over the cubic extension"
        B = b.level.element(sol) + which
        A = -a - B * B
        assert B.cube() - B == b
        assert self.frob_q(A) + A == self.frob_q(B) * B, "Hermitian equation fails"
        pb = self.frob_q(B) - B
        assert pb * pb == self.tower.embed(place.beta, B.level.n)
        assert not pb.is_zero()
        return HermitianLift(place, A, B, pb, which)

    # -- sampling of non-rational places ---------------------------------------

    def feasible_gamma_orders(self, max_rel_degree: int = 4,
                              max_order: int | None = None) -> list[int]:
        """gamma-orders o whose root of unity fits in some F_{q^(2d)}, d <= 4,
        and which belong to non-rational places (o does not divide q+1)."""
        out = []
        cap = max_order if max_order is not None else 3 * self.m
        for o in range(4, cap + 1):
            if o % 3 == 0 or (self.q + 1) % o == 0:
                continue
            e0 = _mult_order_int(3, o)
            if any((2 * self.t * d) % e0 == 0 for d in range(1, max_rel_degree + 1)):
                out.append(o)
        return out

    def sample_nonrational(self, order: int, count: int = 3,
                           max_rel_degree: int = 4) -> list[Place]:
        """Up to `count` distinct non-rational places whose gamma has the
        given multiplicative order, with coordinates in F_{q^(2d)}, d <= 4.

        Deterministic: roots of unity, solutions and kernel offsets are
        taken in a fixed order.  Returns [] when the class is not
        realizable within the degree bound.
        """
        if order % 3 == 0 or order < 4:
            return []
        if (self.q + 1) % order == 0:
            return []   # such beta values only sit under rational places
        e0 = _mult_order_int(3, order)
        places: list[Place] = []
        seen: set[tuple] = set()
        for d in range(1, max_rel_degree + 1):
            N = 2 * self.t * d
            if N % e0 != 0 or N > self.tower.max_degree:
                continue
            lvl = self.tower.level(N)
            for gamma in _roots_of_unity(lvl, order):
                w = (gamma + 1) / (gamma - 1)
                beta = w * w
                if beta.is_zero() or beta == 1:
                    continue
                for sign in (w, -w):
                    b0 = self.solve_trace_p(sign)
                    if b0 is None:
                        continue
                    a0 = self.solve_artin_schreier(-beta)
                    if a0 is None:
                        continue
                    bker = self.kernel_trace_p(N)
                    aker = self.kernel_artin_schreier(N)
                    for boff, aoff in itertools.product(
                            _small_combinations(bker), _small_combinations(aker)):
                        b = b0 + boff if boff is not None else b0
                        a = a0 + aoff if aoff is not None else a0
                        pl = self.place_from_coords(a, b)
                        if pl.degree == 1:
                            continue
                        key = (id(pl.a.level), pl.a.pk, pl.b.pk)
                        if key in seen:
                            continue
                        seen.add(key)
                        places.append(pl)
                        if len(places) >= count:
                            return places
            if places:
                return places
        return places


def _mult_order_int(base: int, mod: int) -> int:
    if mod == 1:
        return 1
    x, k = base % mod, 1
    while x != 1:
        x = x * base % mod
        k += 1
        assert k <= mod
    return k


def _roots_of_unity(lvl, order: int, scan_budget: int = 20000):
    """Elements of exact multiplicative order `order`, deterministic scan."""
    if (lvl.order() - 1) % order != 0:
        return
    cof = (lvl.order() - 1) // order
    seen = set()
    for z in itertools.islice(lvl.iter_elements(), scan_budget):
        if z.is_zero():
            continue
        y = z ** cof
        if y.pk in seen or y == 1:
            continue
        seen.add(y.pk)
        if mult_order(y) == order:
            yield y


def _small_combinations(kernel):
    """None (no offset), then single kernel vectors, then pairs."""
    yield None
    for v in kernel:
        yield v
    for v, w in itertools.combinations(kernel, 2):
        yield v + w
    for v in kernel:
        yield v + v
