"""Ehrhart polynomials of P(m,n): counting, closed forms, and conjectures.

ehr(P, t) = #(tP intersect Z^m) is a degree-m polynomial in t.  Routes:

* ``ehr_interpolate``   — exact counts at t = 0..m interpolated, then
                          verified against a fresh count at t = m+1;
* ``ehr_closed_small_n`` — closed forms for n <= 3, every m;
* ``ehr_closed_small_m`` — closed forms for m <= 4 (n >= max(1, m-1));
* ``ehr_draconian``     — a positive sum of products of binomials over
                          draconian sequences (n >= m-1, m <= 5);
* ``ehr_parking``       — the pairs-only specialization at n = m-1, whose
                          summand count equals the lattice-point count of
                          P(m, m-1) itself;
* ``ehr_conjecture``    — two conjectural closed forms (a finite double
                          sum and m! [z^m] sqrt(1-tz)e^{(nt+t/2+1)z-tz^2/4}),
                          cross-checked against each other;
* ``ehr_recurrence``    — a conjectural three-term recurrence in m.

Also here: h*-vector helpers (basis change between the monomial and
binomial-coefficient bases) and the closed quasi-difference polynomial for
the auxiliary four-dimensional cut polytope used in the volume analysis.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

from .combinat import enumerate_draconian
from .exactmath import (
    EngineDisagreement,
    Polynomial,
    Series,
    binomial_poly,
    double_factorial,
    interpolate,
    series_coeff,
    series_exp,
    series_mul,
    solve_linear,
    sqrt_one_minus,
)
from .polytope import HRep, VRep, count_points, pp_box, pp_facets

_INTERP_CACHE: Dict[Tuple[int, int], Polynomial] = {}


def ehr_interpolate(m: int, n: int, parallel: int = 1) -> Polynomial:
    """Ehrhart polynomial from exact counts at t = 0..m (m <= 5, n <= 6).

    The interpolant is verified against a fresh count at t = m+1; any
    mismatch raises EngineDisagreement.  Results are cached per (m,n).
    P(m,0) is the origin, so n = 0 yields the constant polynomial 1.
    """
    if not (1 <= m <= 5 and 0 <= n <= 6):
        raise ValueError("ehr_interpolate is limited to m <= 5, n <= 6")
    key = (m, n)
    if key in _INTERP_CACHE:
        return _INTERP_CACHE[key]
    h = pp_facets(m, n)
    box = pp_box(m, n)
    pts = [(t, count_points(h, t, box=box, parallel=parallel)) for t in range(m + 1)]
    poly = interpolate(pts)
    fresh = count_points(h, m + 1, box=box, parallel=parallel)
    if poly(m + 1) != fresh:
        raise EngineDisagreement(
            f"Ehrhart interpolation of P({m},{n}) failed its t={m+1} verification"
        )
    _INTERP_CACHE[key] = poly
    return poly


def _tpoly(a0, a1) -> Polynomial:
    return Polynomial([a0, a1])


def ehr_closed_small_n(m: int, n: int) -> Polynomial:
    """Closed Ehrhart polynomials for n <= 3, valid for every m >= 1.

    n=1: C(t+m, m);
    n=2: C(3t+m, m) - m C(t+m-1, m);
    n=3: C(6t+m, m) - m C(3t+m-1, m)
         - C(m,2) [ C(t+m-1, m) + (m-2) C(t+m-2, m) ].
    """
    if m < 1:
        raise ValueError("ehr_closed_small_n requires m >= 1")
    if n == 1:
        return binomial_poly(_tpoly(m, 1), m)
    if n == 2:
        return binomial_poly(_tpoly(m, 3), m) - m * binomial_poly(_tpoly(m - 1, 1), m)
    if n == 3:
        return (
            binomial_poly(_tpoly(m, 6), m)
            - m * binomial_poly(_tpoly(m - 1, 3), m)
            - comb(m, 2)
            * (
                binomial_poly(_tpoly(m - 1, 1), m)
                + (m - 2) * binomial_poly(_tpoly(m - 2, 1), m)
            )
        )
    raise ValueError("ehr_closed_small_n covers only n <= 3")


def ehr_closed_small_m(m: int, n: int) -> Polynomial:
    """Closed Ehrhart polynomials for m <= 4, valid for n >= max(1, m-1).

    Coefficients (highest degree last):
    m=1: 1, n;
    m=2: 1, 2n-1/2, n^2-1/2;
    m=3: 1, 3n-3/2, 3n^2-3n/2-3/2, n^3-3n/2-1;
    m=4: 1, 4n-3, 6n^2-6n-9/4, 4n^3-3n^2-6n-5/2, n^4-3n^2-4n-9/4.
    """
    if not 1 <= m <= 4:
        raise ValueError("ehr_closed_small_m covers only m <= 4")
    if n < max(1, m - 1):
        raise ValueError("ehr_closed_small_m requires n >= max(1, m-1)")
    half = Fraction(1, 2)
    if m == 1:
        return Polynomial([1, n])
    if m == 2:
        return Polynomial([1, 2 * n - half, n * n - half])
    if m == 3:
        return Polynomial(
            [
                1,
                3 * n - Fraction(3, 2),
                3 * n * n - Fraction(3 * n, 2) - Fraction(3, 2),
                n**3 - Fraction(3 * n, 2) - 1,
            ]
        )
    return Polynomial(
        [
            1,
            4 * n - 3,
            6 * n * n - 6 * n - Fraction(9, 4),
            4 * n**3 - 3 * n * n - 6 * n - Fraction(5, 2),
            n**4 - 3 * n * n - 4 * n - Fraction(9, 4),
        ]
    )


def ehr_draconian(m: int, n: int) -> Polynomial:
    """Draconian-sequence Ehrhart sum (n >= m-1, m <= 5):

        sum over sequences a (sum <= m) of
            prod_{singletons i} C((n-m+1)t + a_i - 1, a_i)
          * prod_{pairs k}      C(t + a_k - 1, a_k).
    """
    if not 1 <= m <= 5:
        raise ValueError("ehr_draconian is limited to m <= 5")
    if n < m - 1 or n < 0:
        raise ValueError("ehr_draconian requires n >= m-1")
    base = n - m + 1
    total = Polynomial()
    for a in enumerate_draconian(m, "ehrhart"):
        term = Polynomial([1])
        for i in range(m):
            if a[i]:
                term = term * binomial_poly(_tpoly(a[i] - 1, base), a[i])
        for k in range(m, len(a)):
            if a[k]:
                term = term * binomial_poly(_tpoly(a[k] - 1, 1), a[k])
        total = total + term
    return total


def ehr_parking(m: int) -> Tuple[Polynomial, int]:
    """Ehrhart polynomial of P(m, m-1) as a pairs-only draconian sum (m <= 5).

    Returns (polynomial, number of summands).  Evaluating each binomial
    product at t = 1 gives 1, so the summand count equals the polynomial's
    value at 1, i.e. the lattice-point count of P(m, m-1) itself
    (1, 3, 17, 144, ... for m = 1, 2, 3, 4, ...).
    """
    if not 1 <= m <= 5:
        raise ValueError("ehr_parking is limited to m <= 5")
    total = Polynomial()
    count = 0
    for a in enumerate_draconian(m, "ehrhart"):
        if any(a[:m]):
            continue
        term = Polynomial([1])
        for k in range(m, len(a)):
            if a[k]:
                term = term * binomial_poly(_tpoly(a[k] - 1, 1), a[k])
        total = total + term
        count += 1
    return total, count


def ehr_conjecture(m: int, n: int) -> Tuple[Polynomial, Polynomial, bool]:
    """Two conjectural closed Ehrhart forms, cross-checked (n >= m-1).

    (1) (1/2^m) sum_{i=0}^{floor(m/2)} sum_{j=2i}^{m} (-1)^{i+1}
        m!/((m-j)!(j-2i)!i!) (2(j-2i)-3)!! t^{j-i} (2nt+t+2)^{m-j};
    (2) m! [z^m] sqrt(1-tz) exp((nt+t/2+1)z - (t/4)z^2).
    Both are conjectural; they are verified equal to each other here and
    against interpolation in the test suite.
    """
    if m < 1:
        raise ValueError("ehr_conjecture requires m >= 1")
    if n < m - 1 or n < 0:
        raise ValueError("ehr_conjecture requires n >= m-1")
    t = Polynomial.x()
    base = Polynomial([2, 2 * n + 1])  # (2n+1)t + 2
    total = Polynomial()
    for i in range(m // 2 + 1):
        for j in range(2 * i, m + 1):
            c = Fraction(
                (-1) ** (i + 1) * factorial(m),
                factorial(m - j) * factorial(j - 2 * i) * factorial(i),
            )
            total = total + c * double_factorial(j - 2 * i) * t ** (j - i) * base ** (
                m - j
            )
    p1 = total / Fraction(2**m)

    root = sqrt_one_minus(Series([Polynomial(), t], m))
    expo = Series(
        [
            Polynomial(),
            Polynomial([1, n + Fraction(1, 2)]),
            Polynomial([0, -Fraction(1, 4)]),
        ],
        m,
    )
    coeff = series_coeff(series_mul(root, series_exp(expo)), m)
    if not isinstance(coeff, Polynomial):
        coeff = Polynomial([coeff])
    p2 = coeff * factorial(m)
    if p1 != p2:
        raise EngineDisagreement(f"conjectural Ehrhart forms disagree at ({m},{n})")
    return p1, p2, True


def ehr_recurrence(m: int, n: int) -> Polynomial:
    """Conjectural three-term recurrence in m (empirically exact on the
    verified grid):

        E_k = (kt + nt - t + 1) E_{k-1}
              - (k-1) t (nt + t/2 + 3/2) E_{k-2}
              + (k-1)(k-2)/2 t^2 E_{k-3},      E_0 = 1.
    """
    if m < 0:
        raise ValueError("ehr_recurrence requires m >= 0")
    if n < 0:
        raise ValueError("ehr_recurrence requires n >= 0")
    e: List[Polynomial] = [Polynomial([1])]
    for k in range(1, m + 1):
        term = Polynomial([1, k + n - 1]) * e[k - 1]
        if k >= 2:
            term = term - (k - 1) * Polynomial(
                [0, Fraction(3, 2), n + Fraction(1, 2)]
            ) * e[k - 2]
        if k >= 3:
            term = term + Fraction((k - 1) * (k - 2), 2) * Polynomial([0, 0, 1]) * e[
                k - 3
            ]
        e.append(term)
    return e[m]


def _binom_basis(m: int) -> List[Polynomial]:
    """B_i(t) = C(t + m - i, m) for i = 0..m, the h*-expansion basis."""
    return [binomial_poly(Polynomial([m - i, 1]), m) for i in range(m + 1)]


def hstar_tools(action: str, *args):
    """h*-vector helpers.

    to_hstar(poly, m)    -> [h*_0..h*_m] with poly = sum h*_i C(t+m-i, m);
                            raises ValueError when deg(poly) > m;
    from_hstar(entries)  -> the Ehrhart polynomial of that h*-vector;
    pyramid(entries)     -> h*-vector of the pyramid (a trailing zero).
    """
    if action == "to_hstar":
        poly, m = args
        if not isinstance(poly, Polynomial):
            poly = Polynomial(poly)
        if poly.degree > m:
            raise ValueError("polynomial degree exceeds the declared dimension")
        basis = _binom_basis(m)
        a_rows = [[b.coefficient(d) for b in basis] for d in range(m + 1)]
        rhs = [poly.coefficient(d) for d in range(m + 1)]
        sol = solve_linear(a_rows, rhs)
        assert sol is not None, "binomial basis must be unisolvent"
        return sol
    if action == "from_hstar":
        (entries,) = args
        m = len(entries) - 1
        basis = _binom_basis(m)
        total = Polynomial()
        for h, b in zip(entries, basis):
            total = total + h * b
        return total
    if action == "pyramid":
        (entries,) = args
        return list(entries) + [0]
    raise ValueError(f"unknown hstar_tools action {action!r}")


def aux3_points(n: int) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
    """Vertex data of the auxiliary 4-dimensional cut polytope (n >= 4).

    Q is the hull of 4 'forbidden' points (n,n,*,*) together with 10 cut
    points {(n,n-1),(n-1,n)} x {(n-2,n-3),(n-3,n-2),(n-2,0),(0,n-2),(0,0)};
    F = Q intersect {x1 + x2 = 2n-1} is the hull of the 10 cut points.
    """
    if n < 4:
        raise ValueError("aux3_points requires n >= 4")
    forbidden = [
        (n, n, n - 3, n - 3),
        (n, n, n - 3, 0),
        (n, n, 0, n - 3),
        (n, n, 0, 0),
    ]
    heads = [(n, n - 1), (n - 1, n)]
    tails = [(n - 2, n - 3), (n - 3, n - 2), (n - 2, 0), (0, n - 2), (0, 0)]
    cut_pts = [h + t for h in heads for t in tails]
    return tuple(forbidden) + tuple(cut_pts), tuple(cut_pts)


def aux_lemma3(n: int) -> Polynomial:
    """Closed form of |tQ| - |tF| for the auxiliary cut polytope (n >= 4):

        (n^2/2 - 7n/3 + 21/8) t^4 + (n^2/2 - 2n + 23/12) t^3
        + (n/3 - 5/8) t^2 + t/12,   with no constant term.
    """
    if n < 4:
        raise ValueError("aux_lemma3 requires n >= 4")
    return Polynomial(
        [
            0,
            Fraction(1, 12),
            Fraction(n, 3) - Fraction(5, 8),
            Fraction(n * n, 2) - 2 * n + Fraction(23, 12),
            Fraction(n * n, 2) - Fraction(7 * n, 3) + Fraction(21, 8),
        ]
    )
