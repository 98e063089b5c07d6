"""Cubic fields via reduced integral binary cubic forms.

One GL2(Z)-class of irreducible forms corresponds to one cubic ring
(Delone-Faddeev); the ring is a maximal order exactly when the form passes
the local test at every prime whose square divides the form discriminant.
Enumerating one reduced representative per class and filtering by local
maximality therefore lists every cubic field with |disc| <= X once.

Reduction conventions (class-unique, X-independent):

* disc > 0: the Hessian (P, Q, R) = (b^2-3ac, bc-9ad, c^2-3bd) satisfies
  0 <= Q <= P <= R with a > 0; on the boundary (Q = 0, Q = P or P = R) the
  representative is the lexicographically smallest tuple over the finite
  set of equivalent forms sharing a reduced Hessian.
* disc < 0: a > 0 together with three integer inequalities equivalent to
  Gauss reduction of the positive-definite quadratic factor of f:
      bc - ad > 0,   (a-b)^2 + c(a-b) + ad > 0,   d^2 - bd + ac - a^2 > 0.
  Irreducibility rules out equality, so no tie-breaking is needed.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator

import numpy as np

from .intsieve import Histogram, omega_table
from .primes import primes_up_to
from .quadfields import FieldRecord

log = logging.getLogger(__name__)

MIN_X = 23  # smallest |disc| of any cubic field

_PROGRESS_EVERY = 10**6


@dataclass(frozen=True)
class CubicForm:
    a: int
    b: int
    c: int
    d: int

    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def form_discriminant(f) -> int:
    a, b, c, d = f.coeffs() if isinstance(f, CubicForm) else f
    return 18 * a * b * c * d + b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d


def hessian(a: int, b: int, c: int, d: int) -> tuple[int, int, int]:
    return (b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)


def transform(coeffs, gamma):
    """Coefficients of f((x, y) . gamma) for gamma = ((p, q), (r, s))."""
    a, b, c, d = coeffs
    (p, q), (r, s) = gamma
    return (
        a * p**3 + b * p * p * r + c * p * r * r + d * r**3,
        3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) + c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s,
        3 * a * p * q * q + b * (2 * p * q * s + q * q * r) + c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s,
        a * q**3 + b * q * q * s + c * q * s * s + d * s**3,
    )


# all unimodular 2x2 matrices with entries in {-1, 0, 1}: enough to connect
# every pair of equivalent forms whose Hessians are both reduced
_SMALL_GL2 = [((p, q), (r, s))
              for p, q, r, s in itertools.product((-1, 0, 1), repeat=4)
              if abs(p * s - q * r) == 1]


def _sign_normalized(coeffs):
    return coeffs if coeffs[0] > 0 else tuple(-x for x in coeffs)


def _hessian_domain(coeffs) -> bool:
    P, Q, R = hessian(*coeffs)
    return 0 <= Q <= P <= R


def _is_orbit_minimal(coeffs) -> bool:
    """Boundary tie-break: is this tuple the lex-min reduced form of its class?"""
    cands = []
    for gamma in _SMALL_GL2:
        g = _sign_normalized(transform(coeffs, gamma))
        if _hessian_domain(g):
            cands.append(g)
    return tuple(coeffs) == min(cands)


def is_reduced(a: int, b: int, c: int, d: int) -> bool:
    """True iff (a,b,c,d) is the canonical representative of its GL2(Z)-class."""
    D = form_discriminant((a, b, c, d))
    if a <= 0 or D == 0:
        return False
    if D < 0:
        return (b * c - a * d > 0
                and (a - b) ** 2 + c * (a - b) + a * d > 0
                and d * d - b * d + a * c - a * a > 0)
    P, Q, R = hessian(a, b, c, d)
    if not (0 <= Q <= P <= R):
        return False
    if Q == 0 or Q == P or P == R:
        return _is_orbit_minimal((a, b, c, d))
    return True


def is_irreducible(a: int, b: int, c: int, d: int) -> bool:
    """No rational root: checks integer roots of t^3 + b t^2 + ac t + a^2 d."""
    if a == 0 or d == 0:
        return False
    n = abs(a * a * d)
    f = 1
    while f * f <= n:
        if n % f == 0:
            for k in (f, -f, n // f, -(n // f)):
                if ((k + b) * k + a * c) * k + a * a * d == 0:
                    return False
        f += 1
    return True


def reduce_form(a: int, b: int, c: int, d: int) -> tuple[int, int, int, int]:
    """Canonical representative of the GL2(Z)-class of an irreducible form."""
    D = form_discriminant((a, b, c, d))
    if D == 0:
        raise ValueError("degenerate form")
    a, b, c, d = _sign_normalized((a, b, c, d))
    if D > 0:
        while True:
            P, Q, R = hessian(a, b, c, d)
            if P > R:
                a, b, c, d = transform((a, b, c, d), ((0, -1), (1, 0)))
                a, b, c, d = _sign_normalized((a, b, c, d))
                continue
            if Q > P or Q <= -P:
                m = (P - Q) // (2 * P)  # brings Q + 2Pm into (-P, P]
                a, b, c, d = transform((a, b, c, d), ((1, m), (0, 1)))
                continue
            break
        if Q < 0:
            b, d = -b, -d
        if not is_reduced(a, b, c, d):
            # boundary of the Hessian domain: take the orbit minimum
            cands = [g for g in (_sign_normalized(transform((a, b, c, d), g))
                                 for g in _SMALL_GL2) if _hessian_domain(g)]
            a, b, c, d = min(cands)
        return (a, b, c, d)
    # negative discriminant: Gauss-reduce the quadratic factor numerically,
    # then certify with the exact integer conditions
    for _ in range(200):
        roots = np.roots([a, b, c, d])
        theta = float(roots[np.argmin(np.abs(roots.imag))].real)
        P = theta + b / a
        Q = theta * theta + theta * b / a + c / a
        if Q < 1 - 1e-12:
            a, b, c, d = _sign_normalized(transform((a, b, c, d), ((0, -1), (1, 0))))
            continue
        m = -round(P / 2)
        if m != 0:
            a, b, c, d = transform((a, b, c, d), ((1, m), (0, 1)))
            continue
        if P < 0:
            b, d = -b, -d
            continue
        if is_reduced(a, b, c, d):
            return (a, b, c, d)
        # float landed next to the domain: certify a neighbour exactly
        for mm in (-1, 1):
            cand = transform((a, b, c, d), ((1, mm), (0, 1)))
            if is_reduced(*cand):
                return cand
            cand = (cand[0], -cand[1], cand[2], -cand[3])
            if is_reduced(*cand):
                return cand
        a, b, c, d = transform((a, b, c, d), ((1, 1), (0, 1)))
    raise RuntimeError(f"reduction did not converge for {(a, b, c, d)}")


def is_maximal_at(f, p: int) -> bool:
    """Local maximality of the cubic ring of f at p.

    Only primes with p^2 | disc can fail.  For those, the ring is
    non-maximal iff f mod p is identically zero, or f has a multiple root
    in P^1(F_p) whose lifted value vanishes mod p^2 (well-defined because
    both partials vanish at a multiple root).
    """
    a, b, c, d = f.coeffs() if isinstance(f, CubicForm) else f
    D = form_discriminant((a, b, c, d))
    if D % (p * p) != 0:
        return True
    if a % p == 0 and b % p == 0 and c % p == 0 and d % p == 0:
        return False
    pp = p * p
    for r in range(p):
        fv = ((a * r + b) * r + c) * r + d
        if fv % p:
            continue
        fx = (3 * a * r + 2 * b) * r + c
        fy = (b * r + 2 * c) * r + 3 * d
        if fx % p or fy % p:
            continue
        if fv % pp == 0:
            return False
    if a % p == 0 and b % p == 0 and a % pp == 0:
        return False
    return True


# ---------------------------------------------------------------------------
# vectorized enumeration
# ---------------------------------------------------------------------------

def _ranges(counts: np.ndarray, starts: np.ndarray) -> np.ndarray:
    """Concatenated arange(starts[i], starts[i] + counts[i]) (ragged expand)."""
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    reps = np.repeat(starts, counts)
    offs = np.arange(total, dtype=np.int64)
    offs -= np.repeat(np.cumsum(counts) - counts, counts)
    return reps + offs


def _neg_pairs(X: int) -> list[tuple[int, int]]:
    pairs = []
    a = 1
    while 27 * a**4 <= 16 * X:
        psi_max = a * (0.5 + (X / (3.0 * a**4)) ** 0.25) + 1.0
        b_lo = int(math.floor(-psi_max)) - 1
        b_hi = int(math.ceil(a + psi_max)) + 1
        pairs.extend((a, b) for b in range(b_lo, b_hi + 1))
        a += 1
    return pairs


def _pos_pairs(X: int) -> list[tuple[int, int]]:
    pairs = []
    a = 1
    while 729 * a**4 <= 16 * X:
        b_max = int(math.floor(1.5 * a + X**0.25)) + 1
        pairs.extend((a, b) for b in range(-b_max, b_max + 1))
        a += 1
    return pairs


def _neg_forms(a: int, b: int, X: int):
    """Reduced irreducible-candidate (c, d, disc) arrays for disc < 0."""
    theta_max = 0.5 + (X / (3.0 * a**4)) ** 0.25 + 1e-9
    psi_lo = max(float(-b), -a * theta_max)
    psi_hi = min(float(a - b), a * theta_max)
    if psi_lo >= psi_hi:
        return None
    q_max = (X / (4.0 * a**4)) ** (1.0 / 3.0) + 0.25 + 1e-9
    w_pts = [psi_lo * (psi_lo + b), psi_hi * (psi_hi + b)]
    if psi_lo < -b / 2.0 < psi_hi:
        w_pts.append(-(b / 2.0) ** 2)
    w_min, w_max = min(w_pts), max(w_pts)
    c_lo = int(math.floor(a - w_max / a)) - 2
    c_hi = int(math.ceil(a * q_max - w_min / a)) + 2
    if c_hi < c_lo:
        return None
    c = np.arange(c_lo, c_hi + 1, dtype=np.int64)

    beta = 18 * a * b * c - 4 * b**3
    gamma = b * b * c * c - 4 * a * c**3
    # covering window from disc >= -X (exact filters come later)
    delta = (beta.astype(np.float64)) ** 2 + 108.0 * a * a * (gamma.astype(np.float64) + X)
    ok = delta >= 0
    sq = np.sqrt(np.where(ok, delta, 0.0))
    denom = 54.0 * a * a
    d_lo = np.ceil((beta - sq) / denom).astype(np.int64) - 2
    d_hi = np.floor((beta + sq) / denom).astype(np.int64) + 2
    # ad < bc  and  (a-b)^2 + c(a-b) + ad > 0   (exact, linear in d)
    d_hi = np.minimum(d_hi, (b * c - 1) // a)
    k2 = (a - b) ** 2 + c * (a - b)
    d_lo = np.maximum(d_lo, (-k2) // a + 1)
    counts = np.where(ok, d_hi - d_lo + 1, 0)
    counts = np.maximum(counts, 0)
    d = _ranges(counts, d_lo)
    c = np.repeat(c, counts)
    disc = (18 * a * b) * c * d + (b * b) * c * c - (4 * a) * c**3 - (4 * b**3) * d - (27 * a * a) * d * d
    keep = (disc >= -X) & (disc <= -1) & (d * d - b * d + a * c - a * a > 0)
    return c[keep], d[keep], disc[keep]


def _pos_forms(a: int, b: int, X: int):
    """Reduced irreducible-candidate (c, d, disc) arrays for disc > 0."""
    sqrt_x = math.isqrt(X)
    c_lo = -((sqrt_x - b * b) // (3 * a))
    c_hi = (b * b - 1) // (3 * a)
    if c_hi < c_lo:
        return None
    c = np.arange(c_lo, c_hi + 1, dtype=np.int64)
    P = b * b - 3 * a * c
    d_lo = -((P - b * c) // (9 * a))
    d_hi = (b * c) // (9 * a)
    if b > 0:
        d_hi = np.minimum(d_hi, (c * c - P) // (3 * b))
    elif b < 0:
        d_lo = np.maximum(d_lo, -((c * c - P) // (-3 * b)))
    else:
        keep_c = c * c >= P
        c, P, d_lo, d_hi = c[keep_c], P[keep_c], d_lo[keep_c], d_hi[keep_c]
    if len(c) == 0:
        return None

    beta = 18 * a * b * c - 4 * b**3
    gamma = b * b * c * c - 4 * a * c**3
    fbeta = beta.astype(np.float64)
    fgamma = gamma.astype(np.float64)
    denom = 54.0 * a * a
    # disc >= 1: d inside the parabola's positive stretch
    d1 = fbeta * fbeta + 108.0 * a * a * (fgamma - 1.0)
    ok = d1 >= 0
    sq1 = np.sqrt(np.where(ok, d1, 0.0))
    s_lo = np.ceil((fbeta - sq1) / denom).astype(np.int64) - 2
    s_hi = np.floor((fbeta + sq1) / denom).astype(np.int64) + 2
    lo = np.maximum(d_lo, s_lo)
    hi = np.minimum(d_hi, s_hi)
    # disc <= X: excluded middle (t_lo, t_hi) when the parabola tops X
    d2 = fbeta * fbeta + 108.0 * a * a * (fgamma - float(X))
    mid = d2 > 0
    sq2 = np.sqrt(np.where(mid, d2, 0.0))
    t_lo = np.where(mid, np.floor((fbeta - sq2) / denom), 0).astype(np.int64) + 2
    t_hi = np.where(mid, np.ceil((fbeta + sq2) / denom), 0).astype(np.int64) - 2
    # interval 1: [lo, min(hi, t_lo)]  /  interval 2: [max(lo, t_hi), hi]
    hi1 = np.where(mid & ok, np.minimum(hi, t_lo), np.where(ok, hi, lo - 1))
    lo2 = np.where(mid & ok, np.maximum(lo, t_hi), lo)
    lo2 = np.maximum(lo2, hi1 + 1)  # keep the two intervals disjoint
    n1 = np.maximum(hi1 - lo + 1, 0)
    n2 = np.where(mid & ok, np.maximum(hi - lo2 + 1, 0), 0)
    d_arr = np.concatenate([_ranges(n1, lo), _ranges(n2, lo2)])
    c_arr = np.concatenate([np.repeat(c, n1), np.repeat(c, n2)])
    if len(d_arr) == 0:
        return None
    disc = ((18 * a * b) * c_arr * d_arr + (b * b) * c_arr * c_arr
            - (4 * a) * c_arr**3 - (4 * b**3) * d_arr - (27 * a * a) * d_arr * d_arr)
    Q = b * c_arr - (9 * a) * d_arr
    Pv = b * b - (3 * a) * c_arr
    R = c_arr * c_arr - (3 * b) * d_arr
    keep = (disc >= 1) & (disc <= X) & (Q >= 0) & (Q <= Pv) & (Pv <= R)
    return c_arr[keep], d_arr[keep], disc[keep]


def _irreducible_mask(a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray,
                      disc: np.ndarray) -> np.ndarray:
    """Vectorized rational-root test via integer roots of t^3 + bt^2 + (ac)t + a^2 d."""
    B = b.astype(np.float64)
    C = (a * c).astype(np.float64)
    D2 = (a * a * d).astype(np.float64)
    p = C - B * B / 3.0
    q = 2.0 * B**3 / 27.0 - B * C / 3.0 + D2
    roots = np.empty((3, len(b)), dtype=np.float64)
    neg = disc < 0
    # one real root (Cardano)
    h = np.sqrt(np.maximum(np.where(neg, q * q / 4.0 + p**3 / 27.0, 1.0), 0.0))
    u = np.cbrt(-q / 2.0 + h)
    v = np.cbrt(-q / 2.0 - h)
    single = u + v - B / 3.0
    # three real roots (trigonometric; p < 0 strictly when disc > 0)
    pc = np.where(neg, -1.0, np.minimum(p, -1e-12))
    mm = 2.0 * np.sqrt(-pc / 3.0)
    arg = np.clip(3.0 * q / (pc * mm), -1.0, 1.0)
    phi = np.arccos(arg)
    for k in range(3):
        triple = mm * np.cos((phi - 2.0 * np.pi * k) / 3.0) - B / 3.0
        roots[k] = np.where(neg, single, triple)
    bI = b.astype(np.int64)
    acI = (a * c).astype(np.int64)
    adI = (a * a * d).astype(np.int64)
    has_root = np.zeros(len(b), dtype=bool)
    for k in range(3):
        base = np.rint(np.clip(roots[k], -1e6, 1e6)).astype(np.int64)
        for off in (-1, 0, 1):
            t = base + off
            has_root |= ((t + bI) * t + acI) * t + adI == 0
    return ~has_root


def _sqpart_table(X: int) -> np.ndarray:
    """t[v] = product of primes p with p^2 | v, for 0 <= v <= X (uint16)."""
    table = np.ones(X + 1, dtype=np.uint16)
    for p in primes_up_to(math.isqrt(X)):
        p2 = int(p) * int(p)
        table[p2::p2] *= np.uint16(p)
    return table


def _spf_table(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.uint16)
    for p in primes_up_to(limit)[::-1]:
        spf[p::p] = np.uint16(p)
    return spf


def _nonmax_at_p(a, b, c, d, p: int) -> np.ndarray:
    """Vectorized local non-maximality test at p for rows with p^2 | disc."""
    pp = p * p
    content = (a % p == 0) & (b % p == 0) & (c % p == 0) & (d % p == 0)
    res = content | ((a % p == 0) & (b % p == 0) & (a % pp == 0))
    chunk = max(1, (1 << 22) // max(len(a), 1))
    for r0 in range(0, p, chunk):
        R = np.arange(r0, min(r0 + chunk, p), dtype=np.int64)[np.newaxis, :]
        ac = a[:, np.newaxis]
        bc = b[:, np.newaxis]
        cc = c[:, np.newaxis]
        dc = d[:, np.newaxis]
        fv = ((ac * R + bc) * R + cc) * R + dc
        fx = (3 * ac * R + 2 * bc) * R + cc
        fy = (bc * R + 2 * cc) * R + 3 * dc
        mult = (fv % p == 0) & (fx % p == 0) & (fy % p == 0)
        res |= (mult & (fv % pp == 0)).any(axis=1)
    return res


# worker state shared through fork (set in the parent before the Pool starts)
_SHARED: dict = {}


def _init_shared(X: int, need_fields: bool) -> None:
    _SHARED["X"] = X
    _SHARED["need_fields"] = need_fields
    if need_fields:
        _SHARED["omega"] = omega_table(X)
        _SHARED["sqpart"] = _sqpart_table(X)
        _SHARED["spf"] = _spf_table(math.isqrt(X))


def _forms_for_chunk(chunk) -> tuple[np.ndarray, ...]:
    """Reduced irreducible forms for a chunk of (branch, a, b) triples."""
    X = _SHARED["X"]
    outs = []
    for branch, a, b in chunk:
        got = _neg_forms(a, b, X) if branch == 0 else _pos_forms(a, b, X)
        if got is None or len(got[0]) == 0:
            continue
        c, d, disc = got
        aa = np.full(len(c), a, dtype=np.int64)
        bb = np.full(len(c), b, dtype=np.int64)
        outs.append((aa, bb, c, d, disc))
    if not outs:
        z = np.empty(0, dtype=np.int64)
        return z, z, z, z, z
    a, b, c, d, disc = (np.concatenate(parts) for parts in zip(*outs))
    keep = _irreducible_mask(a, b, c, d, disc)
    a, b, c, d, disc = a[keep], b[keep], c[keep], d[keep], disc[keep]
    # boundary ties of the positive-discriminant Hessian domain
    P, Q, R = hessian(a, b, c, d)
    boundary = (disc > 0) & ((Q == 0) | (Q == P) | (P == R))
    if np.any(boundary):
        idx = np.nonzero(boundary)[0]
        drop = [i for i in idx
                if not _is_orbit_minimal((int(a[i]), int(b[i]), int(c[i]), int(d[i])))]
        if drop:
            keep2 = np.ones(len(a), dtype=bool)
            keep2[drop] = False
            a, b, c, d, disc = a[keep2], b[keep2], c[keep2], d[keep2], disc[keep2]
    return a, b, c, d, disc


def _fields_for_chunk(chunk) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(disc, omega, cyclic) arrays of the maximal (field) forms in the chunk."""
    a, b, c, d, disc = _forms_for_chunk(chunk)
    if len(a) == 0:
        return (np.empty(0, dtype=np.int64), np.empty(0, dtype=np.uint8),
                np.empty(0, dtype=bool))
    absd = np.abs(disc)
    sq = _SHARED["sqpart"][absd].astype(np.int64)
    spf = _SHARED["spf"]
    maximal = np.ones(len(a), dtype=bool)
    pending = np.nonzero(sq > 1)[0]
    sq_rem = sq[pending]
    while len(pending):
        p_of = spf[sq_rem].astype(np.int64)
        for p in np.unique(p_of):
            rows = p_of == p
            sel = pending[rows]
            bad = _nonmax_at_p(a[sel], b[sel], c[sel], d[sel], int(p))
            maximal[sel[bad]] = False
        sq_rem = sq_rem // p_of
        alive = (sq_rem > 1) & maximal[pending]
        pending, sq_rem = pending[alive], sq_rem[alive]
    disc = disc[maximal]
    absd = absd[maximal]
    omega = _SHARED["omega"][absd]
    root = np.rint(np.sqrt(absd.astype(np.float64))).astype(np.int64)
    cyclic = (disc > 0) & (root * root == disc)
    return disc, omega, cyclic


def _all_pairs(X: int) -> list[tuple[int, int, int]]:
    return ([(0, a, b) for a, b in _neg_pairs(X)]
            + [(1, a, b) for a, b in _pos_pairs(X)])


def _chunked(pairs, n):
    return [pairs[i : i + n] for i in range(0, len(pairs), n)]


def _run_chunks(fn, chunks, workers: int):
    if workers > 1:
        with Pool(workers) as pool:
            yield from pool.imap(fn, chunks)
    else:
        for ch in chunks:
            yield fn(ch)


def reduced_form_batches(X: int, workers: int = 1,
                         pair_chunk: int = 400) -> Iterator[tuple[np.ndarray, ...]]:
    """(a, b, c, d, disc) batches of all reduced irreducible forms, 0 < |disc| <= X."""
    if X < MIN_X:
        raise ValueError(f"cubic enumeration needs X >= {MIN_X}, got {X}")
    _init_shared(X, need_fields=False)
    chunks = _chunked(_all_pairs(X), pair_chunk)
    done = 0
    for out in _run_chunks(_forms_for_chunk, chunks, workers):
        if len(out[0]):
            before = done // _PROGRESS_EVERY
            done += len(out[0])
            if done // _PROGRESS_EVERY != before:
                log.info("reduced forms enumerated: %d", done)
            yield out


def enumerate_reduced_forms(X: int) -> Iterator[CubicForm]:
    """Stream one representative per class of irreducible forms, |disc| <= X."""
    for a, b, c, d, _ in reduced_form_batches(X):
        for i in range(len(a)):
            yield CubicForm(int(a[i]), int(b[i]), int(c[i]), int(d[i]))


def cubic_field_batches(X: int, workers: int = 1, only: str | None = None,
                        pair_chunk: int = 400) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """(disc, omega, cyclic) batches covering every cubic field with |D| <= X.

    only: None for all fields, "cyclic" or "s3" to restrict the Galois type.
    """
    if X < MIN_X:
        raise ValueError(f"cubic enumeration needs X >= {MIN_X}, got {X}")
    if only not in (None, "cyclic", "s3"):
        raise ValueError(f"only must be None, 'cyclic' or 's3', got {only!r}")
    _init_shared(X, need_fields=True)
    chunks = _chunked(_all_pairs(X), pair_chunk)
    done = 0
    for disc, omega, cyclic in _run_chunks(_fields_for_chunk, chunks, workers):
        if only == "cyclic":
            keep = cyclic
            disc, omega, cyclic = disc[keep], omega[keep], cyclic[keep]
        elif only == "s3":
            keep = ~cyclic
            disc, omega, cyclic = disc[keep], omega[keep], cyclic[keep]
        if len(disc):
            before = done // _PROGRESS_EVERY
            done += len(disc)
            if done // _PROGRESS_EVERY != before:
                log.info("cubic fields enumerated: %d", done)
            yield disc, omega, cyclic


def enumerate_cubic_fields(X: int, only: str | None = None) -> Iterator[FieldRecord]:
    """Stream one FieldRecord per cubic field with |D_K| <= X."""
    for disc, omega, cyclic in cubic_field_batches(X, only=only):
        for i in range(len(disc)):
            yield FieldRecord(discriminant=int(disc[i]), omega=int(omega[i]),
                              is_cyclic=bool(cyclic[i]))


def cubic_omega_histogram(X: int, workers: int = 1, only: str | None = None) -> Histogram:
    """Histogram of omega(D_K) over all cubic fields with |D_K| <= X."""
    counts = np.zeros(16, dtype=np.int64)
    for _, omega, _ in cubic_field_batches(X, workers=workers, only=only):
        counts += np.bincount(omega, minlength=16)
    return Histogram.from_counts(counts, label=f"cubic fields, |D| <= {X}")
