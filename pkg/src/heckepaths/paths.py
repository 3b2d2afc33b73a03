"""Piecewise-linear paths with rational breakpoints and their combinatorics.

A path is stored in canonical form: the shape vector, the start point, one
minimal coset representative per linear piece and the strictly increasing
breakpoint sequence 0 = a_0 < ... < a_r = 1.  On piece j the derivative is
exactly tau_j(shape), so the parametrization is determined by the geometry
and two paths are equal iff their canonical data agree.

The recognition routines (is_hecke / is_ls) search for chains of positive
real roots joining the incoming direction of each breakpoint to the outgoing
one; candidate roots always come from the inversion set of the current coset
representative, which keeps the search finite and exhaustive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import (
    CrossCheckMismatch,
    FormatError,
    NonLambdaPath,
    NotDominant,
    OperatorUndefined,
    OutOfRange,
    UnsupportedType,
)
from .linalg import (
    Vec,
    format_rational,
    format_vector,
    is_integral_vec,
    is_zero_vec,
    parse_rational,
    parse_vector,
    vadd,
    vneg,
    vscale,
    vsub,
    zero_vec,
)
from .root_system import (
    CosetRep,
    IDENTITY,
    RootGeneratingSystem,
    WeylElement,
)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LambdaPath:
    system: RootGeneratingSystem = field(compare=False, repr=False, hash=False)
    shape: Vec = ()
    start: Vec = ()
    directions: tuple = ()  # tuple[WeylElement], minimal coset reps
    breakpoints: tuple = ()  # tuple[Fraction], length r + 1

    @property
    def r(self) -> int:
        return len(self.directions)

    @property
    def is_constant(self) -> bool:
        return is_zero_vec(self.shape)

    @property
    def shape_is_dominant(self) -> bool:
        return self.system.is_dominant(self.shape)

    def direction_vector(self, j: int) -> Vec:
        return self.system.act(self.directions[j], self.shape)

    def segments(self):
        """List of (t0, t1, derivative) triples covering [0, 1]."""
        out = []
        for j in range(self.r):
            out.append((self.breakpoints[j], self.breakpoints[j + 1], self.direction_vector(j)))
        return out

    def point(self, j: int) -> Vec:
        """pi(a_j)."""
        v = tuple(self.start)
        for k in range(j):
            dur = self.breakpoints[k + 1] - self.breakpoints[k]
            v = vadd(v, vscale(dur, self.direction_vector(k)))
        return v

    @property
    def endpoint(self) -> Vec:
        return self.point(self.r)

    @property
    def nu(self) -> Vec:
        return vsub(self.endpoint, tuple(self.start))

    @property
    def in_Y(self) -> bool:
        return (
            is_integral_vec(self.start)
            and is_integral_vec(self.shape)
            and is_integral_vec(self.endpoint)
        )

    def __repr__(self):
        pts = " -> ".join(str(tuple(map(format_rational, self.point(j)))) for j in range(self.r + 1))
        return f"LambdaPath({pts})"


class PiecewisePath:
    """Fallback for concatenations whose derivatives mix Weyl orbits."""

    is_lambda = False

    def __init__(self, system, start, segments):
        self.system = system
        self.start = tuple(Fraction(x) for x in start)
        self.segments = tuple((Fraction(t0), Fraction(t1), tuple(map(Fraction, v))) for t0, t1, v in segments)

    def eval(self, t):
        t = Fraction(t)
        v = self.start
        for t0, t1, der in self.segments:
            if t <= t0:
                break
            v = vadd(v, vscale(min(t, t1) - t0, der))
        return v

    @property
    def endpoint(self):
        return self.eval(ONE)


def from_segments(system: RootGeneratingSystem, start, segments, antidominant=False) -> LambdaPath:
    """Canonical path from raw (duration, derivative) pieces.

    Zero-displacement pieces are dropped (they are reparametrization slack);
    the remaining displacements must have Weyl-conjugate directions, and the
    canonical speed is fixed so the piece durations sum to one.
    """
    start = tuple(Fraction(x) for x in start)
    displacements = []
    for dur, der in segments:
        dur = Fraction(dur)
        if dur < 0:
            raise FormatError("negative segment duration")
        disp = vscale(dur, tuple(Fraction(x) for x in der))
        if dur == 0 or is_zero_vec(disp):
            continue
        displacements.append(disp)
    if not displacements:
        return LambdaPath(system, zero_vec(system.rank_x), start, (IDENTITY,), (ZERO, ONE))
    doms = []
    for disp in displacements:
        dom, w = system.orbit_unwind(disp, antidominant=antidominant)
        doms.append((dom, w))
    shape = zero_vec(system.rank_x)
    for dom, _ in doms:
        shape = vadd(shape, dom)
    k = next(i for i, x in enumerate(shape) if x != 0)
    pieces = []
    for disp, (dom, w) in zip(displacements, doms):
        c = dom[k] / shape[k]
        if c <= 0 or vscale(c, shape) != dom:
            raise NonLambdaPath("segment directions lie in different Weyl orbits")
        if pieces and pieces[-1][1] == w:
            pieces[-1] = (pieces[-1][0] + c, w)
        else:
            pieces.append((c, w))
    assert sum(p[0] for p in pieces) == 1
    breakpoints = [ZERO]
    for c, _ in pieces:
        breakpoints.append(breakpoints[-1] + c)
    breakpoints[-1] = ONE
    return LambdaPath(system, shape, start, tuple(w for _, w in pieces), tuple(breakpoints))


def make_path(system: RootGeneratingSystem, shape, start, direction_words, breakpoints) -> LambdaPath:
    """Build a path from a shape, direction words and breakpoint times."""
    shape = tuple(Fraction(x) for x in shape)
    anti = False
    if not system.is_dominant(shape):
        if system.is_antidominant(shape):
            anti = True
        else:
            raise NotDominant("path shape must be dominant (or antidominant)")
    bps = [Fraction(b) for b in breakpoints]
    if len(bps) != len(direction_words) + 1 or bps[0] != 0 or bps[-1] != 1:
        raise FormatError("breakpoints must run from 0 to 1 with one piece per direction")
    if any(b1 <= b0 for b0, b1 in zip(bps, bps[1:])):
        raise FormatError("breakpoints must be strictly increasing")
    segs = []
    for word, b0, b1 in zip(direction_words, bps, bps[1:]):
        w = word if isinstance(word, WeylElement) else system.normalize_word(word)
        segs.append((b1 - b0, system.act(w, shape)))
    path = from_segments(system, start, segs, antidominant=anti)
    if not is_zero_vec(shape) and path.shape != shape:
        raise FormatError("directions and breakpoints do not match the declared shape")
    return path


def straight_path(system: RootGeneratingSystem, lam, start=None) -> LambdaPath:
    lam = tuple(Fraction(x) for x in lam)
    if start is None:
        start = system.zero()
    return from_segments(system, start, [(ONE, lam)])


def translate_path(path: LambdaPath, y) -> LambdaPath:
    y = tuple(Fraction(x) for x in y)
    return LambdaPath(
        path.system, path.shape, vadd(tuple(path.start), y), path.directions, path.breakpoints
    )


def eval_path(path: LambdaPath, t) -> Vec:
    t = Fraction(t)
    if t < 0 or t > 1:
        raise OutOfRange(f"t = {t} outside [0, 1]")
    v = tuple(path.start)
    for t0, t1, der in path.segments():
        if t <= t0:
            break
        v = vadd(v, vscale(min(t, t1) - t0, der))
    return v


@dataclass(frozen=True)
class DirectionData:
    t: Fraction
    left_derivative: Vec
    right_derivative: Vec
    w_minus: CosetRep
    w_plus: CosetRep


def direction_data(path: LambdaPath, t) -> DirectionData:
    t = Fraction(t)
    if not 0 < t < 1:
        raise OutOfRange(f"t = {t} outside (0, 1)")
    left = next(j for j in range(path.r) if path.breakpoints[j] < t <= path.breakpoints[j + 1])
    right = next(j for j in range(path.r) if path.breakpoints[j] <= t < path.breakpoints[j + 1])
    return DirectionData(
        t,
        path.direction_vector(left),
        path.direction_vector(right),
        CosetRep(path.directions[left], path.shape),
        CosetRep(path.directions[right], path.shape),
    )


def reverse_path(path: LambdaPath) -> LambdaPath:
    segs = []
    for t0, t1, der in reversed(path.segments()):
        segs.append((t1 - t0, vneg(der)))
    anti = path.shape_is_dominant and not path.is_constant
    return from_segments(path.system, path.endpoint, segs, antidominant=anti)


def concat(p1: LambdaPath, p2: LambdaPath):
    """Littelmann concatenation, renormalized to canonical form.

    Returns a PiecewisePath (flagged non-lambda) when the two paths'
    directions do not lie in a common Weyl orbit.
    """
    if p1.system is not p2.system:
        raise FormatError("paths live over different systems")
    segs = [(t1 - t0, der) for t0, t1, der in p1.segments()]
    segs += [(t1 - t0, der) for t0, t1, der in p2.segments()]
    anti = not p1.shape_is_dominant and not p1.is_constant
    try:
        return from_segments(p1.system, p1.start, segs, antidominant=anti)
    except NonLambdaPath:
        half = Fraction(1, 2)
        raw = [(t0 * half, t1 * half, der) for t0, t1, der in p1.segments()]
        raw += [(half + t0 * half, half + t1 * half, der) for t0, t1, der in p2.segments()]
        return PiecewisePath(p1.system, p1.start, [(t0, t1, vscale(2, d)) for t0, t1, d in raw])


# -- chains ------------------------------------------------------------------


@dataclass(frozen=True)
class ChainCertificate:
    """Witness for the breakpoint condition of a Hecke or LS path."""

    t: Fraction
    kind: str  # "hecke" or "ls"
    roots: tuple  # tuple[RealRoot]
    xis: tuple  # tuple[Vec], length s + 1
    cosets: tuple  # tuple[WeylElement] minimal reps, length s + 1

    @property
    def s(self) -> int:
        return len(self.roots)


def _chain_candidates(system, shape, x, rep, kind, a_j, h):
    """Usable chain roots at coset rep, with the filter that failed when empty."""
    invs = system.inversion_set(rep)
    system.check_height(invs, h)
    out = []
    blocked = set()
    for beta in invs:
        if system.root_eval(beta, x).denominator != 1:
            # integrality at the point: condition vii, equivalently ii for LS
            blocked.add("vii" if kind == "hecke" else "ii")
            continue
        xi_new = system.reflect_by_root(beta, system.act(rep, shape))
        new_rep = system.coset_of_vector(xi_new, shape).element
        if kind == "ls":
            if new_rep.length != rep.length - 1:
                blocked.add("iii")
                continue
            if (Fraction(a_j) * system.root_eval(beta, xi_new)).denominator != 1:
                blocked.add("ii")
                continue
        out.append((beta, xi_new, new_rep))
    return out, blocked


def _chain_search(system, shape, x, xi_from, xi_to, kind, a_j, h):
    """Depth-first search for one chain from xi_from to xi_to at the point x.

    Returns (certificate | None, failing_condition | None).
    """
    xi_from = tuple(Fraction(v) for v in xi_from)
    xi_to = tuple(Fraction(v) for v in xi_to)
    start = system.coset_of_vector(xi_from, shape).element
    target_rep = system.coset_of_vector(xi_to, shape).element
    first_block = set()

    def dfs(rep, xi, roots, xis, cosets):
        if xi == xi_to:
            return ChainCertificate(Fraction(a_j if a_j is not None else 0), kind, tuple(roots), tuple(xis), tuple(cosets))
        if rep.length <= target_rep.length:
            return None
        cands, blocked = _chain_candidates(system, shape, x, rep, kind, a_j, h)
        if not roots:
            first_block.update(blocked)
        for beta, xi_new, new_rep in cands:
            found = dfs(new_rep, xi_new, roots + [beta], xis + [xi_new], cosets + [new_rep])
            if found is not None:
                return found
        return None

    cert = dfs(start, xi_from, [], [xi_from], [start])
    if cert is not None:
        return cert, None
    if "vii" in first_block and kind == "hecke":
        return None, "vii"
    for cond in ("ii", "iii", "vii"):
        if cond in first_block:
            return None, cond
    return None, "vi"


def chain_targets(system, shape, x, xi_from, h):
    """Every direction reachable from xi_from by a Hecke chain at x.

    Maps the reached vector to one witnessing certificate (prefixes of valid
    chains are valid chains, so this is a plain reachability closure).
    """
    xi_from = tuple(Fraction(v) for v in xi_from)
    start = system.coset_of_vector(xi_from, shape).element
    found = {}

    def dfs(rep, xi, roots, xis, cosets):
        for beta, xi_new, new_rep in _chain_candidates(system, shape, x, rep, "hecke", None, h)[0]:
            if xi_new not in found:
                found[xi_new] = ChainCertificate(
                    ZERO, "hecke", tuple(roots + [beta]), tuple(xis + [xi_new]), tuple(cosets + [new_rep])
                )
                dfs(new_rep, xi_new, roots + [beta], xis + [xi_new], cosets + [new_rep])

    dfs(start, xi_from, [], [xi_from], [start])
    return found


def all_chains(system, shape, x, xi_from, xi_to, h, kind="hecke", a_j=None):
    """All chains from xi_from to xi_to; used to pick maximal-length ones."""
    xi_from = tuple(Fraction(v) for v in xi_from)
    xi_to = tuple(Fraction(v) for v in xi_to)
    start = system.coset_of_vector(xi_from, shape).element
    out = []

    def dfs(rep, xi, roots, xis, cosets):
        if xi == xi_to:
            out.append(
                ChainCertificate(
                    Fraction(a_j if a_j is not None else 0), kind, tuple(roots), tuple(xis), tuple(cosets)
                )
            )
            # chains may not continue after reaching the target (tau_j != tau_{j+1} later)
        for beta, xi_new, new_rep in _chain_candidates(system, shape, x, rep, kind, a_j, h)[0]:
            dfs(new_rep, xi_new, roots + [beta], xis + [xi_new], cosets + [new_rep])

    dfs(start, xi_from, [], [xi_from], [start])
    return out


def find_chain(system, xi_from, xi_to, at_x, shape, kind="hecke", a_j=None, h=20):
    """One chain certificate from xi_from to xi_to at the point at_x, or None."""
    if kind not in ("hecke", "ls"):
        raise FormatError(f"unknown chain kind {kind!r}")
    cert, _ = _chain_search(system, tuple(map(Fraction, shape)), tuple(map(Fraction, at_x)), xi_from, xi_to, kind, a_j, h)
    return cert


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    certificates: tuple
    reason: str | None = None

    def __bool__(self):
        return self.ok


def is_hecke(path: LambdaPath, h: int = 20) -> CheckResult:
    """Check the chain condition at every interior breakpoint."""
    if path.is_constant:
        return CheckResult(True, ())
    if not path.shape_is_dominant:
        raise NotDominant("Hecke recognition applies to dominant-shape paths")
    certs = []
    for j in range(1, path.r):
        t = path.breakpoints[j]
        x = path.point(j)
        xi_from = path.direction_vector(j - 1)
        xi_to = path.direction_vector(j)
        cert, cond = _chain_search(path.system, path.shape, x, xi_from, xi_to, "hecke", t, h)
        if cert is None:
            return CheckResult(False, tuple(certs), f"condition {cond} fails at t={format_rational(t)}")
        certs.append(ChainCertificate(t, "hecke", cert.roots, cert.xis, cert.cosets))
    return CheckResult(True, tuple(certs))


def is_ls(path: LambdaPath, h: int = 20) -> CheckResult:
    """LS recognition plus, for paths in Y, the dual-dimension cross-check."""
    if path.is_constant:
        return CheckResult(True, ())
    if not path.shape_is_dominant:
        raise NotDominant("LS recognition applies to dominant-shape paths")
    sys_ = path.system
    result = None
    if not (is_integral_vec(path.start) and is_integral_vec(path.shape)):
        result = CheckResult(False, (), "path does not start in Y with integral shape")
    else:
        certs = []
        for j in range(1, path.r):
            t = path.breakpoints[j]
            x = path.point(j)
            cert, cond = _chain_search(
                sys_, path.shape, x, path.direction_vector(j - 1), path.direction_vector(j), "ls", t, h
            )
            if cert is None:
                result = CheckResult(
                    False, tuple(certs), f"condition {cond} fails at t={format_rational(t)}"
                )
                break
            certs.append(ChainCertificate(t, "ls", cert.roots, cert.xis, cert.cosets))
        if result is None:
            result = CheckResult(True, tuple(certs))
    if path.in_Y:
        rho_gap = sys_.rho_value(vsub(tuple(path.shape), path.nu))
        alt = is_hecke(path, h).ok and stats(path, h).ddim == rho_gap
        if alt != result.ok:
            raise CrossCheckMismatch(
                f"LS chain search says {result.ok}, Hecke+ddim characterization says {alt}"
            )
    return result


# -- statistics ---------------------------------------------------------------


@dataclass(frozen=True)
class PathStats:
    ddim: int
    codim: int
    dim: int | None
    pos: dict
    neg: dict
    pos_reverse: dict
    neg_reverse: dict


def _count_cross(u0, u1, kind):
    """Integer levels met on a segment, under four half-open time windows."""
    if kind == "pos":  # increasing, t in [t0, t1): values [u0, u1)
        return ceil(u1) - ceil(u0)
    if kind == "neg":  # decreasing, t in [t0, t1): values (u1, u0]
        return floor(u0) - floor(u1)
    if kind == "pos_rev":  # decreasing, t in (t0, t1]: values [u1, u0)
        return ceil(u0) - ceil(u1)
    if kind == "neg_rev":  # increasing, t in (t0, t1]: values (u0, u1]
        return floor(u1) - floor(u0)
    raise ValueError(kind)


def stats(path: LambdaPath, h: int = 20) -> PathStats:
    """Dual dimension, codimension and per-root wall tallies.

    ddim counts walls the path reaches from strictly above (over t > 0),
    codim counts walls it leaves strictly downward (over t < 1); candidates
    come from the inversion sets of the piece directions, so both sums are
    finite even for infinite root systems.  dim is only defined in finite
    type, where every positive root can be tallied.
    """
    sys_ = path.system
    candidates = set()
    for w in path.directions:
        invs = sys_.inversion_set(w)
        sys_.check_height(invs, h)
        candidates.update(invs)
    pos, neg, pos_rev, neg_rev = {}, {}, {}, {}
    cur = tuple(path.start)
    for t0, t1, der in path.segments():
        nxt = vadd(cur, vscale(t1 - t0, der))
        for beta in candidates:
            slope = sys_.root_eval(beta, der)
            if slope == 0:
                continue
            u0, u1 = sys_.root_eval(beta, cur), sys_.root_eval(beta, nxt)
            if slope > 0:
                pos[beta] = pos.get(beta, 0) + _count_cross(u0, u1, "pos")
                neg_rev[beta] = neg_rev.get(beta, 0) + _count_cross(u0, u1, "neg_rev")
            else:
                neg[beta] = neg.get(beta, 0) + _count_cross(u0, u1, "neg")
                pos_rev[beta] = pos_rev.get(beta, 0) + _count_cross(u0, u1, "pos_rev")
        cur = nxt
    ddim = sum(pos_rev.values())
    codim = sum(neg.values())
    dim = None
    if sys_.classify_type() == "finite":
        dim = 0
        cur = tuple(path.start)
        all_roots = _all_positive_roots(sys_)
        for t0, t1, der in path.segments():
            nxt = vadd(cur, vscale(t1 - t0, der))
            for beta in all_roots:
                if sys_.root_eval(beta, der) > 0:
                    dim += _count_cross(sys_.root_eval(beta, cur), sys_.root_eval(beta, nxt), "pos")
            cur = nxt
    return PathStats(ddim, codim, dim, pos, neg, pos_rev, neg_rev)


def _all_positive_roots(system: RootGeneratingSystem):
    if system.classify_type() != "finite":
        raise UnsupportedType("full positive root enumeration needs finite type")
    h = 1
    roots = system.real_roots_up_to_height(h)
    while True:
        more = system.real_roots_up_to_height(h + 1)
        if len(more) == len(roots):
            return roots
        roots, h = more, h + 1


def ddim_events(path: LambdaPath, h: int = 20):
    """Times t > 0 where walls are reached from above: list of (t, [roots]).

    Groups the ddim count by time; the roots at time t are exactly the true
    walls counted by the relative length of the incoming direction there.
    """
    sys_ = path.system
    events = {}
    cur = tuple(path.start)
    for t0, t1, der in path.segments():
        nxt = vadd(cur, vscale(t1 - t0, der))
        invs = sys_.inversion_set(
            sys_.coset_of_vector(der, path.shape, antidominant=not path.shape_is_dominant).element
        )
        sys_.check_height(invs, h)
        for beta in invs:
            slope = sys_.root_eval(beta, der)
            if slope >= 0:
                continue
            u0 = sys_.root_eval(beta, cur)
            u1 = sys_.root_eval(beta, nxt)
            m = ceil(u1)
            while m < u0:  # values in [u1, u0) hit at times in (t0, t1]
                t = t0 + (Fraction(m) - u0) / slope
                events.setdefault(t, []).append(beta)
                m += 1
        cur = nxt
    return sorted(events.items())


# -- root operators ------------------------------------------------------------


def _profile(path: LambdaPath, i: int):
    """Per-segment values of alpha_i along the path: (t0, t1, u0, u1)."""
    sys_ = path.system
    out = []
    cur = tuple(path.start)
    for t0, t1, der in path.segments():
        nxt = vadd(cur, vscale(t1 - t0, der))
        out.append((t0, t1, sys_.pairing(i, cur), sys_.pairing(i, nxt)))
        cur = nxt
    return out


def _min_integral(profile):
    best = None
    for _, _, u0, u1 in profile:
        lo, hi = min(u0, u1), max(u0, u1)
        m = ceil(lo)
        if m <= hi and (best is None or m < best):
            best = m
    return best


def _intervals_at_level(profile, c):
    """Maximal t-intervals where the profile equals c, in order."""
    raw = []
    for t0, t1, u0, u1 in profile:
        if u0 == u1:
            if u0 == c:
                raw.append((t0, t1))
            continue
        lo, hi = min(u0, u1), max(u0, u1)
        if lo <= c <= hi:
            t = t0 + (Fraction(c) - u0) * (t1 - t0) / (u1 - u0)
            raw.append((t, t))
    merged = []
    for lo, hi in raw:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
        else:
            merged.append((lo, hi))
    return merged


def _reflect_piece(path: LambdaPath, i: int, t_lo, t_hi) -> LambdaPath:
    segs = []
    for t0, t1, der in path.segments():
        cuts = sorted({t0, t1, *(t for t in (t_lo, t_hi) if t0 < t < t1)})
        for a, b in zip(cuts, cuts[1:]):
            d = der
            if t_lo <= a and b <= t_hi:
                d = path.system.simple_reflection(i, der)
            segs.append((b - a, d))
    anti = not path.shape_is_dominant and not path.is_constant
    return from_segments(path.system, path.start, segs, antidominant=anti)


def root_operator(kind: str, i: int, path: LambdaPath) -> LambdaPath:
    """Apply e_i, f_i or the endpoint-preserving etilde_i to the path.

    The cut levels are the minimal integral value Q attained by alpha_i
    along the path: e reflects the first descent from Q+1 to Q, f reflects
    the first ascent to Q+1 after the last visit to Q, etilde reflects the
    whole excursion strictly below Q.  Raises OperatorUndefined with the
    blocking reason when the cut does not exist.
    """
    if kind not in ("e", "f", "etilde"):
        raise FormatError(f"unknown operator kind {kind!r}")
    if not 0 <= i < path.system.n:
        raise FormatError(f"generator index {i} out of range")
    if not path.shape_is_dominant:
        raise NotDominant("root operators apply to dominant-shape paths")
    prof = _profile(path, i)
    q_min = _min_integral(prof)
    if q_min is None:
        raise OperatorUndefined(kind, i + 1, "alpha_i never attains an integral value on the path")
    at_q = _intervals_at_level(prof, q_min)
    if kind == "e":
        t1 = at_q[0][0]
        above = [min(hi, t1) for lo, hi in _intervals_at_level(prof, q_min + 1) if lo <= t1]
        if not above:
            raise OperatorUndefined(
                kind, i + 1, f"minimal integral value {q_min} is not reached from level {q_min + 1}"
                " (for a path from 0 this means the minimum is not <= -1)"
            )
        t0 = max(above)
        return _reflect_piece(path, i, t0, t1)
    if kind == "f":
        p = at_q[-1][1]
        below = [max(lo, p) for lo, hi in _intervals_at_level(prof, q_min + 1) if hi >= p]
        if not below:
            raise OperatorUndefined(
                kind, i + 1, f"path does not rise to level {q_min + 1} after its last minimum"
            )
        q = min(below)
        return _reflect_piece(path, i, p, q)
    # etilde
    if prof[0][2] < q_min:
        raise OperatorUndefined(kind, i + 1, "path starts below its minimal integral level")
    q = None
    for t0, t1, u0, u1 in prof:
        if min(u0, u1) < q_min:
            if u0 <= q_min:
                q = t0
            else:
                q = t0 + (Fraction(q_min) - u0) * (t1 - t0) / (u1 - u0)
            break
    if q is None:
        raise OperatorUndefined(kind, i + 1, "q = 1: the path never goes strictly below level Q")
    theta = None
    for lo, hi in at_q:
        if lo > q:
            theta = lo
            break
    if theta is None:
        raise OperatorUndefined(kind, i + 1, "path never returns to level Q after dipping below")
    return _reflect_piece(path, i, q, theta)


def try_operator(kind: str, i: int, path: LambdaPath):
    """root_operator, with None instead of OperatorUndefined."""
    try:
        return root_operator(kind, i, path)
    except OperatorUndefined:
        return None


# -- billiard check (bounded) ---------------------------------------------------


def is_billiard(path: LambdaPath, h: int = 20, orbit_cap: int = 2000) -> bool:
    """Bounded test that each outgoing direction is a local-Weyl image of the
    incoming one.  Sound on True; a False may mean the cap was hit."""
    sys_ = path.system
    roots = sys_.real_roots_up_to_height(h)
    for j in range(1, path.r):
        x = path.point(j)
        gens = [b for b in roots if sys_.root_eval(b, x).denominator == 1]
        xi_from = path.direction_vector(j - 1)
        xi_to = path.direction_vector(j)
        seen = {xi_from}
        frontier = [xi_from]
        ok = xi_from == xi_to
        while frontier and not ok and len(seen) < orbit_cap:
            nxt = []
            for xi in frontier:
                for b in gens:
                    img = sys_.reflect_by_root(b, xi)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
                        if img == xi_to:
                            ok = True
            frontier = nxt
        if not ok:
            return False
    return True


# -- serialization ---------------------------------------------------------------


def path_to_json_dict(path: LambdaPath) -> dict:
    return {
        "lambda": format_vector(path.shape),
        "start": format_vector(path.start),
        "directions": [[i + 1 for i in w.word] for w in path.directions],
        "breakpoints": [format_rational(b) for b in path.breakpoints],
    }


def path_from_json_dict(system: RootGeneratingSystem, data: dict) -> LambdaPath:
    try:
        shape = parse_vector(data["lambda"])
        start = parse_vector(data["start"])
        words = [
            tuple(int(parse_rational(i)) - 1 for i in word) for word in data["directions"]
        ]
        bps = [parse_rational(b) for b in data["breakpoints"]]
    except KeyError as exc:
        raise FormatError(f"path file is missing field {exc}") from exc
    if len(shape) != system.rank_x or len(start) != system.rank_x:
        raise FormatError(
            f"path vectors have {len(shape)} coordinates, system has rank {system.rank_x}"
        )
    return make_path(system, shape, start, words, bps)


def load_path(system: RootGeneratingSystem, filename) -> LambdaPath:
    try:
        with open(filename, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read path file {filename}: {exc}") from exc
    return path_from_json_dict(system, data)
