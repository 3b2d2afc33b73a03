"""Symmetrizable Kac-Moody root data: roots, Weyl group, Bruhat order, Tits cone.

All coordinates are exact rationals.  Points of the model space V = Y (x) Q are
tuples of Fraction in a fixed basis of the cocharacter lattice Y.  Real roots
are tracked formally as integer coefficient vectors over the simple roots
(together with the matching coroot coefficients), so root enumeration works
even when the evaluation covectors are degenerate.

Weyl group elements are stored as their ShortLex normal form, computed by
greedy left-descent extraction from the exact action on root coefficients;
equal group elements therefore always carry identical words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    FormatError,
    HeightBoundTooSmall,
    NotDominant,
    NotGCM,
    NotSymmetrizable,
)
from .linalg import (
    Vec,
    format_vector,
    is_integral_vec,
    mat_rank,
    nullspace,
    parse_vector,
    scale_to_primitive_integers,
    solve_linear,
    vsub,
    zero_vec,
)

_UNWIND_GUARD = 1_000_000


@dataclass(frozen=True)
class KacMoodyMatrix:
    """A generalized Cartan matrix with its index set 0..n-1."""

    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def validate_gcm(entries) -> KacMoodyMatrix:
    """Check the three Kac-Moody matrix axioms.

    >>> validate_gcm([[2, -1], [-1, 2]]).n
    2
    """
    rows = [tuple(row) for row in entries]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise FormatError("Cartan matrix must be square")
        for j, a in enumerate(row):
            if not isinstance(a, int) or isinstance(a, bool):
                raise FormatError(f"Cartan matrix entries must be integers, got {a!r}")
            if i == j and a != 2:
                raise NotGCM(i, j, "(i)")
            if i != j and a > 0:
                raise NotGCM(i, j, "(ii)")
    for i in range(n):
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotGCM(i, j, "(iii)")
    return KacMoodyMatrix(tuple(rows))


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element as its ShortLex-least reduced word."""

    word: tuple

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def __repr__(self):
        if not self.word:
            return "e"
        return "*".join(f"s{i + 1}" for i in self.word)


IDENTITY = WeylElement(())


@dataclass(frozen=True)
class RealRoot:
    """Real root as integer coefficients over the simple roots.

    ``coroot_coeffs`` are the coefficients of the associated coroot over the
    simple coroots; for a real root they are determined by the root, so
    equality and hashing use ``coeffs`` alone.
    """

    coeffs: tuple
    coroot_coeffs: tuple

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs) and any(c > 0 for c in self.coeffs)

    def negated(self) -> "RealRoot":
        return RealRoot(tuple(-c for c in self.coeffs), tuple(-c for c in self.coroot_coeffs))

    def __eq__(self, other):
        return isinstance(other, RealRoot) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}a{k + 1}" if c != 1 else f"a{k + 1}")
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class CosetRep:
    """Minimal-length representative of a class in W / W_lambda."""

    element: WeylElement
    stabilized_weight: Vec

    @property
    def length(self) -> int:
        return self.element.length


def _reflection_matrix(gcm, i):
    # action of r_i on root coefficient vectors: a_j -> a_j - a[i][j] a_i
    n = gcm.n
    rows = []
    for r in range(n):
        row = []
        for c in range(n):
            x = 1 if r == c else 0
            if r == i:
                x -= gcm[i, c]
            row.append(x)
        rows.append(tuple(row))
    return tuple(rows)


def _mat_mul_int(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n)
    )


def _identity_int(n):
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


class RootGeneratingSystem:
    """A Kac-Moody matrix together with an exact realization on Y = Z^rank_x.

    When only a matrix is given, simple coroots are the standard basis of
    Z^n and simple roots are the matrix columns; singular matrices get extra
    coordinates so that the simple roots stay linearly independent (the
    freedom condition), which the fundamental chamber and rho both need.
    """

    def __init__(self, gcm: KacMoodyMatrix, simple_roots, simple_coroots, names=None):
        self.gcm = gcm
        self.n = gcm.n
        self.simple_roots = tuple(tuple(Fraction(x) for x in r) for r in simple_roots)
        self.simple_coroots = tuple(tuple(Fraction(x) for x in c) for c in simple_coroots)
        self.rank_x = len(self.simple_roots[0]) if self.n else 0
        self.names = tuple(names) if names else tuple(f"a{i + 1}" for i in range(self.n))
        self._check_realization()
        self.symmetrizer = self._solve_symmetrizer(self.gcm.entries)
        self.rho = self._solve_rho()
        self._refl = tuple(_reflection_matrix(gcm, i) for i in range(self.n))
        self._norm_cache = {}
        self._roots_cache = []  # list of (height, RealRoot), sorted, grows monotonically
        self._roots_cache_bound = 0
        self._type_cache = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_gcm(cls, entries, names=None) -> "RootGeneratingSystem":
        gcm = validate_gcm(entries)
        n = gcm.n
        base_rows = [tuple(gcm[i, j] for j in range(n)) for i in range(n)]
        extra = []
        if mat_rank(base_rows) < n:
            for k in range(n):
                cand = [1 if j == k else 0 for j in range(n)]
                if mat_rank(base_rows + extra + [tuple(cand)]) > mat_rank(base_rows + extra):
                    extra.append(tuple(cand))
                if mat_rank(base_rows + extra) == n:
                    break
        rank_x = n + len(extra)
        simple_coroots = [
            tuple(Fraction(1) if t == i else Fraction(0) for t in range(rank_x)) for i in range(n)
        ]
        simple_roots = []
        for j in range(n):
            cov = [Fraction(gcm[i, j]) for i in range(n)]
            cov += [Fraction(row[j]) for row in extra]
            simple_roots.append(tuple(cov))
        return cls(gcm, simple_roots, simple_coroots, names)

    def _check_realization(self):
        for i in range(self.n):
            for j in range(self.n):
                got = vdot_cov(self.simple_roots[j], self.simple_coroots[i])
                if got != self.gcm[i, j]:
                    raise FormatError(
                        f"realization mismatch: alpha_{j + 1}(alpha_{i + 1}^v) = {got}, "
                        f"Cartan matrix says {self.gcm[i, j]}"
                    )
        if self.n:
            if mat_rank(self.simple_roots) < self.n:
                raise FormatError("simple roots are not linearly independent")
            if mat_rank(self.simple_coroots) < self.n:
                raise FormatError("simple coroots are not linearly independent")

    @staticmethod
    def _solve_symmetrizer(entries):
        # d_i a_ij = d_j a_ji, solved per connected component of the Dynkin diagram
        n = len(entries)
        d = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            d[start] = Fraction(1)
            queue = [start]
            while queue:
                i = queue.pop()
                for j in range(n):
                    if entries[i][j] == 0 or i == j:
                        continue
                    val = d[i] * Fraction(entries[i][j], entries[j][i])
                    if d[j] is None:
                        d[j] = val
                        queue.append(j)
                    elif d[j] != val:
                        raise NotSymmetrizable("inconsistent symmetrizer constraints")
        lcm = 1
        for q in d:
            lcm = lcm * q.denominator // gcd(lcm, q.denominator)
        ints = [int(q * lcm) for q in d]
        g = 0
        for x in ints:
            g = gcd(g, x)
        d = tuple(Fraction(x // g) for x in ints)
        for i in range(n):
            for j in range(n):
                if d[i] * entries[i][j] != d[j] * entries[j][i]:
                    raise NotSymmetrizable("matrix is not symmetrizable")
        return d

    def _solve_rho(self):
        if not self.n:
            return ()
        sol = solve_linear(self.simple_coroots, (Fraction(1),) * self.n)
        if sol is None:
            raise FormatError("no rational rho with rho(alpha_i^v) = 1 exists")
        return sol

    # -- basic geometry ----------------------------------------------------

    def zero(self) -> Vec:
        return zero_vec(self.rank_x)

    def pairing(self, i: int, v: Vec) -> Fraction:
        """alpha_i(v)."""
        return vdot_cov(self.simple_roots[i], v)

    def simple_reflection(self, i: int, v: Vec) -> Vec:
        """r_i(v) = v - alpha_i(v) alpha_i^v."""
        c = self.pairing(i, v)
        if c == 0:
            return tuple(v)
        return tuple(x - c * y for x, y in zip(v, self.simple_coroots[i]))

    def act(self, w: WeylElement, v: Vec) -> Vec:
        for i in reversed(w.word):
            v = self.simple_reflection(i, v)
        return v

    def root_covector(self, root: RealRoot) -> Vec:
        cov = [Fraction(0)] * self.rank_x
        for j, c in enumerate(root.coeffs):
            if c:
                for t in range(self.rank_x):
                    cov[t] += c * self.simple_roots[j][t]
        return tuple(cov)

    def root_eval(self, root: RealRoot, v: Vec) -> Fraction:
        return sum(
            (c * self.pairing(j, v) for j, c in enumerate(root.coeffs) if c), Fraction(0)
        )

    def coroot_vector(self, root: RealRoot) -> Vec:
        out = [Fraction(0)] * self.rank_x
        for i, c in enumerate(root.coroot_coeffs):
            if c:
                for t in range(self.rank_x):
                    out[t] += c * self.simple_coroots[i][t]
        return tuple(out)

    def reflect_by_root(self, root: RealRoot, v: Vec) -> Vec:
        c = self.root_eval(root, v)
        if c == 0:
            return tuple(v)
        cv = self.coroot_vector(root)
        return tuple(x - c * y for x, y in zip(v, cv))

    def simple_root_obj(self, i: int) -> RealRoot:
        e = tuple(1 if j == i else 0 for j in range(self.n))
        return RealRoot(e, e)

    def reflect_root(self, i: int, root: RealRoot) -> RealRoot:
        # formal r_i on both coefficient vectors
        a = self.gcm.entries
        pair = sum(a[i][j] * c for j, c in enumerate(root.coeffs))
        coeffs = list(root.coeffs)
        coeffs[i] -= pair
        pair_v = sum(a[k][i] * c for k, c in enumerate(root.coroot_coeffs))
        cc = list(root.coroot_coeffs)
        cc[i] -= pair_v
        return RealRoot(tuple(coeffs), tuple(cc))

    def rho_value(self, v: Vec) -> Fraction:
        """rho(v); canonical on the span of the coroots."""
        return vdot_cov(self.rho, v)

    def is_dominant(self, v: Vec) -> bool:
        return all(self.pairing(i, v) >= 0 for i in range(self.n))

    def is_antidominant(self, v: Vec) -> bool:
        return all(self.pairing(i, v) <= 0 for i in range(self.n))

    def in_Y(self, v: Vec) -> bool:
        return is_integral_vec(v)

    def coroot_coordinates(self, v: Vec):
        """Coefficients of v over the simple coroots, or None if outside their span."""
        cols = list(zip(*self.simple_coroots)) if self.n else []
        sol = solve_linear(cols, v) if self.n else None
        if sol is None:
            return None
        rebuilt = zero_vec(self.rank_x)
        for c, cr in zip(sol, self.simple_coroots):
            rebuilt = tuple(x + c * y for x, y in zip(rebuilt, cr))
        if rebuilt != tuple(Fraction(x) for x in v):
            return None
        return sol

    # -- normal forms ------------------------------------------------------

    def normalize_word(self, word) -> WeylElement:
        """Canonical (ShortLex-least reduced) form of a generator word.

        >>> s = RootGeneratingSystem.from_gcm([[2, -1], [-1, 2]])
        >>> s.normalize_word((0, 0)).word
        ()
        >>> s.normalize_word((0, 1, 0)) == s.normalize_word((1, 0, 1))
        True
        """
        word = tuple(word)
        for i in word:
            if not 0 <= i < self.n:
                raise FormatError(f"generator index {i} out of range")
        cached = self._norm_cache.get(word)
        if cached is not None:
            return cached
        n = self.n
        inv = _identity_int(n)  # matrix of w^{-1} on root coefficients
        for i in word:
            inv = _mat_mul_int(self._refl[i], inv)
        ident = _identity_int(n)
        out = []
        while inv != ident:
            for i in range(n):
                col = tuple(inv[r][i] for r in range(n))
                if all(x <= 0 for x in col):
                    out.append(i)
                    inv = _mat_mul_int(inv, self._refl[i])
                    break
            else:  # pragma: no cover - impossible for a genuine group element
                raise RuntimeError("no left descent found")
        result = WeylElement(tuple(out))
        self._norm_cache[word] = result
        return result

    def mult(self, w1: WeylElement, w2: WeylElement) -> WeylElement:
        return self.normalize_word(w1.word + w2.word)

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.normalize_word(tuple(reversed(w.word)))

    def reflection_element(self, root: RealRoot) -> WeylElement:
        """r_beta as a Weyl element, for beta = w(alpha_i) real."""
        # descend beta to a simple root, recording the conjugating word
        cur = root if root.is_positive else root.negated()
        word = []
        guard = 0
        while cur.height > 1:
            for i in range(self.n):
                img = self.reflect_root(i, cur)
                if 0 < img.height < cur.height:
                    word.append(i)
                    cur = img
                    break
            else:
                raise FormatError(f"{root!r} is not a real root")
            guard += 1
            if guard > _UNWIND_GUARD:  # pragma: no cover
                raise RuntimeError("reflection descent did not terminate")
        i = cur.coeffs.index(1)
        return self.normalize_word(tuple(word) + (i,) + tuple(reversed(word)))

    # -- inversions, Bruhat order, cosets -----------------------------------

    def inversion_set(self, w: WeylElement):
        """Positive roots sent negative by w^{-1}: beta_k = r_i1 ... r_i(k-1)(alpha_ik)."""
        out = []
        prefix = []
        for k, i in enumerate(w.word):
            beta = self.simple_root_obj(i)
            for j in reversed(prefix):
                beta = self.reflect_root(j, beta)
            out.append(beta)
            prefix.append(i)
        return out

    def is_left_descent(self, i: int, w: WeylElement) -> bool:
        """True iff length(s_i w) < length(w)."""
        if not w.word:
            return False
        if w.word[0] == i:
            return True
        return self.normalize_word((i,) + w.word).length < w.length

    def bruhat_leq(self, w: WeylElement, w2: WeylElement) -> bool:
        """Bruhat-Chevalley order, by the lifting property.

        >>> s = RootGeneratingSystem.from_gcm([[2, -1], [-1, 2]])
        >>> s.bruhat_leq(s.normalize_word((0,)), s.normalize_word((0, 1)))
        True
        """
        if w.length > w2.length:
            return False
        if not w.word:
            return True
        i = w2.word[0]  # a left descent of w2
        sw2 = self.normalize_word((i,) + w2.word)
        if self.is_left_descent(i, w):
            return self.bruhat_leq(self.normalize_word((i,) + w.word), sw2)
        return self.bruhat_leq(w, sw2)

    def orbit_unwind(self, v: Vec, antidominant=False):
        """Write v = w(v0) with v0 (anti)dominant and w the minimal coset rep.

        Repeatedly reflects at the least index whose pairing has the wrong
        sign; the collected word is reduced and minimal in w W_{v0}.
        """
        cur = tuple(Fraction(x) for x in v)
        letters = []
        for _ in range(_UNWIND_GUARD):
            for i in range(self.n):
                p = self.pairing(i, cur)
                if (p < 0 and not antidominant) or (p > 0 and antidominant):
                    letters.append(i)
                    cur = self.simple_reflection(i, cur)
                    break
            else:
                return cur, self.normalize_word(tuple(letters))
        raise RuntimeError("orbit unwind did not terminate; vector outside the Tits cone?")

    def min_coset_rep(self, w: WeylElement, lam: Vec) -> CosetRep:
        """Minimal-length element of w W_lambda, for dominant lambda."""
        if not self.is_dominant(lam):
            raise NotDominant("min_coset_rep needs a dominant weight")
        xi = self.act(w, lam)
        lam2, rep = self.orbit_unwind(xi)
        assert lam2 == tuple(Fraction(x) for x in lam)
        return CosetRep(rep, tuple(Fraction(x) for x in lam))

    def coset_of_vector(self, xi: Vec, lam: Vec, antidominant=False) -> CosetRep:
        """The coset rep tau with tau(lambda) = xi, given xi in the orbit of lambda."""
        lam2, rep = self.orbit_unwind(xi, antidominant=antidominant)
        if lam2 != tuple(Fraction(x) for x in lam):
            raise FormatError("vector is not in the Weyl orbit of the shape")
        return CosetRep(rep, lam2)

    def coset_bruhat_leq(self, a: CosetRep, b: CosetRep) -> bool:
        return self.bruhat_leq(a.element, b.element)

    # -- root enumeration ----------------------------------------------------

    def real_roots_up_to_height(self, h: int):
        """All positive real roots of height <= h, sorted by (height, coeffs).

        Breadth-first closure of the simple roots under the simple
        reflections; exhaustive because every positive real root descends to
        a simple root through positive roots of strictly smaller height.
        """
        if h < 1:
            return []
        if h <= self._roots_cache_bound:
            return [r for ht, r in self._roots_cache if ht <= h]
        seen = {r for _, r in self._roots_cache}
        frontier = list(seen) if seen else [self.simple_root_obj(i) for i in range(self.n)]
        for r in frontier:
            seen.add(r)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(self.n):
                    img = self.reflect_root(i, beta)
                    if img.is_positive and img.height <= h and img not in seen:
                        seen.add(img)
                        new.append(img)
            frontier = new
        self._roots_cache = sorted(((r.height, r) for r in seen), key=lambda p: (p[0], p[1].coeffs))
        self._roots_cache_bound = h
        return [r for ht, r in self._roots_cache if ht <= h]

    def check_height(self, roots, h: int):
        worst = max((r.height for r in roots), default=0)
        if worst > h:
            raise HeightBoundTooSmall(worst, h)

    def relative_length(self, x: Vec, w: WeylElement, h: int) -> int:
        """Number of inversion roots of w taking an integer value at x."""
        invs = self.inversion_set(w)
        self.check_height(invs, h)
        return sum(1 for beta in invs if self.root_eval(beta, x).denominator == 1)

    # -- type classification and the Tits cone ------------------------------

    def classify_type(self) -> str:
        """"finite", "affine" (corank 1 with positive null covector) or "indefinite"."""
        if self._type_cache is not None:
            return self._type_cache
        a = self.gcm.entries
        n = self.n
        sym = [[self.symmetrizer[i] * a[i][j] for j in range(n)] for i in range(n)]
        posdef = True
        for k in range(1, n + 1):
            minor = [row[:k] for row in sym[:k]]
            if _det(minor) <= 0:
                posdef = False
                break
        if posdef:
            self._type_cache = "finite"
            return "finite"
        cols = [tuple(a[i][j] for i in range(n)) for j in range(n)]
        ker = nullspace(list(zip(*cols)))  # right kernel of A
        if len(ker) == 1:
            c = ker[0]
            if all(x > 0 for x in c) or all(x < 0 for x in c):
                self._type_cache = "affine"
                return "affine"
        self._type_cache = "indefinite"
        return "indefinite"

    def null_root_coeffs(self):
        """Primitive positive integer coefficients of delta (affine type only)."""
        a = self.gcm.entries
        n = self.n
        ker = nullspace(a)
        assert len(ker) == 1
        c = ker[0]
        if any(x < 0 for x in c):
            c = tuple(-x for x in c)
        return tuple(int(x) for x in scale_to_primitive_integers(c))

    def delta_covector(self) -> Vec:
        c = self.null_root_coeffs()
        cov = [Fraction(0)] * self.rank_x
        for j, coef in enumerate(c):
            for t in range(self.rank_x):
                cov[t] += coef * self.simple_roots[j][t]
        return tuple(cov)

    def tits_cone_membership(self, v: Vec, step_cap: int = 10000):
        """Decide v in T; returns ("in", witness) / ("out", None) / ("unknown", None)."""
        kind = self.classify_type()
        v = tuple(Fraction(x) for x in v)
        if kind == "finite":
            _, w = self.orbit_unwind(v)
            return ("in", self.inverse(w))  # witness w with w(v) dominant
        if kind == "affine":
            level = vdot_cov(self.delta_covector(), v)
            if level > 0:
                _, w = self.orbit_unwind(v)
                return ("in", self.inverse(w))
            if level == 0:
                if all(self.pairing(i, v) == 0 for i in range(self.n)):
                    return ("in", IDENTITY)
                return ("out", None)
            return ("out", None)
        cur = v
        letters = []
        for _ in range(step_cap):
            for i in range(self.n):
                if self.pairing(i, cur) < 0:
                    letters.append(i)
                    cur = self.simple_reflection(i, cur)
                    break
            else:
                return ("in", self.normalize_word(tuple(reversed(letters))))
        return ("unknown", None)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "cartan_matrix": [list(row) for row in self.gcm.entries],
            "names": list(self.names),
            "rank_x": self.rank_x,
            "simple_roots": [format_vector(r) for r in self.simple_roots],
            "simple_coroots": [format_vector(c) for c in self.simple_coroots],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RootGeneratingSystem":
        if "cartan_matrix" not in data:
            raise FormatError("system file needs a 'cartan_matrix' field")
        gcm_entries = data["cartan_matrix"]
        names = data.get("names")
        if "simple_roots" in data or "simple_coroots" in data:
            if not ("simple_roots" in data and "simple_coroots" in data):
                raise FormatError("simple_roots and simple_coroots must be supplied together")
            gcm = validate_gcm(gcm_entries)
            roots = [parse_vector(r) for r in data["simple_roots"]]
            coroots = [parse_vector(c) for c in data["simple_coroots"]]
            rank_x = data.get("rank_x", len(roots[0]) if roots else 0)
            if roots and len(roots[0]) != rank_x:
                raise FormatError("rank_x does not match the supplied covectors")
            return cls(gcm, roots, coroots, names)
        return cls.from_gcm(gcm_entries, names)

    @classmethod
    def load(cls, path) -> "RootGeneratingSystem":
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise FormatError(f"cannot read system file {path}: {exc}") from exc
        return cls.from_json_dict(data)

    def __repr__(self):
        return f"RootGeneratingSystem({self.gcm.entries!r})"


def vdot_cov(cov, v) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(cov, v, strict=True)), Fraction(0))


def _det(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det


def dominance_difference(system: RootGeneratingSystem, lam: Vec, mu: Vec):
    """Coefficients of lam - mu over the simple coroots if non-negative integers, else None."""
    diff = vsub(tuple(Fraction(x) for x in lam), tuple(Fraction(x) for x in mu))
    coords = system.coroot_coordinates(diff)
    if coords is None:
        return None
    if any(c < 0 or Fraction(c).denominator != 1 for c in coords):
        return None
    return tuple(int(c) for c in coords)
