"""Crystal generation, weight multiplicities and exhaustive Hecke enumeration.

Two independent routes to the same numbers: counting LS paths generated by
the lowering operators, and the Freudenthal recursion run on the dual side
(the paths live in the cocharacter lattice, so the relevant highest-weight
modules are those of the Langlands dual algebra).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from .errors import CapHit, FormatError, NotDominant, UnsupportedType
from .linalg import (
    Vec,
    format_vector,
    is_integral_vec,
    is_zero_vec,
    nullspace,
    scale_to_primitive_integers,
    vadd,
    vscale,
    vsub,
    zero_vec,
)
from .paths import (
    ChainCertificate,
    LambdaPath,
    chain_targets,
    from_segments,
    path_to_json_dict,
    straight_path,
    try_operator,
)
from .root_system import RootGeneratingSystem, dominance_difference

ZERO = Fraction(0)
ONE = Fraction(1)


# -- crystal generation ---------------------------------------------------------


@dataclass(frozen=True)
class CrystalGraph:
    system: RootGeneratingSystem = field(compare=False, repr=False, hash=False)
    shape: Vec = ()
    nodes: tuple = ()  # tuple[LambdaPath], generation order
    edges: tuple = ()  # tuple[(src_index, i, dst_index)]
    depth_cap: int = 0
    partial: bool = False
    completed_depth: int | None = None  # deepest fully generated layer

    def endpoint_counts(self) -> dict:
        out = {}
        for node in self.nodes:
            out[node.endpoint] = out.get(node.endpoint, 0) + 1
        return out

    def to_json_dict(self) -> dict:
        return {
            "shape": format_vector(self.shape),
            "partial": self.partial,
            "completed_depth": self.completed_depth,
            "nodes": [
                {"id": k, "path": path_to_json_dict(p), "endpoint": format_vector(p.endpoint)}
                for k, p in enumerate(self.nodes)
            ],
            "edges": [{"source": a, "op": f"f{i + 1}", "target": b} for a, i, b in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for k, p in enumerate(self.nodes):
            label = ",".join(format_vector(p.endpoint))
            lines.append(f'  n{k} [label="{label}"];')
        for a, i, b in self.edges:
            lines.append(f'  n{a} -> n{b} [label="f{i + 1}"];')
        lines.append("}")
        return "\n".join(lines)


def generate_ls_paths(system: RootGeneratingSystem, lam, depth_cap: int = 200, h: int = 20) -> CrystalGraph:
    """Close {straight path} under the lowering operators f_i, layer by layer.

    The cap counts successful f-applications; when it trips the graph is
    returned flagged partial, with completed_depth naming the last layer that
    is provably complete.
    """
    lam = tuple(Fraction(x) for x in lam)
    if not system.is_dominant(lam):
        raise NotDominant("crystal generation needs a dominant shape")
    if not is_integral_vec(lam):
        raise NotDominant("crystal generation needs a shape in Y")
    top = straight_path(system, lam)
    nodes = [top]
    index = {top: 0}
    edges = []
    layer = [top]
    depth = 0
    applications = 0
    partial = False
    while layer and not partial:
        if applications >= depth_cap:
            partial = True
            break
        nxt = []
        for node in layer:
            for i in range(system.n):
                child = try_operator("f", i, node)
                if child is None:
                    continue
                applications += 1
                if child not in index:
                    index[child] = len(nodes)
                    nodes.append(child)
                    nxt.append(child)
                edges.append((index[node], i, index[child]))
        depth += 1
        layer = nxt
    completed = depth - (1 if partial else 0) if partial else depth
    return CrystalGraph(
        system, lam, tuple(nodes), tuple(edges), depth_cap, partial, completed
    )


def multiplicity(system: RootGeneratingSystem, lam, mu, depth_cap: int = 200, h: int = 20, graph=None) -> int:
    """Number of LS paths of the given shape from 0 to mu."""
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    diff = dominance_difference(system, lam, mu)
    if diff is None:
        return 0
    if graph is None:
        graph = generate_ls_paths(system, lam, depth_cap, h)
    depth_needed = sum(diff)
    if graph.partial and depth_needed > graph.completed_depth:
        raise CapHit(
            f"weight at depth {depth_needed} lies beyond the completed depth {graph.completed_depth}"
        )
    return sum(1 for node in graph.nodes if node.endpoint == mu)


def multiplicity_table(system: RootGeneratingSystem, lam, depth_cap: int = 200, h: int = 20) -> dict:
    """Endpoint -> LS path count for every weight the generation reached."""
    graph = generate_ls_paths(system, lam, depth_cap, h)
    return graph.endpoint_counts()


# -- Freudenthal oracle -----------------------------------------------------------


class _DualData:
    """Root data of the Langlands dual, expressed inside Y.

    Positive roots of the dual are our coroots; a dual root is carried as its
    integer coefficient tuple over the simple coroots, and pairs with points
    of Y through the symmetrized form normalized by the dual symmetrizer.
    """

    def __init__(self, system: RootGeneratingSystem):
        self.system = system
        a = system.gcm.entries
        n = system.n
        # symmetrizer of the transposed matrix
        self.dsym = RootGeneratingSystem._solve_symmetrizer(
            [[a[j][i] for j in range(n)] for i in range(n)]
        )
        self.kind = system.classify_type()
        if self.kind == "indefinite":
            raise UnsupportedType("Freudenthal oracle supports finite and untwisted affine type only")
        self.delta = None
        self.imag_mult = 0
        if self.kind == "affine":
            ker = nullspace([[a[j][i] for j in range(n)] for i in range(n)])  # left kernel of A
            assert len(ker) == 1
            c = ker[0]
            if any(x < 0 for x in c):
                c = tuple(-x for x in c)
            self.delta = tuple(int(x) for x in scale_to_primitive_integers(c))
            self.imag_mult = n - 1

    def real_duals_up_to_height(self, h):
        """Positive real dual roots as coroot-coefficient tuples, height <= h."""
        sys_ = self.system
        seen = set()
        frontier = []
        for i in range(sys_.n):
            e = tuple(1 if j == i else 0 for j in range(sys_.n))
            seen.add(e)
            frontier.append(e)
        a = sys_.gcm.entries
        while frontier:
            new = []
            for c in frontier:
                for i in range(sys_.n):
                    pair = sum(a[k][i] * ck for k, ck in enumerate(c))
                    img = list(c)
                    img[i] -= pair
                    img = tuple(img)
                    if all(x >= 0 for x in img) and sum(img) <= h and img not in seen:
                        seen.add(img)
                        new.append(img)
            frontier = new
        return sorted(seen, key=lambda c: (sum(c), c))

    def dual_vector(self, coeffs) -> Vec:
        v = zero_vec(self.system.rank_x)
        for i, c in enumerate(coeffs):
            if c:
                v = vadd(v, vscale(c, self.system.simple_coroots[i]))
        return v

    def pair(self, coeffs, v) -> Fraction:
        """(dual root with these coefficients, v), for v in Y x Q."""
        return sum(
            (Fraction(c) * self.dsym[i] * self.system.pairing(i, v) for i, c in enumerate(coeffs) if c),
            ZERO,
        )


def freudenthal_multiplicity(system: RootGeneratingSystem, lam, mu, cache=None) -> int:
    """Weight multiplicity of mu in the dual highest-weight module V(lam).

    Standard Freudenthal recursion over dominant weights; in untwisted affine
    type the imaginary roots n*delta enter with multiplicity = rank of the
    underlying finite-type subsystem.  A dict may be passed as cache to share
    the recursion between calls with the same lam.
    """
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    if not system.is_dominant(lam) or not is_integral_vec(lam):
        raise NotDominant("Freudenthal needs a dominant highest weight in Y")
    dual = _DualData(system)
    if cache is None:
        cache = {}

    def dominant_mult(nu):
        if nu == lam:
            return 1
        if nu in cache:
            return cache[nu]
        diff = dominance_difference(system, lam, nu)
        if diff is None:
            cache[nu] = 0
            return 0
        height = sum(diff)
        total = ZERO
        for coeffs in dual.real_duals_up_to_height(height):
            step = dual.dual_vector(coeffs)
            k = 1
            while True:
                upper = vadd(nu, vscale(k, step))
                if dominance_difference(system, lam, upper) is None:
                    break
                m = mult(upper)
                if m:
                    total += m * (dual.pair(coeffs, nu) + k * dual.pair(coeffs, step))
                k += 1
        if dual.kind == "affine":
            for nmult in range(1, height + 1):
                coeffs = tuple(nmult * c for c in dual.delta)
                step = dual.dual_vector(coeffs)
                k = 1
                while True:
                    upper = vadd(nu, vscale(k, step))
                    if dominance_difference(system, lam, upper) is None:
                        break
                    m = mult(upper)
                    if m:
                        total += dual.imag_mult * m * (
                            dual.pair(coeffs, nu) + k * dual.pair(coeffs, step)
                        )
                    k += 1
        lam_minus_nu = vsub(lam, nu)
        coords = system.coroot_coordinates(lam_minus_nu)
        denom = dual.pair(tuple(coords), vadd(lam, nu)) + 2 * sum(
            Fraction(c) * d for c, d in zip(coords, dual.dsym)
        )
        assert denom > 0, "Freudenthal denominator must be positive below the highest weight"
        value = 2 * total / denom
        assert value.denominator == 1 and value >= 0
        cache[nu] = int(value)
        return cache[nu]

    def mult(nu):
        dom, _ = system.orbit_unwind(nu)
        if not is_integral_vec(dom):
            return 0
        return dominant_mult(dom)

    return mult(mu)


# -- exhaustive Hecke enumeration ---------------------------------------------------


@dataclass(frozen=True)
class HeckePathWitness:
    path: LambdaPath
    certificates: tuple  # one ChainCertificate per interior breakpoint


def _cosets_up_to_length(system: RootGeneratingSystem, lam, max_len: int):
    """Orbit vectors of lam whose minimal coset representative has length <= max_len."""
    lam = tuple(Fraction(x) for x in lam)
    out = {lam: system.coset_of_vector(lam, lam).element}
    layer = [lam]
    for _ in range(max_len):
        nxt = []
        for v in layer:
            for i in range(system.n):
                if system.pairing(i, v) > 0:
                    img = system.simple_reflection(i, v)
                    if img not in out:
                        out[img] = system.coset_of_vector(img, lam).element
                        nxt.append(img)
        layer = nxt
    return out


def enumerate_hecke(system: RootGeneratingSystem, lam, y0, y1, h: int = 20):
    """The complete finite list of Hecke paths of shape lam from y0 to y1.

    Depth-first search over (current point, current direction): fold times
    are the parameters where some inversion root of the current direction
    meets an integer level, and new directions are the cosets reachable by a
    chain there.  The first direction's length is capped by 2 rho(lam - nu),
    which bounds the codimension of any qualifying path.
    """
    lam = tuple(Fraction(x) for x in lam)
    y0 = tuple(Fraction(x) for x in y0)
    y1 = tuple(Fraction(x) for x in y1)
    if not system.is_dominant(lam):
        raise NotDominant("enumerate_hecke needs a dominant shape")
    if not (is_integral_vec(lam) and is_integral_vec(y0) and is_integral_vec(y1)):
        raise FormatError("enumerate_hecke endpoints and shape must lie in Y")
    if is_zero_vec(lam):
        if y0 == y1:
            return [HeckePathWitness(straight_path(system, lam, y0), ())]
        return []
    nu = vsub(y1, y0)
    gap = dominance_difference(system, lam, nu)
    if gap is None:
        return []
    max_len = 2 * sum(gap)
    found = {}

    def descend(x, t, xi, certs):
        remaining = vsub(y1, x)
        if remaining == vscale(ONE - t, xi):
            segs.append((ONE - t, xi))
            path = from_segments(system, y0, list(segs))
            if path not in found:
                found[path] = tuple(certs)
            segs.pop()
        rep = system.coset_of_vector(xi, lam).element
        if rep.is_identity:
            return
        invs = system.inversion_set(rep)
        system.check_height(invs, h)
        times = set()
        for beta in invs:
            slope = system.root_eval(beta, xi)
            if slope == 0:
                continue
            u0 = system.root_eval(beta, x)
            k = 1
            while True:
                # walls met strictly inside (t, 1)
                target = Fraction(floor(u0) + k) if slope > 0 else Fraction(ceil(u0) - k)
                ta = t + (target - u0) / slope
                if not t < ta < 1:
                    break
                times.add(ta)
                k += 1
        for ta in sorted(times):
            z = vadd(x, vscale(ta - t, xi))
            for xi_new, cert in sorted(
                chain_targets(system, lam, z, xi, h).items(), key=lambda kv: kv[0]
            ):
                segs.append((ta - t, xi))
                descend(
                    z,
                    ta,
                    xi_new,
                    certs + [ChainCertificate(ta, "hecke", cert.roots, cert.xis, cert.cosets)],
                )
                segs.pop()

    segs = []
    for start_vec in sorted(_cosets_up_to_length(system, lam, max_len)):
        descend(y0, ZERO, start_vec, [])
    ordered = sorted(
        found.items(), key=lambda kv: (kv[0].breakpoints, tuple(w.word for w in kv[0].directions))
    )
    return [HeckePathWitness(p, c) for p, c in ordered]
