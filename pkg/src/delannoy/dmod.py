"""Finite modules over the tilting combinatorial category.

Morphism spaces between weights are at most one-dimensional: lam -> mu is
nonzero exactly when lam = mu, or mu extends lam by a nonempty alternating
word ending white, or lam extends mu by one ending black.  Distinguished
morphisms compose to the distinguished morphism when it exists and to zero
otherwise.  A finite module stores one matrix per nonzero distinguished
morphism between supported weights; the only relations are composition
consistency, which is validated by a direct scan.
"""

import random
from dataclasses import dataclass

from .fields import QQ
from .linalg import (SpanBuilder, column_space_basis, eye, mat_eq, mat_is_zero,
                     mat_mul, mat_transpose, mat_vec, nullspace, rank, solve,
                     zeros)
from .weights import dual as dual_weight, is_alternating, sort_key


def dist_hom_nonzero(lam, mu):
    """Whether the distinguished morphism lam -> mu is nonzero."""
    if lam == mu:
        return True
    if len(mu) > len(lam) and mu.startswith(lam):
        tail = mu[len(lam):]
        return tail.endswith("w") and is_alternating(tail)
    if len(lam) > len(mu) and lam.startswith(mu):
        tail = lam[len(mu):]
        return tail.endswith("b") and is_alternating(tail)
    return False


@dataclass(frozen=True)
class DistHom:
    src: str
    dst: str

    @property
    def nonzero(self):
        return dist_hom_nonzero(self.src, self.dst)


def dist_hom(lam, mu):
    return DistHom(lam, mu)


def compose_dist(f, g):
    """The composite of distinguished morphisms f then g (dst(f) = src(g)).

    Returns the distinguished morphism src(f) -> dst(g); it is the zero
    morphism of that pair exactly when its `nonzero` flag is False.
    """
    if f.dst != g.src:
        raise ValueError("non-composable distinguished morphisms")
    return DistHom(f.src, g.dst)


# ---------------------------------------------------------------------------
# Basic morphisms and unique factorization.
# ---------------------------------------------------------------------------

def is_basic(lam, mu):
    """The six generator shapes into which every morphism factors."""
    if lam == mu + "wb":                                      # remove 'wb'
        return True
    if mu == lam + "bw":                                      # append 'bw'
        return True
    if mu == lam + "w" and not lam.endswith("b"):             # append 'w'
        return True
    if lam == mu + "b" and not mu.endswith("w"):              # remove 'b'
        return True
    return False


def _factor_up(lam, alpha):
    """Basic chain realizing lam -> lam + alpha, alpha alternating ending w."""
    if not alpha:
        return []
    if len(alpha) % 2 == 0:
        # alpha = (bw)^j: append 'bw' repeatedly
        steps = []
        cur = lam
        for _ in range(len(alpha) // 2):
            steps.append((cur, cur + "bw"))
            cur += "bw"
        return steps
    if not lam.endswith("b"):
        # alpha = w (bw)^j: append 'w' first
        return [(lam, lam + "w")] + _factor_up(lam + "w", alpha[1:])
    if lam.endswith("wb"):
        base = lam[:-2]
        return [(lam, base)] + _factor_up(base, "wb" + alpha)
    # lam ends 'bb' or is a lone 'b': remove the final 'b'
    return [(lam, lam[:-1])] + _factor_up(lam[:-1], "b" + alpha)


def basic_factorization(f):
    """The unique factorization of a nonzero morphism into basic morphisms.

    Returns the list of (src, dst) basic steps; empty for an identity.  The
    downward case is obtained from the upward one by duality.
    """
    if not f.nonzero:
        raise ValueError("cannot factor the zero morphism")
    lam, mu = f.src, f.dst
    if lam == mu:
        return []
    if len(mu) > len(lam):
        steps = _factor_up(lam, mu[len(lam):])
    else:
        dual_steps = _factor_up(dual_weight(mu), dual_weight(lam)[len(mu):])
        steps = [(dual_weight(b), dual_weight(a)) for a, b in reversed(dual_steps)]
    for a, b in steps:
        if not is_basic(a, b):
            raise AssertionError(f"non-basic step {a!r} -> {b!r}")
    cur = lam
    for a, b in steps:
        if a != cur or not dist_hom_nonzero(a, b):
            raise AssertionError("factorization chain broken")
        cur = b
    if cur != mu:
        raise AssertionError("factorization does not reach the target")
    return steps


def basic_targets(lam):
    """All mu with a basic morphism lam -> mu (the Ext^1 quiver arrows)."""
    out = [lam + "bw"]
    if not lam.endswith("b"):
        out.append(lam + "w")
    if lam.endswith("wb"):
        out.append(lam[:-2])
    if lam.endswith("b") and not lam[:-1].endswith("w"):
        out.append(lam[:-1])
    return out


# ---------------------------------------------------------------------------
# Modules.
# ---------------------------------------------------------------------------

class DModule:
    """A finite module: dims per weight plus one matrix per nonzero hom."""

    def __init__(self, dims, maps, field=QQ, validate=True):
        self.field = field
        self.dims = {lam: d for lam, d in dims.items() if d > 0}
        self.maps = {k: m for k, m in maps.items() if not mat_is_zero(m, field)}
        if validate:
            self._validate()

    def dim(self, lam):
        return self.dims.get(lam, 0)

    @property
    def support(self):
        return sorted(self.dims, key=sort_key)

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def is_zero(self):
        return not self.dims

    def matrix(self, lam, mu):
        """The action matrix of the distinguished morphism lam -> mu."""
        if lam == mu:
            return eye(self.dim(lam), self.field)
        m = self.maps.get((lam, mu))
        if m is not None:
            return m
        return zeros(self.dim(mu), self.dim(lam), self.field)

    def _pairs(self):
        supp = self.support
        for lam in supp:
            for mu in supp:
                if lam != mu and dist_hom_nonzero(lam, mu):
                    yield lam, mu

    def _validate(self):
        f = self.field
        for (lam, mu), m in self.maps.items():
            if lam == mu or not dist_hom_nonzero(lam, mu):
                raise ValueError(f"matrix on a zero hom {lam!r} -> {mu!r}")
            if len(m) != self.dim(mu) or any(len(r) != self.dim(lam) for r in m):
                raise ValueError(f"shape mismatch at {lam!r} -> {mu!r}")
        supp = self.support
        for lam, mu in self._pairs():
            for nu in supp:
                if nu == mu or not dist_hom_nonzero(mu, nu):
                    continue
                comp = mat_mul(self.matrix(mu, nu), self.matrix(lam, mu), f)
                if dist_hom_nonzero(lam, nu) and lam != nu:
                    if not mat_eq(comp, self.matrix(lam, nu), f):
                        raise ValueError(
                            f"composition inconsistent: {lam!r}->{mu!r}->{nu!r}")
                elif lam == nu:
                    if not mat_eq(comp, self.matrix(lam, lam), f):
                        raise ValueError(
                            f"composite through {mu!r} is not the identity")
                else:
                    if not mat_is_zero(comp, f):
                        raise ValueError(
                            f"composite {lam!r}->{mu!r}->{nu!r} should vanish")
        return self

    def __eq__(self, other):
        if not isinstance(other, DModule):
            return NotImplemented
        if self.dims != other.dims or self.field != other.field:
            return False
        f = self.field
        keys = set(self.maps) | set(other.maps)
        return all(mat_eq(self.matrix(*k), other.matrix(*k), f) for k in keys)

    def __repr__(self):
        parts = ", ".join(f"{lam or 'e'}:{d}" for lam, d in
                          sorted(self.dims.items(), key=lambda kv: sort_key(kv[0])))
        return f"DModule({{{parts}}})"


def zero_dmodule(field=QQ):
    return DModule({}, {}, field)


def full_dmodule(support, field=QQ):
    """The full module on a support: dims 1, identity on nonzero homs.

    Raises if some vanishing composite would be forced to be the identity
    (the full module then does not exist).
    """
    supp = set(support)
    dims = {lam: 1 for lam in supp}
    maps = {}
    one = [[field.one]]
    for lam in supp:
        for mu in supp:
            if lam != mu and dist_hom_nonzero(lam, mu):
                maps[(lam, mu)] = one
    return DModule(dims, maps, field)


def _prefixes_with_tail(lam, final):
    """Prefixes mu of lam whose complement is alternating (ending `final`)."""
    out = []
    for cut in range(len(lam)):
        tail = lam[cut:]
        if is_alternating(tail) and (final is None or tail.endswith(final)):
            out.append(lam[:cut])
    return out


def named_dmodule(kind, lam, field=QQ):
    """The named modules: S (simple), Delta, Nabla, T (tilting)."""
    if kind == "S":
        supp = {lam}
    elif kind == "Delta":
        supp = {lam, *_prefixes_with_tail(lam, "b")}
    elif kind == "Nabla":
        supp = {lam, *_prefixes_with_tail(lam, "w")}
    elif kind == "T":
        supp = {lam, *_prefixes_with_tail(lam, None)}
    else:
        raise ValueError(f"unknown module kind {kind!r}")
    return full_dmodule(supp, field)


def truncated_projective(lam, max_len, field=QQ):
    """The projective at lam, truncated to weights of length <= max_len."""
    from .weights import alternating_suffixes
    supp = {lam}
    supp.update(lam + w for w in alternating_suffixes(max_len - len(lam), "w")
                if len(lam + w) <= max_len)
    supp.update(mu for mu in _upward_extensions(lam, max_len))
    return full_dmodule(supp, field)


def _upward_extensions(lam, max_len):
    # weights mu with lam in mu * (alternating ending b); mu is a prefix
    return _prefixes_with_tail(lam, "b")


def dual_dmodule(m):
    """Pointwise dual: M*(lam) = M(dual lam)^t; exact involution."""
    f = m.field
    dims = {dual_weight(lam): d for lam, d in m.dims.items()}
    maps = {}
    for (lam, mu), mat in m.maps.items():
        maps[(dual_weight(mu), dual_weight(lam))] = mat_transpose(
            mat, ncols=m.dim(lam))
    return DModule(dims, maps, f)


# ---------------------------------------------------------------------------
# Module maps and radical filtrations.
# ---------------------------------------------------------------------------

@dataclass
class DModuleMap:
    src: DModule
    dst: DModule
    comps: dict

    def component(self, lam):
        m = self.comps.get(lam)
        if m is not None:
            return m
        return zeros(self.dst.dim(lam), self.src.dim(lam), self.src.field)

    def is_zero(self):
        f = self.src.field
        return all(mat_is_zero(m, f) for m in self.comps.values())

    def validate(self):
        f = self.src.field
        supp = set(self.src.dims) | set(self.dst.dims)
        for lam in supp:
            for mu in supp:
                if lam == mu or not dist_hom_nonzero(lam, mu):
                    continue
                left = mat_mul(self.component(mu), self.src.matrix(lam, mu), f)
                right = mat_mul(self.dst.matrix(lam, mu), self.component(lam), f)
                if not mat_eq(left, right, f):
                    raise ValueError(f"square fails at {lam!r} -> {mu!r}")
        return self

    def scale(self, c):
        f = self.src.field
        return DModuleMap(self.src, self.dst,
                          {lam: [[f.mul(c, x) for x in row] for row in m]
                           for lam, m in self.comps.items()})

    def __add__(self, other):
        f = self.src.field
        out = {}
        for lam in set(self.comps) | set(other.comps):
            a, b = self.component(lam), other.component(lam)
            out[lam] = [[f.add(x, y) for x, y in zip(ra, rb)]
                        for ra, rb in zip(a, b)]
        return DModuleMap(self.src, self.dst, out)


def compose_dmaps(g, f):
    fld = f.src.field
    comps = {}
    for lam in set(f.comps) | set(g.comps):
        m = mat_mul(g.component(lam), f.component(lam), fld)
        if not mat_is_zero(m, fld):
            comps[lam] = m
    return DModuleMap(f.src, g.dst, comps)


def hom_dmodules(m, n):
    """Basis of the space of module maps m -> n."""
    f = m.field
    lams = sorted(set(m.dims) & set(n.dims), key=sort_key)
    var_index = {}
    for lam in lams:
        for i in range(n.dim(lam)):
            for j in range(m.dim(lam)):
                var_index[(lam, i, j)] = len(var_index)
    nvars = len(var_index)
    if nvars == 0:
        return []
    rows = []
    supp = sorted(set(m.dims) | set(n.dims), key=sort_key)
    for lam in supp:
        for mu in supp:
            if lam == mu or not dist_hom_nonzero(lam, mu):
                continue
            src_mat = m.matrix(lam, mu)
            dst_mat = n.matrix(lam, mu)
            for r in range(n.dim(mu)):
                for c in range(m.dim(lam)):
                    row = [f.zero] * nvars
                    nz = False
                    for k in range(m.dim(mu)):
                        v = src_mat[k][c]
                        if not f.is_zero(v) and (mu, r, k) in var_index:
                            row[var_index[(mu, r, k)]] = v
                            nz = True
                    for k in range(n.dim(lam)):
                        v = dst_mat[r][k]
                        if not f.is_zero(v) and (lam, k, c) in var_index:
                            idx = var_index[(lam, k, c)]
                            row[idx] = f.sub(row[idx], v)
                            nz = True
                    if nz:
                        rows.append(row)
    vecs = nullspace(rows, nvars, f) if rows else \
        [[f.one if i == j else f.zero for i in range(nvars)] for j in range(nvars)]
    out = []
    for v in vecs:
        comps = {}
        for lam in lams:
            mat = zeros(n.dim(lam), m.dim(lam), f)
            nz = False
            for i in range(n.dim(lam)):
                for j in range(m.dim(lam)):
                    x = v[var_index[(lam, i, j)]]
                    if not f.is_zero(x):
                        mat[i][j] = x
                        nz = True
            if nz:
                comps[lam] = mat
        out.append(DModuleMap(m, n, comps))
    return out


def direct_sum_dmodules(modules, field=QQ):
    """Direct sum with slot bookkeeping: (module, offsets)."""
    dims, offsets = {}, []
    for m in modules:
        off = {}
        for lam, d in m.dims.items():
            off[lam] = dims.get(lam, 0)
            dims[lam] = dims.get(lam, 0) + d
        offsets.append(off)
    maps = {}
    supp = sorted(dims, key=sort_key)
    for lam in supp:
        for mu in supp:
            if lam == mu or not dist_hom_nonzero(lam, mu):
                continue
            block = zeros(dims[mu], dims[lam], field)
            nz = False
            for i, m in enumerate(modules):
                sub = m.maps.get((lam, mu))
                if sub is None:
                    continue
                nz = True
                r0, c0 = offsets[i][mu], offsets[i][lam]
                for r, row in enumerate(sub):
                    for c, x in enumerate(row):
                        block[r0 + r][c0 + c] = x
            if nz:
                maps[(lam, mu)] = block
    return DModule(dims, maps, field), offsets


def _in_basis_d(basis, targets, fld):
    if not targets:
        return []
    if not basis:
        if all(all(fld.is_zero(x) for x in t) for t in targets):
            return [[] for _ in targets]
        raise ValueError("vector not in span")
    rows = mat_transpose(basis, ncols=len(basis[0]))
    sol = solve(rows, [list(t) for t in targets], fld)
    if sol is None:
        raise ValueError("vector not in span (structure map does not restrict)")
    return sol


def kernel_dmap(f):
    """(K, incl) with K the pointwise kernel carrying restricted actions."""
    fld = f.src.field
    m = f.src
    kbasis = {}
    for lam in m.dims:
        comp = f.component(lam)
        if f.dst.dim(lam) == 0:
            kbasis[lam] = [[fld.one if i == j else fld.zero
                            for i in range(m.dim(lam))]
                           for j in range(m.dim(lam))]
        else:
            kbasis[lam] = nullspace(comp, m.dim(lam), fld)
    dims = {lam: len(b) for lam, b in kbasis.items()}
    maps = {}
    for lam, basis in kbasis.items():
        if not basis:
            continue
        for mu in m.dims:
            if mu == lam or not dist_hom_nonzero(lam, mu) or not dims.get(mu):
                continue
            targets = [mat_vec(m.matrix(lam, mu), v, fld) for v in basis]
            coords = _in_basis_d(kbasis[mu], targets, fld)
            mat = mat_transpose(coords, ncols=dims[mu])
            if not mat_is_zero(mat, fld):
                maps[(lam, mu)] = mat
    k = DModule(dims, maps, fld)
    incl = DModuleMap(k, m, {lam: mat_transpose(b, ncols=m.dim(lam))
                             for lam, b in kbasis.items() if b})
    return k, incl


def image_dmap(f):
    """(I, incl into dst) with I the pointwise image as a submodule."""
    fld = f.src.field
    n = f.dst
    ibasis = {}
    for lam in set(f.comps):
        cols = column_space_basis(f.component(lam), fld)
        if cols:
            ibasis[lam] = cols
    dims = {lam: len(b) for lam, b in ibasis.items()}
    maps = {}
    for lam, basis in ibasis.items():
        for mu in n.dims:
            if mu == lam or not dist_hom_nonzero(lam, mu):
                continue
            targets = [mat_vec(n.matrix(lam, mu), v, fld) for v in basis]
            if all(all(fld.is_zero(x) for x in t) for t in targets):
                continue
            coords = _in_basis_d(ibasis.get(mu, []), targets, fld)
            mat = mat_transpose(coords, ncols=dims.get(mu, 0))
            if not mat_is_zero(mat, fld):
                maps[(lam, mu)] = mat
    i = DModule(dims, maps, fld)
    incl = DModuleMap(i, n, {lam: mat_transpose(b, ncols=n.dim(lam))
                             for lam, b in ibasis.items()})
    return i, incl


def dual_dmap(f):
    comps = {}
    for lam, m in f.comps.items():
        comps[dual_weight(lam)] = mat_transpose(m, ncols=f.src.dim(lam))
    return DModuleMap(dual_dmodule(f.dst), dual_dmodule(f.src), comps)


def cokernel_dmap(f):
    """(C, proj) computed as the dual of the kernel of the dual map."""
    fd = dual_dmap(f)
    k, incl = kernel_dmap(fd)
    proj = dual_dmap(incl)
    return proj.dst, DModuleMap(f.dst, proj.dst, proj.comps)


def homology_dmodule(d_in, d_out):
    """ker(d_out) / im(d_in) for composable module maps with zero composite."""
    fld = d_out.src.field
    if not compose_dmaps(d_out, d_in).is_zero():
        raise ValueError("maps do not compose to zero")
    k, incl = kernel_dmap(d_out)
    # lift d_in through the kernel inclusion, then quotient by its image
    comps = {}
    for lam in set(d_in.comps):
        cols = mat_transpose(d_in.component(lam), ncols=d_in.src.dim(lam))
        kb = [list(c) for c in mat_transpose(incl.component(lam),
                                             ncols=k.dim(lam))]
        coords = _in_basis_d(kb, cols, fld)
        mat = mat_transpose(coords, ncols=k.dim(lam))
        if not mat_is_zero(mat, fld):
            comps[lam] = mat
    lift = DModuleMap(d_in.src, k, comps)
    h, _ = cokernel_dmap(lift)
    return h


def identify_named_dmodule(m, seed=0):
    """('S'|'Delta'|'Nabla'|'T', lam) if m is isomorphic to a named module,
    else None.  Identification requires a verified invertible hom."""
    if m.is_zero():
        return None
    for lam in m.support:
        for kind in ("S", "Delta", "Nabla", "T"):
            cand = named_dmodule(kind, lam, m.field)
            if cand.dims == m.dims and \
                    find_isomorphism_d(m, cand, seed=seed) is not None:
                return (kind, lam)
    return None


def radical_filtration(m):
    """Layers of the radical filtration, as dicts weight -> dim."""
    f = m.field
    # submodule bases per weight, starting from the whole module
    current = {lam: [[f.one if i == j else f.zero for i in range(m.dim(lam))]
                     for j in range(m.dim(lam))]
               for lam in m.dims}
    layers = []
    while any(current.values()):
        nxt = {}
        for mu in m.dims:
            sb = SpanBuilder(m.dim(mu), f)
            vecs = []
            for lam in m.dims:
                if lam == mu or not dist_hom_nonzero(lam, mu):
                    continue
                mat = m.matrix(lam, mu)
                for v in current.get(lam, []):
                    w = mat_vec(mat, v, f)
                    if sb.insert(w):
                        vecs.append(w)
            nxt[mu] = vecs
        layer = {lam: len(current.get(lam, [])) - len(nxt.get(lam, []))
                 for lam in m.dims}
        layers.append({k: v for k, v in layer.items() if v})
        if all(len(nxt.get(lam, [])) == len(current.get(lam, []))
               for lam in m.dims):
            break  # radical stabilized (should only happen at zero)
        current = nxt
    return [layer for layer in layers if layer]


def find_isomorphism_d(m, n, tries=25, seed=0):
    """An invertible module map m -> n, or None (verified, never fuzzy)."""
    if m.dims != n.dims:
        return None
    if m.is_zero():
        return DModuleMap(m, n, {})
    f = m.field
    homs = hom_dmodules(m, n)
    if not homs:
        return None
    rng = random.Random(seed)

    def invertible(h):
        return all(rank(h.component(lam), f) == m.dim(lam) for lam in m.dims)

    for h in homs:
        if invertible(h):
            return h
    for _ in range(tries):
        cand = None
        for hmap in homs:
            part = hmap.scale(f.of_int(rng.randint(-3, 3)))
            cand = part if cand is None else cand + part
        if cand is not None and invertible(cand):
            return cand
    return None


# ---------------------------------------------------------------------------
# Tilting complexes and homotopy homs.
# ---------------------------------------------------------------------------

def tilting_hom_dim(lam, mu):
    """dim Hom between tilting modules of the given weights (0 or 1).

    Tiltings are equivalent to the indecomposables of the matrix category,
    so the nonzero homs are exactly the identity, the one-step down map
    (lam = mu + w), the one-step up map (mu = lam + b), and their composite.
    """
    if lam == mu:
        return 1
    if lam == mu + "w":
        return 1
    if mu == lam + "b":
        return 1
    if lam.endswith("w") and mu == lam[:-1] + "b":
        return 1
    return 0


def tilting_composite_unit(lam, mu, nu):
    """Coefficient of the canonical map in t(mu,nu) o t(lam,mu): 0 or 1.

    The canonical generators are common-support identity maps; their
    composite is the canonical map exactly when all three hom spaces are
    nonzero, and zero otherwise (machine-checked in the tests).
    """
    if tilting_hom_dim(lam, nu) == 0:
        return 0
    return int(tilting_hom_dim(lam, mu) != 0 and tilting_hom_dim(mu, nu) != 0)


def tilting_map(lam, mu, field=QQ):
    """The canonical map T_lam -> T_mu (common-support identity)."""
    if tilting_hom_dim(lam, mu) == 0:
        raise ValueError(f"zero hom space {lam!r} -> {mu!r}")
    src = named_dmodule("T", lam, field)
    dst = named_dmodule("T", mu, field)
    comps = {kappa: [[field.one]] for kappa in set(src.dims) & set(dst.dims)}
    return DModuleMap(src, dst, comps)


@dataclass
class TiltComplex:
    """Bounded complex of tilting symbols with scalar differentials.

    terms maps degree -> list of weights; diffs[d] is the differential from
    degree d to degree d+1 as {(dst_slot, src_slot): coeff}.
    """

    terms: dict
    diffs: dict
    field: object

    def degrees(self):
        return sorted(self.terms)

    def validate(self):
        f = self.field
        for d in self.degrees():
            if d + 2 not in self.terms:
                continue
            for i, lam in enumerate(self.terms[d]):
                for j, nu in enumerate(self.terms[d + 2]):
                    total = f.zero
                    for k, mu in enumerate(self.terms[d + 1]):
                        e1 = self.diffs.get(d, {}).get((k, i))
                        e2 = self.diffs.get(d + 1, {}).get((j, k))
                        if e1 is not None and e2 is not None:
                            unit = tilting_composite_unit(lam, mu, nu)
                            if unit:
                                total = f.add(total, f.mul(e1, e2))
                    if not f.is_zero(total):
                        raise ValueError("tilting differential does not square to zero")
        return self


def tilting_complex(kind, lam, field=QQ):
    """A bounded tilting complex representing the named module.

    Simples use the staircase (co)resolutions; standards and costandards
    reduce to a tilting module or to the simple's complex by final letter.
    """
    if kind == "T" or \
            (kind == "Delta" and (lam == "" or lam.endswith("b"))) or \
            (kind == "Nabla" and (lam == "" or lam.endswith("w"))):
        return TiltComplex({0: [lam]}, {}, field)
    if kind in ("Delta", "Nabla"):
        return tilting_complex("S", lam, field)
    if kind != "S":
        raise ValueError(f"unknown complex kind {kind!r}")
    if lam == "":
        return TiltComplex({0: [""]}, {}, field)
    if lam.endswith("b"):
        # kappa b^i resolves by T_kappa -> ... -> T_lam in degrees -i..0
        i = 0
        kappa = lam
        while kappa.endswith("b"):
            kappa = kappa[:-1]
            i += 1
        terms = {-k: [kappa + "b" * (i - k)] for k in range(i + 1)}
        diffs = {-k: {(0, 0): field.one} for k in range(1, i + 1)}
        return TiltComplex(terms, diffs, field).validate()
    # lam ends white: coresolution T_lam -> T_{kappa w^{i-1}} -> ... -> T_kappa
    i = 0
    kappa = lam
    while kappa.endswith("w"):
        kappa = kappa[:-1]
        i += 1
    terms = {k: [kappa + "w" * (i - k)] for k in range(i + 1)}
    diffs = {k: {(0, 0): field.one} for k in range(i)}
    return TiltComplex(terms, diffs, field).validate()


def realize_tilt_complex(cpx):
    """Concrete modules and differential maps of a tilting complex."""
    field = cpx.field
    mods = {}
    for d, syms in cpx.terms.items():
        mods[d] = [named_dmodule("T", lam, field) for lam in syms]
    return mods


def homotopy_hom_dim(x, y, shift=0):
    """dim Hom in the homotopy category of tilting complexes, Hom(x, y[shift]).

    Chain maps modulo null-homotopies, computed over the one-dimensional
    tilting hom spaces with the composite rule `tilting_composite_unit`.
    """
    f = x.field
    # chain map variables: per degree d, per (i in x.terms[d], j in y.terms[d+shift])
    var_index = {}
    for d, xs in x.terms.items():
        ys = y.terms.get(d + shift, [])
        for i, lam in enumerate(xs):
            for j, mu in enumerate(ys):
                if tilting_hom_dim(lam, mu):
                    var_index[(d, i, j)] = len(var_index)
    nvars = len(var_index)
    rows = []
    # commuting condition per degree d: d_y o f_d = f_{d+1} o d_x, as a map
    # from x.terms[d] to y.terms[d+shift+1], expanded per canonical target hom
    for d, xs in x.terms.items():
        ys_next = y.terms.get(d + shift + 1, [])
        for i, lam in enumerate(xs):
            for j2, nu in enumerate(ys_next):
                if not tilting_hom_dim(lam, nu):
                    continue
                row = [f.zero] * nvars
                nz = False
                for j, mu in enumerate(y.terms.get(d + shift, [])):
                    c = y.diffs.get(d + shift, {}).get((j2, j))
                    if c is not None and (d, i, j) in var_index and \
                            tilting_composite_unit(lam, mu, nu):
                        idx = var_index[(d, i, j)]
                        row[idx] = f.add(row[idx], c)
                        nz = True
                for i2, mu in enumerate(x.terms.get(d + 1, [])):
                    c = x.diffs.get(d, {}).get((i2, i))
                    if c is not None and (d + 1, i2, j2) in var_index and \
                            tilting_composite_unit(lam, mu, nu):
                        idx = var_index[(d + 1, i2, j2)]
                        row[idx] = f.sub(row[idx], c)
                        nz = True
                if nz:
                    rows.append(row)
    chain_dim = nvars - rank(rows, f) if rows else nvars
    # homotopies: per degree d, maps x.terms[d] -> y.terms[d+shift-1];
    # boundary h -> d_y h + h d_x lands in the chain-map space
    h_index = {}
    for d, xs in x.terms.items():
        ys = y.terms.get(d + shift - 1, [])
        for i, lam in enumerate(xs):
            for j, mu in enumerate(ys):
                if tilting_hom_dim(lam, mu):
                    h_index[(d, i, j)] = len(h_index)
    if not h_index or not var_index:
        return chain_dim
    boundary = [[f.zero] * len(h_index) for _ in range(nvars)]
    for (d, i, j), col in h_index.items():
        lam = x.terms[d][i]
        mu = y.terms[d + shift - 1][j]
        # d_y o h contributes at (d, i, j2)
        for j2, nu in enumerate(y.terms.get(d + shift, [])):
            c = y.diffs.get(d + shift - 1, {}).get((j2, j))
            if c is not None and (d, i, j2) in var_index and \
                    tilting_composite_unit(lam, mu, nu):
                r = var_index[(d, i, j2)]
                boundary[r][col] = f.add(boundary[r][col], c)
        # h o d_x contributes at (d - 1, i2, j)
        for i2, lam2 in enumerate(x.terms.get(d - 1, [])):
            c = x.diffs.get(d - 1, {}).get((i, i2))
            if c is not None and (d - 1, i2, j) in var_index and \
                    tilting_composite_unit(lam2, lam, mu):
                r = var_index[(d - 1, i2, j)]
                boundary[r][col] = f.add(boundary[r][col], c)
    return chain_dim - rank(boundary, f)


def ext_dim(kind_x, lam, kind_y, mu, i, field=QQ):
    """dim Ext^i between named modules, via the homotopy category of tiltings."""
    cx = tilting_complex(kind_x, lam, field)
    cy = tilting_complex(kind_y, mu, field)
    return homotopy_hom_dim(cx, cy, i)
