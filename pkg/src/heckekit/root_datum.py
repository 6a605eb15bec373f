"""Finite root systems with a chosen character lattice.

Weights are integer tuples in fundamental-weight coordinates, so the
pairing with the i-th simple coroot is just coordinate i.  The Cartan
convention is ``cartan[i][j] = <alpha_i, alpha_j_vee>``; row i is then
alpha_i written in the fundamental-weight basis.

The lattice kind picks the character lattice between the root lattice Q
and the weight lattice P.  It only affects lattice membership (hence the
extended group and its Omega); the root-system combinatorics below are
lattice independent.  All values are immutable after construction and
the internal memo tables are per-datum and idempotent, so concurrent
use returns identical results.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDominantError, UnknownLabelError
from .laurent import LaurentPoly

LATTICE_KINDS = ("weight", "root", "intermediate")

_SUPPORTED = {
    "A1": ("A", 1), "A2": ("A", 2), "A3": ("A", 3),
    "B2": ("B", 2), "B3": ("B", 3),
    "C2": ("C", 2), "C3": ("C", 3),
    "G2": ("G", 2),
}


def _cartan_matrix(series, rank):
    # rows: cartan[i][j] = <alpha_i, alpha_j_vee>
    mat = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        mat[i][i + 1] = -1
        mat[i + 1][i] = -1
    if series == "B" and rank >= 2:
        # alpha_rank short, the rest long
        mat[rank - 2][rank - 1] = -2
    elif series == "C" and rank >= 2:
        # alpha_rank long, the rest short
        mat[rank - 1][rank - 2] = -2
    elif series == "G":
        # alpha_1 short, alpha_2 long
        mat[0][1] = -1
        mat[1][0] = -3
    return tuple(tuple(row) for row in mat)


def _symmetrizer(cartan):
    """Integers d_i = (alpha_i, alpha_i)/2 with d_j*C[i][j] == d_i*C[j][i]."""
    n = len(cartan)
    d = [0] * n
    d[0] = 1
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if cartan[i][j] and i != j and not d[j]:
                # d_j / d_i = C[j][i] / C[i][j]
                val = Fraction(d[i]) * cartan[j][i] / cartan[i][j]
                d[j] = val
                todo.append(j)
    scale = 1
    for x in d:
        scale = scale * Fraction(x).denominator
    d = [Fraction(x) * scale for x in d]
    m = min(d)
    return tuple(int(x / m) for x in d)


def _mat_inverse(rows):
    """Inverse of a small integer matrix, as Fraction rows."""
    n = len(rows)
    a = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def _det(rows):
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


class FiniteWeyl:
    """The finite Weyl group, enumerated as integer matrices on
    fundamental-weight coordinates.  Element k acts by ``act(k, vec)``;
    the identity has index 0."""

    def __init__(self, simple_mats):
        n = len(simple_mats[0])
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        mats = [ident]
        index = {ident: 0}
        length = [0]
        word = [()]
        frontier = [0]
        while frontier:
            new = []
            for k in frontier:
                for i, s in enumerate(simple_mats):
                    m = self._matmul(s, mats[k])
                    if m not in index:
                        index[m] = len(mats)
                        mats.append(m)
                        length.append(length[k] + 1)
                        word.append((i,) + word[k])
                        new.append(index[m])
            frontier = new
        self.mats = tuple(mats)
        self.index = index
        self.length = tuple(length)
        self.word = tuple(word)  # w = s_{i1} ... s_{ik} applied right-to-left to vectors
        self.simple = tuple(index[m] for m in simple_mats)
        self.longest = max(range(len(mats)), key=lambda k: length[k])
        self._mult = {}
        inv = [0] * len(mats)
        for k in range(len(mats)):
            m = ident
            for i in reversed(self.word[k]):
                m = self._matmul(m, simple_mats[i])
            inv[k] = index[m]
        self.inverse = tuple(inv)

    @staticmethod
    def _matmul(a, b):
        n = len(a)
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))

    def __len__(self):
        return len(self.mats)

    def act(self, k, vec):
        m = self.mats[k]
        return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in m)

    def multiply(self, k, l):
        key = (k, l)
        out = self._mult.get(key)
        if out is None:
            out = self.index[self._matmul(self.mats[k], self.mats[l])]
            self._mult[key] = out
        return out


class RootDatum:
    """A finite root system of rank <= 3 together with a character lattice."""

    def __init__(self, label, lattice_kind="weight", lattice_basis=None):
        if label not in _SUPPORTED:
            raise UnknownLabelError(
                "unknown type label %r (supported: %s)" % (label, ", ".join(sorted(_SUPPORTED))))
        if lattice_kind not in LATTICE_KINDS:
            raise UnknownLabelError("unknown lattice kind %r" % (lattice_kind,))
        series, rank = _SUPPORTED[label]
        self.label = label
        self.lattice_kind = lattice_kind
        self.rank = rank
        self.cartan_matrix = _cartan_matrix(series, rank)
        self.symmetrizer = _symmetrizer(self.cartan_matrix)
        self._cartan_inv = _mat_inverse(self.cartan_matrix)
        self.simple_roots = self.cartan_matrix  # row i = alpha_i in fw coords
        self.simple_coroots = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
        self._build_positive_roots()
        self.rho = (1,) * rank
        self.two_rho_covector = tuple(
            sum(cov[i] for cov in self.positive_coroots) for i in range(rank))
        simple_mats = tuple(self._reflection_matrix(self.simple_roots[i], self.simple_coroots[i])
                            for i in range(rank))
        self.weyl = FiniteWeyl(simple_mats)
        self.finite_weyl_order = len(self.weyl)
        if lattice_kind == "weight":
            basis = self.simple_coroots  # identity rows
        elif lattice_kind == "root":
            basis = self.cartan_matrix
        else:
            if lattice_basis is None:
                raise UnknownLabelError("intermediate lattice requires an explicit basis")
            basis = tuple(tuple(int(x) for x in row) for row in lattice_basis)
            if len(basis) != rank or any(len(r) != rank for r in basis):
                raise UnknownLabelError("lattice basis must be a %dx%d integer matrix" % (rank, rank))
            if _det(basis) == 0:
                raise UnknownLabelError("lattice basis is singular")
        self.lattice_basis = basis
        self._basis_inv = _mat_inverse(basis)
        for alpha in self.simple_roots:
            if self.to_lattice_coords(alpha) is None:
                raise UnknownLabelError("lattice does not contain the root lattice")
        self._mult_tables = {}
        self._weights_of = {}
        self._kostant = {}
        self._dim = {}

    # -- basic pairings -------------------------------------------------

    @staticmethod
    def pair(lam, covector):
        return sum(a * b for a, b in zip(lam, covector))

    def height2rho(self, lam):
        """<lam, 2 rho_vee>; the length of t_lam when lam is dominant."""
        return self.pair(lam, self.two_rho_covector)

    def inner(self, lam, mu):
        """W-invariant form with short roots of squared length 2 (Fraction)."""
        # (omega_i, omega_j) = (C^-1)_{ij} d_j
        return sum(lam[i] * self._cartan_inv[i][j] * self.symmetrizer[j] * mu[j]
                   for i in range(self.rank) for j in range(self.rank))

    def _reflection_matrix(self, root, coroot):
        n = self.rank
        return tuple(tuple((1 if i == j else 0) - coroot[j] * root[i] for j in range(n))
                     for i in range(n))

    def _build_positive_roots(self):
        n = self.rank
        # each entry: (fw coords, root coords, coroot covector)
        seen = {}
        todo = []
        for i in range(n):
            rc = tuple(int(i == j) for j in range(n))
            entry = (self.simple_roots[i], rc, self.simple_coroots[i])
            seen[entry[0]] = entry
            todo.append(entry)
        while todo:
            fw, rc, cov = todo.pop()
            for j in range(n):
                p = fw[j]  # <beta, alpha_j_vee>
                nfw = tuple(fw[k] - p * self.cartan_matrix[j][k] for k in range(n))
                nrc = tuple(rc[k] - (p if k == j else 0) for k in range(n))
                if all(x >= 0 for x in nrc) and nfw not in seen:
                    q = sum(cov[k] * self.cartan_matrix[j][k] for k in range(n))  # <alpha_j, beta_vee>
                    ncov = tuple(cov[k] - (q if k == j else 0) for k in range(n))
                    entry = (nfw, nrc, ncov)
                    seen[nfw] = entry
                    todo.append(entry)
        entries = sorted(seen.values(), key=lambda e: (sum(e[1]), e[1]))
        self.positive_roots = tuple(e[0] for e in entries)
        self.positive_root_coords = tuple(e[1] for e in entries)
        self.positive_coroots = tuple(e[2] for e in entries)
        # d_beta = (beta, beta)/2, needed by Freudenthal
        self.root_half_lengths = tuple(int(self.inner(fw, fw) / 2) for fw in self.positive_roots)

    # -- lattice --------------------------------------------------------

    def to_lattice_coords(self, lam):
        """Coords of lam in the chosen lattice basis, or None if outside."""
        out = []
        for j in range(self.rank):
            x = sum(lam[k] * self._basis_inv[k][j] for k in range(self.rank))
            if x.denominator != 1:
                return None
            out.append(int(x))
        return tuple(out)

    def from_lattice_coords(self, coords):
        return tuple(sum(coords[i] * self.lattice_basis[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    def lattice_contains(self, lam):
        return self.to_lattice_coords(lam) is not None

    def lattice_index_over_root_lattice(self):
        """[Lambda : Q] as a positive integer."""
        return int(abs(_det(self.cartan_matrix) / _det(self.lattice_basis)))

    # -- root coordinates and dominance ---------------------------------

    def to_root_coords(self, lam):
        """Coefficients of lam over the simple roots (tuple of Fractions)."""
        return tuple(sum(lam[k] * self._cartan_inv[k][j] for k in range(self.rank))
                     for j in range(self.rank))

    def from_root_coords(self, coords):
        return tuple(sum(coords[i] * self.cartan_matrix[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    def is_dominant(self, lam):
        return all(x >= 0 for x in lam)

    def dominance_leq(self, lam, mu):
        """True iff mu - lam is a non-negative integer sum of positive roots."""
        diff = tuple(m - l for l, m in zip(lam, mu))
        return all(x.denominator == 1 and x >= 0 for x in self.to_root_coords(diff))

    def dominant_representative(self, mu):
        cur = tuple(mu)
        while True:
            for i in range(self.rank):
                if cur[i] < 0:
                    cur = tuple(cur[k] - cur[i] * self.cartan_matrix[i][k]
                                for k in range(self.rank))
                    break
            else:
                return cur

    def weyl_orbit(self, mu):
        return {self.weyl.act(k, mu) for k in range(len(self.weyl))}

    # -- weight multiplicities (Freudenthal) -----------------------------

    def _dominant_below(self, lam):
        """Dominant mu with lam - mu in the non-negative root cone,
        sorted by decreasing height."""
        bound = self.height2rho(lam)
        heights = [self.height2rho(a) for a in self.simple_roots]
        out = []

        def rec(i, rest, acc):
            if i == self.rank:
                mu = tuple(l - a for l, a in zip(lam, acc))
                if self.is_dominant(mu):
                    out.append(mu)
                return
            k = 0
            while k * heights[i] <= rest:
                nxt = tuple(a + k * r for a, r in zip(acc, self.simple_roots[i]))
                rec(i + 1, rest - k * heights[i], nxt)
                k += 1

        rec(0, bound, (0,) * self.rank)
        out.sort(key=lambda mu: (-self.height2rho(mu), mu))
        return out

    def _dominant_mult_table(self, lam):
        table = self._mult_tables.get(lam)
        if table is not None:
            return table
        if not self.is_dominant(lam):
            raise NotDominantError("highest weight %r is not dominant" % (lam,))
        doms = self._dominant_below(lam)
        norm_lam = self.inner(tuple(l + 1 for l in lam), tuple(l + 1 for l in lam))
        table = {}
        for mu in doms:
            if mu == lam:
                table[mu] = 1
                continue
            num = 0
            for idx in range(len(self.positive_roots)):
                beta = self.positive_roots[idx]
                cov = self.positive_coroots[idx]
                dbeta = self.root_half_lengths[idx]
                k = 1
                while True:
                    nu = tuple(m + k * b for m, b in zip(mu, beta))
                    m_nu = table.get(self.dominant_representative(nu), 0)
                    if not m_nu:
                        break
                    num += dbeta * self.pair(nu, cov) * m_nu
                    k += 1
            # denominator (lam+mu+2rho, lam-mu): integer since lam-mu is in Q
            diff_rc = self.to_root_coords(tuple(l - m for l, m in zip(lam, mu)))
            shifted = tuple(l + m + 2 for l, m in zip(lam, mu))
            den = sum(int(diff_rc[i]) * self.symmetrizer[i] * shifted[i]
                      for i in range(self.rank))
            assert (2 * num) % den == 0, "Freudenthal recursion returned a non-integer"
            table[mu] = (2 * num) // den
        # drop dominant weights below lam that are not weights (mult 0)
        table = {mu: m for mu, m in table.items() if m}
        assert norm_lam >= 0
        self._mult_tables[lam] = table
        return table

    def weight_multiplicity(self, lam, mu):
        """Multiplicity of the weight mu in the irreducible module with
        highest weight lam (0 outside the weight hull)."""
        table = self._dominant_mult_table(lam)
        return table.get(self.dominant_representative(tuple(mu)), 0)

    def weights_of(self, lam):
        """Full weight multiset of the irreducible module, as a dict."""
        out = self._weights_of.get(lam)
        if out is not None:
            return dict(out)
        table = self._dominant_mult_table(lam)
        out = {}
        for mu, m in table.items():
            for nu in self.weyl_orbit(mu):
                out[nu] = m
        self._weights_of[lam] = out
        return dict(out)

    def weyl_dimension(self, lam):
        dim = self._dim.get(lam)
        if dim is not None:
            return dim
        if not self.is_dominant(lam):
            raise NotDominantError("highest weight %r is not dominant" % (lam,))
        num = Fraction(1)
        lam_rho = tuple(l + 1 for l in lam)
        for cov in self.positive_coroots:
            num *= Fraction(self.pair(lam_rho, cov), self.pair(self.rho, cov))
        assert num.denominator == 1
        dim = int(num)
        self._dim[lam] = dim
        return dim

    # -- q-Kostant partition function ------------------------------------

    def kostant_partition_q(self, nu):
        """Generating count of expressions of nu as a multiset of positive
        roots, graded by multiset size (polynomial in q)."""
        rc = self.to_root_coords(tuple(nu))
        if any(x.denominator != 1 or x < 0 for x in rc):
            return LaurentPoly.zero()
        rc = tuple(int(x) for x in rc)
        # roots in decreasing height so the largest parts are chosen first
        order = sorted(range(len(self.positive_roots)),
                       key=lambda i: (-sum(self.positive_root_coords[i]),
                                      self.positive_root_coords[i]))
        return self._kostant_rec(rc, 0, order)

    def _kostant_rec(self, rc, i, order):
        if not any(rc):
            return LaurentPoly.one()
        if i == len(order):
            return LaurentPoly.zero()
        key = (rc, i)
        out = self._kostant.get(key)
        if out is not None:
            return out
        beta = self.positive_root_coords[order[i]]
        kmax = min(rc[j] // beta[j] for j in range(self.rank) if beta[j])
        out = LaurentPoly.zero()
        for k in range(kmax + 1):
            rest = tuple(rc[j] - k * beta[j] for j in range(self.rank))
            out = out + LaurentPoly.v(k) * self._kostant_rec(rest, i + 1, order)
        self._kostant[key] = out
        return out

    # -- characters -------------------------------------------------------

    def decompose_character(self, char):
        """Decompose a W-invariant characterdict into irreducible highest
        weights; raises ValueError when the input is not a character."""
        work = {mu: m for mu, m in char.items() if m}
        out = {}
        while work:
            top = max(work, key=lambda mu: (self.height2rho(mu), mu))
            if not self.is_dominant(top):
                raise ValueError("leading term %r is not dominant" % (top,))
            c = work[top]
            for nu, m in self.weights_of(top).items():
                b = work.get(nu, 0) - c * m
                if b:
                    work[nu] = b
                elif nu in work:
                    del work[nu]
            out[top] = out.get(top, 0) + c
        return out

    def character_product(self, char1, char2):
        out = {}
        for mu, a in char1.items():
            for nu, b in char2.items():
                key = tuple(x + y for x, y in zip(mu, nu))
                v = out.get(key, 0) + a * b
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return out

    def dominant_weights_up_to(self, bound):
        """Dominant lattice weights with <lam, 2 rho_vee> <= bound."""
        out = []
        heights = self.two_rho_covector

        def rec(i, acc, rest):
            if i == self.rank:
                lam = tuple(acc)
                if self.lattice_contains(lam):
                    out.append(lam)
                return
            k = 0
            while k * heights[i] <= rest:
                rec(i + 1, acc + [k], rest - k * heights[i])
                k += 1

        rec(0, [], bound)
        out.sort(key=lambda mu: (self.height2rho(mu), mu))
        return out

    def __repr__(self):
        return "RootDatum(%r, %r)" % (self.label, self.lattice_kind)


def weights_to_json(weights):
    """Weight multiset as a list of {coords, mult}, sorted by coords."""
    return [{"coords": list(mu), "mult": m} for mu, m in sorted(weights.items())]


_datum_cache = {}


def build_root_datum(label, lattice_kind="weight", lattice_basis=None):
    """Shared, cached constructor; identical labels return the same object."""
    key = (label, lattice_kind,
           None if lattice_basis is None else tuple(map(tuple, lattice_basis)))
    rd = _datum_cache.get(key)
    if rd is None:
        rd = RootDatum(label, lattice_kind, lattice_basis)
        _datum_cache[key] = rd
    return rd
