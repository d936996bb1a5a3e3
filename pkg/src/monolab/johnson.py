"""The Johnson invariant of Torelli words built from bounding-pair maps.

Let H be the homology of the genus-G surface.  This module models the third
exterior power of H, the embedding of H given by wedging with the symplectic
form, and the quotient (wedge^3 H)/H in which the Johnson invariant of a
Torelli mapping class lives.

Basis bookkeeping.  Wedge coordinates use the *interleaved* ordering
gamma_1 = a_1, gamma_2 = b_1, gamma_3 = a_2, ..., gamma_{2G} = b_G, which
differs from the a-block-then-b-block ordering of HomologyClass; a single
fixed permutation converts at this module's boundary and nowhere else.
Triples gamma_i ^ gamma_j ^ gamma_k with i < j < k run in lexicographic
order.  The quotient is coordinatized by the triples that remain after
discarding

    (i, 2G-1, 2G) for 1 <= i <= 2G-2,   (1, 2, 2G-1),   (1, 2, 2G)

(1-based), which form a genuine Z-basis of the quotient; each discarded
triple rewrites as a signed sum of the retained ones.  gcd computations in
the retained basis therefore mean what they say (primitivity, content).

A Torelli word is given to tau as an explicit product of conjugated
bounding-pair maps.  No attempt is made to evaluate tau on a raw twist
word: deciding whether a word is Torelli and presenting it by bounding
pairs is the caller's job.
"""

import itertools
from math import gcd

from . import _linalg
from .homology import GenusMismatchError, HomologyClass, intersection, is_primitive
from .lattices import SublatticeBasis
from .words import TwistLetter, Word, sp_image


class SaturationBudgetError(RuntimeError):
    """The closure loop exceeded its step budget (guards implementation bugs)."""


# --------------------------------------------------------------------------
# index bookkeeping, cached per genus


_tables = {}


def _table(genus):
    tab = _tables.get(genus)
    if tab is None:
        tab = _BasisTable(genus)
        _tables[genus] = tab
    return tab


class _BasisTable:
    def __init__(self, genus):
        if genus < 2:
            raise ValueError("the quotient construction needs genus >= 2")
        self.genus = genus
        n = 2 * genus
        self.n = n
        # gamma index (0-based) -> standard coordinate index in HomologyClass
        self.perm = tuple(
            (j // 2) if j % 2 == 0 else (genus + j // 2) for j in range(n)
        )
        self.triples = tuple(itertools.combinations(range(n), 3))
        self.triple_index = {t: i for i, t in enumerate(self.triples)}
        excluded = set()
        for i in range(n - 2):
            excluded.add((i, n - 2, n - 1))
        excluded.add((0, 1, n - 2))
        excluded.add((0, 1, n - 1))
        self.retained = tuple(t for t in self.triples if t not in excluded)
        self.retained_index = {t: i for i, t in enumerate(self.retained)}
        self.dim_wedge = len(self.triples)
        self.dim_quot = len(self.retained)
        self.expansions = self._rewrite_table(excluded)

    def _rewrite_table(self, excluded):
        """Each discarded triple as a sum of retained triples in the quotient."""
        g, n = self.genus, self.n
        table = {}
        for t in excluded:
            terms = {}
            if t[1] == n - 2 and t[2] == n - 1:
                i = t[0]
                # gamma_i ^ gamma_{2G-1} ^ gamma_{2G} = omega^gamma_i - sum_{j<G} ...
                for j in range(g - 1):
                    p, q = 2 * j, 2 * j + 1
                    if i in (p, q):
                        continue
                    sign, trip = _sort_triple(p, q, i)
                    terms[trip] = terms.get(trip, 0) - sign
            else:
                i = t[2]  # (0, 1, 2G-2) or (0, 1, 2G-1)
                for j in range(1, g - 1):
                    p, q = 2 * j, 2 * j + 1
                    sign, trip = _sort_triple(p, q, i)
                    terms[trip] = terms.get(trip, 0) - sign
            for trip in terms:
                if trip not in self.retained_index:
                    raise AssertionError("rewrite escaped the retained basis")
            table[t] = tuple(
                (self.retained_index[trip], c) for trip, c in sorted(terms.items()) if c
            )
        return table


def _sort_triple(i, j, k):
    """Sign and sorted triple for gamma_i ^ gamma_j ^ gamma_k; (0, None) if repeated."""
    if i == j or j == k or i == k:
        return 0, None
    sign = 1
    a, b, c = i, j, k
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return sign, (a, b, c)


# --------------------------------------------------------------------------
# wedge and quotient vectors


class Wedge3:
    """An element of the third exterior power, in gamma-triple coordinates."""

    __slots__ = ("genus", "coords")

    def __init__(self, genus, coords):
        tab = _table(genus)
        coords = tuple(int(c) for c in coords)
        if len(coords) != tab.dim_wedge:
            raise ValueError(
                "expected %d wedge coordinates, got %d" % (tab.dim_wedge, len(coords))
            )
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *args):
        raise AttributeError("Wedge3 is immutable")

    @classmethod
    def zero(cls, genus):
        return cls(genus, (0,) * _table(genus).dim_wedge)

    def _check(self, other):
        if not isinstance(other, Wedge3) or other.genus != self.genus:
            raise GenusMismatchError("wedge arguments must share a genus")

    def __add__(self, other):
        self._check(other)
        return Wedge3(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Wedge3(self.genus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Wedge3(self.genus, tuple(-x for x in self.coords))

    def __rmul__(self, k):
        return Wedge3(self.genus, tuple(int(k) * x for x in self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return isinstance(other, Wedge3) and self.genus == other.genus and self.coords == other.coords

    def __hash__(self):
        return hash((self.genus, self.coords))

    def __repr__(self):
        return "Wedge3(genus=%d, nnz=%d)" % (self.genus, sum(1 for c in self.coords if c))


class QuotientClass:
    """An element of (wedge^3 H)/H in the retained-triple basis."""

    __slots__ = ("genus", "coords")

    def __init__(self, genus, coords):
        tab = _table(genus)
        coords = tuple(int(c) for c in coords)
        if len(coords) != tab.dim_quot:
            raise ValueError(
                "expected %d quotient coordinates, got %d" % (tab.dim_quot, len(coords))
            )
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, *args):
        raise AttributeError("QuotientClass is immutable")

    @classmethod
    def zero(cls, genus):
        return cls(genus, (0,) * _table(genus).dim_quot)

    def _check(self, other):
        if not isinstance(other, QuotientClass) or other.genus != self.genus:
            raise GenusMismatchError("quotient arguments must share a genus")

    def __add__(self, other):
        self._check(other)
        return QuotientClass(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return QuotientClass(self.genus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return QuotientClass(self.genus, tuple(-x for x in self.coords))

    def __rmul__(self, k):
        return QuotientClass(self.genus, tuple(int(k) * x for x in self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, QuotientClass)
            and self.genus == other.genus
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.genus, self.coords))

    def __repr__(self):
        return "QuotientClass(genus=%d, nnz=%d)" % (
            self.genus,
            sum(1 for c in self.coords if c),
        )

    def labelled(self):
        """Nonzero coordinates with their triple labels, for reports."""
        tab = _table(self.genus)
        names = []
        for trip, c in zip(tab.retained, self.coords):
            if c:
                names.append(("g%d^g%d^g%d" % (trip[0] + 1, trip[1] + 1, trip[2] + 1), c))
        return names


def _gamma_coords(c):
    tab = _table(c.genus)
    return tuple(c.coords[tab.perm[j]] for j in range(tab.n))


def wedge3(c1, c2, c3):
    """The wedge product of three homology classes."""
    if not (c1.genus == c2.genus == c3.genus):
        raise GenusMismatchError("wedge arguments must share a genus")
    tab = _table(c1.genus)
    g1, g2, g3 = _gamma_coords(c1), _gamma_coords(c2), _gamma_coords(c3)
    out = [0] * tab.dim_wedge
    for idx, (i, j, k) in enumerate(tab.triples):
        out[idx] = (
            g1[i] * (g2[j] * g3[k] - g2[k] * g3[j])
            - g1[j] * (g2[i] * g3[k] - g2[k] * g3[i])
            + g1[k] * (g2[i] * g3[j] - g2[j] * g3[i])
        )
    return Wedge3(c1.genus, out)


def embed_h(c):
    """The embedding of H: c -> (sum_i a_i ^ b_i) ^ c."""
    tab = _table(c.genus)
    gc = _gamma_coords(c)
    out = [0] * tab.dim_wedge
    for i in range(c.genus):
        p, q = 2 * i, 2 * i + 1
        for m in range(tab.n):
            if gc[m] == 0 or m in (p, q):
                continue
            sign, trip = _sort_triple(p, q, m)
            out[tab.triple_index[trip]] += sign * gc[m]
    return Wedge3(c.genus, out)


def reduce_to_quotient(w):
    """Project a wedge element to the quotient in the retained basis."""
    tab = _table(w.genus)
    out = [0] * tab.dim_quot
    for idx, c in enumerate(w.coords):
        if c == 0:
            continue
        trip = tab.triples[idx]
        ret = tab.retained_index.get(trip)
        if ret is not None:
            out[ret] += c
        else:
            for ret_idx, coef in tab.expansions[trip]:
                out[ret_idx] += c * coef
    return QuotientClass(w.genus, out)


def is_primitive_quotient(q):
    """gcd of the coordinates is 1; defined in the retained basis, which is a
    genuine Z-basis of the quotient, so the answer is basis-independent."""
    if q.is_zero():
        raise ValueError("primitivity is undefined for the zero class")
    return _linalg.gcd_all(q.coords) == 1


# --------------------------------------------------------------------------
# the induced symplectic action


def _gamma_matrix(m):
    tab = _table(m.genus)
    perm = tab.perm
    return [[m.rows[perm[i]][perm[j]] for j in range(tab.n)] for i in range(tab.n)]


def _minor3(mat, rows, cols):
    i, j, k = rows
    p, q, r = cols
    return (
        mat[i][p] * (mat[j][q] * mat[k][r] - mat[j][r] * mat[k][q])
        - mat[i][q] * (mat[j][p] * mat[k][r] - mat[j][r] * mat[k][p])
        + mat[i][r] * (mat[j][p] * mat[k][q] - mat[j][q] * mat[k][p])
    )


def sp_action_wedge(m, w):
    """Induced action of a symplectic map on the third exterior power."""
    if m.genus != w.genus:
        raise GenusMismatchError("map and wedge genus differ")
    tab = _table(w.genus)
    mg = _gamma_matrix(m)
    cols = {}
    for idx, c in enumerate(w.coords):
        if c:
            cols[tab.triples[idx]] = c
    out = [0] * tab.dim_wedge
    for t_idx, trip in enumerate(tab.triples):
        acc = 0
        for src, c in cols.items():
            acc += c * _minor3(mg, trip, src)
        out[t_idx] = acc
    return Wedge3(w.genus, out)


def _rank_one_split(mg, n):
    """Write mg - I as column c times row s if possible, else None.

    Twist matrices and their powers all have this shape, which makes the
    induced wedge action expand with no cross terms (c ^ c = 0).
    """
    d = [[mg[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    c = None
    for j in range(n):
        col = [d[i][j] for i in range(n)]
        if any(col):
            g = _linalg.gcd_all(col)
            c = [x // g for x in col]
            break
    if c is None:
        return [0] * n, [0] * n
    lead = next(i for i in range(n) if c[i])
    if c[lead] < 0:
        c = [-x for x in c]
    s = []
    for j in range(n):
        num = d[lead][j]
        if num % c[lead] != 0:
            return None
        sj = num // c[lead]
        for i in range(n):
            if d[i][j] != sj * c[i]:
                return None
        s.append(sj)
    return c, s


_action_cache = {}


def _quotient_action_columns(m):
    """Sparse columns of the quotient action of m, minus the identity.

    Keyed per matrix; the two code paths (rank-one expansion for twist
    shapes, dense minors otherwise) agree and are cross-checked in tests.
    """
    key = (m.genus, m.rows)
    cached = _action_cache.get(key)
    if cached is not None:
        return cached
    tab = _table(m.genus)
    mg = _gamma_matrix(m)
    split = _rank_one_split(mg, tab.n)
    cols = {}
    if split is not None:
        c, s = split
        for r_idx, trip in enumerate(tab.retained):
            entries = _rank_one_column(tab, c, s, trip)
            delta = _reduced_delta(tab, entries, r_idx)
            if delta:
                cols[r_idx] = delta
    else:
        for r_idx, trip in enumerate(tab.retained):
            entries = {}
            for t_idx, dst in enumerate(tab.triples):
                v = _minor3(mg, dst, trip)
                if v:
                    entries[dst] = v
            delta = _reduced_delta(tab, entries, r_idx)
            if delta:
                cols[r_idx] = delta
    _action_cache[key] = cols
    return cols


def _rank_one_column(tab, c, s, trip):
    """Image of the basis triple under (I + c s^T), as wedge coefficients."""
    i, j, k = trip
    entries = {trip: 1}

    def add_c_wedge(p, q, coef):
        # coef * (c ^ gamma_p ^ gamma_q)
        for m_idx, cm in enumerate(c):
            if cm == 0 or m_idx in (p, q):
                continue
            sign, t = _sort_triple(m_idx, p, q)
            entries[t] = entries.get(t, 0) + sign * coef * cm

    if s[i]:
        add_c_wedge(j, k, s[i])
    if s[j]:
        add_c_wedge(i, k, -s[j])
    if s[k]:
        add_c_wedge(i, j, s[k])
    return entries


def _reduced_delta(tab, entries, r_idx):
    """Reduce wedge coefficients to the quotient and subtract the identity."""
    acc = {}
    for trip, coef in entries.items():
        if coef == 0:
            continue
        ret = tab.retained_index.get(trip)
        if ret is not None:
            acc[ret] = acc.get(ret, 0) + coef
        else:
            for ret_i, c2 in tab.expansions[trip]:
                acc[ret_i] = acc.get(ret_i, 0) + coef * c2
    acc[r_idx] = acc.get(r_idx, 0) - 1
    return tuple((i, v) for i, v in sorted(acc.items()) if v)


def sp_action_quotient(m, q):
    """The action on the quotient; well defined because the embedding of H
    is equivariant (a symplectic map fixes the form used to wedge)."""
    if m.genus != q.genus:
        raise GenusMismatchError("map and class genus differ")
    cols = _quotient_action_columns(m)
    out = list(q.coords)
    for j, qj in enumerate(q.coords):
        if qj == 0:
            continue
        col = cols.get(j)
        if col:
            for i, a in col:
                out[i] += a * qj
    return QuotientClass(q.genus, out)


# --------------------------------------------------------------------------
# Torelli words from bounding pairs


class BoundingPairGen:
    """A bounding-pair map T_x T_y^{-1} presented by homology data.

    ``cls`` is the common (primitive) class of the two curves; ``side_basis``
    lists symplectic pairs spanning the homology of the subsurface the pair
    cuts off.  The pairing constraints are checked so that the Johnson value
    below is the one attached to this presentation.
    """

    __slots__ = ("cls", "side_basis")

    def __init__(self, cls, side_basis):
        if not isinstance(cls, HomologyClass):
            raise TypeError("cls must be a HomologyClass")
        if cls.is_zero() or not is_primitive(cls):
            raise ValueError("the common class of a bounding pair must be primitive")
        side = tuple((a, b) for a, b in side_basis)
        flat = [v for ab in side for v in ab]
        for v in flat:
            if v.genus != cls.genus:
                raise GenusMismatchError("side basis genus differs from cls")
        for idx, (a, b) in enumerate(side):
            if intersection(a, b) != 1:
                raise ValueError("side pair %d is not a symplectic pair" % idx)
        for i, u in enumerate(flat):
            if intersection(u, cls) != 0:
                raise ValueError("side vector %d pairs nontrivially with cls" % i)
            for j, v in enumerate(flat):
                if j <= i or {i, j} == {2 * (i // 2), 2 * (i // 2) + 1}:
                    continue
                if intersection(u, v) != 0:
                    raise ValueError("side vectors %d and %d are not orthogonal" % (i, j))
        object.__setattr__(self, "cls", cls)
        object.__setattr__(self, "side_basis", side)

    def __setattr__(self, *args):
        raise AttributeError("BoundingPairGen is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BoundingPairGen)
            and self.cls == other.cls
            and self.side_basis == other.side_basis
        )

    def __hash__(self):
        return hash((self.cls, self.side_basis))

    @property
    def genus(self):
        return self.cls.genus


def tau_bounding_pair(gen):
    """Johnson value of the bounding-pair map: (sum_j alpha_j ^ beta_j) ^ cls."""
    total = Wedge3.zero(gen.genus)
    for a, b in gen.side_basis:
        total = total + wedge3(a, b, gen.cls)
    return reduce_to_quotient(total)


class TorelliWord:
    """An ordered product of conjugated powers of bounding-pair maps.

    Factors are (conjugator word, generator, exponent); the represented
    mapping class is Torelli by construction.
    """

    __slots__ = ("genus", "factors")

    def __init__(self, factors, genus=None):
        factors = tuple((w, g, int(e)) for (w, g, e) in factors)
        if genus is None:
            if not factors:
                raise ValueError("an empty Torelli word needs an explicit genus")
            genus = factors[0][1].genus
        for w, g, _ in factors:
            if w.genus != genus or g.genus != genus:
                raise GenusMismatchError("factor genus differs from word genus")
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, *args):
        raise AttributeError("TorelliWord is immutable")

    def __mul__(self, other):
        if other.genus != self.genus:
            raise GenusMismatchError("cannot concatenate Torelli words of different genus")
        return TorelliWord(self.factors + other.factors, self.genus)

    def power(self, n):
        n = int(n)
        if n == 0:
            return TorelliWord((), self.genus)
        if n > 0:
            return TorelliWord(self.factors * n, self.genus)
        inv = tuple((w, g, -e) for (w, g, e) in reversed(self.factors))
        return TorelliWord(inv * (-n), self.genus)

    def conjugated_by(self, word):
        """The Torelli word for (word) self (word)^{-1}."""
        if word.genus != self.genus:
            raise GenusMismatchError("conjugator genus differs")
        return TorelliWord(
            tuple((word * w, g, e) for (w, g, e) in self.factors), self.genus
        )

    def twist_word(self):
        """The literal twist word: each factor contributes w x^e w^{-1}."""
        out = Word((), self.genus)
        for w, g, e in self.factors:
            x = bounding_pair_word(g).power(e)
            out = out * w * x * w.inverse()
        return out

    def __repr__(self):
        return "TorelliWord(%d factors, genus=%d)" % (len(self.factors), self.genus)


def bounding_pair_word(gen):
    """The two-letter word T_x T_y^{-1}; both curves carry the class ``cls``."""
    return Word(
        (TwistLetter(gen.cls, 1), TwistLetter(gen.cls, -1)), gen.genus
    )


def tau_word(tw):
    """tau of a Torelli word, by equivariance and additivity over factors."""
    total = QuotientClass.zero(tw.genus)
    for w, gen, e in tw.factors:
        if e == 0:
            continue
        val = sp_action_quotient(sp_image(w), tau_bounding_pair(gen))
        total = total + e * val
    return total


def commutator_tau(k, tw, n):
    """tau of the commutator [k^{-1}, tw^n] = k^{-1} tw^n k tw^{-n}.

    ``k`` is a plain twist word; the value is
    n * ( (k_*)^{-1} tau(tw) - tau(tw) ), and it is cross-checked against
    tau of the literal commutator built factor by factor.
    """
    if k.genus != tw.genus:
        raise GenusMismatchError("word and Torelli word genus differ")
    n = int(n)
    base = tau_word(tw)
    mk_inv = sp_image(k).inverse()
    value = n * (sp_action_quotient(mk_inv, base) - base)
    literal = tw.power(n).conjugated_by(k.inverse()) * tw.power(-n)
    if tau_word(literal) != value:
        raise AssertionError("commutator tau: formula and literal word disagree")
    return value


# --------------------------------------------------------------------------
# saturation and certificates


_closure_cache = {}


def saturate(seeds, action_gens, max_steps=200000):
    """Smallest subgroup containing the seeds and stable under the generated
    group action (each generator and its inverse), as a Hermite basis.

    The closure commutes with integer scaling, so any common content of the
    seeds is factored out first and restored at the end; this keeps the
    arithmetic on primitive data and lets all scalings of one seed family
    share a single cached closure.  Termination is guaranteed (ascending
    chains of subgroups of a finite-rank free abelian group stabilize); the
    step budget guards against implementation bugs only.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("need at least one seed")
    genus = seeds[0].genus
    for s in seeds:
        if s.genus != genus:
            raise GenusMismatchError("seeds must share a genus")
    dim = _table(genus).dim_quot
    scale = 0
    for s in seeds:
        scale = gcd(scale, _linalg.gcd_all(s.coords))
    if scale == 0:
        return SublatticeBasis(dim, ())
    reduced = [tuple(x // scale for x in s.coords) for s in seeds]

    gen_keys = []
    directed = []
    for m in action_gens:
        if m.genus != genus:
            raise GenusMismatchError("action generator genus differs from seeds")
        if m.is_identity():
            continue
        gen_keys.append(m.rows)
        directed.append(_quotient_action_columns(m))
        directed.append(_quotient_action_columns(m.inverse()))

    cache_key = (genus, tuple(sorted(set(reduced))), tuple(sorted(gen_keys)))
    rows = _closure_cache.get(cache_key)
    if rows is None:
        rows = _closure(dim, reduced, directed, max_steps)
        _closure_cache[cache_key] = rows
    if scale != 1:
        rows = tuple(tuple(scale * x for x in r) for r in rows)
    return SublatticeBasis._from_hnf(dim, rows)


def _closure(dim, seed_vectors, directed_columns, max_steps):
    lat = _linalg.EchelonLattice(dim)
    queue = list(seed_vectors)
    head = 0
    steps = 0
    while head < len(queue):
        vec = queue[head]
        head += 1
        steps += 1
        if steps > max_steps:
            raise SaturationBudgetError(
                "saturation exceeded %d steps; raise max_steps if the input "
                "is legitimately this large" % max_steps
            )
        if not lat.insert(vec):
            continue
        for cols in directed_columns:
            img = list(vec)
            for j, vj in enumerate(vec):
                if vj == 0:
                    continue
                col = cols.get(j)
                if col:
                    for i, a in col:
                        img[i] += a * vj
            queue.append(img)
    return lat.hnf_rows()


def content(basis):
    """Largest d with the lattice inside d times the ambient; 0 if trivial."""
    return basis.content()


class Certificate:
    """A machine-checkable record that two family members differ.

    Everything in it is an exact integer statement about the saturated
    Johnson lattices of the two parameters.  The topological reading (the
    fibrations are inequivalent) additionally cites the standard facts
    recorded in ``cited``; the certificate never claims equivalence of
    anything.
    """

    __slots__ = (
        "family",
        "genus_param",
        "n",
        "m",
        "witness",
        "content_n",
        "content_m",
        "basis_n",
        "basis_m",
    )

    def __init__(self, family, genus_param, n, m, witness, content_n, content_m, basis_n, basis_m):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "genus_param", genus_param)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "content_n", content_n)
        object.__setattr__(self, "content_m", content_m)
        object.__setattr__(self, "basis_n", basis_n)
        object.__setattr__(self, "basis_m", basis_m)

    def __setattr__(self, *args):
        raise AttributeError("Certificate is immutable")

    def as_dict(self):
        return {
            "family": self.family,
            "genus": self.genus_param,
            "n": self.n,
            "m": self.m,
            "witness_class": list(self.witness.coords),
            "witness_primitive": True,
            "content_n": self.content_n,
            "content_m": self.content_m,
            "basis_n": [list(r) for r in self.basis_n.rows],
            "basis_m": [list(r) for r in self.basis_m.rows],
            "computed": (
                "content of the saturated Johnson lattice is %d at parameter %d "
                "and %d at parameter %d; a conjugation of monodromy groups "
                "would carry one lattice onto the other and preserve content"
                % (self.content_n, self.n, self.content_m, self.m)
            ),
            "verdict": "inequivalent (Johnson-lattice contents differ)",
            "certification_level": (
                "exact integer computation at the symplectic/Johnson shadow; "
                "the topological reading cites the facts below"
            ),
            "cited": [
                "monodromy groups of equivalent fibrations are conjugate",
                "the Johnson invariant is equivariant for the symplectic action",
                "Torelli words of the untwisted family evaluate to zero",
            ],
        }


def distinguish(n, m, family):
    """Certificate that parameters n != m of a family are inequivalent.

    ``family`` provides ``seed_classes(n)``, ``action_generators()`` and
    ``witness_class()`` (a primitive class whose n-th multiple is a seed).
    For n == m no certificate exists and None is returned; equality of the
    fibrations is deliberately not claimed.
    """
    n, m = int(n), int(m)
    if n < 0 or m < 0:
        raise ValueError("parameters must be nonnegative")
    if n == m:
        return None
    witness = family.witness_class()
    if not is_primitive_quotient(witness):
        raise AssertionError("family witness class is not primitive")
    gens = family.action_generators()
    basis_n = saturate(family.seed_classes(n), gens)
    basis_m = saturate(family.seed_classes(m), gens)
    d_n, d_m = basis_n.content(), basis_m.content()
    if d_n == d_m:
        raise AssertionError(
            "saturated lattices share content %d; no divisibility certificate" % d_n
        )
    for scale, basis in ((n, basis_n), (m, basis_m)):
        target = tuple(scale * x for x in witness.coords)
        if any(target) and not basis.member(target):
            raise AssertionError("witness multiple missing from the saturated lattice")
    return Certificate(
        family.name, family.genus_param, n, m, witness, d_n, d_m, basis_n, basis_m
    )


def check_certificate(cert_dict, family, deep=True):
    """Replay a certificate from its serialized form, independently.

    Recomputes the seeds, re-verifies every containment against the shipped
    bases, re-derives the contents by gcd, and re-checks the divisibility
    contradiction.  With ``deep=True`` it also re-verifies that each shipped
    lattice is stable under the family action (the costly part).  Returns
    the list of checks performed.
    """
    n, m = int(cert_dict["n"]), int(cert_dict["m"])
    genus = family.surface_genus
    dim = _table(genus).dim_quot
    checks = []

    def record(name, ok):
        checks.append((name, bool(ok)))
        if not ok:
            raise AssertionError("certificate replay failed at: " + name)

    record("parameters differ", n != m)
    witness = QuotientClass(genus, cert_dict["witness_class"])
    record("witness primitive", is_primitive_quotient(witness))
    for param, key_b, key_c in ((n, "basis_n", "content_n"), (m, "basis_m", "content_m")):
        basis = SublatticeBasis(dim, cert_dict[key_b])
        record(
            "basis %d in Hermite form" % param,
            [list(r) for r in basis.rows] == [list(r) for r in cert_dict[key_b]],
        )
        record("content matches at %d" % param, basis.content() == int(cert_dict[key_c]))
        seeds = family.seed_classes(param)
        record(
            "all seeds contained at %d" % param,
            all(basis.member(s.coords) for s in seeds),
        )
        target = tuple(param * x for x in witness.coords)
        record(
            "witness multiple contained at %d" % param,
            (not any(target)) or basis.member(target),
        )
        if deep:
            stable = True
            for g in family.action_generators():
                for direction in (g, g.inverse()):
                    for row in basis.rows:
                        img = sp_action_quotient(direction, QuotientClass(genus, row))
                        if not basis.member(img.coords):
                            stable = False
            record("lattice stable under the action at %d" % param, stable)
    record(
        "contents give the divisibility contradiction",
        int(cert_dict["content_n"]) != int(cert_dict["content_m"]),
    )
    return checks
