"""Exploratory orbit search over elementary transformations, mod m.

Everything here happens at the level of letter classes reduced modulo a
small integer: a decidable, bounded shadow of the real orbit problem.  The
verdict vocabulary is deliberately weak.  "same-orbit" means the two
reduced factorizations are connected by moves *at this reduced level* (a
replayable witness is attached); "distinct-in-budget" and "unknown" claim
nothing beyond the search that was actually run.
"""

from collections import deque

from .homology import GenusMismatchError


class QuotientConfig:
    """Modulus and genus for the reduced search."""

    __slots__ = ("modulus", "genus")

    def __init__(self, modulus, genus):
        modulus = int(modulus)
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "genus", int(genus))

    def __setattr__(self, *args):
        raise AttributeError("QuotientConfig is immutable")


def reduce_factorization(fact, cfg):
    """Reduced letter list: classes as smallest nonnegative residues."""
    if fact.genus != cfg.genus:
        raise GenusMismatchError("factorization genus differs from the config")
    m = cfg.modulus
    letters = []
    for letter in fact.letters:
        coords = tuple(c % m for c in letter.curve.coords)
        letters.append((coords, letter.separating, letter.split))
    return tuple(letters)


def canonical_form(state, cfg):
    """Deterministic, injective serialization of a reduced letter list."""
    return repr((cfg.genus, cfg.modulus, state)).encode("ascii")


def _intersection_mod(u, v, g, m):
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g)) % m


def _twist_mod(c, power, x, g, m):
    k = (power * _intersection_mod(x, c, g, m)) % m
    if k == 0:
        return x
    return tuple((xi + k * ci) % m for xi, ci in zip(x, c))


_matrix_cache = {}
_pair_cache = {}


def _letter_matrix(coords, g, m):
    key = (coords, g, m)
    mat = _matrix_cache.get(key)
    if mat is None:
        n = 2 * g
        cols = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            cols.append(_twist_mod(coords, 1, tuple(e), g, m))
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        _matrix_cache[key] = mat
    return mat


def _pair_product(cu, cv, g, m):
    key = (cu, cv, g, m)
    prod = _pair_cache.get(key)
    if prod is None:
        a = _letter_matrix(cu, g, m)
        b = _letter_matrix(cv, g, m)
        n = 2 * g
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) % m for j in range(n))
            for i in range(n)
        )
        _pair_cache[key] = prod
    return prod


def apply_move(state, move, cfg):
    """One elementary transformation on the reduced state; each application
    asserts the local two-letter product is preserved mod m."""
    pos, direction = move
    g, m = cfg.genus, cfg.modulus
    letters = list(state)
    if not 0 <= pos <= len(letters) - 2:
        raise IndexError("move position out of range")
    (cu, su, pu), (cv, sv, pv) = letters[pos], letters[pos + 1]
    if direction == "left":
        new = ((_twist_mod(cu, 1, cv, g, m), sv, pv), (cu, su, pu))
    elif direction == "right":
        new = ((cv, sv, pv), (_twist_mod(cv, -1, cu, g, m), su, pu))
    else:
        raise ValueError("direction must be 'left' or 'right'")
    if _pair_product(cu, cv, g, m) != _pair_product(new[0][0], new[1][0], g, m):
        raise AssertionError("move broke the local product mod m")
    letters[pos], letters[pos + 1] = new
    return tuple(letters)


def invert_move(move):
    pos, direction = move
    return (pos, "right" if direction == "left" else "left")


def _moves(state):
    for pos in range(len(state) - 1):
        yield (pos, "left")
        yield (pos, "right")


class OrbitCertificate:
    """Outcome of a reduced-orbit question, with a replayable witness when
    the verdict is positive.  No field ever claims anything at the
    mapping-class level."""

    __slots__ = ("verdict", "witness", "explored", "budget", "reason")

    def __init__(self, verdict, witness, explored, budget, reason=""):
        if verdict not in ("same-orbit", "distinct-in-budget", "unknown"):
            raise ValueError("unknown verdict %r" % verdict)
        object.__setattr__(self, "verdict", verdict)
        object.__setattr__(self, "witness", tuple(witness) if witness is not None else None)
        object.__setattr__(self, "explored", int(explored))
        object.__setattr__(self, "budget", int(budget))
        object.__setattr__(self, "reason", reason)

    def __setattr__(self, *args):
        raise AttributeError("OrbitCertificate is immutable")

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "witness": [list(mv) for mv in self.witness] if self.witness is not None else None,
            "explored": self.explored,
            "budget": self.budget,
            "reason": self.reason,
            "certification_level": (
                "reduced mod-m representation level; 'distinct-in-budget' is "
                "not a proof of inequivalence"
            ),
        }


class ExploreReport:
    __slots__ = ("forms", "complete", "explored", "budget")

    def __init__(self, forms, complete, explored, budget):
        object.__setattr__(self, "forms", tuple(sorted(forms)))
        object.__setattr__(self, "complete", bool(complete))
        object.__setattr__(self, "explored", int(explored))
        object.__setattr__(self, "budget", int(budget))

    def __setattr__(self, *args):
        raise AttributeError("ExploreReport is immutable")

    def as_dict(self):
        return {
            "orbit_size": len(self.forms),
            "closure_reached": self.complete,
            "explored": self.explored,
            "budget": self.budget,
            "certification_level": "reduced mod-m representation level",
        }


def orbit_explore(fact, cfg, budget):
    """Breadth-first closure of the reduced orbit, capped at ``budget``
    states.  The report says whether closure was reached."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    start = reduce_factorization(fact, cfg)
    seen = {canonical_form(start, cfg)}
    frontier = deque([start])
    complete = True
    while frontier:
        state = frontier.popleft()
        for move in _moves(state):
            nxt = apply_move(state, move, cfg)
            key = canonical_form(nxt, cfg)
            if key in seen:
                continue
            if len(seen) >= budget:
                complete = False
                continue
            seen.add(key)
            frontier.append(nxt)
    return ExploreReport(seen, complete, len(seen), budget)


def _invariant_mismatch(s1, s2):
    if len(s1) != len(s2):
        return "letter counts differ (a move invariant)"
    sep1 = sorted(l[2] for l in s1 if l[1])
    sep2 = sorted(l[2] for l in s2 if l[1])
    if sep1 != sep2:
        return "separating split multisets differ (a move invariant)"
    return None


def same_orbit(f1, f2, cfg, budget):
    """Bidirectional search for a move path between the reduced states.

    The positive verdict carries a witness that is replayed before being
    returned.  A negative in-budget verdict is only a statement about this
    search, except when a move invariant already separates the inputs.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    s1 = reduce_factorization(f1, cfg)
    s2 = reduce_factorization(f2, cfg)
    reason = _invariant_mismatch(s1, s2)
    if reason is not None:
        return OrbitCertificate("distinct-in-budget", None, 0, budget, reason)
    k1, k2 = canonical_form(s1, cfg), canonical_form(s2, cfg)
    if k1 == k2:
        return OrbitCertificate("same-orbit", (), 0, budget)

    # parent maps: canonical form -> (parent form, move from parent)
    sides = (
        {"seen": {k1: None}, "frontier": deque([(s1, k1)])},
        {"seen": {k2: None}, "frontier": deque([(s2, k2)])},
    )
    explored = 2
    meet = None
    while meet is None and (sides[0]["frontier"] or sides[1]["frontier"]):
        idx = 0 if len(sides[0]["seen"]) <= len(sides[1]["seen"]) and sides[0]["frontier"] else 1
        if not sides[idx]["frontier"]:
            idx = 1 - idx
        side, other = sides[idx], sides[1 - idx]
        state, key = side["frontier"].popleft()
        for move in _moves(state):
            nxt = apply_move(state, move, cfg)
            nkey = canonical_form(nxt, cfg)
            if nkey in side["seen"]:
                continue
            side["seen"][nkey] = (key, move, state)
            explored += 1
            if nkey in other["seen"]:
                meet = (nkey, idx)
                break
            if explored >= budget:
                break
            side["frontier"].append((nxt, nkey))
        if meet is not None or explored >= budget:
            break
    if meet is None:
        return OrbitCertificate("unknown", None, explored, budget,
                                "budget exhausted before the searches met")

    def path_from(side_idx, key):
        moves = []
        entry = sides[side_idx]["seen"][key]
        while entry is not None:
            pkey, move, _ = entry
            moves.append(move)
            entry = sides[side_idx]["seen"][pkey]
        moves.reverse()
        return moves

    mkey, _ = meet
    forward = path_from(0, mkey)           # s1 -> meet
    backward = path_from(1, mkey)          # s2 -> meet
    witness = forward + [invert_move(mv) for mv in reversed(backward)]
    state = s1
    for move in witness:
        state = apply_move(state, move, cfg)
    if canonical_form(state, cfg) != k2:
        raise AssertionError("witness replay did not reach the target state")
    return OrbitCertificate("same-orbit", witness, explored, budget)
