"""Output-simulation checking.

A candidate filter output-simulates a reference filter when (i) every string
the reference survives is also survived by the candidate and (ii) on each such
string the candidate's output colors are a subset of the reference's.  Both
conditions are decided on the tensor product of the two filters: condition (i)
reduces to an NFA language equivalence, condition (ii) to a family of NFA
inclusions, each yielding a shortest witness string on failure.
"""

from .errors import NfaError
from .nfa import INCLUSION_CAP, Nfa, filter_to_nfa, intersect, is_included

LANGUAGE_GAP = "language-gap"
OUTPUT_VIOLATION = "output-violation"


class SimulationVerdict:
    """Result of an output-simulation check.

    holds is the verdict; on failure kind is LANGUAGE_GAP or
    OUTPUT_VIOLATION, witness is a shortest violating string (a tuple of
    observation symbols) and color is the offending output color for
    output violations.
    """

    __slots__ = ("holds", "kind", "witness", "color")

    def __init__(self, holds, kind=None, witness=None, color=None):
        self.holds = holds
        self.kind = kind
        self.witness = witness
        self.color = color

    def __bool__(self):
        return self.holds

    def __repr__(self):
        if self.holds:
            return "SimulationVerdict(holds)"
        detail = f"kind={self.kind}, witness={self.witness!r}"
        if self.color is not None:
            detail += f", color={self.color!r}"
        return f"SimulationVerdict(fails, {detail})"


class ProductGraph:
    """Tensor product of two filters.

    Vertices are pairs (v, w): v runs in the first filter, w in the second,
    with w = None once the second filter has crashed on some prefix while the
    first survives.  Only vertices reachable from the initial pairs are kept.
    """

    def __init__(self, f1, f2):
        self.f1 = f1
        self.f2 = f2
        start = [
            (v, w)
            for v in sorted(f1.initial, key=f1._index.__getitem__)
            for w in sorted(f2.initial, key=f2._index.__getitem__)
        ]
        order = list(start)
        seen = set(start)
        edges = {}

        def push(src, y, dst):
            edges.setdefault(src, {}).setdefault(y, []).append(dst)
            if dst not in seen:
                seen.add(dst)
                order.append(dst)

        qi = 0
        while qi < len(order):
            pair = order[qi]
            qi += 1
            v, w = pair
            for y in f1.observations:
                targets1 = f1.successors(v, y)
                if not targets1:
                    continue
                if w is None:
                    for v2 in targets1:
                        push(pair, y, (v2, None))
                    continue
                targets2 = f2.successors(w, y)
                if targets2:
                    for v2 in targets1:
                        for w2 in targets2:
                            push(pair, y, (v2, w2))
                else:
                    for v2 in targets1:
                        push(pair, y, (v2, None))

        self.initial = tuple(start)
        self.vertices = tuple(order)
        self.edges = {
            src: {y: tuple(dict.fromkeys(dsts)) for y, dsts in by_sym.items()}
            for src, by_sym in edges.items()
        }
        names = {}
        taken = set()
        for pair in order:
            v, w = pair
            base = f"({v},{'⊖' if w is None else w})"
            name = base
            bump = 2
            while name in taken:
                name = f"{base}~{bump}"
                bump += 1
            taken.add(name)
            names[pair] = name
        self._names = names

    def crash_vertices(self):
        return tuple(p for p in self.vertices if p[1] is None)

    def to_nfa(self, accepting, drop_crash=False):
        """View as an NFA.  accepting is a collection of product vertices;
        drop_crash removes every (v, None) vertex first."""
        keep = [p for p in self.vertices if not (drop_crash and p[1] is None)]
        keep_set = set(keep)
        for p in accepting:
            if p not in keep_set:
                raise NfaError(f"accepting vertex {p!r} is not in the product")
        transitions = {}
        for src, by_sym in self.edges.items():
            if src not in keep_set:
                continue
            for y, dsts in by_sym.items():
                live = {self._names[d] for d in dsts if d in keep_set}
                if live:
                    transitions[(self._names[src], y)] = live
        return Nfa(
            [self._names[p] for p in keep],
            [self._names[p] for p in self.initial],
            self.f1.observations,
            transitions,
            [self._names[p] for p in accepting],
        )


def tensor_product(f1, f2):
    """Build the (trimmed) tensor product of two filters."""
    return ProductGraph(f1, f2)


def check_language_inclusion(f, f_prime, cap=INCLUSION_CAP):
    """Decide L(f) ⊆ L(f_prime); on failure return a shortest gap string.

    If the product contains no crash vertex the inclusion holds outright.
    Otherwise let A accept the product's strings that reach a crash vertex
    and B accept all of f_prime's language; the inclusion holds iff
    L(A) = L(A ∩ B).
    """
    product = tensor_product(f, f_prime)
    crash = product.crash_vertices()
    if not crash:
        return True, None
    a = product.to_nfa(crash)
    b = filter_to_nfa(f_prime, f_prime.states)
    both = intersect(a, b)
    ok_back, _ = is_included(both, a, cap)
    assert ok_back, "product intersection grew the language"
    ok, witness = is_included(a, both, cap)
    if ok:
        return True, None
    return False, witness


def check_output_consistency(f, f_prime, cap=INCLUSION_CAP):
    """Check that f_prime never outputs a color f forbids.

    Assumes L(f) ⊆ L(f_prime) was already established.  For every product
    vertex (v, w) whose w-colors are not covered by v's and every missing
    color o, the strings reaching (v, w) must all reach an o-colored state of
    f.  Returns (holds, witness, color); the reported witness is a shortest
    violating string overall, with ties broken by symbol order, vertex order,
    then color order.
    """
    product = tensor_product(f, f_prime)
    live = [p for p in product.vertices if p[1] is not None]
    color_nfas = {}
    failures = []
    for vi, pair in enumerate(live):
        v, w = pair
        missing = f_prime.coloring[w] - f.coloring[v]
        if not missing:
            continue
        for ci, color in enumerate(f_prime.colors):
            if color not in missing:
                continue
            m = product.to_nfa([pair], drop_crash=True)
            if color not in color_nfas:
                carriers = [u for u in f.states if color in f.coloring[u]]
                color_nfas[color] = filter_to_nfa(f, carriers)
            ok, witness = is_included(m, color_nfas[color], cap)
            if not ok:
                failures.append((len(witness), witness, vi, ci, color))
    if failures:
        _, witness, _, _, color = min(failures)
        return False, witness, color
    return True, None, None


def output_simulates(candidate, reference, cap=INCLUSION_CAP):
    """Decide whether candidate output-simulates reference."""
    ref = reference.trim()
    cand = candidate.trim()
    ok, witness = check_language_inclusion(ref, cand, cap)
    if not ok:
        return SimulationVerdict(False, LANGUAGE_GAP, witness)
    ok, witness, color = check_output_consistency(ref, cand, cap)
    if not ok:
        return SimulationVerdict(False, OUTPUT_VIOLATION, witness, color)
    return SimulationVerdict(True)
