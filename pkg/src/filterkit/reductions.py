"""Instance generators that embed automata questions into filter minimization.

from_nfa_universality builds a filter whose minimal output-simulating filter
has exactly one state iff the source NFA accepts every string.
from_dfa_union does the same for deterministic minimizers and the union
language of a DFA family.  verify_reduction re-decides the automaton-side
question independently and compares it with the minimization-side answer.
"""

from .errors import NfaError, NoAcceptingState
from .filters import Filter
from .minimize import SearchBudget, YES, decide_size_k
from .nfa import Nfa, complete_dfa, is_universal, union


class ReductionInstance:
    """A generated filter plus enough bookkeeping to audit it."""

    __slots__ = ("kind", "filter", "source", "fresh_symbol", "details")

    def __init__(self, kind, filter, source, fresh_symbol, details):
        self.kind = kind
        self.filter = filter
        self.source = source
        self.fresh_symbol = fresh_symbol
        self.details = details

    def __repr__(self):
        return f"ReductionInstance({self.kind}, {len(self.filter.states)} states)"


def _fresh_symbol(taken):
    if "z" not in taken:
        return "z"
    bump = 2
    while f"z{bump}" in taken:
        bump += 1
    return f"z{bump}"


def _fresh_state(base, taken):
    name = base
    bump = 2
    while name in taken:
        name = f"{base}{bump}"
        bump += 1
    return name


def from_nfa_universality(a):
    """Embed "is L(a) = Σ*?" into 1-state minimizer existence.

    The filter copies a, adds a hub state that survives every Σ-symbol, and
    two fresh states behind a fresh symbol z: a blue probe reached from the
    hub by every string sz, and a green flag reached only when s is accepted
    by a.  A single green state with a full self-loop output-simulates the
    result iff a is universal.
    """
    sigma = tuple(a.alphabet)
    z = _fresh_symbol(set(sigma))
    taken = set(a.states)
    hub = _fresh_state("hub", taken)
    taken.add(hub)
    probe = _fresh_state("probe", taken)
    taken.add(probe)
    flag = _fresh_state("flag", taken)

    states = list(a.states) + [hub, probe, flag]
    transitions = {}
    for (src, y), targets in a.transitions.items():
        for dst in targets:
            transitions.setdefault((src, dst), set()).add(y)
    for y in sigma:
        transitions.setdefault((hub, hub), set()).add(y)
    transitions.setdefault((hub, probe), set()).add(z)
    for acc in a.accepting:
        transitions.setdefault((acc, flag), set()).add(z)

    coloring = {s: {"green"} for s in states}
    coloring[probe] = {"blue"}
    f = Filter(states, list(a.initial) + [hub], sigma + (z,), transitions,
               ("green", "blue"), coloring)
    return ReductionInstance(
        "nfa-universality", f, a, z,
        {"hub": hub, "probe": probe, "flag": flag},
    )


def from_dfa_union(dfas):
    """Embed "is the union of the DFA languages Σ*?" into deterministic
    1-state minimizer existence.

    Every DFA is totalized over the united alphabet and the copies run in
    parallel (so no Σ-string ever crashes); accepting copies are green, the
    rest red.  A fresh symbol z leads from the first reachable accepting
    copy to a fresh green state, which pins the candidate's color to green.
    Raises NoAcceptingState when the union language is empty.
    """
    dfas = list(dfas)
    if not dfas:
        raise NfaError("union reduction needs at least one automaton")
    for d in dfas:
        if not d.is_deterministic():
            raise NfaError("union reduction needs deterministic automata")
    sigma = []
    for d in dfas:
        for y in d.alphabet:
            if y not in sigma:
                sigma.append(y)
    sigma = tuple(sigma)
    combined = union(complete_dfa(d, sigma) for d in dfas)

    reachable = set(combined.initial)
    frontier = list(combined.initial)
    while frontier:
        s = frontier.pop()
        for y in sigma:
            for t in combined.transitions.get((s, y), ()):
                if t not in reachable:
                    reachable.add(t)
                    frontier.append(t)
    rank = {s: i for i, s in enumerate(combined.states)}
    goals = sorted(
        (s for s in combined.accepting if s in reachable), key=rank.__getitem__
    )
    if not goals:
        raise NoAcceptingState("no automaton in the family accepts anything")
    source = goals[0]

    z = _fresh_symbol(set(sigma))
    mark = _fresh_state("mark", set(combined.states))
    states = list(combined.states) + [mark]
    transitions = {}
    for (src, y), targets in combined.transitions.items():
        for dst in targets:
            transitions.setdefault((src, dst), set()).add(y)
    transitions.setdefault((source, mark), set()).add(z)
    coloring = {
        s: {"green"} if s in combined.accepting else {"red"} for s in combined.states
    }
    coloring[mark] = {"green"}
    f = Filter(states, combined.initial, sigma + (z,), transitions,
               ("green", "red"), coloring)
    return ReductionInstance(
        "dfa-union-universality", f, tuple(dfas), z,
        {"mark": mark, "z_source": source},
    )


def verify_reduction(instance, budget=None):
    """Re-decide the source question and compare with the filter answer.

    Returns True when the automaton-side decision (via the language checks)
    agrees with 1-state minimizer existence on the generated filter.
    """
    if budget is None:
        budget = SearchBudget()
    if instance.kind == "nfa-universality":
        automaton_answer = is_universal(instance.source)[0]
    elif instance.kind == "dfa-union-universality":
        sigma = instance.filter.observations[:-1]
        family = union(complete_dfa(d, sigma) for d in instance.source)
        automaton_answer = is_universal(family)[0]
    else:
        raise ValueError(f"unknown reduction kind {instance.kind!r}")
    filter_answer = decide_size_k(instance.filter, 1, budget).outcome == YES
    return automaton_answer == filter_answer
