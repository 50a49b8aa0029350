"""Independent reference implementations used only by the tests.

Nothing here shares code with the package's decision procedures.  The
simulation oracle decides output simulation by a direct breadth-first walk
over pairs of reached state sets, and the brute-force minimizer enumerates
whole candidate filters and asks the oracle.  Both are written for
obviousness, not speed.
"""

import itertools
import random
from collections import deque

from filterkit import Filter


def step_set(f, current, symbol):
    """All states reachable from any state in `current` by one symbol."""
    out = set()
    for (src, dst), syms in f.transitions.items():
        if src in current and symbol in syms:
            out.add(dst)
    return frozenset(out)


def colors_of(f, states):
    joined = set()
    for s in states:
        joined |= set(f.coloring[s])
    return frozenset(joined)


def walk(f, string):
    """Reached state set after a string, from the initial states."""
    current = frozenset(f.initial)
    for symbol in string:
        current = step_set(f, current, symbol)
    return current


def simulates_oracle(candidate, reference):
    """Decide output simulation by exploring reached-set pairs.

    Every observation string drives both filters to a pair of state sets;
    two strings landing on the same pair impose the same requirement, so a
    BFS over the finitely many pairs decides the property.  Returns (holds,
    witness) with a shortest failing string when it does not hold.
    """
    alphabet = sorted(set(reference.observations) | set(candidate.observations))
    start = (frozenset(reference.initial), frozenset(candidate.initial))
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (ref_set, cand_set), string = queue.popleft()
        if ref_set:
            if not cand_set:
                return False, string
            if not colors_of(candidate, cand_set) <= colors_of(reference, ref_set):
                return False, string
        for symbol in alphabet:
            nxt = (
                step_set(reference, ref_set, symbol),
                step_set(candidate, cand_set, symbol),
            )
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, string + (symbol,)))
    return True, None


def language_gap_oracle(candidate, reference):
    """Shortest string alive in `reference` but dead in `candidate`, or None."""
    alphabet = sorted(set(reference.observations) | set(candidate.observations))
    start = (frozenset(reference.initial), frozenset(candidate.initial))
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (ref_set, cand_set), string = queue.popleft()
        if ref_set and not cand_set:
            return string
        for symbol in alphabet:
            nxt = (
                step_set(reference, ref_set, symbol),
                step_set(candidate, cand_set, symbol),
            )
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, string + (symbol,)))
    return None


def all_filters(size, observations, colors):
    """Every filter with exactly `size` states, with no symmetry reduction.

    States are named t0..t{size-1}; all nonempty initial sets, all nonempty
    colorings, all transition labelings are produced.  Purely a small-case
    enumeration, so keep size*len(observations) tiny.
    """
    states = [f"t{i}" for i in range(size)]
    color_choices = [
        frozenset(c)
        for k in range(1, len(colors) + 1)
        for c in itertools.combinations(colors, k)
    ]
    symbol_sets = [
        frozenset(s)
        for k in range(len(observations) + 1)
        for s in itertools.combinations(observations, k)
    ]
    arcs = [(a, b) for a in states for b in states]
    for init_size in range(1, size + 1):
        for initial in itertools.combinations(states, init_size):
            for coloring in itertools.product(color_choices, repeat=size):
                for labels in itertools.product(symbol_sets, repeat=len(arcs)):
                    transitions = {
                        arc: set(syms)
                        for arc, syms in zip(arcs, labels)
                        if syms
                    }
                    yield Filter(
                        states,
                        list(initial),
                        observations,
                        transitions,
                        colors,
                        dict(zip(states, coloring)),
                    )


def brute_force_min_size(reference):
    """Smallest filter size that output-simulates `reference`, by exhaustion.

    Tries every candidate of size 1, then 2, and so on below the trimmed
    reference size; the trimmed reference itself always works, so that size
    is the fallback answer.
    """
    trimmed = reference.trim()
    for size in range(1, len(trimmed.states)):
        for candidate in all_filters(size, reference.observations, reference.colors):
            holds, _ = simulates_oracle(candidate, reference)
            if holds:
                return size
    return len(trimmed.states)


def random_filter(rng, max_states=4, max_symbols=3, max_colors=3, edge_bias=0.5):
    """A seeded random filter; may be nondeterministic and non-trim."""
    n = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(n)]
    observations = tuple("abc"[: rng.randint(1, max_symbols)])
    colors = tuple("xyz"[: rng.randint(1, max_colors)])
    transitions = {}
    for src in states:
        for dst in states:
            syms = {y for y in observations if rng.random() < edge_bias / n}
            if syms:
                transitions[(src, dst)] = syms
    coloring = {
        s: {rng.choice(colors)} | {c for c in colors if rng.random() < 0.2}
        for s in states
    }
    k = rng.randint(1, n)
    initial = rng.sample(states, k)
    return Filter(states, initial, observations, transitions, colors, coloring)


def random_string(rng, observations, max_len=6):
    return tuple(rng.choice(observations) for _ in range(rng.randint(0, max_len)))
