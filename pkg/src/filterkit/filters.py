"""Core filter type: a nondeterministic transition system with colored states.

A filter has a finite state set, a nonempty set of initial states, a finite
observation alphabet, edges labeled with sets of observations, and a nonempty
set of colors on every state.  Tracing a string of observations yields the set
of states reachable under it; an empty reached set is a crash, and the string
is outside the filter's interaction language.  The output of a surviving
string is the union of the colors of its reached states.
"""

from collections import deque

from .errors import (
    CapExceeded,
    EmptyColorSet,
    FilterError,
    NoInitialState,
    UnknownState,
    UnknownSymbol,
)

DETERMINIZE_CAP = 2 ** 20


class TraceResult:
    """Outcome of tracing a string: the reached state set (empty = crash)."""

    __slots__ = ("reached",)

    def __init__(self, reached):
        self.reached = frozenset(reached)

    @property
    def crashed(self):
        return not self.reached

    def __eq__(self, other):
        return isinstance(other, TraceResult) and self.reached == other.reached

    def __repr__(self):
        if self.crashed:
            return "TraceResult(crashed)"
        return f"TraceResult({{{', '.join(sorted(self.reached))}}})"


class Filter:
    """Immutable filter value; validates its description on construction.

    transitions maps (source, target) pairs to the set of observations that
    label the edge.  coloring maps every state to its nonempty color set.
    """

    def __init__(self, states, initial, observations, transitions, colors, coloring):
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise FilterError("duplicate state ids")
        state_set = set(self.states)

        self.observations = tuple(observations)
        if not self.observations:
            raise FilterError("observation alphabet is empty")
        if len(set(self.observations)) != len(self.observations):
            raise FilterError("duplicate observation symbols")
        obs_set = set(self.observations)

        self.colors = tuple(colors)
        if len(set(self.colors)) != len(self.colors):
            raise FilterError("duplicate color names")
        color_set = set(self.colors)

        init = [s for s in self.states if s in set(initial)]
        for s in initial:
            if s not in state_set:
                raise UnknownState(f"initial state {s!r} is not declared")
        if not init:
            raise NoInitialState("filter has no initial state")
        self.initial = frozenset(init)

        trans = {}
        for (src, dst), syms in dict(transitions).items():
            if src not in state_set:
                raise UnknownState(f"transition source {src!r} is not declared")
            if dst not in state_set:
                raise UnknownState(f"transition target {dst!r} is not declared")
            symset = frozenset(syms)
            for y in symset:
                if y not in obs_set:
                    raise UnknownSymbol(f"transition symbol {y!r} is not declared")
            if symset:
                trans[(src, dst)] = symset
        self.transitions = trans

        self.coloring = {}
        for s, cs in dict(coloring).items():
            if s not in state_set:
                raise UnknownState(f"colored state {s!r} is not declared")
            self.coloring[s] = frozenset(cs)
        for s in self.states:
            cs = self.coloring.get(s, frozenset())
            if not cs:
                raise EmptyColorSet(s)
            for c in cs:
                if c not in color_set:
                    raise FilterError(f"state {s!r} uses undeclared color {c!r}")

        self._index = {s: i for i, s in enumerate(self.states)}
        self._obs_set = obs_set
        # state -> symbol -> ordered tuple of targets
        step = {s: {} for s in self.states}
        for (src, dst), syms in self.transitions.items():
            for y in syms:
                step[src].setdefault(y, []).append(dst)
        for s, by_sym in step.items():
            for y, targets in by_sym.items():
                by_sym[y] = tuple(sorted(targets, key=self._index.__getitem__))
        self._step = step

        self._deterministic = len(self.initial) == 1 and all(
            len(targets) == 1 for by_sym in step.values() for targets in by_sym.values()
        )

    # -- queries ---------------------------------------------------------

    def size(self):
        return len(self.states)

    def out_symbols(self, state):
        """Observations with at least one outgoing edge from state."""
        return frozenset(self._step[state])

    def successors(self, state, symbol):
        return self._step[state].get(symbol, ())

    def is_deterministic(self):
        """True iff one initial state and no symbol leaves a state twice."""
        return self._deterministic

    def trace(self, string):
        """Trace a sequence of observations; returns a TraceResult."""
        reached = set(self.initial)
        for y in string:
            if y not in self._obs_set:
                raise UnknownSymbol(f"symbol {y!r} is not in the alphabet")
            nxt = set()
            for s in reached:
                nxt.update(self._step[s].get(y, ()))
            reached = nxt
            if not reached:
                break
        return TraceResult(reached)

    def output(self, string):
        """Union of colors over the reached states, or None on crash."""
        result = self.trace(string)
        if result.crashed:
            return None
        out = set()
        for s in result.reached:
            out.update(self.coloring[s])
        return frozenset(out)

    def in_language(self, string):
        return not self.trace(string).crashed

    # -- transformations -------------------------------------------------

    def trim(self):
        """Restrict to states reachable from the initial set."""
        seen = set(self.initial)
        queue = deque(sorted(self.initial, key=self._index.__getitem__))
        while queue:
            s = queue.popleft()
            for targets in self._step[s].values():
                for t in targets:
                    if t not in seen:
                        seen.add(t)
                        queue.append(t)
        if len(seen) == len(self.states):
            return self
        states = tuple(s for s in self.states if s in seen)
        transitions = {
            (src, dst): syms
            for (src, dst), syms in self.transitions.items()
            if src in seen and dst in seen
        }
        coloring = {s: self.coloring[s] for s in states}
        return Filter(states, self.initial, self.observations, transitions,
                      self.colors, coloring)

    def determinize(self, cap=DETERMINIZE_CAP):
        """Subset construction.

        Returns (D, mapping) where D is deterministic, reaches the same
        outputs on every string, and mapping sends each subset-state id to
        the frozenset of original states it stands for.  Raises CapExceeded
        if more than cap subset states appear.
        """
        start = frozenset(self.initial)
        names = {}

        def name_of(subset):
            if subset in names:
                return names[subset]
            base = "{" + ",".join(sorted(subset)) + "}"
            taken = set(names.values())
            name = base
            bump = 2
            while name in taken:
                name = f"{base}~{bump}"
                bump += 1
            names[subset] = name
            return name

        order = [start]
        seen = {start}
        edges = {}  # (subset, symbol) -> subset
        qi = 0
        while qi < len(order):
            subset = order[qi]
            qi += 1
            for y in self.observations:
                nxt = set()
                for s in subset:
                    nxt.update(self._step[s].get(y, ()))
                if not nxt:
                    continue
                nxt = frozenset(nxt)
                edges[(subset, y)] = nxt
                if nxt not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(cap, "determinizing")
                    seen.add(nxt)
                    order.append(nxt)

        states = tuple(name_of(s) for s in order)
        transitions = {}
        for (subset, y), nxt in edges.items():
            key = (names[subset], names[nxt])
            transitions.setdefault(key, set()).add(y)
        coloring = {}
        for subset in order:
            out = set()
            for s in subset:
                out.update(self.coloring[s])
            coloring[names[subset]] = frozenset(out)
        det = Filter(states, [names[start]], self.observations, transitions,
                     self.colors, coloring)
        mapping = {names[s]: s for s in order}
        return det, mapping

    # -- serialization ---------------------------------------------------

    def to_dict(self):
        obs_rank = {y: i for i, y in enumerate(self.observations)}
        color_rank = {c: i for i, c in enumerate(self.colors)}
        return {
            "observations": list(self.observations),
            "colors": list(self.colors),
            "states": [
                {"id": s, "colors": sorted(self.coloring[s], key=color_rank.__getitem__)}
                for s in self.states
            ],
            "initial": [s for s in self.states if s in self.initial],
            "transitions": [
                {
                    "from": src,
                    "to": dst,
                    "symbols": sorted(self.transitions[(src, dst)], key=obs_rank.__getitem__),
                }
                for (src, dst) in sorted(
                    self.transitions,
                    key=lambda e: (self._index[e[0]], self._index[e[1]]),
                )
            ],
        }

    @classmethod
    def from_dict(cls, data):
        """Validate a raw description (parsed mapping) into a Filter."""
        if not isinstance(data, dict):
            raise FilterError("filter description must be a mapping")
        for key in ("observations", "colors", "states", "initial", "transitions"):
            if key not in data:
                raise FilterError(f"missing key {key!r}")
        states = []
        coloring = {}
        for entry in data["states"]:
            if not isinstance(entry, dict) or "id" not in entry:
                raise FilterError("each state needs an 'id'")
            states.append(entry["id"])
            coloring[entry["id"]] = entry.get("colors", [])
        transitions = {}
        for entry in data["transitions"]:
            if not isinstance(entry, dict) or not {"from", "to", "symbols"} <= set(entry):
                raise FilterError("each transition needs 'from', 'to' and 'symbols'")
            key = (entry["from"], entry["to"])
            transitions.setdefault(key, set()).update(entry["symbols"])
        return cls(states, data["initial"], data["observations"], transitions,
                   data["colors"], coloring)

    # -- value semantics --------------------------------------------------

    def _key(self):
        return (self.states, self.initial, self.observations,
                frozenset(self.transitions.items()), self.colors,
                frozenset(self.coloring.items()))

    def __eq__(self, other):
        return isinstance(other, Filter) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        kind = "deterministic" if self._deterministic else "nondeterministic"
        return f"<Filter {len(self.states)} states ({kind}), {len(self.observations)} observations>"
