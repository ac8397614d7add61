"""Line-oriented text formats for cover and clique instances.

Cover instances::

    # optional comments
    p wpvc <n> <m> <budget> <target>
    v <id> <cost>          one line per vertex; omitted vertices cost 1
    e <u> <v> [profit]     profit defaults to 1

Clique instances::

    p mcq <n> <m> <k>
    c <vertex> <color>     color in 1..k, required for every vertex
    e <u> <v>

Vertex ids must be 0..n-1 and are used as-is. Duplicate vertex or edge lines
(in either orientation) are hard errors, as are self-loops. Loading a cover
instance drops edges both of whose endpoints cost more than the budget; such
vertices can never be selected, so those edges are dead weight.
"""

from __future__ import annotations

from .errors import FormatError, InputError
from .graph import make_graph
from .instance import Variant, WpvcInstance, infer_variant, prune_unaffordable, validate
from .reduction import McqInstance, make_mcq


def _tokenized(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int(token: str, lineno: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError("line %d: %s must be an integer, got %r" % (lineno, what, token))
    if value < 0:
        raise FormatError("line %d: %s must be non-negative" % (lineno, what))
    return value


def parse_wpvc(text: str, variant: Variant | None = None, prune: bool = True) -> WpvcInstance:
    """Parse a cover instance; the variant tag is inferred unless overridden.

    ``prune`` controls the load-time removal of edges between two vertices the
    budget cannot afford. Keep it off when the instance is meant for the
    fractional solver: there an expensive vertex can still be taken partially,
    so those edges matter.
    """
    header = None
    costs = {}
    edges = []
    seen_pairs = {}
    for lineno, tokens in _tokenized(text):
        kind = tokens[0]
        if header is None:
            if kind != "p" or len(tokens) != 6 or tokens[1] != "wpvc":
                raise FormatError("line %d: expected header 'p wpvc <n> <m> <budget> <target>'"
                                  % lineno)
            header = tuple(_int(tokens[2 + i], lineno, name)
                           for i, name in enumerate(("n", "m", "budget", "target")))
            continue
        n = header[0]
        if kind == "v":
            if len(tokens) != 3:
                raise FormatError("line %d: expected 'v <id> <cost>'" % lineno)
            vid = _int(tokens[1], lineno, "vertex id")
            if vid >= n:
                raise FormatError("line %d: vertex id %d outside 0..%d" % (lineno, vid, n - 1))
            if vid in costs:
                raise FormatError("line %d: duplicate cost line for vertex %d" % (lineno, vid))
            costs[vid] = _int(tokens[2], lineno, "cost")
        elif kind == "e":
            if len(tokens) not in (3, 4):
                raise FormatError("line %d: expected 'e <u> <v> [profit]'" % lineno)
            u = _int(tokens[1], lineno, "endpoint")
            v = _int(tokens[2], lineno, "endpoint")
            if u >= n or v >= n:
                raise FormatError("line %d: edge endpoint outside 0..%d" % (lineno, n - 1))
            if u == v:
                raise FormatError("line %d: self-loop at vertex %d" % (lineno, u))
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise FormatError("line %d: duplicate edge %s (first seen on line %d)"
                                  % (lineno, pair, seen_pairs[pair]))
            seen_pairs[pair] = lineno
            profit = _int(tokens[3], lineno, "profit") if len(tokens) == 4 else 1
            edges.append((u, v, profit))
        else:
            raise FormatError("line %d: unknown line type %r" % (lineno, kind))
    if header is None:
        raise FormatError("missing 'p wpvc' header")
    n, m, budget, target = header
    if len(edges) != m:
        raise FormatError("header announces %d edges but %d were given" % (m, len(edges)))
    g = make_graph(n, edges, costs=[costs.get(v, 1) for v in range(n)])
    inst = WpvcInstance(g, budget, target,
                        infer_variant(g) if variant is None else Variant(variant),
                        bipartite_required=False)
    problems = validate(inst)
    if problems:
        raise InputError("; ".join(problems))
    return prune_unaffordable(inst) if prune else inst


def write_wpvc(inst: WpvcInstance, comments=()) -> str:
    lines = ["# variant: %s" % inst.variant.value]
    lines += ["# %s" % c for c in comments]
    g = inst.graph
    lines.append("p wpvc %d %d %d %d" % (g.n, g.m, inst.budget, inst.target))
    for v in range(g.n):
        lines.append("v %d %d" % (v, g.costs[v]))
    for u, v, p in g.edges:
        lines.append("e %d %d %d" % (u, v, p))
    return "\n".join(lines) + "\n"


def parse_mcq(text: str) -> McqInstance:
    """Parse a multicolored-clique instance; intra-class edges are normalized away."""
    header = None
    colors = {}
    edges = []
    seen_pairs = {}
    for lineno, tokens in _tokenized(text):
        kind = tokens[0]
        if header is None:
            if kind != "p" or len(tokens) != 5 or tokens[1] != "mcq":
                raise FormatError("line %d: expected header 'p mcq <n> <m> <k>'" % lineno)
            header = tuple(_int(tokens[2 + i], lineno, name)
                           for i, name in enumerate(("n", "m", "k")))
            continue
        n, _, k = header
        if kind == "c":
            if len(tokens) != 3:
                raise FormatError("line %d: expected 'c <vertex> <color>'" % lineno)
            vid = _int(tokens[1], lineno, "vertex id")
            if vid >= n:
                raise FormatError("line %d: vertex id %d outside 0..%d" % (lineno, vid, n - 1))
            if vid in colors:
                raise FormatError("line %d: duplicate color line for vertex %d" % (lineno, vid))
            color = _int(tokens[2], lineno, "color")
            if not 1 <= color <= k:
                raise FormatError("line %d: color %d outside 1..%d" % (lineno, color, k))
            colors[vid] = color
        elif kind == "e":
            if len(tokens) != 3:
                raise FormatError("line %d: expected 'e <u> <v>'" % lineno)
            u = _int(tokens[1], lineno, "endpoint")
            v = _int(tokens[2], lineno, "endpoint")
            if u >= n or v >= n:
                raise FormatError("line %d: edge endpoint outside 0..%d" % (lineno, n - 1))
            if u == v:
                raise FormatError("line %d: self-loop at vertex %d" % (lineno, u))
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise FormatError("line %d: duplicate edge %s (first seen on line %d)"
                                  % (lineno, pair, seen_pairs[pair]))
            seen_pairs[pair] = lineno
            edges.append((u, v))
        else:
            raise FormatError("line %d: unknown line type %r" % (lineno, kind))
    if header is None:
        raise FormatError("missing 'p mcq' header")
    n, m, k = header
    if len(edges) != m:
        raise FormatError("header announces %d edges but %d were given" % (m, len(edges)))
    missing = [v for v in range(n) if v not in colors]
    if missing:
        raise FormatError("vertex %d has no color line" % missing[0])
    try:
        return make_mcq(n, k, [colors[v] for v in range(n)], edges)
    except InputError as exc:
        raise FormatError(str(exc))


def write_mcq(mcq: McqInstance, comments=()) -> str:
    lines = ["# %s" % c for c in comments]
    g = mcq.graph
    lines.append("p mcq %d %d %d" % (g.n, g.m, mcq.k))
    for v in range(g.n):
        lines.append("c %d %d" % (v, mcq.colors[v]))
    for u, v, _ in g.edges:
        lines.append("e %d %d" % (u, v))
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """Return 'wpvc' or 'mcq' from the header of an instance file."""
    for _, tokens in _tokenized(text):
        if tokens[0] == "p" and len(tokens) >= 2 and tokens[1] in ("wpvc", "mcq"):
            return tokens[1]
        break
    raise FormatError("could not find a recognizable 'p wpvc' or 'p mcq' header")
