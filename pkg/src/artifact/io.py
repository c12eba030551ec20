"""Text formats.

Instance:   p map <n> <m>   then one  e <u> <v> <c>  per edge.
Solution:   s <n> <k> <cost> then one  e <u> <v> <c>  per chosen edge.

Nodes are 1-based, `#` starts a comment, parallel edges repeat a line.
Writers emit LF line endings and no trailing whitespace.
"""

from .errors import InvalidInstance, ParseError
from .multigraph import validate


def _records(text, head):
    header, rows = None, []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == head:
            if header is not None:
                raise ParseError("second header line", no)
            if len(tok) != 4 or (head == "p" and tok[1] != "map"):
                raise ParseError(f"bad header {line!r}", no)
            try:
                header = [int(x) for x in tok[2 if head == "p" else 1:]]
            except ValueError:
                raise ParseError(f"non-integer in header {line!r}", no) from None
        elif tok[0] == "e":
            if header is None:
                raise ParseError("edge line before the header", no)
            if len(tok) != 4:
                raise ParseError(f"expected 'e u v c', got {line!r}", no)
            try:
                u, v, c = (int(x) for x in tok[1:])
            except ValueError:
                raise ParseError(f"non-integer field in {line!r}", no) from None
            if c not in (0, 1):
                raise ParseError(f"cost must be 0 or 1, got {c}", no)
            rows.append((u, v, c, no))
        else:
            raise ParseError(f"unknown record {tok[0]!r}", no)
    if header is None:
        raise ParseError(f"missing '{head}' header")
    return header, rows


def parse_instance(text, require_2ec=True):
    (n, m), rows = _records(text, "p")
    if len(rows) != m:
        raise ParseError(f"header promises {m} edges, found {len(rows)}")
    for u, v, _c, no in rows:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"node out of range 1..{n}", no)
        if u == v:
            raise ParseError(f"loop at node {u}", no)
    return validate([(u, v, c) for u, v, c, _ in rows], n, require_2ec=require_2ec)


def read_instance(path, require_2ec=True):
    with open(path) as fh:
        return parse_instance(fh.read(), require_2ec)


def format_instance(g, comment=None):
    out = []
    if comment:
        out += [f"# {c}" for c in comment.splitlines()]
    out.append(f"p map {g.n} {g.m}")
    out += [f"e {e.u} {e.v} {e.cost}" for e in sorted(g.edges, key=lambda e: e.id)]
    return "\n".join(out) + "\n"


def write_instance(g, path, comment=None):
    with open(path, "w", newline="\n") as fh:
        fh.write(format_instance(g, comment))


def format_solution(g, edge_ids):
    es = sorted(g.edge(i) for i in edge_ids)
    lines = [f"s {g.n} {len(es)} {sum(e.cost for e in es)}"]
    lines += [f"e {e.u} {e.v} {e.cost}" for e in es]
    return "\n".join(lines) + "\n"


def parse_solution(text):
    """(n, declared cost, [(u, v, c)]) from solution text."""
    (n, k, cost), rows = _records(text, "s")
    if len(rows) != k:
        raise ParseError(f"header promises {k} edges, found {len(rows)}")
    return n, cost, [(u, v, c) for u, v, c, _ in rows]


def match_solution(g, triples):
    """Edge ids of G for solution triples, matching parallel copies as a
    multiset. Returns (ids, unmatched triples)."""
    pool = {}
    for e in sorted(g.edges, key=lambda e: e.id):
        pool.setdefault((min(e.u, e.v), max(e.u, e.v), e.cost), []).append(e.id)
    ids, missing = [], []
    for u, v, c in triples:
        key = (min(u, v), max(u, v), c)
        if pool.get(key):
            ids.append(pool[key].pop(0))
        else:
            missing.append((u, v, c))
    return ids, missing


def read_solution(path):
    with open(path) as fh:
        return parse_solution(fh.read())


def check_node_count(g, n):
    if n != g.n:
        raise InvalidInstance(f"solution is for {n} nodes, instance has {g.n}")
