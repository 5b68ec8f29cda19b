"""Claim registry: planted violations with replayed witnesses, hypothesis gating, and Holds on real instances."""

import json

import jsonschema
import pytest

from critgraph import c5
from critgraph.catalog import catalog_graph
from critgraph.graph import Graph, induced_subgraph, vset

from oracles import chi_brute
from planted import PLANTED, around_c5, s2, s3
from test_c5 import brute_sets

CYCLE = (0, 1, 2, 3, 4)
REPORT_SCHEMA = {
    "type": "object",
    "required": ["graph", "cycle", "reports"],
    "properties": {
        "graph": {"type": "string"},
        "cycle": {"type": "array", "items": {"type": "integer"}, "minItems": 5, "maxItems": 5},
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "witness", "reason"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["Holds", "Violated", "NotApplicable"]},
                    "witness": {"type": "array", "items": {"type": "integer"}},
                    "reason": {"type": "string"},
                },
            },
        },
    },
}


class Sets:
    """S0, S5, S2(i), S3(i), S4(i), L, R, L(i), R(i) recomputed from scratch."""

    def __init__(self, g, cycle=CYCLE):
        ref = brute_sets(g, cycle)
        full = frozenset(range(1, 6))

        def get(*pos):
            return ref.get(frozenset(pos), set())

        self.S0 = get()
        self.S5 = ref.get(full, set())
        self.S2 = {i: get((i - 2) % 5 + 1, i % 5 + 1) for i in range(1, 6)}
        self.S3 = {i: get((i - 2) % 5 + 1, i, i % 5 + 1) for i in range(1, 6)}
        self.S4 = {i: ref.get(full - {i}, set()) for i in range(1, 6)}
        nb = lambda s: {u for v in s for u in range(g.n) if g.has_edge(u, v)} - set(s)  # noqa: E731
        self.L = self.S0 & nb(self.S5)
        self.R = self.S0 - self.L
        self.Ri = {i: self.S2[i] & nb(self.S3[i]) for i in range(1, 6)}
        self.Li = {i: self.S2[i] - self.Ri[i] for i in range(1, 6)}


def chi(g, s):
    return chi_brute(induced_subgraph(g, vset(s))) if s else 0


def comps(g, s):
    s = set(s)
    out = []
    while s:
        stack = [min(s)]
        seen = set(stack)
        while stack:
            v = stack.pop()
            for u in s:
                if u not in seen and g.has_edge(u, v):
                    seen.add(u)
                    stack.append(u)
        out.append(seen)
        s -= seen
    return out


def replay(cid, g, r):
    """Independent confirmation that the witness shows the claim failing."""
    S = Sets(g)
    w = set(r.witness)
    i = r.index
    adj = g.has_edge
    if cid == "S5-independent":
        a, b = r.witness
        return w <= S.S5 and adj(a, b)
    if cid == "coloring-number":
        if i is None:
            return w <= S.S5 | S.S0 and chi(g, w) > 4
        return (w <= S.S3[i] and chi(g, w) > 2) or (w <= S.S2[i] | S.S3[i] and chi(g, w) > 3) or (
            w <= S.S4[i] and chi(g, w) > 2)
    if cid in ("S0-nbhd", "NS0-eq-S5") and len(w) == 2:
        x, y = r.witness
        x, y = (x, y) if y in S.S0 else (y, x)
        return y in S.S0 and x not in S.S5 and adj(x, y)
    if cid == "NS0-eq-S5":
        (x,) = r.witness
        return x in S.S5 and not any(adj(x, y) for y in S.S0)
    if cid in ("S0-color", "S0-4chromatic"):
        return any(c == w for c in comps(g, S.S0)) and chi(g, w) != 4
    if cid == "S0-connected":
        return w <= S.S0 and len(comps(g, w)) >= 2 and all(c <= w or not c & w for c in comps(g, S.S0))
    if cid == "L-S5":
        if len(w) == 2:
            l, a = sorted(w, key=lambda v: v in S.S5)
            return l in S.L and a in S.S5 and not adj(l, a)
        (x,) = r.witness
        return x in S.S0 or x not in S.L
    if cid == "LR-components":
        lc = next(c for c in comps(g, S.L) if c & w)
        rc = next(c for c in comps(g, S.R) if c & w)
        pairs = [(a, b) for a in lc for b in rc]
        return any(adj(a, b) for a, b in pairs) and not all(adj(a, b) for a, b in pairs)
    if cid == "R-le-8":
        return w == S.R and len(w) > 8
    if cid == "L-le-8":
        return S.R and w == S.L and len(w) > 8
    if cid == "S0-le-16":
        return S.R and w == S.S0 and len(w) > 16
    if cid == "S0-le-13":
        return not S.R and w == S.S0 and len(w) > 13
    if cid == "S4i-S5":
        touching = [j for j in range(1, 6) if any(adj(a, b) for a in S.S4[j] for b in S.S5)]
        return len(touching) > 1 and all(v in S.S5 or any(v in S.S4[j] for j in touching) for v in w)
    if cid == "Li-le-8":
        return w == S.Li[i] and len(w) > 8
    if cid == "S5-le-2^16":
        return w == S.S5 and len(w) > min(2 ** len(S.S0), 2**16)
    if cid == "P3-same-nbhd":
        zs = w & S.S3[i]
        path3 = w - zs
        if len(zs) != 1 or not path3 <= S.Ri[i]:
            return False
        (z,) = zs
        ends = [a for a in path3 if sum(adj(a, b) for b in path3) == 1]
        return len(ends) == 2 and not adj(*ends) and adj(z, ends[0]) != adj(z, ends[1])
    if cid in ("P3-fig3", "Ri-P3-free"):
        ends = [a for a in w if sum(adj(a, b) for b in w) == 1]
        is_p3 = len(ends) == 2 and not adj(*ends) and sum(adj(a, b) for a in w for b in w) == 4
        if cid == "Ri-P3-free":
            return w <= S.Ri[i] and is_p3
        (mid,) = w - set(ends)
        u, x = ends
        good = [(s, t) for s in S.Ri[i] - w for t in S.Ri[i] - w
                if adj(s, u) and adj(s, mid) and not adj(s, x) and adj(t, mid) and adj(t, x) and not adj(t, u)
                and not adj(s, t)
                and all(adj(q, s) == adj(q, u) == adj(q, t) == adj(q, x) for q in S.S3[i])
                and not any(adj(q, mid) for q in S.S3[i])]
        return w <= S.Ri[i] and is_p3 and not good
    if cid == "Ri-K1-K2-counts":
        singles = [c for c in comps(g, S.Ri[i]) if len(c) == 1]
        pairs = [c for c in comps(g, S.Ri[i]) if len(c) == 2]
        return (len(singles) > 2 ** len(S.Li[i]) and w == set().union(*singles)) or (
            len(pairs) > 5 and w == set().union(*pairs))
    if cid == "Ri-K3-count":
        tri = [c for c in comps(g, S.Ri[i]) if len(c) == 3 and chi(g, c) == 3]
        return len(tri) > 1 and w <= set().union(*tri)
    if cid == "S3-trivial-bound":
        iso = {v for v in S.S3[i] if not any(adj(v, u) for u in S.S3[i])}
        return w == iso and len(iso) > 2 ** len(S.S2[i] | S.S5)
    if cid == "S4-trivial-bound":
        iso = {v for v in S.S4[i] if not any(adj(v, u) for u in S.S4[i])}
        return w == iso and len(iso) > 2 ** len(S.S5)
    if cid == "S4i-2chromatic":
        if chi(g, S.S4[i]) != 2:
            return False
        bad_s3 = any(w == S.S3[(j - 1) % 5 + 1] for j in (i + 2, i + 3))
        edges_s4 = any(w <= S.S4[j] and chi(g, w) > 1 for j in range(1, 6) if j != i)
        edges_s3 = any(w <= S.S3[(j - 1) % 5 + 1] and chi(g, w) > 1 for j in (i - 1, i, i + 1))
        many = w <= S.S4[i] and sum(chi(g, c) == 2 for c in comps(g, S.S4[i])) > 5
        return bad_s3 or edges_s4 or edges_s3 or many
    if cid == "S3i-2chromatic":
        if chi(g, S.S3[i]) != 2:
            return False
        q = lambda j: (j - 1) % 5 + 1  # noqa: E731
        nonempty = any(w == S.S3[q(j)] for j in (i - 1, i + 1)) or any(w == S.S4[q(j)] for j in (i - 2, i + 2))
        edges = any(w <= S.S4[q(j)] and chi(g, w) > 1 for j in (i - 1, i, i + 1)) or any(
            w <= S.S3[q(j)] and chi(g, w) > 1 for j in (i - 2, i + 2))
        many = w <= S.S3[i] and sum(chi(g, c) == 2 for c in comps(g, S.S3[i])) > 2 ** len(S.S2[i]) + 4
        return nonempty or edges or many
    raise AssertionError(f"no replay for {cid}")


def test_every_claim_has_a_plant():
    assert set(PLANTED) == set(c5.CLAIM_IDS)


@pytest.mark.parametrize("cid", c5.CLAIM_IDS)
def test_planted_violation_is_reported_and_replays(cid):
    g = PLANTED[cid]
    part = c5.partition_around_c5(g, CYCLE)
    r = c5.check_claim(g, part, cid, c5.Assumptions.everything())
    assert r.violated, r
    assert r.witness and set(r.witness) <= set(range(g.n))
    assert replay(cid, g, r), r
    assert r.assumed


@pytest.mark.parametrize("cid", c5.CLAIM_IDS)
def test_planted_instance_fails_a_hypothesis_when_verified(cid):
    g = PLANTED[cid]
    r = c5.check_claim(g, c5.partition_around_c5(g, CYCLE), cid)
    assert r.status == "NotApplicable" and r.reason.startswith("hypothesis")


@pytest.mark.parametrize("cid", c5.CLAIM_IDS)
@pytest.mark.parametrize("name,which", [("F1", "(c)"), ("C5", "(b)"), ("bull-on-C5", "(a)")])
def test_hypothesis_failures_give_not_applicable(cid, name, which):
    if name == "bull-on-C5":
        g = around_c5([s2(1), s2(1)])
        g = Graph.from_edges(g.n + 2, g.edges() + [(5, 7), (7, 8)])
    else:
        g = catalog_graph(name)
    r = c5.check_claim(g, c5.partition_around_c5(g, CYCLE), cid)
    assert r.status == "NotApplicable" and which in r.reason


def test_f1_example():
    f1 = catalog_graph("F1")
    part = c5.partition_around_c5(f1, CYCLE)
    r = c5.check_claim(f1, part, "S5-independent", c5.Assumptions(assume_critical=True))
    assert r.violated and r.witness == (5, 6)
    r = c5.check_claim(f1, part, "S5-independent", c5.Assumptions(assume_critical=True, assume_f_free=False))
    assert r.status == "NotApplicable" and "F1" in r.reason


def test_non_critical_gate_example():
    g = catalog_graph("C5")
    r = c5.check_claim(g, c5.partition_around_c5(g, CYCLE), "S0-le-16")
    assert r.status == "NotApplicable" and "(b)" in r.reason


def test_p3_fig3_completion_holds():
    # u-v-w with s on u, v and t on v, w; every end sees q1 only, v sees q2
    g = around_c5([s3(1), s3(1)] + [s2(1)] * 5,
                  [(2, 3), (3, 4), (5, 2), (5, 3), (6, 3), (6, 4), (0, 2), (0, 4), (0, 5), (0, 6), (1, 3)])
    part = c5.partition_around_c5(g, CYCLE)
    assert c5.check_claim(g, part, "P3-fig3", c5.Assumptions.everything()).holds
    assert c5.check_claim(g, part, "Ri-P3-free", c5.Assumptions.everything()).violated


def test_unknown_claim():
    with pytest.raises(KeyError):
        c5.check_claim(catalog_graph("C5"), c5.partition_around_c5(catalog_graph("C5"), CYCLE), "claim-99")


def test_json_schema():
    g = PLANTED["S4i-S5"]
    part = c5.partition_around_c5(g, CYCLE)
    doc = c5.claim_report_json(g, part, c5.check_claims(g, part, assumptions=c5.Assumptions.everything()))
    jsonschema.validate(json.loads(json.dumps(doc)), REPORT_SCHEMA)
    assert [r["id"] for r in doc["reports"]] == list(c5.CLAIM_IDS)


def test_claims_hold_on_critical_f_free_graphs(critical_slice):
    # every enumerated 5-vertex-critical (P5, bull)-free graph with an induced C5 and no F subgraph
    checked = 0
    for g in critical_slice:
        for cyc in c5.iter_induced_c5(g):
            part = c5.partition_around_c5(g, cyc)
            reports = c5.check_claims(g, part)
            if reports[0].status == "NotApplicable":
                assert "(c)" in reports[0].reason
                continue
            checked += 1
            assert not any(r.violated for r in reports), [r for r in reports if r.violated]
            assert all(r.holds for r in reports if r.id in ("S5-independent", "coloring-number", "S4i-S5"))
    assert checked > 0
