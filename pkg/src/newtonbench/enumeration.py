"""Exhaustive enumeration of small computation trees, up to canonicalization.

Trees are enumerated semantically: a state is (set of values computed so
far, the set of inputs that can still reach this node, remaining depth).
Transitions are the distinct NEW values an arithmetic step can produce and
the zero-tests whose outcome the reachable set does not already determine.
Each pruned tree has a semantic equivalent of no greater depth among the
retained ones:

  * a step recomputing a value already available is replaced by references
    to the existing register (one node shorter);
  * operand order on add/mul cannot change the value, so value-level
    transitions subsume commutative reordering and constant folding;
  * a branch whose test is constant on every input reaching it has an
    unreachable child; the tree is replaced by the taken child.

Reachable-input sets stay exactly representable throughout: they are either
the complement of a finite algebraic set (`cofinite` contexts, excluded
roots held as a monic squarefree polynomial) or a finite algebraic set
(`finite` contexts, the points' monic squarefree polynomial). Deciding a
target means accepting exactly the target's roots, which splits cleanly
across branch transitions, so witness search, canonical-tree counting and
the generic-path sweep are all memoized dynamic programs over these states.
Counts are therefore exact even when the number of canonical trees is far
too large to materialize, and every result is independent of how the root
transitions are partitioned across workers.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .polynomials import DensePoly, divides, poly_to_json, squarefree_part
from .trees import (
    Branch,
    Compute,
    Const,
    DEFAULT_CONSTANTS,
    DEFAULT_OPS,
    Input,
    Leaf,
    Node,
    TreeError,
    decides,
    depth as tree_depth,
    format_tree,
)
from .valuation import Rational, format_rational

DEFAULT_MAX_STATES = 5_000_000

_OP_ORDER = ("add", "sub", "mul", "div")
_ONE_T = (1,)

# values are (numerator, denominator) coefficient tuples; denominators stay
# (1,) unless division is enabled
_Value = Tuple[tuple, tuple]


class BudgetExceeded(RuntimeError):
    pass


def _strip(cs: list) -> tuple:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _strip(out)


def _psub(a: tuple, b: tuple) -> tuple:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _strip(out)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _strip(out)


def _vkey(v: _Value):
    num, den = v
    return (len(den), den, len(num), num)


def _to_poly(t: tuple) -> DensePoly:
    return DensePoly(t)


def _from_poly(p: DensePoly) -> tuple:
    return tuple(p.coeffs)


@dataclass(frozen=True)
class PathClass:
    """One distinct canonical generic path: its polynomial and the least depth realizing it."""

    poly: DensePoly
    min_depth: int


class _Enumerator:
    """Shared machinery: transition generation, context algebra, the three DPs."""

    def __init__(self, ops: Sequence[str], constants: Sequence[Rational],
                 max_states: int = DEFAULT_MAX_STATES):
        bad = set(ops) - set(_OP_ORDER)
        if bad:
            raise TreeError(f"unknown ops {sorted(bad)}")
        self.ops = tuple(op for op in _OP_ORDER if op in set(ops))
        self.div_enabled = "div" in self.ops
        consts = sorted({Fraction(c) for c in constants})
        self.constants = tuple(
            c.numerator if c.denominator == 1 else c for c in consts)
        values = [((0, 1), _ONE_T)]  # the input x
        for c in self.constants:
            values.append(((() if c == 0 else (c,)), _ONE_T))
        self.env0: Tuple[_Value, ...] = tuple(sorted(set(values), key=_vkey))
        self.max_states = max_states
        self.states = 0
        self._computes_cache: Dict[tuple, list] = {}
        self._sf_cache: Dict[tuple, DensePoly] = {}
        self._gcd_cache: Dict[tuple, DensePoly] = {}
        self._count_memo: Dict[tuple, int] = {}
        self._witness_memo: Dict[tuple, object] = {}
        self.one = DensePoly.one()
        self.ctx0 = ("cof", self.one)

    # -- bookkeeping -------------------------------------------------------

    def _tick(self) -> None:
        self.states += 1
        if self.states > self.max_states:
            raise BudgetExceeded(f"state budget {self.max_states} exceeded")

    # -- value arithmetic ----------------------------------------------------

    def _arith(self, op: str, a: _Value, b: _Value) -> Optional[_Value]:
        an, ad = a
        bn, bd = b
        if ad == _ONE_T and bd == _ONE_T:
            if op == "add":
                return (_padd(an, bn), _ONE_T)
            if op == "sub":
                return (_psub(an, bn), _ONE_T)
            if op == "mul":
                return (_pmul(an, bn), _ONE_T)
        # rational-function fallback (division or nontrivial denominators)
        from .trees import RatFunc

        ra = RatFunc.of(_to_poly(an), _to_poly(ad))
        rb = RatFunc.of(_to_poly(bn), _to_poly(bd))
        r = ra.arith(op, rb)
        return (_from_poly(r.num), _from_poly(r.den))

    def computes(self, env: Tuple[_Value, ...]) -> list:
        """Distinct new values producible in one step: [(value, op, lhs, rhs)], sorted."""
        cached = self._computes_cache.get(env)
        if cached is not None:
            return cached
        seen = set(env)
        out = {}
        n = len(env)
        for op in self.ops:
            commutative = op in ("add", "mul")
            for i in range(n):
                for j in range(i if commutative else 0, n):
                    a, b = env[i], env[j]
                    if op == "div" and not b[0]:
                        continue  # division by the zero value is malformed
                    v = self._arith(op, a, b)
                    if v in seen or v in out:
                        continue
                    out[v] = (op, a, b)
        result = [(v, op, a, b) for v, (op, a, b) in out.items()]
        result.sort(key=lambda item: _vkey(item[0]))
        self._computes_cache[env] = result
        return result

    # -- context algebra -----------------------------------------------------

    def sf(self, num: tuple) -> DensePoly:
        got = self._sf_cache.get(num)
        if got is None:
            got = squarefree_part(_to_poly(num))
            self._sf_cache[num] = got
        return got

    def gcd(self, a: DensePoly, b: DensePoly) -> DensePoly:
        key = (a.coeffs, b.coeffs) if a.coeffs <= b.coeffs else (b.coeffs, a.coeffs)
        got = self._gcd_cache.get(key)
        if got is None:
            got = a.gcd(b)
            self._gcd_cache[key] = got
        return got

    def split_ctx(self, ctx, s: DensePoly):
        """Split a context along the zero set of s; None when the test is determined."""
        kind, w = ctx
        if kind == "cof":
            z = s if w.degree == 0 else (s // self.gcd(s, w)).monic()
            if z.degree == 0:
                return None  # every root already excluded: test is nonzero
            return ("fin", z), ("cof", w * z)
        c = self.gcd(w, s)
        if c.degree == 0:
            return None  # no reachable input zeroes the test
        if c == w:
            return None  # every reachable input zeroes the test
        return ("fin", c), ("fin", (w // c).monic())

    def exclude(self, ctx, s: DensePoly):
        """Remove the zero set of s from a context (division domain hole); None if emptied."""
        kind, w = ctx
        if kind == "cof":
            z = s if w.degree == 0 else (s // self.gcd(s, w)).monic()
            return ctx if z.degree == 0 else ("cof", w * z)
        c = self.gcd(w, s)
        if c.degree == 0:
            return ctx
        w2 = (w // c).monic()
        return None if w2.degree == 0 else ("fin", w2)

    def branches(self, env: Tuple[_Value, ...], ctx) -> list:
        out = []
        for v in env:
            if len(v[0]) < 2:
                continue  # constant test: one child is unreachable
            split = self.split_ctx(ctx, self.sf(v[0]))
            if split is None:
                continue
            out.append((v, split[0], split[1]))
        return out

    def _insert(self, env: Tuple[_Value, ...], v: _Value) -> Tuple[_Value, ...]:
        return tuple(sorted(env + (v,), key=_vkey))

    def _compute_ctx(self, op: str, rhs: _Value, ctx):
        """Context after a compute step: division punches the divisor's zeros out."""
        if op != "div":
            return ctx
        num = rhs[0]
        if len(num) < 2:
            return ctx  # nonzero constant divisor vanishes nowhere
        return self.exclude(ctx, self.sf(num))

    # -- canonical tree count -------------------------------------------------

    def count(self, env: Tuple[_Value, ...], ctx, budget: int) -> int:
        if budget == 0:
            return 2
        key = (env, ctx[0], ctx[1], budget)
        got = self._count_memo.get(key)
        if got is not None:
            return got
        self._tick()
        total = 2
        for v, op, _a, rhs in self.computes(env):
            ctx2 = self._compute_ctx(op, rhs, ctx)
            if ctx2 is None:
                continue  # no input survives: subtree unreachable
            total += self.count(self._insert(env, v), ctx2, budget - 1)
        for _v, zctx, nctx in self.branches(env, ctx):
            total += self.count(env, zctx, budget - 1) * self.count(env, nctx, budget - 1)
        self._count_memo[key] = total
        return total

    # -- witness search ---------------------------------------------------------

    def witness(self, env: Tuple[_Value, ...], ctx, goal: DensePoly, budget: int):
        """Semantic tree deciding `goal` within `ctx`, or None. Goal is monic squarefree."""
        if ctx[0] == "fin" and ctx[1] == goal:
            return ("leaf", True)
        if goal.degree == 0:
            return ("leaf", False)
        if budget == 0:
            return None
        key = (env, ctx[0], ctx[1], goal, budget)
        if key in self._witness_memo:
            return self._witness_memo[key]
        self._tick()
        found = None
        for v, op, lhs, rhs in self.computes(env):
            ctx2 = self._compute_ctx(op, rhs, ctx)
            if ctx2 is None:
                continue
            if ctx2 is not ctx:
                # inputs lost to the division hole are rejected; if any goal
                # point is among them the subtree cannot decide the goal
                hole = self.sf(rhs[0])
                if self.gcd(goal, hole).degree > 0:
                    continue
            sub = self.witness(self._insert(env, v), ctx2, goal, budget - 1)
            if sub is not None:
                found = ("compute", op, lhs, rhs, sub)
                break
        if found is None:
            for v, zctx, nctx in self.branches(env, ctx):
                zgoal = self.gcd(goal, zctx[1])
                ngoal = (goal // zgoal).monic() if zgoal.degree > 0 else goal
                zsub = self.witness(env, zctx, zgoal, budget - 1)
                if zsub is None:
                    continue
                nsub = self.witness(env, nctx, ngoal, budget - 1)
                if nsub is None:
                    continue
                found = ("branch", v, zsub, nsub)
                break
        self._witness_memo[key] = found
        return found

    # -- generic-path sweep -------------------------------------------------------

    def sweep_paths(self, env: Tuple[_Value, ...], excl: DensePoly, g: tuple,
                    used: int, max_depth: int,
                    results: Dict[tuple, int], visited: set) -> None:
        """Record every distinct (generic-path polynomial, depth) reachable from here."""
        key = (env, excl, g, used)
        if key in visited:
            return
        visited.add(key)
        self._tick()
        prev = results.get(g)
        if prev is None or used < prev:
            results[g] = used
        if used == max_depth:
            return
        for v, op, _lhs, rhs in self.computes(env):
            excl2 = excl
            if op == "div" and len(rhs[0]) >= 2:
                hole = self.sf(rhs[0])
                z = hole if excl.degree == 0 else (hole // self.gcd(hole, excl)).monic()
                if z.degree > 0:
                    excl2 = excl * z
            self.sweep_paths(self._insert(env, v), excl2, g, used + 1,
                             max_depth, results, visited)
        for v in env:
            if len(v[0]) < 2:
                continue
            s = self.sf(v[0])
            z = s if excl.degree == 0 else (s // self.gcd(s, excl)).monic()
            if z.degree == 0:
                continue  # determined nonzero: branch pruned
            self.sweep_paths(env, excl * z, _pmul(g, v[0]), used + 1,
                             max_depth, results, visited)

    # -- semantic witness -> explicit tree ----------------------------------------

    def to_tree(self, sem) -> Node:
        regindex = {}
        regindex[((0, 1), _ONE_T)] = 0
        for k, c in enumerate(self.constants):
            regindex[((() if c == 0 else (c,)), _ONE_T)] = k + 1

        def build(node, nvals: int, index: dict) -> Node:
            kind = node[0]
            if kind == "leaf":
                return Leaf(node[1])
            if kind == "compute":
                _, op, lhs, rhs, child = node
                idx = dict(index)
                idx[self._arith(op, lhs, rhs)] = nvals
                return Compute(op, index[lhs], index[rhs],
                               build(child, nvals + 1, idx))
            _, v, zsub, nsub = node
            return Branch(index[v],
                          build(zsub, nvals, index),
                          build(nsub, nvals, index))

        body = build(sem, len(regindex), regindex)
        for c in reversed(self.constants):
            body = Const(Fraction(c), body)
        return Input(body)


# -- root-item partitioning ------------------------------------------------------


def _root_items(enum: _Enumerator, max_depth: int) -> list:
    """The root-level transitions, in canonical order; the partition unit for workers."""
    if max_depth == 0:
        return []
    items = []
    for v, op, lhs, rhs in enum.computes(enum.env0):
        items.append(("compute", v, op, lhs, rhs))
    for v, zctx, nctx in enum.branches(enum.env0, enum.ctx0):
        items.append(("branch", v, zctx, nctx))
    return items


_WORKER_CFG: dict = {}


def _worker_init(cfg: dict) -> None:
    _WORKER_CFG.update(cfg)


def _run_item(task: Tuple[str, int, int]):
    phase, idx, budget = task
    cfg = _WORKER_CFG
    enum = _Enumerator(cfg["ops"], cfg["constants"], cfg["max_states"])
    max_depth = cfg["max_depth"]
    items = _root_items(enum, max_depth)
    item = items[idx]
    try:
        if phase == "witness":
            goal = DensePoly(cfg["goal"])
            if item[0] == "compute":
                _, v, op, lhs, rhs = item
                ctx2 = enum._compute_ctx(op, rhs, enum.ctx0)
                if ctx2 is None or (ctx2 is not enum.ctx0 and
                                    enum.gcd(goal, enum.sf(rhs[0])).degree > 0):
                    return ("ok", None)
                sub = enum.witness(enum._insert(enum.env0, v), ctx2, goal, budget - 1)
                return ("ok", None if sub is None else ("compute", op, lhs, rhs, sub))
            _, v, zctx, nctx = item
            zgoal = enum.gcd(goal, zctx[1])
            ngoal = (goal // zgoal).monic() if zgoal.degree > 0 else goal
            zsub = enum.witness(enum.env0, zctx, zgoal, budget - 1)
            if zsub is None:
                return ("ok", None)
            nsub = enum.witness(enum.env0, nctx, ngoal, budget - 1)
            if nsub is None:
                return ("ok", None)
            return ("ok", ("branch", v, zsub, nsub))
        if phase == "count":
            if item[0] == "compute":
                _, v, op, lhs, rhs = item
                ctx2 = enum._compute_ctx(op, rhs, enum.ctx0)
                if ctx2 is None:
                    return ("ok", 0)
                return ("ok", enum.count(enum._insert(enum.env0, v), ctx2, max_depth - 1))
            _, v, zctx, nctx = item
            return ("ok", enum.count(enum.env0, zctx, max_depth - 1)
                    * enum.count(enum.env0, nctx, max_depth - 1))
        # phase == "paths"
        results: Dict[tuple, int] = {}
        visited: set = set()
        if item[0] == "compute":
            _, v, op, lhs, rhs = item
            excl = enum.one
            if op == "div" and len(rhs[0]) >= 2:
                excl = enum.sf(rhs[0])
            enum.sweep_paths(enum._insert(enum.env0, v), excl, _ONE_T, 1,
                             max_depth, results, visited)
        else:
            _, v, zctx, nctx = item
            enum.sweep_paths(enum.env0, nctx[1], v[0], 1, max_depth,
                             results, visited)
        return ("ok", results)
    except BudgetExceeded:
        return ("budget", None)


@dataclass(frozen=True)
class RefutationReport:
    """Outcome of an exhaustive search for deciders of a target's zero set."""

    target: DensePoly
    target_squarefree: DensePoly
    max_depth: int
    ops: Tuple[str, ...]
    constants: Tuple[Fraction, ...]
    decided: bool
    witness: Optional[str]
    witness_depth: Optional[int]
    refuted: bool
    canonical_trees: Optional[int]
    generic_path_classes: Optional[int]
    divisibility_failures: Optional[int]
    all_generic_paths_fail_divisibility: Optional[bool]
    inconclusive: bool
    depth_measure: str = "total"

    def to_json(self) -> dict:
        return {
            "target": poly_to_json(self.target),
            "target_squarefree": poly_to_json(self.target_squarefree),
            "max_depth": self.max_depth,
            "ops": list(self.ops),
            "constants": [format_rational(c) for c in self.constants],
            "decided": self.decided,
            "witness": self.witness,
            "witness_depth": self.witness_depth,
            "refuted": self.refuted,
            "canonical_trees": None if self.canonical_trees is None
            else str(self.canonical_trees),
            "generic_path_classes": None if self.generic_path_classes is None
            else str(self.generic_path_classes),
            "divisibility_failures": None if self.divisibility_failures is None
            else str(self.divisibility_failures),
            "all_generic_paths_fail_divisibility":
                self.all_generic_paths_fail_divisibility,
            "inconclusive": self.inconclusive,
            "depth_measure": self.depth_measure,
        }


def generic_path_classes(max_depth: int,
                         ops: Sequence[str] = DEFAULT_OPS,
                         constants: Sequence[Rational] = DEFAULT_CONSTANTS,
                         max_states: int = DEFAULT_MAX_STATES) -> List[PathClass]:
    """Every distinct canonical generic-path polynomial within the depth budget.

    Each canonical tree's generic path appears here (the path's statements
    are themselves a canonical straight-line prefix), so a property checked
    over these classes holds for the generic path of every enumerated tree.
    """
    enum = _Enumerator(ops, constants, max_states)
    results: Dict[tuple, int] = {}
    visited: set = set()
    enum.sweep_paths(enum.env0, enum.one, _ONE_T, 0, max_depth, results, visited)
    classes = [PathClass(_to_poly(g), t) for g, t in results.items()]
    classes.sort(key=lambda pc: (pc.min_depth, len(pc.poly.coeffs), pc.poly.coeffs))
    return classes


def count_canonical_trees(max_depth: int,
                          ops: Sequence[str] = DEFAULT_OPS,
                          constants: Sequence[Rational] = DEFAULT_CONSTANTS,
                          max_states: int = DEFAULT_MAX_STATES) -> int:
    """Number of canonical trees of depth <= max_depth (computed, not materialized)."""
    enum = _Enumerator(ops, constants, max_states)
    return enum.count(enum.env0, enum.ctx0, max_depth)


def enumerate_and_refute(target: DensePoly,
                         max_depth: int,
                         ops: Sequence[str] = DEFAULT_OPS,
                         constants: Sequence[Rational] = DEFAULT_CONSTANTS,
                         workers: int = 1,
                         max_states: int = DEFAULT_MAX_STATES) -> RefutationReport:
    """Search every canonical tree within the depth budget for a decider of target's roots.

    Returns a witness tree when one exists, otherwise the canonical-tree
    count certifying the refutation; in both cases the generic-path
    polynomials of all enumerated trees are checked for divisibility by the
    squarefree part of the target. The outcome is deterministic and
    independent of the worker count.
    """
    if target.is_zero:
        raise TreeError("refutation target must be nonzero")
    if max_depth < 0:
        raise TreeError("max_depth must be >= 0")
    target_sf = squarefree_part(target)
    enum = _Enumerator(ops, constants, max_states)
    items = _root_items(enum, max_depth)
    cfg = {
        "ops": enum.ops,
        "constants": enum.constants,
        "max_depth": max_depth,
        "max_states": max_states,
        "goal": tuple(target_sf.coeffs),
    }

    inconclusive = False

    def run_phase(phase: str, budget: int) -> list:
        tasks = [(phase, i, budget) for i in range(len(items))]
        if not tasks:
            return []
        if workers > 1:
            ctx = multiprocessing.get_context()
            with ctx.Pool(workers, initializer=_worker_init, initargs=(cfg,)) as pool:
                return pool.map(_run_item, tasks)
        _worker_init(cfg)
        return [_run_item(t) for t in tasks]

    # Phase 1: witness search, iterative deepening so shallow deciders are
    # found without exploring the full-depth state space.
    sem_witness = None
    if target_sf.degree == 0:
        sem_witness = ("leaf", False)  # empty root set: always-reject decides it
    witness_complete = True
    if sem_witness is None:
        if workers > 1:
            for budget in range(1, max_depth + 1):
                for status, result in run_phase("witness", budget):
                    if status == "budget":
                        witness_complete = False
                        inconclusive = True
                    elif result is not None and sem_witness is None:
                        sem_witness = result
                if sem_witness is not None or not witness_complete:
                    break
        else:
            _worker_init(cfg)
            try:
                for budget in range(1, max_depth + 1):
                    sem_witness = enum.witness(enum.env0, enum.ctx0, target_sf, budget)
                    if sem_witness is not None:
                        break
            except BudgetExceeded:
                witness_complete = False
                inconclusive = True

    witness_text = witness_depth = None
    witness_tree = None
    if sem_witness is not None:
        builder = enum if workers == 1 else _Enumerator(ops, constants, max_states)
        witness_tree = builder.to_tree(sem_witness)
        if not decides(witness_tree, target):
            raise RuntimeError("enumerator produced a non-deciding witness")
        witness_text = format_tree(witness_tree)
        witness_depth = tree_depth(witness_tree)

    # Phase 2: generic-path divisibility sweep.
    path_results: Optional[Dict[tuple, int]] = {_ONE_T: 0}
    try:
        if workers > 1:
            for status, result in run_phase("paths", max_depth):
                if status == "budget":
                    path_results = None
                    inconclusive = True
                    break
                for g, t in result.items():
                    if path_results.get(g, t + 1) > t:
                        path_results[g] = t
        else:
            results: Dict[tuple, int] = {}
            visited: set = set()
            enum.sweep_paths(enum.env0, enum.one, _ONE_T, 0, max_depth,
                             results, visited)
            path_results = results
    except BudgetExceeded:
        path_results = None
        inconclusive = True

    path_count = failures = all_fail = None
    if path_results is not None:
        path_count = len(path_results)
        failures = sum(1 for g in path_results
                       if not divides(target_sf, _to_poly(g)))
        all_fail = failures == path_count

    # Phase 3: canonical-tree count, only for a refutation certificate.
    canonical = None
    if sem_witness is None and witness_complete:
        try:
            if workers > 1:
                total = 2  # the two root leaves
                for status, result in run_phase("count", max_depth):
                    if status == "budget":
                        raise BudgetExceeded("count phase")
                    total += result
                canonical = total
            else:
                canonical = enum.count(enum.env0, enum.ctx0, max_depth)
        except BudgetExceeded:
            inconclusive = True

    return RefutationReport(
        target=target,
        target_squarefree=target_sf,
        max_depth=max_depth,
        ops=enum.ops,
        constants=tuple(Fraction(c) for c in enum.constants),
        decided=sem_witness is not None,
        witness=witness_text,
        witness_depth=witness_depth,
        refuted=sem_witness is None and witness_complete,
        canonical_trees=canonical,
        generic_path_classes=path_count,
        divisibility_failures=failures,
        all_generic_paths_fail_divisibility=all_fail,
        inconclusive=inconclusive,
    )


def find_decider(target: DensePoly,
                 max_depth: int,
                 ops: Sequence[str] = DEFAULT_OPS,
                 constants: Sequence[Rational] = DEFAULT_CONSTANTS,
                 max_states: int = DEFAULT_MAX_STATES) -> Optional[Node]:
    """Convenience wrapper: the witness tree deciding target's roots, or None."""
    if target.is_zero:
        raise TreeError("target must be nonzero")
    target_sf = squarefree_part(target)
    enum = _Enumerator(ops, constants, max_states)
    if target_sf.degree == 0:
        sem = ("leaf", False)
    else:
        sem = None
        for budget in range(1, max_depth + 1):
            sem = enum.witness(enum.env0, enum.ctx0, target_sf, budget)
            if sem is not None:
                break
    if sem is None:
        return None
    tree = enum.to_tree(sem)
    if not decides(tree, target):
        raise RuntimeError("enumerator produced a non-deciding witness")
    return tree
