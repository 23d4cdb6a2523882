"""Algebraic computation trees over one input, with exact decision semantics.

A tree is a chain of value statements (input, constants, arithmetic on
earlier values) interrupted by zero-test branches and ending in
accept/reject leaves. Values are referenced by their position in the chain
along the current path (single assignment per path). Depth counts compute
and branch nodes only; input/constant statements are free.

Semantics are exact over Q[x] (or Q(x) with division enabled): the generic
path is the branch sequence a generic complex input follows, and the set a
tree accepts is worked out per path by gcd/squarefree arithmetic, never by
numeric root finding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from .polynomials import DensePoly, squarefree_part
from .valuation import Rational, format_rational, parse_rational

OPS = ("add", "sub", "mul", "div")
DEFAULT_OPS = ("add", "sub", "mul")
DEFAULT_CONSTANTS = (0, 1)


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class Leaf:
    accept: bool


@dataclass(frozen=True)
class Input:
    child: "Node"


@dataclass(frozen=True)
class Const:
    value: Fraction
    child: "Node"

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Compute:
    op: str
    lhs: int
    rhs: int
    child: "Node"


@dataclass(frozen=True)
class Branch:
    test: int
    zero: "Node"
    nonzero: "Node"


Node = Union[Leaf, Input, Const, Compute, Branch]


def validate(tree: Node, constants: Optional[Iterable[Rational]] = None) -> None:
    """Check single-assignment references and operator names along every path.

    ``constants`` optionally restricts the constant pool (the enumerator uses
    {0, 1}); None allows any rational constant.
    """
    allowed = None if constants is None else {Fraction(c) for c in constants}

    def walk(node: Node, nvals: int) -> None:
        if isinstance(node, Leaf):
            return
        if isinstance(node, Input):
            walk(node.child, nvals + 1)
        elif isinstance(node, Const):
            if allowed is not None and node.value not in allowed:
                raise TreeError(f"constant {node.value} outside the allowed set")
            walk(node.child, nvals + 1)
        elif isinstance(node, Compute):
            if node.op not in OPS:
                raise TreeError(f"unknown op {node.op!r}")
            if not (0 <= node.lhs < nvals and 0 <= node.rhs < nvals):
                raise TreeError(f"operand reference out of range at value {nvals}")
            walk(node.child, nvals + 1)
        elif isinstance(node, Branch):
            if not 0 <= node.test < nvals:
                raise TreeError("branch test reference out of range")
            walk(node.zero, nvals)
            walk(node.nonzero, nvals)
        else:
            raise TreeError(f"not a tree node: {node!r}")

    walk(tree, 0)


def depth(tree: Node) -> int:
    """Max count of compute + branch nodes on any root-to-leaf path."""
    if isinstance(tree, Leaf):
        return 0
    if isinstance(tree, (Input, Const)):
        return depth(tree.child)
    if isinstance(tree, Compute):
        return 1 + depth(tree.child)
    return 1 + max(depth(tree.zero), depth(tree.nonzero))


def multiplicative_depth(tree: Node) -> int:
    """Max count of mul/div nodes on any root-to-leaf path."""
    if isinstance(tree, Leaf):
        return 0
    if isinstance(tree, (Input, Const)):
        return multiplicative_depth(tree.child)
    if isinstance(tree, Compute):
        return (1 if tree.op in ("mul", "div") else 0) + multiplicative_depth(tree.child)
    return max(multiplicative_depth(tree.zero), multiplicative_depth(tree.nonzero))


# -- rational-function values ------------------------------------------------

@dataclass(frozen=True)
class RatFunc:
    """num/den over Q[x], gcd-reduced, monic denominator."""

    num: DensePoly
    den: DensePoly

    @staticmethod
    def of(num: DensePoly, den: DensePoly = DensePoly.one()) -> "RatFunc":
        if den.is_zero:
            raise TreeError("zero denominator")
        if num.is_zero:
            return RatFunc(DensePoly.zero(), DensePoly.one())
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        return RatFunc(num, den)

    def arith(self, op: str, other: "RatFunc") -> "RatFunc":
        if op == "add":
            return RatFunc.of(self.num * other.den + other.num * self.den,
                              self.den * other.den)
        if op == "sub":
            return RatFunc.of(self.num * other.den - other.num * self.den,
                              self.den * other.den)
        if op == "mul":
            return RatFunc.of(self.num * other.num, self.den * other.den)
        if op == "div":
            if other.num.is_zero:
                raise TreeError("division by an identically-zero value")
            return RatFunc.of(self.num * other.den, self.den * other.num)
        raise TreeError(f"unknown op {op!r}")


_X = RatFunc(DensePoly.x(), DensePoly.one())


# -- generic path -------------------------------------------------------------

@dataclass(frozen=True)
class PathPolynomial:
    """The canonical-path data: test numerators, their nonzero product, depths.

    ``poly`` is 1 when the generic path meets no branch; identically-zero
    tests route the generic input to the zero child and contribute factor 1.
    """

    poly: DensePoly
    tests: Tuple[DensePoly, ...]
    depth_total: int
    depth_mult: int


def trace_generic_path(tree: Node) -> PathPolynomial:
    """Follow the branch a generic input takes; multiply the test numerators met."""
    validate(tree)
    regs: List[RatFunc] = []
    g = DensePoly.one()
    tests: List[DensePoly] = []
    depth_total = depth_mult = 0
    node = tree
    while not isinstance(node, Leaf):
        if isinstance(node, Input):
            regs.append(_X)
            node = node.child
        elif isinstance(node, Const):
            regs.append(RatFunc.of(DensePoly.constant(node.value)))
            node = node.child
        elif isinstance(node, Compute):
            regs.append(regs[node.lhs].arith(node.op, regs[node.rhs]))
            depth_total += 1
            if node.op in ("mul", "div"):
                depth_mult += 1
            node = node.child
        else:  # Branch
            value = regs[node.test]
            depth_total += 1
            tests.append(value.num)
            if value.num.is_zero:
                node = node.zero
            else:
                g = g * value.num
                node = node.nonzero
    return PathPolynomial(g, tuple(tests), depth_total, depth_mult)


# -- exact accept-set semantics ----------------------------------------------

@dataclass(frozen=True)
class PathCondition:
    """One accepting path, reduced: roots of ``equations`` minus roots of ``exclusions``.

    ``cofinite`` paths have no equations and accept everything outside the
    exclusions. Unsatisfiable paths reduce to equations == 1, cofinite False.
    """

    equations: DensePoly
    exclusions: DensePoly
    cofinite: bool


@dataclass(frozen=True)
class AcceptSet:
    """Union of the accepting paths.

    ``accepted_points`` is the monic squarefree polynomial whose roots are
    the points accepted along paths with equations; ``generic`` is set when
    some accepting path accepts a cofinite set.
    """

    paths: Tuple[PathCondition, ...]
    accepted_points: DensePoly
    generic: bool


def _reduce_path(eqs: List[DensePoly], nonzeros: List[DensePoly]) -> PathCondition:
    one = DensePoly.one()
    if any(p.is_zero for p in nonzeros):
        return PathCondition(one, one, False)  # required nonzero, identically zero
    excl = one
    for p in nonzeros:
        if p.degree > 0:
            excl = excl * (squarefree_part(p) // excl.gcd(squarefree_part(p)))
    real_eqs = [e for e in eqs if not e.is_zero]  # 0 = 0 constrains nothing
    if any(e.degree == 0 for e in real_eqs):
        return PathCondition(one, excl, False)  # nonzero constant = 0: empty
    if not real_eqs:
        return PathCondition(one, excl, True)
    g = real_eqs[0]
    for e in real_eqs[1:]:
        g = g.gcd(e)
    if g.degree == 0:
        return PathCondition(one, excl, False)
    w = squarefree_part(g)
    w = (w // w.gcd(excl)).monic()
    if w.degree == 0:
        return PathCondition(one, excl, False)
    return PathCondition(w, excl, False)


def accept_set(tree: Node) -> AcceptSet:
    """Reduce every root-to-accept path to its exact accepted set and union them."""
    validate(tree)
    conditions: List[PathCondition] = []

    def walk(node: Node, regs: List[RatFunc],
             eqs: List[DensePoly], nonzeros: List[DensePoly]) -> None:
        if isinstance(node, Leaf):
            if node.accept:
                conditions.append(_reduce_path(eqs, nonzeros))
            return
        if isinstance(node, Input):
            walk(node.child, regs + [_X], eqs, nonzeros)
        elif isinstance(node, Const):
            walk(node.child, regs + [RatFunc.of(DensePoly.constant(node.value))],
                 eqs, nonzeros)
        elif isinstance(node, Compute):
            lhs, rhs = regs[node.lhs], regs[node.rhs]
            if node.op == "div":
                # inputs where the divisor vanishes drop out of the path domain
                nonzeros = nonzeros + [rhs.num]
            value = lhs.arith(node.op, rhs)
            walk(node.child, regs + [value], eqs, nonzeros)
        else:  # Branch
            num = regs[node.test].num
            walk(node.zero, regs, eqs + [num], nonzeros)
            walk(node.nonzero, regs, eqs, nonzeros + [num])

    walk(tree, [], [], [])
    union = DensePoly.one()
    generic = False
    for cond in conditions:
        if cond.cofinite:
            generic = True
        elif cond.equations.degree > 0:
            union = union * (cond.equations // union.gcd(cond.equations))
    return AcceptSet(tuple(conditions), union.monic(), generic)


def decides(tree: Node, target: DensePoly) -> bool:
    """True iff the tree accepts exactly the complex roots of ``target``.

    Compared through squarefree parts over Q; a tree accepting a cofinite
    set never decides the (finite) root set of a nonzero polynomial.
    """
    if target.is_zero:
        raise TreeError("target must be nonzero")
    result = accept_set(tree)
    if result.generic:
        return False
    return result.accepted_points == squarefree_part(target)


def accepts(tree: Node, x: Rational) -> bool:
    """Run the tree on a rational input; division by zero rejects the input."""
    validate(tree)
    regs: List[Fraction] = []
    node = tree
    xval = Fraction(x)
    while not isinstance(node, Leaf):
        if isinstance(node, Input):
            regs.append(xval)
            node = node.child
        elif isinstance(node, Const):
            regs.append(node.value)
            node = node.child
        elif isinstance(node, Compute):
            a, b = regs[node.lhs], regs[node.rhs]
            if node.op == "add":
                regs.append(a + b)
            elif node.op == "sub":
                regs.append(a - b)
            elif node.op == "mul":
                regs.append(a * b)
            else:
                if b == 0:
                    return False  # outside the path domain
                regs.append(a / b)
            node = node.child
        else:
            node = node.zero if regs[node.test] == 0 else node.nonzero
    return node.accept


# -- text format ---------------------------------------------------------------
#
# One node per line, path-addressed. Straight-line statements are
# "nK = input", "nK = const 3/4", "nK = mul n0 n1". A branch line reads
# "branch n2 ? L:accept R:..." where a leaf child is inlined and "..." means
# the child's statements follow on lines prefixed with the branch path, e.g.
# "R: n3 = add n0 n1" and nested "R.L: accept".

def format_tree(tree: Node) -> str:
    lines: List[str] = []

    def stmt(prefix: str, text: str) -> None:
        lines.append(f"{prefix}{text}")

    def walk(node: Node, nvals: int, addr: str) -> None:
        prefix = f"{addr}: " if addr else ""
        while True:
            if isinstance(node, Leaf):
                stmt(prefix, "accept" if node.accept else "reject")
                return
            if isinstance(node, Input):
                stmt(prefix, f"n{nvals} = input")
                nvals += 1
                node = node.child
            elif isinstance(node, Const):
                stmt(prefix, f"n{nvals} = const {format_rational(node.value)}")
                nvals += 1
                node = node.child
            elif isinstance(node, Compute):
                stmt(prefix, f"n{nvals} = {node.op} n{node.lhs} n{node.rhs}")
                nvals += 1
                node = node.child
            else:
                parts = []
                for tag, child in (("L", node.zero), ("R", node.nonzero)):
                    if isinstance(child, Leaf):
                        parts.append(f"{tag}:{'accept' if child.accept else 'reject'}")
                    else:
                        parts.append(f"{tag}:...")
                stmt(prefix, f"branch n{node.test} ? {parts[0]} {parts[1]}")
                for tag, child in (("L", node.zero), ("R", node.nonzero)):
                    if not isinstance(child, Leaf):
                        walk(child, nvals, f"{addr}.{tag}" if addr else tag)
                return

    walk(tree, 0, "")
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> Node:
    blocks: dict = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        addr, sep, rest = line.partition(": ")
        if sep and not addr.startswith(("n", "branch", "accept", "reject")):
            blocks.setdefault(addr, []).append(rest.strip())
        else:
            blocks.setdefault("", []).append(line)

    def build(addr: str, nvals: int) -> Node:
        stmts = blocks.get(addr)
        if not stmts:
            raise TreeError(f"missing block at path {addr or '<root>'!r}")
        return build_stmts(stmts, 0, addr, nvals)

    def build_stmts(stmts: List[str], k: int, addr: str, nvals: int) -> Node:
        if k >= len(stmts):
            raise TreeError(f"block {addr or '<root>'!r} does not end in a leaf or branch")
        line = stmts[k]
        if line == "accept":
            return Leaf(True)
        if line == "reject":
            return Leaf(False)
        if line.startswith("branch "):
            head, _, tail = line.partition("?")
            test = _parse_ref(head.split()[1], nvals)
            children = {}
            for part in tail.split():
                tag, _, what = part.partition(":")
                if tag not in ("L", "R") or not what:
                    raise TreeError(f"bad branch child {part!r}")
                if what == "accept":
                    children[tag] = Leaf(True)
                elif what == "reject":
                    children[tag] = Leaf(False)
                elif what == "...":
                    children[tag] = build(f"{addr}.{tag}" if addr else tag, nvals)
                else:
                    raise TreeError(f"bad branch child {part!r}")
            if set(children) != {"L", "R"}:
                raise TreeError(f"branch needs both children: {line!r}")
            return Branch(test, children["L"], children["R"])
        # value statement: "nK = ..."
        name, _, rhs = line.partition("=")
        if int(name.strip().lstrip("n")) != nvals:
            raise TreeError(f"expected value n{nvals}, got {line!r}")
        rhs = rhs.strip()
        child = lambda: build_stmts(stmts, k + 1, addr, nvals + 1)  # noqa: E731
        if rhs == "input":
            return Input(child())
        if rhs.startswith("const "):
            return Const(parse_rational(rhs[len("const "):]), child())
        op, *args = rhs.split()
        if op not in OPS or len(args) != 2:
            raise TreeError(f"bad statement {line!r}")
        return Compute(op, _parse_ref(args[0], nvals), _parse_ref(args[1], nvals),
                       child())

    def _parse_ref(token: str, nvals: int) -> int:
        if not token.startswith("n"):
            raise TreeError(f"bad value reference {token!r}")
        ref = int(token[1:])
        if not 0 <= ref < nvals:
            raise TreeError(f"reference {token} ahead of definition")
        return ref

    tree = build("", 0)
    validate(tree)
    return tree
